//! Re-checks the structural theorems about primes, spectra and hyperabelian
//! lattices on one concrete multiplicative lattice.

use serde::Serialize;

use crate::check::{Falsification, Findings};
use crate::lattice::MultLattice;
use crate::series::{classify, hyperabelian_report};
use crate::spectrum::{check_sober, classify_elements, enough_primes, galois, zariski};

/// Each `Option` is `None` when the theorem's hypothesis fails on the
/// instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub size: usize,
    pub m_distributive: bool,
    pub monotone: bool,
    pub associative: bool,
    pub spec_size: usize,
    /// Every prime is meet-irreducible and semiprime.
    pub primes_irreducible_semiprime: bool,
    /// Prime ⇔ meet-irreducible and semiprime.
    pub prime_iff_irreducible_semiprime: Option<bool>,
    /// The semiprimes are exactly the meets of primes.
    pub semiprimes_are_prime_meets: Option<bool>,
    /// `V(xy) = V(x) ∪ V(y)`, `V(x∨y) = V(x) ∩ V(y)` and the closed-set laws.
    pub v_laws: bool,
    pub sober: bool,
    pub hyperabelian_agree: Option<bool>,
    /// `Spec = L∖{1}` ⇔ chain with every element idempotent.
    pub chain_idempotent_criterion: Option<bool>,
    /// `1·1 = 1` ⇔ maximal elements are prime ⇔ enough primes.
    pub enough_primes_agree: Option<bool>,
    /// Left nilpotent ⇔ right nilpotent ⇔ solvable, for every element.
    pub nilpotency_agrees: Option<bool>,
    pub falsifications: Vec<Falsification>,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty()
    }
}

pub fn audit(m: &MultLattice) -> Audit {
    let laws = m.law_report();
    let m_distributive = laws.m_distributive;
    let mut f = Findings::new();
    let c = classify_elements(m);

    let mut primes_irreducible_semiprime = !c.prime[m.top()];
    for p in c.primes() {
        primes_irreducible_semiprime &= c.meet_irreducible[p] && c.semiprime[p];
    }
    f.require(primes_irreducible_semiprime, "primes are meet-irreducible and semiprime", || {
        format!("primes {:?}", c.primes())
    });

    let prime_iff_irreducible_semiprime = m_distributive.then(|| {
        let ok = m
            .elements()
            .all(|x| c.prime[x] == (x != m.top() && c.meet_irreducible[x] && c.semiprime[x]));
        f.require(ok, "prime ⇔ proper, meet-irreducible and semiprime", String::new);
        ok
    });

    let g = galois(m);
    let semiprimes_are_prime_meets = m_distributive.then_some(g.matches_semiprimes);
    let t = zariski(m);
    let v_laws = t.falsifications.is_empty();
    let sober = check_sober(&t);
    f.require(sober.sober, "Spec is sober", || format!("{:?}", sober.witness));

    let hyperabelian_agree = hyperabelian_report(m).ok().map(|h| {
        f.0.extend(h.falsifications);
        h.agree
    });

    let chain_idempotent_criterion = laws.monotone.then(|| {
        let all_proper_prime = m.elements().all(|x| c.prime[x] == (x != m.top()));
        let chain_idempotent = m.lattice().is_chain() && c.idempotent.iter().all(|&i| i);
        let ok = all_proper_prime == chain_idempotent;
        f.require(ok, "Spec = L∖{1} ⇔ chain of idempotents", || {
            format!("all proper prime: {all_proper_prime}, chain of idempotents: {chain_idempotent}")
        });
        ok
    });

    let enough_primes_agree = m_distributive.then(|| {
        let e = enough_primes(m);
        let ok = e.top_idempotent == e.maximals_prime && e.maximals_prime == e.enough_primes;
        f.require(ok, "1·1 = 1 ⇔ maximals prime ⇔ enough primes", || format!("{e:?}"));
        ok
    });

    let nilpotency_agrees = laws.associative.then(|| {
        let ok = m.elements().all(|x| {
            let k = classify(m, x);
            k.left_nilpotent == k.right_nilpotent && k.right_nilpotent == k.solvable
        });
        f.require(ok, "associative ⇒ left nilpotent ⇔ right nilpotent ⇔ solvable", String::new);
        ok
    });

    f.0.extend(t.falsifications);
    f.0.extend(g.falsifications);
    Audit {
        size: m.size(),
        m_distributive,
        monotone: laws.monotone,
        associative: laws.associative,
        spec_size: t.spec.len(),
        primes_irreducible_semiprime,
        prime_iff_irreducible_semiprime,
        semiprimes_are_prime_meets,
        v_laws,
        sober: sober.sober,
        hyperabelian_agree,
        chain_idempotent_criterion,
        enough_primes_agree,
        nilpotency_agrees,
        falsifications: f.into_vec(),
    }
}
