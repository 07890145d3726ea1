//! Central and derived series, nilpotency and solvability of elements,
//! annihilators and centers, the upper central series, and the hyperabelian
//! checker.

use serde::Serialize;
use thiserror::Error;

use crate::check::{Falsification, Findings};
use crate::lattice::{Elem, MultLattice};
use crate::spectrum::{is_m_system, is_prime, is_semiprime, prime_spectrum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("multiplication is not m-distributive")]
    NotMDistributive,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("element {0} is not in the lattice")]
    NoSuchElement(Elem),
}

/// Lattices up to this size get an exhaustive m-system scan in
/// [`hyperabelian_report`].
pub const EXHAUSTIVE_M_SYSTEM_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentralLeft,
    LowerCentralRight,
    Derived,
    UpperCentral,
}

/// Terms of a series up to and including its first repeated term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesTrace {
    pub kind: SeriesKind,
    pub terms: Vec<Elem>,
    /// Descending series: the series reached bottom. Upper central series:
    /// the series reached top.
    pub stabilized: bool,
    /// Where the series stops.
    pub reached: Elem,
}

fn descend(m: &MultLattice, kind: SeriesKind, x: Elem, step: impl Fn(Elem) -> Elem) -> SeriesTrace {
    let mut terms = vec![x];
    let mut cur = x;
    loop {
        // each step is below the previous term, so this terminates
        let next = step(cur);
        terms.push(next);
        if next == cur {
            break;
        }
        cur = next;
    }
    SeriesTrace {
        kind,
        terms,
        stabilized: cur == m.bottom(),
        reached: cur,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Series {
    /// `x_1 = x`, `x_{n+1} = x_n · x`
    pub lcs_left: SeriesTrace,
    /// `_1x = x`, `_{n+1}x = x · _nx`
    pub lcs_right: SeriesTrace,
    /// `x^(0) = x`, `x^(n+1) = x^(n) · x^(n)`
    pub derived: SeriesTrace,
}

pub fn series(m: &MultLattice, x: Elem) -> Series {
    Series {
        lcs_left: descend(m, SeriesKind::LowerCentralLeft, x, |t| m.mul(t, x)),
        lcs_right: descend(m, SeriesKind::LowerCentralRight, x, |t| m.mul(x, t)),
        derived: descend(m, SeriesKind::Derived, x, |t| m.mul(t, t)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    pub solvable: bool,
    pub abelian: bool,
    pub idempotent: bool,
    /// `x' = x · x`
    pub derived_element: Elem,
}

pub fn classify(m: &MultLattice, x: Elem) -> ClassificationFlags {
    let s = series(m, x);
    let derived_element = m.square(x);
    ClassificationFlags {
        left_nilpotent: s.lcs_left.stabilized,
        right_nilpotent: s.lcs_right.stabilized,
        solvable: s.derived.stabilized,
        abelian: derived_element == m.bottom(),
        idempotent: derived_element == x,
        derived_element,
    }
}

/// Right/left annihilators and centers. `None` means the join of the
/// annihilating elements does not itself annihilate, which can only happen
/// when multiplication fails to distribute over joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnnihilatorReport {
    pub r_ann: Option<Elem>,
    pub l_ann: Option<Elem>,
    pub r_center: Option<Elem>,
    pub l_center: Option<Elem>,
}

/// `∨{y : x·y = 0}` if that join still annihilates `x` on the right.
pub fn right_annihilator(m: &MultLattice, x: Elem) -> Option<Elem> {
    let cand = m.lattice().join_all(m.elements().filter(|&y| m.mul(x, y) == m.bottom()));
    (m.mul(x, cand) == m.bottom()).then_some(cand)
}

pub fn left_annihilator(m: &MultLattice, x: Elem) -> Option<Elem> {
    let cand = m.lattice().join_all(m.elements().filter(|&y| m.mul(y, x) == m.bottom()));
    (m.mul(cand, x) == m.bottom()).then_some(cand)
}

pub fn annihilators(m: &MultLattice, x: Elem) -> AnnihilatorReport {
    let r_ann = right_annihilator(m, x);
    let l_ann = left_annihilator(m, x);
    AnnihilatorReport {
        r_ann,
        l_ann,
        r_center: r_ann.map(|a| m.meet(x, a)),
        l_center: l_ann.map(|a| m.meet(x, a)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperCentral {
    pub trace: SeriesTrace,
    /// Index of the first term that could not be formed.
    pub undefined_at: Option<usize>,
    /// Largest term; `None` if the series broke off.
    pub hypercenter: Option<Elem>,
    pub hypercentral: bool,
}

/// `z_0 = 0`, `z_{k+1}` = greatest `z` with `z · 1 ≤ z_k`.
pub fn upper_central_series(m: &MultLattice) -> UpperCentral {
    let top = m.top();
    let mut terms = vec![m.bottom()];
    let mut cur = m.bottom();
    let mut undefined_at = None;
    loop {
        let cand = m.lattice().join_all(m.elements().filter(|&z| m.leq(m.mul(z, top), cur)));
        if !m.leq(m.mul(cand, top), cur) {
            undefined_at = Some(terms.len());
            break;
        }
        terms.push(cand);
        if cand == cur {
            break;
        }
        cur = cand;
    }
    let hypercenter = undefined_at.is_none().then_some(cur);
    let hypercentral = hypercenter == Some(top);
    UpperCentral {
        trace: SeriesTrace {
            kind: SeriesKind::UpperCentral,
            terms,
            stabilized: hypercentral,
            reached: cur,
        },
        undefined_at,
        hypercenter,
        hypercentral,
    }
}

/// The six conditions characterising hyperabelian lattices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperabelianReport {
    /// (a) top is the only semiprime element
    pub cond_a: bool,
    /// (b) every `x ≠ 1` has some `y > x` with `y² ≤ x`
    pub cond_b: bool,
    /// (c) an ascending chain from 0 to 1 with `x_{k+1}² ≤ x_k`
    pub cond_c: bool,
    /// (d) no prime elements
    pub cond_d: bool,
    /// (e) the meet of all primes is 1
    pub cond_e: bool,
    /// (f) every m-system contains 0
    pub cond_f: bool,
    pub agree: bool,
    /// Pairs `(x, y)` witnessing (b), lowest-index `y` per `x`.
    pub cond_b_witnesses: Vec<(Elem, Elem)>,
    pub chain_witness: Option<Vec<Elem>>,
    pub spec_size: usize,
    /// False when (f) was inferred from (d) rather than enumerated.
    pub cond_f_exhaustive: bool,
    pub falsifications: Vec<Falsification>,
}

/// Greedy chain for (c): from `x_k` move to the lowest-index maximal `y > x_k`
/// with `y² ≤ x_k`. Returns the chain and whether it reached top.
fn greedy_chain(m: &MultLattice) -> (Vec<Elem>, bool) {
    let mut chain = vec![m.bottom()];
    let mut cur = m.bottom();
    while cur != m.top() {
        let steps: Vec<Elem> = m
            .elements()
            .filter(|&y| m.lt(cur, y) && m.leq(m.square(y), cur))
            .collect();
        match m.lattice().maximal_in(&steps).first() {
            Some(&y) => {
                chain.push(y);
                cur = y;
            }
            None => return (chain, false),
        }
    }
    (chain, true)
}

/// Exhaustive scan for an m-system avoiding 0; sizes up to
/// [`EXHAUSTIVE_M_SYSTEM_LIMIT`].
fn every_m_system_contains_bottom(m: &MultLattice) -> bool {
    let n = m.size();
    debug_assert!(n <= EXHAUSTIVE_M_SYSTEM_LIMIT);
    let down: Vec<u32> = m
        .elements()
        .map(|e| m.elements().filter(|&z| m.leq(z, e)).fold(0u32, |acc, z| acc | 1 << z))
        .collect();
    let bottom_bit = 1u32 << m.bottom();
    (1u32..1 << n).filter(|s| s & bottom_bit == 0).all(|s| {
        let members: Vec<Elem> = (0..n).filter(|&i| s & (1 << i) != 0).collect();
        let is_m = members
            .iter()
            .all(|&x| members.iter().all(|&y| s & down[m.mul(x, y)] != 0));
        !is_m
    })
}

pub fn hyperabelian_report(m: &MultLattice) -> Result<HyperabelianReport, SeriesError> {
    if !m.is_m_distributive() {
        return Err(SeriesError::NotMDistributive);
    }
    let top = m.top();
    let spec = prime_spectrum(m);
    let mut findings = Findings::new();

    let cond_a = m.elements().all(|s| s == top || !is_semiprime(m, s));

    let mut cond_b_witnesses = Vec::new();
    let mut cond_b = true;
    for x in m.elements().filter(|&x| x != top) {
        match m.elements().find(|&y| m.lt(x, y) && m.leq(m.square(y), x)) {
            Some(y) => cond_b_witnesses.push((x, y)),
            None => cond_b = false,
        }
    }

    let (chain, reached) = greedy_chain(m);
    findings.require(!cond_b || reached, "(b) ⇒ greedy chain reaches 1", || {
        format!("dead end after {chain:?}")
    });
    let cond_c = reached;

    let cond_d = spec.is_empty();
    let cond_e = m.lattice().meet_all(spec.iter().copied()) == top;

    let cond_f_exhaustive = m.size() <= EXHAUSTIVE_M_SYSTEM_LIMIT;
    let cond_f = if cond_f_exhaustive {
        every_m_system_contains_bottom(m)
    } else {
        cond_d
    };
    for &p in &spec {
        let sp = crate::spectrum::complement_system(m, p);
        findings.require(is_m_system(m, &sp), "p prime ⇒ S_p is an m-system", || {
            m.label(p).to_string()
        });
    }

    let conds = [cond_a, cond_b, cond_c, cond_d, cond_e, cond_f];
    let agree = conds.iter().all(|&c| c == cond_a);
    findings.require(agree, "conditions (a)-(f) agree", || format!("{conds:?}"));

    Ok(HyperabelianReport {
        cond_a,
        cond_b,
        cond_c,
        cond_d,
        cond_e,
        cond_f,
        agree,
        cond_b_witnesses,
        chain_witness: reached.then_some(chain),
        spec_size: spec.len(),
        cond_f_exhaustive,
        falsifications: findings.into_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnihilatorLemma {
    pub holds: bool,
    /// The common annihilator of `n` inside `[0, h]`.
    pub p: Elem,
    pub falsifications: Vec<Falsification>,
}

/// If 0 is prime in `[0, n]` and `n ≤ h`, the left and right annihilators of
/// `n` inside `[0, h]` coincide and form the unique prime `p` of `[0, h]`
/// with `p ∧ n = 0`.
pub fn annihilator_prime_lemma_check(m: &MultLattice, h: Elem, n: Elem) -> Result<AnnihilatorLemma, SeriesError> {
    for x in [h, n] {
        if x >= m.size() {
            return Err(SeriesError::NoSuchElement(x));
        }
    }
    if !m.leq(n, h) {
        return Err(SeriesError::PreconditionFailed(format!(
            "{} is not below {}",
            m.label(n),
            m.label(h)
        )));
    }
    if !m.is_m_distributive() {
        return Err(SeriesError::PreconditionFailed("multiplication is not m-distributive".into()));
    }
    let lower = m.interval_sublattice(n);
    if !is_prime(&lower, lower.bottom()) {
        return Err(SeriesError::PreconditionFailed(format!(
            "0 is not prime in [0, {}]",
            m.label(n)
        )));
    }

    let members = m.interval_elements(h);
    let interval = m.interval_sublattice(h);
    let local = |x: Elem| members.binary_search(&x).expect("element of the interval");
    let n_local = local(n);
    let ann = annihilators(&interval, n_local);

    let mut findings = Findings::new();
    let (Some(r), Some(l)) = (ann.r_ann, ann.l_ann) else {
        findings.require(false, "annihilators defined", || format!("{ann:?}"));
        return Ok(AnnihilatorLemma {
            holds: false,
            p: m.bottom(),
            falsifications: findings.into_vec(),
        });
    };
    findings.require(r == l, "l.ann = r.ann", || format!("r={r}, l={l}"));
    findings.require(is_prime(&interval, r), "r.ann is prime in [0,h]", || interval.label(r).to_string());
    findings.require(interval.meet(r, n_local) == interval.bottom(), "r.ann ∧ n = 0", || {
        interval.label(r).to_string()
    });
    let others: Vec<Elem> = prime_spectrum(&interval)
        .into_iter()
        .filter(|&p| p != r && interval.meet(p, n_local) == interval.bottom())
        .collect();
    findings.require(others.is_empty(), "unique prime with p ∧ n = 0", || format!("{others:?}"));
    Ok(AnnihilatorLemma {
        holds: findings.is_empty(),
        p: members[r],
        falsifications: findings.into_vec(),
    })
}
