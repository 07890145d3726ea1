//! Prime elements, the Zariski spectrum and its topology, the `V`/`I`
//! Galois connection, m-systems and spectral maps of morphisms.
//!
//! In a finite lattice every element is compact, so the compact-element
//! reductions (testing primality or semiprimality on compacts only, or
//! m-systems of compacts) range over the whole lattice.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::check::{Falsification, Findings};
use crate::lattice::{Elem, FinLattice, LatticeMorphism, MultLattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("an m-system must be non-empty")]
    EmptySet,
    #[error("element {0} is not in the lattice")]
    NoSuchElement(Elem),
}

/// Per-element flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementClassification {
    pub prime: Vec<bool>,
    pub semiprime: Vec<bool>,
    pub meet_irreducible: Vec<bool>,
    pub idempotent: Vec<bool>,
    pub abelian: Vec<bool>,
}

impl ElementClassification {
    pub fn primes(&self) -> Vec<Elem> {
        flagged(&self.prime)
    }

    pub fn semiprimes(&self) -> Vec<Elem> {
        flagged(&self.semiprime)
    }
}

fn flagged(flags: &[bool]) -> Vec<Elem> {
    flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect()
}

pub fn is_prime(m: &MultLattice, p: Elem) -> bool {
    p != m.top()
        && m.elements().all(|x| {
            m.leq(x, p) || m.elements().all(|y| m.leq(y, p) || !m.leq(m.mul(x, y), p))
        })
}

pub fn is_semiprime(m: &MultLattice, s: Elem) -> bool {
    m.elements().all(|x| !m.leq(m.square(x), s) || m.leq(x, s))
}

pub fn is_meet_irreducible(lat: &FinLattice, x: Elem) -> bool {
    lat.elements()
        .all(|y| lat.elements().all(|z| lat.meet(y, z) != x || y == x || z == x))
}

pub fn classify_elements(m: &MultLattice) -> ElementClassification {
    let all = || m.elements();
    ElementClassification {
        prime: all().map(|p| is_prime(m, p)).collect(),
        semiprime: all().map(|s| is_semiprime(m, s)).collect(),
        meet_irreducible: all().map(|x| is_meet_irreducible(m.lattice(), x)).collect(),
        idempotent: all().map(|x| m.square(x) == x).collect(),
        abelian: all().map(|x| m.square(x) == m.bottom()).collect(),
    }
}

/// Prime elements in index order.
pub fn prime_spectrum(m: &MultLattice) -> Vec<Elem> {
    m.elements().filter(|&p| is_prime(m, p)).collect()
}

/// `Spec(L)` with its closed sets `V(x) = {p : x ≤ p}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZariskiTopology {
    /// Prime elements in index order.
    pub spec: Vec<Elem>,
    /// `v_of[x]`: the primes above `x`, as a set of lattice elements.
    pub v_of: Vec<ElemSet>,
    /// Every closed set, sorted; closed under finite union and intersection.
    pub closed_sets: Vec<ElemSet>,
    pub falsifications: Vec<Falsification>,
}

impl ZariskiTopology {
    pub fn spec_set(&self) -> ElemSet {
        self.spec.iter().copied().collect()
    }

    /// The closure of `{p}`: the least closed set containing `p`.
    pub fn point_closure(&self, p: Elem) -> ElemSet {
        self.closed_sets
            .iter()
            .filter(|c| c.contains(p))
            .fold(self.spec_set(), |acc, c| acc.intersection(c))
    }
}

pub fn zariski(m: &MultLattice) -> ZariskiTopology {
    let spec = prime_spectrum(m);
    let v_of: Vec<ElemSet> = m
        .elements()
        .map(|x| spec.iter().copied().filter(|&p| m.leq(x, p)).collect())
        .collect();

    let mut findings = Findings::new();
    let label = |x: Elem| m.label(x).to_string();
    findings.require(v_of[m.top()].is_empty(), "V(1)=∅", || "V(1) is non-empty".into());
    findings.require(v_of[m.bottom()].len() == spec.len(), "V(0)=Spec", || "V(0) misses a prime".into());
    for x in m.elements() {
        for y in m.elements() {
            findings.require(
                v_of[m.mul(x, y)] == v_of[x].union(&v_of[y]),
                "V(xy)=V(x)∪V(y)",
                || format!("x={}, y={}", label(x), label(y)),
            );
            findings.require(
                v_of[m.join(x, y)] == v_of[x].intersection(&v_of[y]),
                "V(x∨y)=V(x)∩V(y)",
                || format!("x={}, y={}", label(x), label(y)),
            );
        }
    }

    let image: BTreeSet<ElemSet> = v_of.iter().cloned().collect();
    let mut closed = image.clone();
    loop {
        let snapshot: Vec<ElemSet> = closed.iter().cloned().collect();
        let mut grew = false;
        for a in &snapshot {
            for b in &snapshot {
                grew |= closed.insert(a.union(b));
                grew |= closed.insert(a.intersection(b));
            }
        }
        if !grew {
            break;
        }
    }
    closed.insert(ElemSet::new());
    closed.insert(spec.iter().copied().collect());
    findings.require(closed == image, "V(L) is closed under ∪ and ∩", || {
        format!("{} closed sets generated from {} images", closed.len(), image.len())
    });

    ZariskiTopology {
        spec,
        v_of,
        closed_sets: closed.into_iter().collect(),
        falsifications: findings.into_vec(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sobriety {
    pub sober: bool,
    /// An irreducible closed set that is not the closure of exactly one point.
    pub witness: Option<ElemSet>,
}

/// Every irreducible closed set must be the closure of a unique point.
pub fn check_sober(t: &ZariskiTopology) -> Sobriety {
    for c in &t.closed_sets {
        if c.is_empty() {
            continue;
        }
        let proper: Vec<&ElemSet> = t.closed_sets.iter().filter(|d| d.is_subset(c) && *d != c).collect();
        let reducible = proper
            .iter()
            .any(|a| proper.iter().any(|b| &a.union(b) == c));
        if reducible {
            continue;
        }
        let generic = c.iter().filter(|&p| &t.point_closure(p) == c).count();
        if generic != 1 {
            return Sobriety {
                sober: false,
                witness: Some(c.clone()),
            };
        }
    }
    Sobriety {
        sober: true,
        witness: None,
    }
}

/// The Galois connection between elements and sets of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    /// `iv[x] = I(V(x)) = ∧V(x)`.
    pub iv: Vec<Elem>,
    /// Elements with `x = I(V(x))`, i.e. the lattice `Rad(L)`.
    pub iv_fixed: Vec<Elem>,
    /// Whether `iv_fixed` equals the set of semiprime elements.
    pub matches_semiprimes: bool,
    pub rad_distributive: bool,
    pub falsifications: Vec<Falsification>,
}

pub fn galois(m: &MultLattice) -> GaloisReport {
    let topo = zariski(m);
    let lat = m.lattice();
    let iv: Vec<Elem> = m.elements().map(|x| lat.meet_all(topo.v_of[x].iter())).collect();
    let iv_fixed: Vec<Elem> = m.elements().filter(|&x| iv[x] == x).collect();
    let semiprimes: Vec<Elem> = m.elements().filter(|&s| is_semiprime(m, s)).collect();
    let matches_semiprimes = iv_fixed == semiprimes;

    let mut findings = Findings::new();
    for x in m.elements() {
        findings.require(m.leq(x, iv[x]), "x ≤ IV(x)", || m.label(x).to_string());
        findings.require(topo.v_of[iv[x]] == topo.v_of[x], "VIV = V", || m.label(x).to_string());
    }
    if m.is_m_distributive() {
        findings.require(matches_semiprimes, "semiprime ⇔ meet of primes", || {
            format!("IV-fixed {iv_fixed:?} vs semiprime {semiprimes:?}")
        });
        for x in m.elements() {
            findings.require(!(m.lt(x, iv[x]) && is_semiprime(m, x)), "x < IV(x) ⇒ x not semiprime", || {
                m.label(x).to_string()
            });
        }
    }

    let rad = FinLattice::from_order(iv_fixed.len(), vec![], |i, j| m.leq(iv_fixed[i], iv_fixed[j]));
    let rad_distributive = rad.as_ref().is_ok_and(FinLattice::is_distributive);
    findings.require(rad_distributive, "Rad(L) is a distributive lattice", || format!("{rad:?}"));

    GaloisReport {
        iv,
        iv_fixed,
        matches_semiprimes,
        rad_distributive,
        falsifications: findings.into_vec(),
    }
}

/// Nonempty `s` with: for all `x, y ∈ s` some `z ∈ s` has `z ≤ x·y`.
pub fn is_m_system(m: &MultLattice, s: &[Elem]) -> bool {
    !s.is_empty()
        && s.iter().all(|&x| {
            s.iter().all(|&y| {
                let xy = m.mul(x, y);
                s.iter().any(|&z| m.leq(z, xy))
            })
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MSystemReport {
    pub is_m_system: bool,
    /// A maximal element among those lying above no member of the m-system.
    /// Only computed for m-systems in m-distributive lattices.
    pub max_avoiding_prime: Option<Elem>,
    pub falsifications: Vec<Falsification>,
}

/// Elements `y` such that no `c ∈ s` satisfies `c ≤ y`.
pub fn avoiding_elements(m: &MultLattice, s: &[Elem]) -> Vec<Elem> {
    m.elements()
        .filter(|&y| s.iter().all(|&c| !m.leq(c, y)))
        .collect()
}

/// Among several maximal avoiding elements the one with the lowest index is
/// returned.
pub fn m_system_tools(m: &MultLattice, s: &[Elem]) -> Result<MSystemReport, SpectrumError> {
    if s.is_empty() {
        return Err(SpectrumError::EmptySet);
    }
    if let Some(&bad) = s.iter().find(|&&x| x >= m.size()) {
        return Err(SpectrumError::NoSuchElement(bad));
    }
    let is_m = is_m_system(m, s);
    let mut findings = Findings::new();
    let mut max_avoiding_prime = None;
    if is_m && m.is_m_distributive() {
        let avoiding = avoiding_elements(m, s);
        if let Some(&p) = m.lattice().maximal_in(&avoiding).first() {
            findings.require(is_prime(m, p), "maximal m-system avoider is prime", || {
                m.label(p).to_string()
            });
            max_avoiding_prime = Some(p);
        }
    }
    Ok(MSystemReport {
        is_m_system: is_m,
        max_avoiding_prime,
        falsifications: findings.into_vec(),
    })
}

/// `S_p = {c : c ≰ p}`.
pub fn complement_system(m: &MultLattice, p: Elem) -> Vec<Elem> {
    m.elements().filter(|&c| !m.leq(c, p)).collect()
}

/// The induced map `Spec(dst) → Spec(src)`, `q ↦ adj[q]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecMap {
    /// Pairs `(q, adj[q])` for `q` in `Spec(dst)`.
    pub point_map: Vec<(Elem, Elem)>,
    pub continuous: bool,
    pub falsifications: Vec<Falsification>,
}

pub fn spec_map(f: &LatticeMorphism<'_>) -> SpecMap {
    let (src, dst) = (f.src(), f.dst());
    let src_topo = zariski(src);
    let dst_topo = zariski(dst);
    let mut findings = Findings::new();
    let point_map: Vec<(Elem, Elem)> = dst_topo.spec.iter().map(|&q| (q, f.right_adjoint(q))).collect();
    for &(q, p) in &point_map {
        findings.require(is_prime(src, p), "adjoint sends primes to primes", || {
            format!("{} ↦ {}", dst.label(q), src.label(p))
        });
    }
    let mut continuous = true;
    for x in src.elements() {
        let preimage: ElemSet = point_map
            .iter()
            .filter(|(_, p)| src_topo.v_of[x].contains(*p))
            .map(|&(q, _)| q)
            .collect();
        let ok = preimage == dst_topo.v_of[f.apply(x)];
        continuous &= ok;
        findings.require(ok, "Spec(f)⁻¹(V(x)) = V(f(x))", || src.label(x).to_string());
    }
    SpecMap {
        point_map,
        continuous,
        falsifications: findings.into_vec(),
    }
}

/// The three conditions that coincide for m-distributive lattices with a
/// compact top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnoughPrimes {
    pub top_idempotent: bool,
    pub maximals_prime: bool,
    pub enough_primes: bool,
}

pub fn enough_primes(m: &MultLattice) -> EnoughPrimes {
    let proper: Vec<Elem> = m.elements().filter(|&x| x != m.top()).collect();
    let maximals = m.lattice().maximal_in(&proper);
    let spec = prime_spectrum(m);
    EnoughPrimes {
        top_idempotent: m.square(m.top()) == m.top(),
        maximals_prime: maximals.iter().all(|&x| is_prime(m, x)),
        enough_primes: proper.iter().all(|&x| spec.iter().any(|&p| m.leq(x, p))),
    }
}
