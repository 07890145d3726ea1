//! Finite skew braces `(A, ∘, *)`: validation, the λ-action, the
//! semidirect product, Yang-Baxter solutions, ideals and the multiplicative
//! lattice of ideals.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::check::{Falsification, Findings};
use crate::group::{commutator_unchecked, normal_subgroups, FinGroup, GroupAction, GroupError};
use crate::lattice::{size_labels, BinOpTable, LatticeError, SetLattice};
use crate::rng::{circle_and_radical, FinRng};
use crate::series::right_annihilator;

/// Largest brace order accepted by ideal enumeration by default.
pub const DEFAULT_BRACE_BOUND: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraceError {
    #[error("{op} table: {source}")]
    Group {
        op: &'static str,
        #[source]
        source: GroupError,
    },
    #[error("the two groups have different identities")]
    IdentityMismatch,
    #[error("a∘(b*c) = (a∘b)*a⁻¹*(a∘c) fails at ({0}, {1}, {2})")]
    BraceLaw(usize, usize, usize),
    #[error("rng is not a radical ring")]
    NotARadicalRing,
    #[error("brace order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("set is not an ideal")]
    NotAnIdeal,
    #[error("right annihilator of the top ideal is undefined")]
    UndefinedAnnihilator,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    circ: FinGroup,
    star: FinGroup,
}

impl SkewBrace {
    pub fn new(circ: BinOpTable, star: BinOpTable, labels: Vec<String>) -> Result<Self, BraceError> {
        let circ = FinGroup::from_table(circ, labels.clone()).map_err(|source| BraceError::Group { op: "circ", source })?;
        let star = FinGroup::from_table(star, labels).map_err(|source| BraceError::Group { op: "star", source })?;
        Self::from_groups(circ, star)
    }

    fn from_groups(circ: FinGroup, star: FinGroup) -> Result<Self, BraceError> {
        if circ.order() != star.order() {
            return Err(LatticeError::SizeMismatch {
                left: circ.order(),
                right: star.order(),
            }
            .into());
        }
        if circ.identity() != star.identity() {
            return Err(BraceError::IdentityMismatch);
        }
        let n = circ.order();
        for a in 0..n {
            let ainv = star.inv(a);
            for b in 0..n {
                let ab = circ.op(a, b);
                for c in 0..n {
                    let lhs = circ.op(a, star.op(b, c));
                    let rhs = star.op(star.op(ab, ainv), circ.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::BraceLaw(a, b, c));
                    }
                }
            }
        }
        Ok(Self { circ, star })
    }

    /// Both operations equal the group operation of `g`.
    pub fn trivial(g: &FinGroup) -> Self {
        Self::from_groups(g.clone(), g.clone()).expect("a group is a trivial skew brace")
    }

    /// `(R, ∘, +)` for a radical ring `R`.
    pub fn from_radical_rng(r: &FinRng) -> Result<Self, BraceError> {
        if !circle_and_radical(r).is_radical_ring {
            return Err(BraceError::NotARadicalRing);
        }
        let n = r.order();
        let labels = r.labels().to_vec();
        Self::new(
            BinOpTable::from_fn(n, |x, y| r.circle(x, y)),
            r.add_table().clone(),
            labels,
        )
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn identity(&self) -> usize {
        self.star.identity()
    }

    pub fn circ_group(&self) -> &FinGroup {
        &self.circ
    }

    pub fn star_group(&self) -> &FinGroup {
        &self.star
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.op(a, b)
    }

    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star.op(a, b)
    }

    /// Inverse in `(A, ∘)`.
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    /// Inverse in `(A, *)`.
    pub fn star_inv(&self, a: usize) -> usize {
        self.star.inv(a)
    }

    /// `λ_a(b) = a⁻¹ * (a ∘ b)`
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.star(self.star_inv(a), self.circ(a, b))
    }

    pub fn labels(&self) -> &[String] {
        self.star.labels()
    }

    pub fn label(&self, x: usize) -> &str {
        self.star.label(x)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.star.find_label(label)
    }

    pub fn whole(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    pub fn trivial_ideal(&self) -> ElemSet {
        ElemSet::singleton(self.identity())
    }

    /// Normal in both groups, with `I∘a = I*a` for every `a`.
    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        self.star.is_normal(s)
            && self.circ.is_normal(s)
            && (0..self.order()).all(|a| {
                let by_circ: ElemSet = s.iter().map(|x| self.circ(x, a)).collect();
                let by_star: ElemSet = s.iter().map(|x| self.star(x, a)).collect();
                by_circ == by_star
            })
    }

    /// Whether `a ~ b ⇔ a⁻¹*b ∈ s` is an equivalence compatible with both
    /// operations.
    fn is_congruence_kernel(&self, s: &ElemSet) -> bool {
        if !self.star.is_subgroup(s) {
            return false;
        }
        let n = self.order();
        let class: Vec<usize> = (0..n)
            .map(|a| s.iter().map(|x| self.star(a, x)).min().expect("subgroup is non-empty"))
            .collect();
        let related: Vec<Vec<usize>> = {
            let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (a, &c) in class.iter().enumerate() {
                by_class.entry(c).or_default().push(a);
            }
            by_class.into_values().collect()
        };
        related.iter().all(|cls| {
            let (a, rest) = (cls[0], &cls[1..]);
            rest.iter().all(|&b| {
                (0..n).all(|c| {
                    class[self.star(a, c)] == class[self.star(b, c)]
                        && class[self.star(c, a)] == class[self.star(c, b)]
                        && class[self.circ(a, c)] == class[self.circ(b, c)]
                        && class[self.circ(c, a)] == class[self.circ(c, b)]
                })
            })
        })
    }
}

fn check_bound(a: &SkewBrace, bound: usize) -> Result<(), BraceError> {
    if a.order() > bound {
        Err(BraceError::OrderBound {
            order: a.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaReport {
    /// `(A, *)` acted on by the permutations `λ_a`, listed in element order.
    pub action: GroupAction,
    pub falsifications: Vec<Falsification>,
}

/// The maps `λ_a`, checked to be automorphisms of `(A, *)` with
/// `λ_{a∘b} = λ_a λ_b`.
pub fn lambda_action(a: &SkewBrace) -> LambdaReport {
    let n = a.order();
    let perms: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| a.lambda(x, y)).collect()).collect();
    let mut f = Findings::default();
    for (x, p) in perms.iter().enumerate() {
        let auto = p.iter().copied().collect::<ElemSet>().len() == n
            && (0..n).all(|b| (0..n).all(|c| p[a.star(b, c)] == a.star(p[b], p[c])));
        f.require(auto, "λ_a is an automorphism of (A,*)", || format!("a = {}", a.label(x)));
    }
    for x in 0..n {
        for y in 0..n {
            let xy = a.circ(x, y);
            let hom = (0..n).all(|b| perms[xy][b] == perms[x][perms[y][b]]);
            f.require(hom, "λ_{a∘b} = λ_a λ_b", || {
                format!("a = {}, b = {}", a.label(x), a.label(y))
            });
        }
    }
    LambdaReport {
        action: GroupAction {
            group: a.star.clone(),
            gens: perms,
        },
        falsifications: f.into_vec(),
    }
}

/// `(A, *) ⋊ (A, ∘)` on `A × A`, with `(a1, a2)` at index `a1·n + a2` and
/// `(a1, a2)(b1, b2) = (a1 * a2⁻¹ * (a2 ∘ b1), a2 ∘ b2)`.
pub fn semidirect_product(a: &SkewBrace) -> FinGroup {
    let n = a.order();
    let tab = BinOpTable::from_fn(n * n, |x, y| {
        let (a1, a2, b1, b2) = (x / n, x % n, y / n, y % n);
        a.star(a.star(a1, a.star_inv(a2)), a.circ(a2, b1)) * n + a.circ(a2, b2)
    });
    let labels = (0..n * n)
        .map(|x| format!("({},{})", a.label(x / n), a.label(x % n)))
        .collect();
    FinGroup::from_table(tab, labels).expect("semidirect product of a skew brace is a group")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YbeReport {
    /// `r[x·n + y] = r(x, y)`.
    pub r: Vec<(usize, usize)>,
    pub bijective: bool,
    pub braid_holds: bool,
    pub involutive: bool,
    pub falsifications: Vec<Falsification>,
}

/// `r(x, y) = (u, u' ∘ x ∘ y)` with `u = λ_x(y)`, checked exhaustively.
pub fn ybe_solution(a: &SkewBrace) -> YbeReport {
    let n = a.order();
    let r: Vec<(usize, usize)> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let u = a.lambda(x, y);
            (u, a.circ(a.circ(a.circ_inv(u), x), y))
        })
        .collect();
    let at = |x: usize, y: usize| r[x * n + y];
    let bijective = r.iter().map(|&(u, v)| u * n + v).collect::<ElemSet>().len() == n * n;
    let involutive = (0..n * n).all(|i| {
        let (u, v) = r[i];
        at(u, v) == (i / n, i % n)
    });
    let mut braid_holds = true;
    let mut witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // (r×id)(id×r)(r×id), applied right to left
                let (a1, b1) = at(x, y);
                let (b2, c2) = at(b1, z);
                let (a3, b3) = at(a1, b2);
                let left = (a3, b3, c2);
                // (id×r)(r×id)(id×r)
                let (q1, r1) = at(y, z);
                let (p2, q2) = at(x, q1);
                let (q3, r3) = at(q2, r1);
                let right = (p2, q3, r3);
                if left != right {
                    braid_holds = false;
                    witness = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    let mut f = Findings::default();
    f.require(bijective, "r is a bijection", String::new);
    f.require(braid_holds, "r satisfies the braid relation", || {
        let (x, y, z) = witness.unwrap_or_default();
        format!("({}, {}, {})", a.label(x), a.label(y), a.label(z))
    });
    YbeReport {
        r,
        bijective,
        braid_holds,
        involutive,
        falsifications: f.into_vec(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraceIdeals {
    pub ideals: Vec<ElemSet>,
    pub falsifications: Vec<Falsification>,
}

/// Every ideal, sorted by bitmask. The result is cross-checked against the
/// kernels of congruences compatible with both operations.
pub fn brace_ideals(a: &SkewBrace, bound: usize) -> Result<BraceIdeals, BraceError> {
    check_bound(a, bound)?;
    let star_normal = normal_subgroups(a.star_group(), bound).map_err(|source| BraceError::Group { op: "star", source })?;
    let ideals: Vec<ElemSet> = star_normal.iter().filter(|s| a.is_ideal(s)).cloned().collect();
    // every congruence of (A,*) has a star-normal kernel, so this lists
    // every congruence compatible with both operations
    let kernels: Vec<ElemSet> = star_normal.iter().filter(|s| a.is_congruence_kernel(s)).cloned().collect();
    let mut f = Findings::default();
    f.require(kernels == ideals, "ideals correspond to congruences", || {
        format!("ideals {ideals:?}, congruence kernels {kernels:?}")
    });
    Ok(BraceIdeals {
        ideals,
        falsifications: f.into_vec(),
    })
}

/// The ideal generated by `x`: `X_{k+1}` is the normal closure of `X_k` in
/// `(A, *)` when `k ≡ 0`, in `(A, ∘)` when `k ≡ 1`, and `⋃_a λ_a(X_k)` when
/// `k ≡ 2 (mod 3)`; stops after a full round without change.
pub fn generated_ideal(a: &SkewBrace, x: &ElemSet) -> ElemSet {
    let n = a.order();
    let mut cur = x.clone();
    let mut unchanged = 0;
    let mut k = 0usize;
    while unchanged < 3 {
        let next = match k % 3 {
            0 => a.star.normal_closure(&cur),
            1 => a.circ.normal_closure(&cur),
            _ => cur.iter().flat_map(|y| (0..n).map(move |b| a.lambda(b, y))).collect(),
        };
        unchanged = if next == cur { unchanged + 1 } else { 0 };
        cur = next;
        k += 1;
    }
    cur
}

/// The ideal generated by both projections of `[I×I, J×J]` in the
/// semidirect product.
pub fn brace_ideal_product(a: &SkewBrace, i: &ElemSet, j: &ElemSet) -> Result<ElemSet, BraceError> {
    if !a.is_ideal(i) || !a.is_ideal(j) {
        return Err(BraceError::NotAnIdeal);
    }
    let p = semidirect_product(a);
    let out = product_in(a, &p, i, j);
    assert!(out.is_subset(&i.intersection(j)), "brace ideal product lies in both factors");
    Ok(out)
}

fn product_in(a: &SkewBrace, p: &FinGroup, i: &ElemSet, j: &ElemSet) -> ElemSet {
    let n = a.order();
    let square = |s: &ElemSet| -> ElemSet { s.iter().flat_map(|x| s.iter().map(move |y| x * n + y)).collect() };
    let comm = commutator_unchecked(p, &square(i), &square(j));
    let projections: ElemSet = comm.iter().flat_map(|z| [z / n, z % n]).collect();
    generated_ideal(a, &projections)
}

/// Ideals ordered by inclusion, multiplied by [`brace_ideal_product`].
pub fn brace_lattice(a: &SkewBrace, bound: usize) -> Result<SetLattice, BraceError> {
    let members = brace_ideals(a, bound)?.ideals;
    let labels = size_labels(&members, "1", "A", "I");
    let p = semidirect_product(a);
    Ok(SetLattice::build(members, labels, |i, j| product_in(a, &p, i, j))?)
}

/// The right center of the top ideal: the largest ideal `I` with `A·I`
/// trivial.
pub fn socle(a: &SkewBrace, bound: usize) -> Result<ElemSet, BraceError> {
    let l = brace_lattice(a, bound)?;
    let top = l.lattice.top();
    let r = right_annihilator(&l.lattice, top).ok_or(BraceError::UndefinedAnnihilator)?;
    Ok(l.member(r).clone())
}

/// `A/I` on the cosets of `I`, each labelled by its least element's label.
pub fn quotient_brace(a: &SkewBrace, i: &ElemSet) -> Result<SkewBrace, BraceError> {
    if !a.is_ideal(i) {
        return Err(BraceError::NotAnIdeal);
    }
    let n = a.order();
    let rep: Vec<usize> = (0..n)
        .map(|x| i.iter().map(|y| a.star(x, y)).min().expect("ideal is non-empty"))
        .collect();
    let reps: Vec<usize> = rep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |x: usize| reps.binary_search(&rep[x]).expect("representative is listed");
    let m = reps.len();
    let circ = BinOpTable::from_fn(m, |p, q| index(a.circ(reps[p], reps[q])));
    let star = BinOpTable::from_fn(m, |p, q| index(a.star(reps[p], reps[q])));
    let labels = reps.iter().map(|&x| a.label(x).to_string()).collect();
    SkewBrace::new(circ, star, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{normal_mult_lattice, GroupMult};
    use crate::series::classify;

    fn set(a: &SkewBrace, labels: &[&str]) -> ElemSet {
        labels.iter().map(|l| a.find_label(l).unwrap()).collect()
    }

    fn two_z8() -> SkewBrace {
        SkewBrace::from_radical_rng(&FinRng::multiples(2, 8)).unwrap()
    }

    /// Every subset, as an oracle for ideal enumeration.
    fn all_ideals_by_scan(a: &SkewBrace) -> Vec<ElemSet> {
        let n = a.order();
        let mut out: Vec<ElemSet> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<ElemSet>())
            .filter(|s| a.is_ideal(s))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn constructors() {
        let c2 = SkewBrace::trivial(&FinGroup::cyclic(2));
        assert_eq!(c2.circ_group().table(), c2.star_group().table());
        let b = two_z8();
        assert_eq!(b.labels(), &["0", "2", "4", "6"]);
        let (two, four, six) = (b.find_label("2").unwrap(), b.find_label("4").unwrap(), b.find_label("6").unwrap());
        assert_eq!(b.star(two, four), six);
        assert_eq!(b.circ(two, four), six);
        assert_eq!(
            SkewBrace::from_radical_rng(&FinRng::zn(6)).unwrap_err(),
            BraceError::NotARadicalRing
        );
    }

    #[test]
    fn rejects_brace_law_failures() {
        // Z/4 addition against Z/4 with the labels 1 and 2 swapped
        let swap = [0, 2, 1, 3];
        let star = BinOpTable::from_fn(4, |x, y| (x + y) % 4);
        let circ = BinOpTable::from_fn(4, |x, y| swap[(swap[x] + swap[y]) % 4]);
        assert!(matches!(SkewBrace::new(circ, star, vec![]), Err(BraceError::BraceLaw(..))));
    }

    #[test]
    fn lambda() {
        let t = lambda_action(&SkewBrace::trivial(&FinGroup::symmetric(3)));
        assert!(t.falsifications.is_empty());
        assert!(t.action.gens.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v)));

        let b = two_z8();
        let l = lambda_action(&b);
        assert!(l.falsifications.is_empty());
        let two = b.find_label("2").unwrap();
        let images: Vec<&str> = l.action.gens[two].iter().map(|&y| b.label(y)).collect();
        assert_eq!(images, ["0", "6", "4", "2"]);
        assert_eq!(l.action.gens[b.identity()], vec![0, 1, 2, 3]);
    }

    #[test]
    fn semidirect_products() {
        let p = semidirect_product(&SkewBrace::trivial(&FinGroup::cyclic(2)));
        assert_eq!(p.order(), 4);
        assert!(p.is_abelian());
        assert!((0..4).all(|x| p.op(x, x) == p.identity()));

        let s3 = FinGroup::symmetric(3);
        let p = semidirect_product(&SkewBrace::trivial(&s3));
        let direct = FinGroup::direct_product(&s3, &s3);
        assert_eq!(p.table(), direct.table());
        assert_eq!(semidirect_product(&two_z8()).order(), 16);
    }

    #[test]
    fn ybe() {
        let c4 = ybe_solution(&SkewBrace::trivial(&FinGroup::cyclic(4)));
        assert!(c4.bijective && c4.braid_holds && c4.involutive);
        assert!((0..16).all(|i| c4.r[i] == (i % 4, i / 4)));

        let rad = ybe_solution(&two_z8());
        assert!(rad.bijective && rad.braid_holds && rad.involutive);

        let s3 = FinGroup::symmetric(3);
        let t = ybe_solution(&SkewBrace::trivial(&s3));
        assert!(t.bijective && t.braid_holds && !t.involutive);
        assert!(t.falsifications.is_empty());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(t.r[x * 6 + y], (y, s3.op(s3.op(s3.inv(y), x), y)));
            }
        }
    }

    #[test]
    fn ideals_of_trivial_braces() {
        let s3 = FinGroup::symmetric(3);
        let t = brace_ideals(&SkewBrace::trivial(&s3), 16).unwrap();
        assert_eq!(t.ideals, normal_subgroups(&s3, 128).unwrap());
        assert!(t.falsifications.is_empty());

        let v4 = FinGroup::direct_product(&FinGroup::cyclic(2), &FinGroup::cyclic(2));
        assert_eq!(brace_ideals(&SkewBrace::trivial(&v4), 16).unwrap().ideals.len(), 5);
    }

    #[test]
    fn ideals_match_subset_scan() {
        let braces = [
            two_z8(),
            SkewBrace::trivial(&FinGroup::quaternion()),
            SkewBrace::trivial(&FinGroup::dihedral(4)),
            SkewBrace::from_radical_rng(&FinRng::multiples(2, 16)).unwrap(),
            SkewBrace::from_radical_rng(&FinRng::multiples(3, 27)).unwrap(),
        ];
        for b in &braces {
            let found = brace_ideals(b, 16).unwrap();
            assert_eq!(found.ideals, all_ideals_by_scan(b));
            assert!(found.falsifications.is_empty());
        }
    }

    #[test]
    fn radical_brace_ideals() {
        let b = two_z8();
        let ideals = brace_ideals(&b, 16).unwrap().ideals;
        assert!(ideals.contains(&set(&b, &["0", "4"])));
        assert_eq!(
            brace_ideals(&SkewBrace::trivial(&FinGroup::symmetric(4)), 16).unwrap_err(),
            BraceError::OrderBound { order: 24, bound: 16 }
        );
    }

    #[test]
    fn generated_ideals() {
        let a = SkewBrace::trivial(&FinGroup::symmetric(3));
        assert_eq!(generated_ideal(&a, &set(&a, &["(123)"])), set(&a, &["()", "(123)", "(132)"]));
        assert_eq!(generated_ideal(&a, &ElemSet::new()), a.trivial_ideal());
        assert_eq!(generated_ideal(&a, &set(&a, &["(12)"])), a.whole());
    }

    #[test]
    fn generated_ideal_is_least() {
        let braces = [two_z8(), SkewBrace::trivial(&FinGroup::dihedral(4)), SkewBrace::trivial(&FinGroup::alternating(4))];
        for b in &braces {
            let ideals = brace_ideals(b, 16).unwrap().ideals;
            for x in 0..b.order() {
                for y in 0..b.order() {
                    let s: ElemSet = [x, y].into_iter().collect();
                    let oracle = ideals
                        .iter()
                        .filter(|i| s.is_subset(i))
                        .fold(b.whole(), |acc, i| acc.intersection(i));
                    assert_eq!(generated_ideal(b, &s), oracle);
                }
            }
        }
    }

    #[test]
    fn products() {
        let v4 = FinGroup::direct_product(&FinGroup::cyclic(2), &FinGroup::cyclic(2));
        let ab = SkewBrace::trivial(&v4);
        for i in brace_ideals(&ab, 16).unwrap().ideals {
            assert_eq!(brace_ideal_product(&ab, &i, &ab.whole()).unwrap(), ab.trivial_ideal());
        }
        let a = SkewBrace::trivial(&FinGroup::symmetric(3));
        let a3 = set(&a, &["()", "(123)", "(132)"]);
        assert_eq!(brace_ideal_product(&a, &a3, &a.whole()).unwrap(), a3);
        assert_eq!(brace_ideal_product(&a, &a.trivial_ideal(), &a3).unwrap(), a.trivial_ideal());
        assert_eq!(
            brace_ideal_product(&a, &set(&a, &["()", "(12)"]), &a3).unwrap_err(),
            BraceError::NotAnIdeal
        );
    }

    #[test]
    fn trivial_brace_lattice_matches_commutator_lattice() {
        for g in [FinGroup::symmetric(3), FinGroup::quaternion(), FinGroup::dihedral(4), FinGroup::alternating(4)] {
            let b = brace_lattice(&SkewBrace::trivial(&g), 16).unwrap();
            let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).unwrap();
            assert_eq!(b.members, n.members);
            assert!(b.lattice.same_tables(&n.lattice));
        }
    }

    #[test]
    fn abelian_trivial_brace_has_zero_product() {
        let b = brace_lattice(&SkewBrace::trivial(&FinGroup::cyclic(6)), 16).unwrap();
        let m = &b.lattice;
        assert!(m.elements().all(|x| m.elements().all(|y| m.mul(x, y) == m.bottom())));
    }

    #[test]
    fn radical_brace_is_solvable() {
        let b = brace_lattice(&two_z8(), 16).unwrap();
        assert_eq!(b.members.len(), 3);
        assert!(classify(&b.lattice, b.lattice.top()).solvable);
    }

    #[test]
    fn socles() {
        let s3 = SkewBrace::trivial(&FinGroup::symmetric(3));
        assert_eq!(socle(&s3, 16).unwrap(), s3.trivial_ideal());
        let q8 = SkewBrace::trivial(&FinGroup::quaternion());
        assert_eq!(socle(&q8, 16).unwrap(), set(&q8, &["1", "-1"]));
        let c4 = SkewBrace::trivial(&FinGroup::cyclic(4));
        assert_eq!(socle(&c4, 16).unwrap(), c4.whole());
    }

    #[test]
    fn quotients() {
        let a = SkewBrace::trivial(&FinGroup::symmetric(3));
        let a3 = set(&a, &["()", "(123)", "(132)"]);
        let q = quotient_brace(&a, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q, SkewBrace::trivial(&FinGroup::from_table(q.star_group().table().clone(), q.labels().to_vec()).unwrap()));
        assert_eq!(quotient_brace(&a, &a.trivial_ideal()).unwrap(), a);
        assert_eq!(quotient_brace(&a, &a.whole()).unwrap().order(), 1);
        assert_eq!(quotient_brace(&a, &set(&a, &["()", "(12)"])).unwrap_err(), BraceError::NotAnIdeal);
    }
}
