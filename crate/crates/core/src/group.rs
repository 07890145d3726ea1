//! Finite groups as Cayley tables, normal subgroups, commutators, and the
//! multiplicative lattices `N(G)` of normal subgroups.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::lattice::{size_labels, BinOpTable, LatticeError, SetLattice};
use crate::series::classify;

/// Largest group order accepted by the enumeration routines by default.
pub const DEFAULT_GROUP_BOUND: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    Table(#[from] LatticeError),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("operation is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map {0} is not an automorphism")]
    NotAnAutomorphism(usize),
    #[error("{0} labels for a group of order {1}")]
    Labels(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    tab: BinOpTable,
    e: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl FinGroup {
    /// Validates a Cayley table: identity, inverses and associativity.
    pub fn from_table(tab: BinOpTable, labels: Vec<String>) -> Result<Self, GroupError> {
        let n = tab.size();
        let labels = if labels.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else {
            labels
        };
        if labels.len() != n {
            return Err(GroupError::Labels(labels.len(), n));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| tab.get(e, x) == x && tab.get(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| tab.get(x, y) == e && tab.get(y, x) == e)
                .ok_or(GroupError::NoInverse(x))?;
            inv.push(y);
        }
        for x in 0..n {
            for y in 0..n {
                let xy = tab.get(x, y);
                for z in 0..n {
                    if tab.get(xy, z) != tab.get(x, tab.get(y, z)) {
                        return Err(GroupError::NotAssociative(x, y, z));
                    }
                }
            }
        }
        Ok(Self { tab, e, inv, labels })
    }

    pub fn from_rows(rows: &[Vec<usize>], labels: Vec<String>) -> Result<Self, GroupError> {
        Self::from_table(BinOpTable::from_rows(rows)?, labels)
    }

    /// The permutation group generated by `gens`, acting on `0..degree`.
    /// Elements are sorted lexicographically by image list, so the identity
    /// comes first; labels use 1-based cycle notation.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Self {
        let id: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        // (p·q)(i) = q(p(i)): apply p first
        let tab = BinOpTable::from_fn(elems.len(), |a, b| {
            let pq: Vec<usize> = elems[a].iter().map(|&i| elems[b][i]).collect();
            elems.binary_search(&pq).expect("closed under composition")
        });
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(tab, labels).expect("permutations form a group")
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_table(BinOpTable::from_fn(n, |x, y| (x + y) % n), vec![]).expect("Z/n is a group")
    }

    pub fn symmetric(k: usize) -> Self {
        let mut gens = Vec::new();
        if k >= 2 {
            let mut swap: Vec<usize> = (0..k).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..k).map(|i| (i + 1) % k).collect());
        }
        Self::from_permutations(k, &gens)
    }

    /// Generated by the 3-cycles `(1 2 i)`.
    pub fn alternating(k: usize) -> Self {
        let gens: Vec<Vec<usize>> = (2..k)
            .map(|i| {
                let mut p: Vec<usize> = (0..k).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Self::from_permutations(k, &gens)
    }

    /// Symmetries of a regular `k`-gon, order `2k`.
    pub fn dihedral(k: usize) -> Self {
        let rot: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        let refl: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
        Self::from_permutations(k, &[rot, refl])
    }

    /// `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // element 2u + s is (-1)^s · u for u in 1, i, j, k
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let tab = BinOpTable::from_fn(8, |a, b| {
            let (u, neg) = UNIT[a / 2][b / 2];
            2 * u + ((a % 2 == 1) ^ (b % 2 == 1) ^ neg) as usize
        });
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        Self::from_table(tab, labels).expect("Q8 is a group")
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &FinGroup, h: &FinGroup) -> Self {
        let m = h.order();
        let tab = BinOpTable::from_fn(g.order() * m, |a, b| {
            g.op(a / m, b / m) * m + h.op(a % m, b % m)
        });
        let labels = (0..g.order() * m)
            .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
            .collect();
        Self::from_table(tab, labels).expect("direct product of groups")
    }

    pub fn order(&self) -> usize {
        self.tab.size()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.tab.get(x, y)
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn table(&self) -> &BinOpTable {
        &self.tab
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        self.tab.is_commutative()
    }

    /// `x⁻¹ y⁻¹ x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.op(self.op(self.inv(x), self.inv(y)), self.op(x, y))
    }

    /// `g x g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != self.e {
            p = self.op(p, x);
            k += 1;
        }
        k
    }

    pub fn trivial_subgroup(&self) -> ElemSet {
        ElemSet::singleton(self.e)
    }

    pub fn whole(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = gens.iter().collect();
        let mut out = self.trivial_subgroup();
        let mut queue = VecDeque::from([self.e]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.op(x, g);
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(self.e) && s.iter().all(|x| s.contains(self.inv(x)) && s.iter().all(|y| s.contains(self.op(x, y))))
    }

    /// Closed under conjugation by every element (subgroup-ness not checked).
    pub fn is_conjugation_invariant(&self, s: &ElemSet) -> bool {
        s.iter().all(|x| (0..self.order()).all(|g| s.contains(self.conjugate(g, x))))
    }

    pub fn is_normal(&self, s: &ElemSet) -> bool {
        self.is_subgroup(s) && self.is_conjugation_invariant(s)
    }

    /// The smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &ElemSet) -> ElemSet {
        let conjugates: ElemSet = s
            .iter()
            .flat_map(|x| (0..self.order()).map(move |g| (g, x)))
            .map(|(g, x)| self.conjugate(g, x))
            .collect();
        self.generate(&conjugates)
    }

    pub fn conjugacy_classes(&self) -> Vec<ElemSet> {
        let mut seen = ElemSet::new();
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if seen.contains(x) {
                continue;
            }
            let class: ElemSet = (0..self.order()).map(|g| self.conjugate(g, x)).collect();
            seen = seen.union(&class);
            classes.push(class);
        }
        classes
    }

    /// The subgroup `AB`, for `A` or `B` normal.
    pub fn product(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        self.generate(&a.union(b))
    }

    /// A generating set, chosen greedily by index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = self.trivial_subgroup();
        for x in 0..self.order() {
            if !sub.contains(x) {
                gens.push(x);
                sub = self.generate(&gens.iter().copied().collect());
            }
        }
        gens
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    let sep = if p.len() > 9 { " " } else { "" };
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn check_bound(g: &FinGroup, bound: usize) -> Result<(), GroupError> {
    if g.order() > bound {
        Err(GroupError::OrderBound {
            order: g.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Every normal subgroup, sorted by bitmask. Computed as the join-closure
/// of the normal closures of conjugacy classes, since every normal subgroup
/// is a union of classes.
pub fn normal_subgroups(g: &FinGroup, bound: usize) -> Result<Vec<ElemSet>, GroupError> {
    check_bound(g, bound)?;
    let mut found: BTreeSet<ElemSet> = BTreeSet::from([g.trivial_subgroup()]);
    for class in g.conjugacy_classes() {
        found.insert(g.generate(&class));
    }
    join_close(&mut found, |a, b| g.product(a, b));
    Ok(found.into_iter().collect())
}

/// Adds `join(a, b)` for all pairs until nothing new appears.
pub(crate) fn join_close(found: &mut BTreeSet<ElemSet>, join: impl Fn(&ElemSet, &ElemSet) -> ElemSet) {
    let mut frontier: Vec<ElemSet> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<ElemSet> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                let j = join(a, b);
                if found.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
}

/// `[A, B]`: the subgroup generated by `a⁻¹b⁻¹ab` for `a ∈ A`, `b ∈ B`.
pub fn commutator_subgroup(g: &FinGroup, a: &ElemSet, b: &ElemSet) -> Result<ElemSet, GroupError> {
    if !g.is_normal(a) || !g.is_normal(b) {
        return Err(GroupError::NotNormal);
    }
    let c = commutator_unchecked(g, a, b);
    assert!(
        g.is_normal(&c) && c.is_subset(a) && c.is_subset(b),
        "commutator subgroup must be normal and lie in both factors"
    );
    Ok(c)
}

pub(crate) fn commutator_unchecked(g: &FinGroup, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let comms: ElemSet = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (x, y)))
        .map(|(x, y)| g.commutator(x, y))
        .collect();
    g.generate(&comms)
}

/// A group of automorphisms of `group`, given by generating permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub group: FinGroup,
    pub gens: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: FinGroup, gens: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = group.order();
        for (i, p) in gens.iter().enumerate() {
            let bijective = p.len() == n && p.iter().copied().collect::<ElemSet>() == ElemSet::full(n);
            let hom = bijective
                && (0..n).all(|x| (0..n).all(|y| p[group.op(x, y)] == group.op(p[x], p[y])));
            if !hom {
                return Err(GroupError::NotAnAutomorphism(i));
            }
        }
        Ok(Self { group, gens })
    }

    /// Conjugation `h ↦ g h g⁻¹` by every element: the regular `G`-group.
    pub fn inner(g: &FinGroup) -> Self {
        let gens = (0..g.order())
            .map(|x| (0..g.order()).map(|h| g.conjugate(x, h)).collect())
            .collect();
        Self {
            group: g.clone(),
            gens,
        }
    }

    /// The full automorphism group of `g`.
    pub fn automorphisms(g: &FinGroup) -> Self {
        Self {
            group: g.clone(),
            gens: all_automorphisms(g),
        }
    }

    pub fn is_invariant(&self, s: &ElemSet) -> bool {
        self.gens.iter().all(|p| s.iter().all(|x| s.contains(p[x])))
    }
}

/// Every automorphism, found by trying all images of a generating set.
fn all_automorphisms(g: &FinGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let n = g.order();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            (0..n).filter(|&y| g.element_order(y) == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        if let Some(phi) = extend_to_hom(g, &gens, &images) {
            out.push(phi);
        }
        // odometer over candidate choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                out.sort();
                return out;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extend_to_hom(g: &FinGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut phi = vec![usize::MAX; n];
    phi[g.identity()] = g.identity();
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(w) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let (ws, img) = (g.op(w, s), g.op(phi[w], t));
            if phi[ws] == usize::MAX {
                phi[ws] = img;
                queue.push_back(ws);
            } else if phi[ws] != img {
                return None;
            }
        }
    }
    let image: ElemSet = phi.iter().copied().collect();
    (image.len() == n).then_some(phi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupMult {
    Commutator,
    Intersection,
    Zero,
}

/// Normal subgroups (or, with an action, the action-invariant normal
/// subgroups) ordered by inclusion, with the chosen multiplication. Join is
/// the product `AB`, meet the intersection.
pub fn normal_mult_lattice(
    g: &FinGroup,
    mult: GroupMult,
    action: Option<&GroupAction>,
    bound: usize,
) -> Result<SetLattice, GroupError> {
    let mut members = normal_subgroups(g, bound)?;
    if let Some(act) = action {
        members.retain(|s| act.is_invariant(s));
    }
    let labels = size_labels(&members, "1", "G", "N");
    let trivial = g.trivial_subgroup();
    let lattice = SetLattice::build(members, labels, |a, b| match mult {
        GroupMult::Commutator => commutator_unchecked(g, a, b),
        GroupMult::Intersection => a.intersection(b),
        GroupMult::Zero => trivial.clone(),
    })?;
    Ok(lattice)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupClassification {
    pub nilpotent: bool,
    pub solvable: bool,
    pub abelian: bool,
    pub perfect: bool,
    /// The same four verdicts read off the top of `N(G)` agree.
    pub lattice_agrees: bool,
}

/// Iterates `s ↦ step(s)` on subgroups until it stabilises.
fn subgroup_series(start: ElemSet, step: impl Fn(&ElemSet) -> ElemSet) -> ElemSet {
    let mut cur = start;
    loop {
        let next = step(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn classify_group(g: &FinGroup, bound: usize) -> Result<GroupClassification, GroupError> {
    check_bound(g, bound)?;
    let whole = g.whole();
    let trivial = g.trivial_subgroup();
    let lower = subgroup_series(whole.clone(), |s| commutator_unchecked(g, s, &whole));
    let derived = subgroup_series(whole.clone(), |s| commutator_unchecked(g, s, s));
    let direct = GroupClassification {
        nilpotent: lower == trivial,
        solvable: derived == trivial,
        abelian: g.is_abelian(),
        perfect: commutator_unchecked(g, &whole, &whole) == whole,
        lattice_agrees: true,
    };

    let n = normal_mult_lattice(g, GroupMult::Commutator, None, bound)?;
    let flags = classify(&n.lattice, n.lattice.top());
    let lattice_agrees = flags.left_nilpotent == direct.nilpotent
        && flags.right_nilpotent == direct.nilpotent
        && flags.solvable == direct.solvable
        && flags.abelian == direct.abelian
        && flags.idempotent == direct.perfect;
    Ok(GroupClassification {
        lattice_agrees,
        ..direct
    })
}
