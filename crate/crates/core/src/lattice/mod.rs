//! Finite lattices and multiplicative lattices.
//!
//! Elements are dense indices `0..n`; every piece of structure (order, join,
//! meet, multiplication) is stored as a full table. A multiplicative lattice
//! is a bounded lattice together with any binary operation `·` satisfying
//! `x·y ≤ x ∧ y`; nothing else (associativity, commutativity, monotonicity,
//! distributivity over joins) is assumed, and [`MultLattice::law_report`]
//! reports which of those extra laws happen to hold.

mod morphism;
mod ops;
mod sets;

use serde::Serialize;
use thiserror::Error;

pub use morphism::LatticeMorphism;
pub use ops::{compose_operations, BinOpTable};
pub use sets::{size_labels, SetLattice};

/// Index of a lattice element.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("order relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("elements {x} and {y} have no unique {kind}")]
    NotALattice { x: Elem, y: Elem, kind: &'static str },
    #[error("order has no {0} element")]
    NoBounds(&'static str),
    #[error("multiplication violates x·y ≤ x∧y at ({x}, {y})")]
    AxiomViolation { x: Elem, y: Elem },
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("table entry ({x}, {y}) = {value} is outside 0..{n}")]
    OutOfRange { x: usize, y: usize, value: usize, n: usize },
    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("map does not preserve the join of {x} and {y}")]
    NotJoinPreserving { x: Elem, y: Elem },
    #[error("map does not send bottom to bottom")]
    BottomNotPreserved,
    #[error("map does not send top to top")]
    TopNotPreserved,
    #[error("map is not submultiplicative at ({x}, {y})")]
    NotSubmultiplicative { x: Elem, y: Elem },
}

/// A finite bounded lattice with precomputed join and meet tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinLattice {
    n: usize,
    labels: Vec<String>,
    leq: Vec<bool>,
    join: BinOpTable,
    meet: BinOpTable,
    bottom: Elem,
    top: Elem,
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Validates an order table and computes joins and meets by scanning bounds.
///
/// An empty `labels` vector selects the labels `"0", "1", ..`.
pub fn build_lattice(leq: &[Vec<bool>], labels: Vec<String>) -> Result<FinLattice, LatticeError> {
    let n = leq.len();
    if let Some((i, row)) = leq.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(LatticeError::Shape(format!(
            "order row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    let labels = if labels.is_empty() { default_labels(n) } else { labels };
    if labels.len() != n {
        return Err(LatticeError::Shape(format!(
            "{} labels for {n} elements",
            labels.len()
        )));
    }
    for x in 0..n {
        if !leq[x][x] {
            return Err(LatticeError::NotAPartialOrder(format!("{x} ≤ {x} fails")));
        }
        for y in 0..n {
            if x != y && leq[x][y] && leq[y][x] {
                return Err(LatticeError::NotAPartialOrder(format!(
                    "{x} ≤ {y} and {y} ≤ {x}"
                )));
            }
            for z in 0..n {
                if leq[x][y] && leq[y][z] && !leq[x][z] {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "{x} ≤ {y} ≤ {z} but not {x} ≤ {z}"
                    )));
                }
            }
        }
    }
    let bottom = (0..n)
        .find(|&b| (0..n).all(|x| leq[b][x]))
        .ok_or(LatticeError::NoBounds("least"))?;
    let top = (0..n)
        .find(|&t| (0..n).all(|x| leq[x][t]))
        .ok_or(LatticeError::NoBounds("greatest"))?;

    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let uppers: Vec<Elem> = (0..n).filter(|&u| leq[x][u] && leq[y][u]).collect();
            let least = uppers.iter().copied().find(|&u| uppers.iter().all(|&v| leq[u][v]));
            join[x * n + y] = least.ok_or(LatticeError::NotALattice { x, y, kind: "join" })?;
            let lowers: Vec<Elem> = (0..n).filter(|&l| leq[l][x] && leq[l][y]).collect();
            let greatest = lowers.iter().copied().find(|&l| lowers.iter().all(|&v| leq[v][l]));
            meet[x * n + y] = greatest.ok_or(LatticeError::NotALattice { x, y, kind: "meet" })?;
        }
    }
    let join = BinOpTable::from_fn(n, |x, y| join[x * n + y]);
    let meet = BinOpTable::from_fn(n, |x, y| meet[x * n + y]);
    Ok(FinLattice {
        n,
        labels,
        leq: leq.iter().flatten().copied().collect(),
        join,
        meet,
        bottom,
        top,
    })
}

impl FinLattice {
    /// Builds a lattice from an order predicate.
    pub fn from_order(
        n: usize,
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, LatticeError> {
        let table: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| leq(x, y)).collect()).collect();
        build_lattice(&table, labels)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn join_table(&self) -> &BinOpTable {
        &self.join
    }

    pub fn meet_table(&self) -> &BinOpTable {
        &self.meet
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n.max(1)).map(<[bool]>::to_vec).take(self.n).collect()
    }

    /// `∨xs`, with `∨∅ = bottom`.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `∧xs`, with `∧∅ = top`.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Covering pairs `(upper, lower)`: `lower < upper` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for hi in self.elements() {
            for lo in self.elements() {
                if self.lt(lo, hi) && !self.elements().any(|m| self.lt(lo, m) && self.lt(m, hi)) {
                    out.push((hi, lo));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn is_distributive(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.elements().all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
    pub fn is_modular(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|z| {
                !self.leq(x, z)
                    || self.elements().all(|y| {
                        self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), z)
                    })
            })
        })
    }

    /// Elements `y ≤ h`, in increasing index order.
    pub fn down_set(&self, h: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.leq(y, h)).collect()
    }

    /// Maximal elements of `set` with respect to the lattice order.
    pub fn maximal_in(&self, set: &[Elem]) -> Vec<Elem> {
        set.iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| self.lt(x, y)))
            .collect()
    }
}

/// Which standard multiplication to put on a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardMult {
    /// `x·y = x ∧ y`
    Meet,
    /// `x·y = 0`
    Zero,
}

/// Multiplications on a chain `1 = c0 > c1 > .. > c(k-1) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// `c_a · c_b = c_min(a+b, k-1)`: ideals of `Z/p^(k-1)` under the ideal product.
    Dvr,
    Meet,
    Zero,
}

/// Extra laws a multiplication may satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub monotone: bool,
    pub m_distributive: bool,
    pub commutative: bool,
    pub associative: bool,
}

/// A finite lattice with a multiplication satisfying `x·y ≤ x∧y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultLattice {
    lat: FinLattice,
    mul: BinOpTable,
}

/// Attaches a multiplication table after checking `mul[x][y] ≤ x ∧ y`.
pub fn attach_multiplication(lat: FinLattice, mul: &[Vec<usize>]) -> Result<MultLattice, LatticeError> {
    let table = BinOpTable::from_rows(mul)?;
    MultLattice::new(lat, table)
}

impl MultLattice {
    pub fn new(lat: FinLattice, mul: BinOpTable) -> Result<Self, LatticeError> {
        if mul.size() != lat.size() {
            return Err(LatticeError::SizeMismatch {
                left: lat.size(),
                right: mul.size(),
            });
        }
        for x in lat.elements() {
            for y in lat.elements() {
                if !lat.leq(mul.get(x, y), lat.meet(x, y)) {
                    return Err(LatticeError::AxiomViolation { x, y });
                }
            }
        }
        Ok(Self { lat, mul })
    }

    /// Tabulates `f` as the multiplication.
    pub fn from_fn(lat: FinLattice, f: impl FnMut(Elem, Elem) -> Elem) -> Result<Self, LatticeError> {
        let mul = BinOpTable::from_fn(lat.size(), f);
        Self::new(lat, mul)
    }

    pub fn with_standard(lat: FinLattice, kind: StandardMult) -> Self {
        let mul = match kind {
            StandardMult::Meet => lat.meet_table().clone(),
            StandardMult::Zero => {
                let b = lat.bottom();
                BinOpTable::from_fn(lat.size(), |_, _| b)
            }
        };
        Self { lat, mul }
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.lat
    }

    pub fn mul_table(&self) -> &BinOpTable {
        &self.mul
    }

    pub fn size(&self) -> usize {
        self.lat.size()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        self.lat.elements()
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.lat.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        self.lat.lt(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.lat.join(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.lat.meet(x, y)
    }

    pub fn bottom(&self) -> Elem {
        self.lat.bottom()
    }

    pub fn top(&self) -> Elem {
        self.lat.top()
    }

    pub fn label(&self, x: Elem) -> &str {
        self.lat.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.lat.labels()
    }

    /// `x²`
    pub fn square(&self, x: Elem) -> Elem {
        self.mul(x, x)
    }

    pub fn law_report(&self) -> LawReport {
        LawReport {
            monotone: self.is_monotone(),
            m_distributive: self.is_m_distributive(),
            commutative: self.mul.is_commutative(),
            associative: self.mul.is_associative(),
        }
    }

    /// `x ≤ y, x' ≤ y' ⇒ xx' ≤ yy'`. Checked one argument at a time, which
    /// is equivalent by transitivity.
    pub fn is_monotone(&self) -> bool {
        self.elements().all(|x| {
            self.elements().filter(|&y| self.leq(x, y)).all(|y| {
                self.elements()
                    .all(|z| self.leq(self.mul(x, z), self.mul(y, z)) && self.leq(self.mul(z, x), self.mul(z, y)))
            })
        })
    }

    /// `(x∨y)z = xz∨yz` and `x(y∨z) = xy∨xz` for all triples.
    ///
    /// In a finite lattice this also gives distributivity over arbitrary
    /// joins: non-empty joins reduce to binary ones, and the empty join is
    /// covered by `x·0 = 0 = 0·x`, which the axiom forces.
    pub fn is_m_distributive(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                let xy = self.join(x, y);
                self.elements().all(|z| {
                    self.mul(xy, z) == self.join(self.mul(x, z), self.mul(y, z))
                        && self.mul(z, xy) == self.join(self.mul(z, x), self.mul(z, y))
                })
            })
        })
    }

    /// The same lattice with `x□y := (x·y) ∨ (y·x)`.
    pub fn square_lattice(&self) -> MultLattice {
        let mul = BinOpTable::from_fn(self.size(), |x, y| self.join(self.mul(x, y), self.mul(y, x)));
        MultLattice {
            lat: self.lat.clone(),
            mul,
        }
    }

    /// `(x·y)·(x·x) = x·(y·(x·x))` for all `x, y`.
    pub fn jordan_identity_holds(&self) -> bool {
        self.elements().all(|x| {
            let xx = self.mul(x, x);
            self.elements()
                .all(|y| self.mul(self.mul(x, y), xx) == self.mul(x, self.mul(y, xx)))
        })
    }

    /// Elements of the interval `[0, h]`, in index order. Index `i` of
    /// [`Self::interval_sublattice`] corresponds to entry `i` here.
    pub fn interval_elements(&self, h: Elem) -> Vec<Elem> {
        self.lat.down_set(h)
    }

    /// The multiplicative sublattice `[0, h]`. Its top is `h`.
    pub fn interval_sublattice(&self, h: Elem) -> MultLattice {
        let members = self.interval_elements(h);
        let pos = |x: Elem| members.binary_search(&x).expect("interval is closed under ∨, ∧, ·");
        let labels = members.iter().map(|&x| self.label(x).to_string()).collect();
        let lat = FinLattice::from_order(members.len(), labels, |i, j| self.leq(members[i], members[j]))
            .expect("an interval of a lattice is a lattice");
        let mul = BinOpTable::from_fn(members.len(), |i, j| pos(self.mul(members[i], members[j])));
        MultLattice { lat, mul }
    }

    /// Same order, same multiplication, same element indexing; labels may differ.
    pub fn same_tables(&self, other: &MultLattice) -> bool {
        self.lat.leq == other.lat.leq && self.mul == other.mul
    }

    /// The same structure with element `x` moved to index `perm[x]`.
    pub fn permute(&self, perm: &[Elem]) -> Result<Self, LatticeError> {
        let n = self.size();
        let image: std::collections::BTreeSet<Elem> = perm.iter().copied().collect();
        if perm.len() != n || image.len() != n || image.iter().any(|&i| i >= n) {
            return Err(LatticeError::Shape("not a permutation".into()));
        }
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let labels = inv.iter().map(|&x| self.label(x).to_string()).collect();
        let lat = FinLattice::from_order(n, labels, |a, b| self.leq(inv[a], inv[b]))?;
        Self::from_fn(lat, |a, b| perm[self.mul(inv[a], inv[b])])
    }

    /// Replaces the display labels.
    pub fn relabel(mut self, labels: Vec<String>) -> Result<Self, LatticeError> {
        if labels.len() != self.size() {
            return Err(LatticeError::Shape(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size()
            )));
        }
        self.lat.labels = labels;
        Ok(self)
    }
}

/// The chain `c0 > c1 > .. > c(k-1)`, element `i` being `c_i`.
pub fn chain_mult_lattice(k: usize, kind: ChainKind) -> MultLattice {
    assert!(k >= 1, "a chain needs at least one element");
    let labels = (0..k).map(|i| format!("c{i}")).collect();
    let lat = FinLattice::from_order(k, labels, |a, b| a >= b).expect("a chain is a lattice");
    let mul = BinOpTable::from_fn(k, |a, b| match kind {
        ChainKind::Dvr => (a + b).min(k - 1),
        ChainKind::Meet => a.max(b),
        ChainKind::Zero => k - 1,
    });
    MultLattice { lat, mul }
}

/// Subsets of `atoms` letters, element index = bitmask.
pub fn boolean_lattice(atoms: usize) -> FinLattice {
    let n = 1usize << atoms;
    let labels = (0..n)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else {
                (0..atoms)
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            }
        })
        .collect();
    FinLattice::from_order(n, labels, |x, y| x & !y == 0).expect("a power set is a lattice")
}

/// The pentagon: `0 < a < b < 1` and `0 < c < 1`.
pub fn pentagon() -> FinLattice {
    let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    let below: [&[usize]; 5] = [&[0], &[0, 1], &[0, 1, 2], &[0, 3], &[0, 1, 2, 3, 4]];
    FinLattice::from_order(5, labels, |x, y| below[y].contains(&x)).expect("N5 is a lattice")
}

/// The diamond: three pairwise incomparable atoms between `0` and `1`.
pub fn diamond() -> FinLattice {
    let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    FinLattice::from_order(5, labels, |x, y| x == y || x == 0 || y == 4).expect("M3 is a lattice")
}
