//! Finite rngs (associative rings possibly without identity), their ideals,
//! the circle operation and the Jacobson radical.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::check::{Falsification, Findings};
use crate::group::join_close;
use crate::lattice::{size_labels, BinOpTable, LatticeError, SetLattice};

/// Largest rng order accepted by ideal enumeration by default.
pub const DEFAULT_RNG_BOUND: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RngError {
    #[error("malformed table: {0}")]
    Table(#[from] LatticeError),
    #[error("addition is not an abelian group: {0}")]
    NotAbelianGroup(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("multiplication does not distribute over addition at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("rng order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("set is not an ideal")]
    NotAnIdeal,
    #[error("{0} labels for a rng of order {1}")]
    Labels(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinRng {
    add: BinOpTable,
    mul: BinOpTable,
    zero: usize,
    neg: Vec<usize>,
    labels: Vec<String>,
}

impl FinRng {
    pub fn new(add: BinOpTable, mul: BinOpTable, labels: Vec<String>) -> Result<Self, RngError> {
        let n = add.size();
        if mul.size() != n {
            return Err(LatticeError::SizeMismatch {
                left: n,
                right: mul.size(),
            }
            .into());
        }
        let labels = if labels.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else {
            labels
        };
        if labels.len() != n {
            return Err(RngError::Labels(labels.len(), n));
        }
        if !add.is_commutative() {
            return Err(RngError::NotAbelianGroup("not commutative".into()));
        }
        if !add.is_associative() {
            return Err(RngError::NotAbelianGroup("not associative".into()));
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| add.get(z, x) == x))
            .ok_or_else(|| RngError::NotAbelianGroup("no zero".into()))?;
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| add.get(x, y) == zero)
                    .ok_or_else(|| RngError::NotAbelianGroup(format!("{x} has no negative")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                        return Err(RngError::NotAssociative(x, y, z));
                    }
                    let yz = add.get(y, z);
                    if mul.get(x, yz) != add.get(mul.get(x, y), mul.get(x, z))
                        || mul.get(yz, x) != add.get(mul.get(y, x), mul.get(z, x))
                    {
                        return Err(RngError::NotDistributive(x, y, z));
                    }
                }
            }
        }
        Ok(Self {
            add,
            mul,
            zero,
            neg,
            labels,
        })
    }

    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>], labels: Vec<String>) -> Result<Self, RngError> {
        Self::new(BinOpTable::from_rows(add)?, BinOpTable::from_rows(mul)?, labels)
    }

    /// `Z/n` with the usual multiplication.
    pub fn zn(n: usize) -> Self {
        Self::multiples(1, n)
    }

    /// `mZ/nZ` for `m | n`: the elements `0, m, 2m, ..` with arithmetic mod
    /// `n`, labelled by their residues.
    pub fn multiples(m: usize, n: usize) -> Self {
        assert!(m > 0 && n.is_multiple_of(m), "m must divide n");
        let k = n / m;
        let add = BinOpTable::from_fn(k, |a, b| (a + b) % k);
        // (am)(bm) = abm², stored at index (abm² mod n)/m
        let mul = BinOpTable::from_fn(k, |a, b| (a * b * m * m % n) / m);
        let labels = (0..k).map(|a| (a * m).to_string()).collect();
        Self::new(add, mul, labels).expect("mZ/nZ is a rng")
    }

    /// `Z/n` with the zero multiplication.
    pub fn zero_rng(n: usize) -> Self {
        let add = BinOpTable::from_fn(n, |a, b| (a + b) % n);
        let mul = BinOpTable::from_fn(n, |_, _| 0);
        Self::new(add, mul, vec![]).expect("zero multiplication is a rng")
    }

    pub fn order(&self) -> usize {
        self.add.size()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add_table(&self) -> &BinOpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &BinOpTable {
        &self.mul
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    pub fn whole(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    pub fn zero_ideal(&self) -> ElemSet {
        ElemSet::singleton(self.zero)
    }

    /// `x ∘ y = x + y + xy`
    pub fn circle(&self, x: usize, y: usize) -> usize {
        self.add(self.add(x, y), self.mul(x, y))
    }

    /// The additive subgroup generated by `s`.
    pub fn additive_closure(&self, s: &ElemSet) -> ElemSet {
        let mut out = self.zero_ideal();
        let gens: Vec<usize> = s.iter().collect();
        let mut frontier = vec![self.zero];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.add(x, g);
                if out.insert(y) {
                    frontier.push(y);
                }
            }
        }
        out
    }

    /// The smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &ElemSet) -> ElemSet {
        let mut cur = self.additive_closure(s);
        loop {
            let mut next = cur.clone();
            for x in cur.iter() {
                for r in 0..self.order() {
                    next.insert(self.mul(r, x));
                    next.insert(self.mul(x, r));
                }
            }
            let next = self.additive_closure(&next);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        s.contains(self.zero)
            && s.iter().all(|x| {
                s.iter().all(|y| s.contains(self.sub(x, y)))
                    && (0..self.order()).all(|r| s.contains(self.mul(r, x)) && s.contains(self.mul(x, r)))
            })
    }
}

fn check_bound(r: &FinRng, bound: usize) -> Result<(), RngError> {
    if r.order() > bound {
        Err(RngError::OrderBound {
            order: r.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Every ideal, sorted by bitmask: principal ideals closed under sums.
pub fn ideals(r: &FinRng, bound: usize) -> Result<Vec<ElemSet>, RngError> {
    check_bound(r, bound)?;
    let mut found: BTreeSet<ElemSet> = (0..r.order()).map(|x| r.ideal_closure(&ElemSet::singleton(x))).collect();
    join_close(&mut found, |a, b| ideal_sum(r, a, b));
    Ok(found.into_iter().collect())
}

pub fn ideal_sum(r: &FinRng, i: &ElemSet, j: &ElemSet) -> ElemSet {
    r.additive_closure(&i.union(j))
}

/// `IJ`: the additive closure of the products `ij`.
pub fn ideal_product(r: &FinRng, i: &ElemSet, j: &ElemSet) -> Result<ElemSet, RngError> {
    if !r.is_ideal(i) || !r.is_ideal(j) {
        return Err(RngError::NotAnIdeal);
    }
    let p = product_unchecked(r, i, j);
    assert!(
        r.is_ideal(&p) && p.is_subset(&i.intersection(j)),
        "product of ideals must be an ideal inside both"
    );
    Ok(p)
}

fn product_unchecked(r: &FinRng, i: &ElemSet, j: &ElemSet) -> ElemSet {
    let products: ElemSet = i.iter().flat_map(|x| j.iter().map(move |y| r.mul(x, y))).collect();
    r.additive_closure(&products)
}

/// The ideal generated by `ij − ji` for `i ∈ I`, `j ∈ J`.
pub fn ring_commutator(r: &FinRng, i: &ElemSet, j: &ElemSet) -> ElemSet {
    let comms: ElemSet = i
        .iter()
        .flat_map(|x| j.iter().map(move |y| r.sub(r.mul(x, y), r.mul(y, x))))
        .collect();
    r.ideal_closure(&comms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RngMult {
    Product,
    Intersection,
    Zero,
    RingCommutator,
}

/// Ideals ordered by inclusion; join is the sum, meet the intersection.
pub fn ideal_lattice(r: &FinRng, mult: RngMult, bound: usize) -> Result<SetLattice, RngError> {
    let members = ideals(r, bound)?;
    let labels = size_labels(&members, "0", "R", "I");
    let zero = r.zero_ideal();
    Ok(SetLattice::build(members, labels, |a, b| match mult {
        RngMult::Product => product_unchecked(r, a, b),
        RngMult::Intersection => a.intersection(b),
        RngMult::Zero => zero.clone(),
        RngMult::RingCommutator => ring_commutator(r, a, b),
    })?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleRadical {
    pub circle: Vec<Vec<usize>>,
    pub jacobson: ElemSet,
    pub is_radical_ring: bool,
    pub falsifications: Vec<Falsification>,
}

/// The circle monoid `(R, ∘)` and `J(R)`, the elements `x` with `yx` left
/// invertible in `(R, ∘)` for every `y`.
pub fn circle_and_radical(r: &FinRng) -> CircleRadical {
    let n = r.order();
    let circle: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| r.circle(x, y)).collect()).collect();
    let left_inv = |x: usize| (0..n).any(|z| circle[z][x] == r.zero());
    let right_inv = |x: usize| (0..n).any(|z| circle[x][z] == r.zero());
    let jacobson: ElemSet = (0..n).filter(|&x| (0..n).all(|y| left_inv(r.mul(y, x)))).collect();

    let mut f = Findings::default();
    let monoid = (0..n).all(|x| circle[r.zero()][x] == x && circle[x][r.zero()] == x)
        && BinOpTable::from_fn(n, |x, y| circle[x][y]).is_associative();
    f.require(monoid, "circle operation is a monoid with identity zero", String::new);
    let right_route: ElemSet = (0..n).filter(|&x| (0..n).all(|y| right_inv(r.mul(x, y)))).collect();
    f.require(right_route == jacobson, "left and right descriptions of J(R) agree", || {
        format!("left {jacobson:?}, right {right_route:?}")
    });
    f.require(r.is_ideal(&jacobson), "J(R) is an ideal", || format!("{jacobson:?}"));
    let units: ElemSet = (0..n).filter(|&x| left_inv(x) && right_inv(x)).collect();
    f.require(jacobson.is_subset(&units), "J(R) lies in the circle units", || format!("{jacobson:?}"));
    let is_radical_ring = jacobson == r.whole();
    f.require(is_radical_ring == (units.len() == n), "R = J(R) iff (R, ∘) is a group", || {
        format!("J = {jacobson:?}, units = {units:?}")
    });
    CircleRadical {
        circle,
        jacobson,
        is_radical_ring,
        falsifications: f.into_vec(),
    }
}
