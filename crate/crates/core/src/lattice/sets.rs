//! Multiplicative lattices whose elements are subsets of a carrier.

use crate::bitset::ElemSet;

use super::{BinOpTable, Elem, FinLattice, LatticeError, MultLattice};

/// A multiplicative lattice of subsets (subgroups, ideals, ...) ordered by
/// inclusion. Element `i` of `lattice` is `members[i]`; members are sorted
/// by bitmask value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLattice {
    pub members: Vec<ElemSet>,
    pub lattice: MultLattice,
}

impl SetLattice {
    /// `members` must be sorted and closed under the lattice operations of
    /// inclusion; `product` must land back in `members`.
    pub fn build(
        members: Vec<ElemSet>,
        labels: Vec<String>,
        mut product: impl FnMut(&ElemSet, &ElemSet) -> ElemSet,
    ) -> Result<Self, LatticeError> {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let n = members.len();
        let lat = FinLattice::from_order(n, labels, |x, y| members[x].is_subset(&members[y]))?;
        let mut table = Vec::with_capacity(n * n);
        for a in &members {
            for b in &members {
                let p = product(a, b);
                let idx = members.binary_search(&p).map_err(|_| {
                    LatticeError::Shape(format!("product {p:?} of {a:?} and {b:?} is not a member"))
                })?;
                table.push(idx);
            }
        }
        let mul = BinOpTable::from_fn(n, |x, y| table[x * n + y]);
        let lattice = MultLattice::new(lat, mul)?;
        Ok(Self { members, lattice })
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<Elem> {
        self.members.binary_search(set).ok()
    }

    pub fn member(&self, x: Elem) -> &ElemSet {
        &self.members[x]
    }
}

/// Labels by size: `bottom` for the smallest member, `top` for the largest,
/// and `{prefix}{size}` otherwise, with `a`, `b`, .. appended when several
/// members share a size.
pub fn size_labels(members: &[ElemSet], bottom: &str, top: &str, prefix: &str) -> Vec<String> {
    let last = members.len().saturating_sub(1);
    let sizes: Vec<usize> = members.iter().map(ElemSet::len).collect();
    let mut seen = std::collections::HashMap::<usize, usize>::new();
    members
        .iter()
        .enumerate()
        .map(|(i, _)| {
            if i == 0 {
                return bottom.to_string();
            }
            if i == last {
                return top.to_string();
            }
            let size = sizes[i];
            let peers = sizes[1..last].iter().filter(|&&s| s == size).count();
            let k = seen.entry(size).or_insert(0);
            *k += 1;
            if peers > 1 {
                format!("{prefix}{size}{}", (b'a' + (*k as u8 - 1)) as char)
            } else {
                format!("{prefix}{size}")
            }
        })
        .collect()
}
