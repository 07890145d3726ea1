//! Binary operations on a finite carrier and their `◁` composition.

use serde::Serialize;

use super::LatticeError;

/// A binary operation on `{0, .., n-1}` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BinOpTable {
    n: usize,
    op: Vec<usize>,
}

impl BinOpTable {
    /// Builds a table from rows, checking shape and range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, LatticeError> {
        let n = rows.len();
        let mut op = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LatticeError::Shape(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(LatticeError::OutOfRange { x, y, value: v, n });
                }
                op.push(v);
            }
        }
        Ok(Self { n, op })
    }

    /// Tabulates `f`. Panics if `f` leaves the carrier.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                assert!(v < n, "operation value {v} outside carrier of size {n}");
                op.push(v);
            }
        }
        Self { n, op }
    }

    /// `x ∗ y := x`, the identity of the `◁` monoid.
    pub fn left_projection(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.n.max(1)).map(<[usize]>::to_vec).take(self.n).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_associative(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                let xy = self.get(x, y);
                (0..self.n).all(|z| self.get(xy, z) == self.get(x, self.get(y, z)))
            })
        })
    }
}

/// `x (∗◁∘) y := (x ∗ y) ∘ (y ∗ x)`.
pub fn compose_operations(star: &BinOpTable, circ: &BinOpTable) -> Result<BinOpTable, LatticeError> {
    if star.n != circ.n {
        return Err(LatticeError::SizeMismatch {
            left: star.n,
            right: circ.n,
        });
    }
    Ok(BinOpTable::from_fn(star.n, |x, y| {
        circ.get(star.get(x, y), star.get(y, x))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn and() -> BinOpTable {
        BinOpTable::from_fn(2, |x, y| x & y)
    }

    fn or() -> BinOpTable {
        BinOpTable::from_fn(2, |x, y| x | y)
    }

    #[test]
    fn left_projection_then_anything_is_that_thing() {
        let circ = BinOpTable::from_rows(&[vec![1, 0, 2], vec![2, 2, 0], vec![0, 1, 1]]).unwrap();
        let id = BinOpTable::left_projection(3);
        assert_eq!(compose_operations(&id, &circ).unwrap(), circ);
    }

    #[test]
    fn and_then_or_is_and() {
        assert_eq!(compose_operations(&and(), &or()).unwrap(), and());
    }

    #[test]
    fn c2_addition_composed_with_itself_is_zero() {
        let add = BinOpTable::from_fn(2, |x, y| (x + y) % 2);
        let out = compose_operations(&add, &add).unwrap();
        assert_eq!(out, BinOpTable::from_fn(2, |_, _| 0));
    }

    #[test]
    fn size_mismatch() {
        let err = compose_operations(&and(), &BinOpTable::left_projection(3)).unwrap_err();
        assert!(matches!(err, LatticeError::SizeMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn rejects_out_of_range_rows() {
        let err = BinOpTable::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, LatticeError::OutOfRange { x: 0, y: 1, .. }));
    }

    fn op_strategy(n: usize) -> impl Strategy<Value = BinOpTable> {
        proptest::collection::vec(0..n, n * n).prop_map(move |op| BinOpTable { n, op })
    }

    fn ops3() -> impl Strategy<Value = (BinOpTable, BinOpTable, BinOpTable)> {
        (1usize..=3).prop_flat_map(|n| (op_strategy(n), op_strategy(n), op_strategy(n)))
    }

    proptest! {
        #[test]
        fn composition_is_associative((a, b, c) in ops3()) {
            let left = compose_operations(&compose_operations(&a, &b).unwrap(), &c).unwrap();
            let right = compose_operations(&a, &compose_operations(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn left_projection_is_two_sided_identity((a, _, _) in ops3()) {
            let id = BinOpTable::left_projection(a.size());
            prop_assert_eq!(&compose_operations(&id, &a).unwrap(), &a);
            prop_assert_eq!(&compose_operations(&a, &id).unwrap(), &a);
        }
    }
}
