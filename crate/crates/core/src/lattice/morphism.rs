//! Morphisms of multiplicative lattices and their right adjoints.

use super::{Elem, LatticeError, MultLattice};

/// A join-preserving, top-preserving, submultiplicative map, together with
/// its right adjoint `adj`, characterised by `map[x] ≤ y ⇔ x ≤ adj[y]`.
#[derive(Debug, Clone)]
pub struct LatticeMorphism<'a> {
    src: &'a MultLattice,
    dst: &'a MultLattice,
    map: Vec<Elem>,
    adj: Vec<Elem>,
}

impl<'a> LatticeMorphism<'a> {
    /// Validates the morphism axioms and computes `adj[y] = ∨{x : map[x] ≤ y}`.
    ///
    /// Preservation of arbitrary joins is checked as preservation of binary
    /// joins plus `map[0] = 0`, which is the same thing on finite lattices.
    pub fn new(src: &'a MultLattice, dst: &'a MultLattice, map: Vec<Elem>) -> Result<Self, LatticeError> {
        if map.len() != src.size() {
            return Err(LatticeError::SizeMismatch {
                left: src.size(),
                right: map.len(),
            });
        }
        if let Some((x, &v)) = map.iter().enumerate().find(|(_, &v)| v >= dst.size()) {
            return Err(LatticeError::OutOfRange {
                x,
                y: 0,
                value: v,
                n: dst.size(),
            });
        }
        if map[src.bottom()] != dst.bottom() {
            return Err(LatticeError::BottomNotPreserved);
        }
        if map[src.top()] != dst.top() {
            return Err(LatticeError::TopNotPreserved);
        }
        for x in src.elements() {
            for y in src.elements() {
                if map[src.join(x, y)] != dst.join(map[x], map[y]) {
                    return Err(LatticeError::NotJoinPreserving { x, y });
                }
                if !dst.leq(dst.mul(map[x], map[y]), map[src.mul(x, y)]) {
                    return Err(LatticeError::NotSubmultiplicative { x, y });
                }
            }
        }
        let adj: Vec<Elem> = dst
            .elements()
            .map(|y| src.lattice().join_all(src.elements().filter(|&x| dst.leq(map[x], y))))
            .collect();
        for x in src.elements() {
            for y in dst.elements() {
                assert_eq!(
                    dst.leq(map[x], y),
                    src.leq(x, adj[y]),
                    "adjunction fails at ({x}, {y}) for a join-preserving map"
                );
            }
        }
        Ok(Self { src, dst, map, adj })
    }

    pub fn identity(m: &'a MultLattice) -> Self {
        Self::new(m, m, m.elements().collect()).expect("identity is a morphism")
    }

    pub fn src(&self) -> &'a MultLattice {
        self.src
    }

    pub fn dst(&self) -> &'a MultLattice {
        self.dst
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn adj(&self) -> &[Elem] {
        &self.adj
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn right_adjoint(&self, y: Elem) -> Elem {
        self.adj[y]
    }
}
