//! Finite multiplicative lattices.
//!
//! A multiplicative lattice is a complete lattice with a multiplication
//! `x·y ≤ x ∧ y`. This crate builds such lattices from finite groups
//! (normal subgroups under the commutator), rngs (ideals under the product)
//! and skew braces (ideals under the brace product), and computes prime
//! spectra, central and derived series, annihilators and the hyperabelian
//! conditions on them.

pub mod audit;
pub mod bitset;
pub mod brace;
pub mod catalog;
pub mod check;
pub mod group;
pub mod lattice;
pub mod rng;
pub mod series;
pub mod spectrum;

pub use bitset::ElemSet;
pub use check::Falsification;
pub use lattice::{Elem, FinLattice, LatticeError, LatticeMorphism, MultLattice};
