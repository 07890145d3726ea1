//! Named sample structures: groups, rngs, braces, and the battery of
//! multiplicative lattices built from them.

use crate::brace::{brace_lattice, SkewBrace, DEFAULT_BRACE_BOUND};
use crate::group::{normal_mult_lattice, FinGroup, GroupMult, DEFAULT_GROUP_BOUND};
use crate::lattice::{boolean_lattice, chain_mult_lattice, diamond, pentagon, ChainKind, MultLattice, StandardMult};
use crate::rng::{ideal_lattice, FinRng, RngMult, DEFAULT_RNG_BOUND};

pub fn groups() -> Vec<(&'static str, FinGroup)> {
    let c2 = FinGroup::cyclic(2);
    vec![
        ("c2", c2.clone()),
        ("c4", FinGroup::cyclic(4)),
        ("c2xc2", FinGroup::direct_product(&c2, &c2)),
        ("s3", FinGroup::symmetric(3)),
        ("d4", FinGroup::dihedral(4)),
        ("q8", FinGroup::quaternion()),
        ("a4", FinGroup::alternating(4)),
        ("s4", FinGroup::symmetric(4)),
        ("a5", FinGroup::alternating(5)),
    ]
}

pub fn rngs() -> Vec<(&'static str, FinRng)> {
    vec![
        ("z4", FinRng::zn(4)),
        ("z6", FinRng::zn(6)),
        ("z8", FinRng::zn(8)),
        ("2z8", FinRng::multiples(2, 8)),
    ]
}

pub fn braces() -> Vec<(&'static str, SkewBrace)> {
    vec![
        ("trivial_c2", SkewBrace::trivial(&FinGroup::cyclic(2))),
        ("trivial_c4", SkewBrace::trivial(&FinGroup::cyclic(4))),
        ("trivial_s3", SkewBrace::trivial(&FinGroup::symmetric(3))),
        ("trivial_q8", SkewBrace::trivial(&FinGroup::quaternion())),
        (
            "radical_2z8",
            SkewBrace::from_radical_rng(&FinRng::multiples(2, 8)).expect("2Z/8 is a radical ring"),
        ),
    ]
}

/// Chains, Boolean lattices, N5, M3, the commutator lattices of every
/// catalog group, the product ideal lattices of every catalog rng and the
/// ideal lattices of three braces.
pub fn battery() -> Vec<(String, MultLattice)> {
    let mut out = Vec::new();
    for (kind, tag) in [(ChainKind::Dvr, "dvr"), (ChainKind::Meet, "meet"), (ChainKind::Zero, "zero")] {
        for k in 2..=5 {
            out.push((format!("chain_{tag}_{k}"), chain_mult_lattice(k, kind)));
        }
    }
    for atoms in 2..=3 {
        for (kind, tag) in [(StandardMult::Meet, "meet"), (StandardMult::Zero, "zero")] {
            out.push((format!("boolean_{atoms}_{tag}"), MultLattice::with_standard(boolean_lattice(atoms), kind)));
        }
    }
    out.push(("n5_meet".into(), MultLattice::with_standard(pentagon(), StandardMult::Meet)));
    out.push(("m3_meet".into(), MultLattice::with_standard(diamond(), StandardMult::Meet)));
    for (name, g) in groups() {
        let l = normal_mult_lattice(&g, GroupMult::Commutator, None, DEFAULT_GROUP_BOUND).expect("catalog group within bound");
        out.push((format!("commutator_{name}"), l.lattice));
    }
    for (name, r) in rngs() {
        let l = ideal_lattice(&r, RngMult::Product, DEFAULT_RNG_BOUND).expect("catalog rng within bound");
        out.push((format!("ideals_{name}"), l.lattice));
    }
    for (name, b) in braces() {
        if ["trivial_s3", "trivial_q8", "radical_2z8"].contains(&name) {
            let l = brace_lattice(&b, DEFAULT_BRACE_BOUND).expect("catalog brace within bound");
            out.push((format!("brace_{name}"), l.lattice));
        }
    }
    out
}
