use mlat_core::audit::audit;
use mlat_core::brace::{brace_ideals, brace_lattice, generated_ideal, socle, ybe_solution, SkewBrace};
use mlat_core::catalog::{battery, braces, groups, rngs};
use mlat_core::group::{classify_group, normal_mult_lattice, FinGroup, GroupMult};
use mlat_core::rng::{circle_and_radical, ideal_lattice, RngMult};
use mlat_core::series::{hyperabelian_report, upper_central_series};
use mlat_core::spectrum::prime_spectrum;
use mlat_core::ElemSet;

#[test]
fn every_battery_lattice_passes_the_audit() {
    for (name, m) in battery() {
        let a = audit(&m);
        assert!(a.passed(), "{name}: {:?}", a.falsifications);
        assert!(a.primes_irreducible_semiprime && a.v_laws && a.sober, "{name}");
        if a.m_distributive {
            assert_eq!(a.prime_iff_irreducible_semiprime, Some(true), "{name}");
            assert_eq!(a.semiprimes_are_prime_meets, Some(true), "{name}");
            assert_eq!(a.hyperabelian_agree, Some(true), "{name}");
        }
    }
}

#[test]
fn group_lattices_are_modular_commutative_and_m_distributive() {
    for (name, g) in groups() {
        let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).unwrap().lattice;
        let laws = n.law_report();
        assert!(n.lattice().is_modular(), "{name}");
        assert!(laws.commutative && laws.m_distributive, "{name}");
    }
}

#[test]
fn group_correspondence() {
    let expected = [
        ("c2", true, true, false),
        ("c4", true, true, false),
        ("c2xc2", true, true, false),
        ("s3", false, true, false),
        ("d4", true, true, false),
        ("q8", true, true, false),
        ("a4", false, true, false),
        ("s4", false, true, false),
        ("a5", false, false, true),
    ];
    for ((name, g), (ename, nilpotent, solvable, perfect)) in groups().into_iter().zip(expected) {
        assert_eq!(name, ename);
        let c = classify_group(&g, 128).unwrap();
        assert!(c.lattice_agrees, "{name}");
        assert_eq!((c.nilpotent, c.solvable, c.perfect), (nilpotent, solvable, perfect), "{name}");

        let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).unwrap().lattice;
        let h = hyperabelian_report(&n).unwrap();
        assert_eq!(h.cond_d, solvable, "{name}");
        assert!(h.agree, "{name}");
        if !solvable {
            assert_eq!(prime_spectrum(&n), vec![n.bottom()], "{name}");
        }
    }
}

#[test]
fn upper_central_series_reaches_top_exactly_for_nilpotent_groups() {
    for (name, g) in groups() {
        let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).unwrap().lattice;
        let nilpotent = classify_group(&g, 128).unwrap().nilpotent;
        assert_eq!(upper_central_series(&n).hypercentral, nilpotent, "{name}");
    }
}

#[test]
fn dvr_truncation_prime_counts() {
    use mlat_core::lattice::{chain_mult_lattice, ChainKind};
    assert_eq!(prime_spectrum(&chain_mult_lattice(4, ChainKind::Dvr)).len(), 1);
    assert_eq!(prime_spectrum(&chain_mult_lattice(4, ChainKind::Meet)).len(), 3);
    assert_eq!(prime_spectrum(&chain_mult_lattice(4, ChainKind::Zero)).len(), 0);
}

#[test]
fn rng_ideal_lattices_are_associative_and_m_distributive() {
    for (name, r) in rngs() {
        let laws = ideal_lattice(&r, RngMult::Product, 64).unwrap().lattice.law_report();
        assert!(laws.associative && laws.m_distributive, "{name}");
        let c = circle_and_radical(&r);
        assert!(c.falsifications.is_empty(), "{name}");
        assert!((0..r.order()).all(|x| c.circle[r.zero()][x] == x && c.circle[x][r.zero()] == x));
    }
}

#[test]
fn brace_invariants() {
    for (name, b) in braces() {
        let y = ybe_solution(&b);
        assert!(y.bijective && y.braid_holds, "{name}");
        if name.starts_with("radical") {
            assert!(y.involutive, "{name}");
        }
        let ideals = brace_ideals(&b, 16).unwrap();
        assert!(ideals.falsifications.is_empty(), "{name}");
        let l = brace_lattice(&b, 16).unwrap();
        assert!(l.lattice.law_report().commutative, "{name}");
        for x in 0..b.order() {
            let s = ElemSet::singleton(x);
            let oracle = ideals
                .ideals
                .iter()
                .filter(|i| s.is_subset(i))
                .fold(b.whole(), |acc, i| acc.intersection(i));
            assert_eq!(generated_ideal(&b, &s), oracle, "{name}");
        }
    }
}

#[test]
fn trivial_braces_match_commutator_lattices() {
    for g in [FinGroup::cyclic(4), FinGroup::symmetric(3), FinGroup::quaternion()] {
        let b = brace_lattice(&SkewBrace::trivial(&g), 16).unwrap();
        let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).unwrap();
        assert_eq!(b.members, n.members);
        assert!(b.lattice.same_tables(&n.lattice));
    }
    let q8 = SkewBrace::trivial(&FinGroup::quaternion());
    let pm1: ElemSet = ["1", "-1"].iter().map(|l| q8.find_label(l).unwrap()).collect();
    assert_eq!(socle(&q8, 16).unwrap(), pm1);
}
