//! Acceptance criteria, one line per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use mlat_core::audit::audit;
use mlat_core::brace::{brace_ideals, brace_lattice, generated_ideal, lambda_action, socle, ybe_solution, SkewBrace};
use mlat_core::catalog::{battery, braces, groups, rngs};
use mlat_core::group::{classify_group, normal_mult_lattice, normal_subgroups, FinGroup, GroupMult};
use mlat_core::lattice::{chain_mult_lattice, ChainKind};
use mlat_core::rng::{circle_and_radical, ideal_lattice, FinRng, RngMult};
use mlat_core::series::hyperabelian_report;
use mlat_core::spectrum::{check_sober, galois, prime_spectrum, zariski};
use mlat_core::{ElemSet, MultLattice};

const BATTERY_MIN_SIZE: usize = 25;
const BATTERY_LIMIT: Duration = Duration::from_secs(10);
const GROUP_LIMIT: Duration = Duration::from_secs(5);
const BRACE_LIMIT: Duration = Duration::from_secs(5);
const SUBSET_ORACLE_MAX_ORDER: usize = 16;
const INFINITE_FORM_MAX_SIZE: usize = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn oracle_is_prime(m: &MultLattice, p: usize) -> bool {
    p != m.top()
        && m.elements().all(|x| m.elements().all(|y| !m.leq(m.mul(x, y), p) || m.leq(x, p) || m.leq(y, p)))
}

fn oracle_is_semiprime(m: &MultLattice, s: usize) -> bool {
    m.elements().all(|x| !m.leq(m.mul(x, x), s) || m.leq(x, s))
}

fn oracle_is_meet_irreducible(m: &MultLattice, x: usize) -> bool {
    x != m.top() && m.elements().all(|y| m.elements().all(|z| m.meet(y, z) != x || y == x || z == x))
}

fn oracle_v(m: &MultLattice, primes: &[usize], x: usize) -> ElemSet {
    primes.iter().copied().filter(|&p| m.leq(x, p)).collect()
}

fn battery_instance(name: &str, m: &MultLattice) -> Result<(), String> {
    let primes: Vec<usize> = m.elements().filter(|&p| oracle_is_prime(m, p)).collect();
    ensure(prime_spectrum(m) == primes, || format!("{name}: prime set differs from oracle"))?;
    for &p in &primes {
        ensure(oracle_is_meet_irreducible(m, p) && oracle_is_semiprime(m, p), || {
            format!("{name}: prime {} is not meet-irreducible and semiprime", m.label(p))
        })?;
    }
    let md = m.is_m_distributive();
    if md {
        for x in m.elements().filter(|&x| x != m.top()) {
            let both = oracle_is_meet_irreducible(m, x) && oracle_is_semiprime(m, x);
            ensure(both == primes.contains(&x), || format!("{name}: biconditional fails at {}", m.label(x)))?;
        }
        for x in m.elements() {
            let ivx = m.lattice().meet_all(oracle_v(m, &primes, x).iter());
            ensure(oracle_is_semiprime(m, x) == (ivx == x), || format!("{name}: semiprime vs I(V) at {}", m.label(x)))?;
        }
        ensure(galois(m).matches_semiprimes, || format!("{name}: library semiprime characterization"))?;
    }
    let t = zariski(m);
    for x in m.elements() {
        ensure(t.v_of[x] == oracle_v(m, &primes, x), || format!("{name}: V({}) differs", m.label(x)))?;
        for y in m.elements() {
            let vx = oracle_v(m, &primes, x);
            let vy = oracle_v(m, &primes, y);
            ensure(oracle_v(m, &primes, m.mul(x, y)) == vx.union(&vy), || format!("{name}: V(xy) at {x},{y}"))?;
            ensure(oracle_v(m, &primes, m.join(x, y)) == vx.intersection(&vy), || format!("{name}: V(x∨y) at {x},{y}"))?;
        }
    }
    if md {
        let h = hyperabelian_report(m).map_err(|e| format!("{name}: {e}"))?;
        ensure(h.agree, || format!("{name}: hyperabelian conditions disagree"))?;
        ensure(h.cond_a == primes.is_empty(), || format!("{name}: empty-spectrum condition"))?;
    }
    ensure(check_sober(&t).sober, || format!("{name}: spectrum not sober"))?;
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let all = battery();
    ensure(all.len() >= BATTERY_MIN_SIZE, || format!("only {} instances", all.len()))?;
    for (name, m) in &all {
        battery_instance(name, m)?;
    }
    Ok(format!("{} instances, {}", all.len(), within(start, BATTERY_LIMIT)?))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    // (nilpotent, solvable, perfect)
    let expected = [
        ("c4", (true, true, false)),
        ("s3", (false, true, false)),
        ("d4", (true, true, false)),
        ("q8", (true, true, false)),
        ("a4", (false, true, false)),
        ("s4", (false, true, false)),
        ("a5", (false, false, true)),
    ];
    let catalog = groups();
    for (name, flags) in expected {
        let g = &catalog.iter().find(|(n, _)| *n == name).ok_or(format!("{name} missing"))?.1;
        let c = classify_group(g, 128).map_err(|e| e.to_string())?;
        ensure(c.lattice_agrees, || format!("{name}: lattice route disagrees with direct oracle"))?;
        ensure((c.nilpotent, c.solvable, c.perfect) == flags, || format!("{name}: got {c:?}"))?;
    }
    for (name, g) in &catalog {
        let c = classify_group(g, 128).map_err(|e| e.to_string())?;
        let n = normal_mult_lattice(g, GroupMult::Commutator, None, 128).map_err(|e| e.to_string())?.lattice;
        let spec = prime_spectrum(&n);
        if c.solvable {
            let h = hyperabelian_report(&n).map_err(|e| e.to_string())?;
            ensure(h.cond_a && h.agree && spec.is_empty(), || format!("{name}: solvable but not hyperabelian"))?;
        }
        if *name == "a5" {
            ensure(spec == vec![n.bottom()], || format!("a5: Spec = {spec:?}"))?;
        }
    }
    within(start, GROUP_LIMIT)
}

fn criterion_3() -> Outcome {
    let count = |kind| prime_spectrum(&chain_mult_lattice(4, kind)).len();
    let got = (count(ChainKind::Dvr), count(ChainKind::Meet), count(ChainKind::Zero));
    ensure(got == (1, 3, 0), || format!("prime counts {got:?}"))?;
    Ok("1 / 3 / 0 primes".into())
}

fn braid_holds(a: &SkewBrace, r: &[(usize, usize)]) -> bool {
    let n = a.order();
    let rr = |x: usize, y: usize| r[x * n + y];
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                // (r × id)(id × r)(r × id)
                let (a1, b1) = rr(x, y);
                let (b2, c2) = rr(b1, z);
                let (a3, b3) = rr(a1, b2);
                let lhs = (a3, b3, c2);
                // (id × r)(r × id)(id × r)
                let (y1, z1) = rr(y, z);
                let (x2, y2) = rr(x, y1);
                let (y3, z3) = rr(y2, z1);
                lhs == (x2, y3, z3)
            })
        })
    })
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let radical = SkewBrace::from_radical_rng(&FinRng::multiples(2, 8)).map_err(|e| e.to_string())?;
    let mut suite: Vec<(String, SkewBrace)> = [
        ("C2", FinGroup::cyclic(2)),
        ("C4", FinGroup::cyclic(4)),
        ("S3", FinGroup::symmetric(3)),
        ("Q8", FinGroup::quaternion()),
    ]
    .into_iter()
    .map(|(n, g)| (format!("trivial {n}"), SkewBrace::trivial(&g)))
    .collect();
    suite.push(("radical 2Z/8".into(), radical));
    for (name, a) in &suite {
        let y = ybe_solution(a);
        ensure(braid_holds(a, &y.r) && y.braid_holds, || format!("{name}: braid relation fails"))?;
        if name.starts_with("radical") {
            let n = a.order();
            let involutive = (0..n * n).all(|i| {
                let (u, v) = y.r[i];
                let (p, q) = y.r[u * n + v];
                p * n + q == i
            });
            ensure(involutive && y.involutive, || format!("{name}: r∘r is not the identity"))?;
        }
    }
    for (name, g) in [("C4", FinGroup::cyclic(4)), ("S3", FinGroup::symmetric(3)), ("Q8", FinGroup::quaternion())] {
        let b = brace_lattice(&SkewBrace::trivial(&g), 16).map_err(|e| e.to_string())?;
        let n = normal_mult_lattice(&g, GroupMult::Commutator, None, 128).map_err(|e| e.to_string())?;
        ensure(b.members == n.members && b.lattice.same_tables(&n.lattice), || {
            format!("{name}: brace lattice differs from commutator lattice")
        })?;
    }
    let q8 = SkewBrace::trivial(&FinGroup::quaternion());
    let pm1: ElemSet = ["1", "-1"].iter().filter_map(|l| q8.find_label(l)).collect();
    let soc = socle(&q8, 16).map_err(|e| e.to_string())?;
    ensure(pm1.len() == 2 && soc == pm1, || format!("socle of trivial Q8 is {soc:?}"))?;
    within(start, BRACE_LIMIT)
}

fn criterion_5() -> Outcome {
    let z6 = circle_and_radical(&FinRng::zn(6));
    ensure(z6.jacobson == FinRng::zn(6).zero_ideal(), || "J(Z/6) is not 0".into())?;
    let r = FinRng::multiples(2, 8);
    let c = circle_and_radical(&r);
    ensure(c.jacobson == r.whole(), || "J(2Z/8) is not 2Z/8".into())?;
    ensure(c.is_radical_ring, || "2Z/8 is not a radical ring".into())?;
    for (name, r) in rngs() {
        let c = circle_and_radical(&r);
        let z = r.zero();
        let identity = (0..r.order()).all(|x| c.circle[z][x] == x && c.circle[x][z] == x);
        ensure(identity, || format!("{name}: 0 is not the circle identity"))?;
        ensure(c.falsifications.is_empty(), || format!("{name}: {:?}", c.falsifications))?;
    }
    Ok("exact".into())
}

fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}

fn closed(s: &ElemSet, op: impl Fn(usize, usize) -> usize) -> bool {
    s.iter().all(|a| s.iter().all(|b| s.contains(op(a, b))))
}

fn normal_in(s: &ElemSet, n: usize, op: impl Fn(usize, usize) -> usize, inv: impl Fn(usize) -> usize) -> bool {
    !s.is_empty() && closed(s, &op) && (0..n).all(|g| s.iter().all(|x| s.contains(op(op(g, x), inv(g)))))
}

fn normal_subgroup_oracle(g: &FinGroup) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = all_subsets(g.order()).filter(|s| normal_in(s, g.order(), |a, b| g.op(a, b), |a| g.inv(a))).collect();
    out.sort();
    out
}

/// Normal in both groups and closed under every λ_a.
fn brace_ideal_oracle(a: &SkewBrace) -> Vec<ElemSet> {
    let n = a.order();
    all_subsets(n)
        .filter(|s| {
            normal_in(s, n, |x, y| a.star(x, y), |x| a.star_inv(x))
                && normal_in(s, n, |x, y| a.circ(x, y), |x| a.circ_inv(x))
                && (0..n).all(|x| s.iter().all(|y| s.contains(a.lambda(x, y))))
        })
        .collect()
}

fn infinite_m_distributive(m: &MultLattice) -> bool {
    let subsets: Vec<ElemSet> = all_subsets(m.size()).collect();
    let lat = m.lattice();
    subsets.iter().all(|s| {
        subsets.iter().all(|t| {
            let lhs = m.mul(lat.join_all(s.iter()), lat.join_all(t.iter()));
            lhs == lat.join_all(s.iter().flat_map(|x| t.iter().map(move |y| m.mul(x, y))))
        })
    })
}

fn criterion_6() -> Outcome {
    let mut gs: Vec<(String, FinGroup)> = groups().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    gs.push(("c2xd4".into(), FinGroup::direct_product(&FinGroup::cyclic(2), &FinGroup::dihedral(4))));
    gs.push(("d6".into(), FinGroup::dihedral(6)));
    let mut checked = 0;
    for (name, g) in gs.iter().filter(|(_, g)| g.order() <= SUBSET_ORACLE_MAX_ORDER) {
        let got = normal_subgroups(g, 128).map_err(|e| e.to_string())?;
        ensure(got == normal_subgroup_oracle(g), || format!("{name}: normal subgroups differ"))?;
        checked += 1;
    }
    for (name, a) in braces() {
        let oracle = brace_ideal_oracle(&a);
        let lib = brace_ideals(&a, 16).map_err(|e| e.to_string())?;
        let mut lib_sorted = lib.ideals.clone();
        lib_sorted.sort();
        ensure(lib_sorted == oracle, || format!("{name}: ideal set differs from oracle"))?;
        for s in all_subsets(a.order()) {
            let expect = oracle.iter().filter(|i| s.is_subset(i)).fold(a.whole(), |acc, i| acc.intersection(i));
            ensure(generated_ideal(&a, &s) == expect, || format!("{name}: generated ideal of {s:?}"))?;
        }
    }
    let mut small = 0;
    for (name, m) in battery().iter().filter(|(_, m)| m.size() <= INFINITE_FORM_MAX_SIZE) {
        ensure(m.is_m_distributive() == infinite_m_distributive(m), || format!("{name}: m-distributivity flag"))?;
        small += 1;
    }
    Ok(format!("{checked} groups, {} braces, {small} lattices", braces().len()))
}

fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn criterion_7() -> Outcome {
    let mut events = 0;
    for (_, m) in battery() {
        events += audit(&m).falsifications.len();
    }
    for (_, g) in groups() {
        events += usize::from(!classify_group(&g, 128).map_err(|e| e.to_string())?.lattice_agrees);
    }
    for (_, r) in rngs() {
        events += circle_and_radical(&r).falsifications.len();
        let l = ideal_lattice(&r, RngMult::Product, 64).map_err(|e| e.to_string())?;
        events += audit(&l.lattice).falsifications.len();
    }
    for (_, a) in braces() {
        events += ybe_solution(&a).falsifications.len();
        events += lambda_action(&a).falsifications.len();
        events += brace_ideals(&a, 16).map_err(|e| e.to_string())?.falsifications.len();
    }
    ensure(events == 0, || format!("{events} library falsification events"))?;

    let mut files: Vec<PathBuf> = std::fs::read_dir(catalog_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    ensure(!files.is_empty(), || "catalog directory is empty".into())?;
    for f in &files {
        let out = Command::new(env!("CARGO_BIN_EXE_mlat")).arg("report").arg(f).output().map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("{}: exit {:?}: {}", f.display(), out.status.code(), String::from_utf8_lossy(&out.stderr))
        })?;
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure(v["falsifications"].as_array().is_some_and(|a| a.is_empty()), || format!("{}: falsifications", f.display()))?;
    }
    Ok(format!("0 events, {} catalog files exit 0", files.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("theorem battery", criterion_1),
        ("group correspondence", criterion_2),
        ("truncated DVR prime counts", criterion_3),
        ("brace suite", criterion_4),
        ("rng suite", criterion_5),
        ("oracle equivalences", criterion_6),
        ("zero falsifications and clean catalog run", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS  {}. {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
