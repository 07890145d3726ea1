//! Dispatch from commands to the library, producing JSON reports.

use mlat_core::audit::audit;
use mlat_core::brace::{brace_lattice, lambda_action, socle, ybe_solution, SkewBrace, DEFAULT_BRACE_BOUND};
use mlat_core::group::{classify_group, normal_mult_lattice, GroupMult, DEFAULT_GROUP_BOUND};
use mlat_core::lattice::{Elem, MultLattice, StandardMult};
use mlat_core::rng::{circle_and_radical, ideal_lattice, RngMult, DEFAULT_RNG_BOUND};
use mlat_core::series::{annihilators, classify, hyperabelian_report, series, upper_central_series, SeriesTrace};
use mlat_core::spectrum::{check_sober, classify_elements, enough_primes, galois, zariski};
use mlat_core::{ElemSet, Falsification};
use serde_json::{json, Map, Value};

use crate::doc::{Structure, StructureDoc};
use crate::{dot, text, CliError, Command, MultChoice, OutFormat, Options};

/// Rendered output and the number of falsified checks behind it.
#[derive(Debug, Clone)]
pub struct Output {
    pub body: String,
    pub falsifications: usize,
}

/// A structure together with its multiplicative lattice.
struct Built {
    doc_name: String,
    kind: &'static str,
    structure: Structure,
    lattice: MultLattice,
    /// For lattices of subsets: the carrier labels of each member.
    members: Option<Vec<ElemSet>>,
    mult: MultChoice,
}

fn kind_name(s: &Structure) -> &'static str {
    match s {
        Structure::Group(_) => "group",
        Structure::Rng(_) => "rng",
        Structure::Brace(_) => "brace",
        Structure::Lattice(_) => "lattice",
    }
}

fn conflict(mult: MultChoice, kind: &str) -> CliError {
    CliError::FlagConflict(format!("--mult={} does not apply to a {kind}", mult.name()))
}

fn build(doc: &StructureDoc, opts: &Options) -> Result<Built, CliError> {
    let structure = doc.build()?;
    let kind = kind_name(&structure);
    let fail = |e: &dyn std::fmt::Display| CliError::Precondition(e.to_string());
    let standard = |m: MultLattice, mult: MultChoice| match mult {
        MultChoice::Intersection => MultLattice::with_standard(m.lattice().clone(), StandardMult::Meet),
        MultChoice::Zero => MultLattice::with_standard(m.lattice().clone(), StandardMult::Zero),
        _ => m,
    };
    let (lattice, members, mult) = match &structure {
        Structure::Group(g) => {
            let mult = opts.mult.unwrap_or(MultChoice::Commutator);
            let gm = match mult {
                MultChoice::Commutator => GroupMult::Commutator,
                MultChoice::Intersection => GroupMult::Intersection,
                MultChoice::Zero => GroupMult::Zero,
                other => return Err(conflict(other, kind)),
            };
            let l = normal_mult_lattice(g, gm, None, opts.bound.unwrap_or(DEFAULT_GROUP_BOUND)).map_err(|e| fail(&e))?;
            (l.lattice, Some(l.members), mult)
        }
        Structure::Rng(r) => {
            let mult = opts.mult.unwrap_or(MultChoice::Product);
            let rm = match mult {
                MultChoice::Product => RngMult::Product,
                MultChoice::Intersection => RngMult::Intersection,
                MultChoice::Zero => RngMult::Zero,
                MultChoice::RingCommutator => RngMult::RingCommutator,
                other => return Err(conflict(other, kind)),
            };
            let l = ideal_lattice(r, rm, opts.bound.unwrap_or(DEFAULT_RNG_BOUND)).map_err(|e| fail(&e))?;
            (l.lattice, Some(l.members), mult)
        }
        Structure::Brace(b) => {
            let mult = opts.mult.unwrap_or(MultChoice::Product);
            if matches!(mult, MultChoice::Commutator | MultChoice::RingCommutator) {
                return Err(conflict(mult, kind));
            }
            let l = brace_lattice(b, opts.bound.unwrap_or(DEFAULT_BRACE_BOUND)).map_err(|e| fail(&e))?;
            (standard(l.lattice, mult), Some(l.members), mult)
        }
        Structure::Lattice(m) => {
            let mult = opts.mult.unwrap_or(MultChoice::Product);
            if !matches!(mult, MultChoice::Product | MultChoice::Intersection | MultChoice::Zero) {
                return Err(conflict(mult, kind));
            }
            (standard(m.clone(), mult), None, mult)
        }
    };
    Ok(Built {
        doc_name: doc.name.clone(),
        kind,
        structure,
        lattice,
        members,
        mult,
    })
}

fn carrier_labels(s: &Structure) -> Vec<String> {
    match s {
        Structure::Group(g) => g.labels().to_vec(),
        Structure::Rng(r) => r.labels().to_vec(),
        Structure::Brace(b) => b.labels().to_vec(),
        Structure::Lattice(m) => m.labels().to_vec(),
    }
}

fn names(m: &MultLattice, xs: impl IntoIterator<Item = Elem>) -> Value {
    Value::from(xs.into_iter().map(|x| m.label(x).to_string()).collect::<Vec<_>>())
}

fn opt_name(m: &MultLattice, x: Option<Elem>) -> Value {
    x.map_or(Value::Null, |x| Value::from(m.label(x)))
}

fn trace(m: &MultLattice, t: &SeriesTrace) -> Value {
    json!({
        "terms": names(m, t.terms.iter().copied()),
        "stabilized": t.stabilized,
        "reached": m.label(t.reached),
    })
}

fn falsifications_value(fs: &[Falsification]) -> Value {
    serde_json::to_value(fs).expect("falsifications serialize")
}

/// Collects falsifications while building a report.
#[derive(Default)]
struct Sink(Vec<Falsification>);

impl Sink {
    fn take(&mut self, fs: &[Falsification]) {
        self.0.extend_from_slice(fs);
    }
}

fn selected(b: &Built, opts: &Options) -> Result<Vec<Elem>, CliError> {
    match &opts.element {
        Some(label) => b
            .lattice
            .lattice()
            .find_label(label)
            .map(|x| vec![x])
            .ok_or_else(|| CliError::UnknownElement(label.clone())),
        None => Ok(b.lattice.elements().collect()),
    }
}

fn lattice_section(b: &Built) -> Value {
    let m = &b.lattice;
    let mut out = Map::new();
    out.insert("size".into(), m.size().into());
    out.insert("labels".into(), names(m, m.elements()));
    out.insert("bottom".into(), m.label(m.bottom()).into());
    out.insert("top".into(), m.label(m.top()).into());
    out.insert(
        "covers".into(),
        Value::from(
            m.lattice()
                .covers()
                .into_iter()
                .map(|(hi, lo)| vec![m.label(hi).to_string(), m.label(lo).to_string()])
                .collect::<Vec<_>>(),
        ),
    );
    let table: Vec<Vec<String>> = m
        .elements()
        .map(|x| m.elements().map(|y| m.label(m.mul(x, y)).to_string()).collect())
        .collect();
    out.insert("mul".into(), table.into());
    out.insert("laws".into(), serde_json::to_value(m.law_report()).expect("laws serialize"));
    if let Some(members) = &b.members {
        let carrier = carrier_labels(&b.structure);
        let mut mm = Map::new();
        for (x, set) in members.iter().enumerate() {
            let elems: Vec<String> = set.iter().map(|i| carrier[i].clone()).collect();
            mm.insert(m.label(x).to_string(), elems.into());
        }
        out.insert("members".into(), Value::Object(mm));
    }
    Value::Object(out)
}

fn spec_section(m: &MultLattice, sink: &mut Sink) -> Value {
    let t = zariski(m);
    let sober = check_sober(&t);
    let g = galois(m);
    sink.take(&t.falsifications);
    sink.take(&g.falsifications);
    if !sober.sober {
        sink.take(&[Falsification::new("Spec is sober", format!("{:?}", sober.witness))]);
    }
    let v_of: Map<String, Value> = m
        .elements()
        .map(|x| (m.label(x).to_string(), names(m, t.v_of[x].iter())))
        .collect();
    let c = classify_elements(m);
    json!({
        "primes": names(m, t.spec.iter().copied()),
        "closed_sets": t.closed_sets.iter().map(|s| names(m, s.iter())).collect::<Vec<_>>(),
        "v_of": v_of,
        "sober": sober.sober,
        "sober_witness": sober.witness.map(|w| names(m, w.iter())),
        "semiprimes": names(m, c.semiprimes()),
        "iv_fixed": names(m, g.iv_fixed.iter().copied()),
        "rad_distributive": g.rad_distributive,
        "enough_primes": serde_json::to_value(enough_primes(m)).expect("flags serialize"),
        "m_distributive": m.is_m_distributive(),
    })
}

fn classify_section(b: &Built, elems: &[Elem], sink: &mut Sink) -> Value {
    let m = &b.lattice;
    let c = classify_elements(m);
    let per: Vec<Value> = elems
        .iter()
        .map(|&x| {
            let k = classify(m, x);
            json!({
                "label": m.label(x),
                "prime": c.prime[x],
                "semiprime": c.semiprime[x],
                "meet_irreducible": c.meet_irreducible[x],
                "idempotent": c.idempotent[x],
                "abelian": c.abelian[x],
                "left_nilpotent": k.left_nilpotent,
                "right_nilpotent": k.right_nilpotent,
                "solvable": k.solvable,
                "derived": m.label(k.derived_element),
            })
        })
        .collect();
    let mut out = Map::new();
    out.insert("elements".into(), per.into());
    match &b.structure {
        Structure::Group(g) if b.mult == MultChoice::Commutator => {
            if let Ok(gc) = classify_group(g, usize::MAX) {
                if !gc.lattice_agrees {
                    sink.take(&[Falsification::new("group verdicts match the commutator lattice", format!("{gc:?}"))]);
                }
                out.insert("group".into(), serde_json::to_value(gc).expect("flags serialize"));
            }
        }
        Structure::Rng(r) => {
            let c = circle_and_radical(r);
            sink.take(&c.falsifications);
            let jac: Vec<&str> = c.jacobson.iter().map(|x| r.label(x)).collect();
            out.insert("rng".into(), json!({ "jacobson": jac, "radical_ring": c.is_radical_ring }));
        }
        Structure::Brace(a) => {
            let l = lambda_action(a);
            sink.take(&l.falsifications);
            out.insert("brace".into(), json!({ "lambda": lambda_value(a, &l.action.gens) }));
        }
        _ => {}
    }
    Value::Object(out)
}

fn lambda_value(a: &SkewBrace, perms: &[Vec<usize>]) -> Value {
    let map: Map<String, Value> = perms
        .iter()
        .enumerate()
        .map(|(x, p)| {
            let images: Vec<&str> = p.iter().map(|&y| a.label(y)).collect();
            (a.label(x).to_string(), images.into())
        })
        .collect();
    Value::Object(map)
}

fn series_section(m: &MultLattice, elems: &[Elem]) -> Value {
    let per: Vec<Value> = elems
        .iter()
        .map(|&x| {
            let s = series(m, x);
            let ann = annihilators(m, x);
            json!({
                "label": m.label(x),
                "lcs_left": trace(m, &s.lcs_left),
                "lcs_right": trace(m, &s.lcs_right),
                "derived": trace(m, &s.derived),
                "r_ann": opt_name(m, ann.r_ann),
                "l_ann": opt_name(m, ann.l_ann),
                "r_center": opt_name(m, ann.r_center),
                "l_center": opt_name(m, ann.l_center),
            })
        })
        .collect();
    let u = upper_central_series(m);
    json!({
        "elements": per,
        "upper_central": {
            "terms": names(m, u.trace.terms.iter().copied()),
            "undefined_at": u.undefined_at,
            "hypercenter": opt_name(m, u.hypercenter),
            "hypercentral": u.hypercentral,
        },
    })
}

fn hyperabelian_section(m: &MultLattice, sink: &mut Sink) -> Result<Value, CliError> {
    let h = hyperabelian_report(m).map_err(|e| CliError::Precondition(e.to_string()))?;
    sink.take(&h.falsifications);
    let witnesses: Vec<Vec<&str>> = h.cond_b_witnesses.iter().map(|&(x, y)| vec![m.label(x), m.label(y)]).collect();
    Ok(json!({
        "cond_a": h.cond_a,
        "cond_b": h.cond_b,
        "cond_c": h.cond_c,
        "cond_d": h.cond_d,
        "cond_e": h.cond_e,
        "cond_f": h.cond_f,
        "agree": h.agree,
        "hyperabelian": h.cond_a && h.agree,
        "cond_b_witnesses": witnesses,
        "chain_witness": h.chain_witness.map(|c| names(m, c)),
        "spec_size": h.spec_size,
        "cond_f_exhaustive": h.cond_f_exhaustive,
    }))
}

fn ybe_section(a: &SkewBrace, full_table: bool, sink: &mut Sink) -> Value {
    let y = ybe_solution(a);
    sink.take(&y.falsifications);
    let mut out = Map::new();
    out.insert("bijective".into(), y.bijective.into());
    out.insert("braid_holds".into(), y.braid_holds.into());
    out.insert("involutive".into(), y.involutive.into());
    if full_table {
        let n = a.order();
        let r: Vec<Value> = y
            .r
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| json!([[a.label(i / n), a.label(i % n)], [a.label(u), a.label(v)]]))
            .collect();
        out.insert("r".into(), r.into());
    }
    Value::Object(out)
}

fn brace_of(b: &Built) -> Result<&SkewBrace, CliError> {
    match &b.structure {
        Structure::Brace(a) => Ok(a),
        _ => Err(CliError::FlagConflict(format!("brace-ybe needs a brace, not a {}", b.kind))),
    }
}

fn header(b: &Built) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("name".into(), b.doc_name.clone().into());
    out.insert("kind".into(), b.kind.into());
    out.insert("mult".into(), b.mult.name().into());
    out
}

/// Runs `cmd` on a parsed structure file.
pub fn run(doc: &StructureDoc, cmd: Command, opts: &Options) -> Result<Output, CliError> {
    if cmd == Command::Validate {
        let s = doc.build()?;
        let v = json!({ "name": doc.name, "kind": kind_name(&s), "n": doc.n, "valid": true });
        return Ok(render(v, 0, opts.out));
    }
    let b = build(doc, opts)?;
    let m = &b.lattice;
    if cmd == Command::Dot || opts.out == OutFormat::Dot {
        let mut body = dot::hasse(&b.doc_name, m);
        if opts.spec {
            body.push_str(&dot::specialization(&b.doc_name, m));
        }
        return Ok(Output { body, falsifications: 0 });
    }
    let mut sink = Sink::default();
    let mut out = header(&b);
    match cmd {
        Command::Lattice => {
            out.insert("lattice".into(), lattice_section(&b));
        }
        Command::Spec => {
            out.insert("spectrum".into(), spec_section(m, &mut sink));
        }
        Command::Classify => {
            let elems = selected(&b, opts)?;
            out.insert("classification".into(), classify_section(&b, &elems, &mut sink));
        }
        Command::Series => {
            let elems = selected(&b, opts)?;
            out.insert("series".into(), series_section(m, &elems));
        }
        Command::Hyperabelian => {
            out.insert("hyperabelian".into(), hyperabelian_section(m, &mut sink)?);
        }
        Command::BraceYbe => {
            let a = brace_of(&b)?;
            out.insert("ybe".into(), ybe_section(a, true, &mut sink));
        }
        Command::Report => {
            let elems = selected(&b, opts)?;
            out.insert("lattice".into(), lattice_section(&b));
            out.insert("spectrum".into(), spec_section(m, &mut sink));
            out.insert("classification".into(), classify_section(&b, &elems, &mut sink));
            out.insert("series".into(), series_section(m, &elems));
            let hyper = if m.is_m_distributive() {
                hyperabelian_section(m, &mut sink)?
            } else {
                Value::Null
            };
            out.insert("hyperabelian".into(), hyper);
            if let Structure::Brace(a) = &b.structure {
                let soc = socle(a, opts.bound.unwrap_or(DEFAULT_BRACE_BOUND))
                    .ok()
                    .map(|s| s.iter().map(|x| a.label(x).to_string()).collect::<Vec<_>>());
                out.insert("brace".into(), json!({ "ybe": ybe_section(a, false, &mut sink), "socle": soc }));
            }
            let a = audit(m);
            sink.take(&a.falsifications);
            let mut av = serde_json::to_value(&a).expect("audit serializes");
            if let Value::Object(o) = &mut av {
                o.remove("falsifications");
            }
            out.insert("audit".into(), av);
        }
        Command::Validate | Command::Dot => unreachable!("handled above"),
    }
    dedup(&mut sink.0);
    let count = sink.0.len();
    out.insert("falsifications".into(), falsifications_value(&sink.0));
    Ok(render(Value::Object(out), count, opts.out))
}

fn dedup(fs: &mut Vec<Falsification>) {
    let mut seen = std::collections::BTreeSet::new();
    fs.retain(|f| seen.insert((f.property.clone(), f.witness.clone())));
}

fn render(v: Value, falsifications: usize, out: OutFormat) -> Output {
    let body = match out {
        OutFormat::Text => text::render(&v),
        _ => serde_json::to_string_pretty(&v).expect("values serialize") + "\n",
    };
    Output { body, falsifications }
}
