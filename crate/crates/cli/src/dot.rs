//! Graphviz output for lattices and spectra.

use mlat_core::spectrum::{prime_spectrum, zariski};
use mlat_core::MultLattice;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn graph_name(name: &str, suffix: &str) -> String {
    if name.is_empty() {
        quote(suffix)
    } else {
        quote(&format!("{name}_{suffix}"))
    }
}

/// Hasse diagram, edges pointing from each element to the ones it covers.
/// Primes get a double outline.
pub fn hasse(name: &str, m: &MultLattice) -> String {
    let primes = prime_spectrum(m);
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=ellipse];\n", graph_name(name, "lattice"));
    for x in m.elements() {
        let extra = if primes.contains(&x) { ", peripheries=2" } else { "" };
        out.push_str(&format!("  n{x} [label={}{extra}];\n", quote(m.label(x))));
    }
    for (hi, lo) in m.lattice().covers() {
        out.push_str(&format!("  n{hi} -> n{lo} [dir=back];\n"));
    }
    out.push_str("}\n");
    out
}

/// Specialization order on the primes: an edge `p -> q` when `q` lies in
/// the closure of `p`, that is `p ≤ q`.
pub fn specialization(name: &str, m: &MultLattice) -> String {
    let t = zariski(m);
    let mut out = format!("digraph {} {{\n", graph_name(name, "spec"));
    for &p in &t.spec {
        out.push_str(&format!("  p{p} [label={}];\n", quote(m.label(p))));
    }
    for &p in &t.spec {
        for &q in &t.spec {
            if p != q && m.leq(p, q) && !t.spec.iter().any(|&r| r != p && r != q && m.leq(p, r) && m.leq(r, q)) {
                out.push_str(&format!("  p{p} -> p{q};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mlat_core::lattice::{chain_mult_lattice, ChainKind};

    #[test]
    fn chain_has_covers_and_marked_primes() {
        let m = chain_mult_lattice(3, ChainKind::Meet);
        let d = hasse("c", &m);
        assert!(d.starts_with("digraph \"c_lattice\""));
        assert_eq!(d.matches("->").count(), 2);
        assert_eq!(d.matches("peripheries=2").count(), prime_spectrum(&m).len());
        let s = specialization("c", &m);
        assert_eq!(s.matches("->").count(), prime_spectrum(&m).len().saturating_sub(1));
    }
}
