//! Structure files: a JSON object with `kind`, `name`, `n`, optional
//! `labels`, and integer matrices (`cayley`; `add` and `mul`; `circ` and
//! `star`; or `leq` and `mul`).

use std::fmt::Write as _;

use mlat_core::brace::SkewBrace;
use mlat_core::group::FinGroup;
use mlat_core::lattice::{attach_multiplication, build_lattice, BinOpTable, MultLattice};
use mlat_core::rng::FinRng;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Group,
    Rng,
    Brace,
    Lattice,
}

impl Kind {
    fn matrices(self) -> &'static [&'static str] {
        match self {
            Kind::Group => &["cayley"],
            Kind::Rng => &["add", "mul"],
            Kind::Brace => &["circ", "star"],
            Kind::Lattice => &["leq", "mul"],
        }
    }
}

type Matrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub kind: Kind,
    #[serde(default)]
    pub name: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Matrix>,
}

/// A validated structure.
#[derive(Debug, Clone)]
pub enum Structure {
    Group(FinGroup),
    Rng(FinRng),
    Brace(SkewBrace),
    Lattice(MultLattice),
}

impl StructureDoc {
    fn matrix(&self, field: &str) -> Option<&Matrix> {
        match field {
            "cayley" => self.cayley.as_ref(),
            "add" => self.add.as_ref(),
            "mul" => self.mul.as_ref(),
            "circ" => self.circ.as_ref(),
            "star" => self.star.as_ref(),
            "leq" => self.leq.as_ref(),
            _ => None,
        }
    }

    fn present(&self) -> impl Iterator<Item = &'static str> + '_ {
        ["cayley", "add", "mul", "circ", "star", "leq"]
            .into_iter()
            .filter(|f| self.matrix(f).is_some())
    }

    fn table(&self, field: &str) -> Vec<Vec<usize>> {
        self.matrix(field)
            .expect("checked by load_structure")
            .iter()
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    fn labels_vec(&self) -> Vec<String> {
        self.labels.clone().unwrap_or_default()
    }

    /// Delegates validation to the owning structure.
    pub fn build(&self) -> Result<Structure, CliError> {
        let invalid = |e: &dyn std::fmt::Display| CliError::Validation(e.to_string());
        let table = |field: &str| BinOpTable::from_rows(&self.table(field)).map_err(|e| invalid(&e));
        Ok(match self.kind {
            Kind::Group => Structure::Group(FinGroup::from_table(table("cayley")?, self.labels_vec()).map_err(|e| invalid(&e))?),
            Kind::Rng => Structure::Rng(FinRng::new(table("add")?, table("mul")?, self.labels_vec()).map_err(|e| invalid(&e))?),
            Kind::Brace => Structure::Brace(SkewBrace::new(table("circ")?, table("star")?, self.labels_vec()).map_err(|e| invalid(&e))?),
            Kind::Lattice => {
                let leq: Vec<Vec<bool>> = self.table("leq").iter().map(|r| r.iter().map(|&v| v == 1).collect()).collect();
                let lat = build_lattice(&leq, self.labels_vec()).map_err(|e| invalid(&e))?;
                Structure::Lattice(attach_multiplication(lat, &self.table("mul")).map_err(|e| invalid(&e))?)
            }
        })
    }

    /// Serializes with one matrix row per line, keys in a fixed order.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        let kind = serde_json::to_string(&self.kind).expect("enum serializes");
        let _ = writeln!(out, "  \"kind\": {kind},");
        let _ = writeln!(out, "  \"name\": {},", serde_json::to_string(&self.name).expect("string serializes"));
        if let Some(labels) = &self.labels {
            let _ = writeln!(out, "  \"labels\": {},", serde_json::to_string(labels).expect("strings serialize"));
        }
        let fields: Vec<&str> = self.present().collect();
        let _ = write!(out, "  \"n\": {}", self.n);
        for field in fields {
            let rows = self.matrix(field).expect("present");
            let _ = write!(out, ",\n  \"{field}\": [");
            for (i, row) in rows.iter().enumerate() {
                let sep = if i + 1 == rows.len() { "" } else { "," };
                let _ = write!(out, "\n    {}{sep}", serde_json::to_string(row).expect("ints serialize"));
            }
            out.push_str("\n  ]");
        }
        out.push_str("\n}\n");
        out
    }

    pub fn from_group(name: &str, g: &FinGroup) -> Self {
        Self {
            cayley: Some(matrix_of(g.order(), |x, y| g.op(x, y))),
            ..Self::empty(Kind::Group, name, g.order(), g.labels())
        }
    }

    pub fn from_rng(name: &str, r: &FinRng) -> Self {
        Self {
            add: Some(matrix_of(r.order(), |x, y| r.add(x, y))),
            mul: Some(matrix_of(r.order(), |x, y| r.mul(x, y))),
            ..Self::empty(Kind::Rng, name, r.order(), r.labels())
        }
    }

    pub fn from_brace(name: &str, b: &SkewBrace) -> Self {
        Self {
            circ: Some(matrix_of(b.order(), |x, y| b.circ(x, y))),
            star: Some(matrix_of(b.order(), |x, y| b.star(x, y))),
            ..Self::empty(Kind::Brace, name, b.order(), b.labels())
        }
    }

    pub fn from_lattice(name: &str, m: &MultLattice) -> Self {
        Self {
            leq: Some(matrix_of(m.size(), |x, y| m.leq(x, y) as usize)),
            mul: Some(matrix_of(m.size(), |x, y| m.mul(x, y))),
            ..Self::empty(Kind::Lattice, name, m.size(), m.labels())
        }
    }

    fn empty(kind: Kind, name: &str, n: usize, labels: &[String]) -> Self {
        Self {
            kind,
            name: name.to_string(),
            n,
            labels: Some(labels.to_vec()),
            cayley: None,
            add: None,
            mul: None,
            circ: None,
            star: None,
            leq: None,
        }
    }
}

fn matrix_of(n: usize, f: impl Fn(usize, usize) -> usize) -> Matrix {
    (0..n).map(|x| (0..n).map(|y| f(x, y) as i64).collect()).collect()
}

/// Parses and shape-checks a structure file. Kind-specific axioms are
/// checked later by [`StructureDoc::build`].
pub fn load_structure(text: &str) -> Result<StructureDoc, CliError> {
    let doc: StructureDoc = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    let n = doc.n;
    let key_line = |field: &str| line_of(text, key_offset(text, field).unwrap_or(0));
    if n == 0 {
        return Err(CliError::Parse {
            line: key_line("n"),
            reason: "n must be positive".into(),
        });
    }
    if let Some(labels) = &doc.labels {
        if labels.len() != n {
            return Err(CliError::Parse {
                line: key_line("labels"),
                reason: format!("{} labels for n = {n}", labels.len()),
            });
        }
    }
    let wanted = doc.kind.matrices();
    for field in wanted {
        if doc.matrix(field).is_none() {
            return Err(CliError::Parse {
                line: 1,
                reason: format!("missing matrix \"{field}\""),
            });
        }
    }
    if let Some(extra) = doc.present().find(|f| !wanted.contains(f)) {
        return Err(CliError::Parse {
            line: key_line(extra),
            reason: format!("matrix \"{extra}\" does not belong to this kind"),
        });
    }
    for field in wanted {
        let rows = doc.matrix(field).expect("checked above");
        if rows.len() != n {
            return Err(CliError::Parse {
                line: key_line(field),
                reason: format!("\"{field}\" has {} rows, expected {n}", rows.len()),
            });
        }
        let limit = if *field == "leq" { 2 } else { n as i64 };
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::Parse {
                    line: locate(text, field, i, 0),
                    reason: format!("\"{field}\" row {i} has {} entries, expected {n}", row.len()),
                });
            }
            if let Some(j) = row.iter().position(|&v| v < 0 || v >= limit) {
                return Err(CliError::Parse {
                    line: locate(text, field, i, j),
                    reason: format!("\"{field}\"[{i}][{j}] = {} is outside [0, {limit})", row[j]),
                });
            }
        }
    }
    Ok(doc)
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Byte offset of the top-level key `"field"`.
fn key_offset(text: &str, field: &str) -> Option<usize> {
    let needle = format!("\"{field}\"");
    let mut depth = 0i32;
    let mut in_string = false;
    let mut escaped = false;
    for (pos, ch) in text.char_indices() {
        if in_string {
            match ch {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => in_string = false,
                _ => {}
            }
            continue;
        }
        match ch {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            '"' => {
                if depth == 1 && text[pos..].starts_with(&needle) && text[pos + needle.len()..].trim_start().starts_with(':') {
                    return Some(pos);
                }
                in_string = true;
            }
            _ => {}
        }
    }
    None
}

/// Line of entry `(i, j)` of the matrix under `field`; falls back to the
/// key's line.
fn locate(text: &str, field: &str, i: usize, j: usize) -> usize {
    let Some(start) = key_offset(text, field) else {
        return 1;
    };
    let mut depth = 0;
    let (mut row, mut col) = (0usize, 0usize);
    let mut in_number = false;
    let body = &text[start..];
    for (pos, ch) in body.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                col = 0;
            }
            ']' => {
                depth -= 1;
                if depth == 1 {
                    row += 1;
                }
                if depth == 0 {
                    break;
                }
            }
            c if depth == 2 && (c.is_ascii_digit() || c == '-') => {
                if !in_number && row == i && col == j {
                    return line_of(text, start + pos);
                }
                in_number = true;
                continue;
            }
            ',' if depth == 2 && in_number => col += 1,
            _ => {}
        }
        if ch == ',' || ch == ']' || ch.is_whitespace() {
            in_number = false;
        }
    }
    line_of(text, start)
}
