//! Command implementations behind the `mlat` binary.

pub mod doc;
pub mod dot;
pub mod report;
pub mod text;

use std::str::FromStr;

use thiserror::Error;

pub use doc::{load_structure, Kind, Structure, StructureDoc};
pub use report::{run, Output};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid structure: {0}")]
    Validation(String),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    FlagConflict(String),
    #[error("no element labelled `{0}`")]
    UnknownElement(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Lattice,
    Spec,
    Classify,
    Series,
    Hyperabelian,
    BraceYbe,
    Report,
    Dot,
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "validate" => Command::Validate,
            "lattice" => Command::Lattice,
            "spec" => Command::Spec,
            "classify" => Command::Classify,
            "series" => Command::Series,
            "hyperabelian" => Command::Hyperabelian,
            "brace-ybe" => Command::BraceYbe,
            "report" => Command::Report,
            "dot" => Command::Dot,
            other => return Err(CliError::UnknownCommand(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutFormat {
    #[default]
    Json,
    Text,
    Dot,
}

impl FromStr for OutFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutFormat::Json),
            "text" => Ok(OutFormat::Text),
            "dot" => Ok(OutFormat::Dot),
            other => Err(CliError::FlagConflict(format!("unknown output format `{other}`"))),
        }
    }
}

/// Which multiplication to put on the lattice of a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultChoice {
    Commutator,
    Intersection,
    Zero,
    Product,
    RingCommutator,
}

impl FromStr for MultChoice {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "commutator" => MultChoice::Commutator,
            "intersection" => MultChoice::Intersection,
            "zero" => MultChoice::Zero,
            "product" => MultChoice::Product,
            "ring-commutator" => MultChoice::RingCommutator,
            other => return Err(CliError::FlagConflict(format!("unknown multiplication `{other}`"))),
        })
    }
}

impl MultChoice {
    pub fn name(self) -> &'static str {
        match self {
            MultChoice::Commutator => "commutator",
            MultChoice::Intersection => "intersection",
            MultChoice::Zero => "zero",
            MultChoice::Product => "product",
            MultChoice::RingCommutator => "ring-commutator",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub mult: Option<MultChoice>,
    pub element: Option<String>,
    pub out: OutFormat,
    pub bound: Option<usize>,
    pub spec: bool,
}

/// Reads, parses and validates a structure file.
pub fn load_path(path: &std::path::Path) -> Result<StructureDoc, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_structure(&text)
}

/// Structure files for every catalog structure, keyed by file stem.
pub fn catalog_docs() -> Vec<(String, StructureDoc)> {
    use mlat_core::catalog;
    use mlat_core::lattice::{boolean_lattice, chain_mult_lattice, diamond, pentagon, ChainKind, MultLattice, StandardMult};

    let mut out = Vec::new();
    for (name, g) in catalog::groups() {
        out.push((name.to_string(), StructureDoc::from_group(name, &g)));
    }
    for (name, r) in catalog::rngs() {
        out.push((name.to_string(), StructureDoc::from_rng(name, &r)));
    }
    for (name, b) in catalog::braces() {
        out.push((name.to_string(), StructureDoc::from_brace(name, &b)));
    }
    let lattices = [
        ("zp2", chain_mult_lattice(3, ChainKind::Dvr)),
        ("zp3", chain_mult_lattice(4, ChainKind::Dvr)),
        ("chain_meet_4", chain_mult_lattice(4, ChainKind::Meet)),
        ("chain_zero_4", chain_mult_lattice(4, ChainKind::Zero)),
        ("boolean_2_meet", MultLattice::with_standard(boolean_lattice(2), StandardMult::Meet)),
        ("boolean_3_zero", MultLattice::with_standard(boolean_lattice(3), StandardMult::Zero)),
        ("n5_meet", MultLattice::with_standard(pentagon(), StandardMult::Meet)),
        ("m3_meet", MultLattice::with_standard(diamond(), StandardMult::Meet)),
    ];
    for (name, m) in lattices {
        out.push((name.to_string(), StructureDoc::from_lattice(name, &m)));
    }
    out
}
