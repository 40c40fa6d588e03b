//! Parsing of command-line and FFI inputs.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::galois::SpectrumContext;
use crate::lattice::{FinLattice, LatticeSpec};

/// A lattice file: either a bare lattice or a lattice with its points.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum LatticeInput {
    WithPoints {
        lattice: LatticeSpec,
        #[serde(rename = "X")]
        points: Vec<String>,
    },
    Bare(LatticeSpec),
}

/// Parses lattice JSON, returning the lattice and the points it names.
pub fn parse_lattice_json(text: &str) -> Result<(FinLattice, Option<Vec<String>>)> {
    let input: LatticeInput = serde_json::from_str(text)?;
    let (spec, points) = match input {
        LatticeInput::WithPoints { lattice, points } => (lattice, Some(points)),
        LatticeInput::Bare(spec) => (spec, None),
    };
    Ok((FinLattice::from_spec(&spec)?, points))
}

/// Splits a comma-separated label list, dropping blanks.
pub fn split_labels(text: &str) -> Vec<String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

/// Builds a context from lattice JSON; `points` overrides any `X` in the file.
pub fn lattice_context(text: &str, points: Option<Vec<String>>) -> Result<SpectrumContext> {
    let (lattice, from_file) = parse_lattice_json(text)?;
    let points = points
        .or(from_file)
        .ok_or_else(|| Error::InvalidPoints("no points given: pass --x or an \"X\" field".into()))?;
    SpectrumContext::from_labels(lattice, &points)
}
