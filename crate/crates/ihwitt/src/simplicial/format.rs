use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::complex::build_complex;
use super::stratified::StratifiedComplex;
use super::ComplexError;

/// On-disk description of a filtered complex.
///
/// `skeleta` maps a level `i` to simplices spanning `X^i`; each skeleton also
/// contains every lower one, and omitted levels inherit from below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub dimension: usize,
    pub maximal_simplices: Vec<Vec<u32>>,
    #[serde(default)]
    pub skeleta: BTreeMap<usize, Vec<Vec<u32>>>,
}

impl SpaceFile {
    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        serde_json::from_str(text).map_err(|e| ComplexError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn build(&self) -> Result<StratifiedComplex, ComplexError> {
        let complex = build_complex(&self.maximal_simplices)?;
        if complex.dim() != Some(self.dimension) {
            return Err(ComplexError::DimensionMismatch(
                self.dimension,
                complex.dim().unwrap_or(0),
            ));
        }
        StratifiedComplex::new(complex, &self.skeleta)
    }

    pub fn from_space(x: &StratifiedComplex) -> Self {
        SpaceFile {
            dimension: x.dim(),
            maximal_simplices: x.complex().maximal_simplices().to_vec(),
            skeleta: x.skeleta(),
        }
    }
}

/// Parses a space description and builds the filtered complex.
pub fn parse_space(text: &str) -> Result<StratifiedComplex, ComplexError> {
    SpaceFile::parse(text)?.build()
}

/// Serializes a filtered complex; `parse_space` inverts it.
pub fn write_space(x: &StratifiedComplex) -> String {
    SpaceFile::from_space(x).to_json()
}
