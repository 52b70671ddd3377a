use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::CoefficientSpec;

/// Homology in one degree: a free rank (the dimension over a field) and,
/// over the integers, the torsion coefficients greater than one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<u64>,
}

impl DegreeGroup {
    pub fn free(rank: usize) -> Self {
        DegreeGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for DegreeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Homology groups in degrees `0..=n` over a fixed coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IHTable {
    pub coefficients: CoefficientSpec,
    pub degrees: Vec<DegreeGroup>,
}

impl IHTable {
    /// Table of dimensions over a field.
    pub fn from_dims(coefficients: CoefficientSpec, dims: &[usize]) -> Self {
        IHTable {
            coefficients,
            degrees: dims.iter().map(|&d| DegreeGroup::free(d)).collect(),
        }
    }

    /// Free ranks (dimensions over a field), degree by degree.
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.rank).collect()
    }

    /// Free rank in degree `i`; zero outside the stored range.
    pub fn dim(&self, i: i64) -> usize {
        self.group(i).rank
    }

    /// Group in degree `i`; zero outside the stored range.
    pub fn group(&self, i: i64) -> DegreeGroup {
        if i < 0 {
            return DegreeGroup::default();
        }
        self.degrees.get(i as usize).cloned().unwrap_or_default()
    }

    /// Largest stored degree.
    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, g)| if i % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }
}

impl fmt::Display for IHTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.coefficients.is_field() {
            self.degrees.iter().map(|g| g.rank.to_string()).collect()
        } else {
            self.degrees.iter().map(|g| g.to_string()).collect()
        };
        write!(f, "({}) over {}", parts.join(", "), self.coefficients.short_name())
    }
}
