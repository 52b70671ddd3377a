use std::fmt;

use serde::{Deserialize, Serialize};

use super::IhError;

/// A perversity, stored as its values `p(2), p(3), ..., p(K)`.
///
/// Valid perversities satisfy `p(2) = 0` and `p(k) ≤ p(k+1) ≤ p(k) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Perversity {
    values: Vec<i64>,
}

impl Perversity {
    /// Values for codimensions `2, 3, ...` in order.
    pub fn new(values: Vec<i64>) -> Result<Self, IhError> {
        if let Some(&first) = values.first() {
            if first != 0 {
                return Err(IhError::InvalidPerversity(format!("p(2) = {first}, expected 0")));
            }
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] || w[1] > w[0] + 1 {
                return Err(IhError::InvalidPerversity(format!(
                    "p({}) = {}, p({}) = {} violates p(k) ≤ p(k+1) ≤ p(k) + 1",
                    i + 2,
                    w[0],
                    i + 3,
                    w[1]
                )));
            }
        }
        Ok(Perversity { values })
    }

    fn from_fn(n: usize, f: impl Fn(i64) -> i64) -> Self {
        Perversity {
            values: (2..=n.max(1) as i64).map(f).collect(),
        }
    }

    /// The zero perversity, defined up to codimension `n`.
    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| 0)
    }

    /// Lower middle perversity `⌊(k-2)/2⌋`.
    pub fn lower_middle(n: usize) -> Self {
        Self::from_fn(n, |k| (k - 2).div_euclid(2))
    }

    /// Upper middle perversity `⌊(k-1)/2⌋`.
    pub fn upper_middle(n: usize) -> Self {
        Self::from_fn(n, |k| (k - 1).div_euclid(2))
    }

    /// Top perversity `k - 2`.
    pub fn top(n: usize) -> Self {
        Self::from_fn(n, |k| k - 2)
    }

    /// Parses `0`, `m`, `n`, `t` (expanded up to codimension `n`) or an
    /// explicit list `p:0,0,1,...` starting at codimension two.
    pub fn parse(text: &str, n: usize) -> Result<Self, IhError> {
        match text.trim() {
            "0" => Ok(Self::zero(n)),
            "m" => Ok(Self::lower_middle(n)),
            "n" => Ok(Self::upper_middle(n)),
            "t" => Ok(Self::top(n)),
            other => {
                let list = other
                    .strip_prefix("p:")
                    .ok_or_else(|| IhError::InvalidPerversity(format!("unrecognised perversity `{other}`")))?;
                let values = list
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        s.trim()
                            .parse::<i64>()
                            .map_err(|_| IhError::InvalidPerversity(format!("bad value `{s}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Perversity::new(values)
            }
        }
    }

    /// `p(k)`, if defined.
    pub fn value(&self, k: usize) -> Option<i64> {
        k.checked_sub(2).and_then(|i| self.values.get(i).copied())
    }

    /// Largest codimension with a value.
    pub fn max_codim(&self) -> usize {
        self.values.len() + 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Checks that values exist for every codimension `2..=n`.
    pub fn require(&self, n: usize) -> Result<(), IhError> {
        if n >= 2 && self.values.len() < n - 1 {
            return Err(IhError::MissingPerversity(self.values.len() + 2));
        }
        Ok(())
    }

    /// Truncation to codimensions `2..=n`.
    pub fn truncate(&self, n: usize) -> Self {
        Perversity {
            values: self.values.iter().copied().take(n.saturating_sub(1)).collect(),
        }
    }

    /// Pointwise comparison on the common range.
    pub fn le(&self, other: &Perversity) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// The complementary perversity `t - p`.
    pub fn dual(&self) -> Self {
        Perversity {
            values: self.values.iter().enumerate().map(|(i, v)| i as i64 - v).collect(),
        }
    }
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "p:{}", vals.join(","))
    }
}

/// Lower and upper middle perversities up to codimension `n`.
pub fn middle_perversities(n: usize) -> (Perversity, Perversity) {
    (Perversity::lower_middle(n), Perversity::upper_middle(n))
}
