use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{is_prime, make_field, FiniteField, Rationals};
use super::AlgebraError;

/// Coefficient ring of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientSpec {
    Rationals,
    Integers,
    PrimeField(u32),
    FiniteField { p: u32, m: u32 },
}

/// A concrete field ready for arithmetic.
#[derive(Clone, Debug)]
pub enum FieldKind {
    Rational(Rationals),
    Finite(FiniteField),
}

/// Runs `$body` with `$f` bound to the concrete field inside a [`FieldKind`].
#[macro_export]
macro_rules! with_field {
    ($kind:expr, $f:ident => $body:expr) => {
        match $kind {
            $crate::exactalg::FieldKind::Rational($f) => $body,
            $crate::exactalg::FieldKind::Finite($f) => $body,
        }
    };
}

impl CoefficientSpec {
    /// Characteristic; zero for the rationals and the integers.
    pub fn characteristic(&self) -> u32 {
        match self {
            CoefficientSpec::Rationals | CoefficientSpec::Integers => 0,
            CoefficientSpec::PrimeField(p) | CoefficientSpec::FiniteField { p, .. } => *p,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientSpec::Integers)
    }

    /// Number of elements of a finite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            CoefficientSpec::PrimeField(p) => Some(*p as u64),
            CoefficientSpec::FiniteField { p, m } => Some((*p as u64).pow(*m)),
            _ => None,
        }
    }

    /// Checks primality and builds the arithmetic context.
    pub fn field(&self) -> Result<FieldKind, AlgebraError> {
        match self {
            CoefficientSpec::Rationals => Ok(FieldKind::Rational(Rationals)),
            CoefficientSpec::Integers => Err(AlgebraError::NotAField),
            CoefficientSpec::PrimeField(p) => make_field(*p, 1).map(FieldKind::Finite),
            CoefficientSpec::FiniteField { p, m } => make_field(*p, *m).map(FieldKind::Finite),
        }
    }

    /// Finite field arithmetic; errors for the rationals and integers.
    pub fn finite_field(&self) -> Result<FiniteField, AlgebraError> {
        match self.field()? {
            FieldKind::Finite(f) => Ok(f),
            FieldKind::Rational(_) => Err(AlgebraError::NotFinite),
        }
    }

    /// Short label such as `Q`, `Z`, `Z3`, `F9`.
    pub fn short_name(&self) -> String {
        match self {
            CoefficientSpec::Rationals => "Q".into(),
            CoefficientSpec::Integers => "Z".into(),
            CoefficientSpec::PrimeField(p) => format!("Z{p}"),
            CoefficientSpec::FiniteField { p, m } => format!("F{}", (*p as u64).pow(*m)),
        }
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSpec::Rationals => write!(f, "Q"),
            CoefficientSpec::Integers => write!(f, "Z"),
            CoefficientSpec::PrimeField(p) => write!(f, "Zp:{p}"),
            CoefficientSpec::FiniteField { p, m } => write!(f, "Fq:{p}:{m}"),
        }
    }
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    (2..=q).find(|d| q.is_multiple_of(*d)).and_then(|p| {
        let (mut r, mut m) = (q, 0u32);
        while r % p == 0 {
            r /= p;
            m += 1;
        }
        (r == 1 && is_prime(p)).then_some((p as u32, m))
    })
}

impl FromStr for CoefficientSpec {
    type Err = AlgebraError;

    /// Accepts `Q`, `Z`, `Zp:<p>`, `Fq:<p>:<m>` and the shorthands `Z<p>`
    /// and `F<q>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::CoefficientSyntax(s.to_string());
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let spec = match s {
            "Q" => CoefficientSpec::Rationals,
            "Z" => CoefficientSpec::Integers,
            _ => {
                if let Some(rest) = s.strip_prefix("Zp:") {
                    CoefficientSpec::PrimeField(num(rest)?)
                } else if let Some(rest) = s.strip_prefix("Fq:") {
                    let (p, m) = rest.split_once(':').ok_or_else(bad)?;
                    let (p, m) = (num(p)?, num(m)?);
                    if m == 1 {
                        CoefficientSpec::PrimeField(p)
                    } else {
                        CoefficientSpec::FiniteField { p, m }
                    }
                } else if let Some(rest) = s.strip_prefix('Z') {
                    CoefficientSpec::PrimeField(num(rest)?)
                } else if let Some(rest) = s.strip_prefix('F') {
                    let q = num(rest)? as u64;
                    let (p, m) = prime_power(q).ok_or(AlgebraError::NotPrimePower(q))?;
                    if m == 1 {
                        CoefficientSpec::PrimeField(p)
                    } else {
                        CoefficientSpec::FiniteField { p, m }
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        match spec {
            CoefficientSpec::PrimeField(p) | CoefficientSpec::FiniteField { p, .. } if !is_prime(p as u64) => {
                Err(AlgebraError::NotPrime(p as u64))
            }
            CoefficientSpec::FiniteField { m: 0, .. } => Err(AlgebraError::InvalidExtensionDegree(0)),
            _ => Ok(spec),
        }
    }
}

impl Serialize for CoefficientSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CoefficientSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
