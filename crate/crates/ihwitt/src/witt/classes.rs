use std::fmt;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{make_field, CoefficientSpec, FiniteField, Rationals, Ring};

use super::forms::{AnyForm, BilinearForm};
use super::WittError;

/// Invariants of a Witt class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WittValue {
    /// Odd order field: dimension mod 2 and whether the signed discriminant
    /// `(-1)^{n(n-1)/2} det` is a nonsquare.
    Odd {
        dim_parity: u8,
        nonsquare_discriminant: bool,
    },
    /// Characteristic two: dimension mod 2 only.
    Even { dim_parity: u8 },
    /// Over the rationals only the signature is tracked.
    Signature { signature: i64 },
}

/// An element of `W(F)` described by its invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WittClass {
    pub field: CoefficientSpec,
    pub value: WittValue,
}

fn finite_of(c: &CoefficientSpec) -> FiniteField {
    c.finite_field().expect("class fields are valid")
}

/// Whether `-1` is a nonsquare in `F_q`, i.e. `q ≡ 3 mod 4`.
fn minus_one_nonsquare(q: u64) -> bool {
    q % 4 == 3
}

impl WittClass {
    /// The zero class.
    pub fn identity(field: CoefficientSpec) -> Result<Self, WittError> {
        let value = match field {
            CoefficientSpec::Integers => return Err(WittError::NotAField),
            CoefficientSpec::Rationals => WittValue::Signature { signature: 0 },
            c if c.characteristic() == 2 => WittValue::Even { dim_parity: 0 },
            _ => WittValue::Odd {
                dim_parity: 0,
                nonsquare_discriminant: false,
            },
        };
        Ok(WittClass { field, value })
    }

    pub fn is_identity(&self) -> bool {
        match self.value {
            WittValue::Odd {
                dim_parity,
                nonsquare_discriminant,
            } => dim_parity == 0 && !nonsquare_discriminant,
            WittValue::Even { dim_parity } => dim_parity == 0,
            WittValue::Signature { signature } => signature == 0,
        }
    }

    /// Group law `(e, f) + (e', f') = (e + e', (-1)^{ee'} f f')`.
    pub fn add(&self, other: &WittClass) -> Result<WittClass, WittError> {
        if self.field != other.field {
            return Err(WittError::FieldMismatch(self.field, other.field));
        }
        let value = match (self.value, other.value) {
            (
                WittValue::Odd {
                    dim_parity: e,
                    nonsquare_discriminant: f,
                },
                WittValue::Odd {
                    dim_parity: e2,
                    nonsquare_discriminant: f2,
                },
            ) => {
                let sign = e * e2 == 1 && minus_one_nonsquare(self.field.order().expect("finite"));
                WittValue::Odd {
                    dim_parity: (e + e2) % 2,
                    nonsquare_discriminant: f ^ f2 ^ sign,
                }
            }
            (WittValue::Even { dim_parity: e }, WittValue::Even { dim_parity: e2 }) => WittValue::Even {
                dim_parity: (e + e2) % 2,
            },
            (WittValue::Signature { signature: a }, WittValue::Signature { signature: b }) => {
                WittValue::Signature { signature: a + b }
            }
            _ => return Err(WittError::FieldMismatch(self.field, other.field)),
        };
        Ok(WittClass {
            field: self.field,
            value,
        })
    }

    /// Additive inverse.
    pub fn neg(&self) -> WittClass {
        let value = match self.value {
            WittValue::Odd {
                dim_parity,
                nonsquare_discriminant,
            } => WittValue::Odd {
                dim_parity,
                nonsquare_discriminant: nonsquare_discriminant
                    ^ (dim_parity == 1 && minus_one_nonsquare(self.field.order().expect("finite"))),
            },
            WittValue::Signature { signature } => WittValue::Signature { signature: -signature },
            v => v,
        };
        WittClass {
            field: self.field,
            value,
        }
    }

    /// `k` times the class.
    pub fn multiple(&self, k: u64) -> WittClass {
        let mut acc = WittClass::identity(self.field).expect("class field is a field");
        for _ in 0..k {
            acc = acc.add(self).expect("same field");
        }
        acc
    }

    /// Additive order; `None` for classes of infinite order over the
    /// rationals.
    pub fn order(&self) -> Option<u64> {
        if let WittValue::Signature { signature } = self.value {
            return (signature == 0).then_some(1);
        }
        let mut acc = *self;
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.add(self).expect("same field");
            k += 1;
        }
        Some(k)
    }

    /// A diagonal representative over a finite field: empty for zero,
    /// `⟨f⟩` in odd dimension and `⟨1, -f⟩` otherwise, where `f` is the
    /// canonical square-class representative of the discriminant.
    pub fn representative(&self) -> Result<Vec<u32>, WittError> {
        let f = self.field.finite_field().map_err(|_| WittError::NotFinite)?;
        Ok(match self.value {
            WittValue::Odd {
                dim_parity,
                nonsquare_discriminant,
            } => {
                let d = if nonsquare_discriminant {
                    f.smallest_nonsquare().expect("odd order fields have nonsquares")
                } else {
                    1
                };
                match (dim_parity, nonsquare_discriminant) {
                    (0, false) => Vec::new(),
                    (1, _) => vec![d],
                    _ => vec![1, f.neg(&d)],
                }
            }
            WittValue::Even { dim_parity } => vec![1; dim_parity as usize],
            WittValue::Signature { .. } => return Err(WittError::NotFinite),
        })
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            WittValue::Odd {
                dim_parity,
                nonsquare_discriminant,
            } => {
                let d = if nonsquare_discriminant {
                    let field = finite_of(&self.field);
                    field.format_element(field.smallest_nonsquare().expect("odd order"))
                } else {
                    "1".to_string()
                };
                write!(
                    f,
                    "(dim {dim_parity} mod 2, disc {d}) in W({})",
                    self.field.short_name()
                )
            }
            WittValue::Even { dim_parity } => write!(f, "(dim {dim_parity} mod 2) in W({})", self.field.short_name()),
            WittValue::Signature { signature } => write!(f, "signature {signature} over Q"),
        }
    }
}

/// Classification of a nondegenerate form over a finite field.
pub fn finite_invariants(form: &BilinearForm<FiniteField>) -> Result<WittClass, WittError> {
    let f = form.field();
    let det = form.determinant();
    if det == 0 {
        return Err(WittError::Degenerate);
    }
    let n = form.dim();
    let dim_parity = (n % 2) as u8;
    let value = if f.prime() == 2 {
        WittValue::Even { dim_parity }
    } else {
        let signed = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            f.neg(&det)
        } else {
            det
        };
        WittValue::Odd {
            dim_parity,
            nonsquare_discriminant: !f.is_square(signed),
        }
    };
    Ok(WittClass {
        field: form.coefficients(),
        value,
    })
}

/// Signature of a nondegenerate rational form.
pub fn rational_invariants(form: &BilinearForm<Rationals>) -> Result<WittClass, WittError> {
    let diag = form.diagonalize()?.diagonal;
    let signature = diag
        .iter()
        .map(|d: &BigRational| if d.is_positive() { 1 } else { -1 })
        .sum();
    debug_assert!(diag.iter().all(|d| !d.is_zero()));
    Ok(WittClass {
        field: form.coefficients(),
        value: WittValue::Signature { signature },
    })
}

/// Invariants of a nondegenerate form over any supported field.
pub fn witt_invariants(form: &AnyForm) -> Result<WittClass, WittError> {
    match form {
        AnyForm::Rational(b) => rational_invariants(b),
        AnyForm::Finite(b) => finite_invariants(b),
    }
}

/// Class of the diagonal form `⟨d_1, ..., d_n⟩` over a finite field.
pub fn diagonal_class(field: &FiniteField, coeff: CoefficientSpec, entries: &[u32]) -> Result<WittClass, WittError> {
    finite_invariants(&BilinearForm::diagonal(field.clone(), coeff, entries))
}

/// Abstract structure of a Witt group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WittStructure {
    Z4,
    Z2xZ2,
    Z2,
    /// Only the signature homomorphism to `Z` is modelled.
    Signature,
}

impl fmt::Display for WittStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WittStructure::Z4 => "Z4",
            WittStructure::Z2xZ2 => "Z2xZ2",
            WittStructure::Z2 => "Z2",
            WittStructure::Signature => "Z (signature)",
        })
    }
}

/// Description of `W(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittGroupDescr {
    pub field: CoefficientSpec,
    pub structure: WittStructure,
    /// Generators as one-dimensional forms `⟨a⟩`.
    pub generators: Vec<String>,
}

impl WittGroupDescr {
    pub fn order(&self) -> Option<u64> {
        match self.structure {
            WittStructure::Z4 | WittStructure::Z2xZ2 => Some(4),
            WittStructure::Z2 => Some(2),
            WittStructure::Signature => None,
        }
    }

    /// Cyclic orders of the primary decomposition.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        match self.structure {
            WittStructure::Z4 => vec![4],
            WittStructure::Z2xZ2 => vec![2, 2],
            WittStructure::Z2 => vec![2],
            WittStructure::Signature => Vec::new(),
        }
    }
}

/// Structure of `W(F)` by `q mod 4`: `Z4` when `q ≡ 3`, `Z2 × Z2` when
/// `q ≡ 1`, `Z2` in characteristic two.
pub fn witt_group(field: &CoefficientSpec) -> Result<WittGroupDescr, WittError> {
    match field {
        CoefficientSpec::Integers => Err(WittError::NotAField),
        CoefficientSpec::Rationals => Ok(WittGroupDescr {
            field: *field,
            structure: WittStructure::Signature,
            generators: vec!["<1>".into()],
        }),
        _ => {
            let f = field.finite_field()?;
            let q = f.order() as u64;
            let (structure, generators) = if f.prime() == 2 {
                (WittStructure::Z2, vec!["<1>".to_string()])
            } else if q % 4 == 3 {
                (WittStructure::Z4, vec!["<1>".to_string()])
            } else {
                let s = f.smallest_nonsquare().expect("odd order fields have nonsquares");
                (
                    WittStructure::Z2xZ2,
                    vec!["<1>".to_string(), format!("<{}>", f.format_element(s))],
                )
            };
            Ok(WittGroupDescr {
                field: *field,
                structure,
                generators,
            })
        }
    }
}

/// Every element of `W(F)` for a finite field, in a fixed order.
pub fn witt_elements(field: &CoefficientSpec) -> Result<Vec<WittClass>, WittError> {
    let f = field.finite_field().map_err(|_| WittError::NotFinite)?;
    let values: Vec<WittValue> = if f.prime() == 2 {
        (0..2).map(|e| WittValue::Even { dim_parity: e }).collect()
    } else {
        [(0, false), (1, false), (0, true), (1, true)]
            .into_iter()
            .map(|(e, n)| WittValue::Odd {
                dim_parity: e,
                nonsquare_discriminant: n,
            })
            .collect()
    };
    Ok(values
        .into_iter()
        .map(|value| WittClass { field: *field, value })
        .collect())
}

/// The map `W(Z_p) → W(F_{p^m})` induced by inclusion: a diagonal
/// representative is read in the extension and reclassified.
pub fn restriction_map(class: &WittClass, m: u32) -> Result<WittClass, WittError> {
    let CoefficientSpec::PrimeField(p) = class.field else {
        return Err(WittError::NotPrimeField(class.field));
    };
    let target_spec = if m == 1 {
        CoefficientSpec::PrimeField(p)
    } else {
        CoefficientSpec::FiniteField { p, m }
    };
    let target = make_field(p, m)?;
    let rep: Vec<u32> = class
        .representative()?
        .into_iter()
        .map(|a| target.embed_prime(a))
        .collect();
    diagonal_class(&target, target_spec, &rep)
}

/// Elements of `W(Z_p)` killed by the restriction to `F_{p^m}`.
pub fn restriction_kernel(p: u32, m: u32) -> Result<Vec<WittClass>, WittError> {
    let mut out = Vec::new();
    for c in witt_elements(&CoefficientSpec::PrimeField(p))? {
        if restriction_map(&c, m)?.is_identity() {
            out.push(c);
        }
    }
    Ok(out)
}

const ISOTROPIC_MAX_DIM: usize = 6;
const ISOTROPIC_MAX_ORDER: u32 = 49;

/// First nonzero `v` with `vᵀ G v = 0`, scanning projective representatives
/// (leading coordinate 1) by position of the leading 1, then
/// lexicographically in the remaining coordinates.
pub fn isotropic_vector(form: &BilinearForm<FiniteField>) -> Result<Option<Vec<u32>>, WittError> {
    let f = form.field();
    let n = form.dim();
    if n > ISOTROPIC_MAX_DIM || f.order() > ISOTROPIC_MAX_ORDER {
        return Err(WittError::SearchTooLarge {
            dim: n,
            order: f.order(),
        });
    }
    let q = f.order();
    for lead in 0..n {
        let free = n - lead - 1;
        let total = (q as u64).pow(free as u32);
        for code in 0..total {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            let mut c = code;
            for i in (lead + 1..n).rev() {
                v[i] = (c % q as u64) as u32;
                c /= q as u64;
            }
            if f.is_zero(&form.evaluate(&v, &v)) {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}
