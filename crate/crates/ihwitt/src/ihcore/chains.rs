use num::{BigInt, ToPrimitive};

use crate::exactalg::{
    kernel_basis, kernel_basis_integral, rank, smith_normal_form, CoefficientSpec, EchelonBasis, Field, FiniteField,
    IntMatrix, Integers, Rationals, Ring, SparseMatrix, SparseVec,
};
use crate::simplicial::StratifiedComplex;

use super::perversity::Perversity;
use super::table::{DegreeGroup, IHTable};
use super::IhError;

/// Allowable simplices of each dimension, as flags indexed like the complex.
///
/// An `i`-simplex `σ` is allowable when `dim(σ ∩ X^{n-k}) ≤ i - k + p(k)`
/// for every `k ≥ 2` with `X^{n-k}` nonempty (an empty intersection always
/// passes).
pub fn allowable_simplices(x: &StratifiedComplex, p: &Perversity) -> Result<Vec<Vec<bool>>, IhError> {
    let n = x.dim();
    p.require(n)?;
    let c = x.complex();
    let strata: Vec<(usize, i64)> = (2..=n)
        .filter(|&k| !x.skeleton_is_empty(n - k))
        .map(|k| (k, p.value(k).expect("checked above")))
        .collect();
    Ok((0..c.f_vector().len())
        .map(|i| {
            c.simplices(i)
                .iter()
                .map(|s| {
                    strata.iter().all(|&(k, pk)| match x.intersection_dim(s, n - k) {
                        None => true,
                        Some(d) => (d as i64) <= i as i64 - k as i64 + pk,
                    })
                })
                .collect()
        })
        .collect())
}

fn positions(flags: &[bool]) -> Vec<usize> {
    flags.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i).collect()
}

/// Restrictions of the boundary operator used by the rank formula: the full
/// boundary of allowable `i`-simplices, and its rows at non-allowable faces.
pub(crate) struct RestrictedBoundaries {
    pub allowable_counts: Vec<usize>,
    pub full: Vec<IntMatrix>,
    pub obstruction: Vec<IntMatrix>,
}

pub(crate) fn restricted_boundaries(x: &StratifiedComplex, allow: &[Vec<bool>]) -> RestrictedBoundaries {
    let c = x.complex();
    let n = allow.len();
    let mut full = Vec::with_capacity(n);
    let mut obstruction = Vec::with_capacity(n);
    for i in 0..n {
        let cols = positions(&allow[i]);
        let b = c.boundary_matrix(i).select_columns(&cols);
        let blocked: Vec<bool> = if i == 0 {
            Vec::new()
        } else {
            allow[i - 1].iter().map(|a| !a).collect()
        };
        obstruction.push(b.select_rows(&blocked));
        full.push(b);
    }
    RestrictedBoundaries {
        allowable_counts: allow.iter().map(|a| a.iter().filter(|&&b| b).count()).collect(),
        full,
        obstruction,
    }
}

/// Intersection homology dimensions over a field from ranks alone:
/// `dim IH_i = |A_i| - rk ∂_i|A_i - rk ∂_{i+1}|A_{i+1} + rk N_{i+1}` where
/// `A_i` are the allowable simplices and `N_{i+1}` the rows of
/// `∂_{i+1}|A_{i+1}` at non-allowable `i`-simplices.
pub(crate) fn field_dims<F: Field>(f: &F, rb: &RestrictedBoundaries) -> Vec<usize> {
    let n = rb.full.len();
    let full: Vec<usize> = rb.full.iter().map(|m| rank(f, &m.over(f))).collect();
    let obs: Vec<usize> = rb.obstruction.iter().map(|m| rank(f, &m.over(f))).collect();
    (0..n)
        .map(|i| {
            let (next_full, next_obs) = if i + 1 < n { (full[i + 1], obs[i + 1]) } else { (0, 0) };
            rb.allowable_counts[i] + next_obs - full[i] - next_full
        })
        .collect()
}

/// The intersection chain complex with explicit bases.
///
/// Chains of degree `i` are written in coordinates indexed by the allowable
/// `i`-simplices (in complex order); `bases[i]` is an echelon basis of
/// `I^pC_i` in those coordinates, and `differentials[i]` expresses the
/// boundary `I^pC_i → I^pC_{i-1}` in these bases.
#[derive(Clone, Debug)]
pub struct IntersectionChainComplex<R: Ring> {
    pub ring: R,
    pub coefficients: CoefficientSpec,
    /// Allowable simplex indices per degree.
    pub allowable: Vec<Vec<usize>>,
    pub bases: Vec<EchelonBasis<R::Elem>>,
    pub differentials: Vec<SparseMatrix<R::Elem>>,
}

fn build_complex<R: Ring>(
    ring: R,
    coefficients: CoefficientSpec,
    x: &StratifiedComplex,
    allow: &[Vec<bool>],
    kernel: impl Fn(&R, &SparseMatrix<R::Elem>) -> Vec<SparseVec<R::Elem>>,
) -> Result<IntersectionChainComplex<R>, IhError> {
    let c = x.complex();
    let n = allow.len();
    let rb = restricted_boundaries(x, allow);
    let allowable: Vec<Vec<usize>> = allow.iter().map(|a| positions(a)).collect();
    let mut bases = Vec::with_capacity(n);
    for i in 0..n {
        let vecs = kernel(&ring, &rb.obstruction[i].over(&ring));
        bases
            .push(EchelonBasis::new(vecs).ok_or_else(|| IhError::Internal("kernel basis not in echelon form".into()))?);
    }
    let mut differentials = Vec::with_capacity(n);
    for i in 0..n {
        let rows = if i == 0 { 0 } else { bases[i - 1].len() };
        if i == 0 {
            differentials.push(SparseMatrix::zeros(0, bases[0].len()));
            continue;
        }
        let boundary = rb.full[i].over(&ring);
        let mut pos = vec![usize::MAX; c.count(i - 1)];
        for (k, &s) in allowable[i - 1].iter().enumerate() {
            pos[s] = k;
        }
        let mut columns = Vec::with_capacity(bases[i].len());
        for xi in bases[i].vectors() {
            let image = boundary.mul_vec(&ring, xi);
            let mut local = Vec::with_capacity(image.len());
            for (r, v) in image {
                if pos[r] == usize::MAX {
                    return Err(IhError::Internal(
                        "boundary of an intersection chain left the allowable span".into(),
                    ));
                }
                local.push((pos[r], v));
            }
            let coords = bases[i - 1]
                .coordinates(&ring, &local)
                .ok_or_else(|| IhError::Internal("boundary not in the chain group".into()))?;
            columns.push(coords);
        }
        differentials.push(SparseMatrix::from_columns(rows, columns));
    }
    Ok(IntersectionChainComplex {
        ring,
        coefficients,
        allowable,
        bases,
        differentials,
    })
}

impl<R: Ring> IntersectionChainComplex<R> {
    /// Ranks of the chain groups `I^pC_i`.
    pub fn chain_ranks(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    /// Whether every composite `d_{i-1} d_i` vanishes.
    pub fn is_complex(&self) -> bool {
        (2..self.differentials.len()).all(|i| {
            let prod = self.differentials[i - 1].mul_mat(&self.ring, &self.differentials[i]);
            prod.nnz() == 0
        })
    }

    /// Whether a chain, given by coefficients on allowable simplices of
    /// degree `i` (simplex index, value), lies in `I^pC_i`.
    pub fn contains(&self, i: usize, chain: &[(usize, R::Elem)]) -> bool {
        let mut local = Vec::with_capacity(chain.len());
        for (s, v) in chain {
            match self.allowable[i].binary_search(s) {
                Ok(k) => local.push((k, v.clone())),
                Err(_) => return false,
            }
        }
        local.sort_by_key(|(k, _)| *k);
        self.bases[i].contains(&self.ring, &local)
    }
}

impl<F: Field> IntersectionChainComplex<F> {
    /// Dimensions of homology computed from the explicit complex.
    pub fn homology_dims(&self) -> Vec<usize> {
        let n = self.differentials.len();
        let ranks: Vec<usize> = self.differentials.iter().map(|d| rank(&self.ring, d)).collect();
        (0..n)
            .map(|i| self.bases[i].len() - ranks[i] - if i + 1 < n { ranks[i + 1] } else { 0 })
            .collect()
    }
}

impl IntersectionChainComplex<Integers> {
    /// Integral homology: free rank and torsion coefficients per degree.
    pub fn homology(&self) -> Result<Vec<DegreeGroup>, IhError> {
        let n = self.differentials.len();
        let snfs: Vec<_> = self.differentials.iter().map(smith_normal_form).collect();
        (0..n)
            .map(|i| {
                let next = if i + 1 < n { Some(&snfs[i + 1]) } else { None };
                let rank = self.bases[i].len() - snfs[i].rank() - next.map_or(0, |s| s.rank());
                let torsion = next
                    .map(|s| s.torsion())
                    .unwrap_or_default()
                    .iter()
                    .map(|t: &BigInt| t.to_u64().ok_or(IhError::TorsionOverflow))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(DegreeGroup { rank, torsion })
            })
            .collect()
    }
}

/// Intersection chain complex over a field.
pub fn intersection_chain_complex_over<F: Field>(
    field: F,
    coefficients: CoefficientSpec,
    x: &StratifiedComplex,
    p: &Perversity,
) -> Result<IntersectionChainComplex<F>, IhError> {
    let allow = allowable_simplices(x, p)?;
    build_complex(field, coefficients, x, &allow, |f, m| kernel_basis(f, m))
}

/// Intersection chain complex over the integers. The chain groups are the
/// saturated kernel lattices, never a tensor product of an integral complex.
pub fn integral_intersection_chain_complex(
    x: &StratifiedComplex,
    p: &Perversity,
) -> Result<IntersectionChainComplex<Integers>, IhError> {
    let allow = allowable_simplices(x, p)?;
    build_complex(Integers, CoefficientSpec::Integers, x, &allow, |_, m| {
        kernel_basis_integral(m)
    })
}

/// The intersection chain complex over any supported coefficient ring.
#[derive(Clone, Debug)]
pub enum AnyChainComplex {
    Rational(IntersectionChainComplex<Rationals>),
    Finite(IntersectionChainComplex<FiniteField>),
    Integral(IntersectionChainComplex<Integers>),
}

impl AnyChainComplex {
    pub fn chain_ranks(&self) -> Vec<usize> {
        match self {
            AnyChainComplex::Rational(c) => c.chain_ranks(),
            AnyChainComplex::Finite(c) => c.chain_ranks(),
            AnyChainComplex::Integral(c) => c.chain_ranks(),
        }
    }

    pub fn is_complex(&self) -> bool {
        match self {
            AnyChainComplex::Rational(c) => c.is_complex(),
            AnyChainComplex::Finite(c) => c.is_complex(),
            AnyChainComplex::Integral(c) => c.is_complex(),
        }
    }

    /// Homology table computed from the explicit complex.
    pub fn homology(&self) -> Result<IHTable, IhError> {
        Ok(match self {
            AnyChainComplex::Rational(c) => IHTable::from_dims(c.coefficients, &c.homology_dims()),
            AnyChainComplex::Finite(c) => IHTable::from_dims(c.coefficients, &c.homology_dims()),
            AnyChainComplex::Integral(c) => IHTable {
                coefficients: c.coefficients,
                degrees: c.homology()?,
            },
        })
    }
}

/// Builds `I^pC_*(X; coeff)` with explicit bases.
pub fn intersection_chain_complex(
    x: &StratifiedComplex,
    p: &Perversity,
    coeff: &CoefficientSpec,
) -> Result<AnyChainComplex, IhError> {
    Ok(match coeff {
        CoefficientSpec::Integers => AnyChainComplex::Integral(integral_intersection_chain_complex(x, p)?),
        CoefficientSpec::Rationals => {
            AnyChainComplex::Rational(intersection_chain_complex_over(Rationals, *coeff, x, p)?)
        }
        _ => AnyChainComplex::Finite(intersection_chain_complex_over(coeff.finite_field()?, *coeff, x, p)?),
    })
}
