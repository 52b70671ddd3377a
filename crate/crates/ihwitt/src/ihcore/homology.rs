use num::ToPrimitive;

use crate::exactalg::{rank, rank_over, smith_normal_form, CoefficientSpec, Integers};
use crate::simplicial::{SimplicialComplex, StratifiedComplex};

use super::chains::{allowable_simplices, field_dims, integral_intersection_chain_complex, restricted_boundaries};
use super::perversity::Perversity;
use super::table::{DegreeGroup, IHTable};
use super::IhError;

/// Whether the `i`-simplex `sigma` of `x` is `p`-allowable.
pub fn is_allowable(x: &StratifiedComplex, p: &Perversity, sigma: &[u32], i: usize) -> Result<bool, IhError> {
    let n = x.dim();
    p.require(n)?;
    if sigma.len() != i + 1 || !x.complex().contains(sigma) {
        return Err(IhError::WrongDegree {
            simplex: sigma.to_vec(),
            degree: i,
        });
    }
    Ok((2..=n).filter(|&k| !x.skeleton_is_empty(n - k)).all(|k| {
        let pk = p.value(k).expect("checked above");
        x.intersection_dim(sigma, n - k)
            .is_none_or(|d| d as i64 <= i as i64 - k as i64 + pk)
    }))
}

/// Dimensions of the chain groups `I^pC_i` over a field.
pub fn chain_group_dims(x: &StratifiedComplex, p: &Perversity, coeff: &CoefficientSpec) -> Result<Vec<usize>, IhError> {
    let allow = allowable_simplices(x, p)?;
    let rb = restricted_boundaries(x, &allow);
    rb.obstruction
        .iter()
        .zip(&rb.allowable_counts)
        .map(|(m, &a)| Ok(a - rank_over(m, coeff)?))
        .collect()
}

/// `I^pH_*(X; coeff)` in degrees `0..=n`.
///
/// Over a field only ranks are needed. Over the integers the chain groups
/// are built as kernel lattices and the homology read off Smith forms.
pub fn ih_homology(x: &StratifiedComplex, p: &Perversity, coeff: &CoefficientSpec) -> Result<IHTable, IhError> {
    if *coeff == CoefficientSpec::Integers {
        let icc = integral_intersection_chain_complex(x, p)?;
        return Ok(IHTable {
            coefficients: *coeff,
            degrees: icc.homology()?,
        });
    }
    let allow = allowable_simplices(x, p)?;
    let rb = restricted_boundaries(x, &allow);
    let dims = crate::with_field!(coeff.field()?, f => field_dims(&f, &rb));
    Ok(IHTable::from_dims(*coeff, &dims))
}

/// Simplicial homology of the whole complex, straight from the boundary
/// matrices.
pub fn ordinary_homology(c: &SimplicialComplex, coeff: &CoefficientSpec) -> Result<IHTable, IhError> {
    let top = c.f_vector().len();
    let bd: Vec<_> = (0..top).map(|d| c.boundary_matrix(d)).collect();
    if *coeff == CoefficientSpec::Integers {
        let snfs: Vec<_> = bd.iter().map(|m| smith_normal_form(&m.over(&Integers))).collect();
        let degrees = (0..top)
            .map(|i| {
                let next = snfs.get(i + 1);
                let torsion = next
                    .map(|s| s.torsion())
                    .unwrap_or_default()
                    .iter()
                    .map(|t| t.to_u64().ok_or(IhError::TorsionOverflow))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(DegreeGroup {
                    rank: c.count(i) - snfs[i].rank() - next.map_or(0, |s| s.rank()),
                    torsion,
                })
            })
            .collect::<Result<Vec<_>, IhError>>()?;
        return Ok(IHTable {
            coefficients: *coeff,
            degrees,
        });
    }
    let ranks: Vec<usize> = crate::with_field!(coeff.field()?, f => bd.iter().map(|m| rank(&f, &m.over(&f))).collect());
    let dims: Vec<usize> = (0..top)
        .map(|i| c.count(i) - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect();
    Ok(IHTable::from_dims(*coeff, &dims))
}
