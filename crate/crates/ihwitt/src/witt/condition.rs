use serde::{Deserialize, Serialize};

use crate::exactalg::CoefficientSpec;
use crate::ihcore::{ih_homology, Perversity};
use crate::simplicial::{simplicial_link, verify_pseudomanifold, StratifiedComplex};

use super::WittError;

/// Witt condition at one odd-codimension stratum component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumWitt {
    /// Dimension `n - 2k - 1` of the stratum.
    pub stratum_dim: usize,
    /// Half the link dimension.
    pub middle_degree: usize,
    /// Simplex whose link is reported.
    pub simplex: Vec<u32>,
    /// `dim I^mH_k(L)` for the reported link.
    pub link_middle_dim: usize,
    pub links_checked: usize,
    pub failing_links: usize,
    pub passes: bool,
}

/// Verdict of the Witt condition over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittReport {
    pub coefficients: CoefficientSpec,
    pub strata: Vec<StratumWitt>,
    /// All finite complexes are compact.
    pub compact: bool,
    pub oriented: bool,
    pub irreducible: bool,
    /// Every link condition holds.
    pub witt_condition: bool,
    /// The condition plus orientation and irreducibility.
    pub witt_space: bool,
}

/// Tests `I^mH_k(L; F) = 0` for the link `L^{2k}` of each stratum of
/// dimension `n - 2k - 1`, `k > 0`. One link per component is examined unless
/// `all_links` is set. Even codimension strata impose no condition.
pub fn witt_condition_check(
    x: &StratifiedComplex,
    coeff: &CoefficientSpec,
    all_links: bool,
) -> Result<WittReport, WittError> {
    if !coeff.is_field() {
        return Err(WittError::NotAField);
    }
    let pm = verify_pseudomanifold(x);
    if !pm.is_pseudomanifold {
        return Err(WittError::NotPseudomanifold(pm.failures));
    }
    let n = x.dim();
    let mut strata = Vec::new();
    for comp in x.stratum_components() {
        let codim = n - comp.dim;
        if codim.is_multiple_of(2) || codim < 3 {
            continue;
        }
        let k = (codim - 1) / 2;
        let middle = Perversity::lower_middle(2 * k);
        let chosen: Vec<usize> = if all_links {
            comp.simplices.clone()
        } else {
            vec![comp.simplices[0]]
        };
        let mut first: Option<(Vec<u32>, usize)> = None;
        let mut failing = 0;
        for &idx in &chosen {
            let s = x.complex().simplices(comp.dim)[idx].clone();
            let link = simplicial_link(x, &s)?;
            let d = ih_homology(&link, &middle, coeff)?.dim(k as i64);
            if d != 0 {
                failing += 1;
            }
            if first.is_none() || (d != 0 && first.as_ref().is_some_and(|f| f.1 == 0)) {
                first = Some((s, d));
            }
        }
        let (simplex, link_middle_dim) = first.expect("components are nonempty");
        strata.push(StratumWitt {
            stratum_dim: comp.dim,
            middle_degree: k,
            simplex,
            link_middle_dim,
            links_checked: chosen.len(),
            failing_links: failing,
            passes: failing == 0,
        });
    }
    let witt_condition = strata.iter().all(|s| s.passes);
    Ok(WittReport {
        coefficients: *coeff,
        strata,
        compact: true,
        oriented: pm.oriented,
        irreducible: pm.irreducible,
        witt_condition,
        witt_space: witt_condition && pm.oriented && pm.irreducible,
    })
}

/// Whether the Witt verdicts over `Z_p` and `F_{p^m}` agree stratum by
/// stratum.
pub fn characteristic_reduction_check(x: &StratifiedComplex, p: u32, m: u32) -> Result<bool, WittError> {
    let base = witt_condition_check(x, &CoefficientSpec::PrimeField(p), false)?;
    let ext_spec = if m == 1 {
        CoefficientSpec::PrimeField(p)
    } else {
        CoefficientSpec::FiniteField { p, m }
    };
    let ext = witt_condition_check(x, &ext_spec, false)?;
    Ok(base.strata.len() == ext.strata.len()
        && base
            .strata
            .iter()
            .zip(&ext.strata)
            .all(|(a, b)| a.passes == b.passes && a.link_middle_dim == b.link_middle_dim))
}
