use serde::{Deserialize, Serialize};

use crate::exactalg::CoefficientSpec;
use crate::simplicial::{simplicial_link, StratifiedComplex};

use super::homology::ih_homology;
use super::perversity::Perversity;
use super::table::IHTable;
use super::IhError;

/// Comparison of the mod-`p` dimension with the universal coefficient
/// prediction in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UctDegree {
    pub degree: usize,
    pub predicted: usize,
    pub actual: usize,
}

/// Universal coefficient comparison for intersection homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UctReport {
    pub prime: u32,
    pub integral: IHTable,
    pub modular: IHTable,
    pub degrees: Vec<UctDegree>,
}

impl UctReport {
    /// Degrees where the prediction fails.
    pub fn violations(&self) -> Vec<&UctDegree> {
        self.degrees.iter().filter(|d| d.predicted != d.actual).collect()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Compares `dim I^pH_i(X; Z_p)` against `rank_i + t_p(i) + t_p(i-1)`,
/// where `t_p(i)` counts torsion coefficients of `I^pH_i(X; Z)` divisible
/// by `p`.
pub fn uct_violation_report(x: &StratifiedComplex, p: &Perversity, prime: u32) -> Result<UctReport, IhError> {
    let integral = ih_homology(x, p, &CoefficientSpec::Integers)?;
    let coeff: CoefficientSpec = format!("Zp:{prime}").parse()?;
    let modular = ih_homology(x, p, &coeff)?;
    let t_p = |i: i64| {
        integral
            .group(i)
            .torsion
            .iter()
            .filter(|&&t| t % prime as u64 == 0)
            .count()
    };
    let degrees = (0..modular.degrees.len())
        .map(|i| UctDegree {
            degree: i,
            predicted: integral.dim(i as i64) + t_p(i as i64) + t_p(i as i64 - 1),
            actual: modular.dim(i as i64),
        })
        .collect();
    Ok(UctReport {
        prime,
        integral,
        modular,
        degrees,
    })
}

/// Integral intersection homology of the link of one stratum component, in
/// the degree that the local torsion condition inspects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkTorsion {
    /// Codimension of the stratum.
    pub codimension: usize,
    /// A simplex of the component whose link was used.
    pub simplex: Vec<u32>,
    /// Degree `c - 2 - p(c)`; `None` when negative (nothing to check).
    pub degree: Option<usize>,
    pub torsion: Vec<u64>,
}

/// Local torsion condition: at every stratum of codimension `c ≥ 2` the
/// link `L` has torsion-free `I^pH_{c-2-p(c)}(L; Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionFreeReport {
    pub strata: Vec<LinkTorsion>,
}

impl TorsionFreeReport {
    pub fn passes(&self) -> bool {
        self.strata.iter().all(|s| s.torsion.is_empty())
    }

    pub fn failures(&self) -> Vec<&LinkTorsion> {
        self.strata.iter().filter(|s| !s.torsion.is_empty()).collect()
    }
}

/// Checks the local torsion condition on one link per stratum component.
pub fn torsion_free_check(x: &StratifiedComplex, p: &Perversity) -> Result<TorsionFreeReport, IhError> {
    let n = x.dim();
    p.require(n)?;
    let mut strata = Vec::new();
    for comp in x.stratum_components() {
        let c = n - comp.dim;
        if c < 2 {
            continue;
        }
        let simplex = x.complex().simplices(comp.dim)[comp.simplices[0]].clone();
        let pc = p.value(c).expect("checked above");
        let deg = c as i64 - 2 - pc;
        let (degree, torsion) = if deg < 0 {
            (None, Vec::new())
        } else {
            let link = simplicial_link(x, &simplex)?;
            let table = ih_homology(&link, &p.truncate(link.dim()), &CoefficientSpec::Integers)?;
            (Some(deg as usize), table.group(deg).torsion)
        };
        strata.push(LinkTorsion {
            codimension: c,
            simplex,
            degree,
            torsion,
        });
    }
    Ok(TorsionFreeReport { strata })
}
