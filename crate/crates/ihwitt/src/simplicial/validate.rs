use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::complex::{facet, Simplex};
use super::orientation::orient;
use super::stratified::StratifiedComplex;

/// Result of checking the pseudomanifold conditions on a filtered complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudomanifoldReport {
    /// Every simplex is a face of an `n`-simplex.
    pub dimensionally_homogeneous: bool,
    /// Every `(n-1)`-simplex is a face of exactly two `n`-simplices.
    pub face_regular: bool,
    /// `X^{n-1} = X^{n-2}`.
    pub no_codimension_one_stratum: bool,
    pub is_pseudomanifold: bool,
    /// The top stratum admits a coherent orientation.
    pub oriented: bool,
    /// `X - X^{n-2}` is connected.
    pub irreducible: bool,
    /// Witnesses for failed conditions.
    pub failures: Vec<String>,
}

fn show(s: &Simplex) -> String {
    format!("{s:?}")
}

/// Checks dimensional homogeneity, face regularity and the absence of a
/// codimension-one stratum, and records orientability and irreducibility of
/// the complement of the singular set.
pub fn verify_pseudomanifold(x: &StratifiedComplex) -> PseudomanifoldReport {
    let c = x.complex();
    let n = x.dim();
    let mut failures = Vec::new();

    let top = c.count(n);
    let homogeneous = c.dim() == Some(n) && c.maximal_simplices().iter().all(|s| s.len() == n + 1);
    if !homogeneous {
        for s in c.maximal_simplices().iter().filter(|s| s.len() != n + 1).take(5) {
            failures.push(format!("maximal simplex {} has dimension below {n}", show(s)));
        }
        if top == 0 {
            failures.push(format!("no simplices of dimension {n}"));
        }
    }

    let mut cofaces: HashMap<Simplex, usize> = HashMap::new();
    if n > 0 {
        for s in c.simplices(n) {
            for k in 0..s.len() {
                *cofaces.entry(facet(s, k)).or_default() += 1;
            }
        }
    }
    let mut face_regular = true;
    if n > 0 {
        for f in c.simplices(n - 1) {
            let k = cofaces.get(f).copied().unwrap_or(0);
            if k != 2 {
                if face_regular || failures.len() < 10 {
                    failures.push(format!("{} lies in {k} top simplices", show(f)));
                }
                face_regular = false;
            }
        }
    }

    let mut no_codim_one = true;
    if n >= 1 {
        for d in 0..n {
            for (i, s) in c.simplices(d).iter().enumerate() {
                if x.level_at(d, i) == n - 1 {
                    if no_codim_one {
                        failures.push(format!("{} lies in a codimension-one stratum", show(s)));
                    }
                    no_codim_one = false;
                }
            }
        }
    }

    let singular = |f: &[u32]| n >= 2 && x.in_skeleton(n - 2, f);
    let orientation = orient(c, singular);
    let is_pseudomanifold = homogeneous && face_regular && no_codim_one;
    PseudomanifoldReport {
        dimensionally_homogeneous: homogeneous,
        face_regular,
        no_codimension_one_stratum: no_codim_one,
        is_pseudomanifold,
        oriented: is_pseudomanifold && orientation.orientation.is_some(),
        irreducible: orientation.components == 1,
        failures,
    }
}
