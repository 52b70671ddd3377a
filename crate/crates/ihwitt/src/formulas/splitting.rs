use crate::exactalg::AbelianGroup;
use crate::ihcore::{DegreeGroup, IHTable};
use crate::witt::bordism_group;

use super::FormulaError;

fn as_group(g: &DegreeGroup) -> AbelianGroup {
    AbelianGroup::new(g.rank, g.torsion.iter().copied())
}

/// `⊕_{r+s=n} H_r(X; Ω_s)` for `Z_p`-Witt bordism coefficients, from the
/// integral homology of `X`. Each `H_r(X; G)` is
/// `H_r ⊗ G ⊕ Tor(H_{r-1}, G)`.
pub fn omega_splitting(homology: &IHTable, n: usize, p: u32) -> Result<AbelianGroup, FormulaError> {
    if homology.coefficients != crate::exactalg::CoefficientSpec::Integers {
        return Err(FormulaError::InvalidTable("expected an integral table".into()));
    }
    let mut total = AbelianGroup::zero();
    for s in 0..=n {
        let coeff = bordism_group(s, p)?;
        if coeff.is_zero() {
            continue;
        }
        let r = (n - s) as i64;
        let h = as_group(&homology.group(r));
        let below = as_group(&homology.group(r - 1));
        total = total.direct_sum(&h.tensor(&coeff)).direct_sum(&below.tor(&coeff));
    }
    Ok(total)
}
