use crate::exactalg::{AbelianGroup, CoefficientSpec};

use super::classes::witt_group;
use super::WittError;

/// `Ω_n` of `Z_p`-Witt spaces: `Z` in degree 0, `W(Z_p)` in positive
/// degrees divisible by four, zero otherwise.
pub fn bordism_group(n: usize, p: u32) -> Result<AbelianGroup, WittError> {
    let spec: CoefficientSpec = format!("Zp:{p}").parse()?;
    Ok(match n {
        0 => AbelianGroup::free(1),
        n if n % 4 == 0 => AbelianGroup::new(0, witt_group(&spec)?.cyclic_orders()),
        _ => AbelianGroup::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_mod_four_is_three() {
        assert_eq!(bordism_group(12, 7).unwrap(), AbelianGroup::new(0, [4]));
        assert_eq!(bordism_group(13, 7).unwrap(), AbelianGroup::zero());
        assert!(bordism_group(8, 9).is_err());
    }
}
