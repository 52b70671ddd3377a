//! The K-Witt condition depends on the field: suspensions of RP^2 are
//! Witt over Q but not over Z2, while the suspension of L(3,1) x S^1 fails
//! only in characteristic 3.

use ihwitt::catalog::catalog_complex;
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::witt::{characteristic_reduction_check, witt_condition_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["S_RP2", "SS_RP2", "S_2circles", "SJ_L3"] {
        let x = catalog_complex(name)?;
        print!("{name:<11}");
        for c in ["Q", "Z2", "Z3", "Z5", "F4", "F9"] {
            let c: CoefficientSpec = c.parse()?;
            let r = witt_condition_check(&x, &c, false)?;
            print!(" {}:{}", c.short_name(), if r.witt_condition { "pass" } else { "fail" });
        }
        let r = witt_condition_check(&x, &CoefficientSpec::Rationals, false)?;
        println!("  oriented={} irreducible={}", r.oriented, r.irreducible);
        println!(
            "{:11} F9 agrees with Z3: {}",
            "",
            characteristic_reduction_check(&x, 3, 2)?
        );
    }
    Ok(())
}
