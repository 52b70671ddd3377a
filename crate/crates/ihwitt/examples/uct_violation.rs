//! Intersection homology does not satisfy universal coefficients in
//! general: on the cone over RP^2 the mod 2 table is not the reduction of
//! the integral one.

use ihwitt::catalog::catalog_complex;
use ihwitt::ihcore::{torsion_free_check, uct_violation_report, Perversity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = catalog_complex("cone_RP2")?;
    for p in ["0", "t"] {
        let pv = Perversity::parse(p, 3)?;
        let report = uct_violation_report(&x, &pv, 2)?;
        println!("perversity {pv}");
        println!("  integral: {}", report.integral);
        println!("  mod 2:    {}", report.modular);
        for d in &report.degrees {
            let mark = if d.predicted == d.actual { "" } else { "  <- violation" };
            println!(
                "  degree {}: predicted {} actual {}{mark}",
                d.degree, d.predicted, d.actual
            );
        }
        let links = torsion_free_check(&x, &pv)?;
        println!("  link torsion condition holds: {}", links.passes());
    }
    Ok(())
}
