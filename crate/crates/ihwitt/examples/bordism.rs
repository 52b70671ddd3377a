//! Witt bordism coefficient groups and the splitting of the bordism of a
//! space into homology with coefficients in those groups.

use ihwitt::catalog::catalog_complex;
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::formulas::omega_splitting;
use ihwitt::ihcore::ordinary_homology;
use ihwitt::witt::bordism_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3, 5] {
        let row: Vec<String> = (0..=12)
            .map(|n| bordism_group(n, p).map(|g| g.to_string()))
            .collect::<Result<_, _>>()?;
        println!("p = {p}: {}", row.join(" "));
    }
    let rp2 = catalog_complex("RP2")?;
    let h = ordinary_homology(rp2.complex(), &CoefficientSpec::Integers)?;
    println!("H_*(RP^2) = {h}");
    for n in 0..=8 {
        println!(
            "  Z3-Witt bordism of RP^2 in degree {n}: {}",
            omega_splitting(&h, n, 3)?
        );
    }
    Ok(())
}
