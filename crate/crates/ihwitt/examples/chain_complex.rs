//! The explicit intersection chain complex: allowable simplices, chain ranks
//! and homology computed from it, compared with the rank-only route.

use ihwitt::catalog::catalog_complex;
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::ihcore::{chain_group_dims, ih_homology, intersection_chain_complex, Perversity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = catalog_complex("SS_RP2")?;
    let m = Perversity::parse("m", x.dim())?;
    for c in [CoefficientSpec::Integers, "Z2".parse()?] {
        let e = intersection_chain_complex(&x, &m, &c)?;
        println!("over {}: d^2 = 0: {}", c.short_name(), e.is_complex());
        println!("  chain ranks: {:?}", e.chain_ranks());
        println!("  homology:    {}", e.homology()?);
        println!("  rank route:  {}", ih_homology(&x, &m, &c)?);
    }
    println!(
        "field chain dims over Q: {:?}",
        chain_group_dims(&x, &m, &CoefficientSpec::Rationals)?
    );
    Ok(())
}
