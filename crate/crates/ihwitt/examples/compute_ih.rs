//! Intersection homology of a stratified space for every standard
//! perversity, over the integers and a few fields.
//!
//! Run with `cargo run --example compute_ih`.

use ihwitt::catalog::catalog_complex;
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::ihcore::{ih_homology, Perversity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The suspension of RP^2: two isolated singular points with link RP^2.
    let x = catalog_complex("S_RP2")?;
    println!("S(RP^2): f-vector {:?}", x.complex().f_vector());
    for p in ["0", "m", "n", "t"] {
        let pv = Perversity::parse(p, x.dim())?;
        for c in ["Z", "Q", "Z2", "F9"] {
            let c: CoefficientSpec = c.parse()?;
            println!("  {p} = {pv}: {}", ih_homology(&x, &pv, &c)?);
        }
    }
    Ok(())
}
