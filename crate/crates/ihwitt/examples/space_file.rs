//! Builds a stratified space by hand, writes it in the JSON space format and
//! reads it back.

use ihwitt::exactalg::CoefficientSpec;
use ihwitt::ihcore::{ih_homology, Perversity};
use ihwitt::simplicial::{parse_space, verify_pseudomanifold, write_space};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two tetrahedron boundaries glued at vertex 0: a pinched pair of
    // spheres, with the pinch point as the singular stratum.
    let text = r#"{
        "dimension": 2,
        "maximal_simplices": [
            [0,1,2],[0,1,3],[0,2,3],[1,2,3],
            [0,4,5],[0,4,6],[0,5,6],[4,5,6]
        ],
        "skeleta": { "0": [[0]] }
    }"#;
    let x = parse_space(text)?;
    let report = verify_pseudomanifold(&x);
    println!(
        "pseudomanifold: {} irreducible: {}",
        report.is_pseudomanifold, report.irreducible
    );
    // In dimension 2 every perversity is zero, and IH sees the two spheres
    // as if they were pulled apart.
    let zero = Perversity::parse("0", 2)?;
    println!("IH: {}", ih_homology(&x, &zero, &CoefficientSpec::Integers)?);
    let round_trip = parse_space(&write_space(&x))?;
    println!("round trip preserves the space: {}", round_trip == x);
    Ok(())
}
