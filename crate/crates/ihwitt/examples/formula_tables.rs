//! Closed-form engines: cones, suspensions, Thom spaces of plane bundles and
//! Künneth products, applied to spaces too large to triangulate.

use ihwitt::catalog::{catalog_build, Built};
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::formulas::{compactified_bundle_formula, reduce_coefficients};
use ihwitt::ihcore::{DegreeGroup, IHTable, Perversity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let torus = IHTable {
        coefficients: CoefficientSpec::Integers,
        degrees: [1, 2, 1].iter().map(|&r| DegreeGroup::free(r)).collect(),
    };
    let m4 = Perversity::parse("m", 4)?;
    for e in [2, 3, 6] {
        for c in ["Q", "Z2", "Z3", "Z5"] {
            let base = reduce_coefficients(&torus, &c.parse()?)?;
            let out = compactified_bundle_formula(&base, 2, e, &m4)?;
            println!("Thom space over T^2, e = {e}: {}", out.table);
        }
    }
    for name in ["X8_SY", "X8_SJ", "X12_SY_CP2"] {
        let Built::Formula(recipe) = catalog_build(name)? else {
            continue;
        };
        let m = Perversity::parse("m", recipe.dim())?;
        for c in ["Q", "Z3"] {
            let out = recipe.evaluate(&m, &c.parse()?)?;
            println!("{name}: {} (verified: {})", out.table, out.verified);
        }
    }
    Ok(())
}
