//! Walks the built-in catalog and checks every expected table and Witt
//! verdict that is cheap to compute.

use ihwitt::catalog::{catalog_entry, catalog_names, Built, CostClass};
use ihwitt::ihcore::ih_homology;
use ihwitt::witt::witt_condition_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in catalog_names() {
        let entry = catalog_entry(name)?;
        if entry.cost != CostClass::Instant {
            println!("{name:<12} skipped ({:?})", entry.cost);
            continue;
        }
        let built = (entry.build)()?;
        let mut ok = 0;
        for e in &entry.expected {
            let p = e.perversity(entry.dimension)?;
            let table = match &built {
                Built::Complex(x) => ih_homology(x, &p, &e.coefficients)?,
                Built::Formula(f) => f.evaluate(&p, &e.coefficients)?.table,
            };
            ok += usize::from(e.matches(&table));
        }
        if let Built::Complex(x) = &built {
            for w in &entry.witt {
                ok += usize::from(witt_condition_check(x, &w.coefficients, false)?.witt_condition == w.witt_condition);
            }
        }
        let total = entry.expected.len() + if entry.formula_level { 0 } else { entry.witt.len() };
        println!("{name:<12} {ok}/{total} expectations met  ({})", entry.description);
    }
    Ok(())
}
