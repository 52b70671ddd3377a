mod common;

use ihwitt::catalog::{
    catalog_build, catalog_entry, catalog_names, manifest, witt_class_of_catalog_space, Built, CatalogError, CostClass,
};
use ihwitt::ihcore::{ih_homology, IHTable};
use ihwitt::simplicial::verify_pseudomanifold;
use ihwitt::witt::witt_condition_check;

use common::coeff;

fn compute(built: &Built, e: &ihwitt::catalog::Expectation, dim: usize) -> IHTable {
    let p = e.perversity(dim).unwrap();
    match built {
        Built::Complex(x) => ih_homology(x, &p, &e.coefficients).unwrap(),
        Built::Formula(f) => f.evaluate(&p, &e.coefficients).unwrap().table,
    }
}

fn check_entries(filter: impl Fn(CostClass) -> bool) {
    for name in catalog_names() {
        let entry = catalog_entry(name).unwrap();
        if !filter(entry.cost) {
            continue;
        }
        let built = (entry.build)().unwrap();
        match &built {
            Built::Complex(x) => {
                assert!(!entry.formula_level, "{name}");
                assert_eq!(x.dim(), entry.dimension, "{name}");
            }
            Built::Formula(f) => {
                assert!(entry.formula_level, "{name}");
                assert_eq!(f.dim(), entry.dimension, "{name}");
            }
        }
        for e in &entry.expected {
            let table = compute(&built, e, entry.dimension);
            assert!(
                e.matches(&table),
                "{name} {} {}: got {table:?}",
                e.perversity,
                e.coefficients
            );
        }
        if let Built::Complex(x) = &built {
            for w in &entry.witt {
                let r = witt_condition_check(x, &w.coefficients, false).unwrap();
                assert_eq!(
                    r.witt_condition, w.witt_condition,
                    "{name} Witt over {}",
                    w.coefficients
                );
            }
        }
    }
}

#[test]
fn instant_entries_meet_their_expectations() {
    check_entries(|c| c == CostClass::Instant);
}

#[test]
fn slower_entries_meet_their_expectations() {
    check_entries(|c| c != CostClass::Instant);
}

#[test]
fn every_triangulated_entry_is_a_pseudomanifold_except_the_cone() {
    for name in catalog_names() {
        if let Built::Complex(x) = catalog_build(name).unwrap() {
            let r = verify_pseudomanifold(&x);
            assert_eq!(r.is_pseudomanifold, name != "cone_RP2", "{name}: {:?}", r.failures);
        }
    }
}

#[test]
fn recorded_intersection_forms() {
    for (name, c, order) in [
        ("CP2_9", "Z3", Some(4)),
        ("CP2_9", "Z5", Some(2)),
        ("CP2#CP2", "Z3", Some(2)),
        ("CP2#CP2", "Z5", Some(1)),
        ("Uhat_S2_e2", "Z3", Some(4)),
        ("X8_SY", "F9", Some(1)),
        ("CP2_9", "Q", None),
    ] {
        let class = witt_class_of_catalog_space(name, &coeff(c)).unwrap();
        assert_eq!(class.order(), order, "{name} over {c}");
    }
    assert_eq!(
        witt_class_of_catalog_space("S2", &coeff("Q")),
        Err(CatalogError::NoPairingData("S2".into()))
    );
}

#[test]
fn manifest_lists_every_name() {
    let m = manifest();
    let names: Vec<&str> = m.iter().map(|e| e.name.as_str()).collect();
    assert_eq!(names, catalog_names());
    for e in &m {
        assert_eq!(e.expectations, e.literature + e.standard + e.derived, "{}", e.name);
        assert!(e.expectations > 0, "{}", e.name);
    }
    assert!(m.iter().any(|e| e.kind == "formula"));
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(
        serde_json::from_str::<Vec<ihwitt::catalog::ManifestEntry>>(&json).unwrap(),
        m
    );
}

#[test]
fn unknown_names_are_reported() {
    assert!(matches!(catalog_entry("nope"), Err(CatalogError::UnknownName(n)) if n == "nope"));
}
