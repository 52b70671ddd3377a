mod common;

use ihwitt::catalog::{catalog_complex, cycle};
use ihwitt::exactalg::{AbelianGroup, CoefficientSpec};
use ihwitt::formulas::{
    compactified_bundle_formula, cone_formula, omega_splitting, reduce_coefficients, suspension_formula, FormulaError,
    FormulaSpace,
};
use ihwitt::ihcore::{ih_homology, ordinary_homology, DegreeGroup, IHTable, Perversity};
use ihwitt::simplicial::{build_complex, cone, product, suspension, StratifiedComplex};

use common::coeff;

fn z_table(groups: &[(usize, &[u64])]) -> IHTable {
    IHTable {
        coefficients: CoefficientSpec::Integers,
        degrees: groups
            .iter()
            .map(|(r, t)| DegreeGroup {
                rank: *r,
                torsion: t.to_vec(),
            })
            .collect(),
    }
}

#[test]
fn cone_and_suspension_match_chain_level() {
    for name in ["S1", "RP2", "S_2circles", "T2"] {
        let l = catalog_complex(name).unwrap();
        let n = l.dim();
        for p in ["0", "m", "n", "t"] {
            let pv = Perversity::parse(p, n + 1).unwrap();
            for c in ["Z", "Q", "Z2", "Z3", "F4"] {
                let c = coeff(c);
                let link = ih_homology(&l, &pv.truncate(n), &c).unwrap();
                assert_eq!(
                    ih_homology(&cone(&l).unwrap(), &pv, &c).unwrap(),
                    cone_formula(&link, n, &pv).unwrap(),
                    "cone {name} {p} {c}"
                );
                assert_eq!(
                    ih_homology(&suspension(&l).unwrap(), &pv, &c).unwrap(),
                    suspension_formula(&link, n, &pv).unwrap(),
                    "suspension {name} {p} {c}"
                );
            }
        }
    }
}

#[test]
fn zero_dimensional_links() {
    let points = StratifiedComplex::trivial(build_complex(&[vec![0], vec![1], vec![2]]).unwrap());
    let q = coeff("Q");
    let pv = Perversity::parse("0", 1).unwrap();
    let base = ih_homology(&points, &Perversity::zero(0), &q).unwrap();
    assert_eq!(base.dims(), vec![3]);
    assert_eq!(suspension_formula(&base, 0, &pv).unwrap().dims(), vec![1, 2]);
    assert_eq!(
        ih_homology(&suspension(&points).unwrap(), &pv, &q).unwrap().dims(),
        vec![1, 2]
    );
    assert_eq!(cone_formula(&base, 0, &pv).unwrap().dims(), vec![1, 0]);
    assert_eq!(
        ih_homology(&cone(&points).unwrap(), &pv, &q).unwrap().dims(),
        vec![1, 0]
    );
}

#[test]
fn products_with_manifolds_match_chain_level() {
    let x = catalog_complex("S_RP2").unwrap();
    let circle = cycle(3, 100);
    let xs = product(&x, &circle).unwrap();
    let h_circle = z_table(&[(1, &[]), (1, &[])]);
    for c in ["Q", "Z2"] {
        let c = coeff(c);
        let pv = Perversity::parse("m", 3).unwrap();
        let table = ih_homology(&x, &pv, &c).unwrap();
        let recipe = FormulaSpace::Computed { dim: 3, table }.times(h_circle.clone());
        let p4 = Perversity::parse("m", 4).unwrap();
        assert_eq!(
            recipe.evaluate(&p4, &c).unwrap().table,
            ih_homology(&xs, &p4, &c).unwrap(),
            "{c}"
        );
    }
}

#[test]
fn thom_space_tables() {
    let s2 = z_table(&[(1, &[]), (0, &[]), (1, &[])]);
    let m = Perversity::parse("m", 4).unwrap();
    for (e, c, d2) in [
        (3, "Z3", 0),
        (3, "Q", 1),
        (3, "Z5", 1),
        (6, "Z2", 0),
        (6, "Z3", 0),
        (6, "Z5", 1),
        (0, "Q", 0),
    ] {
        let c = coeff(c);
        let out = compactified_bundle_formula(&reduce_coefficients(&s2, &c).unwrap(), 2, e, &m).unwrap();
        assert!(out.verified);
        assert_eq!(out.transition_degree, 2);
        assert_eq!(out.table.dim(2), d2, "e={e} over {c}");
    }
    // Over S^1 x S^2 with a 2-disk bundle the transition needs a cap product.
    let s1s2 = z_table(&[(1, &[]), (1, &[]), (1, &[]), (1, &[])]);
    let five = Perversity::parse("m", 5).unwrap();
    let out = compactified_bundle_formula(&reduce_coefficients(&s1s2, &coeff("Q")).unwrap(), 2, 1, &five).unwrap();
    assert!(!out.verified);
    let err = compactified_bundle_formula(&s2, 2, 3, &m).unwrap_err();
    assert_eq!(err, FormulaError::NotAField);
}

#[test]
fn universal_coefficients_for_manifolds() {
    for name in ["RP2", "Klein", "L3", "L5", "T2"] {
        let x = catalog_complex(name).unwrap();
        let z = ordinary_homology(x.complex(), &CoefficientSpec::Integers).unwrap();
        for c in ["Q", "Z2", "Z3", "Z5", "F4", "F9"] {
            let c = coeff(c);
            assert_eq!(
                reduce_coefficients(&z, &c).unwrap(),
                ordinary_homology(x.complex(), &c).unwrap(),
                "{name} {c}"
            );
        }
    }
}

#[test]
fn splitting_on_a_circle() {
    let circle = z_table(&[(1, &[]), (1, &[])]);
    let point = z_table(&[(1, &[])]);
    assert_eq!(omega_splitting(&circle, 4, 5).unwrap(), AbelianGroup::new(0, [2, 2]));
    assert_eq!(omega_splitting(&circle, 5, 3).unwrap(), AbelianGroup::new(0, [4]));
    assert_eq!(omega_splitting(&circle, 1, 3).unwrap(), AbelianGroup::free(1));
    assert_eq!(omega_splitting(&point, 8, 2).unwrap(), AbelianGroup::new(0, [2]));
    // H_1(RP^2) = Z2 meets W(Z3) = Z4 once as a tensor product and once,
    // a degree higher, as Tor.
    let rp2 = z_table(&[(1, &[]), (0, &[2]), (0, &[])]);
    assert_eq!(omega_splitting(&rp2, 5, 3).unwrap(), AbelianGroup::new(0, [2]));
    assert_eq!(omega_splitting(&rp2, 6, 3).unwrap(), AbelianGroup::new(0, [2]));
    assert_eq!(omega_splitting(&rp2, 7, 3).unwrap(), AbelianGroup::zero());
    assert_eq!(omega_splitting(&rp2, 6, 2).unwrap(), AbelianGroup::new(0, [2]));
}

#[test]
fn recipes_serialize() {
    let recipe = FormulaSpace::CompactifiedBundle {
        base: z_table(&[(1, &[]), (2, &[]), (1, &[])]),
        fiber_rank: 2,
        euler: 3,
    }
    .suspension()
    .times(z_table(&[(1, &[]), (1, &[])]));
    assert_eq!(recipe.dim(), 6);
    let json = serde_json::to_string(&recipe).unwrap();
    assert_eq!(serde_json::from_str::<FormulaSpace>(&json).unwrap(), recipe);
}

#[test]
fn mixed_coefficients_are_rejected() {
    let t = FormulaSpace::Computed {
        dim: 2,
        table: IHTable::from_dims(coeff("Z2"), &[1, 1, 1]),
    };
    let m = Perversity::parse("m", 2).unwrap();
    assert!(matches!(
        t.evaluate(&m, &coeff("Q")),
        Err(FormulaError::MixedCoefficients(..))
    ));
}
