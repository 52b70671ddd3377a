mod common;

use std::collections::BTreeMap;

use ihwitt::catalog::{catalog_complex, torus};
use ihwitt::exactalg::{CoefficientSpec, Rationals};
use ihwitt::ihcore::{
    chain_group_dims, ih_homology, intersection_chain_complex, intersection_chain_complex_over, is_allowable,
    ordinary_homology, torsion_free_check, uct_violation_report, IHTable, IhError, Perversity,
};
use ihwitt::simplicial::{cone, suspension, StratifiedComplex};
use proptest::prelude::*;

use common::{coeff, oracle_allowable, oracle_ih_dims, FIELDS};

const PERVERSITIES: [&str; 4] = ["0", "m", "n", "t"];

fn oracle_table(x: &StratifiedComplex, p: &Perversity, c: &CoefficientSpec) -> IHTable {
    let dims = match c {
        CoefficientSpec::Rationals => oracle_ih_dims(&Rationals, x, p),
        _ => oracle_ih_dims(&c.finite_field().unwrap(), x, p),
    };
    IHTable::from_dims(*c, &dims)
}

#[test]
fn rank_route_matches_dense_oracle() {
    for name in ["cone_RP2", "S_RP2", "S_2circles", "RP2"] {
        let x = catalog_complex(name).unwrap();
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for c in ["Q", "Z2", "Z3", "F4", "F9"] {
                let c = coeff(c);
                assert_eq!(
                    ih_homology(&x, &pv, &c).unwrap(),
                    oracle_table(&x, &pv, &c),
                    "{name} {p} {c}"
                );
            }
        }
    }
}

#[test]
fn allowability_matches_definition() {
    for name in ["cone_RP2", "SS_RP2"] {
        let x = catalog_complex(name).unwrap();
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for i in 0..=x.dim() {
                for s in x.complex().simplices(i) {
                    assert_eq!(is_allowable(&x, &pv, s, i).unwrap(), oracle_allowable(&x, &pv, s, i));
                }
            }
        }
    }
}

#[test]
fn explicit_complex_agrees_with_rank_route() {
    for name in ["cone_RP2", "S_RP2", "SS_RP2", "L3"] {
        let x = catalog_complex(name).unwrap();
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for c in ["Z", "Q", "Z2", "F4"] {
                let c = coeff(c);
                let e = intersection_chain_complex(&x, &pv, &c).unwrap();
                assert!(e.is_complex(), "{name} {p} {c}: d^2 != 0");
                assert_eq!(
                    e.homology().unwrap(),
                    ih_homology(&x, &pv, &c).unwrap(),
                    "{name} {p} {c}"
                );
                if c.is_field() {
                    assert_eq!(e.chain_ranks(), chain_group_dims(&x, &pv, &c).unwrap());
                }
            }
        }
    }
}

#[test]
fn trivially_filtered_manifolds_give_ordinary_homology() {
    for name in ["S2", "T2", "RP2", "L3"] {
        let x = catalog_complex(name).unwrap();
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for c in FIELDS.iter().chain(&["Z"]) {
                let c = coeff(c);
                assert_eq!(
                    ih_homology(&x, &pv, &c).unwrap(),
                    ordinary_homology(x.complex(), &c).unwrap(),
                    "{name} {p} {c}"
                );
            }
        }
    }
}

#[test]
fn integral_free_rank_is_rational_dimension() {
    for name in ["cone_RP2", "S_RP2", "SS_RP2", "J_L3"] {
        let x = catalog_complex(name).unwrap();
        let pv = Perversity::parse("m", x.dim()).unwrap();
        let z = ih_homology(&x, &pv, &CoefficientSpec::Integers).unwrap();
        let q = ih_homology(&x, &pv, &CoefficientSpec::Rationals).unwrap();
        assert_eq!(z.degrees.iter().map(|g| g.rank).collect::<Vec<_>>(), q.dims(), "{name}");
    }
}

#[test]
fn chain_level_perversity_monotonicity() {
    for name in ["cone_RP2", "SS_RP2"] {
        let x = catalog_complex(name).unwrap();
        let n = x.dim();
        let ps: Vec<Perversity> = PERVERSITIES.iter().map(|p| Perversity::parse(p, n).unwrap()).collect();
        for small in &ps {
            for large in ps.iter().filter(|q| small.le(q)) {
                let cs = intersection_chain_complex_over(Rationals, CoefficientSpec::Rationals, &x, small).unwrap();
                let cl = intersection_chain_complex_over(Rationals, CoefficientSpec::Rationals, &x, large).unwrap();
                for i in 0..=n {
                    assert!(cs.bases[i].len() <= cl.bases[i].len());
                    for v in cs.bases[i].vectors() {
                        let global: Vec<_> = v.iter().map(|(k, a)| (cs.allowable[i][*k], a.clone())).collect();
                        assert!(cl.contains(i, &global), "{name} {small:?} <= {large:?} degree {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn uct_fails_for_the_cone_on_the_projective_plane() {
    let x = catalog_complex("cone_RP2").unwrap();
    let zero = Perversity::parse("0", 3).unwrap();
    let report = uct_violation_report(&x, &zero, 2).unwrap();
    let bad: Vec<usize> = report.violations().iter().map(|d| d.degree).collect();
    assert_eq!(bad, vec![2]);
    assert!(uct_violation_report(&x, &zero, 3).unwrap().holds());
    let top = Perversity::parse("t", 3).unwrap();
    assert!(uct_violation_report(&x, &top, 2).unwrap().holds());
}

#[test]
fn torsion_free_links() {
    let x = catalog_complex("cone_RP2").unwrap();
    let zero = torsion_free_check(&x, &Perversity::parse("0", 3).unwrap()).unwrap();
    assert!(!zero.passes());
    assert_eq!(zero.failures()[0].torsion, vec![2]);
    assert!(torsion_free_check(&x, &Perversity::parse("t", 3).unwrap())
        .unwrap()
        .passes());
    let s = catalog_complex("S_2circles").unwrap();
    assert!(torsion_free_check(&s, &Perversity::parse("m", 2).unwrap())
        .unwrap()
        .passes());
}

#[test]
fn perversity_errors() {
    assert!(matches!(
        Perversity::new(vec![1, 1]),
        Err(IhError::InvalidPerversity(_))
    ));
    assert!(matches!(
        Perversity::new(vec![0, 2]),
        Err(IhError::InvalidPerversity(_))
    ));
    assert!(matches!(Perversity::parse("x", 3), Err(IhError::InvalidPerversity(_))));
    let x = catalog_complex("SS_RP2").unwrap();
    let short = Perversity::parse("p:0,0", 3).unwrap();
    assert!(matches!(
        ih_homology(&x, &short, &CoefficientSpec::Rationals),
        Err(IhError::MissingPerversity(4))
    ));
    let m = Perversity::parse("m", 6).unwrap();
    assert_eq!(m.values(), &[0, 0, 1, 1, 2]);
    assert_eq!(m.dual().values(), Perversity::parse("n", 6).unwrap().values());
}

#[test]
fn nested_cones_of_circles() {
    // c(c(S^1)) is a 3-ball; IH of a cone vanishes above the cutoff.
    let s1 = StratifiedComplex::trivial(ihwitt::catalog::cycle(4, 0));
    let cc = cone(&cone(&s1).unwrap()).unwrap();
    for p in PERVERSITIES {
        let pv = Perversity::parse(p, 3).unwrap();
        assert_eq!(
            ih_homology(&cc, &pv, &coeff("Q")).unwrap().dims(),
            vec![1, 0, 0, 0],
            "{p}"
        );
    }
}

// A torus or a suspended torus with a random set of marked points and edges
// as lower skeleta.
fn random_filtration() -> impl Strategy<Value = (bool, Vec<bool>, Vec<bool>, usize, u8)> {
    (
        any::<bool>(),
        proptest::collection::vec(any::<bool>(), 11),
        proptest::collection::vec(any::<bool>(), 27),
        0usize..4,
        0u8..3,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_filtrations_match_the_oracle((suspend, verts, edges, p_index, c_index) in random_filtration()) {
        let t = StratifiedComplex::trivial(torus());
        let base = if suspend { suspension(&t).unwrap() } else { t };
        let n = base.dim();
        let c = base.complex();
        let mut skeleta: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
        let points: Vec<Vec<u32>> = c.vertices().into_iter().zip(&verts).filter(|(_, &b)| b).map(|(v, _)| vec![v]).collect();
        if n == 3 {
            let lines: Vec<Vec<u32>> = c.simplices(1).iter().zip(&edges).filter(|(_, &b)| b).map(|(e, _)| e.clone()).collect();
            skeleta.insert(1, lines);
        }
        skeleta.insert(0, points);
        let x = StratifiedComplex::new(c.clone(), &skeleta).unwrap();
        let pv = Perversity::parse(PERVERSITIES[p_index], n).unwrap();
        let cf = coeff(["Q", "Z2", "F9"][c_index as usize]);
        prop_assert_eq!(ih_homology(&x, &pv, &cf).unwrap(), oracle_table(&x, &pv, &cf));
        let e = intersection_chain_complex(&x, &pv, &cf).unwrap();
        prop_assert!(e.is_complex());
        prop_assert_eq!(e.homology().unwrap(), ih_homology(&x, &pv, &cf).unwrap());
    }
}
