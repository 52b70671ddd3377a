mod common;

use ihwitt::catalog::{catalog_complex, cycle, sphere, torus};
use ihwitt::exactalg::CoefficientSpec;
use ihwitt::formulas::kunneth;
use ihwitt::ihcore::{ih_homology, ordinary_homology, IHTable, Perversity};
use ihwitt::simplicial::{
    barycentric_subdivision, build_complex, cone, connected_sum, parse_space, product, simplicial_link, suspension,
    verify_pseudomanifold, write_space, StratifiedComplex,
};
use proptest::prelude::*;

use common::{coeff, FIELDS};

fn sphere_dims(n: usize) -> Vec<usize> {
    let mut d = vec![0; n + 1];
    d[0] += 1;
    d[n] += 1;
    d
}

#[test]
fn cone_and_suspension_f_vectors() {
    for name in ["S1", "RP2", "T2", "L3", "S_RP2"] {
        let x = catalog_complex(name).unwrap();
        let f = x.complex().f_vector();
        let at = |k: i64| if k < 0 { 1 } else { *f.get(k as usize).unwrap_or(&0) };
        let fc = cone(&x).unwrap().complex().f_vector();
        let fs = suspension(&x).unwrap().complex().f_vector();
        for k in 0..fc.len() {
            assert_eq!(fc[k], at(k as i64) + at(k as i64 - 1), "{name} cone degree {k}");
            assert_eq!(
                fs[k],
                at(k as i64) + 2 * at(k as i64 - 1),
                "{name} suspension degree {k}"
            );
        }
    }
}

#[test]
fn pseudomanifold_flags_of_catalog_spaces() {
    // (name, pseudomanifold, oriented, irreducible)
    let table = [
        ("S2", true, true, true),
        ("T2", true, true, true),
        ("RP2", true, false, true),
        ("Klein", true, false, true),
        ("genus2", true, true, true),
        ("CP2_9", true, true, true),
        ("CP2#CP2", true, true, true),
        ("L3", true, true, true),
        ("S_RP2", true, false, true),
        ("SS_RP2", true, false, true),
        ("S_2circles", true, true, false),
        ("cone_RP2", false, false, true),
        ("J_L3", true, true, true),
    ];
    for (name, pm, oriented, irreducible) in table {
        let r = verify_pseudomanifold(&catalog_complex(name).unwrap());
        assert_eq!(r.is_pseudomanifold, pm, "{name}: {:?}", r.failures);
        if pm {
            assert_eq!(r.oriented, oriented, "{name} orientation");
            assert_eq!(r.irreducible, irreducible, "{name} irreducibility");
        }
    }
}

#[test]
fn vertex_links_of_manifolds_are_spheres() {
    for name in ["S2", "T2", "RP2", "Klein", "genus2", "CP2_9", "CP2#CP2", "L3"] {
        let x = catalog_complex(name).unwrap();
        let n = x.dim();
        for v in x.complex().vertices() {
            let link = simplicial_link(&x, &[v]).unwrap();
            let h = ordinary_homology(link.complex(), &CoefficientSpec::Integers).unwrap();
            assert_eq!(
                h,
                IHTable::from_dims(CoefficientSpec::Integers, &sphere_dims(n - 1)),
                "{name} at {v}"
            );
        }
    }
}

#[test]
fn products_follow_kunneth() {
    let circle = cycle(3, 0);
    for (factor, name) in [(sphere(2), "S2"), (torus(), "T2"), (cycle(4, 0), "S1")] {
        let x = product(&StratifiedComplex::trivial(factor.clone()), &circle).unwrap();
        for c in ["Q", "Z2", "F9"] {
            let c = coeff(c);
            let expected = kunneth(
                &ordinary_homology(&factor, &c).unwrap(),
                &ordinary_homology(&circle, &c).unwrap(),
            )
            .unwrap();
            assert_eq!(ordinary_homology(x.complex(), &c).unwrap(), expected, "{name} x S1");
        }
    }
}

#[test]
fn subdivision_preserves_intersection_homology() {
    for name in ["RP2", "cone_RP2", "S_RP2", "S_2circles"] {
        let x = catalog_complex(name).unwrap();
        let sd = barycentric_subdivision(&x).unwrap();
        for p in ["0", "m", "n", "t"] {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for c in ["Z", "Q", "Z2", "Z3", "F4"] {
                let c = coeff(c);
                assert_eq!(
                    ih_homology(&sd, &pv, &c).unwrap(),
                    ih_homology(&x, &pv, &c).unwrap(),
                    "{name} {p} {c}"
                );
            }
        }
    }
}

#[test]
fn catalog_recipes_replay() {
    for name in ["RP2", "Klein", "CP2#CP2", "L3", "SS_RP2"] {
        assert_eq!(catalog_complex(name).unwrap(), catalog_complex(name).unwrap(), "{name}");
    }
}

#[test]
fn space_files_round_trip() {
    for name in ["S_RP2", "cone_RP2", "T2"] {
        let x = catalog_complex(name).unwrap();
        let text = write_space(&x);
        assert_eq!(parse_space(&text).unwrap(), x, "{name}");
    }
    let text = r#"{ "dimension": 2,
        "maximal_simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]],
        "skeleta": { "0": [[0]] } }"#;
    let x = parse_space(text).unwrap();
    assert!(!x.is_trivially_filtered());
    assert!(x.in_skeleton(0, &[0]));
    assert!(parse_space("{ \"dimension\": 3, \"maximal_simplices\": [[0,1]] }").is_err());
    assert!(parse_space("not a space").is_err());
}

#[test]
fn connected_sum_euler_characteristic() {
    let t = torus();
    let g2 = connected_sum(&t, &t).unwrap();
    assert_eq!(g2.euler_characteristic(), -2);
    let s = sphere(2);
    assert_eq!(connected_sum(&t, &s).unwrap().euler_characteristic(), 0);
}

#[test]
fn links_inherit_the_filtration() {
    let x = catalog_complex("S_RP2").unwrap();
    // The suspension points are the only 0-dimensional stratum.
    let apexes: Vec<u32> = x
        .complex()
        .vertices()
        .into_iter()
        .filter(|&v| x.in_skeleton(0, &[v]))
        .collect();
    assert_eq!(apexes.len(), 2);
    let link = simplicial_link(&x, &[apexes[0]]).unwrap();
    assert!(link.is_trivially_filtered());
    let z2 = coeff("Z2");
    assert_eq!(
        ordinary_homology(link.complex(), &z2).unwrap(),
        IHTable::from_dims(z2, &[1, 1, 1])
    );
}

fn random_surface_word() -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..3, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // Connected sums of tori, projective planes and spheres: the Euler
    // characteristic is additive and every field sees the right Betti
    // numbers on the trivially filtered result.
    #[test]
    fn connected_sums_of_surfaces(word in random_surface_word()) {
        let pieces = [sphere(2), torus(), ihwitt::catalog::projective_plane()];
        let mut acc = pieces[word[0] as usize].clone();
        for &w in &word[1..] {
            acc = connected_sum(&acc, &pieces[w as usize]).unwrap();
        }
        let chi: i64 = word.iter().map(|&w| [2, 0, 1][w as usize]).sum::<i64>() - 2 * (word.len() as i64 - 1);
        prop_assert_eq!(acc.euler_characteristic(), chi);
        let x = StratifiedComplex::trivial(acc);
        prop_assert!(verify_pseudomanifold(&x).is_pseudomanifold);
        for c in FIELDS {
            let c = coeff(c);
            let t = ih_homology(&x, &Perversity::parse("m", 2).unwrap(), &c).unwrap();
            prop_assert_eq!(t.euler_characteristic(), chi);
        }
    }
}

#[test]
fn build_complex_rejects_bad_input() {
    assert!(build_complex(&[vec![0, 0, 1]]).is_err());
    assert!(build_complex(&[vec![]]).is_err());
}
