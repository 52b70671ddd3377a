use crate::exactalg::CoefficientSpec;
use crate::formulas::FormulaSpace;
use crate::ihcore::{DegreeGroup, IHTable, IhError, Perversity};
use crate::simplicial::{build_complex, cone, suspension, StratifiedComplex};

use super::spaces::{
    complex_projective_plane, cp2_connected_sum, cycle, genus_two_surface, klein_bottle, lens_space, lens_times_circle,
    projective_plane, sphere, suspended_lens_times_circle, torus, two_circles,
};
use super::{Built, CatalogError, CostClass, Provenance};

/// What a computation should return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Table(IHTable),
    /// Only one degree is pinned down.
    Degree {
        degree: usize,
        dim: usize,
    },
}

/// An expected intersection homology value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    /// Perversity in command-line syntax (`0`, `m`, `n`, `t`, `p:...`).
    pub perversity: &'static str,
    pub coefficients: CoefficientSpec,
    pub expected: Expected,
    pub provenance: Provenance,
}

impl Expectation {
    pub fn perversity(&self, dim: usize) -> Result<Perversity, IhError> {
        Perversity::parse(self.perversity, dim)
    }

    /// Whether a computed table matches.
    pub fn matches(&self, table: &IHTable) -> bool {
        match &self.expected {
            Expected::Table(t) => t == table,
            Expected::Degree { degree, dim } => {
                table.coefficients == self.coefficients && table.dim(*degree as i64) == *dim
            }
        }
    }
}

/// An expected Witt verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittExpectation {
    pub coefficients: CoefficientSpec,
    pub witt_condition: bool,
    pub provenance: Provenance,
}

/// A named space with its recipe and expected results.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub dimension: usize,
    pub formula_level: bool,
    pub cost: CostClass,
    pub build: fn() -> Result<Built, CatalogError>,
    pub expected: Vec<Expectation>,
    pub witt: Vec<WittExpectation>,
    /// Integer Gram matrix of the middle-degree intersection form.
    pub gram: Option<Vec<Vec<i64>>>,
    pub gram_provenance: Option<Provenance>,
}

fn coeff(s: &str) -> CoefficientSpec {
    s.parse().expect("catalog coefficient names are valid")
}

fn dims(perversity: &'static str, c: &str, d: &[usize], provenance: Provenance) -> Expectation {
    let coefficients = coeff(c);
    Expectation {
        perversity,
        coefficients,
        expected: Expected::Table(IHTable::from_dims(coefficients, d)),
        provenance,
    }
}

fn integral(perversity: &'static str, groups: &[(usize, &[u64])], provenance: Provenance) -> Expectation {
    Expectation {
        perversity,
        coefficients: CoefficientSpec::Integers,
        expected: Expected::Table(integral_table(groups)),
        provenance,
    }
}

fn degree(perversity: &'static str, c: &str, degree: usize, dim: usize, provenance: Provenance) -> Expectation {
    Expectation {
        perversity,
        coefficients: coeff(c),
        expected: Expected::Degree { degree, dim },
        provenance,
    }
}

fn integral_table(groups: &[(usize, &[u64])]) -> IHTable {
    IHTable {
        coefficients: CoefficientSpec::Integers,
        degrees: groups
            .iter()
            .map(|(rank, torsion)| DegreeGroup {
                rank: *rank,
                torsion: torsion.to_vec(),
            })
            .collect(),
    }
}

fn witt(c: &str, pass: bool, provenance: Provenance) -> WittExpectation {
    WittExpectation {
        coefficients: coeff(c),
        witt_condition: pass,
        provenance,
    }
}

const SIX_FIELDS: [&str; 6] = ["Q", "Z2", "Z3", "Z5", "F4", "F9"];

fn all_fields_pass(provenance: Provenance) -> Vec<WittExpectation> {
    SIX_FIELDS.iter().map(|c| witt(c, true, provenance)).collect()
}

fn trivial(c: crate::simplicial::SimplicialComplex) -> Result<Built, CatalogError> {
    Ok(Built::Complex(StratifiedComplex::trivial(c)))
}

fn rp2() -> StratifiedComplex {
    StratifiedComplex::trivial(projective_plane())
}

// Integral homology of closed manifolds used by formula-level entries.
fn h_torus() -> IHTable {
    integral_table(&[(1, &[]), (2, &[]), (1, &[])])
}
fn h_s2() -> IHTable {
    integral_table(&[(1, &[]), (0, &[]), (1, &[])])
}
fn h_s1_s2() -> IHTable {
    integral_table(&[(1, &[]), (1, &[]), (1, &[]), (1, &[])])
}
fn h_cp2() -> IHTable {
    integral_table(&[(1, &[]), (0, &[]), (1, &[]), (0, &[]), (1, &[])])
}
fn h_lens3_circle() -> IHTable {
    integral_table(&[(1, &[]), (1, &[3]), (0, &[3]), (1, &[]), (1, &[])])
}

fn thom_over_torus() -> FormulaSpace {
    FormulaSpace::CompactifiedBundle {
        base: h_torus(),
        fiber_rank: 2,
        euler: 3,
    }
}

fn thom_over_sphere(euler: i64) -> FormulaSpace {
    FormulaSpace::CompactifiedBundle {
        base: h_s2(),
        fiber_rank: 2,
        euler,
    }
}

fn x8_sy() -> FormulaSpace {
    thom_over_torus().suspension().times(h_s1_s2())
}

/// Names of all entries, in manifest order.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "S0",
        "S1",
        "S2",
        "S4",
        "T2",
        "RP2",
        "Klein",
        "genus2",
        "CP2_9",
        "CP2#CP2",
        "L2",
        "L3",
        "L5",
        "cone_RP2",
        "S_RP2",
        "SS_RP2",
        "S_2circles",
        "J_L3",
        "SJ_L3",
        "Y_T2_e3",
        "Uhat_S2_e3",
        "Uhat_S2_e6",
        "Uhat_S2_e2",
        "SY_T2_e3",
        "X8_SY",
        "X8_SJ",
        "X12_SY_CP2",
    ]
}

/// Looks up an entry by name.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    use Provenance::{Derived, Literature, Standard};
    let base = |name: &'static str,
                description: &'static str,
                dimension: usize,
                build: fn() -> Result<Built, CatalogError>| CatalogEntry {
        name,
        description,
        dimension,
        formula_level: false,
        cost: CostClass::Instant,
        build,
        expected: Vec::new(),
        witt: Vec::new(),
        gram: None,
        gram_provenance: None,
    };
    let formula = |name: &'static str,
                   description: &'static str,
                   dimension: usize,
                   build: fn() -> Result<Built, CatalogError>| CatalogEntry {
        formula_level: true,
        ..base(name, description, dimension, build)
    };
    let entry = match name {
        "S0" => CatalogEntry {
            expected: vec![dims("0", "Q", &[2], Standard)],
            ..base("S0", "two points", 0, || {
                trivial(build_complex(&[vec![0], vec![1]]).expect("two points"))
            })
        },
        "S1" => CatalogEntry {
            expected: vec![
                dims("0", "Z2", &[1, 1], Standard),
                integral("0", &[(1, &[]), (1, &[])], Standard),
            ],
            ..base("S1", "circle on 3 vertices", 1, || trivial(cycle(3, 0)))
        },
        "S2" => CatalogEntry {
            expected: vec![
                dims("0", "Q", &[1, 0, 1], Standard),
                dims("m", "Q", &[1, 0, 1], Standard),
                integral("0", &[(1, &[]), (0, &[]), (1, &[])], Standard),
            ],
            witt: all_fields_pass(Literature),
            ..base("S2", "boundary of the tetrahedron", 2, || trivial(sphere(2)))
        },
        "S4" => CatalogEntry {
            expected: vec![dims("m", "Q", &[1, 0, 0, 0, 1], Standard)],
            witt: vec![witt("Z3", true, Standard), witt("F9", true, Standard)],
            ..base("S4", "boundary of the 5-simplex", 4, || trivial(sphere(4)))
        },
        "T2" => CatalogEntry {
            expected: vec![
                dims("0", "Z3", &[1, 2, 1], Derived),
                integral("m", &[(1, &[]), (2, &[]), (1, &[])], Standard),
            ],
            witt: all_fields_pass(Literature),
            ..base("T2", "torus on a 3x3 grid, 9 vertices", 2, || trivial(torus()))
        },
        "RP2" => CatalogEntry {
            expected: vec![
                integral("0", &[(1, &[]), (0, &[2]), (0, &[])], Derived),
                dims("m", "Q", &[1, 0, 0], Standard),
                dims("t", "Q", &[1, 0, 0], Standard),
                dims("m", "Z2", &[1, 1, 1], Standard),
            ],
            witt: all_fields_pass(Literature),
            ..base("RP2", "6-vertex projective plane", 2, || trivial(projective_plane()))
        },
        "Klein" => CatalogEntry {
            expected: vec![
                integral("0", &[(1, &[]), (1, &[2]), (0, &[])], Standard),
                dims("0", "Z2", &[1, 2, 1], Standard),
                dims("0", "Q", &[1, 1, 0], Standard),
            ],
            witt: all_fields_pass(Literature),
            ..base("Klein", "Klein bottle on a twisted 3x4 grid", 2, || {
                trivial(klein_bottle())
            })
        },
        "genus2" => CatalogEntry {
            expected: vec![dims("0", "Q", &[1, 4, 1], Standard)],
            witt: all_fields_pass(Literature),
            ..base(
                "genus2",
                "connected sum of two tori",
                2,
                || trivial(genus_two_surface()),
            )
        },
        "CP2_9" => CatalogEntry {
            expected: vec![
                dims("m", "Q", &[1, 0, 1, 0, 1], Derived),
                dims("m", "Z2", &[1, 0, 1, 0, 1], Derived),
                dims("m", "Z3", &[1, 0, 1, 0, 1], Derived),
            ],
            witt: vec![witt("Z3", true, Standard), witt("Q", true, Standard)],
            gram: Some(vec![vec![1]]),
            gram_provenance: Some(Literature),
            ..base("CP2_9", "9-vertex complex projective plane", 4, || {
                trivial(complex_projective_plane())
            })
        },
        "CP2#CP2" => CatalogEntry {
            expected: vec![dims("m", "Q", &[1, 0, 2, 0, 1], Standard)],
            gram: Some(vec![vec![1, 0], vec![0, 1]]),
            gram_provenance: Some(Literature),
            ..base("CP2#CP2", "connected sum of two 9-vertex projective planes", 4, || {
                trivial(cp2_connected_sum())
            })
        },
        "L2" => CatalogEntry {
            expected: vec![integral("0", &[(1, &[]), (0, &[2]), (0, &[]), (1, &[])], Standard)],
            ..base("L2", "lens space L(2,1)", 3, || trivial(lens_space(2)?))
        },
        "L3" => CatalogEntry {
            expected: vec![
                integral("0", &[(1, &[]), (0, &[3]), (0, &[]), (1, &[])], Standard),
                dims("0", "Z3", &[1, 1, 1, 1], Standard),
                dims("0", "Q", &[1, 0, 0, 1], Standard),
            ],
            ..base("L3", "lens space L(3,1)", 3, || trivial(lens_space(3)?))
        },
        "L5" => CatalogEntry {
            expected: vec![integral("0", &[(1, &[]), (0, &[5]), (0, &[]), (1, &[])], Standard)],
            ..base("L5", "lens space L(5,1)", 3, || trivial(lens_space(5)?))
        },
        "cone_RP2" => CatalogEntry {
            expected: vec![
                integral("p:0,0", &[(1, &[]), (0, &[2]), (0, &[]), (0, &[])], Literature),
                dims("p:0,0", "Z2", &[1, 1, 0, 0], Literature),
                dims("p:0,0", "Z3", &[1, 0, 0, 0], Derived),
                dims("p:0,0", "Q", &[1, 0, 0, 0], Derived),
                dims("n", "Z2", &[1, 0, 0, 0], Derived),
            ],
            ..base("cone_RP2", "closed cone on the projective plane", 3, || {
                Ok(Built::Complex(cone(&rp2())?))
            })
        },
        "S_RP2" => CatalogEntry {
            expected: vec![
                dims("m", "Z2", &[1, 1, 0, 1], Derived),
                dims("m", "Q", &[1, 0, 0, 0], Derived),
            ],
            witt: vec![
                witt("Q", true, Literature),
                witt("Z2", false, Literature),
                witt("F4", false, Derived),
                witt("Z3", true, Derived),
            ],
            ..base("S_RP2", "suspension of the projective plane", 3, || {
                Ok(Built::Complex(suspension(&rp2())?))
            })
        },
        "SS_RP2" => CatalogEntry {
            expected: vec![
                dims("m", "Z2", &[1, 1, 0, 0, 1], Derived),
                dims("m", "Q", &[1, 0, 0, 0, 0], Derived),
            ],
            witt: vec![
                witt("Q", true, Literature),
                witt("Z2", false, Literature),
                witt("F4", false, Derived),
            ],
            ..base("SS_RP2", "double suspension of the projective plane", 4, || {
                Ok(Built::Complex(suspension(&suspension(&rp2())?)?))
            })
        },
        "S_2circles" => CatalogEntry {
            expected: vec![
                dims("m", "Q", &[2, 0, 2], Derived),
                dims("m", "Z2", &[2, 0, 2], Derived),
            ],
            witt: all_fields_pass(Literature),
            ..base("S_2circles", "suspension of two disjoint circles", 2, || {
                Ok(Built::Complex(suspension(&StratifiedComplex::trivial(two_circles()))?))
            })
        },
        "J_L3" => CatalogEntry {
            cost: CostClass::Seconds,
            expected: vec![
                dims("m", "Z3", &[1, 2, 2, 2, 1], Literature),
                dims("m", "Q", &[1, 1, 0, 1, 1], Literature),
                integral("m", &[(1, &[]), (1, &[3]), (0, &[3]), (1, &[]), (1, &[])], Derived),
            ],
            ..base("J_L3", "L(3,1) x S^1", 4, || Ok(Built::Complex(lens_times_circle(3)?)))
        },
        "SJ_L3" => CatalogEntry {
            cost: CostClass::Seconds,
            expected: vec![
                dims("m", "Q", &[1, 1, 0, 0, 1, 1], Literature),
                dims("m", "Z3", &[1, 2, 2, 0, 2, 1], Literature),
                dims("m", "Z5", &[1, 1, 0, 0, 1, 1], Literature),
            ],
            witt: vec![
                witt("Q", true, Literature),
                witt("Z3", false, Literature),
                witt("Z5", true, Literature),
                witt("F9", false, Derived),
            ],
            ..base("SJ_L3", "suspension of L(3,1) x S^1", 5, || {
                Ok(Built::Complex(suspended_lens_times_circle(3)?))
            })
        },
        "Y_T2_e3" => CatalogEntry {
            expected: vec![
                dims("m", "Q", &[1, 2, 1, 2, 1], Literature),
                dims("m", "Z3", &[1, 2, 0, 2, 1], Literature),
                dims("m", "Z5", &[1, 2, 1, 2, 1], Literature),
            ],
            ..formula(
                "Y_T2_e3",
                "Thom space of the Euler number 3 plane bundle over T^2",
                4,
                || Ok(Built::Formula(thom_over_torus())),
            )
        },
        "Uhat_S2_e3" => CatalogEntry {
            expected: vec![
                degree("m", "Z3", 2, 0, Literature),
                degree("m", "Q", 2, 1, Literature),
                degree("m", "Z5", 2, 1, Literature),
                dims("m", "Z3", &[1, 0, 0, 0, 1], Derived),
            ],
            ..formula(
                "Uhat_S2_e3",
                "Thom space of the Euler number 3 plane bundle over S^2",
                4,
                || Ok(Built::Formula(thom_over_sphere(3))),
            )
        },
        "Uhat_S2_e6" => CatalogEntry {
            expected: vec![
                degree("m", "Z2", 2, 0, Literature),
                degree("m", "Z3", 2, 0, Literature),
                degree("m", "Z5", 2, 1, Literature),
                degree("m", "Q", 2, 1, Literature),
            ],
            ..formula(
                "Uhat_S2_e6",
                "Thom space of the Euler number 6 plane bundle over S^2",
                4,
                || Ok(Built::Formula(thom_over_sphere(6))),
            )
        },
        "Uhat_S2_e2" => CatalogEntry {
            expected: vec![degree("m", "Z5", 2, 1, Derived)],
            gram: Some(vec![vec![2]]),
            gram_provenance: Some(Literature),
            ..formula(
                "Uhat_S2_e2",
                "Thom space of the Euler number 2 plane bundle over S^2",
                4,
                || Ok(Built::Formula(thom_over_sphere(2))),
            )
        },
        "SY_T2_e3" => CatalogEntry {
            expected: vec![
                dims("m", "Z3", &[1, 2, 0, 0, 2, 1], Derived),
                dims("m", "Q", &[1, 2, 1, 0, 2, 1], Derived),
            ],
            ..formula("SY_T2_e3", "suspension of Y_T2_e3", 5, || {
                Ok(Built::Formula(thom_over_torus().suspension()))
            })
        },
        "X8_SY" => CatalogEntry {
            expected: vec![degree("m", "Z3", 4, 4, Literature), degree("m", "Q", 4, 5, Literature)],
            gram: Some(vec![
                vec![0, 0, 0, 1],
                vec![0, 0, -1, 0],
                vec![0, -1, 0, 0],
                vec![1, 0, 0, 0],
            ]),
            gram_provenance: Some(Literature),
            ..formula("X8_SY", "S^1 x S^2 x SY_T2_e3", 8, || Ok(Built::Formula(x8_sy())))
        },
        "X8_SJ" => CatalogEntry {
            expected: vec![degree("m", "Q", 4, 2, Literature), degree("m", "Z3", 4, 6, Literature)],
            ..formula("X8_SJ", "SJ_L3 x S^1 x S^2", 8, || {
                Ok(Built::Formula(
                    FormulaSpace::manifold(h_lens3_circle()).suspension().times(h_s1_s2()),
                ))
            })
        },
        "X12_SY_CP2" => CatalogEntry {
            expected: vec![degree("m", "Z3", 6, 10, Derived), degree("m", "Q", 6, 12, Derived)],
            ..formula("X12_SY_CP2", "X8_SY x CP^2", 12, || {
                Ok(Built::Formula(x8_sy().times(h_cp2())))
            })
        },
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(entry)
}
