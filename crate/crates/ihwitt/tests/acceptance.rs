//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with a
//! pinned wall-clock limit. Runs without the libtest harness so the lines
//! always reach stdout.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ihwitt::catalog::{catalog_build, catalog_complex, catalog_entry, catalog_names, Built};
use ihwitt::exactalg::{make_field, AbelianGroup, CoefficientSpec, FiniteField, Rationals, Ring};
use ihwitt::formulas::{
    compactified_bundle_formula, cone_formula, omega_splitting, reduce_coefficients, suspension_formula,
};
use ihwitt::ihcore::{
    ih_homology, intersection_chain_complex_over, ordinary_homology, uct_violation_report, DegreeGroup, IHTable,
    Perversity,
};
use ihwitt::simplicial::{cone, suspension, verify_pseudomanifold};
use ihwitt::witt::{
    bordism_group, diagonal_class, finite_invariants, isotropic_vector, restriction_kernel, witt_condition_check,
    witt_elements, witt_group, BilinearForm, WittClass,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{coeff, oracle_det, oracle_isotropic, FIELDS};

const PERVERSITIES: [&str; 4] = ["0", "m", "n", "t"];
const INSTANT: Duration = Duration::from_secs(1);

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

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

fn spec_of(p: u32, m: u32) -> CoefficientSpec {
    if m == 1 {
        CoefficientSpec::PrimeField(p)
    } else {
        CoefficientSpec::FiniteField { p, m }
    }
}

fn form(f: &FiniteField, gram: Vec<Vec<u32>>) -> BilinearForm<FiniteField> {
    BilinearForm::new(f.clone(), spec_of(f.prime(), f.degree()), gram).unwrap()
}

fn uct_violation() -> Outcome {
    let x = catalog_complex("cone_RP2").map_err(|e| e.to_string())?;
    let zero = Perversity::parse("0", 3).unwrap();
    let z = ih_homology(&x, &zero, &CoefficientSpec::Integers).unwrap();
    ensure!(
        z.degrees[1]
            == DegreeGroup {
                rank: 0,
                torsion: vec![2]
            },
        "integral degree 1 is {:?}",
        z.degrees[1]
    );
    ensure!(
        z.degrees[2]
            == DegreeGroup {
                rank: 0,
                torsion: vec![]
            },
        "integral degree 2 is {:?}",
        z.degrees[2]
    );
    let z2 = ih_homology(&x, &zero, &coeff("Z2")).unwrap();
    ensure!(z2.dims() == vec![1, 1, 0, 0], "Z2 dims {:?}", z2.dims());
    let report = uct_violation_report(&x, &zero, 2).unwrap();
    let bad: Vec<usize> = report.violations().iter().map(|d| d.degree).collect();
    ensure!(bad == vec![2], "flagged degrees {bad:?}");
    Ok(())
}

fn cone_suspension_equivalence() -> Outcome {
    for name in ["S2", "RP2", "T2", "L3"] {
        let l = catalog_complex(name).unwrap();
        let n = l.dim();
        let (c, s) = (cone(&l).unwrap(), suspension(&l).unwrap());
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, n + 1).unwrap();
            for f in FIELDS {
                let f = coeff(f);
                let link = ih_homology(&l, &pv.truncate(n), &f).unwrap();
                let chain = ih_homology(&c, &pv, &f).unwrap();
                ensure!(
                    chain == cone_formula(&link, n, &pv).unwrap(),
                    "cone on {name}, {p}, {f}"
                );
                let chain = ih_homology(&s, &pv, &f).unwrap();
                ensure!(
                    chain == suspension_formula(&link, n, &pv).unwrap(),
                    "suspension of {name}, {p}, {f}"
                );
            }
        }
    }
    Ok(())
}

fn sj_tables() -> Outcome {
    let x = catalog_complex("SJ_L3").unwrap();
    let m = Perversity::parse("m", 5).unwrap();
    for (c, want) in [
        ("Q", [1, 1, 0, 0, 1, 1]),
        ("Z5", [1, 1, 0, 0, 1, 1]),
        ("Z3", [1, 2, 2, 0, 2, 1]),
    ] {
        let got = ih_homology(&x, &m, &coeff(c)).unwrap().dims();
        ensure!(got == want, "SJ over {c}: {got:?}");
    }
    Ok(())
}

fn verdict(x: &ihwitt::simplicial::StratifiedComplex, c: &str) -> bool {
    witt_condition_check(x, &coeff(c), false).unwrap().witt_condition
}

fn witt_verdicts() -> Outcome {
    for name in ["S_RP2", "SS_RP2"] {
        let x = catalog_complex(name).unwrap();
        ensure!(
            verdict(&x, "Q") && !verdict(&x, "Z2"),
            "{name}: Q pass / Z2 fail expected"
        );
        ensure!(!verify_pseudomanifold(&x).oriented, "{name} should be non-orientable");
    }
    let sj = catalog_complex("SJ_L3").unwrap();
    ensure!(
        verdict(&sj, "Q") && verdict(&sj, "Z5") && !verdict(&sj, "Z3"),
        "SJ verdicts"
    );
    for name in catalog_names() {
        let Ok(Built::Complex(x)) = catalog_build(name) else {
            continue;
        };
        if !verify_pseudomanifold(&x).is_pseudomanifold {
            continue;
        }
        if x.dim() == 2 {
            for c in FIELDS {
                ensure!(verdict(&x, c), "2-dimensional {name} fails over {c}");
            }
        }
        ensure!(verdict(&x, "F9") == verdict(&x, "Z3"), "{name}: F9 and Z3 disagree");
        ensure!(verdict(&x, "F4") == verdict(&x, "Z2"), "{name}: F4 and Z2 disagree");
    }
    Ok(())
}

fn thom_tables() -> Outcome {
    let m = Perversity::parse("m", 4).unwrap();
    let s2 = z_table(&[(1, &[]), (0, &[]), (1, &[])]);
    let t2 = z_table(&[(1, &[]), (2, &[]), (1, &[])]);
    for p in [2u32, 3, 5] {
        for (c, ih2) in [("Q", 1), ("Z2", 1), ("Z3", 1), ("Z5", 1)] {
            let c = coeff(c);
            let expected = if c == CoefficientSpec::PrimeField(p) { 0 } else { ih2 };
            let u = compactified_bundle_formula(&reduce_coefficients(&s2, &c).unwrap(), 2, p as i64, &m).unwrap();
            ensure!(
                u.table.dim(2) == expected,
                "Uhat(S2, e={p}) over {c}: {}",
                u.table.dim(2)
            );
            let y = compactified_bundle_formula(&reduce_coefficients(&t2, &c).unwrap(), 2, p as i64, &m).unwrap();
            let want = vec![1, 2, expected, 2, 1];
            ensure!(y.table.dims() == want, "Y(T2, e={p}) over {c}: {:?}", y.table.dims());
        }
    }
    for (c, d2) in [("Z2", 0), ("Z3", 0), ("Z5", 1), ("Q", 1)] {
        let u = compactified_bundle_formula(&reduce_coefficients(&s2, &coeff(c)).unwrap(), 2, 6, &m).unwrap();
        ensure!(u.table.dim(2) == d2, "Uhat(S2, e=6) over {c}: {}", u.table.dim(2));
    }
    Ok(())
}

fn eight_dimensional_examples() -> Outcome {
    let m = Perversity::parse("m", 8).unwrap();
    for (name, c, want) in [
        ("X8_SJ", "Q", 2),
        ("X8_SJ", "Z3", 6),
        ("X8_SY", "Q", 5),
        ("X8_SY", "Z3", 4),
    ] {
        let Built::Formula(f) = catalog_build(name).unwrap() else {
            return Err(format!("{name} should be formula-level"));
        };
        let got = f.evaluate(&m, &coeff(c)).unwrap().table.dim(4);
        ensure!(got == want, "{name} degree 4 over {c}: {got}");
    }
    Ok(())
}

fn witt_arithmetic() -> Outcome {
    for (c, order) in [("Z3", 4), ("Z5", 2), ("Z2", 2)] {
        let f = coeff(c).finite_field().unwrap();
        let one = diagonal_class(&f, coeff(c), &[1]).unwrap();
        ensure!(one.order() == Some(order), "<1> in W({c}) has order {:?}", one.order());
    }
    for c in ["Z3", "Z5", "F9"] {
        let g = witt_group(&coeff(c)).unwrap();
        ensure!(g.order() == Some(4), "|W({c})| = {:?}", g.order());
    }
    let exponent = witt_elements(&coeff("F9"))
        .unwrap()
        .iter()
        .filter_map(WittClass::order)
        .max();
    ensure!(exponent == Some(2), "exponent of W(F9) is {exponent:?}");
    let kernel = restriction_kernel(3, 2).unwrap();
    let z3 = make_field(3, 1).unwrap();
    let two = diagonal_class(&z3, coeff("Z3"), &[1, 1]).unwrap();
    ensure!(
        kernel.len() == 2 && kernel.contains(&two),
        "restriction kernel {kernel:?}"
    );
    let f9 = make_field(3, 2).unwrap();
    let v = isotropic_vector(&form(&f9, vec![vec![1, 0], vec![0, 1]])).unwrap();
    let Some(v) = v else {
        return Err("no isotropic vector for the identity over F9".into());
    };
    ensure!(
        v[0] == 1 && f9.mul(&v[1], &v[1]) == f9.neg(&1),
        "isotropic vector {v:?}"
    );
    Ok(())
}

fn bordism() -> Outcome {
    let group = |n: usize, p: u32| bordism_group(n, p).unwrap();
    for p in [2u32, 3, 5] {
        let w = match p {
            2 => AbelianGroup::new(0, [2]),
            3 => AbelianGroup::new(0, [4]),
            _ => AbelianGroup::new(0, [2, 2]),
        };
        for n in 0..=12 {
            let want = match n {
                0 => AbelianGroup::free(1),
                _ if n % 4 == 0 => w.clone(),
                _ => AbelianGroup::zero(),
            };
            ensure!(group(n, p) == want, "bordism({n}, {p}) = {}", group(n, p));
        }
        let point = z_table(&[(1, &[])]);
        for k in 1..=3 {
            ensure!(
                omega_splitting(&point, 4 * k, p).unwrap() == w,
                "point, n={}, p={p}",
                4 * k
            );
        }
        let circle = z_table(&[(1, &[]), (1, &[])]);
        for n in 0..=8 {
            let mut want = group(n, p);
            if n >= 1 {
                want = want.direct_sum(&group(n - 1, p));
            }
            let got = omega_splitting(&circle, n, p).unwrap();
            ensure!(got == want, "circle n={n} p={p}: {got} vs {want}");
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    for name in ["S2", "T2", "RP2", "L3"] {
        let x = catalog_complex(name).unwrap();
        for p in PERVERSITIES {
            let pv = Perversity::parse(p, x.dim()).unwrap();
            for c in FIELDS {
                let c = coeff(c);
                ensure!(
                    ih_homology(&x, &pv, &c).unwrap() == ordinary_homology(x.complex(), &c).unwrap(),
                    "{name} {p} {c}: IH differs from H"
                );
            }
        }
    }
    for name in ["cone_RP2", "SS_RP2"] {
        let x = catalog_complex(name).unwrap();
        let ps: Vec<Perversity> = PERVERSITIES
            .iter()
            .map(|p| Perversity::parse(p, x.dim()).unwrap())
            .collect();
        for small in &ps {
            for large in ps.iter().filter(|q| small.le(q)) {
                let cs = intersection_chain_complex_over(Rationals, CoefficientSpec::Rationals, &x, small).unwrap();
                let cl = intersection_chain_complex_over(Rationals, CoefficientSpec::Rationals, &x, large).unwrap();
                for i in 0..=x.dim() {
                    for v in cs.bases[i].vectors() {
                        let global: Vec<_> = v.iter().map(|(k, a)| (cs.allowable[i][*k], a.clone())).collect();
                        ensure!(cl.contains(i, &global), "{name}: chains of {small:?} not in {large:?}");
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let fields: Vec<FiniteField> = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (2, 2)]
        .iter()
        .map(|&(p, m)| make_field(p, m).unwrap())
        .collect();
    let mut changes = 0;
    while changes < 200 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(1..5);
        let random = |rng: &mut ChaCha8Rng| -> Vec<Vec<u32>> {
            (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..f.order())).collect())
                .collect()
        };
        let mut g = random(&mut rng);
        for i in 0..n {
            for j in 0..i {
                g[i][j] = g[j][i];
            }
        }
        let pm = random(&mut rng);
        if oracle_det(f, &g) == 0 || oracle_det(f, &pm) == 0 {
            continue;
        }
        let b = form(f, g);
        ensure!(
            finite_invariants(&b).unwrap() == finite_invariants(&b.congruent(&pm)).unwrap(),
            "class changed under a basis change over F{}",
            f.order()
        );
        changes += 1;
    }
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = make_field(p, m).unwrap();
        let spec = spec_of(p, m);
        let units: Vec<u32> = f.elements().filter(|&a| a != 0).collect();
        let mut diagonals: Vec<Vec<u32>> = units.iter().map(|&a| vec![a]).collect();
        for &a in &units {
            diagonals.extend(units.iter().map(|&b| vec![a, b]));
        }
        for x in &diagonals {
            let cx = diagonal_class(&f, spec, x).unwrap();
            for y in &diagonals {
                let sum: Vec<u32> = x.iter().chain(y).copied().collect();
                let lhs = diagonal_class(&f, spec, &sum).unwrap();
                ensure!(
                    lhs == cx.add(&diagonal_class(&f, spec, y).unwrap()).unwrap(),
                    "additivity {x:?} {y:?}"
                );
            }
        }
    }
    for q in 2..=49u32 {
        let Some((p, m)) = prime_power(q) else {
            continue;
        };
        let f = make_field(p, m).unwrap();
        ensure!(
            finite_invariants(&form(&f, vec![vec![0, 1], vec![1, 0]]))
                .unwrap()
                .is_identity(),
            "H over F{q}"
        );
    }
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)] {
        let f = make_field(p, m).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    let g = vec![vec![a, b], vec![b, c]];
                    if oracle_det(&f, &g) == 0 {
                        continue;
                    }
                    let bf = form(&f, g.clone());
                    let metabolic = finite_invariants(&bf).unwrap().is_identity();
                    ensure!(metabolic == oracle_isotropic(&f, &g), "F{} {g:?}", f.order());
                    ensure!(
                        metabolic == isotropic_vector(&bf).unwrap().is_some(),
                        "F{} {g:?}",
                        f.order()
                    );
                }
            }
        }
    }
    Ok(())
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 UCT violation on the cone over RP2", INSTANT, uct_violation),
        (
            "2 cone/suspension chain level = formula",
            Duration::from_secs(60),
            cone_suspension_equivalence,
        ),
        ("3 SJ tables over Q, Z3, Z5", Duration::from_secs(300), sj_tables),
        ("4 Witt verdict matrix", Duration::from_secs(300), witt_verdicts),
        ("5 Thom space tables", INSTANT, thom_tables),
        (
            "6 degree-4 dimensions of the 8-dimensional examples",
            INSTANT,
            eight_dimensional_examples,
        ),
        ("7 Witt group arithmetic", INSTANT, witt_arithmetic),
        ("8 Witt bordism groups and splittings", INSTANT, bordism),
        ("9 property suites", Duration::from_secs(120), property_suites),
    ];
    // Catalog lookups are cheap; make sure the registry is sound before timing.
    for name in catalog_names() {
        catalog_entry(name).expect("catalog names resolve");
    }
    let mut failed = 0;
    for (label, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= limit {
                Ok(())
            } else {
                Err(format!("over the {limit:?} limit"))
            }
        });
        match outcome {
            Ok(()) => println!("PASS  criterion {label} ({elapsed:.2?} / limit {limit:?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {label} ({elapsed:.2?} / limit {limit:?}): {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria fail");
        ExitCode::FAILURE
    }
}
