use std::path::Path;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::catalog::{catalog_entry, manifest, Built};
use crate::exactalg::CoefficientSpec;
use crate::formulas::omega_splitting;
use crate::ihcore::{ih_homology, ordinary_homology, Perversity};
use crate::simplicial::{barycentric_subdivision, parse_space, verify_pseudomanifold, StratifiedComplex};
use crate::witt::{bordism_group, parse_gram, witt_condition_check, witt_invariants, AnyForm, GramEntry};

use super::report::{ResultLevel, RunReport, RunResult, WittColumn};
use super::{CatalogAction, Cli, CliError, Command, SpaceSource};

struct Loaded {
    label: String,
    digest: String,
    built: Built,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_file(path: &Path) -> Result<Loaded, CliError> {
    let text = read(path)?;
    Ok(Loaded {
        label: path.display().to_string(),
        digest: sha256_hex(text.as_bytes()),
        built: Built::Complex(parse_space(&text)?),
    })
}

fn load_catalog(name: &str) -> Result<Loaded, CliError> {
    let entry = catalog_entry(name)?;
    Ok(Loaded {
        label: name.to_string(),
        digest: sha256_hex(format!("catalog:{name}").as_bytes()),
        built: (entry.build)()?,
    })
}

fn load(source: &SpaceSource) -> Result<Loaded, CliError> {
    match (&source.catalog, &source.space) {
        (Some(name), _) => load_catalog(name),
        (None, Some(path)) => load_file(path),
        (None, None) => Err(CliError::Parse("give --catalog or --space".into())),
    }
}

fn source_echo(source: &SpaceSource) -> String {
    match (&source.catalog, &source.space) {
        (Some(name), _) => format!("--catalog {name}"),
        (None, Some(path)) => format!("--space {}", path.display()),
        (None, None) => String::new(),
    }
}

fn parse_coefficients(list: &[String]) -> Result<Vec<CoefficientSpec>, CliError> {
    list.iter()
        .map(|c| c.trim().parse::<CoefficientSpec>().map_err(CliError::from))
        .collect()
}

fn canonical_coefficients(list: &[CoefficientSpec]) -> String {
    list.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn prepare(x: StratifiedComplex, normalize: bool) -> Result<StratifiedComplex, CliError> {
    if normalize {
        Ok(barycentric_subdivision(&x)?)
    } else {
        Ok(x)
    }
}

fn formula_only(label: &str) -> CliError {
    CliError::Other(format!("`{label}` is only available through the closed-form engines"))
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Compute {
            source,
            perversity,
            coeff,
            strict,
            normalize_triangulation,
        } => {
            let coeffs = parse_coefficients(coeff)?;
            let loaded = load(source)?;
            let mut results = Vec::new();
            match loaded.built {
                Built::Complex(x) => {
                    let x = prepare(x, *normalize_triangulation)?;
                    if *strict {
                        let pm = verify_pseudomanifold(&x);
                        if !pm.is_pseudomanifold {
                            return Err(CliError::NotPseudomanifold(pm.failures));
                        }
                    }
                    let p = Perversity::parse(perversity, x.dim())?;
                    for c in &coeffs {
                        results.push(RunResult::Homology {
                            perversity: p.values().to_vec(),
                            level: ResultLevel::Chain,
                            verified: true,
                            table: ih_homology(&x, &p, c)?,
                        });
                    }
                }
                Built::Formula(f) => {
                    let p = Perversity::parse(perversity, f.dim())?;
                    for c in &coeffs {
                        let r = f.evaluate(&p, c)?;
                        results.push(RunResult::Homology {
                            perversity: p.values().to_vec(),
                            level: ResultLevel::Formula,
                            verified: r.verified,
                            table: r.table,
                        });
                    }
                }
            }
            let mut command = format!(
                "compute {} --perversity {perversity} --coeff {}",
                source_echo(source),
                canonical_coefficients(&coeffs)
            );
            if *strict {
                command.push_str(" --strict");
            }
            if *normalize_triangulation {
                command.push_str(" --normalize-triangulation");
            }
            RunReport {
                command,
                input_digest: Some(loaded.digest),
                space: Some(loaded.label),
                results,
                elapsed_ms: 0,
            }
        }
        Command::WittCheck {
            source,
            coeff,
            check_all_links,
            normalize_triangulation,
        } => {
            let coeffs = parse_coefficients(coeff)?;
            let loaded = load(source)?;
            let Built::Complex(x) = loaded.built else {
                return Err(formula_only(&loaded.label));
            };
            let x = prepare(x, *normalize_triangulation)?;
            let mut columns = Vec::new();
            for c in &coeffs {
                columns.push(WittColumn {
                    coefficients: *c,
                    report: witt_condition_check(&x, c, *check_all_links)?,
                });
            }
            let pm = verify_pseudomanifold(&x);
            let mut command = format!(
                "witt-check {} --coeff {}",
                source_echo(source),
                canonical_coefficients(&coeffs)
            );
            if *check_all_links {
                command.push_str(" --check-all-links");
            }
            if *normalize_triangulation {
                command.push_str(" --normalize-triangulation");
            }
            RunReport {
                command,
                input_digest: Some(loaded.digest),
                space: Some(loaded.label),
                results: vec![RunResult::Witt {
                    oriented: pm.oriented,
                    irreducible: pm.irreducible,
                    columns,
                }],
                elapsed_ms: 0,
            }
        }
        Command::WittClass { matrix, field } => {
            let field: CoefficientSpec = field.trim().parse()?;
            let (entries, digest) = matrix_entries(matrix)?;
            let form = AnyForm::from_entries(&entries, &field)?;
            let class = witt_invariants(&form)?;
            let representative = match field.finite_field() {
                Ok(f) => Some(class.representative()?.iter().map(|&a| f.format_element(a)).collect()),
                Err(_) => None,
            };
            RunReport {
                command: format!("witt-class --matrix {matrix} --field {field}"),
                input_digest: Some(digest),
                space: None,
                results: vec![RunResult::WittClass {
                    dimension: form.dim(),
                    class,
                    order: class.order(),
                    representative,
                }],
                elapsed_ms: 0,
            }
        }
        Command::Bordism { n, p, space, catalog } => {
            let coefficient_group = bordism_group(*n, *p)?;
            let loaded = match (space, catalog) {
                (Some(path), _) => Some(load_file(path)?),
                (None, Some(name)) => Some(load_catalog(name)?),
                (None, None) => None,
            };
            let (space_group, label, digest) = match loaded {
                Some(l) => {
                    let Built::Complex(x) = l.built else {
                        return Err(formula_only(&l.label));
                    };
                    let h = ordinary_homology(x.complex(), &CoefficientSpec::Integers)?;
                    (Some(omega_splitting(&h, *n, *p)?), Some(l.label), Some(l.digest))
                }
                None => (None, None, None),
            };
            let mut command = format!("bordism --n {n} --p {p}");
            match (space, catalog) {
                (Some(path), _) => command.push_str(&format!(" --space {}", path.display())),
                (None, Some(name)) => command.push_str(&format!(" --catalog {name}")),
                (None, None) => {}
            }
            RunReport {
                command,
                input_digest: digest,
                space: label,
                results: vec![RunResult::Bordism {
                    n: *n,
                    p: *p,
                    coefficient_group,
                    space_group,
                }],
                elapsed_ms: 0,
            }
        }
        Command::Catalog {
            action: CatalogAction::Manifest,
        } => RunReport {
            command: "catalog manifest".into(),
            input_digest: None,
            space: None,
            results: vec![RunResult::Manifest { entries: manifest() }],
            elapsed_ms: 0,
        },
    };
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Gram entries from `I<n>`, `catalog:<name>` or a matrix file.
fn matrix_entries(spec: &str) -> Result<(Vec<Vec<GramEntry>>, String), CliError> {
    let integers = |gram: Vec<Vec<i64>>| -> Vec<Vec<GramEntry>> {
        gram.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| GramEntry::Rational(num::BigInt::from(v).into()))
                    .collect()
            })
            .collect()
    };
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog_entry(name)?;
        let gram = entry
            .gram
            .ok_or_else(|| CliError::Other(format!("no intersection form recorded for `{name}`")))?;
        return Ok((integers(gram), sha256_hex(spec.as_bytes())));
    }
    if let Some(n) = spec.strip_prefix('I').and_then(|n| n.parse::<usize>().ok()) {
        if !Path::new(spec).exists() {
            let gram = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
            return Ok((integers(gram), sha256_hex(spec.as_bytes())));
        }
    }
    let text = read(Path::new(spec))?;
    Ok((parse_gram(&text)?, sha256_hex(text.as_bytes())))
}
