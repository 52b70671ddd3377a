use crate::exactalg::CoefficientSpec;
use crate::ihcore::{DegreeGroup, IHTable, Perversity};

use super::FormulaError;

fn perversity_at(p: &Perversity, k: usize) -> Result<i64, FormulaError> {
    p.value(k).ok_or(FormulaError::MissingPerversity(k))
}

/// Intersection homology of the cone on an `n`-dimensional `L`:
/// `IH_i(cL) = IH_i(L)` for `i < n - p(n+1)` and zero above.
///
/// The cone on a finite set (`n = 0`) is a point's worth of homology in
/// degree zero.
pub fn cone_formula(link: &IHTable, n: usize, p: &Perversity) -> Result<IHTable, FormulaError> {
    let coefficients = link.coefficients;
    if n == 0 {
        return Ok(IHTable {
            coefficients,
            degrees: vec![DegreeGroup::free(1), DegreeGroup::default()],
        });
    }
    let cutoff = n as i64 - perversity_at(p, n + 1)?;
    let degrees = (0..=n as i64 + 1)
        .map(|i| {
            if i < cutoff {
                link.group(i)
            } else {
                DegreeGroup::default()
            }
        })
        .collect();
    Ok(IHTable { coefficients, degrees })
}

/// Intersection homology of the suspension of an `n`-dimensional `X`:
/// `IH_{i-1}(X)` above `n - p(n+1)`, zero at it, `IH_i(X)` below.
///
/// For `n = 0` the suspension of `k` points is a graph with first Betti
/// number `k - 1`.
pub fn suspension_formula(x: &IHTable, n: usize, p: &Perversity) -> Result<IHTable, FormulaError> {
    let coefficients = x.coefficients;
    if n == 0 {
        let k = x.dim(0);
        return Ok(IHTable {
            coefficients,
            degrees: vec![DegreeGroup::free(1), DegreeGroup::free(k.saturating_sub(1))],
        });
    }
    let cutoff = n as i64 - perversity_at(p, n + 1)?;
    let degrees = (0..=n as i64 + 1)
        .map(|i| match i.cmp(&cutoff) {
            std::cmp::Ordering::Greater => x.group(i - 1),
            std::cmp::Ordering::Equal => DegreeGroup::default(),
            std::cmp::Ordering::Less => x.group(i),
        })
        .collect();
    Ok(IHTable { coefficients, degrees })
}

/// Output of [`compactified_bundle_formula`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleTable {
    pub table: IHTable,
    /// Degree `n - p(n) - 1` where the Euler class map contributes.
    pub transition_degree: i64,
    /// False when the transition term needed a cap product that is not
    /// modelled (the table then records zero there).
    pub verified: bool,
}

/// Intersection homology of the Thom space `Y` of an `r`-disk bundle with
/// Euler number `e` over a closed `m`-manifold `B`, from `H_*(B)` over a
/// field. With `t = m + r - p(m + r) - 1`:
/// `IH_i(Y) = H_{i-r}(B)` for `i > t`, `H_i(B)` for `i < t`, and at `i = t`
/// the rank of `e ∩ -: H_t(B) → H_{t-r}(B)`.
///
/// The transition rank is exact when source or target vanishes, when
/// `r > m`, or for the fundamental class to point class map (`t = r = m`
/// with `B` connected); other cases are reported as unverified.
pub fn compactified_bundle_formula(
    base: &IHTable,
    fiber_rank: usize,
    euler: i64,
    p: &Perversity,
) -> Result<BundleTable, FormulaError> {
    let coeff = base.coefficients;
    if !coeff.is_field() {
        return Err(FormulaError::NotAField);
    }
    let m = base.top_degree();
    let r = fiber_rank as i64;
    let n = m + fiber_rank;
    let t = n as i64 - perversity_at(p, n)? - 1;
    let (source, target) = (base.dim(t), base.dim(t - r));
    let (transition, verified) = if source == 0 || target == 0 || fiber_rank > m {
        (0, true)
    } else if t == m as i64 && fiber_rank == m && base.dim(0) == 1 && base.dim(m as i64) == 1 {
        let char = coeff.characteristic() as i64;
        let vanishes = if char == 0 {
            euler == 0
        } else {
            euler.rem_euclid(char) == 0
        };
        (usize::from(!vanishes), true)
    } else {
        (0, false)
    };
    let degrees = (0..=n as i64)
        .map(|i| {
            DegreeGroup::free(match i.cmp(&t) {
                std::cmp::Ordering::Greater => base.dim(i - r),
                std::cmp::Ordering::Equal => transition,
                std::cmp::Ordering::Less => base.dim(i),
            })
        })
        .collect();
    Ok(BundleTable {
        table: IHTable {
            coefficients: coeff,
            degrees,
        },
        transition_degree: t,
        verified,
    })
}

/// Künneth formula over a field for `X × M` with `M` a manifold: the graded
/// convolution of dimensions.
pub fn kunneth(x: &IHTable, m: &IHTable) -> Result<IHTable, FormulaError> {
    if x.coefficients != m.coefficients {
        return Err(FormulaError::MixedCoefficients(x.coefficients, m.coefficients));
    }
    if !x.coefficients.is_field() {
        return Err(FormulaError::NotAField);
    }
    let len = x.degrees.len() + m.degrees.len() - 1;
    let mut dims = vec![0usize; len];
    for (i, a) in x.degrees.iter().enumerate() {
        for (j, b) in m.degrees.iter().enumerate() {
            dims[i + j] += a.rank * b.rank;
        }
    }
    Ok(IHTable::from_dims(x.coefficients, &dims))
}

/// Field dimensions of ordinary homology from an integral table by the
/// universal coefficient theorem: `rank_i + t_p(i) + t_p(i-1)`.
///
/// Only valid for ordinary homology; intersection homology does not obey
/// this in general.
pub fn reduce_coefficients(integral: &IHTable, coeff: &CoefficientSpec) -> Result<IHTable, FormulaError> {
    if integral.coefficients != CoefficientSpec::Integers {
        return Err(FormulaError::InvalidTable("expected an integral table".into()));
    }
    if !coeff.is_field() {
        return Ok(integral.clone());
    }
    let c = coeff.characteristic() as u64;
    let t = |i: i64| {
        if c == 0 {
            0
        } else {
            integral.group(i).torsion.iter().filter(|&&a| a % c == 0).count()
        }
    };
    let dims: Vec<usize> = (0..integral.degrees.len() as i64)
        .map(|i| integral.dim(i) + t(i) + t(i - 1))
        .collect();
    Ok(IHTable::from_dims(*coeff, &dims))
}
