use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Zero};

use crate::exactalg::{rational_to_finite, CoefficientSpec, Field, FieldKind, FiniteField, Rationals};

use super::WittError;

/// One exact entry of a Gram matrix as written in a file: an integer, a
/// fraction `a/b`, or a finite field element `poly:c0,c1,...` (constant
/// term first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramEntry {
    Rational(BigRational),
    Poly(Vec<i64>),
}

impl FromStr for GramEntry {
    type Err = WittError;

    fn from_str(s: &str) -> Result<Self, WittError> {
        let bad = || WittError::Syntax(format!("bad matrix entry `{s}`"));
        if let Some(rest) = s.strip_prefix("poly:") {
            let coeffs = rest
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GramEntry::Poly(coeffs));
        }
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(GramEntry::Rational(BigRational::new(num, den)))
    }
}

impl GramEntry {
    fn to_rational(&self) -> Result<BigRational, WittError> {
        match self {
            GramEntry::Rational(r) => Ok(r.clone()),
            GramEntry::Poly(_) => Err(WittError::Syntax("polynomial entry over the rationals".into())),
        }
    }

    fn to_finite(&self, f: &FiniteField) -> Result<u32, WittError> {
        match self {
            GramEntry::Rational(r) => rational_to_finite(f, r)
                .ok_or_else(|| WittError::Syntax(format!("denominator of {r} vanishes in the field"))),
            GramEntry::Poly(c) => Ok(f.from_coeffs(c)),
        }
    }
}

/// Parses a Gram matrix file: the dimension followed by the entries in
/// row-major order, separated by whitespace.
pub fn parse_gram(text: &str) -> Result<Vec<Vec<GramEntry>>, WittError> {
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| WittError::Syntax("empty matrix file".into()))?
        .parse()
        .map_err(|_| WittError::Syntax("matrix dimension must be a natural number".into()))?;
    let entries = tokens.map(str::parse).collect::<Result<Vec<GramEntry>, _>>()?;
    if entries.len() != n * n {
        return Err(WittError::Syntax(format!(
            "expected {} entries for dimension {n}, found {}",
            n * n,
            entries.len()
        )));
    }
    Ok(entries.chunks(n.max(1)).map(|r| r.to_vec()).collect())
}

/// A symmetric bilinear form given by its Gram matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<F: Field> {
    field: F,
    coefficients: CoefficientSpec,
    gram: Vec<Vec<F::Elem>>,
}

/// Congruence diagonalization `Pᵀ G P = diag(d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagonalization<E> {
    pub diagonal: Vec<E>,
    /// Columns are the new basis vectors.
    pub change_of_basis: Vec<Vec<E>>,
}

impl<F: Field> BilinearForm<F> {
    /// Checks that the matrix is square and symmetric.
    pub fn new(field: F, coefficients: CoefficientSpec, gram: Vec<Vec<F::Elem>>) -> Result<Self, WittError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(WittError::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(WittError::NotSymmetric);
                }
            }
        }
        Ok(BilinearForm {
            field,
            coefficients,
            gram,
        })
    }

    /// The diagonal form `⟨d_1, ..., d_n⟩`.
    pub fn diagonal(field: F, coefficients: CoefficientSpec, entries: &[F::Elem]) -> Self {
        let n = entries.len();
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { entries[i].clone() } else { field.zero() })
                    .collect()
            })
            .collect();
        BilinearForm {
            field,
            coefficients,
            gram,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coefficients(&self) -> CoefficientSpec {
        self.coefficients
    }

    pub fn gram(&self) -> &[Vec<F::Elem>] {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// `vᵀ G w`.
    pub fn evaluate(&self, v: &[F::Elem], w: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (i, row) in self.gram.iter().enumerate() {
            if f.is_zero(&v[i]) {
                continue;
            }
            let mut inner = f.zero();
            for (j, g) in row.iter().enumerate() {
                inner = f.add(&inner, &f.mul(g, &w[j]));
            }
            acc = f.add(&acc, &f.mul(&v[i], &inner));
        }
        acc
    }

    /// Orthogonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let f = &self.field;
        let gram = (0..a + b)
            .map(|i| {
                (0..a + b)
                    .map(|j| match (i < a, j < a) {
                        (true, true) => self.gram[i][j].clone(),
                        (false, false) => other.gram[i - a][j - a].clone(),
                        _ => f.zero(),
                    })
                    .collect()
            })
            .collect();
        BilinearForm {
            field: self.field.clone(),
            coefficients: self.coefficients,
            gram,
        }
    }

    /// `Pᵀ G P`.
    pub fn congruent(&self, p: &[Vec<F::Elem>]) -> Self {
        let f = &self.field;
        let n = self.dim();
        let gp: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&self.gram[i][k], &p[k][j]))))
                    .collect()
            })
            .collect();
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&p[k][i], &gp[k][j]))))
                    .collect()
            })
            .collect();
        BilinearForm {
            field: self.field.clone(),
            coefficients: self.coefficients,
            gram,
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> F::Elem {
        determinant(&self.field, &self.gram)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.field.is_zero(&self.determinant())
    }

    /// Diagonalizes by congruence. Needs characteristic other than two.
    pub fn diagonalize(&self) -> Result<Diagonalization<F::Elem>, WittError> {
        let f = &self.field;
        if f.characteristic() == 2 {
            return Err(WittError::CharacteristicTwo);
        }
        let n = self.dim();
        let mut g = self.gram.clone();
        let mut p: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        // Column operation `e_j += c e_k` applied to both G (as a congruence)
        // and P.
        let add_multiple = |g: &mut Vec<Vec<F::Elem>>, p: &mut Vec<Vec<F::Elem>>, j: usize, k: usize, c: &F::Elem| {
            for row in p.iter_mut() {
                row[j] = f.add(&row[j], &f.mul(c, &row[k]));
            }
            for row in g.iter_mut() {
                row[j] = f.add(&row[j], &f.mul(c, &row[k]));
            }
            let rk = g[k].clone();
            for (x, y) in g[j].iter_mut().zip(rk) {
                *x = f.add(x, &f.mul(c, &y));
            }
        };
        for k in 0..n {
            if f.is_zero(&g[k][k]) {
                if let Some(j) = (k + 1..n).find(|&j| !f.is_zero(&g[j][j])) {
                    for row in p.iter_mut() {
                        row.swap(k, j);
                    }
                    for row in g.iter_mut() {
                        row.swap(k, j);
                    }
                    g.swap(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !f.is_zero(&g[k][j])) {
                    // Both diagonal entries vanish, so e_k + e_j has value 2 g_kj.
                    let one = f.one();
                    add_multiple(&mut g, &mut p, k, j, &one);
                } else {
                    return Err(WittError::Degenerate);
                }
            }
            let inv = f.inv(&g[k][k]).expect("pivot is nonzero");
            for j in k + 1..n {
                if f.is_zero(&g[k][j]) {
                    continue;
                }
                let c = f.neg(&f.mul(&g[k][j], &inv));
                add_multiple(&mut g, &mut p, j, k, &c);
            }
        }
        Ok(Diagonalization {
            diagonal: (0..n).map(|i| g[i][i].clone()).collect(),
            change_of_basis: p,
        })
    }
}

pub(crate) fn determinant<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = f.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !f.is_zero(&a[i][k])) else {
            return f.zero();
        };
        if piv != k {
            a.swap(piv, k);
            det = f.neg(&det);
        }
        det = f.mul(&det, &a[k][k]);
        let inv = f.inv(&a[k][k]).expect("pivot is nonzero");
        for i in k + 1..n {
            if f.is_zero(&a[i][k]) {
                continue;
            }
            let c = f.mul(&a[i][k], &inv);
            for j in k..n {
                let t = f.mul(&c, &a[k][j]);
                a[i][j] = f.sub(&a[i][j], &t);
            }
        }
    }
    det
}

/// A bilinear form over any supported field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyForm {
    Rational(BilinearForm<Rationals>),
    Finite(BilinearForm<FiniteField>),
}

impl AnyForm {
    /// Interprets exact entries over `coeff`.
    pub fn from_entries(entries: &[Vec<GramEntry>], coeff: &CoefficientSpec) -> Result<Self, WittError> {
        match coeff.field()? {
            FieldKind::Rational(q) => {
                let gram = entries
                    .iter()
                    .map(|r| r.iter().map(GramEntry::to_rational).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AnyForm::Rational(BilinearForm::new(q, *coeff, gram)?))
            }
            FieldKind::Finite(f) => {
                let gram = entries
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_finite(&f)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AnyForm::Finite(BilinearForm::new(f, *coeff, gram)?))
            }
        }
    }

    /// Integer Gram matrix read over `coeff`.
    pub fn from_integers(gram: &[Vec<i64>], coeff: &CoefficientSpec) -> Result<Self, WittError> {
        let entries: Vec<Vec<GramEntry>> = gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| GramEntry::Rational(BigRational::from_integer(v.into())))
                    .collect()
            })
            .collect();
        Self::from_entries(&entries, coeff)
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyForm::Rational(b) => b.dim(),
            AnyForm::Finite(b) => b.dim(),
        }
    }

    pub fn coefficients(&self) -> CoefficientSpec {
        match self {
            AnyForm::Rational(b) => b.coefficients(),
            AnyForm::Finite(b) => b.coefficients(),
        }
    }
}

impl fmt::Display for AnyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = match self {
            AnyForm::Rational(b) => b
                .gram()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect(),
            AnyForm::Finite(b) => b
                .gram()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| b.field().format_element(v))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
        };
        write!(f, "[{}]", rows.join("; "))
    }
}
