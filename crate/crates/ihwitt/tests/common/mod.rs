//! Independent reference implementations used by the integration tests.
//!
//! These deliberately share nothing with the library's algorithms: dense
//! Gaussian elimination, brute-force face enumeration, determinantal
//! divisors and exhaustive search over field elements.

#![allow(dead_code)]

use ihwitt::exactalg::{CoefficientSpec, Field, FiniteField, Ring};
use ihwitt::ihcore::Perversity;
use ihwitt::simplicial::StratifiedComplex;

/// Rank of a dense matrix by plain row reduction.
pub fn dense_rank<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][c])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(&rows[rank][c]).expect("nonzero pivot");
        for r in 0..rows.len() {
            if r != rank && !f.is_zero(&rows[r][c]) {
                let factor = f.mul(&rows[r][c], &inv);
                for k in c..cols {
                    let t = f.mul(&factor, &rows[rank][k]);
                    rows[r][k] = f.sub(&rows[r][k], &t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of the null space `{v : M v = 0}` of a dense `rows × cols` matrix.
pub fn dense_nullspace<F: Field>(f: &F, mut m: Vec<Vec<F::Elem>>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !f.is_zero(&m[r][c])) else {
            continue;
        };
        m.swap(row, p);
        let inv = f.inv(&m[row][c]).expect("nonzero pivot");
        for k in 0..cols {
            m[row][k] = f.mul(&m[row][k], &inv);
        }
        for r in 0..m.len() {
            if r != row && !f.is_zero(&m[r][c]) {
                let factor = m[r][c].clone();
                for k in 0..cols {
                    let t = f.mul(&factor, &m[row][k]);
                    m[r][k] = f.sub(&m[r][k], &t);
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[r][fc]);
            }
            v
        })
        .collect()
}

/// Largest dimension of a face of `s` inside `X^t`, by enumerating all faces.
pub fn face_intersection_dim(x: &StratifiedComplex, s: &[u32], t: usize) -> Option<usize> {
    let n = s.len();
    let mut best: Option<usize> = None;
    for mask in 1u32..(1u32 << n) {
        let face: Vec<u32> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
        if x.in_skeleton(t, &face) {
            let d = face.len() - 1;
            best = Some(best.map_or(d, |b| b.max(d)));
        }
    }
    best
}

/// Allowability of an `i`-simplex straight from the definition.
pub fn oracle_allowable(x: &StratifiedComplex, p: &Perversity, s: &[u32], i: usize) -> bool {
    let n = x.dim();
    let all: Vec<Vec<u32>> = (0..=n).flat_map(|d| x.complex().simplices(d).to_vec()).collect();
    for k in 2..=n {
        let t = n - k;
        if !all.iter().any(|v| x.in_skeleton(t, v)) {
            continue;
        }
        if let Some(d) = face_intersection_dim(x, s, t) {
            if d as i64 > i as i64 - k as i64 + p.value(k).expect("perversity covers the dimension") {
                return false;
            }
        }
    }
    true
}

fn boundary_dense<F: Field>(f: &F, x: &StratifiedComplex, i: usize, chain: &[F::Elem]) -> Vec<F::Elem> {
    let c = x.complex();
    let mut out = vec![f.zero(); c.count(i - 1)];
    for (k, s) in c.simplices(i).iter().enumerate() {
        if f.is_zero(&chain[k]) {
            continue;
        }
        for drop in 0..s.len() {
            let face: Vec<u32> = s
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != drop)
                .map(|(_, &v)| v)
                .collect();
            let idx = c.index_of(&face).expect("faces are in the complex");
            let term = if drop % 2 == 0 {
                chain[k].clone()
            } else {
                f.neg(&chain[k])
            };
            out[idx] = f.add(&out[idx], &term);
        }
    }
    out
}

/// `dim I^pH_i(X; F)` by dense linear algebra on the allowable chains.
pub fn oracle_ih_dims<F: Field>(f: &F, x: &StratifiedComplex, p: &Perversity) -> Vec<usize> {
    let c = x.complex();
    let n = x.dim();
    let allow: Vec<Vec<bool>> = (0..=n)
        .map(|i| c.simplices(i).iter().map(|s| oracle_allowable(x, p, s, i)).collect())
        .collect();
    // Basis of I^pC_i as full-length coefficient vectors.
    let mut bases: Vec<Vec<Vec<F::Elem>>> = Vec::new();
    for i in 0..=n {
        let cols: Vec<usize> = (0..c.count(i)).filter(|&k| allow[i][k]).collect();
        let embed = |v: &[F::Elem]| {
            let mut full = vec![f.zero(); c.count(i)];
            for (j, &k) in cols.iter().enumerate() {
                full[k] = v[j].clone();
            }
            full
        };
        let basis = if i == 0 {
            (0..cols.len())
                .map(|j| {
                    let mut v = vec![f.zero(); cols.len()];
                    v[j] = f.one();
                    embed(&v)
                })
                .collect()
        } else {
            let bad: Vec<usize> = (0..c.count(i - 1)).filter(|&r| !allow[i - 1][r]).collect();
            let images: Vec<Vec<F::Elem>> = cols
                .iter()
                .map(|&k| {
                    let mut unit = vec![f.zero(); c.count(i)];
                    unit[k] = f.one();
                    boundary_dense(f, x, i, &unit)
                })
                .collect();
            let m: Vec<Vec<F::Elem>> = bad
                .iter()
                .map(|&r| images.iter().map(|col| col[r].clone()).collect())
                .collect();
            dense_nullspace(f, m, cols.len()).iter().map(|v| embed(v)).collect()
        };
        bases.push(basis);
    }
    let ranks: Vec<usize> = (0..=n)
        .map(|i| {
            if i == 0 || bases[i].is_empty() {
                0
            } else {
                dense_rank(f, bases[i].iter().map(|v| boundary_dense(f, x, i, v)).collect())
            }
        })
        .collect();
    (0..=n)
        .map(|i| bases[i].len() - ranks[i] - if i < n { ranks[i + 1] } else { 0 })
        .collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors `d_k = gcd(k×k minors)`.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<u64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| (w[1] / w[0]) as u64).collect()
}

/// Witt class invariants of a nondegenerate form over `F_q`, `q` odd:
/// dimension parity and whether `(-1)^{n(n-1)/2} det` is a nonsquare,
/// with squares found by listing `x^2` for every element.
pub fn oracle_finite_class(f: &FiniteField, gram: &[Vec<u32>]) -> (u8, bool) {
    let n = gram.len();
    let d = oracle_det(f, gram);
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        f.neg(&f.one())
    } else {
        f.one()
    };
    let signed = f.mul(&sign, &d);
    let squares: Vec<u32> = f.elements().map(|x| f.mul(&x, &x)).collect();
    ((n % 2) as u8, !squares.contains(&signed))
}

/// Determinant over a finite field by permutation expansion.
pub fn oracle_det(f: &FiniteField, m: &[Vec<u32>]) -> u32 {
    let n = m.len();
    if n == 0 {
        return f.one();
    }
    let mut total = f.zero();
    for j in 0..n {
        let minor: Vec<Vec<u32>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
        let term = f.mul(&m[0][j], &oracle_det(f, &minor));
        total = if j % 2 == 0 {
            f.add(&total, &term)
        } else {
            f.sub(&total, &term)
        };
    }
    total
}

/// Whether some nonzero vector `v` has `vᵀ G v = 0`, by exhaustive search.
pub fn oracle_isotropic(f: &FiniteField, gram: &[Vec<u32>]) -> bool {
    let n = gram.len();
    let q = f.order() as u64;
    (1..q.pow(n as u32)).any(|mut code| {
        let v: Vec<u32> = (0..n)
            .map(|_| {
                let a = (code % q) as u32;
                code /= q;
                a
            })
            .collect();
        let mut total = f.zero();
        for i in 0..n {
            for j in 0..n {
                let t = f.mul(&f.mul(&v[i], &gram[i][j]), &v[j]);
                total = f.add(&total, &t);
            }
        }
        f.is_zero(&total)
    })
}

pub fn coeff(s: &str) -> CoefficientSpec {
    s.parse().expect("valid coefficient name")
}

/// The six test fields.
pub const FIELDS: [&str; 6] = ["Q", "Z2", "Z3", "Z5", "F4", "F9"];
