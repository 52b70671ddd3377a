use std::collections::HashMap;

use num::{BigInt, Integer, Signed, Zero};

use super::field::{Field, Integers, Ring};
use super::sparse::{axpy, scale, SparseMatrix, SparseVec};

const NONE: usize = usize::MAX;

/// Result of a left-to-right column reduction `R = A V`.
///
/// Nonzero columns of `reduced` have pairwise distinct lowest rows (their
/// largest row index). `transform` holds the columns of `V` when tracking was
/// requested.
#[derive(Clone, Debug)]
pub struct Reduction<E> {
    pub reduced: Vec<SparseVec<E>>,
    pub transform: Option<Vec<SparseVec<E>>>,
    pub rank: usize,
}

/// Column reduction over a field. Pivot columns are scaled so their lowest
/// entry is one.
pub fn reduce_columns<F: Field>(field: &F, m: &SparseMatrix<F::Elem>, track: bool) -> Reduction<F::Elem> {
    let mut pivot_col = vec![NONE; m.rows()];
    let mut reduced: Vec<SparseVec<F::Elem>> = Vec::with_capacity(m.cols());
    let mut transform: Option<Vec<SparseVec<F::Elem>>> = track.then(|| Vec::with_capacity(m.cols()));
    let mut rank = 0;
    for j in 0..m.cols() {
        let mut col = m.column(j).to_vec();
        let mut v = if track { vec![(j, field.one())] } else { Vec::new() };
        while let Some((low, c)) = col.last().cloned() {
            let k = pivot_col[low];
            if k == NONE {
                let inv = field.inv(&c).expect("nonzero entry is invertible");
                if inv != field.one() {
                    col = scale(field, &inv, &col);
                    if track {
                        v = scale(field, &inv, &v);
                    }
                }
                pivot_col[low] = j;
                rank += 1;
                break;
            }
            let neg = field.neg(&c);
            col = axpy(field, &col, &neg, &reduced[k]);
            if let Some(t) = transform.as_ref() {
                v = axpy(field, &v, &neg, &t[k]);
            }
        }
        reduced.push(col);
        if let Some(t) = transform.as_mut() {
            t.push(v);
        }
    }
    Reduction {
        reduced,
        transform,
        rank,
    }
}

/// Rank over a field.
pub fn rank<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> usize {
    rank_only(field, m)
}

// Same reduction without keeping the transform; drops zero columns as it goes.
fn rank_only<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> usize {
    let mut pivot_col = vec![NONE; m.rows()];
    let mut pivots: Vec<SparseVec<F::Elem>> = Vec::new();
    for j in 0..m.cols() {
        let mut col = m.column(j).to_vec();
        while let Some((low, c)) = col.last().cloned() {
            let k = pivot_col[low];
            if k == NONE {
                let inv = field.inv(&c).expect("nonzero entry is invertible");
                if inv != field.one() {
                    col = scale(field, &inv, &col);
                }
                pivot_col[low] = pivots.len();
                pivots.push(col);
                break;
            }
            let neg = field.neg(&c);
            col = axpy(field, &col, &neg, &pivots[k]);
        }
    }
    pivots.len()
}

/// Basis of the null space over a field, in echelon form: the `i`-th vector
/// has lowest index equal to some column `j` with entry one there.
pub fn kernel_basis<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> Vec<SparseVec<F::Elem>> {
    let red = reduce_columns(field, m, true);
    let transform = red.transform.expect("tracked");
    red.reduced
        .iter()
        .zip(transform)
        .filter(|(r, _)| r.is_empty())
        .map(|(_, v)| v)
        .collect()
}

/// Column reduction over the integers using unimodular column operations.
///
/// When a new column collides with an existing pivot whose entry does not
/// divide it, both columns are replaced by a gcd combination, so the lattice
/// spanned by the columns is preserved and `V` stays unimodular.
pub fn reduce_columns_integral(m: &SparseMatrix<BigInt>, track: bool) -> Reduction<BigInt> {
    let z = Integers;
    let mut pivot_col = vec![NONE; m.rows()];
    let mut reduced: Vec<SparseVec<BigInt>> = Vec::with_capacity(m.cols());
    let mut transform: Option<Vec<SparseVec<BigInt>>> = track.then(|| Vec::with_capacity(m.cols()));
    let mut rank = 0;
    for j in 0..m.cols() {
        let mut col = m.column(j).to_vec();
        let mut v = if track { vec![(j, BigInt::from(1))] } else { Vec::new() };
        while let Some((low, b)) = col.last().cloned() {
            let k = pivot_col[low];
            if k == NONE {
                if b.is_negative() {
                    col = scale(&z, &BigInt::from(-1), &col);
                    if track {
                        v = scale(&z, &BigInt::from(-1), &v);
                    }
                }
                pivot_col[low] = j;
                rank += 1;
                break;
            }
            let a = reduced[k].last().expect("pivot column").1.clone();
            if (&b % &a).is_zero() {
                let f = -(&b / &a);
                col = axpy(&z, &col, &f, &reduced[k]);
                if let Some(t) = transform.as_ref() {
                    v = axpy(&z, &v, &f, &t[k]);
                }
                continue;
            }
            let ext = a.extended_gcd(&b);
            let (g, u, w) = (ext.gcd, ext.x, ext.y);
            let bg = &b / &g;
            let ag = &a / &g;
            // [pivot', col'] = [pivot, col] * [[u, -b/g], [w, a/g]], determinant one.
            let new_pivot = axpy(&z, &scale(&z, &u, &reduced[k]), &w, &col);
            let new_col = axpy(&z, &scale(&z, &ag, &col), &(-&bg), &reduced[k]);
            reduced[k] = new_pivot;
            col = new_col;
            if let Some(t) = transform.as_mut() {
                let new_tp = axpy(&z, &scale(&z, &u, &t[k]), &w, &v);
                let new_v = axpy(&z, &scale(&z, &ag, &v), &(-&bg), &t[k]);
                t[k] = new_tp;
                v = new_v;
            }
        }
        reduced.push(col);
        if let Some(t) = transform.as_mut() {
            t.push(v);
        }
    }
    Reduction {
        reduced,
        transform,
        rank,
    }
}

/// Basis of the integer null space (a saturated lattice).
pub fn kernel_basis_integral(m: &SparseMatrix<BigInt>) -> Vec<SparseVec<BigInt>> {
    let red = reduce_columns_integral(m, true);
    let transform = red.transform.expect("tracked");
    let kernel: Vec<_> = red
        .reduced
        .iter()
        .zip(transform)
        .filter(|(r, _)| r.is_empty())
        .map(|(_, v)| v)
        .collect();
    echelonize_integral(kernel, m.cols())
}

/// Rewrites a lattice basis in echelon form (distinct lowest indices,
/// positive lowest entries) without changing the lattice.
pub fn echelonize_integral(vectors: Vec<SparseVec<BigInt>>, dim: usize) -> Vec<SparseVec<BigInt>> {
    let m = SparseMatrix::from_columns(dim, vectors);
    reduce_columns_integral(&m, false)
        .reduced
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect()
}

/// A basis in echelon form, supporting coordinate extraction by back
/// substitution.
#[derive(Clone, Debug, PartialEq)]
pub struct EchelonBasis<E> {
    vectors: Vec<SparseVec<E>>,
    by_low: HashMap<usize, usize>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> EchelonBasis<E> {
    /// Returns `None` if two vectors share a lowest index or a vector is zero.
    pub fn new(vectors: Vec<SparseVec<E>>) -> Option<Self> {
        let mut by_low = HashMap::with_capacity(vectors.len());
        for (k, v) in vectors.iter().enumerate() {
            let low = v.last()?.0;
            if by_low.insert(low, k).is_some() {
                return None;
            }
        }
        Some(EchelonBasis { vectors, by_low })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[SparseVec<E>] {
        &self.vectors
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span
    /// (over a ring: not in the lattice).
    pub fn coordinates<R: Ring<Elem = E>>(&self, ring: &R, v: &[(usize, E)]) -> Option<SparseVec<E>> {
        let mut w = v.to_vec();
        let mut coords = Vec::new();
        while let Some((low, c)) = w.last().cloned() {
            let k = *self.by_low.get(&low)?;
            let pivot = &self.vectors[k].last().expect("nonzero basis vector").1;
            let x = ring.div_exact(&c, pivot)?;
            w = axpy(ring, &w, &ring.neg(&x), &self.vectors[k]);
            coords.push((k, x));
        }
        coords.sort_by_key(|(k, _)| *k);
        Some(coords)
    }

    pub fn contains<R: Ring<Elem = E>>(&self, ring: &R, v: &[(usize, E)]) -> bool {
        self.coordinates(ring, v).is_some()
    }
}

/// Rank over the integers via the unimodular reduction (equals the rank over
/// the rationals).
pub fn rank_integral(m: &SparseMatrix<BigInt>) -> usize {
    reduce_columns_integral(m, false).rank
}
