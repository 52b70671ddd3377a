use super::field::Ring;

/// Sparse vector: `(index, value)` pairs sorted by index with no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c * b` for sparse vectors over `ring`.
pub fn axpy<R: Ring>(ring: &R, a: &[(usize, R::Elem)], c: &R::Elem, b: &[(usize, R::Elem)]) -> SparseVec<R::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = ring.mul(c, &b[j].1);
            if !ring.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = ring.add(&a[i].1, &ring.mul(c, &b[j].1));
            if !ring.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `c * a` for a sparse vector.
pub fn scale<R: Ring>(ring: &R, c: &R::Elem, a: &[(usize, R::Elem)]) -> SparseVec<R::Elem> {
    a.iter()
        .filter_map(|(i, v)| {
            let w = ring.mul(c, v);
            (!ring.is_zero(&w)).then_some((*i, w))
        })
        .collect()
}

/// Value stored at `index`, if any.
pub fn entry<E>(a: &[(usize, E)], index: usize) -> Option<&E> {
    a.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &a[k].1)
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<E>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from columns; each column must be sorted by row and free of zeros.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec<E>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.last().is_none_or(|(r, _)| *r < rows)));
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Builds from a dense row-major array, dropping entries for which
    /// `is_zero` holds.
    pub fn from_dense(dense: &[Vec<E>], cols: usize, is_zero: impl Fn(&E) -> bool) -> Self {
        let rows = dense.len();
        let mut columns = vec![Vec::new(); cols];
        for (r, row) in dense.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, v) in row.iter().enumerate() {
                if !is_zero(v) {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        SparseMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, E)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec<E>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec<E>> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        entry(&self.columns[c], r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Entrywise conversion, dropping entries that become zero.
    pub fn map<F>(&self, mut f: impl FnMut(&E) -> F, is_zero: impl Fn(&F) -> bool) -> SparseMatrix<F> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(r, v)| {
                            let w = f(v);
                            (!is_zero(&w)).then_some((*r, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Keeps the listed columns in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        SparseMatrix {
            rows: self.rows,
            cols: cols.len(),
            columns: cols.iter().map(|&c| self.columns[c].clone()).collect(),
        }
    }

    /// Keeps rows flagged in `keep`, renumbering them consecutively.
    pub fn select_rows(&self, keep: &[bool]) -> Self {
        let mut new_index = vec![usize::MAX; self.rows];
        let mut next = 0;
        for (r, &k) in keep.iter().enumerate() {
            if k {
                new_index[r] = next;
                next += 1;
            }
        }
        SparseMatrix {
            rows: next,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .filter(|(r, _)| keep[*r])
                        .map(|(r, v)| (new_index[*r], v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Dense row-major copy with `zero` in empty slots.
    pub fn to_dense(&self, zero: E) -> Vec<Vec<E>> {
        let mut out = vec![vec![zero; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }
}

impl<E: Clone> SparseMatrix<E> {
    /// Matrix-vector product over `ring`.
    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, v: &[(usize, E)]) -> SparseVec<E> {
        let mut acc: SparseVec<E> = Vec::new();
        for (c, x) in v {
            acc = axpy(ring, &acc, x, &self.columns[*c]);
        }
        acc
    }

    /// Matrix product `self * other` over `ring`.
    pub fn mul_mat<R: Ring<Elem = E>>(&self, ring: &R, other: &SparseMatrix<E>) -> SparseMatrix<E> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.mul_vec(ring, c)).collect(),
        }
    }
}

/// Integer matrix with machine-word entries, the form boundary matrices take.
pub type IntMatrix = SparseMatrix<i64>;

impl IntMatrix {
    /// Dense integer matrix from row-major data.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        SparseMatrix::from_dense(rows, cols, |v| *v == 0)
    }

    /// Image in `ring` under the canonical map from the integers.
    pub fn over<R: Ring>(&self, ring: &R) -> SparseMatrix<R::Elem> {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(r, v)| {
                        let w = ring.from_i64(*v);
                        (!ring.is_zero(&w)).then_some((*r, w))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }
}
