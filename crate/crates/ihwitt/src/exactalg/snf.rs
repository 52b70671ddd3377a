use std::collections::{BTreeSet, HashMap};

use num::{BigInt, Integer, One, Signed, Zero};

use super::sparse::{IntMatrix, SparseMatrix};

/// Smith normal form data: the nonzero invariant factors in ascending
/// divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form of an integer matrix given with machine-word entries.
pub fn smith_normal_form_int(m: &IntMatrix) -> SnfResult {
    smith_normal_form(&m.map(|v| BigInt::from(*v), |v| v.is_zero()))
}

/// Smith normal form over the integers.
///
/// Unit pivots are eliminated first on the sparse representation, which
/// leaves an invariant factor of one each. The remainder is reduced densely,
/// always pivoting on an entry of smallest absolute value (ties broken by
/// row, then column).
pub fn smith_normal_form(m: &SparseMatrix<BigInt>) -> SnfResult {
    let mut rows: Vec<HashMap<usize, BigInt>> = vec![HashMap::new(); m.rows()];
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for c in 0..m.cols() {
        for (r, v) in m.column(c) {
            rows[*r].insert(c, v.clone());
            cols[c].insert(*r);
        }
    }
    let mut row_alive = vec![true; m.rows()];
    let mut col_alive = vec![true; m.cols()];
    let mut ones = 0usize;

    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..m.cols() {
            if !col_alive[c] {
                continue;
            }
            // Unit entry in this column whose row is sparsest.
            let pivot_row = cols[c]
                .iter()
                .filter(|&&r| rows[r][&c].abs().is_one())
                .min_by_key(|&&r| (rows[r].len(), r))
                .copied();
            let Some(r) = pivot_row else { continue };
            let u = rows[r][&c].clone();
            let pivot_entries: Vec<(usize, BigInt)> = rows[r].iter().map(|(k, v)| (*k, v.clone())).collect();
            let others: Vec<usize> = cols[c].iter().copied().filter(|&x| x != r).collect();
            for r2 in others {
                // Unit pivot: the quotient is exact.
                let f = &rows[r2][&c] * &u;
                for (k, v) in &pivot_entries {
                    let delta = &f * v;
                    let slot = rows[r2].entry(*k).or_insert_with(BigInt::zero);
                    *slot -= delta;
                    if slot.is_zero() {
                        rows[r2].remove(k);
                        cols[*k].remove(&r2);
                    } else {
                        cols[*k].insert(r2);
                    }
                }
            }
            for (k, _) in &pivot_entries {
                cols[*k].remove(&r);
            }
            rows[r].clear();
            row_alive[r] = false;
            col_alive[c] = false;
            ones += 1;
            progress = true;
        }
    }

    let live_rows: Vec<usize> = (0..m.rows()).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols()).filter(|&c| col_alive[c] && !cols[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[*r] {
            dense[i][col_pos[c]] = v.clone();
        }
    }
    let mut invariant_factors = vec![BigInt::one(); ones];
    invariant_factors.extend(dense_snf(dense));
    normalize_chain(&mut invariant_factors);
    SnfResult { invariant_factors }
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(b, _, _)| av < *b) {
                best = Some((av, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t) else { break };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // A nonzero remainder is smaller than the pivot; move the
                // smallest one in the pivot row or column into place.
                let mut best: Option<(BigInt, usize, usize)> = None;
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && best.as_ref().is_none_or(|(b, _, _)| a[i][t].abs() < *b) {
                        best = Some((a[i][t].abs(), i, t));
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && best.as_ref().is_none_or(|(b, _, _)| a[t][j].abs() < *b) {
                        best = Some((a[t][j].abs(), t, j));
                    }
                }
                if let Some((_, i, j)) = best {
                    a.swap(t, i);
                    swap_cols(&mut a, t, j);
                }
                continue;
            }
            let pivot = a[t][t].clone();
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad_row {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

// Enforce d1 | d2 | ... by gcd/lcm exchanges; leaves the group unchanged.
fn normalize_chain(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}
