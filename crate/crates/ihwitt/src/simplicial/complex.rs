use std::collections::{HashMap, HashSet};

use crate::exactalg::IntMatrix;

use super::ComplexError;

/// A simplex as its strictly increasing list of vertex labels.
pub type Simplex = Vec<u32>;

/// Finite abstract simplicial complex, stored as all simplices grouped by
/// dimension, each group sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    maximal: Vec<Simplex>,
}

/// Calls `f` on every nonempty face of `s` (including `s`).
pub(crate) fn for_each_face(s: &[u32], mut f: impl FnMut(Simplex)) {
    let n = s.len();
    for mask in 1u32..(1u32 << n) {
        f((0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect());
    }
}

/// Facet of `s` omitting position `k`.
pub fn facet(s: &[u32], k: usize) -> Simplex {
    s.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| *v).collect()
}

pub(crate) fn normalize(raw: &[u32]) -> Result<Simplex, ComplexError> {
    if raw.is_empty() {
        return Err(ComplexError::EmptySimplex);
    }
    let mut s = raw.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(ComplexError::RepeatedVertex(raw.to_vec()));
    }
    Ok(s)
}

/// Downward closure of a list of simplices.
pub fn build_complex(maximal: &[Vec<u32>]) -> Result<SimplicialComplex, ComplexError> {
    let gens = maximal.iter().map(|s| normalize(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialComplex::from_generators(gens))
}

impl SimplicialComplex {
    /// Closure of already normalized generators.
    pub(crate) fn from_generators(gens: Vec<Simplex>) -> Self {
        let dim = gens.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); dim];
        for g in &gens {
            if sets[g.len() - 1].contains(g) {
                continue;
            }
            for_each_face(g, |f| {
                sets[f.len() - 1].insert(f);
            });
        }
        let simplices: Vec<Vec<Simplex>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Simplex> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let index = simplices
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut complex = SimplicialComplex {
            simplices,
            index,
            maximal: Vec::new(),
        };
        complex.maximal = complex.compute_maximal();
        complex
    }

    fn compute_maximal(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..self.simplices.len() {
            let mut has_coface = vec![false; self.simplices[d].len()];
            if d + 1 < self.simplices.len() {
                for s in &self.simplices[d + 1] {
                    for k in 0..s.len() {
                        has_coface[self.index[d][&facet(s, k)]] = true;
                    }
                }
            }
            out.extend(
                self.simplices[d]
                    .iter()
                    .zip(has_coface)
                    .filter(|(_, c)| !c)
                    .map(|(s, _)| s.clone()),
            );
        }
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// The empty complex.
    pub fn empty() -> Self {
        SimplicialComplex {
            simplices: Vec::new(),
            index: Vec::new(),
            maximal: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.index.get(s.len() - 1)?.get(s).copied()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index_of(s).is_some()
    }

    /// Maximal simplices ordered by dimension, then lexicographically.
    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Vertex labels in increasing order.
    pub fn vertices(&self) -> Vec<u32> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.simplices(0).last().map(|s| s[0])
    }

    /// Whether every simplex is a face of a top-dimensional one.
    pub fn is_pure(&self) -> bool {
        let top = self.simplices.len();
        self.maximal.iter().all(|s| s.len() == top)
    }

    /// Boundary operator from `d`-chains to `(d-1)`-chains. Rows index
    /// `(d-1)`-simplices, columns `d`-simplices, with the face omitting
    /// position `k` carrying sign `(-1)^k`. For `d = 0` the matrix has no rows.
    pub fn boundary_matrix(&self, d: usize) -> IntMatrix {
        let cols = self.count(d);
        if d == 0 {
            return IntMatrix::zeros(0, cols);
        }
        let rows = self.count(d - 1);
        let columns = self
            .simplices(d)
            .iter()
            .map(|s| {
                let mut col: Vec<(usize, i64)> = (0..s.len())
                    .map(|k| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (self.index[d - 1][&facet(s, k)], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|(r, _)| *r);
                col
            })
            .collect();
        IntMatrix::from_columns(rows, columns)
    }

    /// Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Relabels vertices through `map`, which must be injective on vertices.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Result<Self, ComplexError> {
        let gens: Vec<Vec<u32>> = self
            .maximal
            .iter()
            .map(|s| s.iter().map(|&v| map(v)).collect())
            .collect();
        build_complex(&gens)
    }

    /// Top-dimensional simplices containing `s`, by index.
    pub fn cofacets(&self, s: &[u32]) -> Vec<usize> {
        let d = s.len();
        self.simplices(d)
            .iter()
            .enumerate()
            .filter(|(_, t)| is_subset(s, t))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Whether sorted `a` is contained in sorted `b`.
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}
