use std::collections::BTreeMap;

use super::complex::{facet, for_each_face, normalize, Simplex, SimplicialComplex};
use super::ComplexError;

/// A simplicial complex with a filtration `X^0 ⊆ X^1 ⊆ ... ⊆ X^n = X` by
/// subcomplexes, `dim X^i ≤ i`.
///
/// The filtration is stored as a level per simplex: the least `i` with the
/// simplex in `X^i`. Top-stratum simplices have level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedComplex {
    complex: SimplicialComplex,
    dim: usize,
    levels: Vec<Vec<usize>>,
}

/// One connected component of a stratum `X^d \ X^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumComponent {
    /// Dimension of the stratum.
    pub dim: usize,
    /// Indices of the `dim`-simplices making up the component, ascending.
    pub simplices: Vec<usize>,
}

impl StratifiedComplex {
    /// Trivial filtration: every proper skeleton empty.
    pub fn trivial(complex: SimplicialComplex) -> Self {
        let dim = complex.dim().unwrap_or(0);
        let levels = complex.f_vector().iter().map(|&c| vec![dim; c]).collect();
        StratifiedComplex { complex, dim, levels }
    }

    /// Filtration from generators: `skeleta[i]` lists simplices spanning
    /// (together with all lower skeleta) the subcomplex `X^i`, for `i < n`.
    pub fn new(complex: SimplicialComplex, skeleta: &BTreeMap<usize, Vec<Vec<u32>>>) -> Result<Self, ComplexError> {
        let dim = complex.dim().ok_or(ComplexError::EmptyComplex)?;
        let mut levels: Vec<Vec<usize>> = complex.f_vector().iter().map(|&c| vec![dim; c]).collect();
        for (&i, gens) in skeleta {
            if i >= dim {
                if gens.is_empty() {
                    continue;
                }
                return Err(ComplexError::SkeletonOutOfRange { level: i, dim });
            }
            for g in gens {
                let g = normalize(g)?;
                if !complex.contains(&g) {
                    return Err(ComplexError::NotInComplex(g));
                }
                if g.len() - 1 > i {
                    return Err(ComplexError::SkeletonTooLarge { level: i, simplex: g });
                }
                for_each_face(&g, |f| {
                    let idx = complex.index_of(&f).expect("face of a simplex in the complex");
                    let slot = &mut levels[f.len() - 1][idx];
                    *slot = (*slot).min(i);
                });
            }
        }
        let out = StratifiedComplex { complex, dim, levels };
        out.check_strata_pure()?;
        Ok(out)
    }

    /// Filtration given by a level function on simplices. Levels must be
    /// monotone under taking faces and at least the simplex dimension.
    pub fn with_level_fn(
        complex: SimplicialComplex,
        dim: usize,
        level: impl Fn(&[u32]) -> usize,
    ) -> Result<Self, ComplexError> {
        let levels: Vec<Vec<usize>> = (0..complex.f_vector().len())
            .map(|d| complex.simplices(d).iter().map(|s| level(s).min(dim)).collect())
            .collect();
        let out = StratifiedComplex { complex, dim, levels };
        out.check_levels()?;
        out.check_strata_pure()?;
        Ok(out)
    }

    fn check_levels(&self) -> Result<(), ComplexError> {
        for d in 0..self.levels.len() {
            for (i, s) in self.complex.simplices(d).iter().enumerate() {
                let l = self.levels[d][i];
                if l < d {
                    return Err(ComplexError::SkeletonTooLarge {
                        level: l,
                        simplex: s.clone(),
                    });
                }
                if d > 0 {
                    for k in 0..s.len() {
                        if self.level(&facet(s, k)) > l {
                            return Err(ComplexError::NotSubcomplex(s.clone()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    // Every simplex of X^d \ X^{d-1} (d < n) must be a face of a d-simplex
    // of the same stratum.
    fn check_strata_pure(&self) -> Result<(), ComplexError> {
        for d in 0..self.dim {
            let mut covered: std::collections::HashSet<Simplex> = Default::default();
            for (i, s) in self.complex.simplices(d).iter().enumerate() {
                if self.levels[d][i] == d {
                    for_each_face(s, |f| {
                        covered.insert(f);
                    });
                }
            }
            for e in 0..d {
                for (i, s) in self.complex.simplices(e).iter().enumerate() {
                    if self.levels[e][i] == d && !covered.contains(s) {
                        return Err(ComplexError::ImpureStratum {
                            level: d,
                            simplex: s.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Formal dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Level of a simplex given by its vertices. Panics if absent.
    pub fn level(&self, s: &[u32]) -> usize {
        let idx = self.complex.index_of(s).expect("simplex in complex");
        self.levels[s.len() - 1][idx]
    }

    pub fn level_at(&self, d: usize, idx: usize) -> usize {
        self.levels[d][idx]
    }

    /// Whether `s` lies in `X^i`.
    pub fn in_skeleton(&self, i: usize, s: &[u32]) -> bool {
        self.complex
            .index_of(s)
            .is_some_and(|idx| self.levels[s.len() - 1][idx] <= i)
    }

    /// Whether `X^i` is empty.
    pub fn skeleton_is_empty(&self, i: usize) -> bool {
        self.levels.first().is_none_or(|v| v.iter().all(|&l| l > i))
    }

    /// Maximal simplices of `X^i`.
    pub fn skeleton_generators(&self, i: usize) -> Vec<Simplex> {
        let mut members: Vec<Simplex> = Vec::new();
        for d in 0..self.levels.len() {
            for (k, s) in self.complex.simplices(d).iter().enumerate() {
                if self.levels[d][k] <= i {
                    members.push(s.clone());
                }
            }
        }
        if members.is_empty() {
            return members;
        }
        SimplicialComplex::from_generators(members).maximal_simplices().to_vec()
    }

    /// Generators for every nonempty proper skeleton, keyed by level.
    pub fn skeleta(&self) -> BTreeMap<usize, Vec<Simplex>> {
        (0..self.dim)
            .filter(|&i| !self.skeleton_is_empty(i))
            .map(|i| (i, self.skeleton_generators(i)))
            .collect()
    }

    /// Whether the filtration is trivial (all proper skeleta empty).
    pub fn is_trivially_filtered(&self) -> bool {
        self.dim == 0 || self.skeleton_is_empty(self.dim - 1)
    }

    /// Largest dimension of a face of `s` lying in `X^t`; `None` when
    /// `s ∩ X^t` is empty.
    pub fn intersection_dim(&self, s: &[u32], t: usize) -> Option<usize> {
        let inside: Vec<u32> = s.iter().copied().filter(|&v| self.in_skeleton(t, &[v])).collect();
        if inside.is_empty() {
            return None;
        }
        if self.in_skeleton(t, &inside) {
            return Some(inside.len() - 1);
        }
        // Non-full skeleton: search faces of the vertex span, largest first.
        let n = inside.len();
        let mut best = 0;
        for mask in 1u32..(1u32 << n) {
            let size = mask.count_ones() as usize;
            if size - 1 <= best {
                continue;
            }
            let f: Vec<u32> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| inside[i]).collect();
            if self.in_skeleton(t, &f) {
                best = size - 1;
            }
        }
        Some(best)
    }

    /// Whether every skeleton is a full subcomplex.
    pub fn is_full(&self) -> bool {
        (0..self.levels.len()).all(|d| {
            self.complex.simplices(d).iter().enumerate().all(|(k, s)| {
                let l = self.levels[d][k];
                s.iter().map(|&v| self.level(&[v])).max() == Some(l)
            })
        })
    }

    /// Components of each singular stratum `X^d \ X^{d-1}` for `d < n`,
    /// ordered by dimension and then by their first simplex.
    pub fn stratum_components(&self) -> Vec<StratumComponent> {
        let mut out = Vec::new();
        for d in 0..self.dim {
            let members: Vec<usize> = (0..self.complex.count(d)).filter(|&k| self.levels[d][k] == d).collect();
            if members.is_empty() {
                continue;
            }
            if d == 0 {
                out.extend(members.into_iter().map(|k| StratumComponent {
                    dim: 0,
                    simplices: vec![k],
                }));
                continue;
            }
            let pos: std::collections::HashMap<usize, usize> =
                members.iter().enumerate().map(|(i, &k)| (k, i)).collect();
            let mut parent: Vec<usize> = (0..members.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                let mut y = x;
                while p[y] != r {
                    let next = p[y];
                    p[y] = r;
                    y = next;
                }
                r
            }
            // Join d-simplices sharing a (d-1)-face that is still in the stratum.
            let mut by_face: std::collections::HashMap<Simplex, usize> = Default::default();
            for &k in &members {
                let s = &self.complex.simplices(d)[k];
                for j in 0..s.len() {
                    let f = facet(s, j);
                    if self.level(&f) != d {
                        continue;
                    }
                    if let Some(&other) = by_face.get(&f) {
                        let (a, b) = (find(&mut parent, pos[&k]), find(&mut parent, pos[&other]));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    } else {
                        by_face.insert(f, k);
                    }
                }
            }
            let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, &k) in members.iter().enumerate() {
                let r = find(&mut parent, i);
                groups.entry(r).or_default().push(k);
            }
            let mut comps: Vec<StratumComponent> = groups
                .into_values()
                .map(|simplices| StratumComponent { dim: d, simplices })
                .collect();
            comps.sort_by_key(|c| c.simplices[0]);
            out.extend(comps);
        }
        out
    }
}
