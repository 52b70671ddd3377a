use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use super::complex::{build_complex, is_subset, Simplex, SimplicialComplex};
use super::orientation::orient;
use super::stratified::StratifiedComplex;
use super::ComplexError;

fn next_label(x: &StratifiedComplex) -> u32 {
    x.complex().max_vertex().map_or(0, |v| v + 1)
}

/// Closed cone `v * X` with `(cX)^0 = {v}` and `(cX)^i = v * X^{i-1}`.
/// The apex gets the next unused label.
pub fn cone(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    let apex = next_label(x);
    join_points(x, &[apex])
}

/// Suspension with the two new vertices (next unused labels) forming `X^0`
/// and `(SX)^i = {N, S} * X^{i-1}`.
pub fn suspension(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    let n = next_label(x);
    join_points(x, &[n, n + 1])
}

fn join_points(x: &StratifiedComplex, points: &[u32]) -> Result<StratifiedComplex, ComplexError> {
    let mut gens: Vec<Simplex> = Vec::new();
    for &p in points {
        for m in x.complex().maximal_simplices() {
            let mut s = m.clone();
            s.push(p);
            gens.push(s);
        }
    }
    let complex = SimplicialComplex::from_generators(gens);
    StratifiedComplex::with_level_fn(complex, x.dim() + 1, |s| {
        let base: Vec<u32> = s.iter().copied().filter(|v| !points.contains(v)).collect();
        if base.is_empty() {
            0
        } else {
            x.level(&base) + 1
        }
    })
}

/// Whether every codimension-one face of a pure complex lies in exactly two
/// top simplices.
pub(crate) fn is_closed_pseudomanifold(c: &SimplicialComplex) -> bool {
    let Some(n) = c.dim() else { return false };
    if !c.is_pure() || n == 0 {
        return c.is_pure();
    }
    let mut count: HashMap<Simplex, usize> = HashMap::new();
    for s in c.simplices(n) {
        for k in 0..s.len() {
            *count.entry(super::complex::facet(s, k)).or_default() += 1;
        }
    }
    count.len() == c.count(n - 1) && count.values().all(|&v| v == 2)
}

/// Product `X × M` triangulated by staircase chains with respect to the
/// vertex orders, filtered by `(X × M)^{j + dim M} = X^j × M`.
///
/// The product vertex `(x, m)` is labelled `rank(x) * |V(M)| + rank(m)`.
pub fn product(x: &StratifiedComplex, m: &SimplicialComplex) -> Result<StratifiedComplex, ComplexError> {
    if !is_closed_pseudomanifold(m) {
        return Err(ComplexError::NotClosedManifold);
    }
    let mdim = m.dim().expect("nonempty");
    let xv = x.complex().vertices();
    let mv = m.vertices();
    let xr: HashMap<u32, u32> = xv.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let mr: HashMap<u32, u32> = mv.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let width = mv.len() as u32;
    let mut gens = Vec::new();
    for s in x.complex().maximal_simplices() {
        for t in m.maximal_simplices() {
            let (a, b) = (s.len() - 1, t.len() - 1);
            // Each staircase path picks which steps move in the first factor.
            for steps in (0..a + b).combinations(a) {
                let (mut i, mut j) = (0usize, 0usize);
                let mut chain = vec![xr[&s[0]] * width + mr[&t[0]]];
                for k in 0..a + b {
                    if steps.contains(&k) {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    chain.push(xr[&s[i]] * width + mr[&t[j]]);
                }
                chain.sort_unstable();
                gens.push(chain);
            }
        }
    }
    let complex = SimplicialComplex::from_generators(gens);
    StratifiedComplex::with_level_fn(complex, x.dim() + mdim, |s| {
        let mut proj: Vec<u32> = s.iter().map(|v| xv[(v / width) as usize]).collect();
        proj.sort_unstable();
        proj.dedup();
        x.level(&proj) + mdim
    })
}

/// Connected sum of two closed pseudomanifolds of the same dimension.
///
/// The lexicographically first top simplex is removed from each; the boundary
/// vertices of the second are matched to those of the first in ascending
/// order, with one transposition applied if that gluing is not coherently
/// orientable. The remaining vertices of the second summand are relabelled
/// after those of the first.
pub fn connected_sum(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    if !is_closed_pseudomanifold(a) || !is_closed_pseudomanifold(b) {
        return Err(ComplexError::NotClosedManifold);
    }
    let n = a.dim().expect("nonempty");
    if b.dim() != Some(n) {
        return Err(ComplexError::DimensionMismatch(n, b.dim().unwrap_or(0)));
    }
    let sa = a.simplices(n)[0].clone();
    let sb = b.simplices(n)[0].clone();
    let offset = a.max_vertex().expect("nonempty") + 1;
    let others: Vec<u32> = b.vertices().into_iter().filter(|v| !sb.contains(v)).collect();
    let build = |matching: &[u32]| -> SimplicialComplex {
        let mut map: HashMap<u32, u32> = sb.iter().copied().zip(matching.iter().copied()).collect();
        for (i, v) in others.iter().enumerate() {
            map.insert(*v, offset + i as u32);
        }
        let mut gens: Vec<Simplex> = a.simplices(n).iter().filter(|s| **s != sa).cloned().collect();
        for s in b.simplices(n).iter().filter(|s| **s != sb) {
            let mut t: Simplex = s.iter().map(|v| map[v]).collect();
            t.sort_unstable();
            gens.push(t);
        }
        SimplicialComplex::from_generators(gens)
    };
    let first = build(&sa);
    if orient(&first, |_| false).orientation.is_some() {
        return Ok(first);
    }
    let mut swapped = sa.clone();
    let len = swapped.len();
    swapped.swap(len - 2, len - 1);
    let second = build(&swapped);
    if orient(&second, |_| false).orientation.is_some() {
        Ok(second)
    } else {
        Ok(first)
    }
}

/// Simplicial link of `s` with the induced filtration
/// `Lk^j = Lk ∩ X^{j + dim s + 1}`, formal dimension `n - dim s - 1`.
pub fn simplicial_link(x: &StratifiedComplex, s: &[u32]) -> Result<StratifiedComplex, ComplexError> {
    let mut s = s.to_vec();
    s.sort_unstable();
    if !x.complex().contains(&s) {
        return Err(ComplexError::NotInComplex(s));
    }
    let gens: Vec<Simplex> = x
        .complex()
        .maximal_simplices()
        .iter()
        .filter(|m| m.len() > s.len() && is_subset(&s, m))
        .map(|m| m.iter().copied().filter(|v| !s.contains(v)).collect())
        .collect();
    if gens.is_empty() {
        return Err(ComplexError::EmptyLink(s));
    }
    let ds = s.len() - 1;
    let dim = x.dim() - ds - 1;
    let complex = SimplicialComplex::from_generators(gens);
    // Levels below the simplex dimension only occur for non-full filtrations;
    // clamping them keeps the result a filtration and stays monotone.
    StratifiedComplex::with_level_fn(complex, dim, |t| {
        let mut joined: Vec<u32> = t.iter().chain(s.iter()).copied().collect();
        joined.sort_unstable();
        x.level(&joined).saturating_sub(ds + 1).max(t.len() - 1)
    })
}

/// Barycentric subdivision. The vertex for a simplex `σ` is labelled by its
/// position in the list of all simplices ordered by dimension, then
/// lexicographically; a chain has the level of its largest simplex.
pub fn barycentric_subdivision(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    let c = x.complex();
    let fv = c.f_vector();
    let mut offsets = vec![0u32; fv.len()];
    for d in 1..fv.len() {
        offsets[d] = offsets[d - 1] + fv[d - 1] as u32;
    }
    let label = |s: &[u32]| offsets[s.len() - 1] + c.index_of(s).expect("face") as u32;
    let mut by_label: Vec<Simplex> = Vec::with_capacity(fv.iter().sum());
    for d in 0..fv.len() {
        by_label.extend(c.simplices(d).iter().cloned());
    }
    let mut gens = Vec::new();
    for m in c.maximal_simplices() {
        for perm in m.iter().copied().permutations(m.len()) {
            let mut chain: Vec<u32> = (1..=perm.len())
                .map(|k| {
                    let mut f = perm[..k].to_vec();
                    f.sort_unstable();
                    label(&f)
                })
                .collect();
            chain.sort_unstable();
            gens.push(chain);
        }
    }
    let complex = SimplicialComplex::from_generators(gens);
    StratifiedComplex::with_level_fn(complex, x.dim(), |chain| {
        let top = *chain.iter().max().expect("nonempty chain");
        x.level(&by_label[top as usize])
    })
}

/// Join of two complexes on disjoint vertex sets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    let va: HashSet<u32> = a.vertices().into_iter().collect();
    if b.vertices().iter().any(|v| va.contains(v)) {
        return Err(ComplexError::OverlappingVertices);
    }
    let mut gens = Vec::new();
    for s in a.maximal_simplices() {
        for t in b.maximal_simplices() {
            let mut u: Simplex = s.iter().chain(t.iter()).copied().collect();
            u.sort_unstable();
            gens.push(u);
        }
    }
    Ok(SimplicialComplex::from_generators(gens))
}

/// Quotient by a vertex map describing a free simplicial group action, where
/// `orbit` sends each vertex to its orbit representative.
///
/// Fails unless the quotient is again a simplicial complex with the expected
/// number of top simplices (`group_order` to one).
pub fn quotient(
    c: &SimplicialComplex,
    orbit: impl Fn(u32) -> u32,
    group_order: usize,
) -> Result<SimplicialComplex, ComplexError> {
    let n = c.dim().ok_or(ComplexError::EmptyComplex)?;
    let reps: Vec<u32> = c.vertices().into_iter().map(&orbit).sorted().dedup().collect();
    let relabel: HashMap<u32, u32> = reps.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
    let mut images: HashSet<Simplex> = HashSet::new();
    for s in c.simplices(n) {
        let mut t: Simplex = s.iter().map(|&v| relabel[&orbit(v)]).collect();
        t.sort_unstable();
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::QuotientNotSimplicial);
        }
        images.insert(t);
    }
    if images.len() * group_order != c.count(n) {
        return Err(ComplexError::QuotientNotSimplicial);
    }
    let gens: Vec<Vec<u32>> = images.into_iter().sorted().collect();
    let q = build_complex(&gens)?;
    let total: usize = c.f_vector().iter().sum();
    let qtotal: usize = q.f_vector().iter().sum();
    if qtotal * group_order != total {
        return Err(ComplexError::QuotientNotSimplicial);
    }
    Ok(q)
}
