use crate::exactalg::CoefficientSpec;
use crate::ihcore::{ordinary_homology, DegreeGroup};
use crate::simplicial::{
    barycentric_subdivision, build_complex, connected_sum, join, product, quotient, suspension, SimplicialComplex,
    StratifiedComplex,
};

use super::data::{CP2_FACETS, RP2_FACETS};
use super::CatalogError;

/// Boundary of the `(n+1)`-simplex, an `n`-sphere on `n + 2` vertices.
pub fn sphere(n: usize) -> SimplicialComplex {
    let facets: Vec<Vec<u32>> = (0..=n as u32 + 1)
        .map(|skip| (0..=n as u32 + 1).filter(|&v| v != skip).collect())
        .collect();
    build_complex(&facets).expect("simplex boundary")
}

/// Cycle on `k ≥ 3` vertices labelled from `offset`.
pub fn cycle(k: u32, offset: u32) -> SimplicialComplex {
    let edges: Vec<Vec<u32>> = (0..k).map(|i| vec![offset + i, offset + (i + 1) % k]).collect();
    build_complex(&edges).expect("cycle")
}

fn grid_surface(a: u32, b: u32, twisted: bool) -> Result<SimplicialComplex, CatalogError> {
    let v = |i: u32, j: u32| -> u32 {
        let (i, j) = if j == b {
            (if twisted { (a - i % a) % a } else { i % a }, 0)
        } else {
            (i % a, j)
        };
        j * a + i
    };
    let mut tris = Vec::new();
    for j in 0..b {
        for i in 0..a {
            tris.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    let c = build_complex(&tris)?;
    if c.count(2) != tris.len() {
        return Err(CatalogError::Validation(
            "grid triangulation has repeated triangles".into(),
        ));
    }
    Ok(c)
}

/// Torus on a 3×3 grid (9 vertices).
pub fn torus() -> SimplicialComplex {
    grid_surface(3, 3, false).expect("3x3 torus grid is simplicial")
}

/// Klein bottle on a twisted grid.
pub fn klein_bottle() -> SimplicialComplex {
    grid_surface(3, 4, true).expect("twisted 3x4 grid is simplicial")
}

pub fn projective_plane() -> SimplicialComplex {
    build_complex(&facets(RP2_FACETS)).expect("embedded data")
}

pub fn complex_projective_plane() -> SimplicialComplex {
    build_complex(&facets(CP2_FACETS)).expect("embedded data")
}

fn facets<const K: usize>(data: &[[u32; K]]) -> Vec<Vec<u32>> {
    data.iter().map(|f| f.to_vec()).collect()
}

pub fn genus_two_surface() -> SimplicialComplex {
    connected_sum(&torus(), &torus()).expect("tori are closed surfaces")
}

pub fn cp2_connected_sum() -> SimplicialComplex {
    let cp2 = complex_projective_plane();
    connected_sum(&cp2, &cp2).expect("closed 4-manifolds")
}

/// Two disjoint triangles.
pub fn two_circles() -> SimplicialComplex {
    let mut edges = Vec::new();
    for off in [0, 3] {
        for i in 0..3 {
            edges.push(vec![off + i, off + (i + 1) % 3]);
        }
    }
    build_complex(&edges).expect("two cycles")
}

/// Lens space `L(p, 1)` as the quotient of the subdivided join of two
/// `2p`-cycles by the rotation advancing each cycle two steps.
pub fn lens_space(p: u32) -> Result<SimplicialComplex, CatalogError> {
    if p < 2 {
        return Err(CatalogError::Validation(format!("lens space needs p ≥ 2, got {p}")));
    }
    let k = 2 * p;
    let s3 = join(&cycle(k, 0), &cycle(k, k))?;
    let rotate = |v: u32, steps: u32| {
        if v < k {
            (v + 2 * steps) % k
        } else {
            k + (v - k + 2 * steps) % k
        }
    };
    let sd = barycentric_subdivision(&StratifiedComplex::trivial(s3.clone()))?;
    let fv = s3.f_vector();
    let mut offsets = vec![0u32; fv.len()];
    for d in 1..fv.len() {
        offsets[d] = offsets[d - 1] + fv[d - 1] as u32;
    }
    let mut by_label: Vec<Vec<u32>> = Vec::new();
    for d in 0..fv.len() {
        by_label.extend(s3.simplices(d).iter().cloned());
    }
    let label = |s: &[u32]| offsets[s.len() - 1] + s3.index_of(s).expect("face of the join") as u32;
    let orbit = |v: u32| -> u32 {
        (0..p)
            .map(|g| {
                let mut img: Vec<u32> = by_label[v as usize].iter().map(|&u| rotate(u, g)).collect();
                img.sort_unstable();
                label(&img)
            })
            .min()
            .expect("nonempty group")
    };
    let lens = quotient(sd.complex(), orbit, p as usize)?;
    let h = ordinary_homology(&lens, &CoefficientSpec::Integers)?;
    let expected = [
        DegreeGroup::free(1),
        DegreeGroup {
            rank: 0,
            torsion: vec![p as u64],
        },
        DegreeGroup::default(),
        DegreeGroup::free(1),
    ];
    if h.degrees != expected {
        return Err(CatalogError::Validation(format!("L({p},1) has homology {h}")));
    }
    Ok(lens)
}

/// `L(p, 1) × S^1` with a 3-vertex circle.
pub fn lens_times_circle(p: u32) -> Result<StratifiedComplex, CatalogError> {
    let l = lens_space(p)?;
    Ok(product(&StratifiedComplex::trivial(l), &cycle(3, 0))?)
}

/// Suspension of `L(p, 1) × S^1`.
pub fn suspended_lens_times_circle(p: u32) -> Result<StratifiedComplex, CatalogError> {
    Ok(suspension(&lens_times_circle(p)?)?)
}

/// Vertex links of a closed combinatorial manifold, for validation.
pub fn vertex_links(c: &SimplicialComplex) -> Vec<SimplicialComplex> {
    c.vertices()
        .into_iter()
        .map(|v| {
            let gens: Vec<Vec<u32>> = c
                .maximal_simplices()
                .iter()
                .filter(|m| m.contains(&v))
                .map(|m| m.iter().copied().filter(|&u| u != v).collect())
                .collect();
            build_complex(&gens).expect("closed manifold vertex links are nonempty")
        })
        .collect()
}
