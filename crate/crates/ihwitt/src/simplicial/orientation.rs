use std::collections::{HashMap, VecDeque};

use super::complex::{facet, Simplex, SimplicialComplex};

/// Outcome of propagating orientations across codimension-one faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    /// Sign per top simplex relative to increasing vertex order, if a
    /// coherent choice exists.
    pub orientation: Option<Vec<i8>>,
    /// Number of classes of top simplices connected through shared
    /// codimension-one faces that are not excluded.
    pub components: usize,
}

/// Breadth-first sign propagation over top simplices, starting each component
/// from its lowest-index simplex with sign `+1`.
///
/// Faces for which `excluded` holds are not crossed. Faces with a number of
/// cofaces other than two still connect components but carry no sign
/// constraint.
pub fn orient(c: &SimplicialComplex, excluded: impl Fn(&[u32]) -> bool) -> Orientation {
    let Some(n) = c.dim() else {
        return Orientation {
            orientation: Some(Vec::new()),
            components: 0,
        };
    };
    let tops = c.simplices(n);
    if n == 0 {
        return Orientation {
            orientation: Some(vec![1; tops.len()]),
            components: tops.len(),
        };
    }
    let mut by_face: HashMap<Simplex, Vec<(usize, usize)>> = HashMap::new();
    for (i, s) in tops.iter().enumerate() {
        for k in 0..s.len() {
            let f = facet(s, k);
            if !excluded(&f) {
                by_face.entry(f).or_default().push((i, k));
            }
        }
    }
    let mut adj: Vec<Vec<(usize, Option<i8>)>> = vec![Vec::new(); tops.len()];
    for cof in by_face.values() {
        if cof.len() == 2 {
            let ((a, ka), (b, kb)) = (cof[0], cof[1]);
            // s_b = -s_a (-1)^(ka + kb)
            let rel = if (ka + kb) % 2 == 0 { -1 } else { 1 };
            adj[a].push((b, Some(rel)));
            adj[b].push((a, Some(rel)));
        } else {
            for w in cof.windows(2) {
                adj[w[0].0].push((w[1].0, None));
                adj[w[1].0].push((w[0].0, None));
            }
        }
    }
    let mut sign = vec![0i8; tops.len()];
    let mut coherent = true;
    let mut components = 0;
    for start in 0..tops.len() {
        if sign[start] != 0 {
            continue;
        }
        components += 1;
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &(j, rel) in &adj[i] {
                match rel {
                    Some(r) => {
                        let want = sign[i] * r;
                        if sign[j] == 0 {
                            sign[j] = want;
                            queue.push_back(j);
                        } else if sign[j] != want {
                            coherent = false;
                        }
                    }
                    None => {
                        if sign[j] == 0 {
                            sign[j] = 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
    }
    Orientation {
        orientation: coherent.then_some(sign),
        components,
    }
}
