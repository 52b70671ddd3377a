use std::fmt;

use num::Integer;
use serde::{Deserialize, Serialize};

/// A finitely generated abelian group `Z^r ⊕ Z_{a_1} ⊕ ... ⊕ Z_{a_k}`.
///
/// Torsion is kept in primary form: prime powers, sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

fn primary_parts(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut q = 1;
            while n.is_multiple_of(d) {
                n /= d;
                q *= d;
            }
            out.push(q);
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from arbitrary cyclic orders; orders `0` and `1` are
    /// dropped.
    pub fn new(free_rank: usize, cyclic: impl IntoIterator<Item = u64>) -> Self {
        let mut torsion: Vec<u64> = cyclic.into_iter().filter(|&a| a > 1).flat_map(primary_parts).collect();
        torsion.sort_unstable();
        AbelianGroup { free_rank, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order, when finite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// `G ⊗ Z_a`.
    pub fn tensor_cyclic(&self, a: u64) -> AbelianGroup {
        let parts = std::iter::repeat_n(a, self.free_rank).chain(self.torsion.iter().map(|t| t.gcd(&a)));
        AbelianGroup::new(0, parts)
    }

    /// `Tor(G, Z_a)`.
    pub fn tor_cyclic(&self, a: u64) -> AbelianGroup {
        AbelianGroup::new(0, self.torsion.iter().map(|t| t.gcd(&a)))
    }

    /// `G ⊗ C` for a finitely generated `C`.
    pub fn tensor(&self, c: &AbelianGroup) -> AbelianGroup {
        let mut out = AbelianGroup::new(0, std::iter::empty());
        out.free_rank = self.free_rank * c.free_rank;
        out = out.direct_sum(&AbelianGroup::new(
            0,
            self.torsion.iter().flat_map(|&t| std::iter::repeat_n(t, c.free_rank)),
        ));
        for &a in &c.torsion {
            out = out.direct_sum(&self.tensor_cyclic(a));
        }
        out
    }

    /// `Tor(G, C)`.
    pub fn tor(&self, c: &AbelianGroup) -> AbelianGroup {
        c.torsion
            .iter()
            .fold(AbelianGroup::zero(), |acc, &a| acc.direct_sum(&self.tor_cyclic(a)))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
