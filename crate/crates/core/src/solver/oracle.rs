//! Exhaustive reference solver. It shares nothing with the branch and bound
//! beyond the `Graph` type: distances come from Floyd-Warshall and
//! visibility from a plain recursive walk along geodesics.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::visibility::VisibilityKind;

const INF: u32 = u32::MAX / 4;

/// Largest visibility set of `kind`, by trying every subset from the largest
/// cardinality down.
pub fn brute_force_invariant(g: &Graph, kind: VisibilityKind) -> Result<usize> {
    let n = g.n();
    if n > 30 {
        return Err(Error::Resource(format!(
            "exhaustive search over 2^{n} subsets"
        )));
    }
    let dist = floyd_warshall(g);
    if dist.iter().flatten().any(|&d| d >= INF) {
        return Err(Error::disconnected("the exhaustive solver"));
    }
    for size in (0..=n).rev() {
        if subsets_of_size(n, size).any(|x| is_feasible(g, &dist, x, kind)) {
            return Ok(size);
        }
    }
    unreachable!("the empty set is always feasible")
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            if u == v {
                *cell = 0;
            } else if g.has_edge(u, v) {
                *cell = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = d[i][k] + d[k][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    d
}

/// Does some shortest u,v-path avoid `x` in its interior?
fn sees(g: &Graph, dist: &[Vec<u32>], x: u64, u: usize, v: usize) -> bool {
    let remaining = dist[u][v];
    if remaining <= 1 {
        return true;
    }
    (0..g.n()).any(|w| {
        g.has_edge(u, w)
            && dist[w][v] == remaining - 1
            && x >> w & 1 == 0
            && sees(g, dist, x, w, v)
    })
}

fn is_feasible(g: &Graph, dist: &[Vec<u32>], x: u64, kind: VisibilityKind) -> bool {
    let n = g.n();
    let inside = |v: usize| x >> v & 1 == 1;
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let must_see = match kind {
                VisibilityKind::Mutual => inside(u) && inside(v),
                VisibilityKind::Outer => inside(u) || inside(v),
                VisibilityKind::Dual => inside(u) == inside(v),
                VisibilityKind::Total => true,
            };
            !must_see || sees(g, dist, x, u, v)
        })
    })
}

/// All `n`-bit masks with `k` bits set, in increasing order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit || (k == 0 && cur != 0) {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next larger integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    })
}
