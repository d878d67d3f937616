//! Which pairs `(p, q)` occur as `(sigma(G), n(G))` for a connected graph `G`,
//! and the small-order census used to confirm it.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{broom, complete, cycle, cycle_plus, LabeledGraph};
use crate::graph::Graph;
use crate::solver::{max_visibility_set, SolverOptions};
use crate::visibility::VisibilityKind;

/// Largest order the census will enumerate.
pub const MAX_CENSUS_ORDER: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct RealizabilityAnswer {
    pub kind: VisibilityKind,
    pub p: usize,
    pub q: usize,
    pub realizable: bool,
    #[serde(skip)]
    pub witness: Option<LabeledGraph>,
}

/// Decides whether some connected graph of order `q` has `kind` value `p`,
/// and builds a witness when one exists.
pub fn is_realizable(kind: VisibilityKind, p: usize, q: usize) -> Result<RealizabilityAnswer> {
    if q < 1 {
        return Err(Error::input("order q must be at least 1"));
    }
    if p > q {
        return Err(Error::input(format!("p={p} exceeds the order q={q}")));
    }
    // Smallest order at which p = 0 and p = 1 become possible.
    let (zero_from, one_from) = match kind {
        VisibilityKind::Mutual | VisibilityKind::Outer => (None, None),
        VisibilityKind::Total => (Some(5), Some(6)),
        VisibilityKind::Dual => (Some(7), Some(8)),
    };
    let witness = match p {
        _ if p == q => Some(complete(q)?),
        0 if zero_from.is_some_and(|m| q >= m) => Some(cycle(q)?),
        1 if one_from.is_some_and(|m| q >= m) => Some(cycle_plus(q)?),
        0 | 1 => None,
        _ => Some(broom(p, q)?),
    };
    Ok(RealizabilityAnswer {
        kind,
        p,
        q,
        realizable: witness.is_some(),
        witness,
    })
}

/// Canonical key of `g` under the vertex order `perm`: upper-triangle bits in
/// column order, first pair most significant. Returns `None` as soon as the
/// prefix exceeds `best`.
fn key_under(adj: &[u64], perm: &[usize], best: u64, width: u32) -> Option<u64> {
    let mut key = 0u64;
    let mut bit = width;
    for j in 1..perm.len() {
        let row = adj[perm[j]];
        for &pi in &perm[..j] {
            bit -= 1;
            if row >> pi & 1 == 1 {
                key |= 1 << bit;
            }
            // Bits below `bit` can only add; compare the settled prefix.
            if key >> bit > best >> bit {
                return None;
            }
        }
    }
    Some(key)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Minimal key over all vertex permutations, with a permutation attaining it.
fn canonical(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let width = (n * n.saturating_sub(1) / 2) as u32;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let mut best_perm = perm.clone();
    loop {
        if let Some(k) = key_under(&adj, &perm, best, width) {
            if k < best {
                best = k;
                best_perm.clone_from(&perm);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (best, best_perm)
}

fn from_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::new(n).expect("census order is small");
    let mut bit = (n * n.saturating_sub(1) / 2) as u32;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key >> bit & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// Canonical key of `g`: the least upper-triangle bitstring over all
/// relabelings. Isomorphic graphs share a key.
pub fn canonical_key(g: &Graph) -> u64 {
    canonical(g).0
}

/// One representative per isomorphism class of connected graphs of order
/// `q`, each relabeled to its canonical form, sorted by key.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// order `q` is reached by attaching a new vertex to each nonempty subset of
/// a graph from order `q - 1`.
pub fn enumerate_connected_graphs(q: usize) -> Result<Vec<Graph>> {
    if q > MAX_CENSUS_ORDER {
        return Err(Error::Resource(format!(
            "census of order {q} exceeds the supported maximum {MAX_CENSUS_ORDER}"
        )));
    }
    if q == 0 {
        return Err(Error::input("census order must be at least 1"));
    }
    let mut keys = BTreeSet::from([0u64]);
    for order in 2..=q {
        let smaller: Vec<Graph> = keys.iter().map(|&k| from_key(order - 1, k)).collect();
        let found: Vec<Vec<u64>> = smaller
            .par_iter()
            .map(|h| {
                let mut out = Vec::new();
                for attach in 1u64..1 << (order - 1) {
                    let mut g = Graph::new(order).expect("small order");
                    for (u, v) in h.edges() {
                        g.add_edge(u, v).expect("in range");
                    }
                    for v in 0..order - 1 {
                        if attach >> v & 1 == 1 {
                            g.add_edge(v, order - 1).expect("in range");
                        }
                    }
                    out.push(canonical_key(&g));
                }
                out
            })
            .collect();
        keys = found.into_iter().flatten().collect();
    }
    Ok(keys.into_iter().map(|k| from_key(q, k)).collect())
}

/// Solves `kind` on every census graph of order `q`, in census order.
pub fn census_values(q: usize, kind: VisibilityKind) -> Result<Vec<(Graph, usize)>> {
    let graphs = enumerate_connected_graphs(q)?;
    let opts = SolverOptions::default();
    graphs
        .into_par_iter()
        .map(|g| {
            let v = max_visibility_set(&g, kind, &opts)?.value;
            Ok((g, v))
        })
        .collect()
}

/// Set of values of `kind` attained by connected graphs of order `q`.
pub fn exhaustive_spectrum(q: usize, kind: VisibilityKind) -> Result<BTreeSet<usize>> {
    Ok(census_values(q, kind)?.into_iter().map(|(_, v)| v).collect())
}

/// Census sizes per order, for reporting.
pub fn census_counts(max_q: usize) -> Result<BTreeMap<usize, usize>> {
    (1..=max_q)
        .map(|q| Ok((q, enumerate_connected_graphs(q)?.len())))
        .collect()
}
