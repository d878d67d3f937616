//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex, together with hop distances and the metric predicates
//! (isometric and convex subgraphs) built on them.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count; a [`VertexSet`] is a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// Distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// A subset of `0..n` packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Largest member plus one (0 for the empty set).
    pub fn span(self) -> usize {
        MAX_VERTICES - self.0.leading_zeros() as usize
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::input(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::input(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::input(format!(
                "vertex set {s:?} is not contained in 0..{}",
                self.n()
            )));
        }
        Ok(())
    }

    /// Vertices reachable from `s`.
    pub fn component_of(&self, s: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Connectivity of the subgraph induced by `b` (the empty set counts as connected).
    pub fn induces_connected(&self, b: VertexSet) -> bool {
        let Some(start) = b.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & b) - seen;
            seen |= frontier;
        }
        seen == b
    }

    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::disconnected("diameter"));
        }
        Ok(all_pairs_distances(self).diameter())
    }

    /// `G - uv`. Vertex labels are unchanged.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("no edge {u}-{v}")));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// `G - x`. Vertices above `x` shift down by one; see [`Relabeled::original`].
    pub fn remove_vertex(&self, x: usize) -> Result<Relabeled> {
        self.check_vertex(x)?;
        if self.n() == 1 {
            return Err(Error::input("cannot remove the only vertex"));
        }
        Ok(self.induced_subgraph(self.vertices().without(x)))
    }

    /// `G[b]` with vertices relabeled `0..|b|` in increasing original order.
    ///
    /// Panics if `b` is empty.
    pub fn induced_subgraph(&self, b: VertexSet) -> Relabeled {
        assert!(!b.is_empty(), "induced subgraph of an empty set");
        let original: Vec<usize> = b.iter().collect();
        let mut new_index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| (self.adj[v] & b).iter().map(|w| new_index[w]).collect())
            .collect();
        Relabeled {
            graph: Graph { adj, name: None },
            original,
        }
    }

    fn check_invariants(&self) -> bool {
        (0..self.n()).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v].is_subset(self.vertices())
                && self.adj[v].iter().all(|w| self.adj[w].contains(v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_assert!(self.check_invariants());
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A graph derived from another by deleting vertices, with the map back to
/// the source graph's labels.
#[derive(Clone, Debug)]
pub struct Relabeled {
    pub graph: Graph,
    /// `original[new] = old`.
    pub original: Vec<usize>,
}

impl Relabeled {
    /// Maps a set of original labels to the new labels (dropping deleted vertices).
    pub fn restrict(&self, s: VertexSet) -> VertexSet {
        self.original
            .iter()
            .enumerate()
            .filter(|(_, &old)| s.contains(old))
            .map(|(new, _)| new)
            .collect()
    }

    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.original[v]).collect()
    }
}

/// Hop distances from `s`; [`UNREACHABLE`] marks other components.
pub fn bfs_distances(g: &Graph, s: usize) -> Result<Vec<u32>> {
    g.check_vertex(s)?;
    Ok(bfs_layers(g, s)
        .iter()
        .enumerate()
        .fold(vec![UNREACHABLE; g.n()], |mut dist, (k, layer)| {
            for v in layer.iter() {
                dist[v] = k as u32;
            }
            dist
        }))
}

/// BFS from `s` as a list of spheres: `layers[k]` holds the vertices at distance `k`.
fn bfs_layers(g: &Graph, s: usize) -> Vec<VertexSet> {
    let mut seen = VertexSet::singleton(s);
    let mut layers = vec![seen];
    loop {
        let mut next = VertexSet::EMPTY;
        for v in *layers.last().unwrap() {
            next |= g.neighbors(v);
        }
        next = next - seen;
        if next.is_empty() {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

/// All-pairs hop distances, plus the distance spheres around each vertex and
/// the geodesic interval of each pair.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    spheres: Vec<Vec<VertexSet>>,
    // Closed intervals I(u,v) = { w : d(u,w) + d(w,v) = d(u,v) }, empty if unreachable.
    intervals: Vec<VertexSet>,
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let spheres: Vec<Vec<VertexSet>> = (0..n).map(|s| bfs_layers(g, s)).collect();
    let mut dist = vec![UNREACHABLE; n * n];
    for (s, layers) in spheres.iter().enumerate() {
        for (k, layer) in layers.iter().enumerate() {
            for v in layer.iter() {
                dist[s * n + v] = k as u32;
            }
        }
    }
    let mut intervals = vec![VertexSet::EMPTY; n * n];
    for u in 0..n {
        for v in 0..n {
            let d = dist[u * n + v];
            if d == UNREACHABLE {
                continue;
            }
            let d = d as usize;
            intervals[u * n + v] = (0..=d)
                .map(|k| spheres[u][k] & spheres[v][d - k])
                .fold(VertexSet::EMPTY, |acc, s| acc | s);
        }
    }
    DistanceMatrix {
        n,
        dist,
        spheres,
        intervals,
    }
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Vertices at distance exactly `k` from `u`.
    #[inline]
    pub fn sphere(&self, u: usize, k: u32) -> VertexSet {
        self.spheres[u]
            .get(k as usize)
            .copied()
            .unwrap_or(VertexSet::EMPTY)
    }

    /// All vertices on some shortest `u,v`-path, endpoints included.
    #[inline]
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        self.intervals[u * self.n + v]
    }

    /// Interval without its endpoints.
    #[inline]
    pub fn interior(&self, u: usize, v: usize) -> VertexSet {
        self.intervals[u * self.n + v].without(u).without(v)
    }

    /// Maximum finite distance.
    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = (0..self.n).map(|u| self.row(u)).collect();
        f.debug_struct("DistanceMatrix").field("d", &rows).finish()
    }
}

/// Outcome of comparing distances inside an induced subgraph with the host's.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Isometry {
    Isometric,
    /// Connected, but some distance grew.
    Stretched,
    Disconnected,
}

impl Isometry {
    pub fn is_isometric(self) -> bool {
        self == Isometry::Isometric
    }
}

pub fn isometry_check(g: &Graph, b: VertexSet) -> Result<Isometry> {
    g.check_set(b)?;
    if b.is_empty() {
        return Ok(Isometry::Isometric);
    }
    if !g.induces_connected(b) {
        return Ok(Isometry::Disconnected);
    }
    let host = all_pairs_distances(g);
    let sub = g.induced_subgraph(b);
    let inner = all_pairs_distances(&sub.graph);
    for (i, &u) in sub.original.iter().enumerate() {
        for (j, &v) in sub.original.iter().enumerate().skip(i + 1) {
            if inner.get(i, j) != host.get(u, v) {
                return Ok(Isometry::Stretched);
            }
        }
    }
    Ok(Isometry::Isometric)
}

/// Whether `G[b]` preserves every distance of `g`. A disconnected `G[b]` is not isometric.
pub fn is_isometric_subgraph(g: &Graph, b: VertexSet) -> Result<bool> {
    isometry_check(g, b).map(Isometry::is_isometric)
}

/// Whether `b` contains every shortest path of `g` between two of its vertices.
pub fn is_convex_subgraph(g: &Graph, b: VertexSet) -> Result<bool> {
    g.check_set(b)?;
    Ok(is_convex_with(&all_pairs_distances(g), b))
}

pub(crate) fn is_convex_with(d: &DistanceMatrix, b: VertexSet) -> bool {
    b.iter()
        .all(|u| b.iter().all(|v| v <= u || d.interval(u, v).is_subset(b)))
}

/// Smallest convex set containing `seed`.
pub fn convex_hull(d: &DistanceMatrix, seed: VertexSet) -> VertexSet {
    let mut hull = seed;
    loop {
        let mut grown = hull;
        for u in hull.iter() {
            for v in hull.iter().filter(|&v| v > u) {
                grown |= d.interval(u, v);
            }
        }
        if grown == hull {
            return hull;
        }
        hull = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn vertex_set_basics() {
        let s = set(&[0, 3, 63]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 63]);
        assert_eq!(s.span(), 64);
        assert!(s.contains(63) && !s.contains(64));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(s.without(3).with(5), set(&[0, 5, 63]));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(65).is_err());
        let mut g = Graph::new(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::Input(_))));
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn bfs_on_path_and_cycle() {
        assert_eq!(bfs_distances(&path(3), 0).unwrap(), vec![0, 1, 2]);
        assert_eq!(bfs_distances(&cycle(6), 0).unwrap(), vec![0, 1, 2, 3, 2, 1]);
        assert!(bfs_distances(&path(3), 3).is_err());
        let two = Graph::new(2).unwrap();
        assert_eq!(bfs_distances(&two, 0).unwrap(), vec![0, UNREACHABLE]);
    }

    #[test]
    fn all_pairs_small() {
        let d = all_pairs_distances(&complete(3));
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        assert_eq!(all_pairs_distances(&path(4)).get(0, 3), 3);
    }

    #[test]
    fn connectivity_and_diameter() {
        assert!(cycle(5).is_connected());
        assert_eq!(cycle(5).diameter().unwrap(), 2);
        let two = Graph::new(2).unwrap();
        assert!(!two.is_connected());
        assert!(matches!(two.diameter(), Err(Error::Domain(_))));
    }

    #[test]
    fn removal() {
        assert_eq!(cycle(4).remove_edge(3, 0).unwrap(), path(4));
        assert!(cycle(4).remove_edge(0, 2).is_err());
        let r = complete(3).remove_vertex(1).unwrap();
        assert_eq!(r.graph, complete(2));
        assert_eq!(r.original, vec![0, 2]);
        assert!(Graph::new(1).unwrap().remove_vertex(0).is_err());
        assert!(path(3).remove_vertex(7).is_err());
    }

    #[test]
    fn relabel_maps() {
        let r = path(5).remove_vertex(2).unwrap();
        assert_eq!(r.restrict(set(&[0, 2, 4])), set(&[0, 3]));
        assert_eq!(r.lift(set(&[2, 3])), set(&[3, 4]));
    }

    #[test]
    fn isometry() {
        let c6 = cycle(6);
        // C6 minus two adjacent vertices leaves an isometric P4.
        assert!(is_isometric_subgraph(&c6, set(&[2, 3, 4, 5])).unwrap());
        assert_eq!(
            isometry_check(&c6, set(&[1, 2, 4, 5])).unwrap(),
            Isometry::Disconnected
        );
        assert!(is_isometric_subgraph(&cycle(4), set(&[0, 1, 2])).unwrap());
        // P5 inside C6 stretches d(0,4) from 2 to 4.
        assert_eq!(
            isometry_check(&c6, set(&[0, 1, 2, 3, 4])).unwrap(),
            Isometry::Stretched
        );
    }

    #[test]
    fn convexity() {
        assert!(is_convex_subgraph(&cycle(6), set(&[0, 1, 2])).unwrap());
        assert!(!is_convex_subgraph(&cycle(4), set(&[0, 1, 2])).unwrap());
        let d = all_pairs_distances(&cycle(4));
        assert_eq!(convex_hull(&d, set(&[0, 2])), set(&[0, 1, 2, 3]));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn bfs_adjacent_differ_by_at_most_one(g in arb_graph(12), s in 0usize..12) {
            let s = s % g.n();
            let d = bfs_distances(&g, s).unwrap();
            prop_assert_eq!(d[s], 0);
            for (u, v) in g.edges() {
                if d[u] != UNREACHABLE {
                    prop_assert!(d[u].abs_diff(d[v]) <= 1);
                } else {
                    prop_assert_eq!(d[v], UNREACHABLE);
                }
            }
        }

        #[test]
        fn distance_matrix_is_a_metric(g in arb_graph(12)) {
            let d = all_pairs_distances(&g);
            let n = g.n();
            for u in 0..n {
                prop_assert_eq!(d.get(u, u), 0);
                for v in 0..n {
                    prop_assert_eq!(d.get(u, v), d.get(v, u));
                    prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                    for w in 0..n {
                        let (a, b) = (d.get(u, v), d.get(v, w));
                        if a != UNREACHABLE && b != UNREACHABLE {
                            prop_assert!(d.get(u, w) <= a + b);
                        }
                    }
                }
            }
        }

        #[test]
        fn removal_never_shortens(g in arb_graph(10), pick in any::<usize>()) {
            let d = all_pairs_distances(&g);
            let edges: Vec<_> = g.edges().collect();
            if !edges.is_empty() {
                let (a, b) = edges[pick % edges.len()];
                let h = all_pairs_distances(&g.remove_edge(a, b).unwrap());
                for u in 0..g.n() {
                    for v in 0..g.n() {
                        prop_assert!(h.get(u, v) >= d.get(u, v));
                    }
                }
            }
            if g.n() > 1 {
                let x = pick % g.n();
                let r = g.remove_vertex(x).unwrap();
                let h = all_pairs_distances(&r.graph);
                for i in 0..r.graph.n() {
                    for j in 0..r.graph.n() {
                        prop_assert!(h.get(i, j) >= d.get(r.original[i], r.original[j]));
                    }
                }
            }
        }

        #[test]
        fn convex_implies_isometric(g in arb_graph(12), bits in any::<u64>()) {
            let b = VertexSet::from_bits(bits) & g.vertices();
            if !b.is_empty() && g.induces_connected(b) && is_convex_subgraph(&g, b).unwrap() {
                prop_assert!(is_isometric_subgraph(&g, b).unwrap());
            }
        }
    }
}
