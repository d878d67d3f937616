//! X-visibility of vertex pairs and the four kinds of visibility sets.
//!
//! Two vertices `u`, `v` are *X-visible* when some shortest `u,v`-path has no
//! internal vertex in `X`. All checks restrict attention to the geodesic
//! interval of the pair and sweep it layer by layer from `u`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet, UNREACHABLE};

/// Which pairs a visibility set has to keep visible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VisibilityKind {
    /// Pairs inside `X`.
    Mutual,
    /// Pairs with at least one endpoint in `X`.
    Outer,
    /// Pairs inside `X` and pairs inside its complement.
    Dual,
    /// All pairs.
    Total,
}

impl VisibilityKind {
    pub const ALL: [VisibilityKind; 4] = [
        VisibilityKind::Mutual,
        VisibilityKind::Outer,
        VisibilityKind::Dual,
        VisibilityKind::Total,
    ];

    /// Short name used on the command line and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            VisibilityKind::Mutual => "mu",
            VisibilityKind::Outer => "muo",
            VisibilityKind::Dual => "mud",
            VisibilityKind::Total => "mut",
        }
    }

    /// Subsets of feasible sets are feasible for every kind except dual.
    pub fn is_hereditary(self) -> bool {
        self != VisibilityKind::Dual
    }
}

impl fmt::Display for VisibilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for VisibilityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mu" | "mutual" => Ok(VisibilityKind::Mutual),
            "muo" | "outer" => Ok(VisibilityKind::Outer),
            "mud" | "dual" => Ok(VisibilityKind::Dual),
            "mut" | "total" => Ok(VisibilityKind::Total),
            _ => Err(Error::input(format!("unknown visibility kind `{s}`"))),
        }
    }
}

/// How [`VisibilityKind::Total`] is checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TotalCheck {
    /// Only pairs at distance two; equivalent to checking all pairs.
    #[default]
    DistanceTwo,
    AllPairs,
}

/// Whether `u` and `v` are `x`-visible, with `d` the distances of `g`.
pub fn pair_visible(
    g: &Graph,
    d: &DistanceMatrix,
    x: VertexSet,
    u: usize,
    v: usize,
) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if d.n() != g.n() {
        return Err(Error::input("distance matrix does not belong to this graph"));
    }
    if u == v {
        return Err(Error::input(format!("visibility of {u} with itself")));
    }
    Ok(visible(g, d, x, u, v))
}

/// Unchecked core of [`pair_visible`].
#[inline]
pub(crate) fn visible(g: &Graph, d: &DistanceMatrix, x: VertexSet, u: usize, v: usize) -> bool {
    let dist = d.get(u, v);
    if dist == UNREACHABLE {
        return false;
    }
    if dist <= 1 || (d.interior(u, v) & x).is_empty() {
        return true;
    }
    // Walk the interval one layer at a time; every vertex of the last inner
    // layer is adjacent to v, so surviving to it is enough.
    let mut frontier = VertexSet::singleton(u);
    for k in 1..dist {
        let layer = d.sphere(u, k) & d.sphere(v, dist - k);
        let mut next = VertexSet::EMPTY;
        for w in frontier {
            next |= g.neighbors(w);
        }
        frontier = (next & layer) - x;
        if frontier.is_empty() {
            return false;
        }
    }
    true
}

/// Whether `x` is a visibility set of the given kind in the connected graph `g`.
pub fn is_visibility_set(g: &Graph, x: VertexSet, kind: VisibilityKind) -> Result<bool> {
    is_visibility_set_with(g, &all_pairs_distances(g), x, kind, TotalCheck::default())
}

pub fn is_visibility_set_with(
    g: &Graph,
    d: &DistanceMatrix,
    x: VertexSet,
    kind: VisibilityKind,
    total: TotalCheck,
) -> Result<bool> {
    g.check_set(x)?;
    if !d.is_connected() {
        return Err(Error::disconnected("visibility checking"));
    }
    Ok(feasible(g, d, x, kind, total))
}

pub(crate) fn feasible(
    g: &Graph,
    d: &DistanceMatrix,
    x: VertexSet,
    kind: VisibilityKind,
    total: TotalCheck,
) -> bool {
    let all = g.vertices();
    let pairs_within = |s: VertexSet| {
        s.iter()
            .all(|u| s.iter().filter(|&v| v > u).all(|v| visible(g, d, x, u, v)))
    };
    match kind {
        VisibilityKind::Mutual => pairs_within(x),
        VisibilityKind::Outer => x
            .iter()
            .all(|u| all.without(u).iter().all(|v| visible(g, d, x, u, v))),
        VisibilityKind::Dual => pairs_within(x) && pairs_within(all - x),
        VisibilityKind::Total => match total {
            TotalCheck::AllPairs => pairs_within(all),
            TotalCheck::DistanceTwo => all.iter().all(|u| {
                d.sphere(u, 2)
                    .iter()
                    .filter(|&v| v > u)
                    .all(|v| visible(g, d, x, u, v))
            }),
        },
    }
}

/// The members of `z` at least as close to `x` as to `y`.
pub fn half_set(d: &DistanceMatrix, z: VertexSet, x: usize, y: usize) -> Result<VertexSet> {
    if x >= d.n() || y >= d.n() || !z.is_subset(VertexSet::full(d.n())) {
        return Err(Error::input("vertex out of range"));
    }
    if x == y {
        return Err(Error::input("half set needs two distinct vertices"));
    }
    Ok(z.iter().filter(|&u| d.get(u, x) <= d.get(u, y)).collect())
}

/// Blocking vertices of a mutual-visibility set with respect to a viewpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingSet {
    pub blockers: VertexSet,
    /// For each member `u` of the set (ascending), the fixed shortest path from
    /// the viewpoint to `u`, both ends included.
    pub paths: Vec<(usize, Vec<usize>)>,
}

/// For every `u` in `z`, fixes a shortest `w,u`-path carrying the fewest
/// internal members of `z` (ties go to the lexicographically smallest vertex
/// sequence) and collects the members of `z` that sit inside those paths.
pub fn blocking_set(g: &Graph, d: &DistanceMatrix, z: VertexSet, w: usize) -> Result<BlockingSet> {
    g.check_vertex(w)?;
    if !is_visibility_set_with(g, d, z, VisibilityKind::Mutual, TotalCheck::default())? {
        return Err(Error::Precondition(
            "blocking sets are defined for mutual-visibility sets only".into(),
        ));
    }
    let mut blockers = VertexSet::EMPTY;
    let mut paths = Vec::with_capacity(z.len());
    for u in z {
        let path = least_blocked_path(g, d, z, w, u);
        for &p in path.iter().skip(1).take(path.len().saturating_sub(2)) {
            if z.contains(p) {
                blockers.insert(p);
            }
        }
        paths.push((u, path));
    }
    Ok(BlockingSet { blockers, paths })
}

fn least_blocked_path(g: &Graph, d: &DistanceMatrix, z: VertexSet, w: usize, u: usize) -> Vec<usize> {
    if w == u {
        return vec![w];
    }
    let interval = d.interval(w, u);
    // cost[a] = fewest members of z strictly between a and u on a geodesic.
    let mut cost = vec![usize::MAX; g.n()];
    cost[u] = 0;
    let total = d.get(w, u);
    for t in 1..=total {
        for a in d.sphere(u, t) & interval {
            cost[a] = (g.neighbors(a) & d.sphere(u, t - 1) & interval)
                .iter()
                .map(|b| cost[b] + usize::from(b != u && z.contains(b)))
                .min()
                .expect("interval vertices have a successor");
        }
    }
    let mut path = vec![w];
    let mut at = w;
    for t in (0..total).rev() {
        let here = cost[at];
        at = (g.neighbors(at) & d.sphere(u, t) & interval)
            .iter()
            .find(|&b| cost[b] + usize::from(b != u && z.contains(b)) == here)
            .expect("an optimal successor exists");
        path.push(at);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &edges)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn pair_visibility_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let d = all_pairs_distances(&p3);
        assert!(!pair_visible(&p3, &d, set(&[1]), 0, 2).unwrap());
        let c4 = cycle(4);
        let d = all_pairs_distances(&c4);
        assert!(pair_visible(&c4, &d, set(&[1]), 0, 2).unwrap());
        assert!(matches!(
            pair_visible(&c4, &d, set(&[1]), 2, 2),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn parse_kind() {
        for k in VisibilityKind::ALL {
            assert_eq!(k.short_name().parse::<VisibilityKind>().unwrap(), k);
        }
        assert!("gp".parse::<VisibilityKind>().is_err());
    }

    #[test]
    fn dual_on_five_cycle() {
        let c5 = cycle(5);
        assert!(is_visibility_set(&c5, set(&[0, 1]), VisibilityKind::Dual).unwrap());
        for v in 0..5 {
            assert!(!is_visibility_set(&c5, set(&[v]), VisibilityKind::Dual).unwrap());
        }
    }

    #[test]
    fn empty_set_is_total_and_dual() {
        let c7 = cycle(7);
        assert!(is_visibility_set(&c7, VertexSet::EMPTY, VisibilityKind::Total).unwrap());
        assert!(is_visibility_set(&c7, VertexSet::EMPTY, VisibilityKind::Dual).unwrap());
        // X = V leaves nothing outside, but pairs inside X still need a
        // geodesic free of X, so only complete graphs qualify.
        assert!(!is_visibility_set(&c7, c7.vertices(), VisibilityKind::Dual).unwrap());
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(is_visibility_set(&k4, k4.vertices(), VisibilityKind::Dual).unwrap());
    }

    #[test]
    fn disconnected_is_a_domain_error() {
        let two = Graph::new(2).unwrap();
        assert!(matches!(
            is_visibility_set(&two, VertexSet::EMPTY, VisibilityKind::Mutual),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn half_sets() {
        let d = all_pairs_distances(&cycle(4));
        assert_eq!(half_set(&d, VertexSet::full(4), 0, 1).unwrap(), set(&[0, 3]));
        assert_eq!(half_set(&d, VertexSet::EMPTY, 0, 1).unwrap(), VertexSet::EMPTY);
        assert!(half_set(&d, VertexSet::EMPTY, 2, 2).is_err());
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = all_pairs_distances(&p4);
        assert_eq!(half_set(&d, VertexSet::full(4), 1, 2).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn blocking_examples() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let d = all_pairs_distances(&star);
        let b = blocking_set(&star, &d, set(&[1, 2, 3]), 1).unwrap();
        assert_eq!(b.blockers, VertexSet::EMPTY);

        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = all_pairs_distances(&p4);
        let b = blocking_set(&p4, &d, set(&[1, 3]), 0).unwrap();
        assert_eq!(b.blockers, set(&[1]));
        assert_eq!(b.paths[1], (3, vec![0, 1, 2, 3]));

        let b = blocking_set(&p4, &d, set(&[2]), 0).unwrap();
        assert!(b.blockers.is_empty());

        // {0,1,2} is not a mutual-visibility set of P4.
        assert!(matches!(
            blocking_set(&p4, &d, set(&[0, 1, 2]), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn blocking_paths_prefer_unblocked_and_smaller_labels() {
        // C6 with a chord-free detour: from 0 to 3 there are two geodesics,
        // 0-1-2-3 and 0-5-4-3. With 1 in z the second one is chosen.
        let c6 = cycle(6);
        let d = all_pairs_distances(&c6);
        let b = blocking_set(&c6, &d, set(&[1, 3]), 0).unwrap();
        assert_eq!(b.paths[1], (3, vec![0, 5, 4, 3]));
        assert!(b.blockers.is_empty());
        let b = blocking_set(&c6, &d, set(&[3]), 0).unwrap();
        assert_eq!(b.paths[0], (3, vec![0, 1, 2, 3]));
    }

    fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<usize>(), n - 1),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
                .prop_map(move |(parents, extra)| {
                    let mut g = Graph::new(n).unwrap();
                    for v in 1..n {
                        g.add_edge(parents[v - 1] % v, v).unwrap();
                    }
                    let mut k = 0;
                    for v in 1..n {
                        for u in 0..v {
                            if extra[k] && k % 3 == 0 {
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
        fn visibility_symmetric_and_antimonotone(
            g in arb_connected(10), x in any::<u64>(), extra in any::<u64>()
        ) {
            let d = all_pairs_distances(&g);
            let x = VertexSet::from_bits(x) & g.vertices();
            let bigger = x | (VertexSet::from_bits(extra) & g.vertices());
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    let a = visible(&g, &d, x, u, v);
                    prop_assert_eq!(a, visible(&g, &d, x, v, u));
                    if !a {
                        prop_assert!(!visible(&g, &d, bigger, u, v));
                    }
                }
            }
        }

        #[test]
        fn total_shortcut_matches_all_pairs(g in arb_connected(12), x in any::<u64>()) {
            let d = all_pairs_distances(&g);
            let x = VertexSet::from_bits(x) & g.vertices();
            prop_assert_eq!(
                feasible(&g, &d, x, VisibilityKind::Total, TotalCheck::DistanceTwo),
                feasible(&g, &d, x, VisibilityKind::Total, TotalCheck::AllPairs)
            );
        }

        #[test]
        fn half_sets_cover_and_survive_edge_removal(
            g in arb_connected(12), z in any::<u64>(), pick in any::<usize>()
        ) {
            let d = all_pairs_distances(&g);
            let z = VertexSet::from_bits(z) & g.vertices();
            let edges: Vec<_> = g.edges().collect();
            let (x, y) = edges[pick % edges.len()];
            let a = half_set(&d, z, x, y).unwrap();
            let b = half_set(&d, z, y, x).unwrap();
            prop_assert_eq!(a | b, z);
            prop_assert!(2 * a.len().max(b.len()) >= z.len());
            let de = all_pairs_distances(&g.remove_edge(x, y).unwrap());
            prop_assert_eq!(half_set(&de, z, x, y).unwrap(), a);
        }
    }
}
