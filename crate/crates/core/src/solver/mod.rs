//! Exact visibility numbers by include/exclude branch and bound.
//!
//! A search node fixes two disjoint sets: `inc` (will be in X) and `exc`
//! (will stay out of X). Visibility of a fixed pair is anti-monotone in X:
//! once a pair is invisible with respect to `inc`, it stays invisible for
//! every X containing `inc`. So as soon as a pair that every completion must
//! keep visible (both ends in `inc` for mutual, one end in `inc` for outer,
//! same side for dual, any pair for total) fails against `inc`, the whole
//! subtree is dead. This argument never uses subset closure, which dual sets
//! lack, so the same search is exact for all four kinds.
//!
//! On top of that, every node propagates: an undecided vertex that cannot be
//! included (resp. excluded) without breaking such a pair is forced to the
//! other side, and a vertex that can go neither way kills the node.

mod oracle;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use oracle::brute_force_invariant;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet};
use crate::visibility::{feasible, visible, TotalCheck, VisibilityKind};

#[derive(Clone, Debug, Default)]
pub struct SolverOptions {
    /// A value known to be attainable. The search then only looks for sets of
    /// at least this size, and fails if there are none.
    pub initial_lower_bound: Option<usize>,
    /// Give up after this many search nodes.
    pub node_limit: Option<u64>,
    /// Pair set used for the total kind.
    pub total_check: TotalCheck,
    /// Split the top of the search tree into rayon tasks.
    pub parallel: bool,
}

impl SolverOptions {
    pub fn parallel() -> Self {
        SolverOptions {
            parallel: true,
            ..Default::default()
        }
    }
}

/// Value of one visibility number, with a set attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    pub kind: VisibilityKind,
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Computes the largest visibility set of `kind` in the connected graph `g`.
pub fn max_visibility_set(
    g: &Graph,
    kind: VisibilityKind,
    opts: &SolverOptions,
) -> Result<InvariantResult> {
    let d = all_pairs_distances(g);
    max_visibility_set_with(g, &d, kind, opts)
}

/// As [`max_visibility_set`], reusing precomputed distances.
pub fn max_visibility_set_with(
    g: &Graph,
    d: &DistanceMatrix,
    kind: VisibilityKind,
    opts: &SolverOptions,
) -> Result<InvariantResult> {
    let start = Instant::now();
    if !d.is_connected() || d.n() != g.n() {
        return Err(Error::disconnected("the visibility solver"));
    }
    if opts.node_limit == Some(0) {
        return Err(Error::input("node limit must be positive"));
    }
    let n = g.n();
    if kind == VisibilityKind::Dual && n <= 2 {
        return Ok(InvariantResult {
            kind,
            value: n,
            witness: g.vertices(),
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }

    let problem = Problem::new(g, d, kind, opts.total_check);
    let seed = problem.greedy();
    let bar = seed
        .len()
        .max(opts.initial_lower_bound.unwrap_or(0).saturating_sub(1));

    let (found, nodes) = if opts.parallel {
        problem.run_parallel(bar, opts.node_limit)
    } else {
        problem.run_serial(bar, opts.node_limit)
    };

    let witness = match found {
        Ok(Some(set)) => set,
        Ok(None) => seed,
        Err(best) => {
            let best = best.filter(|s| s.len() >= seed.len()).unwrap_or(seed);
            return Err(Error::NodeLimit {
                limit: opts.node_limit.unwrap_or_default(),
                best: Box::new(InvariantResult {
                    kind,
                    value: best.len(),
                    witness: best,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                }),
            });
        }
    };
    if opts.initial_lower_bound.is_some_and(|l| witness.len() < l) {
        return Err(Error::Precondition(format!(
            "initial lower bound {} exceeds {}({})",
            opts.initial_lower_bound.unwrap_or_default(),
            kind,
            g.name().unwrap_or("G")
        )));
    }
    Ok(InvariantResult {
        kind,
        value: witness.len(),
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// All four visibility numbers of one graph.
#[derive(Clone, Debug, Serialize)]
pub struct AllFour {
    pub mutual: InvariantResult,
    pub outer: InvariantResult,
    pub dual: InvariantResult,
    pub total: InvariantResult,
}

impl AllFour {
    pub fn get(&self, kind: VisibilityKind) -> &InvariantResult {
        match kind {
            VisibilityKind::Mutual => &self.mutual,
            VisibilityKind::Outer => &self.outer,
            VisibilityKind::Dual => &self.dual,
            VisibilityKind::Total => &self.total,
        }
    }

    /// `(mu, muo, mud, mut)`.
    pub fn values(&self) -> [usize; 4] {
        [
            self.mutual.value,
            self.outer.value,
            self.dual.value,
            self.total.value,
        ]
    }
}

/// Solves all four kinds and checks `mut <= muo <= mu` and `mut <= mud <= mu`.
pub fn all_four(g: &Graph, opts: &SolverOptions) -> Result<AllFour> {
    let d = all_pairs_distances(g);
    let solve = |kind| max_visibility_set_with(g, &d, kind, opts);
    let res = AllFour {
        mutual: solve(VisibilityKind::Mutual)?,
        outer: solve(VisibilityKind::Outer)?,
        dual: solve(VisibilityKind::Dual)?,
        total: solve(VisibilityKind::Total)?,
    };
    let [mu, muo, mud, total] = res.values();
    if !(total <= muo && muo <= mu && total <= mud && mud <= mu) {
        return Err(Error::Internal(format!(
            "value chain violated: mu={mu} muo={muo} mud={mud} mut={total}"
        )));
    }
    Ok(res)
}

/// Pair tables shared by every node of one search.
struct Problem<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    kind: VisibilityKind,
    total: TotalCheck,
    all: VertexSet,
    /// Branching order: descending degree, ties by label.
    order: Vec<usize>,
    /// `through[b]`: pairs `(p, q)`, `p < q`, with `b` inside their interval.
    /// For the distance-two total check only pairs at distance two are kept.
    through: Vec<Vec<(u8, u8)>>,
}

/// Outcome of one search run: the best set found, or the best set at the
/// moment the node limit was hit.
type Found = std::result::Result<Option<VertexSet>, Option<VertexSet>>;

impl<'a> Problem<'a> {
    fn new(g: &'a Graph, d: &'a DistanceMatrix, kind: VisibilityKind, total: TotalCheck) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let distance_two_only = kind == VisibilityKind::Total && total == TotalCheck::DistanceTwo;
        let mut through = vec![Vec::new(); n];
        for p in 0..n {
            for q in p + 1..n {
                if distance_two_only && d.get(p, q) != 2 {
                    continue;
                }
                for b in d.interior(p, q) {
                    through[b].push((p as u8, q as u8));
                }
            }
        }
        Problem {
            g,
            d,
            kind,
            total,
            all: g.vertices(),
            order,
            through,
        }
    }

    #[inline]
    fn vis(&self, x: VertexSet, u: usize, v: usize) -> bool {
        visible(self.g, self.d, x, u, v)
    }

    /// Can `b` join `inc` without invalidating a pair that must stay visible?
    fn can_include(&self, inc: VertexSet, exc: VertexSet, b: usize) -> bool {
        let x = inc.with(b);
        let through = self.through[b].iter().map(|&(p, q)| (p as usize, q as usize));
        match self.kind {
            VisibilityKind::Mutual => {
                inc.iter().all(|i| self.vis(x, b, i))
                    && through
                        .filter(|&(p, q)| inc.contains(p) && inc.contains(q))
                        .all(|(p, q)| self.vis(x, p, q))
            }
            VisibilityKind::Outer => {
                self.all.without(b).iter().all(|v| self.vis(x, b, v))
                    && through
                        .filter(|&(p, q)| inc.contains(p) || inc.contains(q))
                        .all(|(p, q)| self.vis(x, p, q))
            }
            VisibilityKind::Dual => {
                inc.iter().all(|i| self.vis(x, b, i))
                    && through
                        .filter(|&(p, q)| {
                            (inc.contains(p) && inc.contains(q)) || (exc.contains(p) && exc.contains(q))
                        })
                        .all(|(p, q)| self.vis(x, p, q))
            }
            VisibilityKind::Total => through.into_iter().all(|(p, q)| self.vis(x, p, q)),
        }
    }

    /// Only dual sets constrain excluded vertices.
    fn can_exclude(&self, inc: VertexSet, exc: VertexSet, b: usize) -> bool {
        match self.kind {
            VisibilityKind::Dual => exc.iter().all(|o| self.vis(inc, b, o)),
            _ => true,
        }
    }

    /// Forces undecided vertices until nothing changes. `None` if some vertex
    /// can go neither way.
    fn propagate(&self, mut inc: VertexSet, mut exc: VertexSet) -> Option<(VertexSet, VertexSet)> {
        loop {
            let mut changed = false;
            for b in self.all - inc - exc {
                match (self.can_include(inc, exc, b), self.can_exclude(inc, exc, b)) {
                    (true, true) => {}
                    (true, false) => {
                        inc.insert(b);
                        changed = true;
                    }
                    (false, true) => {
                        exc.insert(b);
                        changed = true;
                    }
                    (false, false) => return None,
                }
            }
            if !changed {
                return Some((inc, exc));
            }
        }
    }

    fn is_feasible(&self, x: VertexSet) -> bool {
        feasible(self.g, self.d, x, self.kind, self.total)
    }

    /// Adds vertices in branching order while the set stays feasible.
    fn greedy(&self) -> VertexSet {
        self.order.iter().fold(VertexSet::EMPTY, |x, &v| {
            if self.is_feasible(x.with(v)) {
                x.with(v)
            } else {
                x
            }
        })
    }

    fn next_branch_vertex(&self, undecided: VertexSet) -> usize {
        *self
            .order
            .iter()
            .find(|&&v| undecided.contains(v))
            .expect("undecided set is non-empty")
    }

    fn run_serial(&self, bar: usize, node_limit: Option<u64>) -> (Found, u64) {
        let mut search = Search::new(self, bar, node_limit, None);
        search.explore(VertexSet::EMPTY, VertexSet::EMPTY);
        search.finish()
    }

    fn run_parallel(&self, bar: usize, node_limit: Option<u64>) -> (Found, u64) {
        let target = 8 * rayon::current_num_threads().max(1);
        let mut tasks = vec![(VertexSet::EMPTY, VertexSet::EMPTY)];
        let mut frontier_nodes = 0;
        // Expand breadth-first, keeping preorder, until there are enough tasks.
        while tasks.len() < target {
            let mut next = Vec::with_capacity(tasks.len() * 2);
            let mut grew = false;
            for (inc, exc) in tasks {
                frontier_nodes += 1;
                let Some((inc, exc)) = self.propagate(inc, exc) else {
                    continue;
                };
                let undecided = self.all - inc - exc;
                if inc.len() + undecided.len() <= bar {
                    continue;
                }
                if undecided.is_empty() {
                    next.push((inc, exc));
                    continue;
                }
                let b = self.next_branch_vertex(undecided);
                next.push((inc.with(b), exc));
                next.push((inc, exc.with(b)));
                grew = true;
            }
            tasks = next;
            if !grew {
                break;
            }
        }

        let shared = AtomicUsize::new(bar);
        let outcomes: Vec<(Found, u64)> = tasks
            .par_iter()
            .map(|&(inc, exc)| {
                let mut search = Search::new(self, bar, node_limit, Some(&shared));
                search.explore(inc, exc);
                search.finish()
            })
            .collect();

        let mut nodes = frontier_nodes;
        let mut best: Option<VertexSet> = None;
        let mut hit_limit = false;
        for (found, n) in outcomes {
            nodes += n;
            let set = match found {
                Ok(s) => s,
                Err(s) => {
                    hit_limit = true;
                    s
                }
            };
            // Earliest task wins ties, which reproduces the serial witness.
            if let Some(s) = set {
                if best.is_none_or(|b| s.len() > b.len()) {
                    best = Some(s);
                }
            }
        }
        if hit_limit {
            (Err(best), nodes)
        } else {
            (Ok(best), nodes)
        }
    }
}

struct Search<'p, 'a> {
    problem: &'p Problem<'a>,
    bar: usize,
    best: Option<VertexSet>,
    nodes: u64,
    node_limit: Option<u64>,
    exhausted: bool,
    shared: Option<&'p AtomicUsize>,
}

impl<'p, 'a> Search<'p, 'a> {
    fn new(
        problem: &'p Problem<'a>,
        bar: usize,
        node_limit: Option<u64>,
        shared: Option<&'p AtomicUsize>,
    ) -> Self {
        Search {
            problem,
            bar,
            best: None,
            nodes: 0,
            node_limit,
            exhausted: false,
            shared,
        }
    }

    fn finish(self) -> (Found, u64) {
        if self.exhausted {
            (Err(self.best), self.nodes)
        } else {
            (Ok(self.best), self.nodes)
        }
    }

    /// Can a subtree whose sets have at most `bound` vertices still improve?
    #[inline]
    fn hopeless(&self, bound: usize) -> bool {
        // Other tasks' results only prune strictly, so every task still
        // reaches its own first maximum and the merge stays deterministic.
        bound <= self.bar || self.shared.is_some_and(|s| bound < s.load(Ordering::Relaxed))
    }

    fn explore(&mut self, inc: VertexSet, exc: VertexSet) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.node_limit.is_some_and(|limit| self.nodes > limit) {
            self.exhausted = true;
            return;
        }
        let p = self.problem;
        if self.hopeless(p.all.len() - exc.len()) {
            return;
        }
        let Some((inc, exc)) = p.propagate(inc, exc) else {
            return;
        };
        let undecided = p.all - inc - exc;
        if self.hopeless(inc.len() + undecided.len()) {
            return;
        }
        if undecided.is_empty() {
            if p.is_feasible(inc) {
                self.bar = inc.len();
                self.best = Some(inc);
                if let Some(shared) = self.shared {
                    shared.fetch_max(inc.len(), Ordering::Relaxed);
                }
            }
            return;
        }
        let b = p.next_branch_vertex(undecided);
        self.explore(inc.with(b), exc);
        self.explore(inc, exc.with(b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::visibility::is_visibility_set_with;

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

    fn solve(g: &Graph, kind: VisibilityKind) -> InvariantResult {
        max_visibility_set(g, kind, &SolverOptions::default()).unwrap()
    }

    #[test]
    fn seven_cycle() {
        assert_eq!(solve(&cycle(7), VisibilityKind::Mutual).value, 3);
        assert_eq!(solve(&cycle(7), VisibilityKind::Dual).value, 0);
    }

    #[test]
    fn complete_graphs() {
        for kind in VisibilityKind::ALL {
            assert_eq!(solve(&complete(5), kind).value, 5);
        }
        let k1 = Graph::new(1).unwrap();
        for kind in VisibilityKind::ALL {
            assert_eq!(solve(&k1, kind).value, 1);
        }
        for kind in VisibilityKind::ALL {
            assert_eq!(solve(&complete(2), kind).value, 2);
        }
    }

    #[test]
    fn witness_is_feasible() {
        let g = cycle(6);
        let d = all_pairs_distances(&g);
        for kind in VisibilityKind::ALL {
            let r = solve(&g, kind);
            assert_eq!(r.witness.len(), r.value);
            assert!(is_visibility_set_with(&g, &d, r.witness, kind, TotalCheck::AllPairs).unwrap());
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(3).unwrap();
        assert!(matches!(
            max_visibility_set(&g, VisibilityKind::Mutual, &SolverOptions::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn node_limit_reports_best_so_far() {
        let g = cycle(12);
        let opts = SolverOptions {
            node_limit: Some(1),
            ..Default::default()
        };
        match max_visibility_set(&g, VisibilityKind::Mutual, &opts) {
            Err(Error::NodeLimit { limit, best }) => {
                assert_eq!(limit, 1);
                assert!(best.value >= 2);
            }
            other => panic!("expected node limit error, got {other:?}"),
        }
        let zero = SolverOptions {
            node_limit: Some(0),
            ..Default::default()
        };
        assert!(max_visibility_set(&g, VisibilityKind::Mutual, &zero).is_err());
    }

    #[test]
    fn lower_bound_restart() {
        let g = cycle(9);
        for kind in VisibilityKind::ALL {
            let plain = solve(&g, kind);
            let opts = SolverOptions {
                initial_lower_bound: Some(plain.value),
                ..Default::default()
            };
            assert_eq!(max_visibility_set(&g, kind, &opts).unwrap().value, plain.value);
            let too_high = SolverOptions {
                initial_lower_bound: Some(plain.value + 1),
                ..Default::default()
            };
            assert!(max_visibility_set(&g, kind, &too_high).is_err());
        }
    }

    #[test]
    fn serial_is_deterministic_and_parallel_agrees() {
        let g = cycle(10).remove_edge(0, 1).unwrap();
        let mut g = g;
        g.add_edge(2, 7).unwrap();
        g.add_edge(4, 9).unwrap();
        for kind in VisibilityKind::ALL {
            let a = solve(&g, kind);
            let b = solve(&g, kind);
            assert_eq!((a.witness, a.nodes_explored), (b.witness, b.nodes_explored));
            let p = max_visibility_set(&g, kind, &SolverOptions::parallel()).unwrap();
            assert_eq!((p.value, p.witness), (a.value, a.witness));
        }
    }

    #[test]
    fn all_four_on_cycles() {
        let r = all_four(&cycle(4), &SolverOptions::default()).unwrap();
        assert_eq!(r.values(), [3, 2, 3, 2]);
        let r = all_four(&cycle(5), &SolverOptions::default()).unwrap();
        assert_eq!(r.values(), [3, 2, 2, 0]);
    }
}
