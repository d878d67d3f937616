//! Reproduction suite: each criterion recomputes a published value or
//! property and reports whether it matched, along with how long it took.
//!
//! Shared by the `verify-paper` command and the acceptance test target.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::families::{cycle, cycle_plus, cycle_with_leaves, f_k, h_k, j_graph, l_k};
use crate::graph::{all_pairs_distances, convex_hull, is_isometric_subgraph, Graph, VertexSet};
use crate::realizability::{census_values, enumerate_connected_graphs, is_realizable};
use crate::removal::{check_lemma_mud1, edge_scan, vertex_scan, LemmaVerdict};
use crate::solver::{all_four, brute_force_invariant, max_visibility_set, SolverOptions};
use crate::visibility::{
    blocking_set, half_set, is_visibility_set, is_visibility_set_with, pair_visible, TotalCheck,
    VisibilityKind,
};

use VisibilityKind::{Dual, Mutual, Outer, Total};

/// Result of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub skipped: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub budget: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.skipped, self.passed) {
            (true, _) => "SKIP",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        };
        write!(f, "[{status}] {:>2}. {}", self.id, self.title)
    }
}

/// Collects mismatches and observations while a criterion runs.
#[derive(Default)]
pub struct Log {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, label: impl fmt::Display, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub budget: Duration,
    /// Only runs when long checks are requested.
    pub long_only: bool,
    run: fn(&mut Log, bool) -> Result<()>,
}

impl Criterion {
    /// Runs the criterion. Exceeding the time budget counts as a failure.
    pub fn run(&self, long: bool) -> Outcome {
        if self.long_only && !long {
            return Outcome {
                id: self.id,
                title: self.title,
                passed: true,
                skipped: true,
                failures: Vec::new(),
                notes: vec!["long-running; enable with --long".into()],
                elapsed: Duration::ZERO,
                budget: self.budget,
            };
        }
        let mut log = Log::default();
        let start = Instant::now();
        if let Err(e) = (self.run)(&mut log, long) {
            log.failures.push(format!("error: {e}"));
        }
        let elapsed = start.elapsed();
        if elapsed > self.budget {
            log.failures.push(format!(
                "took {:.1?}, budget {:.1?}",
                elapsed, self.budget
            ));
        }
        Outcome {
            id: self.id,
            title: self.title,
            passed: log.failures.is_empty(),
            skipped: false,
            failures: log.failures,
            notes: log.notes,
            elapsed,
            budget: self.budget,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// All criteria in order.
pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, budget, long_only, run| Criterion {
        id,
        title,
        budget,
        long_only,
        run,
    };
    vec![
        c(1, "cycle values n = 3..12", secs(1), false, cycles as fn(&mut Log, bool) -> Result<()>),
        c(2, "trees: all four equal the leaf count", secs(30), false, trees),
        c(3, "H_k and H_k - zw, k = 2..5", secs(120), false, h_family),
        c(4, "F_k and F_k - z, k = 5, 6", secs(600), false, f_family),
        c(5, "L_2 dual values", secs(1800), true, l_family),
        c(6, "J: mu(J) = 3, mu(J - v2v3) = mu(J - v3) = 5", secs(60), false, j_ratios),
        c(7, "C_7 with leaves at v3, v5, v7: total jumps by 2", secs(10), false, cycle_leaves),
        c(8, "removal bounds over all 112 connected graphs of order 6", secs(600), false, census_bounds),
        c(9, "realizability matches the census", secs(300), false, realizability),
        c(10, "branch and bound agrees with exhaustive search", secs(600), false, oracle),
        c(11, "half-set and blocking-set properties", secs(300), false, gadgets),
        c(12, "visibility lemmas on random graphs", secs(600), false, lemmas),
    ]
}

/// Runs every criterion, long ones only if `long`.
pub fn run_all(long: bool) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(long)).collect()
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x6d75_7669_7a00 + stream)
}

/// Uniform-attachment random tree: vertex `i` joins a random earlier vertex.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n).expect("n in range");
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).expect("in range");
    }
    g
}

/// Random tree plus each remaining pair with probability `p`; always connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    // Relabel so low labels are not always near the root.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n).expect("n in range");
    for (u, v) in tree.edges() {
        g.add_edge(order[u], order[v]).expect("in range");
    }
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn random_subset(rng: &mut impl Rng, of: VertexSet, p: f64) -> VertexSet {
    of.iter().filter(|_| rng.gen_bool(p)).collect()
}

/// A random feasible set: vertices in random order, each kept with
/// probability `keep` if the set stays feasible. Valid for the kinds closed
/// under subsets.
fn random_feasible(rng: &mut impl Rng, g: &Graph, kind: VisibilityKind, keep: f64) -> Result<VertexSet> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut x = VertexSet::EMPTY;
    for v in order {
        if rng.gen_bool(keep) && is_visibility_set(g, x.with(v), kind)? {
            x.insert(v);
        }
    }
    Ok(x)
}

fn four(g: &Graph) -> Result<[usize; 4]> {
    Ok(all_four(g, &SolverOptions::default())?.values())
}

fn value(g: &Graph, kind: VisibilityKind) -> Result<usize> {
    Ok(max_visibility_set(g, kind, &SolverOptions::default())?.value)
}

fn cycles(log: &mut Log, _long: bool) -> Result<()> {
    for n in 3..=12 {
        let want = [
            3,
            if n == 3 { 3 } else { 2 },
            match n {
                3 | 4 => 3,
                5 | 6 => 2,
                _ => 0,
            },
            match n {
                3 => 3,
                4 => 2,
                _ => 0,
            },
        ];
        log.expect(format_args!("C_{n} [mu, muo, mud, mut]"), four(&cycle(n)?.graph)?, want);
    }
    Ok(())
}

fn trees(log: &mut Log, _long: bool) -> Result<()> {
    let mut rng = rng(2);
    for i in 0..200 {
        let n = rng.gen_range(4..=18);
        let t = random_tree(&mut rng, n);
        let leaves = t.leaves().len();
        log.expect(format_args!("tree #{i} (n={n})"), four(&t)?, [leaves; 4]);
    }
    Ok(())
}

fn h_family(log: &mut Log, _long: bool) -> Result<()> {
    for k in 2..=5 {
        let h = h_k(k)?;
        log.expect(format_args!("H_{k}"), four(&h.graph)?, [2 * k; 4]);
        let cut = h.without_edge("z", "w")?;
        log.expect(format_args!("H_{k} - zw"), four(&cut.graph)?, [k + 1, k, 2, 0]);
    }
    Ok(())
}

fn f_family(log: &mut Log, _long: bool) -> Result<()> {
    for k in 5..=6 {
        let f = f_k(k)?;
        let [mu, muo, mud, mut_] = four(&f.graph)?;
        let lower = k + k.div_ceil(2);
        log.expect(format_args!("mut(F_{k})"), mut_, 2);
        log.expect(format_args!("mud(F_{k})"), mud, 3);
        log.expect(format_args!("muo(F_{k})"), muo, (2 * k).div_ceil(3));
        log.check(mu >= lower, || format!("mu(F_{k}) = {mu} < {lower}"));
        log.note(format!(
            "mu(F_{k}) = {mu}; k + ceil(k/2) = {lower}; {}",
            if mu == lower { "equal" } else { "differs" }
        ));
        let minus = f.without_vertex("z")?;
        log.expect(format_args!("F_{k} - z"), four(&minus.graph)?, [k + 2; 4]);
        log.note(format!(
            "muo(F_{k} - z) / muo(F_{k}) = {}/{}",
            k + 2,
            muo
        ));
    }
    Ok(())
}

fn l_family(log: &mut Log, _long: bool) -> Result<()> {
    let l = l_k(2)?;
    log.expect("order of L_2", l.n(), 30);
    log.expect("mud(L_2)", value(&l.graph, Dual)?, 0);
    let cut = l.without_edge("z", "z_6")?;
    let y = cut.set_of(&["v_1", "v_2", "z"]);
    log.check(is_visibility_set(&cut.graph, y, Dual)?, || {
        "{v_1, v_2, z} is not dual in L_2 - zz_6".into()
    });
    log.expect("mud(L_2 - zz_6)", value(&cut.graph, Dual)?, 3);
    Ok(())
}

fn j_ratios(log: &mut Log, _long: bool) -> Result<()> {
    let j = j_graph();
    log.expect("mu(J)", value(&j.graph, Mutual)?, 3);
    log.expect("mu(J - v_2v_3)", value(&j.without_edge("v_2", "v_3")?.graph, Mutual)?, 5);
    log.expect("mu(J - v_3)", value(&j.without_vertex("v_3")?.graph, Mutual)?, 5);
    Ok(())
}

fn cycle_leaves(log: &mut Log, _long: bool) -> Result<()> {
    let c = cycle_with_leaves(7, &[3, 5, 7])?;
    log.expect("mut(C_7 + 3 leaves)", value(&c.graph, Total)?, 3);
    log.expect("after removing v_1v_2", value(&c.without_edge("v_1", "v_2")?.graph, Total)?, 5);
    Ok(())
}

fn census_bounds(log: &mut Log, _long: bool) -> Result<()> {
    let census = enumerate_connected_graphs(6)?;
    log.expect("connected graphs of order 6", census.len(), 112);
    let opts = SolverOptions::default();
    let (mut removals, mut conjecture) = (0usize, 0usize);
    for (i, g) in census.iter().enumerate() {
        // all_four rejects any violation of the chains between the four values.
        all_four(g, &opts)?;
        for kind in [Mutual, Outer, Total] {
            let report = edge_scan(g, kind, &opts)?;
            removals += report.records.iter().filter(|r| r.after_value.is_some()).count();
            for (r, v) in report.violations() {
                log.failures.push(format!("graph #{i}: {} fails {} on removing {}", kind, v.bound, r.element));
            }
            conjecture += report.conjecture_counterexamples().count();
        }
        let report = vertex_scan(g, Mutual, &opts)?;
        removals += report.records.iter().filter(|r| r.after_value.is_some()).count();
        for (r, v) in report.violations() {
            log.failures.push(format!("graph #{i}: fails {} on removing vertex {}", v.bound, r.element));
        }
    }
    log.note(format!("{removals} removals graded"));
    log.note(format!("{conjecture} removals with mu(G-e) < mu(G)/2 + 1"));
    Ok(())
}

fn realizability(log: &mut Log, long: bool) -> Result<()> {
    for q in 1..=6 {
        for kind in VisibilityKind::ALL {
            let values = census_values(q, kind)?;
            for p in 0..=q {
                let attained = values.iter().any(|&(_, v)| v == p);
                let answer = is_realizable(kind, p, q)?;
                log.check(answer.realizable == attained, || {
                    format!("{kind} ({p},{q}): formula says {}, census says {attained}", answer.realizable)
                });
            }
            if q >= 2 && matches!(kind, Mutual | Outer) {
                log.check(values.iter().all(|&(_, v)| v >= 2), || format!("some {kind} < 2 at order {q}"));
            }
        }
    }
    let zero_total: Vec<Graph> = census_values(5, Total)?
        .into_iter()
        .filter(|&(_, v)| v == 0)
        .map(|(g, _)| g)
        .collect();
    let c5 = crate::realizability::canonical_key(&cycle(5)?.graph);
    log.check(
        zero_total.len() == 1 && crate::realizability::canonical_key(&zero_total[0]) == c5,
        || format!("{} graphs of order 5 with mut = 0; expected only C_5", zero_total.len()),
    );
    let opts = SolverOptions::default();
    let mut witnesses = 0;
    for q in 1..=12 {
        for kind in VisibilityKind::ALL {
            for p in 0..=q {
                if let Some(w) = is_realizable(kind, p, q)?.witness {
                    witnesses += 1;
                    let got = max_visibility_set(&w.graph, kind, &opts)?.value;
                    log.check(got == p && w.n() == q, || {
                        format!("{kind} witness {} for ({p},{q}) attains {got}", w.name())
                    });
                }
            }
        }
    }
    log.note(format!("{witnesses} witnesses verified"));
    log.expect("mud(C_7^+)", value(&cycle_plus(8)?.graph, Dual)?, 1);
    log.expect("mut(C_5)", value(&cycle(5)?.graph, Total)?, 0);
    if long {
        let seven = census_values(7, Dual)?;
        log.expect("connected graphs of order 7", seven.len(), 853);
        log.check(seven.iter().all(|&(_, v)| v != 1), || "a graph of order 7 has mud = 1".into());
        log.note("order-7 census: no graph with mud = 1");
    }
    Ok(())
}

fn oracle(log: &mut Log, _long: bool) -> Result<()> {
    let mut rng = rng(10);
    let opts = SolverOptions::default();
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.05..0.7);
        let g = random_connected(&mut rng, n, p);
        for kind in VisibilityKind::ALL {
            let fast = max_visibility_set(&g, kind, &opts)?.value;
            let slow = brute_force_invariant(&g, kind)?;
            log.check(fast == slow, || format!("graph #{i} {kind}: solver {fast}, exhaustive {slow}; {g:?}"));
        }
    }
    Ok(())
}

fn gadgets(log: &mut Log, _long: bool) -> Result<()> {
    let mut rng = rng(11);
    for i in 0..100 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.6);
        let g = random_connected(&mut rng, n, p);
        let d = all_pairs_distances(&g);
        let z = random_feasible(&mut rng, &g, Mutual, 0.7)?;
        let x = rng.gen_range(0..n);
        let y = (x + rng.gen_range(1..n)) % n;
        let (a, b) = (half_set(&d, z, x, y)?, half_set(&d, z, y, x)?);
        log.check(2 * a.len().max(b.len()) >= z.len(), || {
            format!("graph #{i}: half-sets {a:?}, {b:?} of {z:?} both below half")
        });
        let edges: Vec<_> = g.edges().collect();
        let &(u, v) = edges.choose(&mut rng).expect("connected, n >= 2");
        let cut = g.remove_edge(u, v)?;
        let dc = all_pairs_distances(&cut);
        if dc.is_connected() {
            let before = half_set(&d, z, u, v)?;
            let after = half_set(&dc, z, u, v)?;
            log.check(before == after, || format!("graph #{i}: half-set changes on removing {u}-{v}"));
        }
        let w = rng.gen_range(0..n);
        let blocking = blocking_set(&g, &d, z, w)?;
        let survivors = z - blocking.blockers;
        log.check(2 * survivors.len() >= z.len(), || {
            format!("graph #{i}: {} blockers out of {}", blocking.blockers.len(), z.len())
        });
        for s in survivors.without(w) {
            log.check(pair_visible(&g, &d, survivors, w, s)?, || {
                format!("graph #{i}: survivor {s} not visible from {w}")
            });
        }
    }
    Ok(())
}

fn lemmas(log: &mut Log, _long: bool) -> Result<()> {
    let mut rng = rng(12);
    let mut partitions = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.8);
        let g = random_connected(&mut rng, n, p);
        let d = all_pairs_distances(&g);

        for kind in [Mutual, Outer, Total] {
            let x = random_feasible(&mut rng, &g, kind, 0.8)?;
            for _ in 0..4 {
                let y = random_subset(&mut rng, x, 0.5);
                log.check(is_visibility_set(&g, y, kind)?, || {
                    format!("graph #{i}: {kind} subset {y:?} of {x:?} infeasible")
                });
            }
        }

        let seed = random_subset(&mut rng, g.vertices(), 0.3).with(rng.gen_range(0..n));
        let hull = convex_hull(&d, seed);
        let sub = g.induced_subgraph(hull);
        for kind in VisibilityKind::ALL {
            let x = if kind == Dual {
                max_visibility_set(&g, Dual, &SolverOptions::default())?.witness
            } else {
                random_feasible(&mut rng, &g, kind, 0.8)?
            };
            let restricted = sub.restrict(x);
            log.check(is_visibility_set(&sub.graph, restricted, kind)?, || {
                format!("graph #{i}: {kind} set {x:?} fails inside convex {hull:?}")
            });
        }

        for _ in 0..4 {
            let x = random_subset(&mut rng, g.vertices(), 0.4);
            let short = is_visibility_set_with(&g, &d, x, Total, TotalCheck::DistanceTwo)?;
            let full = is_visibility_set_with(&g, &d, x, Total, TotalCheck::AllPairs)?;
            log.check(short == full, || format!("graph #{i}: total check differs for {x:?}"));
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut clique = VertexSet::EMPTY;
        for v in order {
            if (g.neighbors(v) & clique) == clique && rng.gen_bool(0.7) {
                clique.insert(v);
            }
        }
        let rest = g.vertices() - clique;
        if !rest.is_empty() && is_isometric_subgraph(&g, rest)? {
            partitions += 1;
            log.check(is_visibility_set(&g, clique, Dual)?, || {
                format!("graph #{i}: clique {clique:?} with isometric complement is not dual")
            });
        }
    }
    log.note(format!("{partitions} clique/isometric partitions tested"));
    log.check(partitions > 0, || "no clique/isometric partition was sampled".into());

    for q in [7, 8] {
        let verdict = check_lemma_mud1(&cycle_plus(q)?.graph)?;
        log.check(verdict != LemmaVerdict::Violated, || format!("mud = 1 lemma violated on C_{}^+", q - 1));
        log.note(format!("C_{}^+: {verdict:?}", q - 1));
    }
    log.expect("mud = 1 lemma on C_7^+", check_lemma_mud1(&cycle_plus(8)?.graph)?, LemmaVerdict::Holds);
    Ok(())
}
