//! Published values for named graphs, checked against the solver and, where
//! the graph is small enough, the exhaustive oracle.

use mutviz::families::{
    broom, complete, cycle, cycle_plus, cycle_with_leaves, f_k, h_k, j_graph, path, star,
    subdivided_star,
};
use mutviz::removal::{check_lemma_mud1, outer_vertex_slack, vertex_scan, Element, LemmaVerdict};
use mutviz::visibility::is_visibility_set;
use mutviz::{all_four, brute_force_invariant, max_visibility_set, Graph, SolverOptions, VisibilityKind};

use VisibilityKind::{Dual, Mutual, Outer, Total};

fn solve(g: &Graph, kind: VisibilityKind) -> usize {
    max_visibility_set(g, kind, &SolverOptions::default()).unwrap().value
}

fn four(g: &Graph) -> [usize; 4] {
    all_four(g, &SolverOptions::default()).unwrap().values()
}

#[test]
fn solver_examples() {
    let c7 = cycle(7).unwrap().graph;
    assert_eq!(solve(&c7, Mutual), 3);
    assert_eq!(solve(&c7, Dual), 0);
    let k5 = complete(5).unwrap().graph;
    assert_eq!(four(&k5), [5; 4]);
    assert_eq!(solve(&h_k(3).unwrap().graph, Total), 6);
    assert_eq!(solve(&f_k(5).unwrap().graph, Outer), 4);
    assert_eq!(four(&star(4).unwrap().graph), [4; 4]);
    assert_eq!(four(&h_k(4).unwrap().without_edge("z", "w").unwrap().graph), [5, 4, 2, 0]);
}

#[test]
fn oracle_examples() {
    assert_eq!(brute_force_invariant(&path(5).unwrap().graph, Mutual).unwrap(), 2);
    assert_eq!(brute_force_invariant(&cycle(4).unwrap().graph, Total).unwrap(), 2);
    assert_eq!(brute_force_invariant(&path(1).unwrap().graph, Mutual).unwrap(), 1);
}

#[test]
fn family_examples() {
    assert_eq!(cycle(3).unwrap().graph.edges().collect::<Vec<_>>(), complete(3).unwrap().graph.edges().collect::<Vec<_>>());
    assert_eq!(path(2).unwrap().graph.edge_count(), 1);
    for p in 2..=6 {
        let s = subdivided_star(p).unwrap();
        assert_eq!(s.n(), 2 * p + 1);
        assert_eq!(four(&s.graph), [p; 4]);
    }
    let p5 = path(5).unwrap().graph;
    assert!(broom(2, 5).unwrap().graph.edges().eq(p5.edges()));
    let b34 = broom(3, 4).unwrap().graph;
    assert_eq!((b34.max_degree(), b34.leaves().len()), (3, 3));
    for (p, q) in [(2, 3), (3, 7), (5, 6), (4, 10)] {
        assert_eq!(four(&broom(p, q).unwrap().graph), [p; 4], "broom({p},{q})");
    }
    assert_eq!(solve(&cycle_plus(8).unwrap().graph, Dual), 1);
}

#[test]
fn cycles_with_leaves_have_total_equal_to_leaf_count() {
    for (n, attach) in [
        (5, vec![3]),
        (6, vec![3, 5]),
        (7, vec![3, 5, 7]),
        (8, vec![3, 4, 6, 8]),
        (9, vec![3, 3, 5]),
    ] {
        let g = cycle_with_leaves(n, &attach).unwrap();
        assert_eq!(solve(&g.graph, Total), attach.len(), "{}", g.name());
        if g.n() <= 12 {
            assert_eq!(brute_force_invariant(&g.graph, Total).unwrap(), attach.len());
        }
    }
}

#[test]
fn j_graph_values() {
    let j = j_graph();
    assert_eq!(j.n(), 15);
    // Both geodesics between antipodal cycle vertices qualify, so v_7 sees u_1
    // around the far side of the cycle.
    let x = j.set_of(&["u_1", "u_9", "v_2", "v_7"]);
    assert!(is_visibility_set(&j.graph, x, Mutual).unwrap());
    assert_eq!(brute_force_invariant(&j.graph, Mutual).unwrap(), 4);
    assert_eq!(solve(&j.graph, Mutual), 4);
    assert_eq!(solve(&j.without_edge("v_2", "v_3").unwrap().graph, Mutual), 5);
    assert_eq!(solve(&j.without_vertex("v_3").unwrap().graph, Mutual), 5);
}

#[test]
fn vertex_scan_examples() {
    let f5 = f_k(5).unwrap();
    let r = vertex_scan(&f5.graph, Total, &SolverOptions::default()).unwrap();
    assert_eq!(r.base_value, 2);
    assert_eq!(r.after(Element::Vertex { x: f5.vertex("z") }), Some(7));

    // A universal vertex added to a graph: removing it gives the graph back.
    for base in [cycle(7).unwrap().graph, path(5).unwrap().graph, h_k(2).unwrap().graph] {
        let n = base.n();
        let mut g = Graph::new(n + 1).unwrap();
        for (u, v) in base.edges() {
            g.add_edge(u, v).unwrap();
        }
        for v in 0..n {
            g.add_edge(v, n).unwrap();
        }
        let r = vertex_scan(&g, Mutual, &SolverOptions::default()).unwrap();
        assert_eq!(r.after(Element::Vertex { x: n }), Some(solve(&base, Mutual)));
        assert_eq!(r.violations().count(), 0);
    }
}

#[test]
fn lemma_mud1_examples() {
    assert_eq!(check_lemma_mud1(&cycle_plus(8).unwrap().graph).unwrap(), LemmaVerdict::Holds);
    assert_eq!(check_lemma_mud1(&complete(3).unwrap().graph).unwrap(), LemmaVerdict::NotApplicable);
    // No graph of order 7 has mud = 1; this one has mud = 3.
    let c6_plus = cycle_plus(7).unwrap().graph;
    assert_eq!(brute_force_invariant(&c6_plus, Dual).unwrap(), 3);
    assert_eq!(check_lemma_mud1(&c6_plus).unwrap(), LemmaVerdict::NotApplicable);
}

#[test]
fn outer_slack_on_f_family() {
    // muo(F_k - z) = k + 2 against muo(F_k) = ceil(2k/3): slope 1 leaves positive slack.
    let corpus: Vec<Graph> = (5..=7).map(|k| f_k(k).unwrap().graph).collect();
    let s = outer_vertex_slack(&corpus, 1.0, 0.0, &SolverOptions::default()).unwrap();
    let best = s.max_slack.unwrap();
    assert!(best >= 3.0, "slack {best}");
    let (graph, vertex) = s.at.unwrap();
    assert_eq!(vertex, 0, "largest jump comes from removing z (graph #{graph})");
    let s = outer_vertex_slack(&corpus[..1], 1.5, 0.0, &SolverOptions::default()).unwrap();
    assert!(s.max_slack.unwrap() >= 1.0);
}
