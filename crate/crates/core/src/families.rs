//! Named graph families. Every constructor returns a [`LabeledGraph`] whose
//! labels follow the usual vertex names (`z`, `w`, `x_3`, `y_7`, ...).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A graph with a distinct name for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    fn build(name: String, labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let graph = Graph::from_edges(labels.len(), edges)?.with_name(name);
        debug_assert!(
            {
                let mut sorted = labels.clone();
                sorted.sort();
                sorted.dedup();
                sorted.len() == labels.len()
            },
            "labels must be distinct"
        );
        Ok(LabeledGraph { graph, labels })
    }

    /// Numbered labels `v_1, ..., v_n`.
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = (1..=graph.n()).map(|i| format!("v_{i}")).collect();
        LabeledGraph { graph, labels }
    }

    pub fn name(&self) -> &str {
        self.graph.name().unwrap_or("G")
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of a label the caller knows exists.
    ///
    /// Panics on an unknown label.
    pub fn vertex(&self, label: &str) -> usize {
        self.index_of(label)
            .unwrap_or_else(|| panic!("{} has no vertex {label}", self.name()))
    }

    pub fn set_of(&self, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn names_of(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.label(v)).collect()
    }

    pub fn named(&self, s: VertexSet) -> Vec<NamedVertex<'_>> {
        s.iter()
            .map(|index| NamedVertex {
                index,
                label: self.label(index),
            })
            .collect()
    }

    /// `G - uv` by vertex names, keeping labels.
    pub fn without_edge(&self, u: &str, v: &str) -> Result<LabeledGraph> {
        let graph = self
            .graph
            .remove_edge(self.vertex(u), self.vertex(v))?
            .with_name(format!("{}-{u}{v}", self.name()));
        Ok(LabeledGraph {
            graph,
            labels: self.labels.clone(),
        })
    }

    /// `G - x` by vertex name, keeping the surviving labels.
    pub fn without_vertex(&self, x: &str) -> Result<LabeledGraph> {
        let r = self.graph.remove_vertex(self.vertex(x))?;
        let labels = r.original.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(LabeledGraph {
            graph: r.graph.with_name(format!("{}-{x}", self.name())),
            labels,
        })
    }
}

/// A vertex as it appears in JSON output.
#[derive(Serialize)]
pub struct NamedVertex<'a> {
    pub index: usize,
    pub label: &'a str,
}

fn numbered(prefix: &str, range: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = String> + '_ {
    range.map(move |i| format!("{prefix}_{i}"))
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::input(format!("{what} must be at least {min}, got {value}")));
    }
    Ok(())
}

/// `P_n` on `v_1 ... v_n`.
pub fn path(n: usize) -> Result<LabeledGraph> {
    at_least("path order", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    LabeledGraph::build(format!("P{n}"), numbered("v", 1..=n).collect(), &edges)
}

/// `C_n` on `v_1 ... v_n`.
pub fn cycle(n: usize) -> Result<LabeledGraph> {
    at_least("cycle order", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    LabeledGraph::build(format!("C{n}"), numbered("v", 1..=n).collect(), &edges)
}

/// `K_n` on `v_1 ... v_n`.
pub fn complete(n: usize) -> Result<LabeledGraph> {
    at_least("complete graph order", n, 1)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    LabeledGraph::build(format!("K{n}"), numbered("v", 1..=n).collect(), &edges)
}

/// `K_{1,p}`: center `c`, leaves `l_1 ... l_p`.
pub fn star(p: usize) -> Result<LabeledGraph> {
    at_least("star size", p, 1)?;
    let labels = std::iter::once("c".to_string())
        .chain(numbered("l", 1..=p))
        .collect();
    let edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
    LabeledGraph::build(format!("K1,{p}"), labels, &edges)
}

/// `K_{1,p}` with every edge subdivided: center `c`, middles `s_i`, leaves `l_i`.
pub fn subdivided_star(p: usize) -> Result<LabeledGraph> {
    at_least("subdivided star size", p, 2)?;
    let labels = std::iter::once("c".to_string())
        .chain(numbered("s", 1..=p))
        .chain(numbered("l", 1..=p))
        .collect();
    let edges: Vec<_> = (1..=p).flat_map(|i| [(0, i), (i, p + i)]).collect();
    LabeledGraph::build(format!("S(K1,{p})"), labels, &edges)
}

/// `H_k`: vertices `z`, `w`, `x_i`, `y_i` with the 4-cycles `x_i y_i z w x_i`.
pub fn h_k(k: usize) -> Result<LabeledGraph> {
    at_least("H_k parameter", k, 2)?;
    let (z, w) = (0, 1);
    let x = |i: usize| 1 + i;
    let y = |i: usize| 1 + k + i;
    let labels = ["z".to_string(), "w".to_string()]
        .into_iter()
        .chain(numbered("x", 1..=k))
        .chain(numbered("y", 1..=k))
        .collect();
    let mut edges = vec![(z, w)];
    for i in 1..=k {
        edges.extend([(w, x(i)), (x(i), y(i)), (y(i), z)]);
    }
    LabeledGraph::build(format!("H{k}"), labels, &edges)
}

/// `L_k`: cliques on `u_1..u_k` and `v_1..v_k` joined by the matching
/// `u_i v_i`, a vertex `z` adjacent to every `v_i`, a pendant 7-cycle at each
/// `u_i` and at `z` (`z z_1 ... z_6 z`), and a vertex `u_1'` adjacent to
/// `u_1` and `z_1` carrying its own pendant 7-cycle.
///
/// The six new vertices of the cycle at `a` are `a^(1) ... a^(6)`, except for
/// `z` whose cycle uses `z_1 ... z_6`.
pub fn l_k(k: usize) -> Result<LabeledGraph> {
    at_least("L_k parameter", k, 2)?;
    let mut labels: Vec<String> = Vec::with_capacity(8 * k + 14);
    let mut edges = Vec::new();
    let add = |labels: &mut Vec<String>, name: String| {
        labels.push(name);
        labels.len() - 1
    };
    let u: Vec<usize> = (1..=k).map(|i| add(&mut labels, format!("u_{i}"))).collect();
    let v: Vec<usize> = (1..=k).map(|i| add(&mut labels, format!("v_{i}"))).collect();
    let z = add(&mut labels, "z".into());
    for i in 0..k {
        edges.push((u[i], v[i]));
        edges.push((z, v[i]));
        for j in i + 1..k {
            edges.push((u[i], u[j]));
            edges.push((v[i], v[j]));
        }
    }
    let pendant_cycle = |labels: &mut Vec<String>, edges: &mut Vec<(usize, usize)>, at: usize, names: Vec<String>| {
        let ids: Vec<usize> = names.into_iter().map(|n| add(labels, n)).collect();
        let mut prev = at;
        for &c in &ids {
            edges.push((prev, c));
            prev = c;
        }
        edges.push((prev, at));
        ids
    };
    for (i, &ui) in u.iter().enumerate() {
        let names = (1..=6).map(|j| format!("u_{}^({j})", i + 1)).collect();
        pendant_cycle(&mut labels, &mut edges, ui, names);
    }
    let zc = pendant_cycle(&mut labels, &mut edges, z, numbered("z", 1..=6).collect());
    let u1p = labels.len();
    labels.push("u_1'".into());
    edges.push((u[0], u1p));
    edges.push((zc[0], u1p));
    let names = (1..=6).map(|j| format!("u_1'^({j})")).collect();
    pendant_cycle(&mut labels, &mut edges, u1p, names);
    LabeledGraph::build(format!("L{k}"), labels, &edges)
}

/// `F_k`: a vertex `z` joined to `x_1 ... x_k`, each `x_i` joined to
/// `y_{2i-1}` and `y_{2i}`, and the path `y_1 ... y_{2k}`.
pub fn f_k(k: usize) -> Result<LabeledGraph> {
    at_least("F_k parameter", k, 5)?;
    let z = 0;
    let x = |i: usize| i;
    let y = |j: usize| k + j;
    let labels = std::iter::once("z".to_string())
        .chain(numbered("x", 1..=k))
        .chain(numbered("y", 1..=2 * k))
        .collect();
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.extend([(z, x(i)), (x(i), y(2 * i - 1)), (x(i), y(2 * i))]);
    }
    for j in 1..2 * k {
        edges.push((y(j), y(j + 1)));
    }
    LabeledGraph::build(format!("F{k}"), labels, &edges)
}

/// `C_n` on `v_1 ... v_n` with one pendant leaf per entry of `attach`
/// (1-based cycle positions, repeats allowed). The leaf at `v_i` is `u_i`;
/// further leaves at the same vertex are `u_i.2`, `u_i.3`, ...
pub fn cycle_with_leaves(n: usize, attach: &[usize]) -> Result<LabeledGraph> {
    at_least("cycle order", n, 3)?;
    if let Some(&bad) = attach.iter().find(|&&p| p == 0 || p > n) {
        return Err(Error::input(format!(
            "attachment position {bad} outside 1..={n}"
        )));
    }
    if n + attach.len() > crate::graph::MAX_VERTICES {
        return Err(Error::input("too many vertices"));
    }
    let mut labels: Vec<String> = numbered("v", 1..=n).collect();
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut seen = vec![0usize; n + 1];
    for &p in attach {
        seen[p] += 1;
        labels.push(if seen[p] == 1 {
            format!("u_{p}")
        } else {
            format!("u_{p}.{}", seen[p])
        });
        edges.push((p - 1, labels.len() - 1));
    }
    let suffix: Vec<String> = attach.iter().map(|p| p.to_string()).collect();
    LabeledGraph::build(format!("C{n}^[{}]", suffix.join(",")), labels, &edges)
}

/// The 12-cycle with leaves at `v_1`, `v_5`, `v_9`.
pub fn j_graph() -> LabeledGraph {
    let mut j = cycle_with_leaves(12, &[1, 5, 9]).expect("valid positions");
    j.graph = j.graph.with_name("J");
    j
}

/// `C_{q-1}` plus one leaf `u` at `v_1`; order `q`.
pub fn cycle_plus(q: usize) -> Result<LabeledGraph> {
    at_least("order of C^+", q, 4)?;
    let mut g = cycle_with_leaves(q - 1, &[1])?;
    g.labels[q - 1] = "u".into();
    g.graph = g.graph.with_name(format!("C{}+", q - 1));
    Ok(g)
}

/// A tree of order `q` with exactly `p` leaves: the path `v_1 ... v_{q-p+1}`
/// with `p - 1` extra leaves `l_1 ... l_{p-1}` at its last vertex.
pub fn broom(p: usize, q: usize) -> Result<LabeledGraph> {
    if !(2 <= p && p < q) {
        return Err(Error::input(format!("broom needs 2 <= p < q, got p={p}, q={q}")));
    }
    let spine = q - p + 1;
    let labels = numbered("v", 1..=spine).chain(numbered("l", 1..=p - 1)).collect();
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((spine..q).map(|l| (spine - 1, l)));
    LabeledGraph::build(format!("Broom({p},{q})"), labels, &edges)
}

/// Builds a family member from its command-line name.
pub fn by_name(name: &str, k: Option<usize>, n: Option<usize>, attach: &[usize]) -> Result<LabeledGraph> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::input(format!("family {name} needs --{flag}")))
    };
    match name.to_ascii_lowercase().as_str() {
        "p" | "pn" | "path" => path(need(n.or(k), "n")?),
        "c" | "cn" | "cycle" => cycle(need(n.or(k), "n")?),
        "k" | "kn" | "complete" => complete(need(n.or(k), "n")?),
        "star" => star(need(k, "k")?),
        "substar" | "subdivided-star" => subdivided_star(need(k, "k")?),
        "hk" => h_k(need(k, "k")?),
        "lk" => l_k(need(k, "k")?),
        "fk" => f_k(need(k, "k")?),
        "j" => Ok(j_graph()),
        "cnl" | "cycle-with-leaves" => cycle_with_leaves(need(n, "n")?, attach),
        "cplus" | "cycle-plus" => cycle_plus(need(n.or(k), "n")?),
        "broom" => broom(need(k, "k")?, need(n, "n")?),
        _ => Err(Error::input(format!("unknown family `{name}`"))),
    }
}

/// Family names accepted by [`by_name`].
pub const FAMILY_NAMES: &[&str] = &[
    "Pn", "Cn", "Kn", "Star", "SubStar", "Hk", "Lk", "Fk", "J", "CnL", "CPlus", "Broom",
];
