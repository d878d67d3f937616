//! Exact mutual-visibility invariants of small graphs.
//!
//! For a connected graph `G` and `X ⊆ V(G)`, two vertices are X-visible when
//! some shortest path between them has no internal vertex in `X`. The four
//! invariants computed here are the largest `X` such that:
//!
//! * mutual (`mu`): every two vertices of `X` are X-visible;
//! * outer (`muo`): every pair with at least one end in `X` is X-visible;
//! * dual (`mud`): every pair inside `X` and every pair outside `X` is X-visible;
//! * total (`mut`): every pair of vertices is X-visible.
//!
//! ```
//! use mutviz::{families, max_visibility_set, SolverOptions, VisibilityKind};
//!
//! let c7 = families::cycle(7).unwrap();
//! let r = max_visibility_set(&c7.graph, VisibilityKind::Mutual, &SolverOptions::default()).unwrap();
//! assert_eq!(r.value, 3);
//! ```

pub mod checks;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod realizability;
pub mod removal;
pub mod solver;
pub mod visibility;

pub use error::{Error, Result};
pub use families::LabeledGraph;
pub use graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet};
pub use io::{GraphDocument, GraphFormat};
pub use realizability::{enumerate_connected_graphs, exhaustive_spectrum, is_realizable, RealizabilityAnswer};
pub use removal::{edge_scan, vertex_scan, RemovalReport};
pub use solver::{all_four, brute_force_invariant, max_visibility_set, AllFour, InvariantResult, SolverOptions};
pub use visibility::{is_visibility_set, pair_visible, TotalCheck, VisibilityKind};
