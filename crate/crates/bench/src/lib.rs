//! Fixed inputs shared by the benchmarks.

use regbound::graph::{complete, line_graph, petersen};
use regbound::hoffman::attach_universal_fat;
use regbound::Graph;

/// Triangular graph `T(10)`: 45 vertices, highly symmetric.
pub fn triangular_10() -> Graph {
    line_graph(&complete(10)).expect("T(10)")
}

/// `G(q(2K₁), 30)`: one clique of 30 fat copies plus two slims.
pub fn fattened_q2k1() -> Graph {
    attach_universal_fat(&regbound::graph::edgeless(2))
        .fatten(30)
        .expect("fattening")
}

/// Petersen graph with its vertices shuffled.
pub fn petersen_shuffled() -> Graph {
    petersen().relabel(&[3, 7, 0, 9, 1, 5, 8, 2, 6, 4])
}
