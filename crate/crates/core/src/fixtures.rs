//! Small named graphs used throughout the tests, the CLI and the docs.

use crate::graph::Graph;

/// The cycle `v1 -e1-> v2 -> ... -> vn -en-> v1`.
pub fn cycle(n: usize) -> Graph {
    assert!(n > 0, "cycle needs at least one vertex");
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i % n + 1)))
        .collect();
    Graph::new(vertices, edges).expect("cycle graph is well formed")
}

/// A loop `c` at `v1` with an exit `f: v1 -> v2`; `{v2}` is hereditary but
/// not finitary.
pub fn g2() -> Graph {
    Graph::new(["v1", "v2"], [("c", "v1", "v1"), ("f", "v1", "v2")]).expect("well formed")
}

/// The chain `v1 -e1-> v2 -e2-> v3 -e3-> v4`.
pub fn g3() -> Graph {
    Graph::new(
        ["v1", "v2", "v3", "v4"],
        [("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v3", "v4")],
    )
    .expect("well formed")
}

/// `a: v1 -> v2`, the exitless cycle `b c d` through `v2, v3, v4`, and
/// `f: v1 -> v5` into the sink `v5`.
pub fn g4() -> Graph {
    Graph::new(
        ["v1", "v2", "v3", "v4", "v5"],
        [
            ("a", "v1", "v2"),
            ("b", "v2", "v3"),
            ("c", "v3", "v4"),
            ("d", "v4", "v2"),
            ("f", "v1", "v5"),
        ],
    )
    .expect("well formed")
}
