//! Benchmark workloads shared by the criterion targets.

use grundy_core::{Graph, GraphExpr};

/// Graphs that exercise the searches at a few sizes.
pub const WORKLOADS: &[&str] = &[
    "cyc:12",
    "Q:4",
    "cart(cyc:4,path:3)",
    "strong(path:3,path:4)",
    "lex(path:3,cyc:4)",
    "sier:3,2",
];

pub fn workload(expr: &str) -> Graph {
    GraphExpr::parse(expr)
        .and_then(|e| e.build())
        .unwrap_or_else(|e| panic!("bad workload {expr}: {e}"))
}
