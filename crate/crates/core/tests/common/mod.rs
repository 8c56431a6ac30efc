#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use cubic_balance::io::parse_graph6;
use cubic_balance::Graph;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture_lines(file: &str) -> Vec<String> {
    std::fs::read_to_string(fixture_dir().join(file))
        .unwrap()
        .lines()
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

pub fn fixture(file: &str) -> Vec<Graph> {
    fixture_lines(file).iter().map(|l| parse_graph6(l.as_bytes()).unwrap()).collect()
}

pub const CONNECTED: [&str; 5] = [
    "cubic_connected_n04.g6",
    "cubic_connected_n06.g6",
    "cubic_connected_n08.g6",
    "cubic_connected_n10.g6",
    "cubic_connected_n12.g6",
];

pub const DISCONNECTED: &str = "cubic_disconnected_le12.g6";

pub fn connected_corpus() -> Vec<Graph> {
    CONNECTED.iter().flat_map(|f| fixture(f)).collect()
}

pub fn full_corpus() -> Vec<Graph> {
    let mut all = connected_corpus();
    all.extend(fixture(DISCONNECTED));
    all
}

/// Every degree count vector `(n_d, ..., n_0)` over all `2^m` edge subsets,
/// computed from scratch per subset.
pub fn naive_profiles(g: &Graph) -> BTreeSet<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 20);
    let d = (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << m) {
        let mut deg = vec![0; g.order()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let mut counts = vec![0; d + 1];
        for k in deg {
            counts[d - k] += 1;
        }
        out.insert(counts);
    }
    out
}
