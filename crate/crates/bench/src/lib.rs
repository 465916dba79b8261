//! Shared fixtures for the benchmark suite.

use lgv_reciprocity::rational::frac;
use lgv_reciprocity::{build_dyck_network, Engine, ExactMatrix, SubsetIndex};

/// A dense `size x size` matrix with small, varied rational entries.
pub fn dense_matrix(size: usize) -> ExactMatrix {
    let entries = (0..size * size)
        .map(|idx| frac((idx * 7 % 11) as i64 - 5, (idx % 4) as i64 + 1))
        .collect();
    ExactMatrix::new(size, size, entries).expect("dimensions match")
}

/// An engine over the Dyck network for `(m, k)` together with the subset
/// `{1..m}` used for both sources and sinks.
pub fn dyck_fixture(m: usize, k: usize) -> (Engine, SubsetIndex) {
    let net = build_dyck_network(m, k).expect("valid Dyck parameters");
    let first = SubsetIndex::initial(m, m + k).expect("m <= m + k");
    (Engine::new(&net), first)
}
