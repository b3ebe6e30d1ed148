//! Criterion benchmarks for `coherence-core`; see `benches/core.rs`.
