//! Criterion benchmarks for `deligne-core`; see `benches/`.
