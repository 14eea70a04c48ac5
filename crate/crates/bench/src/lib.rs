//! Criterion benchmarks for `hh-core`; see `benches/`.
