//! Criterion benchmarks for the series kernel live in `benches/`.
