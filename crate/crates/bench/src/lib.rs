//! Benchmarks for the series toolkit live in `benches/`.
