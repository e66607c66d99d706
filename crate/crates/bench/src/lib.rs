//! Criterion benchmarks for the coloring engines live in `benches/`.
