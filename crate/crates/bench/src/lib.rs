//! Criterion benchmarks for the series and triangle kernels live in `benches/`.
