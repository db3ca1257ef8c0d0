//! Criterion benchmarks for the certificate checkers; see `benches/`.
