//! Criterion benchmarks for `warpdeg`; see `benches/`.
