//! Benchmarks for locfrac. See `benches/localize.rs`.
