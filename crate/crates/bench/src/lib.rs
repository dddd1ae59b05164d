//! Benchmarks for the supersieve engine live in `benches/`.

pub use supersieve_core as core;
