//! Criterion benchmarks for crystal construction; see `benches/crystals.rs`.
