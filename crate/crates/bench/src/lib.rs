//! Criterion benchmarks for the jetgraph toolkit live under `benches/`.
