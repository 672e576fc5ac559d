//! Criterion benchmarks for the kkec kernels live in `benches/`.
