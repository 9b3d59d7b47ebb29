// The book chapters double as doc-tests: every fenced Rust block in
// book/src/*.md is compiled and run by `cargo test --doc`.

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/polynomials.md")]
mod polynomials {}
#[doc = include_str!("../../../book/src/groebner.md")]
mod groebner {}
#[doc = include_str!("../../../book/src/lie-algebras.md")]
mod lie_algebras {}
#[doc = include_str!("../../../book/src/curvature.md")]
mod curvature {}
#[doc = include_str!("../../../book/src/einstein-metrics.md")]
mod einstein_metrics {}
