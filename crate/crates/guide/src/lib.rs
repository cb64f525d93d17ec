//! The chapters of the mdbook in `book/`, compiled here so their code blocks
//! run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/sequence-metrics.md")]
pub mod sequence_metrics {}
#[doc = include_str!("../../../book/src/symbolization.md")]
pub mod symbolization {}
#[doc = include_str!("../../../book/src/hybrid.md")]
pub mod hybrid {}
#[doc = include_str!("../../../book/src/baselines.md")]
pub mod baselines {}
#[doc = include_str!("../../../book/src/evaluation.md")]
pub mod evaluation {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
