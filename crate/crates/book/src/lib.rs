//! The guide in `book/src`, compiled as doc-tests so its snippets stay in
//! sync with the library. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/digraphs.md")]
pub mod digraphs {}
#[doc = include_str!("../../../book/src/matching.md")]
pub mod matching {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/variational.md")]
pub mod variational {}
#[doc = include_str!("../../../book/src/graphons.md")]
pub mod graphons {}
#[doc = include_str!("../../../book/src/tails.md")]
pub mod tails {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
