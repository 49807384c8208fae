//! The geometric strategy for the Russian cards problem.
//!
//! Alice, Bob and Cath hold `a`, `b` and `c` cards of a deck of `q^δ`
//! cards identified with the points of F_q^δ. Alice announces a bijection
//! under which her hand is an α-plane; Bob recovers her hand as the only
//! α-plane he does not touch, while Cath's posterior about any single card
//! stays within computable bounds of her prior.
//!
//! Modules, bottom-up: [`field`], [`geometry`], [`strategy`], [`security`],
//! [`search`], plus the brute-force [`oracle`] used for cross-checking and
//! the [`cli`] front end.

pub mod field;
pub mod geometry;
pub mod strategy;
pub mod security;
pub mod search;
pub mod oracle;
pub mod cli;
