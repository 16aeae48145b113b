//! Analysis of finite non-symmetric cost spaces.
//!
//! A cost space is a finite labeled set with an extended-nonnegative cost
//! matrix `c` where `c(p,q) = 0` iff `p = q` and the directed triangle
//! inequality `c(p,r) <= c(p,q) + c(q,r)` holds. Nothing is assumed about
//! `c(q,p)` when `c(p,q)` is known; `c(p,q) = INF` means `q` cannot be
//! reached from `p`.
//!
//! The crate provides:
//!
//! - [`space`]: the [`CostSpace`] data model, axiom validation (exact and
//!   up-to-a-constant), and constructions (weights-plus-constant spaces,
//!   symmetrization, reversal, l_p products).
//! - [`betweenness`]: three-point relations derived from costs or from
//!   strict partial orders, with an exhaustive axiom checker.
//! - [`chains`]: finite chains, min-plus path closure, swiftest-chain
//!   classification, and the alternating-sign path boundary operator.
//! - [`dress`]: free-group words over pair generators, betweenness
//!   relators, the zero-sum abelianization with constructive preimages,
//!   cost homomorphisms, and normal forms for cycle / unique-path-digraph
//!   generator structures.
//! - [`pretop`]: finite preclosure operators (additive and general),
//!   continuity, comparison, and products.
//! - [`geometry`]: directed balls, medians, directed curvature with a grid
//!   oracle, symmetrized curvature, and convexity checks.
//! - [`tightspan`]: function pairs `(f,g)` with `f(p) = max_q (c(p,q) - g(q))`,
//!   tightening operators, and fixed-point iteration.
//!
//! All values are kept as exact rationals internally. A space carries a
//! numeric mode: `rational` compares exactly, `float` compares within a
//! relative tolerance and prints with 12 significant digits.

pub mod betweenness;
pub mod chains;
pub mod dress;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod io;
pub mod pretop;
pub mod space;
pub mod tightspan;
pub mod value;

pub use error::Error;
pub use space::{CostSpace, ValidationReport};
pub use value::{ExtCost, NumericMode, Value};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
