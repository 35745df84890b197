//! Secondary invariants of finite permutation groups, computed by evaluation.
//!
//! The invariant ring `K[x₁,…,xₙ]^G` of a permutation group `G ⊆ Sₙ` is a free
//! module over the symmetric polynomials. Its basis elements (the secondary
//! invariants) are found here without Gröbner bases: every invariant is
//! evaluated at one point per coset of `Sₙ/G`, the points being coordinate
//! permutations of `(1, ζ, ζ², …, ζⁿ⁻¹)` with `ζ` a primitive `n`-th root of
//! unity. Linear algebra on those evaluation vectors, graded by degree,
//! decides which candidate invariants are new.
//!
//! Module map:
//!
//! - [`perm`]: permutations, groups by closure, orbits.
//! - [`cyclo`]: exact arithmetic in `ℚ(ζₙ)`.
//! - [`series`]: Molien/Pólya series and per-degree secondary counts.
//! - [`monomials`]: staircase monomials and canonical orbit representatives.
//! - [`evalpoints`]: evaluation points and the evaluation morphism.
//! - [`exactla`]: incremental reduced echelon bases over `ℚ(ζₙ)`.
//! - [`engine`]: the degree-by-degree construction and its verification.
//! - [`catalog`]: named groups and the built-in test catalog.
//! - [`cli`]: the command-line front end used by the `secinv` binary.
//!
//! ```
//! use secinv::{catalog, engine};
//!
//! let group = catalog::parse_group("A3").unwrap();
//! let result = engine::secondary_invariants(&group, &engine::Options::default()).unwrap();
//! assert_eq!(result.t(), 2);
//! assert_eq!(result.degrees(), vec![0, 3]);
//! ```

pub mod catalog;
pub mod cli;
pub mod cyclo;
pub mod engine;
mod error;
pub mod evalpoints;
pub mod exactla;
pub mod monomials;
pub mod perm;
pub mod series;

pub use error::{Error, Result};
