//! Impartial quotient games on algebraic structures.
//!
//! A move replaces a structure by its quotient by one non-zero element:
//! cyclic subgroups for finitely generated abelian groups, normal closures
//! for finite groups, principal ideals for finite commutative rings. The
//! crate computes normal and misère outcomes, nimbers and winning moves,
//! both by closed-form classifiers and by brute-force game-tree search.
//!
//! - [`ordinal`]: values `ω·a + b`, `mex`, natural sum.
//! - [`engine`]: memoizing solver, Nim piles, selective compounds.
//! - [`abelian`]: invariant-factor groups, Smith normal form, classifiers.
//! - [`finite_group`]: table groups, normal-closure and subgroup games.
//! - [`finite_ring`]: finite commutative rings and their ideal game.
//! - [`verify`]: named check suites used by the command-line tool.

pub mod abelian;
pub mod engine;
pub mod error;
pub mod finite_group;
pub mod finite_ring;
pub mod mixed;
pub mod ordinal;
pub mod verify;

pub use error::{Error, Result};
pub use ordinal::Ordinal;
