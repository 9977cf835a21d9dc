//! Exact large-N Wilson loop expectations for loops on the square lattice.
//!
//! The expectation of a loop is a polynomial in the inverse coupling `β`.
//! It is a finite sum over the canonical plaquette assignments of the loop
//! (see [`canonical`]). Each coefficient is evaluated exactly by a memoized
//! recursion over loop splittings and plaquette deformations (see [`engine`]).
//! The [`closedform`] module carries explicit formulas used to cross-check
//! the engine.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod assignment;
pub mod canonical;
pub mod closedform;
pub mod engine;
pub mod geometry;
pub mod lattice;
pub mod poly;

pub use assignment::PlaquetteAssignment;
pub use canonical::{canonical_collection, height_assignment, is_canonical};
pub use engine::{Engine, EngineError, Strategy};
pub use geometry::{distance, height, is_balanced, regions, support_area};
pub use lattice::{canonical_key, Dir, Edge, Loop, LoopError, Plaquette, Point, Sign};
pub use poly::{BetaPolynomial, Coefficient};
