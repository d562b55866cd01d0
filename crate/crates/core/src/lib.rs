//! Exact spectra, k-step distributions, mixing bounds and simulation for
//! top-with-random shuffles on the signed permutation groups `B_n`, `D_n` and
//! on `S_n`.
//!
//! Builds without `std` (with `alloc`); the default `std` feature only forwards
//! to dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod exact;
pub mod group;
pub mod montecarlo;
pub mod ratio;
pub mod spectrum;
pub mod tableaux;
pub mod walk;

pub use error::{Error, Result};
pub use group::{Family, Generator, GroupId, Permutation, SignedPermutation};
pub use ratio::{Number, Rational};
pub use tableaux::{Component, DoubleDiagram, Partition};
pub use walk::{StepMeasure, WalkKind, WalkSpec};
