//! Exact Fourier analysis on finite abelian groups.
//!
//! A weight function on a finite abelian group is transformed onto the
//! character group with values in a cyclotomic field, and all zero tests are
//! exact. On top of that sit the maximal-special-subgroup multiset invariant
//! and its counting homomorphisms, lens-space torsion data, and torus-knot
//! Alexander polynomial divisibility checks.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod cyclotomic;
mod error;
pub mod knot;
pub mod lens;
mod limits;
pub mod msinv;
pub mod poly;
pub mod wtorsor;

pub use abelian::{Character, FiniteAbelianGroup, GroupElement, GroupIso, Subgroup};
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use error::{Error, ErrorKind, Result};
pub use knot::AlexanderPolynomial;
pub use lens::LensSpace;
pub use limits::Limits;
pub use msinv::{MSClass, MSMultiset};
pub use poly::{RatPoly, Rational};
pub use wtorsor::{DualWeights, ProductEmbedding, WeightedGroup};
