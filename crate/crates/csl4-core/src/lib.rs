//! Exact arithmetic for coincidence site lattices (CSLs) and coincidence
//! site modules (CSMs) of the prominent 4-dimensional lattices: the centred
//! hypercubic lattice identified with the Hurwitz quaternions, the primitive
//! hypercubic lattice, the root lattice A4, and the icosian ring.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point on any result path. Coincidence rotations are
//! parameterised by quaternion pairs (or a single quaternion for A4), their
//! indices and lattice intersections are computed both from closed forms and
//! from a brute-force lattice intersection, and the counting functions are
//! evaluated through prime-power formulas and Euler product expansions.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `csl4` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coincidence;
pub mod counting;
pub mod enumerate;
pub mod golden;
pub mod hurwitz;
pub mod icosian;
pub mod zmodule;

mod error;

pub use error::CslError;
pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, CslError>;
