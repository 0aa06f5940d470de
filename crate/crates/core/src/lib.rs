//! Coupled-mode model of two microwave cavities (one passive, one with gain),
//! a magnon mode, and a phonon mode.
//!
//! The crate computes steady-state working points of the driven system, the
//! linear probe response around them, transmission spectra with phase and
//! group delay, amplification bands, and drift-matrix stability.
//!
//! All frequencies and rates are angular (rad/s). The gain cavity rate
//! `kappa_2` is signed: negative means net gain.
//!
//! `no_std` compatible (with `alloc`) when built without the default `std`
//! feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod params;
pub mod response;
pub mod spectra;
pub mod steady;

mod linalg;
mod math;
mod roots;

pub use error::Error;
pub use num_complex::Complex64;
