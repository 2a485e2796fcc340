//! Regular Coulomb wave functions, Rayleigh sums of their zeros, radii of
//! starlikeness of the normalized forms and the large-order asymptotics of
//! the radius of starlikeness.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod asympt;
pub mod dd;
pub mod error;
pub mod exact;
pub mod params;
pub mod radii;
pub mod rayleigh;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use params::CoulombParams;
