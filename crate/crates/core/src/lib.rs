//! Syzygies and Gröbner bases for submodules of `R[X_1, …, X_n]^m` over a
//! strongly discrete coherent coefficient ring `R`.
//!
//! The crate is `no_std` (it needs `alloc`). Coefficient backends live in
//! [`rings`]; module elements and their arithmetic in [`polynomials`];
//! orders in [`orders`]. The algorithmic layers build on each other:
//! [`division`], [`syzygies`], [`groebner`] and [`resolutions`].

#![no_std]

extern crate alloc;

pub mod rings;
pub mod orders;
pub mod polynomials;
pub mod division;
pub mod syzygies;
pub mod groebner;
pub mod resolutions;
