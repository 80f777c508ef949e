//! Combinatorial engine for simple closed curves on the boundary of a
//! genus-two handlebody.
//!
//! The crate models R-R diagrams (two once-punctured-torus "handles" joined by
//! an annulus, with curves recorded as labeled bands of connections and
//! weighted chords), extracts the free-group words in F(A,B) the curves
//! represent, locates waves and performs wave surgery to obtain meridian
//! pairs, and classifies which parametrized diagram families give knot
//! exteriors in S³ (unknot, torus knot, or cable of a torus knot).
//!
//! The core is `no_std`-compatible (requires `alloc`); enable the default
//! `std` feature for `std::error::Error` impls.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod classify;
pub mod diagrams;
pub mod homology;
pub mod verify;
pub mod waves;
pub mod words;
