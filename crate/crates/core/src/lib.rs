//! Discrete Fourier analysis on planar lattices.
//!
//! Index sets of lattice pairs, exact cubature rules on squares, rhombi and hexagons,
//! trigonometric functions on the equilateral triangle, Lagrange interpolation and a
//! hexagonal FFT.

pub mod cli_io;
pub mod cubature_rules;
pub mod error;
pub mod fourier_core;
pub mod hexfft;
pub mod index_sets;
pub mod interpolation;
pub mod lattice_core;
pub mod triangle_trig;

pub use error::{Error, Result};
pub use num;
