//! Exact solver for partitioning polygons into the fewest vertical strips of
//! width at most one.
//!
//! Coordinates are exact rationals throughout. The general solver decomposes
//! the input into vertical trapezoids, refines the dual tree into a binary
//! tree and runs a bottom-up dynamic program whose states are antichains of
//! intervals. Convex inputs have a closed-form shortcut.

pub mod ccb_lattice;
pub mod convex_solver;
pub mod decomposition;
pub mod dp_engine;
pub mod error;
pub mod exact_coords;
pub mod oracle_and_generators;
pub mod polygon_model;
pub mod reporting;

pub use error::{Error, Result};
pub use exact_coords::{EpsCoord, Rational};
