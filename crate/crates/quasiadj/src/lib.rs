//! Exact invariants of plane-curve germs at the origin of the complex plane.
//!
//! Everything here is computed in exact rational arithmetic — no floating
//! point is used anywhere in the library. The pipeline is:
//!
//! * [`algebra`] — arbitrary-precision rationals, sparse bivariate
//!   polynomials, the `.germ` input grammar, and Newton polygons.
//! * [`resolution`] — embedded resolution of a germ by iterated point
//!   blowups, producing the exceptional-divisor data (multiplicity matrix,
//!   canonical multiplicities, intersection lattice, branch attachments),
//!   plus a `.graph` file loader/renderer for resolutions supplied directly.
//! * [`lattice`] — antinef closures (unloading), ideal handles, and
//!   codimensions on the exceptional lattice.
//! * [`walls`] — mixed multiplier ideals, quasiadjunction ideals and their
//!   log variants on the half-open unit cube, wall candidates, faces and
//!   pointwise/line face queries, and character depths.
//! * [`spectra`] — jumping numbers for weighted germs, spectrum slices along
//!   weight lines and the diagonal, Milnor-number consistency, Bernstein
//!   hyperplane factors, and Alexander-polynomial specializations.
//!
//! # Coordinate conventions
//!
//! Two mirrored coordinate systems coexist and are easy to confuse; APIs say
//! which one they use:
//!
//! | quantity                      | symbol | relation                        |
//! |-------------------------------|--------|---------------------------------|
//! | multiplier exponent per factor| `c_i`  | `c_i = 1 - x_i`                 |
//! | cube coordinate (walls/faces) | `x_i`  | `x_i = 1 - c_i`, lives in `[0,1)` |
//! | jumping number                | `ξ`    | `ξ = 1 - s`                     |
//! | spectrum coordinate           | `s`    | `s = 1 - ξ`, lives in `(0,1)`   |
//!
//! `walls` works in cube coordinates `x`; `spectra::jumping_numbers` works in
//! `ξ`; `spectra::spectrum_line` reports `s = 1 - ξ`.

pub mod algebra;
mod error;
pub mod lattice;
pub mod resolution;
pub mod spectra;
pub mod walls;

pub mod cli;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
