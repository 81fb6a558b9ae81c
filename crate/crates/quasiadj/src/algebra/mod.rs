//! Exact scalar and polynomial arithmetic.
//!
//! * [`Rat`] — arbitrary-precision rationals, always in lowest terms with a
//!   positive denominator (backed by `num_rational::BigRational`).
//! * [`UniPoly`] — dense univariate polynomials over [`Rat`], with exact
//!   gcd, square-free parts, and complete rational-root extraction.
//! * [`BiPoly`] — sparse bivariate polynomials over [`Rat`].
//! * [`GermSpec`] — a plane-curve germ given as an ordered list of factors,
//!   parsed from / rendered to the `.germ` grammar ([`parse_germ`],
//!   [`render_germ`]).
//! * [`NewtonPolygon`] — the lower-left Newton polygon of a polynomial with
//!   edge inclinations and edge polynomials.

mod newton;
mod parse;
mod poly;
mod uni;

pub use newton::{newton_polygon, NewtonEdge, NewtonPolygon};
pub use parse::{parse_germ, render_germ};
pub use poly::{BiPoly, GermSpec};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: lowest terms, positive denominator, unbounded size.
pub type Rat = num_rational::BigRational;

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Largest integer `<= r`.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Smallest integer `>= r`.
pub fn rat_ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// Canonical text form: `p/q` in lowest terms, or just `p` when `q == 1`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` (optional leading `-`). Returns `None` on malformed
/// input or zero denominator.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p: BigInt = num.parse().ok()?;
    let q: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return None;
    }
    Some(Rat::new(p, q))
}

/// `r` reduced into `[0, 1)` (the fractional part for positive `r`, shifted
/// for negative `r`).
pub fn rat_mod1(r: &Rat) -> Rat {
    r - Rat::from_integer(rat_floor(r))
}

/// True when `r` is an integer.
pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Greatest common divisor of two big integers (non-negative).
pub fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

/// Absolute value helper.
pub fn bigint_abs(a: &BigInt) -> BigInt {
    a.abs()
}
