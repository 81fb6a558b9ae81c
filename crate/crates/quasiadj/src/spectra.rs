//! Spectrum-side invariants of a resolved germ: weighted jumping numbers,
//! spectrum slices along weight lines and along the diagonal, a
//! Milnor-number consistency report, Bernstein hyperplane factors, and
//! Alexander-polynomial specializations.
//!
//! Everything here is driven by the weight line `t ↦ (w₁t, …, w_rt)` for a
//! [`WeightVector`] `w`. Two mirrored parameterizations coexist (see the
//! crate docs): the ξ-convention used by [`jumping_numbers`], where ξ is a
//! multiplier exponent of the weighted product `f₁^{w₁}···f_r^{w_r}`, and
//! the s-convention (`s = 1 − ξ`) used by [`spectrum_line`], where `s`
//! parameterizes the cube line.
//!
//! # Reduction of whole powers
//!
//! For weights above 1 the exponent `ξ·w_i` of a single branch can pass 1,
//! and from there on membership in the weighted ideal forces divisibility
//! by `f_i` itself — a condition the exceptional lattice alone cannot see.
//! [`jumping_numbers`] therefore factors out whole powers first: each
//! branch exponent is reduced into the half-open interval `(0, 1]`, which
//! multiplies the ideal by a fixed function and hence cancels in every
//! containment and codimension difference. On the mirrored side this
//! reduction is precisely the mod-1 wrapping of the point `s·w` into the
//! unit cube, so the jump test at ξ agrees with the face test at the
//! wrapped point by construction. [`spectrum_line`] still runs both routes
//! (the lattice arithmetic here, the cube machinery in [`walls`]) and
//! raises [`Error::CrossCheck`] if they ever disagree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::Rat;
use crate::lattice::IdealHandle;
use crate::resolution::{milnor_number, BlowupTrace, ResolutionData};
use crate::walls::{self, CubePoint};
use crate::{Error, Result};

/// Cap on `Σ_k r_k` for the per-divisor rates of a weighted germ; the
/// candidate set enumerated by [`jumping_numbers`] has roughly that many
/// members, so this bounds the work a hostile weight vector can demand.
const MAX_RATE_TOTAL: i128 = 1_000_000;

/// Positive integer weights, one per branch, with gcd 1.
///
/// The gcd condition loses nothing (scaling all weights rescales the line
/// parameter) and guarantees the wrapped point of [`spectrum_line`] never
/// collapses onto the cube corner for `s ∈ (0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    /// Validates that `weights` is nonempty, all entries are at least 1,
    /// and the gcd is 1.
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights {
                msg: "weight vector is empty".into(),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w < 1) {
            return Err(Error::InvalidWeights {
                msg: format!("weights must be positive, found {w}"),
            });
        }
        let g = weights.iter().fold(0i64, |acc, &w| acc.gcd(&w));
        if g != 1 {
            return Err(Error::InvalidWeights {
                msg: format!("weights must have gcd 1, found gcd {g}"),
            });
        }
        Ok(WeightVector { weights })
    }

    /// The all-ones vector (the diagonal). `r` must be at least 1.
    pub fn ones(r: usize) -> WeightVector {
        assert!(r >= 1, "a germ has at least one branch");
        WeightVector {
            weights: vec![1; r],
        }
    }

    /// The weight entries.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of branches this vector weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Never true; a valid weight vector has at least one entry.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Valuation of the weighted germ `f₁^{w₁}···f_r^{w_r}` along each
/// exceptional divisor: `r_k = Σ_i w_i · mult[i][k]`.
///
/// Errors with [`Error::InvalidWeights`] on an arity mismatch and with
/// [`Error::LimitExceeded`] when the total `Σ_k r_k` would exceed the
/// candidate-enumeration budget.
pub fn divisor_rates(data: &ResolutionData, w: &WeightVector) -> Result<Vec<i64>> {
    if w.len() != data.n_branches() {
        return Err(Error::InvalidWeights {
            msg: format!(
                "expected {} weights (one per branch), found {}",
                data.n_branches(),
                w.len()
            ),
        });
    }
    let mut rates = Vec::with_capacity(data.n_divisors());
    let mut total: i128 = 0;
    for k in 0..data.n_divisors() {
        let rk: i128 = w
            .weights()
            .iter()
            .enumerate()
            .map(|(i, &wi)| wi as i128 * data.mult[i][k] as i128)
            .sum();
        total += rk;
        if total > MAX_RATE_TOTAL {
            return Err(Error::LimitExceeded {
                what: format!("weighted divisor rates (budget {MAX_RATE_TOTAL})"),
            });
        }
        rates.push(rk as i64);
    }
    Ok(rates)
}

/// Log-canonical threshold of the weighted germ: `min_k (c_k + 1) / r_k`.
///
/// This is the smallest jumping number on every corpus germ with the weight
/// vectors exercised by the tests (the threshold stays below `1/max(w_i)`
/// there, so no whole-power reduction interferes).
pub fn lct(data: &ResolutionData, w: &WeightVector) -> Result<Rat> {
    let rates = divisor_rates(data, w)?;
    Ok((0..data.n_divisors())
        .map(|k| {
            Rat::new(
                BigInt::from(data.canonical[k] + 1),
                BigInt::from(rates[k]),
            )
        })
        .min()
        .expect("a resolution has at least one divisor"))
}

/// One spectrum entry: a rational `value` in `(0,1)` with a positive
/// `multiplicity`. Which mirrored coordinate `value` uses (ξ or `s = 1−ξ`)
/// is documented on each producing function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpectrumElement {
    /// Location of the entry, in `(0, 1)`.
    pub value: Rat,
    /// Codimension jump of the associated ideal pair at this location.
    pub multiplicity: u64,
}

impl SpectrumElement {
    /// The companion value in the `(-1, 0)` window: `value − 1`.
    pub fn mirrored(&self) -> Rat {
        &self.value - Rat::one()
    }
}

/// The ideal handles just at and just below a weighted exponent ξ, after
/// whole powers of every branch have been factored out (see the module
/// docs). `shift_k = Σ_i j_i · mult[i][k]` with `j_i` the left-continuous
/// integer part of `ξ·w_i` (at an integer exponent the reduced value is 1,
/// not 0, matching the limit from below).
fn reduced_pair(
    data: &ResolutionData,
    rates: &[i64],
    w: &WeightVector,
    xi: &Rat,
) -> Result<(IdealHandle, IdealHandle)> {
    let n = data.n_divisors();
    let mut shift = vec![0i64; n];
    for (i, &wi) in w.weights().iter().enumerate() {
        let ci = xi * Rat::from_integer(BigInt::from(wi));
        let whole = if ci.is_integer() {
            ci.to_integer() - BigInt::one()
        } else {
            ci.floor().to_integer()
        };
        let whole = big_to_i64(whole, "whole-power reduction of a branch exponent")?;
        if whole > 0 {
            for (k, s) in shift.iter_mut().enumerate() {
                *s += whole * data.mult[i][k];
            }
        }
    }
    let mut cur = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    for k in 0..n {
        let t = xi * Rat::from_integer(BigInt::from(rates[k]));
        let fl = big_to_i64(t.floor().to_integer(), "weighted valuation floor")?;
        let ce = big_to_i64(t.ceil().to_integer(), "weighted valuation ceiling")?;
        cur.push(fl - shift[k] - data.canonical[k]);
        left.push(ce - 1 - shift[k] - data.canonical[k]);
    }
    Ok((
        IdealHandle::from_bounds(&data.lattice, &data.canonical, cur),
        IdealHandle::from_bounds(&data.lattice, &data.canonical, left),
    ))
}

fn big_to_i64(b: BigInt, what: &str) -> Result<i64> {
    i64::try_from(b).map_err(|_| Error::LimitExceeded { what: what.into() })
}

/// Jumping numbers of the weighted germ `f₁^{w₁}···f_r^{w_r}` in `(0, 1)`,
/// in the ξ-convention, sorted increasing.
///
/// Candidates are the rationals with `ξ·r_k` integral for some divisor;
/// a candidate is reported when the whole-power-reduced ideal at ξ differs
/// from the one just below, and the multiplicity is their codimension gap.
pub fn jumping_numbers(
    data: &ResolutionData,
    w: &WeightVector,
) -> Result<Vec<SpectrumElement>> {
    let rates = divisor_rates(data, w)?;
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    for &rk in &rates {
        for m in 1..rk {
            candidates.insert(Rat::new(BigInt::from(m), BigInt::from(rk)));
        }
    }
    let mut out = Vec::new();
    for xi in candidates {
        let (cur, left) = reduced_pair(data, &rates, w, &xi)?;
        if cur != left {
            debug_assert!(
                left.contains(&cur) && cur.codim > left.codim,
                "an exponent increase can only deepen the ideal"
            );
            out.push(SpectrumElement {
                value: xi,
                multiplicity: cur.codim - left.codim,
            });
        }
    }
    Ok(out)
}

/// The spectrum slice along the weight line, in the s-convention
/// (`s = 1 − ξ`), sorted increasing in `s`.
///
/// Every element is verified through an independent route: the wrapped
/// point `(w₁s mod 1, …, w_rs mod 1)` must lie on a face of quasiadjunction
/// whose depth equals the multiplicity. A disagreement raises
/// [`Error::CrossCheck`]; with coprime weights the wrapped point can never
/// be the cube corner for `s ∈ (0,1)`, which is asserted.
pub fn spectrum_line(
    data: &ResolutionData,
    w: &WeightVector,
) -> Result<Vec<SpectrumElement>> {
    let jumps = jumping_numbers(data, w)?;
    let mut out = Vec::with_capacity(jumps.len());
    for jump in jumps.iter().rev() {
        let s = Rat::one() - &jump.value;
        let coords: Vec<Rat> = w
            .weights()
            .iter()
            .map(|&wi| {
                let v = &s * Rat::from_integer(BigInt::from(wi));
                let f = v.floor();
                v - f
            })
            .collect();
        assert!(
            coords.iter().any(|c| !c.is_zero()),
            "coprime weights cannot wrap onto the cube corner inside (0,1)"
        );
        let x = CubePoint::new(coords)?;
        match walls::face_at(data, &x)? {
            Some(face) if face.depth == jump.multiplicity => {}
            Some(face) => {
                return Err(Error::CrossCheck {
                    msg: format!(
                        "spectrum element at s = {s} has multiplicity {} but its wrapped point reports depth {}",
                        jump.multiplicity, face.depth
                    ),
                });
            }
            None => {
                return Err(Error::CrossCheck {
                    msg: format!(
                        "spectrum element at s = {s} is not on any face of quasiadjunction"
                    ),
                });
            }
        }
        out.push(SpectrumElement {
            value: s,
            multiplicity: jump.multiplicity,
        });
    }
    Ok(out)
}

/// Spectrum along the diagonal plus the number of distinct faces the open
/// diagonal meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalReport {
    /// [`spectrum_line`] with all-ones weights, s-convention.
    pub elements: Vec<SpectrumElement>,
    /// Distinct faces of quasiadjunction met by `(t, …, t)` for `t ∈ (0,1)`.
    pub faces_met: usize,
}

/// The diagonal slice: [`spectrum_line`] with weights `(1, …, 1)`,
/// together with the count of distinct faces met by the open diagonal.
///
/// For one or two branches the count dedupes the full face arrangement by
/// wall (coefficient vector and level); for three or more branches — where
/// the arrangement is not enumerated — it counts the crossing points of
/// the open diagonal instead.
pub fn spectrum_diagonal(data: &ResolutionData) -> Result<DiagonalReport> {
    let r = data.n_branches();
    let w = WeightVector::ones(r);
    let elements = spectrum_line(data, &w)?;
    let faces_met = if r <= 2 {
        let mut met: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
        for face in walls::faces(data)? {
            if record_meets_diagonal(&face) {
                met.insert((face.coeffs.clone(), face.level));
            }
        }
        met.len()
    } else {
        diagonal_crossings(data)?.len()
    };
    Ok(DiagonalReport { elements, faces_met })
}

/// Whether the diagonal point of the record's wall lies in the record's
/// closed hull. The crossing parameter of `Σ m_i x_i = n` with the diagonal
/// is `t* = n / Σ m_i`; a record endpoint shared with a neighboring record
/// on the same wall lies on the face either way, so the closed hull is the
/// right test.
fn record_meets_diagonal(face: &walls::Face) -> bool {
    let total: i64 = face.coeffs.iter().sum();
    let tstar = Rat::new(BigInt::from(face.level), BigInt::from(total));
    let a = Rat::from_integer(BigInt::from(0));
    debug_assert!(tstar > a && !face.start.is_empty());
    let (lo, hi) = if face.start[0] <= face.end[0] {
        (&face.start[0], &face.end[0])
    } else {
        (&face.end[0], &face.start[0])
    };
    // For a single branch the record is a point and the wall passes
    // through it exactly; for two branches membership in the x₁-span is
    // membership in the segment, since both lie on the same line.
    *lo <= tstar && tstar <= *hi
}

fn diagonal_crossings(data: &ResolutionData) -> Result<Vec<walls::LineCrossing>> {
    let r = data.n_branches();
    let base = CubePoint::new(vec![Rat::zero(); r])?;
    let dir = vec![Rat::one(); r];
    Ok(walls::faces_on_line(data, &base, &dir)?
        .into_iter()
        .filter(|c| c.t > Rat::zero() && c.t < Rat::one())
        .collect())
}

/// Result of [`milnor_consistency`]: the Milnor number measured two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorReport {
    /// From the blowup trace: `μ = 2δ − r + 1` with
    /// `δ = Σ m_p(m_p − 1)/2` over infinitely near points.
    pub mu_direct: u64,
    /// From the arrangement: `(r − 1) + 2·Σ` of depths over faces met by
    /// the open diagonal.
    pub mu_formula: u64,
    /// Whether the two agree.
    pub matches: bool,
    /// The formula identifies the measured depth with the holomorphic part
    /// of a character decomposition; that identification is an assumption
    /// of the comparison, not something this crate verifies. A mismatch is
    /// informative, not an error.
    pub weight_zero_assumed: bool,
}

/// Compares the Milnor number from the blowup trace against the
/// face-counting formula `μ = (r − 1) + 2·Σ depth(F)` over faces met by
/// the open diagonal.
///
/// For one or two branches the sum runs over distinct walls of the face
/// arrangement, each weighted by the maximal depth among its records
/// meeting the diagonal; for three or more branches it sums the depths at
/// the crossing points of the open diagonal.
pub fn milnor_consistency(
    data: &ResolutionData,
    trace: &BlowupTrace,
) -> Result<MilnorReport> {
    let r = data.n_branches();
    let mu_direct = milnor_number(trace, r);
    let depth_sum: u64 = if r <= 2 {
        let mut per_wall: BTreeMap<(Vec<i64>, i64), u64> = BTreeMap::new();
        for face in walls::faces(data)? {
            if record_meets_diagonal(&face) {
                let entry = per_wall
                    .entry((face.coeffs.clone(), face.level))
                    .or_insert(0);
                *entry = (*entry).max(face.depth);
            }
        }
        per_wall.values().sum()
    } else {
        diagonal_crossings(data)?
            .iter()
            .map(|c| c.face.depth)
            .sum()
    };
    let mu_formula = (r as u64 - 1) + 2 * depth_sum;
    Ok(MilnorReport {
        mu_direct,
        mu_formula,
        matches: mu_direct == mu_formula,
        weight_zero_assumed: true,
    })
}

/// A linear factor `Σ m_i·s_i + k` forced inside the Bernstein ideal of
/// the germ's branches, derived from a top-dimensional face
/// `Σ m_i x_i = n` by `k = Σ m_i − n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BernsteinFactor {
    /// The positive coefficients `m_i`, one per branch.
    pub coefficients: Vec<i64>,
    /// The positive constant term `k`.
    pub constant: i64,
}

impl fmt::Display for BernsteinFactor {
    /// Renders as `6*s1+4*s2+5`; a coefficient of 1 drops the `1*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &m) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if m == 1 {
                write!(f, "s{}", i + 1)?;
            } else {
                write!(f, "{m}*s{}", i + 1)?;
            }
        }
        write!(f, "+{}", self.constant)
    }
}

/// The Bernstein hyperplane factors forced by the face arrangement:
/// one factor `Σ m_i s_i + (Σ m_i − n)` per distinct wall `Σ m_i x_i = n`
/// carrying a face, duplicates merged, sorted.
///
/// Only defined through the full arrangement, hence one or two branches;
/// for more branches supply the walls to [`bernstein_from_hyperplanes`].
pub fn bernstein_hyperplanes(data: &ResolutionData) -> Result<Vec<BernsteinFactor>> {
    if data.n_branches() > 2 {
        return Err(Error::Unsupported {
            msg: format!(
                "bernstein factors need the full face arrangement, not enumerated for {} branches; \
                 derive the walls by point/line queries and use bernstein_from_hyperplanes",
                data.n_branches()
            ),
        });
    }
    let walls: Vec<(Vec<i64>, i64)> = walls::faces(data)?
        .into_iter()
        .map(|f| (f.coeffs, f.level))
        .collect();
    bernstein_from_hyperplanes(&walls)
}

/// Builds Bernstein factors from explicitly supplied face walls
/// `Σ m_i x_i = n` (as `(coefficients, level)` pairs). Validates that the
/// coefficients are positive and that `0 < n < Σ m_i`, so every constant
/// `k = Σ m_i − n` is positive. Duplicates are merged.
pub fn bernstein_from_hyperplanes(
    walls: &[(Vec<i64>, i64)],
) -> Result<Vec<BernsteinFactor>> {
    let mut violations = Vec::new();
    let mut set: BTreeSet<BernsteinFactor> = BTreeSet::new();
    for (idx, (coeffs, level)) in walls.iter().enumerate() {
        if coeffs.is_empty() {
            violations.push(format!("wall {idx}: empty coefficient vector"));
            continue;
        }
        if coeffs.iter().any(|&m| m < 1) {
            violations.push(format!("wall {idx}: coefficients must be positive"));
            continue;
        }
        let total: i64 = coeffs.iter().sum();
        if *level < 1 || *level >= total {
            violations.push(format!(
                "wall {idx}: level {level} outside (0, {total}) for a face inside the cube"
            ));
            continue;
        }
        set.insert(BernsteinFactor {
            coefficients: coeffs.clone(),
            constant: total - level,
        });
    }
    if !violations.is_empty() {
        return Err(Error::Validation { violations });
    }
    Ok(set.into_iter().collect())
}

/// One factor of a multivariable Alexander polynomial: the cyclotomic-type
/// term `t₁^{m₁}···t_r^{m_r} − ω`, recorded as the exponent vector and the
/// root rendered verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderFactor {
    /// Non-negative exponents `m_i`, one per branch.
    pub exponents: Vec<i64>,
    /// The root ω, carried as display text.
    pub root: String,
}

/// Specializes supplied multivariable Alexander factors along the weight
/// line `t_i = t^{w_i}`: returns `(t - 1)·Π (t^{Σ w_i m_i} − ω)` as text.
/// This crate does not compute Alexander polynomials; the factors are the
/// caller's.
pub fn alexander_specialization(
    data: &ResolutionData,
    w: &WeightVector,
    factors: &[AlexanderFactor],
) -> Result<String> {
    if w.len() != data.n_branches() {
        return Err(Error::InvalidWeights {
            msg: format!(
                "expected {} weights (one per branch), found {}",
                data.n_branches(),
                w.len()
            ),
        });
    }
    let mut violations = Vec::new();
    let mut rendered = String::from("(t - 1)");
    for (idx, factor) in factors.iter().enumerate() {
        if factor.exponents.len() != w.len() {
            violations.push(format!(
                "factor {idx}: expected {} exponents, found {}",
                w.len(),
                factor.exponents.len()
            ));
            continue;
        }
        if factor.exponents.iter().any(|&m| m < 0) {
            violations.push(format!("factor {idx}: exponents must be non-negative"));
            continue;
        }
        let e: i128 = factor
            .exponents
            .iter()
            .zip(w.weights())
            .map(|(&m, &wi)| m as i128 * wi as i128)
            .sum();
        if e < 1 {
            violations.push(format!(
                "factor {idx}: specialized exponent {e} must be positive"
            ));
            continue;
        }
        if e == 1 {
            rendered.push_str(&format!("(t - {})", factor.root));
        } else {
            rendered.push_str(&format!("(t^{e} - {})", factor.root));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Validation { violations });
    }
    Ok(rendered)
}
