//! Wall-and-face geometry of quasiadjunction ideals on the unit cube.
//!
//! A germ with `r` branches is studied through the half-open cube
//! `U = [0, 1)^r`. A point `x` in `U` names the exponent vector
//! `c = 1 - x`, and two complete ideals are attached to it via the
//! divisor totals `t_k(x) = sum_i (1 - x_i) * mult[i][k]`:
//!
//! * [`quasiadjunction_ideal`] — per-divisor bounds `floor(t_k) - canonical_k`,
//! * [`log_quasiadjunction_ideal`] — bounds `ceil(t_k) - 1 - canonical_k`.
//!
//! The second is the limit of the first along the `+diag` direction, so the
//! pair describes the two sides of any wall through `x`. A point lies on a
//! *face* when the two ideals differ; the codimension gap is the face depth
//! ([`face_at`]). Candidate walls are the finitely many hyperplanes
//! `sum_i mult[i][k] * x_i = n` with `0 < n < sum_i mult[i][k]`
//! ([`wall_candidates`]); jumps can only happen there.
//!
//! For one or two branches, [`faces`] assembles the complete face list of
//! the cube arrangement. For more branches the arrangement is not
//! enumerated; use [`face_at`] or [`faces_on_line`] point and line queries.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rat_ceil, rat_floor, rat_is_integer, rat_to_string, Rat};
use crate::lattice::IdealHandle;
use crate::resolution::ResolutionData;
use crate::{Error, Result};

/// Largest number of wall crossings a single line query will enumerate.
const MAX_LINE_CANDIDATES: i64 = 1_000_000;

/// A maximal run of wall segments sharing one ideal pair: start, end, face.
type SegmentRun = ((Rat, Rat), (Rat, Rat), PointFace);

/// A point of the half-open unit cube `[0, 1)^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubePoint {
    coords: Vec<Rat>,
}

impl CubePoint {
    /// Validates that every coordinate lies in `[0, 1)`.
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidCubePoint {
                msg: "point needs at least one coordinate".into(),
            });
        }
        for (i, c) in coords.iter().enumerate() {
            if c.is_negative() || *c >= Rat::one() {
                return Err(Error::InvalidCubePoint {
                    msg: format!(
                        "coordinate {} is {}, outside [0, 1)",
                        i + 1,
                        rat_to_string(c)
                    ),
                });
            }
        }
        Ok(CubePoint { coords })
    }

    /// Number of coordinates (one per branch).
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Coordinatewise `1 - x mod 1`: nonzero coordinates reflect to
    /// `1 - x_i`, zero coordinates stay zero.
    pub fn conjugate(&self) -> CubePoint {
        CubePoint {
            coords: self
                .coords
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        Rat::zero()
                    } else {
                        Rat::one() - c
                    }
                })
                .collect(),
        }
    }
}

/// One candidate wall `sum_i coeffs[i] * x_i = level`, recorded with the
/// divisor whose branch multiplicities supply the coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCandidate {
    /// Divisor index (0-based) contributing this hyperplane.
    pub divisor: usize,
    /// `coeffs[i] = mult[i][divisor]`.
    pub coeffs: Vec<i64>,
    /// Integer right-hand side, `0 < level < sum(coeffs)`.
    pub level: i64,
}

impl WallCandidate {
    /// The hyperplane with coefficients divided by their common gcd;
    /// identifies the geometric wall independently of the divisor label.
    pub fn primitive_key(&self) -> (Vec<i64>, i64) {
        primitive_form(&self.coeffs, self.level)
    }
}

fn primitive_form(coeffs: &[i64], level: i64) -> (Vec<i64>, i64) {
    let mut g = level.unsigned_abs();
    for &c in coeffs {
        g = gcd_u64(g, c.unsigned_abs());
    }
    let g = g.max(1) as i64;
    (coeffs.iter().map(|&c| c / g).collect(), level / g)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// All candidate walls, grouped by divisor in index order and by level
/// within a divisor. Only these hyperplanes can carry faces.
pub fn wall_candidates(data: &ResolutionData) -> Vec<WallCandidate> {
    wall_candidates_filtered(data, false)
}

/// Candidate walls from every divisor, or from rupture divisors only.
pub fn wall_candidates_filtered(data: &ResolutionData, rupture_only: bool) -> Vec<WallCandidate> {
    let keep: Vec<bool> = if rupture_only {
        let rupture: BTreeSet<usize> = data.rupture().into_iter().collect();
        (0..data.n_divisors()).map(|k| rupture.contains(&k)).collect()
    } else {
        vec![true; data.n_divisors()]
    };
    let mut out = Vec::new();
    for (k, &kept) in keep.iter().enumerate() {
        if !kept {
            continue;
        }
        let coeffs: Vec<i64> = (0..data.n_branches()).map(|i| data.mult[i][k]).collect();
        let total: i64 = coeffs.iter().sum();
        for level in 1..total {
            out.push(WallCandidate {
                divisor: k,
                coeffs: coeffs.clone(),
                level,
            });
        }
    }
    out
}

/// `t_k = sum_i exponents[i] * mult[i][k]` for every divisor `k`.
fn weighted_totals(data: &ResolutionData, exponents: &[Rat]) -> Vec<Rat> {
    (0..data.n_divisors())
        .map(|k| {
            exponents
                .iter()
                .enumerate()
                .map(|(i, e)| e * Rat::from_integer(BigInt::from(data.mult[i][k])))
                .sum()
        })
        .collect()
}

fn big_to_i64(b: BigInt, what: &str) -> Result<i64> {
    i64::try_from(b).map_err(|_| Error::LimitExceeded { what: what.into() })
}

fn handle_from_bounds(data: &ResolutionData, bounds: Vec<i64>) -> IdealHandle {
    IdealHandle::from_bounds(&data.lattice, &data.canonical, bounds)
}

/// The complete ideal with per-divisor bounds `floor(t_k) - canonical_k`
/// where `t_k = sum_i exponents[i] * mult[i][k]`. Exponents must be
/// non-negative rationals, one per branch.
pub fn mmi_bounds(data: &ResolutionData, exponents: &[Rat]) -> Result<IdealHandle> {
    if exponents.len() != data.n_branches() {
        return Err(Error::InvalidWeights {
            msg: format!(
                "expected {} exponents, got {}",
                data.n_branches(),
                exponents.len()
            ),
        });
    }
    if let Some((i, e)) = exponents.iter().enumerate().find(|(_, e)| e.is_negative()) {
        return Err(Error::InvalidWeights {
            msg: format!("exponent {} is negative ({})", i + 1, rat_to_string(e)),
        });
    }
    let totals = weighted_totals(data, exponents);
    let mut bounds = Vec::with_capacity(totals.len());
    for (k, t) in totals.iter().enumerate() {
        bounds.push(big_to_i64(rat_floor(t), "ideal bound magnitude")? - data.canonical[k]);
    }
    Ok(handle_from_bounds(data, bounds))
}

fn cube_exponents(data: &ResolutionData, x: &CubePoint) -> Result<Vec<Rat>> {
    if x.dim() != data.n_branches() {
        return Err(Error::InvalidCubePoint {
            msg: format!(
                "point has {} coordinates but the germ has {} branches",
                x.dim(),
                data.n_branches()
            ),
        });
    }
    Ok(x.coords().iter().map(|c| Rat::one() - c).collect())
}

/// The ideal of quasiadjunction at `x`: [`mmi_bounds`] at exponents `1 - x`.
pub fn quasiadjunction_ideal(data: &ResolutionData, x: &CubePoint) -> Result<IdealHandle> {
    mmi_bounds(data, &cube_exponents(data, x)?)
}

/// The log variant at `x`: per-divisor bounds `ceil(t_k) - 1 - canonical_k`.
/// Always contains [`quasiadjunction_ideal`] at the same point, and equals
/// its limit from the `+diag` side.
pub fn log_quasiadjunction_ideal(data: &ResolutionData, x: &CubePoint) -> Result<IdealHandle> {
    let totals = weighted_totals(data, &cube_exponents(data, x)?);
    let mut bounds = Vec::with_capacity(totals.len());
    for (k, t) in totals.iter().enumerate() {
        bounds.push(big_to_i64(rat_ceil(t), "ideal bound magnitude")? - 1 - data.canonical[k]);
    }
    Ok(handle_from_bounds(data, bounds))
}

/// Everything [`face_at`] learns about one point of the cube.
#[derive(Clone, Debug, PartialEq)]
pub struct PointFace {
    /// `codim(ideal) - codim(log_ideal)`, at least 1 for a reported face.
    pub depth: u64,
    /// The quasiadjunction ideal at the point (the `-diag` side).
    pub ideal: IdealHandle,
    /// The log variant (the `+diag` side).
    pub log_ideal: IdealHandle,
    /// Candidate walls passing through the point, in divisor order.
    pub hyperplanes: Vec<WallCandidate>,
}

/// Depth of the face through `x`, or 0 when the two ideals agree.
pub fn depth_log(data: &ResolutionData, x: &CubePoint) -> Result<u64> {
    Ok(face_at(data, x)?.map_or(0, |pf| pf.depth))
}

/// Tests whether `x` lies on a face: compares the quasiadjunction ideal
/// with its log variant and reports the codimension gap together with the
/// candidate walls through the point. `None` when the ideals coincide.
pub fn face_at(data: &ResolutionData, x: &CubePoint) -> Result<Option<PointFace>> {
    let exps = cube_exponents(data, x)?;
    let totals = weighted_totals(data, &exps);

    let mut lower = Vec::with_capacity(totals.len());
    let mut upper = Vec::with_capacity(totals.len());
    for (k, t) in totals.iter().enumerate() {
        lower.push(big_to_i64(rat_floor(t), "ideal bound magnitude")? - data.canonical[k]);
        upper.push(big_to_i64(rat_ceil(t), "ideal bound magnitude")? - 1 - data.canonical[k]);
    }
    let ideal = handle_from_bounds(data, lower);
    let log_ideal = handle_from_bounds(data, upper);
    debug_assert!(log_ideal.contains(&ideal));
    if ideal == log_ideal {
        return Ok(None);
    }
    let depth = ideal.codim - log_ideal.codim;

    let mut hyperplanes = Vec::new();
    for (k, t) in totals.iter().enumerate() {
        if !rat_is_integer(t) {
            continue;
        }
        let coeffs: Vec<i64> = (0..data.n_branches()).map(|i| data.mult[i][k]).collect();
        let total: i64 = coeffs.iter().sum();
        let level = total - big_to_i64(rat_floor(t), "wall level")?;
        if level > 0 && level < total {
            hyperplanes.push(WallCandidate {
                divisor: k,
                coeffs,
                level,
            });
        }
    }
    Ok(Some(PointFace {
        depth,
        ideal,
        log_ideal,
        hyperplanes,
    }))
}

/// One face point found along a line query.
#[derive(Clone, Debug, PartialEq)]
pub struct LineCrossing {
    /// Line parameter of the crossing: the point is `base + t * dir`.
    pub t: Rat,
    pub point: CubePoint,
    pub face: PointFace,
}

/// Walks the full line `base + t * dir` (any sign of `t`) through the
/// half-open cube and reports every point where [`face_at`] fires, ordered
/// by `t`. Candidate parameters come from divisors whose total `t_k` varies
/// along the line; a line lying entirely inside a wall only reports the
/// crossings of further walls.
pub fn faces_on_line(
    data: &ResolutionData,
    base: &CubePoint,
    dir: &[Rat],
) -> Result<Vec<LineCrossing>> {
    let r = data.n_branches();
    if base.dim() != r {
        return Err(Error::InvalidCubePoint {
            msg: format!(
                "base point has {} coordinates but the germ has {} branches",
                base.dim(),
                r
            ),
        });
    }
    if dir.len() != r || dir.iter().all(Zero::is_zero) {
        return Err(Error::InvalidWeights {
            msg: "direction must be a nonzero vector with one entry per branch".into(),
        });
    }

    // Parameter interval where base + t*dir stays inside [0, 1)^r.
    // Each bound records its value and whether the inequality is strict.
    let mut lo: Option<(Rat, bool)> = None;
    let mut hi: Option<(Rat, bool)> = None;
    let tighten_lo = |cur: &mut Option<(Rat, bool)>, v: Rat, strict: bool| {
        let replace = match cur {
            None => true,
            Some((old, old_strict)) => v > *old || (v == *old && strict && !*old_strict),
        };
        if replace {
            *cur = Some((v, strict));
        }
    };
    let tighten_hi = |cur: &mut Option<(Rat, bool)>, v: Rat, strict: bool| {
        let replace = match cur {
            None => true,
            Some((old, old_strict)) => v < *old || (v == *old && strict && !*old_strict),
        };
        if replace {
            *cur = Some((v, strict));
        }
    };
    for (d, b) in dir.iter().zip(base.coords()) {
        if d.is_zero() {
            continue;
        }
        // 0 <= b + t*d (closed) and b + t*d < 1 (strict).
        let at_zero = -b / d;
        let at_one = (Rat::one() - b) / d;
        if d.is_positive() {
            tighten_lo(&mut lo, at_zero, false);
            tighten_hi(&mut hi, at_one, true);
        } else {
            tighten_hi(&mut hi, at_zero, false);
            tighten_lo(&mut lo, at_one, true);
        }
    }
    let (lo, lo_strict) = lo.expect("some direction entry is nonzero");
    let (hi, hi_strict) = hi.expect("some direction entry is nonzero");
    if lo > hi || (lo == hi && (lo_strict || hi_strict)) {
        return Ok(Vec::new());
    }
    let in_interval = |t: &Rat| -> bool {
        (t > &lo || (!lo_strict && t == &lo)) && (t < &hi || (!hi_strict && t == &hi))
    };

    // Candidate parameters: t_k(base + t*dir) = start_k - t * slope_k hits
    // an integer for some divisor k with nonzero slope.
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    let base_exps: Vec<Rat> = base.coords().iter().map(|c| Rat::one() - c).collect();
    let starts = weighted_totals(data, &base_exps);
    for (k, start) in starts.iter().enumerate() {
        let slope: Rat = dir
            .iter()
            .enumerate()
            .map(|(i, d)| d * Rat::from_integer(BigInt::from(data.mult[i][k])))
            .sum();
        if slope.is_zero() {
            continue;
        }
        let v_lo = start - &lo * &slope;
        let v_hi = start - &hi * &slope;
        let (v_min, v_max) = if v_lo <= v_hi {
            (v_lo, v_hi)
        } else {
            (v_hi, v_lo)
        };
        let m_min = big_to_i64(rat_ceil(&v_min), "line candidate range")?;
        let m_max = big_to_i64(rat_floor(&v_max), "line candidate range")?;
        if m_max - m_min > MAX_LINE_CANDIDATES {
            return Err(Error::LimitExceeded {
                what: "wall crossings along one line".into(),
            });
        }
        for m in m_min..=m_max {
            let t = (start - Rat::from_integer(BigInt::from(m))) / &slope;
            if in_interval(&t) {
                candidates.insert(t);
            }
        }
    }

    let mut out = Vec::new();
    for t in candidates {
        let coords: Vec<Rat> = base
            .coords()
            .iter()
            .zip(dir)
            .map(|(b, d)| b + &t * d)
            .collect();
        let point = CubePoint::new(coords).expect("interval keeps the point inside the cube");
        if let Some(face) = face_at(data, &point)? {
            out.push(LineCrossing { t, point, face });
        }
    }
    Ok(out)
}

/// A maximal piece of a face of the cube arrangement (one or two
/// branches): a run of jump segments on a common hyperplane sharing one
/// ideal pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Face {
    /// Representative divisor whose multiplicity column names the
    /// hyperplane; rupture divisors are preferred.
    pub divisor: usize,
    /// Hyperplane `sum_i coeffs[i] * x_i = level` with
    /// `coeffs[i] = mult[i][divisor]`.
    pub coeffs: Vec<i64>,
    /// Integer right-hand side.
    pub level: i64,
    /// Face dimension: number of branches minus one.
    pub dim: usize,
    /// Endpoints ordered by first coordinate (equal for point faces).
    pub start: Vec<Rat>,
    pub end: Vec<Rat>,
    /// Whether each endpoint belongs to the face (same ideal pair and
    /// inside the half-open cube).
    pub start_closed: bool,
    pub end_closed: bool,
    /// Common codimension gap along the face.
    pub depth: u64,
    /// Quasiadjunction ideal on the face (the `-diag` side of the wall).
    pub ideal_below: IdealHandle,
    /// Log variant (the `+diag` side); strictly contains `ideal_below`.
    pub ideal_above: IdealHandle,
}

/// Complete face list of the cube arrangement. Supported for germs with
/// one or two branches; larger germs answer point and line queries only.
pub fn faces(data: &ResolutionData) -> Result<Vec<Face>> {
    faces_with_candidates(data, false)
}

/// Like [`faces`], optionally restricting candidate walls to rupture
/// divisors (which carry every actual face).
pub fn faces_with_candidates(data: &ResolutionData, rupture_only: bool) -> Result<Vec<Face>> {
    let candidate_count: i128 = data
        .mult
        .iter()
        .flat_map(|row| row.iter().map(|&a| i128::from(a)))
        .sum();
    if candidate_count > 2_000_000 {
        return Err(Error::LimitExceeded {
            what: "candidate wall count".into(),
        });
    }
    match data.n_branches() {
        1 => faces_dim_one(data, rupture_only),
        2 => faces_dim_two(data, rupture_only),
        r => Err(Error::Unsupported {
            msg: format!(
                "face arrangement enumeration covers one or two branches, not {r}; \
                 use point or line queries"
            ),
        }),
    }
}

/// Geometric lines (deduplicated candidates) with a deterministic
/// representative: rupture divisors first, then lowest divisor index.
fn representative_walls(data: &ResolutionData, rupture_only: bool) -> Vec<WallCandidate> {
    let rupture: BTreeSet<usize> = data.rupture().into_iter().collect();
    let mut by_key: BTreeMap<(Vec<i64>, i64), WallCandidate> = BTreeMap::new();
    for cand in wall_candidates_filtered(data, rupture_only) {
        let key = cand.primitive_key();
        match by_key.get_mut(&key) {
            None => {
                by_key.insert(key, cand);
            }
            Some(old) => {
                let old_rank = (!rupture.contains(&old.divisor), old.divisor);
                let new_rank = (!rupture.contains(&cand.divisor), cand.divisor);
                if new_rank < old_rank {
                    *old = cand;
                }
            }
        }
    }
    by_key.into_values().collect()
}

fn faces_dim_one(data: &ResolutionData, rupture_only: bool) -> Result<Vec<Face>> {
    let mut out = Vec::new();
    for wall in representative_walls(data, rupture_only) {
        let x = Rat::new(BigInt::from(wall.level), BigInt::from(wall.coeffs[0]));
        let point = CubePoint::new(vec![x.clone()])?;
        if let Some(pf) = face_at(data, &point)? {
            out.push(Face {
                divisor: wall.divisor,
                coeffs: wall.coeffs,
                level: wall.level,
                dim: 0,
                start: vec![x.clone()],
                end: vec![x],
                start_closed: true,
                end_closed: true,
                depth: pf.depth,
                ideal_below: pf.ideal,
                ideal_above: pf.log_ideal,
            });
        }
    }
    Ok(out)
}

/// Intersection of the closed square `[0, 1]^2` with the line
/// `m1*x + m2*y = n` (`m1, m2 >= 1`), as vertices ordered by `x`.
fn square_boundary_points(coeffs: &[i64], level: i64) -> Vec<(Rat, Rat)> {
    let m1 = Rat::from_integer(BigInt::from(coeffs[0]));
    let m2 = Rat::from_integer(BigInt::from(coeffs[1]));
    let n = Rat::from_integer(BigInt::from(level));
    let unit = Rat::one();
    let mut pts = BTreeSet::new();
    // y = 0 and y = 1 edges.
    for y in [Rat::zero(), unit.clone()] {
        let x = (&n - &y * &m2) / &m1;
        if !x.is_negative() && x <= unit {
            pts.insert((x, y));
        }
    }
    // x = 0 and x = 1 edges.
    for x in [Rat::zero(), unit.clone()] {
        let y = (&n - &x * &m1) / &m2;
        if !y.is_negative() && y <= unit {
            pts.insert((x, y));
        }
    }
    pts.into_iter().collect()
}

/// Unique intersection point of two non-parallel lines, if it lies in the
/// closed unit square.
fn line_intersection(a: &WallCandidate, b: &WallCandidate) -> Option<(Rat, Rat)> {
    let det = i128::from(a.coeffs[0]) * i128::from(b.coeffs[1])
        - i128::from(a.coeffs[1]) * i128::from(b.coeffs[0]);
    if det == 0 {
        return None;
    }
    let det = Rat::from_integer(BigInt::from(det));
    let x_num = i128::from(a.level) * i128::from(b.coeffs[1])
        - i128::from(a.coeffs[1]) * i128::from(b.level);
    let y_num = i128::from(a.coeffs[0]) * i128::from(b.level)
        - i128::from(a.level) * i128::from(b.coeffs[0]);
    let x = Rat::from_integer(BigInt::from(x_num)) / &det;
    let y = Rat::from_integer(BigInt::from(y_num)) / det;
    let unit = Rat::one();
    if !x.is_negative() && x <= unit && !y.is_negative() && y <= unit {
        Some((x, y))
    } else {
        None
    }
}

fn faces_dim_two(data: &ResolutionData, rupture_only: bool) -> Result<Vec<Face>> {
    let walls = representative_walls(data, rupture_only);
    let mut out = Vec::new();
    for wall in &walls {
        // Vertices: square boundary plus crossings with the other walls.
        let mut vertices: BTreeSet<(Rat, Rat)> =
            square_boundary_points(&wall.coeffs, wall.level).into_iter().collect();
        if vertices.len() < 2 {
            continue;
        }
        for other in &walls {
            if other.primitive_key() == wall.primitive_key() {
                continue;
            }
            if let Some(p) = line_intersection(wall, other) {
                vertices.insert(p);
            }
        }
        let vertices: Vec<(Rat, Rat)> = vertices.into_iter().collect();

        // Classify each consecutive segment by its midpoint.
        struct Edge {
            from: (Rat, Rat),
            to: (Rat, Rat),
            face: Option<PointFace>,
        }
        let mut edges = Vec::new();
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        for pair in vertices.windows(2) {
            let mid_x = (&pair[0].0 + &pair[1].0) * &half;
            let mid_y = (&pair[0].1 + &pair[1].1) * &half;
            let mid = CubePoint::new(vec![mid_x, mid_y])
                .expect("segment midpoints are interior to the square");
            edges.push(Edge {
                from: pair[0].clone(),
                to: pair[1].clone(),
                face: face_at(data, &mid)?,
            });
        }

        // Merge consecutive jump segments sharing the ideal pair.
        let mut runs: Vec<SegmentRun> = Vec::new();
        for edge in edges {
            let Some(pf) = edge.face else { continue };
            match runs.last_mut() {
                Some((_, end, prev))
                    if *end == edge.from
                        && prev.ideal == pf.ideal
                        && prev.log_ideal == pf.log_ideal =>
                {
                    *end = edge.to;
                }
                _ => runs.push((edge.from, edge.to, pf)),
            }
        }

        for (from, to, pf) in runs {
            let start_closed = endpoint_closed(data, &from, &pf)?;
            let end_closed = endpoint_closed(data, &to, &pf)?;
            out.push(Face {
                divisor: wall.divisor,
                coeffs: wall.coeffs.clone(),
                level: wall.level,
                dim: 1,
                start: vec![from.0, from.1],
                end: vec![to.0, to.1],
                start_closed,
                end_closed,
                depth: pf.depth,
                ideal_below: pf.ideal,
                ideal_above: pf.log_ideal,
            });
        }
    }
    Ok(out)
}

/// An endpoint belongs to the face exactly when it lies inside the
/// half-open cube and carries the same ideal pair as the run.
fn endpoint_closed(data: &ResolutionData, v: &(Rat, Rat), run: &PointFace) -> Result<bool> {
    let unit = Rat::one();
    if v.0 >= unit || v.1 >= unit {
        return Ok(false);
    }
    let point = CubePoint::new(vec![v.0.clone(), v.1.clone()])?;
    let ideal = quasiadjunction_ideal(data, &point)?;
    let log_ideal = log_quasiadjunction_ideal(data, &point)?;
    Ok(ideal == run.ideal && log_ideal == run.log_ideal)
}

/// Sum of the face depths at `x` and at its conjugate point, the quantity
/// controlled by the branched-cover Hodge decomposition. Errors when some
/// coordinate is zero (the character is trivial on that branch); a
/// self-conjugate point (all coordinates 1/2) is counted once.
pub fn character_total_depth(data: &ResolutionData, x: &CubePoint) -> Result<u64> {
    if x.coords().iter().any(Zero::is_zero) {
        return Err(Error::Unsupported {
            msg: "total depth needs a character that is nontrivial on every branch".into(),
        });
    }
    let own = depth_log(data, x)?;
    let conj = x.conjugate();
    if conj == *x {
        Ok(own)
    } else {
        Ok(own + depth_log(data, &conj)?)
    }
}
