//! The blowup engine: iterated point blowups until simple normal crossings.
//!
//! Working data is a queue of *sites*: points on the evolving surface given
//! in local coordinates `(u, v)` in which every exceptional divisor through
//! the point is a coordinate axis. Blowing up a site creates one exceptional
//! divisor and up to `deg + 1` child sites, one per tangent direction of the
//! strict transforms through the point:
//!
//! * finite direction `t`: `(u, v) = (u', u'(v' + t))`,
//! * vertical direction:  `(u, v) = (u'v', u')`.
//!
//! In every child chart the new divisor is the axis `{u = 0}`; the previous
//! divisor through the child (if any) is the axis `{v = 0}`.

use super::ResolutionData;
use crate::algebra::{BiPoly, GermSpec, Rat};
use crate::lattice::IntersectionMatrix;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Cap on the number of blowup centers.
pub const MAX_CENTERS: usize = 10_000;
/// Cap on the term count of any strict transform.
const MAX_TRANSFORM_TERMS: usize = 100_000;
/// Cap on the total degree of an input factor.
const MAX_FACTOR_DEGREE: u32 = 512;

/// How a center's chart was reached from its parent center's chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The first center: the origin in the germ's own coordinates.
    Origin,
    /// Finite direction `t`.
    Finite(Rat),
    /// The vertical direction.
    Vertical,
}

/// One blowup center, enough to replay transforms of arbitrary germs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterRecord {
    /// Center whose blowup created this center's site.
    pub parent: Option<usize>,
    /// Chart direction from the parent center to this site.
    pub direction: Direction,
    /// Divisors through the center (the new divisor is proximate to these).
    pub prox: Vec<usize>,
    /// Multiplicity of each branch's strict transform at the center.
    pub branch_mults: Vec<i64>,
}

/// The full sequence of blowup centers of a resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupTrace {
    pub centers: Vec<CenterRecord>,
}

struct Site {
    /// Divisor forming the `{u = 0}` axis, if any.
    div_u: Option<usize>,
    /// Divisor forming the `{v = 0}` axis, if any.
    div_v: Option<usize>,
    /// Center whose blowup created this site.
    parent: Option<usize>,
    /// Chart direction from the parent center.
    direction: Direction,
    /// Strict transforms through the site: (branch index, local equation).
    factors: Vec<(usize, BiPoly)>,
}

/// Key ordering child sites deterministically: finite directions by
/// increasing `t`, then the vertical direction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum DirKey {
    Finite(Rat),
    Vertical,
}

fn site_needs_blowup(site: &Site) -> bool {
    let divisors = usize::from(site.div_u.is_some()) + usize::from(site.div_v.is_some());
    if site.factors.len() >= 2 {
        return true;
    }
    let (_, f) = &site.factors[0];
    let m = f.mult_at_origin().expect("site factors vanish at origin");
    if m >= 2 {
        return true;
    }
    if divisors == 2 {
        return true;
    }
    // One divisor, one smooth branch: blow up exactly when the branch is
    // tangent to the divisor axis.
    debug_assert_eq!(divisors, 1);
    let tangent_vertical = f.coeff(0, 1).is_zero(); // tangent line is {u = 0}
    if site.div_u.is_some() {
        tangent_vertical
    } else {
        !tangent_vertical
    }
}

/// Computes an embedded resolution of the germ by iterated point blowups.
///
/// Requirements on the input, each reported by a dedicated error:
/// * every factor is squarefree ([`Error::NonReduced`]);
/// * no two factors share a branch ([`Error::SharedBranch`]);
/// * every factor is a single branch ([`Error::ReducibleFactor`]);
/// * all blowup centers have rational coordinates
///   ([`Error::IrrationalCenter`]).
pub fn resolve_embedded(spec: &GermSpec) -> Result<(ResolutionData, BlowupTrace)> {
    let r = spec.num_factors();
    for (i, f) in spec.factors.iter().enumerate() {
        if let Some(d) = f.degree() {
            if d > MAX_FACTOR_DEGREE {
                return Err(Error::LimitExceeded {
                    what: format!(
                        "factor {} has total degree above {MAX_FACTOR_DEGREE}",
                        i + 1
                    ),
                });
            }
        }
        if !f.is_squarefree() {
            return Err(Error::NonReduced { index: i + 1 });
        }
    }
    for i in 0..r {
        for j in (i + 1)..r {
            let g = spec.factors[i].gcd(&spec.factors[j]);
            if g.degree().is_some_and(|d| d >= 1) {
                return Err(Error::SharedBranch {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }

    let mut centers: Vec<CenterRecord> = Vec::new();
    let mut mult: Vec<Vec<i64>> = vec![Vec::new(); r];
    let mut canonical: Vec<i64> = Vec::new();
    let mut selfint: Vec<i64> = Vec::new();
    let mut adjacency: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut attach: Vec<Option<usize>> = vec![None; r];

    let mut queue: VecDeque<Site> = VecDeque::new();
    queue.push_back(Site {
        div_u: None,
        div_v: None,
        parent: None,
        direction: Direction::Origin,
        factors: spec
            .factors
            .iter()
            .cloned()
            .enumerate()
            .collect(),
    });
    let mut first = true;

    while let Some(site) = queue.pop_front() {
        // The origin itself is always blown up once, so that every branch
        // ends attached to an exceptional divisor.
        if !first && !site_needs_blowup(&site) {
            debug_assert_eq!(site.factors.len(), 1);
            let (i, _) = &site.factors[0];
            let d = site
                .div_u
                .or(site.div_v)
                .expect("final sites lie on a divisor");
            debug_assert!(attach[*i].is_none());
            attach[*i] = Some(d);
            continue;
        }
        first = false;

        if centers.len() >= MAX_CENTERS {
            return Err(Error::LimitExceeded {
                what: format!("more than {MAX_CENTERS} blowup centers"),
            });
        }
        let k = centers.len();
        let prox: Vec<usize> = [site.div_u, site.div_v].into_iter().flatten().collect();

        // Valuation column and canonical multiplicity of the new divisor.
        let mut branch_mults = vec![0i64; r];
        for (i, f) in &site.factors {
            branch_mults[*i] = i64::from(f.mult_at_origin().expect("factor vanishes"));
        }
        for i in 0..r {
            let mut a = branch_mults[i];
            for &j in &prox {
                a += mult[i][j];
            }
            mult[i].push(a);
        }
        canonical.push(1 + prox.iter().map(|&j| canonical[j]).sum::<i64>());

        // Lattice update: the new divisor starts at -1 and separates the
        // divisors through the blown-up point.
        selfint.push(-1);
        for &j in &prox {
            selfint[j] -= 1;
        }
        if prox.len() == 2 {
            adjacency.remove(&(prox[0].min(prox[1]), prox[0].max(prox[1])));
        }
        for &j in &prox {
            adjacency.insert((j, k));
        }

        centers.push(CenterRecord {
            parent: site.parent,
            direction: site.direction.clone(),
            prox: prox.clone(),
            branch_mults,
        });

        // Child sites, grouped by tangent direction.
        let mut children: BTreeMap<DirKey, Vec<(usize, BiPoly)>> = BTreeMap::new();
        for (i, f) in &site.factors {
            let m = f.mult_at_origin().expect("factor vanishes");
            let (dir_poly, vertical) = f.direction_polynomial();
            let (roots, residual) = dir_poly.split_rational()?;
            if !residual.is_constant() {
                return Err(Error::IrrationalCenter {
                    poly: residual.display_with_var('t'),
                });
            }
            let directions = roots.len() + usize::from(vertical);
            if directions == 0 {
                unreachable!("a vanishing factor has at least one direction");
            }
            if directions >= 2 {
                return Err(Error::ReducibleFactor { index: i + 1 });
            }
            let (key, child) = if vertical {
                (DirKey::Vertical, f.blowup_vertical().div_x_power(m))
            } else {
                let (t0, _) = &roots[0];
                (
                    DirKey::Finite(t0.clone()),
                    f.blowup_finite(t0).div_x_power(m),
                )
            };
            let child = child.expect("total transform is divisible by the exceptional power");
            if child.num_terms() > MAX_TRANSFORM_TERMS {
                return Err(Error::LimitExceeded {
                    what: "strict transform exceeds the term budget".to_string(),
                });
            }
            debug_assert!(child.vanishes_at_origin());
            children.entry(key).or_default().push((*i, child));
        }
        for (key, factors) in children {
            let (div_v, direction) = match &key {
                DirKey::Finite(t) if t.is_zero() => (site.div_v, Direction::Finite(t.clone())),
                DirKey::Finite(t) => (None, Direction::Finite(t.clone())),
                DirKey::Vertical => (site.div_u, Direction::Vertical),
            };
            queue.push_back(Site {
                div_u: Some(k),
                div_v,
                parent: Some(k),
                direction,
                factors,
            });
        }
    }

    let attach: Vec<usize> = attach
        .into_iter()
        .map(|a| a.expect("every branch attaches to a divisor"))
        .collect();
    let data = ResolutionData {
        mult,
        canonical,
        lattice: IntersectionMatrix::new(selfint, adjacency),
        attach,
        labels: spec.labels.clone(),
    };
    debug_assert!(
        data.violations().is_empty(),
        "engine output failed self-check: {:?}",
        data.violations()
    );
    let trace = BlowupTrace { centers };
    Ok((data, trace))
}

/// Valuation of an arbitrary nonzero germ `phi` along every divisor of the
/// trace, by replaying the strict transforms through the recorded charts.
pub fn divisor_valuations(trace: &BlowupTrace, phi: &BiPoly) -> Vec<i64> {
    assert!(!phi.is_zero(), "valuations of the zero germ are undefined");
    let n = trace.centers.len();
    let mut local: Vec<Option<BiPoly>> = vec![None; n];
    let mut mults = vec![0i64; n];
    let mut e = vec![0i64; n];
    for k in 0..n {
        let rec = &trace.centers[k];
        let strict = match rec.parent {
            None => Some(phi.clone()),
            Some(p) => local[p].as_ref().map(|fp| {
                let total = match &rec.direction {
                    Direction::Finite(t) => fp.blowup_finite(t),
                    Direction::Vertical => fp.blowup_vertical(),
                    Direction::Origin => unreachable!("only the first center is the origin"),
                };
                total
                    .div_x_power(u32::try_from(mults[p]).expect("multiplicity fits"))
                    .expect("total transform is divisible by the exceptional power")
            }),
        };
        if let Some(f) = strict {
            let m = f.mult_at_origin().expect("strict transform is nonzero");
            mults[k] = i64::from(m);
            // Once the strict transform misses a center, it misses all
            // infinitely near points above it.
            local[k] = if m > 0 { Some(f) } else { None };
        }
        e[k] = mults[k] + rec.prox.iter().map(|&j| e[j]).sum::<i64>();
    }
    e
}

/// The delta invariant: sum over all centers of `m (m - 1) / 2`, where `m`
/// is the multiplicity of the full curve's strict transform at the center.
pub fn milnor_delta(trace: &BlowupTrace) -> u64 {
    trace
        .centers
        .iter()
        .map(|c| {
            let m: i64 = c.branch_mults.iter().sum();
            (m * (m - 1) / 2) as u64
        })
        .sum()
}

/// The Milnor number `2 delta - r + 1` of a germ with `r` branches.
pub fn milnor_number(trace: &BlowupTrace, branches: usize) -> u64 {
    let two_delta = 2 * milnor_delta(trace);
    two_delta + 1 - branches as u64
}
