//! Newton polygon of a plane-curve germ at the origin.
//!
//! The polygon is the lower-left boundary of the convex hull of
//! `support(f) + (non-negative quadrant)`. Its compact edges carry the
//! leading behaviour of the germ along each branch direction cluster.

use super::poly::BiPoly;
use super::{rat, Rat};

/// One compact edge of a Newton polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonEdge {
    /// Endpoint with the larger first coordinate.
    pub from: (u32, u32),
    /// Endpoint with the smaller first coordinate.
    pub to: (u32, u32),
    /// Primitive inward normal `(u, v)` with positive entries: the edge lies
    /// on `u*a + v*b = const` and the support lies on or above that line.
    pub normal: (u64, u64),
    /// Slope parameter of the edge: `(from.0 - to.0) / (to.1 - from.1)`.
    pub inclination: Rat,
    /// Coefficients of `f` at the successive lattice points of the edge,
    /// starting at `from`; index `j` is the point `from + j * step` where
    /// `step` is the primitive lattice vector toward `to`.
    pub edge_poly: Vec<Rat>,
}

/// Newton polygon: boundary vertices (first coordinate strictly decreasing)
/// and the compact edges between consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<NewtonEdge>,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Computes the Newton polygon of `f`. The zero polynomial yields an empty
/// polygon; a single monomial yields one vertex and no edges.
pub fn newton_polygon(f: &BiPoly) -> NewtonPolygon {
    // Pareto-minimal support points, sorted by first coordinate ascending:
    // a support point is on the boundary only if no other support point is
    // weakly below-left of it.
    let mut pts: Vec<(u32, u32)> = f.terms().map(|(&k, _)| k).collect();
    pts.sort();
    let mut frontier: Vec<(u32, u32)> = Vec::new();
    let mut best_y: Option<u32> = None;
    for p in pts {
        if best_y.is_none_or(|b| p.1 < b) {
            frontier.push(p);
            best_y = Some(p.1);
        }
    }
    // Descending first coordinate; second coordinate then ascends.
    frontier.reverse();

    // Monotone chain: keep only strictly convex turns toward the origin.
    let cross = |p1: (u32, u32), p2: (u32, u32), p3: (u32, u32)| -> i64 {
        let (dx1, dy1) = (p2.0 as i64 - p1.0 as i64, p2.1 as i64 - p1.1 as i64);
        let (dx2, dy2) = (p3.0 as i64 - p2.0 as i64, p3.1 as i64 - p2.1 as i64);
        dx1 * dy2 - dy1 * dx2
    };
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for p in frontier {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) >= 0 {
            hull.pop();
        }
        hull.push(p);
    }

    let mut edges = Vec::new();
    for w in hull.windows(2) {
        let (from, to) = (w[0], w[1]);
        let dx = from.0 - to.0; // > 0
        let dy = to.1 - from.1; // > 0
        let g = gcd_u32(dx, dy);
        let (nu, nv) = (dy / g, dx / g);
        let step = (dx / g, dy / g);
        let mut edge_poly = Vec::with_capacity(g as usize + 1);
        for j in 0..=g {
            let pt = (from.0 - j * step.0, from.1 + j * step.1);
            edge_poly.push(f.coeff(pt.0, pt.1));
        }
        edges.push(NewtonEdge {
            from,
            to,
            normal: (nu as u64, nv as u64),
            inclination: rat(dx as i64, dy as i64),
            edge_poly,
        });
    }

    NewtonPolygon {
        vertices: hull,
        edges,
    }
}

impl NewtonPolygon {
    /// True when the polynomial had empty support.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl std::fmt::Display for NewtonPolygon {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.vertices.is_empty() {
            return write!(out, "(empty)");
        }
        let verts: Vec<String> = self
            .vertices
            .iter()
            .map(|&(a, b)| format!("({a},{b})"))
            .collect();
        write!(out, "vertices {}", verts.join(" "))?;
        for e in &self.edges {
            write!(
                out,
                "; edge ({},{})-({},{}) normal ({},{}) inclination {}",
                e.from.0,
                e.from.1,
                e.to.0,
                e.to.1,
                e.normal.0,
                e.normal.1,
                super::rat_to_string(&e.inclination)
            )?;
        }
        Ok(())
    }
}
