//! Sparse bivariate polynomials over [`Rat`] and germ specifications.

use super::uni::UniPoly;
use super::{rat_int, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `x`, `y` with exact rational coefficients, stored sparsely.
///
/// Invariant: every stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    // (x exponent, y exponent) -> coefficient
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn var_x() -> Self {
        BiPoly::monomial(1, 0, rat_int(1))
    }

    pub fn var_y() -> Self {
        BiPoly::monomial(0, 1, rat_int(1))
    }

    pub fn monomial(ex: u32, ey: u32, c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(ex, ey, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ex: u32, ey: u32) -> Rat {
        self.terms
            .get(&(ex, ey))
            .cloned()
            .unwrap_or_else(|| rat_int(0))
    }

    /// Adds `c * x^ex * y^ey`, keeping the nonzero-coefficient invariant.
    pub fn add_term(&mut self, ex: u32, ey: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((ex, ey)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(ex, ey), c) in &other.terms {
            out.add_term(ex, ey, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &other.terms {
                out.add_term(ax + bx, ay + by, ac * bc);
            }
        }
        out
    }

    /// Multiplication with a work/size budget; the parser uses this so that
    /// hostile inputs fail with a typed error instead of exhausting memory.
    pub fn mul_checked(&self, other: &BiPoly, max_terms: usize) -> Result<BiPoly> {
        let work = self.num_terms().saturating_mul(other.num_terms());
        if work > max_terms.saturating_mul(64) {
            return Err(Error::LimitExceeded {
                what: format!("product of {} x {} terms", self.num_terms(), other.num_terms()),
            });
        }
        let out = self.mul(other);
        if out.num_terms() > max_terms {
            return Err(Error::LimitExceeded {
                what: format!("polynomial grew to {} terms", out.num_terms()),
            });
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::constant(rat_int(1));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn pow_checked(&self, n: u32, max_terms: usize) -> Result<BiPoly> {
        let mut acc = BiPoly::constant(rat_int(1));
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_checked(&base, max_terms)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_checked(&base, max_terms)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Multiplicity at the origin: the minimal total degree of a term.
    /// `None` for the zero polynomial.
    pub fn mult_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|&(ex, ey)| ex + ey).min()
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(ex, ey)| ex + ey).max()
    }

    /// The terms of minimal total degree (tangent cone equation).
    pub fn leading_form(&self) -> BiPoly {
        let m = match self.mult_at_origin() {
            Some(m) => m,
            None => return BiPoly::zero(),
        };
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(ex, ey), _)| ex + ey == m)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// True when the polynomial vanishes at the origin (no constant term).
    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&(0, 0))
    }

    /// The direction polynomial of the leading form: substituting the
    /// direction parameter `t` for `y/x` in the minimal-degree form gives
    /// `M(t)`, together with a flag for the vertical direction (`x = 0`,
    /// present iff the form has no pure `y^m` term).
    pub fn direction_polynomial(&self) -> (UniPoly, bool) {
        let m = self.mult_at_origin().expect("nonzero polynomial") as usize;
        let mut coeffs = vec![rat_int(0); m + 1];
        for (&(ex, ey), c) in &self.terms {
            if (ex + ey) as usize == m {
                coeffs[ey as usize] = c.clone();
            }
        }
        let vertical = coeffs[m].is_zero();
        (UniPoly::new(coeffs), vertical)
    }

    /// Exact division by `x^m`; `None` if some term has `x`-exponent `< m`.
    pub fn div_x_power(&self, m: u32) -> Option<BiPoly> {
        let mut out = BTreeMap::new();
        for (&(ex, ey), c) in &self.terms {
            if ex < m {
                return None;
            }
            out.insert((ex - m, ey), c.clone());
        }
        Some(BiPoly { terms: out })
    }

    /// Blowup chart with finite direction `t`: substitutes
    /// `x -> x, y -> x * (y + t)`. The exceptional curve is `x = 0` and the
    /// point under study moves to the origin.
    pub fn blowup_finite(&self, t: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ex, ey), c) in &self.terms {
            // c x^ex (x (y+t))^ey = c x^(ex+ey) (y+t)^ey
            let b = ey;
            let mut binom = BigInt::one();
            let mut tpow = rat_int(1); // t^j
            // expand (y+t)^b = sum_j C(b,j) y^(b-j) t^j
            for j in 0..=b {
                let coef = c * Rat::from_integer(binom.clone()) * &tpow;
                out.add_term(ex + ey, b - j, coef);
                // update C(b, j+1) = C(b,j) * (b-j)/(j+1)
                if j < b {
                    binom = binom * BigInt::from(b - j) / BigInt::from(j + 1);
                    tpow *= t;
                }
            }
        }
        out
    }

    /// Blowup chart at the vertical direction: substitutes
    /// `x -> x * y, y -> x`, so the exceptional curve is `x = 0` and the
    /// strict transform of the old `x = 0` axis is `y = 0`.
    pub fn blowup_vertical(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(ex, ey), c)| ((ex + ey, ex), c.clone()))
                .collect(),
        }
    }

    /// General substitution `x -> px, y -> py` (memoized powers).
    pub fn compose(&self, px: &BiPoly, py: &BiPoly) -> BiPoly {
        let mut xpow: Vec<BiPoly> = vec![BiPoly::constant(rat_int(1))];
        let mut ypow: Vec<BiPoly> = vec![BiPoly::constant(rat_int(1))];
        let mut out = BiPoly::zero();
        for (&(ex, ey), c) in &self.terms {
            while xpow.len() <= ex as usize {
                let next = xpow.last().unwrap().mul(px);
                xpow.push(next);
            }
            while ypow.len() <= ey as usize {
                let next = ypow.last().unwrap().mul(py);
                ypow.push(next);
            }
            out = out.add(&xpow[ex as usize].mul(&ypow[ey as usize]).scale(c));
        }
        out
    }

    /// Partial derivatives.
    pub fn d_dx(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ex, ey), c) in &self.terms {
            if ex > 0 {
                out.add_term(ex - 1, ey, c * rat_int(ex as i64));
            }
        }
        out
    }

    pub fn d_dy(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ex, ey), c) in &self.terms {
            if ey > 0 {
                out.add_term(ex, ey - 1, c * rat_int(ey as i64));
            }
        }
        out
    }

    /// View as a polynomial in `x` whose coefficients are polynomials in `y`;
    /// index = `x`-exponent.
    pub fn as_x_coeffs(&self) -> Vec<UniPoly> {
        let dx = self.terms.keys().map(|&(ex, _)| ex).max().map_or(0, |d| d + 1);
        let mut cols: Vec<Vec<Rat>> = vec![Vec::new(); dx as usize];
        for (&(ex, ey), c) in &self.terms {
            let col = &mut cols[ex as usize];
            if col.len() <= ey as usize {
                col.resize(ey as usize + 1, rat_int(0));
            }
            col[ey as usize] = c.clone();
        }
        cols.into_iter().map(UniPoly::new).collect()
    }

    fn from_x_coeffs(cols: &[UniPoly]) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ex, col) in cols.iter().enumerate() {
            for (ey, c) in col.coeffs().iter().enumerate() {
                out.add_term(ex as u32, ey as u32, c.clone());
            }
        }
        out
    }

    /// Greatest common divisor over the rationals (primitive Euclid on
    /// `(Q[y])[x]`); returned up to a rational constant. Used for reducedness
    /// and shared-branch validation.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Ensure both have positive x-degree or handle pure-y cases.
        let a_cols = self.as_x_coeffs();
        let b_cols = other.as_x_coeffs();
        if a_cols.len() == 1 && b_cols.len() == 1 {
            return BiPoly::from_x_coeffs(&[a_cols[0].gcd(&b_cols[0])]);
        }
        if a_cols.len() == 1 {
            // gcd(a(y), b(x,y)) = gcd(a, content_y(b))
            let cont = y_content(&b_cols);
            return BiPoly::from_x_coeffs(&[a_cols[0].gcd(&cont)]);
        }
        if b_cols.len() == 1 {
            let cont = y_content(&a_cols);
            return BiPoly::from_x_coeffs(&[b_cols[0].gcd(&cont)]);
        }
        let cont_a = y_content(&a_cols);
        let cont_b = y_content(&b_cols);
        let cont_gcd = cont_a.gcd(&cont_b);
        let mut a = primitive_part(&a_cols, &cont_a);
        let mut b = primitive_part(&b_cols, &cont_b);
        // Primitive pseudo-remainder loop in x.
        while !b.iter().all(|c| c.is_zero()) {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.iter().all(|c| c.is_zero()) {
                Vec::new()
            } else {
                let cont = y_content(&r);
                primitive_part(&r, &cont)
            };
            if b.is_empty() {
                break;
            }
        }
        let gcd_pp = BiPoly::from_x_coeffs(&a);
        gcd_pp.mul(&BiPoly::from_x_coeffs(&[cont_gcd]))
    }

    /// True when the polynomial has no repeated factor.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        let g1 = self.gcd(&self.d_dx());
        let g = g1.gcd(&self.d_dy());
        g.degree() == Some(0)
    }
}

/// gcd of the `y`-coefficient polynomials (the content in `Q[y]`).
fn y_content(cols: &[UniPoly]) -> UniPoly {
    let mut g = UniPoly::zero();
    for c in cols {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    g
}

fn primitive_part(cols: &[UniPoly], content: &UniPoly) -> Vec<UniPoly> {
    cols.iter()
        .map(|c| {
            if c.is_zero() {
                UniPoly::zero()
            } else {
                c.div_exact(content).expect("content divides")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `x` over `Q[y]`.
fn pseudo_rem(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let mut r: Vec<UniPoly> = a.to_vec();
    let db = b.len() - 1;
    let lead_b = &b[db];
    loop {
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            return r;
        }
        let dr = r.len() - 1;
        let lead_r = r[dr].clone();
        // r = lead_b * r - lead_r * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = c.mul(lead_b);
        }
        for (i, bc) in b.iter().enumerate() {
            let sub = bc.mul(&lead_r);
            r[dr - db + i] = r[dr - db + i].add(&sub.scale(&rat_int(-1)));
        }
    }
}

impl fmt::Display for BiPoly {
    /// Canonical rendering: terms by ascending total degree, then descending
    /// `x`-exponent; parseable by the germ grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(ex, ey)| (ex + ey, std::cmp::Reverse(ex)));
        for (i, &(ex, ey)) in keys.iter().enumerate() {
            let c = &self.terms[&(ex, ey)];
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            if ex > 0 {
                vars.push('x');
                if ex > 1 {
                    vars.push_str(&format!("^{ex}"));
                }
            }
            if ey > 0 {
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push('y');
                if ey > 1 {
                    vars.push_str(&format!("^{ey}"));
                }
            }
            let coeff_str = super::rat_to_string(&mag);
            if vars.is_empty() {
                write!(f, "{coeff_str}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{coeff_str}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// A plane-curve germ: an ordered list of factors, all vanishing at the
/// origin. Factor `i` is displayed as `f{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermSpec {
    pub factors: Vec<BiPoly>,
    pub labels: Vec<String>,
}

impl GermSpec {
    /// Builds a germ spec, validating nonzero factors that vanish at the
    /// origin. Labels default to `f1..fr`.
    pub fn new(factors: Vec<BiPoly>) -> Result<Self> {
        for (i, p) in factors.iter().enumerate() {
            if p.is_zero() {
                return Err(Error::ZeroFactor { index: i + 1 });
            }
            if !p.vanishes_at_origin() {
                return Err(Error::NonVanishingFactor { index: i + 1 });
            }
        }
        let labels = (1..=factors.len()).map(|i| format!("f{i}")).collect();
        Ok(GermSpec { factors, labels })
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// The product of all factors.
    pub fn product(&self) -> BiPoly {
        let mut p = BiPoly::constant(rat_int(1));
        for f in &self.factors {
            p = p.mul(f);
        }
        p
    }
}
