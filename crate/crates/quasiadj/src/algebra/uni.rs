//! Dense univariate polynomials over [`Rat`].
//!
//! Used for direction polynomials during blowups (complete rational-root
//! extraction decides whether a tangent direction is rational) and for
//! Newton-polygon edge polynomials. All arithmetic is exact.

use super::{bigint_gcd, rat_int, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Trial-division bound for factoring root-candidate coefficients. If a
/// coefficient cannot be fully factored below this bound the root search
/// reports [`Error::LimitExceeded`] instead of guessing.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Polynomial in one variable with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; the top coefficient is nonzero
/// (the zero polynomial has an empty list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![rat_int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder with `deg rem < deg divisor`. Panics on a zero
    /// divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (UniPoly::zero(), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![rat_int(0); rem.len() - dd + 1];
        for i in (0..quo.len()).rev() {
            let top = rem[i + dd - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let delta = &q * b;
                rem[i + j] -= delta;
            }
            quo[i] = q;
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.leading().cloned() {
            a = a.scale(&(rat_int(1) / lead));
        }
        a
    }

    /// The square-free part `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g).expect("gcd divides");
        let lead = q.leading().cloned().unwrap();
        q.scale(&(rat_int(1) / lead))
    }

    /// Integer-primitive form: clears denominators and divides by the
    /// content, keeping the sign of the leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = bigint_gcd(&content, v);
        }
        ints.iter().map(|v| v / &content).collect()
    }

    /// Every rational root together with its multiplicity, plus the monic
    /// residual polynomial left after dividing all rational linear factors
    /// out. The residual is constant exactly when the polynomial splits over
    /// the rationals.
    ///
    /// Errors with [`Error::LimitExceeded`] if a coefficient is too large to
    /// factor by bounded trial division (the root set would otherwise be
    /// incomplete, which could misreport an irrational direction).
    pub fn split_rational(&self) -> Result<(Vec<(Rat, usize)>, UniPoly)> {
        assert!(!self.is_zero(), "root extraction on the zero polynomial");
        if self.is_constant() {
            return Ok((Vec::new(), self.clone()));
        }

        // Factor out t^k first: root 0 with multiplicity k.
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        let mut work = self.clone();
        let zero_mult = work.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((rat_int(0), zero_mult));
            work = UniPoly::new(work.coeffs[zero_mult..].to_vec());
        }
        if work.is_constant() {
            return Ok((roots, work));
        }

        // Candidates p/q with p | trailing and q | leading coefficient of the
        // square-free part, in integer-primitive form.
        let sf = work.squarefree_part();
        let ints = sf.primitive_integer_coeffs();
        let trailing = ints.first().unwrap().clone();
        let leading = ints.last().unwrap().clone();
        let p_divs = divisors(&trailing)?;
        let q_divs = divisors(&leading)?;
        let mut found: Vec<Rat> = Vec::new();
        for p in &p_divs {
            for q in &q_divs {
                let cand = Rat::new(p.clone(), q.clone());
                for c in [cand.clone(), -cand] {
                    if found.contains(&c) {
                        continue;
                    }
                    if sf.eval(&c).is_zero() {
                        found.push(c);
                    }
                }
            }
        }
        found.sort();

        // Multiplicities by repeated exact division of the full polynomial.
        for root in found {
            let lin = UniPoly::new(vec![-root.clone(), rat_int(1)]);
            let mut mult = 0usize;
            while let Some(q) = work.div_exact(&lin) {
                work = q;
                mult += 1;
            }
            debug_assert!(mult > 0);
            roots.push((root, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let lead = work.leading().cloned().unwrap();
        Ok((roots, work.scale(&(rat_int(1) / lead))))
    }

    /// Render with `var` as the variable, in integer-primitive form — used in
    /// error messages for direction polynomials.
    pub fn display_with_var(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let ints = self.primitive_integer_coeffs();
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in ints.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                mag.to_string()
            } else {
                let var_part = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if mag.is_one() {
                    var_part
                } else {
                    format!("{mag}*{var_part}")
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

/// All positive divisors of `n` (must be nonzero), via bounded trial-division
/// factoring.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m = n.abs();
    assert!(!m.is_zero());
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(TRIAL_DIVISION_BOUND);
    while &d * &d <= m && d <= bound {
        let mut mult = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d.clone(), mult));
        }
        d += 1u32;
    }
    if !m.is_one() {
        // Remainder is prime iff it has no factor <= bound; if it is larger
        // than bound^2 we cannot certify that.
        if m > &bound * &bound && &d * &d <= m {
            return Err(Error::LimitExceeded {
                what: format!("cannot factor coefficient {n} for rational-root search"),
            });
        }
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, mult) in factors {
        let mut next = Vec::with_capacity(divs.len() * (mult as usize + 1));
        for d0 in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=mult {
                next.push(d0 * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let p = poly(&[2, -3, 1]);
        let lin = poly(&[-1, 1]);
        let q = p.div_exact(&lin).unwrap();
        assert_eq!(q, poly(&[-2, 1]));
        let g = p.gcd(&poly(&[-1, 0, 1])); // gcd with (t-1)(t+1) = t-1 monic
        assert_eq!(g, poly(&[-1, 1]));
    }

    #[test]
    fn split_fully_rational() {
        // 2(t-1)^2 (t+3) = 2t^3 + 2t^2 - 10t + 6
        let p = poly(&[6, -10, 2, 2]);
        let (roots, residual) = p.split_rational().unwrap();
        assert_eq!(
            roots,
            vec![(rat_int(-3), 1), (rat_int(1), 2)]
        );
        assert!(residual.is_constant());
    }

    #[test]
    fn split_with_irrational_residual() {
        // (t-1)(t^2 + t + 1) = t^3 - 1
        let p = poly(&[-1, 0, 0, 1]);
        let (roots, residual) = p.split_rational().unwrap();
        assert_eq!(roots, vec![(rat_int(1), 1)]);
        assert_eq!(residual, poly(&[1, 1, 1]));
        assert_eq!(residual.display_with_var('t'), "t^2 + t + 1");
    }

    #[test]
    fn split_no_rational_roots() {
        // t^3 - 2
        let p = poly(&[-2, 0, 0, 1]);
        let (roots, residual) = p.split_rational().unwrap();
        assert!(roots.is_empty());
        assert_eq!(residual.display_with_var('t'), "t^3 - 2");
    }

    #[test]
    fn split_rational_non_integer_roots() {
        // (2t-1)(3t+2) = 6t^2 + t - 2
        let p = poly(&[-2, 1, 6]);
        let (roots, residual) = p.split_rational().unwrap();
        assert_eq!(roots, vec![(rat(-2, 3), 1), (rat(1, 2), 1)]);
        assert!(residual.is_constant());
    }

    #[test]
    fn zero_roots_tracked() {
        // t^2 (t - 5)
        let p = poly(&[0, 0, -5, 1]);
        let (roots, _) = p.split_rational().unwrap();
        assert_eq!(roots, vec![(rat_int(0), 2), (rat_int(5), 1)]);
    }
}
