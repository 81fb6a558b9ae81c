//! Exceptional intersection lattice: antinef closures (unloading) and
//! codimensions of complete ideals.
//!
//! A configuration of exceptional divisors `E_1..E_n` on a smooth surface is
//! described by its intersection matrix `N`: `N[k][k]` is the
//! self-intersection, `N[j][k] = 1` when `E_j` and `E_k` meet, else `0`.
//! A divisor `D = sum d_k E_k` is *antinef* when `(N d)_k <= 0` for every `k`.
//! On a negative-definite configuration every vector has a unique smallest
//! antinef vector above it (its *antinef closure*), computed by unloading.

use crate::algebra::{rat_int, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;

/// Symmetric intersection matrix of an exceptional configuration, stored as
/// self-intersections plus the adjacency relation (0-based index pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    selfint: Vec<i64>,
    adjacency: BTreeSet<(usize, usize)>,
}

impl IntersectionMatrix {
    /// Builds the matrix; adjacency pairs are normalized to `i < j` and
    /// deduplicated. Panics on out-of-range or diagonal pairs.
    pub fn new(selfint: Vec<i64>, adjacency: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = selfint.len();
        let mut set = BTreeSet::new();
        for (a, b) in adjacency {
            assert!(a != b, "self-adjacency ({a},{a}) is not allowed");
            assert!(a < n && b < n, "adjacency index out of range");
            set.insert((a.min(b), a.max(b)));
        }
        Self {
            selfint,
            adjacency: set,
        }
    }

    /// Number of divisors.
    pub fn n(&self) -> usize {
        self.selfint.len()
    }

    /// Self-intersection numbers.
    pub fn selfint(&self) -> &[i64] {
        &self.selfint
    }

    /// Adjacency pairs, 0-based, each with `i < j`.
    pub fn adjacency(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().copied()
    }

    /// Matrix entry `E_i . E_j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.selfint[i]
        } else if self.adjacency.contains(&(i.min(j), i.max(j))) {
            1
        } else {
            0
        }
    }

    /// `N d`, accumulated in `i128`.
    pub fn mul(&self, d: &[i64]) -> Vec<i128> {
        assert_eq!(d.len(), self.n());
        let mut out: Vec<i128> = (0..self.n())
            .map(|k| self.selfint[k] as i128 * d[k] as i128)
            .collect();
        for &(i, j) in &self.adjacency {
            out[i] += d[j] as i128;
            out[j] += d[i] as i128;
        }
        out
    }

    /// The bilinear form `a . b = a^T N b`.
    pub fn dot(&self, a: &[i64], b: &[i64]) -> i128 {
        let nb = self.mul(b);
        a.iter()
            .zip(&nb)
            .map(|(&ai, &nbk)| ai as i128 * nbk)
            .sum()
    }

    /// Exact negative-definiteness test: symmetric Gaussian elimination over
    /// the rationals; the form is negative definite iff every pivot is
    /// negative (a zero pivot means a singular leading minor, hence not
    /// definite).
    pub fn is_negative_definite(&self) -> bool {
        let n = self.n();
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| rat_int(self.entry(i, j))).collect())
            .collect();
        for k in 0..n {
            let pivot = m[k][k].clone();
            if pivot >= Rat::zero() {
                return false;
            }
            let (top, rest) = m.split_at_mut(k + 1);
            let row_k = &top[k];
            for row_i in rest.iter_mut() {
                let factor = &row_i[k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for (rij, rkj) in row_i.iter_mut().zip(row_k.iter()).skip(k) {
                    let sub = &factor * rkj;
                    *rij = &*rij - &sub;
                }
            }
        }
        true
    }

    /// True when the adjacency graph is a tree on all `n` divisors
    /// (connected and acyclic).
    pub fn is_tree(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        if self.adjacency.len() != n - 1 {
            return false;
        }
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j) in &self.adjacency {
            nbrs[i].push(j);
            nbrs[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &nbrs[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

/// True when `d` is antinef: `(N d)_k <= 0` for all `k`.
pub fn is_antinef(m: &IntersectionMatrix, d: &[i64]) -> bool {
    m.mul(d).iter().all(|&x| x <= 0)
}

/// Smallest antinef vector `>= d` componentwise, via unloading with the
/// lowest positive-excess index bumped first. Entries of `d` below zero are
/// treated as zero (every antinef vector on a negative-definite configuration
/// is componentwise non-negative).
pub fn antinef_closure(m: &IntersectionMatrix, d: &[i64]) -> Vec<i64> {
    antinef_closure_with_picker(m, d, |positive| positive[0])
}

/// Unloading with a caller-chosen order: `picker` receives the (sorted,
/// non-empty) list of indices with positive excess and returns one of them.
/// The result is independent of the choices made.
pub fn antinef_closure_with_picker(
    m: &IntersectionMatrix,
    d: &[i64],
    mut picker: impl FnMut(&[usize]) -> usize,
) -> Vec<i64> {
    let mut v: Vec<i64> = d.iter().map(|&x| x.max(0)).collect();
    let mut guard = 0u64;
    loop {
        let excess = m.mul(&v);
        let positive: Vec<usize> = (0..m.n()).filter(|&k| excess[k] > 0).collect();
        if positive.is_empty() {
            return v;
        }
        let k = picker(&positive);
        assert!(positive.contains(&k), "picker returned a non-excess index");
        let diag = -(m.entry(k, k) as i128);
        assert!(diag > 0, "unloading requires negative self-intersections");
        // smallest t with excess_k + t * N[k][k] <= 0
        let t = (excess[k] + diag - 1) / diag;
        v[k] += i64::try_from(t).expect("unloading step fits in i64");
        guard += 1;
        assert!(
            guard < 1_000_000,
            "unloading failed to terminate; configuration is not negative definite"
        );
    }
}

/// Colength in the local ring of the complete ideal attached to the antinef
/// divisor `d`: `-(d . (d + K)) / 2`, where the canonical multiplicities
/// `canonical` give `K = sum canonical[k] E_k`.
pub fn ideal_codim(m: &IntersectionMatrix, canonical: &[i64], d: &[i64]) -> u64 {
    debug_assert!(is_antinef(m, d), "codim is defined for antinef divisors");
    let dk: Vec<i64> = d
        .iter()
        .zip(canonical)
        .map(|(&a, &b)| a.checked_add(b).expect("no overflow"))
        .collect();
    let two_codim = -m.dot(d, &dk);
    assert!(two_codim >= 0 && two_codim % 2 == 0, "codim must be a non-negative integer");
    u64::try_from(two_codim / 2).expect("codim fits in u64")
}

/// A complete ideal on the exceptional configuration, named by the
/// multiplicity bounds that requested it. Equality and ordering of the
/// underlying ideals depend only on `closure`.
#[derive(Clone, Debug, Eq)]
pub struct IdealHandle {
    /// The requested per-divisor bounds (clamped at zero), before closure.
    pub bounds: Vec<i64>,
    /// Antinef closure of `bounds`; determines the ideal.
    pub closure: Vec<i64>,
    /// Colength of the ideal in the local ring.
    pub codim: u64,
}

impl IdealHandle {
    /// Closes `bounds` and computes the colength. `canonical` is the vector
    /// of canonical multiplicities of the configuration.
    pub fn from_bounds(m: &IntersectionMatrix, canonical: &[i64], bounds: Vec<i64>) -> Self {
        let bounds: Vec<i64> = bounds.iter().map(|&x| x.max(0)).collect();
        let closure = antinef_closure(m, &bounds);
        let codim = ideal_codim(m, canonical, &closure);
        IdealHandle {
            bounds,
            closure,
            codim,
        }
    }

    /// True when this ideal contains `other` (larger ideal, smaller closure).
    /// Both handles must live on the same configuration.
    pub fn contains(&self, other: &IdealHandle) -> bool {
        assert_eq!(
            self.closure.len(),
            other.closure.len(),
            "ideal handles from different configurations"
        );
        self.closure
            .iter()
            .zip(&other.closure)
            .all(|(&a, &b)| a <= b)
    }

    /// True for the unit ideal (the whole local ring).
    pub fn is_full_ring(&self) -> bool {
        self.closure.iter().all(|&x| x == 0)
    }
}

impl PartialEq for IdealHandle {
    fn eq(&self, other: &Self) -> bool {
        self.closure == other.closure
    }
}
