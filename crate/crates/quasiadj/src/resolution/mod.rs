//! Embedded resolution of plane-curve germs and resolution-graph I/O.
//!
//! The engine ([`resolve_embedded`]) blows up points until the total
//! transform of the germ has simple normal crossings, recording for every
//! exceptional divisor `E_k`:
//!
//! * `mult[i][k]` — the valuation of branch `i` along `E_k`,
//! * `canonical[k]` — the multiplicity of `E_k` in the relative canonical
//!   divisor,
//! * the intersection lattice (self-intersections and adjacency),
//! * `attach[i]` — the divisor met transversally by the strict transform of
//!   branch `i`.
//!
//! The same data can be supplied directly in a `.graph` file
//! ([`load_resolution_graph`]); every structural invariant is then checked
//! and all violations are reported together.

mod blowup;
mod graph;

pub use blowup::{
    divisor_valuations, milnor_delta, milnor_number, resolve_embedded, BlowupTrace, CenterRecord,
    Direction,
};
pub use graph::{load_resolution_graph, render_resolution_graph};

use crate::lattice::IntersectionMatrix;

/// Complete numerical data of an embedded resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    /// `mult[i][k]`: valuation of branch `i` along divisor `k` (0-based).
    pub mult: Vec<Vec<i64>>,
    /// Canonical multiplicities `canonical[k] >= 1`.
    pub canonical: Vec<i64>,
    /// Intersection lattice of the exceptional divisors.
    pub lattice: IntersectionMatrix,
    /// `attach[i]`: divisor met by the strict transform of branch `i`.
    pub attach: Vec<usize>,
    /// Branch labels (`f1`, `f2`, ... by default).
    pub labels: Vec<String>,
}

impl ResolutionData {
    /// Number of exceptional divisors.
    pub fn n_divisors(&self) -> usize {
        self.canonical.len()
    }

    /// Number of branches.
    pub fn n_branches(&self) -> usize {
        self.mult.len()
    }

    /// Valuation vector of branch `i` (its row of `mult`).
    pub fn branch_valuations(&self, i: usize) -> &[i64] {
        &self.mult[i]
    }

    /// Divisors meeting at least three other components of the total
    /// transform (neighbouring divisors plus attached strict branches).
    pub fn rupture(&self) -> Vec<usize> {
        let n = self.n_divisors();
        let mut degree = vec![0usize; n];
        for (i, j) in self.lattice.adjacency() {
            degree[i] += 1;
            degree[j] += 1;
        }
        for &k in &self.attach {
            degree[k] += 1;
        }
        (0..n).filter(|&k| degree[k] >= 3).collect()
    }

    /// Checks every structural invariant, returning one message per
    /// violation (empty means valid):
    ///
    /// * the lattice is negative definite and its adjacency graph a tree;
    /// * all valuations and canonical multiplicities are at least 1;
    /// * for every branch `i` the total transform is numerically trivial:
    ///   `sum_k mult[i][k] * N[k][j] + [attach(i) = j] = 0` for all `j`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.n_divisors();
        let r = self.n_branches();
        if n == 0 {
            out.push("no exceptional divisors".to_string());
            return out;
        }
        if self.lattice.n() != n {
            out.push(format!(
                "lattice has {} divisors but canonical vector has {}",
                self.lattice.n(),
                n
            ));
            return out;
        }
        for (i, row) in self.mult.iter().enumerate() {
            if row.len() != n {
                out.push(format!(
                    "branch {} has {} valuations, expected {}",
                    i + 1,
                    row.len(),
                    n
                ));
                return out;
            }
        }
        if self.attach.len() != r {
            out.push(format!(
                "{} attachments for {} branches",
                self.attach.len(),
                r
            ));
            return out;
        }
        if self.labels.len() != r {
            out.push(format!("{} labels for {} branches", self.labels.len(), r));
        }

        for (k, &s) in self.lattice.selfint().iter().enumerate() {
            if s >= 0 {
                out.push(format!("E{} has non-negative self-intersection {s}", k + 1));
            }
        }
        if !self.lattice.is_tree() {
            out.push("adjacency graph is not a tree".to_string());
        }
        if !self.lattice.is_negative_definite() {
            out.push("intersection matrix is not negative definite".to_string());
        }
        for (k, &c) in self.canonical.iter().enumerate() {
            if c < 1 {
                out.push(format!("E{} has canonical multiplicity {c} < 1", k + 1));
            }
        }
        for (i, row) in self.mult.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a < 1 {
                    out.push(format!(
                        "branch {} has valuation {a} < 1 along E{}",
                        i + 1,
                        k + 1
                    ));
                }
            }
        }
        for (i, &att) in self.attach.iter().enumerate() {
            if att >= n {
                out.push(format!(
                    "branch {} attaches to E{} which does not exist",
                    i + 1,
                    att + 1
                ));
            }
        }
        if out.is_empty() {
            // Numerical triviality of each branch's total transform.
            for i in 0..r {
                let nv = self.lattice.mul(&self.mult[i]);
                for (j, &nvj) in nv.iter().enumerate() {
                    let strict = i128::from(self.attach[i] == j);
                    let total = nvj + strict;
                    if total != 0 {
                        out.push(format!(
                            "branch {} total transform meets E{} with intersection {total} (expected 0)",
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
        out
    }

    /// [`Self::violations`] packaged as a result.
    pub fn validate(&self) -> crate::Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(crate::Error::Validation { violations: v })
        }
    }
}
