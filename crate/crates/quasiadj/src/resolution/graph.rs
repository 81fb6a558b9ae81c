//! Loader and renderer for the `.graph` resolution-data format.
//!
//! ```text
//! divisors <n> branches <r>
//! E <k> self <int> adj <k1,k2,...|-> a <a1,...,ar> c <int>
//! branch <i> attach <k>
//! ```
//!
//! One `E` line per divisor (`k` is 1-based), one `branch` line per branch.
//! `adj` lists the neighbouring divisors (`-` or nothing for none); `a`
//! lists the valuation of every branch along the divisor. Blank lines and
//! `#` comments are ignored. Malformed lines raise a schema error with the
//! line number; a well-formed file is then checked against every structural
//! invariant of [`ResolutionData`], and all violations are reported together.

use super::ResolutionData;
use crate::lattice::IntersectionMatrix;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Caps on declared sizes, so hostile headers cannot force allocations.
const MAX_DIVISORS: usize = 4096;
const MAX_BRANCHES: usize = 1024;

fn schema(line: usize, msg: impl Into<String>) -> Error {
    Error::GraphSchema {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| schema(line, format!("{what} must be a non-negative integer, got '{tok}'")))
}

/// Largest magnitude accepted for any integer field; keeps downstream
/// enumeration (wall candidates, closures) bounded on hostile files.
const MAX_MAGNITUDE: i64 = 100_000;

fn parse_i64(tok: &str, line: usize, what: &str) -> Result<i64> {
    let v = tok
        .parse::<i64>()
        .map_err(|_| schema(line, format!("{what} must be an integer, got '{tok}'")))?;
    if v.abs() > MAX_MAGNITUDE {
        return Err(Error::LimitExceeded {
            what: format!("{what} magnitude at line {line} (cap {MAX_MAGNITUDE})"),
        });
    }
    Ok(v)
}

fn parse_index_list(tok: &str, line: usize, what: &str) -> Result<Vec<usize>> {
    if tok == "-" {
        return Ok(Vec::new());
    }
    tok.split(',')
        .map(|p| parse_usize(p, line, what))
        .collect()
}

fn parse_int_list(tok: &str, line: usize, what: &str) -> Result<Vec<i64>> {
    tok.split(',').map(|p| parse_i64(p, line, what)).collect()
}

struct DivisorLine {
    selfint: i64,
    adj: Vec<usize>,
    a: Vec<i64>,
    canonical: i64,
}

/// Parses and validates a `.graph` file into [`ResolutionData`].
pub fn load_resolution_graph(text: &str) -> Result<ResolutionData> {
    let mut header: Option<(usize, usize)> = None;
    let mut divisors: Vec<Option<DivisorLine>> = Vec::new();
    let mut attaches: Vec<Option<usize>> = Vec::new();
    let mut violations: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0] {
            "divisors" => {
                if header.is_some() {
                    return Err(schema(line, "duplicate header line"));
                }
                if toks.len() != 4 || toks[2] != "branches" {
                    return Err(schema(line, "expected 'divisors <n> branches <r>'"));
                }
                let n = parse_usize(toks[1], line, "divisor count")?;
                let r = parse_usize(toks[3], line, "branch count")?;
                if n == 0 || r == 0 {
                    return Err(schema(line, "divisor and branch counts must be positive"));
                }
                if n > MAX_DIVISORS || r > MAX_BRANCHES {
                    return Err(Error::LimitExceeded {
                        what: format!(
                            "graph declares {n} divisors / {r} branches (caps: {MAX_DIVISORS} / {MAX_BRANCHES})"
                        ),
                    });
                }
                header = Some((n, r));
                divisors = (0..n).map(|_| None).collect();
                attaches = vec![None; r];
            }
            "E" => {
                let (n, _r) = header.ok_or_else(|| schema(line, "header line must come first"))?;
                // E <k> self <s> adj [<list>] a <list> c <c>
                let mut pos = 1;
                let k = parse_usize(
                    toks.get(pos).ok_or_else(|| schema(line, "missing divisor index"))?,
                    line,
                    "divisor index",
                )?;
                pos += 1;
                if toks.get(pos) != Some(&"self") {
                    return Err(schema(line, "expected 'self'"));
                }
                pos += 1;
                let selfint = parse_i64(
                    toks.get(pos).ok_or_else(|| schema(line, "missing self-intersection"))?,
                    line,
                    "self-intersection",
                )?;
                pos += 1;
                if toks.get(pos) != Some(&"adj") {
                    return Err(schema(line, "expected 'adj'"));
                }
                pos += 1;
                let adj = if toks.get(pos) == Some(&"a") {
                    Vec::new()
                } else {
                    let list = parse_index_list(
                        toks.get(pos).ok_or_else(|| schema(line, "missing adjacency list"))?,
                        line,
                        "adjacency entry",
                    )?;
                    pos += 1;
                    list
                };
                if toks.get(pos) != Some(&"a") {
                    return Err(schema(line, "expected 'a'"));
                }
                pos += 1;
                let a = parse_int_list(
                    toks.get(pos).ok_or_else(|| schema(line, "missing valuation list"))?,
                    line,
                    "valuation",
                )?;
                pos += 1;
                if toks.get(pos) != Some(&"c") {
                    return Err(schema(line, "expected 'c'"));
                }
                pos += 1;
                let canonical = parse_i64(
                    toks.get(pos).ok_or_else(|| schema(line, "missing canonical multiplicity"))?,
                    line,
                    "canonical multiplicity",
                )?;
                pos += 1;
                if pos != toks.len() {
                    return Err(schema(line, "unexpected trailing tokens"));
                }
                if k == 0 || k > n {
                    violations.push(format!("E{k} is outside the declared range 1..={n}"));
                } else if divisors[k - 1].is_some() {
                    violations.push(format!("E{k} is defined twice"));
                } else {
                    divisors[k - 1] = Some(DivisorLine {
                        selfint,
                        adj,
                        a,
                        canonical,
                    });
                }
            }
            "branch" => {
                let (_n, r) = header.ok_or_else(|| schema(line, "header line must come first"))?;
                if toks.len() != 4 || toks[2] != "attach" {
                    return Err(schema(line, "expected 'branch <i> attach <k>'"));
                }
                let i = parse_usize(toks[1], line, "branch index")?;
                let k = parse_usize(toks[3], line, "attachment divisor")?;
                if i == 0 || i > r {
                    violations.push(format!("branch {i} is outside the declared range 1..={r}"));
                } else if attaches[i - 1].is_some() {
                    violations.push(format!("branch {i} is defined twice"));
                } else {
                    attaches[i - 1] = Some(k);
                }
            }
            other => {
                return Err(schema(
                    line,
                    format!("expected 'divisors', 'E' or 'branch', got '{other}'"),
                ));
            }
        }
    }

    let (n, r) = header.ok_or_else(|| schema(1, "missing 'divisors <n> branches <r>' header"))?;
    for (k, d) in divisors.iter().enumerate() {
        if d.is_none() {
            violations.push(format!("E{} is not defined", k + 1));
        }
    }
    for (i, b) in attaches.iter().enumerate() {
        if b.is_none() {
            violations.push(format!("branch {} has no attachment line", i + 1));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Validation { violations });
    }

    let divisors: Vec<DivisorLine> = divisors.into_iter().map(Option::unwrap).collect();
    let attaches: Vec<usize> = attaches.into_iter().map(Option::unwrap).collect();

    // Structural checks that must pass before the lattice can be assembled.
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (k, d) in divisors.iter().enumerate() {
        if d.a.len() != r {
            violations.push(format!(
                "E{} lists {} valuations, expected one per branch ({r})",
                k + 1,
                d.a.len()
            ));
        }
        for &j in &d.adj {
            if j == 0 || j > n {
                violations.push(format!(
                    "E{} lists neighbour E{j} which is outside 1..={n}",
                    k + 1
                ));
            } else if j == k + 1 {
                violations.push(format!("E{} lists itself as a neighbour", k + 1));
            } else if !divisors[j - 1].adj.contains(&(k + 1)) {
                violations.push(format!(
                    "adjacency between E{} and E{j} is not symmetric",
                    k + 1
                ));
            } else {
                edges.insert((k.min(j - 1), k.max(j - 1)));
            }
        }
    }
    for (i, &k) in attaches.iter().enumerate() {
        if k == 0 || k > n {
            violations.push(format!(
                "branch {} attaches to E{k} which is outside 1..={n}",
                i + 1
            ));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Validation { violations });
    }

    let data = ResolutionData {
        mult: (0..r)
            .map(|i| divisors.iter().map(|d| d.a[i]).collect())
            .collect(),
        canonical: divisors.iter().map(|d| d.canonical).collect(),
        lattice: IntersectionMatrix::new(divisors.iter().map(|d| d.selfint).collect(), edges),
        attach: attaches.iter().map(|&k| k - 1).collect(),
        labels: (1..=r).map(|i| format!("f{i}")).collect(),
    };
    data.validate()?;
    Ok(data)
}

/// Renders resolution data in the canonical `.graph` form accepted by
/// [`load_resolution_graph`].
pub fn render_resolution_graph(data: &ResolutionData) -> String {
    let n = data.n_divisors();
    let r = data.n_branches();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, j) in data.lattice.adjacency() {
        nbrs[i].push(j + 1);
        nbrs[j].push(i + 1);
    }
    let mut out = format!("divisors {n} branches {r}\n");
    for (k, nb) in nbrs.iter_mut().enumerate() {
        nb.sort_unstable();
        let adj = if nb.is_empty() {
            "-".to_string()
        } else {
            nb.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let a = (0..r)
            .map(|i| data.mult[i][k].to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!(
            "E {} self {} adj {adj} a {a} c {}\n",
            k + 1,
            data.lattice.selfint()[k],
            data.canonical[k]
        ));
    }
    for i in 0..r {
        out.push_str(&format!("branch {} attach {}\n", i + 1, data.attach[i] + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUSP: &str = "divisors 3 branches 1\n\
        E 1 self -3 adj 3 a 2 c 1\n\
        E 2 self -2 adj 3 a 3 c 2\n\
        E 3 self -1 adj 1,2 a 6 c 4\n\
        branch 1 attach 3\n";

    #[test]
    fn loads_cusp_graph() {
        let data = load_resolution_graph(CUSP).unwrap();
        assert_eq!(data.mult, vec![vec![2, 3, 6]]);
        assert_eq!(data.canonical, vec![1, 2, 4]);
        assert_eq!(data.attach, vec![2]);
        assert_eq!(data.rupture(), vec![2]);
    }

    #[test]
    fn loads_ordinary_triple_point() {
        let text = "divisors 1 branches 3\n\
            E 1 self -1 adj - a 1,1,1 c 1\n\
            branch 1 attach 1\nbranch 2 attach 1\nbranch 3 attach 1\n";
        let data = load_resolution_graph(text).unwrap();
        assert_eq!(data.mult, vec![vec![1], vec![1], vec![1]]);
        assert_eq!(data.rupture(), vec![0]);
        // The `-` placeholder may also be omitted entirely.
        let text2 = text.replace(" adj - ", " adj ");
        assert_eq!(load_resolution_graph(&text2).unwrap(), data);
    }

    #[test]
    fn round_trip_through_renderer() {
        for text in [
            CUSP,
            "divisors 1 branches 3\nE 1 self -1 adj - a 1,1,1 c 1\n\
             branch 1 attach 1\nbranch 2 attach 1\nbranch 3 attach 1\n",
        ] {
            let data = load_resolution_graph(text).unwrap();
            let rendered = render_resolution_graph(&data);
            let reparsed = load_resolution_graph(&rendered).unwrap();
            assert_eq!(data, reparsed);
        }
    }

    #[test]
    fn engine_output_round_trips() {
        let spec = crate::algebra::parse_germ("f1 = x^2 + y^3\nf2 = x^3 + y^2\n").unwrap();
        let (data, _) = crate::resolution::resolve_embedded(&spec).unwrap();
        let reparsed = load_resolution_graph(&render_resolution_graph(&data)).unwrap();
        assert_eq!(data, reparsed);
    }

    #[test]
    fn schema_errors_carry_line_numbers() {
        match load_resolution_graph("E 1 self -1 adj - a 1 c 1\n") {
            Err(Error::GraphSchema { line: 1, msg }) => assert!(msg.contains("header")),
            other => panic!("expected GraphSchema, got {other:?}"),
        }
        let text = "divisors 1 branches 1\nE 1 self -1 adj - a 1 q 1\n";
        match load_resolution_graph(text) {
            Err(Error::GraphSchema { line: 2, .. }) => {}
            other => panic!("expected GraphSchema on line 2, got {other:?}"),
        }
        match load_resolution_graph("divisors 999999 branches 2\n") {
            Err(Error::LimitExceeded { .. }) => {}
            other => panic!("expected LimitExceeded, got {other:?}"),
        }
    }

    #[test]
    fn all_violations_are_reported_together() {
        // Positive self-intersection AND broken orthogonality (a=5 instead
        // of 6 on E3).
        let text = "divisors 3 branches 1\n\
            E 1 self 3 adj 3 a 2 c 1\n\
            E 2 self -2 adj 3 a 3 c 2\n\
            E 3 self -1 adj 1,2 a 5 c 4\n\
            branch 1 attach 3\n";
        match load_resolution_graph(text) {
            Err(Error::Validation { violations }) => {
                assert!(violations.iter().any(|v| v.contains("self-intersection")));
                assert!(violations.len() >= 2, "violations: {violations:?}");
            }
            other => panic!("expected Validation, got {other:?}"),
        }
    }

    #[test]
    fn asymmetric_adjacency_is_a_violation() {
        let text = "divisors 2 branches 1\n\
            E 1 self -2 adj 2 a 1 c 1\n\
            E 2 self -1 adj - a 2 c 2\n\
            branch 1 attach 2\n";
        match load_resolution_graph(text) {
            Err(Error::Validation { violations }) => {
                assert!(violations.iter().any(|v| v.contains("not symmetric")));
            }
            other => panic!("expected Validation, got {other:?}"),
        }
    }

    #[test]
    fn missing_pieces_are_violations() {
        let text = "divisors 2 branches 2\n\
            E 1 self -2 adj 2 a 1,1 c 1\n\
            branch 1 attach 1\n";
        match load_resolution_graph(text) {
            Err(Error::Validation { violations }) => {
                assert!(violations.iter().any(|v| v.contains("E2 is not defined")));
                assert!(violations.iter().any(|v| v.contains("branch 2")));
            }
            other => panic!("expected Validation, got {other:?}"),
        }
    }

    #[test]
    fn non_tree_and_indefinite_are_violations() {
        let text = "divisors 2 branches 1\n\
            E 1 self -1 adj 2 a 1 c 1\n\
            E 2 self -1 adj 1 a 1 c 1\n\
            branch 1 attach 2\n";
        match load_resolution_graph(text) {
            Err(Error::Validation { violations }) => {
                assert!(
                    violations.iter().any(|v| v.contains("negative definite")),
                    "violations: {violations:?}"
                );
            }
            other => panic!("expected Validation, got {other:?}"),
        }
    }
}
