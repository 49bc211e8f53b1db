//! Recognition of comparability and incomparability graphs of
//! linear-semiorders, and the vertex-ordering characterization.
//!
//! A graph is the incomparability graph of a linear-semiorder exactly when
//! some vertex ordering avoids five forbidden suborderings: the
//! transitivity-breaking triple and the four quadruple patterns that encode
//! `2+2` and `3+1` rule violations (non-edges of the graph, read along the
//! ordering, define the order).

use crate::orientation::transitive_orientation;
use crate::poset::{Graph, LinearOrder};
use crate::recognizer::{recognize, Recognition, RecognizerError};

/// The five forbidden suborderings over positions `u < v < w (< x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ForbiddenPattern {
    /// Triple `u, v, w`: edge `uw`, non-edges `uv`, `vw`. The derived
    /// relation would not be transitive.
    Intransitive,
    /// Quadruple with non-edges `ux`, `vw` (a chain nested in another) and
    /// edges `uw`, `vx`: a `2+2` rule violation.
    TwoTwoNested,
    /// Quadruple with non-edges `uw`, `vx` (two crossing chains) and edges
    /// `ux`, `vw`: the other `2+2` rule violation.
    TwoTwoCrossed,
    /// Quadruple with non-edges `uv`, `vx` (chain `u, v, x`) and edges `uw`,
    /// `wx`: a `3+1` violation with the odd element after the chain middle.
    ThreeOneAfter,
    /// Quadruple with non-edges `uw`, `wx` (chain `u, w, x`) and edges `uv`,
    /// `vx`: a `3+1` violation with the odd element before the chain middle.
    ThreeOneBefore,
}

/// A forbidden subordering occurrence; vertices are listed in ordering
/// position (three of them for [`ForbiddenPattern::Intransitive`], four
/// otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternViolation {
    pub pattern: ForbiddenPattern,
    pub vertices: Vec<usize>,
}

/// All forbidden suborderings of `sigma`; empty exactly when `sigma`
/// witnesses that `g` is the incomparability graph of a linear-semiorder.
///
/// Each pattern is scanned from its defining edge or non-edge structure
/// rather than over all vertex quadruples.
pub fn check_vertex_ordering(g: &Graph, sigma: &LinearOrder) -> Vec<PatternViolation> {
    let n = g.n();
    assert_eq!(sigma.len(), n, "ordering size mismatch");
    let mut out = Vec::new();
    let edges = g.edges();
    let nonedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| {
            (a + 1..n)
                .filter(move |&b| !g.has_edge(a, b))
                .map(move |b| (a, b))
        })
        .collect();
    let by_pos = |a: usize, b: usize| if sigma.before(a, b) { (a, b) } else { (b, a) };

    // Intransitive: per edge {u, x}, middles v with non-edges to both.
    for &(a, b) in &edges {
        let (u, x) = by_pos(a, b);
        for v in 0..n {
            if v != u
                && v != x
                && sigma.before(u, v)
                && sigma.before(v, x)
                && !g.has_edge(u, v)
                && !g.has_edge(v, x)
            {
                out.push(PatternViolation {
                    pattern: ForbiddenPattern::Intransitive,
                    vertices: vec![u, v, x],
                });
            }
        }
    }
    // TwoTwoNested: edge pair {u,w}, {v,x} with u < v < w < x, non-edges
    // ux, vw.
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            for (p1, p2) in [(e1, e2), (e2, e1)] {
                let (u, w) = by_pos(p1.0, p1.1);
                let (v, x) = by_pos(p2.0, p2.1);
                if sigma.before(u, v)
                    && sigma.before(v, w)
                    && sigma.before(w, x)
                    && !g.has_edge(u, x)
                    && !g.has_edge(v, w)
                {
                    out.push(PatternViolation {
                        pattern: ForbiddenPattern::TwoTwoNested,
                        vertices: vec![u, v, w, x],
                    });
                }
            }
        }
    }
    // TwoTwoCrossed: non-edge pair {u,w}, {v,x} with u < v < w < x, edges
    // ux, vw.
    for (i, &e1) in nonedges.iter().enumerate() {
        for &e2 in &nonedges[i + 1..] {
            for (p1, p2) in [(e1, e2), (e2, e1)] {
                let (u, w) = by_pos(p1.0, p1.1);
                let (v, x) = by_pos(p2.0, p2.1);
                if sigma.before(u, v)
                    && sigma.before(v, w)
                    && sigma.before(w, x)
                    && g.has_edge(u, x)
                    && g.has_edge(v, w)
                {
                    out.push(PatternViolation {
                        pattern: ForbiddenPattern::TwoTwoCrossed,
                        vertices: vec![u, v, w, x],
                    });
                }
            }
        }
    }
    // ThreeOneAfter: edges uw, wx around a center w; chain u < v < x on
    // non-edges with v between u and w.
    for w in 0..n {
        for &u in &g.neighbors(w) {
            if !sigma.before(u, w) {
                continue;
            }
            for &x in &g.neighbors(w) {
                if !sigma.before(w, x) {
                    continue;
                }
                for v in 0..n {
                    if v != u
                        && v != w
                        && v != x
                        && sigma.before(u, v)
                        && sigma.before(v, w)
                        && !g.has_edge(u, v)
                        && !g.has_edge(v, x)
                    {
                        out.push(PatternViolation {
                            pattern: ForbiddenPattern::ThreeOneAfter,
                            vertices: vec![u, v, w, x],
                        });
                    }
                }
            }
        }
    }
    // ThreeOneBefore: non-edges uw, wx (chain u, w, x); edges uv, vx with v
    // between u and w.
    for w in 0..n {
        for u in 0..n {
            if u == w || g.has_edge(u, w) || !sigma.before(u, w) {
                continue;
            }
            for x in 0..n {
                if x == w || x == u || g.has_edge(w, x) || !sigma.before(w, x) {
                    continue;
                }
                for v in 0..n {
                    if v != u
                        && v != w
                        && v != x
                        && sigma.before(u, v)
                        && sigma.before(v, w)
                        && g.has_edge(u, v)
                        && g.has_edge(v, x)
                    {
                        out.push(PatternViolation {
                            pattern: ForbiddenPattern::ThreeOneBefore,
                            vertices: vec![u, v, w, x],
                        });
                    }
                }
            }
        }
    }

    out.sort_by(|a, b| {
        let ka: Vec<usize> = a.vertices.iter().map(|&v| sigma.position(v)).collect();
        let kb: Vec<usize> = b.vertices.iter().map(|&v| sigma.position(v)).collect();
        (ka, a.pattern).cmp(&(kb, b.pattern))
    });
    out
}

/// A vertex ordering without forbidden suborderings, if `g` is the
/// incomparability graph of a linear-semiorder.
///
/// Orients the complement transitively (any orientation works, since being a
/// linear-semiorder is a comparability invariant) and runs recognition; the
/// certificate's extension is the ordering.
pub fn recognize_incomparability_graph(g: &Graph) -> Result<Option<LinearOrder>, RecognizerError> {
    let complement = g.complement();
    let p = match transitive_orientation(&complement) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    match recognize(&p)? {
        Recognition::Yes(cert) => {
            let sigma = cert.extension().clone();
            let violations = check_vertex_ordering(g, &sigma);
            if !violations.is_empty() {
                return Err(RecognizerError::ContractViolation(format!(
                    "certified ordering still has {} forbidden suborderings",
                    violations.len()
                )));
            }
            Ok(Some(sigma))
        }
        Recognition::No(_) => Ok(None),
    }
}

/// Is `g` the comparability graph of a linear-semiorder?
pub fn recognize_comparability_graph(g: &Graph) -> Result<bool, RecognizerError> {
    match transitive_orientation(g) {
        Ok(p) => Ok(recognize(&p)?.verdict()),
        Err(_) => Ok(false),
    }
}
