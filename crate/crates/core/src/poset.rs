//! Strict partial orders on named finite ground sets, their comparability and
//! incomparability graphs, induced-pattern search and linear-extension rule
//! checking.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    /// The input arcs contain a directed cycle; the witness lists element
    /// indices with the first one repeated at the end.
    #[error("directed cycle: {}", format_cycle(.0))]
    Cycle(Vec<usize>),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("linear order is not an extension of the partial order")]
    NotAnExtension,
}

fn format_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// A strict partial order: irreflexive, transitive, asymmetric.
///
/// Elements are identified by their declaration index; names are carried for
/// I/O. The relation is stored as a dense `n x n` boolean matrix with
/// `rel[u*n + v]` meaning `u ≺ v`.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialOrder {
    names: Vec<String>,
    n: usize,
    rel: Vec<bool>,
}

impl PartialOrder {
    /// Builds the partial order generated by `pairs` (transitive closure).
    ///
    /// Fails with [`PosetError::Cycle`] if the pairs contain a directed
    /// cycle, so the closure would not be irreflexive.
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        check_names(&names)?;
        let n = names.len();
        let mut rel = vec![false; n * n];
        for &(u, v) in pairs {
            assert!(u < n && v < n, "pair index out of range");
            if u != v {
                rel[u * n + v] = true;
            } else {
                return Err(PosetError::Cycle(vec![u, u]));
            }
        }
        transitive_close(&mut rel, n);
        for v in 0..n {
            if rel[v * n + v] {
                return Err(PosetError::Cycle(extract_cycle(pairs, &rel, n, v)));
            }
        }
        Ok(PartialOrder { names, n, rel })
    }

    /// Like [`PartialOrder::from_pairs`] but with pairs given by element name.
    pub fn from_name_pairs<S: AsRef<str>>(
        names: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        check_names(&names)?;
        let lookup = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| PosetError::UnknownElement(s.to_string()))
        };
        let mut index_pairs = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            index_pairs.push((lookup(u.as_ref())?, lookup(v.as_ref())?));
        }
        Self::from_pairs(names, &index_pairs)
    }

    /// Builds a poset on default element names `v0, v1, ...`.
    pub fn indexed(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        Self::from_pairs(default_names(n), pairs)
    }

    /// Wraps an already transitive, irreflexive relation matrix.
    pub fn from_relation(names: Vec<String>, rel: Vec<bool>) -> Result<Self, PosetError> {
        check_names(&names)?;
        let n = names.len();
        assert_eq!(rel.len(), n * n, "relation matrix has wrong size");
        for v in 0..n {
            if rel[v * n + v] {
                return Err(PosetError::InvalidRelation(format!("reflexive at {v}")));
            }
        }
        for u in 0..n {
            for v in 0..n {
                if rel[u * n + v] && rel[v * n + u] {
                    return Err(PosetError::InvalidRelation(format!(
                        "symmetric at ({u},{v})"
                    )));
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                if !rel[u * n + v] {
                    continue;
                }
                for w in 0..n {
                    if rel[v * n + w] && !rel[u * n + w] {
                        return Err(PosetError::InvalidRelation(format!(
                            "not transitive at ({u},{v},{w})"
                        )));
                    }
                }
            }
        }
        Ok(PartialOrder { names, n, rel })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// `u ≺ v`?
    #[inline]
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.rel[u * self.n + v]
    }

    #[inline]
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    #[inline]
    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        u != v && !self.comparable(u, v)
    }

    /// All related pairs `(u, v)` with `u ≺ v`, ascending by `u` then `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (0..self.n)
                .filter(move |&v| self.less(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn relation_count(&self) -> usize {
        self.rel.iter().filter(|&&b| b).count()
    }

    /// Elements above `v`.
    pub fn upper_set(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.less(v, u)).collect()
    }

    /// Elements below `v`.
    pub fn lower_set(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.less(u, v)).collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.comparable(u, v)))
    }

    pub fn comparability_graph(&self) -> Graph {
        let mut adj = vec![false; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.comparable(u, v) {
                    adj[u * self.n + v] = true;
                }
            }
        }
        Graph {
            names: self.names.clone(),
            n: self.n,
            adj,
        }
    }

    pub fn incomparability_graph(&self) -> Graph {
        let mut adj = vec![false; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.incomparable(u, v) {
                    adj[u * self.n + v] = true;
                }
            }
        }
        Graph {
            names: self.names.clone(),
            n: self.n,
            adj,
        }
    }

    /// All induced occurrences of the given pattern, each listed once under
    /// role-canonical ordering (for `2+2`, the chain with the smaller bottom
    /// element comes first), sorted by `(x, y, z, w)`.
    ///
    /// The scans run over incomparable pairs first, so pattern-free dense
    /// orders are cheap to certify.
    pub fn find_pattern(&self, kind: PatternKind) -> Vec<Quad> {
        let mut out = Vec::new();
        match kind {
            PatternKind::TwoPlusTwo => {
                // x ≺ y, z ≺ w with x ∥ w, z ∥ y (then x ∥ z, y ∥ w follow).
                for x in 0..self.n {
                    for z in x + 1..self.n {
                        if !self.incomparable(x, z) {
                            continue;
                        }
                        for y in 0..self.n {
                            if !self.less(x, y) || !self.incomparable(z, y) {
                                continue;
                            }
                            for w in 0..self.n {
                                if self.less(z, w) && self.incomparable(x, w) {
                                    out.push(Quad { kind, x, y, z, w });
                                }
                            }
                        }
                    }
                }
            }
            PatternKind::ThreePlusOne => {
                // x ≺ y ≺ z with w incomparable to all three (w ∥ y follows
                // from w ∥ x and w ∥ z, but is checked directly).
                for w in 0..self.n {
                    for x in 0..self.n {
                        if !self.incomparable(w, x) {
                            continue;
                        }
                        for y in 0..self.n {
                            if !self.less(x, y) || !self.incomparable(w, y) {
                                continue;
                            }
                            for z in 0..self.n {
                                if self.less(y, z) && self.incomparable(w, z) {
                                    out.push(Quad { kind, x, y, z, w });
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort_by_key(|q| (q.x, q.y, q.z, q.w));
        out
    }

    /// No induced `2+2`.
    pub fn is_interval_order(&self) -> bool {
        self.find_pattern(PatternKind::TwoPlusTwo).is_empty()
    }

    /// No induced `2+2` and no induced `3+1`.
    pub fn is_semiorder(&self) -> bool {
        self.is_interval_order() && self.find_pattern(PatternKind::ThreePlusOne).is_empty()
    }

    pub fn is_extension(&self, l: &LinearOrder) -> bool {
        l.len() == self.n && self.pairs().all(|(u, v)| l.before(u, v))
    }

    /// Checks the `2+2` and `3+1` rules for a linear extension `l`.
    ///
    /// Returns `None` when both rules are fulfilled, otherwise the first
    /// violating quadruple found (all `2+2` candidates are scanned before the
    /// `3+1` candidates, in ascending index order).
    pub fn rule_violation(&self, l: &LinearOrder) -> Result<Option<Quad>, PosetError> {
        if !self.is_extension(l) {
            return Err(PosetError::NotAnExtension);
        }
        // 2+2 rule: no x ≺ y, z ≺ w in P with x ∥ w, z ∥ y and x before w,
        // z before y in L.
        for z in 0..self.n {
            for y in 0..self.n {
                if !self.incomparable(z, y) || !l.before(z, y) {
                    continue;
                }
                for x in 0..self.n {
                    if !self.less(x, y) {
                        continue;
                    }
                    for w in 0..self.n {
                        if self.less(z, w) && self.incomparable(x, w) && l.before(x, w) {
                            return Ok(Some(Quad {
                                kind: PatternKind::TwoPlusTwo,
                                x,
                                y,
                                z,
                                w,
                            }));
                        }
                    }
                }
            }
        }
        // 3+1 rule: no x ≺ y ≺ z in P with w ∥ x, w ∥ z and x before w
        // before z in L.
        for x in 0..self.n {
            for w in 0..self.n {
                if !self.incomparable(w, x) || !l.before(x, w) {
                    continue;
                }
                for y in 0..self.n {
                    if !self.less(x, y) {
                        continue;
                    }
                    for z in 0..self.n {
                        if self.less(y, z) && self.incomparable(w, z) && l.before(w, z) {
                            return Ok(Some(Quad {
                                kind: PatternKind::ThreePlusOne,
                                x,
                                y,
                                z,
                                w,
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Induced suborder on the listed elements (in the given order).
    pub fn restrict(&self, keep: &[usize]) -> PartialOrder {
        let m = keep.len();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut rel = vec![false; m * m];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.less(u, v) {
                    rel[i * m + j] = true;
                }
            }
        }
        PartialOrder { names, n: m, rel }
    }

    /// The dual order (all relations reversed).
    pub fn dual(&self) -> PartialOrder {
        let mut rel = vec![false; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if self.less(v, u) {
                    rel[u * self.n + v] = true;
                }
            }
        }
        PartialOrder {
            names: self.names.clone(),
            n: self.n,
            rel,
        }
    }
}

impl fmt::Debug for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .map(|(u, v)| format!("{}<{}", self.names[u], self.names[v]))
            .collect();
        write!(
            f,
            "PartialOrder[{}; {}]",
            self.names.join(","),
            pairs.join(" ")
        )
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn check_names(names: &[String]) -> Result<(), PosetError> {
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(PosetError::DuplicateElement(a.clone()));
        }
    }
    Ok(())
}

fn transitive_close(rel: &mut [bool], n: usize) {
    for k in 0..n {
        for u in 0..n {
            if rel[u * n + k] {
                for v in 0..n {
                    if rel[k * n + v] {
                        rel[u * n + v] = true;
                    }
                }
            }
        }
    }
}

/// Extracts a directed cycle through `start` from the original arc list,
/// assuming the closure proves one exists.
fn extract_cycle(pairs: &[(usize, usize)], closure: &[bool], n: usize, start: usize) -> Vec<usize> {
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        let next = pairs
            .iter()
            .find(|&&(u, v)| u == cur && (v == start || closure[v * n + start]))
            .map(|&(_, v)| v)
            .expect("closure reported a cycle");
        cycle.push(next);
        if next == start {
            return cycle;
        }
        cur = next;
    }
}

/// An undirected loop-free graph on named vertices, dense representation.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn from_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, PosetError> {
        check_names(&names)?;
        let n = names.len();
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge index out of range");
            assert!(u != v, "loops are not allowed");
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Graph { names, n, adj })
    }

    pub fn indexed(n: usize, edges: &[(usize, usize)]) -> Result<Self, PosetError> {
        Self::from_edges(default_names(n), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn complement(&self) -> Graph {
        let mut adj = vec![false; self.n * self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_edge(u, v) {
                    adj[u * self.n + v] = true;
                }
            }
        }
        Graph {
            names: self.names.clone(),
            n: self.n,
            adj,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        write!(f, "Graph[{}; {}]", self.names.join(","), edges.join(" "))
    }
}

/// A permutation of `0..n` read as a total order: `perm[i]` is the element of
/// rank `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Self {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            assert!(v < n && pos[v] == usize::MAX, "not a permutation");
            pos[v] = i;
        }
        LinearOrder { perm, pos }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Element of rank `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Rank of element `v`.
    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn before(&self, u: usize, v: usize) -> bool {
        self.pos[u] < self.pos[v]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.perm.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn names<'a>(&self, p: &'a PartialOrder) -> Vec<&'a str> {
        self.perm.iter().map(|&v| p.name(v)).collect()
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder{:?}", self.perm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    TwoPlusTwo,
    ThreePlusOne,
}

/// A four-element pattern occurrence or rule violation.
///
/// For `TwoPlusTwo`: `x ≺ y` and `z ≺ w` are the two chains. For
/// `ThreePlusOne`: `x ≺ y ≺ z` is the chain and `w` the element incomparable
/// to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub kind: PatternKind,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w: usize,
}

/// Topological order of the arc set on `0..n`, always choosing the smallest
/// available index next.
pub fn topological_order(n: usize, arcs: &[(usize, usize)]) -> Result<LinearOrder, PosetError> {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in arcs {
        assert!(u < n && v < n, "arc index out of range");
        out[u].push(v);
        indeg[v] += 1;
    }
    let mut placed = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n).find(|&v| !placed[v] && indeg[v] == 0);
        let v = match next {
            Some(v) => v,
            None => return Err(PosetError::Cycle(remaining_cycle(n, arcs, &placed))),
        };
        placed[v] = true;
        perm.push(v);
        for &w in &out[v] {
            if !placed[w] {
                indeg[w] -= 1;
            }
        }
    }
    Ok(LinearOrder::new(perm))
}

/// Finds a directed cycle among the not-yet-placed vertices; every remaining
/// vertex has positive in-degree, so walking predecessors must repeat.
fn remaining_cycle(n: usize, arcs: &[(usize, usize)], placed: &[bool]) -> Vec<usize> {
    let start = (0..n)
        .find(|&v| !placed[v])
        .expect("cycle reported on empty rest");
    let mut seen = vec![usize::MAX; n];
    let mut path = vec![start];
    seen[start] = 0;
    let mut cur = start;
    loop {
        let pred = arcs
            .iter()
            .find(|&&(u, v)| v == cur && !placed[u])
            .map(|&(u, _)| u)
            .expect("remaining vertex with zero in-degree");
        if seen[pred] != usize::MAX {
            // path was collected backwards along predecessor arcs; the
            // reversed suffix follows arc direction and ends at pred.
            let mut cycle: Vec<usize> = path[seen[pred]..].to_vec();
            cycle.reverse();
            cycle.insert(0, pred);
            return cycle;
        }
        seen[pred] = path.len();
        path.push(pred);
        cur = pred;
    }
}
