//! The recognition pipeline: collect the constrained incomparability edges
//! (those on an induced 4-cycle or claw of the incomparability graph),
//! orient them free of forbidden configurations by 2-SAT, remove
//! obstructions by front reversals, and read a rule-fulfilling linear
//! extension off the acyclic result.
//!
//! Unsatisfiability of the 2-CNF is the only rejection gate; every later
//! stage is guaranteed to succeed, so its failure is reported as a contract
//! violation (an implementation bug), never as a verdict.

use thiserror::Error;

use crate::poset::{topological_order, PartialOrder};
use crate::sat::{Lit, TwoCnf};
use crate::semiorder::{build_certificate, verify_certificate, Certificate};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognizerError {
    #[error("pipeline contract violated: {0}")]
    ContractViolation(String),
}

fn contract(msg: impl Into<String>) -> RecognizerError {
    RecognizerError::ContractViolation(msg.into())
}

/// An unordered subset of the incomparability edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeSet {
    n: usize,
    member: Vec<bool>,
}

impl EdgeSet {
    fn new(n: usize) -> Self {
        EdgeSet {
            n,
            member: vec![false; n * n],
        }
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.member[u * self.n + v] = true;
        self.member[v * self.n + u] = true;
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.member[u * self.n + v]
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.contains(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.edges().len()
    }

    pub fn is_empty(&self) -> bool {
        self.member.iter().all(|&b| !b)
    }
}

/// The incomparability edges lying on an induced 4-cycle or claw.
///
/// For every incomparability edge `uv`, four membership tests fire on the
/// intersections of the up-set or down-set of one endpoint with the
/// incomparability neighborhood of the other; each hit also registers the
/// third and fourth edges of the detected cycle or claw.
pub fn c4_claw_edges(p: &PartialOrder) -> EdgeSet {
    let n = p.n();
    let mut eo = EdgeSet::new(n);
    let inc: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| p.incomparable(v, u)).collect())
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if !p.incomparable(u, v) {
                continue;
            }
            let up_u_inc_v: Vec<usize> = inc[v].iter().copied().filter(|&w| p.less(u, w)).collect();
            let lo_u_inc_v: Vec<usize> = inc[v].iter().copied().filter(|&w| p.less(w, u)).collect();
            let inc_u_up_v: Vec<usize> = inc[u].iter().copied().filter(|&w| p.less(v, w)).collect();
            let inc_u_lo_v: Vec<usize> = inc[u].iter().copied().filter(|&w| p.less(w, v)).collect();

            // 4-cycle through the up-sets: u - v - w - z - u.
            if !up_u_inc_v.is_empty() && !inc_u_up_v.is_empty() {
                eo.insert(u, v);
                for &w in &up_u_inc_v {
                    eo.insert(v, w);
                }
                for &z in &inc_u_up_v {
                    eo.insert(u, z);
                }
            }
            // 4-cycle through the down-sets.
            if !lo_u_inc_v.is_empty() && !inc_u_lo_v.is_empty() {
                eo.insert(u, v);
                for &w in &lo_u_inc_v {
                    eo.insert(v, w);
                }
                for &z in &inc_u_lo_v {
                    eo.insert(u, z);
                }
            }
            // Claw centered at v: leaves z ≺ u ≺ w.
            if !up_u_inc_v.is_empty() && !lo_u_inc_v.is_empty() {
                eo.insert(u, v);
                for &w in &up_u_inc_v {
                    eo.insert(v, w);
                }
                for &z in &lo_u_inc_v {
                    eo.insert(v, z);
                }
            }
            // Claw centered at u: leaves z ≺ v ≺ w.
            if !inc_u_up_v.is_empty() && !inc_u_lo_v.is_empty() {
                eo.insert(u, v);
                for &w in &inc_u_up_v {
                    eo.insert(u, w);
                }
                for &z in &inc_u_lo_v {
                    eo.insert(u, z);
                }
            }
        }
    }
    eo
}

/// A partial orientation of the incomparability edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    arc: Vec<bool>,
    out: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
}

impl Orientation {
    /// Wraps an arc list; every arc must join incomparable elements and no
    /// edge may appear twice.
    pub fn from_arcs(p: &PartialOrder, arcs: &[(usize, usize)]) -> Result<Self, RecognizerError> {
        let n = p.n();
        let mut arc = vec![false; n * n];
        for &(a, b) in arcs {
            if !p.incomparable(a, b) {
                return Err(contract(format!(
                    "arc ({a}, {b}) joins comparable elements"
                )));
            }
            if arc[a * n + b] || arc[b * n + a] {
                return Err(contract(format!("edge {{{a}, {b}}} oriented twice")));
            }
            arc[a * n + b] = true;
        }
        let mut o = Orientation {
            n,
            arc,
            out: Vec::new(),
            into: Vec::new(),
        };
        o.rebuild_lists();
        Ok(o)
    }

    fn rebuild_lists(&mut self) {
        let n = self.n;
        self.out = (0..n)
            .map(|a| (0..n).filter(|&b| self.arc[a * n + b]).collect())
            .collect();
        self.into = (0..n)
            .map(|b| (0..n).filter(|&a| self.arc[a * n + b]).collect())
            .collect();
    }

    #[inline]
    pub fn has(&self, a: usize, b: usize) -> bool {
        self.arc[a * self.n + b]
    }

    pub fn out_neighbors(&self, a: usize) -> &[usize] {
        &self.out[a]
    }

    pub fn in_neighbors(&self, b: usize) -> &[usize] {
        &self.into[b]
    }

    /// All arcs in ascending `(from, to)` order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.has(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.arc.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn reverse_all(&mut self, arcs: &[(usize, usize)]) {
        for &(a, b) in arcs {
            debug_assert!(self.has(a, b));
            self.arc[a * self.n + b] = false;
            self.arc[b * self.n + a] = true;
        }
        if !arcs.is_empty() {
            self.rebuild_lists();
        }
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation{:?}", self.arcs())
    }
}

/// Orients the constrained edges so that the order plus the orientation has
/// no forbidden configuration, or reports that no such orientation exists.
///
/// One Boolean variable per edge `{u, v}` (with `u` the lower index) encodes
/// "points high to low": the edge becomes the arc `(u, v)` exactly when its
/// variable is false. Clauses are emitted per constrained edge for the
/// 4-cycle and claw coherence requirements and for the 2+1 exclusions.
pub fn orient_without_forbidden(p: &PartialOrder, eo: &EdgeSet) -> Option<Orientation> {
    let n = p.n();
    let edges = eo.edges();
    let mut var = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        var[u * n + v] = i;
        var[v * n + u] = i;
    }
    // Literal "edge {a, b} is oriented b -> a", i.e. against (a, b).
    let lit = |a: usize, b: usize| -> Lit {
        let i = var[a * n + b];
        assert!(i != usize::MAX, "clause references an unconstrained edge");
        if a < b {
            Lit::pos(i)
        } else {
            Lit::neg(i)
        }
    };

    let mut formula = TwoCnf::new(edges.len());
    for &(u, v) in &edges {
        let up_u_inc_v: Vec<usize> = (0..n)
            .filter(|&w| p.incomparable(v, w) && p.less(u, w))
            .collect();
        let lo_u_inc_v: Vec<usize> = (0..n)
            .filter(|&w| p.incomparable(v, w) && p.less(w, u))
            .collect();
        let inc_u_up_v: Vec<usize> = (0..n)
            .filter(|&w| p.incomparable(u, w) && p.less(v, w))
            .collect();
        let inc_u_lo_v: Vec<usize> = (0..n)
            .filter(|&w| p.incomparable(u, w) && p.less(w, v))
            .collect();

        if !up_u_inc_v.is_empty() && !inc_u_up_v.is_empty() {
            for &w in &up_u_inc_v {
                formula.add_clause(lit(u, v), lit(v, w));
                formula.add_clause(lit(w, v), lit(v, u));
            }
            for &z in &inc_u_up_v {
                formula.add_clause(lit(v, u), lit(u, z));
                formula.add_clause(lit(z, u), lit(u, v));
            }
        }
        if !lo_u_inc_v.is_empty() && !inc_u_lo_v.is_empty() {
            for &w in &lo_u_inc_v {
                formula.add_clause(lit(u, v), lit(v, w));
                formula.add_clause(lit(w, v), lit(v, u));
            }
            for &z in &inc_u_lo_v {
                formula.add_clause(lit(v, u), lit(u, z));
                formula.add_clause(lit(z, u), lit(u, v));
            }
        }
        if !up_u_inc_v.is_empty() && !lo_u_inc_v.is_empty() {
            for &w in &up_u_inc_v {
                formula.add_clause(lit(u, v), lit(v, w));
                formula.add_clause(lit(w, v), lit(v, u));
            }
            for &z in &lo_u_inc_v {
                formula.add_clause(lit(u, v), lit(v, z));
                formula.add_clause(lit(z, v), lit(v, u));
            }
        }
        if !inc_u_up_v.is_empty() && !inc_u_lo_v.is_empty() {
            for &w in &inc_u_up_v {
                formula.add_clause(lit(v, u), lit(u, w));
                formula.add_clause(lit(w, u), lit(u, v));
            }
            for &z in &inc_u_lo_v {
                formula.add_clause(lit(v, u), lit(u, z));
                formula.add_clause(lit(z, u), lit(u, v));
            }
        }
        // 2+1 exclusion: u ≺ w with both on the fan of v must not wrap
        // around v, and symmetrically for v ≺ z around u.
        for &w in &up_u_inc_v {
            if eo.contains(v, w) {
                formula.add_clause(lit(w, v), lit(v, u));
            }
        }
        for &z in &inc_u_up_v {
            if eo.contains(u, z) {
                formula.add_clause(lit(z, u), lit(u, v));
            }
        }
    }

    let assignment = formula.solve().ok()?;
    let arcs: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if assignment[i] { (v, u) } else { (u, v) })
        .collect();
    Some(Orientation::from_arcs(p, &arcs).expect("decoded arcs orient constrained edges once"))
}

/// A forbidden configuration in an order plus a partial orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenConfig {
    /// `x ≺ y`, `z ≺ w` in the order; arcs `z -> y` and `x -> w`.
    TwoTwo {
        x: usize,
        y: usize,
        z: usize,
        w: usize,
    },
    /// `x ≺ y ≺ z` in the order; arcs `w -> z` and `x -> w`.
    ThreeOne {
        x: usize,
        y: usize,
        z: usize,
        w: usize,
    },
    /// `x ≺ y` in the order; arcs `y -> z` and `z -> x`.
    TwoOne { x: usize, y: usize, z: usize },
}

/// Scans for the first forbidden configuration, checking all `2+2` shapes,
/// then `3+1`, then `2+1`, over arc pairs in ascending order. A `2+2` hit is
/// reported with the chain of smaller bottom element first.
pub fn find_forbidden_config(p: &PartialOrder, f: &Orientation) -> Option<ForbiddenConfig> {
    let arcs = f.arcs();
    for &(z, y) in &arcs {
        for &(x, w) in &arcs {
            if p.less(x, y) && p.less(z, w) {
                return Some(if x <= z {
                    ForbiddenConfig::TwoTwo { x, y, z, w }
                } else {
                    ForbiddenConfig::TwoTwo {
                        x: z,
                        y: w,
                        z: x,
                        w: y,
                    }
                });
            }
        }
    }
    for &(x, w) in &arcs {
        for &(w2, z) in &arcs {
            if w2 != w {
                continue;
            }
            if let Some(y) = (0..p.n()).find(|&y| p.less(x, y) && p.less(y, z)) {
                return Some(ForbiddenConfig::ThreeOne { x, y, z, w });
            }
        }
    }
    for &(y, z) in &arcs {
        for &(z2, x) in &arcs {
            if z2 == z && p.less(x, y) {
                return Some(ForbiddenConfig::TwoOne { x, y, z });
            }
        }
    }
    None
}

/// A six-vertex obstruction witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// `v0≺v1, v2≺v3, v4≺v5` in the order; arcs `v2->v1, v4->v3, v0->v5`.
    Regular([usize; 6]),
    /// `v0≺v1≺v2, v4≺v5` in the order; arcs `v3->v2, v4->v3, v0->v5, v5->v3`.
    Skewed([usize; 6]),
}

/// Enumerates candidate regular obstructions with base `(u, v)` against the
/// current orientation. Both companion arcs demanded by the enumeration are
/// forced to be present whenever the orientation is free of forbidden
/// configurations, so the filter is exhaustive.
fn regular_tuples(
    p: &PartialOrder,
    f: &Orientation,
    u: usize,
    v: usize,
) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for &v2 in f.in_neighbors(v) {
        for &v5 in f.out_neighbors(u) {
            if !f.has(v5, v2) {
                continue;
            }
            for v3 in p.upper_set(v2) {
                for &v4 in f.in_neighbors(v3) {
                    if p.less(v4, v5) {
                        out.push((v2, v3, v4, v5));
                    }
                }
            }
        }
    }
    out
}

/// Enumerates candidate skewed obstructions with base `(u, v)`.
fn skewed_tuples(
    p: &PartialOrder,
    f: &Orientation,
    u: usize,
    v: usize,
) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for &v5 in f.out_neighbors(u) {
        for &v2 in f.in_neighbors(v5) {
            if !p.less(v, v2) {
                continue;
            }
            for &v3 in f.out_neighbors(v5) {
                if !f.has(v3, v2) {
                    continue;
                }
                for &v4 in f.in_neighbors(v3) {
                    if p.less(v4, v5) {
                        out.push((v2, v3, v4, v5));
                    }
                }
            }
        }
    }
    out
}

/// Finds the first obstruction: regular ones over bases in ascending order,
/// then skewed ones.
pub fn find_obstruction(p: &PartialOrder, f: &Orientation) -> Option<Obstruction> {
    for (u, v) in p.pairs() {
        if let Some(&(v2, v3, v4, v5)) = regular_tuples(p, f, u, v).first() {
            return Some(Obstruction::Regular([u, v, v2, v3, v4, v5]));
        }
    }
    for (u, v) in p.pairs() {
        if let Some(&(v2, v3, v4, v5)) = skewed_tuples(p, f, u, v).first() {
            return Some(Obstruction::Skewed([u, v, v2, v3, v4, v5]));
        }
    }
    None
}

/// Removes all obstructions by reversing their front arcs, base by base:
/// first every regular obstruction, then every skewed one.
///
/// Requires an input free of forbidden configurations (the 2-SAT output).
/// The output is checked to be free of forbidden configurations and
/// obstructions and to be acyclic together with the order.
pub fn remove_obstructions(
    p: &PartialOrder,
    f: &Orientation,
) -> Result<Orientation, RecognizerError> {
    let mut f = f.clone();
    for (u, v) in p.pairs() {
        let mut reversal: Vec<(usize, usize)> = Vec::new();
        for (v2, v3, v4, v5) in regular_tuples(p, &f, u, v) {
            for front in [(v4, v3), (v5, v3), (v4, v2), (v5, v2)] {
                if !f.has(front.0, front.1) {
                    return Err(contract(format!(
                        "front arc {front:?} of a regular obstruction is not oriented forward"
                    )));
                }
                reversal.push(front);
            }
        }
        reversal.sort();
        reversal.dedup();
        f.reverse_all(&reversal);
    }
    for (u, v) in p.pairs() {
        let mut reversal: Vec<(usize, usize)> = Vec::new();
        for (_v2, v3, v4, v5) in skewed_tuples(p, &f, u, v) {
            for front in [(v4, v3), (v5, v3)] {
                if !f.has(front.0, front.1) {
                    return Err(contract(format!(
                        "front arc {front:?} of a skewed obstruction is not oriented forward"
                    )));
                }
                reversal.push(front);
            }
        }
        reversal.sort();
        reversal.dedup();
        f.reverse_all(&reversal);
    }

    if let Some(cfg) = find_forbidden_config(p, &f) {
        return Err(contract(format!(
            "forbidden configuration {cfg:?} after removal"
        )));
    }
    if let Some(obs) = find_obstruction(p, &f) {
        return Err(contract(format!("obstruction {obs:?} survived removal")));
    }
    if extension_of_union(p, &f).is_none() {
        return Err(contract("order plus orientation is cyclic after removal"));
    }
    Ok(f)
}

fn extension_of_union(p: &PartialOrder, f: &Orientation) -> Option<crate::poset::LinearOrder> {
    let mut arcs: Vec<(usize, usize)> = p.pairs().collect();
    arcs.extend(f.arcs());
    topological_order(p.n(), &arcs).ok()
}

/// The stage at which recognition refused the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefusalStage {
    /// The 2-CNF over the constrained edges is unsatisfiable. This is the
    /// only rejection gate of the pipeline.
    Unsat2Cnf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Yes(Box<Certificate>),
    No(RefusalStage),
}

impl Recognition {
    pub fn verdict(&self) -> bool {
        matches!(self, Recognition::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Recognition::Yes(cert) => Some(cert),
            Recognition::No(_) => None,
        }
    }
}

/// Decides whether `p` is the intersection of a linear order and a
/// semiorder; on success the certificate has been verified.
pub fn recognize(p: &PartialOrder) -> Result<Recognition, RecognizerError> {
    let l = if p.n() <= 1 || p.is_chain() {
        // Trivial certificate: the unique (or canonical) extension works.
        extension_of_union(p, &Orientation::from_arcs(p, &[])?)
            .ok_or_else(|| contract("chain is cyclic"))?
    } else {
        let eo = c4_claw_edges(p);
        let f = match orient_without_forbidden(p, &eo) {
            Some(f) => f,
            None => return Ok(Recognition::No(RefusalStage::Unsat2Cnf)),
        };
        let f = remove_obstructions(p, &f)?;
        extension_of_union(p, &f).ok_or_else(|| contract("obstruction-free union is cyclic"))?
    };

    let cert = build_certificate(p, &l)
        .map_err(|e| contract(format!("extension does not certify: {e}")))?;
    verify_certificate(p, &cert)
        .map_err(|e| contract(format!("certificate fails verification: {e}")))?;
    Ok(Recognition::Yes(Box::new(cert)))
}
