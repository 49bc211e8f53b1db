//! Construction of a witness semiorder from a rule-fulfilling linear
//! extension, and certificate verification.
//!
//! Given a partial order `P` and a linear extension `L` fulfilling the `2+2`
//! and `3+1` rules, the builder derives two forcing relations, places the
//! elements in an order compatible with them, assigns each placed element a
//! level, and reads off a proper interval representation whose semiorder `S`
//! satisfies `L ∩ S = P`. All intermediate invariants are checked; a failure
//! signals an implementation bug, never bad user input.

use std::fmt;

use thiserror::Error;

use crate::poset::{LinearOrder, PartialOrder, PatternKind, PosetError, Quad};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemiorderError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("linear extension violates the {kind:?} rule on ({x}, {y}, {z}, {w})", kind = .0.kind, x = .0.x, y = .0.y, z = .0.z, w = .0.w)]
    RuleViolation(Quad),
    #[error("construction contract violated: {0}")]
    ContractViolation(String),
}

/// Ordered element pairs, ascending.
pub type PairSet = Vec<(usize, usize)>;

/// The two pair sets that force placement order, as sorted index pairs.
///
/// The first holds `(x, y)` whenever some `z` has `x ≺ z` in `P` while `y`
/// precedes `z` only in `L`; the second holds `(x, y)` whenever some `z`
/// precedes `x` only in `L` but `z ≺ y` in `P`. Pairs already related in `P`
/// are omitted: they add nothing to the placement relation, which is the
/// union of `P` with both sets.
pub fn forcing_relations(
    p: &PartialOrder,
    l: &LinearOrder,
) -> Result<(PairSet, PairSet), SemiorderError> {
    if let Some(quad) = p.rule_violation(l)? {
        return Err(SemiorderError::RuleViolation(quad));
    }
    Ok(forcing_relations_unchecked(p, l))
}

fn forcing_relations_unchecked(p: &PartialOrder, l: &LinearOrder) -> (PairSet, PairSet) {
    let n = p.n();
    let in_l_minus_p = |u: usize, v: usize| p.incomparable(u, v) && l.before(u, v);
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || p.less(x, y) {
                continue;
            }
            if (0..n).any(|z| p.less(x, z) && in_l_minus_p(y, z)) {
                r1.push((x, y));
            }
            if (0..n).any(|z| in_l_minus_p(z, x) && p.less(z, y)) {
                r2.push((x, y));
            }
        }
    }
    (r1, r2)
}

/// A linear order containing `P` and both forcing relations.
///
/// Deterministic tie-break: among the elements whose forced predecessors are
/// all placed, pick one whose most recently placed strict `P`-predecessor is
/// latest (elements without placed predecessors come last), breaking
/// remaining ties by `L`-position. Placing an element right after its
/// predecessors keeps interval left endpoints as late as possible.
pub fn placement_order(p: &PartialOrder, l: &LinearOrder) -> Result<LinearOrder, SemiorderError> {
    if let Some(quad) = p.rule_violation(l)? {
        return Err(SemiorderError::RuleViolation(quad));
    }
    let (r1, r2) = forcing_relations_unchecked(p, l);
    let n = p.n();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    let add = |u: usize, v: usize, succ: &mut Vec<Vec<usize>>, indeg: &mut Vec<usize>| {
        succ[u].push(v);
        indeg[v] += 1;
    };
    for (u, v) in p.pairs() {
        add(u, v, &mut succ, &mut indeg);
    }
    for &(u, v) in r1.iter().chain(r2.iter()) {
        add(u, v, &mut succ, &mut indeg);
    }

    let mut placed = vec![false; n];
    // Position of the latest placed P-predecessor, or None.
    let mut last_pred: Vec<Option<usize>> = vec![None; n];
    let mut perm = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if placed[v] || indeg[v] > 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    (last_pred[v], std::cmp::Reverse(l.position(v)))
                        > (last_pred[b], std::cmp::Reverse(l.position(b)))
                }
            };
            if better {
                best = Some(v);
            }
        }
        let v = best.ok_or_else(|| {
            SemiorderError::ContractViolation("placement relation has a cycle".into())
        })?;
        let pos = perm.len();
        perm.push(v);
        placed[v] = true;
        for &w in &succ[v] {
            indeg[w] = indeg[w].saturating_sub(1);
        }
        for w in 0..n {
            if !placed[w] && p.less(v, w) {
                last_pred[w] = Some(pos);
            }
        }
    }
    Ok(LinearOrder::new(perm))
}

/// The level assigned to each placement position `1..=n`.
///
/// Level 0 means "no usable predecessor"; level `i > 0` refers back to
/// placement position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelFunction {
    values: Vec<usize>,
}

impl LevelFunction {
    /// Level of position `j` (1-based).
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Computes the level of each position of `lq`: the deepest position above
/// the previous level whose element lies below the current one in `P`.
///
/// The four defining properties are checked before returning: levels are
/// strictly below their position, monotone, at or above every `P`-predecessor
/// position, and strictly below every position related only in `L`.
pub fn level_function(
    p: &PartialOrder,
    lq: &LinearOrder,
    l: &LinearOrder,
) -> Result<LevelFunction, SemiorderError> {
    let n = lq.len();
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let prev = if j == 1 { 0 } else { values[j - 2] };
        let vj = lq.at(j - 1);
        let candidate = (prev + 1..j).filter(|&i| p.less(lq.at(i - 1), vj)).max();
        values.push(candidate.unwrap_or(prev));
    }
    let f = LevelFunction { values };

    for j in 1..=n {
        if f.at(j) >= j {
            return Err(contract(format!(
                "level {} not below position {j}",
                f.at(j)
            )));
        }
        if j > 1 && f.at(j - 1) > f.at(j) {
            return Err(contract(format!("levels decrease at position {j}")));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let (vi, vj) = (lq.at(i - 1), lq.at(j - 1));
            if p.less(vi, vj) && i > f.at(j) {
                return Err(contract(format!(
                    "position {i} below {j} in the order but above its level"
                )));
            }
            if p.incomparable(vi, vj) && l.before(vi, vj) && f.at(j) >= i {
                return Err(contract(format!(
                    "position {i} only linearly below {j} but within its level"
                )));
            }
        }
    }
    Ok(f)
}

fn contract(msg: String) -> SemiorderError {
    SemiorderError::ContractViolation(msg)
}

/// A family of closed intervals with exact rational endpoints over a common
/// denominator, one per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperIntervalRep {
    names: Vec<String>,
    denom: u64,
    intervals: Vec<(i64, i64)>,
}

impl ProperIntervalRep {
    pub fn from_parts(names: Vec<String>, denom: u64, intervals: Vec<(i64, i64)>) -> Self {
        assert_eq!(names.len(), intervals.len());
        assert!(denom > 0, "denominator must be positive");
        ProperIntervalRep {
            names,
            denom,
            intervals,
        }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn denominator(&self) -> u64 {
        self.denom
    }

    /// Scaled endpoints of the interval of element `v`; divide by the
    /// denominator for the real values.
    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    /// The first pair `(a, b)` where the interval of `a` properly contains
    /// the interval of `b`, if any.
    pub fn containment(&self) -> Option<(usize, usize)> {
        for a in 0..self.n() {
            for b in 0..self.n() {
                if a == b {
                    continue;
                }
                let (la, ra) = self.intervals[a];
                let (lb, rb) = self.intervals[b];
                if la <= lb && rb <= ra && (la < lb || rb < ra) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.containment().is_none()
    }

    /// The interval order: `u ≺ v` iff the interval of `u` ends strictly
    /// before the interval of `v` begins.
    pub fn to_order(&self) -> PartialOrder {
        let n = self.n();
        let mut rel = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v && self.intervals[u].1 < self.intervals[v].0 {
                    rel[u * n + v] = true;
                }
            }
        }
        PartialOrder::from_relation(self.names.clone(), rel)
            .expect("interval containment order is transitive")
    }
}

/// Builds the interval for placement position `i` as
/// `[level(i) + (i-1)/n, i]`, scaled by `n` into integers, and attributes it
/// to the element at that position.
pub fn build_intervals(
    p: &PartialOrder,
    f: &LevelFunction,
    lq: &LinearOrder,
) -> Result<ProperIntervalRep, SemiorderError> {
    let n = lq.len();
    assert_eq!(f.len(), n);
    let denom = n.max(1) as u64;
    let mut intervals = vec![(0i64, 0i64); n];
    for i in 1..=n {
        let left = (denom as i64) * f.at(i) as i64 + (i as i64 - 1);
        let right = (denom as i64) * i as i64;
        intervals[lq.at(i - 1)] = (left, right);
    }
    let rep = ProperIntervalRep {
        names: p.names().to_vec(),
        denom,
        intervals,
    };
    if let Some((a, b)) = rep.containment() {
        return Err(contract(format!(
            "interval of {} contains interval of {}",
            rep.names[a], rep.names[b]
        )));
    }
    for i in 2..=n {
        if rep.intervals[lq.at(i - 2)].0 >= rep.intervals[lq.at(i - 1)].0 {
            return Err(contract(format!(
                "left endpoints not increasing at position {i}"
            )));
        }
    }
    Ok(rep)
}

/// A linear extension plus a proper interval representation whose semiorder
/// `S` satisfies `L ∩ S = P` for the order the certificate was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    linext: LinearOrder,
    rep: ProperIntervalRep,
}

impl Certificate {
    pub fn from_parts(names: Vec<String>, linext: LinearOrder, rep: ProperIntervalRep) -> Self {
        assert_eq!(linext.len(), rep.n());
        assert_eq!(names, rep.names());
        Certificate { linext, rep }
    }

    pub fn extension(&self) -> &LinearOrder {
        &self.linext
    }

    pub fn representation(&self) -> &ProperIntervalRep {
        &self.rep
    }

    pub fn names(&self) -> &[String] {
        self.rep.names()
    }

    /// The witness semiorder derived from the interval representation.
    pub fn derived_semiorder(&self) -> PartialOrder {
        self.rep.to_order()
    }
}

/// Runs the whole construction: forcing relations, placement order, levels,
/// intervals; asserts `L ∩ S = P` on the result.
pub fn build_certificate(p: &PartialOrder, l: &LinearOrder) -> Result<Certificate, SemiorderError> {
    if let Some(quad) = p.rule_violation(l)? {
        return Err(SemiorderError::RuleViolation(quad));
    }
    let lq = placement_order(p, l)?;
    let f = level_function(p, &lq, l)?;
    let rep = build_intervals(p, &f, &lq)?;
    let s = rep.to_order();
    for u in 0..p.n() {
        for v in 0..p.n() {
            if u == v {
                continue;
            }
            let in_intersection = l.before(u, v) && s.less(u, v);
            if in_intersection != p.less(u, v) {
                return Err(contract(format!(
                    "intersection with the witness differs from the input at ({}, {})",
                    p.name(u),
                    p.name(v)
                )));
            }
        }
    }
    Ok(Certificate {
        linext: l.clone(),
        rep,
    })
}

/// Why a certificate fails verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    /// Certificate elements do not match the order's elements.
    ElementMismatch(String),
    /// The stated linear order is not an extension of the order.
    NotExtension,
    /// The representation is not proper: interval of `.0` contains `.1`.
    NotProper(String, String),
    /// The derived order is not a semiorder (should be unreachable once
    /// properness holds).
    NotSemiorder(Quad),
    /// `L ∩ S` differs from the order at the named pair.
    IntersectionMismatch(String, String),
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::ElementMismatch(name) => {
                write!(
                    f,
                    "element mismatch: `{name}` is not shared by order and certificate"
                )
            }
            VerifyFailure::NotExtension => write!(f, "not an extension of the order"),
            VerifyFailure::NotProper(a, b) => {
                write!(f, "not proper: interval of {a} contains interval of {b}")
            }
            VerifyFailure::NotSemiorder(q) => {
                write!(f, "witness is not a semiorder (pattern {:?})", q.kind)
            }
            VerifyFailure::IntersectionMismatch(u, v) => {
                write!(f, "intersection mismatch at ({u}, {v})")
            }
        }
    }
}

/// Checks a certificate against an order: the extension property, the
/// properness of the representation, that the witness is a semiorder, and
/// the defining equation `L ∩ S = P`. Returns the first failure.
pub fn verify_certificate(p: &PartialOrder, cert: &Certificate) -> Result<(), VerifyFailure> {
    let n = p.n();
    if cert.names().len() != n {
        return Err(VerifyFailure::ElementMismatch(format!(
            "{} elements vs {}",
            cert.names().len(),
            n
        )));
    }
    // cert index -> p index
    let mut to_p = Vec::with_capacity(n);
    for name in cert.names() {
        match p.index_of(name) {
            Some(i) => to_p.push(i),
            None => return Err(VerifyFailure::ElementMismatch(name.clone())),
        }
    }

    let l_in_p = LinearOrder::new(cert.linext.iter().map(|c| to_p[c]).collect());
    if !p.is_extension(&l_in_p) {
        return Err(VerifyFailure::NotExtension);
    }

    if let Some((a, b)) = cert.rep.containment() {
        return Err(VerifyFailure::NotProper(
            cert.names()[a].clone(),
            cert.names()[b].clone(),
        ));
    }

    let s = cert.derived_semiorder();
    for kind in [PatternKind::TwoPlusTwo, PatternKind::ThreePlusOne] {
        if let Some(&q) = s.find_pattern(kind).first() {
            return Err(VerifyFailure::NotSemiorder(q));
        }
    }

    let mut from_p = vec![0usize; n];
    for (c, &i) in to_p.iter().enumerate() {
        from_p[i] = c;
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let in_intersection = l_in_p.before(u, v) && s.less(from_p[u], from_p[v]);
            if in_intersection != p.less(u, v) {
                return Err(VerifyFailure::IntersectionMismatch(
                    p.name(u).to_string(),
                    p.name(v).to_string(),
                ));
            }
        }
    }
    Ok(())
}
