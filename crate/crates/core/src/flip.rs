//! Triangle representations and autonomous-set reversals.
//!
//! A triangle representation places each element as a triangle spanned by an
//! apex on an upper line and an interval on a lower line; `u ≺ v` exactly
//! when the triangle of `u` lies completely to the left of the triangle of
//! `v`. Reversing an autonomous set preserves the comparability graph, and a
//! certificate for the reversed order can be obtained by repeatedly flipping
//! part of the representation inside its spanning trapezoid.
//!
//! The flip geometry is proved for unit-length bases; our certificates carry
//! proper (not necessarily unit) intervals, so the final candidate is always
//! re-verified and, should that ever fail, the reversed order is simply
//! re-recognized from scratch.

use thiserror::Error;

use crate::poset::{LinearOrder, PartialOrder};
use crate::recognizer::{recognize, Recognition};
use crate::semiorder::{verify_certificate, Certificate, ProperIntervalRep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlipError {
    #[error("set is not autonomous: {outside} relates differently to {a} and {b}")]
    NotAutonomous { outside: usize, a: usize, b: usize },
    #[error("autonomous-set search limited to {limit} elements, got {actual}")]
    TooLarge { limit: usize, actual: usize },
    #[error("flip contract violated: {0}")]
    ContractViolation(String),
}

const AUTONOMOUS_SEARCH_LIMIT: usize = 16;

/// Checks the defining property: every element outside `a` relates in the
/// same way (below, above, or incomparable) to all members of `a`.
pub fn autonomy_violation(p: &PartialOrder, a: &[usize]) -> Option<(usize, usize, usize)> {
    let inside = |v: usize| a.contains(&v);
    let class = |v: usize, m: usize| -> u8 {
        if p.less(v, m) {
            0
        } else if p.less(m, v) {
            1
        } else {
            2
        }
    };
    for v in 0..p.n() {
        if inside(v) {
            continue;
        }
        let first = a[0];
        for &m in &a[1..] {
            if class(v, m) != class(v, first) {
                return Some((v, first, m));
            }
        }
    }
    None
}

pub fn is_autonomous(p: &PartialOrder, a: &[usize]) -> bool {
    !a.is_empty() && autonomy_violation(p, a).is_none()
}

fn require_autonomous(p: &PartialOrder, a: &[usize]) -> Result<(), FlipError> {
    if a.is_empty() {
        return Err(FlipError::ContractViolation(
            "autonomous set must be non-empty".into(),
        ));
    }
    match autonomy_violation(p, a) {
        None => Ok(()),
        Some((outside, x, y)) => Err(FlipError::NotAutonomous {
            outside,
            a: x,
            b: y,
        }),
    }
}

/// All autonomous subsets with at least two and fewer than `n` members, in
/// ascending bitmask order.
pub fn find_autonomous_sets(p: &PartialOrder) -> Result<Vec<Vec<usize>>, FlipError> {
    let n = p.n();
    if n > AUTONOMOUS_SEARCH_LIMIT {
        return Err(FlipError::TooLarge {
            limit: AUTONOMOUS_SEARCH_LIMIT,
            actual: n,
        });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.len() < 2 || members.len() == n {
            continue;
        }
        if is_autonomous(p, &members) {
            out.push(members);
        }
    }
    Ok(out)
}

/// The order with all relations inside the autonomous set reversed.
pub fn reverse_autonomous(p: &PartialOrder, a: &[usize]) -> Result<PartialOrder, FlipError> {
    require_autonomous(p, a)?;
    let n = p.n();
    let inside: Vec<bool> = {
        let mut m = vec![false; n];
        for &v in a {
            m[v] = true;
        }
        m
    };
    let mut rel = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let related = if inside[u] && inside[v] {
                p.less(v, u)
            } else {
                p.less(u, v)
            };
            rel[u * n + v] = related;
        }
    }
    PartialOrder::from_relation(p.names().to_vec(), rel)
        .map_err(|e| FlipError::ContractViolation(format!("reversal is not an order: {e}")))
}

/// Apex positions on the upper line plus base intervals on the lower line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRep {
    apex: Vec<i64>,
    base: ProperIntervalRep,
}

impl TriangleRep {
    /// The canonical representation carried by a certificate: apexes are the
    /// ranks in the linear extension, bases the witness intervals.
    pub fn from_certificate(cert: &Certificate) -> Self {
        let n = cert.names().len();
        let apex = (0..n)
            .map(|v| cert.extension().position(v) as i64)
            .collect();
        TriangleRep {
            apex,
            base: cert.representation().clone(),
        }
    }

    pub fn apex(&self, v: usize) -> i64 {
        self.apex[v]
    }

    pub fn base(&self) -> &ProperIntervalRep {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.apex.len()
    }

    /// Triangle of `u` completely left of triangle of `v`.
    pub fn left_of(&self, u: usize, v: usize) -> bool {
        self.apex[u] < self.apex[v] && self.base.interval(u).1 < self.base.interval(v).0
    }

    /// The order represented: intersection of the apex order and the base
    /// interval order.
    pub fn to_order(&self) -> PartialOrder {
        let n = self.n();
        let mut rel = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v && self.left_of(u, v) {
                    rel[u * n + v] = true;
                }
            }
        }
        PartialOrder::from_relation(self.base.names().to_vec(), rel)
            .expect("intersection of a linear and an interval order is transitive")
    }
}

/// Result of one flip step.
#[derive(Debug, Clone)]
pub struct FlipOutcome {
    pub rep: TriangleRep,
    /// The flipped superset `B`: all elements whose triangle lies inside the
    /// spanning trapezoid of the non-isolated part of the input set.
    pub flipped: Vec<usize>,
    /// The non-isolated part of the input set.
    pub core: Vec<usize>,
}

/// Members of `a` comparable to at least one other member.
fn non_isolated(p: &PartialOrder, a: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|&m| a.iter().any(|&o| o != m && p.comparable(m, o)))
        .collect()
}

/// Reflects, inside its spanning trapezoid, the representation of everything
/// the non-isolated part of `a` encloses.
///
/// The returned representation describes the input order with the enclosed
/// superset reversed. When every member of `a` is isolated the input is
/// returned unchanged (reversing an antichain does nothing).
pub fn flip_representation(
    rep: &TriangleRep,
    p: &PartialOrder,
    a: &[usize],
) -> Result<FlipOutcome, FlipError> {
    require_autonomous(p, a)?;
    if rep.to_order() != *p {
        return Err(FlipError::ContractViolation(
            "representation does not match the order".into(),
        ));
    }
    let core = non_isolated(p, a);
    if core.is_empty() {
        return Ok(FlipOutcome {
            rep: rep.clone(),
            flipped: Vec::new(),
            core,
        });
    }

    let apex_span = (
        core.iter().map(|&v| rep.apex(v)).min().unwrap(),
        core.iter().map(|&v| rep.apex(v)).max().unwrap(),
    );
    let base_span = (
        core.iter().map(|&v| rep.base.interval(v).0).min().unwrap(),
        core.iter().map(|&v| rep.base.interval(v).1).max().unwrap(),
    );

    let flipped: Vec<usize> = (0..rep.n())
        .filter(|&v| {
            let (l, r) = rep.base.interval(v);
            apex_span.0 <= rep.apex(v)
                && rep.apex(v) <= apex_span.1
                && base_span.0 <= l
                && r <= base_span.1
        })
        .collect();

    let mut apex = rep.apex.clone();
    let mut intervals: Vec<(i64, i64)> = (0..rep.n()).map(|v| rep.base.interval(v)).collect();
    for &v in &flipped {
        apex[v] = apex_span.0 + apex_span.1 - apex[v];
        let (l, r) = intervals[v];
        intervals[v] = (base_span.0 + base_span.1 - r, base_span.0 + base_span.1 - l);
    }
    let base =
        ProperIntervalRep::from_parts(rep.base.names().to_vec(), rep.base.denominator(), intervals);
    Ok(FlipOutcome {
        rep: TriangleRep { apex, base },
        flipped,
        core,
    })
}

/// A verified certificate for the order with the autonomous set reversed.
///
/// Iterates the flip until the remaining set is an antichain, then rebuilds
/// a certificate from the final representation. If the candidate does not
/// verify (possible because the bases are proper rather than unit), the
/// reversed order is re-recognized directly; comparability invariance
/// guarantees that recognition succeeds.
pub fn flip_certificate(
    p: &PartialOrder,
    cert: &Certificate,
    a: &[usize],
) -> Result<Certificate, FlipError> {
    require_autonomous(p, a)?;
    let target = reverse_autonomous(p, a)?;
    if verify_certificate(p, cert).is_err() {
        return Err(FlipError::ContractViolation(
            "input certificate does not verify".into(),
        ));
    }

    let n = p.n();
    let mut cur_p = p.clone();
    let mut cur_a: Vec<usize> = a.to_vec();
    let mut cur_rep = TriangleRep::from_certificate(cert);
    let mut rounds = 0usize;
    let candidate = loop {
        if rounds > 2 * n + 2 {
            break None; // shrinking argument exhausted; fall back
        }
        rounds += 1;
        if cur_a.is_empty() || non_isolated(&cur_p, &cur_a).is_empty() {
            break certificate_from_rep(&cur_rep);
        }
        match flip_representation(&cur_rep, &cur_p, &cur_a) {
            Ok(outcome) => {
                cur_p = outcome.rep.to_order();
                cur_a = outcome
                    .flipped
                    .iter()
                    .copied()
                    .filter(|v| !outcome.core.contains(v))
                    .collect();
                cur_rep = outcome.rep;
            }
            // The flip geometry assumes unit bases; drift lands here.
            Err(FlipError::NotAutonomous { .. }) | Err(FlipError::ContractViolation(_)) => {
                break None;
            }
            Err(e) => return Err(e),
        }
    };

    if let Some(candidate) = candidate {
        if verify_certificate(&target, &candidate).is_ok() {
            return Ok(candidate);
        }
    }
    match recognize(&target) {
        Ok(Recognition::Yes(cert)) => Ok(*cert),
        Ok(Recognition::No(stage)) => Err(FlipError::ContractViolation(format!(
            "reversed order rejected at {stage:?}, violating comparability invariance"
        ))),
        Err(e) => Err(FlipError::ContractViolation(e.to_string())),
    }
}

/// Reads a certificate off a triangle representation: the apex order as the
/// extension, the bases as the witness intervals. Fails on tied apexes.
fn certificate_from_rep(rep: &TriangleRep) -> Option<Certificate> {
    let n = rep.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| rep.apex(v));
    for w in order.windows(2) {
        if rep.apex(w[0]) == rep.apex(w[1]) {
            return None;
        }
    }
    Some(Certificate::from_parts(
        rep.base().names().to_vec(),
        LinearOrder::new(order),
        rep.base().clone(),
    ))
}
