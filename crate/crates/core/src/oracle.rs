//! Brute-force ground truth and reproducible instance generators.
//!
//! [`oracle_recognize`] decides membership by exhaustive search for a linear
//! extension fulfilling the `2+2` and `3+1` rules, entirely independent of
//! the orientation pipeline in [`crate::recognizer`].

use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::poset::{default_names, Graph, LinearOrder, PartialOrder};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("instance too large for brute force: {actual} exceeds limit {limit}")]
pub struct TooLarge {
    pub limit: usize,
    pub actual: usize,
}

const ORACLE_LIMIT: usize = 10;
const ENUM_POSET_LIMIT: usize = 5;
const ENUM_ORIENT_LIMIT: usize = 20;

/// True iff some linear extension of `p` fulfills both rules.
pub fn oracle_recognize(p: &PartialOrder) -> Result<bool, TooLarge> {
    Ok(find_valid_extension(p)?.is_some())
}

/// The first linear extension of `p` (in lexicographic backtracking order)
/// fulfilling the `2+2` and `3+1` rules, if any.
///
/// Backtracks over down-set prefixes in ascending element order, pruning a
/// prefix as soon as the placed elements already exhibit a rule violation.
/// A surviving full extension is re-validated with
/// [`PartialOrder::rule_violation`] before the verdict.
pub fn find_valid_extension(p: &PartialOrder) -> Result<Option<LinearOrder>, TooLarge> {
    let n = p.n();
    if n > ORACLE_LIMIT {
        return Err(TooLarge {
            limit: ORACLE_LIMIT,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(Some(LinearOrder::identity(0)));
    }

    let mut preds = vec![0u16; n];
    let mut succs = vec![0u16; n];
    let mut inc = vec![0u16; n];
    for u in 0..n {
        for v in 0..n {
            if p.less(v, u) {
                preds[u] |= 1 << v;
            }
            if p.less(u, v) {
                succs[u] |= 1 << v;
            }
            if p.incomparable(u, v) {
                inc[u] |= 1 << v;
            }
        }
    }

    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    let mut placed: u16 = 0;
    Ok(search(p, &preds, &succs, &inc, &mut prefix, &mut placed))
}

fn search(
    p: &PartialOrder,
    preds: &[u16],
    succs: &[u16],
    inc: &[u16],
    prefix: &mut Vec<usize>,
    placed: &mut u16,
) -> Option<LinearOrder> {
    let n = p.n();
    if prefix.len() == n {
        let l = LinearOrder::new(prefix.clone());
        let clean = p
            .rule_violation(&l)
            .expect("prefix order extends p")
            .is_none();
        debug_assert!(clean, "incremental pruning missed a violation");
        return if clean { Some(l) } else { None };
    }
    for e in 0..n {
        if *placed & (1 << e) != 0 || preds[e] & !*placed != 0 {
            continue;
        }
        if prefix_stays_clean(preds, succs, inc, prefix, e) {
            prefix.push(e);
            *placed |= 1 << e;
            if let Some(l) = search(p, preds, succs, inc, prefix, placed) {
                return Some(l);
            }
            prefix.pop();
            *placed &= !(1 << e);
        }
    }
    None
}

/// Would appending `e` keep the prefix free of completed rule violations?
///
/// A violation becomes decided exactly when the last of its four elements is
/// placed, and `e` can only close one as the `y` or `w` role of a `2+2` or
/// the chain top of a `3+1`.
fn prefix_stays_clean(
    preds: &[u16],
    succs: &[u16],
    inc: &[u16],
    prefix: &[usize],
    e: usize,
) -> bool {
    let k = prefix.len();
    for i in 0..k {
        let a = prefix[i];
        let a_bit = 1u16 << a;
        if preds[e] & a_bit != 0 {
            for &b in &prefix[i + 1..] {
                if inc[a] & (1 << b) == 0 {
                    continue;
                }
                // e as y: a ≺ e and b placed after a with a ∥ b; a 2+2
                // violation needs some z ≺ b incomparable to e.
                // e as w: a ≺ e and b after a with a ∥ b; needs some x ≺ b
                // incomparable to e. Both reduce to the same bit test.
                if preds[b] & inc[e] != 0 {
                    return false;
                }
            }
            // e as chain top of a 3+1: a ≺ y ≺ e for some placed y, with a
            // placed element after a incomparable to both a and e.
            if succs[a] & preds[e] != 0 {
                for &b in &prefix[i + 1..] {
                    if inc[a] & inc[e] & (1 << b) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every labeled strict partial order on `n` elements, deterministic order.
pub fn enumerate_posets(n: usize) -> Result<Vec<PartialOrder>, TooLarge> {
    if n > ENUM_POSET_LIMIT {
        return Err(TooLarge {
            limit: ENUM_POSET_LIMIT,
            actual: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut state = vec![0u8; pairs.len()]; // 0 incomparable, 1 forward, 2 backward
    loop {
        let mut rel = vec![false; n * n];
        for (s, &(i, j)) in state.iter().zip(&pairs) {
            match s {
                1 => rel[i * n + j] = true,
                2 => rel[j * n + i] = true,
                _ => {}
            }
        }
        if is_transitive(&rel, n) {
            out.push(
                PartialOrder::from_relation(default_names(n), rel)
                    .expect("transitive one-directional relation is a poset"),
            );
        }
        // next mixed-radix state
        let mut carry = true;
        for s in state.iter_mut().rev() {
            if carry {
                *s += 1;
                if *s == 3 {
                    *s = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            return Ok(out);
        }
    }
}

fn is_transitive(rel: &[bool], n: usize) -> bool {
    for u in 0..n {
        for v in 0..n {
            if !rel[u * n + v] {
                continue;
            }
            for w in 0..n {
                if rel[v * n + w] && !rel[u * n + w] {
                    return false;
                }
            }
        }
    }
    true
}

/// All transitive orientations of `g`, each exactly once, deterministic
/// order (edges in lexicographic order, oriented low-to-high first).
pub fn enumerate_transitive_orientations(g: &Graph) -> Result<Vec<PartialOrder>, TooLarge> {
    let edges = g.edges();
    if edges.len() > ENUM_ORIENT_LIMIT {
        return Err(TooLarge {
            limit: ENUM_ORIENT_LIMIT,
            actual: edges.len(),
        });
    }
    let n = g.n();
    let mut arc = vec![false; n * n];
    let mut out = Vec::new();
    orient_rest(g, &edges, 0, &mut arc, &mut out);
    Ok(out)
}

fn orient_rest(
    g: &Graph,
    edges: &[(usize, usize)],
    k: usize,
    arc: &mut Vec<bool>,
    out: &mut Vec<PartialOrder>,
) {
    let n = g.n();
    if k == edges.len() {
        let rel = arc.clone();
        out.push(
            PartialOrder::from_relation(g.names().to_vec(), rel)
                .expect("pruned assignment is transitive"),
        );
        return;
    }
    let (u, v) = edges[k];
    for (a, b) in [(u, v), (v, u)] {
        if arc_is_consistent(g, arc, a, b) {
            arc[a * n + b] = true;
            orient_rest(g, edges, k + 1, arc, out);
            arc[a * n + b] = false;
        }
    }
}

/// Adding arc `a -> b` must not complete a transitivity violation with the
/// arcs already placed: a directed path through the new arc whose closing
/// pair is a non-edge or is oriented backwards.
fn arc_is_consistent(g: &Graph, arc: &[bool], a: usize, b: usize) -> bool {
    let n = g.n();
    for c in 0..n {
        if c == a || c == b {
            continue;
        }
        // a -> b -> c
        if arc[b * n + c] && (!g.has_edge(a, c) || arc[c * n + a]) {
            return false;
        }
        // c -> a -> b
        if arc[c * n + a] && (!g.has_edge(c, b) || arc[b * n + c]) {
            return false;
        }
    }
    true
}

/// A reproducible random poset: a random permutation is drawn, forward arcs
/// are kept with probability `density`, and the result is transitively
/// closed. The stream is ChaCha8 keyed by `seed`, so identical seeds give
/// identical posets on every platform.
pub fn random_poset(n: usize, density: f64, seed: u64) -> PartialOrder {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let perm = random_permutation(n, &mut rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if next_unit(&mut rng) < density {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    PartialOrder::indexed(n, &pairs).expect("arcs follow a permutation, hence acyclic")
}

/// A reproducible order that is a linear-semiorder by construction: the
/// intersection of a random linear order with the unit-interval order of
/// random points spread over `[0, n/4]`.
pub fn random_linear_semiorder(n: usize, seed: u64) -> PartialOrder {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let perm = random_permutation(n, &mut rng);
    let mut rank = vec![0usize; n];
    for (i, &v) in perm.iter().enumerate() {
        rank[v] = i;
    }
    let span = n as f64 / 4.0;
    let starts: Vec<f64> = (0..n).map(|_| next_unit(&mut rng) * span).collect();
    let mut rel = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v && rank[u] < rank[v] && starts[u] + 1.0 < starts[v] {
                rel[u * n + v] = true;
            }
        }
    }
    PartialOrder::from_relation(default_names(n), rel)
        .expect("intersection of two orders is an order")
}

/// A reproducible random graph with edge probability `density`.
pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if next_unit(&mut rng) < density {
                edges.push((u, v));
            }
        }
    }
    Graph::indexed(n, &edges).expect("no loops generated")
}

fn random_permutation(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Uniform in `[0, 1)` from the top 53 bits of one draw.
fn next_unit(rng: &mut rand_chacha::ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PatternKind;
    use crate::samples;

    #[test]
    fn chevron_dual_has_a_valid_extension() {
        assert!(oracle_recognize(&samples::chevron_dual()).unwrap());
    }

    #[test]
    fn forbidden_interval_order_has_none() {
        assert!(!oracle_recognize(&samples::forbidden_interval_order()).unwrap());
    }

    #[test]
    fn two_plus_two_is_accepted() {
        assert!(oracle_recognize(&samples::two_plus_two()).unwrap());
    }

    #[test]
    fn oracle_rejects_oversized_input() {
        let p = PartialOrder::indexed(11, &[]).unwrap();
        assert!(oracle_recognize(&p).is_err());
    }

    /// Plain reference: every extension via simple recursion, checked with
    /// the quadratic rule scan only.
    fn slow_oracle(p: &PartialOrder) -> bool {
        fn go(p: &PartialOrder, prefix: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            if prefix.len() == p.n() {
                let l = LinearOrder::new(prefix.clone());
                return p.rule_violation(&l).unwrap().is_none();
            }
            for e in 0..p.n() {
                if used[e] || (0..p.n()).any(|q| !used[q] && p.less(q, e)) {
                    continue;
                }
                used[e] = true;
                prefix.push(e);
                if go(p, prefix, used) {
                    return true;
                }
                prefix.pop();
                used[e] = false;
            }
            false
        }
        go(p, &mut Vec::new(), &mut vec![false; p.n()])
    }

    #[test]
    fn pruned_search_matches_plain_enumeration() {
        for seed in 0..120 {
            let n = 3 + (seed as usize % 4);
            let p = random_poset(n, 0.25 + 0.1 * (seed % 5) as f64, seed);
            assert_eq!(
                oracle_recognize(&p).unwrap(),
                slow_oracle(&p),
                "disagreement on seed {seed}: {p:?}"
            );
        }
    }

    #[test]
    fn poset_counts_for_small_n() {
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(2).unwrap().len(), 3);
        assert_eq!(enumerate_posets(3).unwrap().len(), 19);
        assert_eq!(enumerate_posets(4).unwrap().len(), 219);
    }

    #[test]
    fn enumerated_posets_are_distinct() {
        let all = enumerate_posets(3).unwrap();
        for (i, p) in all.iter().enumerate() {
            for q in &all[..i] {
                assert!(p != q);
            }
        }
    }

    #[test]
    fn orientation_counts() {
        let single = Graph::indexed(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_transitive_orientations(&single).unwrap().len(), 2);
        let path = Graph::indexed(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_transitive_orientations(&path).unwrap().len(), 2);
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let c5 = Graph::indexed(5, &c5).unwrap();
        assert_eq!(enumerate_transitive_orientations(&c5).unwrap().len(), 0);
    }

    #[test]
    fn orientation_enumeration_matches_exhaustive_filter() {
        for seed in 0..80 {
            let g = random_graph(5, 0.5, 1000 + seed);
            let edges = g.edges();
            let mut expected = 0usize;
            for bits in 0u32..(1 << edges.len()) {
                let mut rel = vec![false; g.n() * g.n()];
                for (k, &(u, v)) in edges.iter().enumerate() {
                    let (a, b) = if bits & (1 << k) == 0 { (u, v) } else { (v, u) };
                    rel[a * g.n() + b] = true;
                }
                if is_transitive(&rel, g.n()) {
                    expected += 1;
                }
            }
            assert_eq!(
                enumerate_transitive_orientations(&g).unwrap().len(),
                expected,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn random_poset_extremes() {
        let antichain = random_poset(6, 0.0, 9);
        assert_eq!(antichain.relation_count(), 0);
        let chain = random_poset(6, 1.0, 9);
        assert!(chain.is_chain());
    }

    #[test]
    fn random_poset_is_reproducible() {
        let a = random_poset(8, 0.3, 42);
        let b = random_poset(8, 0.3, 42);
        assert_eq!(a, b);
        let c = random_poset(8, 0.3, 43);
        assert!(a != c);
    }

    #[test]
    fn interval_orders_rejected_by_oracle_contain_three_plus_one() {
        // Interval orders have no 2+2, so a rejection must stem from 3+1.
        let p = samples::forbidden_interval_order();
        assert!(!oracle_recognize(&p).unwrap());
        assert!(!p.find_pattern(PatternKind::ThreePlusOne).is_empty());
    }
}
