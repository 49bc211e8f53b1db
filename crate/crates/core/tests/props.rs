//! Property tests over randomly generated instances.

use proptest::prelude::*;

use linsemi::io::{parse_graph, parse_poset, serialize_graph, serialize_poset};
use linsemi::oracle::{random_graph, random_poset};
use linsemi::poset::{LinearOrder, PartialOrder, PatternKind};

fn arb_poset() -> impl Strategy<Value = PartialOrder> {
    (0usize..9, 0u32..=10, any::<u64>())
        .prop_map(|(n, d, seed)| random_poset(n, f64::from(d) / 10.0, seed))
}

/// A linear extension chosen greedily with a rotated element priority.
fn extension_with_rotated_tiebreak(p: &PartialOrder, shift: usize) -> LinearOrder {
    let n = p.n();
    let mut placed = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v] && (0..n).all(|u| !p.less(u, v) || placed[u]))
            .min_by_key(|&v| (v + shift) % n.max(1))
            .expect("a finite order always has a minimal element");
        placed[v] = true;
        perm.push(v);
    }
    LinearOrder::new(perm)
}

proptest! {
    #[test]
    fn poset_text_round_trip(p in arb_poset()) {
        prop_assert_eq!(parse_poset(&serialize_poset(&p)).unwrap(), p);
    }

    #[test]
    fn graph_text_round_trip((n, d, seed) in (0usize..9, 0u32..=10, any::<u64>())) {
        let g = random_graph(n, f64::from(d) / 10.0, seed);
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    /// The rule check agrees with a plain scan over all quadruples.
    #[test]
    fn rule_check_matches_naive_scan(p in arb_poset(), shift in 0usize..8) {
        let n = p.n();
        let l = extension_with_rotated_tiebreak(&p, shift);
        prop_assert!(p.is_extension(&l));

        let fast = p.rule_violation(&l).unwrap().is_none();
        let mut naive_clean = true;
        for x in 0..n { for y in 0..n { for z in 0..n { for w in 0..n {
            let distinct = x != y && x != z && x != w && y != z && y != w && z != w;
            if !distinct { continue; }
            if p.less(x, y) && p.less(z, w)
                && p.incomparable(x, w) && p.incomparable(z, y)
                && l.before(x, w) && l.before(z, y) {
                naive_clean = false;
            }
            if p.less(x, y) && p.less(y, z)
                && p.incomparable(x, w) && p.incomparable(w, z)
                && l.before(x, w) && l.before(w, z) {
                naive_clean = false;
            }
        }}}}
        prop_assert_eq!(fast, naive_clean);
    }

    /// Interval orders never contain the nested-chains pattern.
    #[test]
    fn interval_order_check_is_consistent(p in arb_poset()) {
        let no_two_two = p.find_pattern(PatternKind::TwoPlusTwo).is_empty();
        prop_assert_eq!(p.is_interval_order(), no_two_two);
        if p.is_semiorder() {
            prop_assert!(p.is_interval_order());
        }
    }

    /// Parsers reject junk with errors, never panics.
    #[test]
    fn parsers_never_panic(text in ".{0,200}") {
        let _ = parse_poset(&text);
        let _ = parse_graph(&text);
        let _ = linsemi::io::parse_certificate(&text);
    }
}
