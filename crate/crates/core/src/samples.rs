//! Small hand-built orders used in documentation and tests.

use crate::poset::PartialOrder;

/// The dual of the chevron: six elements `a..f` with cover relations
/// `a≺b, a≺e, b≺d, c≺d, c≺f, e≺f`. A linear-semiorder that is neither a
/// semiorder (it contains an induced `2+2`) nor two-dimensional.
pub fn chevron_dual() -> PartialOrder {
    let names = ["a", "b", "c", "d", "e", "f"].map(String::from).to_vec();
    PartialOrder::from_name_pairs(
        names,
        &[
            ("a", "b"),
            ("a", "e"),
            ("b", "d"),
            ("c", "d"),
            ("c", "f"),
            ("e", "f"),
        ],
    )
    .expect("fixture is acyclic")
}

/// A ten-element interval order that is not a linear-semiorder, while every
/// proper induced suborder of it is one (a minimal forbidden order for the
/// class).
///
/// Interval representation (denominator-free integer endpoints):
/// `a1=[0,5] a2=[6,7] a3=[8,13] b1=[0,1] b2=[2,3] b3=[4,9] b4=[10,11]
/// b5=[12,13] c1=[0,9] c2=[4,13]`.
pub fn forbidden_interval_order() -> PartialOrder {
    let names = ["a1", "a2", "a3", "b1", "b2", "b3", "b4", "b5", "c1", "c2"]
        .map(String::from)
        .to_vec();
    let intervals: [(i64, i64); 10] = [
        (0, 5),   // a1
        (6, 7),   // a2
        (8, 13),  // a3
        (0, 1),   // b1
        (2, 3),   // b2
        (4, 9),   // b3
        (10, 11), // b4
        (12, 13), // b5
        (0, 9),   // c1
        (4, 13),  // c2
    ];
    let mut pairs = Vec::new();
    for (u, &(_, ru)) in intervals.iter().enumerate() {
        for (v, &(lv, _)) in intervals.iter().enumerate() {
            if ru < lv {
                pairs.push((u, v));
            }
        }
    }
    PartialOrder::from_pairs(names, &pairs).expect("fixture is acyclic")
}

/// The four-element order `x ≺ y, z ≺ w` with no other relations.
pub fn two_plus_two() -> PartialOrder {
    let names = ["x", "y", "z", "w"].map(String::from).to_vec();
    PartialOrder::from_name_pairs(names, &[("x", "y"), ("z", "w")]).expect("fixture is acyclic")
}

/// The four-element order `x ≺ y ≺ z` plus an element incomparable to all.
pub fn three_plus_one() -> PartialOrder {
    let names = ["x", "y", "z", "w"].map(String::from).to_vec();
    PartialOrder::from_name_pairs(names, &[("x", "y"), ("y", "z")]).expect("fixture is acyclic")
}
