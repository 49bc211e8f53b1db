//! A deterministic 2-SAT solver over the implication graph, by strongly
//! connected components.

use thiserror::Error;

/// A literal: variable index plus polarity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// Implication-graph node. Negative literals sit on even nodes so that an
    /// unconstrained variable resolves to `false`.
    fn node(self) -> usize {
        2 * self.var + usize::from(self.positive)
    }

    pub fn satisfied_by(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// A conjunction of two-literal clauses. Unit clauses are encoded by
/// repeating the literal.
#[derive(Clone, Debug, Default)]
pub struct TwoCnf {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unsatisfiable: variable {var} is equivalent to its own negation")]
pub struct Unsatisfiable {
    /// A variable whose two literals share a strongly connected component.
    pub var: usize,
}

impl TwoCnf {
    pub fn new(num_vars: usize) -> Self {
        TwoCnf {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(
            a.var < self.num_vars && b.var < self.num_vars,
            "literal out of range"
        );
        self.clauses.push((a, b));
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.satisfied_by(assignment) || b.satisfied_by(assignment))
    }

    /// Finds a satisfying assignment, or the blocking variable.
    ///
    /// Deterministic: the implication graph is explored in node order and a
    /// variable is set to true exactly when the component of its positive
    /// literal precedes the component of its negation in completion order.
    pub fn solve(&self) -> Result<Vec<bool>, Unsatisfiable> {
        let n = 2 * self.num_vars;
        let mut heads = vec![usize::MAX; n];
        let mut next = Vec::with_capacity(2 * self.clauses.len());
        let mut targets = Vec::with_capacity(2 * self.clauses.len());
        let mut push = |from: usize, to: usize, heads: &mut [usize]| {
            targets.push(to);
            next.push(heads[from]);
            heads[from] = targets.len() - 1;
        };
        for &(a, b) in &self.clauses {
            // (a ∨ b) is (¬a → b) and (¬b → a).
            push(a.negated().node(), b.node(), &mut heads);
            push(b.negated().node(), a.node(), &mut heads);
        }

        let comp = scc(n, &heads, &next, &targets);
        let mut assignment = vec![false; self.num_vars];
        for v in 0..self.num_vars {
            let pos = comp[Lit::pos(v).node()];
            let neg = comp[Lit::neg(v).node()];
            if pos == neg {
                return Err(Unsatisfiable { var: v });
            }
            assignment[v] = pos < neg;
        }
        Ok(assignment)
    }
}

/// Iterative Tarjan; components are numbered in completion order, so every
/// edge leads from a component to one with an equal or smaller number.
fn scc(n: usize, heads: &[usize], next: &[usize], targets: &[usize]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut comp = vec![UNSET; n];
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut n_comp = 0usize;
    let mut stack = Vec::new();
    // (node, current edge cursor)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, heads[root]));
        index[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push(root);
        while !call.is_empty() {
            let top = call.len() - 1;
            let (v, cursor) = call[top];
            if cursor != UNSET {
                call[top].1 = next[cursor];
                let w = targets[cursor];
                if index[w] == UNSET {
                    index[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(w);
                    call.push((w, heads[w]));
                } else if comp[w] == UNSET {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("component stack underflow");
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::{RngCore, SeedableRng};

    #[test]
    fn empty_formula_yields_all_false() {
        let f = TwoCnf::new(3);
        assert_eq!(f.solve().unwrap(), vec![false, false, false]);
    }

    #[test]
    fn contradictory_units_are_unsatisfiable() {
        let mut f = TwoCnf::new(1);
        f.add_clause(Lit::pos(0), Lit::pos(0));
        f.add_clause(Lit::neg(0), Lit::neg(0));
        assert_eq!(f.solve(), Err(Unsatisfiable { var: 0 }));
    }

    #[test]
    fn forced_assignment() {
        let mut f = TwoCnf::new(2);
        f.add_clause(Lit::pos(0), Lit::pos(1));
        f.add_clause(Lit::neg(0), Lit::pos(1));
        f.add_clause(Lit::pos(0), Lit::neg(1));
        assert_eq!(f.solve().unwrap(), vec![true, true]);
    }

    fn random_formula(rng: &mut rand_chacha::ChaCha8Rng) -> TwoCnf {
        let num_vars = 1 + (rng.next_u64() % 12) as usize;
        let num_clauses = (rng.next_u64() % 41) as usize;
        let mut f = TwoCnf::new(num_vars);
        for _ in 0..num_clauses {
            let a = Lit {
                var: (rng.next_u64() % num_vars as u64) as usize,
                positive: rng.next_u64() & 1 == 0,
            };
            let b = Lit {
                var: (rng.next_u64() % num_vars as u64) as usize,
                positive: rng.next_u64() & 1 == 0,
            };
            f.add_clause(a, b);
        }
        f
    }

    fn truth_table_satisfiable(f: &TwoCnf) -> bool {
        let n = f.num_vars();
        (0u32..(1 << n)).any(|bits| {
            let assignment: Vec<bool> = (0..n).map(|v| bits & (1 << v) != 0).collect();
            f.is_satisfied_by(&assignment)
        })
    }

    #[test]
    fn verdicts_match_truth_tables() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5a75);
        for _ in 0..1000 {
            let f = random_formula(&mut rng);
            match f.solve() {
                Ok(assignment) => {
                    assert!(f.is_satisfied_by(&assignment));
                    assert!(truth_table_satisfiable(&f));
                }
                Err(_) => assert!(!truth_table_satisfiable(&f)),
            }
        }
    }

    #[test]
    fn solving_is_deterministic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let f = random_formula(&mut rng);
            assert_eq!(f.solve(), f.solve());
        }
    }

    // Throughput check; run with `cargo test --release -- --ignored`.
    #[test]
    #[ignore]
    fn million_clause_formula_solves_quickly() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let num_vars = 500_000;
        let mut f = TwoCnf::new(num_vars);
        for _ in 0..1_000_000 {
            let a = Lit {
                var: (rng.next_u64() % num_vars as u64) as usize,
                positive: rng.next_u64() & 1 == 0,
            };
            let b = Lit {
                var: (rng.next_u64() % num_vars as u64) as usize,
                positive: rng.next_u64() & 1 == 0,
            };
            f.add_clause(a, b);
        }
        let start = std::time::Instant::now();
        let outcome = f.solve();
        assert!(start.elapsed().as_secs_f64() < 2.0, "solver too slow");
        if let Ok(assignment) = outcome {
            assert!(f.is_satisfied_by(&assignment));
        }
    }
}
