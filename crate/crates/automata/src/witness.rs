use serde::{Deserialize, Serialize};

use crate::dfa::Dfa;
use crate::error::{AutomatonError, Result};
use crate::nfa::Nfa;
use crate::state_set::StateSet;

fn binary_alphabet() -> Vec<String> {
    vec!["0".into(), "1".into()]
}

/// Single state, both initial and final, with a self-loop on only one of the
/// two letters. Used as the n = 1 member of several families.
fn single_loop_binary() -> Nfa {
    let mut n = Nfa::new(1, binary_alphabet()).unwrap();
    n.set_initial(0).unwrap();
    n.set_final(0).unwrap();
    n.add_transition(0, 0, 0).unwrap();
    n
}

/// Binary NFA with all states final and single initial state 0 whose minimal
/// DFA has 2^n states. Defined for n = 1 and n >= 3; no binary witness
/// exists for n = 2.
pub fn witness_all_final(n: usize) -> Result<Nfa> {
    match n {
        0 => Err(AutomatonError::precondition("n must be positive")),
        1 => Ok(single_loop_binary()),
        2 => Err(AutomatonError::precondition(
            "no binary all-final witness exists for n = 2 (a ternary one does)",
        )),
        _ => {
            let mut m = Nfa::new(n, binary_alphabet())?;
            m.set_initial(0)?;
            m.set_all_final();
            for i in 0..n {
                // a = 0
                if i <= n - 3 {
                    m.add_transition(i, 0, i + 1)?;
                } else if i == n - 1 {
                    m.add_transition(i, 0, n - 1)?;
                }
                // a = 1
                if i <= n - 2 {
                    m.add_transition(i, 1, 0)?;
                    m.add_transition(i, 1, i + 1)?;
                }
            }
            Ok(m)
        }
    }
}

/// Binary NFA with every state both initial and final whose minimal DFA has
/// 2^n states, for every n >= 1.
pub fn witness_asif(n: usize) -> Result<Nfa> {
    if n == 0 {
        return Err(AutomatonError::precondition("n must be positive"));
    }
    if n == 1 {
        return Ok(single_loop_binary());
    }
    let mut m = Nfa::new(n, binary_alphabet())?;
    m.set_all_initial();
    m.set_all_final();
    for i in 0..n {
        // a = 0
        if i >= 1 {
            m.add_transition(i, 0, i - 1)?;
        } else {
            m.add_transition(0, 0, n - 1)?;
        }
        // a = 1
        if i <= n - 2 {
            m.add_transition(i, 1, i + 1)?;
        }
    }
    Ok(m)
}

/// All-states-initial, one-final variant on the same transition skeleton as
/// `witness_asif`: F = {n-1}. The 2^n blow-up is measured, not assumed; the
/// acceptance suite exercises the F = {0} fallback if it ever fails.
pub fn witness_asi(n: usize) -> Result<Nfa> {
    witness_asi_with_final(n, n - 1)
}

/// Fallback variant with an explicit final state.
pub fn witness_asi_with_final(n: usize, final_state: usize) -> Result<Nfa> {
    if n == 0 {
        return Err(AutomatonError::precondition("n must be positive"));
    }
    let mut m = witness_asif(n)?;
    m.clear_final();
    m.set_final(final_state)?;
    Ok(m)
}

/// Complete binary DFA whose suffix closure has state complexity 2^n - 1:
/// a 1-cycle through all states, 0 fixing everything except n-1 -> 0,
/// F = {0}.
pub fn witness_suff(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(AutomatonError::precondition(
            "the suffix witness needs n >= 2",
        ));
    }
    let mut delta = Vec::with_capacity(n);
    for q in 0..n {
        let on0 = if q < n - 1 { q } else { 0 };
        let on1 = (q + 1) % n;
        delta.push(vec![on0, on1]);
    }
    Dfa::new(binary_alphabet(), delta, 0, StateSet::singleton(n, 0))
}

/// Complete binary DFA whose factor closure has state complexity 2^(n-1);
/// state n-1 is a dead state that cannot reach the final state 0.
pub fn witness_fact(n: usize) -> Result<Dfa> {
    if n < 3 {
        return Err(AutomatonError::precondition(
            "the factor witness needs n >= 3",
        ));
    }
    let mut delta = Vec::with_capacity(n);
    for q in 0..n {
        let on0 = if q < n - 2 { q } else { n - 1 };
        let on1 = if q < n - 2 {
            (q + 1) % n
        } else if q == n - 2 {
            0
        } else {
            n - 1
        };
        delta.push(vec![on0, on1]);
    }
    Dfa::new(binary_alphabet(), delta, 0, StateSet::singleton(n, 0))
}

/// Jirásková's binary n-state NFA whose complement needs 2^n NFA states.
pub fn jiraskova_nfa(n: usize) -> Result<Nfa> {
    if n < 2 {
        return Err(AutomatonError::precondition(
            "the Jirásková family needs n >= 2",
        ));
    }
    let mut m = Nfa::new(n, binary_alphabet())?;
    m.set_initial(0)?;
    m.set_final(n - 1)?;
    for i in 0..n {
        if i < n - 1 {
            m.add_transition(i, 0, 0)?;
            m.add_transition(i, 0, i + 1)?;
            m.add_transition(i, 1, i + 1)?;
        } else {
            for t in 1..n {
                m.add_transition(i, 0, t)?;
            }
        }
    }
    Ok(m)
}

/// The all-final modification: one extra state n, a third letter "2" with the
/// single transition (n-1, "2", n), and every state final.
pub fn jiraskova_asf_modified(n: usize) -> Result<Nfa> {
    if n < 2 {
        return Err(AutomatonError::precondition(
            "the modified Jirásková family needs n >= 2",
        ));
    }
    let base = jiraskova_nfa(n)?;
    let mut m = Nfa::new(n + 1, vec!["0".into(), "1".into(), "2".into()])?;
    m.set_initial(0)?;
    m.set_all_final();
    for (q, a, t) in base.transition_triples() {
        m.add_transition(q, a, t)?;
    }
    m.add_transition(n - 1, 2, n)?;
    Ok(m)
}

/// A fooling set: word pairs (x_i, y_i) with every x_i·y_i in the language
/// and, for i ≠ j, at least one cross concatenation outside it. A valid set
/// of size s certifies that every NFA for the language has at least s states.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct FoolingSet {
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

fn concat(x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut w = x.to_vec();
    w.extend_from_slice(y);
    w
}

/// Checks the fooling-set conditions against the language of `membership`.
pub fn check_fooling_set(membership: &Dfa, fs: &FoolingSet) -> Result<bool> {
    let k = membership.alphabet_size();
    for (x, y) in &fs.pairs {
        for &a in x.iter().chain(y.iter()) {
            if a >= k {
                return Err(AutomatonError::InvalidSymbol {
                    index: a,
                    alphabet_size: k,
                });
            }
        }
        if !membership.accepts(&concat(x, y)) {
            return Ok(false);
        }
    }
    for i in 0..fs.pairs.len() {
        for j in i + 1..fs.pairs.len() {
            let (xi, yi) = &fs.pairs[i];
            let (xj, yj) = &fs.pairs[j];
            if membership.accepts(&concat(xi, yj)) && membership.accepts(&concat(xj, yi)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Search budget for `find_fooling_set`.
#[derive(Clone, Copy, Debug)]
pub struct FoolingBudget {
    /// Cap on enumerated candidate words.
    pub max_words: u64,
    /// Cap on backtracking nodes in the clique search.
    pub max_nodes: u64,
}

impl Default for FoolingBudget {
    fn default() -> Self {
        FoolingBudget {
            max_words: 1_000_000,
            max_nodes: 20_000_000,
        }
    }
}

/// Backtracking search for a fooling set of the requested size using words of
/// length at most `max_word_len`. Candidate pairs are deduplicated by their
/// behaviour: the DFA state reached by x and the set of states from which y
/// is accepted fully determine all membership checks, so one representative
/// per behaviour class suffices. `Ok(None)` means not found within the
/// budget, never a proof of absence.
pub fn find_fooling_set(
    membership: &Dfa,
    target_size: usize,
    max_word_len: usize,
    budget: FoolingBudget,
) -> Result<Option<FoolingSet>> {
    let k = membership.alphabet_size();
    let n = membership.state_count();

    // count words up front against the budget
    let mut word_count: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_word_len {
        word_count = word_count.saturating_add(layer);
        layer = layer.saturating_mul(k as u64);
    }
    if word_count > budget.max_words {
        return Err(AutomatonError::BudgetExceeded {
            task: "find_fooling_set word enumeration".into(),
            needed: word_count,
            cap: budget.max_words,
        });
    }

    // enumerate words in shortlex order, tracking for each:
    //   - the state reached from the initial state (x role)
    //   - the acceptance column {q : accepted from q} (y role)
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_word_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }

    let mut reach_rep: Vec<Option<usize>> = vec![None; n]; // state -> word index
    let mut column_reps: Vec<(StateSet, usize)> = Vec::new(); // (column, word index)
    for (wi, w) in words.iter().enumerate() {
        let p = membership.run(w);
        if reach_rep[p].is_none() {
            reach_rep[p] = Some(wi);
        }
        let mut col = StateSet::empty(n);
        for q in 0..n {
            let mut cur = q;
            for &a in w {
                cur = membership.next(cur, a);
            }
            if membership.is_final(cur) {
                col.insert(q);
            }
        }
        if !column_reps.iter().any(|(c, _)| *c == col) {
            column_reps.push((col, wi));
        }
    }

    // candidate vertices: (reachable state p, column A) with p ∈ A
    struct Vertex {
        state: usize,
        column: StateSet,
        x: usize,
        y: usize,
    }
    let mut vertices = Vec::new();
    for (p, xrep) in reach_rep.iter().enumerate() {
        let Some(x) = xrep else { continue };
        for (col, y) in &column_reps {
            if col.contains(p) {
                vertices.push(Vertex {
                    state: p,
                    column: col.clone(),
                    x: *x,
                    y: *y,
                });
            }
        }
    }

    // compatibility graph: i,j compatible iff p_i ∉ A_j or p_j ∉ A_i
    let v = vertices.len();
    let mut adj = vec![vec![false; v]; v];
    for i in 0..v {
        for j in i + 1..v {
            let compatible = !vertices[j].column.contains(vertices[i].state)
                || !vertices[i].column.contains(vertices[j].state);
            adj[i][j] = compatible;
            adj[j][i] = compatible;
        }
    }

    // order vertices by degree, densest first
    let mut order: Vec<usize> = (0..v).collect();
    let degree: Vec<usize> = (0..v)
        .map(|i| adj[i].iter().filter(|&&b| b).count())
        .collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));

    let mut nodes: u64 = 0;
    let mut clique: Vec<usize> = Vec::new();

    fn extend(
        adj: &[Vec<bool>],
        target: usize,
        candidates: &[usize],
        clique: &mut Vec<usize>,
        nodes: &mut u64,
        max_nodes: u64,
    ) -> Result<bool> {
        if clique.len() == target {
            return Ok(true);
        }
        if clique.len() + candidates.len() < target {
            return Ok(false);
        }
        for (i, &c) in candidates.iter().enumerate() {
            *nodes += 1;
            if *nodes > max_nodes {
                return Err(AutomatonError::BudgetExceeded {
                    task: "find_fooling_set clique search".into(),
                    needed: *nodes,
                    cap: max_nodes,
                });
            }
            clique.push(c);
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&d| adj[c][d])
                .collect();
            if extend(adj, target, &rest, clique, nodes, max_nodes)? {
                return Ok(true);
            }
            clique.pop();
        }
        Ok(false)
    }

    let found = extend(
        &adj,
        target_size,
        &order,
        &mut clique,
        &mut nodes,
        budget.max_nodes,
    )?;
    if !found {
        return Ok(None);
    }
    let fs = FoolingSet {
        pairs: clique
            .iter()
            .map(|&i| (words[vertices[i].x].clone(), words[vertices[i].y].clone()))
            .collect(),
    };
    debug_assert!(check_fooling_set(membership, &fs)?);
    Ok(Some(fs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::{determinize, minimize, state_complexity};

    #[test]
    fn all_final_structure() {
        let m = witness_all_final(3).unwrap();
        assert!(m.is_all_final());
        assert!(m.is_single_initial());
        // δ(1, "0") = ∅ at n = 3
        assert!(m.targets(1, 0).is_empty());
        assert_eq!(m.targets(0, 1).to_vec(), vec![0, 1]);
        assert!(witness_all_final(2).is_err());
        assert!(witness_all_final(0).is_err());
    }

    #[test]
    fn all_final_hand_table_n4() {
        // frozen from the definition's case split at n = 4
        let m = witness_all_final(4).unwrap();
        let expect: &[(usize, usize, &[usize])] = &[
            (0, 0, &[1]),
            (1, 0, &[2]),
            (2, 0, &[]),
            (3, 0, &[3]),
            (0, 1, &[0, 1]),
            (1, 1, &[0, 2]),
            (2, 1, &[0, 3]),
            (3, 1, &[]),
        ];
        for &(q, a, t) in expect {
            assert_eq!(m.targets(q, a).to_vec(), t, "δ({q},{a})");
        }
    }

    #[test]
    fn all_final_n1_complexity() {
        assert_eq!(state_complexity(&witness_all_final(1).unwrap()), 2);
    }

    #[test]
    fn asif_structure() {
        let m = witness_asif(2).unwrap();
        assert!(m.is_asif());
        assert_eq!(m.targets(0, 0).to_vec(), vec![1]); // {n-1} for i = 0
        assert_eq!(state_complexity(&m), 4);
        assert!(witness_asif(0).is_err());
    }

    #[test]
    fn asi_structure() {
        let m = witness_asi(3).unwrap();
        assert!(m.is_all_initial());
        assert_eq!(m.final_states().len(), 1);
        assert_eq!(state_complexity(&m), 8);
    }

    #[test]
    fn suff_structure() {
        let d = witness_suff(3).unwrap();
        assert_eq!(d.next(2, 0), 0); // the n-1 row
        assert!(witness_suff(1).is_err());
        // the empty subset is never reached when determinizing the suffix NFA
        let trace = determinize(&crate::closure::suff_nfa(&d));
        assert!(trace.subset_of.iter().all(|s| !s.is_empty()));
    }

    #[test]
    fn fact_structure() {
        let d = witness_fact(4).unwrap();
        assert_eq!(d.next(2, 1), 0); // δ(n-2, 1) = 0
        assert_eq!(d.as_nfa().coaccessible().to_vec(), vec![0, 1, 2]);
        assert!(witness_fact(2).is_err());
    }

    #[test]
    fn jiraskova_structure() {
        let m = jiraskova_nfa(3).unwrap();
        assert_eq!(m.targets(2, 0).to_vec(), vec![1, 2]); // the i = n-1 row
        assert!(m.targets(2, 1).is_empty());
        assert_eq!(state_complexity(&m), 8);
        assert!(jiraskova_nfa(1).is_err());
    }

    #[test]
    fn jiraskova_asf_structure() {
        let m = jiraskova_asf_modified(3).unwrap();
        assert_eq!(m.state_count(), 4);
        assert!(m.is_all_final());
        assert_eq!(m.targets(2, 2).to_vec(), vec![3]);
        for a in 0..3 {
            assert!(m.targets(3, a).is_empty());
        }
    }

    #[test]
    fn check_fooling_set_examples() {
        // L = {"ab"} over {a, b}
        let d = Dfa::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
            0,
            StateSet::singleton(4, 2),
        )
        .unwrap();
        let good = FoolingSet {
            pairs: vec![(vec![0], vec![1]), (vec![0, 1], vec![])],
        };
        assert!(check_fooling_set(&d, &good).unwrap());

        let bad = FoolingSet {
            pairs: vec![(vec![0], vec![0])],
        };
        assert!(!check_fooling_set(&d, &bad).unwrap());

        let singleton = FoolingSet {
            pairs: vec![(vec![0], vec![1])],
        };
        assert!(check_fooling_set(&d, &singleton).unwrap());
    }

    #[test]
    fn find_fooling_set_small() {
        let lang = minimize(&determinize(&jiraskova_asf_modified(2).unwrap()).dfa);
        let comp = lang.complement();
        let fs = find_fooling_set(&comp, 4, 4, FoolingBudget::default())
            .unwrap()
            .expect("size-4 fooling set should exist");
        assert_eq!(fs.pairs.len(), 4);
        assert!(check_fooling_set(&comp, &fs).unwrap());
    }

    #[test]
    fn find_fooling_set_trivial() {
        let d = witness_suff(2).unwrap();
        let fs = find_fooling_set(&d, 1, 2, FoolingBudget::default())
            .unwrap()
            .unwrap();
        assert_eq!(fs.pairs.len(), 1);
        assert!(check_fooling_set(&d, &fs).unwrap());
    }
}
