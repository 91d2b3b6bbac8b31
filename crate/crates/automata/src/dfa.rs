use std::collections::VecDeque;

use crate::error::{AutomatonError, Result};
use crate::nfa::{Nfa, Word};
use crate::state_set::StateSet;

/// A complete deterministic finite automaton: total transition function,
/// single initial state. Must have at least one state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    /// `delta[q][a]`, total on Q × Σ.
    delta: Vec<Vec<usize>>,
    initial: usize,
    final_states: StateSet,
}

impl Dfa {
    pub fn new(
        alphabet: Vec<String>,
        delta: Vec<Vec<usize>>,
        initial: usize,
        final_states: StateSet,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomatonError::Malformed(
                "a complete DFA needs at least one state".into(),
            ));
        }
        if initial >= n {
            return Err(AutomatonError::InvalidState {
                state: initial,
                state_count: n,
            });
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(AutomatonError::Malformed(
                    "transition table row does not match alphabet size".into(),
                ));
            }
            for &t in row {
                if t >= n {
                    return Err(AutomatonError::InvalidState {
                        state: t,
                        state_count: n,
                    });
                }
            }
        }
        assert_eq!(final_states.capacity(), n);
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            final_states,
        })
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn final_states(&self) -> &StateSet {
        &self.final_states
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.final_states.contains(q)
    }

    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[q][a]
    }

    pub fn run(&self, word: &[usize]) -> usize {
        word.iter().fold(self.initial, |q, &a| self.delta[q][a])
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.final_states.contains(self.run(word))
    }

    pub fn reachable(&self) -> StateSet {
        let mut seen = StateSet::singleton(self.state_count(), self.initial);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &t in &self.delta[q] {
                if !seen.contains(t) {
                    seen.insert(t);
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Same structure with the final set complemented.
    pub fn complement(&self) -> Dfa {
        let mut fin = StateSet::empty(self.state_count());
        for q in 0..self.state_count() {
            if !self.final_states.contains(q) {
                fin.insert(q);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
            initial: self.initial,
            final_states: fin,
        }
    }

    /// Identical automaton started at `q` instead of the original initial state.
    pub fn with_start(&self, q: usize) -> Result<Dfa> {
        if q >= self.state_count() {
            return Err(AutomatonError::InvalidState {
                state: q,
                state_count: self.state_count(),
            });
        }
        let mut d = self.clone();
        d.initial = q;
        Ok(d)
    }

    /// Replace the final-state set wholesale.
    pub fn with_finals(&self, final_states: StateSet) -> Dfa {
        assert_eq!(final_states.capacity(), self.state_count());
        let mut d = self.clone();
        d.final_states = final_states;
        d
    }

    /// View as an NFA with singleton transition sets.
    pub fn as_nfa(&self) -> Nfa {
        let mut n = Nfa::new(self.state_count(), self.alphabet.clone())
            .expect("alphabet already validated");
        n.set_initial(self.initial).unwrap();
        for q in self.final_states.iter() {
            n.set_final(q).unwrap();
        }
        for q in 0..self.state_count() {
            for (a, &t) in self.delta[q].iter().enumerate() {
                n.add_transition(q, a, t).unwrap();
            }
        }
        n
    }

    /// Convert a deterministic, complete NFA view back into a `Dfa`.
    pub fn from_nfa(n: &Nfa) -> Result<Dfa> {
        if !n.is_single_initial() {
            return Err(AutomatonError::precondition(
                "DFA conversion needs exactly one initial state",
            ));
        }
        if n.state_count() == 0 {
            return Err(AutomatonError::precondition("DFA needs at least one state"));
        }
        let mut delta = Vec::with_capacity(n.state_count());
        for q in 0..n.state_count() {
            let mut row = Vec::with_capacity(n.alphabet_size());
            for a in 0..n.alphabet_size() {
                let targets = n.targets(q, a);
                if targets.len() != 1 {
                    return Err(AutomatonError::precondition(format!(
                        "transition ({q}, {}) is not deterministic/complete",
                        n.alphabet()[a]
                    )));
                }
                row.push(targets.iter().next().unwrap());
            }
            delta.push(row);
        }
        Dfa::new(
            n.alphabet().to_vec(),
            delta,
            n.initial().iter().next().unwrap(),
            n.final_states().clone(),
        )
    }
}

/// Shortest word in `L(left) \ L(right)`, ties broken lexicographically by
/// symbol index; `None` means `L(left) ⊆ L(right)`. BFS over the product
/// automaton, expanding symbols in index order.
pub fn difference_witness(left: &Dfa, right: &Dfa) -> Result<Option<Word>> {
    if left.alphabet() != right.alphabet() {
        return Err(AutomatonError::AlphabetMismatch {
            left: left.alphabet().to_vec(),
            right: right.alphabet().to_vec(),
        });
    }
    let k = left.alphabet_size();
    let cols = right.state_count();
    let start = (left.initial(), right.initial());
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; left.state_count() * cols];
    let mut seen = vec![false; left.state_count() * cols];
    seen[start.0 * cols + start.1] = true;
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if left.is_final(p) && !right.is_final(q) {
            // rebuild the word by walking parents
            let mut word = Vec::new();
            let mut cur = (p, q);
            while let Some((prev, a)) = parent[cur.0 * cols + cur.1] {
                word.push(a);
                cur = (prev / cols, prev % cols);
            }
            word.reverse();
            return Ok(Some(word));
        }
        for a in 0..k {
            let np = left.next(p, a);
            let nq = right.next(q, a);
            let idx = np * cols + nq;
            if !seen[idx] {
                seen[idx] = true;
                parent[idx] = Some((p * cols + q, a));
                queue.push_back((np, nq));
            }
        }
    }
    Ok(None)
}
