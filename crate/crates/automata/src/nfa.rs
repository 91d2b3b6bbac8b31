use std::collections::VecDeque;

use crate::error::{AutomatonError, Result};
use crate::state_set::StateSet;

/// A word over an automaton's alphabet, as a sequence of symbol indices.
pub type Word = Vec<usize>;

/// A nondeterministic finite automaton `(Q, Σ, δ, I, F)` with dense state
/// numbering `0..state_count`. Multiple initial states are allowed; there are
/// no ε-transitions. A zero-state automaton is legal and accepts nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet: Vec<String>,
    /// `transitions[q][a]` is δ(q, a); always present, possibly empty.
    transitions: Vec<Vec<StateSet>>,
    initial: StateSet,
    final_states: StateSet,
}

impl Nfa {
    pub fn new(state_count: usize, alphabet: Vec<String>) -> Result<Self> {
        for (i, a) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(a) {
                return Err(AutomatonError::Malformed(format!(
                    "duplicate symbol name {a:?}"
                )));
            }
        }
        let k = alphabet.len();
        Ok(Nfa {
            state_count,
            alphabet,
            transitions: vec![vec![StateSet::empty(state_count); k]; state_count],
            initial: StateSet::empty(state_count),
            final_states: StateSet::empty(state_count),
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| AutomatonError::UnknownSymbolName {
                name: name.to_string(),
            })
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q >= self.state_count {
            return Err(AutomatonError::InvalidState {
                state: q,
                state_count: self.state_count,
            });
        }
        Ok(())
    }

    fn check_symbol(&self, a: usize) -> Result<()> {
        if a >= self.alphabet.len() {
            return Err(AutomatonError::InvalidSymbol {
                index: a,
                alphabet_size: self.alphabet.len(),
            });
        }
        Ok(())
    }

    pub fn add_transition(&mut self, from: usize, symbol: usize, to: usize) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        self.check_symbol(symbol)?;
        self.transitions[from][symbol].insert(to);
        Ok(())
    }

    pub fn set_initial(&mut self, q: usize) -> Result<()> {
        self.check_state(q)?;
        self.initial.insert(q);
        Ok(())
    }

    pub fn set_final(&mut self, q: usize) -> Result<()> {
        self.check_state(q)?;
        self.final_states.insert(q);
        Ok(())
    }

    pub fn set_all_initial(&mut self) {
        self.initial = StateSet::full(self.state_count);
    }

    pub fn set_all_final(&mut self) {
        self.final_states = StateSet::full(self.state_count);
    }

    pub fn clear_initial(&mut self) {
        self.initial = StateSet::empty(self.state_count);
    }

    pub fn clear_final(&mut self) {
        self.final_states = StateSet::empty(self.state_count);
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn final_states(&self) -> &StateSet {
        &self.final_states
    }

    pub fn targets(&self, q: usize, a: usize) -> &StateSet {
        &self.transitions[q][a]
    }

    /// All `(from, symbol, to)` triples, in (from, symbol, to) order.
    pub fn transition_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for q in 0..self.state_count {
            for a in 0..self.alphabet.len() {
                for t in self.transitions[q][a].iter() {
                    out.push((q, a, t));
                }
            }
        }
        out
    }

    // --- structural flags ---

    pub fn is_all_final(&self) -> bool {
        self.final_states == StateSet::full(self.state_count)
    }

    pub fn is_all_initial(&self) -> bool {
        self.initial == StateSet::full(self.state_count)
    }

    pub fn is_asif(&self) -> bool {
        self.is_all_initial() && self.is_all_final()
    }

    pub fn is_single_initial(&self) -> bool {
        self.initial.len() == 1
    }

    pub fn is_unary(&self) -> bool {
        self.alphabet.len() == 1
    }

    /// True when every (state, symbol) cell has exactly one target and there
    /// is exactly one initial state.
    pub fn is_deterministic(&self) -> bool {
        self.is_single_initial()
            && self
                .transitions
                .iter()
                .all(|row| row.iter().all(|t| t.len() == 1))
    }

    // --- language operations ---

    /// One subset-construction step: `∪_{q∈S} δ(q, a)`.
    pub fn step(&self, set: &StateSet, symbol: usize) -> Result<StateSet> {
        self.check_symbol(symbol)?;
        assert_eq!(set.capacity(), self.state_count);
        let mut out = StateSet::empty(self.state_count);
        for q in set.iter() {
            out.union_with(&self.transitions[q][symbol]);
        }
        Ok(out)
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        let mut set = self.initial.clone();
        for &a in word {
            set = self.step(&set, a)?;
        }
        Ok(set.intersects(&self.final_states))
    }

    /// States reachable from the initial set over any word.
    pub fn reachable(&self) -> StateSet {
        let mut seen = self.initial.clone();
        let mut queue: VecDeque<usize> = seen.iter().collect();
        while let Some(q) = queue.pop_front() {
            for row in &self.transitions[q] {
                for t in row.iter() {
                    if !seen.contains(t) {
                        seen.insert(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    /// States from which some word leads into the final set.
    pub fn coaccessible(&self) -> StateSet {
        // backward closure from F
        let mut seen = self.final_states.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..self.state_count {
                if seen.contains(q) {
                    continue;
                }
                let leads = self.transitions[q].iter().any(|t| t.intersects(&seen));
                if leads {
                    seen.insert(q);
                    changed = true;
                }
            }
        }
        seen
    }

    /// Restriction of the automaton to a subset of its states, renumbering
    /// densely. Returns the restricted automaton and the map
    /// `old state -> new state`.
    pub fn restrict(&self, keep: &StateSet) -> (Nfa, Vec<Option<usize>>) {
        let mut renumber = vec![None; self.state_count];
        let mut next = 0;
        for q in keep.iter() {
            renumber[q] = Some(next);
            next += 1;
        }
        let mut out = Nfa::new(next, self.alphabet.clone()).expect("alphabet already validated");
        for q in keep.iter() {
            let nq = renumber[q].unwrap();
            if self.initial.contains(q) {
                out.initial.insert(nq);
            }
            if self.final_states.contains(q) {
                out.final_states.insert(nq);
            }
            for (a, targets) in self.transitions[q].iter().enumerate() {
                for t in targets.iter() {
                    if let Some(nt) = renumber[t] {
                        out.transitions[nq][a].insert(nt);
                    }
                }
            }
        }
        (out, renumber)
    }

    /// Restriction to reachable ∩ coaccessible states. The language is
    /// preserved; the result may have zero states.
    pub fn trim(&self) -> (Nfa, Vec<Option<usize>>) {
        let mut keep = self.reachable();
        let co = self.coaccessible();
        let mut both = StateSet::empty(self.state_count);
        for q in keep.iter() {
            if co.contains(q) {
                both.insert(q);
            }
        }
        keep = both;
        self.restrict(&keep)
    }

    /// Reverses every transition and swaps initial with final states, so the
    /// result accepts the mirror image of the language.
    pub fn reverse(&self) -> Nfa {
        let mut out = Nfa::new(self.state_count, self.alphabet.clone())
            .expect("alphabet already validated");
        out.initial = self.final_states.clone();
        out.final_states = self.initial.clone();
        for q in 0..self.state_count {
            for (a, targets) in self.transitions[q].iter().enumerate() {
                for t in targets.iter() {
                    out.transitions[t][a].insert(q);
                }
            }
        }
        out
    }
}

/// Parse a word given as symbol names against an alphabet.
pub fn word_from_names(alphabet: &[String], names: &[String]) -> Result<Word> {
    names
        .iter()
        .map(|n| {
            alphabet
                .iter()
                .position(|a| a == n)
                .ok_or_else(|| AutomatonError::UnknownSymbolName { name: n.clone() })
        })
        .collect()
}

/// Render a word as its symbol names, concatenated (for display).
pub fn word_to_string(alphabet: &[String], word: &[usize]) -> String {
    if word.is_empty() {
        return "ε".to_string();
    }
    word.iter().map(|&a| alphabet[a].as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness;

    #[test]
    fn step_on_witness_all_final() {
        let n = witness::witness_all_final(3).unwrap();
        let s = StateSet::singleton(3, 0);
        let one = n.symbol_index("1").unwrap();
        assert_eq!(n.step(&s, one).unwrap().to_vec(), vec![0, 1]);
        // no rule covers (1, "0") when n = 3
        let zero = n.symbol_index("0").unwrap();
        assert!(n.step(&StateSet::singleton(3, 1), zero).unwrap().is_empty());
        // empty set steps to empty set
        assert!(n.step(&StateSet::empty(3), zero).unwrap().is_empty());
    }

    #[test]
    fn step_distributes_over_union_exhaustive() {
        let n = witness::witness_all_final(4).unwrap();
        let sets: Vec<StateSet> = (0u32..16)
            .map(|m| StateSet::from_iter(4, (0..4).filter(|&q| m >> q & 1 == 1)))
            .collect();
        for s in &sets {
            for t in &sets {
                for a in 0..2 {
                    let lhs = n.step(&s.union(t), a).unwrap();
                    let rhs = n.step(s, a).unwrap().union(&n.step(t, a).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn accepts_examples() {
        let n = witness::witness_all_final(3).unwrap();
        assert!(!n.accepts(&[0, 0]).unwrap()); // {0} -> {1} -> ∅
        assert!(n.accepts(&[]).unwrap()); // I ∩ F ≠ ∅
        let asif = witness::witness_asif(2).unwrap();
        assert!(asif.accepts(&[1]).unwrap());
    }

    #[test]
    fn reachable_examples() {
        let n = witness::witness_all_final(4).unwrap();
        assert_eq!(n.reachable().to_vec(), vec![0, 1, 2, 3]);

        let empty_init = Nfa::new(2, vec!["a".into()]).unwrap();
        assert!(empty_init.reachable().is_empty());

        let mut disc = Nfa::new(2, vec!["a".into()]).unwrap();
        disc.set_initial(0).unwrap();
        assert_eq!(disc.reachable().to_vec(), vec![0]);
    }

    #[test]
    fn coaccessible_examples() {
        let fact = witness::witness_fact(4).unwrap();
        let n: Nfa = fact.as_nfa();
        assert_eq!(n.coaccessible().to_vec(), vec![0, 1, 2]);

        let mut all = Nfa::new(3, vec!["a".into()]).unwrap();
        all.set_all_final();
        assert_eq!(all.coaccessible().to_vec(), vec![0, 1, 2]);

        let none = Nfa::new(3, vec!["a".into()]).unwrap();
        assert!(none.coaccessible().is_empty());
    }

    #[test]
    fn trim_examples() {
        let n = witness::witness_fact(4).unwrap().as_nfa();
        let (t, _) = n.trim();
        assert_eq!(t.state_count(), 3);
        // idempotence up to structure
        let (t2, _) = t.trim();
        assert_eq!(t, t2);

        let no_final = Nfa::new(2, vec!["a".into()]).unwrap();
        let (z, _) = no_final.trim();
        assert_eq!(z.state_count(), 0);
    }

    #[test]
    fn reverse_involution_and_language() {
        // automaton accepting exactly "01"
        let mut n = Nfa::new(3, vec!["0".into(), "1".into()]).unwrap();
        n.set_initial(0).unwrap();
        n.set_final(2).unwrap();
        n.add_transition(0, 0, 1).unwrap();
        n.add_transition(1, 1, 2).unwrap();
        let r = n.reverse();
        assert!(r.accepts(&[1, 0]).unwrap());
        assert!(!r.accepts(&[0, 1]).unwrap());
        assert_eq!(r.reverse(), n);
    }
}
