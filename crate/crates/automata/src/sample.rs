use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dfa::Dfa;
use crate::nfa::Nfa;
use crate::state_set::StateSet;

/// Seeded source of random automata. ChaCha8 keyed from a 64-bit seed, so a
/// run configuration reproduces the same instances everywhere.
pub struct Sampler {
    rng: ChaCha8Rng,
}

/// Forced structural flags for sampled NFAs.
#[derive(Clone, Copy, Debug, Default)]
pub struct SampleFlags {
    pub all_final: bool,
    pub all_initial: bool,
    /// Force state 0 final (so ε is accepted).
    pub initial_final: bool,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Random NFA with single initial state 0: each (state, symbol, target)
    /// edge present with probability 1/2, each state final with probability
    /// 1/2 unless a flag forces it.
    pub fn nfa(&mut self, states: usize, alphabet: &[&str], flags: SampleFlags) -> Nfa {
        let mut n = Nfa::new(states, alphabet.iter().map(|s| s.to_string()).collect())
            .expect("sampler alphabets are distinct");
        if flags.all_initial {
            n.set_all_initial();
        } else {
            n.set_initial(0).unwrap();
        }
        if flags.all_final {
            n.set_all_final();
        } else {
            for q in 0..states {
                if (q == 0 && flags.initial_final) || self.rng.gen_bool(0.5) {
                    n.set_final(q).unwrap();
                }
            }
        }
        for q in 0..states {
            for a in 0..alphabet.len() {
                for t in 0..states {
                    if self.rng.gen_bool(0.5) {
                        n.add_transition(q, a, t).unwrap();
                    }
                }
            }
        }
        n
    }

    /// Random NFA with a state count drawn uniformly from 1..=max_states.
    pub fn nfa_up_to(&mut self, max_states: usize, alphabet: &[&str], flags: SampleFlags) -> Nfa {
        let states = self.rng.gen_range(1..=max_states);
        self.nfa(states, alphabet, flags)
    }

    /// Random complete DFA: uniform target per cell, initial state 0, each
    /// state final with probability 1/2.
    pub fn dfa(&mut self, states: usize, alphabet: &[&str]) -> Dfa {
        let mut delta = Vec::with_capacity(states);
        for _ in 0..states {
            let row = (0..alphabet.len())
                .map(|_| self.rng.gen_range(0..states))
                .collect();
            delta.push(row);
        }
        let mut fin = StateSet::empty(states);
        for q in 0..states {
            if self.rng.gen_bool(0.5) {
                fin.insert(q);
            }
        }
        Dfa::new(
            alphabet.iter().map(|s| s.to_string()).collect(),
            delta,
            0,
            fin,
        )
        .expect("sampled DFA is complete by construction")
    }

    pub fn dfa_up_to(&mut self, max_states: usize, alphabet: &[&str]) -> Dfa {
        let states = self.rng.gen_range(1..=max_states);
        self.dfa(states, alphabet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..10 {
            assert_eq!(
                a.nfa_up_to(4, &["0", "1"], SampleFlags::default()),
                b.nfa_up_to(4, &["0", "1"], SampleFlags::default())
            );
        }
        let mut c = Sampler::new(8);
        let d1: Vec<_> = (0..5).map(|_| a.dfa(4, &["0", "1"])).collect();
        let d2: Vec<_> = (0..5).map(|_| c.dfa(4, &["0", "1"])).collect();
        assert_ne!(d1, d2);
    }

    #[test]
    fn flags_respected() {
        let mut s = Sampler::new(1);
        let n = s.nfa(3, &["a"], SampleFlags { all_final: true, all_initial: true, initial_final: false });
        assert!(n.is_asif());
        let n = s.nfa(3, &["a"], SampleFlags { initial_final: true, ..Default::default() });
        assert!(n.accepts(&[]).unwrap());
    }
}
