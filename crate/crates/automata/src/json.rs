use serde::{Deserialize, Serialize};

use crate::dfa::Dfa;
use crate::error::{AutomatonError, Result};
use crate::nfa::Nfa;

/// The shared on-disk automaton format. Symbol ids are positions in
/// `alphabet`; determinism is inferred from the transition table, never
/// stored.
#[derive(Debug, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: Vec<usize>,
    #[serde(rename = "final")]
    pub final_states: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

impl AutomatonJson {
    pub fn from_nfa(n: &Nfa) -> Self {
        AutomatonJson {
            alphabet: n.alphabet().to_vec(),
            states: n.state_count(),
            initial: n.initial().to_vec(),
            final_states: n.final_states().to_vec(),
            transitions: n
                .transition_triples()
                .into_iter()
                .map(|(q, a, t)| (q, n.alphabet()[a].clone(), t))
                .collect(),
        }
    }

    pub fn to_nfa(&self) -> Result<Nfa> {
        let mut n = Nfa::new(self.states, self.alphabet.clone())?;
        for &q in &self.initial {
            n.set_initial(q)?;
        }
        for &q in &self.final_states {
            n.set_final(q)?;
        }
        for (q, name, t) in &self.transitions {
            let a = n.symbol_index(name)?;
            n.add_transition(*q, a, *t)?;
        }
        Ok(n)
    }
}

pub fn nfa_to_json(n: &Nfa) -> String {
    serde_json::to_string_pretty(&AutomatonJson::from_nfa(n)).expect("serialization cannot fail")
}

pub fn nfa_from_json(text: &str) -> Result<Nfa> {
    let parsed: AutomatonJson = serde_json::from_str(text)?;
    parsed.to_nfa()
}

pub fn dfa_to_json(d: &Dfa) -> String {
    nfa_to_json(&d.as_nfa())
}

/// Parses an automaton and checks it is a complete DFA.
pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    let n = nfa_from_json(text)?;
    Dfa::from_nfa(&n).map_err(|_| {
        AutomatonError::precondition(
            "this operation needs a complete DFA (total transitions, one initial state)",
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness;

    #[test]
    fn round_trip_families() {
        for n in [1, 3, 4, 5] {
            let m = witness::witness_all_final(n).unwrap();
            assert_eq!(nfa_from_json(&nfa_to_json(&m)).unwrap(), m);
        }
        let d = witness::witness_suff(4).unwrap();
        assert_eq!(
            dfa_from_json(&dfa_to_json(&d)).unwrap(),
            d
        );
    }

    #[test]
    fn rejects_bad_references() {
        let text = r#"{"alphabet":["a"],"states":1,"initial":[0],"final":[0],"transitions":[[0,"b",0]]}"#;
        assert!(nfa_from_json(text).is_err());
        let text = r#"{"alphabet":["a"],"states":1,"initial":[2],"final":[],"transitions":[]}"#;
        assert!(nfa_from_json(text).is_err());
    }

    #[test]
    fn dfa_parse_rejects_nondeterministic() {
        let m = witness::witness_all_final(3).unwrap();
        assert!(dfa_from_json(&nfa_to_json(&m)).is_err());
    }
}
