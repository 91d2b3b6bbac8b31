use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::dfa::{difference_witness, Dfa};
use crate::error::{AutomatonError, Result};
use crate::nfa::{Nfa, Word};
use crate::state_set::StateSet;

/// Result of the subset construction: the complete DFA over reachable subsets
/// plus the map from each DFA state back to the source subset.
#[derive(Clone, Debug)]
pub struct DeterminizationTrace {
    pub dfa: Dfa,
    /// `subset_of[d]` is the NFA state set the DFA state `d` stands for.
    pub subset_of: Vec<StateSet>,
}

impl DeterminizationTrace {
    /// JSON view: arrays of source-state ids keyed by DFA state id.
    pub fn subset_map_json(&self) -> serde_json::Value {
        let map: Vec<Vec<usize>> = self.subset_of.iter().map(|s| s.to_vec()).collect();
        serde_json::to_value(SubsetMapJson { subsets: map }).unwrap()
    }
}

#[derive(Serialize)]
struct SubsetMapJson {
    subsets: Vec<Vec<usize>>,
}

/// Subset construction over reachable subsets only. The empty subset, when
/// reachable, becomes an ordinary (non-final) sink state, so the output is
/// always complete.
pub fn determinize(n: &Nfa) -> DeterminizationTrace {
    let k = n.alphabet_size();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let start = n.initial().clone();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(d) = queue.pop_front() {
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let next = n.step(&subsets[d], a).expect("symbol index in range");
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    delta.push(Vec::new());
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if d >= delta.len() {
            delta.resize(d + 1, Vec::new());
        }
        delta[d] = row;
    }
    let mut fin = StateSet::empty(subsets.len());
    for (d, s) in subsets.iter().enumerate() {
        if s.intersects(n.final_states()) {
            fin.insert(d);
        }
    }
    let dfa = Dfa::new(n.alphabet().to_vec(), delta, 0, fin).expect("construction is well formed");
    DeterminizationTrace {
        dfa,
        subset_of: subsets,
    }
}

/// Canonical renumbering: BFS from the initial state expanding symbols in
/// index order. Every state of the input must be reachable.
fn canonical_renumber(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let mut order = vec![usize::MAX; n];
    let mut next = 0;
    order[d.initial()] = next;
    next += 1;
    let mut queue = VecDeque::from([d.initial()]);
    while let Some(q) = queue.pop_front() {
        for a in 0..d.alphabet_size() {
            let t = d.next(q, a);
            if order[t] == usize::MAX {
                order[t] = next;
                next += 1;
                queue.push_back(t);
            }
        }
    }
    assert_eq!(next, n, "canonical_renumber needs all states reachable");
    let mut delta = vec![vec![0; d.alphabet_size()]; n];
    let mut fin = StateSet::empty(n);
    for q in 0..n {
        for a in 0..d.alphabet_size() {
            delta[order[q]][a] = order[d.next(q, a)];
        }
        if d.is_final(q) {
            fin.insert(order[q]);
        }
    }
    Dfa::new(d.alphabet().to_vec(), delta, 0, fin).unwrap()
}

/// Minimal complete DFA for `L(d)`: restrict to reachable states, refine the
/// final/non-final partition to a fixed point (Moore), merge blocks, and
/// renumber canonically so equal languages give structurally equal outputs.
pub fn minimize(d: &Dfa) -> Dfa {
    // reachable restriction
    let reach = d.reachable();
    let n_reach = reach.len();
    let mut compact = vec![usize::MAX; d.state_count()];
    for (i, q) in reach.iter().enumerate() {
        compact[q] = i;
    }
    let states: Vec<usize> = reach.iter().collect();
    let k = d.alphabet_size();

    // Moore partition refinement on the reachable part
    let mut block = vec![0usize; n_reach];
    for (i, &q) in states.iter().enumerate() {
        block[i] = usize::from(d.is_final(q));
    }
    loop {
        // refine by signature: own block plus blocks of successors
        let old_count = block.iter().copied().max().map_or(0, |m| m + 1);
        let mut sig_index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next_block = vec![0usize; n_reach];
        for (i, &q) in states.iter().enumerate() {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(block[i]);
            for a in 0..k {
                sig.push(block[compact[d.next(q, a)]]);
            }
            let len = sig_index.len();
            next_block[i] = *sig_index.entry(sig).or_insert(len);
        }
        let new_count = sig_index.len();
        block = next_block;
        if new_count == old_count {
            break;
        }
    }
    let block_count = block.iter().copied().max().map_or(0, |m| m + 1);
    let mut delta = vec![vec![0; k]; block_count];
    let mut fin = StateSet::empty(block_count);
    for (i, &q) in states.iter().enumerate() {
        for a in 0..k {
            delta[block[i]][a] = block[compact[d.next(q, a)]];
        }
        if d.is_final(q) {
            fin.insert(block[i]);
        }
    }
    let initial = block[compact[d.initial()]];
    let merged = Dfa::new(d.alphabet().to_vec(), delta, initial, fin).unwrap();
    canonical_renumber(&merged)
}

/// Number of states of the minimal complete DFA for `L(n)`, dead state
/// included.
pub fn state_complexity(n: &Nfa) -> usize {
    minimize(&determinize(n).dfa).state_count()
}

/// Exact language equivalence, via determinization and emptiness of both
/// differences.
pub fn equivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch {
            left: a.alphabet().to_vec(),
            right: b.alphabet().to_vec(),
        });
    }
    let da = determinize(a).dfa;
    let db = determinize(b).dfa;
    Ok(difference_witness(&da, &db)?.is_none() && difference_witness(&db, &da)?.is_none())
}

/// True iff the automaton accepts every word over its alphabet, i.e. every
/// reachable subset-state is final. Stops at the first rejecting subset.
pub fn universal(n: &Nfa) -> bool {
    shortest_rejected(n).is_none()
}

/// Lexicographically-least shortest word outside the language, or `None`
/// when the automaton is universal. BFS over the subset construction with
/// symbols expanded in index order.
pub fn shortest_rejected(n: &Nfa) -> Option<Word> {
    let k = n.alphabet_size();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut info: Vec<(StateSet, Option<(usize, usize)>)> = Vec::new();
    let start = n.initial().clone();
    index.insert(start.clone(), 0);
    info.push((start, None));
    let mut queue = VecDeque::from([0usize]);
    while let Some(d) = queue.pop_front() {
        if !info[d].0.intersects(n.final_states()) {
            let mut word = Vec::new();
            let mut cur = d;
            while let Some((prev, a)) = info[cur].1 {
                word.push(a);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for a in 0..k {
            let next = n.step(&info[d].0, a).expect("symbol index in range");
            if !index.contains_key(&next) {
                let id = info.len();
                index.insert(next.clone(), id);
                info.push((next, Some((d, a))));
                queue.push_back(id);
            }
        }
    }
    None
}

/// Which restricted class an enumeration covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// All states final, one initial state (ranging over all choices).
    AsfSingleInitial,
    /// All states initial, one final state (ranging over all choices).
    AsiOneFinal,
    /// All states initial and final.
    Asif,
    /// Unary alphabet, all states final, initial set ranging over all subsets.
    UnaryAsf,
}

impl EnumerationMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "asf" | "ASF-single-initial" => Ok(Self::AsfSingleInitial),
            "asi" | "ASI-one-final" => Ok(Self::AsiOneFinal),
            "asif" | "ASIF" => Ok(Self::Asif),
            "unary-asf" | "unary-ASF" => Ok(Self::UnaryAsf),
            _ => Err(AutomatonError::precondition(format!(
                "unknown enumeration mode {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub max_complexity: usize,
    pub witness: Nfa,
    pub total_enumerated: u64,
}

/// Exhaustively enumerates every NFA of the given class and returns the exact
/// maximum state complexity with one witness (first in enumeration order).
/// No isomorphism reduction is attempted.
pub fn enumerate_max_blowup(
    n: usize,
    alphabet_size: usize,
    mode: EnumerationMode,
    budget: u64,
) -> Result<EnumerationResult> {
    if n == 0 || n > 16 {
        return Err(AutomatonError::precondition(
            "enumeration needs 1 <= n <= 16 states",
        ));
    }
    if mode == EnumerationMode::UnaryAsf && alphabet_size != 1 {
        return Err(AutomatonError::precondition(
            "unary-asf enumeration needs a one-letter alphabet",
        ));
    }
    let cells = n * alphabet_size;
    let per_cell = 1u64 << n;
    let transition_count = per_cell
        .checked_pow(cells as u32)
        .ok_or_else(|| AutomatonError::BudgetExceeded {
            task: "enumerate_max_blowup".into(),
            needed: u64::MAX,
            cap: budget,
        })?;
    let initial_choices: u64 = match mode {
        EnumerationMode::AsfSingleInitial | EnumerationMode::AsiOneFinal => n as u64,
        EnumerationMode::Asif => 1,
        EnumerationMode::UnaryAsf => 1 << n,
    };
    let total = transition_count.checked_mul(initial_choices).ok_or_else(|| {
        AutomatonError::BudgetExceeded {
            task: "enumerate_max_blowup".into(),
            needed: u64::MAX,
            cap: budget,
        }
    })?;
    if total > budget {
        return Err(AutomatonError::BudgetExceeded {
            task: "enumerate_max_blowup".into(),
            needed: total,
            cap: budget,
        });
    }

    let alphabet: Vec<String> = (0..alphabet_size).map(|a| a.to_string()).collect();
    let mut best: Option<(usize, Nfa)> = None;
    let mut enumerated = 0u64;
    for code in 0..transition_count {
        // decode one subset per (state, symbol) cell
        let mut base = Nfa::new(n, alphabet.clone())?;
        let mut c = code;
        for q in 0..n {
            for a in 0..alphabet_size {
                let mask = c % per_cell;
                c /= per_cell;
                for t in 0..n {
                    if mask >> t & 1 == 1 {
                        base.add_transition(q, a, t)?;
                    }
                }
            }
        }
        for choice in 0..initial_choices {
            let mut m = base.clone();
            match mode {
                EnumerationMode::AsfSingleInitial => {
                    m.set_all_final();
                    m.set_initial(choice as usize)?;
                }
                EnumerationMode::AsiOneFinal => {
                    m.set_all_initial();
                    m.set_final(choice as usize)?;
                }
                EnumerationMode::Asif => {
                    m.set_all_initial();
                    m.set_all_final();
                }
                EnumerationMode::UnaryAsf => {
                    m.set_all_final();
                    for q in 0..n {
                        if choice >> q & 1 == 1 {
                            m.set_initial(q)?;
                        }
                    }
                }
            }
            enumerated += 1;
            let sc = state_complexity(&m);
            if best.as_ref().is_none_or(|(b, _)| sc > *b) {
                best = Some((sc, m));
            }
        }
    }
    let (max_complexity, witness) = best.expect("at least one automaton enumerated");
    Ok(EnumerationResult {
        max_complexity,
        witness,
        total_enumerated: enumerated,
    })
}
