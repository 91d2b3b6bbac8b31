use serde::Serialize;

use crate::error::{AutomatonError, Result};
use crate::nfa::Nfa;
use crate::subset::universal;

pub const HASH_SYMBOL: &str = "#";

/// Records a reduction together with the universality status of both sides,
/// checked exactly at small scale.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionCertificate {
    pub input_universal: bool,
    pub output_universal: bool,
    pub checked_at_scale: bool,
}

impl ReductionCertificate {
    pub fn check(input: &Nfa, output: &Nfa) -> Self {
        ReductionCertificate {
            input_universal: universal(input),
            output_universal: universal(output),
            checked_at_scale: true,
        }
    }

    pub fn holds(&self) -> bool {
        !self.checked_at_scale || self.input_universal == self.output_universal
    }
}

fn require_single_initial(m: &Nfa) -> Result<usize> {
    if !m.is_single_initial() {
        return Err(AutomatonError::precondition(
            "this reduction needs exactly one initial state",
        ));
    }
    Ok(m.initial().iter().next().unwrap())
}

fn extended_alphabet(m: &Nfa) -> Result<Vec<String>> {
    if m.alphabet().iter().any(|a| a == HASH_SYMBOL) {
        return Err(AutomatonError::precondition(
            "the input alphabet already contains \"#\"",
        ));
    }
    let mut alphabet = m.alphabet().to_vec();
    alphabet.push(HASH_SYMBOL.to_string());
    Ok(alphabet)
}

/// Universality-preserving reduction into the all-states-final class: add a
/// fresh symbol `#` with a transition from each final state back to the
/// initial state, then make every state final.
pub fn asf_reduction(m: &Nfa) -> Result<Nfa> {
    let q0 = require_single_initial(m)?;
    let alphabet = extended_alphabet(m)?;
    let hash = alphabet.len() - 1;
    let mut out = Nfa::new(m.state_count(), alphabet)?;
    out.set_initial(q0)?;
    out.set_all_final();
    for (q, a, t) in m.transition_triples() {
        out.add_transition(q, a, t)?;
    }
    for f in m.final_states().iter() {
        out.add_transition(f, hash, q0)?;
    }
    Ok(out)
}

/// Universality-preserving reduction into the all-states-initial-and-final
/// class: restrict to states reachable from the initial state, add the `#`
/// return transitions, then make every state both initial and final.
pub fn asif_reduction(m: &Nfa) -> Result<Nfa> {
    require_single_initial(m)?;
    let (reachable, _) = m.restrict(&m.reachable());
    let mut out = asf_reduction(&reachable)?;
    out.set_all_initial();
    Ok(out)
}

/// Recodes a 4-letter all-final NFA over {0,1}: each state gains two final
/// intermediate states, one per first bit, carrying the original targets on
/// the matching second bit. 0↦00, 1↦01, 2↦10, 3↦11.
pub fn recode_4_to_2(m: &Nfa) -> Result<Nfa> {
    if m.alphabet_size() != 4 {
        return Err(AutomatonError::precondition(
            "the 4-to-2 recoding needs a four-letter alphabet",
        ));
    }
    if !m.is_all_final() {
        return Err(AutomatonError::precondition(
            "the 4-to-2 recoding needs all states final",
        ));
    }
    let n = m.state_count();
    // states: original q -> q; intermediates q_b -> n + 2q + b
    let mut out = Nfa::new(3 * n, vec!["0".into(), "1".into()])?;
    out.set_all_final();
    for q in m.initial().iter() {
        out.set_initial(q)?;
    }
    for q in 0..n {
        let mid0 = n + 2 * q;
        let mid1 = n + 2 * q + 1;
        out.add_transition(q, 0, mid0)?;
        out.add_transition(q, 1, mid1)?;
        // letter 0 -> 00, letter 1 -> 01
        for t in m.targets(q, 0).iter() {
            out.add_transition(mid0, 0, t)?;
        }
        for t in m.targets(q, 1).iter() {
            out.add_transition(mid0, 1, t)?;
        }
        // letter 2 -> 10, letter 3 -> 11
        for t in m.targets(q, 2).iter() {
            out.add_transition(mid1, 0, t)?;
        }
        for t in m.targets(q, 3).iter() {
            out.add_transition(mid1, 1, t)?;
        }
    }
    Ok(out)
}

/// Intermediate stages of the 3-letter-ASF to binary-ASIF pipeline, exposed
/// for testing.
#[derive(Clone, Debug)]
pub struct Asf3ToAsif2Trace {
    /// After splitting the initial state: q0 has no incoming transitions.
    pub split: Nfa,
    /// After replicating states so all incoming transitions of a state share
    /// one label.
    pub uniform: Nfa,
    /// After recoding 0↦1, 1↦10, 2↦100 through intermediate states. States
    /// `0..old_count` are "old", the rest are "new".
    pub recoded: Nfa,
    pub recoded_old_count: usize,
    /// Final result: return gadgets attached, all states initial and final.
    pub result: Nfa,
}

/// Reduces nonuniversality of a 3-letter all-final single-initial NFA to
/// nonuniversality of a binary NFA with all states both initial and final.
pub fn asf3_to_asif2(m: &Nfa) -> Result<Nfa> {
    Ok(asf3_to_asif2_trace(m)?.result)
}

pub fn asf3_to_asif2_trace(m: &Nfa) -> Result<Asf3ToAsif2Trace> {
    if m.alphabet_size() != 3 {
        return Err(AutomatonError::precondition(
            "the ASF(3) to ASIF(2) reduction needs a three-letter alphabet",
        ));
    }
    if !m.is_all_final() {
        return Err(AutomatonError::precondition(
            "the ASF(3) to ASIF(2) reduction needs all states final",
        ));
    }
    let q0 = require_single_initial(m)?;
    let n = m.state_count();
    let k = 3;

    // Stage 1: double the initial state. The copy p0 takes over all incoming
    // transitions of q0 and repeats its outgoing ones, so q0 ends up with
    // in-degree 0.
    let p0 = n;
    let mut split = Nfa::new(n + 1, m.alphabet().to_vec())?;
    split.set_initial(q0)?;
    split.set_all_final();
    for (q, a, t) in m.transition_triples() {
        let to = if t == q0 { p0 } else { t };
        split.add_transition(q, a, to)?;
    }
    for a in 0..k {
        for t in m.targets(q0, a).iter() {
            let to = if t == q0 { p0 } else { t };
            split.add_transition(p0, a, to)?;
        }
    }

    // Stage 2: replicate every non-initial state once per incoming label in
    // use, so each state's incoming transitions share one label. States with
    // no incoming transitions keep a single (unreachable) copy.
    let sn = split.state_count();
    let mut incoming_labels: Vec<Vec<usize>> = vec![Vec::new(); sn];
    for (_, a, t) in split.transition_triples() {
        if !incoming_labels[t].contains(&a) {
            incoming_labels[t].push(a);
        }
    }
    // replica id of (state, incoming label); label None for the initial state
    // and for incoming-free states
    let mut replica: Vec<Vec<Option<usize>>> = vec![vec![None; k]; sn];
    let mut base_copy: Vec<Option<usize>> = vec![None; sn];
    let mut count = 0;
    {
        let mut alloc = |slot: &mut Option<usize>| {
            if slot.is_none() {
                *slot = Some(count);
                count += 1;
            }
            slot.unwrap()
        };
        alloc(&mut base_copy[q0]);
        for s in 0..sn {
            if s == q0 {
                continue;
            }
            if incoming_labels[s].is_empty() {
                alloc(&mut base_copy[s]);
            } else {
                for &a in &incoming_labels[s].clone() {
                    alloc(&mut replica[s][a]);
                }
            }
        }
    }
    let mut uniform = Nfa::new(count, m.alphabet().to_vec())?;
    uniform.set_initial(base_copy[q0].unwrap())?;
    uniform.set_all_final();
    for s in 0..sn {
        let copies: Vec<usize> = if s == q0 || incoming_labels[s].is_empty() {
            vec![base_copy[s].unwrap()]
        } else {
            incoming_labels[s].iter().map(|&a| replica[s][a].unwrap()).collect()
        };
        for a in 0..k {
            for t in split.targets(s, a).iter() {
                // incoming label of the target copy is a
                let target_copy = replica[t][a].unwrap_or_else(|| base_copy[t].unwrap());
                for &c in &copies {
                    uniform.add_transition(c, a, target_copy)?;
                }
            }
        }
    }

    // Stage 3: recode through the morphism 0↦1, 1↦10, 2↦100. One shared
    // chain of intermediate "new" states per (source state, letter); new
    // states carry only transitions on 0.
    let old_count = uniform.state_count();
    let mut new_states = 0usize;
    let mut chains: Vec<Vec<Option<(usize, usize)>>> = vec![vec![None; k]; old_count];
    for s in 0..old_count {
        for a in 1..k {
            if !uniform.targets(s, a).is_empty() {
                chains[s][a] = Some((old_count + new_states, a));
                new_states += a; // one intermediate for letter 1, two for letter 2
            }
        }
    }
    let mut recoded = Nfa::new(old_count + new_states, vec!["0".into(), "1".into()])?;
    for s in 0..old_count {
        // letter 0 -> single transition on 1
        for t in uniform.targets(s, 0).iter() {
            recoded.add_transition(s, 1, t)?;
        }
        // letter 1 -> 1 then 0; letter 2 -> 1 then 0 then 0
        for a in 1..k {
            if let Some((first, _)) = chains[s][a] {
                recoded.add_transition(s, 1, first)?;
                let mut cur = first;
                for step in 1..a {
                    recoded.add_transition(cur, 0, first + step)?;
                    cur = first + step;
                }
                for t in uniform.targets(s, a).iter() {
                    recoded.add_transition(cur, 0, t)?;
                }
            }
        }
    }

    // Stage 4: from each old state with incoming transitions, attach a
    // return gadget realizing exactly the words 1·0^j, j >= 3, ending at q0:
    //   p -1-> a -0-> b -0-> c,  c -0-> c,  c -0-> q0.
    // The gadget states are "new": they carry no transition on 1.
    let q0_new = base_copy[q0].unwrap();
    let mut has_incoming = vec![false; old_count];
    // the gadgets themselves feed q0, so it needs a gadget of its own
    has_incoming[q0_new] = true;
    for (_, _, t) in recoded.transition_triples() {
        if t < old_count {
            has_incoming[t] = true;
        }
    }
    let targets_with_gadget: Vec<usize> =
        (0..old_count).filter(|&s| has_incoming[s]).collect();
    let base = recoded.state_count();
    let mut result = Nfa::new(
        base + 3 * targets_with_gadget.len(),
        vec!["0".into(), "1".into()],
    )?;
    for (q, a, t) in recoded.transition_triples() {
        result.add_transition(q, a, t)?;
    }
    for (i, &p) in targets_with_gadget.iter().enumerate() {
        let ga = base + 3 * i;
        let gb = ga + 1;
        let gc = ga + 2;
        result.add_transition(p, 1, ga)?;
        result.add_transition(ga, 0, gb)?;
        result.add_transition(gb, 0, gc)?;
        result.add_transition(gc, 0, gc)?;
        result.add_transition(gc, 0, q0_new)?;
    }

    // Stage 5: all states both initial and final.
    result.set_all_initial();
    result.set_all_final();

    Ok(Asf3ToAsif2Trace {
        split,
        uniform,
        recoded,
        recoded_old_count: old_count,
        result,
    })
}

fn require_epsilon(m: &Nfa) -> Result<()> {
    if !m.accepts(&[])? {
        return Err(AutomatonError::precondition(
            "the augmentation needs ε in the language",
        ));
    }
    Ok(())
}

/// The shortest-rejected-word augmentation into the all-final class: `#`
/// transitions from each final state back to the initial state, all states
/// final. The shortest rejected word can only get longer.
pub fn augment_hash_asf(m: &Nfa) -> Result<Nfa> {
    require_single_initial(m)?;
    require_epsilon(m)?;
    asf_reduction(m)
}

/// The same augmentation into the all-initial-and-final class.
pub fn augment_hash_asif(m: &Nfa) -> Result<Nfa> {
    require_single_initial(m)?;
    require_epsilon(m)?;
    let q0 = m.initial().iter().next().unwrap();
    let alphabet = extended_alphabet(m)?;
    let hash = alphabet.len() - 1;
    let mut out = Nfa::new(m.state_count(), alphabet)?;
    out.set_all_initial();
    out.set_all_final();
    for (q, a, t) in m.transition_triples() {
        out.add_transition(q, a, t)?;
    }
    for f in m.final_states().iter() {
        out.add_transition(f, hash, q0)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::shortest_rejected;

    fn universal_1state(letters: &[&str]) -> Nfa {
        let mut m = Nfa::new(1, letters.iter().map(|s| s.to_string()).collect()).unwrap();
        m.set_initial(0).unwrap();
        m.set_final(0).unwrap();
        for a in 0..letters.len() {
            m.add_transition(0, a, 0).unwrap();
        }
        m
    }

    #[test]
    fn asf_on_universal() {
        let m = universal_1state(&["0", "1"]);
        let r = asf_reduction(&m).unwrap();
        assert!(r.is_all_final());
        assert_eq!(r.alphabet(), ["0", "1", "#"]);
        assert!(universal(&r));
    }

    #[test]
    fn asf_on_nonfinal_loop() {
        let mut m = Nfa::new(1, vec!["0".into()]).unwrap();
        m.set_initial(0).unwrap();
        m.add_transition(0, 0, 0).unwrap();
        let r = asf_reduction(&m).unwrap();
        let hash = r.symbol_index("#").unwrap();
        assert!(!r.accepts(&[hash]).unwrap());
    }

    #[test]
    fn asf_needs_single_initial() {
        let mut m = Nfa::new(2, vec!["0".into()]).unwrap();
        m.set_all_initial();
        m.set_all_final();
        assert!(asf_reduction(&m).is_err());
    }

    #[test]
    fn asif_on_universal_and_junk() {
        let m = universal_1state(&["0", "1"]);
        let r = asif_reduction(&m).unwrap();
        assert!(r.is_asif());
        assert!(universal(&r));

        // unreachable junk is removed
        let mut junk = universal_1state(&["0", "1"]);
        let mut with_junk = Nfa::new(3, junk.alphabet().to_vec()).unwrap();
        with_junk.set_initial(0).unwrap();
        with_junk.set_final(0).unwrap();
        for (q, a, t) in junk.transition_triples() {
            with_junk.add_transition(q, a, t).unwrap();
        }
        with_junk.add_transition(1, 0, 2).unwrap();
        junk = with_junk;
        let r = asif_reduction(&junk).unwrap();
        assert_eq!(r.state_count(), 1);
    }

    #[test]
    fn recode_structure() {
        let m = universal_1state(&["0", "1", "2", "3"]);
        let r = recode_4_to_2(&m).unwrap();
        assert_eq!(r.state_count(), 3);
        assert!(r.is_all_final());
        assert!(universal(&r));
    }

    #[test]
    fn recode_rejects_bad_inputs() {
        assert!(recode_4_to_2(&universal_1state(&["0", "1"])).is_err());
        let mut not_final = Nfa::new(1, vec!["0".into(), "1".into(), "2".into(), "3".into()])
            .unwrap();
        not_final.set_initial(0).unwrap();
        assert!(recode_4_to_2(&not_final).is_err());
    }

    #[test]
    fn asf3_stage_invariants() {
        let m = universal_1state(&["0", "1", "2"]);
        let trace = asf3_to_asif2_trace(&m).unwrap();
        // stage 1: q0 has in-degree 0
        let q0 = trace.split.initial().iter().next().unwrap();
        assert!(trace
            .split
            .transition_triples()
            .iter()
            .all(|&(_, _, t)| t != q0));
        // stage 2: each state's incoming labels are uniform
        let mut labels: Vec<Option<usize>> = vec![None; trace.uniform.state_count()];
        for (_, a, t) in trace.uniform.transition_triples() {
            match labels[t] {
                None => labels[t] = Some(a),
                Some(l) => assert_eq!(l, a, "state {t} has mixed incoming labels"),
            }
        }
        // stage 3: new states carry no transition on 1
        for s in trace.recoded_old_count..trace.recoded.state_count() {
            assert!(trace.recoded.targets(s, 1).is_empty());
        }
        // result is ASIF and universal for a universal input
        assert!(trace.result.is_asif());
        assert!(universal(&trace.result));
    }

    #[test]
    fn augment_asf_examples() {
        let m = universal_1state(&["0", "1"]);
        assert!(universal(&augment_hash_asf(&m).unwrap()));

        // ε-only language: M accepts ε, rejects everything else
        let mut eps = Nfa::new(1, vec!["0".into()]).unwrap();
        eps.set_initial(0).unwrap();
        eps.set_final(0).unwrap();
        let aug = augment_hash_asf(&eps).unwrap();
        let w = shortest_rejected(&eps).unwrap();
        let sr = shortest_rejected(&aug).unwrap();
        assert!(sr.len() >= w.len());
        // w·# rejected by the augmented automaton
        let hash = aug.symbol_index("#").unwrap();
        let mut whash = w.clone();
        whash.push(hash);
        assert!(!aug.accepts(&whash).unwrap());
    }

    #[test]
    fn augment_needs_epsilon() {
        let mut m = Nfa::new(2, vec!["0".into()]).unwrap();
        m.set_initial(0).unwrap();
        m.set_final(1).unwrap();
        m.add_transition(0, 0, 1).unwrap();
        assert!(augment_hash_asf(&m).is_err());
        assert!(augment_hash_asif(&m).is_err());
    }

    #[test]
    fn augment_asif_flags_and_rejection() {
        let mut eps = Nfa::new(1, vec!["0".into()]).unwrap();
        eps.set_initial(0).unwrap();
        eps.set_final(0).unwrap();
        let aug = augment_hash_asif(&eps).unwrap();
        assert!(aug.is_asif());
        let w = shortest_rejected(&eps).unwrap();
        let hash = aug.symbol_index("#").unwrap();
        let mut hwh = vec![hash];
        hwh.extend(&w);
        hwh.push(hash);
        assert!(!aug.accepts(&hwh).unwrap());
    }
}
