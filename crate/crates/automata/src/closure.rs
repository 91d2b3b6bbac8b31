use crate::dfa::{difference_witness, Dfa};
use crate::error::{AutomatonError, Result};
use crate::nfa::{Nfa, Word};
use crate::subset::{determinize, minimize};
use crate::state_set::StateSet;

/// Which closure a language is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Prefix,
    Suffix,
    Factor,
}

impl ClosureKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "prefix" | "pref" => Ok(Self::Prefix),
            "suffix" | "suff" => Ok(Self::Suffix),
            "factor" | "fact" | "factorial" => Ok(Self::Factor),
            _ => Err(AutomatonError::precondition(format!(
                "unknown closure kind {s:?}"
            ))),
        }
    }
}

/// DFA for `pref(L(d))`: same transition structure, final set replaced by the
/// states that can reach a final state. State count is unchanged, so the
/// state complexity of the prefix closure never exceeds that of the input.
pub fn pref_dfa(d: &Dfa) -> Dfa {
    let co = d.as_nfa().coaccessible();
    d.with_finals(co)
}

/// NFA for `suff(L(d))`: identical to `d` but with every state reachable
/// from the start made initial.
pub fn suff_nfa(d: &Dfa) -> Nfa {
    let mut n = d.as_nfa();
    n.clear_initial();
    for q in d.reachable().iter() {
        n.set_initial(q).unwrap();
    }
    n
}

/// NFA for `fact(L(d))`: drop states that are unreachable or cannot reach a
/// final state, then make everything initial and final.
pub fn fact_nfa(d: &Dfa) -> Nfa {
    let (mut n, _) = d.as_nfa().trim();
    n.set_all_initial();
    n.set_all_final();
    n
}

/// Outcome of a closedness test: closed, or a shortest counterexample word
/// that is in the closure but not in the language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessResult {
    pub closed: bool,
    pub witness: Option<Word>,
}

impl ClosednessResult {
    fn closed() -> Self {
        ClosednessResult {
            closed: true,
            witness: None,
        }
    }

    fn violated(w: Word) -> Self {
        ClosednessResult {
            closed: false,
            witness: Some(w),
        }
    }
}

/// Polynomial test: `L` is prefix-closed iff `pref(L) \ L` is empty.
pub fn is_prefix_closed(d: &Dfa) -> Result<ClosednessResult> {
    match difference_witness(&pref_dfa(d), d)? {
        None => Ok(ClosednessResult::closed()),
        Some(w) => Ok(ClosednessResult::violated(w)),
    }
}

/// Polynomial test: for every reachable state `i`, the language from `i`
/// must be contained in `L`.
pub fn is_suffix_closed(d: &Dfa) -> Result<ClosednessResult> {
    for i in d.reachable().iter() {
        if let Some(w) = difference_witness(&d.with_start(i)?, d)? {
            return Ok(ClosednessResult::violated(w));
        }
    }
    Ok(ClosednessResult::closed())
}

/// Polynomial test: prefix-close the language from every reachable start.
pub fn is_factorial(d: &Dfa) -> Result<ClosednessResult> {
    for i in d.reachable().iter() {
        if let Some(w) = difference_witness(&pref_dfa(&d.with_start(i)?), d)? {
            return Ok(ClosednessResult::violated(w));
        }
    }
    Ok(ClosednessResult::closed())
}

pub fn is_closed(d: &Dfa, kind: ClosureKind) -> Result<ClosednessResult> {
    match kind {
        ClosureKind::Prefix => is_prefix_closed(d),
        ClosureKind::Suffix => is_suffix_closed(d),
        ClosureKind::Factor => is_factorial(d),
    }
}

fn require_nonempty(d: &Dfa, what: &str) -> Result<()> {
    if !d.reachable().intersects(d.final_states()) {
        return Err(AutomatonError::precondition(format!(
            "{what} is only defined for nonempty languages"
        )));
    }
    Ok(())
}

/// For a nonempty prefix-closed language, builds an equivalent NFA with all
/// states final and a single initial state: the coaccessible restriction of
/// the DFA with every remaining state final.
pub fn to_all_final_nfa(d: &Dfa) -> Result<Nfa> {
    require_nonempty(d, "the all-final construction")?;
    let pc = is_prefix_closed(d)?;
    if !pc.closed {
        return Err(AutomatonError::precondition(
            "the all-final construction needs a prefix-closed language",
        ));
    }
    let n = d.as_nfa();
    let mut keep = n.reachable();
    let co = n.coaccessible();
    let mut both = StateSet::empty(n.state_count());
    for q in keep.iter() {
        if co.contains(q) {
            both.insert(q);
        }
    }
    keep = both;
    let (mut out, _) = n.restrict(&keep);
    out.set_all_final();
    Ok(out)
}

/// For a nonempty suffix-closed language, builds an equivalent NFA with all
/// states initial and exactly one final state, by reversing the all-final
/// construction applied to the minimal DFA of the reversed language.
pub fn to_all_initial_nfa(d: &Dfa) -> Result<Nfa> {
    require_nonempty(d, "the all-initial construction")?;
    let sc = is_suffix_closed(d)?;
    if !sc.closed {
        return Err(AutomatonError::precondition(
            "the all-initial construction needs a suffix-closed language",
        ));
    }
    let reversed_min = minimize(&determinize(&d.as_nfa().reverse()).dfa);
    let all_final = to_all_final_nfa(&reversed_min)?;
    Ok(all_final.reverse())
}

/// For a nonempty factorial language, builds an equivalent NFA with all
/// states both initial and final: the trim part of the DFA with I = F = Q.
pub fn to_asif_nfa(d: &Dfa) -> Result<Nfa> {
    require_nonempty(d, "the all-initial-final construction")?;
    let fc = is_factorial(d)?;
    if !fc.closed {
        return Err(AutomatonError::precondition(
            "the all-initial-final construction needs a factorial language",
        ));
    }
    let (mut out, _) = d.as_nfa().trim();
    out.set_all_initial();
    out.set_all_final();
    Ok(out)
}
