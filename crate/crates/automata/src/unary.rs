use serde::{Deserialize, Serialize};

use crate::error::{AutomatonError, Result};
use crate::nfa::Nfa;

/// The language of a unary NFA with all states final: either every word, or
/// exactly the words of length at most `i` (with `i = -1` for the empty
/// language, which arises when there is no initial state).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "max_length")]
pub enum UnaryAsfResult {
    AllWords,
    FiniteUpTo(i64),
}

fn check_unary_asf(n: &Nfa) -> Result<()> {
    if !n.is_unary() {
        return Err(AutomatonError::precondition(
            "unary analysis needs a one-letter alphabet",
        ));
    }
    if !n.is_all_final() {
        return Err(AutomatonError::precondition(
            "unary analysis needs all states final",
        ));
    }
    if n.initial().len() > 1 {
        return Err(AutomatonError::precondition(
            "unary analysis needs at most one initial state",
        ));
    }
    Ok(())
}

/// Determines the language of a unary all-final NFA in time polynomial in the
/// state count. Since every state is final and the empty set is absorbing,
/// `a^j` is accepted iff some run of length `j` exists, and acceptance is
/// downward closed; `a^n` accepted means a reachable cycle, hence all words.
pub fn unary_asf_analyze(n: &Nfa) -> Result<UnaryAsfResult> {
    check_unary_asf(n)?;
    if n.initial().is_empty() {
        return Ok(UnaryAsfResult::FiniteUpTo(-1));
    }
    let mut set = n.initial().clone();
    let mut longest: i64 = 0;
    for j in 1..=n.state_count() {
        set = n.step(&set, 0)?;
        if set.is_empty() {
            break;
        }
        longest = j as i64;
    }
    if longest == n.state_count() as i64 {
        Ok(UnaryAsfResult::AllWords)
    } else {
        Ok(UnaryAsfResult::FiniteUpTo(longest))
    }
}

/// Polynomial inequivalence test for two unary all-final NFAs.
pub fn unary_asf_inequivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    Ok(unary_asf_analyze(a)? != unary_asf_analyze(b)?)
}
