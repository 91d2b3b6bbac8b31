//! Brute-force definitional checks over bounded word slices. These are kept
//! independent of the subset/product machinery so the two can be played
//! against each other.

use crate::dfa::Dfa;
use crate::nfa::Word;

/// All words over a k-letter alphabet up to the given length, in shortlex
/// order.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut all: Vec<Word> = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..alphabet_size {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Definitional prefix-closedness on the slice `Σ^{≤bound}`. With
/// `bound >= 2·states - 2` this is exact for a complete DFA: a shortest
/// violation is a shortest path to a rejecting state followed by a shortest
/// path from it to an accepting one.
pub fn prefix_closed_slice(d: &Dfa, bound: usize) -> bool {
    for w in words_up_to(d.alphabet_size(), bound) {
        if !d.accepts(&w) {
            continue;
        }
        for cut in 0..w.len() {
            if !d.accepts(&w[..cut]) {
                return false;
            }
        }
    }
    true
}

/// Exact definitional prefix-closedness for a complete DFA.
pub fn prefix_closed_exact(d: &Dfa) -> bool {
    prefix_closed_slice(d, 2 * d.state_count().saturating_sub(1))
}

/// Definitional suffix-closedness on a word slice. Sound for violations only:
/// a `false` is definitive, a `true` says no short counterexample exists.
pub fn suffix_closed_slice(d: &Dfa, bound: usize) -> bool {
    for w in words_up_to(d.alphabet_size(), bound) {
        if !d.accepts(&w) {
            continue;
        }
        for cut in 0..w.len() {
            if !d.accepts(&w[cut..]) {
                return false;
            }
        }
    }
    true
}

/// Definitional factorial check on a word slice, same caveat as
/// `suffix_closed_slice`.
pub fn factorial_slice(d: &Dfa, bound: usize) -> bool {
    for w in words_up_to(d.alphabet_size(), bound) {
        if !d.accepts(&w) {
            continue;
        }
        for i in 0..=w.len() {
            for j in i..=w.len() {
                if !d.accepts(&w[i..j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Verifies a claimed suffix-closedness violation by definition: `s` is not
/// in the language, but some `u·s` is. Prefixes `u` only ever need to reach
/// one of the n states, so length `< states` suffices.
pub fn verify_suffix_violation(d: &Dfa, suffix: &[usize]) -> bool {
    if d.accepts(suffix) {
        return false;
    }
    words_up_to(d.alphabet_size(), d.state_count().saturating_sub(1))
        .iter()
        .any(|u| {
            let mut w = u.clone();
            w.extend_from_slice(suffix);
            d.accepts(&w)
        })
}

/// Verifies a claimed factorial violation: `s` is rejected but occurs as a
/// factor of an accepted word `u·s·v`, with `u` and `v` bounded by the state
/// count.
pub fn verify_factor_violation(d: &Dfa, factor: &[usize]) -> bool {
    if d.accepts(factor) {
        return false;
    }
    let bound = d.state_count().saturating_sub(1);
    let outers = words_up_to(d.alphabet_size(), bound);
    outers.iter().any(|u| {
        outers.iter().any(|v| {
            let mut w = u.clone();
            w.extend_from_slice(factor);
            w.extend_from_slice(v);
            d.accepts(&w)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state_set::StateSet;

    fn dfa_01() -> Dfa {
        Dfa::new(
            vec!["0".into(), "1".into()],
            vec![vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
            0,
            StateSet::singleton(4, 2),
        )
        .unwrap()
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(words_up_to(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(words_up_to(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn slice_checks_on_01() {
        let d = dfa_01();
        assert!(!prefix_closed_exact(&d));
        assert!(!suffix_closed_slice(&d, 4));
        assert!(!factorial_slice(&d, 4));
        assert!(verify_suffix_violation(&d, &[1]));
        assert!(verify_factor_violation(&d, &[1]));
        assert!(!verify_suffix_violation(&d, &[0, 1])); // "01" is accepted
    }
}
