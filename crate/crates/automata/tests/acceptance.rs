//! The acceptance gate: one line per numbered criterion, asserted at the end
//! so every verdict prints before any panic.
//!
//! Criterion 4 is knowingly red: the exhaustive n = 2 binary enumeration
//! finds NFAs whose minimal complete DFA has 4 states (e.g. two states A, B,
//! all final, initial B, with B -0-> A, A -1-> {A, B}), contradicting the
//! claimed maximum of 3. An independent brute-force residual count confirms
//! 4 Myhill-Nerode classes for that language, so the measured value is kept
//! and the row reported honestly.

use std::time::Instant;

use automata::closure::{fact_nfa, suff_nfa};
use automata::experiments;
use automata::report::RunConfig;
use automata::subset::{enumerate_max_blowup, state_complexity, EnumerationMode};
use automata::witness;

struct Outcome {
    criterion: usize,
    pass: bool,
    detail: String,
}

fn check(outcomes: &mut Vec<Outcome>, criterion: usize, pass: bool, detail: impl Into<String>) {
    outcomes.push(Outcome {
        criterion,
        pass,
        detail: detail.into(),
    });
}

/// Runs one of the CLI-level experiment suites and reports whether every row
/// passed.
fn suite_all_pass(id: &str) -> (bool, String) {
    let report = experiments::run(id, &RunConfig::default()).unwrap();
    let failing: Vec<String> = report
        .rows
        .iter()
        .filter(|r| r.verdict != automata::Verdict::Pass)
        .map(|r| format!("{}/{}: measured {} expected {}", r.family, r.n, r.measured, r.expected))
        .collect();
    if failing.is_empty() {
        (true, format!("suite {id}: all rows pass"))
    } else {
        (false, format!("suite {id}: {}", failing.join("; ")))
    }
}

#[test]
fn acceptance_criteria() {
    let mut o = Vec::new();

    // 1: all-final blow-up 2^n for n in {1, 3..8}; n = 8 under 10 s
    let t = Instant::now();
    let pass1 = [1usize, 3, 4, 5, 6, 7, 8].iter().all(|&n| {
        state_complexity(&witness::witness_all_final(n).unwrap()) == 1 << n
    });
    let elapsed = t.elapsed();
    check(
        &mut o,
        1,
        pass1 && elapsed.as_secs() < 10,
        format!("all-final blow-up 2^n, n in {{1,3..8}}, total {elapsed:?}"),
    );

    // 2: ASIF blow-up 2^n for n in 1..8
    let pass2 =
        (1..=8).all(|n| state_complexity(&witness::witness_asif(n).unwrap()) == 1 << n);
    check(&mut o, 2, pass2, "asif blow-up 2^n, n in 1..8");

    // 3: ASI blow-up 2^n for n in 1..8 via the F = {n-1} reconstruction;
    // fallback exercised through the experiment suite if it ever fails
    let pass3 =
        (1..=8).all(|n| state_complexity(&witness::witness_asi(n).unwrap()) == 1 << n);
    let (suite3, detail3) = suite_all_pass("blowup-asi");
    check(
        &mut o,
        3,
        pass3 && suite3,
        format!("asi blow-up 2^n via F = {{n-1}}; {detail3}"),
    );

    // 4: n = 2 exhaustive enumeration. Expected per the source: binary max
    // < 4 and ternary max = 4. The binary half is measured at 4 (see module
    // comment), so this criterion is honestly red.
    let binary = enumerate_max_blowup(2, 2, EnumerationMode::AsfSingleInitial, 1 << 24).unwrap();
    let ternary = enumerate_max_blowup(2, 3, EnumerationMode::AsfSingleInitial, 1 << 24).unwrap();
    check(
        &mut o,
        4,
        binary.max_complexity < 4 && ternary.max_complexity == 4,
        format!(
            "n=2 enumeration: binary max {} (expected < 4), ternary max {} (expected 4); \
             binary counterexamples exist — documented deviation",
            binary.max_complexity, ternary.max_complexity
        ),
    );

    // 5: unary all-final enumeration, max complexity n + 1 for n in 1..3
    let pass5 = (1..=3).all(|n| {
        enumerate_max_blowup(n, 1, EnumerationMode::UnaryAsf, 1 << 24)
            .unwrap()
            .max_complexity
            == n + 1
    });
    check(&mut o, 5, pass5, "unary all-final enumeration max n+1, n in 1..3");

    // 6: suff bound, exact on the witness family plus 200 random DFAs
    let exact6 = (2..=8).all(|n| {
        state_complexity(&suff_nfa(&witness::witness_suff(n).unwrap())) == (1 << n) - 1
    });
    let (suite6, detail6) = suite_all_pass("suff-bound");
    check(&mut o, 6, exact6 && suite6, format!("suff 2^n - 1; {detail6}"));

    // 7: fact bound, exact on the witness family plus 200 random DFAs
    let exact7 = (3..=9).all(|n| {
        state_complexity(&fact_nfa(&witness::witness_fact(n).unwrap())) == 1 << (n - 1)
    });
    let (suite7, detail7) = suite_all_pass("fact-bound");
    check(&mut o, 7, exact7 && suite7, format!("fact 2^(n-1); {detail7}"));

    // 8: pref closure never increases state complexity, 500 random DFAs
    let (pass8, detail8) = suite_all_pass("pref-bound");
    check(&mut o, 8, pass8, detail8);

    // 9: universality iff-properties of all four reductions
    let (pass9, detail9) = suite_all_pass("reductions-iff");
    check(&mut o, 9, pass9, detail9);

    // 10: closedness tests agree with the definitional oracles, and the
    // characterization constructions round-trip under language equivalence
    let (pass10a, detail10a) = suite_all_pass("closedness-oracle");
    let (pass10b, detail10b) = suite_all_pass("characterization-roundtrip");
    check(
        &mut o,
        10,
        pass10a && pass10b,
        format!("{detail10a}; {detail10b}"),
    );

    // 11: fooling sets of size 2^n for the complement, n = 2 and 3
    let (pass11, detail11) = suite_all_pass("complement-fooling");
    check(&mut o, 11, pass11, detail11);

    // 12: shortest-rejected monotonicity under the # augmentations
    let (pass12, detail12) = suite_all_pass("shortest-augment");
    check(&mut o, 12, pass12, detail12);

    // 13: hardness itself is not empirically checkable; its constructive
    // content is the reductions (criterion 9) and the lower bounds
    // (criterion 11)
    let covered = o.iter().any(|c| c.criterion == 9 && c.pass)
        && o.iter().any(|c| c.criterion == 11 && c.pass);
    check(
        &mut o,
        13,
        covered,
        "covered by criteria 9 and 11 (constructive content of the hardness proofs)",
    );

    let mut failed = Vec::new();
    for c in &o {
        println!(
            "criterion {:02} [{}] {}",
            c.criterion,
            if c.pass { "pass" } else { "FAIL" },
            c.detail
        );
        if !c.pass {
            failed.push(c.criterion);
        }
    }
    assert!(
        failed.is_empty(),
        "failing criteria: {failed:?} (criterion 4 is a documented deviation: \
         the binary n=2 maximum is measurably 4, not < 4)"
    );
}
