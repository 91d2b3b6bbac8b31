//! The experiment suites behind `verify`: each checks one family of claims
//! across a parameter range and reports exact integer measurements.

use std::time::Instant;

use crate::closure::{
    fact_nfa, is_factorial, is_prefix_closed, is_suffix_closed, pref_dfa, suff_nfa,
    to_all_final_nfa, to_all_initial_nfa, to_asif_nfa,
};
use crate::error::{AutomatonError, Result};
use crate::oracle;
use crate::reductions::{
    asf3_to_asif2, asf_reduction, asif_reduction, augment_hash_asf, augment_hash_asif,
    recode_4_to_2,
};
use crate::report::{Report, ReportRow, RunConfig, Verdict};
use crate::sample::{SampleFlags, Sampler};
use crate::subset::{
    determinize, enumerate_max_blowup, equivalent, minimize, shortest_rejected, state_complexity,
    universal, EnumerationMode,
};
use crate::witness;

pub const EXPERIMENT_IDS: &[&str] = &[
    "blowup-asf",
    "blowup-asif",
    "blowup-asi",
    "suff-bound",
    "fact-bound",
    "pref-bound",
    "unary-blowup",
    "n2-enumeration",
    "reductions-iff",
    "closedness-oracle",
    "characterization-roundtrip",
    "complement-fooling",
    "shortest-augment",
];

pub fn run(experiment_id: &str, config: &RunConfig) -> Result<Report> {
    match experiment_id {
        "blowup-asf" => Ok(blowup_asf()),
        "blowup-asif" => Ok(blowup_asif()),
        "blowup-asi" => Ok(blowup_asi()),
        "suff-bound" => Ok(suff_bound(config)),
        "fact-bound" => Ok(fact_bound(config)),
        "pref-bound" => Ok(pref_bound(config)),
        "unary-blowup" => Ok(unary_blowup(config)),
        "n2-enumeration" => Ok(n2_enumeration(config)),
        "reductions-iff" => Ok(reductions_iff(config)),
        "closedness-oracle" => Ok(closedness_oracle(config)),
        "characterization-roundtrip" => Ok(characterization_roundtrip(config)),
        "complement-fooling" => Ok(complement_fooling(config)),
        "shortest-augment" => Ok(shortest_augment(config)),
        other => Err(AutomatonError::precondition(format!(
            "unknown experiment id {other:?}; known ids: {}",
            EXPERIMENT_IDS.join(", ")
        ))),
    }
}

fn row(
    report: &mut Report,
    family: &str,
    n: u64,
    measured: i64,
    expected: i64,
    started: Instant,
    witness: Option<String>,
) {
    let experiment = report.experiment_id.clone();
    report.rows.push(ReportRow {
        experiment,
        family: family.to_string(),
        n,
        measured,
        expected,
        verdict: if measured == expected {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        runtime_ms: started.elapsed().as_millis() as u64,
        witness,
    });
}

fn skipped_row(report: &mut Report, family: &str, n: u64, expected: i64, reason: String) {
    let experiment = report.experiment_id.clone();
    report.rows.push(ReportRow {
        experiment,
        family: family.to_string(),
        n,
        measured: -1,
        expected,
        verdict: Verdict::Skipped,
        runtime_ms: 0,
        witness: Some(reason),
    });
}

// --- blow-up families ---

fn blowup_asf() -> Report {
    let mut report = Report::new("blowup-asf");
    for n in [1usize, 3, 4, 5, 6, 7, 8] {
        let t = Instant::now();
        let m = witness::witness_all_final(n).expect("n is in the family's domain");
        let sc = state_complexity(&m) as i64;
        row(&mut report, "all-final", n as u64, sc, 1i64 << n, t, None);
    }
    report
}

fn blowup_asif() -> Report {
    let mut report = Report::new("blowup-asif");
    for n in 1usize..=8 {
        let t = Instant::now();
        let sc = state_complexity(&witness::witness_asif(n).unwrap()) as i64;
        row(&mut report, "asif", n as u64, sc, 1i64 << n, t, None);
    }
    report
}

fn blowup_asi() -> Report {
    let mut report = Report::new("blowup-asi");
    for n in 1usize..=8 {
        let t = Instant::now();
        let expected = 1i64 << n;
        let sc = state_complexity(&witness::witness_asi(n).unwrap()) as i64;
        if sc == expected {
            row(&mut report, "asi", n as u64, sc, expected, t, None);
        } else {
            // reconstruction failed; exercise the documented F = {0} fallback
            let fb = state_complexity(&witness::witness_asi_with_final(n, 0).unwrap()) as i64;
            row(&mut report, "asi-fallback-F0", n as u64, fb, expected, t, None);
        }
    }
    report
}

// --- closure bounds ---

fn suff_bound(config: &RunConfig) -> Report {
    let mut report = Report::new("suff-bound");
    for n in 2usize..=8 {
        let t = Instant::now();
        let d = witness::witness_suff(n).unwrap();
        let sc = state_complexity(&suff_nfa(&d)) as i64;
        row(&mut report, "suff", n as u64, sc, (1i64 << n) - 1, t, None);
    }
    let samples = config.samples.unwrap_or(200);
    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut within = 0i64;
    for _ in 0..samples {
        let d = sampler.dfa_up_to(8, &["0", "1"]);
        let bound = (1i64 << d.state_count()) - 1;
        if (state_complexity(&suff_nfa(&d)) as i64) <= bound {
            within += 1;
        }
    }
    row(&mut report, "random-within-bound", samples as u64, within, samples as i64, t, None);
    report
}

fn fact_bound(config: &RunConfig) -> Report {
    let mut report = Report::new("fact-bound");
    for n in 3usize..=9 {
        let t = Instant::now();
        let d = witness::witness_fact(n).unwrap();
        let sc = state_complexity(&fact_nfa(&d)) as i64;
        row(&mut report, "fact", n as u64, sc, 1i64 << (n - 1), t, None);
    }
    let samples = config.samples.unwrap_or(200);
    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut within = 0i64;
    for _ in 0..samples {
        let d = sampler.dfa_up_to(8, &["0", "1"]);
        let bound = 1i64 << (d.state_count() - 1);
        if (state_complexity(&fact_nfa(&d)) as i64) <= bound {
            within += 1;
        }
    }
    row(&mut report, "random-within-bound", samples as u64, within, samples as i64, t, None);
    report
}

fn pref_bound(config: &RunConfig) -> Report {
    let mut report = Report::new("pref-bound");
    let samples = config.samples.unwrap_or(500);
    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut within = 0i64;
    for _ in 0..samples {
        let d = sampler.dfa_up_to(8, &["0", "1"]);
        if state_complexity(&pref_dfa(&d).as_nfa()) <= d.state_count() {
            within += 1;
        }
    }
    row(&mut report, "random-within-bound", samples as u64, within, samples as i64, t, None);
    report
}

// --- enumerations ---

fn unary_blowup(config: &RunConfig) -> Report {
    let mut report = Report::new("unary-blowup");
    for n in 1usize..=3 {
        let t = Instant::now();
        match enumerate_max_blowup(n, 1, EnumerationMode::UnaryAsf, config.enumeration_budget) {
            Ok(r) => row(
                &mut report,
                "unary-asf",
                n as u64,
                r.max_complexity as i64,
                (n + 1) as i64,
                t,
                None,
            ),
            Err(e) => skipped_row(&mut report, "unary-asf", n as u64, (n + 1) as i64, e.to_string()),
        }
    }
    report
}

fn n2_enumeration(config: &RunConfig) -> Report {
    let mut report = Report::new("n2-enumeration");
    for (alphabet, expected) in [(2usize, 3i64), (3, 4)] {
        let t = Instant::now();
        match enumerate_max_blowup(
            2,
            alphabet,
            EnumerationMode::AsfSingleInitial,
            config.enumeration_budget,
        ) {
            Ok(r) => row(
                &mut report,
                "asf-binary-or-ternary",
                alphabet as u64,
                r.max_complexity as i64,
                expected,
                t,
                None,
            ),
            Err(e) => skipped_row(
                &mut report,
                "asf-binary-or-ternary",
                alphabet as u64,
                expected,
                e.to_string(),
            ),
        }
    }
    report
}

// --- reductions ---

fn reductions_iff(config: &RunConfig) -> Report {
    let mut report = Report::new("reductions-iff");
    let samples = config.samples.unwrap_or(500);
    let small_samples = config.samples.unwrap_or(200);

    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut agree = 0i64;
    for _ in 0..samples {
        let m = sampler.nfa_up_to(4, &["0", "1"], SampleFlags::default());
        if universal(&m) == universal(&asf_reduction(&m).unwrap()) {
            agree += 1;
        }
    }
    row(&mut report, "asf", samples as u64, agree, samples as i64, t, None);

    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut agree = 0i64;
    for _ in 0..samples {
        let m = sampler.nfa_up_to(4, &["0", "1"], SampleFlags::default());
        if universal(&m) == universal(&asif_reduction(&m).unwrap()) {
            agree += 1;
        }
    }
    row(&mut report, "asif", samples as u64, agree, samples as i64, t, None);

    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut agree = 0i64;
    let flags = SampleFlags {
        all_final: true,
        ..Default::default()
    };
    for _ in 0..small_samples {
        let m = sampler.nfa_up_to(3, &["0", "1", "2", "3"], flags);
        if universal(&m) == universal(&recode_4_to_2(&m).unwrap()) {
            agree += 1;
        }
    }
    row(&mut report, "recode4to2", small_samples as u64, agree, small_samples as i64, t, None);

    let mut sampler = Sampler::new(config.seed);
    let t = Instant::now();
    let mut agree = 0i64;
    for _ in 0..small_samples {
        let m = sampler.nfa_up_to(3, &["0", "1", "2"], flags);
        if universal(&m) == universal(&asf3_to_asif2(&m).unwrap()) {
            agree += 1;
        }
    }
    row(&mut report, "asf3-asif2", small_samples as u64, agree, small_samples as i64, t, None);

    report
}

// --- closedness tests vs definitional oracles ---

fn closedness_oracle(config: &RunConfig) -> Report {
    let mut report = Report::new("closedness-oracle");
    let samples = config.samples.unwrap_or(500);
    let mut sampler = Sampler::new(config.seed);

    let t = Instant::now();
    let mut prefix_agree = 0i64;
    let mut suffix_agree = 0i64;
    let mut factorial_agree = 0i64;
    let mut conjunction_agree = 0i64;
    for _ in 0..samples {
        let d = sampler.dfa_up_to(6, &["0", "1"]);
        let slice_bound = 2 * d.state_count().saturating_sub(1);

        let p = is_prefix_closed(&d).unwrap();
        if p.closed == oracle::prefix_closed_exact(&d) {
            prefix_agree += 1;
        }

        // the suffix/factor slices are sound for violations; a claimed
        // violation is re-verified by definition
        let s = is_suffix_closed(&d).unwrap();
        let s_ok = if s.closed {
            oracle::suffix_closed_slice(&d, slice_bound)
        } else {
            oracle::verify_suffix_violation(&d, s.witness.as_ref().unwrap())
        };
        if s_ok {
            suffix_agree += 1;
        }

        let f = is_factorial(&d).unwrap();
        let f_ok = if f.closed {
            oracle::factorial_slice(&d, slice_bound)
        } else {
            oracle::verify_factor_violation(&d, f.witness.as_ref().unwrap())
        };
        if f_ok {
            factorial_agree += 1;
        }

        if f.closed == (p.closed && s.closed) {
            conjunction_agree += 1;
        }
    }
    row(&mut report, "prefix-vs-oracle", samples as u64, prefix_agree, samples as i64, t, None);
    row(&mut report, "suffix-vs-oracle", samples as u64, suffix_agree, samples as i64, t, None);
    row(&mut report, "factorial-vs-oracle", samples as u64, factorial_agree, samples as i64, t, None);
    row(&mut report, "fact-eq-pref-and-suff", samples as u64, conjunction_agree, samples as i64, t, None);
    report
}

fn characterization_roundtrip(config: &RunConfig) -> Report {
    let mut report = Report::new("characterization-roundtrip");
    let samples = config.samples.unwrap_or(100);
    let mut sampler = Sampler::new(config.seed);

    let t = Instant::now();
    let mut all_final_ok = 0i64;
    let mut all_initial_ok = 0i64;
    let mut asif_ok = 0i64;
    for _ in 0..samples {
        let d = sampler.dfa_up_to(5, &["0", "1"]);

        // nonempty prefix-closed input: the prefix closure of L(d), unless empty
        let p = pref_dfa(&d);
        if p.reachable().intersects(p.final_states()) {
            let nfa = to_all_final_nfa(&p).unwrap();
            if nfa.is_all_final()
                && nfa.is_single_initial()
                && equivalent(&nfa, &p.as_nfa()).unwrap()
            {
                all_final_ok += 1;
            }
        } else {
            all_final_ok += 1; // empty language: construction rightly refuses
        }

        let s = minimize(&determinize(&suff_nfa(&d)).dfa);
        if s.reachable().intersects(s.final_states()) {
            let nfa = to_all_initial_nfa(&s).unwrap();
            if nfa.is_all_initial()
                && nfa.final_states().len() == 1
                && equivalent(&nfa, &s.as_nfa()).unwrap()
            {
                all_initial_ok += 1;
            }
        } else {
            all_initial_ok += 1;
        }

        let f = minimize(&determinize(&fact_nfa(&d)).dfa);
        if f.reachable().intersects(f.final_states()) {
            let nfa = to_asif_nfa(&f).unwrap();
            if nfa.is_asif() && equivalent(&nfa, &f.as_nfa()).unwrap() {
                asif_ok += 1;
            }
        } else {
            asif_ok += 1;
        }
    }
    row(&mut report, "all-final", samples as u64, all_final_ok, samples as i64, t, None);
    row(&mut report, "all-initial", samples as u64, all_initial_ok, samples as i64, t, None);
    row(&mut report, "asif", samples as u64, asif_ok, samples as i64, t, None);
    report
}

// --- complement lower bound via fooling sets ---

fn complement_fooling(config: &RunConfig) -> Report {
    let mut report = Report::new("complement-fooling");
    for (n, max_word_len) in [(2usize, 4usize), (3, 5)] {
        let t = Instant::now();
        let target = 1usize << n;
        let lang = minimize(&determinize(&witness::jiraskova_asf_modified(n).unwrap()).dfa);
        let comp = lang.complement();
        match witness::find_fooling_set(&comp, target, max_word_len, config.fooling_budget) {
            Ok(Some(fs)) => {
                let valid = witness::check_fooling_set(&comp, &fs).unwrap();
                let measured = if valid { fs.pairs.len() as i64 } else { -1 };
                row(&mut report, "jiraskova-asf-complement", n as u64, measured, target as i64, t, None);
            }
            Ok(None) => row(&mut report, "jiraskova-asf-complement", n as u64, 0, target as i64, t, Some("not found within budget".into())),
            Err(e) => skipped_row(&mut report, "jiraskova-asf-complement", n as u64, target as i64, e.to_string()),
        }
    }
    report
}

// --- shortest rejected word under augmentation ---

fn shortest_augment(config: &RunConfig) -> Report {
    let mut report = Report::new("shortest-augment");
    let samples = config.samples.unwrap_or(300);
    let mut sampler = Sampler::new(config.seed);
    let flags = SampleFlags {
        initial_final: true,
        ..Default::default()
    };

    let t = Instant::now();
    let mut asf_ok = 0i64;
    let mut asif_ok = 0i64;
    let mut found = 0usize;
    let mut attempts = 0usize;
    while found < samples && attempts < samples * 100 {
        attempts += 1;
        let m = sampler.nfa_up_to(4, &["0", "1"], flags);
        let Some(w) = shortest_rejected(&m) else {
            continue; // universal; the augmentation claims are about rejections
        };
        found += 1;

        let asf = augment_hash_asf(&m).unwrap();
        let hash = asf.symbol_index("#").unwrap();
        let mut w_hash = w.clone();
        w_hash.push(hash);
        let monotone = shortest_rejected(&asf).is_some_and(|sr| sr.len() >= w.len());
        if monotone && !asf.accepts(&w_hash).unwrap() {
            asf_ok += 1;
        }

        let asif = augment_hash_asif(&m).unwrap();
        let mut hwh = vec![hash];
        hwh.extend(&w);
        hwh.push(hash);
        if !asif.accepts(&hwh).unwrap() && !universal(&asif) {
            asif_ok += 1;
        }
    }
    row(&mut report, "augment-asf", found as u64, asf_ok, found as i64, t, None);
    row(&mut report, "augment-asif", found as u64, asif_ok, found as i64, t, None);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_rejected() {
        assert!(run("no-such-experiment", &RunConfig::default()).is_err());
    }

    #[test]
    fn every_id_runs() {
        // smoke test with tiny sample counts; exact values are the
        // acceptance suite's job
        let config = RunConfig {
            samples: Some(5),
            ..Default::default()
        };
        for id in EXPERIMENT_IDS {
            let report = run(id, &config).unwrap();
            assert!(!report.rows.is_empty(), "{id} produced no rows");
        }
    }

    #[test]
    fn deterministic_under_config() {
        let config = RunConfig {
            samples: Some(20),
            ..Default::default()
        };
        let a = run("reductions-iff", &config).unwrap();
        let b = run("reductions-iff", &config).unwrap();
        let strip = |r: &Report| -> Vec<(String, u64, i64, i64)> {
            r.rows
                .iter()
                .map(|x| (x.family.clone(), x.n, x.measured, x.expected))
                .collect()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
