//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bthompson_core::braid::{is_trivial_braid, BraidLetter, BraidWord};
use bthompson_core::hat::{equal_hat, is_trivial_hat, StandardRules};
use bthompson_core::lmr::{is_trivial_bv, to_third_form};
use bthompson_core::presentations::{
    corrupted_relators, family_ids, nontriviality_controls, run_controls, verify_all, verify_all_with, CorruptedRules,
    Fault, VerifyOptions,
};
use bthompson_core::selftest::{random_bv_word, random_word, run_selftest, SelftestOptions};
use bthompson_core::thompson_f::{equal_f, is_trivial_f, normalize_monoid, rewrite_at, rewrite_sites};
use bthompson_core::words::expand_bv_generators;
use bthompson_core::{parse_word, BvMode, Family, GroupMode, Index, Sign, Verdict, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(text: &str) -> Word {
    parse_word(text).unwrap()
}

fn presentation_verification() -> Outcome {
    let start = Instant::now();
    let report = verify_all(8, None).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let families = report.family_summary();
    if families.len() != family_ids().len() {
        return Err(format!("only {} of {} families produced instances", families.len(), family_ids().len()));
    }
    if let Some(f) = report.failures().next() {
        return Err(format!("{} [{}] {} {:?}", f.source, f.group, f.verdict, f.note));
    }
    if let Some(c) = report.control_failures().next() {
        return Err(format!("control {} expected {} got {}", c.record.source, c.expected, c.record.verdict));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{} instances in {} families hold at bound 8, {} controls as expected, {elapsed:.2?}",
        report.records.len(),
        families.len(),
        report.controls.len()
    ))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let opts = SelftestOptions { samples: 1000, seed: 0, max_index: 5, max_len: 10, ..Default::default() };
    let report = run_selftest(&opts);
    let elapsed = start.elapsed();
    if let Some(d) = report.disagreements.first() {
        return Err(format!("{} disagreements, first {:?} on `{}`", report.disagreements.len(), d.mode, d.word));
    }
    for m in &report.modes {
        if m.agree != m.total || m.total != 1000 {
            return Err(format!("{:?}: {}/{}", m.mode, m.agree, m.total));
        }
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    let trivial: Vec<_> = report.modes.iter().map(|m| format!("{:?} {} trivial", m.mode, m.trivial)).collect();
    Ok(format!("1000/1000 agree in V and BV ({}), {elapsed:.2?}", trivial.join(", ")))
}

fn confluence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for sample in 0..1000 {
        let len = rng.gen_range(0..=12);
        let seq: Vec<Index> = (0..len).map(|_| rng.gen_range(0..=8)).collect();
        let word: Word = seq.iter().map(|&i| Family::Lambda.pos(i)).collect();
        let normal = normalize_monoid(&word).map_err(|e| e.to_string())?;
        let idx = normal.indices();
        if idx.len() != seq.len() || idx.windows(2).any(|p| p[0] > p[1]) {
            return Err(format!("normal form {idx:?} of {seq:?} is not sorted or changed length"));
        }
        for order in 0..5 {
            let mut s = seq.clone();
            loop {
                let sites = rewrite_sites(&s);
                let Some(&i) = sites.choose(&mut rng) else { break };
                rewrite_at(&mut s, i);
            }
            if s != idx {
                return Err(format!("sample {sample}, order {order}: {seq:?} reached {s:?}, not {idx:?}"));
            }
        }
    }
    Ok("1000 words x 5 random rewrite orders reach the same sorted, length-preserving normal form".into())
}

fn lmr_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let word = random_bv_word(&mut rng, 5, 12);
        let form = to_third_form(&word).map_err(|e| format!("`{word}`: {e}"))?;
        form.check_invariants().map_err(|e| format!("`{word}`: {e}"))?;
        let a = expand_bv_generators(&word).map_err(|e| e.to_string())?;
        let b = expand_bv_generators(&form.to_word()).map_err(|e| e.to_string())?;
        if !equal_hat(&a, &b, GroupMode::BVHat).map_err(|e| e.to_string())? {
            return Err(format!("`{word}` and its form `{}` differ in BV̂", form.to_word()));
        }
    }
    Ok("500 random BV words: invariants hold and forms equal their words in BV̂".into())
}

fn nontriviality() -> Outcome {
    let check = |what: &str, got: Result<bool, bthompson_core::Error>, want: bool| -> Result<(), String> {
        match got {
            Ok(v) if v == want => Ok(()),
            other => Err(format!("{what}: expected {want}, got {other:?}")),
        }
    };
    check("λ₁ = λ₂ in F", equal_f(&w("l1"), &w("l2")), false)?;
    for mode in [BvMode::BV, BvMode::V] {
        check(&format!("v₁ = v₂ in {mode:?}"), is_trivial_bv(&w("v1 v2'"), mode), false)?;
    }
    let expanded = expand_bv_generators(&w("v2 v1'")).map_err(|e| e.to_string())?;
    check("expansion of v₂v₁⁻¹ equals λ₀³λ₁λ₂⁻¹λ₀⁻³", equal_f(&expanded, &w("l0 l0 l0 l1 l2' l0' l0' l0'")), true)?;
    check("λ₀³λ₁λ₂⁻¹λ₀⁻³ trivial in F", is_trivial_f(&w("l0 l0 l0 l1 l2' l0' l0' l0'")), false)?;
    check("π₀² trivial in V", is_trivial_bv(&w("p0 p0"), BvMode::V), true)?;
    check("π₀² trivial in BV", is_trivial_bv(&w("p0 p0"), BvMode::BV), false)?;
    check("σ₀² trivial in V̂", is_trivial_hat(&w("s0 s0"), GroupMode::VHat), true)?;
    check("σ₀² trivial in BV̂", is_trivial_hat(&w("s0 s0"), GroupMode::BVHat), false)?;
    let controls = run_controls(&nontriviality_controls(), &StandardRules, 10_000_000);
    if let Some(c) = controls.iter().find(|c| !c.passed()) {
        return Err(format!("control {} expected {} got {}", c.record.source, c.expected, c.record.verdict));
    }
    Ok(format!("all exact verdicts match, plus {} verifier controls", controls.len()))
}

fn random_braid_relator(rng: &mut ChaCha8Rng) -> BraidWord {
    let s = |i: Index| BraidLetter::new(i, Sign::Pos);
    let rel = if rng.gen() {
        let i = rng.gen_range(0..=4);
        let j = rng.gen_range(i + 2..=6);
        BraidWord::new(vec![s(i), s(j)]).concat(&BraidWord::new(vec![s(j), s(i)]).invert())
    } else {
        let i = rng.gen_range(0..=5);
        BraidWord::new(vec![s(i), s(i + 1), s(i)]).concat(&BraidWord::new(vec![s(i + 1), s(i), s(i + 1)]).invert())
    };
    if rng.gen() {
        rel.invert()
    } else {
        rel
    }
}

fn braid_integrity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut trivial = 0;
    let err = |e: bthompson_core::Error| e.to_string();
    for _ in 0..10_000 {
        let word = BraidWord::from_word(&random_word(&mut rng, &[Family::Sigma], 6, 20)).map_err(err)?;
        let verdict = is_trivial_braid(&word).map_err(err)?;
        let at = rng.gen_range(0..=word.len());
        let (head, tail) = word.letters().split_at(at);
        let inserted = BraidWord::new(head.to_vec())
            .concat(&random_braid_relator(&mut rng))
            .concat(&BraidWord::new(tail.to_vec()));
        if is_trivial_braid(&inserted).map_err(err)? != verdict {
            return Err(format!("inserting a relator into `{}` changed the verdict", word.to_word()));
        }
        if !is_trivial_braid(&word.concat(&word.invert())).map_err(err)? {
            return Err(format!("`{}` times its inverse is not trivial", word.to_word()));
        }
        if verdict {
            trivial += 1;
            if word.exponent_sum() != 0 || !word.permutation_image().is_identity() {
                return Err(format!("trivial `{}` has a nonzero invariant", word.to_word()));
            }
        }
    }
    Ok(format!("10000 braid words ({trivial} trivial): relator insertion, w·w⁻¹ and invariants all consistent"))
}

fn negative_controls() -> Outcome {
    let relators = corrupted_relators();
    let records = run_controls(&relators, &StandardRules, 10_000_000);
    if let Some(r) = records.iter().find(|r| r.record.verdict != Verdict::Fails) {
        return Err(format!("corrupted relator {} reported {}", r.record.source, r.record.verdict));
    }
    let mut caught = Vec::new();
    for fault in Fault::ALL {
        let mut opts = VerifyOptions::new(4);
        opts.max_steps = 1_000_000;
        let report = verify_all_with(&opts, &CorruptedRules(fault)).map_err(|e| e.to_string())?;
        let mut families: Vec<_> = report
            .failures()
            .filter(|r| r.verdict == Verdict::Fails)
            .map(|r| r.family.as_str())
            .collect();
        families.dedup();
        if families.is_empty() {
            return Err(format!("corrupted table {fault:?} passed every instance"));
        }
        caught.push(format!("{fault:?} in {} families, e.g. {}", families.len(), families[0]));
    }
    Ok(format!("{} corrupted relators fail; tables caught: {}", records.len(), caught.join("; ")))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("presentation verification", presentation_verification),
        ("oracle agreement", oracle_agreement),
        ("confluence of the F rewriting", confluence),
        ("L·M·R structural soundness", lmr_soundness),
        ("nontriviality controls", nontriviality),
        ("braid decider integrity", braid_integrity),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
