//! `bthompson`: normal forms, word problems and presentation checks from the shell.
//!
//! Exit status: 0 for success or a true verdict, 1 for a false verdict or a
//! failed check, 2 for usage and parse errors, 3 when a step cap is hit.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use bthompson_core::braid::{is_trivial_braid_budgeted, BraidWord, DEFAULT_BRAID_STEP_CAP};
use bthompson_core::hat::{canonicalize_hat_with, is_trivial_hat_with, StandardRules, DEFAULT_HAT_STEP_CAP};
use bthompson_core::lmr::{is_trivial_bv_with, to_third_form_with, DEFAULT_BV_STEP_CAP};
use bthompson_core::perms::from_sigma_word;
use bthompson_core::presentations::{verify_all_with, Report, VerifyOptions};
use bthompson_core::selftest::{run_selftest, SelftestOptions};
use bthompson_core::thompson_f::f_fraction;
use bthompson_core::{parse_word, Budget, BvMode, Error, GroupMode, Group, Index, Word};

#[derive(Parser)]
#[command(name = "bthompson", version, about = "Word problems in Thompson's groups F, V, BV and the hat groups V̂, BV̂")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Step cap for rewriting; defaults to each decider's own cap
    #[arg(long, global = true, value_name = "N")]
    max_steps: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical data: F normal fraction or hat-group fraction
    Normalize {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        word: String,
    },
    /// The `L · M · R` form of a word in v, p, pb letters
    Lmr { word: String },
    /// Is the word trivial in the group?
    Trivial {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        word: String,
    },
    /// Are the two words equal in the group? Separate them with `--`.
    Equal {
        #[arg(long, value_parser = parse_group)]
        group: Group,
        word1: String,
        word2: String,
    },
    /// Check every relation family and finite presentation up to an index bound
    Verify {
        #[arg(long, default_value_t = 8)]
        bound: Index,
        /// Restrict to a single family id such as `bv/pi-v-far`
        #[arg(long)]
        family: Option<String>,
    },
    /// Random agreement test between the V/BV decider and the hat-group oracle
    Selftest {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, env = "BTHOMPSON_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_index: Index,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse()
}

/// How a command ended; maps onto the exit status.
enum Outcome {
    True,
    False,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::StepCap { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn parse(text: &str) -> Result<Word, Failure> {
    parse_word(text).map_err(Failure::from)
}

fn emit<T: Serialize>(global: &Global, value: &T, text: impl FnOnce() -> String) {
    if global.json {
        println!("{}", serde_json::to_string(value).expect("records serialize"));
    } else {
        println!("{}", text());
    }
}

fn cap_or(global: &Global, default: u64) -> u64 {
    global.max_steps.unwrap_or(default)
}

/// Decides triviality, returning the verdict and the steps spent.
fn decide(group: Group, w: &Word, global: &Global) -> Result<(bool, u64), Error> {
    let hat_mode = |g| if g == Group::VHat { GroupMode::VHat } else { GroupMode::BVHat };
    match group {
        Group::F => {
            let (p, n) = f_fraction(w)?;
            Ok((p == n, 0))
        }
        Group::VHat | Group::BVHat => {
            let mut budget = Budget::new(cap_or(global, DEFAULT_HAT_STEP_CAP), "hat canonicalization");
            let t = is_trivial_hat_with(w, hat_mode(group), &StandardRules, &mut budget)?;
            Ok((t, budget.used()))
        }
        Group::V | Group::BV => {
            let mode = if group == Group::V { BvMode::V } else { BvMode::BV };
            let mut budget = Budget::new(cap_or(global, DEFAULT_BV_STEP_CAP), "first form");
            let t = is_trivial_bv_with(w, mode, &mut budget)?;
            Ok((t, budget.used()))
        }
        Group::SInf => Ok((from_sigma_word(w)?.is_identity(), 0)),
        Group::BInf => {
            let mut budget = Budget::new(cap_or(global, DEFAULT_BRAID_STEP_CAP), "braid handle reduction");
            let t = is_trivial_braid_budgeted(&BraidWord::from_word(w)?, &mut budget)?;
            Ok((t, budget.used()))
        }
    }
}

fn verdict(t: bool) -> Outcome {
    if t {
        Outcome::True
    } else {
        Outcome::False
    }
}

fn normalize(global: &Global, group: Group, text: &str) -> CmdResult {
    let w = parse(text)?;
    match group {
        Group::F => {
            let (p, n) = f_fraction(&w)?;
            let record = json!({
                "command": "normalize", "inputs": [text], "group": group,
                "positive": p.indices(), "negative": n.indices(), "steps": 0,
            });
            emit(global, &record, || {
                format!(
                    "positive: {:?}  ({})\nnegative: {:?}  ({})",
                    p.indices(),
                    p.to_word(),
                    n.indices(),
                    n.to_word()
                )
            });
        }
        Group::VHat | Group::BVHat => {
            let mode = if group == Group::VHat { GroupMode::VHat } else { GroupMode::BVHat };
            let mut budget = Budget::new(cap_or(global, DEFAULT_HAT_STEP_CAP), "hat canonicalization");
            let f = canonicalize_hat_with(&w, mode, &StandardRules, &mut budget)?;
            let record = json!({
                "command": "normalize", "inputs": [text], "group": group,
                "fraction": f, "steps": budget.used(),
            });
            emit(global, &record, || {
                format!(
                    "F:    {:?}  ({})\nbeta: {}\nG:    {:?}  ({})",
                    f.f_part.indices(),
                    f.f_part.to_word(),
                    f.beta.to_word(),
                    f.g_part.indices(),
                    f.g_part.to_word()
                )
            });
        }
        other => {
            return Err(Failure::Usage(format!(
                "normalize supports F, Vhat and BVhat, not {other}; use `lmr` for V and BV"
            )))
        }
    }
    Ok(Outcome::True)
}

fn lmr(global: &Global, text: &str) -> CmdResult {
    let w = parse(text)?;
    let mut budget = Budget::new(cap_or(global, DEFAULT_BV_STEP_CAP), "first form");
    let form = to_third_form_with(&w, &mut budget)?;
    let record = json!({
        "command": "lmr", "inputs": [text], "group": "BV", "form": form, "steps": budget.used(),
    });
    emit(global, &record, || {
        format!(
            "L: {}\nM: {}\nR: {}\nk: {}\nheight: {:?}",
            form.l, form.m, form.r, form.k, form.height
        )
    });
    Ok(Outcome::True)
}

fn trivial(global: &Global, group: Group, text: &str) -> CmdResult {
    let w = parse(text)?;
    let (t, steps) = decide(group, &w, global)?;
    let record = json!({
        "command": "trivial", "inputs": [text], "group": group, "verdict": t, "steps": steps,
    });
    emit(global, &record, || t.to_string());
    Ok(verdict(t))
}

fn equal(global: &Global, group: Group, a: &str, b: &str) -> CmdResult {
    let (w1, w2) = (parse(a)?, parse(b)?);
    let (t, steps) = decide(group, &w1.concat(&w2.invert()), global)?;
    let record = json!({
        "command": "equal", "inputs": [a, b], "group": group, "verdict": t, "steps": steps,
    });
    emit(global, &record, || t.to_string());
    Ok(verdict(t))
}

fn print_report_text(report: &Report) {
    println!("bound {}: {} instances", report.bound, report.records.len());
    for s in report.family_summary() {
        println!("  {:<28} {:>5}/{:<5}", s.family, s.passed, s.total);
    }
    for f in report.failures() {
        let note = f.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
        println!("FAIL {} [{}] {} via {}{}", f.source, f.group, f.verdict, f.decider, note);
    }
    if !report.controls.is_empty() {
        let bad: Vec<_> = report.control_failures().collect();
        println!("controls: {}/{} as expected", report.controls.len() - bad.len(), report.controls.len());
        for c in bad {
            println!(
                "CONTROL {} [{}] expected {} got {}",
                c.record.source, c.record.group, c.expected, c.record.verdict
            );
        }
    }
    println!("{}", if report.passed() { "all checks pass" } else { "some checks failed" });
}

fn verify(global: &Global, bound: Index, family: Option<String>) -> CmdResult {
    let mut opts = VerifyOptions::new(bound);
    opts.family = family;
    if let Some(cap) = global.max_steps {
        opts.max_steps = cap;
    }
    let report = verify_all_with(&opts, &StandardRules)?;
    if global.json {
        for r in &report.records {
            println!("{}", serde_json::to_string(r).expect("records serialize"));
        }
        for c in &report.controls {
            println!("{}", serde_json::to_string(c).expect("records serialize"));
        }
        let summary = json!({
            "command": "verify", "bound": bound, "family": opts.family,
            "instances": report.records.len(),
            "failures": report.failures().count(),
            "control_failures": report.control_failures().count(),
            "steps": report.total_steps(),
            "passed": report.passed(),
        });
        println!("{summary}");
    } else {
        print_report_text(&report);
    }
    if report.records.iter().any(|r| r.verdict == bthompson_core::Verdict::ResourceCap) {
        return Err(Failure::Cap("some instances hit the step cap".into()));
    }
    Ok(verdict(report.passed()))
}

fn selftest(global: &Global, samples: usize, seed: u64, max_index: Index, max_len: usize) -> CmdResult {
    let mut opts = SelftestOptions { samples, seed, max_index, max_len, ..Default::default() };
    if let Some(cap) = global.max_steps {
        opts.max_steps = cap;
    }
    let report = run_selftest(&opts);
    let record = json!({ "command": "selftest", "report": report });
    emit(global, &record, || {
        let mut out = format!("seed {seed}, {samples} samples, index <= {max_index}, length <= {max_len}");
        for m in &report.modes {
            out += &format!("\n  {:?}: {}/{} agree, {} trivial", m.mode, m.agree, m.total, m.trivial);
        }
        for d in &report.disagreements {
            out += &format!("\nDISAGREE {:?} `{}` lmr={:?} hat={:?}", d.mode, d.word, d.lmr, d.hat);
            if let Some(e) = &d.error {
                out += &format!(" ({e})");
            }
        }
        out
    });
    Ok(verdict(report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match cli.command {
        Command::Normalize { group, word } => normalize(g, group, &word),
        Command::Lmr { word } => lmr(g, &word),
        Command::Trivial { group, word } => trivial(g, group, &word),
        Command::Equal { group, word1, word2 } => equal(g, group, &word1, &word2),
        Command::Verify { bound, family } => verify(g, bound, family),
        Command::Selftest { samples, seed, max_index, max_len } => selftest(g, samples, seed, max_index, max_len),
    };
    match result {
        Ok(Outcome::True) => ExitCode::from(0),
        Ok(Outcome::False) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
