//! Randomized agreement between the `L · M · R` decider and the hat-group oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Budget, Result};
use crate::hat::{is_trivial_hat_with, GroupMode, StandardRules, DEFAULT_HAT_STEP_CAP};
use crate::lmr::{is_trivial_bv_with, BvFamily, BvMode, BvRelation, DEFAULT_BV_STEP_CAP};
use crate::words::{expand_bv_generators, Family, Index, Sign, Word};

/// A uniformly random word over `families` of length at most `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, families: &[Family], max_index: Index, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let family = *families.choose(rng).expect("at least one family");
            let sign = if rng.gen() { Sign::Pos } else { Sign::Neg };
            family.pow(rng.gen_range(0..=max_index), sign)
        })
        .collect()
}

pub fn random_bv_word<R: Rng>(rng: &mut R, max_index: Index, max_len: usize) -> Word {
    random_word(rng, &[Family::V, Family::Pi, Family::PiBar], max_index, max_len)
}

/// A word trivial in BV (hence in V): conjugates of relators of BV multiplied together.
pub fn random_trivial_bv_word<R: Rng>(rng: &mut R, max_index: Index, max_len: usize) -> Word {
    let relators: Vec<BvRelation> = BvFamily::ALL
        .into_iter()
        .filter(|f| f.holds_in(BvMode::BV))
        .flat_map(|f| BvRelation::enumerate(f, max_index))
        .collect();
    let mut out = Word::empty();
    for _ in 0..rng.gen_range(1..=2) {
        let rel = relators.choose(rng).expect("relators exist at every bound");
        let (lhs, rhs) = rel.sides().expect("enumerated relations are valid");
        let mut relator = lhs.concat(&rhs.invert());
        if rng.gen() {
            relator = relator.invert();
        }
        let u = random_bv_word(rng, max_index, max_len / 2);
        out = Word::join([&out, &u, &relator, &u.invert()]);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Sample {
    pub word: Word,
    /// Built to be trivial rather than drawn at random.
    pub constructed_trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub word: Word,
    pub mode: BvMode,
    pub lmr: Option<bool>,
    pub hat: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModeSummary {
    pub mode: BvMode,
    pub agree: usize,
    pub total: usize,
    pub trivial: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub samples: usize,
    pub max_index: Index,
    pub max_len: usize,
    pub modes: Vec<ModeSummary>,
    pub steps: u64,
    pub disagreements: Vec<Disagreement>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SelftestOptions {
    pub samples: usize,
    pub seed: u64,
    pub max_index: Index,
    pub max_len: usize,
    pub max_steps: u64,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            samples: 1000,
            seed: 0,
            max_index: 5,
            max_len: 10,
            max_steps: DEFAULT_BV_STEP_CAP.max(DEFAULT_HAT_STEP_CAP),
        }
    }
}

/// Half random words, half constructed trivial words, drawn from one seeded stream.
pub fn draw_samples(opts: &SelftestOptions) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.samples)
        .map(|i| {
            let constructed_trivial = i % 2 == 1;
            let word = if constructed_trivial {
                random_trivial_bv_word(&mut rng, opts.max_index, opts.max_len)
            } else {
                random_bv_word(&mut rng, opts.max_index, opts.max_len)
            };
            Sample { word, constructed_trivial }
        })
        .collect()
}

struct Outcome {
    lmr: Result<bool>,
    hat: Result<bool>,
    steps: u64,
}

fn decide(word: &Word, mode: BvMode, cap: u64) -> Outcome {
    let hat_mode = match mode {
        BvMode::V => GroupMode::VHat,
        BvMode::BV => GroupMode::BVHat,
    };
    let mut b1 = Budget::new(cap, "first form");
    let lmr = is_trivial_bv_with(word, mode, &mut b1);
    let mut b2 = Budget::new(cap, "hat canonicalization");
    let hat = expand_bv_generators(word).and_then(|h| is_trivial_hat_with(&h, hat_mode, &StandardRules, &mut b2));
    Outcome {
        lmr,
        hat,
        steps: b1.used() + b2.used(),
    }
}

pub fn run_selftest(opts: &SelftestOptions) -> SelftestReport {
    let samples = draw_samples(opts);
    let mut modes = Vec::new();
    let mut disagreements = Vec::new();
    let mut steps = 0;
    for mode in [BvMode::V, BvMode::BV] {
        let outcomes: Vec<Outcome> = samples.par_iter().map(|s| decide(&s.word, mode, opts.max_steps)).collect();
        let mut summary = ModeSummary { mode, agree: 0, total: samples.len(), trivial: 0 };
        for (sample, out) in samples.iter().zip(outcomes) {
            steps += out.steps;
            match (&out.lmr, &out.hat) {
                (Ok(a), Ok(b)) if a == b && (*a || !sample.constructed_trivial) => {
                    summary.agree += 1;
                    summary.trivial += usize::from(*a);
                }
                _ => disagreements.push(Disagreement {
                    word: sample.word.clone(),
                    mode,
                    lmr: out.lmr.as_ref().ok().copied(),
                    hat: out.hat.as_ref().ok().copied(),
                    error: out.lmr.as_ref().err().or(out.hat.as_ref().err()).map(|e| e.to_string()),
                }),
            }
        }
        modes.push(summary);
    }
    SelftestReport {
        seed: opts.seed,
        samples: opts.samples,
        max_index: opts.max_index,
        max_len: opts.max_len,
        modes,
        steps,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic_in_the_seed() {
        let opts = SelftestOptions { samples: 20, seed: 7, ..Default::default() };
        let a: Vec<_> = draw_samples(&opts).into_iter().map(|s| s.word).collect();
        let b: Vec<_> = draw_samples(&opts).into_iter().map(|s| s.word).collect();
        assert_eq!(a, b);
        let other = SelftestOptions { seed: 8, ..opts };
        assert_ne!(a, draw_samples(&other).into_iter().map(|s| s.word).collect::<Vec<_>>());
    }

    #[test]
    fn random_words_respect_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let w = random_bv_word(&mut rng, 3, 6);
            assert!(w.len() <= 6);
            assert!(w.max_index().unwrap_or(0) <= 3);
        }
    }

    #[test]
    fn small_run_agrees() {
        let report = run_selftest(&SelftestOptions { samples: 60, seed: 3, ..Default::default() });
        assert!(report.passed(), "{:#?}", report.disagreements);
        for m in &report.modes {
            assert_eq!(m.agree, 60);
            assert!(m.trivial >= 30);
        }
    }
}
