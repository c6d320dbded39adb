//! Machine verification of presentations at bounded index.
//!
//! Every relation family is instantiated with all indices at most a bound,
//! finite presentations are expanded through their generator definitions, and
//! each relator is handed to the decider for its group. Hat groups go through
//! hat canonicalization, V and BV through both the `L · M · R` decider and
//! the hat oracle, F through its normal form, and S∞ and B∞ through
//! permutations and handle reduction.

pub mod catalog;
pub mod controls;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{is_trivial_braid_budgeted, BraidWord};
use crate::error::{Budget, Error, Result};
use crate::hat::{is_trivial_hat_with, GroupMode, PushRules, StandardRules, DEFAULT_HAT_STEP_CAP};
use crate::lmr::{is_trivial_bv_with, BvMode};
use crate::perms::from_sigma_word;
use crate::thompson_f::is_trivial_f;
use crate::words::{expand_bv_generators, Index, Word};

pub use catalog::{expand_finite_defs, family_ids, instantiate_family, Scheme};
pub use controls::{corrupted_relators, nontriviality_controls, Control, CorruptedRules, Fault};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Group {
    VHat,
    BVHat,
    V,
    BV,
    F,
    SInf,
    BInf,
}

impl Group {
    pub const ALL: [Group; 7] = [
        Group::F,
        Group::VHat,
        Group::BVHat,
        Group::V,
        Group::BV,
        Group::SInf,
        Group::BInf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::VHat => "Vhat",
            Group::BVHat => "BVhat",
            Group::V => "V",
            Group::BV => "BV",
            Group::F => "F",
            Group::SInf => "Sinf",
            Group::BInf => "Binf",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Group::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group `{s}` (expected one of F, Vhat, BVhat, V, BV, Sinf, Binf)"))
    }
}

/// A claimed equality `lhs = rhs` in `group`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub family: String,
    /// Family id with the instance's parameters, e.g. `bv/pi-v-far(m=2,q=0)`.
    pub source: String,
    pub group: Group,
    pub lhs: Word,
    pub rhs: Word,
}

impl RelationInstance {
    pub fn new(family: &str, source: String, group: Group, lhs: Word, rhs: Word) -> Self {
        RelationInstance {
            family: family.to_string(),
            source,
            group,
            lhs,
            rhs,
        }
    }

    /// `lhs · rhs⁻¹`
    pub fn relator(&self) -> Word {
        self.lhs.concat(&self.rhs.invert())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    ResourceCap,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::ResourceCap => "resource-cap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub source: String,
    pub family: String,
    pub group: Group,
    pub verdict: Verdict,
    pub decider: &'static str,
    pub steps: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn verify(instance: &RelationInstance) -> VerifyRecord {
    verify_with(instance, &StandardRules, DEFAULT_HAT_STEP_CAP)
}

/// Decides one instance with the given hat rewriting table and per-decider step cap.
pub fn verify_with(instance: &RelationInstance, rules: &dyn PushRules, cap: u64) -> VerifyRecord {
    let relator = instance.relator();
    let mut steps = 0;
    let mut run = |stage: &'static str, f: &mut dyn FnMut(&mut Budget) -> Result<bool>| {
        let mut budget = Budget::new(cap, stage);
        let out = f(&mut budget);
        steps += budget.used();
        out
    };
    let (decider, outcome): (&'static str, Result<bool>) = match instance.group {
        Group::VHat | Group::BVHat => {
            let mode = if instance.group == Group::VHat { GroupMode::VHat } else { GroupMode::BVHat };
            ("hat", run("hat canonicalization", &mut |b| is_trivial_hat_with(&relator, mode, rules, b)))
        }
        Group::F => ("thompson-f", is_trivial_f(&relator)),
        Group::SInf => ("perms", from_sigma_word(&relator).map(|p| p.is_identity())),
        Group::BInf => (
            "braid",
            run("braid handle reduction", &mut |b| {
                is_trivial_braid_budgeted(&BraidWord::from_word(&relator)?, b)
            }),
        ),
        Group::V | Group::BV => {
            let (mode, hat_mode) = if instance.group == Group::V {
                (BvMode::V, GroupMode::VHat)
            } else {
                (BvMode::BV, GroupMode::BVHat)
            };
            let lmr = run("first form", &mut |b| is_trivial_bv_with(&relator, mode, b));
            let hat = run("hat canonicalization", &mut |b| {
                is_trivial_hat_with(&expand_bv_generators(&relator)?, hat_mode, rules, b)
            });
            match (lmr, hat) {
                (Ok(a), Ok(b)) if a == b => ("lmr+hat", Ok(a)),
                (Ok(_), Ok(_)) => ("lmr+hat disagree", Ok(false)),
                (Err(e), _) | (_, Err(e)) => ("lmr+hat", Err(e)),
            }
        }
    };
    let (verdict, note) = match outcome {
        Ok(true) => (Verdict::Holds, None),
        Ok(false) => (Verdict::Fails, None),
        Err(e @ Error::StepCap { .. }) => (Verdict::ResourceCap, Some(e.to_string())),
        Err(e) => (Verdict::Fails, Some(e.to_string())),
    };
    VerifyRecord {
        source: instance.source.clone(),
        family: instance.family.clone(),
        group: instance.group,
        verdict,
        decider,
        steps,
        note,
    }
}

/// A control instance together with the verdict it must receive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ControlRecord {
    #[serde(flatten)]
    pub record: VerifyRecord,
    pub expected: Verdict,
}

impl ControlRecord {
    pub fn passed(&self) -> bool {
        self.record.verdict == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySummary {
    pub family: String,
    pub passed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub bound: Index,
    /// One record per instance, sorted by source.
    pub records: Vec<VerifyRecord>,
    /// Nontriviality and negative controls; empty when a single family was requested.
    pub controls: Vec<ControlRecord>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &VerifyRecord> {
        self.records.iter().filter(|r| r.verdict != Verdict::Holds)
    }

    pub fn control_failures(&self) -> impl Iterator<Item = &ControlRecord> {
        self.controls.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none() && self.control_failures().next().is_none()
    }

    pub fn total_steps(&self) -> u64 {
        self.records.iter().map(|r| r.steps).sum()
    }

    pub fn family_summary(&self) -> Vec<FamilySummary> {
        let mut by_family: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let entry = by_family.entry(&r.family).or_default();
            entry.1 += 1;
            if r.verdict == Verdict::Holds {
                entry.0 += 1;
            }
        }
        by_family
            .into_iter()
            .map(|(family, (passed, total))| FamilySummary {
                family: family.to_string(),
                passed,
                total,
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub bound: Index,
    /// Restrict to one family id; controls are skipped when set.
    pub family: Option<String>,
    pub max_steps: u64,
}

impl VerifyOptions {
    pub fn new(bound: Index) -> Self {
        VerifyOptions {
            bound,
            family: None,
            max_steps: DEFAULT_HAT_STEP_CAP,
        }
    }
}

/// Instances of every family, or of the one named, at the given bound.
pub fn all_instances(bound: Index, family: Option<&str>) -> Result<Vec<RelationInstance>> {
    match family {
        Some(id) => instantiate_family(id, bound),
        None => {
            let mut out = Vec::new();
            for id in family_ids() {
                out.extend(instantiate_family(&id, bound)?);
            }
            Ok(out)
        }
    }
}

pub fn verify_all(bound: Index, family: Option<&str>) -> Result<Report> {
    let mut opts = VerifyOptions::new(bound);
    opts.family = family.map(str::to_string);
    verify_all_with(&opts, &StandardRules)
}

/// Runs every instance in parallel and every control; records come back sorted by source.
pub fn verify_all_with(opts: &VerifyOptions, rules: &dyn PushRules) -> Result<Report> {
    let instances = all_instances(opts.bound, opts.family.as_deref())?;
    let mut records: Vec<VerifyRecord> = instances
        .par_iter()
        .map(|inst| verify_with(inst, rules, opts.max_steps))
        .collect();
    records.sort_by(|a, b| a.source.cmp(&b.source).then(a.group.cmp(&b.group)));
    let controls = if opts.family.is_some() {
        Vec::new()
    } else {
        run_controls(&nontriviality_controls().into_iter().chain(corrupted_relators()).collect::<Vec<_>>(), rules, opts.max_steps)
    };
    Ok(Report {
        bound: opts.bound,
        records,
        controls,
    })
}

pub fn run_controls(controls: &[Control], rules: &dyn PushRules, cap: u64) -> Vec<ControlRecord> {
    controls
        .par_iter()
        .map(|c| ControlRecord {
            record: verify_with(&c.instance, rules, cap),
            expected: c.expected,
        })
        .collect()
}
