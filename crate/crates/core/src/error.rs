use thiserror::Error;

use crate::words::GenSymbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter `{letter}` is not allowed in {context}")]
    Alphabet {
        letter: GenSymbol,
        context: &'static str,
    },

    #[error("step cap of {cap} exceeded while running {stage}")]
    StepCap { cap: u64, stage: &'static str },

    #[error("{relation} does not occur at position {position}")]
    PatternMismatch { relation: String, position: usize },

    #[error("index constraint violated: {0}")]
    IndexConstraint(String),

    #[error("relation {0} does not hold in BV (only in V)")]
    NotInGroup(String),

    #[error("height condition violated: {0}")]
    Height(String),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown relation family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Counts rewriting steps against a hard cap.
///
/// Every rewriting loop in the crate charges one step per rule application,
/// so a termination bug surfaces as [`Error::StepCap`] rather than a hang.
#[derive(Debug, Clone)]
pub struct Budget {
    cap: u64,
    used: u64,
    stage: &'static str,
}

impl Budget {
    pub fn new(cap: u64, stage: &'static str) -> Self {
        Budget {
            cap,
            used: 0,
            stage,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }

    #[inline]
    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used += n;
        if self.used > self.cap {
            Err(Error::StepCap {
                cap: self.cap,
                stage: self.stage,
            })
        } else {
            Ok(())
        }
    }

    /// Relabels the budget so a later cap error names the stage that hit it.
    pub fn set_stage(&mut self, stage: &'static str) {
        self.stage = stage;
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }
}
