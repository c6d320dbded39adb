//! Braid words and Dehornoy's handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e u σ_i^{-e}` where `u` only uses letters
//! `σ_j` with `j > i`. Reducing it replaces the handle by `u` with every
//! `σ_{i+1}^d` rewritten to `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. A handle is
//! permitted when `u` contains no `σ_{i+1}`-handle; the handle that closes
//! first is always permitted. Any sequence of permitted reductions terminates,
//! and a nonempty word without handles has a main generator occurring with a
//! single sign, so it is not the identity.

use std::fmt;

use serde::Serialize;

use crate::error::{Budget, Error, Result};
use crate::perms::{transposition_product, Permutation};
use crate::words::{Family, GenSymbol, Index, Sign, Word};

pub const DEFAULT_BRAID_STEP_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BraidLetter {
    pub index: Index,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(index: Index, sign: Sign) -> Self {
        BraidLetter { index, sign }
    }

    fn inverse(self) -> Self {
        BraidLetter::new(self.index, self.sign.flip())
    }

    fn cancels(self, other: BraidLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

/// A word in `σ_i^{±1}`; it lives in `B_n` for `n = max index + 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(letters: Vec<BraidLetter>) -> Self {
        BraidWord { letters }
    }

    /// Reads a word in `σ^{±1}` letters.
    pub fn from_word(w: &Word) -> Result<Self> {
        w.require_families(&[Family::Sigma], "a braid word")?;
        Ok(BraidWord {
            letters: w.iter().map(|g| BraidLetter::new(g.index, g.sign)).collect(),
        })
    }

    pub fn to_word(&self) -> Word {
        self.letters
            .iter()
            .map(|l| Family::Sigma.pow(l.index, l.sign))
            .collect()
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Strand count of the smallest `B_n` containing the word.
    pub fn strands(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.index as usize + 2)
            .max()
            .unwrap_or(1)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i64()).sum()
    }

    pub fn permutation_image(&self) -> Permutation {
        transposition_product(self.letters.iter().map(|l| l.index))
    }
}

impl From<BraidWord> for Word {
    fn from(b: BraidWord) -> Word {
        b.to_word()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

pub fn exponent_sum(b: &BraidWord) -> i64 {
    b.exponent_sum()
}

pub fn permutation_image(b: &BraidWord) -> Permutation {
    b.permutation_image()
}

fn free_reduce(letters: &mut Vec<BraidLetter>) {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    *letters = out;
}

/// Finds the handle that closes first, as `(start, end)` positions.
fn first_handle(letters: &[BraidLetter], strands: usize) -> Option<(usize, usize)> {
    // last[j]: most recent position holding a letter with index j
    let mut last: Vec<Option<usize>> = vec![None; strands];
    for (p, l) in letters.iter().enumerate() {
        let i = l.index as usize;
        if let Some(q) = last[i] {
            let blocked = last[..i].iter().any(|lj| matches!(lj, Some(r) if *r > q));
            if !blocked && letters[q].sign != l.sign {
                return Some((q, p));
            }
        }
        last[i] = Some(p);
    }
    None
}

fn reduce_handle(letters: &mut Vec<BraidLetter>, start: usize, end: usize) {
    let main = letters[start].index;
    let e = letters[start].sign;
    let mut replaced = Vec::with_capacity(3 * (end - start));
    for &l in &letters[start + 1..end] {
        if l.index == main + 1 {
            replaced.push(BraidLetter::new(main + 1, e.flip()));
            replaced.push(BraidLetter::new(main, l.sign));
            replaced.push(BraidLetter::new(main + 1, e));
        } else {
            replaced.push(l);
        }
    }
    letters.splice(start..=end, replaced);
}

/// Runs handle reduction to completion. The result is empty iff the braid is trivial.
pub fn handle_reduce(b: &BraidWord, budget: &mut Budget) -> Result<BraidWord> {
    let mut letters = b.letters.clone();
    free_reduce(&mut letters);
    let strands = b.strands();
    while let Some((start, end)) = first_handle(&letters, strands) {
        budget.tick()?;
        reduce_handle(&mut letters, start, end);
        free_reduce(&mut letters);
    }
    Ok(BraidWord { letters })
}

/// Decides whether `b` is the identity of `B_n`.
pub fn is_trivial_braid(b: &BraidWord) -> Result<bool> {
    is_trivial_braid_budgeted(b, &mut Budget::new(DEFAULT_BRAID_STEP_CAP, "handle reduction"))
}

pub fn is_trivial_braid_budgeted(b: &BraidWord, budget: &mut Budget) -> Result<bool> {
    if b.exponent_sum() != 0 || !b.permutation_image().is_identity() {
        return Ok(false);
    }
    Ok(handle_reduce(b, budget)?.is_empty())
}

pub fn equal_braid(b1: &BraidWord, b2: &BraidWord) -> Result<bool> {
    is_trivial_braid(&b1.concat(&b2.invert()))
}

impl TryFrom<&Word> for BraidWord {
    type Error = Error;

    fn try_from(w: &Word) -> Result<Self> {
        BraidWord::from_word(w)
    }
}

impl From<BraidLetter> for GenSymbol {
    fn from(l: BraidLetter) -> GenSymbol {
        Family::Sigma.pow(l.index, l.sign)
    }
}
