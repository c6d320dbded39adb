//! Generator letters and words.
//!
//! A single letter type covers both alphabets used in the crate: the hat-group
//! generators `λ_i`, `σ_i` and the generators `v_n`, `π_n`, `π̄_n` of V and BV.
//! Words are plain values; every operation returns a fresh word.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator index.
///
/// Every rewriting rule raises the largest index of a word by at most one, and
/// all rewriting loops run under a step cap, so indices stay far below
/// `u32::MAX` for any input accepted by the parser (see
/// [`crate::syntax::MAX_INPUT_INDEX`]).
pub type Index = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `λ_i`
    Lambda,
    /// `σ_i`
    Sigma,
    /// `v_n`
    V,
    /// `π_n`
    Pi,
    /// `π̄_n`
    PiBar,
}

impl Family {
    pub fn pos(self, index: Index) -> GenSymbol {
        GenSymbol::new(self, index, Sign::Pos)
    }

    pub fn neg(self, index: Index) -> GenSymbol {
        GenSymbol::new(self, index, Sign::Neg)
    }

    pub fn pow(self, index: Index, sign: Sign) -> GenSymbol {
        GenSymbol::new(self, index, sign)
    }

    /// Token prefix used by the text syntax.
    pub fn token(self) -> &'static str {
        match self {
            Family::Lambda => "l",
            Family::Sigma => "s",
            Family::V => "v",
            Family::Pi => "p",
            Family::PiBar => "pb",
        }
    }

    pub fn is_hat(self) -> bool {
        matches!(self, Family::Lambda | Family::Sigma)
    }

    pub fn is_bv(self) -> bool {
        matches!(self, Family::V | Family::Pi | Family::PiBar)
    }
}

/// Exponent of a letter, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSymbol {
    pub family: Family,
    pub index: Index,
    pub sign: Sign,
}

impl GenSymbol {
    pub const fn new(family: Family, index: Index, sign: Sign) -> Self {
        GenSymbol {
            family,
            index,
            sign,
        }
    }

    pub fn inverse(self) -> Self {
        GenSymbol {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn is_inverse_of(self, other: GenSymbol) -> bool {
        self.family == other.family && self.index == other.index && self.sign != other.sign
    }

    pub fn is(self, family: Family) -> bool {
        self.family == family
    }

    pub fn with_index(self, index: Index) -> Self {
        GenSymbol { index, ..self }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.token(), self.index)?;
        if self.sign.is_neg() {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<GenSymbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<GenSymbol>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<GenSymbol> {
        self.0
    }

    /// `x^k` for a single letter, with negative `k` giving the inverse power.
    pub fn power(family: Family, index: Index, k: i64) -> Self {
        let sign = if k >= 0 { Sign::Pos } else { Sign::Neg };
        Word(vec![family.pow(index, sign); k.unsigned_abs() as usize])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Concatenation of any number of words.
    pub fn join<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Reversed sequence with every exponent negated.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// Removes adjacent `g g⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        Word(free_reduce_letters(&self.0))
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    /// Checks that every letter belongs to one of `allowed`.
    pub fn require_families(&self, allowed: &[Family], context: &'static str) -> Result<()> {
        match self.0.iter().find(|g| !allowed.contains(&g.family)) {
            Some(&letter) => Err(Error::Alphabet { letter, context }),
            None => Ok(()),
        }
    }

    pub fn max_index(&self) -> Option<Index> {
        self.0.iter().map(|g| g.index).max()
    }
}

pub(crate) fn free_reduce_letters(letters: &[GenSymbol]) -> Vec<GenSymbol> {
    let mut out: Vec<GenSymbol> = Vec::with_capacity(letters.len());
    for &g in letters {
        match out.last() {
            Some(&top) if top.is_inverse_of(g) => {
                out.pop();
            }
            _ => out.push(g),
        }
    }
    out
}

impl Deref for Word {
    type Target = [GenSymbol];

    fn deref(&self) -> &[GenSymbol] {
        &self.0
    }
}

impl From<Vec<GenSymbol>> for Word {
    fn from(letters: Vec<GenSymbol>) -> Self {
        Word(letters)
    }
}

impl FromIterator<GenSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GenSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl IntoIterator for Word {
    type Item = GenSymbol;
    type IntoIter = std::vec::IntoIter<GenSymbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a GenSymbol;
    type IntoIter = std::slice::Iter<'a, GenSymbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The hat-group word defining a single V/BV letter.
///
/// `v_n = λ₀^{n+1} λ₁ λ₀^{-n-2}`, `π_n = λ₀^{n+2} σ₁ λ₀^{-n-2}`,
/// `π̄_n = λ₀^{n+1} σ₀ λ₀^{-n-1}`; inverse letters map to inverted definitions.
pub fn bv_letter_definition(g: GenSymbol) -> Result<Word> {
    let n = g.index as i64;
    let (lead, middle, trail) = match g.family {
        Family::V => (n + 1, Family::Lambda.pos(1), -n - 2),
        Family::Pi => (n + 2, Family::Sigma.pos(1), -n - 2),
        Family::PiBar => (n + 1, Family::Sigma.pos(0), -n - 1),
        _ => {
            return Err(Error::Alphabet {
                letter: g,
                context: "a V/BV word",
            })
        }
    };
    let mut letters = Word::power(Family::Lambda, 0, lead).into_letters();
    letters.push(middle);
    letters.extend(Word::power(Family::Lambda, 0, trail));
    let def = Word(letters);
    Ok(if g.sign.is_pos() { def } else { def.invert() })
}

/// Rewrites a word over `v`, `π`, `π̄` into the hat-group alphabet, freely reduced.
pub fn expand_bv_generators(w: &Word) -> Result<Word> {
    let mut out = Vec::with_capacity(w.len() * 8);
    for &g in w.iter() {
        out.extend(bv_letter_definition(g)?);
    }
    Ok(Word(free_reduce_letters(&out)))
}
