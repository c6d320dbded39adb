//! Finitely supported permutations of ℕ.
//!
//! A word `x₁ x₂ ⋯ x_r` in transpositions is read as the composite function
//! `x₁ ∘ x₂ ∘ ⋯ ∘ x_r`, so the rightmost letter acts first. This is the reading
//! under which a `v_m` pushed left through a π-word leaves as `v_{w(m)}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Family, Index, Word};

/// Images of `0..n`; every point at or beyond `n` is fixed. Trailing fixed
/// points are always trimmed, so equality of values is equality of permutations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    images: Vec<Index>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: Vec::new() }
    }

    /// The transposition swapping `i` and `i + 1`.
    pub fn transposition(i: Index) -> Self {
        let mut images: Vec<Index> = (0..=i + 1).collect();
        images.swap(i as usize, i as usize + 1);
        Permutation { images }
    }

    /// Builds a permutation from images of `0..n`. Fails unless they form a bijection.
    pub fn from_images(images: Vec<Index>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &j in &images {
            let slot = seen.get_mut(j as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        let mut p = Permutation { images };
        p.trim();
        Some(p)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.images.last() {
            if last as usize + 1 == self.images.len() {
                self.images.pop();
            } else {
                break;
            }
        }
    }

    pub fn apply(&self, j: Index) -> Index {
        self.images.get(j as usize).copied().unwrap_or(j)
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// Smallest `n` such that every point `≥ n` is fixed.
    pub fn support_bound(&self) -> usize {
        self.images.len()
    }

    /// `p ∘ q`: apply `q`, then `p`.
    pub fn compose(&self, q: &Permutation) -> Permutation {
        let n = self.images.len().max(q.images.len());
        let images = (0..n as Index).map(|j| self.apply(q.apply(j))).collect();
        let mut out = Permutation { images };
        out.trim();
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (j, &pj) in self.images.iter().enumerate() {
            images[pj as usize] = j as Index;
        }
        Permutation { images }
    }

    /// `self ∘ (i i+1)`, in place.
    fn right_multiply_transposition(&mut self, i: Index) {
        let need = i as usize + 2;
        if self.images.len() < need {
            let start = self.images.len() as Index;
            self.images.extend(start..need as Index);
        }
        self.images.swap(i as usize, i as usize + 1);
        self.trim();
    }

    pub fn images(&self) -> &[Index] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        let mut done = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if done[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut j = start;
            let mut first = true;
            while !done[j] {
                done[j] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{j}")?;
                first = false;
                j = self.images[j] as usize;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Image of a word in `σ^{±1}` (or in `π^{±1}`) under `σ_i, π_i ↦ (i i+1)`.
pub fn from_sigma_word(w: &Word) -> Result<Permutation> {
    let family = match w.first() {
        Some(g) if g.family == Family::Sigma || g.family == Family::Pi => g.family,
        Some(&letter) => {
            return Err(Error::Alphabet {
                letter,
                context: "a σ word or π word",
            })
        }
        None => return Ok(Permutation::identity()),
    };
    w.require_families(&[family], "a σ word or π word")?;
    Ok(transposition_product(w.iter().map(|g| g.index)))
}

pub(crate) fn transposition_product(indices: impl IntoIterator<Item = Index>) -> Permutation {
    let mut p = Permutation::identity();
    for i in indices {
        p.right_multiply_transposition(i);
    }
    p
}
