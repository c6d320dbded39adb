//! Heights of π/π̄ words, monosyllables, and the height-raising operations.
//!
//! `π̄_n` has height `{n+1}` and `π_n` has height `{j : j ≥ n+2}`; a word's
//! height is the intersection over its letters. A word whose height contains
//! `h` is conjugate by `λ₀^h` to a σ-word.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lmr::actions::{pi_action, Side};
use crate::words::{Family, GenSymbol, Index, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum HeightSet {
    Empty,
    Singleton(Index),
    /// `{j : j ≥ t}`
    Tail(Index),
}

impl HeightSet {
    pub fn intersect(self, other: HeightSet) -> HeightSet {
        use HeightSet::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => Empty,
            (Singleton(a), Singleton(b)) => {
                if a == b {
                    Singleton(a)
                } else {
                    Empty
                }
            }
            (Singleton(a), Tail(t)) | (Tail(t), Singleton(a)) => {
                if a >= t {
                    Singleton(a)
                } else {
                    Empty
                }
            }
            (Tail(a), Tail(b)) => Tail(a.max(b)),
        }
    }

    pub fn contains(self, h: Index) -> bool {
        match self {
            HeightSet::Empty => false,
            HeightSet::Singleton(a) => a == h,
            HeightSet::Tail(t) => h >= t,
        }
    }

    pub fn is_empty(self) -> bool {
        self == HeightSet::Empty
    }

    pub fn of_letter(g: GenSymbol) -> Result<HeightSet> {
        match g.family {
            Family::PiBar => Ok(HeightSet::Singleton(g.index + 1)),
            Family::Pi => Ok(HeightSet::Tail(g.index + 2)),
            _ => Err(Error::Alphabet {
                letter: g,
                context: "a π/π̄ word",
            }),
        }
    }

    /// Height of a π/π̄ word; the empty word has height `Tail(0)`.
    pub fn of_word(w: &[GenSymbol]) -> Result<HeightSet> {
        w.iter().try_fold(HeightSet::Tail(0), |h, &g| {
            Ok(h.intersect(HeightSet::of_letter(g)?))
        })
    }
}

/// One step of the height recurrence for positive `v` words:
/// if `L` has height at most `k`, then `L v_m` has height at most the result.
pub fn height_step(k: Index, m: Index) -> Index {
    if m < k {
        k + 1
    } else {
        m + 2
    }
}

fn require_positive_v(l: &Word) -> Result<()> {
    l.require_families(&[Family::V], "a positive v word")?;
    match l.iter().find(|g| g.sign.is_neg()) {
        Some(&letter) => Err(Error::Alphabet {
            letter,
            context: "a positive v word",
        }),
        None => Ok(()),
    }
}

/// A `k` with `L = Λ λ₀^{-k}` for some positive λ-word `Λ`.
pub fn l_height_bound(l: &Word) -> Result<Index> {
    require_positive_v(l)?;
    Ok(l.iter().fold(0, |k, g| height_step(k, g.index)))
}

/// `(Λ, k)` with `L = Λ λ₀^{-k}` in F, where `k` is [`l_height_bound`].
pub fn l_height_witness(l: &Word) -> Result<(Word, Index)> {
    require_positive_v(l)?;
    let mut lambda = Vec::new();
    let mut k: Index = 0;
    for g in l.iter() {
        let m = g.index;
        // Λ λ₀^{-k} v_m = Λ λ₀^{j} λ₁ λ₀^{-k-j-1} with j = m - k + 1
        if m + 1 >= k {
            let j = m + 1 - k;
            lambda.extend(std::iter::repeat_n(Family::Lambda.pos(0), j as usize));
            lambda.push(Family::Lambda.pos(1));
            k = m + 2;
        } else {
            // λ₀^{j} λ₁ λ₀^{-j} = λ_{1-j} for j ≤ 0
            lambda.push(Family::Lambda.pos(k - m));
            k += 1;
        }
    }
    Ok((Word::new(lambda), k))
}

/// A π/π̄ word with exactly one π̄ letter: `pre · core · post`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Monosyllable {
    pub pre: Word,
    pub core: GenSymbol,
    pub post: Word,
}

impl Monosyllable {
    pub fn new(pre: Word, core: GenSymbol, post: Word) -> Result<Self> {
        if !core.is(Family::PiBar) {
            return Err(Error::Alphabet {
                letter: core,
                context: "the core of a monosyllable",
            });
        }
        pre.require_families(&[Family::Pi], "the π part of a monosyllable")?;
        post.require_families(&[Family::Pi], "the π part of a monosyllable")?;
        Ok(Monosyllable { pre, core, post })
    }

    pub fn to_word(&self) -> Word {
        Word::join([&self.pre, &Word::new(vec![self.core]), &self.post])
    }

    pub fn height(&self) -> HeightSet {
        HeightSet::of_word(&self.to_word()).expect("monosyllable letters are π/π̄")
    }

    /// The `h` of a monosyllable of height `{h}`.
    fn singleton_height(&self) -> Result<Index> {
        match self.height() {
            HeightSet::Singleton(h) => Ok(h),
            other => Err(Error::Height(format!(
                "monosyllable {} has height {other:?}",
                self.to_word()
            ))),
        }
    }
}

/// The four height-raising moves on a monosyllable of height `{h}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MonoOp {
    /// `M ~ M' v_j⁻¹`
    A,
    /// `M ~ v_j M'`
    B,
    /// `M v_m ~ M'` or `M v_m ~ v_j M'`
    C(Index),
    /// `v_m⁻¹ M ~ M'` or `v_m⁻¹ M ~ M' v_j⁻¹`
    D(Index),
}

/// Result of a height-raising move: `[v_prefix] · mono · [v_suffix⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoRaise {
    pub prefix: Option<Index>,
    pub mono: Monosyllable,
    pub suffix: Option<Index>,
}

/// Applies one of the moves; the result has height `{h+1}`.
pub fn mono_raise(m: &Monosyllable, op: MonoOp) -> Result<MonoRaise> {
    let h = m.singleton_height()?;
    let gamma = m.core.sign;
    let top = h - 1;
    let pi_top = Family::Pi.pow(top, gamma);
    let pb_next = Family::PiBar.pow(h, gamma);
    let check_m = |x: Index| {
        if x < h {
            Ok(())
        } else {
            Err(Error::Height(format!("v_{x} is not below height {h}")))
        }
    };
    let raised = match op {
        MonoOp::A => {
            // π̄_{h-1} ~ π_{h-1} π̄_h v_{h-1}⁻¹, then v_{h-1}⁻¹ passes the post word
            let (post, k) = pi_action(&m.post, top, Side::Left)?;
            let pre = m.pre.concat(&Word::new(vec![pi_top]));
            MonoRaise {
                prefix: None,
                mono: Monosyllable::new(pre, pb_next, post)?,
                suffix: Some(k),
            }
        }
        MonoOp::B => {
            // π̄_{h-1} ~ v_{h-1} π̄_h π_{h-1}, then v_{h-1} passes the pre word
            let (pre, j) = pi_action(&m.pre, top, Side::Right)?;
            let post = Word::new(vec![pi_top]).concat(&m.post);
            MonoRaise {
                prefix: Some(j),
                mono: Monosyllable::new(pre, pb_next, post)?,
                suffix: None,
            }
        }
        MonoOp::C(x) => {
            check_m(x)?;
            let (post, k) = pi_action(&m.post, x, Side::Right)?;
            if k == top {
                // π̄_{h-1} v_{h-1} ~ π_{h-1} π̄_h
                let pre = m.pre.concat(&Word::new(vec![pi_top]));
                MonoRaise {
                    prefix: None,
                    mono: Monosyllable::new(pre, pb_next, post)?,
                    suffix: None,
                }
            } else {
                // π̄_{h-1} v_k ~ v_k π̄_h for k < h-1
                let (pre, j) = pi_action(&m.pre, k, Side::Right)?;
                MonoRaise {
                    prefix: Some(j),
                    mono: Monosyllable::new(pre, pb_next, post)?,
                    suffix: None,
                }
            }
        }
        MonoOp::D(x) => {
            check_m(x)?;
            let (pre, k) = pi_action(&m.pre, x, Side::Left)?;
            if k == top {
                // v_{h-1}⁻¹ π̄_{h-1} ~ π̄_h π_{h-1}
                let post = Word::new(vec![pi_top]).concat(&m.post);
                MonoRaise {
                    prefix: None,
                    mono: Monosyllable::new(pre, pb_next, post)?,
                    suffix: None,
                }
            } else {
                // v_k⁻¹ π̄_{h-1} ~ π̄_h v_k⁻¹ for k < h-1
                let (post, j) = pi_action(&m.post, k, Side::Left)?;
                MonoRaise {
                    prefix: None,
                    mono: Monosyllable::new(pre, pb_next, post)?,
                    suffix: Some(j),
                }
            }
        }
    };
    Ok(raised)
}

/// Splits a π/π̄ word with at least one π̄ into monosyllables. π letters
/// before the first π̄ go to the first monosyllable; every other π letter goes
/// to the monosyllable on its left.
pub fn split_monosyllables(w: &Word) -> Result<Vec<Monosyllable>> {
    w.require_families(&[Family::Pi, Family::PiBar], "a π/π̄ word")?;
    let mut out: Vec<Monosyllable> = Vec::new();
    let mut pre = Vec::new();
    for &g in w.iter() {
        if g.is(Family::PiBar) {
            out.push(Monosyllable {
                pre: Word::new(std::mem::take(&mut pre)),
                core: g,
                post: Word::empty(),
            });
        } else if let Some(last) = out.last_mut() {
            last.post = last.post.concat(&Word::new(vec![g]));
        } else {
            pre.push(g);
        }
    }
    if out.is_empty() {
        return Err(Error::Height(format!("{w} contains no π̄ letter")));
    }
    Ok(out)
}

/// Raises every monosyllable of `M₁ ⋯ M_t` (heights nondecreasing) by one,
/// possibly emitting a single `v_j⁻¹` on the right.
pub fn raise_word_heights(ms: &[Monosyllable]) -> Result<(Vec<Monosyllable>, Option<Index>)> {
    let mut prev = 0;
    for m in ms {
        let h = m.singleton_height()?;
        if h < prev {
            return Err(Error::Height("monosyllable heights must be nondecreasing".into()));
        }
        prev = h;
    }
    let mut out = Vec::with_capacity(ms.len());
    let mut carried = None;
    for m in ms {
        let op = match carried {
            None => MonoOp::A,
            Some(j) => MonoOp::D(j),
        };
        let r = mono_raise(m, op)?;
        out.push(r.mono);
        carried = r.suffix;
    }
    Ok((out, carried))
}

/// Raises a word of nonempty height containing `h` to one containing `h + 1`.
///
/// `Side::Left` gives `M ~ [v_i] · M'`, `Side::Right` gives `M ~ M' · [v_j⁻¹]`;
/// the returned letter, if any, is the emitted `v` letter. Words without π̄
/// have tail heights and come back unchanged.
pub fn raise_m(m: &Word, side: Side) -> Result<(Option<GenSymbol>, Word)> {
    let height = HeightSet::of_word(m)?;
    match height {
        HeightSet::Empty => Err(Error::Height(format!("{m} has empty height"))),
        HeightSet::Tail(_) => Ok((None, m.clone())),
        HeightSet::Singleton(_) => match side {
            Side::Right => {
                let (ms, j) = raise_word_heights(&split_monosyllables(m)?)?;
                let word = Word::join(ms.iter().map(|x| x.to_word()).collect::<Vec<_>>().iter());
                Ok((j.map(|j| Family::V.neg(j)), word))
            }
            Side::Left => {
                let (ms, j) = raise_word_heights(&split_monosyllables(&m.invert())?)?;
                let word = Word::join(ms.iter().map(|x| x.to_word()).collect::<Vec<_>>().iter());
                Ok((j.map(|j| Family::V.pos(j)), word.invert()))
            }
        },
    }
}
