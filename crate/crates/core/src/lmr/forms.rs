//! The `L · M · R` forms and the word problem in V and BV.
//!
//! `L` is a word in positive `v` letters, `R` one in inverse `v` letters and
//! `M` a π/π̄ word. Once `M` has a height `k` that bounds the heights of `L`
//! and `R`, the whole word is trivial exactly when the σ-word read off from
//! `M` is trivial and `L R` is trivial in the copy of F spanned by the `v_i`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::braid::{is_trivial_braid_budgeted, BraidWord};
use crate::error::{Budget, Error, Result};
use crate::lmr::actions::{gather_positive_v, sink_v_inverse, Side};
use crate::lmr::height::{height_step, l_height_bound, raise_m, HeightSet};
use crate::lmr::relations::BvMode;
use crate::perms::transposition_product;
use crate::thompson_f::is_trivial_f;
use crate::words::{Family, GenSymbol, Index, Word};

pub const DEFAULT_BV_STEP_CAP: u64 = 10_000_000;

/// `L · M · R` without height bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstForm {
    pub l: Word,
    pub m: Word,
    pub r: Word,
}

impl FirstForm {
    pub fn to_word(&self) -> Word {
        Word::join([&self.l, &self.m, &self.r])
    }
}

/// `L · M · R` where `height` is the height of `M`, it contains `k`, and
/// `L` and `R⁻¹` have height at most `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LmrForm {
    pub l: Word,
    pub m: Word,
    pub r: Word,
    pub height: HeightSet,
    pub k: Index,
}

impl LmrForm {
    pub fn to_word(&self) -> Word {
        Word::join([&self.l, &self.m, &self.r])
    }

    /// Checks every structural invariant, returning a description of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if !self.l.iter().all(|g| g.is(Family::V) && g.sign.is_pos()) {
            return Err(format!("L = {} is not a positive v word", self.l));
        }
        if !self.r.iter().all(|g| g.is(Family::V) && g.sign.is_neg()) {
            return Err(format!("R = {} is not an inverse v word", self.r));
        }
        let height = HeightSet::of_word(&self.m).map_err(|e| e.to_string())?;
        if height != self.height {
            return Err(format!("recorded height {:?} but M has {height:?}", self.height));
        }
        if !height.contains(self.k) {
            return Err(format!("height {height:?} of M does not contain k = {}", self.k));
        }
        let kl = l_height_bound(&self.l).map_err(|e| e.to_string())?;
        let kr = l_height_bound(&self.r.invert()).map_err(|e| e.to_string())?;
        if kl > self.k || kr > self.k {
            return Err(format!("bounds {kl}, {kr} of L, R exceed k = {}", self.k));
        }
        Ok(())
    }
}

fn v_word(indices: impl IntoIterator<Item = Index>, inverse: bool) -> Word {
    indices
        .into_iter()
        .map(|i| if inverse { Family::V.neg(i) } else { Family::V.pos(i) })
        .collect()
}

fn invert_letters(letters: &[GenSymbol]) -> Vec<GenSymbol> {
    letters.iter().rev().map(|g| g.inverse()).collect()
}

pub fn to_first_form(w: &Word) -> Result<FirstForm> {
    to_first_form_with(w, &mut Budget::new(DEFAULT_BV_STEP_CAP, "first form"))
}

/// Positive `v` letters are moved to the far left; then the same procedure,
/// applied to the inverse of what remains, moves the inverse `v` letters to
/// the far right.
pub fn to_first_form_with(w: &Word, budget: &mut Budget) -> Result<FirstForm> {
    w.require_families(&[Family::V, Family::Pi, Family::PiBar], "a V/BV word")?;
    let reduced = w.free_reduce();
    let (l, rest) = gather_positive_v(&reduced, budget)?;
    let (r_inv, m_inv) = gather_positive_v(&invert_letters(&rest), budget)?;
    Ok(FirstForm {
        l: v_word(l, false),
        m: Word::new(invert_letters(&m_inv)),
        r: v_word(r_inv.into_iter().rev(), true),
    })
}

/// Working state of the height-equalizing pass: `L · acc · queue · R`.
struct Equalizer {
    l: Vec<Index>,
    acc: Vec<GenSymbol>,
    height: HeightSet,
    queue: VecDeque<GenSymbol>,
    /// indices of the inverse `v` letters of `R`, in order
    r: VecDeque<Index>,
}

impl Equalizer {
    /// `acc ~ [v_i] acc'` with the height of `acc'` one higher.
    fn raise_acc_left(&mut self) -> Result<()> {
        let (v, raised) = raise_m(&Word::new(std::mem::take(&mut self.acc)), Side::Left)?;
        self.l.extend(v.map(|g| g.index));
        self.acc = raised.into_letters();
        if let HeightSet::Singleton(h) = self.height {
            self.height = HeightSet::Singleton(h + 1);
        }
        Ok(())
    }

    /// `π̄_n ~ π_n π̄_{n+1} v_n⁻¹`; the inverse letter is pushed through the
    /// rest of the queue and lands at the front of `R`.
    fn raise_letter(&mut self, pb: GenSymbol, budget: &mut Budget) -> Result<()> {
        let rest: Vec<GenSymbol> = self.queue.drain(..).collect();
        let (rest, emitted) = sink_v_inverse(pb.index, &rest, budget)?;
        self.queue.push_back(Family::Pi.pow(pb.index, pb.sign));
        self.queue.push_back(Family::PiBar.pow(pb.index + 1, pb.sign));
        self.queue.extend(rest);
        for j in emitted.into_iter().rev() {
            self.r.push_front(j);
        }
        Ok(())
    }

    fn run(&mut self, budget: &mut Budget) -> Result<()> {
        while let Some(x) = self.queue.pop_front() {
            budget.tick()?;
            match x.family {
                Family::Pi => {
                    let need = x.index + 2;
                    match self.height {
                        HeightSet::Tail(t) => self.height = HeightSet::Tail(t.max(need)),
                        HeightSet::Singleton(mut h) => {
                            while h < need {
                                budget.tick()?;
                                self.raise_acc_left()?;
                                h += 1;
                            }
                        }
                        HeightSet::Empty => unreachable!("acc always has nonempty height"),
                    }
                    self.acc.push(x);
                }
                Family::PiBar => {
                    let need = x.index + 1;
                    match self.height {
                        HeightSet::Tail(t) if t <= need => {
                            self.height = HeightSet::Singleton(need);
                            self.acc.push(x);
                        }
                        HeightSet::Singleton(h) if h <= need => {
                            for _ in h..need {
                                budget.tick()?;
                                self.raise_acc_left()?;
                            }
                            self.acc.push(x);
                        }
                        _ => self.raise_letter(x, budget)?,
                    }
                }
                _ => unreachable!("M holds only π and π̄ letters"),
            }
        }
        Ok(())
    }
}

/// Rewrites `M` of a first form so that its height is nonempty.
///
/// Letters of `M` are appended one at a time to a prefix of constant height.
/// A letter that needs a larger height raises the prefix, which emits a `v`
/// into `L`. A `π̄` letter below the prefix height is raised itself, and the
/// `v⁻¹` this produces is pushed through the rest of `M` into `R`.
pub fn to_second_form_with(w: &Word, budget: &mut Budget) -> Result<(FirstForm, HeightSet)> {
    let first = to_first_form_with(w, budget)?;
    budget.set_stage("second form");
    let mut eq = Equalizer {
        l: first.l.iter().map(|g| g.index).collect(),
        acc: Vec::new(),
        height: HeightSet::Tail(0),
        queue: first.m.into_letters().into(),
        r: first.r.iter().map(|g| g.index).collect(),
    };
    eq.run(budget)?;
    let form = FirstForm {
        l: v_word(eq.l, false),
        m: Word::new(eq.acc),
        r: v_word(eq.r, true),
    };
    Ok((form, eq.height))
}

pub fn to_third_form(w: &Word) -> Result<LmrForm> {
    to_third_form_with(w, &mut Budget::new(DEFAULT_BV_STEP_CAP, "first form"))
}

/// Raises the height of `M` until it bounds the heights of `L` and `R`.
pub fn to_third_form_with(w: &Word, budget: &mut Budget) -> Result<LmrForm> {
    let (second, height) = to_second_form_with(w, budget)?;
    budget.set_stage("third form");
    let mut l: Vec<Index> = second.l.iter().map(|g| g.index).collect();
    let mut r: VecDeque<Index> = second.r.iter().map(|g| g.index).collect();
    let mut m = second.m;
    let mut k1 = l_height_bound(&second.l)?;
    let mut k2 = l_height_bound(&second.r.invert())?;
    let (height, k) = match height {
        HeightSet::Tail(t) => (height, k1.max(k2).max(t)),
        HeightSet::Singleton(mut h) => {
            while k1 > h || k2 > h {
                budget.tick()?;
                let side = if k2 > h { Side::Left } else { Side::Right };
                let (v, raised) = raise_m(&m, side)?;
                m = raised;
                if let Some(g) = v {
                    match side {
                        Side::Left => {
                            l.push(g.index);
                            k1 = height_step(k1, g.index);
                        }
                        Side::Right => {
                            r.push_front(g.index);
                            k2 = height_step(k2, g.index);
                        }
                    }
                }
                h += 1;
            }
            (HeightSet::Singleton(h), h)
        }
        HeightSet::Empty => unreachable!("second form has nonempty height"),
    };
    Ok(LmrForm {
        l: v_word(l, false),
        m,
        r: v_word(r, true),
        height,
        k,
    })
}

/// The σ-word `λ₀^{-h} M λ₀^{h}`: `π̄_{h-1}^ε ↦ σ₀^ε` and `π_i^ε ↦ σ_{h-1-i}^ε`.
pub fn m_to_sigma(m: &Word, h: Index) -> Result<BraidWord> {
    let height = HeightSet::of_word(m)?;
    if !height.contains(h) {
        return Err(Error::Height(format!("{h} is not in the height {height:?} of {m}")));
    }
    let w: Word = m
        .iter()
        .map(|g| Family::Sigma.pow(h - 1 - g.index, g.sign))
        .collect();
    BraidWord::from_word(&w)
}

/// Image of a `v`-word in F under `v_i ↦ λ_i`.
fn v_to_lambda(w: &Word) -> Word {
    w.iter().map(|g| Family::Lambda.pow(g.index, g.sign)).collect()
}

pub fn is_trivial_bv(w: &Word, mode: BvMode) -> Result<bool> {
    is_trivial_bv_with(w, mode, &mut Budget::new(DEFAULT_BV_STEP_CAP, "first form"))
}

pub fn is_trivial_bv_with(w: &Word, mode: BvMode, budget: &mut Budget) -> Result<bool> {
    let form = to_third_form_with(w, budget)?;
    let sigma = m_to_sigma(&form.m, form.k)?;
    let sigma_trivial = match mode {
        BvMode::V => transposition_product(sigma.letters().iter().map(|l| l.index)).is_identity(),
        BvMode::BV => {
            budget.set_stage("braid handle reduction");
            is_trivial_braid_budgeted(&sigma, budget)?
        }
    };
    Ok(sigma_trivial && is_trivial_f(&v_to_lambda(&form.l.concat(&form.r)))?)
}

pub fn equal_bv(w1: &Word, w2: &Word, mode: BvMode) -> Result<bool> {
    is_trivial_bv(&w1.concat(&w2.invert()), mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::{equal_hat, is_trivial_hat, GroupMode};
    use crate::syntax::w;
    use crate::words::{expand_bv_generators, Sign};
    use proptest::prelude::*;

    fn hat_equal(a: &Word, b: &Word) -> bool {
        equal_hat(
            &expand_bv_generators(a).unwrap(),
            &expand_bv_generators(b).unwrap(),
            GroupMode::BVHat,
        )
        .unwrap()
    }

    #[test]
    fn first_form_examples() {
        let f = to_first_form(&w("v1' v0")).unwrap();
        assert_eq!((f.l, f.m, f.r), (w("v0"), w(""), w("v2'")));
        let f = to_first_form(&w("p2 v0")).unwrap();
        assert_eq!((f.l, f.m, f.r), (w("v0"), w("p3"), w("")));
        let f = to_first_form(&w("pb0 v1")).unwrap();
        assert_eq!((f.l, f.m, f.r), (w("v0 v0"), w("pb2 p1 p0"), w("")));
    }

    #[test]
    fn third_form_examples() {
        let f = to_third_form(&w("p0")).unwrap();
        assert_eq!((&f.l, &f.m, &f.r, f.k), (&w(""), &w("p0"), &w(""), 2));

        let f = to_third_form(&w("pb0 pb2")).unwrap();
        assert!(matches!(f.height, HeightSet::Singleton(_)));
        f.check_invariants().unwrap();
        assert!(hat_equal(&w("pb0 pb2"), &f.to_word()));

        let f = to_third_form(&w("v0 v1'")).unwrap();
        assert_eq!((&f.l, &f.m, &f.r), (&w("v0"), &w(""), &w("v1'")));
        f.check_invariants().unwrap();
    }

    #[test]
    fn empty_height_split_is_handled() {
        // π̄₀ and π₅ cannot share a monosyllable of nonempty height
        let x = w("pb0 p5 pb1' v2");
        let f = to_third_form(&x).unwrap();
        f.check_invariants().unwrap();
        assert!(hat_equal(&x, &f.to_word()));
    }

    #[test]
    fn m_to_sigma_examples() {
        assert_eq!(m_to_sigma(&w("pb1"), 2).unwrap().to_word(), w("s0"));
        assert_eq!(m_to_sigma(&w("p0"), 2).unwrap().to_word(), w("s1"));
        assert_eq!(m_to_sigma(&w("p0 pb1'"), 2).unwrap().to_word(), w("s1 s0'"));
        assert!(m_to_sigma(&w("pb1"), 3).is_err());
    }

    #[test]
    fn triviality_examples() {
        assert!(is_trivial_bv(&w("p0 p0"), BvMode::V).unwrap());
        assert!(!is_trivial_bv(&w("p0 p0"), BvMode::BV).unwrap());
        assert!(is_trivial_bv(&w("v2 v1 v3' v1'"), BvMode::BV).unwrap());
        assert!(!is_trivial_bv(&w("v2 v1'"), BvMode::BV).unwrap());
        assert!(!is_trivial_bv(&w("v2 v1'"), BvMode::V).unwrap());
    }

    #[test]
    fn equality_examples() {
        for mode in [BvMode::V, BvMode::BV] {
            assert!(equal_bv(&w("p0 v0"), &w("v1 p0 p1"), mode).unwrap());
            assert!(equal_bv(&w("pb0 v0"), &w("p0 pb1"), mode).unwrap());
            assert!(!equal_bv(&w("v0"), &w("v1"), mode).unwrap());
        }
    }

    #[test]
    fn generator_redundancy() {
        for n in 0..=8 {
            for mode in [BvMode::V, BvMode::BV] {
                let pi = Word::new(vec![Family::Pi.pos(n)]);
                let via_pbar = Word::new(vec![
                    Family::PiBar.pos(n),
                    Family::V.pos(n),
                    Family::PiBar.neg(n + 1),
                ]);
                assert!(equal_bv(&pi, &via_pbar, mode).unwrap());
                let v = Word::new(vec![Family::V.pos(n)]);
                let via_pi = Word::new(vec![
                    Family::PiBar.neg(n),
                    Family::Pi.pos(n),
                    Family::PiBar.pos(n + 1),
                ]);
                assert!(equal_bv(&v, &via_pi, mode).unwrap());
            }
        }
    }

    #[test]
    fn rejects_hat_letters() {
        assert!(matches!(to_first_form(&w("v0 l0")), Err(Error::Alphabet { .. })));
    }

    fn arb_bv_word(max_index: u32, max_len: usize) -> impl Strategy<Value = Word> {
        let family = prop::sample::select(vec![Family::V, Family::Pi, Family::PiBar]);
        prop::collection::vec((family, 0..=max_index, any::<bool>()), 0..max_len).prop_map(|v| {
            v.into_iter()
                .map(|(f, i, neg)| f.pow(i, if neg { Sign::Neg } else { Sign::Pos }))
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn third_form_is_sound(x in arb_bv_word(4, 8)) {
            let f = to_third_form(&x).unwrap();
            prop_assert!(f.check_invariants().is_ok(), "{}: {:?}", x, f.check_invariants());
            prop_assert!(hat_equal(&x, &f.to_word()));
        }

        #[test]
        fn agrees_with_the_hat_group(x in arb_bv_word(5, 10)) {
            let hat = expand_bv_generators(&x).unwrap();
            prop_assert_eq!(is_trivial_bv(&x, BvMode::BV).unwrap(), is_trivial_hat(&hat, GroupMode::BVHat).unwrap());
            prop_assert_eq!(is_trivial_bv(&x, BvMode::V).unwrap(), is_trivial_hat(&hat, GroupMode::VHat).unwrap());
        }

        #[test]
        fn word_times_inverse_is_trivial(x in arb_bv_word(5, 10)) {
            prop_assert!(is_trivial_bv(&x.concat(&x.invert()), BvMode::BV).unwrap());
        }
    }
}
