//! Canonical fractions and the word problem in V̂ and BV̂.
//!
//! Both groups are groups of right fractions of a Zappa–Szép product of the
//! monoid of F with `S_∞` or `B_∞`. Every element is `F β G⁻¹` with `F`, `G`
//! positive λ-words and `β` a permutation or braid, and it is trivial exactly
//! when `F = G` in normal form and `β` is trivial.
//!
//! Canonicalization runs in two phases. Inverse λ letters are moved to the
//! right end of the word; then every positive λ is moved left past the σ
//! letters. Both phases only ever apply one-letter rewrites taken from a
//! [`PushRules`] table.

use serde::Serialize;

use crate::braid::{is_trivial_braid_budgeted, BraidLetter, BraidWord};
use crate::error::{Budget, Error, Result};
use crate::perms::{transposition_product, Permutation};
use crate::thompson_f::FNormal;
use crate::words::{Family, GenSymbol, Index, Sign, Word};

pub const DEFAULT_HAT_STEP_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupMode {
    /// V̂: σ letters are involutions and `β` is a permutation.
    VHat,
    /// BV̂: `β` is a braid.
    BVHat,
}

/// Middle factor of a fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Beta {
    Braid(BraidWord),
    Perm(Permutation),
}

impl Beta {
    pub fn to_word(&self) -> Word {
        match self {
            Beta::Braid(b) => b.to_word(),
            Beta::Perm(p) => transpositions_of(p)
                .into_iter()
                .map(|i| Family::Sigma.pos(i))
                .collect(),
        }
    }
}

/// A word of adjacent transpositions whose product is `p`.
pub fn transpositions_of(p: &Permutation) -> Vec<Index> {
    // bubble-sort the images; p ∘ s_{j₁} ∘ ⋯ ∘ s_{j_r} = id gives p = s_{j_r} ∘ ⋯ ∘ s_{j₁}
    let mut images = p.images().to_vec();
    let mut swaps = Vec::new();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for j in 0..images.len().saturating_sub(1) {
            if images[j] > images[j + 1] {
                images.swap(j, j + 1);
                swaps.push(j as Index);
                sorted = false;
            }
        }
    }
    swaps.reverse();
    swaps
}

/// `f_part · beta · g_part⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatFraction {
    pub f_part: FNormal,
    pub beta: Beta,
    pub g_part: FNormal,
}

impl HatFraction {
    pub fn to_word(&self) -> Word {
        Word::join([
            &self.f_part.to_word(),
            &self.beta.to_word(),
            &self.g_part.to_word().invert(),
        ])
    }

    pub fn beta_is_trivial(&self, budget: &mut Budget) -> Result<bool> {
        match &self.beta {
            Beta::Perm(p) => Ok(p.is_identity()),
            Beta::Braid(b) => is_trivial_braid_budgeted(b, budget),
        }
    }
}

impl Serialize for HatFraction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            f_part: &'a [Index],
            beta_kind: &'static str,
            beta: Word,
            g_part: &'a [Index],
        }
        let beta_kind = match self.beta {
            Beta::Braid(_) => "braid",
            Beta::Perm(_) => "permutation",
        };
        Repr {
            f_part: self.f_part.indices(),
            beta_kind,
            beta: self.beta.to_word(),
            g_part: self.g_part.indices(),
        }
        .serialize(serializer)
    }
}

/// One-letter rewrites used by canonicalization.
///
/// Swapping in a different table is how the negative-control fixtures check
/// that a wrong rule is caught by the verifiers.
pub trait PushRules: Sync {
    /// `σ_q^ε λ_m = λ_{m'} S` with `S` one or two σ letters; returns `(m', S)`.
    fn sigma_past_lambda(&self, s: BraidLetter, m: Index) -> (Index, Vec<BraidLetter>);

    /// `λ_m⁻¹ x = X λ_{m'}⁻¹` (or `= X` when the inverse cancels); returns `(X, m')`.
    fn lambda_inverse_past(&self, m: Index, x: GenSymbol) -> (Vec<GenSymbol>, Option<Index>);
}

/// The rules forced by the defining relations of V̂ and BV̂.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardRules;

impl PushRules for StandardRules {
    fn sigma_past_lambda(&self, s: BraidLetter, m: Index) -> (Index, Vec<BraidLetter>) {
        let (q, e) = (s.index, s.sign);
        let sig = |i| BraidLetter::new(i, e);
        if m < q {
            // σ_q λ_m = λ_m σ_{q+1}
            (m, vec![sig(q + 1)])
        } else if m == q {
            // σ_m λ_m = λ_{m+1} σ_m σ_{m+1}
            (m + 1, vec![sig(q), sig(q + 1)])
        } else if m == q + 1 {
            // σ_q λ_{q+1} = λ_q σ_{q+1} σ_q
            (q, vec![sig(q + 1), sig(q)])
        } else {
            // σ_q λ_m = λ_m σ_q for m > q + 1
            (m, vec![sig(q)])
        }
    }

    fn lambda_inverse_past(&self, m: Index, x: GenSymbol) -> (Vec<GenSymbol>, Option<Index>) {
        let q = x.index;
        match x.family {
            Family::Lambda => {
                if m < q {
                    (vec![Family::Lambda.pos(q + 1)], Some(m))
                } else if q < m {
                    (vec![Family::Lambda.pos(q)], Some(m + 1))
                } else {
                    (Vec::new(), None)
                }
            }
            _ => {
                let sig = |i| Family::Sigma.pow(i, x.sign);
                if m < q {
                    (vec![sig(q + 1)], Some(m))
                } else if m == q {
                    (vec![sig(m + 1), sig(m)], Some(m + 1))
                } else if m == q + 1 {
                    (vec![sig(q), sig(q + 1)], Some(q))
                } else {
                    (vec![sig(q)], Some(m))
                }
            }
        }
    }
}

/// `σ_q^ε · λ_m` rewritten as one λ followed by σ letters.
pub fn push_sigma_past_lambda(s: GenSymbol, l: GenSymbol) -> Result<Word> {
    if !s.is(Family::Sigma) {
        return Err(Error::Alphabet { letter: s, context: "the σ slot of a σλ rewrite" });
    }
    if !l.is(Family::Lambda) || l.sign.is_neg() {
        return Err(Error::Alphabet { letter: l, context: "the λ slot of a σλ rewrite" });
    }
    let (m, tail) = StandardRules.sigma_past_lambda(BraidLetter::new(s.index, s.sign), l.index);
    let mut out = vec![Family::Lambda.pos(m)];
    out.extend(tail.into_iter().map(GenSymbol::from));
    Ok(Word::new(out))
}

/// `λ_m⁻¹ · x` rewritten so the inverse letter (if any) ends up on the right.
pub fn push_lambda_inverse_right(l: GenSymbol, x: GenSymbol) -> Result<Word> {
    if !l.is(Family::Lambda) || l.sign.is_pos() {
        return Err(Error::Alphabet { letter: l, context: "the λ⁻¹ slot of a rewrite" });
    }
    let ok = x.is(Family::Sigma) || (x.is(Family::Lambda) && x.sign.is_pos());
    if !ok {
        return Err(Error::Alphabet { letter: x, context: "the right slot of a λ⁻¹ rewrite" });
    }
    let (mut out, rest) = StandardRules.lambda_inverse_past(l.index, x);
    out.extend(rest.map(|m| Family::Lambda.neg(m)));
    Ok(Word::new(out))
}

/// Moves the positive letters `carried` left through `λ_{neg[0]}⁻¹ ⋯ λ_{neg[k-1]}⁻¹`,
/// updating `neg` in place and returning what comes out on the left.
fn carry_left_through_negatives<R: PushRules + ?Sized>(
    rules: &R,
    neg: &mut Vec<Index>,
    mut carried: Vec<GenSymbol>,
    budget: &mut Budget,
) -> Result<Vec<GenSymbol>> {
    let mut k = neg.len();
    while k > 0 && !carried.is_empty() {
        k -= 1;
        let mut inverse = Some(neg[k]);
        let mut out = Vec::with_capacity(carried.len() + 2);
        for x in carried {
            match inverse {
                None => out.push(x),
                Some(m) => {
                    budget.tick()?;
                    let (prefix, rest) = rules.lambda_inverse_past(m, x);
                    out.extend(prefix);
                    inverse = rest;
                }
            }
        }
        match inverse {
            Some(m) => neg[k] = m,
            None => {
                neg.remove(k);
            }
        }
        carried = out;
    }
    Ok(carried)
}

pub fn canonicalize_hat(w: &Word, mode: GroupMode) -> Result<HatFraction> {
    let mut budget = Budget::new(DEFAULT_HAT_STEP_CAP, "hat canonicalization");
    canonicalize_hat_with(w, mode, &StandardRules, &mut budget)
}

pub fn canonicalize_hat_with<R: PushRules + ?Sized>(
    w: &Word,
    mode: GroupMode,
    rules: &R,
    budget: &mut Budget,
) -> Result<HatFraction> {
    w.require_families(&[Family::Lambda, Family::Sigma], "a V̂/BV̂ word")?;
    let w = w.free_reduce();
    let letters = w.iter().map(|&g| match mode {
        GroupMode::VHat if g.is(Family::Sigma) => Family::Sigma.pos(g.index),
        _ => g,
    });

    // phase 1: front · λ_{neg[0]}⁻¹ ⋯ with front free of inverse λ letters
    let mut front: Vec<GenSymbol> = Vec::new();
    let mut neg: Vec<Index> = Vec::new();
    for g in letters {
        if g.is(Family::Lambda) && g.sign.is_neg() {
            neg.push(g.index);
        } else {
            front.extend(carry_left_through_negatives(rules, &mut neg, vec![g], budget)?);
        }
    }

    // phase 2: positive λ letters move left past the σ letters
    let mut lambdas: Vec<Index> = Vec::new();
    let mut sigmas: Vec<BraidLetter> = Vec::new();
    for g in front {
        if g.is(Family::Sigma) {
            sigmas.push(BraidLetter::new(g.index, g.sign));
            continue;
        }
        let mut m = g.index;
        let mut passed_rev: Vec<BraidLetter> = Vec::with_capacity(sigmas.len() + 1);
        while let Some(s) = sigmas.pop() {
            budget.tick()?;
            let (m2, out) = rules.sigma_past_lambda(s, m);
            m = m2;
            passed_rev.extend(out.into_iter().rev());
        }
        passed_rev.reverse();
        sigmas = passed_rev;
        lambdas.push(m);
    }

    neg.reverse();
    let beta = match mode {
        GroupMode::BVHat => Beta::Braid(BraidWord::new(sigmas)),
        GroupMode::VHat => Beta::Perm(transposition_product(sigmas.iter().map(|s| s.index))),
    };
    Ok(HatFraction {
        f_part: FNormal::from_indices(lambdas),
        beta,
        g_part: FNormal::from_indices(neg),
    })
}

pub fn is_trivial_hat(w: &Word, mode: GroupMode) -> Result<bool> {
    let mut budget = Budget::new(DEFAULT_HAT_STEP_CAP, "hat canonicalization");
    is_trivial_hat_with(w, mode, &StandardRules, &mut budget)
}

pub fn is_trivial_hat_with<R: PushRules + ?Sized>(
    w: &Word,
    mode: GroupMode,
    rules: &R,
    budget: &mut Budget,
) -> Result<bool> {
    let fraction = canonicalize_hat_with(w, mode, rules, budget)?;
    if fraction.f_part != fraction.g_part {
        return Ok(false);
    }
    budget.set_stage("braid handle reduction");
    fraction.beta_is_trivial(budget)
}

pub fn equal_hat(w1: &Word, w2: &Word, mode: GroupMode) -> Result<bool> {
    is_trivial_hat(&w1.concat(&w2.invert()), mode)
}

/// Relators of the defining presentation of V̂ (`mode = VHat`) or BV̂ with
/// every index at most `bound`, as `(name, lhs, rhs)`.
pub fn hat_relators(mode: GroupMode, bound: Index) -> Vec<(String, Word, Word)> {
    let l = |i| Family::Lambda.pos(i);
    let s = |i, e: Sign| Family::Sigma.pow(i, e);
    let mut out = Vec::new();
    let mut push = |name: String, lhs: Vec<GenSymbol>, rhs: Vec<GenSymbol>| {
        out.push((name, Word::new(lhs), Word::new(rhs)));
    };
    let signs = [Sign::Pos, Sign::Neg];
    for m in 0..=bound {
        for q in 0..=bound {
            if m < q && q < bound {
                push(format!("lambda-shift(m={m},q={q})"), vec![l(q), l(m)], vec![l(m), l(q + 1)]);
            }
            if m.abs_diff(q) >= 2 {
                push(
                    format!("sigma-far(m={m},n={q})"),
                    vec![s(m, Sign::Pos), s(q, Sign::Pos)],
                    vec![s(q, Sign::Pos), s(m, Sign::Pos)],
                );
            }
            for e in signs {
                let tag = if e.is_pos() { "+" } else { "-" };
                if m < q && q < bound {
                    push(
                        format!("sigma-lambda-low(e={tag},m={m},q={q})"),
                        vec![s(q, e), l(m)],
                        vec![l(m), s(q + 1, e)],
                    );
                }
                if m > q + 1 {
                    push(
                        format!("sigma-lambda-far(e={tag},m={m},q={q})"),
                        vec![s(q, e), l(m)],
                        vec![l(m), s(q, e)],
                    );
                }
            }
        }
        if m < bound {
            push(
                format!("sigma-braid(m={m})"),
                vec![s(m, Sign::Pos), s(m + 1, Sign::Pos), s(m, Sign::Pos)],
                vec![s(m + 1, Sign::Pos), s(m, Sign::Pos), s(m + 1, Sign::Pos)],
            );
            for e in signs {
                let tag = if e.is_pos() { "+" } else { "-" };
                push(
                    format!("sigma-lambda-diag(e={tag},m={m})"),
                    vec![s(m, e), l(m)],
                    vec![l(m + 1), s(m, e), s(m + 1, e)],
                );
                push(
                    format!("sigma-lambda-next(e={tag},m={m})"),
                    vec![s(m, e), l(m + 1)],
                    vec![l(m), s(m + 1, e), s(m, e)],
                );
            }
        }
        if mode == GroupMode::VHat {
            push(format!("sigma-square(m={m})"), vec![s(m, Sign::Pos), s(m, Sign::Pos)], vec![]);
        }
    }
    out
}
