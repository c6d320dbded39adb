//! Moving `v` letters past `π`, `π̄` and inverse `v` letters.
//!
//! Everything here is built on one table, [`move_v_left`], which rewrites
//! `t · v_p` as a run of positive `v` letters followed by letters that contain
//! no positive `v`. Moves of inverse letters to the right are obtained by
//! inverting words, so the two directions can never disagree.

use std::collections::VecDeque;

use crate::error::{Budget, Error, Result};
use crate::words::{Family, GenSymbol, Index, Sign, Word};

/// Which side of a word a `v` letter enters from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

/// `t · v_p ~ v_{a₁} ⋯ v_{a_r} · B` for `t` one of `v_q⁻¹`, `π_q^ε`, `π̄_q^ε`.
///
/// Returns `([a₁, …, a_r], B)`; `B` never contains a positive `v`.
///
/// # Panics
///
/// When `t` is a positive `v` or a hat-group letter.
pub fn move_v_left(t: GenSymbol, p: Index) -> (Vec<Index>, Vec<GenSymbol>) {
    let q = t.index;
    let e = t.sign;
    match t.family {
        Family::V => {
            assert!(t.sign.is_neg(), "positive v letters do not block v_p");
            if p < q {
                (vec![p], vec![Family::V.neg(q + 1)])
            } else if p > q {
                (vec![p + 1], vec![Family::V.neg(q)])
            } else {
                (vec![], vec![])
            }
        }
        Family::Pi => {
            let pi = |i| Family::Pi.pow(i, e);
            if q > p {
                (vec![p], vec![pi(q + 1)])
            } else if q == p {
                (vec![p + 1], vec![pi(p), pi(p + 1)])
            } else if q + 1 == p {
                (vec![p - 1], vec![pi(p), pi(p - 1)])
            } else {
                (vec![p], vec![pi(q)])
            }
        }
        Family::PiBar => {
            let pb = |i| Family::PiBar.pow(i, e);
            if q > p {
                (vec![p], vec![pb(q + 1)])
            } else if q == p {
                (vec![], vec![Family::Pi.pow(p, e), pb(p + 1)])
            } else {
                // π̄_q v_{q+k} ~ v_q ⋯ v_{q+k-2} v_{q+k-1}² · π̄_{q+k+1} π_{q+k} ⋯ π_q
                let mut a: Vec<Index> = (q..p).collect();
                a.push(p - 1);
                let mut b = vec![pb(p + 1)];
                b.extend((q..=p).rev().map(|i| Family::Pi.pow(i, e)));
                (a, b)
            }
        }
        _ => panic!("move_v_left: {t} is not a BV letter"),
    }
}

/// `v_p⁻¹ · x ~ X · v_{e₁}⁻¹ ⋯ v_{e_s}⁻¹` for `x` one of `v_q`, `π_q^ε`, `π̄_q^ε`.
///
/// Returns `(X, [e₁, …, e_s])`.
pub fn move_v_inverse_right(p: Index, x: GenSymbol) -> (Vec<GenSymbol>, Vec<Index>) {
    let (a, b) = move_v_left(x.inverse(), p);
    let xs = b.iter().rev().map(|g| g.inverse()).collect();
    let es = a.into_iter().rev().collect();
    (xs, es)
}

/// Moves the positive letter `v_p` from the right end of `tail` to its left end,
/// where it joins `out`. `tail` must not contain positive `v` letters; every
/// positive `v` produced on the way continues left and ends up in `out`.
pub(crate) fn pull_v_left(
    tail: &mut Vec<GenSymbol>,
    p: Index,
    out: &mut Vec<Index>,
    budget: &mut Budget,
) -> Result<()> {
    // Each frame remembers the v letters still to be pulled through the
    // shortened tail, and the letters to put back once they are through.
    let mut frames: Vec<(VecDeque<Index>, Vec<GenSymbol>)> = Vec::new();
    let mut current = p;
    loop {
        match tail.pop() {
            None => out.push(current),
            Some(t) => {
                budget.tick()?;
                let (a, b) = move_v_left(t, current);
                frames.push((a.into(), b));
            }
        }
        loop {
            let Some((pending, restore)) = frames.last_mut() else {
                return Ok(());
            };
            if let Some(next) = pending.pop_front() {
                current = next;
                break;
            }
            tail.append(restore);
            frames.pop();
        }
    }
}

/// Moves every positive `v` of `letters` to the far left.
/// Returns the indices of those letters and the remaining word.
pub(crate) fn gather_positive_v(
    letters: &[GenSymbol],
    budget: &mut Budget,
) -> Result<(Vec<Index>, Vec<GenSymbol>)> {
    let mut out = Vec::new();
    let mut tail = Vec::new();
    for &g in letters {
        if g.is(Family::V) && g.sign.is_pos() {
            pull_v_left(&mut tail, g.index, &mut out, budget)?;
        } else {
            tail.push(g);
        }
    }
    Ok((out, tail))
}

/// Moves `v_p⁻¹` from the left end of `word` to its right end.
/// `word` must not contain inverse `v` letters.
/// Returns the rewritten word and the indices of the inverse `v` letters that
/// come out on the right, in order.
pub(crate) fn sink_v_inverse(
    p: Index,
    word: &[GenSymbol],
    budget: &mut Budget,
) -> Result<(Vec<GenSymbol>, Vec<Index>)> {
    let mut tail: Vec<GenSymbol> = word.iter().rev().map(|g| g.inverse()).collect();
    let mut out = Vec::new();
    pull_v_left(&mut tail, p, &mut out, budget)?;
    let rewritten = tail.iter().rev().map(|g| g.inverse()).collect();
    out.reverse();
    Ok((rewritten, out))
}

fn require_pi_word(w: &Word) -> Result<()> {
    w.require_families(&[Family::Pi], "a π word")
}

/// Moves `v_m` through a π-word.
///
/// `Side::Right`: `w · v_m ~ v_j · w'`, returns `(w', j)`.
/// `Side::Left`: `v_m⁻¹ · w ~ w' · v_k⁻¹`, returns `(w', k)`.
///
/// With the rightmost-letter-first reading of permutations, `j = w(m)` and
/// `k = w⁻¹(m)`.
pub fn pi_action(w: &Word, m: Index, side: Side) -> Result<(Word, Index)> {
    require_pi_word(w)?;
    match side {
        Side::Right => Ok(pi_action_right(w.letters(), m)),
        Side::Left => {
            let (inv, k) = pi_action_right(w.invert().letters(), m);
            Ok((inv.invert(), k))
        }
    }
}

fn pi_action_right(w: &[GenSymbol], m: Index) -> (Word, Index) {
    let mut p = m;
    let mut rev: Vec<GenSymbol> = Vec::with_capacity(w.len() + 2);
    for &t in w.iter().rev() {
        let (a, b) = move_v_left(t, p);
        p = a[0];
        rev.extend(b.into_iter().rev());
    }
    rev.reverse();
    (Word::new(rev), p)
}

/// The two commutation formulas for `π̄^ε_m` and `v_{m+k}`, `k > 0`.
///
/// `Side::Right`: `π̄^ε_m v_{m+k} ~ (v_m ⋯ v_{m+k-2} v²_{m+k-1}) · (π̄^ε_{m+k+1} π^ε_{m+k} ⋯ π^ε_m)`.
/// `Side::Left`: `v_{m+k}⁻¹ π̄^ε_m ~ (π^ε_m ⋯ π^ε_{m+k} π̄^ε_{m+k+1}) · (v_m ⋯ v²_{m+k-1})⁻¹`.
pub fn opi_commute(m: Index, k: Index, sign: Sign, side: Side) -> Result<(Word, Word)> {
    if k == 0 {
        return Err(Error::IndexConstraint(
            "k must be positive; k = 0 is the diagonal relation".into(),
        ));
    }
    let pb = Family::PiBar.pow(m, sign);
    match side {
        Side::Right => {
            let (a, b) = move_v_left(pb, m + k);
            Ok((a.into_iter().map(|i| Family::V.pos(i)).collect(), Word::new(b)))
        }
        Side::Left => {
            let (x, es) = move_v_inverse_right(m + k, pb);
            Ok((Word::new(x), es.into_iter().map(|i| Family::V.neg(i)).collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::{equal_hat, GroupMode};
    use crate::perms::from_sigma_word;
    use crate::syntax::w;
    use crate::words::expand_bv_generators;
    use proptest::prelude::*;

    fn hat_equal(a: &Word, b: &Word) -> bool {
        equal_hat(
            &expand_bv_generators(a).unwrap(),
            &expand_bv_generators(b).unwrap(),
            GroupMode::BVHat,
        )
        .unwrap()
    }

    fn v_word(indices: &[Index], sign: Sign) -> Word {
        indices.iter().map(|&i| Family::V.pow(i, sign)).collect()
    }

    #[test]
    fn every_move_is_sound_in_the_braided_group() {
        for q in 0..=7 {
            for p in 0..=7 {
                for t in [
                    Family::V.neg(q),
                    Family::Pi.pos(q),
                    Family::Pi.neg(q),
                    Family::PiBar.pos(q),
                    Family::PiBar.neg(q),
                ] {
                    let (a, b) = move_v_left(t, p);
                    let lhs = Word::new(vec![t, Family::V.pos(p)]);
                    let rhs = v_word(&a, Sign::Pos).concat(&Word::new(b.clone()));
                    assert!(hat_equal(&lhs, &rhs), "{lhs} ≁ {rhs}");
                    assert!(!b.iter().any(|g| g.is(Family::V) && g.sign.is_pos()));
                }
            }
        }
    }

    #[test]
    fn pi_action_examples() {
        assert_eq!(pi_action(&w("p2"), 0, Side::Right).unwrap(), (w("p3"), 0));
        assert_eq!(pi_action(&w("p0"), 0, Side::Right).unwrap(), (w("p0 p1"), 1));
        assert_eq!(pi_action(&w("p0"), 3, Side::Right).unwrap(), (w("p0"), 3));
        assert!(pi_action(&w("pb0"), 0, Side::Right).is_err());
    }

    #[test]
    fn opi_commute_examples() {
        let (a, b) = opi_commute(0, 1, Sign::Pos, Side::Right).unwrap();
        assert_eq!((a, b), (w("v0 v0"), w("pb2 p1 p0")));
        let (a, b) = opi_commute(1, 2, Sign::Pos, Side::Right).unwrap();
        assert_eq!((a, b), (w("v1 v2 v2"), w("pb4 p3 p2 p1")));
        let (x, e) = opi_commute(1, 2, Sign::Neg, Side::Left).unwrap();
        assert_eq!((x, e), (w("p1' p2' p3' pb4'"), w("v2' v2' v1'")));
        assert!(opi_commute(0, 0, Sign::Pos, Side::Right).is_err());
    }

    #[test]
    fn opi_commute_round_trips_through_the_hat_group() {
        for m in 0..4 {
            for k in 1..4 {
                for e in [Sign::Pos, Sign::Neg] {
                    let (a, b) = opi_commute(m, k, e, Side::Right).unwrap();
                    let lhs = Word::new(vec![Family::PiBar.pow(m, e), Family::V.pos(m + k)]);
                    assert!(hat_equal(&lhs, &a.concat(&b)));
                    let (x, r) = opi_commute(m, k, e, Side::Left).unwrap();
                    let lhs = Word::new(vec![Family::V.neg(m + k), Family::PiBar.pow(m, e)]);
                    assert!(hat_equal(&lhs, &x.concat(&r)));
                }
            }
        }
    }

    fn arb_pi_word(max_index: u32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..=max_index, any::<bool>()), 0..max_len).prop_map(|v| {
            v.into_iter()
                .map(|(i, neg)| Family::Pi.pow(i, if neg { Sign::Neg } else { Sign::Pos }))
                .collect()
        })
    }

    fn sigma_image(w: &Word) -> crate::perms::Permutation {
        let s: Word = w.iter().map(|g| Family::Sigma.pow(g.index, g.sign)).collect();
        from_sigma_word(&s).unwrap()
    }

    proptest! {
        #[test]
        fn moved_index_is_the_permutation_image(x in arb_pi_word(5, 8), m in 0..8u32) {
            let (right, j) = pi_action(&x, m, Side::Right).unwrap();
            prop_assert_eq!(j, sigma_image(&x).apply(m));
            let (left, k) = pi_action(&x, m, Side::Left).unwrap();
            prop_assert_eq!(k, sigma_image(&x).inverse().apply(m));
            // index bound: letters ≤ K give letters ≤ K + 1
            let bound = x.max_index().map_or(0, |b| b + 1);
            prop_assert!(right.max_index().is_none_or(|b| b <= bound));
            prop_assert!(left.max_index().is_none_or(|b| b <= bound));
        }

        #[test]
        fn pi_action_is_sound(x in arb_pi_word(4, 6), m in 0..6u32) {
            let (right, j) = pi_action(&x, m, Side::Right).unwrap();
            let lhs = x.concat(&Word::new(vec![Family::V.pos(m)]));
            let rhs = Word::new(vec![Family::V.pos(j)]).concat(&right);
            prop_assert!(hat_equal(&lhs, &rhs));
            let (left, k) = pi_action(&x, m, Side::Left).unwrap();
            let lhs = Word::new(vec![Family::V.neg(m)]).concat(&x);
            let rhs = left.concat(&Word::new(vec![Family::V.neg(k)]));
            prop_assert!(hat_equal(&lhs, &rhs));
        }
    }
}
