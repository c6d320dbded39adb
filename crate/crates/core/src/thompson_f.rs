//! The positive monoid of Thompson's group F and the word problem in F.
//!
//! Positive words in the `λ_i` are rewritten with `λ_q λ_m → λ_m λ_{q+1}`
//! (`m < q`) until the index sequence is nondecreasing; that sequence is the
//! unique normal form of the monoid element. Group words are turned into
//! fractions `P N⁻¹` by pushing every inverse letter to the right end.

use serde::Serialize;

use crate::error::Result;
use crate::words::{Family, Index, Sign, Word};

/// Nondecreasing index sequence `i₀ ≤ i₁ ≤ … ≤ i_k` standing for `λ_{i₀} ⋯ λ_{i_k}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FNormal(Vec<Index>);

impl FNormal {
    pub fn identity() -> Self {
        FNormal(Vec::new())
    }

    /// Normalizes an arbitrary index sequence read as a positive word.
    pub fn from_indices(indices: Vec<Index>) -> Self {
        normalize_indices(indices)
    }

    pub fn indices(&self) -> &[Index] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        self.0.iter().map(|&i| Family::Lambda.pos(i)).collect()
    }
}

/// Positions `i` where `seq[i] > seq[i+1]`, i.e. where the rewrite rule applies.
pub fn rewrite_sites(seq: &[Index]) -> Vec<usize> {
    (0..seq.len().saturating_sub(1))
        .filter(|&i| seq[i] > seq[i + 1])
        .collect()
}

/// Applies `λ_q λ_m → λ_m λ_{q+1}` at position `i`. Returns `false` (and leaves
/// the sequence untouched) when the rule does not apply there.
pub fn rewrite_at(seq: &mut [Index], i: usize) -> bool {
    if i + 1 >= seq.len() || seq[i] <= seq[i + 1] {
        return false;
    }
    let q = seq[i];
    seq[i] = seq[i + 1];
    seq[i + 1] = q + 1;
    true
}

/// Repeatedly fixes the leftmost descent.
fn normalize_indices(mut seq: Vec<Index>) -> FNormal {
    // everything left of `i` is sorted; a fix at `i` can only create a new
    // descent at `i - 1`
    let mut i = 0;
    while i + 1 < seq.len() {
        if rewrite_at(&mut seq, i) {
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    FNormal(seq)
}

/// Normal form of a positive `λ` word.
pub fn normalize_monoid(w: &Word) -> Result<FNormal> {
    w.require_families(&[Family::Lambda], "a positive λ word")?;
    if let Some(&letter) = w.iter().find(|g| g.sign.is_neg()) {
        return Err(crate::error::Error::Alphabet {
            letter,
            context: "a positive λ word",
        });
    }
    Ok(normalize_indices(w.iter().map(|g| g.index).collect()))
}

/// Writes `w` as `P N⁻¹` with `P`, `N` positive, both normalized.
///
/// Inverse letters travel right using
/// `λ_m⁻¹ λ_q → λ_{q+1} λ_m⁻¹` (`m < q`), `λ_m⁻¹ λ_q → λ_q λ_{m+1}⁻¹` (`q < m`)
/// and `λ_m⁻¹ λ_m → ε`. The input is freely reduced first, so adjacent
/// `λ_m λ_m⁻¹` pairs vanish instead of surviving as `λ_m · λ_m⁻¹`.
pub fn f_fraction(w: &Word) -> Result<(FNormal, FNormal)> {
    w.require_families(&[Family::Lambda], "a λ word")?;
    let w = w.free_reduce();
    let mut positive: Vec<Index> = Vec::new();
    // negative suffix λ_{a₁}⁻¹ ⋯ λ_{a_k}⁻¹
    let mut negative: Vec<Index> = Vec::new();
    for g in w.iter() {
        match g.sign {
            Sign::Neg => negative.push(g.index),
            Sign::Pos => {
                let mut q = g.index;
                let mut cancelled = None;
                for (slot, a) in negative.iter_mut().enumerate().rev() {
                    if *a < q {
                        q += 1;
                    } else if q < *a {
                        *a += 1;
                    } else {
                        cancelled = Some(slot);
                        break;
                    }
                }
                match cancelled {
                    Some(slot) => {
                        negative.remove(slot);
                    }
                    None => positive.push(q),
                }
            }
        }
    }
    negative.reverse();
    Ok((normalize_indices(positive), normalize_indices(negative)))
}

pub fn is_trivial_f(w: &Word) -> Result<bool> {
    let (p, n) = f_fraction(w)?;
    Ok(p == n)
}

pub fn equal_f(w1: &Word, w2: &Word) -> Result<bool> {
    is_trivial_f(&w1.concat(&w2.invert()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::w;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, VecDeque};

    /// Every normal form reachable by applying the rule at any site, in any order.
    fn all_terminal_forms(start: Vec<Index>) -> BTreeSet<Vec<Index>> {
        let mut seen = BTreeSet::new();
        let mut terminal = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(seq) = queue.pop_front() {
            if !seen.insert(seq.clone()) {
                continue;
            }
            let sites = rewrite_sites(&seq);
            if sites.is_empty() {
                terminal.insert(seq);
                continue;
            }
            for i in sites {
                let mut next = seq.clone();
                rewrite_at(&mut next, i);
                queue.push_back(next);
            }
        }
        terminal
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_monoid(&w("l3 l1")).unwrap().indices(), &[1, 4]);
        assert_eq!(normalize_monoid(&w("l2 l2")).unwrap().indices(), &[2, 2]);
        assert_eq!(normalize_monoid(&w("l5 l3 l1")).unwrap().indices(), &[1, 4, 7]);
    }

    #[test]
    fn brute_force_search_confirms_unique_normal_form() {
        let forms = all_terminal_forms(vec![5, 3, 1]);
        assert_eq!(forms, BTreeSet::from([vec![1, 4, 7]]));
        let forms = all_terminal_forms(vec![4, 0, 3, 1, 0]);
        assert_eq!(forms.len(), 1);
        assert_eq!(
            forms.into_iter().next().unwrap(),
            normalize_monoid(&w("l4 l0 l3 l1 l0")).unwrap().indices()
        );
    }

    #[test]
    fn normalize_rejects_bad_letters() {
        assert!(normalize_monoid(&w("l1 l0'")).is_err());
        assert!(normalize_monoid(&w("l1 s0")).is_err());
    }

    #[test]
    fn fraction_examples() {
        let (p, n) = f_fraction(&w("l1' l3")).unwrap();
        assert_eq!((p.indices(), n.indices()), (&[4][..], &[1][..]));
        let (p, n) = f_fraction(&w("l0 l0'")).unwrap();
        assert!(p.is_empty() && n.is_empty());
        let (p, n) = f_fraction(&w("l2' l0")).unwrap();
        assert_eq!((p.indices(), n.indices()), (&[0][..], &[3][..]));
        let (p, n) = f_fraction(&Word::empty()).unwrap();
        assert!(p.is_empty() && n.is_empty());
    }

    #[test]
    fn triviality_examples() {
        assert!(is_trivial_f(&w("l1 l0 l0' l1'")).unwrap());
        assert!(is_trivial_f(&w("l3 l1 l4' l1'")).unwrap());
        assert!(!is_trivial_f(&w("l1 l2'")).unwrap());
    }

    #[test]
    fn equality_examples() {
        assert!(equal_f(&w("l3 l1"), &w("l1 l4")).unwrap());
        assert!(equal_f(&w("l0"), &w("l0")).unwrap());
        assert!(!equal_f(&w("l1"), &w("l2")).unwrap());
    }

    #[test]
    fn conjugation_by_lower_letter_shifts_index() {
        for m in 0..6 {
            for q in m + 1..9 {
                let lhs = Word::new(vec![
                    Family::Lambda.neg(m),
                    Family::Lambda.pos(q),
                    Family::Lambda.pos(m),
                ]);
                assert!(equal_f(&lhs, &Word::new(vec![Family::Lambda.pos(q + 1)])).unwrap());
            }
        }
    }

    fn lambda_word(max_len: usize, max_index: u32) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..=max_index, any::<bool>()), 0..max_len).prop_map(|v| {
            v.into_iter()
                .map(|(i, neg)| Family::Lambda.pow(i, if neg { Sign::Neg } else { Sign::Pos }))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn normalization_preserves_length_and_sorts(seq in prop::collection::vec(0..9u32, 0..13)) {
            let nf = normalize_indices(seq.clone());
            prop_assert_eq!(nf.len(), seq.len());
            prop_assert!(nf.indices().windows(2).all(|p| p[0] <= p[1]));
        }

        #[test]
        fn normalization_agrees_with_exhaustive_search(seq in prop::collection::vec(0..6u32, 0..6)) {
            let forms = all_terminal_forms(seq.clone());
            prop_assert_eq!(forms.len(), 1);
            let only = forms.into_iter().next().unwrap();
            prop_assert_eq!(only, normalize_indices(seq).indices().to_vec());
        }

        #[test]
        fn fraction_represents_the_word(word in lambda_word(14, 6)) {
            let (p, n) = f_fraction(&word).unwrap();
            let rebuilt = p.to_word().concat(&n.to_word().invert());
            prop_assert!(is_trivial_f(&word.concat(&rebuilt.invert())).unwrap());
        }

        #[test]
        fn word_times_inverse_is_trivial(word in lambda_word(14, 6)) {
            prop_assert!(is_trivial_f(&word.concat(&word.invert())).unwrap());
        }
    }
}
