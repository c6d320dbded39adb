//! The relation families of V and BV over the generators `v_n`, `π_n`, `π̄_n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Family, GenSymbol, Index, Sign, Word};

/// Which of the two groups a computation takes place in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BvMode {
    /// Thompson's group V: `π_m² = π̄_m² = 1` hold in addition.
    V,
    /// The braided group BV.
    BV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BvFamily {
    /// `v_q v_m = v_m v_{q+1}`, `m < q`
    VShift,
    /// `π_q v_m = v_m π_{q+1}`, `m < q`
    PiVLow,
    /// `π^ε_m v_m = v_{m+1} π^ε_m π^ε_{m+1}`
    PiVDiag,
    /// `π_q v_m = v_m π_q`, `m > q + 1`
    PiVFar,
    /// `π̄_q v_m = v_m π̄_{q+1}`, `m < q`
    PbarVLow,
    /// `π̄^ε_m v_m = π^ε_m π̄^ε_{m+1}`
    PbarVDiag,
    /// `π_q π_m = π_m π_q`, `|m − q| ≥ 2`
    PiFar,
    /// `π_m π_{m+1} π_m = π_{m+1} π_m π_{m+1}`
    PiBraid,
    /// `π̄_q π_m = π_m π̄_q`, `q ≥ m + 2`
    PbarPiFar,
    /// `π_m π̄_{m+1} π_m = π̄_{m+1} π_m π̄_{m+1}`
    PiPbarBraid,
    /// `π_m² = 1`, V only
    PiSquare,
    /// `π̄_m² = 1`, V only
    PbarSquare,
    /// `π^ε_m v_{m+1} = v_m π^ε_{m+1} π^ε_m`, a consequence of the diagonal relation
    PiVShift,
}

impl BvFamily {
    pub const ALL: [BvFamily; 13] = [
        BvFamily::VShift,
        BvFamily::PiVLow,
        BvFamily::PiVDiag,
        BvFamily::PiVFar,
        BvFamily::PbarVLow,
        BvFamily::PbarVDiag,
        BvFamily::PiFar,
        BvFamily::PiBraid,
        BvFamily::PbarPiFar,
        BvFamily::PiPbarBraid,
        BvFamily::PiSquare,
        BvFamily::PbarSquare,
        BvFamily::PiVShift,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BvFamily::VShift => "v-shift",
            BvFamily::PiVLow => "pi-v-low",
            BvFamily::PiVDiag => "pi-v-diag",
            BvFamily::PiVFar => "pi-v-far",
            BvFamily::PbarVLow => "pbar-v-low",
            BvFamily::PbarVDiag => "pbar-v-diag",
            BvFamily::PiFar => "pi-far",
            BvFamily::PiBraid => "pi-braid",
            BvFamily::PbarPiFar => "pbar-pi-far",
            BvFamily::PiPbarBraid => "pi-pbar-braid",
            BvFamily::PiSquare => "pi-square",
            BvFamily::PbarSquare => "pbar-square",
            BvFamily::PiVShift => "pi-v-shift",
        }
    }

    /// Holds in V but not in BV.
    pub fn v_only(self) -> bool {
        matches!(self, BvFamily::PiSquare | BvFamily::PbarSquare)
    }

    /// Family carries an exponent parameter `ε = ±1`.
    pub fn signed(self) -> bool {
        matches!(
            self,
            BvFamily::PiVDiag | BvFamily::PbarVDiag | BvFamily::PiVShift
        )
    }

    /// Family has a second index `q` besides `m`.
    pub fn two_indices(self) -> bool {
        matches!(
            self,
            BvFamily::VShift
                | BvFamily::PiVLow
                | BvFamily::PiVFar
                | BvFamily::PbarVLow
                | BvFamily::PiFar
                | BvFamily::PbarPiFar
        )
    }

    pub fn holds_in(self, mode: BvMode) -> bool {
        mode == BvMode::V || !self.v_only()
    }
}

impl fmt::Display for BvFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BvFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BvFamily::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One instance of a relation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BvRelation {
    pub family: BvFamily,
    pub m: Index,
    /// Second index; ignored by single-index families.
    pub q: Index,
    /// Exponent; must be `Pos` for unsigned families.
    pub sign: Sign,
}

impl BvRelation {
    pub fn new(family: BvFamily, m: Index, q: Index, sign: Sign) -> Self {
        BvRelation { family, m, q, sign }
    }

    fn check(&self) -> Result<()> {
        let (m, q) = (self.m, self.q);
        let ok = match self.family {
            BvFamily::VShift | BvFamily::PiVLow | BvFamily::PbarVLow => m < q,
            BvFamily::PiVFar => m > q + 1,
            BvFamily::PiFar => m.abs_diff(q) >= 2,
            BvFamily::PbarPiFar => q >= m + 2,
            _ => true,
        };
        if !ok {
            return Err(Error::IndexConstraint(format!(
                "{} does not allow m={m}, q={q}",
                self.family
            )));
        }
        if !self.family.signed() && self.sign.is_neg() {
            return Err(Error::IndexConstraint(format!(
                "{} has no exponent parameter",
                self.family
            )));
        }
        Ok(())
    }

    /// Both sides of the relation, after checking the side condition.
    pub fn sides(&self) -> Result<(Word, Word)> {
        self.check()?;
        let (m, q, e) = (self.m, self.q, self.sign);
        let v = |i| Family::V.pos(i);
        let p = |i| Family::Pi.pow(i, e);
        let pb = |i| Family::PiBar.pow(i, e);
        let (lhs, rhs): (Vec<GenSymbol>, Vec<GenSymbol>) = match self.family {
            BvFamily::VShift => (vec![v(q), v(m)], vec![v(m), v(q + 1)]),
            BvFamily::PiVLow => (vec![p(q), v(m)], vec![v(m), p(q + 1)]),
            BvFamily::PiVDiag => (vec![p(m), v(m)], vec![v(m + 1), p(m), p(m + 1)]),
            BvFamily::PiVFar => (vec![p(q), v(m)], vec![v(m), p(q)]),
            BvFamily::PbarVLow => (vec![pb(q), v(m)], vec![v(m), pb(q + 1)]),
            BvFamily::PbarVDiag => (vec![pb(m), v(m)], vec![p(m), pb(m + 1)]),
            BvFamily::PiFar => (vec![p(q), p(m)], vec![p(m), p(q)]),
            BvFamily::PiBraid => (vec![p(m), p(m + 1), p(m)], vec![p(m + 1), p(m), p(m + 1)]),
            BvFamily::PbarPiFar => (vec![pb(q), p(m)], vec![p(m), pb(q)]),
            BvFamily::PiPbarBraid => (
                vec![p(m), pb(m + 1), p(m)],
                vec![pb(m + 1), p(m), pb(m + 1)],
            ),
            BvFamily::PiSquare => (vec![p(m), p(m)], vec![]),
            BvFamily::PbarSquare => (vec![pb(m), pb(m)], vec![]),
            BvFamily::PiVShift => (vec![p(m), v(m + 1)], vec![v(m), p(m + 1), p(m)]),
        };
        Ok((Word::new(lhs), Word::new(rhs)))
    }

    /// Every instance of `family` whose letters all have index at most `bound`.
    pub fn enumerate(family: BvFamily, bound: Index) -> Vec<BvRelation> {
        let signs: &[Sign] = if family.signed() {
            &[Sign::Pos, Sign::Neg]
        } else {
            &[Sign::Pos]
        };
        let qs = if family.two_indices() { 0..=bound } else { 0..=0 };
        let mut out = Vec::new();
        for m in 0..=bound {
            for q in qs.clone() {
                for &sign in signs {
                    let rel = BvRelation::new(family, m, q, sign);
                    let Ok((lhs, rhs)) = rel.sides() else { continue };
                    let max = lhs.max_index().max(rhs.max_index()).unwrap_or(0);
                    if max <= bound {
                        out.push(rel);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BvRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={}", self.family, self.m)?;
        if self.family.two_indices() {
            write!(f, ",q={}", self.q)?;
        }
        if self.family.signed() {
            let e = if self.sign.is_pos() { "+" } else { "-" };
            write!(f, ",e={e}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// Replace the left side by the right side.
    Forward,
    /// Replace the right side by the left side.
    Backward,
}

/// Rewrites one occurrence of a relation side found at `position`.
pub fn apply_relation(
    rel: &BvRelation,
    direction: Direction,
    position: usize,
    w: &Word,
    mode: BvMode,
) -> Result<Word> {
    if !rel.family.holds_in(mode) {
        return Err(Error::NotInGroup(rel.to_string()));
    }
    let (lhs, rhs) = rel.sides()?;
    let (from, to) = match direction {
        Direction::Forward => (lhs, rhs),
        Direction::Backward => (rhs, lhs),
    };
    let end = position + from.len();
    if end > w.len() || w[position..end] != from[..] {
        return Err(Error::PatternMismatch {
            relation: rel.to_string(),
            position,
        });
    }
    let mut letters = w.letters().to_vec();
    letters.splice(position..end, to);
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::{equal_hat, GroupMode};
    use crate::syntax::w;
    use crate::words::expand_bv_generators;

    #[test]
    fn apply_examples() {
        let r = BvRelation::new(BvFamily::VShift, 1, 2, Sign::Pos);
        assert_eq!(apply_relation(&r, Direction::Forward, 0, &w("v2 v1"), BvMode::BV).unwrap(), w("v1 v3"));

        let r = BvRelation::new(BvFamily::PbarVDiag, 0, 0, Sign::Pos);
        assert_eq!(apply_relation(&r, Direction::Forward, 0, &w("pb0 v0"), BvMode::BV).unwrap(), w("p0 pb1"));

        let r = BvRelation::new(BvFamily::PiSquare, 3, 0, Sign::Pos);
        assert_eq!(apply_relation(&r, Direction::Forward, 0, &w("p3 p3"), BvMode::V).unwrap(), w(""));
        assert!(matches!(
            apply_relation(&r, Direction::Forward, 0, &w("p3 p3"), BvMode::BV),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn apply_reports_errors() {
        let r = BvRelation::new(BvFamily::VShift, 2, 1, Sign::Pos);
        assert!(matches!(
            apply_relation(&r, Direction::Forward, 0, &w("v1 v2"), BvMode::BV),
            Err(Error::IndexConstraint(_))
        ));
        let r = BvRelation::new(BvFamily::VShift, 1, 2, Sign::Pos);
        assert!(matches!(
            apply_relation(&r, Direction::Forward, 1, &w("v2 v1"), BvMode::BV),
            Err(Error::PatternMismatch { position: 1, .. })
        ));
        let r = BvRelation::new(BvFamily::PiVLow, 0, 2, Sign::Neg);
        assert!(r.sides().is_err());
    }

    #[test]
    fn backward_application_inverts_forward() {
        let r = BvRelation::new(BvFamily::PiVDiag, 2, 0, Sign::Neg);
        let start = w("v0 p2' v2 v5");
        let fwd = apply_relation(&r, Direction::Forward, 1, &start, BvMode::BV).unwrap();
        assert_eq!(fwd, w("v0 v3 p2' p3' v5"));
        let back = apply_relation(&r, Direction::Backward, 1, &fwd, BvMode::BV).unwrap();
        assert_eq!(back, start);
    }

    #[test]
    fn far_family_enumeration_matches_side_condition() {
        let got: Vec<(Index, Index)> = BvRelation::enumerate(BvFamily::PiVFar, 4)
            .into_iter()
            .map(|r| (r.q, r.m))
            .collect();
        assert_eq!(got, vec![(0, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4)]);
        assert!(BvRelation::enumerate(BvFamily::VShift, 0).is_empty());
    }

    #[test]
    fn family_ids_round_trip() {
        for f in BvFamily::ALL {
            assert_eq!(f.id().parse::<BvFamily>().unwrap(), f);
        }
        assert!("nope".parse::<BvFamily>().is_err());
    }

    #[test]
    fn every_instance_holds_under_expansion() {
        for family in BvFamily::ALL {
            let mode = if family.v_only() { GroupMode::VHat } else { GroupMode::BVHat };
            for rel in BvRelation::enumerate(family, 6) {
                let (lhs, rhs) = rel.sides().unwrap();
                let a = expand_bv_generators(&lhs).unwrap();
                let b = expand_bv_generators(&rhs).unwrap();
                assert!(equal_hat(&a, &b, mode).unwrap(), "{rel} fails");
            }
        }
    }

    #[test]
    fn square_families_fail_in_the_braided_group() {
        for family in [BvFamily::PiSquare, BvFamily::PbarSquare] {
            for rel in BvRelation::enumerate(family, 4) {
                let (lhs, rhs) = rel.sides().unwrap();
                let a = expand_bv_generators(&lhs).unwrap();
                let b = expand_bv_generators(&rhs).unwrap();
                assert!(!equal_hat(&a, &b, GroupMode::BVHat).unwrap(), "{rel} holds in BV̂");
            }
        }
    }
}
