//! Controls for the verifier: instances with a known verdict and deliberately
//! wrong rewriting tables. A verifier that answered `holds` to everything
//! would fail all of these.

use serde::Serialize;

use crate::braid::BraidLetter;
use crate::hat::{PushRules, StandardRules};
use crate::presentations::{Group, RelationInstance, Verdict};
use crate::syntax::parse_word;
use crate::words::{Family, GenSymbol, Index};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Control {
    pub instance: RelationInstance,
    pub expected: Verdict,
}

fn control(name: &str, group: Group, lhs: &str, rhs: &str, expected: Verdict) -> Control {
    let word = |t| parse_word(t).expect("control tables are well formed");
    Control {
        instance: RelationInstance::new("control", format!("control/{name}"), group, word(lhs), word(rhs)),
        expected,
    }
}

/// Equalities that must be refuted, and squares whose verdict depends on the group.
pub fn nontriviality_controls() -> Vec<Control> {
    use Verdict::*;
    vec![
        control("lambda1-ne-lambda2", Group::F, "l1", "l2", Fails),
        control("v1-ne-v2", Group::BV, "v1", "v2", Fails),
        control("v1-ne-v2", Group::V, "v1", "v2", Fails),
        control("v2-is-v0-conjugate-of-v1", Group::BV, "v2", "v0' v1 v0", Holds),
        control("pi0-square", Group::V, "p0 p0", "", Holds),
        control("pi0-square", Group::BV, "p0 p0", "", Fails),
        control("sigma0-square", Group::VHat, "s0 s0", "", Holds),
        control("sigma0-square", Group::BVHat, "s0 s0", "", Fails),
    ]
}

/// Relators with one deliberate mistake each; every one must be reported as failing.
pub fn corrupted_relators() -> Vec<Control> {
    use Verdict::Fails;
    vec![
        control("corrupt/sigma-lambda-diag-order", Group::BVHat, "s0 l0", "l1 s1 s0", Fails),
        control("corrupt/sigma-lambda-diag-order", Group::VHat, "s0 l0", "l1 s1 s0", Fails),
        control("corrupt/sigma-lambda-low-unshifted", Group::BVHat, "s2 l0", "l0 s2", Fails),
        control("corrupt/sigma-lambda-diag-sign", Group::BVHat, "s0' l0", "l1 s0 s1", Fails),
        control("corrupt/lambda-shift-unshifted", Group::F, "l2 l0", "l0 l2", Fails),
        control("corrupt/sigma-braid-order", Group::SInf, "s0 s1 s0", "s1 s0 s0", Fails),
        control("corrupt/sigma-far-adjacent", Group::BInf, "s0 s1", "s1 s0", Fails),
        control("corrupt/sigma-square", Group::BInf, "s1 s1", "", Fails),
        control("corrupt/v-shift-unshifted", Group::BV, "v2 v1", "v1 v2", Fails),
        control("corrupt/pi-v-diag-order", Group::BV, "p0 v0", "v1 p1 p0", Fails),
        control("corrupt/pi-v-diag-order", Group::V, "p0 v0", "v1 p1 p0", Fails),
        control("corrupt/pbar-v-diag-index", Group::V, "pb0 v0", "p0 pb2", Fails),
        control("corrupt/pi-braid-order", Group::V, "p0 p1 p0", "p1 p0 p0", Fails),
        control("corrupt/pbar-square", Group::BV, "pb0 pb0", "", Fails),
        control("corrupt/pi-pbar-far-adjacent", Group::BV, "pb1 p0", "p0 pb1", Fails),
        control("corrupt/finite-lambda-conjugation", Group::VHat, "l1' l2 l1", "l4", Fails),
    ]
}

/// Ways a hat rewriting table can be wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// `σ_m λ_m → λ_{m+1} σ_{m+1} σ_m` (factors swapped)
    DiagSwapped,
    /// `σ_q λ_m → λ_m σ_q` for `m < q` (index not shifted)
    LowUnshifted,
    /// `σ_q λ_m → λ_m σ_{q+1}` for `m > q + 1` (spurious shift)
    FarShifted,
    /// `λ_m⁻¹ λ_q → λ_q λ_m⁻¹` for `q < m` (index not shifted)
    InverseUnshifted,
    /// `λ_m⁻¹ σ_m → σ_m σ_{m+1} λ_{m+1}⁻¹` (factors swapped)
    InverseDiagSwapped,
}

impl Fault {
    pub const ALL: [Fault; 5] = [
        Fault::DiagSwapped,
        Fault::LowUnshifted,
        Fault::FarShifted,
        Fault::InverseUnshifted,
        Fault::InverseDiagSwapped,
    ];
}

/// The standard table with one fault injected.
#[derive(Debug, Clone, Copy)]
pub struct CorruptedRules(pub Fault);

impl PushRules for CorruptedRules {
    fn sigma_past_lambda(&self, s: BraidLetter, m: Index) -> (Index, Vec<BraidLetter>) {
        let (q, e) = (s.index, s.sign);
        match self.0 {
            Fault::DiagSwapped if m == q => (m + 1, vec![BraidLetter::new(q + 1, e), BraidLetter::new(q, e)]),
            Fault::LowUnshifted if m < q => (m, vec![s]),
            Fault::FarShifted if m > q + 1 => (m, vec![BraidLetter::new(q + 1, e)]),
            _ => StandardRules.sigma_past_lambda(s, m),
        }
    }

    fn lambda_inverse_past(&self, m: Index, x: GenSymbol) -> (Vec<GenSymbol>, Option<Index>) {
        match self.0 {
            Fault::InverseUnshifted if x.is(Family::Lambda) && x.index < m => (vec![x], Some(m)),
            Fault::InverseDiagSwapped if x.is(Family::Sigma) && x.index == m => {
                let sig = |i| Family::Sigma.pow(i, x.sign);
                (vec![sig(m), sig(m + 1)], Some(m + 1))
            }
            _ => StandardRules.lambda_inverse_past(m, x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hat::DEFAULT_HAT_STEP_CAP;
    use crate::presentations::{all_instances, run_controls, verify_with};

    #[test]
    fn controls_get_their_expected_verdicts() {
        let all: Vec<_> = nontriviality_controls().into_iter().chain(corrupted_relators()).collect();
        for c in run_controls(&all, &StandardRules, DEFAULT_HAT_STEP_CAP) {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn every_corrupted_table_is_caught_on_hat_families() {
        let instances: Vec<_> = all_instances(3, None)
            .unwrap()
            .into_iter()
            .filter(|i| matches!(i.group, Group::VHat | Group::BVHat))
            .collect();
        for fault in Fault::ALL {
            let rules = CorruptedRules(fault);
            let failing = instances
                .iter()
                .filter(|i| verify_with(i, &rules, 1_000_000).verdict != Verdict::Holds)
                .count();
            assert!(failing > 0, "{fault:?} went unnoticed");
        }
    }
}
