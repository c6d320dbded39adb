//! Relation families, finite presentations and their generator definitions.

use crate::error::{Error, Result};
use crate::lmr::relations::{BvFamily, BvMode, BvRelation};
use crate::presentations::{Group, RelationInstance};
use crate::syntax::parse_word;
use crate::words::{Family, GenSymbol, Index, Sign, Word};

/// Generating scheme for the finite presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Base `{λ₀, σ₀, σ₁}`; `λ₁ = σ₀λ₀σ₁⁻¹σ₀⁻¹`, and `λ_i`, `σ_i` for `i ≥ 2`
    /// are conjugates of `λ₁`, `σ₁` by powers of `λ₀`.
    Hat,
    /// Base `{v₀, v₁, π̄₀, π̄₁}`; `π_i = π̄_i v_i π̄_{i+1}⁻¹`.
    BvV,
    /// Base `{π₀, π₁, π̄₀, π̄₁}`; `v_i = π̄_i⁻¹ π_i π̄_{i+1}`.
    BvPi,
}

/// `c^{1-i} x c^{i-1}`
fn conjugate_down(c: Family, x: GenSymbol, i: Index) -> Word {
    let k = i as i64 - 1;
    let mut letters = Word::power(c, 0, -k).into_letters();
    letters.push(x);
    letters.extend(Word::power(c, 0, k));
    Word::new(letters)
}

/// Defining word of a positive non-base letter, or `None` for a base letter.
fn definition(family: Family, i: Index, scheme: Scheme) -> Result<Option<Word>> {
    use Family::*;
    let def = match (scheme, family) {
        (Scheme::Hat, Lambda) => match i {
            0 => None,
            1 => Some(Word::new(vec![Sigma.pos(0), Lambda.pos(0), Sigma.neg(1), Sigma.neg(0)])),
            _ => Some(conjugate_down(Lambda, Lambda.pos(1), i)),
        },
        (Scheme::Hat, Sigma) => (i >= 2).then(|| conjugate_down(Lambda, Sigma.pos(1), i)),
        (Scheme::BvV, V) | (Scheme::BvV, PiBar) | (Scheme::BvPi, Pi) | (Scheme::BvPi, PiBar) => {
            (i >= 2).then(|| conjugate_down(V, family.pos(1), i))
        }
        (Scheme::BvV, Pi) => Some(Word::new(vec![PiBar.pos(i), V.pos(i), PiBar.neg(i + 1)])),
        (Scheme::BvPi, V) => Some(Word::new(vec![PiBar.neg(i), Pi.pos(i), PiBar.pos(i + 1)])),
        _ => {
            return Err(Error::Alphabet {
                letter: family.pos(i),
                context: "the chosen generating scheme",
            })
        }
    };
    Ok(def)
}

fn expand_into(g: GenSymbol, scheme: Scheme, out: &mut Vec<GenSymbol>) -> Result<()> {
    match definition(g.family, g.index, scheme)? {
        None => out.push(g),
        Some(def) => {
            let def = if g.sign.is_pos() { def } else { def.invert() };
            for x in def {
                expand_into(x, scheme, out)?;
            }
        }
    }
    Ok(())
}

/// Replaces every non-base letter by its definition until only base letters remain.
pub fn expand_finite_defs(w: &Word, scheme: Scheme) -> Result<Word> {
    let mut out = Vec::new();
    for &g in w.iter() {
        expand_into(g, scheme, &mut out)?;
    }
    Ok(Word::new(out).free_reduce())
}

const HAT_FAMILIES: [&str; 8] = [
    "lambda-shift",
    "sigma-square",
    "sigma-far",
    "sigma-braid",
    "sigma-lambda-low",
    "sigma-lambda-diag",
    "sigma-lambda-next",
    "sigma-lambda-far",
];

const PERM_FAMILIES: [&str; 5] = ["sinf/square", "sinf/far", "sinf/braid", "binf/far", "binf/braid"];

const ELIMINATION_FAMILIES: [BvFamily; 10] = [
    BvFamily::VShift,
    BvFamily::PiVDiag,
    BvFamily::PiVFar,
    BvFamily::PbarVLow,
    BvFamily::PiFar,
    BvFamily::PiBraid,
    BvFamily::PbarPiFar,
    BvFamily::PiPbarBraid,
    BvFamily::PiSquare,
    BvFamily::PbarSquare,
];

const FINITE_FAMILIES: [&str; 12] = [
    "vhat-finite",
    "bvhat-finite",
    "bv-finite",
    "v-finite",
    "bv-finite-pi",
    "v-finite-pi",
    "bv-schemes",
    "v-schemes",
    "bv-on-v-pbar",
    "v-on-v-pbar",
    "bv-on-pi-pbar",
    "v-on-pi-pbar",
];

/// Every family id accepted by [`instantiate_family`].
pub fn family_ids() -> Vec<String> {
    let mut ids = Vec::new();
    for f in HAT_FAMILIES {
        ids.push(format!("vhat/{f}"));
        if f != "sigma-square" {
            ids.push(format!("bvhat/{f}"));
        }
    }
    ids.extend(PERM_FAMILIES.map(String::from));
    ids.push("f/lambda-shift".to_string());
    for fam in BvFamily::ALL {
        if fam.holds_in(BvMode::BV) {
            ids.push(format!("bv/{}", fam.id()));
        }
        ids.push(format!("v/{}", fam.id()));
    }
    ids.extend(FINITE_FAMILIES.map(String::from));
    ids
}

/// All instances of a family with every index at most `bound`.
///
/// Finite presentations and scheme definitions have fixed indices; for them
/// `bound` only limits which generators the scheme comparison covers.
pub fn instantiate_family(id: &str, bound: Index) -> Result<Vec<RelationInstance>> {
    let unknown = || Error::UnknownFamily(id.to_string());
    let (prefix, name) = id.split_once('/').unwrap_or((id, ""));
    let out = match prefix {
        "vhat" | "bvhat" if HAT_FAMILIES.contains(&name) => {
            let group = if prefix == "vhat" { Group::VHat } else { Group::BVHat };
            if group == Group::BVHat && name == "sigma-square" {
                return Err(unknown());
            }
            hat_family(id, name, group, bound)
        }
        "sinf" | "binf" if PERM_FAMILIES.contains(&id) => {
            let group = if prefix == "sinf" { Group::SInf } else { Group::BInf };
            hat_family(id, &format!("sigma-{name}"), group, bound)
        }
        "f" if name == "lambda-shift" => hat_family(id, name, Group::F, bound),
        "bv" | "v" => {
            let family: BvFamily = name.parse()?;
            let (group, mode) = if prefix == "bv" { (Group::BV, BvMode::BV) } else { (Group::V, BvMode::V) };
            if !family.holds_in(mode) {
                return Err(unknown());
            }
            BvRelation::enumerate(family, bound)
                .into_iter()
                .map(|rel| {
                    let (lhs, rhs) = rel.sides()?;
                    Ok(RelationInstance::new(id, format!("{id}{}", params(&rel)), group, lhs, rhs))
                })
                .collect::<Result<_>>()?
        }
        "vhat-finite" => hat_finite(id, Group::VHat),
        "bvhat-finite" => hat_finite(id, Group::BVHat),
        "bv-finite" => bv_finite(id, Group::BV, Scheme::BvV),
        "v-finite" => bv_finite(id, Group::V, Scheme::BvV),
        "bv-finite-pi" => bv_finite(id, Group::BV, Scheme::BvPi),
        "v-finite-pi" => bv_finite(id, Group::V, Scheme::BvPi),
        "bv-schemes" => scheme_agreement(id, Group::BV, bound)?,
        "v-schemes" => scheme_agreement(id, Group::V, bound)?,
        "bv-on-v-pbar" => eliminated_generator(id, Group::BV, Family::Pi, bound)?,
        "v-on-v-pbar" => eliminated_generator(id, Group::V, Family::Pi, bound)?,
        "bv-on-pi-pbar" => eliminated_generator(id, Group::BV, Family::V, bound)?,
        "v-on-pi-pbar" => eliminated_generator(id, Group::V, Family::V, bound)?,
        _ => return Err(unknown()),
    };
    Ok(out)
}

/// `(m=..,q=..,e=..)` suffix of a relation's display form.
fn params(rel: &BvRelation) -> String {
    let s = rel.to_string();
    s[s.find('(').unwrap_or(s.len())..].to_string()
}

fn hat_family(id: &str, name: &str, group: Group, bound: Index) -> Vec<RelationInstance> {
    let l = |i| Family::Lambda.pos(i);
    let s = |i, e| Family::Sigma.pow(i, e);
    let signs: &[Sign] = if group == Group::BVHat { &[Sign::Pos, Sign::Neg] } else { &[Sign::Pos] };
    let etag = |e: Sign| match (group, e) {
        (Group::BVHat, Sign::Pos) => ",e=+",
        (Group::BVHat, Sign::Neg) => ",e=-",
        _ => "",
    };
    let mut out = Vec::new();
    let mut push = |tag: String, lhs: Vec<GenSymbol>, rhs: Vec<GenSymbol>| {
        out.push(RelationInstance::new(id, format!("{id}({tag})"), group, Word::new(lhs), Word::new(rhs)));
    };
    let pos = Sign::Pos;
    for m in 0..=bound {
        for q in 0..=bound {
            match name {
                "lambda-shift" if m < q && q < bound => {
                    push(format!("m={m},q={q}"), vec![l(q), l(m)], vec![l(m), l(q + 1)])
                }
                "sigma-far" if q >= m + 2 => {
                    push(format!("m={m},n={q}"), vec![s(m, pos), s(q, pos)], vec![s(q, pos), s(m, pos)])
                }
                "sigma-lambda-low" if m < q && q < bound => {
                    for &e in signs {
                        push(format!("m={m},q={q}{}", etag(e)), vec![s(q, e), l(m)], vec![l(m), s(q + 1, e)]);
                    }
                }
                "sigma-lambda-far" if m > q + 1 => {
                    for &e in signs {
                        push(format!("m={m},q={q}{}", etag(e)), vec![s(q, e), l(m)], vec![l(m), s(q, e)]);
                    }
                }
                _ => {}
            }
        }
        match name {
            "sigma-square" => push(format!("m={m}"), vec![s(m, pos), s(m, pos)], vec![]),
            "sigma-braid" if m < bound => push(
                format!("m={m}"),
                vec![s(m, pos), s(m + 1, pos), s(m, pos)],
                vec![s(m + 1, pos), s(m, pos), s(m + 1, pos)],
            ),
            "sigma-lambda-diag" if m < bound => {
                for &e in signs {
                    push(format!("m={m}{}", etag(e)), vec![s(m, e), l(m)], vec![l(m + 1), s(m, e), s(m + 1, e)]);
                }
            }
            "sigma-lambda-next" if m < bound => {
                for &e in signs {
                    push(format!("m={m}{}", etag(e)), vec![s(m, e), l(m + 1)], vec![l(m), s(m + 1, e), s(m, e)]);
                }
            }
            _ => {}
        }
    }
    out
}

fn parsed(text: &str) -> Word {
    parse_word(text).expect("relator tables are well formed")
}

const HAT_FINITE_COMMON: [(&str, &str); 18] = [
    ("l1' l2 l1", "l3"),
    ("l1' l3 l1", "l4"),
    ("s0 s2", "s2 s0"),
    ("s0 s3", "s3 s0"),
    ("s1 s3", "s3 s1"),
    ("s1 s4", "s4 s1"),
    ("s0 s1 s0", "s1 s0 s1"),
    ("s1 s2 s1", "s2 s1 s2"),
    ("l1' s2 l1", "s3"),
    ("l1' s3 l1", "s4"),
    ("s0 l0", "l1 s0 s1"),
    ("s1 l1", "l2 s1 s2"),
    ("s0 l2", "l2 s0"),
    ("s0 l3", "l3 s0"),
    ("s1 l3", "l3 s1"),
    ("s1 l4", "l4 s1"),
    ("s0' l0", "l1 s0' s1'"),
    ("s1' l1", "l2 s1' s2'"),
];

const HAT_FINITE_SQUARES: [(&str, &str); 2] = [("s0 s0", ""), ("s1 s1", "")];

const BV_FINITE: [(&str, &str); 30] = [
    ("v2 v1", "v1 v3"),
    ("v3 v1", "v1 v4"),
    ("pb2 v1", "v1 pb3"),
    ("pb3 v1", "v1 pb4"),
    ("p0 v0", "v1 p0 p1"),
    ("p1 v1", "v2 p1 p2"),
    ("p0' v0", "v1 p0' p1'"),
    ("p1' v1", "v2 p1' p2'"),
    ("p0 v2", "v2 p0"),
    ("p0 v3", "v3 p0"),
    ("p1 v3", "v3 p1"),
    ("p1 v4", "v4 p1"),
    ("p0", "pb1' v0' pb0"),
    ("p1", "pb2' v1' pb1"),
    ("p0 p2", "p2 p0"),
    ("p0 p3", "p3 p0"),
    ("p1 p3", "p3 p1"),
    ("p1 p4", "p4 p1"),
    ("p0 p1 p0", "p1 p0 p1"),
    ("p1 p2 p1", "p2 p1 p2"),
    ("pb2 p0", "p0 pb2"),
    ("pb3 p0", "p0 pb3"),
    ("pb3 p1", "p1 pb3"),
    ("pb4 p1", "p1 pb4"),
    ("p0 pb1 p0", "pb1 p0 pb1"),
    ("p1 pb2 p1", "pb2 p1 pb2"),
    // the V presentation adds these four
    ("pb0 pb0", ""),
    ("pb1 pb1", ""),
    ("p0 p0", ""),
    ("p1 p1", ""),
];

fn finite_instance(id: &str, group: Group, lhs: &str, rhs: &str, scheme: Scheme) -> RelationInstance {
    let expand = |t| expand_finite_defs(&parsed(t), scheme).expect("relators use scheme letters");
    RelationInstance::new(id, format!("{id}/{lhs} = {rhs}"), group, expand(lhs), expand(rhs))
}

/// A defining equation `x = def(x)` as an instance, unexpanded on the left.
fn definition_instance(id: &str, group: Group, x: GenSymbol, scheme: Scheme) -> Result<RelationInstance> {
    let lhs = Word::new(vec![x]);
    let rhs = expand_finite_defs(&lhs, scheme)?;
    Ok(RelationInstance::new(id, format!("{id}/def {x}"), group, lhs, rhs))
}

fn hat_finite(id: &str, group: Group) -> Vec<RelationInstance> {
    let relators = match group {
        Group::VHat => HAT_FINITE_COMMON[..16].iter().chain(&HAT_FINITE_SQUARES).collect::<Vec<_>>(),
        _ => HAT_FINITE_COMMON.iter().collect(),
    };
    let mut out: Vec<_> = relators
        .into_iter()
        .map(|(l, r)| finite_instance(id, group, l, r, Scheme::Hat))
        .collect();
    let defined = (1..=4).map(|i| Family::Lambda.pos(i)).chain((2..=4).map(|i| Family::Sigma.pos(i)));
    for x in defined {
        out.push(definition_instance(id, group, x, Scheme::Hat).expect("hat letters"));
    }
    out
}

fn bv_finite(id: &str, group: Group, scheme: Scheme) -> Vec<RelationInstance> {
    let count = if group == Group::V { BV_FINITE.len() } else { BV_FINITE.len() - 4 };
    let mut out: Vec<_> = BV_FINITE[..count]
        .iter()
        .map(|(l, r)| finite_instance(id, group, l, r, scheme))
        .collect();
    for i in 0..=4 {
        for f in [Family::V, Family::Pi, Family::PiBar] {
            if definition(f, i, scheme).expect("BV letters").is_some() {
                out.push(definition_instance(id, group, f.pos(i), scheme).expect("BV letters"));
            }
        }
    }
    out
}

/// Both finite generating schemes define the same element for each generator.
fn scheme_agreement(id: &str, group: Group, bound: Index) -> Result<Vec<RelationInstance>> {
    let mut out = Vec::new();
    for i in 0..=bound {
        for f in [Family::V, Family::Pi, Family::PiBar] {
            let x = Word::new(vec![f.pos(i)]);
            out.push(RelationInstance::new(
                id,
                format!("{id}/{}", f.pos(i)),
                group,
                expand_finite_defs(&x, Scheme::BvV)?,
                expand_finite_defs(&x, Scheme::BvPi)?,
            ));
        }
    }
    Ok(out)
}

/// The infinite presentations on `{v_n, π̄_n}` (`defined = Pi`) or on
/// `{π_n, π̄_n}` (`defined = V`): each relation is rewritten through the
/// definition of the missing generator, and the definitions themselves are
/// checked as relations of the group.
fn eliminated_generator(id: &str, group: Group, defined: Family, bound: Index) -> Result<Vec<RelationInstance>> {
    let pb = |i| Family::PiBar.pos(i);
    let pbi = |i| Family::PiBar.neg(i);
    let def = |n: Index| match defined {
        Family::Pi => Word::new(vec![pb(n), Family::V.pos(n), pbi(n + 1)]),
        _ => Word::new(vec![pbi(n), Family::Pi.pos(n), pb(n + 1)]),
    };
    let substitute = |w: &Word| -> Word {
        w.iter()
            .flat_map(|&g| {
                if g.family == defined {
                    let d = def(g.index);
                    if g.sign.is_pos() { d } else { d.invert() }
                } else {
                    Word::new(vec![g])
                }
            })
            .collect()
    };
    let mode = if group == Group::V { BvMode::V } else { BvMode::BV };
    let mut out = Vec::new();
    for family in ELIMINATION_FAMILIES.into_iter().filter(|f| f.holds_in(mode)) {
        for rel in BvRelation::enumerate(family, bound) {
            let (lhs, rhs) = rel.sides()?;
            out.push(RelationInstance::new(
                id,
                format!("{id}/{}{}", family.id(), params(&rel)),
                group,
                substitute(&lhs),
                substitute(&rhs),
            ));
        }
    }
    for m in 0..bound {
        // π_m = π̄_{m+1}⁻¹ v_m⁻¹ π̄_m
        let lhs = Word::new(vec![Family::Pi.pos(m)]);
        let rhs = Word::new(vec![pbi(m + 1), Family::V.neg(m), pb(m)]);
        out.push(RelationInstance::new(
            id,
            format!("{id}/pi-inverse-form(m={m})"),
            group,
            substitute(&lhs),
            substitute(&rhs),
        ));
        out.push(RelationInstance::new(
            id,
            format!("{id}/definition(n={m})"),
            group,
            Word::new(vec![defined.pos(m)]),
            def(m),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::w;

    #[test]
    fn hat_scheme_examples() {
        assert_eq!(expand_finite_defs(&w("l1"), Scheme::Hat).unwrap(), w("s0 l0 s1' s0'"));
        assert_eq!(
            expand_finite_defs(&w("l2"), Scheme::Hat).unwrap(),
            w("l0'").concat(&w("s0 l0 s1' s0'")).concat(&w("l0"))
        );
        assert_eq!(expand_finite_defs(&w("s3"), Scheme::Hat).unwrap(), w("l0' l0' s1 l0 l0"));
        assert_eq!(expand_finite_defs(&w("l0 s0 s1'"), Scheme::Hat).unwrap(), w("l0 s0 s1'"));
    }

    #[test]
    fn bv_scheme_examples() {
        assert_eq!(expand_finite_defs(&w("p0"), Scheme::BvV).unwrap(), w("pb0 v0 pb1'"));
        assert_eq!(expand_finite_defs(&w("v0"), Scheme::BvV).unwrap(), w("v0"));
        assert_eq!(expand_finite_defs(&w("v2"), Scheme::BvV).unwrap(), w("v0' v1 v0"));
        assert_eq!(expand_finite_defs(&w("v0"), Scheme::BvPi).unwrap(), w("pb0' p0 pb1"));
        assert_eq!(expand_finite_defs(&w("p1'"), Scheme::BvPi).unwrap(), w("p1'"));
    }

    #[test]
    fn schemes_reject_foreign_letters() {
        assert!(matches!(expand_finite_defs(&w("v0"), Scheme::Hat), Err(Error::Alphabet { .. })));
        assert!(matches!(expand_finite_defs(&w("l0"), Scheme::BvV), Err(Error::Alphabet { .. })));
    }

    fn pairs(id: &str, bound: Index) -> Vec<String> {
        instantiate_family(id, bound)
            .unwrap()
            .into_iter()
            .map(|i| i.source.trim_start_matches(id).to_string())
            .collect()
    }

    #[test]
    fn side_conditions_are_respected() {
        assert_eq!(pairs("binf/far", 3), ["(m=0,n=2)", "(m=0,n=3)", "(m=1,n=3)"]);
        let far = pairs("bv/pi-v-far", 4);
        let mut expected = Vec::new();
        for (q, m) in [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)] {
            expected.push(format!("(m={m},q={q})"));
        }
        let mut far_sorted = far.clone();
        far_sorted.sort();
        expected.sort();
        assert_eq!(far_sorted, expected);
    }

    #[test]
    fn bound_zero_gives_small_families() {
        assert!(instantiate_family("vhat/lambda-shift", 0).unwrap().is_empty());
        assert_eq!(instantiate_family("vhat/sigma-square", 0).unwrap().len(), 1);
    }

    #[test]
    fn every_listed_id_instantiates() {
        for id in family_ids() {
            assert!(!instantiate_family(&id, 3).unwrap().is_empty(), "{id}");
        }
        assert!(matches!(instantiate_family("bv/pi-square", 3), Err(Error::UnknownFamily(_))));
        assert!(matches!(instantiate_family("bvhat/sigma-square", 3), Err(Error::UnknownFamily(_))));
        assert!(matches!(instantiate_family("nope", 3), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn finite_tables_have_the_stated_sizes() {
        let relators = |id| {
            instantiate_family(id, 0).unwrap().iter().filter(|i| !i.source.contains("/def ")).count()
        };
        assert_eq!(relators("vhat-finite"), 18);
        assert_eq!(relators("bvhat-finite"), 18);
        assert_eq!(relators("bv-finite"), 26);
        assert_eq!(relators("v-finite"), 30);
    }
}
