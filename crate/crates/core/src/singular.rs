//! Parameters at singular infinitesimal character, translation data, and
//! the commutativity check for the translation square.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::blockdata::{validate_block, BlockData, Parameter, Simple, SimpleStatus, Violation};
use crate::correspondence::Correspondence;
use crate::error::{Error, Result};
use crate::gauss::GaussRat;
use crate::rootdata::{LeviSelection, Root, RootDatum};

/// A parameter enriched with the simples whose pairing with the
/// infinitesimal character vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularParam {
    #[serde(flatten)]
    pub base: Parameter,
    /// Imaginary simples with zero pairing.
    #[serde(default)]
    pub pos_imaginary: Vec<usize>,
    /// Real simples with zero pairing.
    #[serde(default)]
    pub zero_pairing_real: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularBlock {
    pub simples: Vec<Simple>,
    pub infchar_tag: String,
    pub params: Vec<SingularParam>,
}

impl SingularBlock {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn base(&self) -> BlockData {
        BlockData {
            simples: self.simples.clone(),
            infchar_tag: self.infchar_tag.clone(),
            params: self.params.iter().map(|p| p.base.clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularViolation {
    /// `d` (imaginary marking), `e` (real marking) or `marking` (the listed
    /// simple is not of the marked kind).
    pub condition: String,
    pub param: String,
    pub simple: usize,
    pub message: String,
}

pub fn validate_singular_param(p: &SingularParam) -> Vec<SingularViolation> {
    let mut out = Vec::new();
    let mut report = |condition: &str, simple: usize, message: String| {
        out.push(SingularViolation { condition: condition.into(), param: p.base.label.clone(), simple, message })
    };
    for &s in &p.pos_imaginary {
        match p.base.status.get(s) {
            None => report("marking", s, format!("simple {s} out of range")),
            Some(st) if !st.is_imaginary() => report("marking", s, format!("simple {s} is {st:?}, not imaginary")),
            Some(st) if !st.is_noncompact_imaginary() => {
                report("d", s, format!("zero-pairing imaginary simple {s} must be noncompact"))
            }
            _ => {}
        }
    }
    for &s in &p.zero_pairing_real {
        match p.base.status.get(s) {
            None => report("marking", s, format!("simple {s} out of range")),
            Some(st) if !st.is_real() => report("marking", s, format!("simple {s} is {st:?}, not real")),
            Some(st) if *st != SimpleStatus::RealNonparity => {
                report("e", s, format!("zero-pairing real simple {s} must fail the parity condition"))
            }
            _ => {}
        }
    }
    out
}

/// Block axioms on the underlying parameters plus the marking conditions.
pub fn validate_singular_block(b: &SingularBlock) -> (Vec<Violation>, Vec<SingularViolation>) {
    (validate_block(&b.base()), b.params.iter().flat_map(validate_singular_param).collect())
}

/// `xi' = xi + mu` with `mu` in the weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationDatum {
    pub xi: Vec<GaussRat>,
    pub mu: Vec<i64>,
}

impl TranslationDatum {
    pub fn xi_prime(&self) -> Vec<GaussRat> {
        self.xi.iter().zip(&self.mu).map(|(x, m)| x + &GaussRat::from_int(*m)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationViolation {
    pub condition: String,
    pub root: Root,
    pub message: String,
}

/// Condition a: `xi'` is nonsingular on the Levi roots. Condition b: every
/// root pairing with `xi` to a positive integer pairs with `xi'` to one too.
pub fn validate_translation_datum(
    d: &RootDatum,
    lv: &LeviSelection,
    t: &TranslationDatum,
) -> Result<Vec<TranslationViolation>> {
    for len in [t.xi.len(), t.mu.len()] {
        if len != d.rank() {
            return Err(Error::Dimension { expected: d.rank(), got: len });
        }
    }
    let xp = t.xi_prime();
    let mut out = Vec::new();
    for i in lv.levi_root_indices() {
        if d.pairing(i, &xp).is_zero() {
            out.push(TranslationViolation {
                condition: "a".into(),
                root: d.roots()[i].clone(),
                message: "xi' is singular on a Levi root".into(),
            });
        }
    }
    for i in 0..d.roots().len() {
        let before = d.pairing(i, &t.xi);
        let after = d.pairing(i, &xp);
        if before.is_positive_integer() && !after.is_positive_integer() {
            out.push(TranslationViolation {
                condition: "b".into(),
                root: d.roots()[i].clone(),
                message: format!("pairing {before} becomes {after}"),
            });
        }
    }
    Ok(out)
}

/// The four maps of a translation square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationSquare {
    pub iota_xi: Correspondence,
    pub iota_xi_prime: Correspondence,
    pub t_l: Vec<(String, String)>,
    pub t_g: Vec<(String, String)>,
}

impl TranslationSquare {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn injective_map<'a>(name: &str, pairs: &'a [(String, String)]) -> Result<BTreeMap<&'a str, &'a str>> {
    let mut map = BTreeMap::new();
    let mut seen = HashSet::new();
    for (a, b) in pairs {
        if map.insert(a.as_str(), b.as_str()).is_some() || !seen.insert(b.as_str()) {
            return Err(Error::DomainMismatch(format!("{name} is not an injective map at {a:?}")));
        }
    }
    Ok(map)
}

/// Whether `iota_xi'(t_L(g)) = t_G(iota_xi(g))` for every `g` in the
/// domain of `t_L`; otherwise the first failing label.
pub fn check_translation_square(sq: &TranslationSquare) -> Result<(bool, Option<String>)> {
    let t_l = injective_map("t_L", &sq.t_l)?;
    let t_g = injective_map("t_G", &sq.t_g)?;
    let i_xi = sq.iota_xi.map();
    let i_xp = sq.iota_xi_prime.map();
    for (g, lp) in &t_l {
        let miss = |what: &str| Error::DomainMismatch(format!("{what} is undefined on the image of {g:?}"));
        let top = i_xi.get(g).ok_or_else(|| miss("iota_xi"))?;
        let right = t_g.get(top).ok_or_else(|| miss("t_G"))?;
        let left = i_xp.get(lp).ok_or_else(|| miss("iota_xi'"))?;
        if left != right {
            return Ok((false, Some((*g).to_owned())));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blockdata::builtin_sl2r_block;

    fn sp(status: SimpleStatus, imag: Vec<usize>, real: Vec<usize>) -> SingularParam {
        let mut base = builtin_sl2r_block().params[0].clone();
        base.status = vec![status];
        SingularParam { base, pos_imaginary: imag, zero_pairing_real: real }
    }

    #[test]
    fn markings() {
        assert!(validate_singular_param(&sp(SimpleStatus::NoncompactImaginaryI, vec![], vec![])).is_empty());
        assert!(validate_singular_param(&sp(SimpleStatus::NoncompactImaginaryI, vec![0], vec![])).is_empty());
        let v = validate_singular_param(&sp(SimpleStatus::CompactImaginary, vec![0], vec![]));
        assert_eq!(v[0].condition, "d");
        assert!(validate_singular_param(&sp(SimpleStatus::RealNonparity, vec![], vec![0])).is_empty());
        let v = validate_singular_param(&sp(SimpleStatus::RealParityI, vec![], vec![0]));
        assert_eq!(v[0].condition, "e");
        let v = validate_singular_param(&sp(SimpleStatus::RealParityI, vec![0], vec![]));
        assert_eq!(v[0].condition, "marking");
    }

    #[test]
    fn unmarked_block_validates_like_its_base() {
        let b = builtin_sl2r_block();
        let s = SingularBlock {
            simples: b.simples.clone(),
            infchar_tag: b.infchar_tag.clone(),
            params: b
                .params
                .iter()
                .map(|p| SingularParam { base: p.clone(), pos_imaginary: vec![], zero_pairing_real: vec![] })
                .collect(),
        };
        let (v, w) = validate_singular_block(&s);
        assert!(v.is_empty() && w.is_empty());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(SingularBlock::from_json(&json).unwrap(), s);
    }

    #[test]
    fn translation_data() {
        let d = RootDatum::sl2();
        let full = LeviSelection::full(&d);
        let t = |xi: i64, mu: i64| TranslationDatum { xi: vec![GaussRat::from_int(xi)], mu: vec![mu] };
        assert!(validate_translation_datum(&d, &full, &t(1, 0)).unwrap().is_empty());
        assert!(validate_translation_datum(&d, &full, &t(0, 1)).unwrap().is_empty());
        let v = validate_translation_datum(&d, &full, &t(1, -1)).unwrap();
        assert!(v.iter().any(|x| x.condition == "b" && x.root == vec![2]));
        assert!(v.iter().any(|x| x.condition == "a"));
        let v = validate_translation_datum(&d, &full, &t(0, 0)).unwrap();
        assert_eq!(v.len(), 2);
    }

    fn ident(labels: &[&str], f: impl Fn(&str) -> String) -> Vec<(String, String)> {
        labels.iter().map(|l| (l.to_string(), f(l))).collect()
    }

    #[test]
    fn squares() {
        let ls = ["D+", "D-", "P"];
        let c = |f: fn(&str) -> String, g: fn(&str) -> String| Correspondence {
            pairs: ls.iter().map(|l| (f(l), g(l))).collect(),
            length_shift: 0,
        };
        let mut sq = TranslationSquare {
            iota_xi: c(|l| l.to_owned(), |l| format!("G{l}")),
            iota_xi_prime: c(|l| format!("L'{l}"), |l| format!("G'{l}")),
            t_l: ident(&ls, |l| format!("L'{l}")),
            t_g: ls.iter().map(|l| (format!("G{l}"), format!("G'{l}"))).collect(),
        };
        assert_eq!(check_translation_square(&sq).unwrap(), (true, None));
        let mut bad = sq.clone();
        bad.t_g[0].1 = "G'D-".into();
        bad.t_g[1].1 = "G'D+".into();
        assert_eq!(check_translation_square(&bad).unwrap(), (false, Some("D+".into())));
        sq.t_g.pop();
        assert!(matches!(check_translation_square(&sq), Err(Error::DomainMismatch(_))));
    }
}
