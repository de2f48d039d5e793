//! Comparing an L-side block file with a G-side block file through an
//! explicit label map, and the irreducibility verdict it supports.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::blockdata::BlockData;
use crate::error::Result;
use crate::klv::{partition_blocks, run_klv, KlvResult};

/// Label map `iota` from L-side parameters to G-side parameters with a
/// constant length shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correspondence {
    pub pairs: Vec<(String, String)>,
    pub length_shift: i64,
}

impl Correspondence {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("correspondence serializes")
    }

    pub fn identity(b: &BlockData) -> Self {
        Correspondence { pairs: b.params.iter().map(|p| (p.label.clone(), p.label.clone())).collect(), length_shift: 0 }
    }

    /// Sends `l` to `f(l)` for every label of `b`.
    pub fn from_fn(b: &BlockData, length_shift: i64, f: impl Fn(&str) -> String) -> Self {
        Correspondence { pairs: b.params.iter().map(|p| (p.label.clone(), f(&p.label))).collect(), length_shift }
    }

    pub fn map(&self) -> BTreeMap<&str, &str> {
        self.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
    }

    pub fn image(&self) -> BTreeSet<&str> {
        self.pairs.iter().map(|(_, b)| b.as_str()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub message: String,
}

fn mismatch(kind: &str, label: Option<&str>, message: impl Into<String>) -> Mismatch {
    Mismatch { kind: kind.into(), label: label.map(str::to_owned), message: message.into() }
}

/// Everything that prevents `c` from transporting the KLV data of `l` into
/// `g`; empty when the map is injective, total on `l` and respects simples,
/// statuses, cross actions, Cayley sets and lengths up to the shift.
pub fn check_correspondence(l: &BlockData, g: &BlockData, c: &Correspondence) -> Vec<Mismatch> {
    let mut out = Vec::new();
    if l.simples != g.simples {
        out.push(mismatch("simple set mismatch", None, "the two files use different simples or braid orders"));
        return out;
    }
    let mut map = BTreeMap::new();
    let mut seen = HashSet::new();
    for (a, b) in &c.pairs {
        if l.param(a).is_err() {
            out.push(mismatch("unknown label", Some(a), format!("{a:?} is not an L-side label")));
        }
        if g.param(b).is_err() {
            out.push(mismatch("unknown label", Some(b), format!("{b:?} is not a G-side label")));
        }
        if map.insert(a.as_str(), b.as_str()).is_some() {
            out.push(mismatch("not a function", Some(a), format!("{a:?} is mapped twice")));
        }
        if !seen.insert(b.as_str()) {
            out.push(mismatch("not injective", Some(b), format!("{b:?} has two preimages")));
        }
    }
    for p in &l.params {
        if !map.contains_key(p.label.as_str()) {
            out.push(mismatch("not total", Some(&p.label), format!("{:?} is not mapped", p.label)));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let iota = |x: &str| map[x].to_owned();
    for p in &l.params {
        let q = g.param(map[p.label.as_str()]).expect("checked above");
        let here = Some(p.label.as_str());
        if q.length != p.length + c.length_shift {
            out.push(mismatch(
                "length mismatch",
                here,
                format!("length {} maps to {} with shift {}", p.length, q.length, c.length_shift),
            ));
        }
        for s in 0..l.rank() {
            if p.status[s] != q.status[s] {
                out.push(mismatch(
                    "status mismatch",
                    here,
                    format!("simple {s}: {:?} versus {:?}", p.status[s], q.status[s]),
                ));
                continue;
            }
            if iota(&p.cross[s]) != q.cross[s] {
                out.push(mismatch("cross mismatch", here, format!("simple {s}: iota(s x g) != s x iota(g)")));
            }
            let lhs: BTreeSet<String> = p.cayley[s].iter().map(|x| iota(x)).collect();
            let rhs: BTreeSet<String> = q.cayley[s].iter().cloned().collect();
            if lhs != rhs {
                out.push(mismatch("cayley mismatch", here, format!("simple {s}: Cayley sets differ")));
            }
        }
    }
    out
}

/// Whether the image of `c` is a union of blocks of `g`; otherwise a block
/// meeting both the image and its complement.
pub fn check_image_union_of_blocks(g: &BlockData, c: &Correspondence) -> Result<(bool, Option<Vec<String>>)> {
    let blk = g.indexed()?;
    let image = c.image();
    for class in partition_blocks(&blk) {
        let inside = class.iter().filter(|&&i| image.contains(blk.label(i))).count();
        if inside != 0 && inside != class.len() {
            return Ok((false, Some(class.iter().map(|&i| blk.label(i).to_owned()).collect())));
        }
    }
    Ok((true, None))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Irreducible,
    NoConclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedReport {
    pub verdict: Verdict,
    pub delta: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_g: Option<String>,
    /// `M^L(gamma, delta)` over the L-side order.
    pub column_l: Vec<(String, i64)>,
    /// `M^G(eta, iota(delta))` over the G-side order.
    pub column_g: Vec<(String, i64)>,
    pub reasons: Vec<String>,
}

fn column(k: &KlvResult, delta: &str) -> Result<Vec<(String, i64)>> {
    k.order_labels().into_iter().map(|x| Ok((x.clone(), k.big_m(&x, delta)?))).collect()
}

/// Irreducible exactly when the map passes every check, the image is a union
/// of G-blocks, the M-column of `delta` transports to the G side, and no
/// G-parameter outside the image occurs in it.
pub fn induced_verdict(l: &BlockData, g: &BlockData, c: &Correspondence, delta: &str) -> Result<InducedReport> {
    let mut reasons: Vec<String> = Vec::new();
    let mut report = InducedReport {
        verdict: Verdict::NoConclusion,
        delta: delta.to_owned(),
        delta_g: None,
        column_l: vec![],
        column_g: vec![],
        reasons: vec![],
    };
    let bad = check_correspondence(l, g, c);
    if !bad.is_empty() {
        reasons.push("preconditions not established: correspondence check failed".into());
        reasons.extend(bad.into_iter().map(|m| format!("{}: {}", m.kind, m.message)));
    }
    if reasons.is_empty() {
        if let (false, Some(w)) = check_image_union_of_blocks(g, c)? {
            reasons.push(format!("preconditions not established: G-block {w:?} straddles the image"));
        }
    }
    let map = c.map();
    let Some(&delta_g) = map.get(delta) else {
        reasons.push(format!("preconditions not established: {delta:?} is not in the domain"));
        report.reasons = reasons;
        return Ok(report);
    };
    report.delta_g = Some(delta_g.to_owned());
    if !reasons.is_empty() {
        report.reasons = reasons;
        return Ok(report);
    }
    let kl = run_klv(l)?;
    let kg = run_klv(g)?;
    report.column_l = column(&kl, delta)?;
    report.column_g = column(&kg, delta_g)?;
    for (x, v) in &report.column_l {
        let w = kg.big_m(map[x.as_str()], delta_g)?;
        if *v != w {
            reasons.push(format!("M^L({x},{delta}) = {v} but M^G = {w}"));
        }
    }
    for (eta, v) in &report.column_g {
        if *v != 0 && !c.image().contains(eta.as_str()) {
            reasons.push(format!("M^G({eta},{delta_g}) = {v} with {eta} outside the image"));
        }
    }
    if reasons.is_empty() {
        report.verdict = Verdict::Irreducible;
    }
    report.reasons = reasons;
    Ok(report)
}

/// Whether `M^L(x, y) = M^G(iota x, iota y)` for every pair of L-labels.
pub fn compare_multiplicities(l: &BlockData, g: &BlockData, c: &Correspondence) -> Result<bool> {
    let kl = run_klv(l)?;
    // A G-side file the solver rejects cannot carry the same data.
    let Ok(kg) = run_klv(g) else {
        return Ok(false);
    };
    let map = c.map();
    for x in kl.order_labels() {
        for y in kl.order_labels() {
            let (Some(gx), Some(gy)) = (map.get(x.as_str()), map.get(y.as_str())) else {
                return Ok(false);
            };
            if kg.block.index_of(gx).is_err() || kg.block.index_of(gy).is_err() {
                return Ok(false);
            }
            if kl.big_m(&x, &y)? != kg.big_m(gx, gy)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
