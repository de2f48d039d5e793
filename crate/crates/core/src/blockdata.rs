//! Combinatorial block data: per-simple statuses, cross actions, Cayley
//! links and integral lengths, together with the block axioms.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleStatus {
    ComplexAscent,
    ComplexDescent,
    CompactImaginary,
    NoncompactImaginaryI,
    NoncompactImaginaryII,
    RealParityI,
    RealParityII,
    RealNonparity,
}

impl SimpleStatus {
    pub const ALL: [SimpleStatus; 8] = [
        SimpleStatus::ComplexAscent,
        SimpleStatus::ComplexDescent,
        SimpleStatus::CompactImaginary,
        SimpleStatus::NoncompactImaginaryI,
        SimpleStatus::NoncompactImaginaryII,
        SimpleStatus::RealParityI,
        SimpleStatus::RealParityII,
        SimpleStatus::RealNonparity,
    ];

    pub fn has_cayley(self) -> bool {
        matches!(
            self,
            Self::NoncompactImaginaryI | Self::NoncompactImaginaryII | Self::RealParityI | Self::RealParityII
        )
    }

    /// Number of Cayley targets when defined.
    pub fn cayley_arity(self) -> usize {
        match self {
            Self::RealParityI | Self::NoncompactImaginaryII => 2,
            Self::RealParityII | Self::NoncompactImaginaryI => 1,
            _ => 0,
        }
    }

    /// Statuses along which an arrow `gamma ->s gamma'` leaves `gamma`.
    pub fn is_descent(self) -> bool {
        matches!(self, Self::ComplexDescent | Self::RealParityI | Self::RealParityII)
    }

    pub fn is_complex(self) -> bool {
        matches!(self, Self::ComplexAscent | Self::ComplexDescent)
    }

    pub fn is_noncompact_imaginary(self) -> bool {
        matches!(self, Self::NoncompactImaginaryI | Self::NoncompactImaginaryII)
    }

    pub fn is_imaginary(self) -> bool {
        self.is_noncompact_imaginary() || self == Self::CompactImaginary
    }

    pub fn is_real(self) -> bool {
        matches!(self, Self::RealParityI | Self::RealParityII | Self::RealNonparity)
    }
}

impl fmt::Display for SimpleStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An abstract simple reflection with its braid orders against every simple
/// (1 on the diagonal).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simple {
    pub name: String,
    pub braid: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameter {
    pub label: String,
    pub length: i64,
    pub cartan_class: String,
    pub status: Vec<SimpleStatus>,
    pub cross: Vec<String>,
    pub cayley: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockData {
    pub simples: Vec<Simple>,
    pub infchar_tag: String,
    pub params: Vec<Parameter>,
}

/// The block axiom a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    SimpleSet,
    DuplicateLabel,
    Arity,
    UnknownLabel,
    CrossInvolution,
    CayleyDomain,
    ComplexPair,
    ArrowLength,
    #[serde(rename = "parity-i-cross-fixed")]
    ParityICrossFixed,
    #[serde(rename = "parity-i-cayley-pair")]
    ParityICayleyPair,
    #[serde(rename = "parity-ii-cross-moves")]
    ParityIICrossMoves,
    #[serde(rename = "parity-ii-cayley-shared")]
    ParityIICayleyShared,
    CayleyBackLink,
    FixedStatusCross,
    Braid,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::SimpleSet => "simple-set",
            Axiom::DuplicateLabel => "duplicate-label",
            Axiom::Arity => "arity",
            Axiom::UnknownLabel => "unknown-label",
            Axiom::CrossInvolution => "cross-involution",
            Axiom::CayleyDomain => "cayley-domain",
            Axiom::ComplexPair => "complex-pair",
            Axiom::ArrowLength => "arrow-length",
            Axiom::ParityICrossFixed => "parity-i-cross-fixed",
            Axiom::ParityICayleyPair => "parity-i-cayley-pair",
            Axiom::ParityIICrossMoves => "parity-ii-cross-moves",
            Axiom::ParityIICayleyShared => "parity-ii-cayley-shared",
            Axiom::CayleyBackLink => "cayley-back-link",
            Axiom::FixedStatusCross => "fixed-status-cross",
            Axiom::Braid => "braid",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<usize>,
    pub message: String,
}

impl Violation {
    pub fn new(axiom: Axiom, param: Option<&str>, simple: Option<usize>, message: impl Into<String>) -> Self {
        Violation { axiom, param: param.map(str::to_owned), simple, message: message.into() }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ValidateOptions {
    /// Also require the braid relations of the Hecke action.
    pub braid: bool,
}

impl BlockData {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("block data serializes")
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn param(&self, label: &str) -> Result<&Parameter> {
        self.params
            .iter()
            .find(|p| p.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.params.iter().map(|p| p.label.as_str()).collect()
    }

    pub fn braid_order(&self, s: usize, t: usize) -> u32 {
        self.simples[s].braid[t]
    }

    /// Resolves a simple reflection given by index or name.
    pub fn simple_index(&self, key: &str) -> Result<usize> {
        if let Some(i) = self.simples.iter().position(|s| s.name == key) {
            return Ok(i);
        }
        match key.parse::<usize>() {
            Ok(i) if i < self.simples.len() => Ok(i),
            _ => Err(Error::UnknownSimple(key.to_owned())),
        }
    }

    pub fn indexed(&self) -> Result<IndexedBlock> {
        IndexedBlock::new(self.clone())
    }

    /// A copy with every label passed through `f`.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> BlockData {
        let mut out = self.clone();
        for p in &mut out.params {
            p.label = f(&p.label);
            for c in &mut p.cross {
                *c = f(c);
            }
            for set in &mut p.cayley {
                for c in set.iter_mut() {
                    *c = f(c);
                }
            }
        }
        out
    }

    pub fn shift_lengths(&self, by: i64) -> BlockData {
        let mut out = self.clone();
        for p in &mut out.params {
            p.length += by;
        }
        out
    }
}

/// Block data with labels resolved to indices.
#[derive(Clone, Debug)]
pub struct IndexedBlock {
    data: BlockData,
    index: HashMap<String, usize>,
    cross: Vec<Vec<usize>>,
    cayley: Vec<Vec<Vec<usize>>>,
}

impl IndexedBlock {
    pub fn new(data: BlockData) -> Result<Self> {
        let n = data.rank();
        let mut index = HashMap::new();
        for (i, p) in data.params.iter().enumerate() {
            if index.insert(p.label.clone(), i).is_some() {
                return Err(Error::InvalidBlock(format!("duplicate label {:?}", p.label)));
            }
        }
        let look = |l: &String| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.clone()));
        let mut cross = Vec::with_capacity(data.len());
        let mut cayley = Vec::with_capacity(data.len());
        for p in &data.params {
            if p.status.len() != n || p.cross.len() != n || p.cayley.len() != n {
                return Err(Error::InvalidBlock(format!("parameter {:?} has wrong arity", p.label)));
            }
            cross.push(p.cross.iter().map(look).collect::<Result<Vec<_>>>()?);
            cayley.push(
                p.cayley
                    .iter()
                    .map(|set| set.iter().map(look).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(IndexedBlock { data, index, cross, cayley })
    }

    pub fn data(&self) -> &BlockData {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.params.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.params[i].label
    }

    pub fn length(&self, i: usize) -> i64 {
        self.data.params[i].length
    }

    pub fn status(&self, i: usize, s: usize) -> SimpleStatus {
        self.data.params[i].status[s]
    }

    pub fn cross(&self, i: usize, s: usize) -> usize {
        self.cross[i][s]
    }

    pub fn cayley(&self, i: usize, s: usize) -> &[usize] {
        &self.cayley[i][s]
    }

    /// Targets of arrows `i ->s j` leaving `i` along `s`.
    pub fn descent_targets(&self, i: usize, s: usize) -> Vec<usize> {
        match self.status(i, s) {
            SimpleStatus::ComplexDescent => vec![self.cross(i, s)],
            SimpleStatus::RealParityI | SimpleStatus::RealParityII => self.cayley(i, s).to_vec(),
            _ => vec![],
        }
    }
}

fn check_simples(b: &BlockData, out: &mut Vec<Violation>) {
    let n = b.rank();
    let mut names = HashSet::new();
    for (i, s) in b.simples.iter().enumerate() {
        if !names.insert(s.name.as_str()) {
            out.push(Violation::new(Axiom::SimpleSet, None, Some(i), format!("duplicate simple name {:?}", s.name)));
        }
        if s.braid.len() != n {
            out.push(Violation::new(Axiom::SimpleSet, None, Some(i), "braid row has wrong length"));
            continue;
        }
        for (j, &m) in s.braid.iter().enumerate() {
            let ok = if i == j { m == 1 } else { matches!(m, 2 | 3 | 4 | 6) };
            let symmetric = b.simples.get(j).and_then(|t| t.braid.get(i)) == Some(&m);
            if !ok || !symmetric {
                out.push(Violation::new(
                    Axiom::SimpleSet,
                    None,
                    Some(i),
                    format!("braid order m({i},{j}) = {m} is invalid or asymmetric"),
                ));
            }
        }
    }
}

/// Checks every block axiom; an empty report means the data is a valid block.
pub fn validate_block(b: &BlockData) -> Vec<Violation> {
    validate_block_with(b, ValidateOptions::default())
}

pub fn validate_block_with(b: &BlockData, opts: ValidateOptions) -> Vec<Violation> {
    let mut out = Vec::new();
    check_simples(b, &mut out);
    let n = b.rank();

    let mut index: HashMap<&str, usize> = HashMap::new();
    for p in &b.params {
        if index.insert(p.label.as_str(), index.len()).is_some() {
            out.push(Violation::new(Axiom::DuplicateLabel, Some(&p.label), None, "label occurs more than once"));
        }
    }
    let mut structural_ok = out.is_empty();
    for p in &b.params {
        if p.status.len() != n || p.cross.len() != n || p.cayley.len() != n {
            out.push(Violation::new(
                Axiom::Arity,
                Some(&p.label),
                None,
                format!("expected {n} entries in status, cross and cayley"),
            ));
            structural_ok = false;
            continue;
        }
        for s in 0..n {
            for target in std::iter::once(&p.cross[s]).chain(&p.cayley[s]) {
                if !index.contains_key(target.as_str()) {
                    out.push(Violation::new(
                        Axiom::UnknownLabel,
                        Some(&p.label),
                        Some(s),
                        format!("reference to unknown label {target:?}"),
                    ));
                    structural_ok = false;
                }
            }
        }
    }
    if !structural_ok {
        return out;
    }
    let blk = IndexedBlock::new(b.clone()).expect("structure checked above");
    for i in 0..blk.len() {
        for s in 0..n {
            check_link_axioms(&blk, i, s, &mut out);
        }
    }
    if opts.braid && out.is_empty() {
        for s in 0..n {
            for t in s + 1..n {
                if let Some(label) = crate::hecke::braid_counterexample(&blk, s, t) {
                    out.push(Violation::new(
                        Axiom::Braid,
                        Some(&label),
                        Some(s),
                        format!("braid relation between simples {s} and {t} fails"),
                    ));
                }
            }
        }
    }
    out
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

fn check_link_axioms(b: &IndexedBlock, i: usize, s: usize, out: &mut Vec<Violation>) {
    use SimpleStatus::*;
    let label = b.label(i);
    let mut report = |axiom: Axiom, msg: String| out.push(Violation::new(axiom, Some(label), Some(s), msg));
    let st = b.status(i, s);
    let x = b.cross(i, s);
    let cay = b.cayley(i, s);

    if b.cross(x, s) != i {
        report(Axiom::CrossInvolution, format!("cross action of simple {s} is not an involution at {label:?}"));
    }
    if st.has_cayley() != !cay.is_empty() || (st.has_cayley() && cay.len() != st.cayley_arity()) {
        report(
            Axiom::CayleyDomain,
            format!("{st} requires {} Cayley targets, found {}", st.cayley_arity(), cay.len()),
        );
        return;
    }
    let len = b.length(i);
    match st {
        ComplexAscent | ComplexDescent => {
            let partner = if st == ComplexAscent { ComplexDescent } else { ComplexAscent };
            if x == i || b.status(x, s) != partner {
                report(Axiom::ComplexPair, format!("{st} requires {partner} at the cross-action image"));
            } else {
                let expected = if st == ComplexAscent { len + 1 } else { len - 1 };
                if b.length(x) != expected {
                    report(Axiom::ArrowLength, "arrow length must drop by 1 along a complex arrow".into());
                }
            }
        }
        CompactImaginary | RealNonparity | NoncompactImaginaryII => {
            if x != i {
                report(Axiom::FixedStatusCross, format!("{st} requires the cross action to fix the parameter"));
            }
            if st == NoncompactImaginaryII {
                for &t in cay {
                    if b.status(t, s) != RealParityII || b.cayley(t, s) != [i] {
                        report(Axiom::CayleyBackLink, format!("Cayley target {:?} must be RealParityII linking back", b.label(t)));
                    } else if b.length(t) != len + 1 {
                        report(Axiom::ArrowLength, "arrow length must drop by 1 along a Cayley arrow".into());
                    }
                }
            }
        }
        NoncompactImaginaryI => {
            let t = cay[0];
            if b.status(t, s) != RealParityI || !b.cayley(t, s).contains(&i) {
                report(Axiom::CayleyBackLink, format!("Cayley target {:?} must be RealParityI linking back", b.label(t)));
            } else if b.length(t) != len + 1 {
                report(Axiom::ArrowLength, "arrow length must drop by 1 along a Cayley arrow".into());
            }
        }
        RealParityI => {
            if x != i {
                report(Axiom::ParityICrossFixed, "RealParityI requires the cross action to fix the parameter".into());
            }
            let (a, c) = (cay[0], cay[1]);
            if a == c || b.cross(a, s) != c {
                report(Axiom::ParityICayleyPair, "RealParityI Cayley targets must be exchanged by the cross action".into());
            }
            for t in [a, c] {
                if b.status(t, s) != NoncompactImaginaryI || b.cayley(t, s) != [i] {
                    report(Axiom::CayleyBackLink, format!("Cayley target {:?} must be NoncompactImaginaryI linking back", b.label(t)));
                } else if b.length(t) != len - 1 {
                    report(Axiom::ArrowLength, "arrow length must drop by 1 along a Cayley arrow".into());
                }
            }
        }
        RealParityII => {
            if x == i {
                report(Axiom::ParityIICrossMoves, "RealParityII requires the cross action to move the parameter".into());
            }
            let t = cay[0];
            if b.cayley(x, s) != [t] {
                report(Axiom::ParityIICayleyShared, "RealParityII Cayley target must be shared with the cross-action image".into());
            }
            if b.status(t, s) != NoncompactImaginaryII || !same_set(b.cayley(t, s), &[i, x]) {
                report(Axiom::CayleyBackLink, format!("Cayley target {:?} must be NoncompactImaginaryII linking back to the pair", b.label(t)));
            } else if b.length(t) != len - 1 {
                report(Axiom::ArrowLength, "arrow length must drop by 1 along a Cayley arrow".into());
            }
        }
    }
}

/// `std(gamma)` is irreducible exactly when no simple is a descent.
pub fn is_minimal(b: &BlockData, label: &str) -> Result<bool> {
    Ok(!b.param(label)?.status.iter().any(|s| s.is_descent()))
}

fn braid_from_cartan(a: i64, b: i64) -> u32 {
    match a * b {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        _ => unreachable!("finite root system"),
    }
}

/// Simples named `s1..sn` with braid orders from a Cartan matrix.
pub fn simples_from_cartan(cartan: &[Vec<i64>]) -> Vec<Simple> {
    let n = cartan.len();
    (0..n)
        .map(|i| Simple {
            name: format!("s{}", i + 1),
            braid: (0..n).map(|j| if i == j { 1 } else { braid_from_cartan(cartan[i][j], cartan[j][i]) }).collect(),
        })
        .collect()
}

/// The block of a complex group: the Weyl group with every simple complex,
/// the cross action given by left multiplication and length the Coxeter
/// length. Labels are lexicographically minimal reduced words (`e`, `s1`,
/// `s2s1`, ...).
pub fn generate_complex_block(d: &RootDatum, cap: usize) -> Result<BlockData> {
    let gens = d.simple_reflections();
    let elements = d.weyl_enumerate(cap)?;
    let pos: HashMap<_, usize> = elements.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let n = gens.len();
    // Breadth-first order from the identity, so the first visit is a shortest word.
    let mut length = vec![usize::MAX; elements.len()];
    length[0] = 0;
    let mut left = vec![vec![0usize; n]; elements.len()];
    for (i, w) in elements.iter().enumerate() {
        for (s, g) in gens.iter().enumerate() {
            left[i][s] = pos[&g.compose(w)];
        }
    }
    for i in 0..elements.len() {
        for s in 0..n {
            let j = left[i][s];
            if length[j] == usize::MAX {
                length[j] = length[i] + 1;
            }
        }
    }
    let mut words = vec![String::new(); elements.len()];
    let mut by_length: Vec<usize> = (0..elements.len()).collect();
    by_length.sort_by_key(|&i| length[i]);
    for &i in &by_length {
        if length[i] == 0 {
            words[i] = "e".into();
            continue;
        }
        let s = (0..n).find(|&s| length[left[i][s]] < length[i]).expect("nonidentity has a left descent");
        let rest = &words[left[i][s]];
        words[i] = if rest == "e" { format!("s{}", s + 1) } else { format!("s{}{rest}", s + 1) };
    }
    let cartan = d.cartan_matrix(&d.simple_roots())?;
    let params = by_length
        .iter()
        .map(|&i| Parameter {
            label: words[i].clone(),
            length: length[i] as i64,
            cartan_class: "complex".into(),
            status: (0..n)
                .map(|s| {
                    if length[left[i][s]] > length[i] {
                        SimpleStatus::ComplexAscent
                    } else {
                        SimpleStatus::ComplexDescent
                    }
                })
                .collect(),
            cross: (0..n).map(|s| words[left[i][s]].clone()).collect(),
            cayley: vec![vec![]; n],
        })
        .collect();
    Ok(BlockData { simples: simples_from_cartan(&cartan), infchar_tag: "rho".into(), params })
}

fn param(label: &str, length: i64, class: &str, status: &[SimpleStatus], cross: &[&str], cayley: &[&[&str]]) -> Parameter {
    Parameter {
        label: label.into(),
        length,
        cartan_class: class.into(),
        status: status.to_vec(),
        cross: cross.iter().map(|s| s.to_string()).collect(),
        cayley: cayley.iter().map(|set| set.iter().map(|s| s.to_string()).collect()).collect(),
    }
}

fn one_simple() -> Vec<Simple> {
    vec![Simple { name: "s".into(), braid: vec![1] }]
}

/// The block of SL(2,R) at the infinitesimal character of the trivial
/// representation: two discrete series and the principal series.
pub fn builtin_sl2r_block() -> BlockData {
    use SimpleStatus::*;
    BlockData {
        simples: one_simple(),
        infchar_tag: "rho".into(),
        params: vec![
            param("D+", 0, "compact", &[NoncompactImaginaryI], &["D-"], &[&["P"]]),
            param("D-", 0, "compact", &[NoncompactImaginaryI], &["D+"], &[&["P"]]),
            param("P", 1, "split", &[RealParityI], &["P"], &[&["D+", "D-"]]),
        ],
    }
}

/// The block of PGL(2,R) at `rho`: one discrete series and two principal
/// series exchanged by the cross action.
pub fn builtin_pgl2r_block() -> BlockData {
    use SimpleStatus::*;
    BlockData {
        simples: one_simple(),
        infchar_tag: "rho".into(),
        params: vec![
            param("DS", 0, "compact", &[NoncompactImaginaryII], &["DS"], &[&["P+", "P-"]]),
            param("P+", 1, "split", &[RealParityII], &["P-"], &[&["DS"]]),
            param("P-", 1, "split", &[RealParityII], &["P+"], &[&["DS"]]),
        ],
    }
}

/// The block of SU(2,1) at `rho`: three discrete series, two parameters on
/// the rank-one Cartan and the open one.
pub fn builtin_su21_block() -> BlockData {
    use SimpleStatus::*;
    BlockData {
        simples: vec![
            Simple { name: "s1".into(), braid: vec![1, 3] },
            Simple { name: "s2".into(), braid: vec![3, 1] },
        ],
        infchar_tag: "rho".into(),
        params: vec![
            param("xa", 0, "compact", &[CompactImaginary, NoncompactImaginaryI], &["xa", "xb"], &[&[], &["y2"]]),
            param("xb", 0, "compact", &[NoncompactImaginaryI, NoncompactImaginaryI], &["xc", "xa"], &[&["y1"], &["y2"]]),
            param("xc", 0, "compact", &[NoncompactImaginaryI, CompactImaginary], &["xb", "xc"], &[&["y1"], &[]]),
            param("y1", 1, "rank-one", &[RealParityI, ComplexAscent], &["y1", "z"], &[&["xb", "xc"], &[]]),
            param("y2", 1, "rank-one", &[ComplexAscent, RealParityI], &["z", "y2"], &[&[], &["xa", "xb"]]),
            param("z", 2, "rank-one", &[ComplexDescent, ComplexDescent], &["y2", "y1"], &[&[], &[]]),
        ],
    }
}

/// One parameter, no simples.
pub fn trivial_block() -> BlockData {
    BlockData {
        simples: vec![],
        infchar_tag: "trivial".into(),
        params: vec![param("triv", 0, "trivial", &[], &[], &[])],
    }
}

/// Product of blocks with disjoint simple sets; labels are `a|b`.
pub fn product_block(a: &BlockData, b: &BlockData) -> Result<BlockData> {
    for s in &a.simples {
        if b.simples.iter().any(|t| t.name == s.name) {
            return Err(Error::SimpleCollision(s.name.clone()));
        }
    }
    let (na, nb) = (a.rank(), b.rank());
    let mut simples = Vec::with_capacity(na + nb);
    for s in &a.simples {
        let mut braid = s.braid.clone();
        braid.extend(std::iter::repeat_n(2, nb));
        simples.push(Simple { name: s.name.clone(), braid });
    }
    for s in &b.simples {
        let mut braid = vec![2; na];
        braid.extend(&s.braid);
        simples.push(Simple { name: s.name.clone(), braid });
    }
    let pair = |x: &str, y: &str| format!("{x}|{y}");
    let mut params = Vec::with_capacity(a.len() * b.len());
    for p in &a.params {
        for q in &b.params {
            let mut status = p.status.clone();
            status.extend(&q.status);
            let mut cross: Vec<String> = p.cross.iter().map(|c| pair(c, &q.label)).collect();
            cross.extend(q.cross.iter().map(|c| pair(&p.label, c)));
            let mut cayley: Vec<Vec<String>> =
                p.cayley.iter().map(|set| set.iter().map(|c| pair(c, &q.label)).collect()).collect();
            cayley.extend(q.cayley.iter().map(|set| set.iter().map(|c| pair(&p.label, c)).collect()));
            let class = match (p.cartan_class.as_str(), q.cartan_class.as_str()) {
                (x, "trivial") => x.to_owned(),
                ("trivial", y) => y.to_owned(),
                (x, y) => format!("{x}|{y}"),
            };
            params.push(Parameter {
                label: pair(&p.label, &q.label),
                length: p.length + q.length,
                cartan_class: class,
                status,
                cross,
                cayley,
            });
        }
    }
    Ok(BlockData { simples, infchar_tag: format!("{}|{}", a.infchar_tag, b.infchar_tag), params })
}

/// Disjoint union of two blocks over the same simples.
pub fn disjoint_union(a: &BlockData, b: &BlockData) -> Result<BlockData> {
    if a.simples != b.simples {
        return Err(Error::InvalidBlock("disjoint union needs identical simples".into()));
    }
    let labels: HashSet<&str> = a.labels().into_iter().collect();
    if let Some(l) = b.labels().into_iter().find(|l| labels.contains(l)) {
        return Err(Error::InvalidBlock(format!("label {l:?} occurs in both blocks")));
    }
    let mut out = a.clone();
    out.params.extend(b.params.iter().cloned());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::DEFAULT_WEYL_CAP;

    #[test]
    fn axiom_names_match_serialization() {
        use Axiom::*;
        for a in [
            SimpleSet, DuplicateLabel, Arity, UnknownLabel, CrossInvolution, CayleyDomain, ComplexPair, ArrowLength,
            ParityICrossFixed, ParityICayleyPair, ParityIICrossMoves, ParityIICayleyShared, CayleyBackLink,
            FixedStatusCross, Braid,
        ] {
            assert_eq!(serde_json::to_value(a).unwrap(), a.name());
        }
    }

    #[test]
    fn builtin_blocks_validate() {
        assert!(validate_block(&builtin_sl2r_block()).is_empty());
        assert!(validate_block(&builtin_pgl2r_block()).is_empty());
        assert!(validate_block(&builtin_su21_block()).is_empty());
        assert!(validate_block(&trivial_block()).is_empty());
    }

    #[test]
    fn edited_length_is_reported() {
        let mut b = builtin_sl2r_block();
        b.params[2].length = 2;
        let v = validate_block(&b);
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.axiom == Axiom::ArrowLength));
        assert!(v[0].message.contains("arrow length must drop by 1"));
    }

    #[test]
    fn complex_blocks() {
        let a1 = generate_complex_block(&RootDatum::sl2(), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.params.iter().map(|p| p.length).collect::<Vec<_>>(), vec![0, 1]);

        let a2 = generate_complex_block(&RootDatum::type_a(2), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(a2.len(), 6);
        assert!(validate_block(&a2).is_empty());
        assert_eq!(a2.params.iter().filter(|p| p.length == 3).count(), 1);
        assert_eq!(a2.simples[0].braid, vec![1, 3]);

        let a3 = generate_complex_block(&RootDatum::type_a(3), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(a3.len(), 24);
        assert!(validate_block(&a3).is_empty());
        assert!(a3.param("s2s1s3s2").is_ok());
    }

    #[test]
    fn minimality() {
        let b = builtin_sl2r_block();
        assert!(is_minimal(&b, "D+").unwrap());
        assert!(!is_minimal(&b, "P").unwrap());
        let a2 = generate_complex_block(&RootDatum::type_a(2), DEFAULT_WEYL_CAP).unwrap();
        assert!(is_minimal(&a2, "e").unwrap());
        assert!(is_minimal(&b, "nope").is_err());
    }

    #[test]
    fn products() {
        let x = builtin_sl2r_block();
        let mut renamed = x.clone();
        renamed.simples[0].name = "t".into();
        let p = product_block(&x, &renamed).unwrap();
        assert_eq!(p.len(), 9);
        assert!(validate_block(&p).is_empty());
        assert_eq!(p.param("P|P").unwrap().length, 2);
        assert!(matches!(product_block(&x, &x), Err(Error::SimpleCollision(_))));

        let with_trivial = product_block(&x, &trivial_block()).unwrap();
        assert_eq!(with_trivial.simples, x.simples);
        assert_eq!(with_trivial.params, x.relabel(|l| format!("{l}|triv")).params);
    }

    #[test]
    fn disjoint_unions() {
        let a = builtin_sl2r_block();
        let b = builtin_pgl2r_block();
        let u = disjoint_union(&a, &b).unwrap();
        assert_eq!(u.len(), 6);
        assert!(validate_block(&u).is_empty());
        assert!(disjoint_union(&a, &a).is_err());
    }

    #[test]
    fn json_round_trip() {
        let b = builtin_su21_block();
        assert_eq!(BlockData::from_json(&b.to_json()).unwrap(), b);
    }
}
