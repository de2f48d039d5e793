//! Action of the Hecke algebra generators `T_s` on the free module with
//! basis a block.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::blockdata::{BlockData, IndexedBlock, SimpleStatus};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Sparse vector over basis indices of an `IndexedBlock`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::monomial(i, LaurentPoly::one())
    }

    pub fn monomial(i: usize, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(i, &c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn add_term(&mut self, i: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(i).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.coeffs {
            self.add_term(*i, &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> SparseVec {
        let mut out = SparseVec::zero();
        out.add_scaled(self, c);
        out
    }

    /// Evaluates every coefficient at `u = 1`.
    pub fn at_one(&self) -> BTreeMap<usize, num_bigint::BigInt> {
        self.coeffs
            .iter()
            .map(|(i, c)| (*i, c.eval_at_one()))
            .filter(|(_, c)| *c != num_bigint::BigInt::from(0))
            .collect()
    }
}

impl Add for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl Sub for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

/// Element of the Hecke module keyed by parameter label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleElement {
    pub coeffs: BTreeMap<String, LaurentPoly>,
}

impl ModuleElement {
    pub fn basis(label: &str) -> Self {
        ModuleElement { coeffs: BTreeMap::from([(label.to_owned(), LaurentPoly::one())]) }
    }

    pub fn to_sparse(&self, b: &IndexedBlock) -> Result<SparseVec> {
        let mut v = SparseVec::zero();
        for (l, c) in &self.coeffs {
            v.add_term(b.index_of(l)?, c);
        }
        Ok(v)
    }

    pub fn from_sparse(b: &IndexedBlock, v: &SparseVec) -> Self {
        ModuleElement { coeffs: v.iter().map(|(i, c)| (b.label(i).to_owned(), c.clone())).collect() }
    }
}

fn u_minus(k: i64) -> LaurentPoly {
    LaurentPoly::from_u_coeffs([-k, 1])
}

/// `T_s` on the basis vector `i`.
pub fn t_basis(b: &IndexedBlock, s: usize, i: usize) -> SparseVec {
    use SimpleStatus::*;
    let one = LaurentPoly::one();
    let x = b.cross(i, s);
    let cay = b.cayley(i, s);
    let mut out = SparseVec::zero();
    match b.status(i, s) {
        ComplexAscent => out.add_term(x, &one),
        ComplexDescent => {
            out.add_term(x, &LaurentPoly::u());
            out.add_term(i, &u_minus(1));
        }
        CompactImaginary => out.add_term(i, &LaurentPoly::u()),
        RealNonparity => out.add_term(i, &LaurentPoly::constant(-1)),
        NoncompactImaginaryI => {
            out.add_term(x, &one);
            out.add_term(cay[0], &one);
        }
        NoncompactImaginaryII => {
            out.add_term(i, &one);
            for &c in cay {
                out.add_term(c, &one);
            }
        }
        RealParityI => {
            out.add_term(i, &u_minus(2));
            for &c in cay {
                out.add_term(c, &u_minus(1));
            }
        }
        RealParityII => {
            out.add_term(i, &u_minus(1));
            out.add_term(x, &LaurentPoly::constant(-1));
            out.add_term(cay[0], &u_minus(1));
        }
    }
    out
}

pub fn apply_t_vec(b: &IndexedBlock, s: usize, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::zero();
    for (i, c) in v.iter() {
        out.add_scaled(&t_basis(b, s, i), c);
    }
    out
}

/// `(T_s + 1) v`.
pub fn apply_t_plus_one(b: &IndexedBlock, s: usize, v: &SparseVec) -> SparseVec {
    &apply_t_vec(b, s, v) + v
}

/// `T_s m` for a module element given by labels.
pub fn apply_t(b: &BlockData, s: usize, m: &ModuleElement) -> Result<ModuleElement> {
    let blk = b.indexed()?;
    if s >= blk.rank() {
        return Err(Error::UnknownSimple(s.to_string()));
    }
    let v = m.to_sparse(&blk)?;
    Ok(ModuleElement::from_sparse(&blk, &apply_t_vec(&blk, s, &v)))
}

/// First `(s, label)` where `(T_s - u)(T_s + 1)` does not vanish.
pub fn quadratic_counterexample(b: &IndexedBlock) -> Option<(usize, String)> {
    let u = LaurentPoly::u();
    for s in 0..b.rank() {
        for i in 0..b.len() {
            let tv = t_basis(b, s, i);
            let mut r = apply_t_vec(b, s, &tv);
            r.add_scaled(&tv, &(LaurentPoly::one() - u.clone()));
            r.add_term(i, &-&u);
            if !r.is_zero() {
                return Some((s, b.label(i).to_owned()));
            }
        }
    }
    None
}

/// True when the quadratic relation holds on every basis vector and simple.
pub fn check_quadratic(b: &BlockData) -> Result<(bool, Option<(usize, String)>)> {
    let cx = quadratic_counterexample(&b.indexed()?);
    Ok((cx.is_none(), cx))
}

/// First basis label on which the two alternating braid words differ.
pub fn braid_counterexample(b: &IndexedBlock, s: usize, t: usize) -> Option<String> {
    let m = b.data().braid_order(s, t) as usize;
    for i in 0..b.len() {
        let word = |first: usize, second: usize| {
            let mut v = SparseVec::basis(i);
            // Rightmost factor acts first; both words have length m.
            for k in 0..m {
                let gen = if (m - 1 - k) % 2 == 0 { first } else { second };
                v = apply_t_vec(b, gen, &v);
            }
            v
        };
        if word(s, t) != word(t, s) {
            return Some(b.label(i).to_owned());
        }
    }
    None
}

pub fn check_braid(b: &BlockData, s: usize, t: usize) -> Result<bool> {
    let blk = b.indexed()?;
    if s >= blk.rank() || t >= blk.rank() {
        return Err(Error::UnknownSimple(format!("{s},{t}")));
    }
    if s == t {
        return Ok(true);
    }
    Ok(braid_counterexample(&blk, s, t).is_none())
}
