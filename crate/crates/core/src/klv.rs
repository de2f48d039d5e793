//! Block partition, order, duality map, self-dual basis and multiplicity
//! matrices for a validated block file.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::blockdata::{BlockData, IndexedBlock, SimpleStatus};
use crate::error::{Error, Result};
use crate::gauss::{solve_affine, GaussRat};
use crate::hecke::{apply_t_plus_one, apply_t_vec, SparseVec};
use crate::laurent::{Degree, LaurentPoly};

/// Equivalence classes generated by noncompact Cayley links and complex
/// cross actions. Classes are listed in the canonical order, each class
/// sorted by length then label.
pub fn partition_blocks(b: &IndexedBlock) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::<usize>::new(b.len());
    for i in 0..b.len() {
        for s in 0..b.rank() {
            let st = b.status(i, s);
            if st.is_complex() {
                uf.union(i, b.cross(i, s));
            }
            if st.is_noncompact_imaginary() {
                for &c in b.cayley(i, s) {
                    uf.union(i, c);
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in canonical_order(b) {
        classes.entry(uf.find(i)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    let rank = position_map(b);
    out.sort_by_key(|c| rank[c[0]]);
    out
}

/// Indices sorted by length, then label.
pub fn canonical_order(b: &IndexedBlock) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..b.len()).collect();
    idx.sort_by(|&x, &y| (b.length(x), b.label(x)).cmp(&(b.length(y), b.label(y))));
    idx
}

fn position_map(b: &IndexedBlock) -> Vec<usize> {
    let mut pos = vec![0; b.len()];
    for (k, i) in canonical_order(b).into_iter().enumerate() {
        pos[i] = k;
    }
    pos
}

/// The order relation as down-sets: `down[g]` holds every `f <= g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    pub down: Vec<BTreeSet<usize>>,
}

impl Order {
    pub fn le(&self, f: usize, g: usize) -> bool {
        self.down[g].contains(&f)
    }

    /// Strict covering-free listing of pairs `f < g`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (g, d) in self.down.iter().enumerate() {
            out.extend(d.iter().filter(|&&f| f != g).map(|&f| (f, g)));
        }
        out
    }
}

/// Down-sets built level by level. Along a descent `g ->s p` the set of `g`
/// contains `p`, everything below `p`, and the support of `T_s x` for every
/// `x` below `p`, cut to lengths below `l(g)` and closed downward.
pub fn compute_order(b: &IndexedBlock) -> Order {
    let mut down: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); b.len()];
    for g in canonical_order(b) {
        let lg = b.length(g);
        let mut cand = BTreeSet::new();
        for s in 0..b.rank() {
            for p in b.descent_targets(g, s) {
                cand.insert(p);
                for &x in &down[p] {
                    cand.insert(x);
                    cand.extend(apply_t_vec(b, s, &SparseVec::basis(x)).support());
                }
            }
        }
        let mut d = BTreeSet::from([g]);
        for c in cand {
            if b.length(c) < lg {
                d.extend(down[c].iter().copied());
            }
        }
        down[g] = d;
    }
    Order { down }
}

/// `R_{f g}`, keyed by `(f, g)`; absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RMatrix {
    pub entries: BTreeMap<(usize, usize), LaurentPoly>,
}

/// `P_{f g}`, keyed by `(f, g)`; absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PMatrix {
    pub entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl RMatrix {
    pub fn get(&self, f: usize, g: usize) -> LaurentPoly {
        self.entries.get(&(f, g)).cloned().unwrap_or_default()
    }

    fn set(&mut self, f: usize, g: usize, p: LaurentPoly) {
        if p.is_zero() {
            self.entries.remove(&(f, g));
        } else {
            self.entries.insert((f, g), p);
        }
    }
}

impl PMatrix {
    pub fn get(&self, f: usize, g: usize) -> LaurentPoly {
        self.entries.get(&(f, g)).cloned().unwrap_or_default()
    }
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `D(g)` assembled from a column of `R`.
fn d_from_r(b: &IndexedBlock, r: &RMatrix, g: usize) -> SparseVec {
    let lg = b.length(g);
    let mut out = SparseVec::zero();
    for ((f, gg), p) in r.entries.range((0, g)..) {
        if *gg != g {
            continue;
        }
        let c = p.scale(&BigInt::from(sign(lg - b.length(*f)))).shift(-2 * lg as i32);
        out.add_term(*f, &c);
    }
    out
}

/// `D(v)` for a vector whose support has known images.
fn apply_d(dual: &[Option<SparseVec>], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::zero();
    for (i, c) in v.iter() {
        let di = dual[i].as_ref().expect("image of lower element is known");
        out.add_scaled(di, &c.bar());
    }
    out
}

/// Module element affine in integer unknowns: `constant + sum x_j * vars[j]`.
#[derive(Clone, Debug, Default)]
struct Affine {
    constant: SparseVec,
    vars: BTreeMap<usize, SparseVec>,
}

impl Affine {
    fn known(v: SparseVec) -> Self {
        Affine { constant: v, vars: BTreeMap::new() }
    }

    fn map(&self, f: impl Fn(&SparseVec) -> SparseVec) -> Affine {
        Affine { constant: f(&self.constant), vars: self.vars.iter().map(|(k, v)| (*k, f(v))).collect() }
    }

    fn add_scaled(&mut self, o: &Affine, c: &LaurentPoly) {
        self.constant.add_scaled(&o.constant, c);
        for (k, v) in &o.vars {
            self.vars.entry(*k).or_default().add_scaled(v, c);
        }
    }

    fn plus(&self, o: &Affine) -> Affine {
        let mut out = self.clone();
        out.add_scaled(o, &LaurentPoly::one());
        out
    }

    fn minus(&self, o: &Affine) -> Affine {
        let mut out = self.clone();
        out.add_scaled(o, &LaurentPoly::constant(-1));
        out
    }
}

/// Linear equations `row . x = rhs` over Q.
#[derive(Default)]
struct System {
    nvars: usize,
    rows: Vec<(BTreeMap<usize, BigInt>, BigInt)>,
}

impl System {
    /// Requires `a = 0` coefficientwise.
    fn vanish(&mut self, a: &Affine) {
        let mut keys: BTreeSet<(usize, i32)> = BTreeSet::new();
        for v in std::iter::once(&a.constant).chain(a.vars.values()) {
            for (i, c) in v.iter() {
                keys.extend(c.terms().map(|(e, _)| (i, e)));
            }
        }
        for (i, e) in keys {
            let row: BTreeMap<usize, BigInt> = a
                .vars
                .iter()
                .map(|(k, v)| (*k, v.get(i).coeff(e)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            self.rows.push((row, -a.constant.get(i).coeff(e)));
        }
    }

    fn solve(&self) -> Option<Vec<BigInt>> {
        let a: Vec<Vec<GaussRat>> = self
            .rows
            .iter()
            .map(|(row, _)| {
                (0..self.nvars)
                    .map(|k| GaussRat::real(BigRational::from_integer(row.get(&k).cloned().unwrap_or_default())))
                    .collect()
            })
            .collect();
        let rhs: Vec<GaussRat> =
            self.rows.iter().map(|(_, c)| GaussRat::real(BigRational::from_integer(c.clone()))).collect();
        if self.nvars == 0 {
            return rhs.iter().all(GaussRat::is_zero).then(Vec::new);
        }
        let (x, null) = solve_affine(&a, &rhs)?;
        if !null.is_empty() {
            return None;
        }
        x.iter().map(|g| g.is_integer().then(|| g.re().to_integer())).collect()
    }
}

/// The duality map, returned through its `R` coefficients.
pub fn compute_duality(b: &IndexedBlock, order: &Order) -> Result<RMatrix> {
    let n = b.len();
    let mut dual: Vec<Option<SparseVec>> = vec![None; n];
    let u_inv = LaurentPoly::u_pow(1, -1);
    let by_len: BTreeMap<i64, Vec<usize>> = canonical_order(b).into_iter().fold(BTreeMap::new(), |mut m, i| {
        m.entry(b.length(i)).or_insert_with(Vec::new).push(i);
        m
    });
    for level in by_len.values() {
        let mut pending = Vec::new();
        for &g in level {
            match direct_dual(b, &dual, g, &u_inv) {
                Some(v) => dual[g] = Some(v),
                None => pending.push(g),
            }
        }
        if !pending.is_empty() {
            for (g, v) in joint_dual(b, order, &dual, &pending)? {
                dual[g] = Some(v);
            }
        }
    }
    let mut r = RMatrix::default();
    for g in 0..n {
        let lg = b.length(g);
        let dg = dual[g].as_ref().expect("every level solved");
        for (f, c) in dg.iter() {
            if !order.le(f, g) {
                return Err(Error::DualityUnsolvable(format!(
                    "D({}) involves {} outside its down-set",
                    b.label(g),
                    b.label(f)
                )));
            }
            let p = c.shift(2 * lg as i32).scale(&BigInt::from(sign(lg - b.length(f))));
            r.set(f, g, p);
        }
    }
    Ok(r)
}

/// `D(g)` when it is forced by one descent, or `u^{-l} g` when there is none.
fn direct_dual(b: &IndexedBlock, dual: &[Option<SparseVec>], g: usize, u_inv: &LaurentPoly) -> Option<SparseVec> {
    use SimpleStatus::*;
    let mut has_descent = false;
    for s in 0..b.rank() {
        match b.status(g, s) {
            ComplexDescent => {
                let p = b.cross(g, s);
                let dp = dual[p].as_ref()?;
                return Some(&apply_t_plus_one(b, s, dp).scale(u_inv) - dp);
            }
            RealParityI => {
                let (p, q) = (b.cayley(g, s)[0], b.cayley(g, s)[1]);
                let (dp, dq) = (dual[p].as_ref()?, dual[q].as_ref()?);
                return Some(&(&apply_t_plus_one(b, s, dp).scale(u_inv) - dp) - dq);
            }
            RealParityII => has_descent = true,
            _ => {}
        }
    }
    (!has_descent).then(|| SparseVec::monomial(g, LaurentPoly::u_pow(1, -b.length(g) as i32)))
}

/// Solves for every `D(g)` at one level whose descents are all of real
/// parity type II, as the unique integral solution of the constraints
/// forced by the Hecke relations, `D^2 = 1` and `D(1) = 1`.
fn joint_dual(
    b: &IndexedBlock,
    order: &Order,
    dual: &[Option<SparseVec>],
    pending: &[usize],
) -> Result<Vec<(usize, SparseVec)>> {
    use SimpleStatus::*;
    let mut sys = System::default();
    let mut unknown: BTreeMap<usize, Affine> = BTreeMap::new();
    let mut eval_rows = Vec::new();
    for &g in pending {
        let lg = b.length(g);
        let mut y = Affine::known(SparseVec::monomial(g, LaurentPoly::u_pow(1, -lg as i32)));
        for &f in order.down[g].iter().filter(|&&f| f != g) {
            let d = lg - b.length(f);
            let mut row = BTreeMap::new();
            for k in 0..=d {
                let c = LaurentPoly::u_pow(1, (k - lg) as i32).scale(&BigInt::from(sign(d)));
                y.vars.insert(sys.nvars, SparseVec::monomial(f, c));
                row.insert(sys.nvars, BigInt::one());
                sys.nvars += 1;
            }
            eval_rows.push(row);
        }
        unknown.insert(g, y);
    }
    let value = |i: usize| -> Affine {
        match unknown.get(&i) {
            Some(a) => a.clone(),
            None => Affine::known(dual[i].clone().expect("lower or direct image known")),
        }
    };
    let u = LaurentPoly::u();
    let u_inv = LaurentPoly::u_pow(1, -1);
    for &g in pending {
        let y = value(g);
        for s in 0..b.rank() {
            match b.status(g, s) {
                RealParityII => {
                    let p = b.cayley(g, s)[0];
                    let x = b.cross(g, s);
                    let dp = dual[p].as_ref().expect("Cayley target is lower");
                    let mut rhs = apply_t_plus_one(b, s, dp).scale(&u_inv);
                    rhs.add_scaled(dp, &LaurentPoly::constant(-2));
                    let yx = value(x);
                    sys.vanish(&y.plus(&yx).minus(&Affine::known(rhs)));
                    let diff = y.minus(&yx);
                    sys.vanish(&diff.map(|v| apply_t_vec(b, s, v)).minus(&diff.map(|v| v.scale(&u))));
                }
                CompactImaginary => sys.vanish(&y.map(|v| &apply_t_vec(b, s, v) - &v.scale(&u))),
                RealNonparity => sys.vanish(&y.map(|v| apply_t_plus_one(b, s, v))),
                _ => {}
            }
        }
        // D(D g) = g, with D(u^{-l} g) = u^l D(g).
        let lg = b.length(g);
        let mut dd = Affine::known(SparseVec::zero());
        dd.add_scaled(&y, &LaurentPoly::u_pow(1, lg as i32));
        let rest = Affine { constant: SparseVec::zero(), vars: y.vars.clone() };
        dd.add_scaled(&rest.map(|v| apply_d(dual, v)), &LaurentPoly::one());
        dd.constant.add_term(g, &LaurentPoly::constant(-1));
        sys.vanish(&dd);
    }
    for row in eval_rows {
        sys.rows.push((row, BigInt::zero()));
    }
    let labels = || pending.iter().map(|&g| b.label(g)).collect::<Vec<_>>().join(", ");
    let x = sys.solve().ok_or_else(|| Error::DualityUnsolvable(labels()))?;
    Ok(pending
        .iter()
        .map(|g| {
            let y = &unknown[g];
            let mut v = y.constant.clone();
            for (k, w) in &y.vars {
                v.add_scaled(w, &LaurentPoly::constant(x[*k].clone()));
            }
            (*g, v)
        })
        .collect())
}

/// Problems found when checking a candidate `R` against the duality
/// properties; empty means valid.
pub fn duality_violations(b: &IndexedBlock, order: &Order, r: &RMatrix) -> Vec<String> {
    let mut out = Vec::new();
    let n = b.len();
    for ((f, g), p) in &r.entries {
        let (f, g) = (*f, *g);
        let d = b.length(g) - b.length(f);
        if f == g {
            continue;
        }
        if !order.le(f, g) {
            out.push(format!("R({},{}) nonzero outside the order", b.label(f), b.label(g)));
        }
        if !p.is_polynomial_in_u() || p.degree() > Degree::HalfUnits(2 * d as i32) {
            out.push(format!("R({},{}) = {} violates the degree bound", b.label(f), b.label(g), p));
        }
        if !p.eval_at_one().is_zero() {
            out.push(format!("R({},{}) does not vanish at u = 1", b.label(f), b.label(g)));
        }
    }
    for g in 0..n {
        if !r.get(g, g).is_one() {
            out.push(format!("R({0},{0}) is not 1", b.label(g)));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let dual: Vec<Option<SparseVec>> = (0..n).map(|g| Some(d_from_r(b, r, g))).collect();
    for g in 0..n {
        let dg = dual[g].as_ref().unwrap();
        if apply_d(&dual, dg) != SparseVec::basis(g) {
            out.push(format!("D^2 is not the identity on {}", b.label(g)));
        }
        for s in 0..b.rank() {
            let lhs = apply_d(&dual, &apply_t_plus_one(b, s, &SparseVec::basis(g)));
            let rhs = apply_t_plus_one(b, s, dg).scale(&LaurentPoly::u_pow(1, -1));
            if lhs != rhs {
                out.push(format!("D fails to intertwine T_{} + 1 on {}", s, b.label(g)));
            }
        }
    }
    out
}

pub fn verify_duality(b: &IndexedBlock, order: &Order, r: &RMatrix) -> bool {
    duality_violations(b, order, r).is_empty()
}

/// Self-dual basis coefficients, one column per element.
pub fn compute_p(b: &IndexedBlock, order: &Order, r: &RMatrix) -> Result<PMatrix> {
    let cols: Vec<Result<Vec<((usize, usize), LaurentPoly)>>> =
        (0..b.len()).into_par_iter().map(|g| p_column(b, order, r, g)).collect();
    let mut p = PMatrix::default();
    for col in cols {
        p.entries.extend(col?);
    }
    Ok(p)
}

fn p_column(b: &IndexedBlock, order: &Order, r: &RMatrix, g: usize) -> Result<Vec<((usize, usize), LaurentPoly)>> {
    let lg = b.length(g);
    let mut below: Vec<usize> = order.down[g].iter().copied().filter(|&f| f != g).collect();
    below.sort_by_key(|&f| std::cmp::Reverse(b.length(f)));
    let mut col: BTreeMap<usize, LaurentPoly> = BTreeMap::from([(g, LaurentPoly::one())]);
    for f in below {
        let lf = b.length(f);
        let d = (lg - lf) as i32;
        let mut x = LaurentPoly::zero();
        for (&psi, pp) in &col {
            let rr = r.get(f, psi);
            if rr.is_zero() {
                continue;
            }
            let lp = b.length(psi);
            x += &(&pp.bar() * &rr).shift(-2 * lp as i32).scale(&BigInt::from(sign(lp - lf)));
        }
        let y = x.shift(lg as i32 + lf as i32);
        let neg = y.filter_exponents(|e| e < 0);
        let pf = neg.shift(d);
        let bad = || {
            Error::NoSelfDualSolution(format!("P({},{}) from {}", b.label(f), b.label(g), y))
        };
        let expect = &neg - &pf.bar().shift(d);
        if expect != y || !pf.is_polynomial_in_u() || pf.degree() > Degree::HalfUnits(d - 1) {
            return Err(bad());
        }
        if !pf.is_zero() {
            col.insert(f, pf);
        }
    }
    Ok(col.into_iter().map(|(f, p)| ((f, g), p)).collect())
}

/// Integer matrices in `order`: `big_m[a][b] = M(order[a], order[b])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultMatrices {
    pub order: Vec<usize>,
    pub big_m: Vec<Vec<i64>>,
    pub small_m: Vec<Vec<i64>>,
}

pub fn multiplicities(b: &IndexedBlock, p: &PMatrix) -> Result<MultMatrices> {
    let order = canonical_order(b);
    let n = order.len();
    let mut big_m = vec![vec![0i64; n]; n];
    for (a, &f) in order.iter().enumerate() {
        for (c, &g) in order.iter().enumerate() {
            let val = p.get(f, g).eval_at_one();
            if val.is_zero() {
                continue;
            }
            let val = val.to_i64().ok_or(Error::CoefficientOutOfRange)? * sign(b.length(g) - b.length(f));
            if a > c || (a == c && val != 1) {
                return Err(Error::NotUnitriangular(format!("entry ({}, {})", b.label(f), b.label(g))));
            }
            big_m[a][c] = val;
        }
    }
    for a in 0..n {
        if big_m[a][a] != 1 {
            return Err(Error::NotUnitriangular(format!("diagonal at {}", b.label(order[a]))));
        }
    }
    let mut small_m = vec![vec![0i64; n]; n];
    for c in 0..n {
        small_m[c][c] = 1;
        for a in (0..c).rev() {
            let mut acc = 0i64;
            for k in a + 1..=c {
                let t = big_m[a][k].checked_mul(small_m[k][c]).ok_or(Error::CoefficientOutOfRange)?;
                acc = acc.checked_sub(t).ok_or(Error::CoefficientOutOfRange)?;
            }
            small_m[a][c] = acc;
        }
    }
    Ok(MultMatrices { order, big_m, small_m })
}

/// Everything computed for one block file.
#[derive(Clone, Debug)]
pub struct KlvResult {
    pub block: IndexedBlock,
    pub classes: Vec<Vec<usize>>,
    pub order: Order,
    pub r: RMatrix,
    pub p: PMatrix,
    pub mult: MultMatrices,
}

impl KlvResult {
    pub fn label(&self, i: usize) -> &str {
        self.block.label(i)
    }

    /// `P_{f g}` by label.
    pub fn p_entry(&self, f: &str, g: &str) -> Result<LaurentPoly> {
        Ok(self.p.get(self.block.index_of(f)?, self.block.index_of(g)?))
    }

    pub fn r_entry(&self, f: &str, g: &str) -> Result<LaurentPoly> {
        Ok(self.r.get(self.block.index_of(f)?, self.block.index_of(g)?))
    }

    fn pos(&self, l: &str) -> Result<usize> {
        let i = self.block.index_of(l)?;
        Ok(self.mult.order.iter().position(|&k| k == i).expect("order is a permutation"))
    }

    /// `M(f, g)` by label.
    pub fn big_m(&self, f: &str, g: &str) -> Result<i64> {
        Ok(self.mult.big_m[self.pos(f)?][self.pos(g)?])
    }

    /// `m(f, g)` by label.
    pub fn small_m(&self, f: &str, g: &str) -> Result<i64> {
        Ok(self.mult.small_m[self.pos(f)?][self.pos(g)?])
    }

    pub fn order_labels(&self) -> Vec<String> {
        self.mult.order.iter().map(|&i| self.label(i).to_owned()).collect()
    }

    fn poly_table(&self, entries: &BTreeMap<(usize, usize), LaurentPoly>) -> Value {
        let mut t: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for ((f, g), p) in entries {
            t.entry(self.label(*g).to_owned()).or_default().insert(self.label(*f).to_owned(), p.to_string());
        }
        json!(t)
    }

    /// `{blocks, R, P, M, m, order}`; `R` and `P` are keyed by column then row.
    pub fn to_json(&self) -> Value {
        let blocks: Vec<Vec<&str>> =
            self.classes.iter().map(|c| c.iter().map(|&i| self.label(i)).collect()).collect();
        json!({
            "blocks": blocks,
            "R": self.poly_table(&self.r.entries),
            "P": self.poly_table(&self.p.entries),
            "M": self.mult.big_m,
            "m": self.mult.small_m,
            "order": self.order_labels(),
        })
    }

    /// Invariant failures beyond the duality properties.
    pub fn invariant_violations(&self) -> Vec<String> {
        let b = &self.block;
        let mut out = duality_violations(b, &self.order, &self.r);
        for ((f, g), p) in &self.p.entries {
            let (f, g) = (*f, *g);
            if f == g {
                if !p.is_one() {
                    out.push(format!("P({0},{0}) is not 1", self.label(g)));
                }
                continue;
            }
            let d = (b.length(g) - b.length(f)) as i32;
            if !self.order.le(f, g) || !p.is_polynomial_in_u() || p.degree() > Degree::HalfUnits(d - 1) {
                out.push(format!("P({},{}) = {} violates the degree bound", self.label(f), self.label(g), p));
            }
        }
        let n = self.mult.order.len();
        for a in 0..n {
            for c in 0..n {
                let prod: i64 = (0..n).map(|k| self.mult.small_m[a][k] * self.mult.big_m[k][c]).sum();
                if prod != i64::from(a == c) {
                    out.push("m is not the inverse of M".into());
                }
                let (f, g) = (self.mult.order[a], self.mult.order[c]);
                let v = self.mult.small_m[a][c];
                if a != c && v != 0 && b.length(f) >= b.length(g) {
                    out.push(format!("m({},{}) nonzero without a length drop", self.label(f), self.label(g)));
                }
            }
            let g = self.mult.order[a];
            let minimal = (0..b.rank()).all(|s| !b.status(g, s).is_descent());
            if minimal && (0..n).any(|k| k != a && self.mult.small_m[k][a] != 0) {
                out.push(format!("minimal parameter {} has a nontrivial m-column", self.label(g)));
            }
        }
        out.dedup();
        out
    }

    /// Entries where `m` is negative.
    pub fn negative_m_entries(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (a, row) in self.mult.small_m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < 0 {
                    out.push((self.label(self.mult.order[a]).to_owned(), self.label(self.mult.order[c]).to_owned()));
                }
            }
        }
        out
    }
}

/// Runs the whole pipeline on a block file.
pub fn run_klv(data: &BlockData) -> Result<KlvResult> {
    let block = data.indexed()?;
    let classes = partition_blocks(&block);
    let order = compute_order(&block);
    let r = compute_duality(&block, &order)?;
    let bad = duality_violations(&block, &order, &r);
    if !bad.is_empty() {
        return Err(Error::DualityUnsolvable(bad.join("; ")));
    }
    let p = compute_p(&block, &order, &r)?;
    let mult = multiplicities(&block, &p)?;
    Ok(KlvResult { block, classes, order, r, p, mult })
}
