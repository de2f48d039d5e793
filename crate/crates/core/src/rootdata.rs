//! Root data with coroots and a lattice involution, integral subsystems,
//! explicit Weyl group enumeration and Levi/nilradical splittings.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{solve_affine, GaussRat};

/// Default bound on explicit Weyl group enumeration.
pub const DEFAULT_WEYL_CAP: usize = 10080;

pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootKind {
    Real,
    Imaginary,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Root>,
    coroots: Vec<Root>,
    theta: Vec<Vec<i64>>,
    index: HashMap<Root, usize>,
}

/// An element of the Weyl group as an integer matrix on the weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    entries: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        Self { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        WeylElement { rank: n, entries }
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j) * v[j]).sum())
            .collect()
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank).fold(GaussRat::zero(), |acc, j| {
                    let e = self.entry(i, j);
                    if e == 0 {
                        acc
                    } else {
                        &acc + &v[j].scale_int(e)
                    }
                })
            })
            .collect()
    }
}

/// On-disk form of a root datum, with an optional Levi selection.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootDatumFile {
    pub rank: usize,
    pub roots: Vec<Root>,
    pub coroots: Vec<Root>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<LeviFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeviFile {
    pub simple_base: Vec<Root>,
    pub levi_simples: Vec<usize>,
    pub a_coordinates: Vec<usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn is_lex_positive(v: &[i64]) -> bool {
    v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
}

impl RootDatum {
    pub fn new(rank: usize, roots: Vec<Root>, coroots: Vec<Root>, theta: Option<Vec<Vec<i64>>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidRootDatum(m));
        if rank == 0 {
            return bad("rank must be positive".into());
        }
        if roots.len() != coroots.len() {
            return bad(format!("{} roots but {} coroots", roots.len(), coroots.len()));
        }
        for v in roots.iter().chain(&coroots) {
            if v.len() != rank {
                return bad(format!("vector {v:?} does not have length {rank}"));
            }
        }
        let theta = theta.unwrap_or_else(|| WeylElement::identity(rank).rows());
        if theta.len() != rank || theta.iter().any(|r| r.len() != rank) {
            return bad("theta must be a rank x rank matrix".into());
        }
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if index.insert(r.clone(), i).is_some() {
                return bad(format!("duplicate root {r:?}"));
            }
        }
        let d = RootDatum { rank, roots, coroots, theta, index };
        d.check_axioms()?;
        Ok(d)
    }

    fn check_axioms(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRootDatum(m));
        for (i, a) in self.roots.iter().enumerate() {
            let neg: Root = a.iter().map(|x| -x).collect();
            let Some(&j) = self.index.get(&neg) else {
                return bad(format!("root {a:?} has no negative"));
            };
            let neg_co: Root = self.coroots[i].iter().map(|x| -x).collect();
            if self.coroots[j] != neg_co {
                return bad(format!("coroot of -{a:?} is not the negative coroot"));
            }
            if dot(&self.coroots[i], a) != 2 {
                return bad(format!("<coroot, root> != 2 for {a:?}"));
            }
            for b in &self.roots {
                if !self.index.contains_key(&self.reflect_int(i, b)) {
                    return bad(format!("reflection in {a:?} does not permute roots"));
                }
            }
        }
        let theta = self.theta_element();
        if !theta.compose(&theta).is_identity() {
            return bad("theta is not an involution".into());
        }
        for a in &self.roots {
            if !self.index.contains_key(&theta.apply_int(a)) {
                return bad(format!("theta does not map root {a:?} to a root"));
            }
        }
        Ok(())
    }

    pub fn from_file(f: &RootDatumFile) -> Result<(Self, Option<LeviSelection>)> {
        let d = RootDatum::new(f.rank, f.roots.clone(), f.coroots.clone(), f.theta.clone())?;
        let lv = match &f.levi {
            Some(l) => Some(LeviSelection::new(
                &d,
                l.simple_base.clone(),
                l.levi_simples.clone(),
                l.a_coordinates.clone(),
            )?),
            None => None,
        };
        Ok((d, lv))
    }

    pub fn to_file(&self, levi: Option<&LeviSelection>) -> RootDatumFile {
        RootDatumFile {
            rank: self.rank,
            roots: self.roots.clone(),
            coroots: self.coroots.clone(),
            theta: Some(self.theta.clone()),
            levi: levi.map(|l| LeviFile {
                simple_base: l.simple_base.clone(),
                levi_simples: l.levi_simples.clone(),
                a_coordinates: l.a_coordinates.clone(),
            }),
        }
    }

    /// Rank one datum with root `2` and coroot `1`.
    pub fn sl2() -> Self {
        RootDatum::new(1, vec![vec![2], vec![-2]], vec![vec![1], vec![-1]], None).expect("valid")
    }

    /// Type A_n on Z^{n+1}: roots `e_i - e_j`, coroots equal to roots.
    pub fn type_a(n: usize) -> Self {
        let dim = n + 1;
        let mut roots = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    let mut r = vec![0; dim];
                    r[i] = 1;
                    r[j] = -1;
                    roots.push(r);
                }
            }
        }
        RootDatum::new(dim, roots.clone(), roots, None).expect("valid")
    }

    /// Type B_n on Z^n: long roots `±e_i ± e_j`, short roots `±e_i` with coroots `±2e_i`.
    pub fn type_b(n: usize) -> Self {
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for i in 0..n {
            for s in [1, -1] {
                let mut r = vec![0; n];
                r[i] = s;
                roots.push(r.clone());
                coroots.push(r.iter().map(|x| 2 * x).collect());
            }
            for j in i + 1..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut r = vec![0; n];
                    r[i] = si;
                    r[j] = sj;
                    roots.push(r.clone());
                    coroots.push(r);
                }
            }
        }
        RootDatum::new(n, roots, coroots, None).expect("valid")
    }

    /// Direct sum; theta is block diagonal.
    pub fn product(a: &RootDatum, b: &RootDatum) -> Self {
        let rank = a.rank + b.rank;
        let pad = |v: &Root, left: bool| -> Root {
            let (l, r) = if left { (v.clone(), vec![0; b.rank]) } else { (vec![0; a.rank], v.clone()) };
            l.into_iter().chain(r).collect()
        };
        let mut roots: Vec<Root> = a.roots.iter().map(|r| pad(r, true)).collect();
        roots.extend(b.roots.iter().map(|r| pad(r, false)));
        let mut coroots: Vec<Root> = a.coroots.iter().map(|r| pad(r, true)).collect();
        coroots.extend(b.coroots.iter().map(|r| pad(r, false)));
        let mut theta = vec![vec![0; rank]; rank];
        for i in 0..a.rank {
            for j in 0..a.rank {
                theta[i][j] = a.theta[i][j];
            }
        }
        for i in 0..b.rank {
            for j in 0..b.rank {
                theta[a.rank + i][a.rank + j] = b.theta[i][j];
            }
        }
        RootDatum::new(rank, roots, coroots, Some(theta)).expect("sum of valid data is valid")
    }

    pub fn with_theta(&self, theta: Vec<Vec<i64>>) -> Result<Self> {
        RootDatum::new(self.rank, self.roots.clone(), self.coroots.clone(), Some(theta))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn coroot(&self, i: usize) -> &Root {
        &self.coroots[i]
    }

    pub fn theta(&self) -> &[Vec<i64>] {
        &self.theta
    }

    pub fn theta_element(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            entries: self.theta.iter().flatten().copied().collect(),
        }
    }

    pub fn root_index(&self, alpha: &[i64]) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    fn require_root(&self, alpha: &[i64]) -> Result<usize> {
        self.root_index(alpha).ok_or_else(|| Error::NotARoot(alpha.to_vec()))
    }

    /// `<coroot_i, x>` on an exact vector.
    pub fn pairing(&self, i: usize, x: &[GaussRat]) -> GaussRat {
        self.coroots[i]
            .iter()
            .zip(x)
            .filter(|(c, _)| **c != 0)
            .fold(GaussRat::zero(), |acc, (c, v)| &acc + &v.scale_int(*c))
    }

    pub fn pairing_int(&self, i: usize, x: &[i64]) -> i64 {
        dot(&self.coroots[i], x)
    }

    fn reflect_int(&self, i: usize, v: &[i64]) -> Root {
        let k = self.pairing_int(i, v);
        v.iter().zip(&self.roots[i]).map(|(x, a)| x - k * a).collect()
    }

    /// Matrix of `s_alpha: x -> x - <coroot, x> alpha`.
    pub fn reflection(&self, i: usize) -> WeylElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] = i64::from(r == c) - self.roots[i][r] * self.coroots[i][c];
            }
        }
        WeylElement { rank: n, entries }
    }

    pub fn classify_root(&self, alpha: &[i64]) -> Result<RootKind> {
        self.require_root(alpha)?;
        let image = self.theta_element().apply_int(alpha);
        Ok(if image == alpha {
            RootKind::Imaginary
        } else if image.iter().zip(alpha).all(|(x, a)| *x == -a) {
            RootKind::Real
        } else {
            RootKind::Complex
        })
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| is_lex_positive(&self.roots[i])).collect()
    }

    /// Simple roots of the lexicographic positive system, sorted
    /// lexicographically descending.
    pub fn simple_roots(&self) -> Vec<Root> {
        let pos = self.positive_roots();
        simple_subset(&self.roots, &pos).into_iter().map(|i| self.roots[i].clone()).collect()
    }

    /// `R(lambda)`: roots whose pairing with `lambda` is a rational integer.
    pub fn integral_subsystem(&self, lambda: &[GaussRat]) -> Vec<Root> {
        self.integral_indices(lambda).into_iter().map(|i| self.roots[i].clone()).collect()
    }

    pub fn integral_indices(&self, lambda: &[GaussRat]) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.pairing(i, lambda).is_integer()).collect()
    }

    /// True when theta maps the given set of roots to itself.
    pub fn is_theta_stable(&self, set: &[Root]) -> bool {
        let theta = self.theta_element();
        let members: HashSet<&Root> = set.iter().collect();
        set.iter().all(|a| members.contains(&theta.apply_int(a)))
    }

    /// True when every reflection in `set` maps `set` to itself.
    pub fn is_closed_under_reflections(&self, set: &[Root]) -> bool {
        let members: HashSet<&Root> = set.iter().collect();
        set.iter().all(|a| {
            let i = self.index[a];
            set.iter().all(|b| members.contains(&self.reflect_int(i, b)))
        })
    }

    /// Simple roots of `R+(lambda) = { alpha in R(lambda) : <coroot, lambda> > 0 }`.
    pub fn positive_system(&self, lambda: &[GaussRat]) -> Result<Vec<Root>> {
        let integral = self.integral_indices(lambda);
        let mut positive = Vec::new();
        for &i in &integral {
            let p = self.pairing(i, lambda);
            if p.is_zero() {
                return Err(Error::SingularOnIntegralSystem(self.roots[i].clone()));
            }
            if p.re() > &num_rational::BigRational::from_integer(0.into()) {
                positive.push(i);
            }
        }
        Ok(simple_subset(&self.roots, &positive).into_iter().map(|i| self.roots[i].clone()).collect())
    }

    fn generate(&self, gens: &[WeylElement], cap: usize) -> Result<Vec<WeylElement>> {
        let id = WeylElement::identity(self.rank);
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in gens {
                let next = g.compose(&w);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::WeylCapExceeded { cap });
                    }
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(order)
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        self.simple_roots().iter().map(|r| self.reflection(self.index[r])).collect()
    }

    /// All Weyl group elements in breadth-first order from the identity.
    pub fn weyl_enumerate(&self, cap: usize) -> Result<Vec<WeylElement>> {
        self.generate(&self.simple_reflections(), cap)
    }

    pub fn weyl_stabilizer(&self, xi: &[GaussRat], cap: usize) -> Result<Vec<WeylElement>> {
        Ok(self
            .weyl_enumerate(cap)?
            .into_iter()
            .filter(|w| w.apply(xi) == xi)
            .collect())
    }

    /// Subgroup generated by reflections in the given roots.
    pub fn reflection_subgroup(&self, roots: &[Root], cap: usize) -> Result<Vec<WeylElement>> {
        let gens: Vec<WeylElement> = roots
            .iter()
            .map(|r| self.require_root(r).map(|i| self.reflection(i)))
            .collect::<Result<_>>()?;
        self.generate(&gens, cap)
    }

    /// Cartan integers `<coroot_i, alpha_j>` for an ordered list of roots.
    pub fn cartan_matrix(&self, simples: &[Root]) -> Result<Vec<Vec<i64>>> {
        let idx: Vec<usize> = simples.iter().map(|r| self.require_root(r)).collect::<Result<_>>()?;
        Ok(idx
            .iter()
            .map(|&i| simples.iter().map(|b| self.pairing_int(i, b)).collect())
            .collect())
    }
}

/// Indecomposable members of a positive system: those not a sum of two
/// members. Returned sorted lexicographically descending.
fn simple_subset(roots: &[Root], positive: &[usize]) -> Vec<usize> {
    let members: HashSet<&Root> = positive.iter().map(|&i| &roots[i]).collect();
    let mut simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| {
            !positive.iter().any(|&j| {
                let diff: Root = roots[i].iter().zip(&roots[j]).map(|(a, b)| a - b).collect();
                j != i && members.contains(&diff)
            })
        })
        .collect();
    simple.sort_by(|&a, &b| roots[b].cmp(&roots[a]));
    simple
}

/// A Levi factor given by a subset of a chosen simple base, together with
/// the coordinates spanning the split central part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviSelection {
    pub simple_base: Vec<Root>,
    pub levi_simples: Vec<usize>,
    pub a_coordinates: Vec<usize>,
    /// Coefficients of every root (in datum order) in `simple_base`.
    expansions: Vec<Vec<i64>>,
}

impl LeviSelection {
    pub fn new(d: &RootDatum, simple_base: Vec<Root>, levi_simples: Vec<usize>, a_coordinates: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidLevi(m));
        for r in &simple_base {
            if d.root_index(r).is_none() {
                return bad(format!("simple base element {r:?} is not a root"));
            }
        }
        if let Some(&i) = levi_simples.iter().find(|&&i| i >= simple_base.len()) {
            return bad(format!("levi simple index {i} out of range"));
        }
        if let Some(&i) = a_coordinates.iter().find(|&&i| i >= d.rank()) {
            return bad(format!("a-coordinate {i} out of range"));
        }
        let n = simple_base.len();
        let matrix: Vec<Vec<GaussRat>> = (0..d.rank())
            .map(|row| (0..n).map(|c| GaussRat::from_int(simple_base[c][row])).collect())
            .collect();
        let mut expansions = Vec::with_capacity(d.roots().len());
        for a in d.roots() {
            let rhs: Vec<GaussRat> = a.iter().map(|x| GaussRat::from_int(*x)).collect();
            let Some((x, null)) = solve_affine(&matrix, &rhs) else {
                return bad(format!("root {a:?} is not in the span of the simple base"));
            };
            if !null.is_empty() {
                return bad("simple base is linearly dependent".into());
            }
            let mut coeffs = Vec::with_capacity(n);
            for c in &x {
                if !c.is_integer() {
                    return bad(format!("root {a:?} is not an integer combination of the base"));
                }
                coeffs.push(i64::try_from(c.re().to_integer()).map_err(|_| Error::CoefficientOutOfRange)?);
            }
            if coeffs.iter().any(|c| *c > 0) && coeffs.iter().any(|c| *c < 0) {
                return bad(format!("root {a:?} has mixed-sign coefficients"));
            }
            expansions.push(coeffs);
        }
        let lv = LeviSelection { simple_base, levi_simples, a_coordinates, expansions };
        for i in lv.levi_root_indices() {
            if lv.a_coordinates.iter().any(|&c| d.coroot(i)[c] != 0) {
                return bad(format!("Levi root {:?} does not vanish on the a-coordinates", d.roots()[i]));
            }
        }
        Ok(lv)
    }

    /// Levi equal to the whole group, with no split centre.
    pub fn full(d: &RootDatum) -> Self {
        let base = d.simple_roots();
        let all = (0..base.len()).collect();
        LeviSelection::new(d, base, all, vec![]).expect("lexicographic base is valid")
    }

    fn in_levi(&self, i: usize) -> bool {
        self.expansions[i]
            .iter()
            .enumerate()
            .all(|(k, c)| *c == 0 || self.levi_simples.contains(&k))
    }

    /// Indices of `R(l)`.
    pub fn levi_root_indices(&self) -> Vec<usize> {
        (0..self.expansions.len()).filter(|&i| self.in_levi(i)).collect()
    }

    /// Indices of `R(n)`: positive roots outside the Levi.
    pub fn nilradical_root_indices(&self) -> Vec<usize> {
        (0..self.expansions.len())
            .filter(|&i| !self.in_levi(i) && self.expansions[i].iter().any(|c| *c > 0))
            .collect()
    }

    pub fn levi_roots(&self, d: &RootDatum) -> Vec<Root> {
        self.levi_root_indices().into_iter().map(|i| d.roots()[i].clone()).collect()
    }

    pub fn nilradical_roots(&self, d: &RootDatum) -> Vec<Root> {
        self.nilradical_root_indices().into_iter().map(|i| d.roots()[i].clone()).collect()
    }

    pub fn levi_simple_roots(&self) -> Vec<Root> {
        self.levi_simples.iter().map(|&i| self.simple_base[i].clone()).collect()
    }

    pub fn levi_weyl_group(&self, d: &RootDatum, cap: usize) -> Result<Vec<WeylElement>> {
        d.reflection_subgroup(&self.levi_simple_roots(), cap)
    }
}

/// Infinitesimal character `xi = xi_M + nu` in exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfChar {
    pub coords: Vec<GaussRat>,
    pub m_part: Vec<GaussRat>,
    pub nu_part: Vec<GaussRat>,
}

impl InfChar {
    /// Splits `coords` along the a-coordinates.
    pub fn decompose(coords: Vec<GaussRat>, a_coordinates: &[usize]) -> Self {
        let mut m_part = coords.clone();
        let mut nu_part = vec![GaussRat::zero(); coords.len()];
        for &c in a_coordinates {
            nu_part[c] = std::mem::take(&mut m_part[c]);
        }
        InfChar { coords, m_part, nu_part }
    }

    /// Builds `xi` from its parts; the supports must respect the a-coordinates.
    pub fn from_parts(m_part: Vec<GaussRat>, nu_part: Vec<GaussRat>, a_coordinates: &[usize]) -> Result<Self> {
        if m_part.len() != nu_part.len() {
            return Err(Error::Dimension { expected: m_part.len(), got: nu_part.len() });
        }
        for i in 0..m_part.len() {
            let on_a = a_coordinates.contains(&i);
            if (on_a && !m_part[i].is_zero()) || (!on_a && !nu_part[i].is_zero()) {
                return Err(Error::InvalidLevi(format!("coordinate {i}: xi_M and nu supports overlap the a-coordinates incorrectly")));
            }
        }
        let coords = m_part.iter().zip(&nu_part).map(|(a, b)| a + b).collect();
        Ok(InfChar { coords, m_part, nu_part })
    }

    /// Infinitesimal character with no split part.
    pub fn plain(coords: Vec<GaussRat>) -> Self {
        Self::decompose(coords, &[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[(i64, i64)]) -> Vec<GaussRat> {
        v.iter().map(|(n, d)| GaussRat::ratio(*n, *d)).collect()
    }

    #[test]
    fn classify_under_identity_and_minus_identity() {
        let a2 = RootDatum::type_a(2);
        for r in a2.roots() {
            assert_eq!(a2.classify_root(r).unwrap(), RootKind::Imaginary);
        }
        let minus: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
        let split = a2.with_theta(minus).unwrap();
        for r in split.roots() {
            assert_eq!(split.classify_root(r).unwrap(), RootKind::Real);
        }
        assert!(matches!(a2.classify_root(&[1, 1, 0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn classify_swap_is_complex() {
        let a1a1 = RootDatum::product(&RootDatum::sl2(), &RootDatum::sl2());
        let swapped = a1a1.with_theta(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swapped.classify_root(&[2, 0]).unwrap(), RootKind::Complex);
        assert_eq!(swapped.classify_root(&[-2, 0]).unwrap(), RootKind::Complex);
    }

    #[test]
    fn integral_subsystems() {
        let a2 = RootDatum::type_a(2);
        // rho = (1, 0, -1): all simple pairings 1.
        assert_eq!(a2.integral_subsystem(&g(&[(1, 1), (0, 1), (-1, 1)])).len(), 6);
        // <a1, lambda> = 1, <a2, lambda> = 1/2.
        let lambda = g(&[(3, 2), (1, 2), (0, 1)]);
        let mut r = a2.integral_subsystem(&lambda);
        r.sort();
        assert_eq!(r, vec![vec![-1, 1, 0], vec![1, -1, 0]]);
        let sl2 = RootDatum::sl2();
        assert!(sl2.integral_subsystem(&g(&[(1, 2)])).is_empty());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(RootDatum::sl2().weyl_enumerate(DEFAULT_WEYL_CAP).unwrap().len(), 2);
        assert_eq!(RootDatum::type_a(2).weyl_enumerate(DEFAULT_WEYL_CAP).unwrap().len(), 6);
        assert_eq!(RootDatum::type_b(2).weyl_enumerate(DEFAULT_WEYL_CAP).unwrap().len(), 8);
        assert_eq!(RootDatum::type_a(3).weyl_enumerate(DEFAULT_WEYL_CAP).unwrap().len(), 24);
        assert!(matches!(
            RootDatum::type_a(3).weyl_enumerate(10),
            Err(Error::WeylCapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn stabilizers() {
        let a2 = RootDatum::type_a(2);
        let rho = g(&[(1, 1), (0, 1), (-1, 1)]);
        let st = a2.weyl_stabilizer(&rho, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(st.len(), 1);
        assert!(st[0].is_identity());
        assert_eq!(a2.weyl_stabilizer(&g(&[(0, 1); 3]), DEFAULT_WEYL_CAP).unwrap().len(), 6);
        let st = a2.weyl_stabilizer(&g(&[(0, 1), (0, 1), (1, 1)]), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(st.len(), 2);
        assert!(st.contains(&a2.reflection(a2.root_index(&[1, -1, 0]).unwrap())));
    }

    #[test]
    fn positive_systems() {
        let sl2 = RootDatum::sl2();
        assert_eq!(sl2.positive_system(&g(&[(2, 1)])).unwrap(), vec![vec![2]]);
        let a2 = RootDatum::type_a(2);
        assert_eq!(
            a2.positive_system(&g(&[(2, 1), (1, 1), (0, 1)])).unwrap(),
            vec![vec![1, -1, 0], vec![0, 1, -1]]
        );
        // <a1, lambda> = -1, <a2, lambda> = 1/2.
        assert_eq!(a2.positive_system(&g(&[(0, 1), (1, 1), (1, 2)])).unwrap(), vec![vec![-1, 1, 0]]);
        assert!(matches!(
            a2.positive_system(&g(&[(0, 1), (0, 1), (1, 2)])),
            Err(Error::SingularOnIntegralSystem(_))
        ));
    }

    #[test]
    fn simple_roots_are_lexicographic() {
        assert_eq!(RootDatum::type_a(2).simple_roots(), vec![vec![1, -1, 0], vec![0, 1, -1]]);
        assert_eq!(RootDatum::type_b(2).simple_roots(), vec![vec![1, -1], vec![0, 1]]);
    }

    #[test]
    fn levi_decomposition() {
        let a2 = RootDatum::type_a(2);
        let lv = LeviSelection::new(&a2, a2.simple_roots(), vec![0], vec![2]).unwrap();
        assert_eq!(lv.levi_roots(&a2).len(), 2);
        let mut n = lv.nilradical_roots(&a2);
        n.sort();
        assert_eq!(n, vec![vec![0, 1, -1], vec![1, 0, -1]]);
        // a-coordinate 0 is not central for the Levi {e1 - e2}.
        assert!(LeviSelection::new(&a2, a2.simple_roots(), vec![0], vec![0]).is_err());
    }

    #[test]
    fn rejects_bad_data() {
        assert!(RootDatum::new(1, vec![vec![2]], vec![vec![1]], None).is_err());
        assert!(RootDatum::new(1, vec![vec![2], vec![-2]], vec![vec![2], vec![-2]], None).is_err());
        assert!(RootDatum::sl2().with_theta(vec![vec![2]]).is_err());
    }

    #[test]
    fn integral_subsystem_is_closed_and_theta_stable() {
        let b2 = RootDatum::type_b(2);
        let lambda = g(&[(1, 2), (0, 1)]);
        let r = b2.integral_subsystem(&lambda);
        assert_eq!(r.len(), 4);
        assert!(b2.is_closed_under_reflections(&r));
        assert!(b2.is_theta_stable(&r));
    }
}
