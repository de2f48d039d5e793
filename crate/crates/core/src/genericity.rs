//! Exact checks of the genericity hypotheses on `xi = xi_M + nu`, and the
//! hyperplane arrangement they exclude.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{solve_affine, GaussRat};
use crate::rootdata::{InfChar, LeviSelection, Root, RootDatum, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Root(Root),
    Weyl(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    fn pass() -> Self {
        Check { holds: true, witness: None }
    }

    fn fail(w: Witness) -> Self {
        Check { holds: false, witness: Some(w) }
    }
}

/// Assembles `xi` from a full-length `xi_M` and `nu`, where `nu` is given
/// either on the a-coordinates only or in full.
pub fn inf_char(d: &RootDatum, lv: &LeviSelection, xi_m: Vec<GaussRat>, nu: Vec<GaussRat>) -> Result<InfChar> {
    if xi_m.len() != d.rank() {
        return Err(Error::Dimension { expected: d.rank(), got: xi_m.len() });
    }
    let nu = if nu.len() == d.rank() {
        nu
    } else if nu.len() == lv.a_coordinates.len() {
        let mut full = vec![GaussRat::zero(); d.rank()];
        for (&c, x) in lv.a_coordinates.iter().zip(nu) {
            full[c] = x;
        }
        full
    } else {
        return Err(Error::Dimension { expected: lv.a_coordinates.len(), got: nu.len() });
    };
    InfChar::from_parts(xi_m, nu, &lv.a_coordinates)
}

fn root_of(d: &RootDatum, i: usize) -> Witness {
    Witness::Root(d.roots()[i].clone())
}

/// Nonsingular on the Levi roots.
pub fn check_hyp_a(d: &RootDatum, lv: &LeviSelection, xi: &InfChar) -> Check {
    match lv.levi_root_indices().into_iter().find(|&i| d.pairing(i, &xi.coords).is_zero()) {
        Some(i) => Check::fail(root_of(d, i)),
        None => Check::pass(),
    }
}

/// No nilradical root pairs integrally with `xi`.
pub fn check_hyp_b(d: &RootDatum, lv: &LeviSelection, xi: &InfChar) -> Check {
    match lv.nilradical_root_indices().into_iter().find(|&i| d.pairing(i, &xi.coords).is_integer()) {
        Some(i) => Check::fail(root_of(d, i)),
        None => Check::pass(),
    }
}

/// First condition: `w nu - nu != xi_M - w xi_M` whenever the right side is
/// nonzero.
pub fn check_hyp_c1(d: &RootDatum, xi: &InfChar, cap: usize) -> Result<Check> {
    for w in d.weyl_enumerate(cap)? {
        let rhs = sub(&xi.m_part, &w.apply(&xi.m_part));
        if rhs.iter().all(GaussRat::is_zero) {
            continue;
        }
        if sub(&w.apply(&xi.nu_part), &xi.nu_part) == rhs {
            return Ok(Check::fail(Witness::Weyl(w.rows())));
        }
    }
    Ok(Check::pass())
}

/// Second condition: `nu` is nonsingular on the nilradical roots.
pub fn check_hyp_c2(d: &RootDatum, lv: &LeviSelection, xi: &InfChar) -> Check {
    match lv.nilradical_root_indices().into_iter().find(|&i| d.pairing(i, &xi.nu_part).is_zero()) {
        Some(i) => Check::fail(root_of(d, i)),
        None => Check::pass(),
    }
}

pub fn check_hyp_c(d: &RootDatum, lv: &LeviSelection, xi: &InfChar, cap: usize) -> Result<Check> {
    let c1 = check_hyp_c1(d, xi, cap)?;
    if !c1.holds {
        return Ok(c1);
    }
    Ok(check_hyp_c2(d, lv, xi))
}

/// The stabilizer of `xi` lies in the Levi Weyl group.
pub fn check_hyp_d(d: &RootDatum, lv: &LeviSelection, xi: &InfChar, cap: usize) -> Result<Check> {
    let levi: BTreeSet<WeylElement> = lv.levi_weyl_group(d, cap)?.into_iter().collect();
    Ok(match d.weyl_stabilizer(&xi.coords, cap)?.into_iter().find(|w| !levi.contains(w)) {
        Some(w) => Check::fail(Witness::Weyl(w.rows())),
        None => Check::pass(),
    })
}

fn sub(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    Main1,
    Main2,
    NoConclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub verdict: Conclusion,
    pub hyp_a: Check,
    pub hyp_b: Check,
    pub hyp_c1: Check,
    pub hyp_c2: Check,
    pub hyp_d: Check,
}

/// The strongest irreducibility theorem whose hypotheses hold. Failure of
/// the hypotheses never yields a reducibility claim.
pub fn verdict(d: &RootDatum, lv: &LeviSelection, xi: &InfChar, cap: usize) -> Result<VerdictReport> {
    let hyp_a = check_hyp_a(d, lv, xi);
    let hyp_b = check_hyp_b(d, lv, xi);
    let hyp_c1 = check_hyp_c1(d, xi, cap)?;
    let hyp_c2 = check_hyp_c2(d, lv, xi);
    let hyp_d = check_hyp_d(d, lv, xi, cap)?;
    let verdict = if hyp_a.holds && hyp_b.holds {
        Conclusion::Main1
    } else if hyp_b.holds && ((hyp_c1.holds && hyp_c2.holds) || hyp_d.holds) {
        Conclusion::Main2
    } else {
        Conclusion::NoConclusion
    };
    Ok(VerdictReport { verdict, hyp_a, hyp_b, hyp_c1, hyp_c2, hyp_d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    IntegerCoset,
    Zero,
    AffineSubspace,
}

/// One family of excluded `nu`. For the root kinds the hyperplanes are
/// `<coroot, nu> = value` for each listed value; for the affine kind the
/// excluded set is `{particular + span(null_basis)}` in a-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneFamily {
    pub kind: FamilyKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Root>,
    /// Coroot restricted to the a-coordinates.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub functional: Vec<i64>,
    /// `<coroot, xi_M>`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<GaussRat>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<GaussRat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weyl: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub matrix: Vec<Vec<GaussRat>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rhs: Vec<GaussRat>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub particular: Vec<GaussRat>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub null_basis: Vec<Vec<GaussRat>>,
}

impl HyperplaneFamily {
    fn root_family(kind: FamilyKind, root: Root, functional: Vec<i64>) -> Self {
        HyperplaneFamily {
            kind,
            root: Some(root),
            functional,
            offset: None,
            members: vec![],
            weyl: None,
            matrix: vec![],
            rhs: vec![],
            particular: vec![],
            null_basis: vec![],
        }
    }

    /// Whether `nu` (full coordinates) lies on some member of the family.
    pub fn contains(&self, lv: &LeviSelection, nu: &[GaussRat]) -> bool {
        let on_a: Vec<&GaussRat> = lv.a_coordinates.iter().map(|&c| &nu[c]).collect();
        match self.kind {
            FamilyKind::IntegerCoset | FamilyKind::Zero => {
                let val = pair_a(&self.functional, &on_a);
                self.members.contains(&val)
            }
            FamilyKind::AffineSubspace => self.matrix.iter().zip(&self.rhs).all(|(row, b)| {
                row.iter().zip(&on_a).fold(GaussRat::zero(), |acc, (a, x)| &acc + &(a * *x)) == *b
            }),
        }
    }
}

fn pair_a(functional: &[i64], x: &[&GaussRat]) -> GaussRat {
    functional.iter().zip(x).fold(GaussRat::zero(), |acc, (f, v)| &acc + &v.scale_int(*f))
}

fn floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

/// Hyperplanes excluded by the hypotheses for `nu` in the box `[lo, hi]` on
/// every a-coordinate (real parts). Integer cosets are enumerated inside the
/// window; zero planes and affine subspaces are listed whole.
pub fn emit_arrangement(
    d: &RootDatum,
    lv: &LeviSelection,
    xi_m: &[GaussRat],
    lo: &BigRational,
    hi: &BigRational,
    cap: usize,
) -> Result<Vec<HyperplaneFamily>> {
    if xi_m.len() != d.rank() {
        return Err(Error::Dimension { expected: d.rank(), got: xi_m.len() });
    }
    let mut out = Vec::new();
    let n_roots = lv.nilradical_root_indices();
    let functional = |i: usize| -> Vec<i64> { lv.a_coordinates.iter().map(|&c| d.coroot(i)[c]).collect() };
    for &i in &n_roots {
        let f = functional(i);
        if f.iter().all(|x| *x == 0) {
            continue;
        }
        let c = d.pairing(i, xi_m);
        // Range of <coroot, Re nu> over the box.
        let (mut min, mut max) = (BigRational::zero(), BigRational::zero());
        for &x in &f {
            let xr = BigRational::from_integer(x.into());
            let (a, b) = (&xr * lo, &xr * hi);
            if a <= b {
                min += a;
                max += b;
            } else {
                min += b;
                max += a;
            }
        }
        // Members k - c with Re(k - c) in [min, max].
        let (kmin, kmax) = (ceil(&(&min + c.re())), floor(&(&max + c.re())));
        let mut fam = HyperplaneFamily::root_family(FamilyKind::IntegerCoset, d.roots()[i].clone(), f);
        let mut k = kmin;
        while k <= kmax {
            fam.members.push(&GaussRat::real(BigRational::from_integer(k.clone())) - &c);
            k += 1;
        }
        fam.offset = Some(c);
        out.push(fam);
    }
    for &i in &n_roots {
        let f = functional(i);
        if f.iter().all(|x| *x == 0) {
            continue;
        }
        let mut fam = HyperplaneFamily::root_family(FamilyKind::Zero, d.roots()[i].clone(), f);
        fam.members.push(GaussRat::zero());
        out.push(fam);
    }
    let mut seen = BTreeSet::new();
    for w in d.weyl_enumerate(cap)? {
        let rhs = sub(xi_m, &w.apply(xi_m));
        if rhs.iter().all(GaussRat::is_zero) {
            continue;
        }
        let matrix: Vec<Vec<GaussRat>> = (0..d.rank())
            .map(|r| {
                lv.a_coordinates
                    .iter()
                    .map(|&c| GaussRat::from_int(w.entry(r, c) - i64::from(r == c)))
                    .collect()
            })
            .collect();
        let Some((particular, null_basis)) = solve_affine(&matrix, &rhs) else {
            continue;
        };
        let key = format!("{particular:?}{null_basis:?}");
        if !seen.insert(key) {
            continue;
        }
        out.push(HyperplaneFamily {
            kind: FamilyKind::AffineSubspace,
            root: None,
            functional: vec![],
            offset: None,
            members: vec![],
            weyl: Some(w.rows()),
            matrix,
            rhs,
            particular,
            null_basis,
        });
    }
    Ok(out)
}
