//! Group-law axioms, annihilation order, field of points and the maps in
//! the defining exact sequence, all by exact reduction.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{is_square, rint, squarefree_class, Rational};
use crate::error::{Error, Result};

use super::mpoly::{MPoly, NVARS};
use super::presentation::{HopfPresentation, RankTwo};

/// Largest power of two tried by [`annihilation_order`].
pub const ANNIHILATION_CAP: u32 = 16;

const X: usize = 0;
const Y: usize = 1;
const W: usize = 2;
const Z: usize = 3;
const U: usize = 4;
const V: usize = 5;

/// Outcome of every check on one presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub name: String,
    pub n: i64,
    pub identity: bool,
    pub commutativity: bool,
    pub coassociativity: bool,
    /// Comultiplication respects the relations.
    pub relations: bool,
    /// Whether the computed order equals the catalog value.
    pub annihilation_order: bool,
    pub computed_order: Option<u32>,
    /// Whether the field of points is `Q(sqrt(points_disc))`.
    pub point_field_class: bool,
    pub computed_class: Option<String>,
    pub sequence_maps: bool,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.identity
            && self.commutativity
            && self.coassociativity
            && self.relations
            && self.annihilation_order
            && self.point_field_class
            && self.sequence_maps
    }
}

fn vars() -> [MPoly; NVARS] {
    std::array::from_fn(MPoly::var)
}

pub fn check_identity(pres: &HopfPresentation) -> bool {
    let r = &pres.rewriter;
    r.reduce(&pres.law_x.kill(&[W, Z])) == MPoly::var(X) && r.reduce(&pres.law_y.kill(&[W, Z])) == MPoly::var(Y)
}

pub fn check_commutativity(pres: &HopfPresentation) -> bool {
    let swap = [W, Z, X, Y, U, V];
    let r = &pres.rewriter;
    [&pres.law_x, &pres.law_y].iter().all(|s| r.reduce(s) == r.reduce(&s.rename(&swap)))
}

pub fn check_coassociativity(pres: &HopfPresentation) -> bool {
    let r = &pres.rewriter;
    let red = |p: &MPoly| r.reduce(p);
    let shift = [W, Z, U, V, X, Y]; // (x,y,w,z) -> (w,z,u,v)
    let bc_x = pres.law_x.rename(&shift);
    let bc_y = pres.law_y.rename(&shift);

    let mut left = vars();
    left[X] = pres.law_x.clone();
    left[Y] = pres.law_y.clone();
    left[W] = MPoly::var(U);
    left[Z] = MPoly::var(V);

    let mut right = vars();
    right[W] = bc_x;
    right[Z] = bc_y;

    [&pres.law_x, &pres.law_y]
        .iter()
        .all(|s| red(&s.substitute(&left, &red)) == red(&s.substitute(&right, &red)))
}

/// Whether the comultiplication `x -> S_x, y -> S_y` is a ring map, i.e.
/// sends both defining relations to zero in `A (x) A`.
pub fn check_relations(pres: &HopfPresentation) -> bool {
    let r = &pres.rewriter;
    let red = |p: &MPoly| r.reduce(p);
    let mut delta = vars();
    delta[X] = pres.law_x.clone();
    delta[Y] = pres.law_y.clone();
    [(X, pres.rewriter_x()), (Y, pres.rewriter_y())]
        .iter()
        .all(|(v, rhs)| red(&MPoly::var(*v).pow(2).sub(rhs).substitute(&delta, &red)).is_zero())
}

/// Doubling of a point given by coordinates in `x, y`.
fn double(pres: &HopfPresentation, p: &(MPoly, MPoly)) -> (MPoly, MPoly) {
    let r = &pres.rewriter;
    let red = |q: &MPoly| r.reduce(q);
    let mut img = vars();
    img[X] = p.0.clone();
    img[Y] = p.1.clone();
    img[W] = p.0.clone();
    img[Z] = p.1.clone();
    (red(&pres.law_x.substitute(&img, &red)), red(&pres.law_y.substitute(&img, &red)))
}

/// Smallest `2^k` killing the generic point, by iterated doubling.
pub fn annihilation_order(pres: &HopfPresentation) -> Result<u32> {
    let mut p = (MPoly::var(X), MPoly::var(Y));
    let mut order = 1;
    while order < ANNIHILATION_CAP {
        p = double(pres, &p);
        order *= 2;
        if p.0.is_zero() && p.1.is_zero() {
            return Ok(order);
        }
    }
    Err(Error::Resource(format!("{}: doubling does not reach (0,0) by {ANNIHILATION_CAP}", pres.name)))
}

/// Coefficients `(c0, cx, cy)` of an affine rule `c0 + cx x + cy y`.
fn affine(p: &MPoly) -> (Rational, Rational, Rational) {
    let mut out = (Rational::zero(), Rational::zero(), Rational::zero());
    for (m, c) in p.terms() {
        match (m[X], m[Y]) {
            (0, 0) => out.0 = c.clone(),
            (1, 0) => out.1 = c.clone(),
            (0, 1) => out.2 = c.clone(),
            _ => unreachable!("rewrite rules are affine"),
        }
    }
    out
}

/// Rational roots of the monic quadratic `t^2 - b t - c`.
fn rational_roots(b: &Rational, c: &Rational) -> Option<Vec<Rational>> {
    let disc = b * b + rint(4) * c;
    if !is_square(&disc) {
        return None;
    }
    let s = Rational::new(disc.numer().sqrt(), disc.denom().sqrt());
    let two = rint(2);
    Some(vec![(b + &s) / &two, (b - &s) / &two])
}

/// Squarefree integer `d` with every point defined over `Q(sqrt(d))`.
///
/// The `y`-coordinates must be rational; each one gives a quadratic in
/// `x`, and the nonsquare discriminants among those must agree.
pub fn point_field_class(pres: &HopfPresentation) -> Result<BigInt> {
    let (y0, yx, yy) = affine(pres.rewriter_y());
    if !yx.is_zero() {
        return Err(Error::Unsupported("y^2 rule involves x".into()));
    }
    let ys = rational_roots(&yy, &y0).ok_or_else(|| Error::Unsupported("irrational y-coordinates".into()))?;
    let (x0, xx, xy) = affine(pres.rewriter_x());
    let mut class = BigInt::one();
    for y in ys {
        let c = &x0 + &xy * &y;
        let disc = &xx * &xx + rint(4) * &c;
        if disc.is_zero() {
            continue;
        }
        let d = squarefree_class(&disc)?;
        if d.is_one() {
            continue;
        }
        if class.is_one() {
            class = d;
        } else if class != d {
            return Err(Error::Unsupported(format!("points generate a biquadratic field ({class}, {d})")));
        }
    }
    Ok(class)
}

fn expect_sub_map(sub: &RankTwo) -> Result<usize> {
    match &sub.kill {
        Some(k) if *k == MPoly::var(Y) => Ok(Y),
        Some(k) if *k == MPoly::var(X) => Ok(X),
        _ => Err(Error::Parse("sub must kill x or y".into())),
    }
}

/// Ring and Hopf compatibility of `A -> A_sub` (killing a coordinate) and
/// `A_quot -> A` (sending its coordinate to `image`).
pub fn check_sequence_maps(pres: &HopfPresentation) -> bool {
    sub_map_ok(pres).unwrap_or(false) && quotient_map_ok(pres, &pres.quotient)
}

fn sub_map_ok(pres: &HopfPresentation) -> Result<bool> {
    let sub = &pres.sub;
    let killed = expect_sub_map(sub)?;
    let kept = 1 - killed;
    // A -> A_sub: kept -> x, killed -> 0, in both tensor factors.
    let mut img = std::array::from_fn::<MPoly, NVARS, _>(|_| MPoly::zero());
    img[kept] = MPoly::var(X);
    img[kept + 2] = MPoly::var(W);
    let sr = &sub.rewriter;
    let red = |p: &MPoly| sr.reduce(p);
    let to_sub = |p: &MPoly| red(&p.substitute(&img, &red));

    let rel_ok = [(X, pres.rewriter_x()), (Y, pres.rewriter_y())]
        .iter()
        .all(|(v, rhs)| to_sub(&MPoly::var(*v).pow(2).sub(rhs)).is_zero());
    let laws = [&pres.law_x, &pres.law_y];
    let killed_ok = to_sub(laws[killed]).is_zero();
    let kept_ok = to_sub(laws[kept]) == red(&sub.law);
    Ok(rel_ok && killed_ok && kept_ok)
}

/// Checks a quotient map `t -> image` into `A`.
pub fn quotient_map_ok(pres: &HopfPresentation, quot: &RankTwo) -> bool {
    let Some(image) = &quot.image else { return false };
    if !image.uses_only(&[X, Y]) {
        return false;
    }
    let r = &pres.rewriter;
    let red = |p: &MPoly| r.reduce(p);
    let image_w = image.rename(&[W, Z, X, Y, U, V]);

    // Ring map: t^2 - R(t) goes to 0.
    let mut t_img = vars();
    t_img[X] = image.clone();
    let rel = MPoly::var(X).pow(2).sub(&quot.rewriter_rel());
    if !red(&rel.substitute(&t_img, &red)).is_zero() {
        return false;
    }
    // Counit: the identity maps to the identity.
    if !image.kill(&[X, Y]).is_zero() {
        return false;
    }
    // Comultiplication: Delta(image) = S_Q(image, image').
    let mut delta = vars();
    delta[X] = pres.law_x.clone();
    delta[Y] = pres.law_y.clone();
    let lhs = red(&image.substitute(&delta, &red));
    let mut q_img = vars();
    q_img[X] = image.clone();
    q_img[W] = image_w;
    let rhs = red(&quot.law.substitute(&q_img, &red));
    lhs == rhs
}

/// Dimension of the Ext group of `mu_l` by `Z/l` over `Z[1/p]`: 1 iff
/// `l | (p^2 - 1)/24`.
pub fn ext_mu_dimension(p: u64, l: u64) -> Result<u32> {
    if p <= 3 {
        return Err(Error::Domain(format!("p = {p} must exceed 3")));
    }
    if p == l {
        return Err(Error::Domain("p must differ from l".into()));
    }
    let q = (p as u128 * p as u128 - 1) / 24;
    Ok(u32::from(q % l as u128 == 0))
}

/// Runs every check on one presentation.
pub fn law_report(pres: &HopfPresentation) -> LawReport {
    let computed_order = annihilation_order(pres).ok();
    let class = point_field_class(pres);
    let expected_class = squarefree_class(&Rational::from_integer(pres.points_disc.clone())).ok();
    LawReport {
        name: pres.name.clone(),
        n: pres.n.to_integer().try_into().unwrap_or(i64::MAX),
        identity: check_identity(pres),
        commutativity: check_commutativity(pres),
        coassociativity: check_coassociativity(pres),
        relations: check_relations(pres),
        annihilation_order: computed_order == Some(pres.expected_order),
        computed_order,
        point_field_class: class.as_ref().ok() == expected_class.as_ref(),
        computed_class: class.ok().map(|c| c.to_string()),
        sequence_maps: check_sequence_maps(pres),
    }
}

impl HopfPresentation {
    pub fn rewriter_x(&self) -> &MPoly {
        self.rewriter.rel_x()
    }

    pub fn rewriter_y(&self) -> &MPoly {
        self.rewriter.rel_y().expect("rank-4 presentations carry a y rule")
    }
}

impl RankTwo {
    fn rewriter_rel(&self) -> MPoly {
        self.rewriter.rel_x().clone()
    }
}
