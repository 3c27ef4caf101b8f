//! Elliptic curves over Q in long Weierstrass form and their 2-torsion.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::poly::{is_irreducible_cubic, Poly};
use crate::arith::rational::{fmt_rational, rint, squarefree_class, Rational};
use crate::check::{CheckReport, Status};
use crate::error::{Error, Result};
use crate::nf::{has_root, NumberField, RootSearch};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurveQ {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

impl EllipticCurveQ {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let e = EllipticCurveQ { a1, a2, a3, a4, a6 };
        if e.discriminant().is_zero() {
            return Err(Error::Domain("singular Weierstrass equation".into()));
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(rint(a[0]), rint(a[1]), rint(a[2]), rint(a[3]), rint(a[4]))
    }

    /// The minimal model `y^2 + y = x^3 + x^2 - 9x - 15` of `X_0(19)`.
    pub fn x0_19() -> Self {
        Self::from_ints([0, 1, 1, -9, -15]).expect("nonsingular")
    }

    pub fn b2(&self) -> Rational {
        &self.a1 * &self.a1 + rint(4) * &self.a2
    }

    pub fn b4(&self) -> Rational {
        rint(2) * &self.a4 + &self.a1 * &self.a3
    }

    pub fn b6(&self) -> Rational {
        &self.a3 * &self.a3 + rint(4) * &self.a6
    }

    pub fn b8(&self) -> Rational {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1 * a1 * a6 + rint(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    }

    pub fn discriminant(&self) -> Rational {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(&b2 * &b2 * &b8) - rint(8) * &b4 * &b4 * &b4 - rint(27) * &b6 * &b6 + rint(9) * &b2 * &b4 * &b6
    }

    /// Whether `(x, y)` lies on the curve.
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
        let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
        lhs == rhs
    }
}

/// `4x^3 + b2 x^2 + 2 b4 x + b6`, whose roots are the x-coordinates of
/// the nontrivial 2-torsion points.
pub fn two_division_cubic(e: &EllipticCurveQ) -> Poly {
    Poly::new(vec![e.b6(), rint(2) * e.b4(), e.b2(), rint(4)])
}

/// Squarefree class of the discriminant of the 2-division cubic.
pub fn two_torsion_disc_class(e: &EllipticCurveQ) -> Result<BigInt> {
    squarefree_class(&two_division_cubic(e).discriminant()?)
}

fn root_check(rep: &mut CheckReport, label: &str, target: &NumberField, g: &Poly) {
    match has_root(target, g) {
        Ok(RootSearch::Root(_)) => rep.push(label, Status::Pass, format!("{g} has a root")),
        Ok(RootSearch::NoRoot { p, residue_degree }) => rep.push(
            label,
            Status::Fail,
            format!("{g} has no root: no factor of degree dividing {residue_degree} mod {p}"),
        ),
        Err(Error::Undecided(m)) => rep.push(label, Status::Inconclusive, m),
        Err(e) => rep.push(label, Status::Fail, e.to_string()),
    }
}

/// Certifies that `target` is the field generated by `E[2]`: the 2-division
/// cubic is irreducible, the square root of its discriminant class and a
/// root of the cubic both lie in `target`, and the degrees match.
pub fn verify_two_torsion_field(e: &EllipticCurveQ, target: &NumberField) -> CheckReport {
    let mut rep = CheckReport::new(format!("two-torsion field of E is {}", target.name()));
    if !target.is_verified() {
        rep.push("certificate", Status::Fail, "target field certificate not verified");
        return rep;
    }
    let cubic = two_division_cubic(e);
    let irreducible = is_irreducible_cubic(&cubic);
    rep.check("irreducible", irreducible, format!("{cubic}"));
    if !irreducible {
        return rep;
    }
    let class = match two_torsion_disc_class(e) {
        Ok(c) => c,
        Err(err) => {
            rep.push("discriminant class", Status::Fail, err.to_string());
            return rep;
        }
    };
    let split_degree = if class == BigInt::from(1) { 3 } else { 6 };
    let quad = Poly::new(vec![-Rational::from_integer(class.clone()), Rational::zero(), rint(1)]);
    root_check(&mut rep, "discriminant class", target, &quad);
    if let Some(last) = rep.items.last_mut() {
        last.detail = format!("class {class}; {}", last.detail);
    }
    root_check(&mut rep, "has_root", target, &cubic);
    rep.check(
        "degree",
        target.degree() == split_degree,
        format!("splitting field degree {split_degree}, target degree {}", target.degree()),
    );
    rep
}

impl std::fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            fmt_rational(&self.a1),
            fmt_rational(&self.a2),
            fmt_rational(&self.a3),
            fmt_rational(&self.a4),
            fmt_rational(&self.a6)
        )
    }
}
