//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, is_square, rbig, rint, Rational};
use crate::error::{domain, precondition, Result};

/// Polynomial with coefficients stored lowest degree first. The zero
/// polynomial is the empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rint(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(rbig).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lead();
        self.scale(&lc.recip())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rint(k as i64))
                .collect(),
        )
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * g) + &Poly::constant(c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let Some(dd) = d.degree() else {
            return domain("polynomial division by zero");
        };
        let inv = d.lead().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant via the Euclidean remainder sequence over the rationals.
    pub fn resultant(&self, other: &Poly) -> Rational {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Rational::zero();
        };
        if n == 0 {
            return other.lead().pow(m as i32);
        }
        if m == 0 {
            return self.lead().pow(n as i32);
        }
        let r = self.rem(other).expect("nonzero divisor");
        let Some(k) = r.degree() else {
            return Rational::zero();
        };
        // Res(a, b) = (-1)^(mn) lc(b)^(m-k) Res(b, a mod b)
        let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
        sign * other.lead().pow((m - k) as i32) * other.resultant(&r)
    }

    /// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<Rational> {
        match self.degree() {
            None | Some(0) => domain("discriminant of a constant polynomial"),
            Some(n) => {
                let r = self.resultant(&self.derivative());
                let sign = if (n * (n - 1) / 2) % 2 == 1 { -Rational::one() } else { Rational::one() };
                Ok(sign * r / self.lead())
            }
        }
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * rbig(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// All rational roots (without multiplicity), by the rational root test.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let ints = self.primitive_integer();
        // strip factors of x
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let core = &ints[shift..];
        if core.len() > 1 {
            let a0 = core[0].abs();
            let an = core[core.len() - 1].abs();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    for s in [1i64, -1] {
                        let r = Rational::new(&p * s, q.clone());
                        if r.denom() == &q && !roots.contains(&r) && self.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", fmt_rational(&a))?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// `disc(f)` for `deg f >= 1`.
pub fn poly_discriminant(f: &Poly) -> Result<Rational> {
    f.discriminant()
}

/// Galois group of an irreducible rational cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicGalois {
    C3,
    S3,
}

/// Irreducible cubic over Q: degree three and no rational root.
pub fn is_irreducible_cubic(f: &Poly) -> bool {
    f.degree() == Some(3) && f.rational_roots().is_empty()
}

pub fn cubic_galois_group(f: &Poly) -> Result<CubicGalois> {
    if f.degree() != Some(3) {
        return precondition(format!("{f} is not a cubic"));
    }
    if let Some(r) = f.rational_roots().first() {
        return precondition(format!("{f} is reducible (root {})", fmt_rational(r)));
    }
    let d = f.discriminant()?;
    Ok(if is_square(&d) { CubicGalois::C3 } else { CubicGalois::S3 })
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn discriminant_examples() {
        assert_eq!(Poly::from_ints(&[1, 0, 1]).discriminant().unwrap(), rint(-4));
        assert_eq!(Poly::from_ints(&[-2, -2, 0, 1]).discriminant().unwrap(), rint(-76));
        assert_eq!(Poly::from_ints(&[0, -1, 1]).discriminant().unwrap(), rint(1));
        assert!(Poly::from_ints(&[5]).discriminant().is_err());
        assert!(Poly::zero().discriminant().is_err());
    }

    #[test]
    fn discriminant_of_non_monic() {
        // 4x^3 + 4x^2 - 36x - 59: Res(f, f') / lc with sign
        let f = Poly::from_ints(&[-59, -36, 4, 4]);
        let d = f.discriminant().unwrap();
        // 16 * disc of the monic x^3 + x^2 - 9x - 59/4
        let m = f.monic();
        assert_eq!(d, m.discriminant().unwrap() * rint(4).pow(4));
    }

    #[test]
    fn cubic_galois_examples() {
        assert_eq!(cubic_galois_group(&Poly::from_ints(&[-2, -2, 0, 1])).unwrap(), CubicGalois::S3);
        assert_eq!(cubic_galois_group(&Poly::from_ints(&[-1, -3, 0, 1])).unwrap(), CubicGalois::C3);
        assert_eq!(cubic_galois_group(&Poly::from_ints(&[-2, 0, 0, 1])).unwrap(), CubicGalois::S3);
        assert!(cubic_galois_group(&Poly::from_ints(&[0, -1, 0, 1])).is_err());
        assert!(cubic_galois_group(&Poly::from_ints(&[1, 0, 1])).is_err());
    }

    #[test]
    fn rational_roots_found() {
        let f = Poly::from_ints(&[-6, 1, 1]); // (x+3)(x-2)
        assert_eq!(f.rational_roots(), vec![rint(-3), rint(2)]);
        let g = Poly::from_ints(&[-1, 0, 4]); // 4x^2 - 1
        assert_eq!(g.rational_roots(), vec![rat(-1, 2), rat(1, 2)]);
        let h = Poly::from_ints(&[0, 0, 1, 1]);
        assert_eq!(h.rational_roots(), vec![rint(-1), rint(0)]);
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_ints(&[3, -1, 0, 5, 2]);
        let b = Poly::from_ints(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-59, -36, 4, 4]).to_string(), "4x^3 + 4x^2 - 36x - 59");
        assert_eq!(Poly::from_ints(&[0, -1, 0, 1]).to_string(), "x^3 - x");
    }
}
