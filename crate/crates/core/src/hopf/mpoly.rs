//! Sparse polynomials over Q in three pairs of variables
//! `(x, y)`, `(w, z)`, `(u, v)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::rational::{fmt_rational, Rational};

pub const NVARS: usize = 6;
pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'w', 'z', 'u', 'v'];

pub type Monomial = [u8; NVARS];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term([0; NVARS], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; NVARS];
        m[i] = 1;
        let mut p = MPoly::zero();
        p.add_term(m, Rational::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|m| m.iter().map(|&e| e as usize).sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, k: &Rational) -> MPoly {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut m = [0u8; NVARS];
                for i in 0..NVARS {
                    m[i] = ma[i] + mb[i];
                }
                r.add_term(m, ca * cb);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(MPoly::one(), |acc, _| acc.mul(self))
    }

    /// Rename variables: variable `i` becomes `perm[i]`.
    pub fn rename(&self, perm: &[usize; NVARS]) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = [0u8; NVARS];
            for i in 0..NVARS {
                nm[perm[i]] += m[i];
            }
            r.add_term(nm, c.clone());
        }
        r
    }

    /// Substitute `images[i]` for variable `i`, applying `reduce` after
    /// every multiplication.
    pub fn substitute(&self, images: &[MPoly; NVARS], reduce: &dyn Fn(&MPoly) -> MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = reduce(&t.mul(&images[i]));
                }
            }
            out = out.add(&t);
        }
        reduce(&out)
    }

    /// Whether every variable outside `allowed` is absent.
    pub fn uses_only(&self, allowed: &[usize]) -> bool {
        self.terms.keys().all(|m| (0..NVARS).all(|i| m[i] == 0 || allowed.contains(&i)))
    }

    /// Set the listed variables to zero.
    pub fn kill(&self, vars: &[usize]) -> MPoly {
        MPoly { terms: self.terms.iter().filter(|(m, _)| vars.iter().all(|&i| m[i] == 0)).map(|(m, c)| (*m, c.clone())).collect() }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: String = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { VAR_NAMES[i].to_string() } else { format!("{}^{e}", VAR_NAMES[i]) })
                .collect();
            let neg = c < &Rational::zero();
            let a = if neg { -c } else { c.clone() };
            let coef = if a.is_one() && !mono.is_empty() { String::new() } else { fmt_rational(&a) };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sep}{coef}{mono}")?;
            first = false;
        }
        Ok(())
    }
}
