//! Polynomials over a prime field F_p and their factorization
//! (squarefree decomposition followed by Berlekamp splitting).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::Poly;
use super::rational::is_prime_u64;
use crate::error::{domain, precondition, Result};

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Reduce a big integer into `0..p`.
pub fn reduce_big(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Dense polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for a in c.iter_mut() {
            *a %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    /// Reduction of a rational polynomial whose denominators are prime to `p`.
    pub fn from_poly(f: &Poly, p: u64) -> Result<Self> {
        let mut c = Vec::with_capacity(f.coeffs().len());
        for q in f.coeffs() {
            let d = reduce_big(q.denom(), p);
            if d == 0 {
                return precondition(format!("coefficient {q} not {p}-integral"));
            }
            c.push(mulmod(reduce_big(q.numer(), p), invmod(d, p), p));
        }
        Ok(FpPoly::new(p, c))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lead(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        FpPoly::new(self.p, self.c.iter().map(|&a| mulmod(a, k, self.p)).collect())
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        FpPoly::new(
            p,
            (0..n)
                .map(|k| (self.c.get(k).unwrap_or(&0) + o.c.get(k).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        FpPoly::new(
            p,
            (0..n)
                .map(|k| (self.c.get(k).unwrap_or(&0) + p - o.c.get(k).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let inv = invmod(d.lead(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; self.c.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = mulmod(*rem.last().unwrap(), inv, p);
            if c != 0 {
                for (i, &dc) in d.c.iter().enumerate() {
                    rem[k + i] = (rem[k + i] + p - mulmod(c, dc, p)) % p;
                }
            }
            quot[k] = c;
            rem.pop();
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| mulmod(a, k as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`
    pub fn powmod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &a| (mulmod(acc, x, self.p) + a) % self.p)
    }

    /// Lift to a rational polynomial with coefficients in `0..p`.
    pub fn to_poly(&self) -> Poly {
        Poly::from_bigints(&self.c.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>())
    }

    /// For a squarefree part, the `p`-th root of a polynomial in `x^p`.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        FpPoly::new(self.p, self.c.iter().step_by(p).copied().collect())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_poly(), self.p)
    }
}

/// Factorization of a polynomial reduced mod `p` into monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPFactorization {
    pub prime: u64,
    /// Leading coefficient of the reduction.
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted.
    pub factors: Vec<(FpPoly, usize)>,
}

impl ModPFactorization {
    /// Product `unit * prod f_i^e_i`.
    pub fn expand(&self) -> FpPoly {
        let mut acc = FpPoly::new(self.prime, vec![self.unit]);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Factor degrees with multiplicity, in factor order.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        self.factors
            .iter()
            .map(|(f, e)| (f.degree().unwrap(), *e))
            .collect()
    }
}

/// Factor `f` mod `p` completely into monic irreducibles.
pub fn factor_mod_p(f: &Poly, p: u64) -> Result<ModPFactorization> {
    if !is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    if f.is_zero() {
        return domain("factoring the zero polynomial");
    }
    let fp = FpPoly::from_poly(f, p)?;
    if fp.degree() != f.degree() {
        return precondition(format!("leading coefficient of {f} vanishes mod {p}"));
    }
    Ok(factor_fp(&fp))
}

/// Factor a nonzero polynomial over F_p.
pub fn factor_fp(f: &FpPoly) -> ModPFactorization {
    let p = f.prime();
    let unit = f.lead();
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&f.monic()) {
        for g in berlekamp(&sqf) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), &a.0.c, a.1).cmp(&(b.0.degree(), &b.0.c, b.1))
    });
    ModPFactorization { prime: p, unit, factors }
}

/// Monic squarefree factors `(g, m)` with `f = prod g^m`.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.prime();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        // c = h^p
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p as usize));
        }
    }
    merge(out)
}

fn merge(mut v: Vec<(FpPoly, usize)>) -> Vec<(FpPoly, usize)> {
    v.sort_by(|a, b| (&a.0.c, a.1).cmp(&(&b.0.c, b.1)));
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    for (g, m) in v {
        if let Some(last) = out.last_mut() {
            if last.0 == g {
                last.1 += m;
                continue;
            }
        }
        out.push((g, m));
    }
    out
}

/// Null space basis over F_p of the row-vector system `v * m = 0`.
pub fn left_kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    // transpose so we solve m^T x = 0
    let mut a: Vec<Vec<u64>> = (0..cols).map(|j| (0..rows).map(|i| m[i][j] % p).collect()).collect();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..rows).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; rows];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[r][fc]) % p;
        }
        basis.push(v);
    }
    basis
}

/// In-place reduced row echelon form; returns pivot columns per row.
pub fn rref(a: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] % p != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = invmod(a[r][c], p);
        for v in a[r].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let k = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - mulmod(k, a[r][j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    pivots
}

/// Split a monic squarefree polynomial into its irreducible factors.
fn berlekamp(f: &FpPoly) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.clone()];
    }
    let p = f.prime();
    // rows: x^(i p) mod f, minus identity
    let xp = FpPoly::x(p).powmod(p, f);
    let mut q = Vec::with_capacity(n);
    let mut cur = FpPoly::one(p);
    for i in 0..n {
        let mut row = vec![0u64; n];
        for (k, &a) in cur.c.iter().enumerate() {
            row[k] = a;
        }
        row[i] = (row[i] + p - 1) % p;
        q.push(row);
        cur = cur.mul(&xp).rem(f);
    }
    let kernel = left_kernel(&q, p);
    let r = kernel.len();
    if r == 1 {
        return vec![f.clone()];
    }
    let mut parts = vec![f.clone()];
    for v in kernel.iter() {
        let vpoly = FpPoly::new(p, v.clone());
        if vpoly.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for part in parts {
            if part.degree().unwrap() == 1 {
                next.push(part);
                continue;
            }
            let mut rest = part.clone();
            for s in 0..p {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let shifted = vpoly.sub(&FpPoly::new(p, vec![s]));
                let g = rest.gcd(&shifted);
                if g.degree().unwrap_or(0) > 0 && g.degree() != rest.degree() {
                    next.push(g.clone());
                    rest = rest.div_rem(&g).0.monic();
                } else if g.degree() == rest.degree() {
                    break;
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                next.push(rest);
            }
        }
        parts = next;
        if parts.len() == r {
            break;
        }
    }
    parts.into_iter().map(|g| g.monic()).collect()
}

/// Whether a polynomial over F_p is irreducible.
pub fn is_irreducible_fp(f: &FpPoly) -> bool {
    let fac = factor_fp(f);
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}

/// `true` when `f` has no root in F_{p^k}, i.e. no irreducible factor of
/// degree dividing `k`.
pub fn has_no_factor_of_degree_dividing(f: &FpPoly, k: usize) -> bool {
    factor_fp(f)
        .factors
        .iter()
        .all(|(g, _)| k % g.degree().unwrap() != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(coeffs: &[i64], p: u64) -> Vec<(Vec<u64>, usize)> {
        factor_mod_p(&Poly::from_ints(coeffs), p)
            .unwrap()
            .factors
            .into_iter()
            .map(|(g, e)| (g.coeffs().to_vec(), e))
            .collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(fac(&[1, 0, 1], 2), vec![(vec![1, 1], 2)]);
        assert_eq!(fac(&[-2, -2, 0, 1], 2), vec![(vec![0, 1], 3)]);
        // x^3 - 2x - 2 has no root mod 5 (values -2, -3, 2, 4, 4 at 0..4), so
        // a cubic without roots is irreducible
        let f5 = FpPoly::from_poly(&Poly::from_ints(&[-2, -2, 0, 1]), 5).unwrap();
        assert!((0..5).all(|r| f5.eval(r) != 0));
        assert_eq!(fac(&[-2, -2, 0, 1], 5), vec![(vec![3, 3, 0, 1], 1)]);
        // (x+4)(x^2+x+2) = x^3 + x + 3 mod 5
        assert_eq!(fac(&[3, 1, 0, 1], 5), vec![(vec![4, 1], 1), (vec![2, 1, 1], 1)]);
    }

    #[test]
    fn leading_coefficient_vanishing_is_rejected() {
        let f = Poly::from_ints(&[1, 1, 2]);
        assert!(matches!(factor_mod_p(&f, 2), Err(crate::Error::Precondition(_))));
        assert!(factor_mod_p(&f, 4).is_err());
    }

    #[test]
    fn pth_power_inputs() {
        // (x^2 + x + 1)^2 * (x + 1)^3 over F_2
        let a = FpPoly::new(2, vec![1, 1, 1]);
        let b = FpPoly::new(2, vec![1, 1]);
        let f = a.mul(&a).mul(&b).mul(&b).mul(&b);
        let fac = factor_fp(&f);
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.degrees(), vec![(1, 3), (2, 2)]);
        // x^9 - x over F_3 splits into x, x-1, x-2 and three quadratics
        let g = FpPoly::new(3, vec![0, 2, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fac = factor_fp(&g);
        assert_eq!(fac.factors.len(), 6);
        assert!(fac.factors.iter().all(|(_, e)| *e == 1));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_fp(&FpPoly::new(2, vec![1, 1, 1])));
        assert!(!is_irreducible_fp(&FpPoly::new(5, vec![1, 0, 1])));
        assert!(is_irreducible_fp(&FpPoly::new(2, vec![1, 1, 0, 0, 1])));
    }
}
