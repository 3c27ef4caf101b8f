//! Fractional ideals as Hermite normal form lattices with a denominator,
//! and the factorization of rational primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::fp::{factor_mod_p, left_kernel, mulmod, reduce_big, rref};
use crate::arith::intmat::{det_big, hnf, IntMatrix};
use crate::arith::rational::{is_prime_u64, rbig, Rational};
use crate::arith::Poly;
use crate::error::{Error, Result};

use super::field::{FieldElement, NumberField};

/// A full-rank O-submodule of K, stored as `hnf / denominator` where `hnf`
/// is an upper-triangular integer matrix whose rows are basis vectors in
/// integral-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalIdeal {
    hnf: IntMatrix,
    denominator: BigInt,
}

impl FractionalIdeal {
    /// Ideal spanned over Z by integer row vectors (must already be an
    /// O-module of full rank).
    fn from_int_rows(rows: &[Vec<BigInt>], n: usize, den: BigInt) -> Result<Self> {
        let h = hnf(rows, n);
        if h.len() != n {
            return Err(Error::Domain("ideal generators do not span a full-rank lattice".into()));
        }
        Ok(FractionalIdeal { hnf: h, denominator: den }.normalized())
    }

    fn normalized(mut self) -> Self {
        let mut g = self.denominator.clone();
        for r in &self.hnf {
            for c in r {
                g = g.gcd(c);
            }
        }
        if !g.is_one() && !g.is_zero() {
            for r in self.hnf.iter_mut() {
                for c in r.iter_mut() {
                    *c = &*c / &g;
                }
            }
            self.denominator /= &g;
        }
        self
    }

    /// The O-ideal generated by the given elements.
    pub fn from_generators(nf: &NumberField, gens: &[FieldElement]) -> Result<Self> {
        let n = nf.degree();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(gens.len() * n);
        for g in gens {
            for j in 0..n {
                rows.push(nf.mul(g, &nf.basis_element(j)).coords);
            }
        }
        let den = rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|c| (c * rbig(den.clone())).to_integer()).collect())
            .collect();
        Self::from_int_rows(&int_rows, n, den)
    }

    pub fn principal(nf: &NumberField, x: &FieldElement) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Domain("zero does not generate a fractional ideal".into()));
        }
        Self::from_generators(nf, std::slice::from_ref(x))
    }

    /// The ideal `kO` for a nonzero integer `k`.
    pub fn rational(nf: &NumberField, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::Domain("zero does not generate a fractional ideal".into()));
        }
        let n = nf.degree();
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { k.abs() } else { BigInt::zero() }).collect())
            .collect();
        Ok(FractionalIdeal { hnf: rows, denominator: BigInt::one() })
    }

    pub fn unit(nf: &NumberField) -> Self {
        Self::rational(nf, &BigInt::one()).expect("one is nonzero")
    }

    pub fn hnf(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn degree(&self) -> usize {
        self.hnf.len()
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    /// Absolute norm `[O : I]` (a rational for fractional ideals).
    pub fn norm(&self) -> Rational {
        let n = self.degree() as u32;
        let d = det_big(&self.hnf).abs();
        Rational::new(d, num_traits::pow(self.denominator.clone(), n as usize))
    }

    /// Basis elements of the lattice.
    pub fn basis_elements(&self) -> Vec<FieldElement> {
        let den = rbig(self.denominator.clone());
        self.hnf
            .iter()
            .map(|r| FieldElement::new(r.iter().map(|c| rbig(c.clone()) / &den).collect()))
            .collect()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        // back-substitute x * den against the upper-triangular hnf
        let n = self.degree();
        let den = rbig(self.denominator.clone());
        let mut v: Vec<Rational> = x.coords.iter().map(|c| c * &den).collect();
        if v.iter().any(|c| !c.is_integer()) {
            return false;
        }
        for i in 0..n {
            let piv = rbig(self.hnf[i][i].clone());
            let q = &v[i] / &piv;
            if !q.is_integer() {
                return false;
            }
            if !q.is_zero() {
                for j in i..n {
                    v[j] -= &q * rbig(self.hnf[i][j].clone());
                }
            }
        }
        true
    }

    pub fn add(&self, nf: &NumberField, other: &Self) -> Result<Self> {
        let n = nf.degree();
        let den = self.denominator.lcm(&other.denominator);
        let (sa, sb) = (&den / &self.denominator, &den / &other.denominator);
        let mut rows: Vec<Vec<BigInt>> = self.hnf.iter().map(|r| r.iter().map(|c| c * &sa).collect()).collect();
        rows.extend(other.hnf.iter().map(|r| r.iter().map(|c| c * &sb).collect()));
        Self::from_int_rows(&rows, n, den)
    }

    pub fn mul(&self, nf: &NumberField, other: &Self) -> Result<Self> {
        let n = nf.degree();
        let mut rows = Vec::with_capacity(n * n);
        for a in &self.hnf {
            for b in &other.hnf {
                rows.push(nf.mul_int(a, b));
            }
        }
        // keep entries small: the product contains N(I)N(J)-multiples of O
        let d = det_big(&self.hnf).abs() * det_big(&other.hnf).abs();
        for i in 0..n {
            let mut r = vec![BigInt::zero(); n];
            r[i] = d.clone();
            rows.push(r);
        }
        Self::from_int_rows(&rows, n, &self.denominator * &other.denominator)
    }

    pub fn pow(&self, nf: &NumberField, e: u32) -> Result<Self> {
        let mut acc = Self::unit(nf);
        for _ in 0..e {
            acc = acc.mul(nf, self)?;
        }
        Ok(acc)
    }

    /// Whether `x` is a unit modulo this integral ideal, i.e. `xO + I = O`.
    pub fn is_coprime_element(&self, nf: &NumberField, x: &FieldElement) -> Result<bool> {
        if !self.is_integral() || !x.is_integral() {
            return Err(Error::Precondition("coprimality needs integral data".into()));
        }
        let n = nf.degree();
        let xi = x.int_coords().expect("integral");
        let mut rows: Vec<Vec<BigInt>> = self.hnf.clone();
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            rows.push(nf.mul_int(&xi, &e));
        }
        let h = hnf(&rows, n);
        Ok(h.len() == n && det_big(&h).abs().is_one())
    }
}

/// A prime ideal above `p` with ramification index and residue degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactor {
    pub ideal: FractionalIdeal,
    pub e: u32,
    pub f: u32,
    /// Generator pair `(p, pi)` when produced by the polynomial route.
    pub two_element: Option<FieldElement>,
}

/// Whether `p` divides the index `[O : Z[theta]]`.
pub fn divides_index(nf: &NumberField, p: u64) -> bool {
    let idx = nf.index();
    (idx.to_integer() % BigInt::from(p)).is_zero()
}

/// Factor `pO` into prime ideals, choosing the method by the index.
pub fn factor_rational_prime(nf: &NumberField, p: u64) -> Result<Vec<PrimeFactor>> {
    nf.require_verified()?;
    if !is_prime_u64(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if divides_index(nf, p) {
        factor_by_radical(nf, p)
    } else {
        factor_by_polynomial(nf, p)
    }
}

/// Kummer-Dedekind: `pO = prod (p, g_i(theta))^{e_i}` for `f = prod g_i^{e_i}` mod p.
pub fn factor_by_polynomial(nf: &NumberField, p: u64) -> Result<Vec<PrimeFactor>> {
    nf.require_verified()?;
    if divides_index(nf, p) {
        return Err(Error::Precondition(format!("{p} divides the index of Z[theta]")));
    }
    let fac = factor_mod_p(nf.defining_poly(), p)?;
    let pe = nf.from_rational(&Rational::from_integer(BigInt::from(p)));
    let mut out = Vec::new();
    for (g, e) in &fac.factors {
        let gq: Poly = g.to_poly();
        let pi = nf.from_power_basis(&gq);
        let ideal = FractionalIdeal::from_generators(nf, &[pe.clone(), pi.clone()])?;
        out.push(PrimeFactor {
            ideal,
            e: *e as u32,
            f: g.degree().unwrap_or(0) as u32,
            two_element: Some(pi),
        });
    }
    Ok(out)
}

/// Reduce an integer matrix mod p.
fn mod_rows(rows: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.iter().map(|c| reduce_big(c, p)).collect()).collect()
}

/// Multiplication in O/pO using the integer table.
fn mul_mod(t: &[Vec<Vec<u64>>], a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; n];
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if b[j] == 0 {
                continue;
            }
            let c = mulmod(a[i], b[j], p);
            for k in 0..n {
                if t[i][j][k] != 0 {
                    out[k] = (out[k] + mulmod(c, t[i][j][k], p)) % p;
                }
            }
        }
    }
    out
}

fn pow_mod(t: &[Vec<Vec<u64>>], a: &[u64], mut e: u64, p: u64) -> Vec<u64> {
    // no multiplicative identity is assumed among the basis vectors
    let mut acc = Vec::new();
    let mut base = a.to_vec();
    let mut first = true;
    while e > 0 {
        if e & 1 == 1 {
            acc = if first { base.clone() } else { mul_mod(t, &acc, &base, p) };
            first = false;
        }
        e >>= 1;
        if e > 0 {
            base = mul_mod(t, &base, &base, p);
        }
    }
    assert!(!first, "exponent must be positive");
    acc
}

pub(crate) fn table_mod(nf: &NumberField, p: u64) -> Vec<Vec<Vec<u64>>> {
    let t = nf.int_table().expect("ring-closed basis");
    t.iter().map(|r| mod_rows(r, p)).collect()
}

/// Basis (rows) of the p-radical of O/pO: elements x with x^(p^j) = 0.
pub(crate) fn radical_mod_p(nf: &NumberField, p: u64) -> Vec<Vec<u64>> {
    let n = nf.degree();
    let t = table_mod(nf, p);
    let mut j = 1u32;
    while (p as u128).pow(j) < n as u128 {
        j += 1;
    }
    let q = p.checked_pow(j).expect("small exponent");
    let frob: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            pow_mod(&t, &e, q, p)
        })
        .collect();
    left_kernel(&frob, p)
}

/// Integral ideal `pO + lift(rows)` for rows over F_p.
pub(crate) fn ideal_from_mod_p(nf: &NumberField, p: u64, rows: &[Vec<u64>]) -> Result<FractionalIdeal> {
    let n = nf.degree();
    let mut gens: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::from(p) } else { BigInt::zero() }).collect())
        .collect();
    gens.extend(rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()));
    FractionalIdeal::from_int_rows(&gens, n, BigInt::one())
}

/// Ideal `J + xO` for integral `J` and integral `x`.
fn add_element(nf: &NumberField, j: &FractionalIdeal, x: &[BigInt]) -> Result<FractionalIdeal> {
    let n = nf.degree();
    let mut rows = j.hnf.clone();
    for k in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[k] = BigInt::one();
        rows.push(nf.mul_int(x, &e));
    }
    FractionalIdeal::from_int_rows(&rows, n, BigInt::one())
}

fn log_p(n: &BigInt, p: u64) -> Option<u32> {
    let mut k = 0u32;
    let mut m = n.clone();
    let pb = BigInt::from(p);
    while !m.is_one() {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return None;
        }
        m = q;
        k += 1;
    }
    Some(k)
}

/// Factorization through the radical of O/pO; works for every p.
pub fn factor_by_radical(nf: &NumberField, p: u64) -> Result<Vec<PrimeFactor>> {
    nf.require_verified()?;
    let n = nf.degree();
    let t = table_mod(nf, p);
    let rad = radical_mod_p(nf, p);
    let ip = ideal_from_mod_p(nf, p, &rad)?;
    // Berlekamp subalgebra of O/I_p: x with x^p - x in the radical
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            let xp = pow_mod(&t, &e, p, p);
            (0..n).map(|k| (xp[k] + p - e[k]) % p).collect()
        })
        .collect();
    rows.extend(rad.iter().cloned());
    let ker = left_kernel(&rows, p);
    let mut sub: Vec<Vec<u64>> = ker.iter().map(|v| v[..n].to_vec()).collect();
    // drop the radical part of the span to count components
    let mut span = rad.clone();
    span.extend(sub.iter().cloned());
    let mut tmp = span.clone();
    let total_rank = rref(&mut tmp, p).len();
    let mut rtmp = rad.clone();
    let rad_rank = rref(&mut rtmp, p).len();
    let g = total_rank - rad_rank;
    sub.retain(|v| v.iter().any(|&c| c != 0));

    let mut parts = vec![ip.clone()];
    'outer: for b in &sub {
        if parts.len() == g {
            break;
        }
        let mut next = Vec::new();
        for j in &parts {
            let mut pieces = Vec::new();
            for s in 0..p {
                let x: Vec<BigInt> = {
                    let mut v: Vec<i128> = b.iter().map(|&c| c as i128).collect();
                    // subtract s * 1 in basis coordinates
                    let one = nf.one().int_coords().expect("1 is integral");
                    for (vk, ok) in v.iter_mut().zip(&one) {
                        *vk -= s as i128 * ok.to_i128().expect("small");
                    }
                    v.into_iter().map(BigInt::from).collect()
                };
                let js = add_element(nf, j, &x)?;
                if !js.norm().is_one() {
                    pieces.push(js);
                }
            }
            if pieces.is_empty() {
                return Err(Error::Domain("idempotent splitting lost a component".into()));
            }
            next.extend(pieces);
        }
        parts = next;
        if parts.len() == g {
            break 'outer;
        }
    }
    if parts.len() != g {
        return Err(Error::Domain(format!("found {} of {g} primes above {p}", parts.len())));
    }
    let po = FractionalIdeal::rational(nf, &BigInt::from(p))?;
    let mut out = Vec::new();
    for pr in parts {
        let nrm = pr.norm().to_integer();
        let f = log_p(&nrm, p).ok_or_else(|| Error::Domain(format!("norm {nrm} is not a power of {p}")))?;
        // e = first k where N(P^k + pO) stops growing
        let mut cur = pr.clone();
        let mut e = 1u32;
        loop {
            let nxt = cur.mul(nf, &pr)?.add(nf, &po)?;
            if nxt.norm() == cur.norm() {
                break;
            }
            cur = nxt;
            e += 1;
            if e as usize > n {
                return Err(Error::Domain("ramification index exceeds the degree".into()));
            }
        }
        out.push(PrimeFactor { ideal: pr, e, f, two_element: None });
    }
    out.sort_by(|a, b| (a.f, a.e, &a.ideal.hnf).cmp(&(b.f, b.e, &b.ideal.hnf)));
    Ok(out)
}

/// Product of `P^e` over the factors.
pub fn factorization_product(nf: &NumberField, fac: &[PrimeFactor]) -> Result<FractionalIdeal> {
    let mut acc = FractionalIdeal::unit(nf);
    for pf in fac {
        acc = acc.mul(nf, &pf.ideal.pow(nf, pf.e)?)?;
    }
    Ok(acc)
}
