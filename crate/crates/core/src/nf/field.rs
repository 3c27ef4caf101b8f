//! Number fields given by a defining polynomial and a certified integral
//! basis, with elements stored as coordinate vectors in that basis.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::intmat::{rat_det, rat_inverse, vec_mat, RatMatrix};
use crate::arith::rational::{parse_rational, rbig, rint, Rational};
use crate::arith::Poly;
use crate::error::{Error, Result};

/// On-disk certificate for a number field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCertificate {
    #[serde(default)]
    pub name: String,
    /// Integer coefficients, lowest degree first.
    pub defining_poly: Vec<i64>,
    /// Rows are basis elements in the power basis of a root of the
    /// defining polynomial, as rational strings.
    pub integral_basis: Vec<Vec<String>>,
    pub field_disc: i64,
    pub signature: [usize; 2],
    #[serde(default)]
    pub units: Vec<Vec<i64>>,
    #[serde(default)]
    pub torsion: Vec<i64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub notes: String,
    /// Other roots of the unit's minimal polynomial, when recorded.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unit_alternatives: Vec<Vec<i64>>,
    /// Named elements in integral-basis coordinates.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub reference_elements: BTreeMap<String, Vec<String>>,
}

impl FieldCertificate {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("field certificate: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

/// Element of a number field, as rational coordinates in the integral basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coords: Vec<Rational>,
}

impl FieldElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        FieldElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        FieldElement { coords: coords.iter().map(|&c| rint(c)).collect() }
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        FieldElement { coords: coords.iter().cloned().map(rbig).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if integral.
    pub fn int_coords(&self) -> Option<Vec<BigInt>> {
        self.is_integral().then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }
}

/// A number field `Q[t]/(f)` with a basis of its ring of integers.
#[derive(Debug, Clone)]
pub struct NumberField {
    name: String,
    poly: Poly,
    degree: usize,
    basis: RatMatrix,
    basis_inv: RatMatrix,
    field_disc: BigInt,
    signature: (usize, usize),
    /// `table[i][j]` = coordinates of `b_i * b_j`.
    table: Vec<Vec<Vec<Rational>>>,
    /// Same table over Z when the basis is ring-closed.
    int_table: Option<Vec<Vec<Vec<BigInt>>>>,
    verified: bool,
}

impl NumberField {
    /// Build a field from a defining polynomial and a basis (rows in the
    /// power basis). No arithmetic claims are checked here; see
    /// [`crate::nf::verify_field_certificate`].
    pub fn new(
        name: impl Into<String>,
        poly: Poly,
        basis: RatMatrix,
        field_disc: BigInt,
        signature: (usize, usize),
    ) -> Result<Self> {
        let Some(degree) = poly.degree().filter(|&d| d >= 1) else {
            return Err(Error::Domain("defining polynomial must have degree >= 1".into()));
        };
        if !poly.is_monic() || !poly.has_integer_coeffs() {
            return Err(Error::Precondition(format!("defining polynomial {poly} must be monic with integer coefficients")));
        }
        if basis.len() != degree || basis.iter().any(|r| r.len() != degree) {
            return Err(Error::Parse(format!("integral basis must be {degree} x {degree}")));
        }
        if signature.0 + 2 * signature.1 != degree {
            return Err(Error::Parse(format!(
                "signature ({}, {}) incompatible with degree {degree}",
                signature.0, signature.1
            )));
        }
        let basis_inv = rat_inverse(&basis)
            .ok_or_else(|| Error::Parse("integral basis is singular".into()))?;
        let mut nf = NumberField {
            name: name.into(),
            poly,
            degree,
            basis,
            basis_inv,
            field_disc,
            signature,
            table: Vec::new(),
            int_table: None,
            verified: false,
        };
        let elems: Vec<Poly> = (0..degree).map(|i| Poly::new(nf.basis[i].clone())).collect();
        let mut table = vec![vec![Vec::new(); degree]; degree];
        for i in 0..degree {
            for j in i..degree {
                let prod = (&elems[i] * &elems[j]).rem(&nf.poly)?;
                let c = nf.power_to_coords(&prod);
                table[i][j] = c.clone();
                table[j][i] = c;
            }
        }
        nf.table = table;
        nf.int_table = nf.compute_int_table();
        Ok(nf)
    }

    pub fn from_certificate(cert: &FieldCertificate) -> Result<Self> {
        let poly = Poly::from_ints(&cert.defining_poly);
        let basis = cert
            .integral_basis
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        NumberField::new(
            cert.name.clone(),
            poly,
            basis,
            BigInt::from(cert.field_disc),
            (cert.signature[0], cert.signature[1]),
        )
    }

    /// The rational field with basis `{1}`.
    pub fn rationals() -> Self {
        NumberField::new("Q", Poly::x(), vec![vec![rint(1)]], BigInt::one(), (1, 0))
            .expect("Q is well formed")
            .mark_verified()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn defining_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn field_disc(&self) -> &BigInt {
        &self.field_disc
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn table(&self) -> &Vec<Vec<Vec<Rational>>> {
        &self.table
    }

    /// Whether [`crate::nf::verify_field_certificate`] has accepted this field.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn mark_verified(mut self) -> Self {
        self.verified = true;
        self
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(Error::Precondition(format!("field {} has no verified certificate", self.name)))
        }
    }

    /// Product of two elements with integer coordinates.
    pub fn mul_int(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let t = self.int_table.as_ref().expect("ring-closed basis");
        let n = self.degree;
        let mut out = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (o, tv) in out.iter_mut().zip(&t[i][j]) {
                    if !tv.is_zero() {
                        *o += &c * tv;
                    }
                }
            }
        }
        out
    }

    /// Replace the basis, keeping everything else (used by mutation tests).
    pub fn with_basis(&self, basis: RatMatrix) -> Result<Self> {
        NumberField::new(self.name.clone(), self.poly.clone(), basis, self.field_disc.clone(), self.signature)
    }

    /// Coordinates in the integral basis of a polynomial in the root.
    pub fn power_to_coords(&self, p: &Poly) -> Vec<Rational> {
        let r = if p.degree().is_some_and(|d| d >= self.degree) {
            p.rem(&self.poly).expect("nonzero modulus")
        } else {
            p.clone()
        };
        let v: Vec<Rational> = (0..self.degree).map(|k| r.coeff(k)).collect();
        vec_mat(&v, &self.basis_inv)
    }

    pub fn from_power_basis(&self, p: &Poly) -> FieldElement {
        FieldElement::new(self.power_to_coords(p))
    }

    pub fn to_power_basis(&self, x: &FieldElement) -> Poly {
        Poly::new(vec_mat(&x.coords, &self.basis))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::new(vec![Rational::zero(); self.degree])
    }

    pub fn one(&self) -> FieldElement {
        self.from_power_basis(&Poly::one())
    }

    pub fn from_rational(&self, q: &Rational) -> FieldElement {
        self.from_power_basis(&Poly::constant(q.clone()))
    }

    /// The `i`-th basis element.
    pub fn basis_element(&self, i: usize) -> FieldElement {
        let mut c = vec![Rational::zero(); self.degree];
        c[i] = Rational::one();
        FieldElement::new(c)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement::new(a.coords.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &FieldElement, q: &Rational) -> FieldElement {
        FieldElement::new(a.coords.iter().map(|x| x * q).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        FieldElement::new(out)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse, via the power basis and an extended gcd with `f`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let m = self.mult_matrix(a);
        let inv = rat_inverse(&m).ok_or_else(|| Error::Domain("singular multiplication map".into()))?;
        // the row of `1` in the inverse of the multiplication map
        let one = self.one();
        Ok(FieldElement::new(vec_mat(&one.coords, &inv)))
    }

    /// Matrix whose `i`-th row holds the coordinates of `x * b_i`.
    pub fn mult_matrix(&self, x: &FieldElement) -> RatMatrix {
        (0..self.degree)
            .map(|i| self.mul(x, &self.basis_element(i)).coords)
            .collect()
    }

    pub fn norm(&self, x: &FieldElement) -> Rational {
        rat_det(&self.mult_matrix(x))
    }

    pub fn trace(&self, x: &FieldElement) -> Rational {
        let m = self.mult_matrix(x);
        (0..self.degree).map(|i| m[i][i].clone()).sum()
    }

    /// Characteristic polynomial of multiplication by `x` (Faddeev-LeVerrier).
    pub fn char_poly(&self, x: &FieldElement) -> Poly {
        let n = self.degree;
        let a = self.mult_matrix(x);
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m: RatMatrix = vec![vec![Rational::zero(); n]; n];
        for k in 1..=n {
            // m = a * m_prev + c_{n-k+1} I
            let prev = m.clone();
            for i in 0..n {
                for j in 0..n {
                    let mut s = Rational::zero();
                    for (l, pl) in prev.iter().enumerate() {
                        s += &a[i][l] * &pl[j];
                    }
                    if i == j {
                        s += &coeffs[n - k + 1];
                    }
                    m[i][j] = s;
                }
            }
            let mut tr = Rational::zero();
            for i in 0..n {
                for l in 0..n {
                    tr += &a[i][l] * &m[l][i];
                }
            }
            coeffs[n - k] = -tr / rint(k as i64);
        }
        Poly::new(coeffs)
    }

    /// Whether every pairwise product of basis elements is integral.
    pub fn is_ring_closed(&self) -> bool {
        self.table.iter().flatten().flatten().all(|c| c.is_integer())
    }

    /// Determinant of the trace form on the basis.
    pub fn basis_discriminant(&self) -> Rational {
        let n = self.degree;
        let traces: Vec<Rational> = (0..n).map(|i| self.trace(&self.basis_element(i))).collect();
        let gram: RatMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.table[i][j]
                            .iter()
                            .zip(&traces)
                            .fold(Rational::zero(), |acc, (c, t)| acc + c * t)
                    })
                    .collect()
            })
            .collect();
        rat_det(&gram)
    }

    /// Index `[O : Z[theta]]` of the equation order in the basis lattice.
    pub fn index(&self) -> Rational {
        rat_det(&self.basis).recip().abs()
    }

    /// Integer multiplication table, if the basis is ring-closed.
    pub fn int_table(&self) -> Option<&Vec<Vec<Vec<BigInt>>>> {
        self.int_table.as_ref()
    }

    fn compute_int_table(&self) -> Option<Vec<Vec<Vec<BigInt>>>> {
        self.is_ring_closed().then(|| {
            self.table
                .iter()
                .map(|r| r.iter().map(|c| c.iter().map(|v| v.to_integer()).collect()).collect())
                .collect()
        })
    }

    /// Small-integer multiplication table for fast enumeration.
    pub fn i64_table(&self) -> Option<Vec<Vec<Vec<i64>>>> {
        let t = self.int_table.as_ref()?;
        t.iter()
            .map(|r| r.iter().map(|c| c.iter().map(|v| v.to_i64()).collect::<Option<Vec<_>>>()).collect())
            .collect()
    }

    /// Parse an element given as rational strings.
    pub fn element_from_strs(&self, coords: &[String]) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::Parse(format!("element needs {} coordinates", self.degree)));
        }
        Ok(FieldElement::new(coords.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?))
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::Parse(format!("element needs {} coordinates", self.degree)));
        }
        Ok(FieldElement::from_ints(coords))
    }
}

/// `N(x)` as the determinant of multiplication by `x`.
pub fn element_norm(nf: &NumberField, x: &FieldElement) -> Rational {
    nf.norm(x)
}
