//! Deciding whether a polynomial has a root in a number field.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith::fp::{factor_mod_p, has_no_factor_of_degree_dividing, reduce_big, FpPoly};
use crate::arith::intmat::vec_mat;
use crate::arith::rational::{primes_up_to, rbig, to_f64, Rational};
use crate::arith::Poly;
use crate::error::{Error, Result};

use super::embed::{complex_roots, solve};
use super::field::{FieldElement, NumberField};
use super::ideal::divides_index;

/// Outcome of [`has_root`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSearch {
    /// An exact root, verified by evaluation.
    Root(FieldElement),
    /// No root: at a prime `P` above `p` with residue degree `f`, the
    /// reduction of `g` has no irreducible factor of degree dividing `f`.
    NoRoot { p: u64, residue_degree: usize },
}

impl RootSearch {
    pub fn is_root(&self) -> bool {
        matches!(self, RootSearch::Root(_))
    }
}

/// Evaluate `g` at a field element.
pub fn eval_in_field(nf: &NumberField, g: &Poly, x: &FieldElement) -> FieldElement {
    g.coeffs().iter().rev().fold(nf.zero(), |acc, c| nf.add(&nf.mul(&acc, x), &nf.from_rational(c)))
}

/// Largest number of embedding-to-root assignments tried numerically.
const MAX_ASSIGNMENTS: usize = 1 << 20;

/// Whether `g` has a root in `nf`, with a witness root or a prime
/// obstruction. Candidates come from floating-point embeddings and are
/// confirmed exactly; if neither a root nor an obstruction is found the
/// result is [`Error::Undecided`].
pub fn has_root(nf: &NumberField, g: &Poly) -> Result<RootSearch> {
    let n = nf.degree();
    let Some(m) = g.degree() else {
        return Err(Error::Domain("zero polynomial".into()));
    };
    if m == 0 {
        return Err(Error::Domain("constant polynomial has no roots".into()));
    }
    if m > n {
        return Err(Error::Precondition(format!("degree {m} exceeds the field degree {n}")));
    }
    if let Some(x) = root_from_embeddings(nf, g) {
        return Ok(RootSearch::Root(x));
    }
    if let Some(ob) = prime_obstruction(nf, g)? {
        return Ok(ob);
    }
    Err(Error::Undecided(format!("no root or obstruction found for {g} in {}", nf.name())))
}

fn root_from_embeddings(nf: &NumberField, g: &Poly) -> Option<FieldElement> {
    let n = nf.degree();
    let thetas = complex_roots(nf.defining_poly());
    let rho = complex_roots(g);
    let m = rho.len();
    if m.checked_pow(n as u32).is_none_or(|c| c > MAX_ASSIGNMENTS) {
        return None;
    }
    // sigma_k(b_j) for every embedding k and basis element j
    let emb: Vec<Vec<Complex64>> = thetas
        .iter()
        .map(|t| {
            nf.basis()
                .iter()
                .map(|row| row.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + to_f64(c)))
                .collect()
        })
        .collect();
    let lc = g.lead();
    let lc_f = to_f64(&lc);
    let primitive = g.primitive_integer();
    let lc_int = primitive.last().cloned().unwrap_or_default();
    let mut choice = vec![0usize; n];
    loop {
        let rhs: Vec<Complex64> = choice.iter().map(|&c| rho[c]).collect();
        if let Some(x) = solve(emb.clone(), rhs) {
            // lc(g_primitive) * x is integral
            let scale = lc_int.to_f64().unwrap_or(lc_f);
            let coords: Option<Vec<BigInt>> = x
                .iter()
                .map(|c| {
                    let v = c * scale;
                    (v.im.abs() < 1e-6 && (v.re - v.re.round()).abs() < 1e-6).then(|| BigInt::from(v.re.round() as i64))
                })
                .collect();
            if let Some(c) = coords {
                let denom = rbig(lc_int.clone());
                let cand = FieldElement::new(c.into_iter().map(|v| rbig(v) / &denom).collect());
                if eval_in_field(nf, g, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn prime_obstruction(nf: &NumberField, g: &Poly) -> Result<Option<RootSearch>> {
    let prim = g.primitive_integer();
    let gz = Poly::from_bigints(&prim);
    let lc = prim.last().cloned().unwrap_or_default();
    for p in primes_up_to(500) {
        if reduce_big(&lc, p) == 0 || divides_index(nf, p) {
            continue;
        }
        let gp = FpPoly::from_poly(&gz, p)?;
        let fac = factor_mod_p(nf.defining_poly(), p)?;
        for (h, _) in &fac.factors {
            let f = h.degree().unwrap_or(0);
            if has_no_factor_of_degree_dividing(&gp, f) {
                return Ok(Some(RootSearch::NoRoot { p, residue_degree: f }));
            }
        }
    }
    Ok(None)
}

/// Coordinates of a root given in the power basis, for reporting.
pub fn power_coords(nf: &NumberField, x: &FieldElement) -> Vec<Rational> {
    vec_mat(&x.coords, nf.basis())
}
