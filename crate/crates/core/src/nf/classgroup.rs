//! Class-number-one certification: every prime below the Minkowski bound
//! is shown principal by an explicit generator.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::fp::{left_kernel, reduce_big};
use crate::arith::intmat::{det_big, det_i128};
use crate::arith::rational::{floor, floor_root, primes_up_to, rat, rbig, rint, Rational};
use crate::check::{CheckReport, Status};
use crate::error::{Error, Result};

use super::field::{FieldElement, NumberField};
use super::ideal::{factor_rational_prime, FractionalIdeal};

/// Default coordinate radius for generator searches.
pub const DEFAULT_SEARCH_RADIUS: i64 = 12;

/// Rational lower bound for pi, so that `4/pi` is over-estimated.
fn pi_lower() -> Rational {
    rat(314159, 100000)
}

/// Upper approximation of `sqrt(n)` with denominator `10^6`.
fn sqrt_upper(n: &BigInt) -> Rational {
    let scale = BigInt::from(1_000_000u64);
    let s = &scale * &scale * n;
    let r = floor_root(&s, 2);
    let r = if &r * &r == s { r } else { r + 1 };
    Rational::new(r, scale)
}

/// Certified upper value of `(n!/n^n) (4/pi)^{r2} sqrt|d|`.
pub fn minkowski_bound(nf: &NumberField) -> Result<Rational> {
    nf.require_verified()?;
    let n = nf.degree();
    let (_, r2) = nf.signature();
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let nn = num_traits::pow(BigInt::from(n), n);
    let four_over_pi = rint(4) / pi_lower();
    let mut m = Rational::new(fact, nn);
    for _ in 0..r2 {
        m *= &four_over_pi;
    }
    Ok(m * sqrt_upper(&nf.field_disc().abs()))
}

/// Proof token that a field has class number one; required by
/// [`super::units::ray_class_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberOneCertificate {
    field: String,
    field_disc: BigInt,
    bound: Rational,
    /// `(p, norm, generator)` for every prime ideal of norm at most the bound.
    generators: Vec<(u64, BigInt, FieldElement)>,
}

impl ClassNumberOneCertificate {
    pub fn field(&self) -> &str {
        &self.field
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn generators(&self) -> &[(u64, BigInt, FieldElement)] {
        &self.generators
    }

    pub(crate) fn matches(&self, nf: &NumberField) -> bool {
        self.field == nf.name() && &self.field_disc == nf.field_disc()
    }
}

/// Membership in a prime `P ⊇ pO` through F_p linear functionals on O/pO.
struct Membership {
    p: u64,
    functionals: Vec<Vec<u64>>,
}

impl Membership {
    fn new(ideal: &FractionalIdeal, p: u64) -> Self {
        let n = ideal.degree();
        let rows: Vec<Vec<u64>> = ideal.hnf().iter().map(|r| r.iter().map(|c| reduce_big(c, p)).collect()).collect();
        // functionals phi with W phi = 0, i.e. the left kernel of W^T
        let wt: Vec<Vec<u64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Membership { p, functionals: left_kernel(&wt, p) }
    }

    fn contains(&self, x: &[i64]) -> bool {
        let p = self.p as i128;
        self.functionals.iter().all(|phi| {
            let s: i128 = phi.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum();
            s.rem_euclid(p) == 0
        })
    }
}

/// Absolute norm of an element with small integer coordinates.
pub(crate) fn norm_i64(table: &[Vec<Vec<i64>>], x: &[i64]) -> BigInt {
    let n = x.len();
    let mut m = vec![vec![0i128; n]; n];
    for (j, &xj) in x.iter().enumerate() {
        if xj == 0 {
            continue;
        }
        for (i, row) in m.iter_mut().enumerate() {
            for (k, v) in row.iter_mut().enumerate() {
                *v += xj as i128 * table[j][i][k] as i128;
            }
        }
    }
    match det_i128(&m) {
        Some(d) => BigInt::from(d),
        None => det_big(&m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect::<Vec<_>>()),
    }
}

/// Visit integer vectors with max-norm exactly `r` whose first nonzero
/// coordinate is positive; stop when `f` returns true.
fn for_shell(n: usize, r: i64, mut f: impl FnMut(&[i64]) -> bool) -> bool {
    let mut v = vec![-r; n];
    loop {
        let on_shell = v.iter().any(|c| c.abs() == r);
        let positive = v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0);
        if on_shell && positive && f(&v) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if v[i] < r {
                v[i] += 1;
                break;
            }
            v[i] = -r;
            i += 1;
        }
    }
}

/// Search for `x` in the box of the given radius with `x ∈ P` and
/// `|N(x)| = N(P)`; such an `x` generates `P`.
pub fn search_generator(nf: &NumberField, ideal: &FractionalIdeal, p: u64, radius: i64) -> Result<Option<FieldElement>> {
    let table = nf.i64_table().ok_or_else(|| Error::Precondition("basis is not ring-closed".into()))?;
    let target = ideal.norm();
    if !target.is_integer() {
        return Err(Error::Precondition("generator search needs an integral ideal".into()));
    }
    let target = target.to_integer();
    let mem = Membership::new(ideal, p);
    let n = nf.degree();
    let mut found = None;
    for r in 1..=radius {
        if for_shell(n, r, |x| {
            if mem.contains(x) && norm_i64(&table, x).abs() == target {
                found = Some(x.to_vec());
                true
            } else {
                false
            }
        }) {
            break;
        }
    }
    Ok(found.map(|x| FieldElement::from_ints(&x)))
}

/// Enumerate every prime ideal of norm at most the Minkowski bound and
/// find a generator for each within `radius`.
pub fn verify_class_number_one(nf: &NumberField, radius: i64) -> (CheckReport, Option<ClassNumberOneCertificate>) {
    let mut rep = CheckReport::new(format!("class number one for {}", nf.name()));
    let bound = match minkowski_bound(nf) {
        Ok(b) => b,
        Err(e) => {
            rep.push("minkowski bound", Status::Fail, e.to_string());
            return (rep, None);
        }
    };
    rep.check("minkowski bound", true, format!("M <= {:.6}", crate::arith::rational::to_f64(&bound)));
    let m = floor(&bound);
    let mut gens = Vec::new();
    let pmax = m.to_u64().unwrap_or(0);
    for p in primes_up_to(pmax) {
        let primes = match factor_rational_prime(nf, p) {
            Ok(f) => f,
            Err(e) => {
                rep.push(format!("factor {p}"), Status::Fail, e.to_string());
                continue;
            }
        };
        for (k, pf) in primes.iter().enumerate() {
            let norm = num_traits::pow(BigInt::from(p), pf.f as usize);
            if rbig(norm.clone()) > bound {
                continue;
            }
            let label = format!("prime {k} above {p} (norm {norm})");
            match search_generator(nf, &pf.ideal, p, radius) {
                Ok(Some(x)) => {
                    rep.check(&label, true, format!("generated by {}", fmt_coords(&x)));
                    gens.push((p, norm, x));
                }
                Ok(None) => rep.push(&label, Status::Inconclusive, format!("no generator with coordinates up to {radius}")),
                Err(e) => rep.push(&label, Status::Fail, e.to_string()),
            }
        }
    }
    let cert = rep.passed().then(|| ClassNumberOneCertificate {
        field: nf.name().to_string(),
        field_disc: nf.field_disc().clone(),
        bound,
        generators: gens,
    });
    (rep, cert)
}

pub(crate) fn fmt_coords(x: &FieldElement) -> String {
    let parts: Vec<String> = x.coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

