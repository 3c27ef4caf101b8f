//! Exact real-root isolation with Sturm sequences, and signs of field
//! elements at real embeddings.

use num_traits::{Signed, Zero};

use crate::arith::rational::{rint, Rational};
use crate::arith::Poly;
use crate::error::{Error, Result};

use super::field::{FieldElement, NumberField};

pub fn sturm_sequence(f: &Poly) -> Vec<Poly> {
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let a = &seq[seq.len() - 2];
        let b = &seq[seq.len() - 1];
        let r = a.rem(b).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq.retain(|p| !p.is_zero());
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of squarefree `f` in `(a, b]`.
pub fn count_roots(seq: &[Poly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Disjoint intervals `(a, b]`, sorted, each holding one real root of the
/// squarefree polynomial `f`.
pub fn isolate_real_roots(f: &Poly) -> Vec<(Rational, Rational)> {
    let seq = sturm_sequence(f);
    let lc = f.lead().abs();
    let bound = f.coeffs().iter().map(|c| c.abs() / &lc).fold(rint(0), |a, b| if b > a { b } else { a }) + rint(1);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match count_roots(&seq, &a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let m = (&a + &b) / rint(2);
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    out.sort();
    out
}

/// Real places of `nf`, as isolating intervals of the real roots of the
/// defining polynomial in increasing order.
pub fn real_places(nf: &NumberField) -> Vec<(Rational, Rational)> {
    isolate_real_roots(nf.defining_poly())
}

/// Sign (+1 or -1) of `x` at the real embedding isolated by `interval`.
pub fn sign_at_place(nf: &NumberField, x: &FieldElement, interval: &(Rational, Rational)) -> Result<i8> {
    if x.is_zero() {
        return Err(Error::Domain("zero has no sign".into()));
    }
    let f = nf.defining_poly();
    let g = nf.to_power_basis(x);
    let fseq = sturm_sequence(f);
    let (mut a, mut b) = interval.clone();
    // g(theta) != 0, and gcd(f, g) = 1 since f is irreducible, so g has no
    // root at theta; shrink until g has no root in the interval
    let gq = g.gcd(f);
    if gq.degree().is_some_and(|d| d > 0) {
        return Err(Error::Domain("element vanishes at a root of the defining polynomial".into()));
    }
    for _ in 0..400 {
        let g_roots = if g.degree().unwrap_or(0) == 0 {
            0
        } else {
            let sq = g.div_rem(&g.gcd(&g.derivative())).expect("nonzero").0;
            count_roots(&sturm_sequence(&sq), &a, &b)
        };
        if g_roots == 0 {
            let v = g.eval(&b);
            return Ok(if v.is_positive() { 1 } else { -1 });
        }
        let m = (&a + &b) / rint(2);
        if count_roots(&fseq, &a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    Err(Error::Resource("sign refinement did not terminate".into()))
}
