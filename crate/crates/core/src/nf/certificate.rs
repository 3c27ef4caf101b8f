//! Verification of shipped field certificates.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::rational::{rbig, repeated_prime_factors};
use crate::check::{CheckReport, Status};
use crate::error::Result;

use super::embed::rational_factor;
use super::field::{FieldCertificate, NumberField};
use super::maximal::is_q_maximal;
use super::real::isolate_real_roots;

/// Check that the basis is the full ring of integers with the stated
/// discriminant and signature.
pub fn verify_field_certificate(nf: &NumberField) -> CheckReport {
    let mut rep = CheckReport::new(format!("field certificate {}", nf.name()));
    let f = nf.defining_poly();
    let n = nf.degree();

    let factor = rational_factor(f);
    rep.check(
        "irreducible",
        factor.is_none(),
        match &factor {
            None => format!("{f} has no factor over Q"),
            Some(g) => format!("{f} has factor {g}"),
        },
    );

    let r1 = isolate_real_roots(f).len();
    rep.check(
        "signature",
        r1 == nf.signature().0 && r1 + 2 * nf.signature().1 == n,
        format!("{r1} real roots, stated ({}, {})", nf.signature().0, nf.signature().1),
    );

    let one = nf.one();
    rep.check("contains 1", one.is_integral(), format!("1 has coordinates {:?}", coords(&one.coords)));

    let closed = nf.is_ring_closed();
    rep.check("ring closed", closed, if closed { "all products integral" } else { "some product of basis elements is not integral" });

    let disc = nf.basis_discriminant();
    let disc_ok = disc == rbig(nf.field_disc().clone());
    rep.check("discriminant", disc_ok, format!("trace form {disc}, stated {}", nf.field_disc()));

    if !(closed && one.is_integral()) {
        rep.push("maximality", Status::Fail, "basis is not an order");
        return rep;
    }
    let mut primes = BTreeSet::new();
    let poly_disc = f.discriminant().map(|d| d.to_integer()).unwrap_or_else(|_| BigInt::one());
    for d in [poly_disc, disc.to_integer()] {
        if d.abs().is_one() || d.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        match repeated_prime_factors(&d) {
            Ok(ps) => primes.extend(ps),
            Err(e) => {
                rep.push("maximality", Status::Inconclusive, e.to_string());
                return rep;
            }
        }
    }
    for q in primes {
        match is_q_maximal(nf, q) {
            Ok(ok) => rep.check(format!("maximal at {q}"), ok, if ok { "multiplier ring of the radical is O" } else { "radical has a larger multiplier ring" }),
            Err(e) => rep.push(format!("maximal at {q}"), Status::Fail, e.to_string()),
        }
    }
    rep
}

fn coords(v: &[crate::arith::Rational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// Verify a certificate and return the field marked as verified.
pub fn verified_field(nf: NumberField) -> std::result::Result<NumberField, CheckReport> {
    let rep = verify_field_certificate(&nf);
    if rep.passed() {
        Ok(nf.mark_verified())
    } else {
        Err(rep)
    }
}

/// Load, build and verify a certificate in one step.
pub fn load_verified(cert: &FieldCertificate) -> Result<NumberField> {
    let nf = NumberField::from_certificate(cert)?;
    verified_field(nf).map_err(|rep| {
        let why = rep.first_failure().map(|s| format!("{}: {}", s.label, s.detail)).unwrap_or_default();
        crate::error::Error::Precondition(format!("certificate {} rejected ({why})", cert.name))
    })
}
