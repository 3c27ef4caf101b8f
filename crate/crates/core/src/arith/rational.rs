//! Scalar helpers on top of `num`'s big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rbig(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parse `"-3"`, `"5/7"` or a plain decimal such as `"17.4356"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let w: BigInt = if whole_abs.is_empty() {
            BigInt::zero()
        } else {
            whole_abs.parse().map_err(|_| bad())?
        };
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mut v = Rational::new(w * &scale + f, scale);
        if negative {
            v = -v;
        }
        return Ok(v);
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact square test for a non-negative integer.
pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `q` is the square of a rational number.
pub fn is_square(q: &Rational) -> bool {
    !q.is_negative() && is_square_int(q.numer()) && is_square_int(q.denom())
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Squarefree part of a nonzero integer, keeping the sign.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return domain("squarefree part of zero");
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut out = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(sign * out);
    }
    // `rest` has no prime factor below `p`
    let bp = BigInt::from(p);
    if &bp * &bp > rest {
        return Ok(sign * out * rest);
    }
    if is_square_int(&rest) {
        return Ok(sign * out);
    }
    if rest < BigInt::from(TRIAL_LIMIT).pow(3) {
        return Ok(sign * out * rest);
    }
    Err(Error::Unsupported(format!(
        "squarefree part of {n}: cofactor {rest} too large for trial division"
    )))
}

/// Primes whose square divides the nonzero integer `n`.
pub fn repeated_prime_factors(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() {
        return domain("repeated prime factors of zero");
    }
    let mut rest = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e >= 2 {
            out.push(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // a cofactor with no factor below p^2 is prime; below p^3 it is a
    // product of two primes, repeated only when it is a square
    let bp = BigInt::from(p);
    if rest.is_one() || &bp * &bp > rest {
        return Ok(out);
    }
    if !is_square_int(&rest) && rest < BigInt::from(TRIAL_LIMIT).pow(3) {
        return Ok(out);
    }
    Err(Error::Unsupported(format!("cofactor {rest} of {n} too large for trial division")))
}

/// The unique squarefree integer `d` with `q = d * r^2` for a rational `r`.
pub fn squarefree_class(q: &Rational) -> Result<BigInt> {
    if q.is_zero() {
        return domain("squarefree class of zero");
    }
    squarefree_part(&(q.numer() * q.denom()))
}

/// Integer `k`-th root rounded down, for `n >= 0`.
pub fn floor_root(n: &BigInt, k: u32) -> BigInt {
    debug_assert!(!n.is_negative());
    n.nth_root(k)
}

/// Floor of a rational.
pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Trial-division primality for the small primes the toolkit iterates over.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime_u64(p)).collect()
}

/// Exponent of `p` in a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    let bp = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % &bp).is_zero() {
        n /= &bp;
        v += 1;
    }
    v
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
