//! Floating-point complex roots, used only to propose candidates that are
//! then confirmed by exact arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::arith::rational::to_f64;
use crate::arith::Poly;

fn eval(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// All complex roots of `f` (with multiplicity), by Aberth iteration.
pub fn complex_roots(f: &Poly) -> Vec<Complex64> {
    let Some(n) = f.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(&f.lead());
    let c: Vec<Complex64> = f.coeffs().iter().map(|a| Complex64::new(to_f64(a) / lc, 0.0)).collect();
    let dc: Vec<Complex64> = (1..=n).map(|k| c[k] * k as f64).collect();
    // Cauchy radius for the initial circle
    let r = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r * 0.5, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let p = eval(&c, z[i]);
            let dp = eval(&dc, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm());
            }
        }
        if moved < 1e-15 * r {
            break;
        }
    }
    z
}

/// Solve a dense complex linear system by Gaussian elimination with
/// partial pivoting. Returns `None` for a numerically singular matrix.
pub fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let k = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= k * v;
            }
            let v = b[col];
            b[r] -= k * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for r in (0..n).rev() {
        let s: Complex64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Monic integer polynomial whose roots are the given complex numbers, if
/// every coefficient is within `tol` of an integer.
fn round_product(z: &[Complex64], tol: f64) -> Option<Vec<BigInt>> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in z {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        c = next;
    }
    c.iter()
        .map(|a| {
            let re = a.re.round();
            ((a.re - re).abs() < tol && a.im.abs() < tol).then(|| BigInt::from(re as i64))
        })
        .collect()
}

/// Irreducibility over Q of a monic integer polynomial.
///
/// Every monic factor over Z is a product over a subset of the complex
/// roots; each subset whose product rounds to an integer polynomial is
/// tested by exact division. Returns a nontrivial factor if one exists.
pub fn rational_factor(f: &Poly) -> Option<Poly> {
    let n = f.degree()?;
    if n <= 1 {
        return None;
    }
    let roots = complex_roots(f);
    for mask in 1u32..(1u32 << n) - 1 {
        let k = mask.count_ones() as usize;
        // a factor of degree k exists iff its cofactor of degree n-k does
        if 2 * k > n || (2 * k == n && mask & 1 == 0) {
            continue;
        }
        let sub: Vec<Complex64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| roots[i]).collect();
        if let Some(c) = round_product(&sub, 1e-6) {
            let g = Poly::from_bigints(&c);
            if f.rem(&g).is_ok_and(|r| r.is_zero()) {
                return Some(g);
            }
        }
    }
    None
}
