//! Integer and rational matrix kernels: Hermite and Smith normal forms,
//! determinants, inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<Rational>>;

/// Row-style Hermite normal form of the lattice spanned by `gens` in Z^n.
///
/// Returns the nonzero rows of an upper-echelon basis with positive pivots
/// where entries above each pivot are reduced into `0..pivot`. For a
/// full-rank lattice the result is an upper-triangular `n x n` matrix.
pub fn hnf(gens: &[Vec<BigInt>], n: usize) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    let mut out: IntMatrix = Vec::new();
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        // gcd-combine every row with a nonzero entry in `col` into one pivot row
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::with_capacity(rows.len());
        for r in rows.into_iter() {
            if r[col].is_zero() {
                rest.push(r);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(r),
                Some(p) => {
                    let a = &p[col];
                    let b = &r[col];
                    let e = a.extended_gcd(b);
                    let g = e.gcd;
                    let (ua, ub) = (a / &g, b / &g);
                    // new pivot = x*p + y*r ; eliminated = ub*p - ua*r
                    let np: Vec<BigInt> = p.iter().zip(&r).map(|(pi, ri)| &e.x * pi + &e.y * ri).collect();
                    let elim: Vec<BigInt> = p.iter().zip(&r).map(|(pi, ri)| &ub * pi - &ua * ri).collect();
                    debug_assert!(elim[col].is_zero());
                    if elim.iter().any(|c| !c.is_zero()) {
                        rest.push(elim);
                    }
                    pivot = Some(np);
                }
            }
        }
        rows = rest;
        if let Some(mut p) = pivot {
            if p[col].is_negative() {
                for c in p.iter_mut() {
                    *c = -c.clone();
                }
            }
            out.push(p);
            pivot_cols.push(col);
        }
    }
    // reduce entries above pivots; top-down so later columns end reduced
    for i in 0..out.len() {
        let pc = pivot_cols[i];
        for k in 0..i {
            let q = out[k][pc].div_floor(&out[i][pc]);
            if !q.is_zero() {
                let row_i = out[i].clone();
                for (c, ri) in out[k].iter_mut().zip(&row_i) {
                    *c -= &q * ri;
                }
            }
        }
    }
    out
}

/// Invariant factors (diagonal of the Smith normal form, units dropped) of
/// the abelian group `Z^cols / rowspan(rel)`. Zero entries stand for free
/// factors.
pub fn smith_invariants(rel: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let mut a: IntMatrix = rel.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // find nonzero entry of minimal absolute value in the submatrix
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for r in a.iter_mut() {
            r.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let rt = a[t].clone();
                    for (c, v) in a[i].iter_mut().zip(&rt) {
                        *c -= &q * v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for r in a.iter_mut() {
                        let v = r[t].clone();
                        r[j] -= &q * v;
                    }
                    if !a[t][j].is_zero() {
                        for r in a.iter_mut() {
                            r.swap(t, j);
                        }
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        let ri = a[i].clone();
                        for (c, v) in a[t].iter_mut().zip(&ri) {
                            *c += v;
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let free = cols - diag.len();
    let mut out: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    out.sort();
    out.extend(std::iter::repeat_n(BigInt::zero(), free));
    out
}

/// Determinant over the rationals by Gaussian elimination.
pub fn rat_det(m: &RatMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            let rc = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(&rc).skip(c) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Inverse over the rationals; `None` if singular.
pub fn rat_inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let rc = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&rc) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Rational], m: &RatMatrix) -> Vec<Rational> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| v.iter().zip(m).fold(Rational::zero(), |acc, (a, r)| acc + a * &r[j]))
        .collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.iter().map(|r| vec_mat(r, b)).collect()
}

/// Fraction-free determinant of a small integer matrix in `i128`, or `None`
/// on overflow.
pub fn det_i128(m: &[Vec<i128>]) -> Option<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let p = (k + 1..n).find(|&i| a[i][k] != 0);
            match p {
                None => return Some(0),
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Exact integer determinant (Bareiss over big integers).
pub fn det_big(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                None => return BigInt::zero(),
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat, rint};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()
    }

    #[test]
    fn hnf_of_small_lattice() {
        let h = hnf(&m(&[&[2, 0], &[0, 2], &[1, 1]]), 2);
        assert_eq!(h, m(&[&[1, 1], &[0, 2]]));
        let h = hnf(&m(&[&[4, 6], &[6, 9]]), 2);
        // rank 1 lattice spanned by (2,3)
        assert_eq!(h, m(&[&[2, 3]]));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&m(&[&[2, 0], &[0, 3]]), 2), vec![int(6)]);
        assert_eq!(smith_invariants(&m(&[&[2, 0], &[0, 4]]), 2), vec![int(2), int(4)]);
        assert_eq!(smith_invariants(&m(&[&[2, 4]]), 2), vec![int(2), int(0)]);
        assert_eq!(smith_invariants(&m(&[&[6, 4], &[4, 6]]), 2), vec![int(2), int(10)]);
        assert!(smith_invariants(&m(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }

    #[test]
    fn determinants_agree() {
        let a = m(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let ai: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|c| i128::try_from(c).unwrap()).collect()).collect();
        let ar: RatMatrix = a.iter().map(|r| r.iter().map(|c| Rational::from_integer(c.clone())).collect()).collect();
        assert_eq!(det_big(&a), int(-90));
        assert_eq!(det_i128(&ai), Some(-90));
        assert_eq!(rat_det(&ar), rint(-90));
    }

    #[test]
    fn inverse_roundtrip() {
        let a: RatMatrix = vec![vec![rint(2), rat(1, 2)], vec![rint(1), rint(3)]];
        let inv = rat_inverse(&a).unwrap();
        let id = mat_mul(&a, &inv);
        assert_eq!(id, vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]]);
        assert!(rat_inverse(&vec![vec![rint(1), rint(2)], vec![rint(2), rint(4)]]).is_none());
    }
}
