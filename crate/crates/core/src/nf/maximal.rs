//! Local maximality of the certified order via the ring of multipliers of
//! the q-radical.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::fp::{reduce_big, rref};
use crate::arith::intmat::rat_inverse;
use crate::arith::rational::rbig;
use crate::error::Result;

use super::field::NumberField;
use super::ideal::{ideal_from_mod_p, radical_mod_p};

/// Whether the order spanned by the basis is maximal at `q`.
///
/// With `I` the q-radical of `O`, the multiplier ring `{x : xI ⊆ I}` is
/// strictly larger than `O` exactly when some `y` in `O \ qO` satisfies
/// `yI ⊆ qI`. That is a kernel computation for `O/qO -> End(I/qI)`.
pub fn is_q_maximal(nf: &NumberField, q: u64) -> Result<bool> {
    let n = nf.degree();
    let rad = radical_mod_p(nf, q);
    let ideal = ideal_from_mod_p(nf, q, &rad)?;
    let h: Vec<Vec<BigInt>> = ideal.hnf().clone();
    let hq: Vec<Vec<_>> = h.iter().map(|r| r.iter().cloned().map(rbig).collect()).collect();
    let hinv = rat_inverse(&hq).expect("full-rank ideal");
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        let mut row = Vec::with_capacity(n * n);
        for hk in &h {
            let prod = nf.mul_int(&e, hk);
            // coordinates of b_i h_k in the basis of I, integral since I is an ideal
            for c in 0..n {
                let mut s = rbig(BigInt::zero());
                for (pj, hinv_j) in prod.iter().zip(&hinv) {
                    if !pj.is_zero() {
                        s += rbig(pj.clone()) * &hinv_j[c];
                    }
                }
                debug_assert!(s.is_integer());
                row.push(reduce_big(&s.to_integer(), q));
            }
        }
        rows.push(row);
    }
    Ok(rref(&mut rows, q).len() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rint};
    use crate::arith::Poly;

    #[test]
    fn detects_non_maximal_order() {
        // Z[sqrt(-3)] is not 2-maximal; Z[(1+sqrt(-3))/2] is
        let f = Poly::from_ints(&[3, 0, 1]);
        let id = vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]];
        let small = NumberField::new("z", f.clone(), id, BigInt::from(-12), (0, 1)).unwrap();
        assert!(!is_q_maximal(&small, 2).unwrap());
        assert!(is_q_maximal(&small, 3).unwrap());
        let big = NumberField::new(
            "z",
            f,
            vec![vec![rint(1), rint(0)], vec![rat(1, 2), rat(1, 2)]],
            BigInt::from(-3),
            (0, 1),
        )
        .unwrap();
        assert!(is_q_maximal(&big, 2).unwrap());
        assert!(is_q_maximal(&big, 3).unwrap());
    }
}
