use ab19_core::arith::fp::{factor_mod_p, FpPoly};
use ab19_core::arith::intmat::{det_big, hnf};
use ab19_core::arith::rational::{rat, rint, squarefree_class};
use ab19_core::arith::{poly_discriminant, Poly};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_vanishes_iff_common_factor(f in small_poly(6), g in small_poly(6), h in small_poly(2)) {
        prop_assume!(f.degree().unwrap_or(0) >= 1 && g.degree().unwrap_or(0) >= 1);
        let common = f.gcd(&g).degree().unwrap_or(0) >= 1;
        prop_assert_eq!(f.resultant(&g).is_zero(), common);
        // force a shared factor
        if h.degree().unwrap_or(0) >= 1 {
            let (fh, gh) = (&f * &h, &g * &h);
            prop_assert!(fh.resultant(&gh).is_zero());
        }
    }

    #[test]
    fn factorization_mod_p_reproduces_input(f in small_poly(8), pi in 0usize..5) {
        let p = [2u64, 3, 5, 7, 19][pi];
        let fp = FpPoly::from_poly(&f, p).unwrap();
        prop_assume!(!fp.is_zero());
        // make the leading coefficient a unit mod p
        let f = fp.to_poly();
        let fac = factor_mod_p(&f, p).unwrap();
        prop_assert_eq!(fac.expand(), fp);
    }

    #[test]
    fn cubic_discriminant_matches_root_differences(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, lc in 1i64..=4) {
        let f = &(&Poly::from_ints(&[-a, 1]) * &Poly::from_ints(&[-b, 1])) * &Poly::from_ints(&[-c, 1]);
        let f = f.scale(&rint(lc));
        let prod = (a - b) * (a - c) * (b - c);
        // lc^(2n-2) prod (ri - rj)^2
        let expect = rint(lc.pow(4)) * rint(prod * prod);
        prop_assert_eq!(poly_discriminant(&f).unwrap(), expect);
    }

    #[test]
    fn squarefree_class_ignores_squares(n in -500i64..=500, d in 1i64..=500, rn in 1i64..=50, rd in 1i64..=50) {
        prop_assume!(n != 0);
        let q = rat(n, d);
        let r = rat(rn, rd);
        prop_assert_eq!(squarefree_class(&(&q * &r * &r)).unwrap(), squarefree_class(&q).unwrap());
    }

    #[test]
    fn hnf_is_canonical(rows in proptest::collection::vec(proptest::collection::vec(-20i64..=20, 3), 3..6)) {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let h = hnf(&big, 3);
        prop_assume!(h.len() == 3);
        for i in 0..3 {
            prop_assert!(h[i][i] > BigInt::zero());
            for k in 0..i {
                prop_assert!(h[k][i] >= BigInt::zero() && h[k][i] < h[i][i]);
                prop_assert!(h[i][k].is_zero());
            }
        }
        // same lattice from a shuffled generating set
        let mut rev = big.clone();
        rev.reverse();
        prop_assert_eq!(hnf(&rev, 3), h.clone());
        prop_assert!(!det_big(&h).is_zero());
    }
}
