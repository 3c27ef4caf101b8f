use std::path::{Path, PathBuf};

use ab19_core::arith::rational::{rat, rint};
use ab19_core::arith::Poly;
use ab19_core::nf::classgroup::DEFAULT_SEARCH_RADIUS;
use ab19_core::nf::ideal::{factor_by_polynomial, factor_by_radical, factorization_product};
use ab19_core::nf::units::DEFAULT_RESIDUE_CAP;
use ab19_core::nf::*;
use ab19_core::{Error, Status};
use num_bigint::BigInt;
use num_traits::Signed;

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/fields")
}

fn cert(name: &str) -> FieldCertificate {
    FieldCertificate::load(&data().join(name)).unwrap()
}

fn field(name: &str) -> NumberField {
    load_verified(&cert(name)).unwrap()
}

const SHIPPED: [&str; 5] = ["q.json", "q_i.json", "q_sqrt_m19.json", "q_i_sqrt_m19.json", "f_sextic.json"];

#[test]
fn shipped_certificates_verify() {
    for name in SHIPPED {
        let nf = NumberField::from_certificate(&cert(name)).unwrap();
        let rep = verify_field_certificate(&nf);
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn gaussian_certificate_examples() {
    let k = field("q_i.json");
    assert!(verify_field_certificate(&k).passed());
    // index-2 sublattice {1, 2i}
    let sub = k.with_basis(vec![vec![rint(1), rint(0)], vec![rint(0), rint(2)]]).unwrap();
    let rep = verify_field_certificate(&sub);
    assert_eq!(rep.status(), Status::Fail);
    assert!(rep.items.iter().any(|i| i.label == "discriminant" && i.status == Status::Fail));
}

#[test]
fn certificate_mutations_fail() {
    for name in ["q_i.json", "q_i_sqrt_m19.json", "f_sextic.json"] {
        let nf = field(name);
        let n = nf.degree();
        for i in 0..n {
            for j in 0..n {
                let mut b = nf.basis().clone();
                b[i][j] += rat(1, 2);
                let Ok(m) = nf.with_basis(b) else { continue };
                assert!(!verify_field_certificate(&m).passed(), "{name} mutation ({i},{j}) accepted");
            }
        }
    }
}

fn quartic_units(nf: &NumberField) -> Vec<FieldElement> {
    let c = cert("q_i_sqrt_m19.json");
    c.unit_alternatives.iter().map(|u| nf.element_from_ints(u).unwrap()).collect()
}

#[test]
fn quartic_norms_for_every_choice_of_epsilon() {
    let nf = field("q_i_sqrt_m19.json");
    let i = nf.element_from_ints(&cert("q_i_sqrt_m19.json").torsion).unwrap();
    let one = nf.one();
    let eps_all = quartic_units(&nf);
    assert_eq!(eps_all.len(), 4);
    let minpoly = Poly::from_ints(&[1, -26, 338, 26, 1]);
    for eps in &eps_all {
        assert_eq!(nf.char_poly(eps), minpoly);
        assert_eq!(element_norm(&nf, &nf.sub(&i, eps)), rint(340));
        assert_eq!(element_norm(&nf, &nf.sub(eps, &one)), rint(340));
    }
    assert_eq!(element_norm(&nf, &nf.sub(&i, &one)), rint(4));
}

#[test]
fn factorization_of_two() {
    let k4 = field("q_i_sqrt_m19.json");
    let f = factor_rational_prime(&k4, 2).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].e, f[0].f), (2, 2));
    // the prime is (1 + i)
    let i = k4.element_from_ints(&[0, 1, 0, 0]).unwrap();
    let pi = FractionalIdeal::principal(&k4, &k4.add(&k4.one(), &i)).unwrap();
    assert_eq!(f[0].ideal, pi);

    let f6 = field("f_sextic.json");
    let f = factor_rational_prime(&f6, 2).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].e, f[0].f), (3, 2));

    let q19 = field("q_sqrt_m19.json");
    let f = factor_rational_prime(&q19, 19).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].e, f[0].f), (2, 1));
}

#[test]
fn factorization_consistency() {
    for name in SHIPPED {
        let nf = field(name);
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19] {
            let fac = factor_rational_prime(&nf, p).unwrap();
            let sum: u32 = fac.iter().map(|q| q.e * q.f).sum();
            assert_eq!(sum as usize, nf.degree(), "{name} p={p}");
            let prod = factorization_product(&nf, &fac).unwrap();
            assert_eq!(prod, FractionalIdeal::rational(&nf, &BigInt::from(p)).unwrap(), "{name} p={p}");
            // both algorithms agree when both apply
            if !ab19_core::nf::ideal::divides_index(&nf, p) {
                let mut a: Vec<_> = factor_by_polynomial(&nf, p).unwrap().into_iter().map(|q| (q.ideal, q.e, q.f)).collect();
                let mut b: Vec<_> = factor_by_radical(&nf, p).unwrap().into_iter().map(|q| (q.ideal, q.e, q.f)).collect();
                a.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
                b.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
                assert_eq!(a, b, "{name} p={p}");
            }
        }
    }
}

#[test]
fn unverified_field_is_rejected() {
    let nf = NumberField::from_certificate(&cert("q_i.json")).unwrap();
    assert!(matches!(factor_rational_prime(&nf, 2), Err(Error::Precondition(_))));
}

#[test]
fn minkowski_bounds() {
    let b = minkowski_bound(&field("q_i.json")).unwrap();
    assert!(b >= rat(127, 100) && b <= rat(128, 100));
    let b = minkowski_bound(&field("q_i_sqrt_m19.json")).unwrap();
    assert!(b >= rat(1155, 100) && b <= rat(1160, 100));
    assert_eq!(minkowski_bound(&field("q.json")).unwrap(), rint(1));
}

#[test]
fn class_number_one() {
    for name in ["q_i.json", "q_i_sqrt_m19.json", "f_sextic.json"] {
        let nf = field(name);
        let (rep, cert) = verify_class_number_one(&nf, DEFAULT_SEARCH_RADIUS);
        assert!(rep.passed(), "{rep}");
        assert!(cert.is_some());
    }
}

#[test]
fn class_number_search_can_be_inconclusive() {
    let nf = field("q_i_sqrt_m19.json");
    let (rep, cert) = verify_class_number_one(&nf, 0);
    assert_eq!(rep.status(), Status::Inconclusive);
    assert!(cert.is_none());
}

#[test]
fn residue_unit_groups() {
    let k4 = field("q_i_sqrt_m19.json");
    let two = FractionalIdeal::rational(&k4, &BigInt::from(2)).unwrap();
    let g = unit_quotient_structure(&k4, &two, DEFAULT_RESIDUE_CAP).unwrap();
    assert_eq!(g.group().invariant_factors(), &[2, 6]);
    let units = UnitCertificate::from_field_certificate(&cert("q_i_sqrt_m19.json"));
    assert!(verify_unit_certificate(&k4, &units).passed());
    assert_eq!(unit_image_order(&k4, &units, &g).unwrap(), 4);
    // every choice of epsilon gives the same image
    for eps in quartic_units(&k4) {
        let u = UnitCertificate { fundamental_units: vec![eps], ..units.clone() };
        assert_eq!(unit_image_order(&k4, &u, &g).unwrap(), 4);
    }

    let k2 = field("q_i.json");
    let two = FractionalIdeal::rational(&k2, &BigInt::from(2)).unwrap();
    let g = unit_quotient_structure(&k2, &two, DEFAULT_RESIDUE_CAP).unwrap();
    assert_eq!(g.group().invariant_factors(), &[2]);
    let units = UnitCertificate::from_field_certificate(&cert("q_i.json"));
    assert_eq!(unit_image_order(&k2, &units, &g).unwrap(), 2);

    let f6 = field("f_sextic.json");
    let two = FractionalIdeal::rational(&f6, &BigInt::from(2)).unwrap();
    let g = unit_quotient_structure(&f6, &two, DEFAULT_RESIDUE_CAP).unwrap();
    assert_eq!(g.order(), 48);
    let units = UnitCertificate::from_field_certificate(&cert("f_sextic.json"));
    assert!(verify_unit_certificate(&f6, &units).passed());
    assert_eq!(unit_image_order(&f6, &units, &g).unwrap(), 48);
}

#[test]
fn residue_cap_is_enforced() {
    let k4 = field("q_i_sqrt_m19.json");
    let m = FractionalIdeal::rational(&k4, &BigInt::from(7)).unwrap();
    assert!(matches!(unit_quotient_structure(&k4, &m, 1000), Err(Error::Resource(_))));
}

#[test]
fn non_coprime_unit_is_rejected() {
    let k4 = field("q_i_sqrt_m19.json");
    let two = FractionalIdeal::rational(&k4, &BigInt::from(2)).unwrap();
    let g = unit_quotient_structure(&k4, &two, DEFAULT_RESIDUE_CAP).unwrap();
    let mut units = UnitCertificate::from_field_certificate(&cert("q_i_sqrt_m19.json"));
    units.torsion = k4.from_rational(&rint(2));
    assert!(matches!(unit_image_order(&k4, &units, &g), Err(Error::Precondition(_))));
}

#[test]
fn ray_class_groups() {
    let k4 = field("q_i_sqrt_m19.json");
    let (_, c) = verify_class_number_one(&k4, DEFAULT_SEARCH_RADIUS);
    let units = UnitCertificate::from_field_certificate(&cert("q_i_sqrt_m19.json"));
    let two = FractionalIdeal::rational(&k4, &BigInt::from(2)).unwrap();
    let cl = ray_class_group(&k4, c.as_ref(), &units, &two, &[], DEFAULT_RESIDUE_CAP).unwrap();
    assert_eq!(cl.invariant_factors(), &[3]);
    assert!(matches!(ray_class_group(&k4, None, &units, &two, &[], DEFAULT_RESIDUE_CAP), Err(Error::Unsupported(_))));

    let f6 = field("f_sextic.json");
    let (_, c) = verify_class_number_one(&f6, DEFAULT_SEARCH_RADIUS);
    let units = UnitCertificate::from_field_certificate(&cert("f_sextic.json"));
    let two = FractionalIdeal::rational(&f6, &BigInt::from(2)).unwrap();
    let cl = ray_class_group(&f6, c.as_ref(), &units, &two, &[], DEFAULT_RESIDUE_CAP).unwrap();
    assert!(cl.is_trivial());

    let q = field("q.json");
    let (_, c) = verify_class_number_one(&q, DEFAULT_SEARCH_RADIUS);
    let units = UnitCertificate::from_field_certificate(&cert("q.json"));
    let four = FractionalIdeal::rational(&q, &BigInt::from(4)).unwrap();
    let cl = ray_class_group(&q, c.as_ref(), &units, &four, &[0], DEFAULT_RESIDUE_CAP).unwrap();
    assert_eq!(cl.invariant_factors(), &[2]);
    let cl = ray_class_group(&q, c.as_ref(), &units, &four, &[], DEFAULT_RESIDUE_CAP).unwrap();
    assert!(cl.is_trivial());
}

#[test]
fn roots_in_the_sextic() {
    let f6 = field("f_sextic.json");
    let r = has_root(&f6, &Poly::from_ints(&[19, 0, 1])).unwrap();
    assert!(r.is_root());
    let cubic = Poly::from_ints(&[-59, -36, 4, 4]);
    match has_root(&f6, &cubic).unwrap() {
        RootSearch::Root(x) => assert!(ab19_core::nf::roots::eval_in_field(&f6, &cubic, &x).is_zero()),
        other => panic!("expected a root, got {other:?}"),
    }
    assert!(!has_root(&f6, &Poly::from_ints(&[1, 0, 1])).unwrap().is_root());
    let k4 = field("q_i_sqrt_m19.json");
    assert!(!has_root(&k4, &cubic).unwrap().is_root());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn norm_multiplicative(name: &str) {
        let nf = field(name);
        let n = nf.degree();
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(100));
        runner
            .run(&(proptest::collection::vec(-20i64..=20, n), proptest::collection::vec(-20i64..=20, n)), |(a, b)| {
                let x = nf.element_from_ints(&a).unwrap();
                let y = nf.element_from_ints(&b).unwrap();
                prop_assert_eq!(nf.norm(&nf.mul(&x, &y)), nf.norm(&x) * nf.norm(&y));
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn norm_multiplicativity_in_every_field() {
        for name in SHIPPED {
            norm_multiplicative(name);
        }
    }

    #[test]
    fn ray_class_order_identity() {
        // |Cl_m| * |unit image| = |(O/m)*| for class number one, no real places
        for (name, k) in [("q_i_sqrt_m19.json", 2u64), ("f_sextic.json", 2), ("q_i.json", 4), ("q_i_sqrt_m19.json", 3)] {
            let nf = field(name);
            let (_, c) = verify_class_number_one(&nf, DEFAULT_SEARCH_RADIUS);
            let units = UnitCertificate::from_field_certificate(&cert(name));
            let m = FractionalIdeal::rational(&nf, &BigInt::from(k)).unwrap();
            let g = unit_quotient_structure(&nf, &m, DEFAULT_RESIDUE_CAP).unwrap();
            let cl = ray_class_group(&nf, c.as_ref(), &units, &m, &[], DEFAULT_RESIDUE_CAP).unwrap();
            let image = unit_image_order(&nf, &units, &g).unwrap();
            assert_eq!(cl.order() * image, g.order(), "{name} mod {k}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn principal_ideal_norm_is_element_norm(a in proptest::collection::vec(-9i64..=9, 4)) {
            prop_assume!(a.iter().any(|&c| c != 0));
            let nf = field("q_i_sqrt_m19.json");
            let x = nf.element_from_ints(&a).unwrap();
            let i = FractionalIdeal::principal(&nf, &x).unwrap();
            prop_assert_eq!(i.norm(), ab19_core::arith::Rational::from_integer(nf.norm(&x).to_integer().abs()));
            prop_assert!(i.contains(&x));
        }
    }
}
