use std::path::Path;

use ab19_core::arith::rational::{int, rint};
use ab19_core::arith::{cubic_galois_group, CubicGalois, Poly};
use ab19_core::nf::{load_verified, FieldCertificate, NumberField};
use ab19_core::torsion::groups::{abelian, dihedral, groups_order_le_11, quaternion, three_groups_order_le_27};
use ab19_core::torsion::scans::Viability;
use ab19_core::torsion::*;
use ab19_core::{Error, Status};

fn field(name: &str) -> NumberField {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/fields").join(name);
    load_verified(&FieldCertificate::load(&path).unwrap()).unwrap()
}

#[test]
fn two_division_cubics() {
    let e = EllipticCurveQ::x0_19();
    assert_eq!(two_division_cubic(&e), Poly::from_ints(&[-59, -36, 4, 4]));
    assert_eq!(two_division_cubic(&EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap()), Poly::from_ints(&[4, 0, 0, 4]));
    let e = EllipticCurveQ::from_ints([0, 0, 0, -1, 0]).unwrap();
    let c = two_division_cubic(&e);
    assert_eq!(c, Poly::from_ints(&[0, -4, 0, 4]));
    // Explicit rational 2-torsion points (x, 0) with x in {0, 1, -1}, and
    // (-1, 0) on y^2 = x^3 + 1.
    for x in [0, 1, -1] {
        assert!(e.contains(&rint(x), &rint(0)));
        assert_eq!(c.eval(&rint(x)), rint(0));
    }
    let e = EllipticCurveQ::from_ints([0, 0, 0, 0, 1]).unwrap();
    assert!(e.contains(&rint(-1), &rint(0)));
    assert_eq!(two_division_cubic(&e).eval(&rint(-1)), rint(0));
    // 2-torsion with a3 != 0: y = -(a1 x + a3)/2.
    let e = EllipticCurveQ::from_ints([1, 0, 1, -1, 0]).unwrap();
    let c = two_division_cubic(&e);
    for r in c.rational_roots() {
        let y = -(r.clone() + rint(1)) / rint(2);
        assert!(e.contains(&r, &y));
    }
}

#[test]
fn x0_19_two_torsion_field() {
    let e = EllipticCurveQ::x0_19();
    assert_eq!(two_torsion_disc_class(&e).unwrap(), int(-19));
    let rep = verify_two_torsion_field(&e, &field("f_sextic.json"));
    assert!(rep.passed(), "{rep}");
    assert!(rep.items.iter().any(|i| i.label == "discriminant class" && i.detail.contains("-19")));
    assert_eq!(cubic_galois_group(&Poly::from_ints(&[-2, -2, 0, 1])).unwrap(), CubicGalois::S3);
}

#[test]
fn two_torsion_field_mutations() {
    let e = EllipticCurveQ::x0_19();
    for name in ["q.json", "q_i.json", "q_sqrt_m19.json", "q_i_sqrt_m19.json"] {
        let rep = verify_two_torsion_field(&e, &field(name));
        assert_eq!(rep.status(), Status::Fail, "{name}: {rep}");
    }
    let rep = verify_two_torsion_field(&e, &field("q_i_sqrt_m19.json"));
    assert_eq!(rep.first_failure().unwrap().label, "has_root");

    let split = EllipticCurveQ::from_ints([0, 0, 0, -1, 0]).unwrap();
    let rep = verify_two_torsion_field(&split, &field("f_sextic.json"));
    assert_eq!(rep.first_failure().unwrap().label, "irreducible");

    let unverified = NumberField::from_certificate(&FieldCertificate::load(
        &Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/fields/f_sextic.json"),
    ).unwrap())
    .unwrap();
    assert!(!verify_two_torsion_field(&e, &unverified).passed());
}

#[test]
fn module_examples() {
    let std = F2Module::standard_s3();
    let s3 = std.group().clone();
    let triv1 = F2Module::trivial(s3.clone(), 1).unwrap();
    let triv2 = F2Module::trivial(s3.clone(), 2).unwrap();
    assert!(module_is_irreducible(&std));
    assert!(module_is_irreducible(&triv1));
    assert!(!module_is_irreducible(&triv2));

    assert_eq!(module_end_dim(&std), 1);
    assert_eq!(module_end_dim(&triv2), 4);
    let std_triv = std.direct_sum(&triv1).unwrap();
    assert_eq!(module_end_dim(&std_triv), 2);
    let std2 = std.direct_sum(&std).unwrap();
    assert_eq!(module_end_dim(&std2), 4 * module_end_dim(&std));
    assert_eq!(hom_dim(&std, &triv1).unwrap(), 0);
}

#[test]
fn lattices() {
    let std = F2Module::standard_s3();
    let l = submodule_lattice(&std).unwrap();
    assert_eq!(l.len(), 2);
    assert_eq!(l.proper_nonzero(), 0);
    assert_eq!(l.composition_factor_dims(), vec![2]);

    let std2 = std.direct_sum(&std).unwrap();
    let l = submodule_lattice(&std2).unwrap();
    assert_eq!(l.proper_nonzero(), 3);
    assert!(l.jordan_holder_unique());
    assert_eq!(l.composition_factor_dims(), vec![2, 2]);
    assert_eq!(l.simple_classes(), 1);

    let triv2 = F2Module::trivial(std.group().clone(), 2).unwrap();
    let l = submodule_lattice(&triv2).unwrap();
    assert_eq!(l.len(), 5);

    let mixed = std.direct_sum(&F2Module::trivial(std.group().clone(), 1).unwrap()).unwrap();
    let l = submodule_lattice(&mixed).unwrap();
    assert_eq!(l.proper_nonzero(), 2);
    assert!(l.jordan_holder_unique());
    assert_eq!(l.simple_classes(), 2);
    let mut dims = l.composition_factor_dims();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 2]);

    // Six-dimensional trivial module: every subspace is invariant.
    let triv6 = F2Module::trivial(std.group().clone(), 6).unwrap();
    let l = submodule_lattice(&triv6).unwrap();
    assert_eq!(l.len(), 2825);
    assert!(l.jordan_holder_unique());
    assert!(matches!(
        submodule_lattice(&F2Module::trivial(std.group().clone(), 7).unwrap()),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn s3_regular_representation_lattice() {
    // F_2[S3] is not semisimple: its composition factors are std twice
    // and the trivial module twice.
    let s3 = dihedral(3);
    let gens = s3.generators().to_vec();
    let action = gens
        .iter()
        .map(|&g| {
            let rows: Vec<Vec<u8>> =
                (0..6).map(|i| (0..6).map(|j| u8::from(s3.mul(g, j) == i)).collect()).collect();
            let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
            F2Matrix::from_rows(&refs)
        })
        .collect();
    let reg = F2Module::new(s3, gens, action, 6).unwrap();
    let l = submodule_lattice(&reg).unwrap();
    assert!(l.jordan_holder_unique());
    let mut dims = l.composition_factor_dims();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 2, 2]);
    assert_eq!(module_end_dim(&reg), 6);
}

#[test]
fn catalogs_pass_table_checks() {
    for g in groups_order_le_11().into_iter().chain(three_groups_order_le_27()) {
        let t: Vec<Vec<usize>> = g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect();
        assert!(SmallGroup::from_table(g.name(), t).is_ok(), "{}", g.name());
    }
}

#[test]
fn order_le_11_scan() {
    let rep = lemma_scan_order_le_11();
    assert!(rep.holds);
    assert_eq!(rep.entries.len(), 19);
    let viable: Vec<&str> =
        rep.entries.iter().filter(|e| e.viability == Viability::Viable).map(|e| e.name.as_str()).collect();
    assert_eq!(viable, vec!["C1", "C3", "C2xC2", "C2xC4", "C2xC2xC2", "D4", "Q8", "C9", "C3xC3"]);
}

#[test]
fn three_group_scan() {
    let rep = three_group_abelianization_scan().unwrap();
    assert!(rep.holds);
    assert_eq!(rep.witnesses, vec!["C3".to_string()]);
    let heis = rep.entries.iter().find(|e| e.name == "Heis27").unwrap();
    assert_eq!(heis.abelianization, vec![3, 3]);
    let c9 = rep.entries.iter().find(|e| e.name == "C9").unwrap();
    assert_eq!(c9.abelianization, vec![9]);
    let c93 = rep.entries.iter().find(|e| e.name == "C9:C3").unwrap();
    assert_eq!(c93.abelianization, vec![3, 3]);
}

#[test]
fn generation_examples() {
    assert!(pgroup_generation_check(&dihedral(4), &[1, 2]).unwrap());
    assert!(pgroup_generation_check(&abelian(&[4]), &[1]).unwrap());
    assert!(pgroup_generation_check(&quaternion(), &[1, 2]).unwrap());
    // Exhaustive over all pairs in the 2-groups of order 8 and 3-groups.
    let groups = groups_order_le_11().into_iter().filter(|g| g.order() == 8).chain(three_groups_order_le_27());
    for g in groups {
        for a in g.elements() {
            for b in g.elements() {
                match pgroup_generation_check(&g, &[a, b]) {
                    Ok(ok) => assert!(ok, "{} {a} {b}", g.name()),
                    Err(e) => assert!(matches!(e, Error::Precondition(_))),
                }
            }
        }
    }
}

fn unitriangular(d: usize, n: u64) -> Vec<Vec<Vec<u64>>> {
    let slots: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let count = n.pow(slots.len() as u32);
    (0..count)
        .map(|mut c| {
            let mut m: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
            for &(i, j) in &slots {
                m[i][j] = c % n;
                c /= n;
            }
            m
        })
        .collect()
}

#[test]
fn unipotent_exponent_examples() {
    for n in [2, 4] {
        let m = FlaggedModule { modulus: n, dim: 2, sub_dim: 1, action: unitriangular(2, n) };
        assert!(unipotent_exponent_check(&m).unwrap());
    }
    let id = FlaggedModule { modulus: 4, dim: 3, sub_dim: 2, action: vec![unitriangular(3, 4)[0].clone()] };
    assert!(unipotent_exponent_check(&id).unwrap());
}

#[test]
fn unipotent_exponent_exhaustive() {
    // Every unitriangular action over Z/2, Z/4 in dimensions 2 and 3, with
    // every flag: either the check holds or the action is not
    // trivial-by-trivial for that flag.
    for n in [2, 4] {
        for d in [2, 3] {
            let mut applicable = 0;
            for s in unitriangular(d, n) {
                for k in 0..=d {
                    let m = FlaggedModule { modulus: n, dim: d, sub_dim: k, action: vec![s.clone()] };
                    match unipotent_exponent_check(&m) {
                        Ok(ok) => {
                            assert!(ok, "{s:?} flag {k}");
                            applicable += 1;
                        }
                        Err(e) => assert!(matches!(e, Error::Precondition(_))),
                    }
                }
            }
            assert!(applicable > 0);
        }
    }
}
