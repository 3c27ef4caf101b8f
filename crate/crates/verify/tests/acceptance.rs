//! The ten acceptance criteria, each at its stated tolerance and time budget.
//! Prints one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use ab19_core::arith::rational::{primes_up_to, rat, rint, squarefree_class};
use ab19_core::arith::{cubic_galois_group, CubicGalois, Poly, Rational};
use ab19_core::hopf::{self, Catalog, HopfPresentation, MPoly, RuleOrder};
use ab19_core::nf::units::DEFAULT_RESIDUE_CAP;
use ab19_core::nf::{
    factor_rational_prime, ray_class_group, unit_image_order, unit_quotient_structure, verified_field,
    verify_class_number_one, FieldCertificate, FractionalIdeal, NumberField, UnitCertificate,
};
use ab19_core::ramification::{
    degree_bound, herbrand_phi, herbrand_psi, root_disc_bound, upper_breaks, DegreeBound, DiscriminantTable,
    RamificationFiltration,
};
use ab19_core::torsion::{self, EllipticCurveQ, F2Module, FlaggedModule};
use ab19_verify::{render, run_suite, Config, Format, Selector, Source, Status};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config as RunnerConfig, TestRunner};

/// Criteria that cannot pass as literally stated. Their failure is checked
/// to be exactly the expected one; anything else fails the test.
const UNATTAINABLE: [usize; 1] = [5];

type Outcome = Result<String, String>;

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn field(name: &str) -> NumberField {
    let text = std::fs::read_to_string(data().join("fields").join(name)).unwrap();
    let cert = FieldCertificate::from_json(&text).unwrap();
    verified_field(NumberField::from_certificate(&cert).unwrap()).unwrap()
}

fn units(name: &str) -> UnitCertificate {
    let text = std::fs::read_to_string(data().join("fields").join(name)).unwrap();
    UnitCertificate::from_field_certificate(&FieldCertificate::from_json(&text).unwrap())
}

fn table() -> DiscriminantTable {
    DiscriminantTable::parse(&std::fs::read_to_string(data().join("tables/totally_imaginary.csv")).unwrap()).unwrap()
}

fn catalog() -> Catalog {
    Catalog::load(&data().join("hopf/catalog.json")).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn two(nf: &NumberField) -> FractionalIdeal {
    FractionalIdeal::rational(nf, &BigInt::from(2)).unwrap()
}

fn bounds() -> Outcome {
    let e = root_disc_bound(19, 2).map_err(|e| e.to_string())?;
    let n = rint(304);
    ensure(&e.lo * &e.lo <= n && n <= &e.hi * &e.hi, || format!("[{}, {}] misses 4 sqrt(19)", e.lo, e.hi))?;
    ensure(e.width() <= rat(1, 1_000_000), || format!("width {}", e.width()))?;
    let d = degree_bound(&e.hi, &table());
    ensure(d == DegreeBound::AtMost(137), || format!("degree bound {d:?}"))?;
    Ok("4 sqrt(19) enclosed, degree bound 137".into())
}

fn quartic() -> Outcome {
    let k = field("q_i_sqrt_m19.json");
    let u = units("q_i_sqrt_m19.json");
    let fac = factor_rational_prime(&k, 2).map_err(|e| e.to_string())?;
    ensure(fac.len() == 1 && fac[0].e == 2 && fac[0].f == 2, || format!("2O = {fac:?}"))?;
    let eps = &u.fundamental_units[0];
    let i = &u.torsion;
    let one = k.one();
    let norms = [k.norm(&k.sub(i, eps)), k.norm(&k.sub(i, &one)), k.norm(&k.sub(eps, &one))];
    ensure(norms == [rint(340), rint(4), rint(340)], || format!("norms {norms:?}"))?;
    let g = unit_quotient_structure(&k, &two(&k), DEFAULT_RESIDUE_CAP).map_err(|e| e.to_string())?;
    ensure(g.group().invariant_factors() == [2, 6], || format!("(O/2O)* = {}", g.group()))?;
    let img = unit_image_order(&k, &u, &g).map_err(|e| e.to_string())?;
    ensure(img == 4, || format!("unit image {img}"))?;
    let (rep, tok) = verify_class_number_one(&k, 12);
    ensure(tok.is_some(), || format!("class number one: {rep:?}"))?;
    let cl = ray_class_group(&k, tok.as_ref(), &u, &two(&k), &[], DEFAULT_RESIDUE_CAP).map_err(|e| e.to_string())?;
    ensure(cl.invariant_factors() == [3], || format!("Cl_2 = {cl}"))?;
    Ok("2O = P^2 (f=2), norms 340/4/340, (O/2O)* = C2 x C6, image 4, h = 1, Cl_2 = C3".into())
}

fn sextic() -> Outcome {
    let f = field("f_sextic.json");
    let u = units("f_sextic.json");
    let fac = factor_rational_prime(&f, 2).map_err(|e| e.to_string())?;
    ensure(fac.len() == 1 && fac[0].e == 3 && fac[0].f == 2, || format!("2O = {fac:?}"))?;
    let (rep, tok) = verify_class_number_one(&f, 12);
    let tok = tok.ok_or_else(|| format!("class number one: {rep:?}"))?;
    let (_, _, pi) = tok.generators().iter().find(|(p, _, _)| *p == 2).ok_or("no generator above 2")?;
    let cube = FractionalIdeal::principal(&f, pi).and_then(|i| i.pow(&f, 3)).map_err(|e| e.to_string())?;
    ensure(cube == two(&f), || "(pi)^3 != (2)".into())?;
    let g = unit_quotient_structure(&f, &two(&f), DEFAULT_RESIDUE_CAP).map_err(|e| e.to_string())?;
    let img = unit_image_order(&f, &u, &g).map_err(|e| e.to_string())?;
    ensure(img == 48, || format!("unit image {img}"))?;
    let cl = ray_class_group(&f, Some(&tok), &u, &two(&f), &[], DEFAULT_RESIDUE_CAP).map_err(|e| e.to_string())?;
    ensure(cl.order() == 1, || format!("Cl_2 = {cl}"))?;
    Ok("(2) = (pi)^3 (f=2), h = 1, Cl_2 trivial, image 48".into())
}

fn ext() -> Outcome {
    let d = |p| hopf::ext_mu_dimension(p, 2).map_err(|e| e.to_string());
    ensure([d(19)?, d(7)?, d(23)?] == [0, 1, 1], || "dimensions at 19, 7, 23".into())?;
    for p in primes_up_to(199).into_iter().filter(|&p| p >= 5) {
        ensure((d(p)? == 1) == (p % 8 == 1 || p % 8 == 7), || format!("equivalence fails at {p}"))?;
    }
    Ok("0/1/1 at 19/7/23; mod-8 equivalence for 5 <= p < 200".into())
}

/// Checks the catalog, then the three negative controls exactly as stated:
/// identity rejects +yz, commutativity rejects +xz, coassociativity rejects
/// the coefficient n in place of n/(8n+1).
fn hopf_catalog() -> Outcome {
    let cat = catalog();
    for (name, order, base) in [("z2_mu2", 2, 8), ("z2_z2", 2, 4), ("z4", 4, 4)] {
        for n in 1..=8 {
            let g = HopfPresentation::from_entry(cat.entry(name).unwrap(), n).map_err(|e| e.to_string())?;
            ensure(hopf::check_identity(&g) && hopf::check_commutativity(&g) && hopf::check_coassociativity(&g), || {
                format!("{name} n={n} axioms")
            })?;
            let k = hopf::annihilation_order(&g).map_err(|e| e.to_string())?;
            ensure(k == order, || format!("{name} n={n} order {k}"))?;
            let want = squarefree_class(&rint(base * n + 1)).unwrap();
            let got = hopf::point_field_class(&g).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("{name} n={n} class {got}, want {want}"))?;
        }
    }
    let mut missed = Vec::new();
    for n in 1..=8 {
        let g = HopfPresentation::from_entry(cat.entry("z2_mu2").unwrap(), n).unwrap();
        let p = |s: &str| hopf::parse_expr(s, &rint(n)).unwrap();
        if hopf::check_identity(&g.with_law(g.law_x.add(&p("yz")), g.law_y.clone())) {
            missed.push(format!("identity accepts S_x + yz (n={n})"));
        }
        if hopf::check_commutativity(&g.with_law(g.law_x.add(&p("xz")), g.law_y.clone())) {
            missed.push(format!("commutativity accepts S_x + xz (n={n})"));
        }
        let term = p("yz (1-2x)(1-2w)");
        let law = g.law_x.sub(&term.scale(&rat(n, 8 * n + 1))).add(&term.scale(&rint(n)));
        if hopf::check_coassociativity(&g.with_law(law, g.law_y.clone())) {
            missed.push(format!("coassociativity accepts coefficient n (n={n})"));
        }
    }
    if missed.is_empty() {
        Ok("catalog axioms, orders (2, 2, 4), point classes; all three controls rejected".into())
    } else {
        Err(format!("catalog ok; {} control cases not rejected, first: {}", missed.len(), missed[0]))
    }
}

/// The only acceptable failure of criterion 5: the +yz and coefficient
/// controls are accepted for every n, the xz control is rejected, and the
/// full law report rejects all three.
fn hopf_failure_is_expected(detail: &str) -> bool {
    let cat = catalog();
    let mut ok = detail.starts_with("catalog ok; 16 control cases");
    for n in 1..=8 {
        let g = HopfPresentation::from_entry(cat.entry("z2_mu2").unwrap(), n).unwrap();
        let p = |s: &str| hopf::parse_expr(s, &rint(n)).unwrap();
        let yz = g.with_law(g.law_x.add(&p("yz")), g.law_y.clone());
        let xz = g.with_law(g.law_x.add(&p("xz")), g.law_y.clone());
        let term = p("yz (1-2x)(1-2w)");
        let coef = g.with_law(g.law_x.sub(&term.scale(&rat(n, 8 * n + 1))).add(&term.scale(&rint(n))), g.law_y.clone());
        ok &= hopf::check_identity(&yz) && !hopf::check_commutativity(&xz) && hopf::check_coassociativity(&coef);
        ok &= [yz, xz, coef].iter().all(|bad| !hopf::law_report(bad).all_pass());
    }
    ok
}

fn curve() -> Outcome {
    let e = EllipticCurveQ::x0_19();
    let cubic = torsion::two_division_cubic(&e);
    ensure(cubic == Poly::from_ints(&[-59, -36, 4, 4]), || format!("cubic {cubic}"))?;
    let rep = torsion::verify_two_torsion_field(&e, &field("f_sextic.json"));
    ensure(rep.passed(), || format!("{rep:?}"))?;
    let class = torsion::two_torsion_disc_class(&e).map_err(|e| e.to_string())?;
    ensure(class == BigInt::from(-19), || format!("class {class}"))?;
    let g = cubic_galois_group(&Poly::from_ints(&[-2, -2, 0, 1])).map_err(|e| e.to_string())?;
    ensure(g == CubicGalois::S3, || format!("{g:?}"))?;
    Ok("cubic 4x^3 + 4x^2 - 36x - 59, Q(E[2]) = F, class -19, S3".into())
}

fn modules() -> Outcome {
    let m = F2Module::standard_s3();
    ensure(torsion::module_is_irreducible(&m), || "reducible".into())?;
    ensure(torsion::module_end_dim(&m) == 1, || "End".into())?;
    let l = torsion::submodule_lattice(&m).map_err(|e| e.to_string())?;
    ensure(l.dims() == [0, 2], || format!("lattice {:?}", l.dims()))?;
    Ok("irreducible, End = F_2, lattice {0, M}".into())
}

fn unitriangular(d: usize, n: u64) -> Vec<Vec<Vec<u64>>> {
    let slots: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    (0..n.pow(slots.len() as u32))
        .map(|mut code| {
            let mut m: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
            for &(i, j) in &slots {
                m[i][j] = code % n;
                code /= n;
            }
            m
        })
        .collect()
}

fn scans() -> Outcome {
    let rep = torsion::lemma_scan_order_le_11();
    ensure(rep.holds, || format!("{rep:?}"))?;
    let ab = torsion::three_group_abelianization_scan().map_err(|e| e.to_string())?;
    ensure(ab.holds && ab.witnesses == ["C3"], || format!("witnesses {:?}", ab.witnesses))?;
    let mut count = 0;
    for n in [2u64, 4] {
        for d in [2usize, 3] {
            for s in unitriangular(d, n) {
                // Flags on which the action is not trivial-by-trivial are skipped.
                for k in 0..=d {
                    let m = FlaggedModule { modulus: n, dim: d, sub_dim: k, action: vec![s.clone()] };
                    match torsion::unipotent_exponent_check(&m) {
                        Ok(true) => count += 1,
                        Ok(false) => return Err(format!("{s:?} flag {k}")),
                        Err(_) => {}
                    }
                }
            }
        }
    }
    ensure(count > 0, || "no admissible flags".into())?;
    Ok(format!("viable groups as claimed, C3 unique, {count} unipotent actions"))
}

fn filtration() -> impl Strategy<Value = RamificationFiltration> {
    (prop_oneof![Just(2u64), Just(3)], proptest::collection::vec(0u32..4, 1..8)).prop_map(|(p, mut exps)| {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        RamificationFiltration::new(exps.iter().map(|&e| p.pow(e)).collect()).unwrap()
    })
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    let mono = (prop::array::uniform6(0u8..=4), -20i64..=20, 1i64..=6);
    prop::collection::vec(mono, 0..8).prop_map(|terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (mut m, a, b)| {
            while m.iter().map(|&e| e as u32).sum::<u32>() > 4 {
                let i = m.iter().position(|&e| e > 0).unwrap();
                m[i] -= 1;
            }
            acc.add(&MPoly::monomial(m, rat(a, b)))
        })
    })
}

fn properties() -> Outcome {
    let run = |cases: u32| TestRunner::new(RunnerConfig { cases, failure_persistence: None, ..RunnerConfig::default() });
    for name in ["q.json", "q_i.json", "q_sqrt_m19.json", "q_i_sqrt_m19.json", "f_sextic.json"] {
        let nf = field(name);
        let n = nf.degree();
        let coords = || proptest::collection::vec(-20i64..=20, n);
        run(100)
            .run(&(coords(), coords()), |(a, b)| {
                let x = nf.element_from_ints(&a).unwrap();
                let y = nf.element_from_ints(&b).unwrap();
                prop_assert_eq!(nf.norm(&nf.mul(&x, &y)), nf.norm(&x) * nf.norm(&y));
                Ok(())
            })
            .map_err(|e| format!("norm multiplicativity in {name}: {e}"))?;
    }
    run(50)
        .run(&(filtration(), -4i64..=120, 1i64..=6), |(f, a, b)| {
            let lower: Vec<Rational> = f.lower_breaks().into_iter().map(|i| rint(i as i64)).collect();
            let back: Vec<Rational> = upper_breaks(&f).iter().map(|(v, _)| herbrand_psi(&f, v).unwrap()).collect();
            prop_assert_eq!(back, lower);
            let x = rat(a, b).max(rint(-1));
            prop_assert_eq!(herbrand_psi(&f, &herbrand_phi(&f, &x).unwrap()).unwrap(), x);
            Ok(())
        })
        .map_err(|e| format!("Herbrand round trip: {e}"))?;
    let cat = catalog();
    let pres: Vec<HopfPresentation> = ["z2_mu2", "z2_z2", "z4"]
        .iter()
        .flat_map(|name| (1..=8).map(|n| HopfPresentation::from_entry(cat.entry(name).unwrap(), n).unwrap()).collect::<Vec<_>>())
        .collect();
    run(200)
        .run(&(arb_poly(), 0..pres.len()), |(poly, i)| {
            let r = &pres[i].rewriter;
            prop_assert_eq!(r.reduce_with(&poly, RuleOrder::YFirst), r.reduce_with(&poly, RuleOrder::XFirst));
            Ok(())
        })
        .map_err(|e| format!("confluence: {e}"))?;
    let config = Config { data_dir: data(), ..Config::default() };
    let a = render(&run_suite(Selector::All, &config).map_err(|e| e.to_string())?, Format::Json);
    let b = render(&run_suite(Selector::All, &config).map_err(|e| e.to_string())?, Format::Json);
    ensure(a == b, || "report JSON differs between runs".into())?;
    Ok("norms 5x100, Herbrand 50, confluence 200, byte-identical reports".into())
}

fn honesty() -> Outcome {
    let config = Config { data_dir: data(), ..Config::default() };
    let r = run_suite(Selector::All, &config).map_err(|e| e.to_string())?;
    let assumed: Vec<&str> = r.checks.iter().filter(|c| c.status == Status::Assumed).map(|c| c.id.as_str()).collect();
    let want = ["theory.biconnected", "theory.faltings", "theory.mayer_vietoris", "theory.raynaud"];
    ensure(assumed == want, || format!("assumed entries {assumed:?}"))?;
    for c in &r.checks {
        let imported = c.source == Source::Assumed || c.id.starts_with("theory.");
        ensure((c.status == Status::Assumed) == imported, || format!("{} is {:?} with source {:?}", c.id, c.status, c.source))?;
        ensure(c.status == Status::Assumed || c.computed != "not computed", || format!("{} not computed", c.id))?;
    }
    ensure(r.summary.fail == 0 && r.summary.inconclusive == 0, || format!("{:?}", r.summary))?;
    ensure(r.checks.len() >= 30, || format!("only {} checks", r.checks.len()))?;
    Ok(format!("{} checks, exactly the four imported facts assumed", r.checks.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("bounds", bounds, Duration::from_millis(1)),
        ("cft degree 4", quartic, Duration::from_secs(30)),
        ("cft degree 6", sextic, Duration::from_secs(60)),
        ("ext predicate", ext, Duration::from_millis(1)),
        ("hopf catalog", hopf_catalog, Duration::from_secs(5)),
        ("curve", curve, Duration::from_secs(1)),
        ("modules", modules, Duration::from_secs(1)),
        ("group scans", scans, Duration::from_secs(2)),
        ("property suites", properties, Duration::from_secs(30)),
        ("honesty", honesty, Duration::from_secs(10)),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let number = i + 1;
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > *budget => Err(format!("{d}; took {elapsed:?}, budget {budget:?}")),
            other => other,
        };
        match &outcome {
            Ok(d) => println!("criterion {number:>2} ({name}): PASS [{elapsed:.2?}] {d}"),
            Err(d) => println!("criterion {number:>2} ({name}): FAIL [{elapsed:.2?}] {d}"),
        }
        let expected_failure = UNATTAINABLE.contains(&number);
        match outcome {
            Ok(_) if expected_failure => unexpected.push(format!("criterion {number} passed but is listed as unattainable")),
            Err(d) if expected_failure && !hopf_failure_is_expected(&d) => unexpected.push(format!("criterion {number}: {d}")),
            Err(d) if !expected_failure => unexpected.push(format!("criterion {number}: {d}")),
            _ => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance results: {unexpected:#?}");
        std::process::exit(1);
    }
    println!("acceptance: all criteria behave as expected");
}
