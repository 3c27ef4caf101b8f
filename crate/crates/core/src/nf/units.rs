//! Unit certificates, the residue unit group `(O/m)*`, unit images and ray
//! class groups of class-number-one fields.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::intmat::smith_invariants;
use crate::check::CheckReport;
use crate::error::{Error, Result};

use super::classgroup::{fmt_coords, ClassNumberOneCertificate};
use super::field::{FieldCertificate, FieldElement, NumberField};
use super::ideal::FractionalIdeal;
use super::real::{real_places, sign_at_place};

/// Default cap on `N(m)` for residue enumeration.
pub const DEFAULT_RESIDUE_CAP: u64 = 1_000_000;

/// `C_{d1} x ... x C_{dk}` with `d1 | d2 | ... | dk`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<u64>) -> Result<Self> {
        if invariant_factors.iter().any(|&d| d < 2) {
            return Err(Error::Domain("invariant factors must be at least 2".into()));
        }
        if invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Domain(format!("{invariant_factors:?} is not a divisibility chain")));
        }
        Ok(FiniteAbelianGroup { invariant_factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    /// Group `Z^cols / rowspan(rel)`; errors if it is infinite.
    pub fn from_relations(rel: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        let inv = smith_invariants(rel, cols);
        let factors = inv
            .iter()
            .map(|d| d.to_u64().filter(|&v| v != 0))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Domain("relations leave a free part".into()))?;
        FiniteAbelianGroup::new(factors)
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Torsion generator and claimed fundamental units of a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCertificate {
    pub field: String,
    pub torsion: FieldElement,
    pub fundamental_units: Vec<FieldElement>,
}

impl UnitCertificate {
    pub fn from_field_certificate(cert: &FieldCertificate) -> Self {
        UnitCertificate {
            field: cert.name.clone(),
            torsion: FieldElement::from_ints(&cert.torsion),
            fundamental_units: cert.units.iter().map(|u| FieldElement::from_ints(u)).collect(),
        }
    }

    /// Torsion generator followed by the fundamental units.
    pub fn elements(&self) -> Vec<FieldElement> {
        std::iter::once(self.torsion.clone()).chain(self.fundamental_units.iter().cloned()).collect()
    }
}

/// Check unit norms, integrality, the unit rank and that the torsion
/// generator is a root of unity. Independence and saturation of the units
/// are inputs, not checked here.
pub fn verify_unit_certificate(nf: &NumberField, units: &UnitCertificate) -> CheckReport {
    let mut rep = CheckReport::new(format!("unit certificate {}", nf.name()));
    let n = nf.degree();
    let (r1, r2) = nf.signature();
    rep.check(
        "unit rank",
        units.fundamental_units.len() + 1 == r1 + r2,
        format!("{} units, rank r1 + r2 - 1 = {}", units.fundamental_units.len(), r1 + r2 - 1),
    );
    for (k, u) in units.elements().iter().enumerate() {
        let label = if k == 0 { "torsion".to_string() } else { format!("unit {k}") };
        if u.coords.len() != n {
            rep.check(format!("{label} norm"), false, "wrong number of coordinates");
            continue;
        }
        let nrm = nf.norm(u);
        rep.check(
            format!("{label} norm"),
            u.is_integral() && nrm.abs().is_one(),
            format!("{} has norm {nrm}", fmt_coords(u)),
        );
    }
    let t = &units.torsion;
    if t.coords.len() == n {
        let one = nf.one();
        let bound = 2 * n * n + 2;
        let order = (1..=bound as u64).find(|&k| nf.pow(t, k) == one);
        rep.check(
            "torsion is a root of unity",
            order.is_some(),
            match order {
                Some(k) => format!("order {k}"),
                None => format!("no power up to {bound} equals 1"),
            },
        );
    }
    rep
}

/// `(O/m)*` with a discrete-log table over explicit generators.
#[derive(Debug, Clone)]
pub struct ResidueUnitGroup {
    hnf: Vec<Vec<i64>>,
    table: Vec<Vec<Vec<i64>>>,
    generators: Vec<Vec<i64>>,
    relations: Vec<Vec<BigInt>>,
    dlog: HashMap<Vec<i64>, Vec<i64>>,
    group: FiniteAbelianGroup,
    residue_count: u64,
}

impl ResidueUnitGroup {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn residue_count(&self) -> u64 {
        self.residue_count
    }

    pub fn generators(&self) -> Vec<FieldElement> {
        self.generators.iter().map(|g| FieldElement::from_ints(g)).collect()
    }

    /// Relations among the generators, one per row.
    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }

    /// Canonical residue of an integral element.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<i64> {
        let n = self.hnf.len();
        let mut v: Vec<BigInt> = x.to_vec();
        for i in 0..n {
            let d = BigInt::from(self.hnf[i][i]);
            let q = num_integer::Integer::div_floor(&v[i], &d);
            if !q.is_zero() {
                for j in i..n {
                    v[j] -= &q * self.hnf[i][j];
                }
            }
        }
        v.iter().map(|c| c.to_i64().expect("reduced residue")).collect()
    }

    fn reduce_small(&self, x: &mut [i128]) -> Vec<i64> {
        let n = self.hnf.len();
        for i in 0..n {
            let d = self.hnf[i][i] as i128;
            let q = x[i].div_euclid(d);
            if q != 0 {
                for j in i..n {
                    x[j] -= q * self.hnf[i][j] as i128;
                }
            }
        }
        x.iter().map(|&c| c as i64).collect()
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = a.len();
        let mut out = vec![0i128; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let c = a[i] as i128 * b[j] as i128;
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += c * t as i128;
                }
            }
        }
        self.reduce_small(&mut out)
    }

    /// Exponent vector of an element coprime to the modulus.
    pub fn discrete_log(&self, x: &FieldElement) -> Result<Vec<i64>> {
        let xi = x
            .int_coords()
            .ok_or_else(|| Error::Precondition("discrete log of a non-integral element".into()))?;
        let r = self.reduce(&xi);
        self.dlog
            .get(&r)
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("{} is not coprime to the modulus", fmt_coords(x))))
    }

    /// Order of the subgroup generated by the given exponent vectors.
    pub fn subgroup_order(&self, dlogs: &[Vec<i64>]) -> Result<u64> {
        let k = self.generators.len();
        let mut rel = self.relations.clone();
        rel.extend(dlogs.iter().map(|d| d.iter().map(|&c| BigInt::from(c)).collect()));
        let quotient = FiniteAbelianGroup::from_relations(&rel, k)?;
        Ok(self.order() / quotient.order())
    }
}

/// Build `(O/m)*` by enumerating the residues of an integral modulus.
pub fn unit_quotient_structure(nf: &NumberField, m: &FractionalIdeal, cap: u64) -> Result<ResidueUnitGroup> {
    if !m.is_integral() {
        return Err(Error::Precondition("modulus must be integral".into()));
    }
    let n = nf.degree();
    let norm = m.norm().to_integer();
    if norm > BigInt::from(cap) {
        return Err(Error::Resource(format!("N(m) = {norm} exceeds the residue cap {cap}")));
    }
    let hnf: Vec<Vec<i64>> = m
        .hnf()
        .iter()
        .map(|r| r.iter().map(|c| c.to_i64().expect("entries below the cap")).collect())
        .collect();
    let table = nf.i64_table().ok_or_else(|| Error::Precondition("basis is not ring-closed".into()))?;
    let mut g = ResidueUnitGroup {
        hnf,
        table,
        generators: Vec::new(),
        relations: Vec::new(),
        dlog: HashMap::new(),
        group: FiniteAbelianGroup::trivial(),
        residue_count: norm.to_u64().expect("below cap"),
    };
    let diag: Vec<i64> = (0..n).map(|i| g.hnf[i][i]).collect();

    // enumerate canonical residues and keep the units
    let mut units = Vec::new();
    let mut v = vec![0i64; n];
    loop {
        let x = FieldElement::from_ints(&v);
        if m.is_coprime_element(nf, &x)? {
            units.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            v[i] += 1;
            if v[i] < diag[i] {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }

    let one = g.reduce(&nf.one().int_coords().expect("1 is integral"));
    g.dlog.insert(one, Vec::new());
    for u in &units {
        if g.dlog.contains_key(u) {
            continue;
        }
        let k = g.generators.len();
        for d in g.dlog.values_mut() {
            d.push(0);
        }
        for r in g.relations.iter_mut() {
            r.push(BigInt::zero());
        }
        // smallest r with u^r in the current span
        let mut pw = u.clone();
        let mut r = 1i64;
        while !g.dlog.contains_key(&pw) {
            pw = g.mul(&pw, u);
            r += 1;
        }
        let mut rel: Vec<BigInt> = g.dlog[&pw].iter().map(|&c| BigInt::from(-c)).collect();
        rel[k] += BigInt::from(r);
        g.relations.push(rel);
        let old: Vec<(Vec<i64>, Vec<i64>)> = g.dlog.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        let mut upow = u.clone();
        for j in 1..r {
            for (s, d) in &old {
                let mut nd = d.clone();
                nd[k] = j;
                g.dlog.insert(g.mul(s, &upow), nd);
            }
            upow = g.mul(&upow, u);
        }
        g.generators.push(u.clone());
    }
    if g.dlog.len() != units.len() {
        return Err(Error::Domain(format!(
            "discrete-log table has {} entries for {} units",
            g.dlog.len(),
            units.len()
        )));
    }
    g.group = FiniteAbelianGroup::from_relations(&g.relations, g.generators.len())?;
    if g.group.order() != units.len() as u64 {
        return Err(Error::Domain("group order disagrees with the unit count".into()));
    }
    Ok(g)
}

/// Order of the image of the certified units in `(O/m)*`.
pub fn unit_image_order(nf: &NumberField, units: &UnitCertificate, g: &ResidueUnitGroup) -> Result<u64> {
    let _ = nf;
    let dlogs = units.elements().iter().map(|u| g.discrete_log(u)).collect::<Result<Vec<_>>>()?;
    g.subgroup_order(&dlogs)
}

/// Ray class group modulo `m` times the real places listed in
/// `infinite_part` (indices into the sorted real roots). Only fields with
/// certified class number one are supported.
pub fn ray_class_group(
    nf: &NumberField,
    class_number_one: Option<&ClassNumberOneCertificate>,
    units: &UnitCertificate,
    m: &FractionalIdeal,
    infinite_part: &[usize],
    cap: u64,
) -> Result<FiniteAbelianGroup> {
    match class_number_one {
        Some(c) if c.matches(nf) => {}
        _ => return Err(Error::Unsupported(format!("class number of {} is not certified to be 1", nf.name()))),
    }
    let places = real_places(nf);
    if let Some(&bad) = infinite_part.iter().find(|&&i| i >= places.len()) {
        return Err(Error::Domain(format!("real place {bad} does not exist ({} real places)", places.len())));
    }
    let g = unit_quotient_structure(nf, m, cap)?;
    let k = g.generators.len();
    let s = infinite_part.len();
    let mut rel: Vec<Vec<BigInt>> = g
        .relations
        .iter()
        .map(|r| r.iter().cloned().chain(std::iter::repeat(BigInt::zero()).take(s)).collect())
        .collect();
    for j in 0..s {
        let mut r = vec![BigInt::zero(); k + s];
        r[k + j] = BigInt::from(2);
        rel.push(r);
    }
    for u in units.elements() {
        let mut row: Vec<BigInt> = g.discrete_log(&u)?.into_iter().map(BigInt::from).collect();
        for &pl in infinite_part {
            let sg = sign_at_place(nf, &u, &places[pl])?;
            row.push(BigInt::from(if sg < 0 { 1 } else { 0 }));
        }
        rel.push(row);
    }
    FiniteAbelianGroup::from_relations(&rel, k + s)
}
