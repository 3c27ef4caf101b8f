//! Ramification filtrations, Herbrand's function, Fontaine's bound and
//! the discriminant bounds derived from it.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{floor, floor_root, is_prime_u64, parse_rational, rint, Rational};
use crate::error::{Error, Result};

/// Orders `g_0 >= g_1 >= ... >= g_m` of the lower-numbering ramification
/// groups at integer indices; `g_i = 1` beyond the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationFiltration {
    orders: Vec<u64>,
}

impl RamificationFiltration {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() || orders[0] == 0 {
            return Err(Error::Domain("filtration needs g_0 >= 1".into()));
        }
        for w in orders.windows(2) {
            if w[1] == 0 || w[0] % w[1] != 0 {
                return Err(Error::Domain(format!("{orders:?} is not a chain of subgroup orders")));
            }
        }
        Ok(RamificationFiltration { orders })
    }

    pub fn trivial() -> Self {
        RamificationFiltration { orders: vec![1] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `g_i`, with `g_i = 1` past the stored list.
    pub fn g(&self, i: usize) -> u64 {
        self.orders.get(i).copied().unwrap_or(1)
    }

    /// Lower-numbering indices where the group shrinks (plus 0 when the
    /// extension is ramified).
    pub fn lower_breaks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if self.g(0) > 1 {
            out.push(0);
        }
        for i in 1..self.orders.len() {
            if self.g(i) > self.g(i + 1) {
                out.push(i as u64);
            }
        }
        out
    }
}

/// Herbrand's `phi`: identity on `[-1, 0]`, slope `g_{m+1}/g_0` on `[m, m+1]`.
pub fn herbrand_phi(filt: &RamificationFiltration, u: &Rational) -> Result<Rational> {
    if *u < rint(-1) {
        return Err(Error::Domain(format!("phi is defined for u >= -1, got {u}")));
    }
    if !u.is_positive() {
        return Ok(u.clone());
    }
    let m = floor(u);
    let g0 = rint(filt.g(0) as i64);
    // g_i = 1 from index L on, so the tail of the sum is m - (L - 1)
    let last = filt.orders.len() - 1;
    let head = usize::try_from(&m).map_or(last, |m| m.min(last));
    let mut acc: Rational = (1..=head).map(|i| rint(filt.g(i) as i64)).sum();
    if m > BigInt::from(last) {
        acc += Rational::from_integer(&m - last);
    }
    let next = usize::try_from(&m).map_or(1, |m| filt.g(m + 1));
    acc += (u - Rational::from_integer(m)) * rint(next as i64);
    Ok(acc / g0)
}

/// Inverse of [`herbrand_phi`].
pub fn herbrand_psi(filt: &RamificationFiltration, v: &Rational) -> Result<Rational> {
    if *v < rint(-1) {
        return Err(Error::Domain(format!("psi is defined for v >= -1, got {v}")));
    }
    if !v.is_positive() {
        return Ok(v.clone());
    }
    let g0 = rint(filt.g(0) as i64);
    let mut start = Rational::zero();
    let mut m = 0usize;
    loop {
        let slope = rint(filt.g(m + 1) as i64) / &g0;
        let end = &start + &slope;
        if *v <= end || m >= filt.orders.len() {
            return Ok(rint(m as i64) + (v - &start) / slope);
        }
        start = end;
        m += 1;
    }
}

/// Upper-numbering jumps `(phi(i), g_i)` for each lower break `i`.
pub fn upper_breaks(filt: &RamificationFiltration) -> Vec<(Rational, u64)> {
    filt.lower_breaks()
        .into_iter()
        .map(|i| (herbrand_phi(filt, &rint(i as i64)).expect("i >= 0"), filt.g(i as usize)))
        .collect()
}

/// `e (n + 1/(l - 1)) - 1`: upper breaks of `G[l^n]` lie at or below this.
pub fn fontaine_bound(e: u64, n: u64, l: u64) -> Result<Rational> {
    if e == 0 || n == 0 || l < 2 {
        return Err(Error::Domain(format!("fontaine_bound({e}, {n}, {l}) needs e, n >= 1 and l >= 2")));
    }
    Ok(rint(e as i64) * (rint(n as i64) + Rational::new(BigInt::one(), BigInt::from(l - 1))) - rint(1))
}

/// Tame discriminant exponent `(l - 1) degree / l`.
pub fn tame_disc_valuation(l: u64, degree: u64) -> Result<u64> {
    if l < 2 || degree % l != 0 {
        return Err(Error::Domain(format!("{l} does not divide {degree}")));
    }
    Ok((l - 1) * degree / l)
}

/// Wild discriminant exponent cap `l degree / (l - 1)`.
pub fn wild_disc_valuation_bound(l: u64, degree: u64) -> Result<Rational> {
    if l < 2 || degree == 0 {
        return Err(Error::Domain(format!("wild bound needs l >= 2 and degree >= 1, got ({l}, {degree})")));
    }
    Ok(Rational::new(BigInt::from(l * degree), BigInt::from(l - 1)))
}

/// Closed rational interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

/// Denominator of the root-discriminant enclosure.
const ENCLOSURE_DENOM: u64 = 10_000_000;

/// Enclosure of `p^((l-1)/l) l^(l/(l-1))`, the root-discriminant cap for
/// fields cut out by `l`-power torsion with good reduction outside `p`.
pub fn root_disc_bound(p: u64, l: u64) -> Result<Enclosure> {
    if p == l {
        return Err(Error::Domain(format!("p and l must differ, got {p}")));
    }
    if !is_prime_u64(p) || !is_prime_u64(l) {
        return Err(Error::Domain(format!("({p}, {l}) must be primes")));
    }
    // value^k = p^((l-1)^2) l^(l^2) with k = l (l - 1)
    let k = (l * (l - 1)) as u32;
    let big_n = num_traits::pow(BigInt::from(p), ((l - 1) * (l - 1)) as usize)
        * num_traits::pow(BigInt::from(l), (l * l) as usize);
    let d = BigInt::from(ENCLOSURE_DENOM);
    let r = floor_root(&(big_n * num_traits::pow(d.clone(), k as usize)), k);
    Ok(Enclosure { lo: Rational::new(r.clone(), d.clone()), hi: Rational::new(r + 1, d) })
}

/// Lower bounds for root discriminants by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantTable {
    pub source: String,
    pub flavor: String,
    /// Root discriminants at or above this are not bounded by the table.
    pub limit: Option<Rational>,
    rows: Vec<(u64, Rational)>,
}

impl DiscriminantTable {
    pub fn new(source: String, flavor: String, limit: Option<Rational>, rows: Vec<(u64, Rational)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parse("discriminant table has no rows".into()));
        }
        for w in rows.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::Parse(format!("degrees not increasing at {}", w[1].0)));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::Parse(format!("bounds decrease at degree {}", w[1].0)));
            }
        }
        Ok(DiscriminantTable { source, flavor, limit, rows })
    }

    pub fn rows(&self) -> &[(u64, Rational)] {
        &self.rows
    }

    /// Parse `# key: value` metadata lines followed by `degree,min_root_disc` rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut source = String::new();
        let mut flavor = String::new();
        let mut limit = None;
        let mut body = String::new();
        for line in text.lines() {
            let Some(meta) = line.trim().strip_prefix('#') else {
                body.push_str(line);
                body.push('\n');
                continue;
            };
            for field in meta.split(", ") {
                if let Some((k, v)) = field.split_once(':') {
                    match k.trim() {
                        "source" => source = v.trim().to_string(),
                        "flavor" => flavor = v.trim().to_string(),
                        "limit" => limit = Some(parse_rational(v.trim())?),
                        _ => {}
                    }
                }
            }
        }
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(body.as_bytes());
        let mut rows = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| Error::Parse(format!("table row: {e}")))?;
            if rec.len() != 2 {
                return Err(Error::Parse(format!("expected 2 columns, got {}", rec.len())));
            }
            let deg: u64 = rec[0].parse().map_err(|_| Error::Parse(format!("bad degree {:?}", &rec[0])))?;
            rows.push((deg, parse_rational(&rec[1])?));
        }
        DiscriminantTable::new(source, flavor, limit, rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

/// Result of a degree lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeBound {
    AtMost(u64),
    Unbounded,
}

/// Largest degree not excluded by the table for a field whose root
/// discriminant is at most `bound`: one less than the first tabulated
/// degree whose lower bound exceeds `bound`.
pub fn degree_bound(bound: &Rational, table: &DiscriminantTable) -> DegreeBound {
    if table.limit.as_ref().is_some_and(|l| bound >= l) {
        return DegreeBound::Unbounded;
    }
    match table.rows.iter().find(|(_, b)| b > bound) {
        Some((d, _)) => DegreeBound::AtMost(d - 1),
        None => DegreeBound::Unbounded,
    }
}

/// Whether a degree-`d` abelian extension of the sextic field is excluded:
/// the conductor-discriminant exponent of 2, `(5/2) d - 2`, exceeds the
/// cap `2d`.
pub fn cft_exclusion_check(d: u64) -> Result<bool> {
    if d % 12 != 0 || d < 24 {
        return Err(Error::Domain(format!("degree {d} must be a multiple of 12 and at least 24")));
    }
    let lower = Rational::new(BigInt::from(5 * d), BigInt::from(2)) - rint(2);
    Ok(lower > wild_disc_valuation_bound(2, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn phi_examples() {
        let t = RamificationFiltration::trivial();
        assert_eq!(herbrand_phi(&t, &rint(5)).unwrap(), rint(5));
        let f = RamificationFiltration::new(vec![2, 2, 1]).unwrap();
        assert_eq!(herbrand_phi(&f, &rint(1)).unwrap(), rint(1));
        assert_eq!(herbrand_phi(&f, &rint(2)).unwrap(), rat(3, 2));
        let tame = RamificationFiltration::new(vec![2, 1]).unwrap();
        assert_eq!(herbrand_phi(&tame, &rint(1)).unwrap(), rat(1, 2));
        assert!(herbrand_phi(&tame, &rint(-2)).is_err());
    }

    #[test]
    fn break_examples() {
        let tame = RamificationFiltration::new(vec![3, 1]).unwrap();
        assert_eq!(upper_breaks(&tame), vec![(rint(0), 3)]);
        let f = RamificationFiltration::new(vec![2, 2, 1]).unwrap();
        assert_eq!(upper_breaks(&f), vec![(rint(0), 2), (rint(1), 2)]);
        assert!(upper_breaks(&RamificationFiltration::trivial()).is_empty());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(fontaine_bound(1, 1, 2).unwrap(), rint(1));
        assert_eq!(fontaine_bound(1, 1, 3).unwrap(), rat(1, 2));
        assert_eq!(fontaine_bound(2, 2, 2).unwrap(), rint(5));
        assert_eq!(tame_disc_valuation(2, 4).unwrap(), 2);
        assert_eq!(tame_disc_valuation(2, 12).unwrap(), 6);
        assert_eq!(tame_disc_valuation(3, 6).unwrap(), 4);
        assert!(tame_disc_valuation(2, 5).is_err());
        assert_eq!(wild_disc_valuation_bound(2, 1).unwrap(), rint(2));
        assert_eq!(wild_disc_valuation_bound(2, 12).unwrap(), rint(24));
        assert_eq!(wild_disc_valuation_bound(3, 6).unwrap(), rint(9));
    }

    #[test]
    fn root_disc_examples() {
        let e = root_disc_bound(19, 2).unwrap();
        assert!(e.lo >= rat(174355, 10000) && e.hi <= rat(174357, 10000));
        assert!(e.width() <= rat(1, 1_000_000));
        // 4 sqrt(19) = sqrt(304): the enclosure brackets it exactly
        assert!(&e.lo * &e.lo <= rint(304) && &e.hi * &e.hi >= rint(304));
        let e = root_disc_bound(11, 2).unwrap();
        assert!(e.contains(&rat(13266499, 1_000_000)) || (e.lo > rat(13266, 1000) && e.hi < rat(13267, 1000)));
        let e = root_disc_bound(3, 2).unwrap();
        assert!(e.lo > rat(6928, 1000) && e.hi < rat(6929, 1000));
        assert!(root_disc_bound(2, 2).is_err());
    }

    #[test]
    fn table_lookup() {
        let t = DiscriminantTable::parse("# source: test, flavor: x\n# limit: 21.78\ndegree,min_root_disc\n10,5.0\n20,8.5\n").unwrap();
        assert_eq!(t.flavor, "x");
        assert_eq!(degree_bound(&rint(6), &t), DegreeBound::AtMost(19));
        assert_eq!(degree_bound(&rint(4), &t), DegreeBound::AtMost(9));
        assert_eq!(degree_bound(&rint(9), &t), DegreeBound::Unbounded);
        assert_eq!(degree_bound(&rint(22), &t), DegreeBound::Unbounded);
        assert!(DiscriminantTable::parse("degree,min_root_disc\n").is_err());
        assert!(DiscriminantTable::parse("degree,min_root_disc\n3,2\n2,3\n").is_err());
    }

    #[test]
    fn cft_examples() {
        assert!(cft_exclusion_check(24).unwrap());
        assert!(cft_exclusion_check(36).unwrap());
        assert!(cft_exclusion_check(12).is_err());
        assert!(cft_exclusion_check(30).is_err());
    }
}
