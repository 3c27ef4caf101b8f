//! Rank-4 Hopf algebras `Z[1/N][x,y]/(y^2 - R_y, x^2 - R_x)` with an
//! explicit group law, instantiated from a catalog with a parameter `n`.

use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{rint, Rational};
use crate::error::{Error, Result};

use super::mpoly::{MPoly, Monomial, NVARS};
use super::parse::parse_expr;

/// Which rule a reduction step applies first when both apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleOrder {
    /// `y^2` before `x^2`, pairs left to right.
    YFirst,
    /// `x^2` before `y^2`, pairs right to left.
    XFirst,
}

/// Rewrite rules `x^2 -> R_x`, `y^2 -> R_y` in every variable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewriter {
    rel_x: MPoly,
    rel_y: Option<MPoly>,
}

impl Rewriter {
    /// Rules with right-hand sides in `x, y` of total degree below 2.
    pub fn new(rel_x: MPoly, rel_y: Option<MPoly>) -> Result<Self> {
        let allowed: &[usize] = if rel_y.is_some() { &[0, 1] } else { &[0] };
        for r in std::iter::once(&rel_x).chain(rel_y.as_ref()) {
            if !r.uses_only(allowed) || r.total_degree() >= 2 {
                return Err(Error::Parse(format!("rewrite rule right-hand side {r} must be affine in the pair")));
            }
        }
        Ok(Rewriter { rel_x, rel_y })
    }

    fn rule_in_pair(&self, var: usize, pair: usize) -> MPoly {
        let r = if var == 0 { &self.rel_x } else { self.rel_y.as_ref().expect("y rule") };
        let mut perm = [0, 1, 2, 3, 4, 5];
        perm[0] = 2 * pair;
        perm[1] = 2 * pair + 1;
        perm[2 * pair] = 0;
        perm[2 * pair + 1] = 1;
        r.rename(&perm)
    }

    fn first_reducible(&self, m: &Monomial, order: RuleOrder) -> Option<(usize, usize)> {
        let pairs: Vec<usize> = match order {
            RuleOrder::YFirst => vec![0, 1, 2],
            RuleOrder::XFirst => vec![2, 1, 0],
        };
        let vars: [usize; 2] = match order {
            RuleOrder::YFirst => [1, 0],
            RuleOrder::XFirst => [0, 1],
        };
        for &p in &pairs {
            for &v in &vars {
                if v == 1 && self.rel_y.is_none() {
                    continue;
                }
                if m[2 * p + v] >= 2 {
                    return Some((v, p));
                }
            }
        }
        None
    }

    pub fn reduce_with(&self, poly: &MPoly, order: RuleOrder) -> MPoly {
        let mut out = MPoly::zero();
        let mut work: Vec<(Monomial, Rational)> = poly.terms().map(|(m, c)| (*m, c.clone())).collect();
        while let Some((m, c)) = work.pop() {
            match self.first_reducible(&m, order) {
                None => out.add_term(m, c),
                Some((v, p)) => {
                    let mut rest = m;
                    rest[2 * p + v] -= 2;
                    for (rm, rc) in self.rule_in_pair(v, p).terms() {
                        let mut nm = rest;
                        for i in 0..NVARS {
                            nm[i] += rm[i];
                        }
                        work.push((nm, &c * rc));
                    }
                }
            }
        }
        out
    }

    pub fn rel_x(&self) -> &MPoly {
        &self.rel_x
    }

    pub fn rel_y(&self) -> Option<&MPoly> {
        self.rel_y.as_ref()
    }

    pub fn reduce(&self, poly: &MPoly) -> MPoly {
        self.reduce_with(poly, RuleOrder::YFirst)
    }
}

/// Catalog description of a rank-2 sub or quotient `Z[1/N][x]/(x^2 - R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTwoSpec {
    /// Right-hand side of `x^2`.
    #[serde(rename = "x^2")]
    pub rel: String,
    /// Group law in `x, w`.
    pub law: String,
    /// For a subgroup: the coordinate whose ideal cuts it out.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kill: Option<String>,
    /// For a quotient: the image of its coordinate in `x, y`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<String>,
}

/// One catalog entry with symbolic `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub label: String,
    /// The integer `N` inverted in the base ring, as an expression in `n`.
    pub inverted: String,
    #[serde(rename = "x^2")]
    pub rel_x: String,
    #[serde(rename = "y^2")]
    pub rel_y: String,
    pub law_x: String,
    pub law_y: String,
    pub annihilation_order: u32,
    /// Discriminant whose square class is the field of points.
    pub points_disc: String,
    pub sub: RankTwoSpec,
    pub quotient: RankTwoSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub presentations: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("hopf catalog: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.presentations.iter().find(|e| e.name == name)
    }
}

/// A rank-2 Hopf algebra in the variable `x` (second copy `w`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwo {
    pub rewriter: Rewriter,
    pub law: MPoly,
    pub kill: Option<MPoly>,
    pub image: Option<MPoly>,
}

/// A Hopf algebra presentation over `Z[1/N]` for a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfPresentation {
    pub name: String,
    pub label: String,
    pub n: Rational,
    pub inverted: BigInt,
    pub rewriter: Rewriter,
    pub law_x: MPoly,
    pub law_y: MPoly,
    pub expected_order: u32,
    pub points_disc: BigInt,
    pub sub: RankTwo,
    pub quotient: RankTwo,
}

/// Whether every prime factor of the denominator of `c` divides `n`.
fn denominator_supported(c: &Rational, n: &BigInt) -> bool {
    let mut d = c.denom().clone();
    loop {
        let g = d.gcd(n);
        if g.is_one() {
            return d.is_one();
        }
        d /= g;
    }
}

fn check_domain(p: &MPoly, n: &BigInt, what: &str) -> Result<()> {
    match p.terms().find(|(_, c)| !denominator_supported(c, n)) {
        Some((_, c)) => Err(Error::Domain(format!("coefficient {c} of {what} is not in Z[1/{n}]"))),
        None => Ok(()),
    }
}

fn integer_expr(src: &str, n: &Rational) -> Result<BigInt> {
    let v = parse_expr(src, n)?
        .as_constant()
        .ok_or_else(|| Error::Parse(format!("{src:?} is not constant")))?;
    if !v.is_integer() {
        return Err(Error::Parse(format!("{src:?} is not an integer")));
    }
    Ok(v.to_integer())
}

impl RankTwo {
    fn from_spec(s: &RankTwoSpec, n: &Rational, inverted: &BigInt) -> Result<Self> {
        let rel = parse_expr(&s.rel, n)?;
        let law = parse_expr(&s.law, n)?;
        if !law.uses_only(&[0, 2]) {
            return Err(Error::Parse(format!("rank-2 law {law} must use only x and w")));
        }
        check_domain(&law, inverted, "rank-2 law")?;
        Ok(RankTwo {
            rewriter: Rewriter::new(rel, None)?,
            law,
            kill: s.kill.as_deref().map(|k| parse_expr(k, n)).transpose()?,
            image: s.image.as_deref().map(|k| parse_expr(k, n)).transpose()?,
        })
    }
}

impl HopfPresentation {
    pub fn from_entry(entry: &CatalogEntry, n: i64) -> Result<Self> {
        let nq = rint(n);
        let inverted = integer_expr(&entry.inverted, &nq)?;
        if inverted.is_zero() {
            return Err(Error::Domain(format!("{} inverts zero at n = {n}", entry.name)));
        }
        let rel_x = parse_expr(&entry.rel_x, &nq)?;
        let rel_y = parse_expr(&entry.rel_y, &nq)?;
        let law_x = parse_expr(&entry.law_x, &nq)?;
        let law_y = parse_expr(&entry.law_y, &nq)?;
        for (p, what) in [(&rel_x, "x^2 rule"), (&rel_y, "y^2 rule"), (&law_x, "law x"), (&law_y, "law y")] {
            check_domain(p, &inverted, what)?;
        }
        if !law_x.uses_only(&[0, 1, 2, 3]) || !law_y.uses_only(&[0, 1, 2, 3]) {
            return Err(Error::Parse("group law must use only x, y, w, z".into()));
        }
        Ok(HopfPresentation {
            name: entry.name.clone(),
            label: entry.label.clone(),
            n: nq.clone(),
            rewriter: Rewriter::new(rel_x, Some(rel_y))?,
            law_x,
            law_y,
            expected_order: entry.annihilation_order,
            points_disc: integer_expr(&entry.points_disc, &nq)?,
            sub: RankTwo::from_spec(&entry.sub, &nq, &inverted)?,
            quotient: RankTwo::from_spec(&entry.quotient, &nq, &inverted)?,
            inverted,
        })
    }

    /// Same presentation with the law replaced (for negative controls).
    pub fn with_law(&self, law_x: MPoly, law_y: MPoly) -> Self {
        HopfPresentation { law_x, law_y, ..self.clone() }
    }
}

/// Reduce a polynomial in up to three variable pairs to normal form,
/// checking that its coefficients lie in `Z[1/N]`.
pub fn normal_form(poly: &MPoly, pres: &HopfPresentation) -> Result<MPoly> {
    check_domain(poly, &pres.inverted, "input")?;
    Ok(pres.rewriter.reduce(poly))
}
