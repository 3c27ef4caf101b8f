//! Executable versions of the finite-group lemmas.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::groups::{groups_order_le_11, three_groups_order_le_27, SmallGroup};

/// How a group fares in [`lemma_scan_order_le_11`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Viability {
    /// `H = Psi(H)` or `H / Psi(H)` is not cyclic.
    Viable,
    /// `H / Psi(H)` is a nontrivial cyclic group.
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupScanEntry {
    pub name: String,
    pub order: usize,
    pub psi_order: usize,
    pub viability: Viability,
    /// `Some(p)` when the order is a power of `p` (1 for the trivial group).
    pub prime: Option<usize>,
    pub cyclic: bool,
}

impl GroupScanEntry {
    /// A non-cyclic 2-group or a (possibly trivial) 3-group.
    pub fn allowed_shape(&self) -> bool {
        match self.prime {
            Some(1) | Some(3) => true,
            Some(2) => !self.cyclic,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupScanReport {
    pub entries: Vec<GroupScanEntry>,
    /// Every viable group has an allowed shape.
    pub holds: bool,
}

/// Smallest normal subgroup containing `D(H)` and every 3-Sylow subgroup.
/// The 3-Sylows together are generated by the elements of 3-power order.
pub fn psi(h: &SmallGroup) -> BTreeSet<usize> {
    let mut gens: Vec<usize> = h.derived_subgroup().into_iter().collect();
    gens.extend(h.elements().filter(|&g| is_power_of(h.element_order(g), 3)));
    h.normal_closure(&gens)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn scan_group(h: &SmallGroup) -> GroupScanEntry {
    let psi = psi(h);
    let viable = psi.len() == h.order() || !h.quotient_is_cyclic(&psi);
    let trivial = BTreeSet::from([0]);
    GroupScanEntry {
        name: h.name().to_string(),
        order: h.order(),
        psi_order: psi.len(),
        viability: if viable { Viability::Viable } else { Viability::Excluded },
        prime: h.prime_power_order(),
        cyclic: h.quotient_is_cyclic(&trivial),
    }
}

/// Runs [`scan_group`] over every group of order at most 11.
pub fn lemma_scan_order_le_11() -> GroupScanReport {
    let entries: Vec<GroupScanEntry> = groups_order_le_11().iter().map(scan_group).collect();
    let holds = entries.iter().filter(|e| e.viability == Viability::Viable).all(GroupScanEntry::allowed_shape);
    GroupScanReport { entries, holds }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationEntry {
    pub name: String,
    pub order: usize,
    pub abelianization: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationReport {
    pub entries: Vec<AbelianizationEntry>,
    /// Names of the groups with abelianization `C3`.
    pub witnesses: Vec<String>,
    /// The witnesses are exactly the groups of order 3.
    pub holds: bool,
}

/// Abelianizations of the 3-groups of order at most 27.
pub fn three_group_abelianization_scan() -> Result<AbelianizationReport> {
    let mut entries = Vec::new();
    let mut witnesses = Vec::new();
    let mut holds = true;
    for g in three_groups_order_le_27() {
        let ab = g.abelianization()?.invariant_factors().to_vec();
        let is_c3 = ab == [3];
        if is_c3 {
            witnesses.push(g.name().to_string());
        }
        holds &= is_c3 == (g.order() == 3);
        entries.push(AbelianizationEntry { name: g.name().to_string(), order: g.order(), abelianization: ab });
    }
    holds &= witnesses.len() == 1;
    Ok(AbelianizationReport { entries, witnesses, holds })
}

/// Whether `gens` generate the prime-power group `g`, given that they
/// generate it modulo `D(g)`.
pub fn pgroup_generation_check(g: &SmallGroup, gens: &[usize]) -> Result<bool> {
    if g.prime_power_order().is_none() {
        return Err(Error::Precondition(format!("{} does not have prime-power order", g.name())));
    }
    if gens.iter().any(|&x| x >= g.order()) {
        return Err(Error::Domain("generator index out of range".into()));
    }
    let mut with_derived: Vec<usize> = gens.to_vec();
    with_derived.extend(g.derived_subgroup());
    if g.generated(&with_derived).len() != g.order() {
        return Err(Error::Precondition(format!("images of {gens:?} do not generate the abelianization")));
    }
    Ok(g.generated(gens).len() == g.order())
}

/// A `Z/n`-module `(Z/n)^dim` with the submodule spanned by the first
/// `sub_dim` coordinates and a group acting by matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlaggedModule {
    pub modulus: u64,
    pub dim: usize,
    pub sub_dim: usize,
    pub action: Vec<Vec<Vec<u64>>>,
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], n: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum::<u64>() % n).collect()).collect()
}

fn identity(d: usize) -> Vec<Vec<u64>> {
    (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect()
}

/// Every acting `s` satisfies `s^n = 1`, where `s` acts trivially on the
/// flagged submodule and on the quotient; also checks `(s - 1)^2 = 0`.
pub fn unipotent_exponent_check(m: &FlaggedModule) -> Result<bool> {
    let (n, d, k) = (m.modulus, m.dim, m.sub_dim);
    if n < 2 || k > d {
        return Err(Error::Domain("modulus must be at least 2 and the flag inside the module".into()));
    }
    let id = identity(d);
    let mut ok = true;
    for s in &m.action {
        if s.len() != d || s.iter().any(|r| r.len() != d) {
            return Err(Error::Domain("action matrices must be square of size dim".into()));
        }
        let nil: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| (s[i][j] + n - id[i][j]) % n).collect()).collect();
        // Trivial on the submodule: columns < k of s - 1 vanish; trivial on
        // the quotient: rows >= k vanish.
        let on_sub = (0..d).all(|i| (0..k).all(|j| nil[i][j] == 0));
        let on_quot = (k..d).all(|i| (0..d).all(|j| nil[i][j] == 0));
        if !on_sub || !on_quot {
            return Err(Error::Precondition("action is not trivial on the submodule and quotient".into()));
        }
        let sq_zero = mat_mul(&nil, &nil, n).iter().flatten().all(|&x| x == 0);
        let pow = (0..n).fold(id.clone(), |acc, _| mat_mul(&acc, s, n));
        ok &= sq_zero && pow == id;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::groups::{abelian, dihedral, quaternion};

    fn entry(name: &str) -> GroupScanEntry {
        lemma_scan_order_le_11().entries.into_iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(entry("C2").viability, Viability::Excluded);
        assert_eq!(entry("C2").psi_order, 1);
        assert_eq!(entry("C2xC2").viability, Viability::Viable);
        assert_eq!(entry("S3").viability, Viability::Excluded);
        assert_eq!(entry("S3").psi_order, 3);
        assert_eq!(entry("Q8").viability, Viability::Viable);
        assert!(lemma_scan_order_le_11().holds);
    }

    #[test]
    fn generation() {
        let d4 = dihedral(4);
        assert!(pgroup_generation_check(&d4, &[1, 2]).unwrap());
        let c4 = abelian(&[4]);
        assert!(pgroup_generation_check(&c4, &[1]).unwrap());
        let q8 = quaternion();
        assert!(pgroup_generation_check(&q8, &[1, 2]).unwrap());
        assert!(pgroup_generation_check(&dihedral(3), &[1]).is_err());
        assert!(pgroup_generation_check(&c4, &[0]).is_err());
    }
}
