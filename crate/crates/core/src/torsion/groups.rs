//! Small finite groups as multiplication tables, generated by closure from
//! permutation or matrix generators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::nf::FiniteAbelianGroup;

/// A finite group on `0..order` with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl SmallGroup {
    /// Checks associativity, the two-sided identity `0` and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |what: &str| Error::Parse(format!("{name}: {what}"));
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table is not square over 0..n"));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(bad("0 is not the identity"));
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == 0 && table[b][a] == 0)
                .ok_or_else(|| bad(&format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(&format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(SmallGroup { name, table, inverse, generators: Vec::new() })
    }

    /// Closure of `gens` under `mul`, with `id` as element 0.
    pub fn from_generators<T: Ord + Clone>(
        name: impl Into<String>,
        id: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> Result<Self> {
        let mut elems = vec![id.clone()];
        let mut index: BTreeMap<T, usize> = BTreeMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let h = mul(&elems[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(h);
                }
            }
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        let mut g = Self::from_table(name, table)?;
        g.generators = gens.iter().map(|x| index[x]).collect();
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Generators used to build the group (empty for a raw table).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Subgroup generated by `gens`, as a sorted element set.
    pub fn generated(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if set.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        set
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let conj: Vec<usize> = gens
            .iter()
            .flat_map(|&g| self.elements().map(move |h| (g, h)))
            .map(|(g, h)| self.mul(self.mul(h, g), self.inv(h)))
            .collect();
        self.generated(&conj)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Derived subgroup `D(G)`.
    pub fn derived_subgroup(&self) -> BTreeSet<usize> {
        let comms: Vec<usize> =
            self.elements().flat_map(|a| self.elements().map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.generated(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `G / n` is cyclic, for a normal subgroup `n`.
    pub fn quotient_is_cyclic(&self, n: &BTreeSet<usize>) -> bool {
        let index = self.order() / n.len();
        self.elements().any(|g| self.coset_order(g, n) == index)
    }

    fn coset_order(&self, g: usize, n: &BTreeSet<usize>) -> usize {
        let mut x = g;
        let mut k = 1;
        while !n.contains(&x) {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Invariant factors of the abelian group `G / n`, for a normal subgroup
    /// `n` with abelian quotient.
    pub fn abelian_quotient(&self, n: &BTreeSet<usize>) -> Result<FiniteAbelianGroup> {
        let index = self.order() / n.len();
        let mut elementary: Vec<Vec<u32>> = Vec::new();
        for p in prime_factors(index) {
            // r[k] = log_p #{cosets killed by p^k}; cyclic factors of order
            // >= p^k number r[k] - r[k-1].
            let mut r = vec![0u32];
            let mut pk = 1;
            while *r.last().unwrap() < p_valuation(index, p) {
                pk *= p;
                let killed = self.elements().filter(|&g| n.contains(&self.pow(g, pk))).count() / n.len();
                r.push(p_valuation(killed, p));
            }
            let mut exps = Vec::new();
            for k in (1..r.len()).rev() {
                let at_least = r[k] - r[k - 1];
                let longer = exps.len() as u32;
                for _ in longer..at_least {
                    exps.push(k as u32);
                }
            }
            elementary.push(exps.into_iter().map(|e| (p as u32, e)).map(|(p, e)| p.pow(e)).collect());
        }
        let len = elementary.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len)
            .map(|i| elementary.iter().map(|v| v.get(i).copied().unwrap_or(1) as u64).product())
            .collect();
        factors.reverse();
        FiniteAbelianGroup::new(factors)
    }

    /// Invariant factors of `G / D(G)`.
    pub fn abelianization(&self) -> Result<FiniteAbelianGroup> {
        self.abelian_quotient(&self.derived_subgroup())
    }

    /// Whether `|G|` is a power of a prime (the trivial group counts).
    pub fn prime_power_order(&self) -> Option<usize> {
        match prime_factors(self.order()).as_slice() {
            [] => Some(1),
            [p] => Some(*p),
            _ => None,
        }
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_valuation(mut n: usize, p: usize) -> u32 {
    let mut v = 0;
    while n % p == 0 && n > 0 {
        n /= p;
        v += 1;
    }
    v
}

type Perm = Vec<u8>;

fn perm_mul(a: &Perm, b: &Perm) -> Perm {
    // (a * b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn perm_group(name: &str, degree: usize, gens: &[Vec<u8>]) -> SmallGroup {
    let id: Perm = (0..degree as u8).collect();
    SmallGroup::from_generators(name, id, gens, perm_mul).expect("permutation groups satisfy the axioms")
}

/// `cycles` on `degree` points, each cycle a list of points.
fn cycles(degree: usize, cs: &[&[u8]]) -> Perm {
    let mut p: Perm = (0..degree as u8).collect();
    for c in cs {
        for (i, &x) in c.iter().enumerate() {
            p[x as usize] = c[(i + 1) % c.len()];
        }
    }
    p
}

/// Direct product of cyclic groups as permutations on disjoint blocks.
pub fn abelian(orders: &[usize]) -> SmallGroup {
    let degree: usize = orders.iter().sum();
    let mut gens = Vec::new();
    let mut start = 0u8;
    for &n in orders {
        let block: Vec<u8> = (start..start + n as u8).collect();
        gens.push(cycles(degree.max(1), &[&block]));
        start += n as u8;
    }
    let name = if orders.is_empty() {
        "C1".to_string()
    } else {
        orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x")
    };
    perm_group(&name, degree.max(1), &gens)
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> SmallGroup {
    let r: Perm = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    let s: Perm = (0..n).map(|i| ((n - i) % n) as u8).collect();
    let name = if n == 3 { "S3".to_string() } else { format!("D{n}") };
    perm_group(&name, n, &[r, s])
}

type Mat3 = [[u8; 3]; 3];

fn mat_mul_mod(a: &Mat3, b: &Mat3, m: u8, size: usize) -> Mat3 {
    let mut c = [[0u8; 3]; 3];
    for i in 0..size {
        for j in 0..size {
            c[i][j] = ((0..size).map(|k| a[i][k] as u32 * b[k][j] as u32).sum::<u32>() % m as u32) as u8;
        }
    }
    c
}

fn matrix_group(name: &str, size: usize, m: u8, gens: &[Mat3]) -> SmallGroup {
    let mut id = [[0u8; 3]; 3];
    for (i, row) in id.iter_mut().enumerate().take(size) {
        row[i] = 1;
    }
    SmallGroup::from_generators(name, id, gens, |a, b| mat_mul_mod(a, b, m, size)).expect("matrix groups satisfy the axioms")
}

/// Quaternion group as a subgroup of `SL_2(F_3)`.
pub fn quaternion() -> SmallGroup {
    matrix_group("Q8", 2, 3, &[[[0, 1, 0], [2, 0, 0], [0; 3]], [[1, 1, 0], [1, 2, 0], [0; 3]]])
}

/// Unitriangular 3x3 matrices over F_3 (exponent 3).
pub fn heisenberg27() -> SmallGroup {
    matrix_group("Heis27", 3, 3, &[[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 1], [0, 0, 1]]])
}

/// `C9 x| C3` acting on `Z/9` by `t -> 4t`, realised as affine maps of `Z/9`.
pub fn c9_semidirect_c3() -> SmallGroup {
    let shift: Perm = (0..9).map(|i| ((i + 1) % 9) as u8).collect();
    let scale: Perm = (0..9).map(|i| ((4 * i) % 9) as u8).collect();
    perm_group("C9:C3", 9, &[shift, scale])
}

/// Every group of order at most 11, one per isomorphism class.
pub fn groups_order_le_11() -> Vec<SmallGroup> {
    let mut out: Vec<SmallGroup> = (1..=11).map(|n| if n == 1 { abelian(&[]) } else { abelian(&[n]) }).collect();
    out.extend([
        abelian(&[2, 2]),
        dihedral(3),
        abelian(&[2, 4]),
        abelian(&[2, 2, 2]),
        dihedral(4),
        quaternion(),
        abelian(&[3, 3]),
        dihedral(5),
    ]);
    out.sort_by_key(|g| g.order());
    out
}

/// Every 3-group of order at most 27, one per isomorphism class.
pub fn three_groups_order_le_27() -> Vec<SmallGroup> {
    vec![
        abelian(&[3]),
        abelian(&[9]),
        abelian(&[3, 3]),
        abelian(&[27]),
        abelian(&[3, 9]),
        abelian(&[3, 3, 3]),
        heisenberg27(),
        c9_semidirect_c3(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders_and_names() {
        let small = groups_order_le_11();
        assert_eq!(small.len(), 19);
        let names: Vec<&str> = small.iter().map(|g| g.name()).collect();
        for n in ["C1", "C2", "C2xC2", "S3", "C2xC4", "C2xC2xC2", "D4", "Q8", "C3xC3", "D5", "C11"] {
            assert!(names.contains(&n), "{n} missing from {names:?}");
        }
        let orders: Vec<usize> = three_groups_order_le_27().iter().map(SmallGroup::order).collect();
        assert_eq!(orders, vec![3, 9, 9, 27, 27, 27, 27, 27]);
    }

    #[test]
    fn invariants_distinguish_the_nonabelian_groups() {
        assert!(!quaternion().is_abelian());
        assert_eq!(quaternion().elements().filter(|&g| quaternion().element_order(g) == 2).count(), 1);
        assert_eq!(dihedral(4).elements().filter(|&g| dihedral(4).element_order(g) == 2).count(), 5);
        let h = heisenberg27();
        assert!(h.elements().all(|g| 3 % h.element_order(g) == 0));
        let c = c9_semidirect_c3();
        assert!(!c.is_abelian());
        assert_eq!(c.elements().map(|g| c.element_order(g)).max(), Some(9));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelian(&[2, 4]).abelianization().unwrap().invariant_factors(), &[2, 4]);
        assert_eq!(abelian(&[3, 9]).abelianization().unwrap().invariant_factors(), &[3, 9]);
        assert_eq!(abelian(&[6]).abelianization().unwrap().invariant_factors(), &[6]);
        assert_eq!(dihedral(3).abelianization().unwrap().invariant_factors(), &[2]);
        assert_eq!(quaternion().abelianization().unwrap().invariant_factors(), &[2, 2]);
        assert_eq!(heisenberg27().abelianization().unwrap().invariant_factors(), &[3, 3]);
        assert!(abelian(&[]).abelianization().unwrap().is_trivial());
    }

    #[test]
    fn bad_tables_rejected() {
        // Z/3 with a broken entry.
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
        assert!(SmallGroup::from_table("bad", t).is_err());
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(SmallGroup::from_table("bad", t).is_err());
    }
}
