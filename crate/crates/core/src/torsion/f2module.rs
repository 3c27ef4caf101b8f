//! Finite-dimensional representations of small groups over F_2.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

use super::groups::{dihedral, SmallGroup};

/// Largest dimension handled by the exhaustive scans.
pub const MAX_DIM: usize = 8;
/// Largest dimension for which the full subspace lattice is enumerated.
pub const MAX_LATTICE_DIM: usize = 6;

/// Square matrix over F_2; bit `j` of `rows[i]` is the `(i, j)` entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    dim: usize,
    rows: Vec<u32>,
}

impl F2Matrix {
    pub fn identity(dim: usize) -> Self {
        F2Matrix { dim, rows: (0..dim).map(|i| 1 << i).collect() }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let dim = rows.len();
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), dim, "square matrix");
                r.iter().enumerate().fold(0u32, |acc, (j, &e)| acc | (u32::from(e & 1) << j))
            })
            .collect();
        F2Matrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i] >> j) & 1) as u8
    }

    /// Matrix-vector product with `v` as a bit vector.
    pub fn apply(&self, v: u32) -> u32 {
        self.rows.iter().enumerate().fold(0, |acc, (i, r)| acc | (((r & v).count_ones() & 1) << i))
    }

    pub fn mul(&self, o: &F2Matrix) -> F2Matrix {
        // Row i of AB is the XOR of the rows of B selected by row i of A.
        let rows = self
            .rows
            .iter()
            .map(|r| (0..self.dim).filter(|&k| r >> k & 1 == 1).fold(0, |acc, k| acc ^ o.rows[k]))
            .collect();
        F2Matrix { dim: self.dim, rows }
    }

    pub fn rank(&self) -> usize {
        rank_u64(self.rows.iter().map(|&r| u64::from(r)).collect())
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn direct_sum(&self, o: &F2Matrix) -> F2Matrix {
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().map(|r| r << self.dim));
        F2Matrix { dim: self.dim + o.dim, rows }
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            (0..self.dim).map(|i| (0..self.dim).map(|j| char::from(b'0' + self.entry(i, j))).collect()).collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

fn rank_u64(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// A representation of a [`SmallGroup`] on `F_2^dim`, given on generators
/// and extended to the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Module {
    group: SmallGroup,
    gens: Vec<usize>,
    action: Vec<F2Matrix>,
    dim: usize,
    rep: Vec<F2Matrix>,
}

impl F2Module {
    /// `gens` are element indices of `group` that generate it; `action`
    /// gives their matrices. Fails unless this extends to a homomorphism.
    pub fn new(group: SmallGroup, gens: Vec<usize>, action: Vec<F2Matrix>, dim: usize) -> Result<Self> {
        if gens.len() != action.len() {
            return Err(Error::Domain("one matrix per generator".into()));
        }
        if dim > MAX_DIM {
            return Err(Error::Unsupported(format!("dimension {dim} exceeds {MAX_DIM}")));
        }
        if action.iter().any(|m| m.dim() != dim || !m.is_invertible()) {
            return Err(Error::Domain(format!("generator matrices must be invertible of size {dim}")));
        }
        if group.generated(&gens).len() != group.order() {
            return Err(Error::Domain(format!("elements {gens:?} do not generate {}", group.name())));
        }
        let mut rep: Vec<Option<F2Matrix>> = vec![None; group.order()];
        rep[0] = Some(F2Matrix::identity(dim));
        let mut queue = vec![0];
        while let Some(a) = queue.pop() {
            let ma = rep[a].clone().expect("visited");
            for (g, mg) in gens.iter().zip(&action) {
                let b = group.mul(a, *g);
                let mb = ma.mul(mg);
                match &rep[b] {
                    None => {
                        rep[b] = Some(mb);
                        queue.push(b);
                    }
                    Some(m) if *m != mb => {
                        return Err(Error::Domain(format!("matrices violate the relations of {}", group.name())));
                    }
                    Some(_) => {}
                }
            }
        }
        let rep: Vec<F2Matrix> = rep.into_iter().map(|m| m.expect("generated")).collect();
        for a in group.elements() {
            for b in group.elements() {
                if rep[group.mul(a, b)] != rep[a].mul(&rep[b]) {
                    return Err(Error::Domain(format!("matrices violate the relations of {}", group.name())));
                }
            }
        }
        Ok(F2Module { group, gens, action, dim, rep })
    }

    /// The faithful 2-dimensional representation of `S3 = GL_2(F_2)`.
    pub fn standard_s3() -> Self {
        let g = dihedral(3);
        let gens = g.generators().to_vec();
        let r = F2Matrix::from_rows(&[&[0, 1], &[1, 1]]);
        let s = F2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        F2Module::new(g, gens, vec![r, s], 2).expect("standard S3 module")
    }

    pub fn trivial(group: SmallGroup, dim: usize) -> Result<Self> {
        let gens = group.generators().to_vec();
        let action = vec![F2Matrix::identity(dim); gens.len()];
        F2Module::new(group, gens, action, dim)
    }

    pub fn direct_sum(&self, o: &F2Module) -> Result<Self> {
        if self.group != o.group || self.gens != o.gens {
            return Err(Error::Domain("direct sum needs the same group and generators".into()));
        }
        let action = self.action.iter().zip(&o.action).map(|(a, b)| a.direct_sum(b)).collect();
        F2Module::new(self.group.clone(), self.gens.clone(), action, self.dim + o.dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &SmallGroup {
        &self.group
    }

    pub fn action(&self) -> &[F2Matrix] {
        &self.action
    }

    /// Matrix of an arbitrary group element.
    pub fn matrix(&self, g: usize) -> &F2Matrix {
        &self.rep[g]
    }

    /// Bitset (over `0..2^dim`) of the submodule generated by `seed` and
    /// the subspace `base`.
    fn closure(&self, base: u64, seed: u32) -> u64 {
        let mut set = base;
        let mut pending: Vec<u32> = self.rep.iter().map(|m| m.apply(seed)).collect();
        while let Some(v) = pending.pop() {
            if set >> v & 1 == 1 {
                continue;
            }
            set = add_vector(set, v);
            pending.extend(self.action.iter().map(|m| m.apply(v)));
        }
        set
    }

    fn cyclic_rank(&self, v: u32) -> usize {
        let rows: Vec<u64> = self.rep.iter().map(|m| u64::from(m.apply(v))).collect();
        rank_u64(rows)
    }
}

/// Adds `v` to a subspace stored as a bitset of its members.
fn add_vector(set: u64, v: u32) -> u64 {
    let mut out = set;
    let mut rest = set;
    while rest != 0 {
        let u = rest.trailing_zeros();
        rest &= rest - 1;
        out |= 1 << (u ^ v);
    }
    out
}

fn set_dim(set: u64) -> usize {
    set.count_ones().trailing_zeros() as usize
}

/// No proper nonzero invariant subspace: every nonzero vector generates
/// the whole module.
pub fn module_is_irreducible(m: &F2Module) -> bool {
    m.dim > 0 && (1..1u32 << m.dim).all(|v| m.cyclic_rank(v) == m.dim)
}

/// `dim Hom_G(a, b)`: solutions of `X A_g = B_g X` for the generators.
pub fn hom_dim(a: &F2Module, b: &F2Module) -> Result<usize> {
    if a.group != b.group || a.gens != b.gens {
        return Err(Error::Domain("modules over different groups".into()));
    }
    let (da, db) = (a.dim, b.dim);
    if da * db > 64 {
        return Err(Error::Unsupported("Hom space too large".into()));
    }
    let var = |i: usize, k: usize| 1u64 << (i * da + k);
    let mut eqs = Vec::new();
    for (ma, mb) in a.action.iter().zip(&b.action) {
        for i in 0..db {
            for j in 0..da {
                let mut row = 0u64;
                for k in 0..da {
                    if ma.entry(k, j) == 1 {
                        row ^= var(i, k);
                    }
                }
                for k in 0..db {
                    if mb.entry(i, k) == 1 {
                        row ^= var(k, j);
                    }
                }
                eqs.push(row);
            }
        }
    }
    Ok(da * db - rank_u64(eqs))
}

/// Dimension of the commutant of the action.
pub fn module_end_dim(m: &F2Module) -> usize {
    hom_dim(m, m).expect("dimension at most 8")
}

/// All invariant subspaces, their cover relations, a composition series
/// and the Jordan-Hoelder check.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    dim: usize,
    /// Bitsets of members, sorted by dimension.
    subspaces: Vec<u64>,
    /// `(t, s)` with `subspaces[t]` maximal in `subspaces[s]`.
    covers: Vec<(usize, usize)>,
    /// Class ids of the simple factor of each cover.
    cover_factor: Vec<usize>,
    /// Dimension of each simple class.
    class_dims: Vec<usize>,
    composition_series: Vec<usize>,
    factor_multisets: BTreeSet<Vec<usize>>,
}

impl SubmoduleLattice {
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(|&s| set_dim(s)).collect()
    }

    /// Number of invariant subspaces other than `0` and `M`.
    pub fn proper_nonzero(&self) -> usize {
        self.subspaces.iter().filter(|&&s| s != 1 && set_dim(s) != self.dim).count()
    }

    /// Member vectors of the `i`-th subspace.
    pub fn members(&self, i: usize) -> Vec<u32> {
        (0..64).filter(|v| self.subspaces[i] >> v & 1 == 1).collect()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Indices of `0 = M_0 < M_1 < ... < M_r = M`.
    pub fn composition_series(&self) -> &[usize] {
        &self.composition_series
    }

    /// Dimensions of the simple factors along the composition series.
    pub fn composition_factor_dims(&self) -> Vec<usize> {
        self.composition_series
            .windows(2)
            .map(|w| {
                let c = self.covers.iter().position(|&p| p == (w[0], w[1])).expect("cover");
                self.class_dims[self.cover_factor[c]]
            })
            .collect()
    }

    /// Whether every maximal chain has the same multiset of simple factors.
    pub fn jordan_holder_unique(&self) -> bool {
        self.factor_multisets.len() == 1
    }

    /// Number of pairwise non-isomorphic simple factors seen.
    pub fn simple_classes(&self) -> usize {
        self.class_dims.len()
    }
}

/// The quotient `S/T` as a module, for invariant `T < S`.
fn quotient_module(m: &F2Module, t: u64, s: u64) -> F2Module {
    let mut reps = Vec::new();
    let mut span = t;
    for v in 0..64u32 {
        if s >> v & 1 == 1 && span >> v & 1 == 0 {
            reps.push(v);
            span = add_vector(span, v);
        }
    }
    let k = reps.len();
    let mut coords: BTreeMap<u32, u32> = BTreeMap::new();
    for c in 0..1u32 << k {
        let base = (0..k).filter(|&i| c >> i & 1 == 1).fold(0, |acc, i| acc ^ reps[i]);
        for u in (0..64u32).filter(|u| t >> u & 1 == 1) {
            coords.insert(base ^ u, c);
        }
    }
    let action = m
        .action
        .iter()
        .map(|g| {
            let cols: Vec<u32> = reps.iter().map(|&v| coords[&g.apply(v)]).collect();
            let rows = (0..k).map(|i| (0..k).fold(0u32, |acc, j| acc | ((cols[j] >> i & 1) << j))).collect();
            F2Matrix { dim: k, rows }
        })
        .collect();
    F2Module::new(m.group.clone(), m.gens.clone(), action, k).expect("quotient of a module")
}

pub fn submodule_lattice(m: &F2Module) -> Result<SubmoduleLattice> {
    if m.dim > MAX_LATTICE_DIM {
        return Err(Error::Unsupported(format!("lattice enumeration needs dimension <= {MAX_LATTICE_DIM}")));
    }
    let n = 1u32 << m.dim;
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let invariant = |s: u64| (0..n).filter(|v| s >> v & 1 == 1).all(|v| m.action.iter().all(|g| s >> g.apply(v) & 1 == 1));

    let mut seen: HashSet<u64> = HashSet::from([1]);
    let mut frontier = vec![1u64];
    while let Some(s) = frontier.pop() {
        for v in 0..n {
            if s >> v & 1 == 0 {
                let t = add_vector(s, v);
                if seen.insert(t) {
                    frontier.push(t);
                }
            }
        }
    }
    let mut subspaces: Vec<u64> = seen.into_iter().filter(|&s| invariant(s)).collect();
    subspaces.sort_by_key(|&s| (s.count_ones(), s));
    let index: BTreeMap<u64, usize> = subspaces.iter().enumerate().map(|(i, &s)| (s, i)).collect();

    // Covers of T are the minimal members of {closure(T, v) : v not in T}.
    let mut covers = Vec::new();
    for (ti, &t) in subspaces.iter().enumerate() {
        let cands: BTreeSet<u64> = (0..n).filter(|v| t >> v & 1 == 0).map(|v| m.closure(t, v)).collect();
        for &c in &cands {
            if !cands.iter().any(|&d| d != c && d & c == d) {
                covers.push((ti, index[&c]));
            }
        }
    }

    let mut classes: Vec<F2Module> = Vec::new();
    let mut cover_factor = Vec::new();
    for &(t, s) in &covers {
        let q = quotient_module(m, subspaces[t], subspaces[s]);
        let id = match classes.iter().position(|c| c.dim == q.dim && hom_dim(c, &q).map(|d| d > 0).unwrap_or(false)) {
            Some(i) => i,
            None => {
                classes.push(q);
                classes.len() - 1
            }
        };
        cover_factor.push(id);
    }

    let mut multisets: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); subspaces.len()];
    multisets[0].insert(Vec::new());
    let mut order: Vec<usize> = (0..covers.len()).collect();
    order.sort_by_key(|&c| covers[c].1);
    for c in order {
        let (t, s) = covers[c];
        let extended: Vec<Vec<usize>> = multisets[t]
            .iter()
            .map(|ms| {
                let mut v = ms.clone();
                v.push(cover_factor[c]);
                v.sort_unstable();
                v
            })
            .collect();
        multisets[s].extend(extended);
    }

    let top = index[&full];
    let mut series = vec![0];
    while *series.last().unwrap() != top {
        let cur = *series.last().unwrap();
        let next = covers.iter().find(|&&(t, _)| t == cur).map(|&(_, s)| s).expect("a cover above every proper submodule");
        series.push(next);
    }

    Ok(SubmoduleLattice {
        dim: m.dim,
        factor_multisets: multisets[top].clone(),
        subspaces,
        covers,
        cover_factor,
        class_dims: classes.iter().map(|c| c.dim).collect(),
        composition_series: series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_module_basics() {
        let m = F2Module::standard_s3();
        assert!(module_is_irreducible(&m));
        assert_eq!(module_end_dim(&m), 1);
        let l = submodule_lattice(&m).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.dims(), vec![0, 2]);
    }

    #[test]
    fn bad_action_rejected() {
        let g = dihedral(3);
        let gens = g.generators().to_vec();
        // r of order 2 violates r^3 = 1.
        let r = F2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert!(F2Module::new(g, gens, vec![r.clone(), r], 2).is_err());
    }

    #[test]
    fn matrix_ops() {
        let a = F2Matrix::from_rows(&[&[0, 1], &[1, 1]]);
        assert_eq!(a.mul(&a).mul(&a), F2Matrix::identity(2));
        assert_eq!(a.apply(0b01), 0b10);
        assert_eq!(F2Matrix::from_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
    }
}
