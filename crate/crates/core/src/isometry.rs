//! Integer isometries of Z^{n,1}, their reductions mod 2 and mod 3, and
//! exhaustive closure of finite matrix groups.

use std::fmt;
use std::hash::BuildHasher;

use hashbrown::HashTable;
use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, LatticeVector, Root};

/// Default element budget for exhaustive closures.
pub const DEFAULT_CLOSURE_BUDGET: usize = 10_000_000;

/// `(n+1)×(n+1)` integer matrix, row-major; column `j` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeIsometry {
    dim: usize,
    entries: Vec<i64>,
}

impl LatticeIsometry {
    /// Wraps a row-major matrix; fails unless it preserves the form and the
    /// forward cone.
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        lattice::check_dim(n)?;
        let dim = n + 1;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        let m = Self { dim, entries };
        if !m.preserves_form() || !m.is_forward() {
            return Err(Error::NotAnIsometry);
        }
        Ok(m)
    }

    pub(crate) fn from_raw(dim: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }

    pub fn identity(n: usize) -> Self {
        let dim = n + 1;
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self { dim, entries }
    }

    pub fn n(&self) -> usize {
        self.dim - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "mixed-dimension matrix product");
        let d = self.dim;
        let mut out = vec![0i64; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * rhs.entries[k * d + j];
                }
            }
        }
        Self::from_raw(d, out)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                out[j * d + i] = self.entries[i * d + j];
            }
        }
        Self::from_raw(d, out)
    }

    /// Inverse of a form-preserving matrix: `J Mᵀ J`.
    pub fn isometry_inverse(&self) -> Self {
        let mut t = self.transpose();
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                if (i == 0) != (j == 0) {
                    t.entries[i * d + j] = -t.entries[i * d + j];
                }
            }
        }
        t
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        if v.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: v.n(),
            });
        }
        let d = self.dim;
        let coords = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.entries[i * d + j] * v.coords()[j])
                    .sum()
            })
            .collect();
        Ok(LatticeVector::from_coords_unchecked(coords))
    }

    /// `MᵀJM = J`.
    pub fn preserves_form(&self) -> bool {
        let d = self.dim;
        let sign = |k: usize| if k == 0 { -1 } else { 1 };
        (0..d).all(|i| {
            (0..d).all(|j| {
                let g: i64 = (0..d)
                    .map(|k| sign(k) * self.entries[k * d + i] * self.entries[k * d + j])
                    .sum();
                g == if i == j { sign(i) } else { 0 }
            })
        })
    }

    /// Maps the cone component containing `e_0` to itself.
    pub fn is_forward(&self) -> bool {
        self.entry(0, 0) >= 1
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i64 {
        let d = self.dim;
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..d {
            if a[k * d + k] == 0 {
                let Some(p) = (k + 1..d).find(|&r| a[r * d + k] != 0) else {
                    return 0;
                };
                for j in 0..d {
                    a.swap(k * d + j, p * d + j);
                }
                sign = -sign;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    a[i * d + j] =
                        (a[i * d + j] * a[k * d + k] - a[i * d + k] * a[k * d + j]) / prev;
                }
            }
            prev = a[k * d + k];
        }
        (sign * a[d * d - 1]) as i64
    }

    /// Nonzero entries as `(row, col, value)`, used for fast left multiplication.
    fn sparse(&self) -> Vec<(usize, usize, i64)> {
        let d = self.dim;
        (0..d * d)
            .filter(|&k| self.entries[k] != 0)
            .map(|k| (k / d, k % d, self.entries[k]))
            .collect()
    }
}

impl fmt::Display for LatticeIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix of the reflection `s_α` acting on Z^{n,1}.
pub fn reflection_matrix(root: &Root) -> LatticeIsometry {
    let n = root.n();
    let d = n + 1;
    let mut entries = vec![0; d * d];
    for j in 0..d {
        let image = lattice::reflect(root, &LatticeVector::basis(n, j).expect("n is valid"))
            .expect("dimensions agree");
        for (i, &c) in image.coords().iter().enumerate() {
            entries[i * d + j] = c;
        }
    }
    LatticeIsometry::from_raw(d, entries)
}

/// Reflections in the simple roots `α_0..α_n`.
pub fn simple_reflections(n: usize) -> Result<Vec<LatticeIsometry>> {
    Ok(lattice::simple_roots(n)?
        .iter()
        .map(reflection_matrix)
        .collect())
}

/// Generators of the face stabilizer Γ₀: the reflections in the norm-2 simple roots.
pub fn face_stabilizer_generators(n: usize) -> Result<Vec<LatticeIsometry>> {
    Ok(lattice::simple_roots(n)?
        .iter()
        .filter(|r| r.norm() == 2)
        .map(reflection_matrix)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Modulus {
    Two,
    Three,
}

impl Modulus {
    pub fn value(self) -> u8 {
        match self {
            Modulus::Two => 2,
            Modulus::Three => 3,
        }
    }
}

/// Square matrix with entries in Z/m, m ∈ {2, 3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularMatrix {
    modulus: Modulus,
    dim: usize,
    entries: Vec<u8>,
}

impl ModularMatrix {
    pub fn identity(dim: usize, modulus: Modulus) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self {
            modulus,
            dim,
            entries,
        }
    }

    pub fn from_entries(dim: usize, modulus: Modulus, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), dim * dim);
        let m = modulus.value() as i64;
        Self {
            modulus,
            dim,
            entries: entries.iter().map(|&x| x.rem_euclid(m) as u8).collect(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.modulus)
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus.value();
        Self {
            entries: self.entries.iter().map(|&x| (m - x) % m).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "mixed-size matrix product");
        assert_eq!(self.modulus, rhs.modulus, "mixed-modulus matrix product");
        let d = self.dim;
        let m = self.modulus.value() as u32;
        let mut out = vec![0u8; d * d];
        for i in 0..d {
            for j in 0..d {
                let s: u32 = (0..d)
                    .map(|k| self.entries[i * d + k] as u32 * rhs.entries[k * d + j] as u32)
                    .sum();
                out[i * d + j] = (s % m) as u8;
            }
        }
        Self {
            modulus: self.modulus,
            dim: d,
            entries: out,
        }
    }

    /// Canonical representative of the class `{M, -M}`.
    pub fn projective_normal(&self) -> Self {
        let neg = self.neg();
        if neg.entries < self.entries {
            neg
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for ModularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Entrywise residue.
pub fn reduce_mod(m: &LatticeIsometry, modulus: Modulus) -> ModularMatrix {
    ModularMatrix::from_entries(m.dim(), modulus, m.entries())
}

/// Either the linear group generated by some matrices, or its image modulo ±I.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Projectivity {
    Linear,
    Projective,
}

/// All elements of a finite matrix group over Z/m, in breadth-first order.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    elements: IndexSet<ModularMatrix>,
    generators: Vec<ModularMatrix>,
    kind: Projectivity,
}

impl GroupClosure {
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &ModularMatrix> {
        self.elements.iter()
    }

    pub fn element(&self, index: usize) -> &ModularMatrix {
        &self.elements[index]
    }

    pub fn index_of(&self, m: &ModularMatrix) -> Option<usize> {
        self.elements.get_index_of(&self.canonical(m))
    }

    pub fn contains(&self, m: &ModularMatrix) -> bool {
        self.index_of(m).is_some()
    }

    pub fn generators(&self) -> &[ModularMatrix] {
        &self.generators
    }

    pub fn kind(&self) -> Projectivity {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn modulus(&self) -> Modulus {
        self.generators[0].modulus()
    }

    /// Brings `m` into the representation used as set key.
    pub fn canonical(&self, m: &ModularMatrix) -> ModularMatrix {
        match self.kind {
            Projectivity::Linear => m.clone(),
            Projectivity::Projective => m.projective_normal(),
        }
    }

    pub fn mul(&self, a: &ModularMatrix, b: &ModularMatrix) -> ModularMatrix {
        self.canonical(&a.mul(b))
    }

    pub fn contains_minus_identity(&self) -> bool {
        match self.kind {
            Projectivity::Linear => self
                .elements
                .contains(&ModularMatrix::identity(self.dim(), self.modulus()).neg()),
            Projectivity::Projective => false,
        }
    }
}

fn closure_impl(gens: &[ModularMatrix], kind: Projectivity, budget: usize) -> Result<GroupClosure> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    if gens
        .iter()
        .any(|g| g.dim() != first.dim() || g.modulus() != first.modulus())
    {
        return Err(Error::IncompatibleGenerators);
    }
    let canon = |m: ModularMatrix| match kind {
        Projectivity::Linear => m,
        Projectivity::Projective => m.projective_normal(),
    };
    let generators: Vec<_> = gens.iter().cloned().map(canon).collect();
    let mut elements = IndexSet::new();
    elements.insert(canon(ModularMatrix::identity(first.dim(), first.modulus())));
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in &generators {
            let product = canon(elements[cursor].mul(g));
            if elements.insert(product) && elements.len() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        cursor += 1;
    }
    Ok(GroupClosure {
        elements,
        generators,
        kind,
    })
}

/// Breadth-first multiplicative closure of `gens`.
pub fn closure(gens: &[ModularMatrix]) -> Result<GroupClosure> {
    closure_with_budget(gens, DEFAULT_CLOSURE_BUDGET)
}

pub fn closure_with_budget(gens: &[ModularMatrix], budget: usize) -> Result<GroupClosure> {
    closure_impl(gens, Projectivity::Linear, budget)
}

/// Closure of the images of `gens` in the projective group (matrices modulo ±I).
pub fn projective_closure(gens: &[ModularMatrix], budget: usize) -> Result<GroupClosure> {
    closure_impl(gens, Projectivity::Projective, budget)
}

/// Order of `G / (G ∩ {±I})`.
pub fn projective_order(g: &GroupClosure) -> usize {
    if g.contains_minus_identity() && g.modulus() != Modulus::Two {
        g.order() / 2
    } else {
        g.order()
    }
}

/// Mod-3 reductions of the simple reflections: generators of Γ/Γ(3).
pub fn mod3_generators(n: usize) -> Result<Vec<ModularMatrix>> {
    Ok(simple_reflections(n)?
        .iter()
        .map(|m| reduce_mod(m, Modulus::Three))
        .collect())
}

/// A finite group of integer isometries, stored compactly.
///
/// Elements live in one flat `i8` arena in breadth-first order; a hash table of
/// arena indices provides membership.
pub struct FiniteMatrixGroup {
    dim: usize,
    arena: Vec<i8>,
    index: HashTable<u32>,
    hasher: std::collections::hash_map::RandomState,
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.arena.len() / (self.dim * self.dim)
    }

    pub fn n(&self) -> usize {
        self.dim - 1
    }

    pub fn raw(&self, index: usize) -> &[i8] {
        let sq = self.dim * self.dim;
        &self.arena[index * sq..(index + 1) * sq]
    }

    pub fn element(&self, index: usize) -> LatticeIsometry {
        LatticeIsometry::from_raw(
            self.dim,
            self.raw(index).iter().map(|&x| x as i64).collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticeIsometry> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn raw_iter(&self) -> impl Iterator<Item = &[i8]> {
        self.arena.chunks_exact(self.dim * self.dim)
    }

    pub fn contains(&self, m: &LatticeIsometry) -> bool {
        if m.dim() != self.dim {
            return false;
        }
        let Ok(key) = m
            .entries()
            .iter()
            .map(|&x| i8::try_from(x))
            .collect::<std::result::Result<Vec<i8>, _>>()
        else {
            return false;
        };
        self.find(&key).is_some()
    }

    fn find(&self, key: &[i8]) -> Option<u32> {
        let h = self.hasher.hash_one(key);
        self.index
            .find(h, |&i| self.raw(i as usize) == key)
            .copied()
    }

    fn insert(&mut self, key: &[i8]) -> bool {
        let h = self.hasher.hash_one(key);
        let sq = self.dim * self.dim;
        let arena = &self.arena;
        if self
            .index
            .find(h, |&i| {
                &arena[i as usize * sq..(i as usize + 1) * sq] == key
            })
            .is_some()
        {
            return false;
        }
        let id = self.order() as u32;
        self.arena.extend_from_slice(key);
        let hasher = &self.hasher;
        let arena = &self.arena;
        self.index.insert_unique(h, id, |&i| {
            hasher.hash_one(&arena[i as usize * sq..(i as usize + 1) * sq])
        });
        true
    }
}

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn finite_group_elements(gens: &[LatticeIsometry], budget: usize) -> Result<FiniteMatrixGroup> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let dim = first.dim();
    if gens.iter().any(|g| g.dim() != dim) {
        return Err(Error::IncompatibleGenerators);
    }
    let sparse: Vec<_> = gens.iter().map(LatticeIsometry::sparse).collect();
    let mut group = FiniteMatrixGroup {
        dim,
        arena: Vec::new(),
        index: HashTable::new(),
        hasher: Default::default(),
    };
    let identity: Vec<i8> = LatticeIsometry::identity(dim - 1)
        .entries()
        .iter()
        .map(|&x| x as i8)
        .collect();
    group.insert(&identity);

    let sq = dim * dim;
    let mut acc = vec![0i64; sq];
    let mut key = vec![0i8; sq];
    let mut cursor = 0;
    while cursor < group.order() {
        for g in &sparse {
            acc.iter_mut().for_each(|x| *x = 0);
            {
                let current = group.raw(cursor);
                for &(r, k, v) in g {
                    for j in 0..dim {
                        acc[r * dim + j] += v * current[k * dim + j] as i64;
                    }
                }
            }
            for (dst, &src) in key.iter_mut().zip(&acc) {
                *dst = i8::try_from(src).map_err(|_| Error::EntryOverflow(src))?;
            }
            if group.insert(&key) && group.order() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        cursor += 1;
    }
    Ok(group)
}

fn is_identity_mod(raw: &[i8], dim: usize, m: i64) -> bool {
    raw.iter().enumerate().all(|(k, &x)| {
        let target = if k / dim == k % dim { 1 } else { 0 };
        (x as i64 - target).rem_euclid(m) == 0
    })
}

/// Result of checking that Γ₀ meets Γ(2) and Γ(3) trivially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerCongruenceReport {
    pub n: usize,
    pub order: usize,
    /// Elements of Γ₀ that are ≡ I mod 2, identity included.
    pub kernel_mod2: usize,
    /// Elements of Γ₀ that are ≡ I mod 3, identity included.
    pub kernel_mod3: usize,
}

impl StabilizerCongruenceReport {
    pub fn passes(&self) -> bool {
        self.kernel_mod2 == 1 && self.kernel_mod3 == 1
    }
}

/// Enumerates Γ₀ and counts its elements congruent to the identity mod 2 and mod 3.
pub fn stabilizer_congruence_check(n: usize, budget: usize) -> Result<StabilizerCongruenceReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::DimensionOutOfRange(n, "2..=7"));
    }
    let group = finite_group_elements(&face_stabilizer_generators(n)?, budget)?;
    let dim = n + 1;
    let (mut k2, mut k3) = (0, 0);
    for raw in group.raw_iter() {
        k2 += is_identity_mod(raw, dim, 2) as usize;
        k3 += is_identity_mod(raw, dim, 3) as usize;
    }
    Ok(StabilizerCongruenceReport {
        n,
        order: group.order(),
        kernel_mod2: k2,
        kernel_mod3: k3,
    })
}

/// Left cosets `gH` of a subgroup inside a [`GroupClosure`].
#[derive(Debug, Clone)]
pub struct CosetSpace {
    /// Coset index of every element of the ambient group, by element index.
    coset_of: Vec<u32>,
    /// Element index of the chosen representative of each coset.
    representatives: Vec<usize>,
    subgroup: GroupClosure,
}

impl CosetSpace {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn coset_of_index(&self, element: usize) -> usize {
        self.coset_of[element] as usize
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn subgroup(&self) -> &GroupClosure {
        &self.subgroup
    }
}

/// Partitions `group` into left cosets of the subgroup generated by `subgroup_gens`.
pub fn coset_space(group: &GroupClosure, subgroup_gens: &[ModularMatrix]) -> Result<CosetSpace> {
    let subgroup = closure_impl(subgroup_gens, group.kind(), group.order())?;
    if subgroup.elements().any(|h| !group.contains(h)) {
        return Err(Error::NotASubgroup);
    }
    const UNASSIGNED: u32 = u32::MAX;
    let mut coset_of = vec![UNASSIGNED; group.order()];
    let mut representatives = Vec::new();
    for g in 0..group.order() {
        if coset_of[g] != UNASSIGNED {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(g);
        let rep = group.element(g);
        for h in subgroup.elements() {
            let idx = group.index_of(&rep.mul(h)).ok_or(Error::NotASubgroup)?;
            debug_assert!(coset_of[idx] == UNASSIGNED || coset_of[idx] == id);
            coset_of[idx] = id;
        }
    }
    Ok(CosetSpace {
        coset_of,
        representatives,
        subgroup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeVector;

    fn root(v: LatticeVector) -> Root {
        Root::new(v).unwrap()
    }

    #[test]
    fn reflection_matrix_examples() {
        let s4 = reflection_matrix(&root(LatticeVector::basis(4, 4).unwrap()));
        let mut expected = LatticeIsometry::identity(4);
        expected.entries[24] = -1;
        assert_eq!(s4, expected);
        for r in lattice::simple_roots(4).unwrap() {
            let m = reflection_matrix(&r);
            assert!(m.mul(&m).is_identity());
            assert_eq!(m.determinant(), -1);
            assert!(m.preserves_form() && m.is_forward());
        }
    }

    #[test]
    fn reflection_matrix_agrees_with_reflect() {
        let r = root(LatticeVector::cone_vector(5, 1, &[1, 3, 4]).unwrap());
        let m = reflection_matrix(&r);
        let v = LatticeVector::new(vec![3, -1, 4, 1, -5, 9]).unwrap();
        assert_eq!(m.apply(&v).unwrap(), lattice::reflect(&r, &v).unwrap());
    }

    #[test]
    fn determinant_and_inverse() {
        let gens = simple_reflections(4).unwrap();
        let w = gens[0].mul(&gens[3]).mul(&gens[4]).mul(&gens[1]);
        assert_eq!(w.determinant(), 1);
        assert!(w.mul(&w.isometry_inverse()).is_identity());
        assert_eq!(LatticeIsometry::identity(3).determinant(), 1);
    }

    #[test]
    fn isometry_constructor_validates() {
        let ok = LatticeIsometry::new(2, vec![1, 0, 0, 0, 0, 1, 0, 1, 0]);
        assert!(ok.is_ok());
        assert!(LatticeIsometry::new(2, vec![-1, 0, 0, 0, 1, 0, 0, 0, 1]).is_err());
        assert!(LatticeIsometry::new(2, vec![1, 1, 0, 0, 1, 0, 0, 0, 1]).is_err());
    }

    #[test]
    fn reduce_mod_examples() {
        let s4 = reflection_matrix(&root(LatticeVector::basis(4, 4).unwrap()));
        assert!(reduce_mod(&s4, Modulus::Two).is_identity());
        assert!(reduce_mod(&LatticeIsometry::identity(4), Modulus::Three).is_identity());
        let e1 = LatticeVector::basis(4, 1).unwrap();
        let e2 = LatticeVector::basis(4, 2).unwrap();
        let swap = reduce_mod(&reflection_matrix(&root(&e1 - &e2)), Modulus::Two);
        assert!(!swap.is_identity());
        assert_eq!(swap.entries()[5 + 2], 1);
        assert_eq!(swap.entries()[2 * 5 + 1], 1);
        assert_eq!(swap.entries()[5 + 1], 0);
    }

    #[test]
    fn short_roots_vanish_mod_two() {
        for n in 2..=7 {
            for r in lattice::simple_roots(n).unwrap() {
                let m2 = reduce_mod(&reflection_matrix(&r), Modulus::Two);
                assert_eq!(m2.is_identity(), r.norm() == 1, "n={n} root {r}");
            }
        }
    }

    #[test]
    fn projective_order_of_plus_minus_identity() {
        let minus = ModularMatrix::identity(3, Modulus::Three).neg();
        let g = closure(&[minus]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(projective_order(&g), 1);
    }

    #[test]
    fn closure_budget_is_enforced() {
        let gens = mod3_generators(3).unwrap();
        assert_eq!(
            closure_with_budget(&gens, 100).unwrap_err(),
            Error::BudgetExceeded(100)
        );
    }

    #[test]
    fn closure_rejects_mixed_generators() {
        let a = ModularMatrix::identity(3, Modulus::Three);
        let b = ModularMatrix::identity(3, Modulus::Two);
        assert_eq!(closure(&[a, b]).unwrap_err(), Error::IncompatibleGenerators);
        assert_eq!(closure(&[]).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn small_projective_images() {
        let g2 = closure(&mod3_generators(2).unwrap()).unwrap();
        assert_eq!(projective_order(&g2), 24);
        let g3 = closure(&mod3_generators(3).unwrap()).unwrap();
        assert_eq!(projective_order(&g3), 720);
        let p3 = projective_closure(&mod3_generators(3).unwrap(), 10_000).unwrap();
        assert_eq!(p3.order(), 720);
    }

    #[test]
    fn face_stabilizer_orders() {
        let orders: Vec<_> = (2..=4)
            .map(|n| {
                finite_group_elements(&face_stabilizer_generators(n).unwrap(), 1000)
                    .unwrap()
                    .order()
            })
            .collect();
        assert_eq!(orders, [2, 12, 120]);
    }

    #[test]
    fn finite_group_membership() {
        let gens = face_stabilizer_generators(4).unwrap();
        let g = finite_group_elements(&gens, 1000).unwrap();
        assert!(g.contains(&gens[0].mul(&gens[2])));
        assert!(!g.contains(&simple_reflections(4).unwrap()[4]));
        assert!(g.iter().all(|m| m.preserves_form() && m.is_forward()));
    }

    #[test]
    fn finite_group_budget() {
        // the full reflection group is infinite
        let err = finite_group_elements(&simple_reflections(3).unwrap(), 500);
        assert!(matches!(
            err,
            Err(Error::BudgetExceeded(500)) | Err(Error::EntryOverflow(_))
        ));
    }

    #[test]
    fn stabilizer_check_small() {
        let r = stabilizer_congruence_check(3, 1000).unwrap();
        assert_eq!(r.order, 12);
        assert!(r.passes());
        assert!(stabilizer_congruence_check(8, 10).is_err());
    }

    #[test]
    fn coset_space_rejects_foreign_subgroup() {
        let g = closure(&mod3_generators(2).unwrap()[..2]).unwrap();
        let outside = mod3_generators(2).unwrap()[2].clone();
        assert!(!g.contains(&outside));
        assert_eq!(
            coset_space(&g, &[outside]).unwrap_err(),
            Error::NotASubgroup
        );
    }
}
