//! The odd unimodular Lorentzian lattice Z^{n,1}.
//!
//! Vectors carry integer coordinates against the basis `e_0, ..., e_n` with
//! `(e_0, e_0) = -1` and `(e_i, e_j) = δ_ij` otherwise. Everything here is exact
//! machine-integer arithmetic.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if (MIN_DIM..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n, "2..=8"))
    }
}

/// Integer vector in Z^{n,1}; `coords[0]` is the `e_0` coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LatticeVector {
    coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_dim(coords.len().saturating_sub(1))?;
        Ok(Self { coords })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![0; n + 1])
    }

    /// The basis vector `e_i` of Z^{n,1}.
    pub fn basis(n: usize, i: usize) -> Result<Self> {
        let mut v = Self::zero(n)?;
        if i > n {
            return Err(Error::DimensionOutOfRange(i, "basis index 0..=n"));
        }
        v.coords[i] = 1;
        Ok(v)
    }

    /// `c_0 e_0 - e_{i_1} - ... - e_{i_k}`, the shape of every non-trivial root
    /// and chamber vertex used in this crate.
    pub fn cone_vector(n: usize, c0: i64, minus: &[usize]) -> Result<Self> {
        let mut v = Self::zero(n)?;
        v.coords[0] = c0;
        for &i in minus {
            if i == 0 || i > n {
                return Err(Error::DimensionOutOfRange(i, "basis index 1..=n"));
            }
            v.coords[i] -= 1;
        }
        Ok(v)
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    /// The dimension parameter `n` (the vector has `n + 1` coordinates).
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn norm(&self) -> i64 {
        inner(self, self).expect("a vector has the dimension of itself")
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_coords_unchecked(self.coords.iter().map(|&c| c * k).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.n(), other.n(), "mixed-dimension lattice arithmetic");
        Self::from_coords_unchecked(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> LatticeVector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> LatticeVector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        self.scale(-1)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if wrote {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}e{i}")?;
            } else {
                write!(f, "{sign}{mag}e{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Lorentzian form `-u_0 v_0 + Σ_{i≥1} u_i v_i`.
pub fn inner(u: &LatticeVector, v: &LatticeVector) -> Result<i64> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let spatial: i64 = u.coords[1..]
        .iter()
        .zip(&v.coords[1..])
        .map(|(a, b)| a * b)
        .sum();
    Ok(spatial - u.coords[0] * v.coords[0])
}

/// A lattice vector of norm 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    vector: LatticeVector,
    norm: i64,
}

impl Root {
    pub fn new(vector: LatticeVector) -> Result<Self> {
        match vector.norm() {
            norm @ (1 | 2) => Ok(Self { vector, norm }),
            other => Err(Error::NotARoot(other)),
        }
    }

    pub fn vector(&self) -> &LatticeVector {
        &self.vector
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn n(&self) -> usize {
        self.vector.n()
    }

    pub fn is_short(&self) -> bool {
        self.norm == 1
    }
}

impl TryFrom<LatticeVector> for Root {
    type Error = Error;
    fn try_from(v: LatticeVector) -> Result<Self> {
        Root::new(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.vector.fmt(f)
    }
}

/// `s_α(λ) = λ - 2(λ,α)/(α,α) · α`.
///
/// The coefficient is integral for both root norms: for norm 1 it is `2(λ,α)`,
/// and a norm-2 root of Z^{n,1} has `(λ,α) ∈ Z` so the ratio is `(λ,α)`.
pub fn reflect(root: &Root, v: &LatticeVector) -> Result<LatticeVector> {
    let ip = inner(v, root.vector())?;
    let coeff = 2 * ip / root.norm();
    debug_assert_eq!(coeff * root.norm(), 2 * ip);
    Ok(v - &root.vector().scale(coeff))
}

/// The `n + 1` simple roots `α_0, ..., α_n` of the reflection group O⁺(Z^{n,1}).
///
/// `α_0 = e_0 - e_1 - e_2 - e_3` for `n ≥ 3` and the norm-one vector
/// `e_0 - e_1 - e_2` for `n = 2`; `α_i = e_i - e_{i+1}` and `α_n = e_n`.
pub fn simple_roots(n: usize) -> Result<Vec<Root>> {
    check_dim(n)?;
    let alpha0 = if n == 2 {
        LatticeVector::cone_vector(n, 1, &[1, 2])?
    } else {
        LatticeVector::cone_vector(n, 1, &[1, 2, 3])?
    };
    let mut roots = vec![Root::new(alpha0)?];
    for i in 1..n {
        let mut v = LatticeVector::basis(n, i)?;
        v.coords[i + 1] = -1;
        roots.push(Root::new(v)?);
    }
    roots.push(Root::new(LatticeVector::basis(n, n)?)?);
    Ok(roots)
}

/// Vertices `v_0, ..., v_n` of the fundamental chamber, antidual to the simple roots.
pub fn chamber_vertices(n: usize) -> Result<Vec<LatticeVector>> {
    check_dim(n)?;
    let mut out = Vec::with_capacity(n + 1);
    out.push(LatticeVector::basis(n, 0)?);
    out.push(LatticeVector::cone_vector(n, 1, &[1])?);
    out.push(LatticeVector::cone_vector(n, 2, &[1, 2])?);
    for j in 3..=n {
        let minus: Vec<usize> = (1..=j).collect();
        out.push(LatticeVector::cone_vector(n, 3, &minus)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> LatticeVector {
        LatticeVector::basis(n, i).unwrap()
    }

    fn cone(n: usize, c0: i64, minus: &[usize]) -> LatticeVector {
        LatticeVector::cone_vector(n, c0, minus).unwrap()
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(&e(4, 0), &e(4, 0)).unwrap(), -1);
        assert_eq!(inner(&e(4, 1), &e(4, 2)).unwrap(), 0);
        let a = cone(4, 1, &[1, 2, 3]);
        assert_eq!(inner(&a, &a).unwrap(), 2);
    }

    #[test]
    fn inner_rejects_mixed_dimensions() {
        assert_eq!(
            inner(&e(3, 0), &e(4, 0)),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn reflect_examples() {
        let r4 = Root::new(e(4, 4)).unwrap();
        assert_eq!(reflect(&r4, &e(4, 4)).unwrap(), -&e(4, 4));

        let r12 = Root::new(&e(4, 1) - &e(4, 2)).unwrap();
        assert_eq!(reflect(&r12, &e(4, 1)).unwrap(), e(4, 2));

        let b = Root::new(cone(4, 1, &[1, 2])).unwrap();
        let image = reflect(&b, &e(4, 0)).unwrap();
        assert_eq!(image, cone(4, 3, &[1, 1, 2, 2]));
        assert_eq!(image.norm(), -1);
    }

    #[test]
    fn non_roots_are_rejected() {
        assert_eq!(Root::new(e(3, 0)), Err(Error::NotARoot(-1)));
        assert_eq!(Root::new(cone(3, 0, &[1, 2, 3])), Err(Error::NotARoot(3)));
    }

    #[test]
    fn simple_roots_examples() {
        let roots = simple_roots(4).unwrap();
        let expected = [
            cone(4, 1, &[1, 2, 3]),
            &e(4, 1) - &e(4, 2),
            &e(4, 2) - &e(4, 3),
            &e(4, 3) - &e(4, 4),
            e(4, 4),
        ];
        let got: Vec<_> = roots.iter().map(|r| r.vector().clone()).collect();
        assert_eq!(got, expected);
        let norms: Vec<_> = roots.iter().map(Root::norm).collect();
        assert_eq!(norms, [2, 2, 2, 2, 1]);

        let roots2 = simple_roots(2).unwrap();
        let got: Vec<_> = roots2.iter().map(|r| r.vector().clone()).collect();
        assert_eq!(got, [cone(2, 1, &[1, 2]), &e(2, 1) - &e(2, 2), e(2, 2)]);
    }

    #[test]
    fn dimension_range_is_enforced() {
        assert!(simple_roots(1).is_err());
        assert!(simple_roots(9).is_err());
        assert!(chamber_vertices(9).is_err());
    }

    #[test]
    fn chamber_vertices_examples() {
        let v = chamber_vertices(4).unwrap();
        assert_eq!(v[4], cone(4, 3, &[1, 2, 3, 4]));
        assert_eq!(v[1].norm(), 0);
        let roots = simple_roots(4).unwrap();
        assert!(inner(&v[0], roots[0].vector()).unwrap() < 0);
        for r in &roots[1..] {
            assert_eq!(inner(&v[0], r.vector()).unwrap(), 0);
        }
    }

    #[test]
    fn chamber_is_antidual_for_all_n() {
        for n in MIN_DIM..=MAX_DIM {
            let roots = simple_roots(n).unwrap();
            let verts = chamber_vertices(n).unwrap();
            for (i, v) in verts.iter().enumerate() {
                for (j, a) in roots.iter().enumerate() {
                    let ip = inner(v, a.vector()).unwrap();
                    if i == j {
                        assert!(ip < 0, "n={n} (v{i}, α{j}) = {ip}");
                    } else {
                        assert_eq!(ip, 0, "n={n} (v{i}, α{j})");
                    }
                }
            }
            let ideal: Vec<_> = verts.iter().filter(|v| v.norm() == 0).collect();
            assert_eq!(ideal, [&verts[1]], "n={n}");
            assert!(verts.iter().all(|v| v.norm() <= 0));
        }
    }

    #[test]
    fn display() {
        assert_eq!(cone(4, 3, &[1, 2]).to_string(), "3e0-e1-e2");
        assert_eq!(LatticeVector::zero(3).unwrap().to_string(), "0");
    }
}
