//! Eisenstein integers `a + bω` (with `ω² + ω + 1 = 0`) and the hexaflection
//! `h_e(l) = l - (ω² + 1)⟨l, e⟩e` on the lattice `E ⊗ Z^{3,1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInteger {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInteger {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Complex conjugate: `ω̄ = ω² = -1 - ω`.
    pub fn conj(self) -> Self {
        Self::new(self.a - self.b, -self.b)
    }

    /// `|a + bω|² = a² - ab + b²`.
    pub fn abs_sq(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn is_real(self) -> bool {
        self.b == 0
    }
}

impl From<i64> for EisensteinInteger {
    fn from(a: i64) -> Self {
        Self::new(a, 0)
    }
}

impl Add for EisensteinInteger {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for EisensteinInteger {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for EisensteinInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInteger {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        eis_mul(self, rhs)
    }
}

impl fmt::Display for EisensteinInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a}-{}ω", -b),
            (a, b) => write!(f, "{a}+{b}ω"),
        }
    }
}

/// `(a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω`.
pub fn eis_mul(x: EisensteinInteger, y: EisensteinInteger) -> EisensteinInteger {
    let bd = x.b * y.b;
    EisensteinInteger::new(x.a * y.a - bd, x.a * y.b + x.b * y.a - bd)
}

/// A vector in `E ⊗ Z^{3,1}` with form `diag(-1, 1, 1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EisensteinVector(pub [EisensteinInteger; 4]);

impl EisensteinVector {
    pub fn from_pairs(pairs: [(i64, i64); 4]) -> Self {
        Self(pairs.map(|(a, b)| EisensteinInteger::new(a, b)))
    }

    pub fn scale(&self, k: EisensteinInteger) -> Self {
        Self(self.0.map(|c| k * c))
    }

    pub fn norm(&self) -> i64 {
        let n = hermitian(self, self);
        debug_assert!(n.is_real());
        n.a
    }
}

impl Add for EisensteinVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for EisensteinVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

/// `⟨u, v⟩ = -u_0 v̄_0 + Σ_{i=1..3} u_i v̄_i`, linear in `u`.
pub fn hermitian(u: &EisensteinVector, v: &EisensteinVector) -> EisensteinInteger {
    let mut acc = -(u.0[0] * v.0[0].conj());
    for i in 1..4 {
        acc = acc + u.0[i] * v.0[i].conj();
    }
    acc
}

/// `ω² + 1 = -ω`.
const OMEGA_SQ_PLUS_ONE: EisensteinInteger = EisensteinInteger::new(0, -1);

/// The order-six complex reflection in a norm-one vector `e`.
pub fn hexaflection(e: &EisensteinVector, l: &EisensteinVector) -> Result<EisensteinVector> {
    let norm = e.norm();
    if norm != 1 {
        return Err(Error::NotNormOne(norm));
    }
    let coeff = OMEGA_SQ_PLUS_ONE * hermitian(l, e);
    Ok(*l - e.scale(coeff))
}

/// `h_e` applied `k` times.
pub fn hexaflection_power(
    e: &EisensteinVector,
    l: &EisensteinVector,
    k: usize,
) -> Result<EisensteinVector> {
    let mut out = *l;
    for _ in 0..k {
        out = hexaflection(e, &out)?;
    }
    Ok(out)
}

/// Smallest `k ≥ 1` with `h_e^k` fixing every vector of `probe`, up to `limit`.
pub fn hexaflection_order_on(
    e: &EisensteinVector,
    probe: &[EisensteinVector],
    step: usize,
    limit: usize,
) -> Result<Option<usize>> {
    let mut images = probe.to_vec();
    for k in 1..=limit {
        for v in images.iter_mut() {
            *v = hexaflection_power(e, v, step)?;
        }
        if images == probe {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Standard basis of `E^{3,1}`, a spanning set for order checks.
pub fn standard_basis() -> [EisensteinVector; 4] {
    std::array::from_fn(|i| {
        let mut v = [EisensteinInteger::ZERO; 4];
        v[i] = EisensteinInteger::ONE;
        EisensteinVector(v)
    })
}
