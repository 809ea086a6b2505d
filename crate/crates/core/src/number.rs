//! Bicomplex and hyperbolic scalars.
//!
//! A bicomplex number is `Z = z + jw` with `z, w` in `C(i)`, where `i` and `j`
//! commute and square to `-1`. Writing `e1 = (1 + ij)/2` and `e2 = (1 - ij)/2`,
//! every `Z` has the unique idempotent form `Z = e1*z1 + e2*z2` with
//! `z1 = z - iw` and `z2 = z + iw`; arithmetic is componentwise in that form.
//! The Cartesian pair `(z, w)` is the stored representation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[inline]
pub(crate) fn imag_unit<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

#[inline]
pub(crate) fn complex_is_finite<T: Scalar>(c: Complex<T>) -> bool {
    c.re.is_finite() && c.im.is_finite()
}

/// Tolerances used wherever the exact-field notion "is zero" has to be decided
/// in floating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig<T> {
    /// Zero-divisor / invertibility cutoff on idempotent component modulus,
    /// scaled by `max(1, |Z|)`.
    pub zero: T,
    /// Eigenvalue matching and numerical rank cutoff, scaled by the operator norm.
    pub eig: T,
    /// Slack for hyperbolic norm comparisons.
    pub norm: T,
}

impl<T: Scalar> ToleranceConfig<T> {
    pub fn new(zero: T, eig: T, norm: T) -> Result<Self> {
        for (value, name) in [(zero, "zero"), (eig, "eig"), (norm, "norm")] {
            if value <= T::zero() || !value.is_finite() {
                return Err(Error::InvalidTolerance(name));
            }
        }
        Ok(Self { zero, eig, norm })
    }
}

impl<T: Scalar> Default for ToleranceConfig<T> {
    fn default() -> Self {
        Self {
            zero: T::of(T::DEFAULT_TOL_ZERO),
            eig: T::of(T::DEFAULT_TOL_EIG),
            norm: T::of(T::DEFAULT_TOL_NORM),
        }
    }
}

/// The three conjugations of `BC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjugation {
    /// `z̄ + j w̄`
    Dagger1,
    /// `z - j w`
    Dagger2,
    /// `z̄ - j w̄`
    Dagger3,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [Self::Dagger1, Self::Dagger2, Self::Dagger3];
}

/// One of the two idempotents `e1`, `e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    E1,
    E2,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::E1 => Side::E2,
            Side::E2 => Side::E1,
        }
    }
}

/// Exactly one of these holds for every bicomplex number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Zero,
    ZeroDivisor,
    Invertible,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Bicomplex<T> {
    z: Complex<T>,
    w: Complex<T>,
}

impl<T: Scalar> Bicomplex<T> {
    /// `z + jw`; rejects non-finite coordinates.
    pub fn new(z: Complex<T>, w: Complex<T>) -> Result<Self> {
        if complex_is_finite(z) && complex_is_finite(w) {
            Ok(Self { z, w })
        } else {
            Err(Error::NonFinite("bicomplex"))
        }
    }

    /// `a + b i + c j + d k` with `k = ij`.
    pub fn from_parts(a: T, b: T, c: T, d: T) -> Result<Self> {
        Self::new(Complex::new(a, b), Complex::new(c, d))
    }

    /// `e1 z1 + e2 z2`.
    pub fn from_idempotent(z1: Complex<T>, z2: Complex<T>) -> Result<Self> {
        if complex_is_finite(z1) && complex_is_finite(z2) {
            Ok(Self::recompose(z1, z2))
        } else {
            Err(Error::NonFinite("bicomplex"))
        }
    }

    pub fn from_complex(z: Complex<T>) -> Result<Self> {
        Self::new(z, Complex::zero())
    }

    pub fn from_real(x: T) -> Result<Self> {
        Self::from_complex(Complex::new(x, T::zero()))
    }

    // z = (z1 + z2)/2, w = i(z1 - z2)/2
    pub(crate) fn recompose(z1: Complex<T>, z2: Complex<T>) -> Self {
        let h = T::half();
        Self {
            z: (z1 + z2).scale(h),
            w: (imag_unit::<T>() * (z1 - z2)).scale(h),
        }
    }

    pub(crate) fn raw(z: Complex<T>, w: Complex<T>) -> Self {
        Self { z, w }
    }

    pub fn zero() -> Self {
        Self::raw(Complex::zero(), Complex::zero())
    }

    pub fn one() -> Self {
        Self::raw(Complex::one(), Complex::zero())
    }

    /// Exact zero test; see [`Bicomplex::classify`] for the toleranced one.
    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.w.is_zero()
    }

    pub fn i() -> Self {
        Self::raw(imag_unit(), Complex::zero())
    }

    pub fn j() -> Self {
        Self::raw(Complex::zero(), Complex::one())
    }

    pub fn k() -> Self {
        Self::raw(Complex::zero(), imag_unit())
    }

    /// `(1 + ij)/2`
    pub fn e1() -> Self {
        Self::recompose(Complex::one(), Complex::zero())
    }

    /// `(1 - ij)/2`
    pub fn e2() -> Self {
        Self::recompose(Complex::zero(), Complex::one())
    }

    /// `e_side * c`.
    pub fn on_side(side: Side, c: Complex<T>) -> Self {
        match side {
            Side::E1 => Self::e1_times(c),
            Side::E2 => Self::e2_times(c),
        }
    }

    /// Idempotent component on `side`.
    pub fn component(&self, side: Side) -> Complex<T> {
        match side {
            Side::E1 => self.z1(),
            Side::E2 => self.z2(),
        }
    }

    /// `e1 * c` for complex `c`.
    pub fn e1_times(c: Complex<T>) -> Self {
        Self::recompose(c, Complex::zero())
    }

    /// `e2 * c` for complex `c`.
    pub fn e2_times(c: Complex<T>) -> Self {
        Self::recompose(Complex::zero(), c)
    }

    #[inline]
    pub fn z(&self) -> Complex<T> {
        self.z
    }

    #[inline]
    pub fn w(&self) -> Complex<T> {
        self.w
    }

    /// Real coefficients `[a, b, c, d]` on the basis `{1, i, j, k}`.
    pub fn parts(&self) -> [T; 4] {
        [self.z.re, self.z.im, self.w.re, self.w.im]
    }

    #[inline]
    pub fn z1(&self) -> Complex<T> {
        self.z - imag_unit::<T>() * self.w
    }

    #[inline]
    pub fn z2(&self) -> Complex<T> {
        self.z + imag_unit::<T>() * self.w
    }

    /// Idempotent components `(z1, z2)`.
    pub fn idempotent(&self) -> (Complex<T>, Complex<T>) {
        (self.z1(), self.z2())
    }

    /// Euclidean modulus of the four real coordinates.
    pub fn abs(&self) -> T {
        (self.z.norm_sqr() + self.w.norm_sqr()).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        complex_is_finite(self.z) && complex_is_finite(self.w)
    }

    pub fn conj(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Dagger1 => Self::raw(self.z.conj(), self.w.conj()),
            Conjugation::Dagger2 => Self::raw(self.z, -self.w),
            Conjugation::Dagger3 => Self::raw(self.z.conj(), -self.w.conj()),
        }
    }

    /// Which of the idempotent components count as zero under `tol`.
    fn vanishing(&self, tol: T) -> (bool, bool) {
        let cutoff = tol * T::one().max(self.abs());
        let (z1, z2) = self.idempotent();
        (z1.norm() <= cutoff, z2.norm() <= cutoff)
    }

    pub fn classify(&self, tol: T) -> Classification {
        match self.vanishing(tol) {
            (true, true) => Classification::Zero,
            (false, false) => Classification::Invertible,
            _ => Classification::ZeroDivisor,
        }
    }

    pub fn is_zero_within(&self, tol: T) -> bool {
        self.classify(tol) == Classification::Zero
    }

    pub fn is_invertible(&self, tol: T) -> bool {
        self.classify(tol) == Classification::Invertible
    }

    /// Nonzero with exactly one vanishing idempotent component.
    pub fn is_zero_divisor(&self, tol: T) -> bool {
        self.classify(tol) == Classification::ZeroDivisor
    }

    /// `e1/z1 + e2/z2`.
    pub fn inverse(&self, tol: T) -> Result<Self> {
        match self.classify(tol) {
            Classification::Invertible => {
                let (z1, z2) = self.idempotent();
                Ok(Self::recompose(z1.inv(), z2.inv()))
            }
            Classification::ZeroDivisor => Err(Error::NotInvertible { zero_divisor: true }),
            Classification::Zero => Err(Error::NotInvertible { zero_divisor: false }),
        }
    }

    /// Hyperbolic modulus `e1|z1| + e2|z2|`.
    pub fn norm_d(&self) -> Hyperbolic<T> {
        let (z1, z2) = self.idempotent();
        Hyperbolic::recompose(z1.norm(), z2.norm())
    }

    /// Product computed in idempotent coordinates.
    pub fn mul_idempotent(&self, other: &Self) -> Self {
        Self::recompose(self.z1() * other.z1(), self.z2() * other.z2())
    }

    /// Largest absolute deviation over the four real coordinates.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let a = self.parts();
        let b = other.parts();
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (*x - *y).abs())
            .fold(T::zero(), T::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (*self - *other).abs() <= tol * T::one().max(self.abs()).max(other.abs())
    }

    /// Basis-form text `a+bi+cj+dk`, parseable back exactly.
    pub fn to_basis_string(&self) -> String {
        let [a, b, c, d] = self.parts();
        format!("{}{}i{}j{}k", a + T::zero(), signed(b), signed(c), signed(d))
    }

    /// Idempotent-form text `[z1; z2]`.
    pub fn to_idempotent_string(&self) -> String {
        let (z1, z2) = self.idempotent();
        format!("[{}; {}]", complex_to_string(z1), complex_to_string(z2))
    }
}

fn signed<T: Scalar>(x: T) -> String {
    if x < T::zero() {
        format!("-{}", x.abs())
    } else {
        format!("+{}", x + T::zero())
    }
}

/// `a+bi`
pub fn complex_to_string<T: Scalar>(c: Complex<T>) -> String {
    format!("{}{}i", c.re + T::zero(), signed(c.im))
}

impl<T: Scalar> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_basis_string())
    }
}

impl<T: Scalar> Add for Bicomplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::raw(self.z + rhs.z, self.w + rhs.w)
    }
}

impl<T: Scalar> Sub for Bicomplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::raw(self.z - rhs.z, self.w - rhs.w)
    }
}

impl<T: Scalar> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.z, -self.w)
    }
}

/// `(z + jw)(u + jv) = (zu - wv) + j(wu + zv)`
impl<T: Scalar> Mul for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::raw(
            self.z * rhs.z - self.w * rhs.w,
            self.w * rhs.z + self.z * rhs.w,
        )
    }
}

impl<T: Scalar> Mul<Complex<T>> for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        Self::raw(self.z * rhs, self.w * rhs)
    }
}

impl<T: Scalar> Mul<T> for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::raw(self.z.scale(rhs), self.w.scale(rhs))
    }
}

impl<T: Scalar> AddAssign for Bicomplex<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> SubAssign for Bicomplex<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Scalar> MulAssign for Bicomplex<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<T: Scalar> Zero for Bicomplex<T> {
    fn zero() -> Self {
        Bicomplex::zero()
    }
    fn is_zero(&self) -> bool {
        Bicomplex::is_zero(self)
    }
}

impl<T: Scalar> One for Bicomplex<T> {
    fn one() -> Self {
        Bicomplex::one()
    }
}

impl<T: Scalar> std::iter::Sum for Bicomplex<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[derive(Serialize, Deserialize)]
struct BicomplexRepr<T> {
    z: [T; 2],
    w: [T; 2],
}

impl<T: Scalar + Serialize> Serialize for Bicomplex<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BicomplexRepr {
            z: [self.z.re, self.z.im],
            w: [self.w.re, self.w.im],
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for Bicomplex<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = BicomplexRepr::<T>::deserialize(deserializer)?;
        Bicomplex::new(Complex::new(r.z[0], r.z[1]), Complex::new(r.w[0], r.w[1]))
            .map_err(D::Error::custom)
    }
}

/// Hyperbolic number `x + ky`, `k² = 1`, with idempotent components
/// `a1 = x + y`, `a2 = x - y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Hyperbolic<T> {
    x: T,
    y: T,
}

impl<T: Scalar> Hyperbolic<T> {
    pub fn zero() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn new(x: T, y: T) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite("hyperbolic"))
        }
    }

    /// `e1 a1 + e2 a2`.
    pub fn from_idempotent(a1: T, a2: T) -> Result<Self> {
        if a1.is_finite() && a2.is_finite() {
            Ok(Self::recompose(a1, a2))
        } else {
            Err(Error::NonFinite("hyperbolic"))
        }
    }

    pub(crate) fn recompose(a1: T, a2: T) -> Self {
        let h = T::half();
        Self {
            x: (a1 + a2) * h,
            y: (a1 - a2) * h,
        }
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn a1(&self) -> T {
        self.x + self.y
    }

    pub fn a2(&self) -> T {
        self.x - self.y
    }

    pub fn idempotent(&self) -> (T, T) {
        (self.a1(), self.a2())
    }

    /// Non-negative cone `D+`: both idempotent components `>= 0`.
    pub fn in_d_plus(&self) -> bool {
        self.a1() >= T::zero() && self.a2() >= T::zero()
    }

    /// `self ≤′ other`, i.e. `other - self ∈ D+`.
    pub fn leq_prime(&self, other: &Self) -> bool {
        self.a1() <= other.a1() && self.a2() <= other.a2()
    }

    /// `≤′` with an absolute slack on each component.
    pub fn leq_prime_tol(&self, other: &Self, tol: T) -> bool {
        self.a1() <= other.a1() + tol && self.a2() <= other.a2() + tol
    }

    /// Partial comparison under `≤′`; `None` for incomparable pairs.
    pub fn partial_cmp_prime(&self, other: &Self) -> Option<Ordering> {
        match (self.leq_prime(other), other.leq_prime(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// The embedding `x + ky ↦ x + j(iy)` into `BC`.
    pub fn to_bicomplex(&self) -> Bicomplex<T> {
        Bicomplex::raw(
            Complex::new(self.x, T::zero()),
            Complex::new(T::zero(), self.y),
        )
    }
}

impl<T: Scalar> fmt::Display for Hyperbolic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}k", self.x, signed(self.y))
    }
}

impl<T: Scalar> Add for Hyperbolic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl<T: Scalar> Sub for Hyperbolic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

/// `(x + ky)(u + kv) = (xu + yv) + k(xv + yu)`
impl<T: Scalar> Mul for Hyperbolic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            x: self.x * rhs.x + self.y * rhs.y,
            y: self.x * rhs.y + self.y * rhs.x,
        }
    }
}

impl<T: Scalar> Zero for Hyperbolic<T> {
    fn zero() -> Self {
        Hyperbolic::zero()
    }
    fn is_zero(&self) -> bool {
        Hyperbolic::is_zero(self)
    }
}
