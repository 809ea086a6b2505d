//! Finite-dimensional `BC`-modules: vectors in `BC^n` and `n×n` operators,
//! together with their idempotent decompositions `x = e1 x1 + e2 x2` and
//! `T = e1 T1 + e2 T2`.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cmatrix::{vector_norm, CMatrix};
use super::svd::spectral_norm;
use crate::error::{Error, Result};
use crate::number::{Bicomplex, Hyperbolic};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct BcVector<T> {
    entries: Vec<Bicomplex<T>>,
}

impl<T: Scalar> BcVector<T> {
    pub fn new(entries: Vec<Bicomplex<T>>) -> Self {
        Self { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![Bicomplex::zero(); n])
    }

    /// `e1 x1 + e2 x2`; panics if the component lengths differ.
    pub fn from_components(x1: &[Complex<T>], x2: &[Complex<T>]) -> Self {
        assert_eq!(x1.len(), x2.len(), "component vectors must have equal length");
        Self::new(
            x1.iter()
                .zip(x2)
                .map(|(a, b)| Bicomplex::recompose(*a, *b))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Bicomplex<T>] {
        &self.entries
    }

    pub fn x1(&self) -> Vec<Complex<T>> {
        self.entries.iter().map(Bicomplex::z1).collect()
    }

    pub fn x2(&self) -> Vec<Complex<T>> {
        self.entries.iter().map(Bicomplex::z2).collect()
    }

    pub fn components(&self) -> (Vec<Complex<T>>, Vec<Complex<T>>) {
        (self.x1(), self.x2())
    }

    /// `e1 ‖x1‖ + e2 ‖x2‖` with Euclidean component norms.
    pub fn norm_d(&self) -> Hyperbolic<T> {
        Hyperbolic::recompose(vector_norm(&self.x1()), vector_norm(&self.x2()))
    }

    /// Both component norms equal one, within `tol`.
    pub fn is_hyperbolic_unit(&self, tol: T) -> bool {
        let (a1, a2) = self.norm_d().idempotent();
        (a1 - T::one()).abs() <= tol && (a2 - T::one()).abs() <= tol
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Bicomplex::is_zero)
    }

    /// Scalar multiple `λx`.
    pub fn scale(&self, lambda: Bicomplex<T>) -> Self {
        Self::new(self.entries.iter().map(|x| lambda * *x).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(T::zero(), T::max)
    }

    /// Euclidean norm of all real coordinates.
    pub fn abs(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |s, x| s + x.abs() * x.abs())
            .sqrt()
    }
}

/// Square matrix over `BC`, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct BcMatrix<T> {
    n: usize,
    entries: Vec<Bicomplex<T>>,
}

impl<T: Scalar> BcMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Bicomplex<T>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Bicomplex<T>>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { Bicomplex::one() } else { Bicomplex::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Bicomplex::zero())
    }

    pub fn diagonal(diag: &[Bicomplex<T>]) -> Self {
        Self::from_fn(diag.len(), |r, c| if r == c { diag[r] } else { Bicomplex::zero() })
    }

    /// `e1 A + e2 B`.
    pub fn from_components(a: &CMatrix<T>, b: &CMatrix<T>) -> Result<Self> {
        let n = a.require_square()?;
        if b.rows() != n || b.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.rows(),
            });
        }
        Ok(Self::from_fn(n, |r, c| Bicomplex::recompose(a[(r, c)], b[(r, c)])))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Bicomplex<T> {
        self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<Bicomplex<T>>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    /// Entrywise idempotent coordinates `(T1, T2)`.
    pub fn decompose(&self) -> (CMatrix<T>, CMatrix<T>) {
        let t1 = CMatrix::from_fn(self.n, self.n, |r, c| self.get(r, c).z1());
        let t2 = CMatrix::from_fn(self.n, self.n, |r, c| self.get(r, c).z2());
        (t1, t2)
    }

    /// `Tx` in Cartesian arithmetic.
    pub fn apply(&self, x: &BcVector<T>) -> Result<BcVector<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(BcVector::new(
            (0..self.n)
                .map(|r| {
                    x.entries()
                        .iter()
                        .enumerate()
                        .map(|(c, xc)| self.get(r, c) * *xc)
                        .sum()
                })
                .collect(),
        ))
    }

    /// `Tx = e1 T1 x1 + e2 T2 x2` computed on the components.
    pub fn apply_componentwise(&self, x: &BcVector<T>) -> Result<BcVector<T>> {
        let (t1, t2) = self.decompose();
        let (x1, x2) = x.components();
        Ok(BcVector::from_components(&t1.mul_vec(&x1)?, &t2.mul_vec(&x2)?))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self::from_fn(self.n, |r, c| {
            (0..self.n).map(|k| self.get(r, k) * other.get(k, c)).sum()
        }))
    }

    /// `T - λI`.
    pub fn shifted(&self, lambda: Bicomplex<T>) -> Self {
        Self::from_fn(self.n, |r, c| {
            if r == c {
                self.get(r, c) - lambda
            } else {
                self.get(r, c)
            }
        })
    }

    /// Hyperbolic operator norm `e1 ‖T1‖ + e2 ‖T2‖` with spectral component norms.
    pub fn operator_norm_d(&self) -> Hyperbolic<T> {
        let (t1, t2) = self.decompose();
        Hyperbolic::recompose(spectral_norm(&t1), spectral_norm(&t2))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(T::zero(), T::max)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
struct MatrixRepr<T> {
    n: usize,
    entries: Vec<Vec<Bicomplex<T>>>,
}

impl<T: Scalar + Serialize> Serialize for BcMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n,
            entries: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for BcMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::<T>::deserialize(deserializer)?;
        if repr.entries.len() != repr.n {
            return Err(D::Error::custom(format!(
                "matrix declares n = {} but has {} rows",
                repr.n,
                repr.entries.len()
            )));
        }
        BcMatrix::from_rows(repr.entries).map_err(D::Error::custom)
    }
}
