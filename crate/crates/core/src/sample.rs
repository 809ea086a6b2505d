//! Random draws used by the sampling checks and the property drivers.
//!
//! All draws go through a caller-supplied [`Rng`] so a fixed seed reproduces
//! every randomized check.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{BcMatrix, BcVector, CMatrix};
use crate::number::Bicomplex;
use crate::scalar::Scalar;

/// Uniform real in `[-1, 1)`.
pub fn real<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    T::of(rng.random_range(-1.0..1.0))
}

pub fn complex<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    Complex::new(real(rng), real(rng))
}

/// Complex number with modulus in `[min_modulus, 1]`.
pub fn nonzero_complex<T: Scalar, R: Rng + ?Sized>(rng: &mut R, min_modulus: f64) -> Complex<T> {
    let r = rng.random_range(min_modulus..=1.0);
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Complex::new(T::of(r * theta.cos()), T::of(r * theta.sin()))
}

/// Each real coordinate uniform in `[-1, 1)`.
pub fn bicomplex<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Bicomplex<T> {
    Bicomplex::raw(complex(rng), complex(rng))
}

/// `e1 z1 + e2 z2` with both components of modulus at least `min_modulus`.
pub fn invertible<T: Scalar, R: Rng + ?Sized>(rng: &mut R, min_modulus: f64) -> Bicomplex<T> {
    Bicomplex::recompose(nonzero_complex(rng, min_modulus), nonzero_complex(rng, min_modulus))
}

/// A nonzero multiple of `e1` or `e2`, chosen at random.
pub fn zero_divisor<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> Bicomplex<T> {
    let c = nonzero_complex(rng, 0.1);
    if rng.random_bool(0.5) {
        Bicomplex::e1_times(c)
    } else {
        Bicomplex::e2_times(c)
    }
}

pub fn complex_matrix<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix<T> {
    CMatrix::from_fn(n, n, |_, _| complex(rng))
}

pub fn bc_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> BcVector<T> {
    BcVector::new((0..n).map(|_| bicomplex(rng)).collect())
}

pub fn bc_matrix<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> BcMatrix<T> {
    BcMatrix::from_fn(n, |_, _| bicomplex(rng))
}

/// Uniformly distributed on the unit sphere of `C^n`.
pub fn unit_complex_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<f64>> = (0..n)
            .map(|_| Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v
                .into_iter()
                .map(|c| Complex::new(T::of(c.re / norm), T::of(c.im / norm)))
                .collect();
        }
    }
}

/// Hyperbolic-unit vector: both idempotent component vectors have norm 1.
pub fn unit_bc_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R, n: usize) -> BcVector<T> {
    let x1 = unit_complex_vector(rng, n);
    let x2 = unit_complex_vector(rng, n);
    BcVector::from_components(&x1, &x2)
}
