//! Bicomplex numbers `BC`, hyperbolic numbers `D`, ideals of the ring `BC`
//! and of finite-dimensional bicomplex algebras, and spectra of
//! bicomplex-linear operators.
//!
//! Every numeric type is generic over a real [`Scalar`] (`f32` or `f64`); the
//! aliases at the crate root fix `f64`.

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod number;
pub mod report;
pub mod ring;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use number::{Bicomplex, Classification, Conjugation, Hyperbolic, Side, ToleranceConfig};
pub use report::{Check, Report};
pub use scalar::Scalar;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Bicomplex64 = Bicomplex<f64>;
pub type Bicomplex32 = Bicomplex<f32>;
pub type Hyperbolic64 = Hyperbolic<f64>;
pub type Hyperbolic32 = Hyperbolic<f32>;
pub type BcMatrix64 = linalg::BcMatrix<f64>;
pub type BcVector64 = linalg::BcVector<f64>;
pub type SpectrumSet64 = linalg::SpectrumSet<f64>;
pub type Tolerances64 = ToleranceConfig<f64>;
