//! Bicomplex linear algebra in finite dimension.

mod cmatrix;
mod eigen;
mod module;
mod spectrum;
mod svd;

pub use cmatrix::{vector_norm, CMatrix};
pub use eigen::{eigenvalues, EigenOptions};
pub use module::{BcMatrix, BcVector};
pub use spectrum::{
    approx_eig_witness, approx_point_spectrum, invariance_residual, invariant_subspace_check,
    invariant_subspace_demo, invariant_subspace_residual, kernel_bc, point_spectrum, sampled_operator_norm,
    sigma_p_not_in_ap_demo, tolerance_scale, ApproxEigWitness, PointNotApWitness, SpectralConfig,
    SpectrumKind, SpectrumSet,
};
pub use svd::{spectral_norm, Svd};
