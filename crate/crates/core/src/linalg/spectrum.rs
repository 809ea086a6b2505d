//! Point and approximate point spectra of bicomplex operators.
//!
//! Both are computed from the eigenvalues of the component operators `T1`,
//! `T2`. A point-spectrum query `λ = e1 λ1 + e2 λ2` succeeds when *either*
//! coordinate is a component eigenvalue; an approximate-point query needs
//! *both*. Point spectra are therefore unbounded slabs and are stored only
//! through their finite generator sets.

use num_complex::Complex;
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use super::cmatrix::{vector_norm, CMatrix};
use super::eigen::{eigenvalues, EigenOptions};
use super::module::{BcMatrix, BcVector};
use super::svd::Svd;
use crate::error::{Error, Result};
use crate::number::{Bicomplex, Hyperbolic, Side, ToleranceConfig};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConfig<T> {
    pub tol: ToleranceConfig<T>,
    pub eigen: EigenOptions,
}

impl<T: Scalar> Default for SpectralConfig<T> {
    fn default() -> Self {
        Self {
            tol: ToleranceConfig::default(),
            eigen: EigenOptions::default(),
        }
    }
}

/// Multiplier turning the relative tolerance `τ_eig` into an absolute one.
/// Falls back to 1 for the zero operator.
pub fn tolerance_scale<T: Scalar>(operator_norm: T) -> T {
    if operator_norm > T::zero() {
        operator_norm
    } else {
        T::one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectrumKind {
    /// `(e1 S1 + e2 C) ∪ (e1 C + e2 S2)`
    #[serde(rename = "point")]
    Point,
    /// `e1 S1 + e2 S2`
    #[serde(rename = "ap")]
    Ap,
}

/// Symbolic subset of `BC` generated by two finite sets of complex numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSet<T> {
    pub kind: SpectrumKind,
    pub s1: Vec<Complex<T>>,
    pub s2: Vec<Complex<T>>,
    /// Absolute matching scale per component (norm of the component operator).
    pub scale: [T; 2],
}

impl<T: Scalar> SpectrumSet<T> {
    pub fn new(kind: SpectrumKind, mut s1: Vec<Complex<T>>, mut s2: Vec<Complex<T>>) -> Self {
        sort_complex(&mut s1);
        sort_complex(&mut s2);
        Self {
            kind,
            s1,
            s2,
            scale: [T::one(), T::one()],
        }
    }

    pub fn with_scale(mut self, scale: [T; 2]) -> Self {
        self.scale = scale;
        self
    }

    fn matches(set: &[Complex<T>], value: Complex<T>, radius: T) -> bool {
        set.iter().any(|s| (*s - value).norm() <= radius)
    }

    /// Membership of `λ`, matching coordinates within `tol_eig * scale`.
    pub fn contains(&self, lambda: &Bicomplex<T>, tol_eig: T) -> bool {
        let m1 = Self::matches(&self.s1, lambda.z1(), tol_eig * self.scale[0]);
        let m2 = Self::matches(&self.s2, lambda.z2(), tol_eig * self.scale[1]);
        match self.kind {
            SpectrumKind::Point => m1 || m2,
            SpectrumKind::Ap => m1 && m2,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self.kind {
            SpectrumKind::Point => self.s1.is_empty() && self.s2.is_empty(),
            SpectrumKind::Ap => self.s1.is_empty() || self.s2.is_empty(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.kind == SpectrumKind::Ap || self.is_empty()
    }

    /// A member whose free coordinate has modulus strictly greater than `bound`.
    /// `None` for bounded sets.
    pub fn member_beyond(&self, bound: T) -> Option<Bicomplex<T>> {
        if self.is_bounded() {
            return None;
        }
        let big = Complex::new(bound.abs() * T::two() + T::one(), T::zero());
        if !big.re.is_finite() {
            return None;
        }
        match self.s1.first() {
            Some(s) => Some(Bicomplex::recompose(*s, big)),
            None => Some(Bicomplex::recompose(big, self.s2[0])),
        }
    }

    /// Every element of an `Ap` set (the finite product `S1 × S2`).
    pub fn product_members(&self) -> Vec<Bicomplex<T>> {
        self.s1
            .iter()
            .flat_map(|a| self.s2.iter().map(move |b| Bicomplex::recompose(*a, *b)))
            .collect()
    }
}

fn sort_complex<T: Scalar>(v: &mut [Complex<T>]) {
    v.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}

#[derive(Serialize, Deserialize)]
struct SpectrumRepr<T> {
    kind: SpectrumKind,
    #[serde(rename = "S1")]
    s1: Vec<[T; 2]>,
    #[serde(rename = "S2")]
    s2: Vec<[T; 2]>,
}

impl<T: Scalar + Serialize> Serialize for SpectrumSet<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pair = |c: &Complex<T>| [c.re, c.im];
        SpectrumRepr {
            kind: self.kind,
            s1: self.s1.iter().map(pair).collect(),
            s2: self.s2.iter().map(pair).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for SpectrumSet<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = SpectrumRepr::<T>::deserialize(deserializer)?;
        let conv = |v: Vec<[T; 2]>| -> std::result::Result<Vec<Complex<T>>, D::Error> {
            v.into_iter()
                .map(|[re, im]| {
                    if re.is_finite() && im.is_finite() {
                        Ok(Complex::new(re, im))
                    } else {
                        Err(D::Error::custom("non-finite spectrum entry"))
                    }
                })
                .collect()
        };
        Ok(SpectrumSet::new(r.kind, conv(r.s1)?, conv(r.s2)?))
    }
}

/// Component data shared by both spectra.
struct Components<T> {
    t1: CMatrix<T>,
    t2: CMatrix<T>,
    scale: [T; 2],
}

impl<T: Scalar> Components<T> {
    fn of(t: &BcMatrix<T>) -> Self {
        let (t1, t2) = t.decompose();
        let scale = [
            tolerance_scale(Svd::new(&t1).sigma_max()),
            tolerance_scale(Svd::new(&t2).sigma_max()),
        ];
        Self { t1, t2, scale }
    }

    fn spectrum(&self, kind: SpectrumKind, opts: &EigenOptions) -> Result<SpectrumSet<T>> {
        let s1 = eigenvalues(&self.t1, opts)?;
        let s2 = eigenvalues(&self.t2, opts)?;
        Ok(SpectrumSet::new(kind, s1, s2).with_scale(self.scale))
    }
}

pub fn point_spectrum<T: Scalar>(t: &BcMatrix<T>, cfg: &SpectralConfig<T>) -> Result<SpectrumSet<T>> {
    Components::of(t).spectrum(SpectrumKind::Point, &cfg.eigen)
}

/// In finite dimension the component approximate point spectra are the
/// component eigenvalue sets.
pub fn approx_point_spectrum<T: Scalar>(
    t: &BcMatrix<T>,
    cfg: &SpectralConfig<T>,
) -> Result<SpectrumSet<T>> {
    Components::of(t).spectrum(SpectrumKind::Ap, &cfg.eigen)
}

/// Basis of `ker(T - λI)` over `C`: vectors `e1 v` for `v` in a null basis of
/// `T1 - λ1 I` and `e2 w` for `w` in a null basis of `T2 - λ2 I`.
pub fn kernel_bc<T: Scalar>(
    t: &BcMatrix<T>,
    lambda: &Bicomplex<T>,
    cfg: &SpectralConfig<T>,
) -> Vec<BcVector<T>> {
    let comps = Components::of(t);
    let n = t.order();
    let zero = vec![Complex::new(T::zero(), T::zero()); n];
    let null1 = Svd::new(&comps.t1.shifted(lambda.z1())).null_space(cfg.tol.eig * comps.scale[0]);
    let null2 = Svd::new(&comps.t2.shifted(lambda.z2())).null_space(cfg.tol.eig * comps.scale[1]);
    null1
        .iter()
        .map(|v| BcVector::from_components(v, &zero))
        .chain(null2.iter().map(|w| BcVector::from_components(&zero, w)))
        .collect()
}

/// A unit approximate eigenvector for `λ ∈ σ_ap(T)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar + Serialize"))]
pub struct ApproxEigWitness<T> {
    pub lambda: Bicomplex<T>,
    pub x: BcVector<T>,
    /// `‖(T - λI)x‖_D`
    pub residual: Hyperbolic<T>,
}

pub fn approx_eig_witness<T: Scalar>(
    t: &BcMatrix<T>,
    lambda: &Bicomplex<T>,
    cfg: &SpectralConfig<T>,
) -> Result<ApproxEigWitness<T>> {
    let comps = Components::of(t);
    let ap = comps.spectrum(SpectrumKind::Ap, &cfg.eigen)?;
    if !ap.contains(lambda, cfg.tol.eig) {
        return Err(Error::NotInApSpectrum);
    }
    let v1 = Svd::new(&comps.t1.shifted(lambda.z1()))
        .min_vector()
        .ok_or(Error::NotInApSpectrum)?;
    let v2 = Svd::new(&comps.t2.shifted(lambda.z2()))
        .min_vector()
        .ok_or(Error::NotInApSpectrum)?;
    let x = BcVector::from_components(&v1, &v2);
    let residual = t.shifted(*lambda).apply(&x)?.norm_d();
    Ok(ApproxEigWitness {
        lambda: *lambda,
        x,
        residual,
    })
}

/// Outcome of the point-spectrum-outside-approximate-spectrum construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PointNotApWitness<T> {
    pub lambda: Bicomplex<T>,
    pub in_point: bool,
    pub in_ap: bool,
    pub kernel: Vec<BcVector<T>>,
    /// `σ_min(T2 - λ2 I)`: lower bound on the second residual coordinate of
    /// any unit vector.
    pub residual_floor: T,
    pub floor_cutoff: T,
}

impl<T: Scalar + Serialize> PointNotApWitness<T> {
    pub fn passed(&self) -> bool {
        self.in_point && !self.in_ap && !self.kernel.is_empty() && self.residual_floor > self.floor_cutoff
    }

    pub fn report(&self) -> Report {
        let floor = self.residual_floor.to_f64().unwrap_or(f64::NAN);
        Report::new("a point-spectrum element need not lie in the approximate point spectrum")
            .witness(json!({ "lambda": self.lambda, "lambda_idempotent": self.lambda.to_idempotent_string() }))
            .witness(json!({ "kernel": self.kernel }))
            .check(Check::boolean("lambda in point spectrum", self.in_point))
            .check(Check::boolean("lambda not in approximate point spectrum", !self.in_ap))
            .check(Check::new("ker(T - lambda I) nonzero", !self.kernel.is_empty(), self.kernel.len() as f64))
            .check(Check::new(
                "unit vectors have residual component 2 bounded away from 0",
                self.residual_floor > self.floor_cutoff,
                floor,
            ))
    }
}

/// Picks `λ1` as the first component-1 eigenvalue (ordered by real then
/// imaginary part) and `λ2 = max|s| + 1` over the component-2 eigenvalues.
pub fn sigma_p_not_in_ap_demo<T: Scalar>(
    t: &BcMatrix<T>,
    cfg: &SpectralConfig<T>,
) -> Result<PointNotApWitness<T>> {
    if t.order() == 0 {
        return Err(Error::Invalid("operator on the zero module has empty spectrum".into()));
    }
    let comps = Components::of(t);
    let point = comps.spectrum(SpectrumKind::Point, &cfg.eigen)?;
    let ap = SpectrumSet {
        kind: SpectrumKind::Ap,
        ..point.clone()
    };
    let lambda1 = point.s1[0];
    let lambda2 = point
        .s2
        .iter()
        .map(|s| s.norm())
        .fold(T::zero(), T::max)
        + T::one();
    let lambda = Bicomplex::recompose(lambda1, Complex::new(lambda2, T::zero()));
    let floor = Svd::new(&comps.t2.shifted(lambda.z2())).sigma_min();
    Ok(PointNotApWitness {
        lambda,
        in_point: point.contains(&lambda, cfg.tol.eig),
        in_ap: ap.contains(&lambda, cfg.tol.eig),
        kernel: kernel_bc(t, &lambda, cfg),
        residual_floor: floor,
        floor_cutoff: cfg.tol.eig * comps.scale[1],
    })
}

/// Largest modulus of the opposite idempotent coordinate over `images`,
/// relative to `max(1, |image|)`. Zero when every image lies in `e_side V`.
pub fn invariance_residual<T: Scalar>(images: &[BcVector<T>], side: Side) -> T {
    let other = side.other();
    images
        .iter()
        .map(|y| {
            let scale = T::one().max(y.abs());
            y.entries()
                .iter()
                .map(|e| e.component(other).norm())
                .fold(T::zero(), T::max)
                / scale
        })
        .fold(T::zero(), T::max)
}

/// Samples `v ∈ e_side V`, applies `T`, and reports the largest leak into the
/// opposite idempotent coordinate.
pub fn invariant_subspace_residual<T: Scalar, R: Rng + ?Sized>(
    t: &BcMatrix<T>,
    side: Side,
    samples: usize,
    rng: &mut R,
) -> Result<T> {
    let n = t.order();
    let mut images = Vec::with_capacity(samples);
    for _ in 0..samples {
        let v = BcVector::new(
            (0..n)
                .map(|_| Bicomplex::on_side(side, crate::sample::complex(rng)))
                .collect(),
        );
        images.push(t.apply(&v)?);
    }
    Ok(invariance_residual(&images, side))
}

/// `T(e_side V) ⊆ e_side V` on `samples` random vectors.
pub fn invariant_subspace_check<T: Scalar, R: Rng + ?Sized>(
    t: &BcMatrix<T>,
    side: Side,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> Result<bool> {
    Ok(invariant_subspace_residual(t, side, samples, rng)? <= tol)
}

/// Sup of `‖Tx‖_D` over sampled hyperbolic-unit vectors `x`, componentwise.
pub fn sampled_operator_norm<T: Scalar, R: Rng + ?Sized>(
    t: &BcMatrix<T>,
    probes: usize,
    rng: &mut R,
) -> Result<Hyperbolic<T>> {
    let (t1, t2) = t.decompose();
    let n = t.order();
    let mut best = (T::zero(), T::zero());
    for _ in 0..probes {
        let x = crate::sample::unit_bc_vector::<T, R>(rng, n);
        let (x1, x2) = x.components();
        best.0 = best.0.max(vector_norm(&t1.mul_vec(&x1)?));
        best.1 = best.1.max(vector_norm(&t2.mul_vec(&x2)?));
    }
    Ok(Hyperbolic::recompose(best.0, best.1))
}

/// `e1 V` and `e2 V` are both `T`-invariant, with `T(e_side v) = e_side T_side v`.
pub fn invariant_subspace_demo<T: Scalar + Serialize, R: Rng + ?Sized>(
    t: &BcMatrix<T>,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> Result<Report> {
    let (t1, t2) = t.decompose();
    let f64_of = |t: T| t.to_f64().unwrap_or(f64::NAN);
    let mut report = Report::new("e1 V and e2 V are invariant subspaces of every bicomplex operator")
        .witness(json!({ "n": t.order(), "samples": samples }));
    for (side, comp, label) in [(Side::E1, &t1, "e1"), (Side::E2, &t2, "e2")] {
        let mut leak = T::zero();
        let mut action = T::zero();
        for _ in 0..samples {
            let v: Vec<Complex<T>> = (0..t.order()).map(|_| crate::sample::complex(rng)).collect();
            let x = BcVector::new(v.iter().map(|c| Bicomplex::on_side(side, *c)).collect());
            let y = t.apply(&x)?;
            leak = leak.max(invariance_residual(std::slice::from_ref(&y), side));
            let expect = BcVector::new(comp.mul_vec(&v)?.into_iter().map(|c| Bicomplex::on_side(side, c)).collect());
            action = action.max(y.max_abs_diff(&expect) / T::one().max(y.abs()));
        }
        report.push_check(Check::new(format!("T({label} V) has no opposite coordinate"), leak <= tol, f64_of(leak)));
        report.push_check(Check::new(
            format!("T acts on {label} V as its component operator"),
            action <= tol,
            f64_of(action),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    fn idem(a: f64, b: f64) -> Bicomplex<f64> {
        Bicomplex::from_idempotent(c(a), c(b)).unwrap()
    }

    /// e1 diag(1,2) + e2 diag(3,4)
    fn diag_fixture() -> BcMatrix<f64> {
        BcMatrix::diagonal(&[idem(1.0, 3.0), idem(2.0, 4.0)])
    }

    #[test]
    fn point_spectrum_is_a_union_of_slabs() {
        let cfg = SpectralConfig::default();
        let p = point_spectrum(&diag_fixture(), &cfg).unwrap();
        assert_eq!(p.s1.len(), 2);
        assert!((p.s1[0] - c(1.0)).norm() < 1e-12 && (p.s1[1] - c(2.0)).norm() < 1e-12);
        assert!((p.s2[0] - c(3.0)).norm() < 1e-12 && (p.s2[1] - c(4.0)).norm() < 1e-12);
        assert!(p.contains(&idem(1.0, 99.0), cfg.tol.eig));
        assert!(!p.contains(&idem(5.0, 5.0), cfg.tol.eig));
        assert!(!p.is_bounded());
    }

    #[test]
    fn zero_operator() {
        let cfg = SpectralConfig::default();
        let p = point_spectrum(&BcMatrix::<f64>::zeros(2), &cfg).unwrap();
        for w in [0.0, 1.0, -7.5, 1e6] {
            assert!(p.contains(&idem(0.0, w), cfg.tol.eig));
        }
    }

    #[test]
    fn approximate_spectrum_needs_both_coordinates() {
        let cfg = SpectralConfig::default();
        let ap = approx_point_spectrum(&diag_fixture(), &cfg).unwrap();
        assert!(ap.contains(&idem(1.0, 3.0), cfg.tol.eig));
        assert!(!ap.contains(&idem(1.0, 99.0), cfg.tol.eig));
        assert_eq!(ap.product_members().len(), 4);
        assert_eq!(ap.member_beyond(1e6), None);

        let id = approx_point_spectrum(&BcMatrix::<f64>::identity(3), &cfg).unwrap();
        assert!(id.contains(&Bicomplex::one(), cfg.tol.eig));
        assert!(!id.contains(&idem(1.0, 2.0), cfg.tol.eig));
    }

    #[test]
    fn kernel_for_point_but_not_ap_lambda() {
        let cfg = SpectralConfig::default();
        let t = diag_fixture();
        let lambda = idem(1.0, 99.0);
        let ker = kernel_bc(&t, &lambda, &cfg);
        assert_eq!(ker.len(), 1);
        let x = &ker[0];
        // e1 (1, 0) up to phase
        assert!((x.x1()[0].norm() - 1.0).abs() < 1e-14);
        assert!(x.x2().iter().all(|c| c.norm() == 0.0));
        let r = t.shifted(lambda).apply(x).unwrap();
        assert!(r.abs() < 1e-12);

        assert!(kernel_bc(&t, &idem(7.0, 8.0), &cfg).is_empty());
    }

    #[test]
    fn witness_for_diagonal() {
        let cfg = SpectralConfig::default();
        let w = approx_eig_witness(&diag_fixture(), &idem(1.0, 3.0), &cfg).unwrap();
        assert!(w.x.is_hyperbolic_unit(1e-14));
        assert_eq!(w.residual.idempotent(), (0.0, 0.0));
        assert_eq!(
            approx_eig_witness(&diag_fixture(), &idem(1.0, 99.0), &cfg),
            Err(Error::NotInApSpectrum)
        );
    }

    #[test]
    fn demo_on_diagonal_fixture() {
        let cfg = SpectralConfig::default();
        let w = sigma_p_not_in_ap_demo(&diag_fixture(), &cfg).unwrap();
        assert!(w.lambda.max_abs_diff(&idem(1.0, 5.0)) < 1e-12);
        assert!(w.passed());
        assert!(w.report().passed());
        assert!((w.residual_floor - 1.0).abs() < 1e-12);
    }

    #[test]
    fn demo_scalar_case() {
        let cfg = SpectralConfig::default();
        let t = BcMatrix::diagonal(&[idem(-2.0, 3.0)]);
        let w = sigma_p_not_in_ap_demo(&t, &cfg).unwrap();
        assert!(w.lambda.max_abs_diff(&idem(-2.0, 4.0)) < 1e-12);
        assert!(w.passed());
    }

    #[test]
    fn invariance_negative_control() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = crate::sample::bc_matrix::<f64, _>(&mut rng, 4);
        assert!(invariant_subspace_check(&t, Side::E1, 20, &mut rng, 1e-12).unwrap());
        assert!(invariant_subspace_check(&t, Side::E2, 20, &mut rng, 1e-12).unwrap());
        let zero = BcVector::zeros(4);
        assert_eq!(invariance_residual(&[t.apply(&zero).unwrap()], Side::E1), 0.0);

        let v = BcVector::new(vec![Bicomplex::e1(); 4]);
        let mut image = t.apply(&v).unwrap().entries().to_vec();
        image[2] += Bicomplex::e2_times(c(1e-6));
        let leaked = BcVector::new(image);
        assert!(invariance_residual(&[leaked], Side::E1) > 1e-10);
    }

    #[test]
    fn spectrum_json() {
        let s = SpectrumSet::new(SpectrumKind::Ap, vec![c(2.0), c(1.0)], vec![]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"kind":"ap","S1":[[1.0,0.0],[2.0,0.0]],"S2":[]}"#);
        let back: SpectrumSet<f64> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn invariant_subspace_demo_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = crate::sample::bc_matrix::<f64, _>(&mut rng, 5);
        let r = invariant_subspace_demo(&t, 10, &mut rng, 1e-12).unwrap();
        assert_eq!(r.checks.len(), 4);
        assert!(r.passed(), "{}", r.to_text());
    }

}
