//! Finite-dimensional bicomplex algebras.
//!
//! The pointwise algebra `BC^n` (and `C(X, BC)` for a finite point set `X`,
//! which is the same algebra indexed by points) splits as
//! `A = e1 A1 + e2 A2` with `A1 ≅ A2 ≅ C^n`. Its ideals are exactly the
//! coordinate-vanishing sets described by [`IdealSpec`], so ideal inclusion is
//! a subset test and the maximal ideals can be enumerated exhaustively.

use std::collections::BTreeSet;

use num_complex::Complex;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{BcVector, SpectrumKind, SpectrumSet};
use crate::number::{Bicomplex, Side};
use crate::report::{Check, Report};
use crate::sample;
use crate::scalar::Scalar;

/// A commutative unital algebra over `BC` with a random-element source.
pub trait BcAlgebra<T: Scalar> {
    type Element: Clone;

    fn zero(&self) -> Self::Element;
    fn identity(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn scale(&self, lambda: &Bicomplex<T>, a: &Self::Element) -> Self::Element;
    fn distance(&self, a: &Self::Element, b: &Self::Element) -> T;
    fn magnitude(&self, a: &Self::Element) -> T;
    fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;
}

/// `BC` as an algebra over itself.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BicomplexRing;

impl<T: Scalar> BcAlgebra<T> for BicomplexRing {
    type Element = Bicomplex<T>;

    fn zero(&self) -> Bicomplex<T> {
        Bicomplex::zero()
    }
    fn identity(&self) -> Bicomplex<T> {
        Bicomplex::one()
    }
    fn add(&self, a: &Bicomplex<T>, b: &Bicomplex<T>) -> Bicomplex<T> {
        *a + *b
    }
    fn mul(&self, a: &Bicomplex<T>, b: &Bicomplex<T>) -> Bicomplex<T> {
        *a * *b
    }
    fn scale(&self, lambda: &Bicomplex<T>, a: &Bicomplex<T>) -> Bicomplex<T> {
        *lambda * *a
    }
    fn distance(&self, a: &Bicomplex<T>, b: &Bicomplex<T>) -> T {
        (*a - *b).abs()
    }
    fn magnitude(&self, a: &Bicomplex<T>) -> T {
        a.abs()
    }
    fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Bicomplex<T> {
        sample::bicomplex(rng)
    }
}

/// `BC^n` with entrywise product; identity `(1, ..., 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseAlgebra {
    pub n: usize,
}

impl PointwiseAlgebra {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn maximal_ideals(&self) -> Vec<IdealSpec> {
        maximal_ideals(self.n)
    }
}

fn entrywise<T: Scalar>(
    a: &BcVector<T>,
    b: &BcVector<T>,
    op: impl Fn(Bicomplex<T>, Bicomplex<T>) -> Bicomplex<T>,
) -> BcVector<T> {
    BcVector::new(
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| op(*x, *y))
            .collect(),
    )
}

macro_rules! pointwise_impl {
    ($ty:ty, $dim:expr) => {
        impl<T: Scalar> BcAlgebra<T> for $ty {
            type Element = BcVector<T>;

            fn zero(&self) -> BcVector<T> {
                BcVector::zeros($dim(self))
            }
            fn identity(&self) -> BcVector<T> {
                BcVector::new(vec![Bicomplex::one(); $dim(self)])
            }
            fn add(&self, a: &BcVector<T>, b: &BcVector<T>) -> BcVector<T> {
                entrywise(a, b, |x, y| x + y)
            }
            fn mul(&self, a: &BcVector<T>, b: &BcVector<T>) -> BcVector<T> {
                entrywise(a, b, |x, y| x * y)
            }
            fn scale(&self, lambda: &Bicomplex<T>, a: &BcVector<T>) -> BcVector<T> {
                a.scale(*lambda)
            }
            fn distance(&self, a: &BcVector<T>, b: &BcVector<T>) -> T {
                a.sub(b).abs()
            }
            fn magnitude(&self, a: &BcVector<T>) -> T {
                a.abs()
            }
            fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> BcVector<T> {
                sample::bc_vector(rng, $dim(self))
            }
        }
    };
}

pointwise_impl!(PointwiseAlgebra, |a: &PointwiseAlgebra| a.n);
pointwise_impl!(FnAlgebra, |a: &FnAlgebra| a.points.len());

/// `C(X, BC)` for a finite set `X` of named points. Elements are stored as
/// the vector of values in point order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FnAlgebra {
    pub points: Vec<String>,
}

impl FnAlgebra {
    pub fn new(points: impl IntoIterator<Item = impl Into<String>>) -> Result<Self> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let distinct: BTreeSet<&String> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::Invalid("duplicate point names".into()));
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// 1-based coordinate of `point`.
    pub fn coordinate(&self, point: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == point)
            .map(|i| i + 1)
            .ok_or_else(|| Error::PointNotInX(point.to_string()))
    }

    pub fn eval<T: Scalar>(&self, f: &BcVector<T>, point: &str) -> Result<Bicomplex<T>> {
        Ok(f.entries()[self.coordinate(point)? - 1])
    }

    /// The isomorphic pointwise algebra.
    pub fn as_pointwise(&self) -> PointwiseAlgebra {
        PointwiseAlgebra::new(self.points.len())
    }

    pub fn maximal_ideals(&self) -> Vec<IdealSpec> {
        maximal_ideals(self.points.len())
    }

    /// `{f : f(x) = 0}`.
    pub fn vanishing_ideal(&self, point: &str) -> Result<IdealSpec> {
        let i = self.coordinate(point)?;
        Ok(IdealSpec::new([i], [i]))
    }

    /// `e1 A1 + e2 M_x`: functions whose second idempotent coordinate vanishes at `x`.
    pub fn second_component_vanishing(&self, point: &str) -> Result<IdealSpec> {
        Ok(IdealSpec::new([], [self.coordinate(point)?]))
    }

    /// `e1 M_y + e2 A2`.
    pub fn first_component_vanishing(&self, point: &str) -> Result<IdealSpec> {
        Ok(IdealSpec::new([self.coordinate(point)?], []))
    }
}

/// The ideal `{a : a1_i = 0 for i ∈ Z1, a2_i = 0 for i ∈ Z2}` of `BC^n`, where
/// `a1`, `a2` are the idempotent coordinate vectors. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealSpec {
    #[serde(rename = "Z1")]
    pub z1: BTreeSet<usize>,
    #[serde(rename = "Z2")]
    pub z2: BTreeSet<usize>,
}

impl IdealSpec {
    pub fn new(z1: impl IntoIterator<Item = usize>, z2: impl IntoIterator<Item = usize>) -> Self {
        Self {
            z1: z1.into_iter().collect(),
            z2: z2.into_iter().collect(),
        }
    }

    pub fn zero_ideal(n: usize) -> Self {
        Self::new(1..=n, 1..=n)
    }

    pub fn full() -> Self {
        Self::new([], [])
    }

    /// Every index lies in `1..=n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.z1.iter().chain(&self.z2).find(|&&i| i == 0 || i > n) {
            Some(&index) => Err(Error::CoordinateOutOfRange { index, n }),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self) -> bool {
        !(self.z1.is_empty() && self.z2.is_empty())
    }

    /// `self ⊆ other`: every constraint of `other` is also imposed by `self`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.z1.is_subset(&self.z1) && other.z2.is_subset(&self.z2)
    }

    pub fn contains<T: Scalar>(&self, a: &BcVector<T>, tol: T) -> bool {
        let cutoff = tol * T::one().max(a.abs());
        let e = a.entries();
        let vanish = |i: usize, side: Side| e.get(i - 1).is_none_or(|x| x.component(side).norm() <= cutoff);
        self.z1.iter().all(|&i| vanish(i, Side::E1)) && self.z2.iter().all(|&i| vanish(i, Side::E2))
    }

    /// Random element of the ideal in `BC^n`.
    pub fn random_member<T: Scalar, R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> BcVector<T> {
        let zero = Complex::new(T::zero(), T::zero());
        BcVector::new(
            (1..=n)
                .map(|i| {
                    let a1 = if self.z1.contains(&i) { zero } else { sample::complex(rng) };
                    let a2 = if self.z2.contains(&i) { zero } else { sample::complex(rng) };
                    Bicomplex::recompose(a1, a2)
                })
                .collect(),
        )
    }

    /// For a maximal ideal, the idempotent component left unconstrained:
    /// `Some(E1)` for `e1 A1 + e2 I2`, `Some(E2)` for `e1 I1 + e2 A2`.
    pub fn full_component(&self) -> Option<Side> {
        match (self.z1.len(), self.z2.len()) {
            (0, 1) => Some(Side::E1),
            (1, 0) => Some(Side::E2),
            _ => None,
        }
    }
}

/// Structural maximality: a proper ideal is maximal iff it imposes exactly one
/// vanishing condition.
pub fn is_maximal(spec: &IdealSpec, n: usize) -> Result<bool> {
    spec.validate(n)?;
    if !spec.is_proper() {
        return Err(Error::NotProper);
    }
    Ok(spec.z1.len() + spec.z2.len() == 1)
}

/// The `2n` maximal ideals of `BC^n`: one vanishing condition on one
/// idempotent coordinate.
pub fn maximal_ideals(n: usize) -> Vec<IdealSpec> {
    (1..=n)
        .flat_map(|i| [IdealSpec::new([i], []), IdealSpec::new([], [i])])
        .collect()
}

/// All `4^n` ideals of `BC^n` (including `{0}` and the full algebra).
pub fn all_ideals(n: usize) -> Result<Vec<IdealSpec>> {
    if n > 4 {
        return Err(Error::Invalid(format!("exhaustive enumeration limited to n <= 4, got {n}")));
    }
    let subsets = 1usize << n;
    let bits = |mask: usize| (0..n).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1);
    Ok((0..subsets)
        .flat_map(|m1| (0..subsets).map(move |m2| (m1, m2)))
        .map(|(m1, m2)| IdealSpec::new(bits(m1), bits(m2)))
        .collect())
}

/// Maximal elements of the proper part of the ideal lattice, found by
/// pairwise inclusion scan over every ideal.
pub fn brute_force_maximal_oracle(n: usize) -> Result<Vec<IdealSpec>> {
    let ideals = all_ideals(n)?;
    let proper: Vec<&IdealSpec> = ideals.iter().filter(|i| i.is_proper()).collect();
    Ok(proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j != *i && i.is_subset_of(j)))
        .map(|i| (*i).clone())
        .collect())
}

/// Samples closure of `spec` under addition and under multiplication by
/// arbitrary elements of `alg`, plus properness.
pub fn check_ideal<T: Scalar, R: Rng + ?Sized>(
    alg: &PointwiseAlgebra,
    spec: &IdealSpec,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> Result<Report> {
    spec.validate(alg.n)?;
    let mut add_ok = true;
    let mut mul_ok = true;
    for _ in 0..samples {
        let a = spec.random_member::<T, R>(alg.n, rng);
        let b = spec.random_member::<T, R>(alg.n, rng);
        let x: BcVector<T> = alg.random_element(rng);
        add_ok &= spec.contains(&alg.add(&a, &b), tol);
        mul_ok &= spec.contains(&alg.mul(&x, &a), tol);
    }
    let identity: BcVector<T> = alg.identity();
    let proper = !spec.contains(&identity, tol);
    let maximal = spec.is_proper() && is_maximal(spec, alg.n)?;
    Ok(Report::new(format!("{} is an ideal of BC^{}", ideal_label(spec), alg.n))
        .witness(spec)
        .witness(json!({ "proper": proper, "maximal": maximal }))
        .check(Check::boolean("contains 0", spec.contains(&alg.zero(), tol)))
        .check(Check::boolean("closed under addition", add_ok))
        .check(Check::boolean("absorbs multiplication", mul_ok)))
}

fn ideal_label(spec: &IdealSpec) -> String {
    let list = |s: &BTreeSet<usize>| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    format!("Z1={{{}}} Z2={{{}}}", list(&spec.z1), list(&spec.z2))
}

/// Module and algebra axioms, commutativity and unit on random triples.
pub fn check_algebra_axioms<T: Scalar, A: BcAlgebra<T>, R: Rng + ?Sized>(
    alg: &A,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> Report {
    let mut worst = [T::zero(); 6];
    for _ in 0..samples {
        let x = alg.random_element(rng);
        let y = alg.random_element(rng);
        let z = alg.random_element(rng);
        let lambda: Bicomplex<T> = sample::bicomplex(rng);
        let rel = |a: &A::Element, b: &A::Element| {
            alg.distance(a, b) / T::one().max(alg.magnitude(a)).max(alg.magnitude(b))
        };
        let residuals = [
            rel(&alg.mul(&x, &alg.add(&y, &z)), &alg.add(&alg.mul(&x, &y), &alg.mul(&x, &z))),
            rel(&alg.mul(&alg.add(&x, &y), &z), &alg.add(&alg.mul(&x, &z), &alg.mul(&y, &z))),
            rel(&alg.mul(&x, &alg.mul(&y, &z)), &alg.mul(&alg.mul(&x, &y), &z)),
            rel(&alg.scale(&lambda, &alg.mul(&x, &y)), &alg.mul(&alg.scale(&lambda, &x), &y))
                .max(rel(&alg.scale(&lambda, &alg.mul(&x, &y)), &alg.mul(&x, &alg.scale(&lambda, &y)))),
            rel(&alg.mul(&x, &y), &alg.mul(&y, &x)),
            rel(&alg.mul(&alg.identity(), &x), &x),
        ];
        for (w, r) in worst.iter_mut().zip(residuals) {
            *w = w.max(r);
        }
    }
    let names = [
        "x(y+z) = xy + xz",
        "(x+y)z = xz + yz",
        "x(yz) = (xy)z",
        "λ(xy) = (λx)y = x(λy)",
        "xy = yx",
        "ex = x",
    ];
    names
        .iter()
        .zip(worst)
        .fold(Report::new("bicomplex algebra axioms"), |r, (name, w)| {
            r.check(Check::new(*name, w <= tol, w.to_f64().unwrap_or(f64::NAN)))
        })
}

/// Element `e_side a` of the one-sided division algebra `e_side C(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DivisionAlgebraElem<T> {
    pub side: Side,
    pub a: Complex<T>,
}

impl<T: Scalar> DivisionAlgebraElem<T> {
    pub fn new(side: Side, a: Complex<T>) -> Self {
        Self { side, a }
    }

    pub fn to_bicomplex(&self) -> Bicomplex<T> {
        Bicomplex::on_side(self.side, self.a)
    }

    /// Inverse relative to the identity `e_side`.
    pub fn inverse(&self, tol: T) -> Result<Self> {
        if self.a.norm() <= tol {
            Err(Error::NotInvertible { zero_divisor: false })
        } else {
            Ok(Self::new(self.side, self.a.inv()))
        }
    }

    /// `{λ : x - λ e_side not invertible in e_side A}`: the side coordinate is
    /// pinned to `a`, the other coordinate is free.
    pub fn spectrum(&self) -> SpectrumSet<T> {
        let (s1, s2) = match self.side {
            Side::E1 => (vec![self.a], vec![]),
            Side::E2 => (vec![], vec![self.a]),
        };
        SpectrumSet::new(SpectrumKind::Point, s1, s2)
    }

    /// Direct test of the defining condition, independent of [`SpectrumSet`].
    /// The zero test is relative to `max(1, |λ|)`.
    pub fn in_spectrum_direct(&self, lambda: &Bicomplex<T>, tol: T) -> bool {
        // x - λ e_side = e_side (a - λ_side)
        let diff = DivisionAlgebraElem::new(self.side, self.a - lambda.component(self.side));
        diff.inverse(tol * T::one().max(lambda.abs())).is_err()
    }
}

pub fn division_spectrum<T: Scalar>(x: &DivisionAlgebraElem<T>) -> SpectrumSet<T> {
    x.spectrum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar + Serialize"))]
pub struct NotDivisionWitness<T> {
    pub element: BcVector<T>,
    pub annihilator: BcVector<T>,
    pub product: BcVector<T>,
    /// Some coordinate equation `w_l · x_l = 1` has `x_l = 0`.
    pub inverse_unsolvable: bool,
}

impl<T: Scalar + Serialize> NotDivisionWitness<T> {
    pub fn passed(&self) -> bool {
        !self.element.is_zero() && !self.annihilator.is_zero() && self.product.is_zero() && self.inverse_unsolvable
    }

    pub fn report(&self) -> Report {
        Report::new("a bicomplex algebra with both idempotent parts nonzero is not a division algebra")
            .witness(self)
            .check(Check::boolean("witness is nonzero", !self.element.is_zero()))
            .check(Check::boolean("annihilator is nonzero", !self.annihilator.is_zero()))
            .check(Check::new("witness * annihilator = 0", self.product.is_zero(), self.product.abs().to_f64().unwrap_or(f64::NAN)))
            .check(Check::boolean("no inverse exists", self.inverse_unsolvable))
    }
}

/// `e1 (1, ..., 1)` in `BC^n`, annihilated by `e2 (1, ..., 1)`.
pub fn not_division_algebra_witness<T: Scalar>(n: usize) -> Result<NotDivisionWitness<T>> {
    if n == 0 {
        return Err(Error::Invalid("dimension must be at least 1".into()));
    }
    let alg = PointwiseAlgebra::new(n);
    let element = BcVector::new(vec![Bicomplex::e1(); n]);
    let annihilator = BcVector::new(vec![Bicomplex::e2(); n]);
    let product = alg.mul(&element, &annihilator);
    let identity: BcVector<T> = alg.identity();
    // W x = e solves coordinatewise as w_l x_l = e_l on each idempotent component.
    let inverse_unsolvable = element.entries().iter().zip(identity.entries()).any(|(x, e)| {
        [Side::E1, Side::E2]
            .iter()
            .any(|&s| x.component(s).norm() == T::zero() && e.component(s).norm() != T::zero())
    });
    Ok(NotDivisionWitness {
        element,
        annihilator,
        product,
        inverse_unsolvable,
    })
}

/// The spectrum of `e_side a` pins one idempotent coordinate and leaves the
/// other free, so it contains members beyond any bound.
pub fn spectrum_unbounded_demo<T: Scalar + Serialize>(x: &DivisionAlgebraElem<T>, bound: T, tol: T) -> Report {
    let s = x.spectrum();
    let f64_of = |t: T| t.to_f64().unwrap_or(f64::NAN);
    let at = |pinned: Complex<T>, free: Complex<T>| match x.side {
        Side::E1 => Bicomplex::recompose(pinned, free),
        Side::E2 => Bicomplex::recompose(free, pinned),
    };
    let mut report = Report::new(format!(
        "the spectrum of an element of the division algebra {} C(i) is unbounded",
        if x.side == Side::E1 { "e1" } else { "e2" }
    ))
    .witness(x)
    .witness(&s);
    let member = |l: &Bicomplex<T>| {
        s.contains(l, tol * T::one().max(l.abs())) && x.in_spectrum_direct(l, tol)
    };
    for m in [0.0, 1e3, 1e6] {
        let lambda = at(x.a, Complex::new(T::of(m), T::zero()));
        let pass = member(&lambda);
        let residual = (lambda.component(x.side) - x.a).norm();
        report.push_check(Check::new(format!("member with free coordinate of modulus {m:e}"), pass, f64_of(residual)));
    }
    let outside = at(x.a + T::one(), Complex::new(T::zero(), T::zero()));
    report.push_check(Check::boolean(
        "shifting the pinned coordinate leaves the spectrum",
        !s.contains(&outside, tol) && !x.in_spectrum_direct(&outside, tol),
    ));
    match s.member_beyond(bound) {
        Some(far) => {
            let free = far.component(x.side.other()).norm();
            report = report.witness(json!({ "bound": bound, "member": far, "free_modulus": free }));
            report.push_check(Check::new(
                format!("member with free modulus beyond {:e}", f64_of(bound)),
                free > bound && member(&far),
                f64_of(free),
            ));
        }
        None => report.push_check(Check::boolean("member beyond the bound exists", false)),
    }
    report.check(Check::boolean("spectrum is not bounded", !s.is_bounded()))
}

/// Compares the `2n` structural maximal ideals of `BC^n` with the exhaustive
/// lattice scan and confirms every proper ideal sits inside one of them.
pub fn maximal_ideal_forms_demo(n: usize) -> Result<Report> {
    let fast: BTreeSet<IdealSpec> = maximal_ideals(n).into_iter().collect();
    let oracle: BTreeSet<IdealSpec> = brute_force_maximal_oracle(n)?.into_iter().collect();
    let ideals = all_ideals(n)?;
    let covered = ideals
        .iter()
        .filter(|i| i.is_proper())
        .all(|i| fast.iter().any(|m| i.is_subset_of(m)));
    let forms = fast.iter().all(|m| m.full_component().is_some());
    Ok(Report::new(format!(
        "the maximal ideals of BC^{n} are exactly e1 A1 + e2 I2 and e1 I1 + e2 A2 with I maximal"
    ))
    .witness(json!({ "n": n, "lattice_size": ideals.len() }))
    .witness(&fast)
    .check(Check::boolean(format!("{} maximal ideals", 2 * n), fast.len() == 2 * n))
    .check(Check::boolean("each has one full idempotent component", forms))
    .check(Check::boolean("structural list equals exhaustive oracle", fast == oracle))
    .check(Check::boolean("every proper ideal lies in a listed one", covered)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    #[test]
    fn vanishing_ideal_at_point() {
        let x = FnAlgebra::new(["p", "q"]).unwrap();
        let m = x.vanishing_ideal("p").unwrap();
        assert_eq!(m, IdealSpec::new([1], [1]));
        assert!(m.contains(&BcVector::<f64>::zeros(2), 1e-12));
        let one: BcVector<f64> = x.identity();
        assert!(!m.contains(&one, 1e-12));
        assert_eq!(x.vanishing_ideal("r"), Err(Error::PointNotInX("r".into())));
        assert!(FnAlgebra::new(["p", "p"]).is_err());
    }

    #[test]
    fn maximal_ideals_of_bc() {
        let m = maximal_ideals(1);
        assert_eq!(m, vec![IdealSpec::new([1], []), IdealSpec::new([], [1])]);
        assert_eq!(maximal_ideals(2).len(), 4);
        assert!(maximal_ideals(3).iter().all(IdealSpec::is_proper));
    }

    #[test]
    fn oracle_small_cases() {
        let mut o1 = brute_force_maximal_oracle(1).unwrap();
        o1.sort();
        let mut m1 = maximal_ideals(1);
        m1.sort();
        assert_eq!(o1, m1);
        assert_eq!(all_ideals(1).unwrap().len(), 4);
        assert_eq!(all_ideals(2).unwrap().len(), 16);
        assert!(!brute_force_maximal_oracle(2).unwrap().contains(&IdealSpec::full()));
        assert!(all_ideals(5).is_err());
    }

    #[test]
    fn maximality() {
        assert_eq!(is_maximal(&IdealSpec::new([1], [1]), 1), Ok(false));
        assert!(IdealSpec::new([1], [1]).is_subset_of(&IdealSpec::new([1], [])));
        assert_eq!(is_maximal(&IdealSpec::new([1], []), 1), Ok(true));
        assert_eq!(is_maximal(&IdealSpec::zero_ideal(1), 1), Ok(false));
        assert_eq!(is_maximal(&IdealSpec::full(), 1), Err(Error::NotProper));
        assert!(matches!(
            is_maximal(&IdealSpec::new([3], []), 2),
            Err(Error::CoordinateOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn sampled_ideal_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let alg = PointwiseAlgebra::new(3);
        for spec in all_ideals(3).unwrap() {
            let r = check_ideal(&alg, &spec, 50, &mut rng, 1e-12).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(check_algebra_axioms(&PointwiseAlgebra::new(3), 200, &mut rng, 1e-12).passed());
        let x = FnAlgebra::new(["a", "b"]).unwrap();
        assert!(check_algebra_axioms(&x, 200, &mut rng, 1e-12).passed());
        assert!(check_algebra_axioms(&BicomplexRing, 200, &mut rng, 1e-12).passed());
    }

    #[test]
    fn division_spectra() {
        let x = DivisionAlgebraElem::new(Side::E1, c(2.0));
        let s = division_spectrum(&x);
        for r in [0.0, 1e3, 1e6] {
            let l = Bicomplex::from_idempotent(c(2.0), c(r)).unwrap();
            assert!(s.contains(&l, 1e-10));
            assert!(x.in_spectrum_direct(&l, 1e-10));
        }
        assert!(!s.contains(&Bicomplex::from_idempotent(c(3.0), c(0.0)).unwrap(), 1e-10));
        let far = s.member_beyond(1e6).unwrap();
        assert!(far.z2().norm() > 1e6);
        assert!(s.contains(&far, 1e-10));

        let y = DivisionAlgebraElem::new(Side::E2, Complex::new(0.0, 1.0));
        let far = y.spectrum().member_beyond(1e9).unwrap();
        assert!(far.z1().norm() > 1e9);
        assert!(y.spectrum().contains(&far, 1e-10));
        let inv = y.inverse(1e-12).unwrap();
        assert!((inv.to_bicomplex() * y.to_bicomplex()).max_abs_diff(&Bicomplex::e2()) < 1e-15);
    }

    #[test]
    fn not_division() {
        let w = not_division_algebra_witness::<f64>(1).unwrap();
        assert_eq!(w.element.entries()[0], Bicomplex::e1());
        assert_eq!(w.annihilator.entries()[0], Bicomplex::e2());
        assert!(w.passed());
        assert!(not_division_algebra_witness::<f64>(4).unwrap().report().passed());
    }

    #[test]
    fn unbounded_spectrum_demo_passes() {
        for side in [Side::E1, Side::E2] {
            let x = DivisionAlgebraElem::new(side, Complex::new(0.3, -2.0));
            let r = spectrum_unbounded_demo(&x, 1e9, 1e-8);
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn maximal_forms_demo_passes() {
        for n in 1..=4 {
            assert!(maximal_ideal_forms_demo(n).unwrap().passed());
        }
        assert!(maximal_ideal_forms_demo(5).is_err());
    }

}
