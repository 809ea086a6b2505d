//! The ring `BC`: its homomorphisms, its four ideals `{0}`, `I1 = e1 BC`,
//! `I2 = e2 BC`, `BC`, the quotient fields `BC/I1 ≅ BC/I2 ≅ C(i)`, and
//! multiplicative functionals on bicomplex algebras.

use num_complex::Complex;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::algebra::BcAlgebra;
use crate::error::{Error, Result};
use crate::number::{Bicomplex, Conjugation};
use crate::report::{Check, Report};
use crate::sample;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingHom {
    Identity,
    Dagger1,
    Dagger2,
    Dagger3,
    Zero,
    /// `Z ↦ e1 Z`
    ProjE1,
    /// `Z ↦ e2 Z`
    ProjE2,
    /// `z + jw ↦ z + iw`, onto `C(i)`
    QuotPlus,
    /// `z + jw ↦ z - iw`, onto `C(i)`
    QuotMinus,
}

impl RingHom {
    pub const ALL: [RingHom; 9] = [
        Self::Identity,
        Self::Dagger1,
        Self::Dagger2,
        Self::Dagger3,
        Self::Zero,
        Self::ProjE1,
        Self::ProjE2,
        Self::QuotPlus,
        Self::QuotMinus,
    ];

    pub fn to_complex(self) -> bool {
        matches!(self, Self::QuotPlus | Self::QuotMinus)
    }

    pub fn apply<T: Scalar>(self, z: &Bicomplex<T>) -> HomValue<T> {
        match self {
            Self::Identity => HomValue::Bicomplex(*z),
            Self::Dagger1 => HomValue::Bicomplex(z.conj(Conjugation::Dagger1)),
            Self::Dagger2 => HomValue::Bicomplex(z.conj(Conjugation::Dagger2)),
            Self::Dagger3 => HomValue::Bicomplex(z.conj(Conjugation::Dagger3)),
            Self::Zero => HomValue::Bicomplex(Bicomplex::zero()),
            Self::ProjE1 => HomValue::Bicomplex(Bicomplex::e1() * *z),
            Self::ProjE2 => HomValue::Bicomplex(Bicomplex::e2() * *z),
            Self::QuotPlus => HomValue::Complex(z.z2()),
            Self::QuotMinus => HomValue::Complex(z.z1()),
        }
    }

    pub fn kernel(self) -> BcIdeal {
        match self {
            Self::Identity | Self::Dagger1 | Self::Dagger2 | Self::Dagger3 => BcIdeal::Zero,
            Self::Zero => BcIdeal::Full,
            Self::ProjE1 | Self::QuotMinus => BcIdeal::I2,
            Self::ProjE2 | Self::QuotPlus => BcIdeal::I1,
        }
    }
}

/// Image of a ring homomorphism: in `BC` or in `C(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar + Serialize"))]
pub enum HomValue<T> {
    Bicomplex(Bicomplex<T>),
    Complex(Complex<T>),
}

impl<T: Scalar> HomValue<T> {
    pub fn abs(&self) -> T {
        match self {
            Self::Bicomplex(b) => b.abs(),
            Self::Complex(c) => c.norm(),
        }
    }

    /// `self - other`; `None` when the codomains differ.
    pub fn sub(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Self::Bicomplex(a), Self::Bicomplex(b)) => Some(Self::Bicomplex(*a - *b)),
            (Self::Complex(a), Self::Complex(b)) => Some(Self::Complex(*a - *b)),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Self::Bicomplex(a), Self::Bicomplex(b)) => Some(Self::Bicomplex(*a + *b)),
            (Self::Complex(a), Self::Complex(b)) => Some(Self::Complex(*a + *b)),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Self::Bicomplex(a), Self::Bicomplex(b)) => Some(Self::Bicomplex(*a * *b)),
            (Self::Complex(a), Self::Complex(b)) => Some(Self::Complex(*a * *b)),
            _ => None,
        }
    }

    /// `v² = v` within `tol`.
    pub fn is_idempotent(&self, tol: T) -> bool {
        self.mul(self)
            .and_then(|sq| sq.sub(self))
            .is_some_and(|d| d.abs() <= tol)
    }
}

/// Worst relative violation of additivity and multiplicativity of `h` over
/// `samples` random pairs.
pub fn hom_law_residual<T: Scalar, R: Rng + ?Sized>(h: RingHom, samples: usize, rng: &mut R) -> T {
    let mut worst = T::zero();
    for _ in 0..samples {
        let a: Bicomplex<T> = sample::bicomplex(rng);
        let b: Bicomplex<T> = sample::bicomplex(rng);
        let (fa, fb) = (h.apply(&a), h.apply(&b));
        let sum = h.apply(&(a + b)).sub(&fa.add(&fb).expect("same codomain"));
        let prod = h.apply(&(a * b)).sub(&fa.mul(&fb).expect("same codomain"));
        for d in [sum, prod].into_iter().flatten() {
            worst = worst.max(d.abs());
        }
    }
    worst
}

/// The ideals of `BC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BcIdeal {
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "full")]
    Full,
    /// `e1 BC`
    I1,
    /// `e2 BC`
    I2,
}

impl BcIdeal {
    pub const ALL: [BcIdeal; 4] = [Self::Zero, Self::I1, Self::I2, Self::Full];

    pub fn contains<T: Scalar>(self, z: &Bicomplex<T>, tol: T) -> bool {
        let cutoff = tol * T::one().max(z.abs());
        match self {
            Self::Zero => z.abs() <= cutoff,
            Self::Full => true,
            Self::I1 => z.z2().norm() <= cutoff,
            Self::I2 => z.z1().norm() <= cutoff,
        }
    }

    pub fn is_proper(self) -> bool {
        self != Self::Full
    }

    /// Inclusion `self ⊆ other` in the lattice `{0} < I1, I2 < BC`.
    pub fn is_subset_of(self, other: BcIdeal) -> bool {
        self == other || self == Self::Zero || other == Self::Full
    }

    /// Proper and contained in no other proper ideal.
    pub fn is_maximal(self) -> bool {
        self.is_proper()
            && !Self::ALL
                .iter()
                .any(|&j| j != self && j.is_proper() && self.is_subset_of(j))
    }

    pub fn generator<T: Scalar>(self) -> Bicomplex<T> {
        match self {
            Self::Zero => Bicomplex::zero(),
            Self::Full => Bicomplex::one(),
            Self::I1 => Bicomplex::e1(),
            Self::I2 => Bicomplex::e2(),
        }
    }

    /// Complex coordinate of the coset `Z + I` in `BC/I ≅ C(i)`.
    pub fn quotient_rep<T: Scalar>(self, z: &Bicomplex<T>) -> Result<Complex<T>> {
        match self {
            Self::I1 => Ok(z.z2()),
            Self::I2 => Ok(z.z1()),
            Self::Zero => Err(Error::NoQuotient("{0}")),
            Self::Full => Err(Error::NoQuotient("BC")),
        }
    }

    /// Canonical coset representative `e2 c` (for `I1`) or `e1 c` (for `I2`).
    pub fn embed_rep<T: Scalar>(self, c: Complex<T>) -> Result<Bicomplex<T>> {
        match self {
            Self::I1 => Ok(Bicomplex::e2_times(c)),
            Self::I2 => Ok(Bicomplex::e1_times(c)),
            Self::Zero => Err(Error::NoQuotient("{0}")),
            Self::Full => Err(Error::NoQuotient("BC")),
        }
    }

    /// Some `W` with `ZW - 1 ∈ I`, if the coset of `Z` is a unit of `BC/I`.
    pub fn coset_inverse<T: Scalar>(self, z: &Bicomplex<T>, tol: T) -> Option<Bicomplex<T>> {
        match self {
            Self::Zero => z.inverse(tol).ok(),
            Self::Full => None,
            Self::I1 | Self::I2 => {
                let c = self.quotient_rep(z).ok()?;
                if c.norm() <= tol * T::one().max(z.abs()) {
                    None
                } else {
                    self.embed_rep(c.inv()).ok()
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar + Serialize"))]
pub struct QuotientFieldOutcome<T> {
    pub ideal: BcIdeal,
    pub is_field: bool,
    /// Nonzero coset without an inverse, when one was found.
    pub witness: Option<Bicomplex<T>>,
    /// Largest `|rep(ZW) - 1|` over the checked cosets.
    pub max_residual: T,
    pub cosets_checked: usize,
}

/// Checks that every sampled nonzero coset of `BC/I` has a constructive inverse.
/// The zero ring `BC/BC` is not a field.
pub fn quotient_is_field<T: Scalar, R: Rng + ?Sized>(
    ideal: BcIdeal,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> QuotientFieldOutcome<T> {
    let mut out = QuotientFieldOutcome {
        ideal,
        is_field: ideal.is_proper(),
        witness: None,
        max_residual: T::zero(),
        cosets_checked: 0,
    };
    if !ideal.is_proper() {
        return out;
    }
    let fixed = [
        Bicomplex::e1(),
        Bicomplex::e2(),
        Bicomplex::one(),
        Bicomplex::j(),
        Bicomplex::k(),
    ];
    let candidates = fixed
        .into_iter()
        .chain((0..samples).map(|_| sample::bicomplex(rng)));
    let one = Bicomplex::one();
    for z in candidates {
        if ideal.contains(&z, tol) {
            continue;
        }
        out.cosets_checked += 1;
        match ideal.coset_inverse(&z, tol) {
            None => {
                out.is_field = false;
                out.witness = Some(z);
                return out;
            }
            Some(w) => {
                let d = z * w - one;
                let residual = match ideal {
                    BcIdeal::Zero => d.abs(),
                    _ => ideal.quotient_rep(&d).map(|c| c.norm()).unwrap_or(T::infinity()),
                };
                out.max_residual = out.max_residual.max(residual);
                if !ideal.contains(&d, tol) {
                    out.is_field = false;
                    out.witness = Some(z);
                    return out;
                }
            }
        }
    }
    out
}

/// The four idempotents of `BC`, from `z_l² = z_l ⇔ z_l ∈ {0, 1}` per coordinate.
pub fn idempotents<T: Scalar>() -> Vec<Bicomplex<T>> {
    let bits = [Complex::new(T::zero(), T::zero()), Complex::new(T::one(), T::zero())];
    bits.iter()
        .flat_map(|a| bits.iter().map(move |b| Bicomplex::recompose(*a, *b)))
        .collect()
}

type ElementMap<'a, T, E> = Box<dyn Fn(&E) -> Bicomplex<T> + 'a>;

/// A function `A → BC` on a bicomplex algebra, with the algebra's identity.
pub struct MultFunctional<'a, T: Scalar, A: BcAlgebra<T>> {
    pub name: String,
    pub algebra: &'a A,
    pub map: ElementMap<'a, T, A::Element>,
}

impl<'a, T: Scalar, A: BcAlgebra<T>> MultFunctional<'a, T, A> {
    pub fn new(
        name: impl Into<String>,
        algebra: &'a A,
        map: impl Fn(&A::Element) -> Bicomplex<T> + 'a,
    ) -> Self {
        Self {
            name: name.into(),
            algebra,
            map: Box::new(map),
        }
    }

    pub fn apply(&self, x: &A::Element) -> Bicomplex<T> {
        (self.map)(x)
    }
}

/// Checks `f(xy) = f(x) f(y)` on random pairs and `f(e) = 1`.
pub fn check_mult_functional<T: Scalar, A: BcAlgebra<T>, R: Rng + ?Sized>(
    f: &MultFunctional<'_, T, A>,
    samples: usize,
    rng: &mut R,
    tol: T,
) -> Report {
    let alg = f.algebra;
    let mut worst = T::zero();
    for _ in 0..samples {
        let x = alg.random_element(rng);
        let y = alg.random_element(rng);
        let lhs = f.apply(&alg.mul(&x, &y));
        let rhs = f.apply(&x) * f.apply(&y);
        let scale = T::one().max(lhs.abs()).max(rhs.abs());
        worst = worst.max((lhs - rhs).abs() / scale);
    }
    let unit = (f.apply(&alg.identity()) - Bicomplex::one()).abs();
    let to_f64 = |t: T| t.to_f64().unwrap_or(f64::NAN);
    Report::new(format!("{} is a multiplicative functional", f.name))
        .check(Check::new("f(xy) = f(x)f(y)", worst <= tol, to_f64(worst)))
        .check(Check::new("f(e) = 1", unit <= tol, to_f64(unit)))
}

/// The identity functional on `BC` has kernel `{0}`, which sits strictly
/// inside the proper ideal `I1`: kernels of multiplicative functionals need
/// not be maximal.
pub fn kernel_not_maximal_demo<T: Scalar + Serialize>(tol: T) -> Report {
    let witness: Bicomplex<T> = Bicomplex::e1();
    let kernel = RingHom::Identity.kernel();
    let superset = BcIdeal::I1;
    let identity_fixes_one = RingHom::Identity
        .apply(&Bicomplex::<T>::one())
        .sub(&HomValue::Bicomplex(Bicomplex::one()))
        .map_or(T::infinity(), |d| d.abs());
    let f64_of = |t: T| t.to_f64().unwrap_or(f64::NAN);
    Report::new("the kernel of a nonzero multiplicative functional need not be a maximal ideal")
        .witness(json!({ "functional": RingHom::Identity, "kernel": kernel, "superset": superset }))
        .witness(json!({ "witness": witness, "idempotent": witness.to_idempotent_string() }))
        .check(Check::new("f(1) = 1", identity_fixes_one <= tol, f64_of(identity_fixes_one)))
        .check(Check::boolean("ker f = {0}", kernel == BcIdeal::Zero))
        .check(Check::new(
            "witness e1 lies in I1",
            superset.contains(&witness, tol),
            f64_of(witness.z2().norm()),
        ))
        .check(Check::new(
            "witness e1 is not in ker f",
            !kernel.contains(&witness, tol),
            f64_of(witness.abs()),
        ))
        .check(Check::boolean("1 is not in I1, so I1 is proper", !superset.contains(&Bicomplex::<T>::one(), tol)))
        .check(Check::boolean("witness is a zero divisor", witness.is_zero_divisor(tol)))
        .check(Check::boolean(
            "{0} is strictly contained in I1, hence not maximal",
            kernel.is_subset_of(superset) && kernel != superset && !kernel.is_maximal(),
        ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar + Serialize"))]
pub struct InvertibleInIdealWitness<T> {
    pub z: Bicomplex<T>,
    /// `e1 / z1`, the inverse of `Z` relative to the identity `e1` of `I1`.
    pub w: Bicomplex<T>,
    /// `|ZW - e1|`
    pub product_residual: T,
    pub w_in_ideal: bool,
    /// `Z` has no inverse in `BC`.
    pub not_invertible_in_bc: bool,
}

impl<T: Scalar + Serialize> InvertibleInIdealWitness<T> {
    pub fn passed(&self, tol: T) -> bool {
        self.product_residual <= tol && self.w_in_ideal && self.not_invertible_in_bc
    }

    pub fn report(&self, tol: T) -> Report {
        let r = self.product_residual.to_f64().unwrap_or(f64::NAN);
        Report::new("a proper ideal of BC contains elements invertible relative to its own identity")
            .witness(json!({ "z": self.z, "w": self.w, "ideal": BcIdeal::I1 }))
            .check(Check::new("Z W = e1", self.product_residual <= tol, r))
            .check(Check::boolean("W lies in I1", self.w_in_ideal))
            .check(Check::boolean("Z is not invertible in BC", self.not_invertible_in_bc))
    }
}

/// For `Z = e1 z1 ∈ I1` with `z1 ≠ 0`, builds `W = e1/z1` with `ZW = e1`.
pub fn invertible_inside_ideal_demo<T: Scalar>(
    z: &Bicomplex<T>,
    tol: T,
) -> Result<InvertibleInIdealWitness<T>> {
    if !BcIdeal::I1.contains(z, tol) {
        return Err(Error::Invalid(format!("{z} is not in I1")));
    }
    let z1 = z.z1();
    if z1.norm() <= tol * T::one().max(z.abs()) {
        return Err(Error::ZeroComponent(1));
    }
    let w = Bicomplex::e1_times(z1.inv());
    let product_residual = (*z * w - Bicomplex::e1()).abs();
    Ok(InvertibleInIdealWitness {
        z: *z,
        w,
        product_residual,
        w_in_ideal: BcIdeal::I1.contains(&w, tol),
        not_invertible_in_bc: matches!(z.inverse(tol), Err(Error::NotInvertible { .. })),
    })
}
