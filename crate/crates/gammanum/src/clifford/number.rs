//! The gamma-number value type: a dense coefficient vector over basis blades.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::context::{AlgebraContext, BladeMask, ContextSpec};
use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

/// Element of a Clifford algebra: `Σ_A u_A e^A` over all `2^n` blades.
#[derive(Clone)]
pub struct GammaNumber<T: Real> {
    ctx: AlgebraContext,
    coeffs: Vec<Cx<T>>,
}

impl<T: Real> GammaNumber<T> {
    /// The zero element.
    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self {
            ctx: ctx.clone(),
            coeffs: vec![Cx::zero(); ctx.dim()],
        }
    }

    /// The unit `e`.
    pub fn one(ctx: &AlgebraContext) -> Self {
        Self::scalar(ctx, Cx::one())
    }

    /// Multiple of the unit.
    pub fn scalar(ctx: &AlgebraContext, c: Cx<T>) -> Self {
        let mut z = Self::zero(ctx);
        z.coeffs[0] = c;
        z.pin_real();
        z
    }

    /// A single basis blade with coefficient one.
    ///
    /// # Panics
    ///
    /// Panics if `mask` is not a blade of `ctx`.
    pub fn blade(ctx: &AlgebraContext, mask: BladeMask) -> Self {
        assert!(ctx.contains(mask), "blade mask {} out of range for n = {}", mask.0, ctx.n());
        let mut z = Self::zero(ctx);
        z.coeffs[mask.0 as usize] = Cx::one();
        z
    }

    /// Basis blade named by its generator digits, e.g. `"012"` for `e^{012}`.
    ///
    /// # Panics
    ///
    /// Panics on malformed digits; intended for literal construction.
    pub fn named(ctx: &AlgebraContext, digits: &str) -> Self {
        let mask = BladeMask::parse(digits).expect("valid blade digits");
        Self::blade(ctx, mask)
    }

    /// Generator `e^i`.
    pub fn generator(ctx: &AlgebraContext, i: usize) -> Self {
        assert!(i < ctx.n(), "generator index {i} out of range");
        Self::blade(ctx, BladeMask(1 << i))
    }

    /// Builds a value from a full coefficient vector, validating length and realness.
    pub fn from_coeffs(ctx: &AlgebraContext, coeffs: Vec<Cx<T>>) -> Result<Self> {
        if coeffs.len() != ctx.dim() {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients, got {}",
                ctx.dim(),
                coeffs.len()
            )));
        }
        let v = Self { ctx: ctx.clone(), coeffs };
        v.check_real()?;
        Ok(v)
    }

    /// Builds a value from real coefficients.
    pub fn from_real_coeffs(ctx: &AlgebraContext, coeffs: &[T]) -> Result<Self> {
        Self::from_coeffs(ctx, coeffs.iter().map(|&r| Cx::new(r, T::zero())).collect())
    }

    /// Algebra this value belongs to.
    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// Coefficients indexed by blade mask.
    pub fn coeffs(&self) -> &[Cx<T>] {
        &self.coeffs
    }

    /// Coefficient of one blade.
    pub fn coeff(&self, mask: BladeMask) -> Cx<T> {
        self.coeffs[mask.0 as usize]
    }

    /// Coefficient of the unit `e`.
    pub fn scalar_part(&self) -> Cx<T> {
        self.coeffs[0]
    }

    /// Sets one coefficient, returning the modified value.
    pub fn with_coeff(mut self, mask: BladeMask, c: Cx<T>) -> Self {
        self.coeffs[mask.0 as usize] = c;
        self.pin_real();
        self
    }

    /// Errors if a real-context value carries an imaginary part above tolerance.
    pub fn check_real(&self) -> Result<()> {
        if !self.ctx.is_real() {
            return Ok(());
        }
        let tol = self.ctx.tolerance();
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.im.abs().as_f64() > tol {
                return Err(Error::RealViolation {
                    mask: mask as u32,
                    im: c.im.as_f64(),
                });
            }
        }
        Ok(())
    }

    fn pin_real(&mut self) {
        if self.ctx.is_real() {
            let tol = self.ctx.tolerance().max(1e-6);
            for c in &mut self.coeffs {
                assert!(
                    c.im.abs().as_f64() <= tol * (T::one() + c.re.abs()).as_f64(),
                    "imaginary coefficient {} in a real context",
                    c.im
                );
                c.im = T::zero();
            }
        }
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert!(self.ctx == other.ctx, "gamma-number operands from different contexts");
    }

    /// Product with context checking.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let dim = self.ctx.dim();
        let mut out = vec![Cx::zero(); dim];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let p = ca * cb;
                if self.ctx.sign(a, b) > 0 {
                    out[a ^ b] += p;
                } else {
                    out[a ^ b] -= p;
                }
            }
        }
        Self {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    /// Multiplies every coefficient by a complex scalar.
    ///
    /// # Panics
    ///
    /// Panics if the context is real and the scalar has a nonzero imaginary part.
    pub fn scale(&self, c: Cx<T>) -> Self {
        let mut v = Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        };
        v.pin_real();
        v
    }

    /// Multiplies every coefficient by a real scalar.
    pub fn scale_re(&self, r: T) -> Self {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|&x| x * r).collect(),
        }
    }

    /// Multiplication by the imaginary unit (complex contexts only).
    pub fn times_i(&self) -> Self {
        self.scale(Cx::new(T::zero(), T::one()))
    }

    /// Commutator `UV − VU`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Anticommutator `UV + VU`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// `U^k` for a non-negative integer power.
    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Grade projection `π_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.ctx.n() {
            return Err(Error::GradeOutOfRange { k, n: self.ctx.n() });
        }
        Ok(self.filter(|m| m.grade() == k))
    }

    /// Grade projection for a statically valid grade.
    ///
    /// # Panics
    ///
    /// Panics if `k` exceeds the dimension.
    pub fn grade(&self, k: usize) -> Self {
        self.grade_project(k).expect("grade in range")
    }

    /// Keeps coefficients whose blade satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(BladeMask) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| if keep(BladeMask(m as u8)) { c } else { Cx::zero() })
            .collect();
        Self {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Even and odd parts.
    pub fn even_odd_split(&self) -> (Self, Self) {
        (self.filter(|m| m.grade() % 2 == 0), self.filter(|m| m.grade() % 2 == 1))
    }

    /// Even part.
    pub fn even(&self) -> Self {
        self.even_odd_split().0
    }

    /// Odd part.
    pub fn odd(&self) -> Self {
        self.even_odd_split().1
    }

    fn map_blades(&self, f: impl Fn(BladeMask, Cx<T>) -> Cx<T>) -> Self {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| f(BladeMask(m as u8), c))
                .collect(),
        }
    }

    /// Reversion: grade-k blades pick up `(−1)^{k(k−1)/2}`.
    pub fn reverse(&self) -> Self {
        self.map_blades(|m, c| if (m.grade() / 2) % 2 == 1 { -c } else { c })
    }

    /// Reversion combined with complex conjugation of coefficients.
    pub fn star(&self) -> Self {
        self.map_blades(|m, c| {
            let c = c.conj();
            if (m.grade() / 2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Hermitian conjugation `e^0 U^* e^0` (Minkowski only).
    pub fn dagger(&self) -> Result<Self> {
        if !self.ctx.is_minkowski() {
            return Err(Error::NotMinkowski);
        }
        let e0 = Self::generator(&self.ctx, 0);
        Ok(&(&e0 * &self.star()) * &e0)
    }

    /// Complex conjugation of coefficients only.
    pub fn conj(&self) -> Self {
        self.map_blades(|_, c| c.conj())
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> T {
        self.coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    /// Sum of coefficient moduli (bounds the operator norm in every representation
    /// where blades act unitarily).
    pub fn l1_norm(&self) -> T {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn l2_norm(&self) -> T {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<T>().sqrt()
    }

    /// Hermitian coefficient inner product `Σ conj(u_A) v_A`.
    pub fn inner(&self, other: &Self) -> Cx<T> {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest coefficient-wise difference.
    pub fn distance(&self, other: &Self) -> T {
        self.assert_same_ctx(other);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Coefficient-wise equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.ctx == other.ctx && self.distance(other).as_f64() <= tol
    }

    /// Coefficient-wise equality within the context tolerance.
    pub fn approx_eq_default(&self, other: &Self) -> bool {
        self.approx_eq(other, self.ctx.tolerance())
    }

    /// Whether every coefficient is within `tol` of zero.
    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.max_norm().as_f64() <= tol
    }

    /// Whether all coefficients are real within `tol`.
    pub fn is_real_within(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.im.abs().as_f64() <= tol)
    }

    /// Same coefficients moved into another context of equal dimension and signature.
    pub fn in_context(&self, ctx: &AlgebraContext) -> Result<Self> {
        if ctx.signature() != self.ctx.signature() {
            return Err(Error::ContextMismatch);
        }
        Self::from_coeffs(ctx, self.coeffs.clone())
    }

    /// Converts the scalar type.
    pub fn cast<U: Real>(&self) -> GammaNumber<U> {
        GammaNumber {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Complex::new(U::lit(c.re.as_f64()), U::lit(c.im.as_f64())))
                .collect(),
        }
    }

    /// Nonzero coefficients as serialization records.
    pub fn to_records(&self) -> Vec<CoeffRecord> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| CoeffRecord {
                mask: m as u32,
                re: c.re.as_f64(),
                im: c.im.as_f64(),
            })
            .collect()
    }

    /// Parses serialization records, checking mask bounds and realness.
    pub fn from_records(ctx: &AlgebraContext, records: &[CoeffRecord]) -> Result<Self> {
        let mut coeffs = vec![Cx::<T>::zero(); ctx.dim()];
        for r in records {
            if r.mask as usize >= ctx.dim() {
                return Err(Error::InvalidMask { mask: r.mask, n: ctx.n() });
            }
            if !(r.re.is_finite() && r.im.is_finite()) {
                return Err(Error::InvalidInput(format!("non-finite coefficient on blade {}", r.mask)));
            }
            coeffs[r.mask as usize] += Complex::new(T::lit(r.re), T::lit(r.im));
        }
        Self::from_coeffs(ctx, coeffs)
    }
}

/// One nonzero coefficient in serialized form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffRecord {
    pub mask: u32,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// Self-describing serialized gamma-number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaDocument {
    pub context: ContextSpec,
    pub coeffs: Vec<CoeffRecord>,
}

impl<T: Real> Serialize for GammaNumber<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GammaDocument {
            context: self.ctx.spec(),
            coeffs: self.to_records(),
        }
        .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for GammaNumber<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GammaDocument::deserialize(d)?;
        let ctx = if doc.context.n == 4 && doc.context.signature == [1, -1, -1, -1] {
            match doc.context.field {
                super::context::Field::Complex => AlgebraContext::minkowski(),
                super::context::Field::Real => AlgebraContext::minkowski_real(),
            }
        } else {
            AlgebraContext::from_spec(&doc.context).map_err(serde::de::Error::custom)?
        };
        Self::from_records(&ctx, &doc.coeffs).map_err(serde::de::Error::custom)
    }
}

impl<T: Real> PartialEq for GammaNumber<T> {
    /// Equality within the context tolerance.
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq_default(other)
    }
}

impl<T: Real> fmt::Debug for GammaNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaNumber({self})")
    }
}

impl<T: Real> fmt::Display for GammaNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im.is_zero() {
                write!(f, "{}", c.re)?;
            } else if c.re.is_zero() {
                write!(f, "{}i", c.im)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            write!(f, "·{}", BladeMask(m as u8))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Real> Mul for &GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn mul(self, rhs: Self) -> GammaNumber<T> {
        self.assert_same_ctx(rhs);
        self.mul_unchecked(rhs)
    }
}

impl<T: Real> Mul for GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn mul(self, rhs: Self) -> GammaNumber<T> {
        &self * &rhs
    }
}

impl<T: Real> Mul<T> for &GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn mul(self, rhs: T) -> GammaNumber<T> {
        self.scale_re(rhs)
    }
}

impl<T: Real> Mul<T> for GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn mul(self, rhs: T) -> GammaNumber<T> {
        self.scale_re(rhs)
    }
}

impl<T: Real> Add for &GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn add(self, rhs: Self) -> GammaNumber<T> {
        self.assert_same_ctx(rhs);
        GammaNumber {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Real> Add for GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn add(self, rhs: Self) -> GammaNumber<T> {
        &self + &rhs
    }
}

impl<T: Real> Sub for &GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn sub(self, rhs: Self) -> GammaNumber<T> {
        self.assert_same_ctx(rhs);
        GammaNumber {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Real> Sub for GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn sub(self, rhs: Self) -> GammaNumber<T> {
        &self - &rhs
    }
}

impl<T: Real> AddAssign<&GammaNumber<T>> for GammaNumber<T> {
    fn add_assign(&mut self, rhs: &GammaNumber<T>) {
        self.assert_same_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<T: Real> SubAssign<&GammaNumber<T>> for GammaNumber<T> {
    fn sub_assign(&mut self, rhs: &GammaNumber<T>) {
        self.assert_same_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl<T: Real> Neg for &GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn neg(self) -> GammaNumber<T> {
        GammaNumber {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Real> Neg for GammaNumber<T> {
    type Output = GammaNumber<T>;
    fn neg(self) -> GammaNumber<T> {
        -&self
    }
}
