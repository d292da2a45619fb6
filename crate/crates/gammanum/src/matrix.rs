//! Dirac representation of the Minkowski algebra as 4×4 complex matrices,
//! with trace, determinant, exponent, inverse and eigen-numbers.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{AlgebraContext, BladeMask, GammaNumber};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::scalar::{Cx, Real};

/// Dense 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4<T: Real> {
    pub m: [[Cx<T>; 4]; 4],
}

impl<T: Real> Mat4<T> {
    pub fn zero() -> Self {
        Self { m: [[Cx::zero(); 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diag([Cx::one(); 4])
    }

    pub fn diag(d: [Cx<T>; 4]) -> Self {
        let mut z = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            z.m[i][i] = v;
        }
        z
    }

    /// Diagonal matrix with real entries.
    pub fn diag_re(d: [f64; 4]) -> Self {
        Self::diag(d.map(|x| Complex::new(T::lit(x), T::zero())))
    }

    pub fn scale(&self, c: Cx<T>) -> Self {
        let mut z = *self;
        z.m.iter_mut().flatten().for_each(|x| *x *= c);
        z
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut z = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                z.m[i][j] = self.m[j][i].conj();
            }
        }
        z
    }

    pub fn trace(&self) -> Cx<T> {
        (0..4).map(|i| self.m[i][i]).sum()
    }

    pub fn det(&self) -> Cx<T> {
        linalg::det_complex(&self.to_rows())
    }

    /// Inverse by Gauss-Jordan elimination; `None` when numerically singular.
    pub fn inverse(&self) -> Option<Self> {
        linalg::inverse_complex(&self.to_rows()).map(|r| Self::from_rows(&r))
    }

    pub fn max_abs(&self) -> T {
        self.m.iter().flatten().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    /// Largest entry-wise difference.
    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).max_abs()
    }

    /// Column `j` as a 4-vector.
    pub fn column(&self, j: usize) -> [Cx<T>; 4] {
        [self.m[0][j], self.m[1][j], self.m[2][j], self.m[3][j]]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Cx<T>; 4]) -> [Cx<T>; 4] {
        let mut out = [Cx::zero(); 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.m[i][j] * v[j]).sum();
        }
        out
    }

    pub fn to_rows(&self) -> CMatrix<T> {
        self.m.iter().map(|r| r.to_vec()).collect()
    }

    pub fn from_rows(rows: &CMatrix<T>) -> Self {
        let mut z = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                z.m[i][j] = rows[i][j];
            }
        }
        z
    }

    /// Serialized form: 16 `(re, im)` pairs, row-major.
    pub fn to_pairs(&self) -> Vec<(f64, f64)> {
        self.m.iter().flatten().map(|c| (c.re.as_f64(), c.im.as_f64())).collect()
    }

    /// Parses 16 `(re, im)` pairs, row-major.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        if pairs.len() != 16 {
            return Err(Error::InvalidInput(format!("expected 16 matrix entries, got {}", pairs.len())));
        }
        let mut z = Self::zero();
        for (k, &(re, im)) in pairs.iter().enumerate() {
            z.m[k / 4][k % 4] = Complex::new(T::lit(re), T::lit(im));
        }
        Ok(z)
    }
}

impl<T: Real> Mul for Mat4<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut z = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.m[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..4 {
                    z.m[i][j] += a * rhs.m[k][j];
                }
            }
        }
        z
    }
}

impl<T: Real> Add for Mat4<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut z = self;
        for i in 0..4 {
            for j in 0..4 {
                z.m[i][j] += rhs.m[i][j];
            }
        }
        z
    }
}

impl<T: Real> Sub for Mat4<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut z = self;
        for i in 0..4 {
            for j in 0..4 {
                z.m[i][j] -= rhs.m[i][j];
            }
        }
        z
    }
}

/// Serializable matrix record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub entries: Vec<(f64, f64)>,
}

/// The four Dirac matrices `γ^0 = diag(σ^0, −σ^0)`, `γ^k = [[0, −σ^k], [σ^k, 0]]`.
pub fn gamma_matrices<T: Real>() -> [Mat4<T>; 4] {
    let o = Cx::<T>::zero();
    let l = Cx::<T>::one();
    let i = Complex::new(T::zero(), T::one());
    let sigma = [
        [[o, l], [l, o]],
        [[o, -i], [i, o]],
        [[l, o], [o, -l]],
    ];
    let g0 = Mat4::diag([l, l, -l, -l]);
    let mut out = [g0, Mat4::zero(), Mat4::zero(), Mat4::zero()];
    for (k, s) in sigma.iter().enumerate() {
        let mut g = Mat4::zero();
        for r in 0..2 {
            for c in 0..2 {
                g.m[r][c + 2] = -s[r][c];
                g.m[r + 2][c] = s[r][c];
            }
        }
        out[k + 1] = g;
    }
    out
}

/// Matrices of all 16 basis blades, indexed by mask.
pub fn blade_matrices<T: Real>() -> [Mat4<T>; 16] {
    let g = gamma_matrices::<T>();
    let mut out = [Mat4::identity(); 16];
    for (mask, slot) in out.iter_mut().enumerate() {
        let mut acc = Mat4::identity();
        for (i, gi) in g.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc * *gi;
            }
        }
        *slot = acc;
    }
    out
}

fn require_minkowski(ctx: &AlgebraContext) -> Result<()> {
    if ctx.is_minkowski() {
        Ok(())
    } else {
        Err(Error::NotMinkowski)
    }
}

/// Algebra homomorphism into 4×4 matrices.
pub fn to_matrix<T: Real>(u: &GammaNumber<T>) -> Result<Mat4<T>> {
    require_minkowski(u.ctx())?;
    let bm = blade_matrices::<T>();
    let mut acc = Mat4::zero();
    for (mask, &c) in u.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc + bm[mask].scale(c);
        }
    }
    Ok(acc)
}

/// Inverse of [`to_matrix`]: coefficient `A` is `tr(M · M_A^{-1}) / 4`, where
/// `M_A^{-1} = (e^A)^2 · M_A` since every blade squares to `±e`.
pub fn from_matrix<T: Real>(ctx: &AlgebraContext, m: &Mat4<T>) -> Result<GammaNumber<T>> {
    require_minkowski(ctx)?;
    let bm = blade_matrices::<T>();
    let quarter = T::lit(0.25);
    let coeffs = (0..16)
        .map(|a| {
            let s = T::lit(ctx.sign(a, a) as f64);
            (*m * bm[a]).trace() * (s * quarter)
        })
        .collect::<Vec<_>>();
    if ctx.is_real() {
        let tol = 1e-9 * (1.0 + m.max_abs().as_f64());
        if let Some((mask, c)) = coeffs.iter().enumerate().find(|(_, c)| c.im.abs().as_f64() > tol) {
            return Err(Error::RealViolation {
                mask: mask as u32,
                im: c.im.as_f64(),
            });
        }
        let real: Vec<Cx<T>> = coeffs.into_iter().map(|c| Complex::new(c.re, T::zero())).collect();
        return GammaNumber::from_coeffs(ctx, real);
    }
    GammaNumber::from_coeffs(ctx, coeffs)
}

/// Trace, computed intrinsically as `2^{n/2}` times the scalar coefficient
/// (4 in Minkowski).
pub fn trace<T: Real>(u: &GammaNumber<T>) -> Cx<T> {
    let d = T::lit((1usize << (u.ctx().n() / 2)) as f64);
    u.scalar_part() * d
}

/// Determinant of the matrix representative.
pub fn det<T: Real>(u: &GammaNumber<T>) -> Result<Cx<T>> {
    Ok(to_matrix(u)?.det())
}

/// Inverse via the matrix representative. Singular when
/// `|det| < 1e-10 × (max coefficient)^4`.
pub fn inverse<T: Real>(u: &GammaNumber<T>) -> Result<GammaNumber<T>> {
    let m = to_matrix(u)?;
    let d = m.det();
    let scale = u.max_norm().as_f64();
    if d.norm().as_f64() < 1e-10 * scale.powi(4) || scale == 0.0 {
        return Err(Error::Singular { det: d.norm().as_f64() });
    }
    let inv = m.inverse().ok_or(Error::Singular { det: d.norm().as_f64() })?;
    from_matrix(u.ctx(), &inv)
}

/// Exponent by scaling and squaring: halve until the coefficient L1 norm is
/// below 0.5, sum the Taylor series until a term's max-norm drops below 1e-16
/// (at most 64 terms), then square back.
pub fn exp<T: Real>(u: &GammaNumber<T>) -> GammaNumber<T> {
    let mut s = 0u32;
    let mut norm = u.l1_norm();
    let half = T::lit(0.5);
    while norm >= half && s < 200 {
        norm = norm * half;
        s += 1;
    }
    let x = u.scale_re(T::lit(0.5f64.powi(s as i32)));
    let mut sum = GammaNumber::one(u.ctx());
    let mut term = GammaNumber::one(u.ctx());
    let stop = T::lit(1e-16);
    for k in 1..=64u32 {
        term = (&term * &x).scale_re(T::one() / T::lit(k as f64));
        sum += &term;
        if term.max_norm() < stop {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Roots of `det(U − λe) = 0`: eigenvalues of the matrix representative, from
/// its characteristic polynomial.
pub fn eigen_numbers<T: Real>(u: &GammaNumber<T>) -> Result<Vec<Cx<T>>> {
    let m = to_matrix(u)?;
    let poly = linalg::characteristic_polynomial(&m.to_rows());
    Ok(linalg::polynomial_roots(&poly))
}

/// Gamma-number with matrix representative `diag(d)`.
pub fn diagonal<T: Real>(ctx: &AlgebraContext, d: [Cx<T>; 4]) -> Result<GammaNumber<T>> {
    from_matrix(ctx, &Mat4::diag(d))
}

/// Whether `to_matrix(dagger U)` equals the conjugate transpose of `to_matrix(U)`.
pub fn dagger_deviation<T: Real>(u: &GammaNumber<T>) -> Result<T> {
    let lhs = to_matrix(&u.dagger()?)?;
    let rhs = to_matrix(u)?.adjoint();
    Ok(lhs.distance(&rhs))
}

/// Blade `e^A` with its matrix, handy for diagnostics.
pub fn blade_matrix<T: Real>(mask: BladeMask) -> Mat4<T> {
    blade_matrices::<T>()[mask.0 as usize & 15]
}
