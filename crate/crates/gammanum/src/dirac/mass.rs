//! Mass terms `(m, N, K)` of the Dirac equation and their canonical forms.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::clifford::{pseudoscalar, AlgebraContext, CoeffRecord, GammaNumber};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{self, Mat4};
use crate::scalar::{Cx, Real};

/// Tolerance for the algebraic mass-term constraints.
pub const MASS_TOLERANCE: f64 = 1e-10;

/// Which equation variant a mass term belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MassVariant {
    /// `i∂̸Ψ − m(ΨN + e^5ΨK) = 0` with `N² + K² = e`.
    Complex,
    /// `∂̸Ψ + m(ΨN̂ + e^5ΨK̂) = 0` in the real algebra with `N̂² + K̂² = −e`.
    Real,
    /// Complex form with `m = 1` and `N² + K² = M²` for a diagonal mass matrix `M`.
    MultiMass,
}

/// The four canonical `(N, K)` families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CanonicalForm {
    I,
    II,
    III,
    IV,
}

/// Mass data of the Dirac equation. For the real variant `n` and `k` hold `N̂`, `K̂`.
#[derive(Clone, Debug, PartialEq)]
pub struct MassTerm<T: Real> {
    pub m: T,
    pub n: GammaNumber<T>,
    pub k: GammaNumber<T>,
    pub variant: MassVariant,
    /// `N` and `K` are each `αe + βP` with `P` hermitian and unitary.
    pub hermitian_unitary: bool,
}

fn half<T: Real>() -> T {
    T::lit(0.5)
}

/// Whether `u` is hermitian with at most two distinct eigenvalues, i.e. of the
/// form `αe + βP` with `P = P† = P^{-1}`.
fn is_alpha_beta_p<T: Real>(u: &GammaNumber<T>) -> bool {
    let Ok(d) = u.dagger() else { return false };
    if !d.approx_eq(u, T::tolerance(MASS_TOLERANCE)) {
        return false;
    }
    let Ok(m) = matrix::to_matrix(u) else { return false };
    let (ev, _) = linalg::hermitian_eigen(&m.to_rows());
    let mut distinct: Vec<f64> = Vec::new();
    for v in ev {
        let v = v.as_f64();
        if !distinct.iter().any(|d| (d - v).abs() < 1e-8) {
            distinct.push(v);
        }
    }
    distinct.len() <= 2
}

impl<T: Real> MassTerm<T> {
    /// Complex mass term; validates `[N, K] = 0` and `N² + K² = e`.
    pub fn new(m: T, n: GammaNumber<T>, k: GammaNumber<T>) -> Result<Self> {
        if !n.ctx().is_minkowski() || n.ctx().is_real() {
            return Err(Error::MassConstraint("complex mass terms live in the complex Minkowski algebra".into()));
        }
        if n.ctx() != k.ctx() {
            return Err(Error::ContextMismatch);
        }
        if m < T::zero() {
            return Err(Error::MassConstraint("mass must be nonnegative".into()));
        }
        let e = GammaNumber::one(n.ctx());
        let comm = n.commutator(&k).max_norm().as_f64();
        let unit = (&(&n * &n) + &(&k * &k)).distance(&e).as_f64();
        if comm > T::tolerance(MASS_TOLERANCE) || unit > T::tolerance(MASS_TOLERANCE) {
            return Err(Error::MassConstraint(format!(
                "[N,K] residual {comm:.3e}, N²+K²−e residual {unit:.3e}"
            )));
        }
        let hermitian_unitary = is_alpha_beta_p(&n) && is_alpha_beta_p(&k);
        Ok(Self {
            m,
            n,
            k,
            variant: MassVariant::Complex,
            hermitian_unitary,
        })
    }

    /// Real-variant mass term; validates `[N̂, K̂] = 0` and `N̂² + K̂² = −e` in the real algebra.
    pub fn real(m: T, n_hat: GammaNumber<T>, k_hat: GammaNumber<T>) -> Result<Self> {
        if !n_hat.ctx().is_minkowski() || !n_hat.ctx().is_real() {
            return Err(Error::MassConstraint("real mass terms live in the real Minkowski algebra".into()));
        }
        if n_hat.ctx() != k_hat.ctx() {
            return Err(Error::ContextMismatch);
        }
        let e = GammaNumber::one(n_hat.ctx());
        let comm = n_hat.commutator(&k_hat).max_norm().as_f64();
        let unit = (&(&n_hat * &n_hat) + &(&k_hat * &k_hat)).distance(&-&e).as_f64();
        if comm > T::tolerance(MASS_TOLERANCE) || unit > T::tolerance(MASS_TOLERANCE) {
            return Err(Error::MassConstraint(format!(
                "[N̂,K̂] residual {comm:.3e}, N̂²+K̂²+e residual {unit:.3e}"
            )));
        }
        Ok(Self {
            m,
            n: n_hat,
            k: k_hat,
            variant: MassVariant::Real,
            hermitian_unitary: false,
        })
    }

    /// Canonical form with angles `ξ`, `η` (`η` is ignored by forms I and II).
    pub fn canonical(form: CanonicalForm, m: T, xi: T, eta: T) -> Result<Self> {
        let ctx = AlgebraContext::minkowski();
        let e = GammaNumber::<T>::one(&ctx);
        let e0 = GammaNumber::named(&ctx, "0");
        let ie12 = GammaNumber::named(&ctx, "12").times_i();
        let ie012 = GammaNumber::named(&ctx, "012").times_i();
        let (n, k) = match form {
            CanonicalForm::I => (e.scale_re(xi.cos()), e.scale_re(xi.sin())),
            CanonicalForm::II => {
                let p = (&(&(&e + &e0) + &ie12) - &ie012).scale_re(half());
                (p.scale_re(xi.cos()), e0.scale_re(xi.sin()))
            }
            CanonicalForm::III => {
                let a = (&(&(&e.scale_re(T::lit(3.0)) + &e0) + &ie12) - &ie012).scale_re(T::lit(0.25));
                let b = (&(&(&e - &e0) - &ie12) + &ie012).scale_re(T::lit(0.25));
                (
                    &a.scale_re(xi.cos()) + &b.scale_re(eta.cos()),
                    &a.scale_re(xi.sin()) + &b.scale_re(eta.sin()),
                )
            }
            CanonicalForm::IV => {
                let a = (&e + &e0).scale_re(half());
                let b = (&e - &e0).scale_re(half());
                (
                    &a.scale_re(xi.cos()) + &b.scale_re(eta.cos()),
                    &a.scale_re(xi.sin()) + &b.scale_re(eta.sin()),
                )
            }
        };
        Self::new(m, n, k)
    }

    /// `N = cos ξ e^0`, `K = sin ξ e^0`: form IV with `η = ξ + π`, the odd case.
    pub fn electroweak(m: T, xi: T) -> Result<Self> {
        let ctx = AlgebraContext::minkowski();
        let e0 = GammaNumber::named(&ctx, "0");
        Self::new(m, e0.scale_re(xi.cos()), e0.scale_re(xi.sin()))
    }

    /// Real variant `N̂ = e^{012}`, `K̂ = 0`: the Hestenes equation `∂̸Ψ + mΨe^{012} = 0`.
    pub fn hestenes(m: T) -> Result<Self> {
        let ctx = AlgebraContext::minkowski_real();
        Self::real(m, GammaNumber::named(&ctx, "012"), GammaNumber::zero(&ctx))
    }

    /// Multi-mass term `N = Σ m_l s^{(l)}`, `K = 0`, `m = 1`.
    pub fn multi_mass(masses: [T; 4]) -> Result<Self> {
        if masses.iter().any(|&m| m < T::zero()) {
            return Err(Error::MassConstraint("masses must be nonnegative".into()));
        }
        let ctx = AlgebraContext::minkowski();
        let n = matrix::diagonal(&ctx, masses.map(|m| Complex::new(m, T::zero())))?;
        let k = GammaNumber::zero(&ctx);
        let m2 = matrix::diagonal(&ctx, masses.map(|m| Complex::new(m * m, T::zero())))?;
        let unit = (&(&n * &n) + &(&k * &k)).distance(&m2).as_f64();
        if unit > T::tolerance(MASS_TOLERANCE) {
            return Err(Error::MassConstraint(format!("N²+K²−M² residual {unit:.3e}")));
        }
        Ok(Self {
            m: T::one(),
            n,
            k,
            variant: MassVariant::MultiMass,
            hermitian_unitary: true,
        })
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.n.ctx()
    }

    pub fn is_real(&self) -> bool {
        self.variant == MassVariant::Real
    }

    /// `N₀ = N + e^5K` and `N₁ = N − e^5K`.
    pub fn n0_n1(&self) -> (GammaNumber<T>, GammaNumber<T>) {
        let e5k = &pseudoscalar(self.ctx()) * &self.k;
        (&self.n + &e5k, &self.n - &e5k)
    }

    /// Whether `N` and `K` are both odd.
    pub fn is_odd(&self) -> bool {
        self.n.even().is_zero_within(T::tolerance(MASS_TOLERANCE)) && self.k.even().is_zero_within(T::tolerance(MASS_TOLERANCE))
    }

    /// Right-acting term `ΨN + e^5ΨK`.
    pub fn apply(&self, psi: &GammaNumber<T>) -> GammaNumber<T> {
        &(psi * &self.n) + &(&(&pseudoscalar(self.ctx()) * psi) * &self.k)
    }
}

/// Shape of an example `(N, K)` matrix pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExamplePair<T: Real> {
    /// `N = V diag(z) V^{-1}`, `K = V diag(y) V^{-1}` with `z_k² + y_k² = 1`.
    Diagonal { z: [Cx<T>; 4], y: [Cx<T>; 4] },
    /// One Jordan cell with eigenvalue `z` for `N`, and the upper-triangular
    /// Toeplitz `K` with diagonal `y`, `a = −z/y`, `b = −1/(2y³)`, `c = −z/(2y⁵)`.
    Jordan { z: Cx<T>, y: Cx<T> },
}

/// Builds an example pair conjugated by `v`, validating `[N, K] = 0`, `N² + K² = 1`.
pub fn example_pair<T: Real>(kind: ExamplePair<T>, v: &Mat4<T>) -> Result<(GammaNumber<T>, GammaNumber<T>)> {
    let vinv = v
        .inverse()
        .ok_or(Error::Singular { det: v.det().norm().as_f64() })?;
    let one = Cx::<T>::new(T::one(), T::zero());
    let (nm, km) = match kind {
        ExamplePair::Diagonal { z, y } => (Mat4::diag(z), Mat4::diag(y)),
        ExamplePair::Jordan { z, y } => {
            if y.norm() == T::zero() {
                return Err(Error::InvalidInput("Jordan example needs y ≠ 0".into()));
            }
            let two = T::lit(2.0);
            let a = -z / y;
            let b = -one / (y * y * y * two);
            let c = -z / (y.powi(5) * two);
            let mut n = Mat4::diag([z; 4]);
            let mut k = Mat4::diag([y; 4]);
            for i in 0..3 {
                n.m[i][i + 1] = one;
                k.m[i][i + 1] = a;
            }
            for i in 0..2 {
                k.m[i][i + 2] = b;
            }
            k.m[0][3] = c;
            (n, k)
        }
    };
    let n = *v * nm * vinv;
    let k = *v * km * vinv;
    let unit = (n * n + k * k).distance(&Mat4::identity()).as_f64();
    let comm = (n * k - k * n).max_abs().as_f64();
    let scale = 1.0 + n.max_abs().as_f64().powi(2) + k.max_abs().as_f64().powi(2);
    if unit > 1e-9 * scale || comm > 1e-9 * scale {
        return Err(Error::MassConstraint(format!(
            "example pair violates N²+K²=1 ({unit:.3e}) or [N,K]=0 ({comm:.3e})"
        )));
    }
    let ctx = AlgebraContext::minkowski();
    Ok((matrix::from_matrix(&ctx, &n)?, matrix::from_matrix(&ctx, &k)?))
}

/// Serialized mass term.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MassTermSpec {
    Canonical {
        form: CanonicalForm,
        m: f64,
        xi: f64,
        #[serde(default)]
        eta: f64,
    },
    Electroweak {
        m: f64,
        xi: f64,
    },
    Hestenes {
        m: f64,
    },
    General {
        m: f64,
        n: Vec<CoeffRecord>,
        k: Vec<CoeffRecord>,
    },
    Real {
        m: f64,
        n: Vec<CoeffRecord>,
        k: Vec<CoeffRecord>,
    },
    MultiMass {
        masses: [f64; 4],
    },
}

impl MassTermSpec {
    pub fn build<T: Real>(&self) -> Result<MassTerm<T>> {
        let c = AlgebraContext::minkowski();
        let r = AlgebraContext::minkowski_real();
        let leaf = |ctx: &AlgebraContext, recs: &[CoeffRecord]| {
            GammaNumber::<f64>::from_records(ctx, recs).map(|g| g.cast::<T>())
        };
        match self {
            Self::Canonical { form, m, xi, eta } => MassTerm::canonical(*form, T::lit(*m), T::lit(*xi), T::lit(*eta)),
            Self::Electroweak { m, xi } => MassTerm::electroweak(T::lit(*m), T::lit(*xi)),
            Self::Hestenes { m } => MassTerm::hestenes(T::lit(*m)),
            Self::General { m, n, k } => MassTerm::new(T::lit(*m), leaf(&c, n)?, leaf(&c, k)?),
            Self::Real { m, n, k } => MassTerm::real(T::lit(*m), leaf(&r, n)?, leaf(&r, k)?),
            Self::MultiMass { masses } => MassTerm::multi_mass(masses.map(T::lit)),
        }
    }
}
