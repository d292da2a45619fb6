//! Plane-wave solutions of the Dirac equation.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::mass::{MassTerm, MassTermSpec};
use crate::clifford::{pseudoscalar, AlgebraContext, CoeffRecord, GammaNumber};
use crate::error::{Error, Result};
use crate::jet::FieldDescription;
use crate::scalar::Real;

const WAVE_TOLERANCE: f64 = 1e-10;

/// `p_μ p^μ` in Minkowski signature.
pub fn minkowski_square<T: Real>(p: &[T; 4]) -> T {
    p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3]
}

/// `P = p_μ e^μ`.
pub fn momentum_vector<T: Real>(ctx: &AlgebraContext, p: &[T; 4]) -> GammaNumber<T> {
    let mut acc = GammaNumber::zero(ctx);
    for (mu, &pm) in p.iter().enumerate() {
        acc += &GammaNumber::generator(ctx, mu).scale_re(pm);
    }
    acc
}

/// Data of a plane wave `Ψ = (P + im(N − e^5K)S) exp(p·x S) Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveSpec<T: Real> {
    pub p: [T; 4],
    pub s: GammaNumber<T>,
    pub y: GammaNumber<T>,
    pub mass: MassTerm<T>,
}

impl<T: Real> PlaneWaveSpec<T> {
    /// Validates `p·p = m²`, `S² = −e` and that `S`, `Y` commute with `N`, `K`.
    pub fn new(p: [T; 4], s: GammaNumber<T>, y: GammaNumber<T>, mass: MassTerm<T>) -> Result<Self> {
        if mass.is_real() {
            return Err(Error::WaveConstraint("plane wave needs a complex mass term".into()));
        }
        let m = mass.m;
        let shell = (minkowski_square(&p) - m * m).abs().as_f64();
        let scale = 1.0 + p.iter().map(|v| v.as_f64().abs()).fold(0.0, f64::max).powi(2);
        if shell > T::tolerance(WAVE_TOLERANCE) * scale {
            return Err(Error::WaveConstraint(format!("p·p − m² = {shell:.3e}")));
        }
        let e = GammaNumber::one(mass.ctx());
        let sq = (&(&s * &s) + &e).max_norm().as_f64();
        if sq > T::tolerance(WAVE_TOLERANCE) {
            return Err(Error::WaveConstraint(format!("S² + e = {sq:.3e}")));
        }
        for (name, g) in [("S", &s), ("Y", &y)] {
            let c = g.commutator(&mass.n).max_norm().max(g.commutator(&mass.k).max_norm()).as_f64();
            if c > T::tolerance(WAVE_TOLERANCE) * (1.0 + g.max_norm().as_f64()) {
                return Err(Error::WaveConstraint(format!("{name} does not commute with N, K ({c:.3e})")));
            }
        }
        Ok(Self { p, s, y, mass })
    }

    /// Constant left factor `P + im(N − e^5K)S`.
    pub fn amplitude(&self) -> GammaNumber<T> {
        let ctx = self.mass.ctx();
        let nk = &self.mass.n - &(&pseudoscalar(ctx) * &self.mass.k);
        let im = Complex::new(T::zero(), self.mass.m);
        &momentum_vector(ctx, &self.p) + &(&nk * &self.s).scale(im)
    }

    pub fn field(&self) -> FieldDescription<T> {
        FieldDescription::Product(vec![
            FieldDescription::Constant(self.amplitude()),
            FieldDescription::PlaneWave {
                p: self.p,
                s: self.s.clone(),
            },
            FieldDescription::Constant(self.y.clone()),
        ])
    }
}

/// Plane wave `(P + im(N − e^5K)S) exp(p·x S) Y`.
pub fn plane_wave<T: Real>(spec: &PlaneWaveSpec<T>) -> FieldDescription<T> {
    spec.field()
}

fn on_shell<T: Real>(m: T, p: &[T; 4]) -> Result<()> {
    if m <= T::zero() {
        return Err(Error::WaveConstraint("normalized waves need m > 0".into()));
    }
    let e = (p[1] * p[1] + p[2] * p[2] + p[3] * p[3] + m * m).sqrt();
    if (p[0] - e).abs().as_f64() > T::tolerance(WAVE_TOLERANCE) * (1.0 + e.as_f64()) {
        return Err(Error::WaveConstraint(format!(
            "p_0 = {} but E = √(p² + m²) = {}",
            p[0].as_f64(),
            e.as_f64()
        )));
    }
    Ok(())
}

/// Normalized wave `a(P + me^0)e^0 exp(−(p·x) I)` with `a = 1/√(2m(E+m))`.
fn normalized<T: Real>(ctx: &AlgebraContext, m: T, p: &[T; 4], i_unit: GammaNumber<T>) -> Result<FieldDescription<T>> {
    on_shell(m, p)?;
    let e0 = GammaNumber::named(ctx, "0");
    let a = T::one() / (T::lit(2.0) * m * (p[0] + m)).sqrt();
    let amp = (&(&momentum_vector(ctx, p) + &e0.scale_re(m)) * &e0).scale_re(a);
    Ok(FieldDescription::Product(vec![
        FieldDescription::Constant(amp),
        FieldDescription::PlaneWave { p: *p, s: -&i_unit },
    ]))
}

/// Standard wave `a(P + me^0)e^0 exp(−i p·x)` solving `i∂̸Ψ − mΨe^0 = 0`; `p_0` must be `E`.
pub fn standard_wave<T: Real>(m: T, p: [T; 4]) -> Result<(FieldDescription<T>, MassTerm<T>)> {
    let ctx = AlgebraContext::minkowski();
    let i = GammaNumber::scalar(&ctx, Complex::new(T::zero(), T::one()));
    let field = normalized(&ctx, m, &p, i)?;
    let mass = MassTerm::electroweak(m, T::zero())?;
    Ok((field, mass))
}

/// Real wave `a(P + me^0)e^0 exp(−(p·x) I)` with `I = (q_k e^k)e^5`, solving
/// `∂̸Ψ + mΨe^0I = 0` in the real algebra; `|q| = 1`.
pub fn real_wave<T: Real>(m: T, p: [T; 4], q: [T; 3]) -> Result<(FieldDescription<T>, MassTerm<T>)> {
    let qq = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
    if (qq - T::one()).abs().as_f64() > T::tolerance(WAVE_TOLERANCE) {
        return Err(Error::WaveConstraint(format!("|q|² = {}", qq.as_f64())));
    }
    let ctx = AlgebraContext::minkowski_real();
    let qe = momentum_vector(&ctx, &[T::zero(), q[0], q[1], q[2]]);
    let i_unit = &qe * &pseudoscalar(&ctx);
    real_wave_with(&ctx, m, p, i_unit)
}

/// Real wave with `I = e^{12}`, solving the Hestenes equation `∂̸Ψ + mΨe^{012} = 0`.
pub fn hestenes_wave<T: Real>(m: T, p: [T; 4]) -> Result<(FieldDescription<T>, MassTerm<T>)> {
    let ctx = AlgebraContext::minkowski_real();
    real_wave_with(&ctx, m, p, GammaNumber::named(&ctx, "12"))
}

fn real_wave_with<T: Real>(
    ctx: &AlgebraContext,
    m: T,
    p: [T; 4],
    i_unit: GammaNumber<T>,
) -> Result<(FieldDescription<T>, MassTerm<T>)> {
    let n_hat = &GammaNumber::named(ctx, "0") * &i_unit;
    let mass = MassTerm::real(m, n_hat, GammaNumber::zero(ctx))?;
    Ok((normalized(ctx, m, &p, i_unit)?, mass))
}

/// Representatives `±ie`, `ie^0`, `±i(−e + e^0 + ie^{12} + ie^{012})/2` of the
/// similarity classes of `S² = −e`.
pub fn s_classes<T: Real>() -> [GammaNumber<T>; 5] {
    let ctx = AlgebraContext::minkowski();
    let i = Complex::new(T::zero(), T::one());
    let e = GammaNumber::<T>::one(&ctx);
    let e0 = GammaNumber::named(&ctx, "0");
    let mixed = (&(&(&e0 - &e) + &GammaNumber::named(&ctx, "12").times_i()) + &GammaNumber::named(&ctx, "012").times_i())
        .scale_re(T::lit(0.5));
    [
        e.scale(i),
        e.scale(-i),
        e0.scale(i),
        mixed.scale(i),
        mixed.scale(-i),
    ]
}

/// Serialized plane-wave request.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PlaneWaveDoc {
    General {
        p: [f64; 4],
        s: Vec<CoeffRecord>,
        y: Vec<CoeffRecord>,
        mass: MassTermSpec,
    },
    Standard {
        p: [f64; 4],
        m: f64,
    },
    Real {
        p: [f64; 4],
        m: f64,
        q: [f64; 3],
    },
    Hestenes {
        p: [f64; 4],
        m: f64,
    },
}

impl PlaneWaveDoc {
    /// Field description and the mass term it solves.
    pub fn build<T: Real>(&self) -> Result<(FieldDescription<T>, MassTerm<T>)> {
        let p4 = |p: &[f64; 4]| -> Result<[T; 4]> {
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::Schema("non-finite momentum".into()));
            }
            Ok(p.map(T::lit))
        };
        match self {
            Self::General { p, s, y, mass } => {
                let ctx = AlgebraContext::minkowski();
                let mass = mass.build::<T>()?;
                let s = GammaNumber::<f64>::from_records(&ctx, s)?.cast();
                let y = GammaNumber::<f64>::from_records(&ctx, y)?.cast();
                let spec = PlaneWaveSpec::new(p4(p)?, s, y, mass)?;
                Ok((spec.field(), spec.mass))
            }
            Self::Standard { p, m } => standard_wave(T::lit(*m), p4(p)?),
            Self::Real { p, m, q } => real_wave(T::lit(*m), p4(p)?, q.map(T::lit)),
            Self::Hestenes { p, m } => hestenes_wave(T::lit(*m), p4(p)?),
        }
    }
}
