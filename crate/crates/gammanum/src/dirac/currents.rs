//! Conserved currents of the Dirac equation and the identities behind them.

use serde::{Deserialize, Serialize};

use super::mass::MassTerm;
use crate::clifford::{pseudoscalar, AlgebraContext, BladeMask, GammaNumber};
use crate::error::{Error, Result};
use crate::jet::Jet1;
use crate::lie::GeneratorSet;
use crate::scalar::Real;

/// Which right factor closes the current bilinear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurrentKind {
    /// `π₁(Ψ t_k Ψ̄ i) = −g_{μν} j^μ_k e^ν`.
    Imaginary,
    /// `π₁(Ψ t_k Ψ̄ e^5) = −g_{μν} j̃^μ_k e^ν`.
    Pseudoscalar,
}

/// Currents `j^μ_k` at a point and their divergences `∂_μ j^μ_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurrentReport<T: Real> {
    pub j: Vec<[T; 4]>,
    pub divergence: Vec<T>,
}

impl<T: Real> CurrentReport<T> {
    pub fn max_divergence(&self) -> T {
        self.divergence.iter().fold(T::zero(), |a, d| a.max(d.abs()))
    }
}

/// `Ψ̄ = e^0 Ψ^*`.
pub fn psi_bar<T: Real>(psi: &GammaNumber<T>) -> GammaNumber<T> {
    &GammaNumber::named(psi.ctx(), "0") * &psi.star()
}

fn closing_factor<T: Real>(ctx: &AlgebraContext, kind: CurrentKind) -> Result<GammaNumber<T>> {
    match kind {
        CurrentKind::Imaginary if ctx.is_real() => {
            Err(Error::InvalidInput("imaginary-unit currents need the complex algebra".into()))
        }
        CurrentKind::Imaginary => Ok(GammaNumber::one(ctx).times_i()),
        CurrentKind::Pseudoscalar => Ok(pseudoscalar(ctx)),
    }
}

fn realness_tolerance<T: Real>(psi: &GammaNumber<T>) -> f64 {
    1e-9 * (1.0 + psi.max_norm().as_f64().powi(2))
}

/// `j^ν` from a grade-1 element `X = −g_{μν} j^μ e^ν`, rejecting imaginary parts.
fn read_vector<T: Real>(x: &GammaNumber<T>, tol: f64) -> Result<[T; 4]> {
    let sig = x.ctx().signature();
    let mut out = [T::zero(); 4];
    for (nu, o) in out.iter_mut().enumerate() {
        let c = x.coeff(BladeMask(1 << nu));
        if c.im.abs().as_f64() > tol {
            return Err(Error::NonRealCurrent { im: c.im.as_f64() });
        }
        *o = -c.re * T::lit(sig[nu] as f64);
    }
    Ok(out)
}

/// Current vectors `j^μ_k` for every generator of `gs` at one point.
pub fn current_vectors<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>, kind: CurrentKind) -> Result<Vec<[T; 4]>> {
    let c = closing_factor(psi.ctx(), kind)?;
    let pb = psi_bar(psi);
    let tol = realness_tolerance(psi);
    gs.gens()
        .iter()
        .map(|t| read_vector(&(&(&(psi * t) * &pb) * &c).grade(1), tol))
        .collect()
}

/// Divergences `∂_μ j^μ_k` from a first-order jet, by the product rule.
pub fn current_divergences<T: Real>(psi: &Jet1<T>, gs: &GeneratorSet<T>, kind: CurrentKind) -> Result<Vec<T>> {
    let c = closing_factor(psi.ctx(), kind)?;
    let pb = psi_bar(&psi.value);
    let tol = realness_tolerance(&psi.value) * (1.0 + psi.max_norm().as_f64());
    gs.gens()
        .iter()
        .map(|t| {
            let mut div = T::zero();
            for mu in 0..4 {
                let d = &(&(&psi.grad[mu] * t) * &pb) + &(&(&psi.value * t) * &psi_bar(&psi.grad[mu]));
                let v = read_vector(&(&d * &c).grade(1), tol)?;
                div += v[mu];
            }
            Ok(div)
        })
        .collect()
}

/// Currents and divergences at one point.
pub fn currents<T: Real>(psi: &Jet1<T>, gs: &GeneratorSet<T>, kind: CurrentKind) -> Result<CurrentReport<T>> {
    Ok(CurrentReport {
        j: current_vectors(&psi.value, gs, kind)?,
        divergence: current_divergences(psi, gs, kind)?,
    })
}

fn projection_deviation<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>, kind: CurrentKind) -> Result<T> {
    let ctx = psi.ctx();
    let left = match kind {
        CurrentKind::Imaginary => GammaNumber::one(ctx).times_i(),
        CurrentKind::Pseudoscalar => pseudoscalar(ctx),
    };
    let j = current_vectors(psi, gs, kind)?;
    let pb = psi_bar(psi);
    let mut worst = T::zero();
    for mu in 0..4 {
        let x = &(&(&pb * &left) * &GammaNumber::generator(ctx, mu)) * psi;
        let col: Vec<T> = j.iter().map(|v| v[mu]).collect();
        worst = worst.max(gs.project(&x).distance(&gs.combine(&col)));
    }
    Ok(worst)
}

/// Largest deviation in `π_𝓛(Ψ̄ i e^μ Ψ) = j^μ_k t_k`.
pub fn lemma3_deviation<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>) -> Result<T> {
    projection_deviation(psi, gs, CurrentKind::Imaginary)
}

/// Largest deviation in `π_𝓛(Ψ̄ e^5 e^μ Ψ) = j̃^μ_k t_k`.
pub fn tilde_lemma_deviation<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>) -> Result<T> {
    projection_deviation(psi, gs, CurrentKind::Pseudoscalar)
}

fn divergence_of<T: Real>(psi: &Jet1<T>, left: &GammaNumber<T>) -> GammaNumber<T> {
    let ctx = psi.ctx();
    let pb = psi_bar(&psi.value);
    let mut acc = GammaNumber::zero(ctx);
    for mu in 0..4 {
        let em = &(left * &GammaNumber::generator(ctx, mu));
        acc += &(&(&psi_bar(&psi.grad[mu]) * em) * &psi.value);
        acc += &(&(&pb * em) * &psi.grad[mu]);
    }
    acc
}

/// Left-hand sides of the two bilinear identities satisfied by solutions:
/// `i∂_μ(Ψ̄e^μΨ) − m(Ψ̄ΨN − N†Ψ̄Ψ + Ψ̄e^5ΨK − K†Ψ̄e^5Ψ)` and
/// `i∂_μ(Ψ̄e^5e^μΨ) − m(Ψ̄e^5ΨN + N†Ψ̄e^5Ψ − Ψ̄ΨK − K†Ψ̄Ψ)`.
pub fn lemma1_residuals<T: Real>(psi: &Jet1<T>, mt: &MassTerm<T>) -> Result<(GammaNumber<T>, GammaNumber<T>)> {
    let ctx = psi.ctx();
    let e = GammaNumber::one(ctx);
    let e5 = pseudoscalar(ctx);
    let nd = mt.n.dagger()?;
    let kd = mt.k.dagger()?;
    let pb = psi_bar(&psi.value);
    let bb = &pb * &psi.value;
    let b5 = &(&pb * &e5) * &psi.value;
    let first_mass = &(&(&(&bb * &mt.n) - &(&nd * &bb)) + &(&b5 * &mt.k)) - &(&kd * &b5);
    let second_mass = &(&(&(&b5 * &mt.n) + &(&nd * &b5)) - &(&bb * &mt.k)) - &(&kd * &bb);
    let r1 = &divergence_of(psi, &e).times_i() - &first_mass.scale_re(mt.m);
    let r2 = &divergence_of(psi, &e5).times_i() - &second_mass.scale_re(mt.m);
    Ok((r1, r2))
}

/// `‖π_𝓛(B₁ + B₂)‖` with `B₁ = Ψ̄ΨN − N†Ψ̄Ψ`, `B₂ = Ψ̄e^5ΨK − K†Ψ̄e^5Ψ`.
pub fn lemma2_projection<T: Real>(psi: &GammaNumber<T>, mt: &MassTerm<T>, gs: &GeneratorSet<T>) -> Result<T> {
    let e5 = pseudoscalar(psi.ctx());
    let pb = psi_bar(psi);
    let bb = &pb * psi;
    let b5 = &(&pb * &e5) * psi;
    let b1 = &(&bb * &mt.n) - &(&mt.n.dagger()? * &bb);
    let b2 = &(&b5 * &mt.k) - &(&mt.k.dagger()? * &b5);
    Ok(gs.project(&(&b1 + &b2)).max_norm())
}

/// `L = (e + ie^5)/2` and `R = (e − ie^5)/2`.
pub fn chiral_projectors<T: Real>(ctx: &AlgebraContext) -> (GammaNumber<T>, GammaNumber<T>) {
    let e = GammaNumber::one(ctx);
    let ie5 = pseudoscalar(ctx).times_i();
    let h = T::lit(0.5);
    ((&e + &ie5).scale_re(h), (&e - &ie5).scale_re(h))
}

/// `(LΨ, RΨ)`.
pub fn chiral_split<T: Real>(psi: &Jet1<T>) -> (Jet1<T>, Jet1<T>) {
    let (l, r) = chiral_projectors(psi.ctx());
    (psi.lmul(&l), psi.lmul(&r))
}
