//! The Dirac gamma-equation: residuals, Klein-Gordon factorization, plane
//! waves, even/odd decomposition and conserved currents.

mod currents;
mod mass;
mod waves;

pub use currents::{
    chiral_projectors, chiral_split, current_divergences, current_vectors, currents, lemma1_residuals,
    lemma2_projection, lemma3_deviation, psi_bar, tilde_lemma_deviation, CurrentKind, CurrentReport,
};
pub use mass::{example_pair, CanonicalForm, ExamplePair, MassTerm, MassTermSpec, MassVariant, MASS_TOLERANCE};
pub use waves::{
    hestenes_wave, minkowski_square, momentum_vector, plane_wave, real_wave, s_classes, standard_wave, PlaneWaveDoc,
    PlaneWaveSpec,
};

use num_complex::Complex;

use crate::clifford::{pseudoscalar, AlgebraContext, GammaNumber};
use crate::error::{Error, Result};
use crate::jet::{box_op, dslash, dslash_jet, Jet1, Jet2};
use crate::scalar::{Cx, Real};

/// `Σ e^μ(∂_μΨ − Ψa_μ)`; with `a = None` this is `∂̸Ψ`.
pub fn covariant_dslash<T: Real>(psi: &Jet1<T>, a: Option<&[GammaNumber<T>; 4]>) -> GammaNumber<T> {
    let ctx = psi.ctx();
    let mut acc = GammaNumber::zero(ctx);
    for mu in 0..4 {
        let mut d = psi.grad[mu].clone();
        if let Some(a) = a {
            d -= &(&psi.value * &a[mu]);
        }
        acc += &(&GammaNumber::generator(ctx, mu) * &d);
    }
    acc
}

/// Residual of the (gauged) Dirac equation at a point.
///
/// Complex and multi-mass variants: `i e^μ(∂_μΨ − Ψa_μ) − m(ΨN + e^5ΨK)`.
/// Real variant: `e^μ(∂_μΨ − Ψa_μ) + m(ΨN̂ + e^5ΨK̂)`.
pub fn dirac_residual<T: Real>(psi: &Jet1<T>, mt: &MassTerm<T>, a: Option<&[GammaNumber<T>; 4]>) -> Result<GammaNumber<T>> {
    if psi.ctx() != mt.ctx() {
        return Err(Error::ContextMismatch);
    }
    let d = covariant_dslash(psi, a);
    let mass = mt.apply(&psi.value).scale_re(mt.m);
    Ok(if mt.is_real() { &d + &mass } else { &d.times_i() - &mass })
}

/// `−(□ + m²)Ψ`.
pub fn klein_gordon_residual<T: Real>(psi: &Jet2<T>, m: T) -> GammaNumber<T> {
    -&(&box_op(psi) + &psi.value.scale_re(m * m))
}

/// `(i∂̸ + m(z − y e^5))(i∂̸ − m(z + y e^5))Ψ + (□ + m²)Ψ`; vanishes when `z² + y² = 1`.
pub fn factorization_check<T: Real>(psi: &Jet2<T>, m: T, z: Cx<T>, y: Cx<T>) -> GammaNumber<T> {
    let ctx = psi.ctx();
    let e = GammaNumber::one(ctx);
    let e5 = pseudoscalar(ctx);
    let mm = Complex::new(m, T::zero());
    let inner_op = (&e.scale(z) + &e5.scale(y)).scale(mm);
    let outer_op = (&e.scale(z) - &e5.scale(y)).scale(mm);
    let inner = &dslash_jet(psi).scale(Complex::i()) - &psi.to_jet1().lmul(&inner_op);
    let outer = &dslash(&inner).times_i() + &(&outer_op * &inner.value);
    &outer - &klein_gordon_residual(psi, m)
}

/// Residuals of the decoupled even and odd equations for odd `N`, `K`.
///
/// Complex: `i∂̸Ψ̈ − mΨ̈N₀` and `i∂̸Ψ̇ − mΨ̇N₁`; real: `∂̸Ψ̈ + mΨ̈N̂₀` and `∂̸Ψ̇ + mΨ̇N̂₁`.
pub fn decompose_check<T: Real>(psi: &Jet1<T>, mt: &MassTerm<T>) -> Result<(GammaNumber<T>, GammaNumber<T>)> {
    if !mt.is_odd() {
        return Err(Error::Parity("N and K must both be odd".into()));
    }
    let (n0, n1) = mt.n0_n1();
    let target = if mt.is_real() { -GammaNumber::one(mt.ctx()) } else { GammaNumber::one(mt.ctx()) };
    for (name, nn) in [("N₀", &n0), ("N₁", &n1)] {
        let r = (nn * nn).distance(&target).as_f64();
        if r > T::tolerance(MASS_TOLERANCE) {
            return Err(Error::Parity(format!("{name}² deviates from ±e by {r:.3e}")));
        }
    }
    let even = psi.map(|g| g.even());
    let odd = psi.map(|g| g.odd());
    let side = |part: &Jet1<T>, nn: &GammaNumber<T>| {
        let d = dslash(part);
        let mass = (&part.value * nn).scale_re(mt.m);
        if mt.is_real() {
            &d + &mass
        } else {
            &d.times_i() - &mass
        }
    };
    Ok((side(&even, &n0), side(&odd, &n1)))
}

/// `N̂₀ = q_μ e^μ(αe + βe^5)` in the real algebra; requires `(α² + β²)(q·q) = −1`.
pub fn general_n0<T: Real>(q: [T; 4], alpha: T, beta: T) -> Result<GammaNumber<T>> {
    let c = (alpha * alpha + beta * beta) * minkowski_square(&q);
    if (c + T::one()).abs().as_f64() > T::tolerance(MASS_TOLERANCE) {
        return Err(Error::InvalidInput(format!("(α²+β²)(q·q) = {} ≠ −1", c.as_f64())));
    }
    let ctx = AlgebraContext::minkowski_real();
    let e = GammaNumber::one(&ctx);
    let factor = &e.scale_re(alpha) + &pseudoscalar(&ctx).scale_re(beta);
    Ok(&momentum_vector(&ctx, &q) * &factor)
}

/// `|residual(ΨU) − residual(Ψ)U|` for a constant `U`, which vanishes when `U ∈ com(N, K)`.
pub fn global_covariance_error<T: Real>(psi: &Jet1<T>, mt: &MassTerm<T>, u: &GammaNumber<T>) -> Result<T> {
    let lhs = dirac_residual(&psi.rmul(u), mt, None)?;
    let rhs = &dirac_residual(psi, mt, None)? * u;
    Ok(lhs.distance(&rhs))
}
