//! Yang-Mills and Maxwell gamma-equations, gauge transformations, the coupled
//! Dirac-Yang-Mills system, spinor-idempotent reduction and the polar gauge.

mod dym;
mod polar;
mod spinor;
mod tensor;

pub use dym::{
    dym_covariance_error, dym_residual, left_closure_deviation, source_covariance_error, source_j, source_j_tilde,
    DymConfig, DymDoc, DymResidual, StrengthSource, StrengthSpec,
};
pub use polar::{polar_gauge, PolarDecomposition, POLAR_CUTOFF};
pub use spinor::{
    multi_mass_reduce, one_spinor, spinor_idempotents, spinor_reduce, ReducedResidual, SpinorReduction,
};
pub use tensor::{pair_index, LieTensor, PAIRS};

use crate::clifford::GammaNumber;
use crate::error::{Error, Result};
use crate::jet::{jet_inverse, FieldDescription, Jet1, Jet2};
use crate::lie::GeneratorSet;
use crate::scalar::Real;

/// Four Lie-valued potential components `a_μ = a_μ^k t_k`.
#[derive(Clone, Debug)]
pub struct LieValuedPotential<T: Real> {
    pub a: [FieldDescription<T>; 4],
    pub gs: GeneratorSet<T>,
}

impl<T: Real> LieValuedPotential<T> {
    pub fn new(a: [FieldDescription<T>; 4], gs: GeneratorSet<T>) -> Self {
        Self { a, gs }
    }

    /// The zero potential.
    pub fn zero(gs: GeneratorSet<T>) -> Self {
        let z = FieldDescription::Constant(GammaNumber::zero(gs.ctx()));
        Self::new(std::array::from_fn(|_| z.clone()), gs)
    }

    /// Second-order jets at `x`; every value and derivative must lie in the span of `gs`.
    pub fn jet(&self, x: &[T; 4]) -> Result<[Jet2<T>; 4]> {
        let ctx = self.gs.ctx();
        let jets: [Jet2<T>; 4] = std::array::from_fn(|mu| self.a[mu].jet(ctx, x));
        for (mu, j) in jets.iter().enumerate() {
            check_jet2(&self.gs, j, mu)?;
        }
        Ok(jets)
    }
}

/// Six independent Lie-valued components `f_{μν}`, `μ < ν`, in [`PAIRS`] order.
#[derive(Clone, Debug)]
pub struct FieldStrength<T: Real> {
    pub f: [FieldDescription<T>; 6],
}

impl<T: Real> FieldStrength<T> {
    pub fn new(f: [FieldDescription<T>; 6]) -> Self {
        Self { f }
    }

    /// First-order jets at `x`, checked against the span of `gs`.
    pub fn jet(&self, gs: &GeneratorSet<T>, x: &[T; 4]) -> Result<[Jet1<T>; 6]> {
        let jets: [Jet1<T>; 6] = std::array::from_fn(|k| self.f[k].jet(gs.ctx(), x).to_jet1());
        for (k, j) in jets.iter().enumerate() {
            check_jet1(gs, j, k)?;
        }
        Ok(jets)
    }
}

pub(crate) fn check_jet1<T: Real>(gs: &GeneratorSet<T>, j: &Jet1<T>, index: usize) -> Result<()> {
    gs.coefficients(&j.value, index)?;
    for g in &j.grad {
        gs.coefficients(g, index)?;
    }
    Ok(())
}

fn check_jet2<T: Real>(gs: &GeneratorSet<T>, j: &Jet2<T>, index: usize) -> Result<()> {
    check_jet1(gs, &j.to_jet1(), index)?;
    for h in &j.hess {
        gs.coefficients(h, index)?;
    }
    Ok(())
}

/// Potential and field-strength jets at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeJets<T: Real> {
    pub a: [Jet1<T>; 4],
    pub f: [Jet1<T>; 6],
}

impl<T: Real> GaugeJets<T> {
    pub fn a_values(&self) -> [GammaNumber<T>; 4] {
        std::array::from_fn(|mu| self.a[mu].value.clone())
    }

    pub fn f_values(&self) -> [GammaNumber<T>; 6] {
        std::array::from_fn(|k| self.f[k].value.clone())
    }

    /// Checks every potential and field-strength jet against the span of `gs`.
    pub fn check_span(&self, gs: &GeneratorSet<T>) -> Result<()> {
        for (i, j) in self.a.iter().chain(self.f.iter()).enumerate() {
            check_jet1(gs, j, i)?;
        }
        Ok(())
    }
}

/// `f_{μν} = ∂_μa_ν − ∂_νa_μ − [a_ν, a_μ]` from first-order potential jets.
pub fn curvature_values<T: Real>(a: &[Jet1<T>; 4]) -> [GammaNumber<T>; 6] {
    std::array::from_fn(|k| {
        let (mu, nu) = PAIRS[k];
        &(&a[nu].grad[mu] - &a[mu].grad[nu]) - &a[nu].value.commutator(&a[mu].value)
    })
}

/// First-order jets of the curvature from second-order potential jets.
pub fn curvature_jets<T: Real>(a: &[Jet2<T>; 4]) -> [Jet1<T>; 6] {
    std::array::from_fn(|k| {
        let (mu, nu) = PAIRS[k];
        let d_mu_a_nu = a[nu].derivative(mu);
        let d_nu_a_mu = a[mu].derivative(nu);
        let an = a[nu].to_jet1();
        let am = a[mu].to_jet1();
        let comm = &(&an * &am) - &(&am * &an);
        &(&d_mu_a_nu - &d_nu_a_mu) - &comm
    })
}

/// Curvature values at `x`, checked against the span of the potential's generators.
pub fn curvature<T: Real>(a: &LieValuedPotential<T>, x: &[T; 4]) -> Result<[GammaNumber<T>; 6]> {
    let jets = a.jet(x)?;
    let f = curvature_values(&std::array::from_fn(|mu| jets[mu].to_jet1()));
    for (k, v) in f.iter().enumerate() {
        a.gs.coefficients(v, k)?;
    }
    Ok(f)
}

/// Residuals of the gamma-form field equations at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct YmResidual<T: Real> {
    /// `π₂(e^μ_𝓛(∂_μA − [A, a_μ]) − A²) − F`.
    pub eq1: LieTensor<T>,
    /// `π₁(e^μ_𝓛(∂_μF − [F, a_μ]))` minus the source, if any.
    pub eq2: LieTensor<T>,
    /// `π₃(e^μ_𝓛(∂_μF − [F, a_μ]))`.
    pub bianchi: LieTensor<T>,
}

impl<T: Real> YmResidual<T> {
    /// Max-norms of `eq1`, `eq2`, `bianchi`.
    pub fn max_norms(&self) -> [T; 3] {
        [self.eq1.max_norm(), self.eq2.max_norm(), self.bianchi.max_norm()]
    }
}

fn tensor_residual<T: Real>(jets: &GaugeJets<T>, abelian: bool, source: Option<&LieTensor<T>>) -> YmResidual<T> {
    let ctx = jets.a[0].ctx();
    let a = jets.a_values();
    let big_a = LieTensor::vector(&a);
    let big_f = LieTensor::bivector(&jets.f_values());
    let mut first = LieTensor::zero(ctx);
    let mut second = LieTensor::zero(ctx);
    for mu in 0..4 {
        let e = LieTensor::generator(ctx, mu);
        let mut da = LieTensor::vector(&std::array::from_fn(|nu| jets.a[nu].grad[mu].clone()));
        let mut df = LieTensor::bivector(&std::array::from_fn(|k| jets.f[k].grad[mu].clone()));
        if !abelian {
            da = &da - &big_a.bracket(&a[mu]);
            df = &df - &big_f.bracket(&a[mu]);
        }
        first = &first + &e.mul(&da);
        second = &second + &e.mul(&df);
    }
    if !abelian {
        first = &first - &big_a.mul(&big_a);
    }
    let eq1 = &first.grade(2) - &big_f;
    let mut eq2 = second.grade(1);
    if let Some(j) = source {
        eq2 = &eq2 - j;
    }
    YmResidual {
        eq1,
        eq2,
        bianchi: second.grade(3),
    }
}

/// Gamma-form Yang-Mills residuals from point jets.
pub fn ym_residual_jets<T: Real>(jets: &GaugeJets<T>) -> YmResidual<T> {
    tensor_residual(jets, false, None)
}

/// Gamma-form residuals with `source` subtracted from the second equation.
pub fn ym_residual_with_source<T: Real>(jets: &GaugeJets<T>, source: &LieTensor<T>) -> YmResidual<T> {
    tensor_residual(jets, false, Some(source))
}

/// Component residuals `∂_μa_ν − ∂_νa_μ − [a_ν, a_μ] − f_{μν}` and
/// `∂^μf_{μν} − [f_{μν}, a^μ]`, computed without the tensor algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentResidual<T: Real> {
    pub first: [GammaNumber<T>; 6],
    pub second: [GammaNumber<T>; 4],
}

pub fn component_residuals<T: Real>(jets: &GaugeJets<T>, abelian: bool) -> ComponentResidual<T> {
    let ctx = jets.a[0].ctx();
    let g = [1.0, -1.0, -1.0, -1.0].map(T::lit);
    let f_at = |mu: usize, nu: usize, d: Option<usize>| -> GammaNumber<T> {
        match pair_index(mu, nu) {
            None => GammaNumber::zero(ctx),
            Some((k, s)) => {
                let v = match d {
                    None => &jets.f[k].value,
                    Some(r) => &jets.f[k].grad[r],
                };
                v.scale_re(T::lit(s as f64))
            }
        }
    };
    let first = std::array::from_fn(|k| {
        let (mu, nu) = PAIRS[k];
        let mut r = &jets.a[nu].grad[mu] - &jets.a[mu].grad[nu];
        if !abelian {
            r = &r - &jets.a[nu].value.commutator(&jets.a[mu].value);
        }
        &r - &jets.f[k].value
    });
    let second = std::array::from_fn(|nu| {
        let mut acc = GammaNumber::zero(ctx);
        for mu in 0..4 {
            acc += &f_at(mu, nu, Some(mu)).scale_re(g[mu]);
            if !abelian {
                acc = &acc - &f_at(mu, nu, None).commutator(&jets.a[mu].value.scale_re(g[mu]));
            }
        }
        acc
    });
    ComponentResidual { first, second }
}

/// Largest difference between the gamma-form residual expansions and the component residuals.
pub fn form_equivalence_deviation<T: Real>(jets: &GaugeJets<T>, abelian: bool) -> T {
    let tensor = tensor_residual(jets, abelian, None);
    let comp = component_residuals(jets, abelian);
    let bi = tensor.eq1.bivector_part();
    let ve = tensor.eq2.vector_part();
    let d1 = (0..6).fold(T::zero(), |a, k| a.max(bi[k].distance(&comp.first[k])));
    let d2 = (0..4).fold(T::zero(), |a, nu| a.max(ve[nu].distance(&comp.second[nu])));
    let other = (&tensor.eq1 - &tensor.eq1.grade(2)).max_norm();
    d1.max(d2).max(other)
}

fn field_jets<T: Real>(a: &LieValuedPotential<T>, f: &FieldStrength<T>, x: &[T; 4]) -> Result<GaugeJets<T>> {
    let aj = a.jet(x)?;
    Ok(GaugeJets {
        a: std::array::from_fn(|mu| aj[mu].to_jet1()),
        f: f.jet(&a.gs, x)?,
    })
}

/// Yang-Mills residuals for a potential and an independent field strength at `x`.
pub fn ym_residual<T: Real>(a: &LieValuedPotential<T>, f: &FieldStrength<T>, x: &[T; 4]) -> Result<YmResidual<T>> {
    Ok(ym_residual_jets(&field_jets(a, f, x)?))
}

/// Yang-Mills residuals with the field strength taken as the curvature of `a`.
pub fn ym_residual_derived<T: Real>(a: &LieValuedPotential<T>, x: &[T; 4]) -> Result<YmResidual<T>> {
    let aj = a.jet(x)?;
    let jets = GaugeJets {
        a: std::array::from_fn(|mu| aj[mu].to_jet1()),
        f: curvature_jets(&aj),
    };
    jets.check_span(&a.gs)?;
    Ok(ym_residual_jets(&jets))
}

fn require_abelian<T: Real>(gs: &GeneratorSet<T>) -> Result<()> {
    if gs.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "Maxwell equations need a one-dimensional generator set, `{}` has {}",
            gs.name(),
            gs.len()
        )));
    }
    Ok(())
}

/// Maxwell residuals (commutators dropped) for a one-generator potential.
pub fn maxwell_residual<T: Real>(a: &LieValuedPotential<T>, f: &FieldStrength<T>, x: &[T; 4]) -> Result<YmResidual<T>> {
    require_abelian(&a.gs)?;
    Ok(tensor_residual(&field_jets(a, f, x)?, true, None))
}

/// `∂^μa_μ`, read from the grade-0 part of `e^μ∂_μA`, as a coefficient of the generator.
pub fn lorentz_condition<T: Real>(a: &LieValuedPotential<T>, x: &[T; 4]) -> Result<T> {
    require_abelian(&a.gs)?;
    let aj = a.jet(x)?;
    let ctx = a.gs.ctx();
    let mut acc = LieTensor::zero(ctx);
    for mu in 0..4 {
        let da = LieTensor::vector(&std::array::from_fn(|nu| aj[nu].grad[mu].clone()));
        acc = &acc + &LieTensor::generator(ctx, mu).mul(&da);
    }
    let scalar = acc.component(crate::clifford::BladeMask(0)).clone();
    Ok(a.gs.coefficients(&scalar, 0)?[0])
}

/// Applies `Ψ′ = ΨU`, `a′_μ = U⁻¹a_μU + U⁻¹∂_μU`, `f′ = U⁻¹fU` to point jets.
pub fn transform_jets<T: Real>(psi: &Jet1<T>, jets: &GaugeJets<T>, u: &Jet2<T>) -> Result<(Jet1<T>, GaugeJets<T>)> {
    let v = jet_inverse(u)?.to_jet1();
    let u1 = u.to_jet1();
    let a = std::array::from_fn(|mu| &(&(&v * &jets.a[mu]) * &u1) + &(&v * &u.derivative(mu)));
    let f = std::array::from_fn(|k| &(&v * &jets.f[k]) * &u1);
    Ok((psi * &u1, GaugeJets { a, f }))
}

