//! The coupled Dirac-Yang-Mills system and its current sources.

use serde::{Deserialize, Serialize};

use super::{
    curvature_jets, transform_jets, ym_residual_with_source, FieldStrength, GaugeJets, LieTensor, LieValuedPotential,
    YmResidual,
};
use crate::clifford::GammaNumber;
use crate::dirac::{chiral_projectors, covariant_dslash, current_vectors, dirac_residual, CurrentKind, MassTerm, MassTermSpec};
use crate::error::{Error, Result};
use crate::jet::{FieldDescription, FieldSpec, Jet1};
use crate::lie::{builtin_generators, GeneratorSet};
use crate::matrix;
use crate::scalar::Real;

const ADMISSIBILITY_TOLERANCE: f64 = 1e-10;

/// Where the field strength comes from.
#[derive(Clone, Debug)]
pub enum StrengthSource<T: Real> {
    /// `F` is the curvature of the potential.
    Derived,
    Explicit(FieldStrength<T>),
}

/// Fields, mass term and conventions of one Dirac-Yang-Mills system.
#[derive(Clone, Debug)]
pub struct DymConfig<T: Real> {
    pub psi: FieldDescription<T>,
    pub potential: LieValuedPotential<T>,
    pub strength: StrengthSource<T>,
    pub mass: MassTerm<T>,
    pub epsilon: T,
    pub kind: CurrentKind,
    /// Accumulated gauge factor `U(x)`, applied on evaluation.
    pub gauge: Option<FieldDescription<T>>,
}

impl<T: Real> DymConfig<T> {
    /// Validates `ε = ±1`, matching contexts and, for `m ≠ 0`, that the generators commute with `N`, `K`.
    pub fn new(
        psi: FieldDescription<T>,
        potential: LieValuedPotential<T>,
        strength: StrengthSource<T>,
        mass: MassTerm<T>,
        epsilon: T,
        kind: CurrentKind,
    ) -> Result<Self> {
        if (epsilon.abs() - T::one()).abs() > T::epsilon() {
            return Err(Error::InvalidInput(format!("ε must be ±1, got {}", epsilon.as_f64())));
        }
        let gs = &potential.gs;
        if gs.ctx() != mass.ctx() {
            return Err(Error::ContextMismatch);
        }
        if kind == CurrentKind::Imaginary && gs.ctx().is_real() {
            return Err(Error::InvalidInput("imaginary-unit source needs the complex algebra".into()));
        }
        if mass.m != T::zero() && !gs.commutes_with(&[&mass.n, &mass.k], T::tolerance(ADMISSIBILITY_TOLERANCE)) {
            return Err(Error::Admissibility(format!("generators of `{}` do not commute with N and K", gs.name())));
        }
        Ok(Self {
            psi,
            potential,
            strength,
            mass,
            epsilon,
            kind,
            gauge: None,
        })
    }

    pub fn gs(&self) -> &GeneratorSet<T> {
        &self.potential.gs
    }

    /// Jets of `Ψ`, `a_μ`, `f_{μν}` at `x` before the accumulated gauge factor.
    pub fn base_jets(&self, x: &[T; 4]) -> Result<(Jet1<T>, GaugeJets<T>)> {
        let ctx = self.gs().ctx();
        let aj = self.potential.jet(x)?;
        let f = match &self.strength {
            StrengthSource::Derived => curvature_jets(&aj),
            StrengthSource::Explicit(fs) => fs.jet(self.gs(), x)?,
        };
        let jets = GaugeJets {
            a: std::array::from_fn(|mu| aj[mu].to_jet1()),
            f,
        };
        Ok((self.psi.jet(ctx, x).to_jet1(), jets))
    }

    /// Jets at `x` with the accumulated gauge factor applied; the transformed
    /// potential and field strength must stay in the span of the generators.
    pub fn jets(&self, x: &[T; 4]) -> Result<(Jet1<T>, GaugeJets<T>)> {
        let (psi, jets) = self.base_jets(x)?;
        match &self.gauge {
            None => Ok((psi, jets)),
            Some(u) => {
                let (psi, jets) = transform_jets(&psi, &jets, &u.jet(self.gs().ctx(), x))?;
                jets.check_span(self.gs())?;
                Ok((psi, jets))
            }
        }
    }

    /// Copy with the further gauge factor `U` composed on the right.
    pub fn gauge_transform(&self, u: FieldDescription<T>) -> Result<Self> {
        check_factor(self.gs(), &u)?;
        let gauge = match &self.gauge {
            None => u,
            Some(g) => FieldDescription::Product(vec![g.clone(), u]),
        };
        Ok(Self {
            gauge: Some(gauge),
            ..self.clone()
        })
    }
}

fn check_factor<T: Real>(gs: &GeneratorSet<T>, u: &FieldDescription<T>) -> Result<()> {
    match u {
        FieldDescription::GroupFactor { t, .. } => gs.coefficients(t, 0).map(|_| ()),
        FieldDescription::Product(parts) => parts.iter().try_for_each(|p| check_factor(gs, p)),
        _ => Ok(()),
    }
}

fn source<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>, epsilon: T, kind: CurrentKind) -> Result<LieTensor<T>> {
    let j = current_vectors(psi, gs, kind)?;
    let sig = psi.ctx().signature();
    let comps: [GammaNumber<T>; 4] = std::array::from_fn(|nu| {
        let mut acc = GammaNumber::zero(psi.ctx());
        for (t, jk) in gs.gens().iter().zip(&j) {
            acc += &t.scale_re(epsilon * T::lit(sig[nu] as f64) * jk[nu]);
        }
        acc
    });
    Ok(LieTensor::vector(&comps))
}

/// `J(Ψ) = −ε t_k ⊗ π₁(Ψ t_k Ψ̄ i)`.
pub fn source_j<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>, epsilon: T) -> Result<LieTensor<T>> {
    source(psi, gs, epsilon, CurrentKind::Imaginary)
}

/// `J̃(Ψ) = −ε t_k ⊗ π₁(Ψ t_k Ψ̄ e^5)`.
pub fn source_j_tilde<T: Real>(psi: &GammaNumber<T>, gs: &GeneratorSet<T>, epsilon: T) -> Result<LieTensor<T>> {
    source(psi, gs, epsilon, CurrentKind::Pseudoscalar)
}

/// `|J(ΨU) − U⁻¹J(Ψ)U|` for a constant group element `U`.
pub fn source_covariance_error<T: Real>(
    psi: &GammaNumber<T>,
    gs: &GeneratorSet<T>,
    epsilon: T,
    kind: CurrentKind,
    u: &GammaNumber<T>,
) -> Result<T> {
    let v = matrix::inverse(u)?;
    let lhs = source(&(psi * u), gs, epsilon, kind)?;
    let rhs = source(psi, gs, epsilon, kind)?.lmul(&v).rmul(u);
    Ok(lhs.distance(&rhs))
}

/// Residuals of the three coupled equations at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct DymResidual<T: Real> {
    pub dirac: GammaNumber<T>,
    pub ym: YmResidual<T>,
}

impl<T: Real> DymResidual<T> {
    /// Max-norms of the Dirac, first, second and grade-3 residuals.
    pub fn max_norms(&self) -> [T; 4] {
        let [a, b, c] = self.ym.max_norms();
        [self.dirac.max_norm(), a, b, c]
    }
}

/// Evaluates the coupled residuals at `x`.
pub fn dym_residual<T: Real>(cfg: &DymConfig<T>, x: &[T; 4]) -> Result<DymResidual<T>> {
    let (psi, jets) = cfg.jets(x)?;
    let a = jets.a_values();
    let dirac = dirac_residual(&psi, &cfg.mass, Some(&a))?;
    let src = source(&psi.value, cfg.gs(), cfg.epsilon, cfg.kind)?;
    Ok(DymResidual {
        dirac,
        ym: ym_residual_with_source(&jets, &src),
    })
}

/// Largest deviation from `R′ = R·U` (Dirac) and `R′ = U⁻¹RU` (field equations)
/// after composing the gauge factor `u`, at `x`.
pub fn dym_covariance_error<T: Real>(cfg: &DymConfig<T>, u: &FieldDescription<T>, x: &[T; 4]) -> Result<T> {
    let before = dym_residual(cfg, x)?;
    let after = dym_residual(&cfg.gauge_transform(u.clone())?, x)?;
    let uv = u.value(cfg.gs().ctx(), x);
    let v = matrix::inverse(&uv)?;
    let conj = |t: &LieTensor<T>| t.lmul(&v).rmul(&uv);
    let errs = [
        after.dirac.distance(&(&before.dirac * &uv)),
        after.ym.eq1.distance(&conj(&before.ym.eq1)),
        after.ym.eq2.distance(&conj(&before.ym.eq2)),
        after.ym.bianchi.distance(&conj(&before.ym.bianchi)),
    ];
    Ok(errs.into_iter().fold(T::zero(), T::max))
}

/// `|R e^μ(∂_μΨ − Ψa_μ) − e^μ(∂_μΨ_L − Ψ_L a_μ)|`, which vanishes since `Re^μ = e^μL`.
pub fn left_closure_deviation<T: Real>(psi: &Jet1<T>, a: &[GammaNumber<T>; 4]) -> T {
    let (l, r) = chiral_projectors(psi.ctx());
    let full = &r * &covariant_dslash(psi, Some(a));
    full.distance(&covariant_dslash(&psi.lmul(&l), Some(a)))
}

/// Field-strength source in a configuration document.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrengthSpec {
    #[default]
    Derived,
    /// Six components in the order 01, 02, 03, 12, 13, 23.
    Explicit(Vec<FieldSpec>),
}

fn imaginary() -> CurrentKind {
    CurrentKind::Imaginary
}

/// Serialized Dirac-Yang-Mills configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DymDoc {
    pub mass: MassTermSpec,
    pub generators: String,
    pub epsilon: i8,
    #[serde(default = "imaginary")]
    pub current: CurrentKind,
    pub psi: FieldSpec,
    pub a: [FieldSpec; 4],
    #[serde(default)]
    pub f: StrengthSpec,
    #[serde(default)]
    pub gauge: Option<FieldSpec>,
}

impl DymDoc {
    pub fn build<T: Real>(&self) -> Result<DymConfig<T>> {
        let mass = self.mass.build::<T>()?;
        let gs = builtin_generators::<T>(&self.generators)?;
        let ctx = gs.ctx().clone();
        let a = [
            self.a[0].build(&ctx)?,
            self.a[1].build(&ctx)?,
            self.a[2].build(&ctx)?,
            self.a[3].build(&ctx)?,
        ];
        let strength = match &self.f {
            StrengthSpec::Derived => StrengthSource::Derived,
            StrengthSpec::Explicit(parts) => {
                if parts.len() != 6 {
                    return Err(Error::Schema(format!("explicit field strength needs 6 components, got {}", parts.len())));
                }
                let built = parts.iter().map(|p| p.build(&ctx)).collect::<Result<Vec<_>>>()?;
                let f: [FieldDescription<T>; 6] = built.try_into().expect("length checked");
                StrengthSource::Explicit(FieldStrength::new(f))
            }
        };
        if self.epsilon != 1 && self.epsilon != -1 {
            return Err(Error::Schema(format!("epsilon must be 1 or -1, got {}", self.epsilon)));
        }
        let cfg = DymConfig::new(
            self.psi.build(&ctx)?,
            LieValuedPotential::new(a, gs),
            strength,
            mass,
            T::lit(self.epsilon as f64),
            self.current,
        )?;
        match &self.gauge {
            None => Ok(cfg),
            Some(u) => cfg.gauge_transform(u.build(&ctx)?),
        }
    }
}
