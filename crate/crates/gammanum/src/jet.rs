//! Exact first- and second-order jets of gamma-valued fields on `R^4`, and the
//! field descriptions that emit them.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::clifford::{AlgebraContext, CoeffRecord, GammaNumber};
use crate::error::{Error, Result};
use crate::matrix;
use crate::scalar::{Cx, Real};

/// Index of `∂_μ∂_ν` in the packed Hessian (00, 01, 02, 03, 11, 12, 13, 22, 23, 33).
pub const fn hess_index(mu: usize, nu: usize) -> usize {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    match a {
        0 => b,
        1 => 3 + b,
        2 => 5 + b,
        _ => 9,
    }
}

/// Value and four first derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet1<T: Real> {
    pub value: GammaNumber<T>,
    pub grad: [GammaNumber<T>; 4],
}

/// Value, four first derivatives and the ten independent second derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2<T: Real> {
    pub value: GammaNumber<T>,
    pub grad: [GammaNumber<T>; 4],
    pub hess: [GammaNumber<T>; 10],
}

fn map4<T: Real>(f: impl Fn(usize) -> GammaNumber<T>) -> [GammaNumber<T>; 4] {
    std::array::from_fn(f)
}

fn map10<T: Real>(f: impl Fn(usize) -> GammaNumber<T>) -> [GammaNumber<T>; 10] {
    std::array::from_fn(f)
}

/// `(μ, ν)` pairs in packed Hessian order.
pub const HESS_PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

impl<T: Real> Jet1<T> {
    pub fn constant(value: GammaNumber<T>) -> Self {
        let z = GammaNumber::zero(value.ctx());
        Self {
            grad: map4(|_| z.clone()),
            value,
        }
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self::constant(GammaNumber::zero(ctx))
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.value.ctx()
    }

    /// Applies `f` to every component.
    pub fn map(&self, f: impl Fn(&GammaNumber<T>) -> GammaNumber<T>) -> Self {
        Self {
            value: f(&self.value),
            grad: map4(|m| f(&self.grad[m])),
        }
    }

    /// Constant factor on the left.
    pub fn lmul(&self, c: &GammaNumber<T>) -> Self {
        self.map(|x| c * x)
    }

    /// Constant factor on the right.
    pub fn rmul(&self, c: &GammaNumber<T>) -> Self {
        self.map(|x| x * c)
    }

    pub fn scale(&self, c: Cx<T>) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Largest coefficient modulus over all components.
    pub fn max_norm(&self) -> T {
        self.grad.iter().map(|g| g.max_norm()).fold(self.value.max_norm(), T::max)
    }

    pub fn distance(&self, other: &Self) -> T {
        (self - other).max_norm()
    }
}

impl<T: Real> Jet2<T> {
    pub fn constant(value: GammaNumber<T>) -> Self {
        let z = GammaNumber::zero(value.ctx());
        Self {
            grad: map4(|_| z.clone()),
            hess: map10(|_| z.clone()),
            value,
        }
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self::constant(GammaNumber::zero(ctx))
    }

    pub fn one(ctx: &AlgebraContext) -> Self {
        Self::constant(GammaNumber::one(ctx))
    }

    /// Jet of the coordinate function `x^μ e`.
    pub fn coordinate(ctx: &AlgebraContext, mu: usize, x: &[T; 4]) -> Self {
        let e = GammaNumber::one(ctx);
        let mut j = Self::constant(e.scale_re(x[mu]));
        j.grad[mu] = e;
        j
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.value.ctx()
    }

    /// `∂_μ∂_ν`.
    pub fn second(&self, mu: usize, nu: usize) -> &GammaNumber<T> {
        &self.hess[hess_index(mu, nu)]
    }

    /// Drops the second-order part.
    pub fn to_jet1(&self) -> Jet1<T> {
        Jet1 {
            value: self.value.clone(),
            grad: self.grad.clone(),
        }
    }

    /// First-order jet of `∂_μ f`.
    pub fn derivative(&self, mu: usize) -> Jet1<T> {
        Jet1 {
            value: self.grad[mu].clone(),
            grad: map4(|nu| self.second(mu, nu).clone()),
        }
    }

    pub fn map(&self, f: impl Fn(&GammaNumber<T>) -> GammaNumber<T>) -> Self {
        Self {
            value: f(&self.value),
            grad: map4(|m| f(&self.grad[m])),
            hess: map10(|k| f(&self.hess[k])),
        }
    }

    pub fn lmul(&self, c: &GammaNumber<T>) -> Self {
        self.map(|x| c * x)
    }

    pub fn rmul(&self, c: &GammaNumber<T>) -> Self {
        self.map(|x| x * c)
    }

    pub fn scale(&self, c: Cx<T>) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn max_norm(&self) -> T {
        let g = self.grad.iter().chain(self.hess.iter()).map(|g| g.max_norm());
        g.fold(self.value.max_norm(), T::max)
    }

    fn l1_norm(&self) -> T {
        let g = self.grad.iter().chain(self.hess.iter()).map(|g| g.l1_norm());
        g.fold(self.value.l1_norm(), T::max)
    }

    pub fn distance(&self, other: &Self) -> T {
        (self - other).max_norm()
    }
}

macro_rules! jet_linear_ops {
    ($J:ident, $($field:ident),*) => {
        impl<'a, T: Real> Add<&'a $J<T>> for &'a $J<T> {
            type Output = $J<T>;
            fn add(self, rhs: &'a $J<T>) -> $J<T> {
                $J {
                    value: &self.value + &rhs.value,
                    $($field: std::array::from_fn(|k| &self.$field[k] + &rhs.$field[k]),)*
                }
            }
        }

        impl<'a, T: Real> Sub<&'a $J<T>> for &'a $J<T> {
            type Output = $J<T>;
            fn sub(self, rhs: &'a $J<T>) -> $J<T> {
                $J {
                    value: &self.value - &rhs.value,
                    $($field: std::array::from_fn(|k| &self.$field[k] - &rhs.$field[k]),)*
                }
            }
        }

        impl<'a, T: Real> Neg for &'a $J<T> {
            type Output = $J<T>;
            fn neg(self) -> $J<T> {
                self.map(|x| -x)
            }
        }

        impl<T: Real> Add for $J<T> {
            type Output = $J<T>;
            fn add(self, rhs: $J<T>) -> $J<T> {
                &self + &rhs
            }
        }

        impl<T: Real> Sub for $J<T> {
            type Output = $J<T>;
            fn sub(self, rhs: $J<T>) -> $J<T> {
                &self - &rhs
            }
        }

        impl<T: Real> Neg for $J<T> {
            type Output = $J<T>;
            fn neg(self) -> $J<T> {
                -&self
            }
        }

        impl<T: Real> Mul for $J<T> {
            type Output = $J<T>;
            fn mul(self, rhs: $J<T>) -> $J<T> {
                &self * &rhs
            }
        }
    };
}

jet_linear_ops!(Jet1, grad);
jet_linear_ops!(Jet2, grad, hess);

impl<'a, T: Real> Mul<&'a Jet1<T>> for &'a Jet1<T> {
    type Output = Jet1<T>;
    fn mul(self, g: &'a Jet1<T>) -> Jet1<T> {
        let f = self;
        Jet1 {
            value: &f.value * &g.value,
            grad: map4(|m| &(&f.grad[m] * &g.value) + &(&f.value * &g.grad[m])),
        }
    }
}

impl<'a, T: Real> Mul<&'a Jet2<T>> for &'a Jet2<T> {
    type Output = Jet2<T>;
    fn mul(self, g: &'a Jet2<T>) -> Jet2<T> {
        let f = self;
        Jet2 {
            value: &f.value * &g.value,
            grad: map4(|m| &(&f.grad[m] * &g.value) + &(&f.value * &g.grad[m])),
            hess: map10(|k| {
                let (m, n) = HESS_PAIRS[k];
                let mut acc = &f.hess[k] * &g.value;
                acc += &(&f.grad[m] * &g.grad[n]);
                acc += &(&f.grad[n] * &g.grad[m]);
                acc += &(&f.value * &g.hess[k]);
                acc
            }),
        }
    }
}

/// `∂̸f = Σ e^μ ∂_μ f` (left multiplication).
pub fn dslash<T: Real>(j: &Jet1<T>) -> GammaNumber<T> {
    let ctx = j.ctx();
    let mut acc = GammaNumber::zero(ctx);
    for (mu, g) in j.grad.iter().enumerate() {
        acc += &(&GammaNumber::generator(ctx, mu) * g);
    }
    acc
}

/// First-order jet of `∂̸f`.
pub fn dslash_jet<T: Real>(j: &Jet2<T>) -> Jet1<T> {
    let ctx = j.ctx();
    let mut acc = Jet1::zero(ctx);
    for mu in 0..4 {
        acc = &acc + &j.derivative(mu).lmul(&GammaNumber::generator(ctx, mu));
    }
    acc
}

/// `□f = Σ g_{μμ} ∂_μ∂_μ f`; in Minkowski `∂₀² − ∂₁² − ∂₂² − ∂₃²`.
pub fn box_op<T: Real>(j: &Jet2<T>) -> GammaNumber<T> {
    let sig = j.ctx().signature().to_vec();
    let mut acc = GammaNumber::zero(j.ctx());
    for mu in 0..4 {
        acc += &j.second(mu, mu).scale_re(T::lit(sig[mu] as f64));
    }
    acc
}

/// `exp` of a jet by the power series in jet arithmetic with scaling and squaring.
pub fn jet_exp<T: Real>(x: &Jet2<T>) -> Jet2<T> {
    let mut s = 0i32;
    let mut norm = x.l1_norm().as_f64();
    while norm >= 0.5 && s < 200 {
        norm *= 0.5;
        s += 1;
    }
    let y = x.scale(Cx::new(T::lit(0.5f64.powi(s)), T::zero()));
    let mut sum = Jet2::one(x.ctx());
    let mut term = Jet2::one(x.ctx());
    for k in 1..=64u32 {
        term = (&term * &y).scale(Cx::new(T::one() / T::lit(k as f64), T::zero()));
        sum = &sum + &term;
        if term.max_norm().as_f64() < 1e-17 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Real polynomial in `x^0 … x^3`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ScalarPoly<T: Real> {
    pub terms: Vec<(T, [u32; 4])>,
}

fn monomial<T: Real>(powers: &[u32; 4], x: &[T; 4]) -> (T, [T; 4], [T; 10]) {
    let pw = |mu: usize, drop: u32| -> T {
        let p = powers[mu];
        if p < drop {
            return T::zero();
        }
        let mut fall = T::one();
        for d in 0..drop {
            fall *= T::lit((p - d) as f64);
        }
        fall * x[mu].powi((p - drop) as i32)
    };
    let value = (0..4).map(|m| pw(m, 0)).fold(T::one(), |a, b| a * b);
    let grad = std::array::from_fn(|m| {
        (0..4)
            .map(|n| pw(n, if n == m { 1 } else { 0 }))
            .fold(T::one(), |a, b| a * b)
    });
    let hess = std::array::from_fn(|k| {
        let (a, b) = HESS_PAIRS[k];
        (0..4)
            .map(|n| pw(n, (n == a) as u32 + (n == b) as u32))
            .fold(T::one(), |p, q| p * q)
    });
    (value, grad, hess)
}

impl<T: Real> ScalarPoly<T> {
    pub fn new(terms: Vec<(T, [u32; 4])>) -> Self {
        Self { terms }
    }

    /// Value, gradient and packed Hessian at `x`.
    pub fn eval(&self, x: &[T; 4]) -> (T, [T; 4], [T; 10]) {
        let mut v = T::zero();
        let mut g = [T::zero(); 4];
        let mut h = [T::zero(); 10];
        for (c, p) in &self.terms {
            let (mv, mg, mh) = monomial(p, x);
            v += *c * mv;
            for m in 0..4 {
                g[m] += *c * mg[m];
            }
            for k in 0..10 {
                h[k] += *c * mh[k];
            }
        }
        (v, g, h)
    }
}

/// Exact jet of `exp(θ S)` where `θ` has gradient `dθ` and Hessian `d²θ`,
/// using `∂(exp θS) = (∂θ) S exp θS`.
fn exp_line_jet<T: Real>(theta: T, dtheta: &[T; 4], d2theta: &[T; 10], s: &GammaNumber<T>) -> Jet2<T> {
    let e = GammaNumber::one(s.ctx());
    let s2 = s * s;
    let value = if (&s2 + &e).max_norm().as_f64() < 1e-13 {
        &e.scale_re(theta.cos()) + &s.scale_re(theta.sin())
    } else {
        matrix::exp(&s.scale_re(theta))
    };
    let sv = s * &value;
    let s2v = &s2 * &value;
    Jet2 {
        grad: map4(|m| sv.scale_re(dtheta[m])),
        hess: map10(|k| {
            let (a, b) = HESS_PAIRS[k];
            &sv.scale_re(d2theta[k]) + &s2v.scale_re(dtheta[a] * dtheta[b])
        }),
        value,
    }
}

/// Symbolic description of a gamma-valued field with exact jets.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldDescription<T: Real> {
    Constant(GammaNumber<T>),
    /// `x^μ e`.
    Coordinate(usize),
    /// `Σ c_k x^{α_k}` with gamma-number coefficients.
    Poly(Vec<(GammaNumber<T>, [u32; 4])>),
    /// `exp((p·x) S)` with `p·x = Σ p_μ x^μ`.
    PlaneWave { p: [T; 4], s: GammaNumber<T> },
    /// `exp(λ(x) t)` with polynomial `λ`.
    GroupFactor { lambda: ScalarPoly<T>, t: GammaNumber<T> },
    Sum(Vec<FieldDescription<T>>),
    /// Ordered product, leftmost factor first.
    Product(Vec<FieldDescription<T>>),
}

impl<T: Real> FieldDescription<T> {
    /// Exact second-order jet at `x`.
    pub fn jet(&self, ctx: &AlgebraContext, x: &[T; 4]) -> Jet2<T> {
        match self {
            Self::Constant(c) => Jet2::constant(c.clone()),
            Self::Coordinate(mu) => Jet2::coordinate(ctx, *mu, x),
            Self::Poly(terms) => {
                let mut acc = Jet2::zero(ctx);
                for (c, p) in terms {
                    let (v, g, h) = monomial(p, x);
                    let j = Jet2 {
                        value: c.scale_re(v),
                        grad: map4(|m| c.scale_re(g[m])),
                        hess: map10(|k| c.scale_re(h[k])),
                    };
                    acc = &acc + &j;
                }
                acc
            }
            Self::PlaneWave { p, s } => {
                let theta = (0..4).map(|m| p[m] * x[m]).sum();
                exp_line_jet(theta, p, &[T::zero(); 10], s)
            }
            Self::GroupFactor { lambda, t } => {
                let (v, g, h) = lambda.eval(x);
                exp_line_jet(v, &g, &h, t)
            }
            Self::Sum(parts) => parts
                .iter()
                .fold(Jet2::zero(ctx), |acc, f| &acc + &f.jet(ctx, x)),
            Self::Product(parts) => parts
                .iter()
                .fold(Jet2::one(ctx), |acc, f| &acc * &f.jet(ctx, x)),
        }
    }

    /// Value at `x`.
    pub fn value(&self, ctx: &AlgebraContext, x: &[T; 4]) -> GammaNumber<T> {
        self.jet(ctx, x).value
    }
}

/// Exact second-order jet of `f` at `x`.
pub fn jet_eval<T: Real>(f: &FieldDescription<T>, ctx: &AlgebraContext, x: &[T; 4]) -> Jet2<T> {
    f.jet(ctx, x)
}

/// Monomial with a gamma-number coefficient, serialized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTermSpec {
    pub coeff: Vec<CoeffRecord>,
    pub powers: [u32; 4],
}

/// Monomial with a real coefficient, serialized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarTermSpec {
    pub coeff: f64,
    pub powers: [u32; 4],
}

/// Serialized field description; gamma-number leaves are coefficient records in
/// the context supplied at build time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Constant { value: Vec<CoeffRecord> },
    Coordinate { mu: usize },
    Poly { terms: Vec<PolyTermSpec> },
    Planewave { p: [f64; 4], s: Vec<CoeffRecord> },
    Groupfactor { lambda: Vec<ScalarTermSpec>, t: Vec<CoeffRecord> },
    Sum { terms: Vec<FieldSpec> },
    Product { factors: Vec<FieldSpec> },
}

impl FieldSpec {
    /// Builds the description in `ctx`, validating indices and coefficients.
    pub fn build<T: Real>(&self, ctx: &AlgebraContext) -> Result<FieldDescription<T>> {
        let leaf = |r: &[CoeffRecord]| GammaNumber::<f64>::from_records(ctx, r).map(|g| g.cast::<T>());
        Ok(match self {
            Self::Constant { value } => FieldDescription::Constant(leaf(value)?),
            Self::Coordinate { mu } => {
                if *mu >= 4 || *mu >= ctx.n() {
                    return Err(Error::Schema(format!("coordinate index {mu} out of range")));
                }
                FieldDescription::Coordinate(*mu)
            }
            Self::Poly { terms } => FieldDescription::Poly(
                terms
                    .iter()
                    .map(|t| Ok((leaf(&t.coeff)?, t.powers)))
                    .collect::<Result<_>>()?,
            ),
            Self::Planewave { p, s } => {
                if p.iter().any(|v| !v.is_finite()) {
                    return Err(Error::Schema("non-finite momentum".into()));
                }
                FieldDescription::PlaneWave {
                    p: p.map(T::lit),
                    s: leaf(s)?,
                }
            }
            Self::Groupfactor { lambda, t } => {
                if lambda.iter().any(|m| !m.coeff.is_finite()) {
                    return Err(Error::Schema("non-finite polynomial coefficient".into()));
                }
                FieldDescription::GroupFactor {
                    lambda: ScalarPoly::new(lambda.iter().map(|m| (T::lit(m.coeff), m.powers)).collect()),
                    t: leaf(t)?,
                }
            }
            Self::Sum { terms } => FieldDescription::Sum(terms.iter().map(|f| f.build(ctx)).collect::<Result<_>>()?),
            Self::Product { factors } => {
                FieldDescription::Product(factors.iter().map(|f| f.build(ctx)).collect::<Result<_>>()?)
            }
        })
    }
}

/// Second-order jet of `f⁻¹`: `∂V = −V∂fV`, `∂_μ∂_νV = V(∂_μf V∂_νf + ∂_νf V∂_μf − ∂_μ∂_νf)V`.
pub fn jet_inverse<T: Real>(f: &Jet2<T>) -> Result<Jet2<T>> {
    let v = matrix::inverse(&f.value)?;
    let grad = map4(|m| -&(&(&v * &f.grad[m]) * &v));
    let hess = map10(|k| {
        let (m, n) = HESS_PAIRS[k];
        let inner = &(&(&(&f.grad[m] * &v) * &f.grad[n]) + &(&(&f.grad[n] * &v) * &f.grad[m])) - &f.hess[k];
        &(&v * &inner) * &v
    });
    Ok(Jet2 { value: v, grad, hess })
}
