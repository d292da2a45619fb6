//! Generator sets, structure constants, Killing forms, the adjoint
//! representation, ADRIO and spin-action checks, and isomorphism transport.

mod builtin;

pub use builtin::{
    antihermitian_basis, bivectors, builtin_generators, builtin_structure_constants, gamma4_bivectors, gamma5_set,
    gellmann_generators, l3_family, l6_3_half_sum, l6_family, l6p_family, spinorial_generators, BUILTIN_NAMES,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{quadratic_form, AlgebraContext, GammaNumber};
use crate::error::{Error, Result};
use crate::linalg::{self, RMatrix};
use crate::matrix;
use crate::sampling::{random_real_gamma, sample_rng, uniform_vec};
use crate::scalar::Real;

/// Residual above which an element counts as outside a generator span.
pub const SPAN_TOLERANCE: f64 = 1e-10;

/// Named, ordered list of gamma-numbers generating a real Lie algebra.
#[derive(Clone, Debug)]
pub struct GeneratorSet<T: Real> {
    name: String,
    gens: Vec<GammaNumber<T>>,
    gram_inv: RMatrix<T>,
}

impl<T: Real> GeneratorSet<T> {
    /// Creates a set from linearly independent (over the reals) generators.
    pub fn new(name: impl Into<String>, gens: Vec<GammaNumber<T>>) -> Result<Self> {
        let name = name.into();
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidInput(format!("generator set `{name}` is empty")))?;
        if gens.iter().any(|g| g.ctx() != first.ctx()) {
            return Err(Error::ContextMismatch);
        }
        let n = gens.len();
        let gram: RMatrix<T> = (0..n)
            .map(|i| (0..n).map(|j| gens[i].inner(&gens[j]).re).collect())
            .collect();
        let mut gram_inv = vec![vec![T::zero(); n]; n];
        for j in 0..n {
            let unit: Vec<T> = (0..n).map(|i| if i == j { T::one() } else { T::zero() }).collect();
            let col = linalg::solve_real(&gram, &unit)
                .ok_or_else(|| Error::InvalidInput(format!("generators of `{name}` are linearly dependent")))?;
            for i in 0..n {
                gram_inv[i][j] = col[i];
            }
        }
        Ok(Self { name, gens, gram_inv })
    }

    /// Creates a set and validates closure under the commutator.
    pub fn new_closed(name: impl Into<String>, gens: Vec<GammaNumber<T>>) -> Result<Self> {
        let gs = Self::new(name, gens)?;
        structure_constants(&gs)?;
        Ok(gs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gens(&self) -> &[GammaNumber<T>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.gens[0].ctx()
    }

    /// Real coefficients of the orthogonal projection of `x` onto the real span,
    /// plus the residual max-norm of `x` minus its projection.
    pub fn expand(&self, x: &GammaNumber<T>) -> (Vec<T>, T) {
        let n = self.len();
        let b: Vec<T> = self.gens.iter().map(|g| g.inner(x).re).collect();
        let coeffs: Vec<T> = (0..n)
            .map(|i| (0..n).map(|j| self.gram_inv[i][j] * b[j]).sum())
            .collect();
        let proj = self.combine(&coeffs);
        let residual = x.distance(&proj);
        (coeffs, residual)
    }

    /// Expansion coefficients, erroring when `x` is outside the span.
    pub fn coefficients(&self, x: &GammaNumber<T>, index: usize) -> Result<Vec<T>> {
        let (c, r) = self.expand(x);
        let tol = SPAN_TOLERANCE * (1.0 + x.max_norm().as_f64());
        if r.as_f64() > tol {
            return Err(Error::SpanEscape {
                index,
                residual: r.as_f64(),
            });
        }
        Ok(c)
    }

    /// Projection `π_L(x)` onto the real span.
    pub fn project(&self, x: &GammaNumber<T>) -> GammaNumber<T> {
        self.combine(&self.expand(x).0)
    }

    /// `Σ τ_k t_k`.
    pub fn combine(&self, tau: &[T]) -> GammaNumber<T> {
        let mut acc = GammaNumber::zero(self.ctx());
        for (g, &t) in self.gens.iter().zip(tau) {
            if t != T::zero() {
                acc += &g.scale_re(t);
            }
        }
        acc
    }

    /// Whether every generator satisfies `t† = −t` (Minkowski only).
    pub fn is_antihermitian(&self, tol: f64) -> bool {
        self.gens
            .iter()
            .all(|g| g.dagger().map(|d| d.approx_eq(&-g, tol)).unwrap_or(false))
    }

    /// Group element `exp(Σ τ_k t_k)`.
    pub fn group_element(&self, tau: &[T]) -> GammaNumber<T> {
        matrix::exp(&self.combine(tau))
    }

    /// Group element for sample `index` with `τ` uniform in `[−1, 1]^n`.
    pub fn sample_element(&self, seed: u64, index: u64) -> GammaNumber<T> {
        let mut rng = sample_rng(seed, index);
        self.group_element(&uniform_vec(&mut rng, self.len()))
    }

    /// Whether every generator commutes with each of `constraints`.
    pub fn commutes_with(&self, constraints: &[&GammaNumber<T>], tol: f64) -> bool {
        self.gens
            .iter()
            .all(|g| constraints.iter().all(|c| g.commutator(c).is_zero_within(tol)))
    }
}

/// Structure constants `c^m_{kl}` with `[t_k, t_l] = c^m_{kl} t_m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureConstants<T: Real> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> StructureConstants<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `c^m_{kl}`.
    pub fn get(&self, k: usize, l: usize, m: usize) -> T {
        self.data[(k * self.n + l) * self.n + m]
    }

    pub fn set(&mut self, k: usize, l: usize, m: usize, v: T) {
        let n = self.n;
        self.data[(k * n + l) * n + m] = v;
    }

    /// Largest entry-wise difference.
    pub fn distance(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }

    /// Largest violation of `c^m_{kl} = −c^m_{lk}`.
    pub fn antisymmetry_deviation(&self) -> T {
        let n = self.n;
        let mut worst = T::zero();
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    worst = worst.max((self.get(k, l, m) + self.get(l, k, m)).abs());
                }
            }
        }
        worst
    }

    /// Largest entry of the Jacobi contraction
    /// `c^m_{kl} c^p_{mj} + c^m_{lj} c^p_{mk} + c^m_{jk} c^p_{ml}`.
    pub fn jacobi_deviation(&self) -> T {
        let n = self.n;
        let mut worst = T::zero();
        for k in 0..n {
            for l in 0..n {
                for j in 0..n {
                    for p in 0..n {
                        let s: T = (0..n)
                            .map(|m| {
                                self.get(k, l, m) * self.get(m, j, p)
                                    + self.get(l, j, m) * self.get(m, k, p)
                                    + self.get(j, k, m) * self.get(m, l, p)
                            })
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Constants of the basis `τ_i = Σ_k H_{ik} t_k` for orthogonal `H`:
    /// `c'^p_{ij} = Σ H_{ik} H_{jl} c^m_{kl} H_{pm}`.
    pub fn transported(&self, h: &RMatrix<T>) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    let mut s = T::zero();
                    for k in 0..n {
                        for l in 0..n {
                            let hh = h[i][k] * h[j][l];
                            if hh == T::zero() {
                                continue;
                            }
                            for m in 0..n {
                                s += hh * self.get(k, l, m) * h[p][m];
                            }
                        }
                    }
                    out.set(i, j, p, s);
                }
            }
        }
        out
    }
}

/// Expands every commutator in the generator span; errors on the first pair
/// whose commutator leaves it.
pub fn structure_constants<T: Real>(gs: &GeneratorSet<T>) -> Result<StructureConstants<T>> {
    let n = gs.len();
    let mut sc = StructureConstants::zeros(n);
    for k in 0..n {
        for l in k + 1..n {
            let c = gs.gens[k].commutator(&gs.gens[l]);
            let (coeffs, residual) = gs.expand(&c);
            if residual.as_f64() > SPAN_TOLERANCE * (1.0 + c.max_norm().as_f64()) {
                return Err(Error::ClosureFailure {
                    k,
                    l,
                    residual: residual.as_f64(),
                });
            }
            for (m, v) in coeffs.into_iter().enumerate() {
                sc.set(k, l, m, v);
                sc.set(l, k, m, -v);
            }
        }
    }
    Ok(sc)
}

/// Killing form `B_{kl} = Σ_{m,n} c^m_{kn} c^n_{lm}`.
pub fn killing_form<T: Real>(sc: &StructureConstants<T>) -> RMatrix<T> {
    let d = sc.dim();
    (0..d)
        .map(|k| {
            (0..d)
                .map(|l| {
                    let mut s = T::zero();
                    for m in 0..d {
                        for n in 0..d {
                            s += sc.get(k, n, m) * sc.get(l, m, n);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Eigenvalues (ascending) of a Killing form.
pub fn killing_eigenvalues<T: Real>(b: &RMatrix<T>) -> Vec<T> {
    linalg::symmetric_eigenvalues(b)
}

/// Real matrix `Ad(U)` with `U t_k U^{-1} = Ad(U)_{jk} t_j`.
pub fn adjoint_matrix<T: Real>(u: &GammaNumber<T>, gs: &GeneratorSet<T>) -> Result<RMatrix<T>> {
    let uinv = matrix::inverse(u)?;
    let n = gs.len();
    let mut ad = vec![vec![T::zero(); n]; n];
    for (k, t) in gs.gens().iter().enumerate() {
        let img = &(u * t) * &uinv;
        let col = gs.coefficients(&img, k)?;
        for (j, v) in col.into_iter().enumerate() {
            ad[j][k] = v;
        }
    }
    Ok(ad)
}

fn orthogonality_deviation<T: Real>(a: &RMatrix<T>) -> T {
    let n = a.len();
    let mut worst = T::zero();
    for i in 0..n {
        for j in 0..n {
            let dot: T = (0..n).map(|k| a[k][i] * a[k][j]).sum();
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((dot - target).abs());
        }
    }
    worst
}

/// Largest deviation `‖AdᵀAd − I‖` (entry-wise max) over sampled group elements.
pub fn adrio_deviation<T: Real>(gs: &GeneratorSet<T>, samples: usize, seed: u64) -> Result<f64> {
    let devs: Result<Vec<f64>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let u = gs.sample_element(seed, i);
            let ad = adjoint_matrix(&u, gs)?;
            Ok(orthogonality_deviation(&ad).as_f64())
        })
        .collect();
    Ok(devs?.into_iter().fold(0.0, f64::max))
}

/// Largest residual of `U t_k U† = Ad_{lk} t_l` and `U† t_l U = Ad_{lk} t_k`
/// over sampled group elements.
pub fn adrio_conjugation_deviation<T: Real>(gs: &GeneratorSet<T>, samples: usize, seed: u64) -> Result<f64> {
    let devs: Result<Vec<f64>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let u = gs.sample_element(seed, i);
            let ud = u.dagger()?;
            let ad = adjoint_matrix(&u, gs)?;
            let n = gs.len();
            let mut worst = 0.0f64;
            for k in 0..n {
                let lhs = &(&u * &gs.gens[k]) * &ud;
                let col: Vec<T> = (0..n).map(|l| ad[l][k]).collect();
                worst = worst.max(lhs.distance(&gs.combine(&col)).as_f64());
                let lhs2 = &(&ud * &gs.gens[k]) * &u;
                let row: Vec<T> = (0..n).map(|j| ad[k][j]).collect();
                worst = worst.max(lhs2.distance(&gs.combine(&row)).as_f64());
            }
            Ok(worst)
        })
        .collect();
    Ok(devs?.into_iter().fold(0.0, f64::max))
}

/// Residuals of the spin-group action checks over sampled group elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpinActionReport {
    /// `max ‖F F^* − e‖`.
    pub unitarity: f64,
    /// `max ‖F v F^* − π_1(F v F^*)‖` over random grade-1 `v`.
    pub grade_leak: f64,
    /// `max |g(v,v) − g(w,w)|` with `w = π_1(F v F^*)`.
    pub metric: f64,
    pub samples: usize,
}

impl SpinActionReport {
    pub fn max_residual(&self) -> f64 {
        self.unitarity.max(self.grade_leak).max(self.metric)
    }
}

/// Samples `F = exp(Σ τ_k t_k)` and checks `F F^* = e`, grade-1 preservation of
/// `v ↦ F v F^*`, and preservation of the quadratic form.
pub fn spin_action_check<T: Real>(gs: &GeneratorSet<T>, samples: usize, seed: u64) -> SpinActionReport {
    let ctx = gs.ctx().clone();
    let rows: Vec<(f64, f64, f64)> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let f = gs.sample_element(seed, i);
            let fs = f.star();
            let unit = (&f * &fs).distance(&GammaNumber::one(&ctx)).as_f64();
            let mut rng = sample_rng(seed ^ 0xA11CE, i);
            let v: GammaNumber<T> = random_real_gamma(&ctx, &mut rng).grade(1);
            let w = &(&f * &v) * &fs;
            let w1 = w.grade(1);
            let leak = w.distance(&w1).as_f64();
            let metric = (quadratic_form(&v) - quadratic_form(&w1)).norm().as_f64();
            (unit, leak, metric)
        })
        .collect();
    let mut r = SpinActionReport {
        samples,
        ..Default::default()
    };
    for (u, l, m) in rows {
        r.unitarity = r.unitarity.max(u);
        r.grade_leak = r.grade_leak.max(l);
        r.metric = r.metric.max(m);
    }
    r
}

/// Transports the structure constants of `gs_a` through the orthogonal map `h`
/// (image of `t^A_k` is `Σ_j h_{jk} t^B_j`) and returns the largest deviation
/// from the constants of `gs_b`.
pub fn isomorphism_verify<T: Real>(gs_a: &GeneratorSet<T>, gs_b: &GeneratorSet<T>, h: &RMatrix<T>) -> Result<f64> {
    let n = gs_a.len();
    if gs_b.len() != n || h.len() != n || h.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("isomorphism map dimensions do not match".into()));
    }
    let dev = orthogonality_deviation(h).as_f64();
    if dev > 1e-10 {
        return Err(Error::NotOrthogonal { deviation: dev });
    }
    let ca = structure_constants(gs_a)?;
    let cb = structure_constants(gs_b)?;
    // Basis τ_j = Σ_k h_{jk} t^A_k has the constants of B iff φ is an isomorphism.
    let moved = ca.transported(h);
    Ok(moved.distance(&cb).as_f64())
}
