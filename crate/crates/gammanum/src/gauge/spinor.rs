//! Spinor idempotents and the column-by-column reduction of the abelian system.

use num_complex::Complex;

use super::dym::{dym_residual, DymConfig};
use super::PAIRS;
use crate::clifford::{AlgebraContext, GammaNumber};
use crate::dirac::MassVariant;
use crate::error::{Error, Result};
use crate::lie::spinorial_generators;
use crate::matrix::{gamma_matrices, to_matrix, Mat4};
use crate::scalar::{Cx, Real};

const SPINOR_TOLERANCE: f64 = 1e-10;

/// `s^{(k)} = (e ± e^0 ± ie^{12} ± ie^{012})/4`, the diagonal matrix units.
pub fn spinor_idempotents<T: Real>(ctx: &AlgebraContext) -> [GammaNumber<T>; 4] {
    let signs = [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)];
    signs.map(|(a, b, c)| {
        let terms = [
            (GammaNumber::one(ctx), Complex::new(1.0, 0.0)),
            (GammaNumber::named(ctx, "0"), Complex::new(a, 0.0)),
            (GammaNumber::named(ctx, "12"), Complex::new(0.0, b)),
            (GammaNumber::named(ctx, "012"), Complex::new(0.0, c)),
        ];
        let mut acc = GammaNumber::zero(ctx);
        for (g, s) in terms {
            acc += &g.scale(Complex::new(T::lit(s.re * 0.25), T::lit(s.im * 0.25)));
        }
        acc
    })
}

/// General 1-spinor `b₁(e + e^0 + ie^{12} + ie^{012}) + b₂(−e^{13} + ie^{23} − e^{013} + ie^{023})
/// + b₃(−e^3 + e^{03} − ie^{123} + ie^5) + b₄(−e^1 + ie^2 + e^{01} − ie^{02})`.
pub fn one_spinor<T: Real>(b: [Cx<T>; 4]) -> GammaNumber<T> {
    let ctx = AlgebraContext::minkowski();
    let blocks: [[(f64, f64, &str); 4]; 4] = [
        [(1.0, 0.0, ""), (1.0, 0.0, "0"), (0.0, 1.0, "12"), (0.0, 1.0, "012")],
        [(-1.0, 0.0, "13"), (0.0, 1.0, "23"), (-1.0, 0.0, "013"), (0.0, 1.0, "023")],
        [(-1.0, 0.0, "3"), (1.0, 0.0, "03"), (0.0, -1.0, "123"), (0.0, 1.0, "0123")],
        [(-1.0, 0.0, "1"), (0.0, 1.0, "2"), (1.0, 0.0, "01"), (0.0, -1.0, "02")],
    ];
    let mut acc = GammaNumber::zero(&ctx);
    for (bk, block) in b.iter().zip(blocks) {
        for (re, im, digits) in block {
            let c = Complex::new(T::lit(re), T::lit(im)) * bk;
            acc += &GammaNumber::named(&ctx, digits).scale(c);
        }
    }
    acc
}

/// Residuals of one column system: Dirac (4 components), curvature (6), field equation (4).
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedResidual<T: Real> {
    pub dirac: [Cx<T>; 4],
    pub curvature: [T; 6],
    pub field: [T; 4],
}

impl<T: Real> ReducedResidual<T> {
    pub fn distance(&self, other: &Self) -> T {
        let d = (0..4).fold(T::zero(), |a, i| a.max((self.dirac[i] - other.dirac[i]).norm()));
        let c = (0..6).fold(d, |a, i| a.max((self.curvature[i] - other.curvature[i]).abs()));
        (0..4).fold(c, |a, i| a.max((self.field[i] - other.field[i]).abs()))
    }

    pub fn max_norm(&self) -> T {
        let d = self.dirac.iter().fold(T::zero(), |a, c| a.max(c.norm()));
        let c = self.curvature.iter().fold(d, |a, c| a.max(c.abs()));
        self.field.iter().fold(c, |a, c| a.max(c.abs()))
    }
}

/// Column systems built independently from the matrix columns, and the same
/// quantities read off the full residual right-multiplied by `s^{(l)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorReduction<T: Real> {
    pub reduced: [ReducedResidual<T>; 4],
    pub projected: [ReducedResidual<T>; 4],
}

impl<T: Real> SpinorReduction<T> {
    /// Largest difference between reduced and projected residuals over all four columns.
    pub fn deviation(&self) -> T {
        (0..4).fold(T::zero(), |a, l| a.max(self.reduced[l].distance(&self.projected[l])))
    }
}

fn require_spinorial<T: Real>(cfg: &DymConfig<T>) -> Result<()> {
    let want = spinorial_generators::<T>();
    let gs = cfg.gs().gens();
    let ok = gs.len() == 4 && gs.iter().zip(&want).all(|(a, b)| a.approx_eq(b, SPINOR_TOLERANCE));
    if !ok {
        return Err(Error::InvalidInput(format!(
            "spinor reduction needs the spinorial generators, got `{}`",
            cfg.gs().name()
        )));
    }
    Ok(())
}

/// Diagonal of `m·N` in the matrix representation; requires `K = 0` and `N` diagonal and real.
fn column_masses<T: Real>(cfg: &DymConfig<T>) -> Result<[T; 4]> {
    if !cfg.mass.k.is_zero_within(SPINOR_TOLERANCE) {
        return Err(Error::InvalidInput("spinor reduction needs K = 0".into()));
    }
    let n = to_matrix(&cfg.mass.n)?;
    let tol = T::tolerance(SPINOR_TOLERANCE);
    for r in 0..4 {
        for c in 0..4 {
            let bad = if r == c { n.m[r][c].im.abs() } else { n.m[r][c].norm() };
            if bad.as_f64() > tol {
                return Err(Error::InvalidInput("spinor reduction needs a real diagonal N".into()));
            }
        }
    }
    Ok(std::array::from_fn(|l| cfg.mass.m * n.m[l][l].re))
}

/// `−i` times the `(l, l)` entry: the coefficient against `i s^{(l)}`.
fn diag_coeff<T: Real>(m: &Mat4<T>, l: usize) -> T {
    (m.m[l][l] * Complex::new(T::zero(), -T::one())).re
}

fn reduce<T: Real>(cfg: &DymConfig<T>, x: &[T; 4]) -> Result<SpinorReduction<T>> {
    require_spinorial(cfg)?;
    let mass = column_masses(cfg)?;
    let (psi, jets) = cfg.jets(x)?;
    let full = dym_residual(cfg, x)?;
    let gm = gamma_matrices::<T>();
    let g = [1.0, -1.0, -1.0, -1.0].map(T::lit);
    let i = Complex::new(T::zero(), T::one());
    let eps = cfg.epsilon;

    let psi_m = to_matrix(&psi.value)?;
    let dpsi_m: Vec<Mat4<T>> = psi.grad.iter().map(to_matrix).collect::<Result<_>>()?;
    let a_m: Vec<Mat4<T>> = jets.a.iter().map(|j| to_matrix(&j.value)).collect::<Result<_>>()?;
    let da_m: Vec<Vec<Mat4<T>>> = jets
        .a
        .iter()
        .map(|j| j.grad.iter().map(to_matrix).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let f_m: Vec<Mat4<T>> = jets.f.iter().map(|j| to_matrix(&j.value)).collect::<Result<_>>()?;
    let df_m: Vec<Vec<Mat4<T>>> = jets
        .f
        .iter()
        .map(|j| j.grad.iter().map(to_matrix).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let reduced = std::array::from_fn(|l| {
        let col = psi_m.column(l);
        let b: [T; 4] = std::array::from_fn(|mu| diag_coeff(&a_m[mu], l));
        let mut dirac = col.map(|c| -c * mass[l]);
        for mu in 0..4 {
            let dcol = dpsi_m[mu].column(l);
            let cov: [Cx<T>; 4] = std::array::from_fn(|r| dcol[r] - i * col[r] * b[mu]);
            let v = gm[mu].apply(&cov);
            for r in 0..4 {
                dirac[r] += i * v[r];
            }
        }
        let h = |mu: usize, nu: usize, d: Option<usize>| -> T {
            match super::pair_index(mu, nu) {
                None => T::zero(),
                Some((k, s)) => {
                    let m = match d {
                        None => &f_m[k],
                        Some(r) => &df_m[k][r],
                    };
                    diag_coeff(m, l) * T::lit(s as f64)
                }
            }
        };
        let curvature = std::array::from_fn(|k| {
            let (mu, nu) = PAIRS[k];
            diag_coeff(&da_m[nu][mu], l) - diag_coeff(&da_m[mu][nu], l) - h(mu, nu, None)
        });
        let bar: [Cx<T>; 4] = {
            let v = gm[0].apply(&col);
            std::array::from_fn(|r| v[r].conj())
        };
        let field = std::array::from_fn(|nu| {
            let div = (0..4).fold(T::zero(), |a, mu| a + g[mu] * h(mu, nu, Some(mu)));
            let gv = gm[nu].apply(&col);
            let current = (0..4).fold(Complex::new(T::zero(), T::zero()), |a, r| a + bar[r] * gv[r]).re * g[nu];
            div - eps * current
        });
        ReducedResidual { dirac, curvature, field }
    });

    let dirac_full = to_matrix(&full.dirac)?;
    let eq1 = full.ym.eq1.bivector_part().iter().map(to_matrix).collect::<Result<Vec<_>>>()?;
    let eq2 = full.ym.eq2.vector_part().iter().map(to_matrix).collect::<Result<Vec<_>>>()?;
    let projected = std::array::from_fn(|l| ReducedResidual {
        dirac: dirac_full.column(l),
        curvature: std::array::from_fn(|k| diag_coeff(&eq1[k], l)),
        field: std::array::from_fn(|nu| diag_coeff(&eq2[nu], l)),
    });
    Ok(SpinorReduction { reduced, projected })
}

/// Reduction of the abelian system with spinorial generators and `N = q^k s^{(k)}` at `x`.
pub fn spinor_reduce<T: Real>(cfg: &DymConfig<T>, x: &[T; 4]) -> Result<SpinorReduction<T>> {
    reduce(cfg, x)
}

/// Reduction of the multi-mass system `m = 1`, `N = M = diag(m₁, …, m₄)` at `x`.
pub fn multi_mass_reduce<T: Real>(cfg: &DymConfig<T>, x: &[T; 4]) -> Result<SpinorReduction<T>> {
    if cfg.mass.variant != MassVariant::MultiMass {
        return Err(Error::InvalidInput("multi-mass reduction needs a multi-mass term".into()));
    }
    reduce(cfg, x)
}
