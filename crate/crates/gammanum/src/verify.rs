//! Seeded verification suites and their machine-readable reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{commutant_basis, AlgebraContext, BladeMask, Field, GammaNumber};
use crate::dirac::{
    currents, dirac_residual, factorization_check, global_covariance_error, hestenes_wave, lemma3_deviation,
    plane_wave, real_wave, s_classes, standard_wave, tilde_lemma_deviation, CanonicalForm, CurrentKind, MassTerm,
    PlaneWaveSpec,
};
use crate::error::{Error, Result};
use crate::gauge::{
    dym_covariance_error, form_equivalence_deviation, multi_mass_reduce, polar_gauge, source_covariance_error,
    spinor_idempotents, spinor_reduce, ym_residual_derived, DymConfig, FieldStrength, GaugeJets, LieValuedPotential,
    StrengthSource,
};
use crate::jet::{jet_eval, FieldDescription, ScalarPoly};
use crate::lie::{
    adrio_conjugation_deviation, adrio_deviation, bivectors, builtin_generators, gamma4_bivectors, gamma5_set,
    isomorphism_verify, killing_eigenvalues, killing_form, l6_3_half_sum, spin_action_check, structure_constants,
    GeneratorSet, BUILTIN_NAMES,
};
use crate::matrix::{self, dagger_deviation, from_matrix, to_matrix};
use crate::sampling::{random_gamma, random_real_gamma, sample_rng, uniform, uniform_vec, DEFAULT_SEED};

type G = GammaNumber<f64>;
type Fd = FieldDescription<f64>;

/// Version of the report layout.
pub const REPORT_SCHEMA: u32 = 1;
/// Default tolerance for identities linear in the sampled data.
pub const ALGEBRAIC_TOLERANCE: f64 = 1e-12;
/// Default tolerance for identities quadratic in the fields.
pub const QUADRATIC_TOLERANCE: f64 = 1e-10;
/// Default number of random instances per check.
pub const DEFAULT_SAMPLES: usize = 100;

const FORMS: [CanonicalForm; 4] = [CanonicalForm::I, CanonicalForm::II, CanonicalForm::III, CanonicalForm::IV];

/// Named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Clifford,
    Matrix,
    Lie,
    Dirac,
    Gauge,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "clifford", "matrix", "lie", "dirac", "gauge"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Clifford => "clifford",
            Suite::Matrix => "matrix",
            Suite::Lie => "lie",
            Suite::Dirac => "dirac",
            Suite::Gauge => "gauge",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Clifford, Suite::Matrix, Suite::Lie, Suite::Dirac, Suite::Gauge],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "clifford" => Ok(Suite::Clifford),
            "matrix" => Ok(Suite::Matrix),
            "lie" => Ok(Suite::Lie),
            "dirac" => Ok(Suite::Dirac),
            "gauge" => Ok(Suite::Gauge),
            other => Err(Error::InvalidInput(format!(
                "unknown suite `{other}`; expected one of {}",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

/// Run parameters shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Multiplies every gating tolerance.
    pub tolerance_scale: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            tolerance_scale: 1.0,
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// Name of the identity being checked.
    pub anchor: String,
    pub samples: usize,
    pub max_residual: f64,
    /// `None` for informational checks, which always pass.
    pub tolerance: Option<f64>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// One verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub tolerance_scale: f64,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    pub wall_time_ms: f64,
}

impl SuiteReport {
    /// Records that failed.
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Copy with the wall time zeroed, for comparing runs.
    pub fn payload(&self) -> Self {
        Self {
            wall_time_ms: 0.0,
            ..self.clone()
        }
    }

    /// Human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "suite {} seed {:#x} samples {} scale {}\n",
            self.suite, self.seed, self.samples, self.tolerance_scale
        );
        for c in &self.checks {
            let tol = c.tolerance.map_or("info".to_string(), |t| format!("{t:.1e}"));
            let status = if c.tolerance.is_none() {
                "INFO"
            } else if c.pass {
                "PASS"
            } else {
                "FAIL"
            };
            out += &format!("{status} {:<40} {:>10.3e} < {:<8} [{}]", c.id, c.max_residual, tol, c.anchor);
            if let Some(e) = &c.error {
                out += &format!(" error: {e}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out += &format!(
            "{}: {} checks, {} failed, {:.0} ms\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed,
            self.wall_time_ms
        );
        out
    }
}

type Runner = Box<dyn Fn(&VerifyOptions, u64) -> Result<(usize, f64)> + Send + Sync>;

struct Check {
    id: String,
    anchor: &'static str,
    tolerance: Option<f64>,
    run: Runner,
}

fn check(
    id: impl Into<String>,
    anchor: &'static str,
    tolerance: Option<f64>,
    run: impl Fn(&VerifyOptions, u64) -> Result<(usize, f64)> + Send + Sync + 'static,
) -> Check {
    Check {
        id: id.into(),
        anchor,
        tolerance,
        run: Box::new(run),
    }
}

fn stream_of(id: &str) -> u64 {
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn run_check(c: &Check, opts: &VerifyOptions) -> CheckRecord {
    let tolerance = c.tolerance.map(|t| t * opts.tolerance_scale);
    match (c.run)(opts, opts.seed ^ stream_of(&c.id)) {
        Ok((samples, r)) => CheckRecord {
            id: c.id.clone(),
            anchor: c.anchor.to_string(),
            samples,
            max_residual: r,
            tolerance,
            pass: tolerance.map_or(true, |t| r < t),
            error: None,
        },
        Err(e) => CheckRecord {
            id: c.id.clone(),
            anchor: c.anchor.to_string(),
            samples: 0,
            max_residual: f64::NAN,
            tolerance,
            pass: false,
            error: Some(e.to_string()),
        },
    }
}

/// Runs every check of `suite` in parallel; records are ordered by id.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let checks: Vec<Check> = suite.members().into_iter().flat_map(checks_of).collect();
    let mut records: Vec<CheckRecord> = checks.par_iter().map(|c| run_check(c, opts)).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let pass = records.iter().all(|r| r.pass);
    SuiteReport {
        schema: REPORT_SCHEMA,
        suite,
        seed: opts.seed,
        samples: opts.samples,
        tolerance_scale: opts.tolerance_scale,
        checks: records,
        pass,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn checks_of(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => Vec::new(),
        Suite::Clifford => clifford_checks(),
        Suite::Matrix => matrix_checks(),
        Suite::Lie => lie_checks(),
        Suite::Dirac => dirac_checks(),
        Suite::Gauge => gauge_checks(),
    }
}

fn mk() -> AlgebraContext {
    AlgebraContext::minkowski()
}

/// Maximum of `f(i, rng)` over `n` independently seeded samples.
fn sample_max(n: usize, stream: u64, f: impl Fn(usize, &mut ChaCha8Rng) -> Result<f64> + Sync) -> Result<(usize, f64)> {
    let vals: Result<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| f(i, &mut sample_rng(stream, i as u64)))
        .collect();
    Ok((n, vals?.into_iter().fold(0.0, f64::max)))
}

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

fn general_contexts() -> Vec<AlgebraContext> {
    let sigs: [&[i8]; 5] = [&[1, 1], &[1, -1, -1], &[1, 1, 1, 1, 1], &[1, -1, -1, -1, -1], &[1, 1, 1, -1, -1, -1]];
    let mut out = vec![mk(), AlgebraContext::minkowski_real()];
    for s in sigs {
        out.push(AlgebraContext::new(s, Field::Complex).expect("valid signature"));
    }
    out
}

fn clifford_checks() -> Vec<Check> {
    vec![
        check("clifford.associativity", "associativity of the product", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let ctxs = general_contexts();
            sample_max(o.samples, s, |i, rng| {
                let c = &ctxs[i % ctxs.len()];
                let (a, b, d): (G, G, G) = (random_gamma(c, rng), random_gamma(c, rng), random_gamma(c, rng));
                let lhs = &(&a * &b) * &d;
                Ok(rel(lhs.distance(&(&a * &(&b * &d))), lhs.max_norm()))
            })
        }),
        check(
            "clifford.anticommutation",
            "generator anticommutation e^i e^j + e^j e^i = 2 g^ij e",
            Some(ALGEBRAIC_TOLERANCE),
            |_, _| {
                let mut worst = 0.0f64;
                let mut count = 0;
                for c in general_contexts() {
                    for i in 0..c.n() {
                        for j in 0..c.n() {
                            let (a, b) = (G::generator(&c, i), G::generator(&c, j));
                            let g = if i == j { c.signature()[i] as f64 } else { 0.0 };
                            let want = G::one(&c).scale_re(2.0 * g);
                            worst = worst.max(a.anticommutator(&b).distance(&want));
                            count += 1;
                        }
                    }
                }
                Ok((count, worst))
            },
        ),
        check("clifford.star_antiautomorphism", "conjugation reverses products", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let ctxs = general_contexts();
            sample_max(o.samples, s, |i, rng| {
                let c = &ctxs[i % ctxs.len()];
                let (a, b): (G, G) = (random_gamma(c, rng), random_gamma(c, rng));
                let lhs = (&a * &b).star();
                Ok(rel(lhs.distance(&(&b.star() * &a.star())), lhs.max_norm()))
            })
        }),
        check("clifford.grade_range", "grade range of homogeneous products", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let ctxs = general_contexts();
            sample_max(o.samples, s, |i, rng| {
                let c = &ctxs[i % ctxs.len()];
                let r = rng.gen_range(0..=c.n());
                let q = rng.gen_range(0..=c.n());
                let a: G = random_gamma(c, rng).grade(r);
                let b: G = random_gamma(c, rng).grade(q);
                let p = &a * &b;
                let lo = r.abs_diff(q);
                let outside = p.filter(|m| {
                    let k = m.grade();
                    k < lo || k > r + q || (k + r + q) % 2 == 1
                });
                Ok(outside.max_norm())
            })
        }),
        check("clifford.dagger_antiautomorphism", "hermitian conjugation reverses products", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let (a, b): (G, G) = (random_gamma(&mk(), rng), random_gamma(&mk(), rng));
                let lhs = (&a * &b).dagger()?;
                let twice = a.dagger()?.dagger()?.distance(&a);
                Ok(rel(lhs.distance(&(&b.dagger()? * &a.dagger()?)), lhs.max_norm()).max(twice))
            })
        }),
    ]
}

fn bounded(rng: &mut ChaCha8Rng) -> G {
    random_gamma(&mk(), rng).scale_re(0.25)
}

fn invertible(rng: &mut ChaCha8Rng) -> G {
    &G::one(&mk()).scale_re(2.0) + &random_gamma(&mk(), rng).scale_re(0.1)
}

fn matrix_checks() -> Vec<Check> {
    let t = Some(QUADRATIC_TOLERANCE);
    vec![
        check("matrix.homomorphism", "matrix representation is multiplicative", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let (a, b): (G, G) = (random_gamma(&mk(), rng), random_gamma(&mk(), rng));
                let lhs = to_matrix(&(&a * &b))?;
                let rhs = matrix::Mat4 { m: mat_mul(&to_matrix(&a)?.m, &to_matrix(&b)?.m) };
                Ok(rel(lhs.distance(&rhs), lhs.max_abs()))
            })
        }),
        check("matrix.dagger_adjoint", "dagger equals conjugate transpose", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| dagger_deviation(&random_gamma::<f64>(&mk(), rng)))
        }),
        check("matrix.round_trip", "matrix round trip", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a: G = random_gamma(&mk(), rng);
                Ok(from_matrix(&mk(), &to_matrix(&a)?)?.distance(&a))
            })
        }),
        check("matrix.exp_star", "exponential commutes with conjugation", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                let e = matrix::exp(&a);
                Ok(rel(e.star().distance(&matrix::exp(&a.star())), e.max_norm()))
            })
        }),
        check("matrix.exp_dagger", "exponential commutes with hermitian conjugation", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                let e = matrix::exp(&a);
                Ok(rel(e.dagger()?.distance(&matrix::exp(&a.dagger()?)), e.max_norm()))
            })
        }),
        check("matrix.exp_similarity", "exponential commutes with similarity", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                let v = invertible(rng);
                let vi = matrix::inverse(&v)?;
                let lhs = matrix::exp(&(&(&vi * &a) * &v));
                let rhs = &(&vi * &matrix::exp(&a)) * &v;
                Ok(rel(lhs.distance(&rhs), lhs.max_norm()))
            })
        }),
        check("matrix.exp_det_trace", "determinant of exponential is exponential of trace", Some(1e-8), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                let d = matrix::det(&matrix::exp(&a))?;
                let want = matrix::trace(&a).exp();
                Ok((d - want).norm() / want.norm())
            })
        }),
        check("matrix.exp_inverse", "exponential inverse is exponential of negation", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                Ok((&matrix::exp(&a) * &matrix::exp(&-&a)).distance(&G::one(&mk())))
            })
        }),
        check("matrix.exp_commuting_sum", "exponential of commuting sum", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let a = bounded(rng);
                let b = &a.scale_re(uniform(rng)) + &(&a * &a).scale_re(0.5 * uniform::<f64>(rng));
                let lhs = &matrix::exp(&a) * &matrix::exp(&b);
                Ok(rel(lhs.distance(&matrix::exp(&(&a + &b))), lhs.max_norm()))
            })
        }),
        check("matrix.exp_rotor", "exponential of a square root of minus one", t, |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let base = ["12", "1", "23", "0123", "013"][i % 5];
                let v = invertible(rng);
                let a = &(&matrix::inverse(&v)? * &G::named(&mk(), base)) * &v;
                let phi = 3.0 * uniform::<f64>(rng);
                let want = &G::one(&mk()).scale_re(phi.cos()) + &a.scale_re(phi.sin());
                let e = matrix::exp(&a.scale_re(phi));
                Ok(rel(e.distance(&want), e.max_norm()))
            })
        }),
    ]
}

fn mat_mul(a: &[[Complex<f64>; 4]; 4], b: &[[Complex<f64>; 4]; 4]) -> [[Complex<f64>; 4]; 4] {
    let mut out = [[Complex::new(0.0, 0.0); 4]; 4];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = (0..4).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    out
}

fn diag(d: &[f64]) -> Vec<Vec<f64>> {
    (0..d.len())
        .map(|i| (0..d.len()).map(|j| if i == j { d[i] } else { 0.0 }).collect())
        .collect()
}

const SEMISIMPLE: [&str; 11] = ["L15", "L10_1", "L10_2", "L10_3", "L6_1", "L6_2", "L6_3", "L6p_1", "L3_1", "L3_2", "gellmann8"];

fn lie_checks() -> Vec<Check> {
    let mut out = vec![
        check("lie.closure", "builtin sets close with antisymmetric Jacobi constants", Some(ALGEBRAIC_TOLERANCE), |_, _| {
            let mut worst = 0.0f64;
            for name in BUILTIN_NAMES {
                let sc = structure_constants(&builtin_generators::<f64>(name)?)?;
                worst = worst.max(sc.antisymmetry_deviation()).max(sc.jacobi_deviation());
            }
            Ok((BUILTIN_NAMES.len(), worst))
        }),
        check("lie.su2_constants", "su(2) constants are twice Levi-Civita", Some(ALGEBRAIC_TOLERANCE), |_, _| {
            let sc = structure_constants(&builtin_generators::<f64>("L3_1")?)?;
            let mut worst = 0.0f64;
            for k in 0..3 {
                for l in 0..3 {
                    for m in 0..3 {
                        worst = worst.max((sc.get(k, l, m) - 2.0 * levi_civita(k, l, m)).abs());
                    }
                }
            }
            Ok((27, worst))
        }),
        check("lie.gamma5_constants", "L10_1 constants match the five-generator spin set", Some(ALGEBRAIC_TOLERANCE), |_, _| {
            let a = structure_constants(&builtin_generators::<f64>("L10_1")?)?;
            Ok((1, a.distance(&structure_constants(&gamma5_set::<f64>())?)))
        }),
        check("lie.isomorphisms", "explicit orthogonal isomorphisms transport constants", Some(ALGEBRAIC_TOLERANCE), |_, _| {
            let l31 = builtin_generators::<f64>("L3_1")?;
            let l32 = builtin_generators::<f64>("L3_2")?;
            let r1 = isomorphism_verify(&l31, &l32, &diag(&[-1.0, -1.0, 1.0]))?;
            let l6p = builtin_generators::<f64>("L6p_1")?;
            let r2 = isomorphism_verify(&l6p, &l6_3_half_sum::<f64>(), &diag(&[1.0, 1.0, 1.0, 1.0, 1.0, -1.0]))?;
            Ok((2, r1.max(r2)))
        }),
        check("lie.spin_actions", "spin groups preserve vectors and the metric", Some(QUADRATIC_TOLERANCE), |o, s| {
            let sets = [
                gamma4_bivectors::<f64>(),
                gamma5_set::<f64>(),
                bivectors(&AlgebraContext::euclidean(2)?)?,
                bivectors(&AlgebraContext::euclidean(3)?)?,
            ];
            let worst = sets
                .iter()
                .map(|gs| spin_action_check(gs, o.samples, s).max_residual())
                .fold(0.0, f64::max);
            Ok((o.samples * sets.len(), worst))
        }),
        check("lie.adjoint_conjugation", "adjoint matrices conjugate generators", Some(QUADRATIC_TOLERANCE), |o, s| {
            let mut worst = 0.0f64;
            for name in ["antihermitian16", "gellmann15", "gellmann8", "spinorial4"] {
                worst = worst.max(adrio_conjugation_deviation(&builtin_generators::<f64>(name)?, o.samples, s)?);
            }
            Ok((4 * o.samples, worst))
        }),
    ];
    for name in SEMISIMPLE {
        out.push(check(
            format!("lie.killing.{name}"),
            "Killing form of a compact semisimple algebra is negative definite",
            Some(0.0),
            move |_, _| {
                let ev = killing_eigenvalues(&killing_form(&structure_constants(&builtin_generators::<f64>(name)?)?));
                Ok((1, ev.into_iter().fold(f64::NEG_INFINITY, f64::max)))
            },
        ));
    }
    for name in BUILTIN_NAMES {
        let gs = builtin_generators::<f64>(name).expect("builtin set");
        let gating = gs.is_antihermitian(1e-12);
        out.push(check(
            format!("lie.adrio.{name}"),
            "adjoint representation is orthogonal",
            gating.then_some(1e-9),
            move |o, s| Ok((o.samples, adrio_deviation(&gs, o.samples, s)?)),
        ));
    }
    out
}

fn levi_civita(k: usize, l: usize, m: usize) -> f64 {
    match (k, l, m) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn random_commutant(mt: &MassTerm<f64>, rng: &mut ChaCha8Rng) -> G {
    commutant_basis(&mk(), &[mt.n.clone(), mt.k.clone()])
        .into_iter()
        .fold(G::zero(&mk()), |acc, b| &acc + &b.scale(Complex::new(uniform(rng), uniform(rng))))
}

fn random_mass(form: CanonicalForm, rng: &mut ChaCha8Rng) -> Result<MassTerm<f64>> {
    let m = 0.5 + rng.gen::<f64>();
    MassTerm::canonical(form, m, std::f64::consts::TAU * rng.gen::<f64>(), std::f64::consts::TAU * rng.gen::<f64>())
}

fn random_wave(mt: &MassTerm<f64>, class: usize, rng: &mut ChaCha8Rng) -> Result<Fd> {
    let u = &G::one(&mk()).scale_re(2.0) + &random_commutant(mt, rng).scale_re(0.3);
    let s = &(&matrix::inverse(&u)? * &s_classes::<f64>()[class]) * &u;
    let y = random_commutant(mt, rng);
    let p: [f64; 3] = [uniform(rng), uniform(rng), uniform(rng)];
    let e = (p.iter().map(|v| v * v).sum::<f64>() + mt.m * mt.m).sqrt();
    Ok(plane_wave(&PlaneWaveSpec::new([e, p[0], p[1], p[2]], s, y, mt.clone())?))
}

fn random_point(rng: &mut ChaCha8Rng) -> [f64; 4] {
    [uniform(rng), uniform(rng), uniform(rng), uniform(rng)]
}

fn admissible(mt: &MassTerm<f64>) -> Vec<GeneratorSet<f64>> {
    BUILTIN_NAMES
        .iter()
        .filter_map(|n| builtin_generators::<f64>(n).ok())
        .filter(|gs| gs.ctx() == mt.ctx() && gs.commutes_with(&[&mt.n, &mt.k], 1e-12))
        .collect()
}

fn dirac_checks() -> Vec<Check> {
    vec![
        check("dirac.plane_waves", "plane waves solve the Dirac equation", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let mt = random_mass(FORMS[i % 4], rng)?;
                let f = random_wave(&mt, i % 5, rng)?;
                let j = jet_eval(&f, &mk(), &random_point(rng)).to_jet1();
                Ok(rel(dirac_residual(&j, &mt, None)?.max_norm(), j.max_norm()))
            })
        }),
        check("dirac.standard_wave_normalization", "standard wave is normalized", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let m = 0.5 + rng.gen::<f64>();
                let p: [f64; 3] = [uniform(rng), uniform(rng), uniform(rng)];
                let e = (p.iter().map(|v| v * v).sum::<f64>() + m * m).sqrt();
                let (f, mt) = standard_wave(m, [e, p[0], p[1], p[2]])?;
                let j = jet_eval(&f, &mk(), &random_point(rng));
                let norm = (&j.value * &j.value.star()).distance(&G::one(&mk()));
                Ok(norm.max(dirac_residual(&j.to_jet1(), &mt, None)?.max_norm()))
            })
        }),
        check("dirac.real_waves", "real and Hestenes waves solve the real equation", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let rc = AlgebraContext::minkowski_real();
            sample_max(o.samples, s, |i, rng| {
                let m = 0.5 + rng.gen::<f64>();
                let p: [f64; 3] = [uniform(rng), uniform(rng), uniform(rng)];
                let e = (p.iter().map(|v| v * v).sum::<f64>() + m * m).sqrt();
                let p = [e, p[0], p[1], p[2]];
                let (f, mt) = if i % 2 == 0 {
                    let q: [f64; 3] = [uniform(rng), uniform(rng), uniform(rng)];
                    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
                    real_wave(m, p, q.map(|v| v / n))?
                } else {
                    hestenes_wave(m, p)?
                };
                let j = jet_eval(&f, &rc, &random_point(rng)).to_jet1();
                Ok(dirac_residual(&j, &mt, None)?.max_norm())
            })
        }),
        check("dirac.klein_gordon_factorization", "first-order factorizations of Klein-Gordon", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let mut terms = Vec::new();
                for a in 0..=3u32 {
                    for b in 0..=3 - a {
                        for c in 0..=3 - a - b {
                            terms.push((random_gamma::<f64>(&mk(), rng), [a, b, c, 3 - a - b - c]));
                        }
                    }
                }
                let j = jet_eval(&Fd::Poly(terms), &mk(), &random_point(rng));
                let m = 0.5 + rng.gen::<f64>();
                let th = std::f64::consts::TAU * rng.gen::<f64>();
                let r = factorization_check(&j, m, Complex::new(th.cos(), 0.0), Complex::new(th.sin(), 0.0));
                Ok(rel(r.max_norm(), j.max_norm()))
            })
        }),
        check("dirac.current_conservation", "currents of solutions are conserved", Some(QUADRATIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let mt = random_mass(FORMS[i % 4], rng)?;
                let f = Fd::Sum(vec![random_wave(&mt, 0, rng)?, random_wave(&mt, 3, rng)?]);
                let j = jet_eval(&f, &mk(), &random_point(rng)).to_jet1();
                let mut worst = 0.0f64;
                for gs in admissible(&mt) {
                    worst = worst.max(currents(&j, &gs, CurrentKind::Imaginary)?.max_divergence());
                }
                Ok(rel(worst, j.max_norm().powi(2)))
            })
        }),
        check("dirac.projection_identities", "Lie projection identities for currents", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let sets: Vec<GeneratorSet<f64>> = ["antihermitian16", "gellmann15", "spinorial4"]
                .iter()
                .map(|n| builtin_generators(n))
                .collect::<Result<_>>()?;
            sample_max(o.samples, s, |i, rng| {
                let psi: G = random_gamma(&mk(), rng);
                let gs = &sets[i % sets.len()];
                Ok(lemma3_deviation(&psi, gs)?.max(tilde_lemma_deviation(&psi, gs)?))
            })
        }),
        check("dirac.global_covariance", "constant gauge covariance of the residual", Some(QUADRATIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let mt = random_mass(FORMS[i % 4], rng)?;
                let f = Fd::Poly(vec![(random_gamma(&mk(), rng), [1, 0, 0, 0]), (random_gamma(&mk(), rng), [0, 1, 1, 0])]);
                let j = jet_eval(&f, &mk(), &random_point(rng)).to_jet1();
                let u = &G::one(&mk()) + &random_commutant(&mt, rng).scale_re(0.3);
                global_covariance_error(&j, &mt, &u)
            })
        }),
    ]
}

fn lie_poly(gs: &GeneratorSet<f64>, rng: &mut ChaCha8Rng) -> Fd {
    let powers = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0], [0, 0, 1, 1], [2, 0, 0, 0]];
    Fd::Poly(powers.iter().map(|p| (gs.combine(&uniform_vec(rng, gs.len())).scale_re(0.5), *p)).collect())
}

fn potential(gs: &GeneratorSet<f64>, rng: &mut ChaCha8Rng) -> LieValuedPotential<f64> {
    LieValuedPotential::new(std::array::from_fn(|_| lie_poly(gs, rng)), gs.clone())
}

fn gamma_poly(ctx: &AlgebraContext, rng: &mut ChaCha8Rng) -> Fd {
    let powers = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]];
    Fd::Poly(
        powers
            .iter()
            .map(|p| {
                let g: G = if ctx.is_real() { random_real_gamma(ctx, rng) } else { random_gamma(ctx, rng) };
                (g.scale_re(0.5), *p)
            })
            .collect(),
    )
}

fn group_factor(gs: &GeneratorSet<f64>, rng: &mut ChaCha8Rng) -> Fd {
    let one = |rng: &mut ChaCha8Rng| Fd::GroupFactor {
        lambda: ScalarPoly::new(vec![
            (uniform(rng), [0, 0, 0, 0]),
            (uniform(rng), [1, 0, 0, 0]),
            (uniform(rng), [0, 1, 1, 0]),
        ]),
        t: gs.gens()[rng.gen_range(0..gs.len())].clone(),
    };
    Fd::Product(vec![one(rng), one(rng)])
}

const GAUGE_SETS: [&str; 4] = ["spinorial4", "L3_1", "gellmann8", "antihermitian16"];

fn covariance_configs(rng: &mut ChaCha8Rng, i: usize) -> Result<(DymConfig<f64>, Fd)> {
    let gs = builtin_generators::<f64>(GAUGE_SETS[i % GAUGE_SETS.len()])?;
    let mt = MassTerm::canonical(CanonicalForm::I, 0.5 + rng.gen::<f64>(), 0.0, 0.0)?;
    let cfg = DymConfig::new(
        gamma_poly(&mk(), rng),
        potential(&gs, rng),
        StrengthSource::Derived,
        mt,
        if i % 2 == 0 { 1.0 } else { -1.0 },
        CurrentKind::Imaginary,
    )?;
    let u = group_factor(&gs, rng);
    Ok((cfg, u))
}

fn gauge_checks() -> Vec<Check> {
    let t = Some(QUADRATIC_TOLERANCE);
    vec![
        check("gauge.curvature_consistency", "derived field strength solves the first field equation", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let gs = builtin_generators::<f64>(GAUGE_SETS[i % GAUGE_SETS.len()])?;
                let r = ym_residual_derived(&potential(&gs, rng), &random_point(rng))?;
                Ok(rel(r.eq1.max_norm(), r.eq2.max_norm()))
            })
        }),
        check("gauge.bianchi_derived", "Bianchi identity for the curvature of a potential", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let gs = builtin_generators::<f64>(GAUGE_SETS[i % GAUGE_SETS.len()])?;
                let r = ym_residual_derived(&potential(&gs, rng), &random_point(rng))?;
                Ok(rel(r.bianchi.max_norm(), r.eq2.max_norm()))
            })
        }),
        check("gauge.form_equivalence", "gamma form equals component form", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let gs = builtin_generators::<f64>(GAUGE_SETS[i % GAUGE_SETS.len()])?;
                let a = potential(&gs, rng);
                let f = FieldStrength::new(std::array::from_fn(|_| lie_poly(&gs, rng)));
                let x = random_point(rng);
                let aj = a.jet(&x)?;
                let jets = GaugeJets {
                    a: std::array::from_fn(|mu| aj[mu].to_jet1()),
                    f: f.jet(&gs, &x)?,
                };
                let scale = jets.f.iter().map(|j| j.max_norm()).fold(0.0, f64::max);
                Ok(rel(form_equivalence_deviation(&jets, gs.len() == 1).max(form_equivalence_deviation(&jets, false)), scale))
            })
        }),
        check("gauge.dym_covariance", "coupled system is gauge covariant", t, |o, s| {
            sample_max(o.samples.min(64), s, |i, rng| {
                let (cfg, u) = covariance_configs(rng, i)?;
                let x = random_point(rng);
                let base = crate::gauge::dym_residual(&cfg, &x)?.max_norms().into_iter().fold(0.0, f64::max);
                Ok(rel(dym_covariance_error(&cfg, &u, &x)?, base))
            })
        }),
        check("gauge.source_covariance", "source transforms by conjugation", t, |o, s| {
            sample_max(o.samples, s, |i, rng| {
                let gs = builtin_generators::<f64>(GAUGE_SETS[i % GAUGE_SETS.len()])?;
                let psi: G = random_gamma(&mk(), rng);
                let u = gs.group_element(&uniform_vec(rng, gs.len()));
                Ok(rel(source_covariance_error(&psi, &gs, 1.0, CurrentKind::Imaginary, &u)?, psi.max_norm().powi(2)))
            })
        }),
        check("gauge.spinor_idempotents", "spinor idempotents are orthogonal and complete", Some(ALGEBRAIC_TOLERANCE), |_, _| {
            let s = spinor_idempotents::<f64>(&mk());
            let mut worst = 0.0f64;
            for (k, sk) in s.iter().enumerate() {
                for (l, sl) in s.iter().enumerate() {
                    let want = if k == l { sk.clone() } else { G::zero(&mk()) };
                    worst = worst.max((sk * sl).distance(&want));
                }
            }
            let sum = s.iter().fold(G::zero(&mk()), |a, x| &a + x);
            Ok((16, worst.max(sum.distance(&G::one(&mk())))))
        }),
        check("gauge.spinor_reduction", "column systems match the projected full system", Some(ALGEBRAIC_TOLERANCE), |o, s| {
            let gs = builtin_generators::<f64>("spinorial4")?;
            sample_max(o.samples.min(64), s, |i, rng| {
                let mt = if i % 2 == 0 {
                    MassTerm::multi_mass([0.5, 1.0, 1.7, 3.0])?
                } else {
                    MassTerm::canonical(CanonicalForm::I, 0.5 + rng.gen::<f64>(), 0.0, 0.0)?
                };
                let cfg = DymConfig::new(gamma_poly(&mk(), rng), potential(&gs, rng), StrengthSource::Derived, mt, 1.0, CurrentKind::Imaginary)?;
                let x = random_point(rng);
                let red = if i % 2 == 0 { multi_mass_reduce(&cfg, &x)? } else { spinor_reduce(&cfg, &x)? };
                let scale = red.projected.iter().map(|r| r.max_norm()).fold(0.0, f64::max);
                Ok(rel(red.deviation(), scale))
            })
        }),
        check("gauge.polar_decomposition", "pointwise polar decomposition", t, |o, s| {
            sample_max(o.samples, s, |_, rng| {
                let psi: G = random_gamma(&mk(), rng);
                let pd = polar_gauge(&psi)?;
                let eig = (-pd.min_eigenvalue).max(0.0);
                Ok(pd.reconstruction_error(&psi).max(pd.unitarity_error()?).max(pd.hermiticity_error()?).max(eig))
            })
        }),
    ]
}

/// Grade leakage table of the six-generator exploratory scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExploreRow {
    pub signature: Vec<i8>,
    pub samples: usize,
    /// `max ‖UU^* − e‖` over the accepted samples.
    pub unitarity: f64,
    /// `max ‖π₁-leakage of U v U^*‖` over the accepted samples.
    pub vector_leakage: f64,
    /// Entry `k − 2` is the largest grade leakage of `U π_k U^*`, `k = 2..6`.
    pub leakage: [f64; 5],
}

/// Report of the six-generator scan; informational only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub schema: u32,
    pub seed: u64,
    pub samples: usize,
    pub rows: Vec<ExploreRow>,
}

/// Signatures covered by the six-generator scan.
pub const N6_SIGNATURES: [[i8; 6]; 4] =
    [[1, 1, 1, 1, 1, 1], [1, -1, -1, -1, -1, -1], [1, 1, -1, -1, -1, -1], [1, 1, 1, -1, -1, -1]];

fn n6_element(ctx: &AlgebraContext, gs: &GeneratorSet<f64>, i: usize, rng: &mut ChaCha8Rng) -> G {
    if i == 0 {
        return G::one(ctx);
    }
    let u = gs.group_element(&uniform_vec(rng, gs.len()));
    let top = G::blade(ctx, BladeMask((1 << ctx.n()) - 1));
    if i % 2 == 1 && (&top * &top.star()).distance(&G::one(ctx)) == 0.0 {
        &u * &top
    } else {
        u
    }
}

/// Samples even `U` of the six-generator algebras (spin rotors, and rotors times the
/// pseudoscalar where it satisfies `II^* = e`) and tabulates `UU^* − e`, vector leakage, and grade leakage of `U π_k U^*`.
pub fn explore_n6(samples: usize, seed: u64) -> Result<ExploreReport> {
    let mut rows = Vec::new();
    for sig in N6_SIGNATURES {
        let ctx = AlgebraContext::new(&sig, Field::Real)?;
        let gs = bivectors::<f64>(&ctx)?;
        let stream = seed ^ stream_of(&format!("{sig:?}"));
        let per: Vec<(f64, f64, [f64; 5])> = (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = sample_rng(stream, i as u64);
                let u = n6_element(&ctx, &gs, i, &mut rng);
                let us = u.star();
                let unit = (&u * &us).distance(&G::one(&ctx));
                let mut leaks = [0.0; 5];
                let mut vec_leak = 0.0f64;
                for k in 1..=6 {
                    let v: G = random_real_gamma(&ctx, &mut rng).grade(k);
                    let w = &(&u * &v) * &us;
                    let leak = w.distance(&w.grade(k));
                    if k == 1 {
                        vec_leak = leak;
                    } else {
                        leaks[k - 2] = leak;
                    }
                }
                (unit, vec_leak, leaks)
            })
            .collect();
        let mut row = ExploreRow {
            signature: sig.to_vec(),
            samples,
            unitarity: 0.0,
            vector_leakage: 0.0,
            leakage: [0.0; 5],
        };
        for (u, v, l) in per {
            row.unitarity = row.unitarity.max(u);
            row.vector_leakage = row.vector_leakage.max(v);
            for k in 0..5 {
                row.leakage[k] = row.leakage[k].max(l[k]);
            }
        }
        rows.push(row);
    }
    Ok(ExploreReport {
        schema: REPORT_SCHEMA,
        seed,
        samples,
        rows,
    })
}
