//! Named generator sets and the programmatic families of subalgebras.

use num_complex::Complex;

use super::{structure_constants, GeneratorSet};
use crate::clifford::{AlgebraContext, BladeMask, GammaNumber};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Every name accepted by [`builtin_generators`].
pub const BUILTIN_NAMES: [&str; 18] = [
    "antihermitian16",
    "L15",
    "L10_1",
    "L10_2",
    "L10_3",
    "L6_1",
    "L6_2",
    "L6_3",
    "L6p_1",
    "L3_1",
    "L3_2",
    "gellmann8",
    "gellmann15",
    "spinorial4",
    "real_sp2",
    "real_su2su2",
    "real_su2",
    "real_u1",
];

/// Linear combination `Σ (re + i·im) e^{digits}`.
fn lin<T: Real>(ctx: &AlgebraContext, terms: &[(f64, f64, &str)]) -> GammaNumber<T> {
    let mut acc = GammaNumber::zero(ctx);
    for &(re, im, digits) in terms {
        let b = GammaNumber::named(ctx, digits);
        acc += &b.scale(Complex::new(T::lit(re), T::lit(im)));
    }
    acc
}

/// The antihermitian basis `ie^0, e^1, e^2, e^3, ie^{01}, ie^{02}, ie^{03}, e^{12},
/// e^{13}, e^{23}, e^{012}, e^{013}, e^{023}, ie^{123}, e^5, ie`.
pub fn antihermitian_basis<T: Real>() -> Vec<GammaNumber<T>> {
    let ctx = AlgebraContext::minkowski();
    [
        (0.0, 1.0, "0"),
        (1.0, 0.0, "1"),
        (1.0, 0.0, "2"),
        (1.0, 0.0, "3"),
        (0.0, 1.0, "01"),
        (0.0, 1.0, "02"),
        (0.0, 1.0, "03"),
        (1.0, 0.0, "12"),
        (1.0, 0.0, "13"),
        (1.0, 0.0, "23"),
        (1.0, 0.0, "012"),
        (1.0, 0.0, "013"),
        (1.0, 0.0, "023"),
        (0.0, 1.0, "123"),
        (1.0, 0.0, "0123"),
        (0.0, 1.0, ""),
    ]
    .iter()
    .map(|&t| lin(&ctx, &[t]))
    .collect()
}

fn ah_pick<T: Real>(indices: &[usize]) -> Vec<GammaNumber<T>> {
    let basis = antihermitian_basis();
    indices.iter().map(|&i| basis[i].clone()).collect()
}

/// The sixteen generators `t_1 … t_16` corresponding to the generalized Gell-Mann
/// matrices times `i√2` (with `t_16 = ie`).
pub fn gellmann_generators<T: Real>() -> Vec<GammaNumber<T>> {
    let ctx = AlgebraContext::minkowski();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let s6 = 1.0 / 6f64.sqrt();
    let s3 = 1.0 / 3f64.sqrt();
    let rows: [&[(f64, f64, &str)]; 16] = [
        &[(-r, 0.0, "23"), (-r, 0.0, "023")],
        &[(r, 0.0, "13"), (r, 0.0, "013")],
        &[(-r, 0.0, "12"), (-r, 0.0, "012")],
        &[(0.0, -r, "03"), (r, 0.0, "0123")],
        &[(-r, 0.0, "3"), (0.0, -r, "123")],
        &[(0.0, -r, "01"), (-r, 0.0, "2")],
        &[(-r, 0.0, "1"), (0.0, r, "02")],
        &[(0.0, 2.0 * s6, "0"), (s6, 0.0, "12"), (-s6, 0.0, "012")],
        &[(0.0, -r, "01"), (r, 0.0, "2")],
        &[(-r, 0.0, "1"), (0.0, -r, "02")],
        &[(0.0, r, "03"), (r, 0.0, "0123")],
        &[(r, 0.0, "3"), (0.0, -r, "123")],
        &[(-r, 0.0, "23"), (r, 0.0, "023")],
        &[(r, 0.0, "13"), (-r, 0.0, "013")],
        &[(0.0, s3, "0"), (-s3, 0.0, "12"), (s3, 0.0, "012")],
        &[(0.0, 1.0, "")],
    ];
    rows.iter().map(|terms| lin(&ctx, terms)).collect()
}

/// The four commuting spinorial generators, diagonal with `2i` in one slot.
pub fn spinorial_generators<T: Real>() -> Vec<GammaNumber<T>> {
    let ctx = AlgebraContext::minkowski();
    [(1.0, -1.0, -1.0), (1.0, 1.0, 1.0), (-1.0, -1.0, 1.0), (-1.0, 1.0, -1.0)]
        .iter()
        .map(|&(a, b, c)| lin(&ctx, &[(0.0, 0.5, ""), (0.0, 0.5 * a, "0"), (0.5 * b, 0.0, "12"), (0.5 * c, 0.0, "012")]))
        .collect()
}

fn real_set<T: Real>(digits: &[&str]) -> Vec<GammaNumber<T>> {
    let ctx = AlgebraContext::minkowski_real();
    digits.iter().map(|d| GammaNumber::named(&ctx, d)).collect()
}

/// Named generator set; closure is validated on construction.
pub fn builtin_generators<T: Real>(name: &str) -> Result<GeneratorSet<T>> {
    let gens: Vec<GammaNumber<T>> = match name {
        "antihermitian16" => antihermitian_basis(),
        "L15" => ah_pick(&(0..15).collect::<Vec<_>>()),
        "L10_1" => ah_pick(&[1, 2, 3, 7, 8, 9, 10, 11, 12, 14]),
        "L10_2" => ah_pick(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
        "L10_3" => ah_pick(&[4, 5, 6, 7, 8, 9, 10, 11, 12, 13]),
        "L6_1" => ah_pick(&[7, 8, 9, 10, 11, 12]),
        "L6_2" => ah_pick(&[0, 1, 2, 4, 5, 7]),
        "L6_3" => ah_pick(&[4, 5, 6, 7, 8, 9]),
        "L6p_1" => ah_pick(&[7, 8, 9, 0, 13, 14]),
        "L3_1" => ah_pick(&[7, 8, 9]),
        "L3_2" => ah_pick(&[4, 5, 7]),
        "gellmann8" => gellmann_generators().into_iter().take(8).collect(),
        "gellmann15" => gellmann_generators().into_iter().take(15).collect(),
        "spinorial4" => spinorial_generators(),
        "real_sp2" => real_set(&["1", "2", "3", "12", "13", "23", "012", "013", "023", "0123"]),
        "real_su2su2" => real_set(&["12", "13", "23", "012", "013", "023"]),
        "real_su2" => real_set(&["12", "13", "23"]),
        "real_u1" => real_set(&["12"]),
        other => return Err(Error::UnknownGeneratorSet(other.to_string())),
    };
    GeneratorSet::new_closed(name, gens)
}

/// The ten bivectors `{−f^{14}, −f^{24}, −f^{34}, −f^{12}, −f^{13}, −f^{23}, f^{35},
/// −f^{25}, f^{15}, −f^{45}}` of the Euclidean algebra on `f^1 … f^5`.
pub fn gamma5_set<T: Real>() -> GeneratorSet<T> {
    let ctx = AlgebraContext::euclidean(5).expect("valid dimension");
    let terms: [(f64, &str); 10] = [
        (-1.0, "03"),
        (-1.0, "13"),
        (-1.0, "23"),
        (-1.0, "01"),
        (-1.0, "02"),
        (-1.0, "12"),
        (1.0, "24"),
        (-1.0, "14"),
        (1.0, "04"),
        (-1.0, "34"),
    ];
    let gens = terms.iter().map(|&(s, d)| lin(&ctx, &[(s, 0.0, d)])).collect();
    GeneratorSet::new_closed("gamma5", gens).expect("closed set")
}

/// All grade-2 basis blades of `ctx`, in ascending mask order.
pub fn bivectors<T: Real>(ctx: &AlgebraContext) -> Result<GeneratorSet<T>> {
    let gens = (0..ctx.dim())
        .map(|m| BladeMask(m as u8))
        .filter(|m| m.grade() == 2)
        .map(|m| GammaNumber::blade(ctx, m))
        .collect();
    GeneratorSet::new_closed(format!("bivectors{}", ctx.n()), gens)
}

/// The six bivectors `{e^{kl}}` of the Euclidean algebra on four generators.
pub fn gamma4_bivectors<T: Real>() -> GeneratorSet<T> {
    bivectors(&AlgebraContext::euclidean(4).expect("valid dimension")).expect("closed set")
}

/// Half-sum basis of the span of `ie^{01}, ie^{02}, ie^{03}, e^{12}, e^{13}, e^{23}`
/// splitting it into two commuting three-dimensional ideals.
pub fn l6_3_half_sum<T: Real>() -> GeneratorSet<T> {
    let ctx = AlgebraContext::minkowski();
    let rows: [&[(f64, f64, &str)]; 6] = [
        &[(0.0, 0.5, "01"), (0.5, 0.0, "23")],
        &[(0.0, 0.5, "02"), (-0.5, 0.0, "13")],
        &[(0.0, 0.5, "03"), (0.5, 0.0, "12")],
        &[(0.0, -0.5, "01"), (0.5, 0.0, "23")],
        &[(0.0, -0.5, "02"), (-0.5, 0.0, "13")],
        &[(0.0, -0.5, "03"), (0.5, 0.0, "12")],
    ];
    let gens = rows.iter().map(|t| lin(&ctx, t)).collect();
    GeneratorSet::new_closed("L6_3_half_sum", gens).expect("closed set")
}

fn commute<T: Real>(a: &GammaNumber<T>, b: &GammaNumber<T>) -> bool {
    a.commutator(b).is_zero_within(1e-12)
}

/// Six-dimensional subalgebras: for each non-scalar antihermitian basis vector `b`,
/// the other basis vectors (excluding `ie`) commuting with `b`. Ordered with the
/// three named sets first.
pub fn l6_family<T: Real>() -> Vec<GeneratorSet<T>> {
    let basis = antihermitian_basis::<T>();
    let mut order: Vec<usize> = vec![0, 10, 14];
    order.extend((0..15).filter(|i| ![0, 10, 14].contains(i)));
    order
        .into_iter()
        .enumerate()
        .map(|(k, b)| {
            let gens = (0..15)
                .filter(|&j| j != b && commute(&basis[j], &basis[b]))
                .map(|j| basis[j].clone())
                .collect();
            GeneratorSet::new_closed(format!("L6_{}", k + 1), gens).expect("closed set")
        })
        .collect()
}

fn l3_triples<T: Real>(basis: &[GammaNumber<T>]) -> Vec<[usize; 3]> {
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for a in 0..15 {
        for b in a + 1..15 {
            if !basis[a].anticommutator(&basis[b]).is_zero_within(1e-12) {
                continue;
            }
            let prod = &basis[a] * &basis[b];
            let Some(c) = (0..15).find(|&c| {
                let (_, r) = GeneratorSet::new("probe", vec![basis[c].clone()])
                    .expect("nonzero")
                    .expand(&prod);
                r.as_f64() < 1e-12
            }) else {
                continue;
            };
            let mut t = [a, b, c];
            t.sort_unstable();
            if !triples.contains(&t) {
                triples.push(t);
            }
        }
    }
    let named = [[7, 8, 9], [4, 5, 7]];
    triples.retain(|t| !named.contains(t));
    triples.sort_unstable();
    let mut out = named.to_vec();
    out.extend(triples);
    out
}

/// Three-dimensional subalgebras spanned by an anticommuting pair of basis vectors
/// and the basis vector proportional to their product, deduplicated.
pub fn l3_family<T: Real>() -> Vec<GeneratorSet<T>> {
    let basis = antihermitian_basis::<T>();
    l3_triples(&basis)
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            let gens = t.iter().map(|&i| basis[i].clone()).collect();
            GeneratorSet::new_closed(format!("L3_{}", k + 1), gens).expect("closed set")
        })
        .collect()
}

/// Six-dimensional direct sums of two mutually commuting three-dimensional
/// subalgebras from [`l3_family`].
pub fn l6p_family<T: Real>() -> Vec<GeneratorSet<T>> {
    let basis = antihermitian_basis::<T>();
    let triples = l3_triples(&basis);
    let mut pairs: Vec<([usize; 3], [usize; 3])> = Vec::new();
    for i in 0..triples.len() {
        for j in i + 1..triples.len() {
            let ok = triples[i]
                .iter()
                .all(|&a| triples[j].iter().all(|&b| a != b && commute(&basis[a], &basis[b])));
            if ok {
                pairs.push((triples[i], triples[j]));
            }
        }
    }
    let first = ([7, 8, 9], [0, 13, 14]);
    if let Some(p) = pairs.iter().position(|p| *p == first) {
        let p = pairs.remove(p);
        pairs.insert(0, p);
    }
    pairs
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| {
            let gens = a.iter().chain(b.iter()).map(|&i| basis[i].clone()).collect();
            GeneratorSet::new_closed(format!("L6p_{}", k + 1), gens).expect("closed set")
        })
        .collect()
}

/// Structure constants of a named set; convenience for reports.
pub fn builtin_structure_constants<T: Real>(name: &str) -> Result<super::StructureConstants<T>> {
    structure_constants(&builtin_generators::<T>(name)?)
}
