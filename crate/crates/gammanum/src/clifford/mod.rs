//! Dimension-generic Clifford algebra engine: contexts, blade products,
//! gamma-numbers, conjugations and commutants.

mod context;
mod number;

pub use context::{
    blade_product, reorder_sign, AlgebraContext, BladeMask, ContextSpec, Field, DEFAULT_TOLERANCE, MAX_DIM,
};
pub use number::{CoeffRecord, GammaDocument, GammaNumber};

use crate::linalg::{null_space, CMatrix};
use crate::scalar::{Cx, Real};

/// Basis (over the complex field) of the subspace commuting with every constraint,
/// found from the null space of the linear map `B ↦ ([B, C_j])_j`.
pub fn commutant_basis<T: Real>(ctx: &AlgebraContext, constraints: &[GammaNumber<T>]) -> Vec<GammaNumber<T>> {
    let dim = ctx.dim();
    let blades: Vec<GammaNumber<T>> = (0..dim).map(|m| GammaNumber::blade(ctx, BladeMask(m as u8))).collect();
    let mut rows: CMatrix<T> = Vec::with_capacity(dim * constraints.len());
    for c in constraints {
        let images: Vec<GammaNumber<T>> = blades.iter().map(|b| b.commutator(c)).collect();
        for r in 0..dim {
            rows.push(images.iter().map(|img| img.coeffs()[r]).collect());
        }
    }
    let ctx_c = ctx.complexified();
    null_space(&rows, dim, 1e-10)
        .into_iter()
        .map(|v| GammaNumber::from_coeffs(&ctx_c, v).expect("null vector has full length"))
        .collect()
}

/// Unit pseudoscalar `e^{01…(n−1)}`; `e^5` in Minkowski.
pub fn pseudoscalar<T: Real>(ctx: &AlgebraContext) -> GammaNumber<T> {
    GammaNumber::blade(ctx, BladeMask((ctx.dim() - 1) as u8))
}

/// Quadratic form `Σ g^{ii} u_i²` of the grade-1 part (complex coefficients allowed).
pub fn quadratic_form<T: Real>(u: &GammaNumber<T>) -> Cx<T> {
    let ctx = u.ctx();
    (0..ctx.n())
        .map(|i| {
            let c = u.coeff(BladeMask(1 << i));
            c * c * T::lit(ctx.signature()[i] as f64)
        })
        .sum()
}
