//! Pointwise polar decomposition `Ψ = PU`.

use num_complex::Complex;
use num_traits::Zero;

use crate::clifford::GammaNumber;
use crate::error::Result;
use crate::linalg::{adjoint, hermitian_eigen, matmul, CMatrix};
use crate::matrix::{from_matrix, to_matrix, Mat4};
use crate::scalar::{Cx, Real};

/// Eigenvalues of `ΨΨ†` below this fraction of the largest count as zero.
pub const POLAR_CUTOFF: f64 = 1e-14;

/// `Ψ = PU` with `P` hermitian nonnegative and `U` unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarDecomposition<T: Real> {
    pub p: GammaNumber<T>,
    pub u: GammaNumber<T>,
    pub rank: usize,
    /// Whether `Ψ` is singular, so that `U` is one of several valid choices.
    pub degenerate: bool,
    /// Smallest eigenvalue of `P`.
    pub min_eigenvalue: T,
}

impl<T: Real> PolarDecomposition<T> {
    /// `|Ψ − PU|`.
    pub fn reconstruction_error(&self, psi: &GammaNumber<T>) -> T {
        psi.distance(&(&self.p * &self.u))
    }

    /// `|UU† − e|`.
    pub fn unitarity_error(&self) -> Result<T> {
        Ok((&self.u * &self.u.dagger()?).distance(&GammaNumber::one(self.u.ctx())))
    }

    /// `|P − P†|`.
    pub fn hermiticity_error(&self) -> Result<T> {
        Ok(self.p.distance(&self.p.dagger()?))
    }
}

fn column<T: Real>(m: &CMatrix<T>, j: usize) -> Vec<Cx<T>> {
    m.iter().map(|row| row[j]).collect()
}

fn dot<T: Real>(a: &[Cx<T>], b: &[Cx<T>]) -> Cx<T> {
    a.iter().zip(b).fold(Cx::zero(), |s, (x, y)| s + x.conj() * y)
}

/// Completes the orthonormal vectors `cols` to a basis by Gram-Schmidt on the standard basis.
fn complete_basis<T: Real>(mut cols: Vec<Vec<Cx<T>>>, n: usize) -> Vec<Vec<Cx<T>>> {
    for k in 0..n {
        if cols.len() == n {
            break;
        }
        let mut v: Vec<Cx<T>> = (0..n).map(|i| if i == k { Cx::new(T::one(), T::zero()) } else { Cx::zero() }).collect();
        for c in &cols {
            let d = dot(c, &v);
            for (vi, ci) in v.iter_mut().zip(c) {
                *vi -= d * ci;
            }
        }
        let norm = dot(&v, &v).re.sqrt();
        if norm.as_f64() > 1e-6 {
            cols.push(v.into_iter().map(|x| x / Complex::new(norm, T::zero())).collect());
        }
    }
    cols
}

/// Polar decomposition through the eigendecomposition `ΨΨ† = WΣ²W†`:
/// `P = WΣW†` and `U = WX†` with `x_i = Ψ†w_i/σ_i`, completed unitarily on the kernel.
pub fn polar_gauge<T: Real>(psi: &GammaNumber<T>) -> Result<PolarDecomposition<T>> {
    let m = to_matrix(psi)?.to_rows();
    let md = adjoint(&m);
    let (vals, w) = hermitian_eigen(&matmul(&m, &md));
    let top = vals.iter().fold(T::zero(), |a, v| a.max(*v));
    let cutoff = T::lit(POLAR_CUTOFF) * top;
    let sigma: Vec<T> = vals.iter().map(|&v| if v > cutoff { v.sqrt() } else { T::zero() }).collect();
    let rank = sigma.iter().filter(|s| **s > T::zero()).count();

    let mut xs = Vec::new();
    let mut order = Vec::new();
    for j in 0..4 {
        if sigma[j] > T::zero() {
            let wj = column(&w, j);
            let x: Vec<Cx<T>> = (0..4)
                .map(|r| (0..4).fold(Cx::<T>::zero(), |s, c| s + md[r][c] * wj[c]) / Complex::new(sigma[j], T::zero()))
                .collect();
            xs.push(x);
            order.push(j);
        }
    }
    let xs = complete_basis(xs, 4);
    let mut x_cols: Vec<Vec<Cx<T>>> = vec![Vec::new(); 4];
    let mut extra = xs[rank..].iter();
    for j in 0..4 {
        x_cols[j] = match order.iter().position(|&o| o == j) {
            Some(p) => xs[p].clone(),
            None => extra.next().expect("basis completed").clone(),
        };
    }

    let mut p = Mat4::zero();
    let mut u = Mat4::zero();
    for r in 0..4 {
        for c in 0..4 {
            for j in 0..4 {
                let wr = w[r][j];
                p.m[r][c] += wr * w[c][j].conj() * Complex::new(sigma[j], T::zero());
                u.m[r][c] += wr * x_cols[j][c].conj();
            }
        }
    }
    let ctx = psi.ctx();
    Ok(PolarDecomposition {
        p: from_matrix(ctx, &p)?,
        u: from_matrix(ctx, &u)?,
        rank,
        degenerate: rank < 4,
        min_eigenvalue: sigma.iter().fold(T::infinity(), |a, s| a.min(*s)),
    })
}
