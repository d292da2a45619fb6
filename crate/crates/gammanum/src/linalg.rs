//! Small dense linear algebra: elimination, null spaces, Hermitian Jacobi
//! eigendecomposition and polynomial roots. Sizes here never exceed 64.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{Cx, Real};

/// Dense complex matrix stored as rows.
pub type CMatrix<T> = Vec<Vec<Cx<T>>>;

/// Dense real matrix stored as rows.
pub type RMatrix<T> = Vec<Vec<T>>;

/// Basis of the null space of `a` (rows × `ncols`), by reduced row echelon form
/// with partial pivoting. Pivots below `tol × max|a|` count as zero.
pub fn null_space<T: Real>(a: &CMatrix<T>, ncols: usize, tol: f64) -> Vec<Vec<Cx<T>>> {
    let mut m: CMatrix<T> = a.clone();
    let scale = m
        .iter()
        .flat_map(|r| r.iter().map(|c| c.norm()))
        .fold(T::zero(), T::max)
        .max(T::one());
    let thresh = T::lit(tol) * scale;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let (best, best_val) = (row..m.len())
            .map(|r| (r, m[r][col].norm()))
            .fold((row, T::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best_val <= thresh {
            continue;
        }
        m.swap(row, best);
        let p = m[row][col];
        for c in m[row].iter_mut() {
            *c = *c / p;
        }
        for r in 0..m.len() {
            if r != row {
                let f = m[r][col];
                if !f.is_zero() {
                    for c in 0..ncols {
                        let v = m[row][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cx::<T>::zero(); ncols];
            v[f] = Cx::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f];
            }
            v
        })
        .collect()
}

/// Solves the real system `a x = b` by partial-pivot elimination.
/// Returns `None` when a pivot falls below `1e-14 × max|a|`.
pub fn solve_real<T: Real>(a: &RMatrix<T>, b: &[T]) -> Option<Vec<T>> {
    let n = b.len();
    let mut m: RMatrix<T> = a.iter().zip(b).map(|(r, &bi)| r.iter().copied().chain([bi]).collect()).collect();
    let scale = a.iter().flat_map(|r| r.iter().map(|x| x.abs())).fold(T::zero(), T::max);
    let thresh = T::lit(1e-14) * scale.max(T::min_positive_value());
    for col in 0..n {
        let best = (col..n).max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())?;
        if m[best][col].abs() <= thresh {
            return None;
        }
        m.swap(col, best);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f != T::zero() {
                for c in col..=n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut s = m[r][n];
        for c in r + 1..n {
            s -= m[r][c] * x[c];
        }
        x[r] = s / m[r][r];
    }
    Some(x)
}

/// Inverse of a square complex matrix by Gauss-Jordan elimination with partial
/// pivoting; `None` if singular.
pub fn inverse_complex<T: Real>(a: &CMatrix<T>) -> Option<CMatrix<T>> {
    let n = a.len();
    let mut m: CMatrix<T> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Cx::one() } else { Cx::zero() }));
            row
        })
        .collect();
    let scale = a.iter().flat_map(|r| r.iter().map(|c| c.norm())).fold(T::zero(), T::max);
    let thresh = T::lit(1e-15) * scale.max(T::min_positive_value());
    for col in 0..n {
        let best = (col..n).max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())?;
        if m[best][col].norm() <= thresh {
            return None;
        }
        m.swap(col, best);
        let p = m[col][col];
        for c in m[col].iter_mut() {
            *c = *c / p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                if !f.is_zero() {
                    for c in 0..2 * n {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant of a square complex matrix by partial-pivot LU.
pub fn det_complex<T: Real>(a: &CMatrix<T>) -> Cx<T> {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Cx::<T>::one();
    for col in 0..n {
        let best = (col..n)
            .max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())
            .unwrap();
        if m[best][col].is_zero() {
            return Cx::zero();
        }
        if best != col {
            m.swap(col, best);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
        }
    }
    det
}

/// Complex matrix product.
pub fn matmul<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    let n = a.len();
    let k = b.len();
    let p = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

/// Conjugate transpose.
pub fn adjoint<T: Real>(a: &CMatrix<T>) -> CMatrix<T> {
    let n = a.len();
    let p = a.first().map_or(0, |r| r.len());
    (0..p).map(|j| (0..n).map(|i| a[i][j].conj()).collect()).collect()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Returns eigenvalues (ascending) and the unitary matrix whose columns are the
/// corresponding eigenvectors.
pub fn hermitian_eigen<T: Real>(h: &CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let n = h.len();
    let mut a = h.clone();
    let mut v: CMatrix<T> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Cx::one() } else { Cx::zero() }).collect())
        .collect();
    let scale = h.iter().flat_map(|r| r.iter().map(|c| c.norm())).fold(T::zero(), T::max);
    let eps = T::epsilon() * T::lit(0.1) * scale.max(T::min_positive_value());
    for _sweep in 0..100 {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm())
            .fold(T::zero(), T::max);
        if off <= eps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let z = a[p][q];
                let r = z.norm();
                if r <= eps {
                    continue;
                }
                // Phase e^{iφ} of a_pq reduces the 2×2 block to a real symmetric one.
                let phase = z / r;
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let tau = (aqq - app) / (T::lit(2.0) * r);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                // Rotation R acting on columns p, q:
                // R_pp = c, R_pq = s·phase, R_qp = −s·conj(phase), R_qq = c.
                let rpp = Cx::new(c, T::zero());
                let rpq = phase * s;
                let rqp = -phase.conj() * s;
                let rqq = Cx::new(c, T::zero());
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp * rpp + akq * rqp;
                    a[k][q] = akp * rpq + akq * rqq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = rpp.conj() * apk + rqp.conj() * aqk;
                    a[q][k] = rpq.conj() * apk + rqq.conj() * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = vkp * rpp + vkq * rqp;
                    v[k][q] = vkp * rpq + vkq * rqq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].re.partial_cmp(&a[j][j].re).unwrap());
    let vals = order.iter().map(|&i| a[i][i].re).collect();
    let vecs = (0..n).map(|r| order.iter().map(|&c| v[r][c]).collect()).collect();
    (vals, vecs)
}

/// Eigenvalues of a real symmetric matrix (ascending).
pub fn symmetric_eigenvalues<T: Real>(a: &RMatrix<T>) -> Vec<T> {
    let c: CMatrix<T> = a
        .iter()
        .map(|r| r.iter().map(|&x| Complex::new(x, T::zero())).collect())
        .collect();
    hermitian_eigen(&c).0
}

/// Characteristic polynomial coefficients `[c_0, …, c_n]` of `det(λI − A)`
/// with `c_n = 1`, by the Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial<T: Real>(a: &CMatrix<T>) -> Vec<Cx<T>> {
    let n = a.len();
    let ident: CMatrix<T> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Cx::one() } else { Cx::zero() }).collect())
        .collect();
    let mut coeffs = vec![Cx::<T>::zero(); n + 1];
    coeffs[n] = Cx::one();
    let mut m = vec![vec![Cx::<T>::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(a, &m);
        for i in 0..n {
            for j in 0..n {
                next[i][j] += coeffs[n - k + 1] * ident[i][j];
            }
        }
        m = next;
        let am = matmul(a, &m);
        let tr: Cx<T> = (0..n).map(|i| am[i][i]).sum();
        coeffs[n - k] = -tr / T::from_usize(k).unwrap();
    }
    coeffs
}

/// Roots of a monic polynomial `[c_0, …, c_n]` (`c_n = 1`) by Durand-Kerner iteration.
pub fn polynomial_roots<T: Real>(coeffs: &[Cx<T>]) -> Vec<Cx<T>> {
    let n = coeffs.len() - 1;
    let eval = |z: Cx<T>| coeffs.iter().rev().fold(Cx::<T>::zero(), |acc, &c| acc * z + c);
    let seed = Complex::new(T::lit(0.4), T::lit(0.9));
    let radius = T::one() + coeffs[..n].iter().map(|c| c.norm()).fold(T::zero(), T::max);
    let mut roots: Vec<Cx<T>> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..500 {
        let mut delta = T::zero();
        for i in 0..n {
            let denom: Cx<T> = (0..n)
                .filter(|&j| j != i)
                .map(|j| roots[i] - roots[j])
                .fold(Cx::one(), |acc, d| acc * d);
            if denom.is_zero() {
                roots[i] += Complex::new(T::lit(1e-8), T::lit(1e-8));
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta <= T::epsilon() * radius {
            break;
        }
    }
    roots
}
