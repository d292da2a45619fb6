//! Lie-valued multivectors `Σ x_A ⊗ e^A` with `x_A ∈ 𝓛` and `e^A` spacetime blades.

use std::ops::{Add, Neg, Sub};

use crate::clifford::{blade_product, AlgebraContext, BladeMask, GammaNumber};
use crate::scalar::Real;

const SPACETIME: [i8; 4] = [1, -1, -1, -1];

/// Ordered pairs `μ < ν` indexing bivector components: 01, 02, 03, 12, 13, 23.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Position of `(μ, ν)` in [`PAIRS`] and the sign from `f_{νμ} = −f_{μν}`; `None` on the diagonal.
pub fn pair_index(mu: usize, nu: usize) -> Option<(usize, i8)> {
    if mu == nu {
        return None;
    }
    let (a, b, s) = if mu < nu { (mu, nu, 1) } else { (nu, mu, -1) };
    PAIRS.iter().position(|&p| p == (a, b)).map(|i| (i, s))
}

fn pair_mask(k: usize) -> usize {
    let (a, b) = PAIRS[k];
    (1 << a) | (1 << b)
}

/// Element of `𝓛 ⊗ Γ`: sixteen Lie-side gamma-numbers indexed by spacetime blade mask.
#[derive(Clone, Debug, PartialEq)]
pub struct LieTensor<T: Real> {
    comps: Vec<GammaNumber<T>>,
}

impl<T: Real> LieTensor<T> {
    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self {
            comps: vec![GammaNumber::zero(ctx); 16],
        }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.comps[0].ctx()
    }

    /// `e ⊗ e^μ`, written `e^μ_𝓛`.
    pub fn generator(ctx: &AlgebraContext, mu: usize) -> Self {
        let mut t = Self::zero(ctx);
        t.comps[1 << mu] = GammaNumber::one(ctx);
        t
    }

    /// `Σ a_μ ⊗ e^μ`.
    pub fn vector(a: &[GammaNumber<T>; 4]) -> Self {
        let mut t = Self::zero(a[0].ctx());
        for (mu, x) in a.iter().enumerate() {
            t.comps[1 << mu] = x.clone();
        }
        t
    }

    /// `Σ_{μ<ν} f_{μν} ⊗ e^{μν}`.
    pub fn bivector(f: &[GammaNumber<T>; 6]) -> Self {
        let mut t = Self::zero(f[0].ctx());
        for (k, x) in f.iter().enumerate() {
            t.comps[pair_mask(k)] = x.clone();
        }
        t
    }

    pub fn component(&self, mask: BladeMask) -> &GammaNumber<T> {
        &self.comps[mask.0 as usize]
    }

    /// Components of grade 1, indexed by `μ`.
    pub fn vector_part(&self) -> [GammaNumber<T>; 4] {
        std::array::from_fn(|mu| self.comps[1 << mu].clone())
    }

    /// Components of grade 2, in [`PAIRS`] order.
    pub fn bivector_part(&self) -> [GammaNumber<T>; 6] {
        std::array::from_fn(|k| self.comps[pair_mask(k)].clone())
    }

    /// Tensor product `(x ⊗ e^A)(y ⊗ e^B) = xy ⊗ e^A e^B`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ctx());
        for (a, x) in self.comps.iter().enumerate() {
            if x.max_norm() == T::zero() {
                continue;
            }
            for (b, y) in other.comps.iter().enumerate() {
                if y.max_norm() == T::zero() {
                    continue;
                }
                let (m, s) = blade_product(&SPACETIME, BladeMask(a as u8), BladeMask(b as u8));
                let p = x * y;
                out.comps[m.0 as usize] += &p.scale_re(T::lit(s as f64));
            }
        }
        out
    }

    /// `[X, x ⊗ e] = Σ [x_A, x] ⊗ e^A`.
    pub fn bracket(&self, x: &GammaNumber<T>) -> Self {
        self.map(|c| c.commutator(x))
    }

    /// `Σ (g x_A) ⊗ e^A`.
    pub fn lmul(&self, g: &GammaNumber<T>) -> Self {
        self.map(|c| g * c)
    }

    /// `Σ (x_A g) ⊗ e^A`.
    pub fn rmul(&self, g: &GammaNumber<T>) -> Self {
        self.map(|c| c * g)
    }

    pub fn map(&self, f: impl Fn(&GammaNumber<T>) -> GammaNumber<T>) -> Self {
        Self {
            comps: self.comps.iter().map(f).collect(),
        }
    }

    /// Part of spacetime grade `k`.
    pub fn grade(&self, k: usize) -> Self {
        let zero = GammaNumber::zero(self.ctx());
        Self {
            comps: self
                .comps
                .iter()
                .enumerate()
                .map(|(a, c)| if (a as u32).count_ones() as usize == k { c.clone() } else { zero.clone() })
                .collect(),
        }
    }

    pub fn max_norm(&self) -> T {
        self.comps.iter().fold(T::zero(), |a, c| a.max(c.max_norm()))
    }

    pub fn distance(&self, other: &Self) -> T {
        (self - other).max_norm()
    }
}

impl<'a, T: Real> Add<&'a LieTensor<T>> for &'a LieTensor<T> {
    type Output = LieTensor<T>;
    fn add(self, rhs: &'a LieTensor<T>) -> LieTensor<T> {
        LieTensor {
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, T: Real> Sub<&'a LieTensor<T>> for &'a LieTensor<T> {
    type Output = LieTensor<T>;
    fn sub(self, rhs: &'a LieTensor<T>) -> LieTensor<T> {
        LieTensor {
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Real> Neg for &LieTensor<T> {
    type Output = LieTensor<T>;
    fn neg(self) -> LieTensor<T> {
        self.map(|c| -c)
    }
}
