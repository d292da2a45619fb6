//! Algebra contexts: dimension, diagonal signature, scalar field and the
//! precomputed blade product table.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_DIM: usize = 6;

/// Default absolute tolerance for coefficient-wise equality.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Scalar field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Subset of generator indices; bit `i` set means generator `e^i` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BladeMask(pub u8);

impl BladeMask {
    /// The scalar unit `e`.
    pub const SCALAR: BladeMask = BladeMask(0);

    /// Number of generators in the blade.
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Blade with generator indices given as digits, e.g. `"012"`; `""` is `e`.
    pub fn parse(digits: &str) -> Result<BladeMask> {
        let mut mask = 0u8;
        let mut last: Option<u32> = None;
        for ch in digits.chars() {
            let d = ch
                .to_digit(10)
                .filter(|&d| (d as usize) < MAX_DIM)
                .ok_or_else(|| Error::InvalidInput(format!("bad blade index `{ch}` in `{digits}`")))?;
            if last.is_some_and(|l| d <= l) {
                return Err(Error::InvalidInput(format!("blade indices must increase: `{digits}`")));
            }
            last = Some(d);
            mask |= 1 << d;
        }
        Ok(BladeMask(mask))
    }
}

impl fmt::Display for BladeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "e");
        }
        write!(f, "e^")?;
        if self.grade() > 1 {
            write!(f, "{{")?;
        }
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        if self.grade() > 1 {
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Sign from reordering the generators of `a·b` into canonical increasing order.
pub fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut x = a >> 1;
    let mut swaps = 0u32;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two blades under a diagonal signature: `(a XOR b, sign)`.
pub fn blade_product(signature: &[i8], a: BladeMask, b: BladeMask) -> (BladeMask, i8) {
    let mut sign = reorder_sign(a.0, b.0);
    let common = a.0 & b.0;
    for (i, &g) in signature.iter().enumerate() {
        if common & (1 << i) != 0 {
            sign *= g;
        }
    }
    (BladeMask(a.0 ^ b.0), sign)
}

#[derive(Debug)]
struct ContextData {
    n: usize,
    signature: Vec<i8>,
    field: Field,
    tolerance: f64,
    signs: Vec<i8>,
}

/// Shared, immutable description of a Clifford algebra `Γ(p,q)` or its
/// complexification. Cloning is cheap.
#[derive(Clone)]
pub struct AlgebraContext(Arc<ContextData>);

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("n", &self.0.n)
            .field("signature", &self.0.signature)
            .field("field", &self.0.field)
            .finish()
    }
}

impl PartialEq for AlgebraContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n && self.0.signature == other.0.signature && self.0.field == other.0.field)
    }
}

impl Eq for AlgebraContext {}

/// Serializable form of a context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSpec {
    pub n: usize,
    pub signature: Vec<i8>,
    pub field: Field,
}

static MINKOWSKI: OnceLock<AlgebraContext> = OnceLock::new();
static MINKOWSKI_REAL: OnceLock<AlgebraContext> = OnceLock::new();

impl AlgebraContext {
    /// Creates a context with the given diagonal signature (entries ±1).
    pub fn new(signature: &[i8], field: Field) -> Result<Self> {
        Self::with_tolerance(signature, field, DEFAULT_TOLERANCE)
    }

    /// Creates a context with a custom equality tolerance.
    pub fn with_tolerance(signature: &[i8], field: Field, tolerance: f64) -> Result<Self> {
        let n = signature.len();
        if !(2..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidContext(format!("dimension {n} outside 2..={MAX_DIM}")));
        }
        if signature.iter().any(|&g| g != 1 && g != -1) {
            return Err(Error::InvalidContext(format!("signature entries must be ±1: {signature:?}")));
        }
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::InvalidContext(format!("tolerance must be positive: {tolerance}")));
        }
        let dim = 1usize << n;
        let mut signs = vec![0i8; dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                signs[a * dim + b] = blade_product(signature, BladeMask(a as u8), BladeMask(b as u8)).1;
            }
        }
        Ok(Self(Arc::new(ContextData {
            n,
            signature: signature.to_vec(),
            field,
            tolerance,
            signs,
        })))
    }

    /// The complex Minkowski algebra `Γ_C(1,3)` with signature (+,−,−,−).
    pub fn minkowski() -> Self {
        MINKOWSKI
            .get_or_init(|| Self::new(&[1, -1, -1, -1], Field::Complex).expect("valid Minkowski signature"))
            .clone()
    }

    /// The real Minkowski algebra `Γ(1,3)`.
    pub fn minkowski_real() -> Self {
        MINKOWSKI_REAL
            .get_or_init(|| Self::new(&[1, -1, -1, -1], Field::Real).expect("valid Minkowski signature"))
            .clone()
    }

    /// Real Euclidean algebra `Γ(n)` with all signature entries +1.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(&vec![1; n], Field::Real)
    }

    /// Builds a context from its serialized form.
    pub fn from_spec(spec: &ContextSpec) -> Result<Self> {
        if spec.signature.len() != spec.n {
            return Err(Error::InvalidContext(format!(
                "n = {} but signature has {} entries",
                spec.n,
                spec.signature.len()
            )));
        }
        Self::new(&spec.signature, spec.field)
    }

    /// Serializable description.
    pub fn spec(&self) -> ContextSpec {
        ContextSpec {
            n: self.0.n,
            signature: self.0.signature.clone(),
            field: self.0.field,
        }
    }

    /// Number of generators.
    pub fn n(&self) -> usize {
        self.0.n
    }

    /// Number of basis blades, `2^n`.
    pub fn dim(&self) -> usize {
        1 << self.0.n
    }

    /// Diagonal metric entries.
    pub fn signature(&self) -> &[i8] {
        &self.0.signature
    }

    /// Scalar field.
    pub fn field(&self) -> Field {
        self.0.field
    }

    /// Whether coefficients are restricted to real values.
    pub fn is_real(&self) -> bool {
        self.0.field == Field::Real
    }

    /// Coefficient-wise equality tolerance.
    pub fn tolerance(&self) -> f64 {
        self.0.tolerance
    }

    /// Whether this is `Γ(1,3)` (real or complex) with signature (+,−,−,−).
    pub fn is_minkowski(&self) -> bool {
        self.0.signature == [1, -1, -1, -1]
    }

    /// Same algebra over the complex field.
    pub fn complexified(&self) -> Self {
        if self.0.field == Field::Complex {
            return self.clone();
        }
        if self.is_minkowski() {
            return Self::minkowski();
        }
        Self::with_tolerance(&self.0.signature, Field::Complex, self.0.tolerance).expect("valid context")
    }

    /// Whether `mask` names a blade of this algebra.
    pub fn contains(&self, mask: BladeMask) -> bool {
        (mask.0 as usize) < self.dim()
    }

    /// Table lookup of the blade product sign; masks must be valid.
    #[inline]
    pub fn sign(&self, a: usize, b: usize) -> i8 {
        self.0.signs[a * self.dim() + b]
    }

    /// Blade product `(a XOR b, sign)`.
    pub fn blade_product(&self, a: BladeMask, b: BladeMask) -> Result<(BladeMask, i8)> {
        for m in [a, b] {
            if !self.contains(m) {
                return Err(Error::InvalidMask { mask: m.0 as u32, n: self.n() });
            }
        }
        Ok((BladeMask(a.0 ^ b.0), self.sign(a.0 as usize, b.0 as usize)))
    }
}
