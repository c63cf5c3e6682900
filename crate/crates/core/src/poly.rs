//! Analytic and harmonic polynomial types.
//!
//! Coefficients are stored in ascending order: index `j` holds the
//! coefficient of `z^j`. A harmonic polynomial is the pair `(h, g)`
//! representing `f(z) = h(z) + conj(g(z))`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial is representable (a single `0` coefficient) so that
/// an absent co-analytic part `g = 0` has a value; every other polynomial has
/// a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticPoly {
    coeffs: Vec<Complex64>,
}

impl AnalyticPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex64::new(0.0, 0.0) {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds from coefficients listed highest power first.
    pub fn from_descending(coeffs: &[Complex64]) -> Result<Self> {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    /// `z^n`.
    pub fn monomial(n: usize, coeff: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = coeff;
        Self::new(coeffs).unwrap_or_else(|_| Self::zero())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Coefficient of `z^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative by a single Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            d = d * z + p;
            p = p * z + c;
        }
        (p, d)
    }

    /// Sum of coefficient moduli.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }
}

/// `f(z) = h(z) + conj(g(z))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicPoly {
    h: AnalyticPoly,
    g: AnalyticPoly,
}

impl HarmonicPoly {
    /// Harmonic polynomial whose analytic part dominates: `deg h = n ≥ 1`
    /// and `deg g < n` (or `g = 0`). This is the class the disk bound covers.
    pub fn new(h: AnalyticPoly, g: AnalyticPoly) -> Result<Self> {
        if h.is_zero() || h.degree() == 0 {
            return Err(Error::InvalidHarmonic(
                "analytic part must have degree at least 1".into(),
            ));
        }
        if !g.is_zero() && g.degree() >= h.degree() {
            return Err(Error::InvalidHarmonic(format!(
                "deg g = {} must be less than deg h = {}",
                g.degree(),
                h.degree()
            )));
        }
        Ok(Self { h, g })
    }

    /// Any pair `(h, g)`, including anti-analytic maps such as `conj(z)`.
    /// Evaluation, Newton refinement and winding numbers accept these;
    /// the disk bound and the global zero search do not.
    pub fn unrestricted(h: AnalyticPoly, g: AnalyticPoly) -> Self {
        Self { h, g }
    }

    pub fn h(&self) -> &AnalyticPoly {
        &self.h
    }

    pub fn g(&self) -> &AnalyticPoly {
        &self.g
    }

    /// Whether `deg h ≥ 1` and `deg g < deg h`.
    pub fn is_dominant(&self) -> bool {
        !self.h.is_zero()
            && self.h.degree() >= 1
            && (self.g.is_zero() || self.g.degree() < self.h.degree())
    }

    pub fn n(&self) -> usize {
        self.h.degree()
    }

    pub fn m(&self) -> usize {
        self.g.degree()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.h.eval(z) + self.g.eval(z).conj()
    }

    /// Wirtinger derivatives `(f_z, f_zbar) = (h'(z), conj(g'(z)))`.
    pub fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        let (_, dh) = self.h.eval_with_derivative(z);
        let (_, dg) = self.g.eval_with_derivative(z);
        (dh, dg.conj())
    }

    /// Value together with both Wirtinger derivatives.
    pub fn eval_full(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let (h, dh) = self.h.eval_with_derivative(z);
        let (g, dg) = self.g.eval_with_derivative(z);
        (h + g.conj(), dh, dg.conj())
    }

    /// Jacobian determinant of the real map, `|h'(z)|² - |g'(z)|²`.
    pub fn jacobian_det(&self, z: Complex64) -> f64 {
        let (fz, fzbar) = self.wirtinger(z);
        fz.norm_sqr() - fzbar.norm_sqr()
    }

    /// `1 + Σ|a_j| + Σ|b_j|`, the reference magnitude for residuals.
    pub fn scale(&self) -> f64 {
        1.0 + self.h.l1_norm() + self.g.l1_norm()
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `p_c(z) = z^n + c·conj(z)^k - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicTrinomial {
    n: u32,
    k: u32,
    c: Complex64,
}

impl HarmonicTrinomial {
    pub fn new(n: u32, k: u32, c: Complex64) -> Result<Self> {
        check_trinomial_shape(n, k)?;
        if !c.is_finite() {
            return Err(Error::NonFinite);
        }
        if c == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidTrinomial("c must be nonzero".into()));
        }
        Ok(Self { n, k, c })
    }

    pub fn real(n: u32, k: u32, c: f64) -> Result<Self> {
        Self::new(n, k, Complex64::new(c, 0.0))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `Some(c)` when `c` is a positive real number.
    pub fn positive_real_c(&self) -> Option<f64> {
        (self.c.im == 0.0 && self.c.re > 0.0).then_some(self.c.re)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        z.powu(self.n) + self.c * z.conj().powu(self.k) - 1.0
    }

    /// Expanded form: `h = z^n - 1`, `g = conj(c)·z^k`.
    pub fn to_harmonic(&self) -> HarmonicPoly {
        let n = self.n as usize;
        let k = self.k as usize;
        let mut h = vec![Complex64::new(0.0, 0.0); n + 1];
        h[0] = Complex64::new(-1.0, 0.0);
        h[n] = Complex64::new(1.0, 0.0);
        let h = AnalyticPoly::new(h).expect("nonempty finite coefficients");
        let g = AnalyticPoly::monomial(k, self.c.conj());
        HarmonicPoly::new(h, g).expect("k < n")
    }
}

/// `1 ≤ k ≤ n-1`, `n ≥ 3`, `gcd(n, k) = 1`.
pub(crate) fn check_trinomial_shape(n: u32, k: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidTrinomial(format!("n = {n} must be at least 3")));
    }
    if k < 1 || k >= n {
        return Err(Error::InvalidTrinomial(format!(
            "k = {k} must satisfy 1 <= k <= n - 1 = {}",
            n - 1
        )));
    }
    if gcd(n, k) != 1 {
        return Err(Error::InvalidTrinomial(format!("gcd({n}, {k}) != 1")));
    }
    Ok(())
}
