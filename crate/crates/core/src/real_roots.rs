//! Sign variations and safeguarded single-root solves for the positive-root
//! equations behind the disk and ring bounds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bracket width at which [`solve_bracketed`] stops.
pub const BRACKET_TOL: f64 = 1e-12;
/// Iteration cap for [`solve_bracketed`].
pub const MAX_ITER: usize = 200;

/// Real polynomial with ascending dense coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        if coeffs.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = coeffs;
        while *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    /// Builds from `(exponent, coefficient)` terms; repeated exponents add up.
    pub fn from_sparse(terms: &[(usize, f64)]) -> Result<Self> {
        let len = terms.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let mut coeffs = vec![0.0; len];
        for &(e, a) in terms {
            coeffs[e] += a;
        }
        Self::new(coeffs)
    }

    /// Builds from coefficients listed highest power first.
    pub fn from_descending(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_with_derivative(&self, x: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut d = 0.0;
        for &c in self.coeffs.iter().rev() {
            d = d * x + p;
            p = p * x + c;
        }
        (p, d)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> RealPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { -c } else { c })
            .collect();
        RealPoly { coeffs }
    }
}

/// Number of sign changes between consecutive nonzero entries.
pub fn sign_variations(coeffs: &[f64]) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for &c in coeffs.iter().filter(|&&c| c != 0.0) {
        let neg = c < 0.0;
        if last.is_some_and(|l| l != neg) {
            count += 1;
        }
        last = Some(neg);
    }
    count
}

/// Descartes bound on the number of positive roots (with multiplicity).
pub fn descartes_positive_bound(p: &RealPoly) -> usize {
    sign_variations(p.coeffs())
}

/// Descartes bound on the number of negative roots, via `p(-x)`.
pub fn descartes_negative_bound(p: &RealPoly) -> usize {
    sign_variations(p.reflect().coeffs())
}

/// An interval whose endpoint values have opposite, nonzero signs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    lo_negative: bool,
}

impl RootBracket {
    /// Checks the sign change of `f` across `[lo, hi]`.
    pub fn new(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let (flo, fhi) = (f(lo), f(hi));
        if !(lo < hi) || !(flo * fhi < 0.0) {
            return Err(Error::InvalidBracket { lo, hi });
        }
        Ok(Self {
            lo,
            hi,
            lo_negative: flo < 0.0,
        })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Sign of `f(lo)` as `-1` or `1`; `f(hi)` has the other sign.
    pub fn lo_sign(&self) -> i8 {
        if self.lo_negative {
            -1
        } else {
            1
        }
    }
}

/// Bisection safeguarded by Newton steps.
///
/// `f` returns the value and derivative at a point. A Newton step is taken
/// whenever it lands strictly inside the current bracket; otherwise the
/// bracket is bisected. Returns once the bracket is narrower than `tol` (or an
/// exact zero is hit), choosing the endpoint with the smaller residual.
pub fn solve_bracketed<F>(f: F, bracket: RootBracket, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> (f64, f64),
{
    let mut lo = bracket.lo;
    let mut hi = bracket.hi;
    let lo_negative = bracket.lo_negative;
    let (mut flo, mut fhi) = (f(lo).0, f(hi).0);

    // Shrinks the bracket with a new sample; true when x is an exact root.
    let mut absorb = |x: f64, fx: f64, lo: &mut f64, hi: &mut f64| -> bool {
        if fx == 0.0 {
            return true;
        }
        if x > *lo && x < *hi {
            if (fx < 0.0) == lo_negative {
                *lo = x;
                flo = fx;
            } else {
                *hi = x;
                fhi = fx;
            }
        }
        false
    };

    let mut x = 0.5 * (lo + hi);
    for _ in 0..max_iter {
        let (fx, dfx) = f(x);
        if absorb(x, fx, &mut lo, &mut hi) {
            return Ok(x);
        }
        if hi - lo <= tol {
            break;
        }
        let newton = x - fx / dfx;
        if newton.is_finite() && newton > lo && newton < hi {
            if (newton - x).abs() < 0.5 * tol {
                // Converged from one side: probe both sides to collapse the bracket.
                for probe in [newton - 0.5 * tol, newton + 0.5 * tol] {
                    let fp = f(probe).0;
                    if absorb(probe, fp, &mut lo, &mut hi) {
                        return Ok(probe);
                    }
                }
                if hi - lo <= tol {
                    break;
                }
                x = 0.5 * (lo + hi);
            } else {
                x = newton;
            }
        } else {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            x = mid;
        }
    }
    if hi - lo > tol && 0.5 * (lo + hi) > lo && 0.5 * (lo + hi) < hi {
        return Err(Error::NoConvergence {
            iterations: max_iter,
        });
    }
    Ok(if flo.abs() <= fhi.abs() { lo } else { hi })
}

/// Unique positive root of a polynomial whose coefficients show exactly one
/// sign change, searched on `[lo, hi]`.
pub(crate) fn solve_poly_on(p: &RealPoly, lo: f64, hi: f64) -> Result<f64> {
    let bracket = RootBracket::new(lo, hi, |x| p.eval(x))?;
    solve_bracketed(|x| p.eval_with_derivative(x), bracket, BRACKET_TOL, MAX_ITER)
}

/// Positive root `r ≠ 1` of `x^{n+1} - (1+M)x^n + M = 0`.
///
/// The equation factors as `(x - 1)·q(x)` with
/// `q(x) = x^n - M(x^{n-1} + … + 1)`, which has exactly one positive root.
/// Since `q(1) = 1 - nM` and `q(M + 1) = 1`, that root lies in `(1, M + 1)`
/// when `M > 1/n` and in `(0, 1)` when `M < 1/n`. At `M = 1/n` the roots
/// merge and `1` is returned.
pub fn dehmer_radius(m: f64, n: usize) -> Result<f64> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::InvalidConfig(format!("M = {m} must be positive")));
    }
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let mut q = vec![-m; n + 1];
    q[n] = 1.0;
    let q = RealPoly::new(q)?;
    let at_one = q.eval(1.0);
    if at_one == 0.0 {
        return Ok(1.0);
    }
    if at_one < 0.0 {
        // The root lies below M + 1, where q = 1 exactly; in floating point
        // that value cancels between terms of size (M + 1)^n, so the bracket
        // ends at M + 2, where q ≥ x^n/(M + 1) keeps a clear sign.
        solve_poly_on(&q, 1.0, m + 2.0)
    } else {
        solve_poly_on(&q, 0.0, 1.0)
    }
}

/// Coefficients of `x^{n+1} - (1+M)x^n + M`, ascending.
pub fn dehmer_equation(m: f64, n: usize) -> Vec<f64> {
    let mut coeffs = vec![0.0; n + 2];
    coeffs[0] = m;
    coeffs[n] = -(1.0 + m);
    coeffs[n + 1] = 1.0;
    coeffs
}
