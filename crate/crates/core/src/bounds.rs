//! Zero-inclusion regions for analytic polynomials, harmonic polynomials and
//! the harmonic trinomial `z^n + c·conj(z)^k - 1`.
//!
//! Every bound returns a [`BoundReport`] carrying the region and the named
//! intermediate quantities (`M`, `r`, ring endpoints) used to build it.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{check_trinomial_shape, AnalyticPoly, HarmonicPoly, HarmonicTrinomial};
use crate::real_roots::{dehmer_radius, solve_poly_on, RealPoly};
use crate::region::Region;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMethod {
    Cauchy,
    Marden,
    DehmerAnalytic,
    Rouche,
    HarmonicDisk,
    TrinomialDisk,
    KennedyRing,
    KennedyRingAlt,
    AlphaRing,
    BetaAnnulus,
    TrinomialInclusion,
}

/// Conditions a caller should know about when reading a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundFlag {
    /// No annulus applies (complex `c` with `|c| < 1`); only the disk is given.
    AnnulusUnsupported,
    /// The inner ring equation has no positive root; only the outer bound holds.
    LowerBoundUndefined,
}

/// Which branch of the trinomial annulus applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrinomialCase {
    /// Real `0 < c < 1`: open annulus containing every zero.
    A,
    /// Real `c ≥ 1`: closed annulus for zeros with `|z| ≥ 1`.
    B,
    /// Complex `|c| ≥ 1`: as `B` with `|c|`.
    C,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub method: BoundMethod,
    pub region: Region,
    pub intermediate: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<BoundFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<TrinomialCase>,
}

impl BoundReport {
    fn new(method: BoundMethod, region: Region) -> Self {
        Self {
            method,
            region,
            intermediate: BTreeMap::new(),
            flags: Vec::new(),
            case: None,
        }
    }

    fn with(mut self, name: &str, value: f64) -> Self {
        self.intermediate.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.intermediate.get(name).copied()
    }
}

/// Closed real interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

/// `max_{j<n} |a_j / a_n|` over the given coefficient moduli.
fn max_ratio(moduli: &[f64]) -> f64 {
    let n = moduli.len() - 1;
    moduli[..n]
        .iter()
        .map(|a| a / moduli[n])
        .fold(0.0, f64::max)
}

/// All real zeros lie in `[-(M+1), M+1]`.
pub fn cauchy_interval(p: &RealPoly) -> Result<Interval> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let moduli: Vec<f64> = p.coeffs().iter().map(|c| c.abs()).collect();
    let m = max_ratio(&moduli);
    Ok(Interval {
        lo: -(m + 1.0),
        hi: m + 1.0,
    })
}

/// The same bound applied to the moduli of complex coefficients, as a disk.
pub fn cauchy_disk(p: &AnalyticPoly) -> Result<BoundReport> {
    let moduli = analytic_moduli(p)?;
    let m = max_ratio(&moduli);
    Ok(
        BoundReport::new(BoundMethod::Cauchy, Region::disk(m + 1.0, true)?)
            .with("M", m)
            .with("lo", -(m + 1.0))
            .with("hi", m + 1.0),
    )
}

fn analytic_moduli(p: &AnalyticPoly) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    Ok(p.coeffs().iter().map(|c| c.norm()).collect())
}

/// Unique positive root of `|a_0| + |a_1|x + … + |a_{n-1}|x^{n-1} - |a_n|x^n`.
///
/// Returns `0` when every lower coefficient vanishes (`p = a_n z^n`).
pub fn marden_radius(p: &AnalyticPoly) -> Result<f64> {
    let moduli = analytic_moduli(p)?;
    let n = moduli.len() - 1;
    let Some(low) = moduli[..n].iter().position(|&a| a > 0.0) else {
        return Ok(0.0);
    };
    // Divide out x^low so the value at 0 is strictly positive.
    let mut coeffs: Vec<f64> = moduli[low..].to_vec();
    let last = coeffs.len() - 1;
    coeffs[last] = -coeffs[last];
    let eq = RealPoly::new(coeffs)?;
    // The root lies below M + 1, but the value there can cancel to zero in
    // floating point when all ratios are equal; 2(M + 1) keeps a clear sign.
    let m = max_ratio(&moduli);
    solve_poly_on(&eq, 0.0, 2.0 * (m + 1.0))
}

pub fn marden_disk(p: &AnalyticPoly) -> Result<BoundReport> {
    let r = marden_radius(p)?;
    Ok(BoundReport::new(BoundMethod::Marden, Region::disk(r, true)?).with("r", r))
}

/// `max(1, r)` with `r` from [`dehmer_radius`]; `M = 0` gives `1`.
fn dehmer_bound(m: f64, n: usize) -> Result<(f64, f64)> {
    if m == 0.0 {
        return Ok((0.0, 1.0));
    }
    let r = dehmer_radius(m, n)?;
    Ok((r, r.max(1.0)))
}

/// Closed disk `K(0, max(1, δ))` for an analytic polynomial.
pub fn dehmer_disk(p: &AnalyticPoly) -> Result<BoundReport> {
    let moduli = analytic_moduli(p)?;
    let m = max_ratio(&moduli);
    let (r, radius) = dehmer_bound(m, p.degree())?;
    Ok(
        BoundReport::new(BoundMethod::DehmerAnalytic, Region::disk(radius, true)?)
            .with("M", m)
            .with("r", r),
    )
}

/// `sqrt(1 + Σ_{j<n} |b_j|²)` for a monic polynomial.
///
/// A non-monic polynomial is divided by its leading coefficient when
/// `normalize` is set and rejected otherwise.
pub fn rouche_radius(p: &AnalyticPoly, normalize: bool) -> Result<f64> {
    analytic_moduli(p)?;
    let lead = p.leading();
    if lead != Complex64::new(1.0, 0.0) && !normalize {
        return Err(Error::InvalidConfig(
            "polynomial is not monic; pass normalize to divide by the leading coefficient"
                .into(),
        ));
    }
    let n = p.degree();
    let sum: f64 = p.coeffs()[..n].iter().map(|b| (b / lead).norm_sqr()).sum();
    Ok((1.0 + sum).sqrt())
}

pub fn rouche_disk(p: &AnalyticPoly) -> Result<BoundReport> {
    let r = rouche_radius(p, true)?;
    Ok(BoundReport::new(BoundMethod::Rouche, Region::disk(r, false)?).with("R", r))
}

/// Closed disk `D(0, R)` containing every zero of `h + conj(g)`, with
/// `M = max_{j<n} (|a_j| + |b_j|) / |a_n|` and `R = max(1, r)`.
pub fn harmonic_disk(p: &HarmonicPoly) -> Result<BoundReport> {
    if !p.is_dominant() {
        return Err(Error::InvalidHarmonic(
            "disk bound needs deg g < deg h and deg h >= 1".into(),
        ));
    }
    let n = p.n();
    let lead = p.h().leading().norm();
    let m = (0..n)
        .map(|j| (p.h().coeff(j).norm() + p.g().coeff(j).norm()) / lead)
        .fold(0.0, f64::max);
    let (r, radius) = dehmer_bound(m, n)?;
    Ok(
        BoundReport::new(BoundMethod::HarmonicDisk, Region::disk(radius, true)?)
            .with("M", m)
            .with("r", r)
            .with("R", radius),
    )
}

/// Trinomial specialization of the harmonic disk with `M = max(1, |c|)`.
pub fn trinomial_disk(t: &HarmonicTrinomial) -> Result<BoundReport> {
    let m = t.c().norm().max(1.0);
    let (r, radius) = dehmer_bound(m, t.n() as usize)?;
    Ok(
        BoundReport::new(BoundMethod::TrinomialDisk, Region::disk(radius, true)?)
            .with("M", m)
            .with("r", r)
            .with("R", radius),
    )
}

fn check_ring_inputs(n: u32, k: u32, a: Complex64, b: Complex64) -> Result<(f64, f64)> {
    check_trinomial_shape(n, k)?;
    let (a, b) = (a.norm(), b.norm());
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidTrinomial("need a·b != 0".into()));
    }
    Ok((a, b))
}

/// Positive roots of `x^n + |a|x^k - |b|` and `x^n - |a|x^k - |b|`.
fn kennedy_roots(n: u32, k: u32, a: f64, b: f64) -> Result<(f64, f64)> {
    let (n, k) = (n as usize, k as usize);
    let lower = RealPoly::from_sparse(&[(n, 1.0), (k, a), (0, -b)])?;
    let upper = RealPoly::from_sparse(&[(n, 1.0), (k, -a), (0, -b)])?;
    let x1 = solve_poly_on(&lower, 0.0, b.powf(1.0 / n as f64))?;
    let x2 = solve_poly_on(&upper, 0.0, 1.0 + a.max(b))?;
    Ok((x1, x2))
}

/// Closed ring `x₁ ≤ |z| ≤ x₂` for the zeros of `z^n + a z^k + b`.
pub fn kennedy_ring(n: u32, k: u32, a: Complex64, b: Complex64) -> Result<BoundReport> {
    let (a, b) = check_ring_inputs(n, k, a, b)?;
    let (x1, x2) = kennedy_roots(n, k, a, b)?;
    Ok(
        BoundReport::new(BoundMethod::KennedyRing, Region::closed_annulus(x1, x2)?)
            .with("x1", x1)
            .with("x2", x2),
    )
}

/// Open ring `y₁ < |z| < y₂` with `y^{n-k} = |b|^{(n-k)/n} ∓ |a|`.
///
/// When `|b|^{(n-k)/n} ≤ |a|` the inner equation has no positive root; the
/// region is then the open disk of radius `y₂` and the report is flagged.
pub fn kennedy_ring_alt(n: u32, k: u32, a: Complex64, b: Complex64) -> Result<BoundReport> {
    let (a, b) = check_ring_inputs(n, k, a, b)?;
    let d = (n - k) as f64;
    let s = b.powf(d / n as f64);
    let y2 = (s + a).powf(1.0 / d);
    if s > a {
        let y1 = (s - a).powf(1.0 / d);
        Ok(
            BoundReport::new(BoundMethod::KennedyRingAlt, Region::open_annulus(y1, y2)?)
                .with("y1", y1)
                .with("y2", y2),
        )
    } else {
        let mut report = BoundReport::new(
            BoundMethod::KennedyRingAlt,
            Region::Union(vec![Region::disk(y2, false)?]),
        )
        .with("y2", y2);
        report.flags.push(BoundFlag::LowerBoundUndefined);
        Ok(report)
    }
}

/// Closed ring `α₁ ≤ |z| ≤ α₂` for real `0 < c < 1`, where the trinomial has
/// exactly `n` distinct zeros.
pub fn alpha_ring(t: &HarmonicTrinomial) -> Result<BoundReport> {
    let c = match t.positive_real_c() {
        Some(c) if c < 1.0 => c,
        _ => {
            return Err(Error::CaseMismatch(format!(
                "alpha ring needs real 0 < c < 1, got {}",
                t.c()
            )))
        }
    };
    let (a1, a2) = kennedy_roots(t.n(), t.k(), c, 1.0)?;
    Ok(
        BoundReport::new(BoundMethod::AlphaRing, Region::closed_annulus(a1, a2)?)
            .with("alpha1", a1)
            .with("alpha2", a2)
            .with("expected_zero_count", t.n() as f64),
    )
}

/// The case that applies to `t`, or `None` for complex `c` with `|c| < 1`.
pub fn trinomial_case(t: &HarmonicTrinomial) -> Option<TrinomialCase> {
    match t.positive_real_c() {
        Some(c) if c < 1.0 => Some(TrinomialCase::A),
        Some(_) => Some(TrinomialCase::B),
        None if t.c().norm() >= 1.0 => Some(TrinomialCase::C),
        None => None,
    }
}

/// Closed-form annulus for the selected case.
///
/// Cases B and C only constrain zeros with `|z| ≥ 1`, so their region is the
/// open unit disk joined with the closed annulus.
pub fn beta_annulus(t: &HarmonicTrinomial, case: TrinomialCase) -> Result<BoundReport> {
    let d = (t.n() - t.k()) as f64;
    let root = |x: f64| x.powf(1.0 / d);
    let (modulus, region) = match case {
        TrinomialCase::A => {
            let c = match t.positive_real_c() {
                Some(c) if c < 1.0 => c,
                _ => return Err(case_mismatch(t, case)),
            };
            (c, Region::open_annulus(root(1.0 - c), root(1.0 + c))?)
        }
        TrinomialCase::B | TrinomialCase::C => {
            let c = match (case, t.positive_real_c()) {
                (TrinomialCase::B, Some(c)) if c >= 1.0 => c,
                (TrinomialCase::C, _) if t.c().norm() >= 1.0 => t.c().norm(),
                _ => return Err(case_mismatch(t, case)),
            };
            (
                c,
                Region::Union(vec![
                    Region::disk(1.0, false)?,
                    Region::closed_annulus(root(c - 1.0), root(1.0 + c))?,
                ]),
            )
        }
    };
    let (b1, b2) = region.annulus_member().expect("annulus member present");
    let mut report = BoundReport::new(BoundMethod::BetaAnnulus, region)
        .with("beta1", b1)
        .with("beta2", b2)
        .with("c_modulus", modulus);
    report.case = Some(case);
    Ok(report)
}

fn case_mismatch(t: &HarmonicTrinomial, case: TrinomialCase) -> Error {
    Error::CaseMismatch(format!("c = {} does not satisfy case {case:?}", t.c()))
}

/// Tightest region available for `t`: the case annulus clipped to the
/// trinomial disk, or the disk alone (flagged) when no case applies.
pub fn trinomial_inclusion_region(t: &HarmonicTrinomial) -> Result<BoundReport> {
    let disk = trinomial_disk(t)?;
    let radius = disk.region.outer_radius();
    let mut report = match trinomial_case(t) {
        Some(case) => {
            let beta = beta_annulus(t, case)?;
            let mut report = BoundReport::new(
                BoundMethod::TrinomialInclusion,
                beta.region.intersect_disk(radius, true),
            );
            report.intermediate = beta.intermediate;
            report.case = Some(case);
            report
        }
        None => {
            let mut report = BoundReport::new(BoundMethod::TrinomialInclusion, disk.region.clone());
            report.flags.push(BoundFlag::AnnulusUnsupported);
            report
        }
    };
    report.intermediate.insert("M".into(), disk.get("M").unwrap());
    report.intermediate.insert("r".into(), disk.get("r").unwrap());
    report.intermediate.insert("disk_radius".into(), radius);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
        let fa_neg = f(a) < 0.0;
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (f(m) < 0.0) == fa_neg {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    const DEHMER_1_5: f64 = 1.965_948_236_645_485_5;
    const DEHMER_2_5: f64 = 2.991_654_101_408_989;

    #[test]
    fn cauchy_examples() {
        let p = RealPoly::from_descending(&[5.0, -8.0, 1.0, -10.0]).unwrap();
        assert_eq!(cauchy_interval(&p).unwrap(), Interval { lo: -3.0, hi: 3.0 });
        let p = RealPoly::from_sparse(&[(4, 1.0)]).unwrap();
        assert_eq!(cauchy_interval(&p).unwrap(), Interval { lo: -1.0, hi: 1.0 });
        let p = RealPoly::from_descending(&[1.0, -2.0, 1.0]).unwrap();
        let i = cauchy_interval(&p).unwrap();
        assert_eq!(i, Interval { lo: -3.0, hi: 3.0 });
        assert!(i.lo <= 1.0 && 1.0 <= i.hi);
        let constant = RealPoly::new(vec![4.0]).unwrap();
        assert_eq!(cauchy_interval(&constant), Err(Error::DegreeZero));
    }

    #[test]
    fn marden_examples() {
        let p = AnalyticPoly::from_real(&[-1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(marden_radius(&p).unwrap(), 1.0, epsilon = 1e-12);
        let p = AnalyticPoly::from_real(&[0.0, -2.0, 1.0]).unwrap();
        assert_abs_diff_eq!(marden_radius(&p).unwrap(), 2.0, epsilon = 1e-12);
        let p = AnalyticPoly::from_real(&[-10.0, 1.0, -8.0, 5.0]).unwrap();
        let oracle = bisect(|x| 10.0 + x + 8.0 * x * x - 5.0 * x.powi(3), 0.0, 3.0);
        assert_abs_diff_eq!(oracle, 2.133_243_902_098_622_7, epsilon = 1e-12);
        assert_abs_diff_eq!(marden_radius(&p).unwrap(), oracle, epsilon = 1e-11);
        assert_eq!(
            marden_radius(&AnalyticPoly::from_real(&[3.0]).unwrap()),
            Err(Error::DegreeZero)
        );
    }

    #[test]
    fn rouche_examples() {
        let p = AnalyticPoly::monomial(4, c(1.0, 0.0));
        assert_eq!(rouche_radius(&p, false).unwrap(), 1.0);
        let p = AnalyticPoly::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(rouche_radius(&p, false).unwrap(), 2f64.sqrt());
        let p = AnalyticPoly::from_real(&[0.0, -2.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(rouche_radius(&p, false).unwrap(), 5f64.sqrt());
        let p = AnalyticPoly::from_real(&[0.0, -4.0, 0.0, 2.0]).unwrap();
        assert!(rouche_radius(&p, false).is_err());
        assert_abs_diff_eq!(rouche_radius(&p, true).unwrap(), 5f64.sqrt());
    }

    #[test]
    fn harmonic_disk_examples() {
        let two = HarmonicTrinomial::real(5, 3, 2.0).unwrap().to_harmonic();
        let r = harmonic_disk(&two).unwrap();
        assert_eq!(r.get("M"), Some(2.0));
        assert_abs_diff_eq!(r.region.outer_radius(), DEHMER_2_5, epsilon = 1e-10);

        let pure = HarmonicPoly::new(AnalyticPoly::monomial(5, c(1.0, 0.0)), AnalyticPoly::zero())
            .unwrap();
        let r = harmonic_disk(&pure).unwrap();
        assert_eq!(r.get("M"), Some(0.0));
        assert_eq!(r.region, Region::disk(1.0, true).unwrap());

        let half = HarmonicTrinomial::real(5, 3, 0.5).unwrap().to_harmonic();
        let r = harmonic_disk(&half).unwrap();
        assert_eq!(r.get("M"), Some(1.0));
        assert_abs_diff_eq!(r.region.outer_radius(), DEHMER_1_5, epsilon = 1e-10);
    }

    #[test]
    fn harmonic_disk_combines_both_parts() {
        // h = 2z^3 + z + 1, g = 3z^2 + i z: M = max(1, 1 + 1, 3)/2 = 1.5.
        let h = AnalyticPoly::from_real(&[1.0, 1.0, 0.0, 2.0]).unwrap();
        let g = AnalyticPoly::new(vec![c(0.0, 0.0), c(0.0, 1.0), c(3.0, 0.0)]).unwrap();
        let r = harmonic_disk(&HarmonicPoly::new(h, g).unwrap()).unwrap();
        assert_eq!(r.get("M"), Some(1.5));
    }

    #[test]
    fn trinomial_disk_examples() {
        let r = trinomial_disk(&HarmonicTrinomial::real(5, 3, 2.0).unwrap()).unwrap();
        assert_eq!(r.get("M"), Some(2.0));
        assert_abs_diff_eq!(r.region.outer_radius(), DEHMER_2_5, epsilon = 1e-10);
        for cc in [c(0.5, 0.0), c(0.0, 0.9), c(-0.3, 0.4)] {
            let r = trinomial_disk(&HarmonicTrinomial::new(5, 3, cc).unwrap()).unwrap();
            assert_eq!(r.get("M"), Some(1.0));
            assert_abs_diff_eq!(r.region.outer_radius(), DEHMER_1_5, epsilon = 1e-10);
        }
    }

    #[test]
    fn kennedy_ring_examples() {
        let r = kennedy_ring(5, 3, c(0.5, 0.0), c(-1.0, 0.0)).unwrap();
        let x1 = bisect(|x| x.powi(5) + 0.5 * x.powi(3) - 1.0, 0.0, 1.0);
        let x2 = bisect(|x| x.powi(5) - 0.5 * x.powi(3) - 1.0, 1.0, 2.0);
        assert_abs_diff_eq!(r.get("x1").unwrap(), x1, epsilon = 1e-10);
        assert_abs_diff_eq!(r.get("x2").unwrap(), x2, epsilon = 1e-10);

        let r = kennedy_ring(5, 3, c(2.0, 0.0), c(-1.0, 0.0)).unwrap();
        let x1 = bisect(|x| x.powi(5) + 2.0 * x.powi(3) - 1.0, 0.0, 1.0);
        let x2 = bisect(|x| x.powi(5) - 2.0 * x.powi(3) - 1.0, 1.0, 2.0);
        assert_abs_diff_eq!(x1, 0.733_156_856_460_966_1, epsilon = 1e-12);
        assert_abs_diff_eq!(x2, 1.512_876_396_864_094_8, epsilon = 1e-12);
        assert_abs_diff_eq!(r.get("x1").unwrap(), x1, epsilon = 1e-10);
        assert_abs_diff_eq!(r.get("x2").unwrap(), x2, epsilon = 1e-10);
        assert!(matches!(r.region, Region::Annulus { inner_closed: true, outer_closed: true, .. }));

        let r = kennedy_ring(5, 3, c(1e-9, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(r.get("x2").unwrap() - r.get("x1").unwrap() < 1e-3);

        assert!(kennedy_ring(4, 2, c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(kennedy_ring(5, 3, c(0.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn kennedy_ring_alt_examples() {
        let r = kennedy_ring_alt(5, 3, c(0.5, 0.0), c(-1.0, 0.0)).unwrap();
        assert_eq!(
            r.region,
            Region::open_annulus(0.5f64.sqrt(), 1.5f64.sqrt()).unwrap()
        );

        let r = kennedy_ring_alt(5, 3, c(2.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert_eq!(r.flags, vec![BoundFlag::LowerBoundUndefined]);
        assert_abs_diff_eq!(r.get("y2").unwrap(), 3f64.sqrt(), epsilon = 1e-15);
        assert_eq!(
            r.region,
            Region::Union(vec![Region::disk(3f64.sqrt(), false).unwrap()])
        );

        let r = kennedy_ring_alt(5, 3, c(1e-9, 0.0), c(0.6, 0.8)).unwrap();
        assert_abs_diff_eq!(r.get("y1").unwrap(), 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(r.get("y2").unwrap(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn alpha_ring_examples() {
        let t = HarmonicTrinomial::real(5, 3, 0.5).unwrap();
        let r = alpha_ring(&t).unwrap();
        let k = kennedy_ring(5, 3, c(0.5, 0.0), c(-1.0, 0.0)).unwrap();
        assert_eq!(r.get("alpha1"), k.get("x1"));
        assert_eq!(r.get("alpha2"), k.get("x2"));
        assert_eq!(r.get("expected_zero_count"), Some(5.0));

        let t = HarmonicTrinomial::real(5, 3, 1e-10).unwrap();
        let r = alpha_ring(&t).unwrap();
        assert_abs_diff_eq!(r.get("alpha1").unwrap(), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.get("alpha2").unwrap(), 1.0, epsilon = 1e-9);

        for bad in [1.0, 2.0] {
            let t = HarmonicTrinomial::real(5, 3, bad).unwrap();
            assert!(matches!(alpha_ring(&t), Err(Error::CaseMismatch(_))));
        }
        let t = HarmonicTrinomial::new(5, 3, c(0.0, 0.5)).unwrap();
        assert!(matches!(alpha_ring(&t), Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn beta_annulus_example_values() {
        let t = HarmonicTrinomial::real(5, 3, 0.5).unwrap();
        let r = beta_annulus(&t, TrinomialCase::A).unwrap();
        assert_eq!(
            r.region,
            Region::open_annulus(0.5f64.sqrt(), 1.5f64.sqrt()).unwrap()
        );

        let t = HarmonicTrinomial::real(5, 3, 2.0).unwrap();
        let r = beta_annulus(&t, TrinomialCase::B).unwrap();
        assert_eq!(r.region.annulus_member(), Some((1.0, 3f64.sqrt())));

        let t = HarmonicTrinomial::new(5, 3, c(0.0, 2.0)).unwrap();
        let r = beta_annulus(&t, TrinomialCase::C).unwrap();
        assert_eq!(r.region.annulus_member(), Some((1.0, 3f64.sqrt())));
    }

    #[test]
    fn beta_annulus_case_mismatch() {
        let half = HarmonicTrinomial::real(5, 3, 0.5).unwrap();
        let two = HarmonicTrinomial::real(5, 3, 2.0).unwrap();
        let small_complex = HarmonicTrinomial::new(5, 3, c(0.0, 0.5)).unwrap();
        assert!(beta_annulus(&half, TrinomialCase::B).is_err());
        assert!(beta_annulus(&half, TrinomialCase::C).is_err());
        assert!(beta_annulus(&two, TrinomialCase::A).is_err());
        assert!(beta_annulus(&small_complex, TrinomialCase::A).is_err());
        assert!(beta_annulus(&small_complex, TrinomialCase::C).is_err());
        // Case C accepts real c >= 1 as well: |c| = c.
        assert!(beta_annulus(&two, TrinomialCase::C).is_ok());
    }

    #[test]
    fn inclusion_region_examples() {
        let r = trinomial_inclusion_region(&HarmonicTrinomial::real(5, 3, 0.5).unwrap()).unwrap();
        assert_eq!(r.case, Some(TrinomialCase::A));
        assert_eq!(
            r.region,
            Region::open_annulus(0.5f64.sqrt(), 1.5f64.sqrt()).unwrap()
        );
        assert_abs_diff_eq!(r.get("disk_radius").unwrap(), DEHMER_1_5, epsilon = 1e-10);

        let r = trinomial_inclusion_region(&HarmonicTrinomial::real(5, 3, 2.0).unwrap()).unwrap();
        assert_eq!(r.case, Some(TrinomialCase::B));
        assert_eq!(
            r.region,
            Region::Union(vec![
                Region::disk(1.0, false).unwrap(),
                Region::closed_annulus(1.0, 3f64.sqrt()).unwrap(),
            ])
        );

        let r =
            trinomial_inclusion_region(&HarmonicTrinomial::new(5, 3, c(0.0, 0.5)).unwrap()).unwrap();
        assert_eq!(r.case, None);
        assert_eq!(r.flags, vec![BoundFlag::AnnulusUnsupported]);
        assert_eq!(r.region, Region::disk(r.get("disk_radius").unwrap(), true).unwrap());
        assert_abs_diff_eq!(r.region.outer_radius(), DEHMER_1_5, epsilon = 1e-10);
    }

    #[test]
    fn inclusion_region_clips_to_disk_when_annulus_is_wider() {
        // n - k = 1 makes the outer annulus radius 1 + c, beyond the disk.
        let t = HarmonicTrinomial::real(3, 2, 3.0).unwrap();
        let disk = trinomial_disk(&t).unwrap().region.outer_radius();
        assert!(disk < 4.0);
        let r = trinomial_inclusion_region(&t).unwrap();
        assert_eq!(r.region.outer_radius(), disk);
    }

    fn valid_pairs(ns: &[u32]) -> Vec<(u32, u32)> {
        ns.iter()
            .flat_map(|&n| (1..n).map(move |k| (n, k)))
            .filter(|&(n, k)| check_trinomial_shape(n, k).is_ok())
            .collect()
    }

    #[test]
    fn ring_nesting_on_grid() {
        for (n, k) in valid_pairs(&[3, 4, 5, 6, 7, 8, 9]) {
            for i in 1..=9 {
                let t = HarmonicTrinomial::real(n, k, 0.1 * i as f64).unwrap();
                let alpha = alpha_ring(&t).unwrap();
                let beta = beta_annulus(&t, TrinomialCase::A).unwrap();
                let (a1, a2) = (alpha.get("alpha1").unwrap(), alpha.get("alpha2").unwrap());
                let (b1, b2) = (beta.get("beta1").unwrap(), beta.get("beta2").unwrap());
                assert!(a1 - b1 > 1e-12, "n={n} k={k} c={}", t.c());
                assert!(b2 - a2 > 1e-12, "n={n} k={k} c={}", t.c());
            }
        }
    }

    #[test]
    fn closed_forms_match_beta_equations() {
        for (n, k) in valid_pairs(&[3, 4, 5, 7]) {
            for i in 1..=9 {
                let cc = 0.1 * i as f64;
                let t = HarmonicTrinomial::real(n, k, cc).unwrap();
                let beta = beta_annulus(&t, TrinomialCase::A).unwrap();
                let d = (n - k) as usize;
                let lower = RealPoly::from_sparse(&[(d, 1.0), (0, cc - 1.0)]).unwrap();
                let upper = RealPoly::from_sparse(&[(d, 1.0), (0, -cc - 1.0)]).unwrap();
                let b1 = solve_poly_on(&lower, 0.0, 1.0).unwrap();
                let b2 = solve_poly_on(&upper, 0.0, 2.0).unwrap();
                assert_abs_diff_eq!(beta.get("beta1").unwrap(), b1, epsilon = 1e-12);
                assert_abs_diff_eq!(beta.get("beta2").unwrap(), b2, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn case_a_width_monotone_in_c() {
        for (n, k) in valid_pairs(&[3, 4, 5, 7]) {
            let rings: Vec<(f64, f64)> = (1..100)
                .map(|i| {
                    let t = HarmonicTrinomial::real(n, k, 0.01 * i as f64).unwrap();
                    beta_annulus(&t, TrinomialCase::A)
                        .unwrap()
                        .region
                        .annulus_member()
                        .unwrap()
                })
                .collect();
            for w in rings.windows(2) {
                assert!(w[1].0 < w[0].0 && w[1].1 > w[0].1);
            }
        }
    }

    #[test]
    fn disk_dominates_annulus_outer_radius_when_n_minus_k_at_least_two() {
        let cs = [0.1, 0.3, 0.5, 0.7, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0];
        for (n, k) in valid_pairs(&[3, 4, 5, 6, 7, 8]) {
            if n - k < 2 {
                continue;
            }
            for &cc in &cs {
                let t = HarmonicTrinomial::real(n, k, cc).unwrap();
                let case = trinomial_case(&t).unwrap();
                let outer = beta_annulus(&t, case).unwrap().region.outer_radius();
                let disk = trinomial_disk(&t).unwrap().region.outer_radius();
                assert!(outer <= disk + 1e-9, "n={n} k={k} c={cc}: {outer} > {disk}");
            }
        }
    }

    #[test]
    fn disk_does_not_dominate_when_n_minus_k_is_one() {
        // The disk root satisfies r < 1 + max(1, c), while the annulus reaches 1 + c.
        let t = HarmonicTrinomial::real(3, 2, 0.9).unwrap();
        let outer = beta_annulus(&t, TrinomialCase::A).unwrap().region.outer_radius();
        let disk = trinomial_disk(&t).unwrap().region.outer_radius();
        assert!(outer > disk);
    }
}
