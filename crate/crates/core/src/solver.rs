//! Numerical zeros of harmonic polynomials and winding numbers of their
//! image curves.
//!
//! Zeros are found by damped Newton iteration on the equivalent real 2×2
//! system, seeded from a uniform grid over the square circumscribing the
//! inclusion disk. The winding number of `f` along a circle counts
//! sense-preserving minus sense-reversing zeros inside it.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::harmonic_disk;
use crate::error::{Error, Result};
use crate::poly::HarmonicPoly;

/// Jacobian determinant magnitude below which a Newton step is suspect.
const JACOBIAN_FLOOR: f64 = 1e-14;
/// Smallest damping factor tried before giving up on a step.
const MIN_DAMPING: f64 = 1.0 / (1u32 << 10) as f64;
/// Extra Newton step taken after the residual target is met.
const POLISH_STEPS: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Seeds per unit length along each axis.
    pub grid_density: f64,
    /// Residual target, relative to `1 + Σ|coefficients|`.
    pub newton_tol: f64,
    pub max_newton_iters: usize,
    /// Relative distance under which two zeros are merged.
    pub dedup_radius: f64,
    /// Multiplier on the disk radius for the seeding square and contours.
    pub search_radius_factor: f64,
    /// `|h'|² - |g'|²` magnitude below which a zero is classified singular.
    pub singular_threshold: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            grid_density: 40.0,
            newton_tol: 1e-10,
            max_newton_iters: 60,
            dedup_radius: 1e-6,
            search_radius_factor: 1.1,
            singular_threshold: 1e-8,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("grid_density", self.grid_density),
            ("newton_tol", self.newton_tol),
            ("dedup_radius", self.dedup_radius),
            ("search_radius_factor", self.search_radius_factor),
            ("singular_threshold", self.singular_threshold),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} = {v} must be positive")));
            }
        }
        if self.max_newton_iters == 0 {
            return Err(Error::InvalidConfig("max_newton_iters must be positive".into()));
        }
        if self.search_radius_factor < 1.0 {
            return Err(Error::InvalidConfig(
                "search_radius_factor must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    SensePreserving,
    SenseReversing,
    Singular,
}

impl Orientation {
    pub fn classify(jacobian_det: f64, threshold: f64) -> Self {
        if jacobian_det > threshold {
            Orientation::SensePreserving
        } else if jacobian_det < -threshold {
            Orientation::SenseReversing
        } else {
            Orientation::Singular
        }
    }
}

/// An accepted zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "RootRepr", from = "RootRepr")]
pub struct RootRecord {
    pub z: Complex64,
    /// `|f(z)|`.
    pub residual: f64,
    pub orientation: Orientation,
    /// `|h'(z)|² - |g'(z)|²`.
    pub jacobian_det: f64,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    re: f64,
    im: f64,
    residual: f64,
    orientation: Orientation,
    jacobian_det: f64,
}

impl From<RootRecord> for RootRepr {
    fn from(r: RootRecord) -> Self {
        RootRepr {
            re: r.z.re,
            im: r.z.im,
            residual: r.residual,
            orientation: r.orientation,
            jacobian_det: r.jacobian_det,
        }
    }
}

impl From<RootRepr> for RootRecord {
    fn from(r: RootRepr) -> Self {
        RootRecord {
            z: Complex64::new(r.re, r.im),
            residual: r.residual,
            orientation: r.orientation,
            jacobian_det: r.jacobian_det,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NewtonFailure {
    Diverged,
    Stalled,
    SingularJacobian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindingResult {
    pub winding: i64,
    pub min_modulus_on_contour: f64,
    pub samples_used: usize,
}

/// Newton step `δ` solving `f_z δ + f_zbar conj(δ) = -f`, i.e. the real
/// system with Jacobian `[[Re(A+B), -Im(A-B)], [Im(A+B), Re(A-B)]]`.
fn newton_step(f: Complex64, fz: Complex64, fzbar: Complex64) -> (Complex64, f64) {
    let det = fz.norm_sqr() - fzbar.norm_sqr();
    ((fzbar * f.conj() - fz.conj() * f) / det, det)
}

/// Coefficients of `h` and `g` zipped to a common length so that one Horner
/// pass carries four independent recurrences: Newton iterates depend on each
/// other, so evaluation is latency-bound rather than throughput-bound.
struct Kernel {
    pairs: Vec<(Complex64, Complex64)>,
}

impl Kernel {
    fn new(p: &HarmonicPoly) -> Self {
        let len = p.h().coeffs().len().max(p.g().coeffs().len());
        let pairs = (0..len).map(|j| (p.h().coeff(j), p.g().coeff(j))).collect();
        Self { pairs }
    }

    /// `(f, f_z, f_zbar)` at `z`.
    fn eval_full(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let (mut h, mut dh, mut g, mut dg) = (zero, zero, zero, zero);
        for &(a, b) in self.pairs.iter().rev() {
            dh = dh * z + h;
            h = h * z + a;
            dg = dg * z + g;
            g = g * z + b;
        }
        (h + g.conj(), dh, dg.conj())
    }
}

fn refine(
    kernel: &Kernel,
    seed: Complex64,
    cfg: &SolverConfig,
    target: f64,
    escape_radius: f64,
) -> std::result::Result<RootRecord, NewtonFailure> {
    let mut z = seed;
    let (mut f, mut fz, mut fzbar) = kernel.eval_full(z);
    let mut residual = f.norm();
    let mut polish = 0;

    for _ in 0..cfg.max_newton_iters + POLISH_STEPS {
        if residual <= target {
            if polish == POLISH_STEPS || residual == 0.0 {
                break;
            }
            polish += 1;
        }
        let (step, det) = newton_step(f, fz, fzbar);
        let mut damping = 1.0;
        let accepted = loop {
            let candidate = z + step * damping;
            if candidate.is_finite() {
                let (fc, fzc, fzbarc) = kernel.eval_full(candidate);
                let trial = fc.norm();
                if trial < residual {
                    break Some((candidate, fc, fzc, fzbarc));
                }
                // Minimizer of the quadratic model of |f|² along the step,
                // whose slope at 0 is -2|f|² for a Newton direction.
                let (phi0, phit) = (residual * residual, trial * trial);
                let model = phi0 * damping * damping / (phit - phi0 + 2.0 * phi0 * damping);
                damping = model.clamp(0.1 * damping, 0.5 * damping);
            } else {
                damping *= 0.5;
            }
            // Polishing takes full steps only: at rounding level a rejected
            // step means nothing more can be gained.
            if damping < MIN_DAMPING || residual <= target {
                break None;
            }
        };
        match accepted {
            Some((zn, fn_, fzn, fzbarn)) => {
                z = zn;
                f = fn_;
                fz = fzn;
                fzbar = fzbarn;
                residual = f.norm();
                if z.norm() > escape_radius {
                    return Err(NewtonFailure::Diverged);
                }
            }
            None if residual <= target => break,
            None if det.abs() < JACOBIAN_FLOOR => return Err(NewtonFailure::SingularJacobian),
            None => return Err(NewtonFailure::Stalled),
        }
    }
    if residual > target {
        return Err(NewtonFailure::Stalled);
    }
    let jacobian_det = fz.norm_sqr() - fzbar.norm_sqr();
    Ok(RootRecord {
        z,
        residual,
        orientation: Orientation::classify(jacobian_det, cfg.singular_threshold),
        jacobian_det,
    })
}

/// Radius of the seeding square's inscribed disk.
fn search_radius(p: &HarmonicPoly, cfg: &SolverConfig) -> Result<f64> {
    Ok(cfg.search_radius_factor * harmonic_disk(p)?.region.outer_radius())
}

/// Damped Newton refinement of a single seed.
///
/// The iterate is abandoned once it leaves ten times the search disk (for
/// polynomials outside the disk bound's class, ten times
/// `max(|seed|, 1 + Σ|coefficients|)`).
pub fn newton_refine(
    p: &HarmonicPoly,
    seed: Complex64,
    cfg: &SolverConfig,
) -> std::result::Result<RootRecord, NewtonFailure> {
    let base = if p.is_dominant() {
        search_radius(p, cfg).unwrap_or_else(|_| p.scale())
    } else {
        cfg.search_radius_factor * seed.norm().max(p.scale())
    };
    refine(&Kernel::new(p), seed, cfg, cfg.newton_tol * p.scale(), 10.0 * base)
}

fn canonical(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Every zero of `p`, deduplicated and sorted by `(re, im)`.
///
/// Fails with `CapacityExceeded` if more than `n²` distinct zeros survive
/// deduplication, which points at a `dedup_radius` that is too small.
pub fn find_all_zeros(p: &HarmonicPoly, cfg: &SolverConfig) -> Result<Vec<RootRecord>> {
    cfg.validate()?;
    let half = search_radius(p, cfg)?;
    let per_side = ((2.0 * half * cfg.grid_density).ceil() as usize).max(2);
    let spacing = 2.0 * half / per_side as f64;
    let escape = 10.0 * half;
    let kernel = Kernel::new(p);
    let target = cfg.newton_tol * p.scale();

    let mut candidates: Vec<RootRecord> = (0..per_side * per_side)
        .into_par_iter()
        .filter_map(|idx| {
            let (i, j) = (idx % per_side, idx / per_side);
            let seed = Complex64::new(
                -half + (i as f64 + 0.5) * spacing,
                -half + (j as f64 + 0.5) * spacing,
            );
            refine(&kernel, seed, cfg, target, escape).ok()
        })
        .collect();

    // Best residual first; position breaks ties so the result is canonical.
    candidates.sort_by(|a, b| a.residual.total_cmp(&b.residual).then(canonical(&a.z, &b.z)));
    let mut kept: Vec<RootRecord> = Vec::new();
    for cand in candidates {
        let radius = cfg.dedup_radius * cand.z.norm().max(1.0);
        if kept.iter().all(|k| (k.z - cand.z).norm() > radius) {
            kept.push(cand);
        }
    }
    kept.sort_by(|a, b| canonical(&a.z, &b.z));

    let capacity = p.n() * p.n();
    if kept.len() > capacity {
        return Err(Error::CapacityExceeded {
            found: kept.len(),
            capacity,
        });
    }
    Ok(kept)
}

/// Winding number of `f` along the positively oriented circle `|z| = radius`.
///
/// The argument is accumulated from principal-value increments between
/// samples; any interval whose increment reaches `π/2` is bisected.
pub fn winding_number(p: &HarmonicPoly, radius: f64, cfg: &SolverConfig) -> Result<WindingResult> {
    cfg.validate()?;
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidConfig(format!("radius {radius} must be positive")));
    }
    let floor = 1e-6 * p.scale();
    let degree = p.h().degree().max(p.g().degree());
    let initial = (32 * degree).max(256);
    let point = |t: f64| p.eval(Complex64::from_polar(radius, t));

    let mut samples = initial;
    let mut min_modulus = f64::INFINITY;
    let values: Vec<(f64, Complex64)> = (0..=initial)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / initial as f64;
            (t, if i == initial { point(0.0) } else { point(t) })
        })
        .collect();
    for (_, v) in &values {
        min_modulus = min_modulus.min(v.norm());
    }

    let mut total = 0.0;
    let mut stack: Vec<(f64, Complex64, f64, Complex64, u32)> = Vec::new();
    for w in values.windows(2) {
        stack.push((w[0].0, w[0].1, w[1].0, w[1].1, 0));
        while let Some((t0, f0, t1, f1, depth)) = stack.pop() {
            let delta = (f1 * f0.conj()).arg();
            if delta.abs() < FRAC_PI_2 {
                total += delta;
                continue;
            }
            if depth >= 48 || min_modulus <= floor {
                return Err(Error::ZeroOnContour {
                    radius,
                    min_modulus,
                });
            }
            let tm = 0.5 * (t0 + t1);
            let fm = point(tm);
            samples += 1;
            min_modulus = min_modulus.min(fm.norm());
            // Right half first so the left half is processed next.
            stack.push((tm, fm, t1, f1, depth + 1));
            stack.push((t0, f0, tm, fm, depth + 1));
        }
    }
    if min_modulus <= floor {
        return Err(Error::ZeroOnContour {
            radius,
            min_modulus,
        });
    }
    let value = total / (2.0 * PI);
    let rounded = value.round();
    if (value - rounded).abs() > 1e-3 {
        return Err(Error::NonIntegerWinding { value });
    }
    Ok(WindingResult {
        winding: rounded as i64,
        min_modulus_on_contour: min_modulus,
        samples_used: samples,
    })
}

/// Winding number on the search circle next to the signed zero count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub radius: f64,
    pub winding: WindingResult,
    pub sense_preserving: usize,
    pub sense_reversing: usize,
}

impl ConsistencyReport {
    pub fn signed_count(&self) -> i64 {
        self.sense_preserving as i64 - self.sense_reversing as i64
    }

    pub fn matches(&self) -> bool {
        self.winding.winding == self.signed_count()
    }
}

/// Compares the winding number on the search circle with already-found zeros.
pub fn check_signed_count(
    p: &HarmonicPoly,
    zeros: &[RootRecord],
    cfg: &SolverConfig,
) -> Result<ConsistencyReport> {
    if let Some(s) = zeros.iter().find(|r| r.orientation == Orientation::Singular) {
        return Err(Error::SingularZeroPresent {
            re: s.z.re,
            im: s.z.im,
        });
    }
    let radius = search_radius(p, cfg)?;
    let winding = winding_number(p, radius, cfg)?;
    let count = |o: Orientation| zeros.iter().filter(|r| r.orientation == o).count();
    Ok(ConsistencyReport {
        radius,
        winding,
        sense_preserving: count(Orientation::SensePreserving),
        sense_reversing: count(Orientation::SenseReversing),
    })
}

/// Finds every zero and checks the signed count against the winding number.
pub fn signed_count_consistency(p: &HarmonicPoly, cfg: &SolverConfig) -> Result<ConsistencyReport> {
    let zeros = find_all_zeros(p, cfg)?;
    let report = check_signed_count(p, &zeros, cfg)?;
    if !report.matches() {
        return Err(Error::Mismatch {
            winding: report.winding.winding,
            signed: report.signed_count(),
        });
    }
    Ok(report)
}
