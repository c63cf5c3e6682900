//! Bounds, verification and sweep reports behind the `hzeros` command line.

use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    alpha_ring, beta_annulus, cauchy_disk, cauchy_interval, dehmer_disk, harmonic_disk,
    kennedy_ring, kennedy_ring_alt, marden_disk, rouche_disk, trinomial_case,
    trinomial_disk, trinomial_inclusion_region, BoundReport, Interval, TrinomialCase,
};
use crate::error::{Error, Result};
use crate::poly::{AnalyticPoly, HarmonicPoly, HarmonicTrinomial};
use crate::real_roots::{descartes_negative_bound, descartes_positive_bound, RealPoly};
use crate::solver::{check_signed_count, find_all_zeros, winding_number, RootRecord, SolverConfig};

/// Boundary widening used when checking found zeros against regions.
pub const CONTAINMENT_TOL: f64 = 1e-6;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const CASE: i32 = 3;
    pub const SOLVER: i32 = 4;
}

/// Exit code for an error surfaced by a command.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_solver_error() {
        exit::SOLVER
    } else if matches!(err, Error::InvalidConfig(_)) {
        exit::PARSE
    } else {
        exit::CASE
    }
}

/// A problem instance as given on the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Trinomial(HarmonicTrinomial),
    Harmonic(HarmonicPoly),
    Analytic(AnalyticPoly),
}

impl Instance {
    /// The harmonic polynomial the solver works on.
    pub fn harmonic(&self) -> Result<HarmonicPoly> {
        match self {
            Instance::Trinomial(t) => Ok(t.to_harmonic()),
            Instance::Harmonic(p) => Ok(p.clone()),
            Instance::Analytic(p) => HarmonicPoly::new(p.clone(), AnalyticPoly::zero()),
        }
    }
}

/// Parses `re` or `re,im`.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid number {t:?}: {e}"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescartesCounts {
    pub positive: usize,
    pub negative: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsOutput {
    pub instance: Instance,
    pub regions: Vec<BoundReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cauchy_interval: Option<Interval>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descartes: Option<DescartesCounts>,
}

/// Regions that hold for the zeros of the harmonic trinomial `t`.
fn trinomial_regions(t: &HarmonicTrinomial) -> Result<Vec<BoundReport>> {
    let a = t.c();
    let b = Complex64::new(-1.0, 0.0);
    let mut regions = vec![
        trinomial_inclusion_region(t)?,
        trinomial_disk(t)?,
        harmonic_disk(&t.to_harmonic())?,
    ];
    if let Some(case) = trinomial_case(t) {
        regions.push(beta_annulus(t, case)?);
        if case == TrinomialCase::A {
            regions.push(alpha_ring(t)?);
        }
    }
    regions.push(kennedy_ring(t.n(), t.k(), a, b)?);
    regions.push(kennedy_ring_alt(t.n(), t.k(), a, b)?);
    Ok(regions)
}

fn analytic_regions(p: &AnalyticPoly) -> Result<Vec<BoundReport>> {
    Ok(vec![
        cauchy_disk(p)?,
        marden_disk(p)?,
        dehmer_disk(p)?,
        rouche_disk(p)?,
    ])
}

fn regions_for(instance: &Instance) -> Result<Vec<BoundReport>> {
    match instance {
        Instance::Trinomial(t) => trinomial_regions(t),
        Instance::Harmonic(p) => Ok(vec![harmonic_disk(p)?]),
        Instance::Analytic(p) => {
            let mut regions = analytic_regions(p)?;
            regions.push(harmonic_disk(&instance.harmonic()?)?);
            Ok(regions)
        }
    }
}

/// Every applicable bound for an instance.
pub fn bounds(instance: &Instance) -> Result<BoundsOutput> {
    let regions = regions_for(instance)?;
    let (mut interval, mut descartes) = (None, None);
    if let Instance::Analytic(p) = instance {
        if p.coeffs().iter().all(|c| c.im == 0.0) {
            let real = RealPoly::new(p.coeffs().iter().map(|c| c.re).collect())?;
            interval = Some(cauchy_interval(&real)?);
            descartes = Some(DescartesCounts {
                positive: descartes_positive_bound(&real),
                negative: descartes_negative_bound(&real),
            });
        }
    }
    Ok(BoundsOutput {
        instance: instance.clone(),
        regions,
        cauchy_interval: interval,
        descartes,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveOutput {
    pub instance: Instance,
    pub zeros: Vec<RootRecord>,
}

pub fn solve(instance: &Instance, cfg: &SolverConfig) -> Result<SolveOutput> {
    let zeros = find_all_zeros(&instance.harmonic()?, cfg)?;
    Ok(SolveOutput {
        instance: instance.clone(),
        zeros,
    })
}

/// One integer comparison in a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub observed: i64,
    /// Inclusive range the observed value must fall in.
    pub expected_min: i64,
    pub expected_max: i64,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, radius: Option<f64>, observed: i64, lo: i64, hi: i64) -> Self {
        Self {
            name: name.to_string(),
            radius,
            observed,
            expected_min: lo,
            expected_max: hi,
            passed: (lo..=hi).contains(&observed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: Instance,
    pub regions: Vec<BoundReport>,
    pub zeros: Vec<RootRecord>,
    /// `containment[i][j]`: zero `i` lies in region `j`.
    pub containment: Vec<Vec<bool>>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    /// Milliseconds per stage.
    pub timings: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            exit::PASS
        } else {
            exit::VIOLATION
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Bounds, zeros, containment matrix and winding checks for one instance.
pub fn verify(instance: &Instance, cfg: &SolverConfig, tol: f64) -> Result<VerificationReport> {
    let p = instance.harmonic()?;
    let mut timings = BTreeMap::new();

    let start = Instant::now();
    let regions = regions_for(instance)?;
    timings.insert("bounds".to_string(), elapsed_ms(start));

    let start = Instant::now();
    let zeros = find_all_zeros(&p, cfg)?;
    timings.insert("solve".to_string(), elapsed_ms(start));

    let containment: Vec<Vec<bool>> = zeros
        .iter()
        .map(|r| regions.iter().map(|b| b.region.contains(r.z, tol)).collect())
        .collect();

    let start = Instant::now();
    let consistency = check_signed_count(&p, &zeros, cfg)?;
    let n = p.n() as i64;
    let disk = harmonic_disk(&p)?.region.outer_radius();
    let far = winding_number(&p, 2.0 * disk, cfg)?;
    timings.insert("winding".to_string(), elapsed_ms(start));

    let signed = consistency.signed_count();
    let count = zeros.len() as i64;
    let mut checks = vec![
        Check::new(
            "signed_count_vs_winding",
            Some(consistency.radius),
            consistency.winding.winding,
            signed,
            signed,
        ),
        Check::new("winding_at_twice_disk_radius", Some(2.0 * disk), far.winding, n, n),
        Check::new("zero_capacity", None, count, 0, n * n),
    ];
    if let Instance::Trinomial(t) = instance {
        let k = t.k() as i64;
        if trinomial_case(t) == Some(TrinomialCase::A) {
            checks.push(Check::new("distinct_zero_count", None, count, n, n));
        } else {
            checks.push(Check::new("zero_count_envelope", None, count, n, n + 2 * k));
        }
    }

    let verdict = if containment.iter().flatten().all(|&b| b) && checks.iter().all(|c| c.passed) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        instance: instance.clone(),
        regions,
        zeros,
        containment,
        checks,
        verdict,
        timings,
    })
}

/// Winding number of an instance on a circle.
pub fn wind(instance: &Instance, radius: f64, cfg: &SolverConfig) -> Result<crate::WindingResult> {
    let p = match instance {
        Instance::Harmonic(p) => p.clone(),
        other => other.harmonic()?,
    };
    winding_number(&p, radius, cfg)
}

/// One row of a parameter sweep over real `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub c: f64,
    pub zero_count: Option<usize>,
    pub signed_count: Option<i64>,
    pub winding: Option<i64>,
    pub annulus_inner: Option<f64>,
    pub annulus_outer: Option<f64>,
    pub disk_radius: Option<f64>,
    pub all_contained: Option<bool>,
    /// `ok`, a violation name, or the name of the error that stopped the row.
    pub status: String,
}

/// CSV header of [`SweepRow`].
pub const SWEEP_HEADER: &str =
    "c,zero_count,signed_count,winding,annulus_inner,annulus_outer,disk_radius,all_contained,status";

/// Evaluates a single sweep row; never fails, errors land in `status`.
pub fn sweep_row(n: u32, k: u32, c: f64, cfg: &SolverConfig) -> SweepRow {
    let mut row = SweepRow {
        c,
        zero_count: None,
        signed_count: None,
        winding: None,
        annulus_inner: None,
        annulus_outer: None,
        disk_radius: None,
        all_contained: None,
        status: String::new(),
    };
    let result = (|| -> Result<()> {
        let t = HarmonicTrinomial::real(n, k, c)?;
        let region = trinomial_inclusion_region(&t)?;
        if let Some((inner, outer)) = region.region.annulus_member() {
            row.annulus_inner = Some(inner);
            row.annulus_outer = Some(outer);
        }
        row.disk_radius = region.get("disk_radius");
        let p = t.to_harmonic();
        let zeros = find_all_zeros(&p, cfg)?;
        row.zero_count = Some(zeros.len());
        row.all_contained = Some(
            zeros
                .iter()
                .all(|r| region.region.contains(r.z, CONTAINMENT_TOL)),
        );
        let consistency = check_signed_count(&p, &zeros, cfg)?;
        row.signed_count = Some(consistency.signed_count());
        row.winding = Some(consistency.winding.winding);
        Ok(())
    })();
    row.status = match result {
        Err(e) => e.name().to_string(),
        Ok(()) => {
            let count = row.zero_count.unwrap_or(0) as u32;
            if row.all_contained != Some(true) {
                "containment_violation".into()
            } else if count < n || count > n + 2 * k {
                "count_out_of_envelope".into()
            } else if row.signed_count != row.winding {
                "winding_mismatch".into()
            } else if row.signed_count != Some(n as i64) {
                "signed_count_not_n".into()
            } else {
                "ok".into()
            }
        }
    };
    row
}

/// Sweeps `steps` evenly spaced real values of `c` over `[c_start, c_end]`.
pub fn sweep(
    n: u32,
    k: u32,
    c_start: f64,
    c_end: f64,
    steps: usize,
    cfg: &SolverConfig,
) -> Result<Vec<SweepRow>> {
    crate::poly::check_trinomial_shape(n, k)?;
    cfg.validate()?;
    if !(c_start > 0.0 && c_end > c_start && c_end.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "need 0 < c_start < c_end, got [{c_start}, {c_end}]"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidConfig("steps must be at least 2".into()));
    }
    let width = c_end - c_start;
    let cs: Vec<f64> = (0..steps)
        .map(|i| c_start + width * i as f64 / (steps - 1) as f64)
        .collect();
    Ok(cs.into_par_iter().map(|c| sweep_row(n, k, c, cfg)).collect())
}

/// Serializes sweep rows as CSV with [`SWEEP_HEADER`].
pub fn sweep_csv(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::InvalidConfig(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidConfig(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
