use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use harmonic_zeros::report::{
    self, exit, parse_complex, BoundsOutput, Instance, SolveOutput, SweepRow, VerificationReport,
    CONTAINMENT_TOL,
};
use harmonic_zeros::{
    AnalyticPoly, BoundReport, Complex64, Error, HarmonicPoly, HarmonicTrinomial, Region,
    RootRecord, SolverConfig, WindingResult,
};
use serde::Serialize;

/// Zero-inclusion regions for harmonic polynomials and trinomials.
///
/// Coefficients are given highest power first; each is `re` or `re,im`.
#[derive(Parser)]
#[command(name = "hzeros", version)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every applicable inclusion region.
    Bounds(InstanceArgs),
    /// Find all zeros numerically.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check that every found zero lies in every region and winding numbers agree.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Outward boundary widening for containment.
        #[arg(long, default_value_t = CONTAINMENT_TOL)]
        tol: f64,
    },
    /// Sweep real c for the trinomial z^n + c conj(z)^k - 1 (CSV by default).
    Sweep {
        n: u32,
        k: u32,
        c_start: f64,
        c_end: f64,
        steps: usize,
        /// CSV output (the default for sweep).
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Winding number of f along the circle |z| = radius.
    Wind {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        radius: f64,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Harmonic trinomial: N K C, with C as `re` or `re,im`.
    #[arg(long, num_args = 3, value_names = ["N", "K", "C"], allow_negative_numbers = true)]
    trinomial: Option<Vec<String>>,
    /// Harmonic polynomial h + conj(g), given with --h and --g.
    #[arg(long, requires = "h")]
    harmonic: bool,
    /// Analytic part h, highest power first.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    h: Option<Vec<String>>,
    /// Co-analytic part g, highest power first (default 0).
    #[arg(long, num_args = 1.., allow_negative_numbers = true, requires = "h")]
    g: Option<Vec<String>>,
    /// Analytic polynomial, highest power first.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    analytic: Option<Vec<String>>,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long)]
    grid_density: Option<f64>,
    #[arg(long)]
    newton_tol: Option<f64>,
    #[arg(long)]
    max_newton_iters: Option<usize>,
    #[arg(long)]
    dedup_radius: Option<f64>,
    #[arg(long)]
    search_radius_factor: Option<f64>,
    #[arg(long)]
    singular_threshold: Option<f64>,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        let d = SolverConfig::default();
        SolverConfig {
            grid_density: self.grid_density.unwrap_or(d.grid_density),
            newton_tol: self.newton_tol.unwrap_or(d.newton_tol),
            max_newton_iters: self.max_newton_iters.unwrap_or(d.max_newton_iters),
            dedup_radius: self.dedup_radius.unwrap_or(d.dedup_radius),
            search_radius_factor: self.search_radius_factor.unwrap_or(d.search_radius_factor),
            singular_threshold: self.singular_threshold.unwrap_or(d.singular_threshold),
        }
    }
}

/// Failure before any result exists.
enum Failure {
    Parse(String),
    Instance(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Instance(e)
    }
}

fn coefficients(tokens: &[String]) -> Result<Vec<Complex64>, Failure> {
    tokens
        .iter()
        .map(|t| parse_complex(t).map_err(Failure::Parse))
        .collect()
}

impl InstanceArgs {
    fn instance(&self) -> Result<Instance, Failure> {
        self.parse(false)
    }

    /// `relaxed` admits any `(h, g)` pair, e.g. `conj(z)`, for winding numbers.
    fn parse(&self, relaxed: bool) -> Result<Instance, Failure> {
        let given = [self.trinomial.is_some(), self.h.is_some(), self.analytic.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(Failure::Parse(
                "give exactly one of --trinomial, --harmonic/--h, --analytic".into(),
            ));
        }
        if let Some(t) = &self.trinomial {
            let n = t[0]
                .parse::<u32>()
                .map_err(|e| Failure::Parse(format!("N: {e}")))?;
            let k = t[1]
                .parse::<u32>()
                .map_err(|e| Failure::Parse(format!("K: {e}")))?;
            let c = parse_complex(&t[2]).map_err(Failure::Parse)?;
            return Ok(Instance::Trinomial(HarmonicTrinomial::new(n, k, c)?));
        }
        if let Some(h) = &self.h {
            let h = AnalyticPoly::from_descending(&coefficients(h)?)?;
            let g = match &self.g {
                Some(g) => AnalyticPoly::from_descending(&coefficients(g)?)?,
                None => AnalyticPoly::zero(),
            };
            let p = if relaxed {
                HarmonicPoly::unrestricted(h, g)
            } else {
                HarmonicPoly::new(h, g)?
            };
            return Ok(Instance::Harmonic(p));
        }
        let a = self.analytic.as_ref().expect("one instance kind given");
        Ok(Instance::Analytic(AnalyticPoly::from_descending(&coefficients(a)?)?))
    }
}

fn describe_region(r: &Region) -> String {
    let bracket = |closed: bool, open: char, shut: char| if closed { shut } else { open };
    match r {
        Region::Disk { radius, closed } => {
            format!("{} disk |z| {} {radius}", if *closed { "closed" } else { "open" }, if *closed { "<=" } else { "<" })
        }
        Region::Annulus {
            inner,
            outer,
            inner_closed,
            outer_closed,
        } => format!(
            "annulus {}{inner}, {outer}{}",
            bracket(*inner_closed, '(', '['),
            bracket(*outer_closed, ')', ']')
        ),
        Region::Union(members) => members
            .iter()
            .map(describe_region)
            .collect::<Vec<_>>()
            .join(" ∪ "),
    }
}

fn describe_bound(b: &BoundReport) -> String {
    let mut line = format!("{:<20} {}", format!("{:?}", b.method), describe_region(&b.region));
    for (name, value) in &b.intermediate {
        line.push_str(&format!("  {name}={value}"));
    }
    if let Some(case) = b.case {
        line.push_str(&format!("  case={case:?}"));
    }
    for flag in &b.flags {
        line.push_str(&format!("  [{flag:?}]"));
    }
    line
}

fn describe_zero(r: &RootRecord) -> String {
    format!(
        "{:+.15} {:+.15}i  |z|={:.12}  residual={:.3e}  {:?}",
        r.z.re,
        r.z.im,
        r.z.norm(),
        r.residual,
        r.orientation
    )
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn print_bounds(out: &BoundsOutput) {
    for b in &out.regions {
        println!("{}", describe_bound(b));
    }
    if let Some(i) = out.cauchy_interval {
        println!("real zeros in [{}, {}]", i.lo, i.hi);
    }
    if let Some(d) = out.descartes {
        println!(
            "descartes: at most {} positive, {} negative real zeros",
            d.positive, d.negative
        );
    }
}

fn print_solve(out: &SolveOutput) {
    println!("{} zeros", out.zeros.len());
    for z in &out.zeros {
        println!("{}", describe_zero(z));
    }
}

fn print_verify(rep: &VerificationReport) {
    for b in &rep.regions {
        println!("{}", describe_bound(b));
    }
    println!("{} zeros", rep.zeros.len());
    for (z, row) in rep.zeros.iter().zip(&rep.containment) {
        let missing = row.iter().filter(|&&b| !b).count();
        let mark = if missing == 0 {
            "ok".to_string()
        } else {
            format!("OUTSIDE {missing} region(s)")
        };
        println!("{}  {mark}", describe_zero(z));
    }
    for c in &rep.checks {
        println!(
            "check {:<30} observed {} expected [{}, {}] {}",
            c.name,
            c.observed,
            c.expected_min,
            c.expected_max,
            if c.passed { "ok" } else { "FAIL" }
        );
    }
    println!("verdict: {:?}", rep.verdict);
}

fn print_wind(w: &WindingResult) {
    println!(
        "winding {}  (min |f| on contour {:e}, {} samples)",
        w.winding, w.min_modulus_on_contour, w.samples_used
    );
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Bounds(args) => {
            let out = report::bounds(&args.instance()?)?;
            if cli.json {
                print_json(&out);
            } else {
                print_bounds(&out);
            }
            Ok(exit::PASS)
        }
        Command::Solve { instance, solver } => {
            let out = report::solve(&instance.instance()?, &solver.config())?;
            if cli.json {
                print_json(&out);
            } else {
                print_solve(&out);
            }
            Ok(exit::PASS)
        }
        Command::Verify {
            instance,
            solver,
            tol,
        } => {
            let rep = report::verify(&instance.instance()?, &solver.config(), tol)?;
            if cli.json {
                print_json(&rep);
            } else {
                print_verify(&rep);
            }
            Ok(rep.exit_code())
        }
        Command::Sweep {
            n,
            k,
            c_start,
            c_end,
            steps,
            csv: _,
            solver,
        } => {
            let rows = report::sweep(n, k, c_start, c_end, steps, &solver.config())?;
            if cli.json {
                print_json(&rows);
            } else {
                print!("{}", report::sweep_csv(&rows)?);
            }
            let all_ok = rows.iter().all(|r: &SweepRow| r.status == "ok");
            Ok(if all_ok { exit::PASS } else { exit::VIOLATION })
        }
        Command::Wind {
            instance,
            radius,
            solver,
        } => {
            let w = report::wind(&instance.parse(true)?, radius, &solver.config())?;
            if cli.json {
                print_json(&w);
            } else {
                print_wind(&w);
            }
            Ok(exit::PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            exit::PARSE
        }
        Err(Failure::Instance(e)) => {
            eprintln!("{}: {e}", e.name());
            report::exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
