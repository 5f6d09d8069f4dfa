//! Command-line front end: parses operator text, runs one check or
//! classification and renders a [`Report`].

pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use galilei_core::algebra::{fmt_rational, parse_rational};
use galilei_core::galilei::boost_residue;
use galilei_core::oracle::random_rational;
use galilei_core::text::{format_vector, parse_vector};
use galilei_core::{
    boost_commutator_defect, check_boost_invariance_fixed_gauge, check_rotation_invariance, check_translation_invariance, classify_order2,
    classify_order_m, parse_operator, print_operator, synthesize, theta_of, Boost, CheckReport, GaussianRational, Lpdo, PhaseSpec, SamplePlan,
    Space, Theorem1Verdict, Theorem2Verdict, DEFAULT_SEED,
};

pub use report::{Format, Report, ReportError};

/// Exit status for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "galilei", version, about = "Exact Galilei-invariance checks for linear PDOs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Kv,
}

#[derive(Debug, Args)]
struct OperatorArgs {
    /// Operator text, e.g. "2i*Dt + Lap".
    #[arg(allow_hyphen_values = true)]
    operator: String,

    /// Spatial dimension; defaults to the highest index in the text.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariance under space-time translations.
    CheckTranslation(OperatorArgs),
    /// Invariance under O(n) acting on x.
    CheckRotation(OperatorArgs),
    /// Invariance under boosts with the quadratic gauge of parameter lambda.
    CheckBoost {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        lambda: BigRational,
    },
    /// Classify an order-2 operator.
    Classify2(OperatorArgs),
    /// Classify an order-m operator at a fixed lambda.
    Classifym {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        lambda: BigRational,
    },
    /// Build sum_j a_j (2i lambda Dt + Lap)^j.
    Synthesize {
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        lambda: BigRational,
        /// Comma-separated a_0, a_1, ...
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        n: usize,
    },
    /// The gauge phase theta_v(t, x).
    Theta {
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        lambda: BigRational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational, default_value = "0")]
        c: BigRational,
        /// Comma-separated boost components.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Compare the symbolic boost check with direct differentiation on random boosts.
    Oracle {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational, default_value = "1")]
        lambda: BigRational,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Runs one command. Returns the exit status and the rendered output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Kv => Format::Kv,
    };
    match execute(cli.command) {
        Ok(report) => (report.exit_code(), report.render(format)),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn parse(op: &OperatorArgs) -> galilei_core::Result<Lpdo> {
    parse_operator(&op.operator, op.n)
}

fn with_operator(report: &mut Report, l: &Lpdo) {
    report.set("operator", print_operator(l)).set("n", l.n()).set("m", l.order());
}

fn check_report(check: &CheckReport, l: &Lpdo) -> Report {
    let mut report = Report::new(&check.verdict.to_string());
    with_operator(&mut report, l);
    let key = if check.is_invariant() { "certificate" } else { "witness" };
    report.set(key, &check.evidence);
    report
}

fn execute(command: Command) -> Result<Report, Box<dyn std::error::Error>> {
    Ok(match command {
        Command::CheckTranslation(op) => {
            let l = parse(&op)?;
            check_report(&check_translation_invariance(&l), &l)
        }
        Command::CheckRotation(op) => {
            let l = parse(&op)?;
            let mut report = check_report(&check_rotation_invariance(&l)?, &l);
            report.set("seed", DEFAULT_SEED);
            report
        }
        Command::CheckBoost { op, lambda } => {
            let l = parse(&op)?;
            let mut report = check_report(&check_boost_invariance_fixed_gauge(&l, &lambda)?, &l);
            report.set("lambda", fmt_rational(&lambda)).set("seed", DEFAULT_SEED);
            report
        }
        Command::Classify2(op) => {
            let l = parse(&op)?;
            theorem1_report(&classify_order2(&l)?, &l)
        }
        Command::Classifym { op, lambda } => {
            let l = parse(&op)?;
            let mut report = match classify_order_m(&l, &lambda)? {
                Theorem2Verdict::Accepted { coeffs } => {
                    let mut r = Report::new("accept");
                    r.set("coeffs", join(&coeffs));
                    r
                }
                Theorem2Verdict::Rejected { reason } => {
                    let mut r = Report::new("reject");
                    r.set("stage", reason);
                    r
                }
            };
            report.set("lambda", fmt_rational(&lambda));
            with_operator(&mut report, &l);
            report.set("seed", DEFAULT_SEED);
            report
        }
        Command::Synthesize { lambda, coeffs, n } => {
            let coeffs = coeffs.split(',').map(str::parse).collect::<galilei_core::Result<Vec<GaussianRational>>>()?;
            let l = synthesize(n, &lambda, &coeffs)?;
            let mut report = Report::new("ok");
            report.set("lambda", fmt_rational(&lambda)).set("coeffs", join(&coeffs));
            with_operator(&mut report, &l);
            report
        }
        Command::Theta { lambda, c, v } => {
            let v = parse_vector(&v)?;
            if v.is_empty() {
                return Err(galilei_core::Error::DimensionUnknown.into());
            }
            let space = Space::new(v.len());
            let theta = theta_of(&space, &lambda, &c, &Boost::Concrete(v.clone()))?;
            let mut report = Report::new("ok");
            report
                .set("lambda", fmt_rational(&lambda))
                .set("c", fmt_rational(&c))
                .set("v", format_vector(&v))
                .set("n", v.len())
                .set("theta", &theta.spec)
                .set("phase", &theta.phase);
            report
        }
        Command::Oracle { op, lambda, seed, count } => {
            let l = parse(&op)?;
            oracle_report(&l, &lambda, seed, count)?
        }
    })
}

fn join(coeffs: &[GaussianRational]) -> String {
    coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn theorem1_report(verdict: &Theorem1Verdict, l: &Lpdo) -> Report {
    let mut report = match verdict {
        Theorem1Verdict::Accepted(acc) => {
            let mut r = Report::new("accept");
            r.set("alpha", &acc.alpha)
                .set("beta", &acc.beta)
                .set("lambda", fmt_rational(&acc.lambda))
                .set("theta", acc.theta.formula_free_constant());
            if let PhaseSpec::Quadratic { .. } = acc.theta {
                r.set("theta_c0", &acc.theta);
            }
            r.set("alpha_convention", "alpha is the coefficient of each Dx_a^2");
            r
        }
        Theorem1Verdict::Rejected { reason, lambda_candidate } => {
            let mut r = Report::new("reject");
            r.set("stage", reason);
            if let Some(lambda) = lambda_candidate {
                r.set("lambda", lambda);
            }
            r
        }
    };
    with_operator(&mut report, l);
    report.set("seed", DEFAULT_SEED);
    report
}

/// For each sampled boost `v`, the differentiation defect must vanish exactly
/// when the symbolic residue does.
fn oracle_report(l: &Lpdo, lambda: &BigRational, seed: u64, count: usize) -> galilei_core::Result<Report> {
    let plan = SamplePlan::new(seed, count, 8);
    let mut rng = plan.rng();
    let zero = BigRational::from_integer(0.into());
    let mut invariant_at = 0;
    let mut disagreement = None;
    for _ in 0..count {
        let v: Vec<BigRational> = (0..l.n()).map(|_| random_rational(&mut rng, plan.bound)).collect();
        let defect_zero = boost_commutator_defect(l, lambda, &v, &zero)?.is_zero();
        let residue_zero = boost_residue(l, lambda, &v)?.is_zero();
        if defect_zero {
            invariant_at += 1;
        }
        if defect_zero != residue_zero && disagreement.is_none() {
            disagreement = Some(v);
        }
    }
    let mut report = Report::new(if disagreement.is_some() { "disagree" } else { "agree" });
    report
        .set("lambda", fmt_rational(lambda))
        .set("samples", count)
        .set("invariant_samples", invariant_at);
    if let Some(v) = disagreement {
        report.set("witness", format!("v={}", format_vector(&v)));
    }
    with_operator(&mut report, l);
    report.set("seed", seed);
    Ok(report)
}
