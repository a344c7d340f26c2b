mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use doubleseq_core::campaign::{
    run_theorem31_campaign, run_theorem32_campaign, run_theorem33_falsification,
    run_theorem34_campaign, run_theorem35_campaign, CampaignParams, CampaignReport, TheoremId,
};
use doubleseq_core::convergence::{check_cauchy, check_pringsheim, estimate_pringsheim_limit};
use doubleseq_core::functions::{
    apply, family_builtin, function_builtin, test_uniform_continuity, ContinuityStatus,
};
use doubleseq_core::oscillation::{check_slowly_oscillating, find_witness, OscillationParams};
use doubleseq_core::sequence::builtin;
use doubleseq_core::subsequence::{build_double_subsequence, spiral_position, SubsequenceSelector};
use doubleseq_core::{
    DoubleSequence, Error, FactorableGridSequence, Function2, ScalarDoubleSequence,
};

use render::{Emit, Format};

const USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "doubleseq",
    version,
    about = "Window checks for double sequences and preservation campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Gallery sequence or grid name; comma-separated lists for campaigns
    #[arg(long, global = true)]
    seq: Option<String>,
    /// Gallery function name; comma-separated lists for campaigns
    #[arg(long = "fn", global = true)]
    func: Option<String>,
    #[arg(long, global = true)]
    eps: Option<f64>,
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    delta: Option<f64>,
    /// Threshold N
    #[arg(long, global = true)]
    n: Option<u64>,
    #[arg(long, global = true)]
    horizon: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; JSON unless stated otherwise (`spiral` prints plain text)
    #[arg(long, global = true, value_enum)]
    out: Option<OutFormat>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slow oscillation: a full check when --alpha, --delta and --n are given, else a witness search
    CheckSo,
    CheckCauchy,
    CheckPringsheim {
        #[arg(long, allow_hyphen_values = true)]
        limit: f64,
    },
    /// Estimate a Pringsheim limit with tolerance --eps
    Limit,
    /// Grid position of the j-th subsequence term
    Spiral {
        #[arg(long)]
        j: u64,
    },
    /// Double subsequence on the spiral; index lists default to the diagonal
    Subseq {
        #[arg(long = "n-seq", value_delimiter = ',')]
        n_seq: Option<Vec<u64>>,
        #[arg(long = "k-seq", value_delimiter = ',')]
        k_seq: Option<Vec<u64>>,
        #[arg(long)]
        count: u64,
    },
    /// Image of a grid under a function, as an H×H window
    Apply,
    /// Sampling-based uniform continuity falsifier
    UcTest {
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
    Campaign {
        theorem: String,
        /// Function family for T3.4 / T3.5
        #[arg(long)]
        family: Option<String>,
        /// Pair and sample budget
        #[arg(long)]
        budget: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. }
            | Error::LimitOutsideDomain { .. }
            | Error::UnboundedDomain(_)
            | Error::FamilyDomain { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(Emit, i32), Failure>;

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn sequence(c: &Common) -> Result<DoubleSequence, Failure> {
    Ok(builtin(&need(c.seq.clone(), "seq")?)?)
}

fn scalar(c: &Common) -> Result<ScalarDoubleSequence, Failure> {
    match sequence(c)? {
        DoubleSequence::Scalar(s) => Ok(s),
        DoubleSequence::Grid(g) => Err(Failure::Usage(format!(
            "`{}` is a grid; this check needs a scalar sequence",
            g.label()
        ))),
    }
}

fn grid_named(name: &str) -> Result<FactorableGridSequence, Failure> {
    match builtin(name)? {
        DoubleSequence::Grid(g) => Ok(g),
        DoubleSequence::Scalar(s) => Err(Failure::Usage(format!(
            "`{}` is not a grid sequence",
            s.label()
        ))),
    }
}

fn list(spec: &Option<String>, default: &str) -> Vec<String> {
    // commas inside parentheses belong to arguments, e.g. const_grid(0.5,0.25)
    let spec = spec.as_deref().unwrap_or(default);
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0, String::new());
    for ch in spec.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    out.retain(|s| !s.is_empty());
    out
}

fn functions(c: &Common, default: &str) -> Result<Vec<Function2>, Failure> {
    list(&c.func, default)
        .iter()
        .map(|n| Ok(function_builtin(n)?))
        .collect()
}

fn grids(c: &Common, default: &str) -> Result<Vec<FactorableGridSequence>, Failure> {
    list(&c.seq, default)
        .iter()
        .map(|n| grid_named(n))
        .collect()
}

/// P-limit of a gallery grid, used as the T3.2 hypothesis.
fn grid_limit(grid: &FactorableGridSequence) -> Result<(f64, f64), Failure> {
    let label = grid.label();
    match label {
        "recip_grid" | "log_grid" => Ok((0.0, 0.0)),
        "shifted_grid" => Ok((1.0, 2.0)),
        _ if label.starts_with("const_grid") => Ok((grid.row(1), grid.col(1))),
        _ => Err(Failure::Usage(format!("no known limit for grid `{label}`"))),
    }
}

fn campaign(
    theorem: &str,
    family: Option<&str>,
    budget: Option<usize>,
    c: &Common,
) -> Result<CampaignReport, Failure> {
    let theorem: TheoremId = theorem.parse()?;
    let mut p = CampaignParams {
        seed: c.seed,
        ..CampaignParams::default()
    };
    if let Some(b) = budget {
        p.pair_budget = b;
        p.sample_budget = b;
    }
    p.epsilon = c.eps.unwrap_or(match theorem {
        TheoremId::T31 | TheoremId::T32 => 0.05,
        TheoremId::T33 => 1.0,
        TheoremId::T34 | TheoremId::T35 => 0.3,
    });
    p.horizon = c.horizon.unwrap_or(p.horizon);
    p.threshold = c.n.unwrap_or(p.threshold);
    Ok(match theorem {
        TheoremId::T31 => run_theorem31_campaign(
            &functions(c, "sum10")?,
            &grids(c, "recip_grid,log_grid")?,
            &p,
        )?,
        TheoremId::T32 => {
            let gs = grids(c, "recip_grid")?;
            let with_limits = gs
                .into_iter()
                .map(|g| grid_limit(&g).map(|l| (g, l)))
                .collect::<Result<Vec<_>, _>>()?;
            run_theorem32_campaign(&functions(c, "product")?, &with_limits, &p)?
        }
        TheoremId::T33 => {
            let fs = functions(c, "one_over_xy")?;
            let [f] = fs.as_slice() else {
                return Err(Failure::Usage("T3.3 takes exactly one --fn".into()));
            };
            run_theorem33_falsification(f, &p)?
        }
        TheoremId::T34 | TheoremId::T35 => {
            let default = if theorem == TheoremId::T34 {
                "shifted_sum"
            } else {
                "shifted_sum2"
            };
            let (fam, limit) = family_builtin(family.unwrap_or(default))?;
            let gs = grids(c, "recip_grid")?;
            if theorem == TheoremId::T34 {
                run_theorem34_campaign(&fam, &limit, &gs, &p)?
            } else {
                run_theorem35_campaign(&fam, &limit, &gs, &p)?
            }
        }
    })
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    match &cli.command {
        Command::CheckSo => {
            let seq = sequence(c)?;
            let eps = need(c.eps, "eps")?;
            let h = need(c.horizon, "horizon")?;
            match (c.alpha, c.delta, c.n) {
                (Some(a), Some(d), Some(n)) => {
                    let cert =
                        check_slowly_oscillating(&seq, OscillationParams::new(eps, a, d, n, h)?)?;
                    Ok((Emit::certificate(&cert), cert.status.exit_code()))
                }
                (None, None, None) => {
                    let search = find_witness(&seq, eps, h)?;
                    Ok((Emit::witness(&search), search.status().exit_code()))
                }
                _ => Err(Failure::Usage(
                    "give all of --alpha, --delta, --n, or none".into(),
                )),
            }
        }
        Command::CheckCauchy => {
            let r = check_cauchy(
                &scalar(c)?,
                need(c.eps, "eps")?,
                need(c.n, "n")?,
                need(c.horizon, "horizon")?,
            )?;
            Ok((Emit::report(&r), r.status.exit_code()))
        }
        Command::CheckPringsheim { limit } => {
            let r = check_pringsheim(
                &scalar(c)?,
                *limit,
                need(c.eps, "eps")?,
                need(c.n, "n")?,
                need(c.horizon, "horizon")?,
            )?;
            Ok((Emit::report(&r), r.status.exit_code()))
        }
        Command::Limit => {
            let tol = need(c.eps, "eps")?;
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Usage("--eps must be positive".into()));
            }
            let r = estimate_pringsheim_limit(&scalar(c)?, tol, need(c.horizon, "horizon")?);
            Ok((Emit::report(&r), r.status.exit_code()))
        }
        Command::Spiral { j } => {
            if *j == 0 {
                return Err(Failure::Usage("--j must be at least 1".into()));
            }
            let (row, col) = spiral_position(*j);
            Ok((Emit::spiral(*j, row, col), 0))
        }
        Command::Subseq {
            n_seq,
            k_seq,
            count,
        } => {
            let selector = match (n_seq, k_seq) {
                (None, None) => SubsequenceSelector::diagonal(),
                (Some(n), Some(k)) => SubsequenceSelector::from_lists(n.clone(), k.clone()),
                _ => {
                    return Err(Failure::Usage(
                        "give both --n-seq and --k-seq, or neither".into(),
                    ))
                }
            };
            let m = build_double_subsequence(&scalar(c)?, &selector, *count)?;
            Ok((Emit::matrix(&m), 0))
        }
        Command::Apply => {
            let fs = functions(c, "")?;
            let [f] = fs.as_slice() else {
                return Err(Failure::Usage("apply takes exactly one --fn".into()));
            };
            let grid = grid_named(&need(c.seq.clone(), "seq")?)?;
            let h = need(c.horizon, "horizon")?;
            let image = apply(f, &grid, h)?;
            Ok((Emit::window(&image, h), 0))
        }
        Command::UcTest { budget } => {
            let fs = functions(c, "")?;
            let [f] = fs.as_slice() else {
                return Err(Failure::Usage("uc-test takes exactly one --fn".into()));
            };
            let v = test_uniform_continuity(f, need(c.eps, "eps")?, *budget, c.seed)?;
            let code = i32::from(v.status == ContinuityStatus::ViolationFound);
            Ok((Emit::continuity(&v), code))
        }
        Command::Campaign {
            theorem,
            family,
            budget,
        } => {
            let r = campaign(theorem, family.as_deref(), *budget, c)?;
            let code = r.status.exit_code();
            Ok((Emit::campaign(&r), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((emit, code)) => {
            let format = match cli.common.out {
                None => Format::Default,
                Some(OutFormat::Json) => Format::Json,
                Some(OutFormat::Csv) => Format::Csv,
            };
            if let Err(e) = emit.write(format, cli.common.output.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code as u8)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_keep_call_arguments_together() {
        assert_eq!(
            list(&Some("recip_grid, const_grid(0.5,0.25)".into()), ""),
            vec!["recip_grid", "const_grid(0.5,0.25)"]
        );
        assert_eq!(list(&None, "a,b"), vec!["a", "b"]);
    }

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
