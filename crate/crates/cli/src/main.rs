//! `lattika`: cubature rules, interpolation, the hexagonal FFT and tiling checks from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lattika::cli_io::{read_rule_file, read_samples, read_spectrum, render_rule, write_samples, write_spectrum, RuleFileV1};
use lattika::cubature_rules::{build_rule, verify_exactness, RuleTag};
use lattika::hexfft::{forward, inverse};
use lattika::index_sets::homo_over;
use lattika::interpolation::{
    lebesgue_constant, Flavor, GenericInterpolator, LebesgueOperator, StarredHexInterpolator, TriangleFlavor,
    TriangleInterpolator, DEFAULT_DENSITY,
};
use lattika::lattice_core::{format_rational, verify_tiling, CaseTag, LatticeCase};
use lattika::num::complex::Complex64;
use lattika::{Error, Result};

#[derive(Parser)]
#[command(name = "lattika", version, about = "Discrete Fourier analysis on planar lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a cubature rule and write it as JSON.
    Rule {
        /// Lattice pair; must match the tag when given.
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        tag: String,
        #[arg(long)]
        n: u32,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a rule file against its claimed exactness space.
    Verify {
        #[arg(long)]
        rule: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// List interpolation nodes, evaluate an interpolant, or estimate a Lebesgue constant.
    Interp {
        /// generic, starred-hex, triangle-sine or triangle-cosine.
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        n: u32,
        /// Lattice pair for the generic operator.
        #[arg(long)]
        case: Option<String>,
        /// One `re,im` row per node, in the order printed without this flag.
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Evaluation points: `x1,x2` rows for generic, `t1,t2,t3` rows otherwise.
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        lebesgue: bool,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: u32,
    },
    /// Hexagonal DFT of `j1,j2,re,im` samples, or the inverse of a `k1,k2,k3,re,im` spectrum.
    Fft {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the nodes of a rule file as SVG.
    Plot {
        #[arg(long)]
        rule: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, default_value_t = 600)]
        size: u32,
    },
    /// Check that the fundamental domains tile the plane.
    TilingCheck {
        /// A single lattice pair; all eight when omitted.
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Why a command did not succeed.
enum Failure {
    Error(Error),
    /// A check ran and did not pass.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("LATTIKA_THREADS") else { return Ok(()) };
    let threads: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::Parse(format!("LATTIKA_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| Error::Io(e.to_string()))
}

fn run(command: Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Rule { case, tag, n, out } => cmd_rule(case.as_deref(), &tag, n, out.as_deref())?,
        Command::Verify { rule, tol } => return cmd_verify(&rule, tol),
        Command::Interp { flavor, n, case, samples, points, lebesgue, density } => {
            cmd_interp(&flavor, n, case.as_deref(), samples.as_deref(), points.as_deref(), lebesgue, density)?
        }
        Command::Fft { n, input, inverse, out } => cmd_fft(n, &input, inverse, out.as_deref())?,
        Command::Plot { rule, svg, size } => cmd_plot(&rule, &svg, size)?,
        Command::TilingCheck { case, n, samples, seed } => return cmd_tiling(case.as_deref(), n, samples, seed),
    }
    Ok(())
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_rule(case: Option<&str>, tag: &str, n: u32, out: Option<&Path>) -> Result<()> {
    let tag: RuleTag = tag.parse()?;
    if let Some(c) = case {
        let c: CaseTag = c.parse()?;
        if c != tag.case() {
            return Err(Error::Parse(format!("rule {tag} belongs to case {}, not {c}", tag.case())));
        }
    }
    let rule = build_rule(tag, n)?;
    emit(&RuleFileV1::from_rule(&rule).to_json(), out)?;
    if let Some(p) = out {
        println!(
            "tag={} n={} nodes={} normalization={} out={}",
            rule.id,
            rule.n,
            rule.len(),
            format_rational(&rule.normalization),
            p.display()
        );
    }
    Ok(())
}

fn cmd_verify(path: &Path, tol: f64) -> std::result::Result<(), Failure> {
    let rule = read_rule_file(path)?;
    let report = verify_exactness(&rule)?;
    let pass = report.passes(tol);
    println!(
        "tag={} n={} space={} functions={} max_error={:e} worst={} pass={pass}",
        rule.id,
        rule.n,
        report.tested_space,
        report.functions,
        report.max_error,
        report.worst_function.as_deref().unwrap_or("-"),
    );
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn parse_rows(path: &Path, width: usize) -> Result<Vec<Vec<f64>>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with(|c: char| c.is_ascii_alphabetic()) {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("{}:{}: not a number", path.display(), i + 1)))?;
        if row.len() != width {
            return Err(Error::Parse(format!("{}:{}: expected {width} fields", path.display(), i + 1)));
        }
        out.push(row);
    }
    Ok(out)
}

fn read_values(path: &Path) -> Result<Vec<Complex64>> {
    Ok(parse_rows(path, 2)?.into_iter().map(|r| Complex64::new(r[0], r[1])).collect())
}

fn fmt_row(coords: &[f64]) -> String {
    coords.iter().map(|v| format!("{v:.16e}")).collect::<Vec<_>>().join(",")
}

fn cmd_interp(
    flavor: &str,
    n: u32,
    case: Option<&str>,
    samples: Option<&Path>,
    points: Option<&Path>,
    lebesgue: bool,
    density: u32,
) -> Result<()> {
    let flavor = Flavor::parse(flavor)?;
    if lebesgue {
        let op = match flavor {
            Flavor::StarredHex => LebesgueOperator::StarredHex,
            Flavor::TriangleSine => LebesgueOperator::TriangleSine,
            Flavor::TriangleCosine => LebesgueOperator::TriangleCosine,
            Flavor::Generic => return Err(Error::UnknownTag("lebesgue estimates need a hexagonal flavor".into())),
        };
        println!("flavor={} n={n} density={density} lebesgue={:.16e}", flavor.name(), lebesgue_constant(op, n, density)?);
        return Ok(());
    }
    match flavor {
        Flavor::Generic => {
            let tag: CaseTag = case.ok_or_else(|| Error::Parse("--case is required for the generic flavor".into()))?.parse()?;
            let ip = GenericInterpolator::new(&LatticeCase::new(tag, n.max(1)))?;
            let (Some(s), Some(p)) = (samples, points) else {
                println!("index,x1,x2");
                for (i, x) in ip.node_points().iter().enumerate() {
                    println!("{i},{}", fmt_row(x));
                }
                return Ok(());
            };
            let poly = ip.interpolate(&read_values(s)?)?.compile(&ip.inner.geo);
            println!("x1,x2,re,im");
            for r in parse_rows(p, 2)? {
                let v = poly.eval([r[0], r[1]]);
                println!("{},{}", fmt_row(&r), fmt_row(&[v.re, v.im]));
            }
        }
        _ => {
            let (nodes, eval): (Vec<[f64; 3]>, Box<dyn Fn(&[Complex64], [f64; 3]) -> Result<Complex64>>) = match flavor {
                Flavor::StarredHex => {
                    let ip = StarredHexInterpolator::new(n);
                    (ip.node_points(), Box::new(move |s, t| ip.eval(s, t)))
                }
                _ => {
                    let tf = if flavor == Flavor::TriangleSine { TriangleFlavor::Sine } else { TriangleFlavor::Cosine };
                    let ip = TriangleInterpolator::new(tf, n);
                    let pts = ip.nodes.iter().map(|j| homo_over(*j, n as i64)).collect();
                    let coeffs = match samples {
                        Some(s) => Some(ip.coefficients(&read_values(s)?)?),
                        None => None,
                    };
                    (pts, Box::new(move |_, t| Ok(ip.eval_coefficients(coeffs.as_deref().unwrap_or(&[]), t))))
                }
            };
            let (Some(s), Some(p)) = (samples, points) else {
                println!("index,t1,t2,t3");
                for (i, t) in nodes.iter().enumerate() {
                    println!("{i},{}", fmt_row(t));
                }
                return Ok(());
            };
            let values = read_values(s)?;
            if values.len() != nodes.len() {
                return Err(Error::SampleCountMismatch { expected: nodes.len(), got: values.len() });
            }
            println!("t1,t2,t3,re,im");
            for r in parse_rows(p, 3)? {
                let v = eval(&values, [r[0], r[1], r[2]])?;
                println!("{},{}", fmt_row(&r), fmt_row(&[v.re, v.im]));
            }
        }
    }
    Ok(())
}

fn cmd_fft(n: usize, input: &Path, inv: bool, out: Option<&Path>) -> Result<()> {
    if n == 0 {
        return Err(Error::Parse("--n must be positive".into()));
    }
    let text = std::fs::read_to_string(input)?;
    let result = if inv {
        write_samples(&inverse(&read_spectrum(&text, n)?))
    } else {
        write_spectrum(&forward(&read_samples(&text, n)?))
    };
    emit(&result, out)
}

fn cmd_plot(rule: &Path, svg: &Path, size: u32) -> Result<()> {
    if size == 0 {
        return Err(Error::Parse("--size must be positive".into()));
    }
    let rule = read_rule_file(rule)?;
    std::fs::write(svg, render_rule(&rule, size))?;
    println!("tag={} n={} nodes={} svg={}", rule.id, rule.n, rule.len(), svg.display());
    Ok(())
}

fn cmd_tiling(case: Option<&str>, n: u32, samples: usize, seed: u64) -> std::result::Result<(), Failure> {
    let cases = match case {
        Some(c) => vec![c.parse::<CaseTag>()?],
        None => CaseTag::ALL.to_vec(),
    };
    let mut ok = true;
    for tag in cases {
        let lc = LatticeCase::new(tag, n.max(1));
        let r = verify_tiling(&lc, samples, seed)?;
        let deviation = r.uncovered + r.overcovered;
        ok &= deviation == 0;
        println!(
            "case={tag} n={} samples={} uncovered={} overcovered={} deviation={deviation}",
            lc.n, r.samples, r.uncovered, r.overcovered
        );
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
