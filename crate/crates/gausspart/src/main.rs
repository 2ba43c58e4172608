//! Command-line front end: compute coefficient tables, run verification
//! sweeps, print Phi polynomials, and compare solver routes, with text,
//! JSON, or CSV output.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use std::process::ExitCode;
use std::time::Instant;

use gausspart::gaussian::{
    check_convolution_residual, corollary1_check, gaussian_by_division, gaussian_by_oracle,
    gaussian_by_recurrence, limit_rows_all_match, residuals_all_zero, theorem1_violations,
    theorem2_piecewise, GaussianTable,
};
use gausspart::partition::{consecutive_table, count_unconstrained, DenomTuple};
use gausspart::quasi::builtin_w;
use gausspart::report::{Discrepancy, Format, Row, RunReport};
use gausspart::toeplitz::{
    build_phi, eval_phi, pnm_by_toeplitz, solve_closed_form, solve_forward, ConvolutionSystem,
};

#[derive(Parser)]
#[command(name = "gausspart", version, about = "Exact Gaussian polynomial coefficients and restricted partition counts, cross-validated")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Suppress the timings section (makes output deterministic)
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Division,
    Recurrence,
    Toeplitz,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theorem1,
    Theorem2,
    Residual,
    Corollary1,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coefficient table of G(n,m;t)
    Gauss {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Division)]
        method: MethodArg,
    },
    /// Run a verification suite for one (n, m) pair
    Verify {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Print restricted partition counts W(s) for s = 0..smax
    #[command(alias = "wq")]
    Wpart {
        /// Consecutive parts 1..m
        #[arg(short = 'm', conflicts_with = "parts", required_unless_present = "parts", value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        /// Explicit comma-separated parts, e.g. -d 1,2,5
        #[arg(short = 'd', long = "parts", value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
        parts: Option<Vec<u32>>,
        #[arg(long, default_value_t = 10)]
        smax: usize,
    },
    /// Print the Phi polynomials up to r_max, optionally evaluated
    Phi {
        r_max: usize,
        /// Evaluate each Phi_r at U(k) = -W_N(k)
        #[arg(long)]
        at: Option<u32>,
    },
    /// Solve the (n, m) Toeplitz system by both routes and compare
    Solve {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        /// Highest index to solve for (default nm + 10)
        #[arg(long)]
        gmax: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Gauss { n, m, method } => cmd_gauss(n, m, method),
        Command::Verify { n, m, suite } => cmd_verify(n, m, suite),
        Command::Wpart { m, parts, smax } => cmd_wpart(m, parts, smax),
        Command::Phi { r_max, at } => cmd_phi(r_max, at),
        Command::Solve { n, m, gmax } => cmd_solve(n, m, gmax),
    };
    print!("{}", report.render(cli.format.into(), !cli.no_timing));
    for f in &report.failures {
        eprintln!(
            "discrepancy at {}: {} gives {}, {} gives {}",
            f.index, f.method_a, f.value_a, f.method_b, f.value_b
        );
    }
    ExitCode::from(report.exit_code() as u8)
}

fn cross_check(report: &mut RunReport, a: &GaussianTable, b: &GaussianTable) {
    let top = a.nm().max(b.nm());
    for s in 0..=top {
        let (va, vb) = (a.value(s), b.value(s));
        if va != vb {
            report.failures.push(Discrepancy {
                method_a: a.method.to_string(),
                method_b: b.method.to_string(),
                index: format!("s={s}"),
                value_a: va.to_string(),
                value_b: vb.to_string(),
            });
        }
    }
}

fn cmd_gauss(n: u32, m: u32, method: MethodArg) -> RunReport {
    let mut report = RunReport::new("gauss");
    report.param("n", n);
    report.param("m", m);
    let nm = (n * m) as usize;
    let timed = |report: &mut RunReport, label: &str, f: &dyn Fn() -> GaussianTable| {
        let start = Instant::now();
        let t = f();
        report.timings.push((label.into(), start.elapsed()));
        t
    };
    let tables: Vec<GaussianTable> = match method {
        MethodArg::Division => vec![timed(&mut report, "division", &|| {
            gaussian_by_division(n, m).expect("exact division")
        })],
        MethodArg::Recurrence => vec![timed(&mut report, "recurrence", &|| {
            gaussian_by_recurrence(n, m)
        })],
        MethodArg::Toeplitz => vec![timed(&mut report, "toeplitz", &|| {
            pnm_by_toeplitz(n, m, nm)
        })],
        MethodArg::Oracle => vec![timed(&mut report, "oracle", &|| gaussian_by_oracle(n, m))],
        MethodArg::All => vec![
            timed(&mut report, "division", &|| {
                gaussian_by_division(n, m).expect("exact division")
            }),
            timed(&mut report, "recurrence", &|| gaussian_by_recurrence(n, m)),
            timed(&mut report, "toeplitz", &|| pnm_by_toeplitz(n, m, nm)),
            timed(&mut report, "oracle", &|| gaussian_by_oracle(n, m)),
        ],
    };
    report.param("method", tables.iter().map(|t| t.method.to_string()).collect::<Vec<_>>().join("+"));
    for i in 0..tables.len() {
        for j in i + 1..tables.len() {
            cross_check(&mut report, &tables[i], &tables[j]);
        }
    }
    let primary = &tables[0];
    for s in 0..=nm {
        report.results.push(Row::value(format!("P({s})"), primary.value(s)));
    }
    report.results.push(Row::value("sum", primary.coeffs.eval_at_one()));
    if tables.len() > 1 {
        report
            .results
            .push(Row::status("cross-check", report.failures.is_empty()));
    }
    report
}

fn cmd_verify(n: u32, m: u32, suite: SuiteArg) -> RunReport {
    let mut report = RunReport::new("verify");
    report.param("n", n);
    report.param("m", m);
    let table = gaussian_by_division(n, m).expect("exact division");
    let push_check = |report: &mut RunReport, label: &str, ok: bool, detail: String| {
        report.results.push(Row::status(label, ok));
        if !ok {
            report.failures.push(Discrepancy {
                method_a: label.into(),
                method_b: "expected".into(),
                index: detail,
                value_a: "violated".into(),
                value_b: "holds".into(),
            });
        }
    };
    let run_theorem1 = |report: &mut RunReport| {
        let bad = theorem1_violations(&table);
        push_check(report, "theorem1-structure", bad.is_empty(), bad.join("+"));
        let swapped = gaussian_by_division(m, n).expect("exact division");
        push_check(
            report,
            "theorem1-nm-symmetry",
            swapped.coeffs == table.coeffs,
            "n<->m".into(),
        );
    };
    let run_theorem2 = |report: &mut RunReport| {
        let mut ok = true;
        let mut first_bad = String::new();
        for g in 0..=(n + m) as usize {
            let piecewise = theorem2_piecewise(n, m, g).expect("in range");
            if piecewise != table.value(g) {
                ok = false;
                if first_bad.is_empty() {
                    first_bad = format!("g={g}");
                }
            }
        }
        push_check(report, "theorem2-piecewise", ok, first_bad);
    };
    let run_residual = |report: &mut RunReport| {
        let rows = check_convolution_residual(&table, 2 * table.nm());
        let bad: Vec<String> = rows
            .iter()
            .filter(|r| !r.delta.is_zero())
            .map(|r| format!("g={}", r.g))
            .collect();
        push_check(report, "residual-delta-zero", residuals_all_zero(&rows), bad.join("+"));
    };
    let run_corollary1 = |report: &mut RunReport| {
        let mut ok = true;
        let mut first_bad = String::new();
        for s in 0..=10usize {
            let rows = corollary1_check(n, s, m);
            if !limit_rows_all_match(&rows) {
                ok = false;
                if first_bad.is_empty() {
                    first_bad = format!("s={s}");
                }
            }
        }
        push_check(report, "corollary1-limit", ok, first_bad);
    };
    match suite {
        SuiteArg::Theorem1 => {
            report.param("suite", "theorem1");
            run_theorem1(&mut report);
        }
        SuiteArg::Theorem2 => {
            report.param("suite", "theorem2");
            run_theorem2(&mut report);
        }
        SuiteArg::Residual => {
            report.param("suite", "residual");
            run_residual(&mut report);
        }
        SuiteArg::Corollary1 => {
            report.param("suite", "corollary1");
            run_corollary1(&mut report);
        }
        SuiteArg::All => {
            report.param("suite", "all");
            run_theorem1(&mut report);
            run_theorem2(&mut report);
            run_residual(&mut report);
            run_corollary1(&mut report);
        }
    }
    report
}

fn cmd_wpart(m: Option<u32>, parts: Option<Vec<u32>>, smax: usize) -> RunReport {
    let mut report = RunReport::new("wpart");
    report.param("smax", smax);
    match (m, parts) {
        (Some(m), None) => {
            report.param("m", m);
            let table = consecutive_table(smax, m);
            let quasi = builtin_w(m).ok();
            for (s, w) in table.iter().enumerate() {
                report.results.push(Row::value(format!("W({s})"), w));
            }
            if let Some(q) = quasi {
                for (s, w) in table.iter().enumerate() {
                    let qv = q.evaluate(s).expect("integral quasi value");
                    report.results.push(Row::value(format!("Q({s})"), &qv));
                    if qv != *w {
                        report.failures.push(Discrepancy {
                            method_a: "quasi-polynomial".into(),
                            method_b: "dp-oracle".into(),
                            index: format!("s={s}"),
                            value_a: qv.to_string(),
                            value_b: w.to_string(),
                        });
                    }
                }
                report
                    .results
                    .push(Row::status("quasi-vs-dp", report.failures.is_empty()));
            }
        }
        (None, Some(parts)) => {
            let d = DenomTuple::new(parts.clone());
            report.param(
                "parts",
                parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            );
            for s in 0..=smax {
                report
                    .results
                    .push(Row::value(format!("W({s})"), count_unconstrained(s, &d)));
            }
        }
        _ => unreachable!("clap enforces exactly one of -m / -d"),
    }
    report
}

fn cmd_phi(r_max: usize, at: Option<u32>) -> RunReport {
    let mut report = RunReport::new("phi");
    report.param("r_max", r_max);
    let w_at = at.map(|base| consecutive_table(r_max.max(1), base));
    if let Some(base) = at {
        report.param("at", base);
    }
    for r in 0..=r_max {
        let phi = build_phi(r);
        report
            .results
            .push(Row::value(format!("Phi_{r}"), format!("{phi}")));
        if let Some(w) = &w_at {
            let value = eval_phi(&phi, |k| -w[k].clone());
            report
                .results
                .push(Row::value(format!("Phi_{r}({})", at.unwrap()), value));
        }
    }
    report
}

fn cmd_solve(n: u32, m: u32, gmax: Option<usize>) -> RunReport {
    let mut report = RunReport::new("solve");
    let nm = (n * m) as usize;
    let g_max = gmax.unwrap_or(nm + 10);
    report.param("n", n);
    report.param("m", m);
    report.param("gmax", g_max);
    let wn = consecutive_table(g_max, n);
    let wm = consecutive_table(g_max, m);
    let wnm = consecutive_table(g_max, n + m);
    let t: Vec<BigInt> = (0..=g_max)
        .map(|g| (0..=g).map(|s| &wn[s] * &wm[g - s]).sum())
        .collect();
    let u: Vec<BigInt> = wnm.iter().map(|w| -w).collect();
    let sys = ConvolutionSystem::from_tables(t, u);

    let start = Instant::now();
    let forward = solve_forward(&sys, g_max);
    report.timings.push(("forward".into(), start.elapsed()));

    let start = Instant::now();
    let closed: Vec<BigInt> = (0..=g_max).map(|g| solve_closed_form(&sys, g)).collect();
    report.timings.push(("closed-form".into(), start.elapsed()));

    for g in 0..=g_max {
        report.results.push(Row::value(format!("P({g})"), &forward[g]));
        if forward[g] != closed[g] {
            report.failures.push(Discrepancy {
                method_a: "forward".into(),
                method_b: "closed-form".into(),
                index: format!("g={g}"),
                value_a: forward[g].to_string(),
                value_b: closed[g].to_string(),
            });
        }
    }
    report
        .results
        .push(Row::status("forward-vs-closed", report.failures.is_empty()));
    report
}
