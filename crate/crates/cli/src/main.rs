mod compute;
mod output;
mod sweep;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use grundy_core::forcing::DEFAULT_PROPAGATION_BUDGET;
use grundy_core::verify::{run_suite, Budget, Suite, VerifyOptions};
use grundy_core::{Error, Invariant, SearchOptions};

use crate::compute::{ComputeOptions, ZfRoute};
use crate::output::Format;

/// Exact Grundy domination, zero forcing and related invariants.
#[derive(Parser)]
#[command(name = "grundy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for the random suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Random samples per suite (suite default when omitted).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Largest random graph order (suite default when omitted).
    #[arg(long, global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = BudgetArg::Full)]
    budget: BudgetArg,
    /// Worker threads for searches and sweep cells.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Lift the vertex-count guard on exponential searches.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BudgetArg {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a family expression or graph file.
    Compute {
        /// Family expression such as `cart(cyc:4,path:3)`, or a file path.
        input: String,
        /// gr, grt, grz, grl, grz-k, zf, kf, ptime, alpha, beta, gamma-k, rho, rho-gr
        invariant: String,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ZfRoute::Auto)]
        zf_route: ZfRoute,
        /// Read the input file as a hypergraph.
        #[arg(long)]
        hypergraph: bool,
    },
    /// Run a verification suite.
    Verify {
        /// duality, products, sierpinski, lattice, factor2, alpha-beta, reduction, ptime, kz
        suite: String,
    },
    /// Tabulate an invariant over a parameterised family.
    Sweep {
        /// Family expression with variables, such as `cart(cyc:s,path:t)`.
        template: String,
        invariant: String,
        /// Variable range, e.g. `s=3..5` (inclusive); repeat for each variable.
        #[arg(long = "param", required = true)]
        params: Vec<String>,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ZfRoute::Auto)]
        zf_route: ZfRoute,
    },
}

enum Status {
    Pass,
    Fail,
}

impl Common {
    fn search(&self, threads: usize) -> SearchOptions {
        SearchOptions {
            threads,
            allow_large: self.allow_large,
            ..SearchOptions::default()
        }
    }

    fn ptime_budget(&self) -> usize {
        match self.budget {
            BudgetArg::Small => 10_000,
            BudgetArg::Full => DEFAULT_PROPAGATION_BUDGET,
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let c = &cli.common;
    let mut out = io::stdout().lock();
    let status = match cli.command {
        Command::Compute {
            input,
            invariant,
            k,
            zf_route,
            hypergraph,
        } => {
            let inv: Invariant = invariant.parse()?;
            let graph = compute::load(&input, hypergraph)?;
            let opts = ComputeOptions {
                k,
                zf_route,
                search: c.search(c.threads),
                ptime_budget: c.ptime_budget(),
            };
            let report = compute::compute(&input, &graph, inv, &opts)?;
            output::run_report(&mut out, &report, c.format)?;
            Status::Pass
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                seed: c.seed,
                samples: c.samples,
                n_max: c.n_max,
                budget: match c.budget {
                    BudgetArg::Small => Budget::Small,
                    BudgetArg::Full => Budget::Full,
                },
                search: c.search(c.threads),
                ptime_budget: c.ptime_budget(),
            };
            let report = run_suite(suite, &opts)?;
            output::suite_report(&mut out, &report, c.format)?;
            if report.all_passed() {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        Command::Sweep {
            template,
            invariant,
            params,
            k,
            zf_route,
        } => {
            let inv: Invariant = invariant.parse()?;
            let params = params
                .iter()
                .map(|p| sweep::parse_param(p))
                .collect::<Result<Vec<_>, _>>()?;
            let opts = ComputeOptions {
                k,
                zf_route,
                search: c.search(1),
                ptime_budget: c.ptime_budget(),
            };
            let report = sweep::sweep(&template, inv, &params, &opts, c.threads)?;
            for msg in &report.skipped {
                eprintln!("warning: skipped {msg}");
            }
            output::sweep_report(&mut out, &report, c.format)?;
            if report.mismatches() == 0 {
                Status::Pass
            } else {
                Status::Fail
            }
        }
    };
    out.flush().context("writing output")?;
    Ok(status)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            // a witness that fails replay is a verification failure, not bad input
            match e.downcast_ref::<Error>() {
                Some(Error::Contract(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
