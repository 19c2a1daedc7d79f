use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tower_cli::{run, Command, Format, JobError, JobSpec};

/// Exact Murphy, seminormal and skew-module computations for towers of diagram algebras.
#[derive(Parser)]
#[command(name = "tower", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Lift the default level caps.
    #[arg(long, global = true)]
    allow_large: bool,
    /// Report every phase with a duration of zero, for byte-comparable output.
    #[arg(long, global = true)]
    redact_timings: bool,
}

#[derive(Args)]
struct TowerArgs {
    /// hecke, symmetric, temperley-lieb (tl), brauer or partition.
    #[arg(long)]
    tower: String,
    /// Loop parameter of a diagram tower: `symbolic` or an integer.
    #[arg(long)]
    parameter: Option<String>,
}

#[derive(Subcommand)]
enum Sub {
    /// Check the tower axioms at every level up to `max-level`.
    CheckAxioms {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        max_level: usize,
    },
    /// Murphy basis paths and representatives.
    Murphy {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        cell: Option<String>,
    },
    /// Gram matrix of one cell module, rows and columns labelled by paths.
    Gram {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        cell: String,
        /// Specialize the parameter at this rational point.
        #[arg(long)]
        at: Option<String>,
    },
    /// Seminormal data: transition matrices, gammas, Jucys–Murphy actions, contents.
    Seminormal {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        cell: Option<String>,
        /// Any of paths, transition, gammas, jm, kappa, checks; repeatable.
        #[arg(long)]
        emit: Vec<String>,
        #[arg(long)]
        at: Option<String>,
    },
    /// Skew cell module ν∖λ and its decomposition.
    Skew {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
        /// Level of ν; defaults to |ν| on permutation towers.
        #[arg(long)]
        r: Option<usize>,
        /// Level of λ; defaults to |λ| on permutation towers.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Table of a (or A) multiplicities up to `level`, checked against the character oracle.
    Multiplicities {
        #[arg(long)]
        tower: String,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        family: Option<String>,
    },
    /// Partition-algebra multiplicity p (or P) at n = 2r, checked against stable Kronecker coefficients.
    Kronecker {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        family: Option<String>,
        /// Check this many seeded triples with |λ| ≥ 1 instead of one triple.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Symmetric-group character oracle.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Run a JSON job file.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// χ^λ at cycle type ρ.
    Character {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        rho: String,
    },
    /// Kronecker coefficient g(α, β, γ).
    Kronecker {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
    },
    /// Stable Kronecker coefficient of (λ, μ, ν).
    Stable {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Littlewood–Richardson coefficient c^ν_{λμ}.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Skew Kostka number K_{ν∖λ, μ}.
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
}

fn job_from(cli: Cli) -> Result<JobSpec, JobError> {
    let mut job = JobSpec::default();
    let set_tower = |job: &mut JobSpec, t: TowerArgs| {
        job.tower = Some(t.tower);
        job.parameter = t.parameter;
    };
    match cli.command {
        Sub::CheckAxioms { tower, max_level } => {
            job.command = Some(Command::Axioms);
            set_tower(&mut job, tower);
            job.level = Some(max_level);
        }
        Sub::Murphy { tower, level, cell } => {
            job.command = Some(Command::Murphy);
            set_tower(&mut job, tower);
            (job.level, job.cell) = (Some(level), cell);
        }
        Sub::Gram { tower, level, cell, at } => {
            job.command = Some(Command::Gram);
            set_tower(&mut job, tower);
            (job.level, job.cell, job.at) = (Some(level), Some(cell), at);
        }
        Sub::Seminormal { tower, level, cell, emit, at } => {
            job.command = Some(Command::Seminormal);
            set_tower(&mut job, tower);
            (job.level, job.cell, job.emit, job.at) = (Some(level), cell, emit, at);
        }
        Sub::Skew { tower, nu, lambda, r, s } => {
            job.command = Some(Command::Skew);
            set_tower(&mut job, tower);
            (job.nu, job.lambda, job.r, job.s) = (Some(nu), Some(lambda), r, s);
        }
        Sub::Multiplicities { tower, level, family } => {
            job.command = Some(Command::Multiplicities);
            (job.tower, job.level, job.family) = (Some(tower), Some(level), family);
        }
        Sub::Kronecker { lambda, mu, nu, r, family, sample } => {
            job.command = Some(Command::Kronecker);
            (job.lambda, job.mu, job.nu, job.r, job.family, job.sample) = (lambda, mu, nu, Some(r), family, sample);
        }
        Sub::Oracle { query } => {
            job.command = Some(Command::Oracle);
            let (family, lambda, mu, nu) = match query {
                OracleQuery::Character { lambda, rho } => ("character", lambda, rho, None),
                OracleQuery::Kronecker { alpha, beta, gamma } => ("kronecker", alpha, beta, Some(gamma)),
                OracleQuery::Stable { lambda, mu, nu } => ("stable", lambda, mu, Some(nu)),
                OracleQuery::Lr { lambda, mu, nu } => ("lr", lambda, mu, Some(nu)),
                OracleQuery::Kostka { lambda, mu, nu } => ("kostka", lambda, mu, Some(nu)),
            };
            (job.family, job.lambda, job.mu, job.nu) = (Some(family.into()), Some(lambda), Some(mu), nu);
        }
        Sub::Run { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| JobError::Invalid(format!("cannot read {}: {e}", config.display())))?;
            return JobSpec::from_json_str(&text);
        }
    }
    job.format = cli.global.format;
    job.seed = cli.global.seed;
    job.allow_large = cli.global.allow_large;
    job.redact_timings = cli.global.redact_timings;
    Ok(job)
}

fn fail(e: &JobError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        JobError::Invalid(_) => ExitCode::from(2),
        JobError::TooLarge { .. } => ExitCode::from(3),
    }
}

fn main() -> ExitCode {
    let job = match job_from(Cli::parse()) {
        Ok(job) => job,
        Err(e) => return fail(&e),
    };
    let outcome = match run(&job) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let out = match outcome.render(job.format) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    if std::io::stdout().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
