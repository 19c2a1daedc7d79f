use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use tower_core::arith::Rational;
use tower_core::combinatorics::Partition;
use tower_core::providers::{DiagramKind, DiagramTower, LoopValue, PermTower};
use tower_core::tower::{Tower, TowerProvider};

#[derive(Debug, Error)]
pub enum JobError {
    #[error("invalid job: {0}")]
    Invalid(String),
    #[error("level {level} exceeds the cap {cap} for {tower}; pass --allow-large to override")]
    TooLarge { tower: String, level: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Axioms,
    Murphy,
    Seminormal,
    Gram,
    Skew,
    Multiplicities,
    Kronecker,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Axioms => "axioms",
            Command::Murphy => "murphy",
            Command::Seminormal => "seminormal",
            Command::Gram => "gram",
            Command::Skew => "skew",
            Command::Multiplicities => "multiplicities",
            Command::Kronecker => "kronecker",
            Command::Oracle => "oracle",
        }
    }
}

/// `text` prints a bare integer and is accepted only by commands with a single integer result.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = JobError;

    fn from_str(s: &str) -> Result<Self, JobError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(JobError::Invalid(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TowerName {
    Hecke,
    Symmetric,
    TemperleyLieb,
    Brauer,
    Partition,
}

impl TowerName {
    pub fn parse(s: &str) -> Result<Self, JobError> {
        match s {
            "hecke" => Ok(TowerName::Hecke),
            "symmetric" => Ok(TowerName::Symmetric),
            "temperley-lieb" | "tl" => Ok(TowerName::TemperleyLieb),
            "brauer" => Ok(TowerName::Brauer),
            "partition" => Ok(TowerName::Partition),
            _ => Err(JobError::Invalid(format!("unknown tower `{s}`"))),
        }
    }

    /// Default level cap; partition levels are internal (level `2k` is `P_k`).
    pub fn cap(self) -> usize {
        match self {
            TowerName::Hecke | TowerName::Symmetric => 5,
            TowerName::TemperleyLieb | TowerName::Brauer => 4,
            TowerName::Partition => 6,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TowerName::Hecke => "hecke",
            TowerName::Symmetric => "symmetric",
            TowerName::TemperleyLieb => "temperley-lieb",
            TowerName::Brauer => "brauer",
            TowerName::Partition => "partition",
        }
    }

    pub fn is_perm(self) -> bool {
        matches!(self, TowerName::Hecke | TowerName::Symmetric)
    }
}

/// One batch job; every command reads only the fields it needs and rejects the others.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Option<Command>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<String>,
    /// Loop parameter of a diagram tower: `symbolic` or an integer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none", alias = "gamma")]
    pub nu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none", alias = "alpha")]
    pub lambda: Option<String>,
    /// Also the cycle type `rho` of the `character` oracle.
    #[serde(default, skip_serializing_if = "Option::is_none", alias = "beta", alias = "rho")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    /// `a`/`A` for `multiplicities`, `p`/`P` for `kronecker`; `character`, `kronecker`, `stable` or `lr` for `oracle`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub emit: Vec<String>,
    #[serde(default)]
    pub format: Format,
    /// Specialization point for the parameter, e.g. `1` or `-5/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<usize>,
    #[serde(default)]
    pub allow_large: bool,
    #[serde(default)]
    pub redact_timings: bool,
}

impl JobSpec {
    pub fn from_json_str(s: &str) -> Result<Self, JobError> {
        let job: JobSpec = serde_json::from_str(s).map_err(|e| JobError::Invalid(e.to_string()))?;
        job.validate()?;
        Ok(job)
    }

    pub fn command(&self) -> Result<Command, JobError> {
        self.command.ok_or_else(|| JobError::Invalid("missing command".into()))
    }

    /// Field-presence and syntax checks that need no engine work.
    pub fn validate(&self) -> Result<(), JobError> {
        let command = self.command()?;
        let has = |f: &Option<String>| f.is_some();
        let allowed: &[&str] = match command {
            Command::Axioms => &["tower", "parameter", "level"],
            Command::Murphy => &["tower", "parameter", "level", "cell"],
            Command::Gram => &["tower", "parameter", "level", "cell", "at"],
            Command::Seminormal => &["tower", "parameter", "level", "cell", "emit", "at"],
            Command::Skew => &["tower", "parameter", "nu", "lambda", "r", "s"],
            Command::Multiplicities => &["tower", "level", "family"],
            Command::Kronecker => &["nu", "lambda", "mu", "r", "family", "sample"],
            Command::Oracle => &["family", "nu", "lambda", "mu"],
        };
        let present = [
            ("tower", has(&self.tower)),
            ("parameter", has(&self.parameter)),
            ("level", self.level.is_some()),
            ("cell", has(&self.cell)),
            ("nu", has(&self.nu)),
            ("lambda", has(&self.lambda)),
            ("mu", has(&self.mu)),
            ("r", self.r.is_some()),
            ("s", self.s.is_some()),
            ("family", has(&self.family)),
            ("emit", !self.emit.is_empty()),
            ("at", has(&self.at)),
            ("sample", self.sample.is_some()),
        ];
        for (field, set) in present {
            if set && !allowed.contains(&field) {
                return Err(JobError::Invalid(format!("`{field}` is not used by `{}`", command.name())));
            }
        }
        if let Some(t) = &self.tower {
            TowerName::parse(t)?;
        }
        for p in [&self.cell, &self.nu, &self.lambda, &self.mu].into_iter().flatten() {
            parse_partition(p)?;
        }
        if let Some(a) = &self.at {
            parse_point(a)?;
        }
        if let Some(p) = &self.parameter {
            parse_parameter(p)?;
        }
        for e in &self.emit {
            if !EMIT_TARGETS.contains(&e.as_str()) {
                return Err(JobError::Invalid(format!("unknown emit target `{e}`")));
            }
        }
        if self.format == Format::Text && !matches!(command, Command::Kronecker | Command::Oracle) {
            return Err(JobError::Invalid(format!("text output is only for integer results, not `{}`", command.name())));
        }
        Ok(())
    }

    pub fn tower_name(&self) -> Result<TowerName, JobError> {
        TowerName::parse(self.tower.as_deref().ok_or_else(|| JobError::Invalid("missing tower".into()))?)
    }

    pub fn require_level(&self) -> Result<usize, JobError> {
        self.level.ok_or_else(|| JobError::Invalid("missing level".into()))
    }

    /// Checks `level` against the tower's cap unless large levels are allowed.
    pub fn check_cap(&self, name: TowerName, level: usize) -> Result<(), JobError> {
        if !self.allow_large && level > name.cap() {
            return Err(JobError::TooLarge { tower: name.label().into(), level, cap: name.cap() });
        }
        Ok(())
    }

    /// Builds the tower up to `max` levels.
    pub fn build_tower(&self, max: usize) -> Result<Tower, JobError> {
        let name = self.tower_name()?;
        self.check_cap(name, max)?;
        let value = self.parameter.as_deref().map(parse_parameter).transpose()?.flatten();
        let provider: Arc<dyn TowerProvider> = match (name, value) {
            (TowerName::Hecke, None) => Arc::new(PermTower::hecke()),
            (TowerName::Symmetric, None) => Arc::new(PermTower::symmetric()),
            (TowerName::Hecke | TowerName::Symmetric, Some(_)) => {
                return Err(JobError::Invalid("permutation towers take no integer parameter".into()))
            }
            (TowerName::TemperleyLieb, None) => Arc::new(DiagramTower::temperley_lieb()),
            (TowerName::Brauer, None) => Arc::new(DiagramTower::brauer()),
            (TowerName::Partition, None) => Arc::new(DiagramTower::partition()),
            (kind, Some(n)) => {
                let kind = match kind {
                    TowerName::TemperleyLieb => DiagramKind::TemperleyLieb,
                    TowerName::Brauer => DiagramKind::Brauer,
                    _ => DiagramKind::Partition,
                };
                Arc::new(DiagramTower::new(kind, LoopValue::Integer(n)))
            }
        };
        Ok(Tower::new(provider, max))
    }
}

pub const EMIT_TARGETS: &[&str] = &["paths", "transition", "gammas", "jm", "kappa", "checks"];

pub fn parse_partition(s: &str) -> Result<Partition, JobError> {
    Partition::parse(s).map_err(|e| JobError::Invalid(format!("partition `{s}`: {e}")))
}

pub fn parse_point(s: &str) -> Result<Rational, JobError> {
    Rational::from_str(s.trim()).map_err(|e| JobError::Invalid(format!("specialization point `{s}`: {e}")))
}

/// `symbolic` gives `None`; an integer loop value gives `Some(n)`.
pub fn parse_parameter(s: &str) -> Result<Option<i64>, JobError> {
    match s.trim() {
        "symbolic" => Ok(None),
        t => t.parse().map(Some).map_err(|_| JobError::Invalid(format!("parameter `{s}` is neither `symbolic` nor an integer"))),
    }
}
