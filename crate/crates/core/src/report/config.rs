use serde::Serialize;

use crate::error::Error;
use crate::exact_linalg::{parse_rational, render_rational, ExactScalar};
use crate::roots_weyl::PositiveRule;
use crate::symplectic_lie::{build_special_f, Functional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Algebra,
    Orbit,
    Roots,
    Polarize,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Algebra => "algebra",
            Command::Orbit => "orbit",
            Command::Roots => "roots",
            Command::Polarize => "polarize",
            Command::Verify => "verify",
        }
    }

    /// Largest `n` accepted without `--allow-large`.
    pub fn default_bound(self) -> usize {
        match self {
            Command::Verify => 3,
            _ => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Largest `n` for which Weyl group closure runs without `--allow-large`.
pub const WEYL_BOUND: usize = 3;

/// One run, as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    /// Rationals as `p/q` strings.
    pub lambdas: Vec<String>,
    pub positive: PositiveRule,
    pub seed: u64,
    pub samples: usize,
    pub format: OutputFormat,
    pub allow_large: bool,
}

impl RunConfig {
    pub fn new(command: Command, n: usize) -> Self {
        Self {
            command,
            n,
            lambdas: Vec::new(),
            positive: PositiveRule::Lexicographic,
            seed: 0,
            samples: 20,
            format: OutputFormat::Text,
            allow_large: false,
        }
    }

    pub fn with_lambdas(mut self, lambdas: &[&str]) -> Self {
        self.lambdas = lambdas.iter().map(|s| s.to_string()).collect();
        self
    }
}

/// An invalid configuration, naming the offending flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid {}: {}", self.flag, self.message)
    }
}

impl std::error::Error for UsageError {}

fn usage(flag: &'static str, message: impl Into<String>) -> UsageError {
    UsageError {
        flag,
        message: message.into(),
    }
}

/// A checked configuration with parsed parameters.
#[derive(Debug, Clone)]
pub struct ValidConfig {
    pub raw: RunConfig,
    pub lambdas: Vec<ExactScalar>,
    /// `None` for commands that take no functional.
    pub functional: Option<Functional>,
}

impl ValidConfig {
    pub fn r(&self) -> usize {
        self.lambdas.len()
    }
}

pub fn validate(config: &RunConfig) -> Result<ValidConfig, UsageError> {
    let n = config.n;
    if n == 0 {
        return Err(usage("--n", "n must be at least 1"));
    }
    let bound = config.command.default_bound();
    if n > bound && !config.allow_large {
        return Err(usage(
            "--n",
            format!(
                "n = {n} exceeds {bound} for `{}`; pass --allow-large",
                config.command.name()
            ),
        ));
    }
    let lambdas = config
        .lambdas
        .iter()
        .map(|s| {
            parse_rational(s)
                .ok_or_else(|| usage("--lambdas", format!("`{s}` is not a rational p/q")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let needs_f = matches!(
        config.command,
        Command::Orbit | Command::Roots | Command::Polarize
    );
    if !needs_f && !lambdas.is_empty() {
        return Err(usage(
            "--lambdas",
            format!("`{}` takes no lambdas", config.command.name()),
        ));
    }
    if config.command == Command::Polarize && lambdas.is_empty() {
        return Err(usage("--lambdas", "polarize needs at least one lambda"));
    }
    let functional = if needs_f {
        Some(build_special_f(n, &lambdas).map_err(|e| match e {
            Error::DegenerateParameters(m) => {
                usage("--lambdas", format!("degenerate parameters: {m}"))
            }
            other => usage("--lambdas", other.to_string()),
        })?)
    } else {
        None
    };
    Ok(ValidConfig {
        raw: config.clone(),
        lambdas,
        functional,
    })
}

/// The configuration as echoed in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub command: Command,
    pub n: usize,
    pub r: usize,
    pub lambdas: Vec<String>,
    pub positive: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub format: OutputFormat,
    pub allow_large: bool,
}

impl From<&ValidConfig> for ConfigEcho {
    fn from(v: &ValidConfig) -> Self {
        let c = &v.raw;
        Self {
            command: c.command,
            n: c.n,
            r: v.r(),
            lambdas: v.lambdas.iter().map(render_rational).collect(),
            positive: match c.positive {
                PositiveRule::Lexicographic => "lex",
            },
            seed: c.seed,
            samples: c.samples,
            format: c.format,
            allow_large: c.allow_large,
        }
    }
}
