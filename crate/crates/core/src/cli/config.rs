//! Run configuration: flags override `--config` file entries, which
//! override built-in defaults.

use std::collections::BTreeMap;
use std::path::PathBuf;

use super::{CommonArgs, Format};
use crate::e510::DEFAULT_SEED;
use crate::pscohomology::DEFAULT_N_MAX;
use crate::repseries::DEFAULT_TRUNCATION;

/// Largest accepted `--max-level`; peeling cost grows steeply beyond it.
pub const MAX_LEVEL_LIMIT: usize = 16;
/// Largest accepted `--n-max`.
pub const N_MAX_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_level: usize,
    pub n_max: usize,
    pub format: Format,
    pub seed: u64,
    pub trials: usize,
    /// Polynomial degree bound from the config file, if any; subcommand
    /// flags take precedence.
    pub max_degree: Option<usize>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_level: DEFAULT_TRUNCATION,
            n_max: DEFAULT_N_MAX,
            format: Format::Text,
            seed: DEFAULT_SEED,
            trials: 100,
            max_degree: None,
            out: None,
        }
    }
}

fn parse_file(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.parse().map_err(|_| format!("config: invalid value '{v}' for {key}"))
}

impl RunConfig {
    pub(crate) fn resolve(args: &CommonArgs) -> Result<Self, String> {
        let mut c = RunConfig::default();
        if let Some(path) = &args.config {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            for (k, v) in parse_file(&text)? {
                match k.as_str() {
                    "max-level" => c.max_level = parse_value(&k, &v)?,
                    "n-max" => c.n_max = parse_value(&k, &v)?,
                    "format" => c.format = parse_value(&k, &v)?,
                    "seed" => c.seed = parse_value(&k, &v)?,
                    "trials" => c.trials = parse_value(&k, &v)?,
                    "max-degree" => c.max_degree = Some(parse_value(&k, &v)?),
                    "out" => c.out = Some(PathBuf::from(v)),
                    _ => return Err(format!("config: unknown key '{k}'")),
                }
            }
        }
        if let Some(v) = args.max_level {
            c.max_level = v;
        }
        if let Some(v) = args.n_max {
            c.n_max = v;
        }
        if let Some(v) = args.format {
            c.format = v;
        }
        if let Some(v) = args.seed {
            c.seed = v;
        }
        if let Some(v) = args.trials {
            c.trials = v;
        }
        if let Some(v) = &args.out {
            c.out = Some(v.clone());
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(1..=MAX_LEVEL_LIMIT).contains(&self.max_level) {
            return Err(format!("--max-level must be between 1 and {MAX_LEVEL_LIMIT}, got {}", self.max_level));
        }
        if self.n_max > N_MAX_LIMIT {
            return Err(format!("--n-max must be at most {N_MAX_LIMIT}, got {}", self.n_max));
        }
        if self.trials == 0 {
            return Err("--trials must be positive".into());
        }
        Ok(())
    }
}
