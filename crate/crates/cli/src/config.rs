//! Sweep configuration: built-in defaults, optionally overridden by a
//! `key=value` file, overridden in turn by command-line flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "BSNUM_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Pretty,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "pretty" => Ok(OutputFormat::Pretty),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => bail!("unknown format `{other}` (expected pretty, csv or json)"),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Pretty => "pretty",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_k: usize,
    /// Sweeps run over all primes up to this bound.
    pub primes_to: u64,
    /// Truncation level `n` of the Bernoulli-weighted congruences; the
    /// harmonic expansion is checked for `J <= 2 * truncation`.
    pub truncation: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Index window of the tandem table.
    pub window: (i64, i64),
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            max_k: 3,
            primes_to: 31,
            truncation: 3,
            format: OutputFormat::Pretty,
            out: None,
            window: (-8, 7),
        }
    }
}

/// Values given explicitly; unset fields fall through to the next layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub max_n: Option<usize>,
    pub max_k: Option<usize>,
    pub primes_to: Option<u64>,
    pub truncation: Option<usize>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub min: Option<i64>,
    pub max: Option<i64>,
}

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> anyhow::Result<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow::anyhow!("line {line}: bad value for `{key}`: {e}"))
}

impl Overrides {
    /// Parses `key=value` lines. Blank lines and `#` comments are skipped;
    /// dashes and underscores in keys are interchangeable.
    pub fn parse(text: &str) -> anyhow::Result<Overrides> {
        let mut o = Overrides::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                bail!("line {line}: expected key=value");
            };
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            match key.as_str() {
                "max_n" => o.max_n = Some(parse_value(&key, value, line)?),
                "max_k" => o.max_k = Some(parse_value(&key, value, line)?),
                "primes_to" => o.primes_to = Some(parse_value(&key, value, line)?),
                "truncation" | "n" => o.truncation = Some(parse_value(&key, value, line)?),
                "format" => o.format = Some(parse_value(&key, value, line)?),
                "out" => o.out = Some(PathBuf::from(value)),
                "min" => o.min = Some(parse_value(&key, value, line)?),
                "max" => o.max = Some(parse_value(&key, value, line)?),
                other => bail!("line {line}: unknown key `{other}`"),
            }
        }
        Ok(o)
    }

    pub fn from_file(path: &Path) -> anyhow::Result<Overrides> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config file {}", path.display()))
    }

    fn apply(&self, cfg: &mut SweepConfig) {
        if let Some(v) = self.max_n {
            cfg.max_n = v;
        }
        if let Some(v) = self.max_k {
            cfg.max_k = v;
        }
        if let Some(v) = self.primes_to {
            cfg.primes_to = v;
        }
        if let Some(v) = self.truncation {
            cfg.truncation = v;
        }
        if let Some(v) = self.format {
            cfg.format = v;
        }
        if let Some(v) = &self.out {
            cfg.out = Some(v.clone());
        }
        if let Some(v) = self.min {
            cfg.window.0 = v;
        }
        if let Some(v) = self.max {
            cfg.window.1 = v;
        }
    }
}

impl SweepConfig {
    /// Defaults, then `file`, then `flags`; the result is validated.
    pub fn resolve(file: Option<&Overrides>, flags: &Overrides) -> anyhow::Result<SweepConfig> {
        let mut cfg = SweepConfig::default();
        if let Some(f) = file {
            f.apply(&mut cfg);
        }
        flags.apply(&mut cfg);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.max_n == 0 {
            bail!("max-n must be positive");
        }
        if self.primes_to < 2 {
            bail!("primes-to must be at least 2");
        }
        if self.window.0 > self.window.1 {
            bail!(
                "tandem window is empty: min {} > max {}",
                self.window.0,
                self.window.1
            );
        }
        Ok(())
    }

    pub fn primes(&self) -> Vec<u64> {
        bsnum::corenum::primes_up_to(self.primes_to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_file() {
        let o =
            Overrides::parse("# sweep\nmax-n = 20\nprimes_to=97 # all\n\nformat=json\nmin=-3\n")
                .unwrap();
        assert_eq!(o.max_n, Some(20));
        assert_eq!(o.primes_to, Some(97));
        assert_eq!(o.format, Some(OutputFormat::Json));
        assert_eq!(o.min, Some(-3));
        assert!(Overrides::parse("max_n").is_err());
        assert!(Overrides::parse("colour=red").is_err());
        assert!(Overrides::parse("max_n=-1").is_err());
    }

    #[test]
    fn precedence() {
        let file = Overrides {
            max_n: Some(20),
            primes_to: Some(97),
            ..Default::default()
        };
        let flags = Overrides {
            max_n: Some(5),
            ..Default::default()
        };
        let cfg = SweepConfig::resolve(Some(&file), &flags).unwrap();
        assert_eq!(cfg.max_n, 5);
        assert_eq!(cfg.primes_to, 97);
        assert_eq!(cfg.max_k, SweepConfig::default().max_k);
        let cfg = SweepConfig::resolve(None, &Overrides::default()).unwrap();
        assert_eq!(cfg, SweepConfig::default());
        assert_eq!((cfg.max_n, cfg.primes_to), (12, 31));
    }

    #[test]
    fn validation() {
        let bad = Overrides {
            min: Some(3),
            max: Some(2),
            ..Default::default()
        };
        assert!(SweepConfig::resolve(None, &bad).is_err());
        let bad = Overrides {
            max_n: Some(0),
            ..Default::default()
        };
        assert!(SweepConfig::resolve(None, &bad).is_err());
    }
}
