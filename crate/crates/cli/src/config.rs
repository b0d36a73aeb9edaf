use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Deserialize;

use quintrin_core::verify::VerifyConfig;

pub const THREADS_ENV: &str = "QUINTRIN_THREADS";

/// Effective settings: defaults, then the config file, then the environment,
/// then command-line flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub height_bound: u64,
    pub precision_bits: u32,
    pub denominator_bound: BigInt,
    pub prime_bound: u64,
    /// `None` lets rayon pick from the hardware.
    pub threads: Option<usize>,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            height_bound: 200,
            precision_bits: 512,
            denominator_bound: BigInt::from(10u64.pow(12)),
            prime_bound: 500,
            threads: None,
            output: None,
        }
    }
}

/// `key = value` file mirroring [`RunConfig`].
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    height_bound: Option<u64>,
    precision_bits: Option<u32>,
    denominator_bound: Option<toml::Value>,
    prime_bound: Option<u64>,
    threads: Option<usize>,
    output: Option<PathBuf>,
}

#[derive(Debug, Default)]
pub struct Overrides {
    pub height_bound: Option<u64>,
    pub precision_bits: Option<u32>,
    pub denominator_bound: Option<String>,
    pub prime_bound: Option<u64>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
}

fn parse_bound(s: &str) -> Result<BigInt, String> {
    s.trim().replace('_', "").parse::<BigInt>().map_err(|_| format!("invalid denominator bound {s:?}"))
}

impl RunConfig {
    pub fn load(file: Option<&Path>, env_threads: Option<String>, flags: Overrides) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let f: ConfigFile = toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            cfg.height_bound = f.height_bound.unwrap_or(cfg.height_bound);
            cfg.precision_bits = f.precision_bits.unwrap_or(cfg.precision_bits);
            cfg.prime_bound = f.prime_bound.unwrap_or(cfg.prime_bound);
            cfg.threads = f.threads.or(cfg.threads);
            cfg.output = f.output.or(cfg.output);
            match f.denominator_bound {
                None => {}
                Some(toml::Value::Integer(n)) => cfg.denominator_bound = BigInt::from(n),
                Some(toml::Value::String(s)) => cfg.denominator_bound = parse_bound(&s)?,
                Some(v) => return Err(format!("invalid denominator bound {v}")),
            }
        }
        if let Some(v) = env_threads {
            cfg.threads = Some(v.trim().parse().map_err(|_| format!("{THREADS_ENV}: invalid thread count {v:?}"))?);
        }
        cfg.height_bound = flags.height_bound.unwrap_or(cfg.height_bound);
        cfg.precision_bits = flags.precision_bits.unwrap_or(cfg.precision_bits);
        cfg.prime_bound = flags.prime_bound.unwrap_or(cfg.prime_bound);
        cfg.threads = flags.threads.or(cfg.threads);
        cfg.output = flags.output.or(cfg.output);
        if let Some(s) = flags.denominator_bound {
            cfg.denominator_bound = parse_bound(&s)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.height_bound == 0 || self.precision_bits == 0 || self.prime_bound == 0 {
            return Err("bounds must be positive".into());
        }
        if self.denominator_bound <= BigInt::from(0) {
            return Err("denominator bound must be positive".into());
        }
        if self.threads == Some(0) {
            return Err("thread count must be positive".into());
        }
        Ok(())
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            height_bound: self.height_bound,
            precision_bits: self.precision_bits,
            denominator_bound: self.denominator_bound.clone(),
            prime_bound: self.prime_bound,
            ..VerifyConfig::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let dir = std::env::temp_dir().join(format!("quintrin-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        std::fs::write(&path, "height_bound = 50\nthreads = 2\ndenominator_bound = \"1_000\"\n").unwrap();
        let flags = Overrides { height_bound: Some(70), ..Overrides::default() };
        let cfg = RunConfig::load(Some(&path), Some("3".into()), flags).unwrap();
        assert_eq!(cfg.height_bound, 70);
        assert_eq!(cfg.threads, Some(3));
        assert_eq!(cfg.denominator_bound, BigInt::from(1000));
        assert_eq!(cfg.prime_bound, 500);
        std::fs::write(&path, "bogus = 1\n").unwrap();
        assert!(RunConfig::load(Some(&path), None, Overrides::default()).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_zero_bounds() {
        let flags = Overrides { prime_bound: Some(0), ..Overrides::default() };
        assert!(RunConfig::load(None, None, flags).is_err());
        assert!(RunConfig::load(None, Some("0".into()), Overrides::default()).is_err());
    }
}
