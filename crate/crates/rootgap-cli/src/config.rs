//! Optional TOML configuration for sweep ranges and search caps.
//! Command line flags take precedence over the file, which takes
//! precedence over the built-in defaults.

use std::path::Path;

use rootgap_core::bounds::VerifyOptions;
use rootgap_core::sos::DEFAULT_SOS_RANK_CAP;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    pub verify: VerifySection,
    #[serde(default)]
    pub oracle: OracleSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySection {
    pub rank_min: Option<u32>,
    pub rank_max: Option<u32>,
    pub k_min: Option<u32>,
    pub k_max: Option<u32>,
    pub direct_index_rank_cap: Option<u32>,
    pub fit_rank_max: Option<u32>,
    pub fit_k_max: Option<u32>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub rank_cap: Option<u32>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn verify_options(&self) -> VerifyOptions {
        let defaults = VerifyOptions::default();
        let v = &self.verify;
        VerifyOptions {
            rank_min: v.rank_min.unwrap_or(defaults.rank_min),
            rank_max: v.rank_max.unwrap_or(defaults.rank_max),
            k_min: v.k_min.unwrap_or(defaults.k_min),
            k_max: v.k_max.unwrap_or(defaults.k_max),
            direct_index_rank_cap: v
                .direct_index_rank_cap
                .unwrap_or(defaults.direct_index_rank_cap),
            fit_rank_max: v.fit_rank_max.unwrap_or(defaults.fit_rank_max),
            fit_k_max: v.fit_k_max.unwrap_or(defaults.fit_k_max),
            with_fits: defaults.with_fits,
        }
    }

    pub fn oracle_cap(&self) -> u32 {
        self.oracle.rank_cap.unwrap_or(DEFAULT_SOS_RANK_CAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn defaults_without_a_file() {
        let cfg = FileConfig::load(None).unwrap();
        let opts = cfg.verify_options();
        assert_eq!(opts.rank_max, 1000);
        assert_eq!(opts.k_max, 100);
        assert_eq!(cfg.oracle_cap(), 6);
    }

    #[test]
    fn file_overrides() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(
            f,
            "[verify]\nrank_max = 64\nk_max = 5\n\n[oracle]\nrank_cap = 4\n"
        )
        .unwrap();
        let cfg = FileConfig::load(Some(f.path())).unwrap();
        let opts = cfg.verify_options();
        assert_eq!(opts.rank_max, 64);
        assert_eq!(opts.k_max, 5);
        assert_eq!(opts.rank_min, 2);
        assert_eq!(cfg.oracle_cap(), 4);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "[verify]\nrank_maximum = 64\n").unwrap();
        assert!(matches!(
            FileConfig::load(Some(f.path())),
            Err(CliError::Usage(_))
        ));
    }
}
