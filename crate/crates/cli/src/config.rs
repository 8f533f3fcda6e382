//! Checker limits: command-line flags, then `ORBITDUAL_*` environment
//! variables (both handled by clap), then a JSON config file, then defaults.

use std::path::Path;

use serde::Deserialize;

use orbitdual::checker::{CheckOptions, DEFAULT_MAX_POINTS, DEFAULT_WITNESS_LIMIT};

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub jobs: Option<usize>,
    pub max_points: Option<u64>,
    pub witness_limit: Option<usize>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else { return Ok(Self::default()) };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }
}

/// Values already merged from flags and environment by clap.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub jobs: Option<usize>,
    pub max_points: Option<u64>,
    pub witness_limit: Option<usize>,
    pub no_canonicalize: bool,
}

pub fn resolve(o: &Overrides, file: &FileConfig) -> Result<CheckOptions, CliError> {
    let jobs = o.jobs.or(file.jobs).unwrap_or(1);
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }
    let max_points = o.max_points.or(file.max_points).unwrap_or(DEFAULT_MAX_POINTS);
    let witness_limit = o.witness_limit.or(file.witness_limit).unwrap_or(DEFAULT_WITNESS_LIMIT).max(1);
    Ok(CheckOptions { jobs, max_points: Some(max_points), canonicalize: !o.no_canonicalize, witness_limit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_the_file() {
        let file = FileConfig { jobs: Some(3), max_points: Some(10), witness_limit: None };
        let o = Overrides { jobs: Some(2), ..Overrides::default() };
        let r = resolve(&o, &file).unwrap();
        assert_eq!((r.jobs, r.max_points, r.witness_limit), (2, Some(10), DEFAULT_WITNESS_LIMIT));
        assert!(resolve(&Overrides { jobs: Some(0), ..o }, &file).is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(serde_json::from_str::<FileConfig>(r#"{"jobz": 2}"#).is_err());
    }
}
