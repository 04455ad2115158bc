//! Run configuration shared by every verification target.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Result};
use hamsquare::catalog::{bundled_gadgets, GadgetSet};
use hamsquare::enumerate::{Budget, ParallelOptions};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    /// Largest edge count enumerated, where a target allows overriding it.
    pub t_max: Option<usize>,
    pub max_members: Option<u64>,
    pub max_seconds: Option<u64>,
    pub tol: f64,
    /// Gadget file; `None` uses the bundled one, an empty path disables gadgets.
    pub gadgets: Option<PathBuf>,
    pub workers: usize,
    /// Edge count at which sweeps are split into parallel subtrees.
    pub split_depth: usize,
    /// Subtrees to skip, from the resume token of a partial run.
    pub resume_from: usize,
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_min: None,
            n_max: None,
            t_max: None,
            max_members: None,
            max_seconds: None,
            tol: hamsquare::spectral::DEFAULT_TOL,
            gadgets: None,
            workers: 1,
            split_depth: 6,
            resume_from: 0,
            out_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            bail!("tolerance must be positive, got {}", self.tol);
        }
        if self.max_members == Some(0) || self.max_seconds == Some(0) {
            bail!("budget caps must be positive");
        }
        if self.workers == 0 {
            bail!("worker count must be positive");
        }
        if let (Some(a), Some(b)) = (self.n_min, self.n_max) {
            if a > b {
                bail!("n_min {a} exceeds n_max {b}");
            }
        }
        Ok(())
    }

    /// The configured range, or the given default.
    pub fn range(&self, default: (usize, usize)) -> (usize, usize) {
        (self.n_min.unwrap_or(default.0), self.n_max.unwrap_or(default.1))
    }

    pub fn budget(&self) -> Budget {
        Budget { max_members: self.max_members, max_time: self.max_seconds.map(Duration::from_secs) }
    }

    pub fn parallel(&self) -> ParallelOptions {
        ParallelOptions { split_depth: self.split_depth, workers: self.workers, resume_from: self.resume_from }
    }

    pub fn gadget_set(&self) -> Result<Option<GadgetSet>> {
        match &self.gadgets {
            None => Ok(Some(bundled_gadgets())),
            Some(p) if p.as_os_str().is_empty() => Ok(None),
            Some(p) => Ok(Some(GadgetSet::load(p)?)),
        }
    }

    /// SHA-256 of the JSON form of the configuration, hex encoded.
    pub fn hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serialises");
        Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect()
    }
}
