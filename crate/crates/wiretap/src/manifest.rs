//! Run manifests: every file the command line writes is accompanied by a
//! JSON manifest holding the subcommand, its full parameter set, and the
//! artifact version. Rendering a parsed manifest reproduces the output
//! byte for byte.

use serde::{Deserialize, Serialize};

use crate::cli;
use crate::det::DetWiretapParams;
use crate::Result;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// The parameter set of one reproducible command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum ManifestCommand {
    Sweep {
        figure: String,
        points: usize,
        h1sq_min: f64,
        h1sq_max: f64,
        g1: f64,
        beta: f64,
    },
    Simulate {
        n1: u32,
        m1: u32,
        n2: u32,
        m2: u32,
        block_len: usize,
        rate: f64,
        confusion_rate: f64,
        seed: u64,
        seed_count: u64,
        budget: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub artifact_version: String,
    pub output: String,
    #[serde(flatten)]
    pub command: ManifestCommand,
}

impl RunManifest {
    pub fn new(output: impl Into<String>, command: ManifestCommand) -> Self {
        RunManifest {
            artifact_version: ARTIFACT_VERSION.to_string(),
            output: output.into(),
            command,
        }
    }

    /// The manifest as JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        // Round-tripping through Value sorts the object keys.
        let value = serde_json::to_value(self)?;
        Ok(serde_json::to_string_pretty(&value)? + "\n")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Regenerates the exact bytes of the output file this manifest
    /// describes.
    pub fn render_output(&self) -> Result<String> {
        match &self.command {
            ManifestCommand::Sweep {
                figure,
                points,
                h1sq_min,
                h1sq_max,
                g1,
                beta,
            } => {
                let figure: cli::Figure = figure.parse()?;
                cli::render_sweep_csv(figure, *points, *h1sq_min, *h1sq_max, *g1, *beta)
            }
            ManifestCommand::Simulate {
                n1,
                m1,
                n2,
                m2,
                block_len,
                rate,
                confusion_rate,
                seed,
                seed_count,
                budget,
            } => cli::render_simulate_csv(
                &DetWiretapParams::new(*n1, *m1, *n2, *m2),
                *block_len,
                *rate,
                *confusion_rate,
                *seed,
                *seed_count,
                *budget,
            ),
        }
    }
}
