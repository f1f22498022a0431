use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::decomposition::DEFAULT_EXACT_BUDGET;
use crate::error::{Error, Result};
use crate::sparsifier::ExtractStrategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    KprColor,
    TreePartitionColor,
    ProductColor,
    Sparsify,
    BoundCheck,
    Witness,
}

impl Pipeline {
    pub const ALL: [Pipeline; 6] = [
        Pipeline::KprColor,
        Pipeline::TreePartitionColor,
        Pipeline::ProductColor,
        Pipeline::Sparsify,
        Pipeline::BoundCheck,
        Pipeline::Witness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Pipeline::KprColor => "kpr_color",
            Pipeline::TreePartitionColor => "tree_partition_color",
            Pipeline::ProductColor => "product_color",
            Pipeline::Sparsify => "sparsify",
            Pipeline::BoundCheck => "bound_check",
            Pipeline::Witness => "witness",
        }
    }
}

impl FromStr for Pipeline {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown pipeline `{s}`")))
    }
}

impl std::fmt::Display for Pipeline {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Edge-coloring fed to the sparsification pipelines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColoringChoice {
    TreePartition,
    Kpr,
    Monochromatic,
}

impl FromStr for ColoringChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree_partition" => Ok(ColoringChoice::TreePartition),
            "kpr" => Ok(ColoringChoice::Kpr),
            "monochromatic" => Ok(ColoringChoice::Monochromatic),
            _ => Err(Error::InvalidParameter(format!("unknown coloring `{s}`"))),
        }
    }
}

/// Flat `key = value` experiment description.
///
/// ```text
/// # comment
/// family = pohoata_davies
/// sizes = 3; 4; 5
/// pipeline = bound_check
/// ```
///
/// `sizes` lists the family parameters of each graph, separated by `;`.
/// Alternatively `input` names one edge-list file.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub family: Option<String>,
    pub sizes: Vec<String>,
    pub input: Option<PathBuf>,
    pub pipeline: Option<Pipeline>,
    pub p: usize,
    pub q: usize,
    pub t: usize,
    pub strategy: ExtractStrategy,
    pub coloring: ColoringChoice,
    pub seed: u64,
    pub output: Option<PathBuf>,
    /// Largest component handed to the exact treewidth solver.
    pub budget: usize,
    /// Length of the path factor in `product_color`.
    pub path_len: usize,
    /// Record wall-clock milliseconds; off keeps output byte-reproducible.
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            family: None,
            sizes: Vec::new(),
            input: None,
            pipeline: None,
            p: 2,
            q: 2,
            t: 1,
            strategy: ExtractStrategy::Greedy,
            coloring: ColoringChoice::TreePartition,
            seed: 0,
            output: None,
            budget: DEFAULT_EXACT_BUDGET,
            path_len: 4,
            timing: false,
        }
    }
}

fn field_err(field: &str, msg: impl Into<String>) -> Error {
    Error::Config {
        field: field.to_string(),
        msg: msg.into(),
    }
}

fn num<T: FromStr>(field: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| field_err(field, format!("expected a number, got `{value}`")))
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: format!("expected key = value, got `{line}`"),
            })?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Sets one field from its text form; also used for overrides.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let wrap = |e: Error| match e {
            Error::InvalidParameter(msg) => field_err(key, msg),
            other => other,
        };
        match key {
            "family" => self.family = (!value.is_empty()).then(|| value.to_string()),
            "sizes" => {
                self.sizes = value
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            }
            "input" => self.input = (!value.is_empty()).then(|| PathBuf::from(value)),
            "pipeline" => self.pipeline = Some(value.parse().map_err(wrap)?),
            "p" => self.p = num(key, value)?,
            "q" => self.q = num(key, value)?,
            "t" => self.t = num(key, value)?,
            "strategy" => self.strategy = value.parse().map_err(wrap)?,
            "coloring" => self.coloring = value.parse().map_err(wrap)?,
            "seed" => self.seed = num(key, value)?,
            "output" => self.output = (!value.is_empty()).then(|| PathBuf::from(value)),
            "budget" => self.budget = num(key, value)?,
            "path_len" => self.path_len = num(key, value)?,
            "timing" => {
                self.timing = match value {
                    "on" | "true" | "1" => true,
                    "off" | "false" | "0" => false,
                    _ => return Err(field_err(key, format!("expected on/off, got `{value}`"))),
                }
            }
            _ => return Err(field_err(key, "unknown field")),
        }
        Ok(())
    }

    /// Applies `key=value` overrides in order.
    pub fn apply_overrides<S: AsRef<str>>(&mut self, overrides: &[S]) -> Result<()> {
        for o in overrides {
            let o = o.as_ref();
            let (k, v) = o
                .split_once('=')
                .ok_or_else(|| field_err(o, "override must be key=value"))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let pipeline = self
            .pipeline
            .ok_or_else(|| field_err("pipeline", "missing"))?;
        if self.family.is_some() && self.input.is_some() {
            return Err(field_err(
                "input",
                "give either `family` or `input`, not both",
            ));
        }
        if let Some(path) = &self.input {
            if !path.is_file() {
                return Err(field_err(
                    "input",
                    format!("{} does not exist", path.display()),
                ));
            }
        }
        if self.family.is_none() && !self.sizes.is_empty() {
            return Err(field_err("family", "`sizes` given without a family"));
        }
        if matches!(pipeline, Pipeline::KprColor | Pipeline::Witness)
            || self.coloring == ColoringChoice::Kpr
        {
            if self.p < 2 {
                return Err(field_err("p", "must be at least 2"));
            }
            if self.q < 1 {
                return Err(field_err("q", "must be at least 1"));
            }
        }
        if pipeline == Pipeline::ProductColor && self.path_len == 0 {
            return Err(field_err("path_len", "must be positive"));
        }
        if self.budget == 0 || self.budget > crate::decomposition::MAX_EXACT_BUDGET {
            return Err(field_err(
                "budget",
                format!("must be in 1..={}", crate::decomposition::MAX_EXACT_BUDGET),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_override() {
        let mut cfg = ExperimentConfig::parse(
            "family = grid # rows,cols\nsizes = 3,3; 4,4\npipeline = kpr_color\n",
        )
        .unwrap();
        assert_eq!(cfg.sizes, vec!["3,3", "4,4"]);
        cfg.apply_overrides(&["q=1", "timing=on"]).unwrap();
        assert_eq!((cfg.q, cfg.timing), (1, true));
        cfg.validate().unwrap();
    }

    #[test]
    fn errors_name_the_field() {
        let e = ExperimentConfig::parse("pipeline = nope").unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "pipeline"));
        let e = ExperimentConfig::parse("p = two").unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "p"));
        let e = ExperimentConfig::parse("family = path")
            .unwrap()
            .validate()
            .unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "pipeline"));
        let e = ExperimentConfig::parse("pipeline = witness\ninput = /no/such/file")
            .unwrap()
            .validate()
            .unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "input"));
        assert!(matches!(
            ExperimentConfig::parse("no equals sign"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
