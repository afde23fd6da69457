//! Scan configuration documents.
//!
//! ```text
//! lambda = -3, 3, 61     # min, max, steps   (or a single value to pin it)
//! rho = -3, 3, 61
//! nu = -3, 3, 61
//! x = 0.2, 0.5, 0.8      # list of overlaps
//! threshold = 0.999
//! seed = 0
//! mode = grid            # or `random` together with `samples = N`
//! oracle_fraction = 0.01
//! refine = true
//! ```

use coherent_concurrence::scanner::{ParamRange, ScanConfig, ScanMode};

use crate::error::CliError;
use crate::kv::Document;

const KEYS: &[&str] =
    &["lambda", "rho", "nu", "x", "threshold", "seed", "mode", "samples", "oracle_fraction", "refine"];

fn range(doc: &Document, key: &str) -> Result<ParamRange, CliError> {
    let v = doc.get_list(key)?.ok_or_else(|| CliError::Input(format!("`{key}` missing")))?;
    let r = match v.as_slice() {
        [value] => ParamRange::fixed(*value),
        [min, max, steps] => {
            if steps.fract() != 0.0 || *steps < 1.0 {
                return Err(CliError::Input(format!("`{key}`: step count {steps} is not a positive integer")));
            }
            ParamRange::new(*min, *max, *steps as usize)
        }
        _ => return Err(CliError::Input(format!("`{key}` needs `value` or `min, max, steps`"))),
    };
    r.map_err(|e| CliError::Input(format!("`{key}`: {e}")))
}

pub fn parse_scan_config(text: &str) -> Result<ScanConfig, CliError> {
    let doc = Document::parse(text)?;
    doc.check_keys(KEYS)?;
    let x_values = doc.get_list("x")?.ok_or_else(|| CliError::Input("`x` missing".into()))?;
    let mut config = ScanConfig::new(range(&doc, "lambda")?, range(&doc, "rho")?, range(&doc, "nu")?, x_values);
    if let Some(t) = doc.get_f64("threshold")? {
        config.concurrence_threshold = t;
    }
    if let Some(seed) = doc.get("seed") {
        config.seed = seed.parse().map_err(|_| CliError::Input(format!("`seed`: `{seed}` is not an integer")))?;
    }
    if let Some(f) = doc.get_f64("oracle_fraction")? {
        config.oracle_fraction = f;
    }
    if let Some(refine) = doc.get("refine") {
        config.refine = match refine {
            "true" | "yes" | "1" => true,
            "false" | "no" | "0" => false,
            other => return Err(CliError::Input(format!("`refine`: `{other}` is not a boolean"))),
        };
    }
    let samples = doc.get_usize("samples")?;
    config.mode = match (doc.get("mode").unwrap_or("grid"), samples) {
        ("grid", None) => ScanMode::Grid,
        ("grid", Some(_)) => return Err(CliError::Input("`samples` only applies to random mode".into())),
        ("random", Some(samples)) => ScanMode::Random { samples },
        ("random", None) => return Err(CliError::Input("random mode needs `samples`".into())),
        (other, _) => return Err(CliError::Input(format!("unknown mode `{other}`"))),
    };
    config.validate()?;
    Ok(config)
}
