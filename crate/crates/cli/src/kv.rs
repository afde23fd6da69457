//! `key = value` documents, one assignment per line, `#` starts a comment.

use std::collections::BTreeSet;

use crate::error::CliError;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    entries: Vec<(String, String)>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut doc = Document::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim().to_ascii_lowercase();
            if key.is_empty() {
                return Err(CliError::Input(format!("line {}: empty key", lineno + 1)));
            }
            if doc.get(&key).is_some() {
                return Err(CliError::Input(format!("line {}: duplicate key `{key}`", lineno + 1)));
            }
            doc.entries.push((key, value.trim().to_string()));
        }
        Ok(doc)
    }

    /// Inserts or replaces `key`.
    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        let value = value.into();
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn contains(&self, key: &str) -> bool {
        self.get(key).is_some()
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, CliError> {
        self.get(key).map(|v| parse_f64(key, v)).transpose()
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, CliError> {
        self.get(key)
            .map(|v| v.parse().map_err(|_| CliError::Input(format!("`{key}`: `{v}` is not a non-negative integer"))))
            .transpose()
    }

    /// Comma-separated list of reals.
    pub fn get_list(&self, key: &str) -> Result<Option<Vec<f64>>, CliError> {
        self.get(key).map(|v| v.split(',').map(|item| parse_f64(key, item.trim())).collect()).transpose()
    }

    /// Rejects any key outside `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        let allowed: BTreeSet<&str> = allowed.iter().copied().collect();
        match self.entries.iter().find(|(k, _)| !allowed.contains(k.as_str())) {
            Some((k, _)) => Err(CliError::Input(format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn render(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64, CliError> {
    let x: f64 = v.parse().map_err(|_| CliError::Input(format!("`{key}`: `{v}` is not a number")))?;
    if !x.is_finite() {
        return Err(CliError::Input(format!("`{key}` must be finite")));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_spacing() {
        let d = Document::parse("# header\nlambda = -0.5  # trailing\n\n  NU=1\nx = 0.2, 0.5\n").unwrap();
        assert_eq!(d.get_f64("lambda").unwrap(), Some(-0.5));
        assert_eq!(d.get_f64("nu").unwrap(), Some(1.0));
        assert_eq!(d.get_list("x").unwrap(), Some(vec![0.2, 0.5]));
        assert_eq!(d.get_f64("rho").unwrap(), None);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(Document::parse("lambda -0.5").is_err());
        assert!(Document::parse("= 3").is_err());
        assert!(Document::parse("a = 1\na = 2").is_err());
        let d = Document::parse("a = nope\nb = inf").unwrap();
        assert!(d.get_f64("a").is_err());
        assert!(d.get_f64("b").is_err());
        assert!(d.check_keys(&["a"]).is_err());
    }
}
