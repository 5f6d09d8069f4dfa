//! Command output as ordered `key=value` fields.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("line {line}: expected key=value")]
    MissingSeparator { line: usize },
    #[error("line {line}: invalid key {key:?}")]
    InvalidKey { line: usize, key: String },
    #[error("line {line}: duplicate key {key:?}")]
    DuplicateKey { line: usize, key: String },
    #[error("report has no verdict")]
    MissingVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Kv,
}

/// Verdict plus parameters. Field order is preserved; values are single-line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    fields: Vec<(String, String)>,
}

fn valid_key(key: &str) -> bool {
    !key.is_empty() && key.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Report {
    pub fn new(verdict: &str) -> Self {
        Self {
            fields: vec![("verdict".into(), verdict.into())],
        }
    }

    /// Adds or replaces `key`. Newlines in `value` are folded to spaces.
    pub fn set(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        assert!(valid_key(key), "invalid report key {key:?}");
        let value = value.to_string().replace(['\n', '\r'], " ");
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.into(), value)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn verdict(&self) -> &str {
        self.get("verdict").expect("verdict is always present")
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    /// 1 for a negative verdict, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.verdict() {
            "reject" | "not-invariant" | "disagree" => 1,
            _ => 0,
        }
    }

    pub fn to_kv(&self) -> String {
        self.fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }

    pub fn from_kv(text: &str) -> Result<Self, ReportError> {
        let mut fields: Vec<(String, String)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let line_no = i + 1;
            let (key, value) = line.split_once('=').ok_or(ReportError::MissingSeparator { line: line_no })?;
            if !valid_key(key) {
                return Err(ReportError::InvalidKey {
                    line: line_no,
                    key: key.into(),
                });
            }
            if fields.iter().any(|(k, _)| k == key) {
                return Err(ReportError::DuplicateKey {
                    line: line_no,
                    key: key.into(),
                });
            }
            fields.push((key.into(), value.into()));
        }
        if fields.first().map(|(k, _)| k.as_str()) != Some("verdict") {
            return Err(ReportError::MissingVerdict);
        }
        Ok(Self { fields })
    }

    pub fn to_text(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.fields.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Kv => self.to_kv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kv_round_trip() {
        let mut r = Report::new("accept");
        r.set("alpha", "3/2+1/2*i").set("theta", "c + v.x - (1/2)t|v|^2").set("n", 3);
        let text = r.to_kv();
        assert_eq!(text.lines().next(), Some("verdict=accept"));
        assert_eq!(Report::from_kv(&text).unwrap(), r);
    }

    #[test]
    fn values_may_contain_equals() {
        let mut r = Report::new("reject");
        r.set("witness", "p_0 = -xi1*xi2");
        assert_eq!(Report::from_kv(&r.to_kv()).unwrap().get("witness"), Some("p_0 = -xi1*xi2"));
    }

    #[test]
    fn malformed_kv() {
        assert_eq!(Report::from_kv("alpha=1\n"), Err(ReportError::MissingVerdict));
        assert_eq!(Report::from_kv("verdict=accept\nnope\n"), Err(ReportError::MissingSeparator { line: 2 }));
        assert!(matches!(Report::from_kv("verdict=a\nverdict=b\n"), Err(ReportError::DuplicateKey { .. })));
        assert!(matches!(Report::from_kv("verdict=a\nBad Key=1\n"), Err(ReportError::InvalidKey { .. })));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Report::new("accept").exit_code(), 0);
        assert_eq!(Report::new("invariant").exit_code(), 0);
        assert_eq!(Report::new("reject").exit_code(), 1);
        assert_eq!(Report::new("not-invariant").exit_code(), 1);
    }

    #[test]
    fn text_is_aligned() {
        let mut r = Report::new("accept");
        r.set("n", 2);
        assert_eq!(r.to_text(), "verdict  accept\nn        2\n");
    }
}
