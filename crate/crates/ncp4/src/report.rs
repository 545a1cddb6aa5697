//! Check records and report emission.
//!
//! Each verification produces one record. The json-lines format is
//! byte-deterministic for a fixed scenario: field order is fixed and the
//! `seconds` field is always 0.0 there (wall-clock timing appears only
//! in the human format).

use serde::Serialize;
use std::io::Write;

/// Outcome of a single check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub paper_anchor: String,
    /// Order through which the residual vanishes; -1 when the check
    /// errored before producing a residual.
    pub vanishing_order: i64,
    /// Max residual magnitude over the reliable range; -1.0 on error.
    pub max_residual: f64,
    pub pass: bool,
    pub seconds: f64,
}

impl CheckRecord {
    pub fn error(check_id: &str, anchor: &str) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            vanishing_order: -1,
            max_residual: -1.0,
            pass: false,
            seconds: 0.0,
        }
    }
}

/// One JSON object per line, `seconds` forced to 0.0 for determinism.
pub fn write_json_lines<W: Write>(records: &[CheckRecord], mut w: W) -> std::io::Result<()> {
    for r in records {
        let mut r = r.clone();
        r.seconds = 0.0;
        writeln!(w, "{}", serde_json::to_string(&r)?)?;
    }
    Ok(())
}

/// Aligned human-readable table with measured timings.
pub fn write_human<W: Write>(records: &[CheckRecord], mut w: W) -> std::io::Result<()> {
    let width = records
        .iter()
        .map(|r| r.check_id.len())
        .max()
        .unwrap_or(8)
        .max(8);
    for r in records {
        writeln!(
            w,
            "{:>4}  {:<width$}  order>={:<3}  max_residual={:<10.3e}  {:.3}s  [{}]",
            if r.pass { "ok" } else { "FAIL" },
            r.check_id,
            r.vanishing_order,
            r.max_residual,
            r.seconds,
            r.paper_anchor,
            width = width,
        )?;
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    writeln!(w, "{} checks, {} failed", records.len(), failed)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_are_deterministic() {
        let rec = CheckRecord {
            check_id: "x".into(),
            paper_anchor: "y".into(),
            vanishing_order: 5,
            max_residual: 0.0,
            pass: true,
            seconds: 1.25,
        };
        let mut a = Vec::new();
        write_json_lines(&[rec.clone()], &mut a).unwrap();
        let mut b = Vec::new();
        write_json_lines(&[rec], &mut b).unwrap();
        assert_eq!(a, b);
        let line = String::from_utf8(a).unwrap();
        assert!(line.contains("\"seconds\":0.0"));
        assert!(line.starts_with("{\"check_id\""));
    }
}
