use std::fmt::Write as _;

use super::VerificationReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Renders reports; `timing` adds the wall-clock time, which makes the output
/// non-reproducible.
pub fn render(reports: &[VerificationReport], format: Format, timing: bool) -> Result<String> {
    match format {
        Format::Text => Ok(reports
            .iter()
            .map(|r| text(r, timing))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json => {
            let values = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r)?;
                    if timing {
                        v["elapsed_ms"] = r.elapsed.as_millis().to_string().into();
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            let out = if values.len() == 1 {
                serde_json::to_string_pretty(&values[0])?
            } else {
                serde_json::to_string_pretty(&values)?
            };
            Ok(out + "\n")
        }
        Format::Csv => csv(reports),
    }
}

fn text(r: &VerificationReport, timing: bool) -> String {
    let mut out = String::new();
    let failed = r.failures().count();
    let _ = writeln!(out, "check    {}", r.check_id);
    let _ = writeln!(out, "range    {}", r.parameter_range);
    let _ = writeln!(out, "status   {}", r.status);
    let _ = writeln!(out, "records  {} ({failed} failed)", r.details.len());
    if timing {
        let _ = writeln!(out, "elapsed  {:.3}s", r.elapsed.as_secs_f64());
    }
    if !r.details.is_empty() {
        let header = ["inputs", "expected", "actual", "ok", "info"];
        let rows: Vec<[&str; 5]> = r
            .details
            .iter()
            .map(|d| {
                [
                    &*d.inputs,
                    &*d.expected,
                    &*d.actual,
                    if d.ok { "ok" } else { "FAIL" },
                    &*d.info,
                ]
            })
            .collect();
        let mut width = header.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        out.push('\n');
        for row in std::iter::once(&header).chain(&rows) {
            let mut line = String::new();
            for (k, cell) in row.iter().enumerate() {
                if k > 0 {
                    line.push_str("  ");
                }
                let pad = width[k] - cell.chars().count();
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', pad));
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
    }
    if !r.notes.is_empty() {
        out.push_str("\nnotes\n");
        for n in &r.notes {
            let _ = writeln!(out, "  - {n}");
        }
    }
    out
}

fn csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "check_id", "status", "inputs", "expected", "actual", "ok", "info",
    ])
    .map_err(io)?;
    for r in reports {
        let status = r.status.to_string();
        for d in &r.details {
            w.write_record([
                r.check_id.as_str(),
                &status,
                &d.inputs,
                &d.expected,
                &d.actual,
                if d.ok { "true" } else { "false" },
                &d.info,
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::super::{Detail, VerificationReport};
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::from_details(
            "demo",
            "n = 1..=2".into(),
            vec![
                Detail::eq("n=1", 1, 1),
                Detail::eq("n=2", "a,b", "a,c").with_info("x"),
            ],
            vec!["a note".into()],
        )
    }

    #[test]
    fn text_layout() {
        let t = render(&[sample()], Format::Text, false).unwrap();
        assert!(t.starts_with(
            "check    demo\nrange    n = 1..=2\nstatus   fail\nrecords  2 (1 failed)\n"
        ));
        assert!(t.contains("n=2     a,b       a,c     FAIL  x"));
        assert!(t.ends_with("notes\n  - a note\n"));
    }

    #[test]
    fn csv_quotes_commas() {
        let c = render(&[sample()], Format::Csv, false).unwrap();
        assert_eq!(
            c.lines().nth(2).unwrap(),
            "demo,fail,n=2,\"a,b\",\"a,c\",false,x"
        );
    }

    #[test]
    fn json_omits_elapsed_by_default() {
        let j = render(&[sample()], Format::Json, false).unwrap();
        assert!(!j.contains("elapsed"));
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["details"][0].get("info"), None);
    }
}
