//! Verification records as JSON lines and as an aligned text table.

use conormal_core::claims::VerificationRecord;
use serde::Serialize;

#[derive(Serialize)]
struct Line<'a> {
    claim: &'a str,
    instance: &'a str,
    predicted: Option<i128>,
    computed: Option<i128>,
    verdict: &'a str,
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

/// One JSON object, without a trailing newline. Booleans are written as
/// 1 and 0 and an infinite diameter as -1.
pub fn json_line(r: &VerificationRecord) -> String {
    let line = Line {
        claim: r.claim.as_str(),
        instance: &r.instance,
        predicted: r.predicted.map(|v| v.as_report_int()),
        computed: r.computed.map(|v| v.as_report_int()),
        verdict: r.verdict.as_str(),
        witness: r.witness.as_ref().map(ToString::to_string),
        note: r.note.as_deref(),
    };
    serde_json::to_string(&line).expect("records always serialize")
}

pub fn jsonl(records: &[VerificationRecord]) -> String {
    records.iter().map(|r| json_line(r) + "\n").collect()
}

pub fn table(records: &[VerificationRecord]) -> String {
    let dash = || "-".to_string();
    let rows: Vec<[String; 7]> = records
        .iter()
        .map(|r| {
            [
                r.claim.to_string(),
                r.instance.clone(),
                r.predicted.map_or_else(dash, |v| v.to_string()),
                r.computed.map_or_else(dash, |v| v.to_string()),
                r.verdict.to_string(),
                r.witness.as_ref().map_or_else(dash, ToString::to_string),
                r.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let header = ["claim", "instance", "predicted", "computed", "verdict", "witness", "note"].map(String::from);
    let mut width = [0usize; 7];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k == 6 {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = width[k]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
