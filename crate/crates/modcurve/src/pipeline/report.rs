//! Deterministic JSON rendering of criterion reports.
//!
//! The document is assembled by hand in a fixed field order with every
//! number rendered as a decimal string, so identical inputs always give
//! byte-identical output regardless of serializer settings.

use super::criterion::CriterionReport;

/// Schema version stamped into every report.
pub const REPORT_VERSION: &str = "1";

/// Renders a report as a single-line JSON document.
///
/// Schema: `{"version", "level", "conditions": [{"name", "inputs",
/// "verdict", "paper_anchor"}], "verdict"}`, with `inputs` an object in
/// recorded key order.
pub fn report_json(report: &CriterionReport) -> String {
    let mut out = String::new();
    out.push_str("{\"version\":");
    out.push_str(&quote(REPORT_VERSION));
    out.push_str(",\"level\":");
    out.push_str(&quote(&report.level.to_string()));
    out.push_str(",\"conditions\":[");
    for (i, c) in report.conditions.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str("{\"name\":");
        out.push_str(&quote(c.name));
        out.push_str(",\"inputs\":{");
        for (j, (key, value)) in c.inputs.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&quote(key));
            out.push(':');
            out.push_str(&quote(value));
        }
        out.push_str("},\"verdict\":");
        out.push_str(&quote(c.verdict.label()));
        out.push_str(",\"paper_anchor\":");
        out.push_str(&quote(c.anchor));
        out.push('}');
    }
    out.push_str("],\"verdict\":");
    out.push_str(&quote(report.verdict.label()));
    out.push('}');
    out
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}
