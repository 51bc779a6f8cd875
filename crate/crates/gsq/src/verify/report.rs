//! Claim reports: the structured verdicts produced by every verification
//! operation, serializable to JSON and CSV with bit-identical float text.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Verdict of one verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Holds,
    Violated,
    Undecided,
}

impl Status {
    /// Process exit code the command-line tool maps this verdict to.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Violated => 1,
            Status::Undecided => 3,
        }
    }

    /// Combines verdicts: any violation dominates, then any undecided.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Violated, _) | (_, Violated) => Violated,
            (Undecided, _) | (_, Undecided) => Undecided,
            (Holds, Holds) => Holds,
        }
    }
}

/// A concrete graph supporting or refuting a claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub note: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
}

/// One row of the extremal table: the graph attaining a bound at one
/// parameter point, with its certified radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRow {
    pub n: usize,
    /// Second parameter axis (girth, diameter) when the claim has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<usize>,
    pub role: String,
    pub graph6: String,
    pub radius: f64,
    /// Convergence certificate: the residual bound (or isolation width)
    /// under which `radius` was computed.
    pub certificate: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The numeric trust boundaries a report's verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Residual bound requested from the iterative solver.
    pub residual: f64,
    /// Isolation width used when the exact oracle settled comparisons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_width: Option<f64>,
    /// Gap below which two floating-point radii are treated as tied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tie_gap: Option<f64>,
}

/// Complete outcome of one verification operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    /// What was checked, stated as a property of graphs.
    pub claim: String,
    /// The parameter range actually covered.
    pub range: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub extremal_table: Vec<ExtremalRow>,
    pub tolerances: Tolerances,
    /// Wall-clock duration; absent unless the caller asked for timings, so
    /// that reports stay byte-identical across runs and thread counts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat CSV view of the extremal table, one line per row, floats printed
    /// exactly as in the JSON form.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("claim,range,status,n,param,role,graph6,radius,certificate,note\n");
        let status = match self.status {
            Status::Holds => "HOLDS",
            Status::Violated => "VIOLATED",
            Status::Undecided => "UNDECIDED",
        };
        for row in &self.extremal_table {
            let param = row.param.map_or(String::new(), |p| p.to_string());
            let note = row.note.as_deref().unwrap_or("");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                csv_field(&self.claim),
                csv_field(&self.range),
                status,
                row.n,
                param,
                csv_field(&row.role),
                csv_field(&row.graph6),
                fmt_float(row.radius),
                fmt_float(row.certificate),
                csv_field(note),
            ));
        }
        out
    }
}

/// Formats a float exactly as the JSON serializer does (shortest text that
/// round-trips), so the CSV and JSON views of one report agree to the digit.
pub fn fmt_float(x: f64) -> String {
    serde_json::to_string(&x).expect("finite float")
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ClaimReport {
        ClaimReport {
            claim: "test claim".into(),
            range: "n=4..6".into(),
            status: Status::Holds,
            witnesses: vec![Witness {
                graph6: "Bw".into(),
                note: "triangle".into(),
                values: BTreeMap::from([("radius".into(), 2.0)]),
            }],
            extremal_table: vec![ExtremalRow {
                n: 4,
                param: None,
                role: "minimizer".into(),
                graph6: "Cr".into(),
                radius: 2.5615528128088303,
                certificate: 1e-12,
                note: Some("gap=0.25, second=Cs".into()),
            }],
            tolerances: Tolerances {
                residual: 1e-12,
                exact_width: Some(1e-12),
                tie_gap: None,
            },
            runtime_ms: None,
        }
    }

    #[test]
    fn json_roundtrip_preserves_report() {
        let report = sample();
        let json = report.to_json();
        let back: ClaimReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(json.contains("\"HOLDS\""));
        assert!(!json.contains("runtime_ms"), "absent timing is omitted");
    }

    #[test]
    fn csv_flattens_rows_and_quotes_commas() {
        let csv = sample().to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "claim,range,status,n,param,role,graph6,radius,certificate,note"
        );
        let row = lines.next().unwrap();
        assert!(row.contains("\"gap=0.25, second=Cs\""));
        assert!(row.contains("2.5615528128088303"));
    }

    #[test]
    fn csv_floats_match_json_floats() {
        let report = sample();
        let json = report.to_json();
        assert!(json.contains(&fmt_float(report.extremal_table[0].radius)));
        let csv = report.to_csv();
        assert!(csv.contains(&fmt_float(report.extremal_table[0].radius)));
    }

    #[test]
    fn status_combination_and_exit_codes() {
        assert_eq!(Status::Holds.combine(Status::Undecided), Status::Undecided);
        assert_eq!(
            Status::Undecided.combine(Status::Violated),
            Status::Violated
        );
        assert_eq!(Status::Holds.combine(Status::Holds), Status::Holds);
        assert_eq!(Status::Holds.exit_code(), 0);
        assert_eq!(Status::Violated.exit_code(), 1);
        assert_eq!(Status::Undecided.exit_code(), 3);
    }
}
