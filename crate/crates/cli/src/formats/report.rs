//! Recognition-report output: a JSON document and the benchmark CSV.
//!
//! Everything except the two timing columns is deterministic for a given
//! machine, text and chunk count, and the CSV writer keeps it that way
//! (fixed column order, fixed float formatting).

use serde::Serialize;

use ridfa_core::RecognitionReport;

/// JSON shape of one report.
#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub accepted: bool,
    pub variant: String,
    pub chunk_count: usize,
    pub per_chunk_transitions: Vec<u64>,
    pub total_transitions: u64,
    pub reach_ms: f64,
    pub join_ms: f64,
}

impl From<&RecognitionReport> for ReportDoc {
    fn from(report: &RecognitionReport) -> ReportDoc {
        ReportDoc {
            accepted: report.accepted,
            variant: report.variant.name().to_string(),
            chunk_count: report.chunk_count,
            per_chunk_transitions: report.per_chunk_transitions.clone(),
            total_transitions: report.total_transitions,
            reach_ms: report.reach_duration.as_secs_f64() * 1e3,
            join_ms: report.join_duration.as_secs_f64() * 1e3,
        }
    }
}

pub fn report_json(report: &RecognitionReport) -> String {
    let mut out =
        serde_json::to_string_pretty(&ReportDoc::from(report)).expect("report serialization");
    out.push('\n');
    out
}

/// Human-readable report for the terminal.
pub fn report_text(report: &RecognitionReport) -> String {
    let per_chunk: Vec<String> =
        report.per_chunk_transitions.iter().map(u64::to_string).collect();
    format!(
        "verdict:     {}\nvariant:     {}\nchunks:      {}\ntransitions: {} total [{}]\nreach:       {:.3} ms\njoin:        {:.3} ms\n",
        if report.accepted { "accept" } else { "reject" },
        report.variant,
        report.chunk_count,
        report.total_transitions,
        per_chunk.join(" "),
        report.reach_duration.as_secs_f64() * 1e3,
        report.join_duration.as_secs_f64() * 1e3,
    )
}

/// One CSV row of a benchmark sweep.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub benchmark: String,
    pub variant: String,
    pub chunks: usize,
    pub text_length: usize,
    pub transitions_total: u64,
    pub transitions_per_chunk: Vec<u64>,
    pub accepted: bool,
    pub reach_ms: f64,
    pub join_ms: f64,
    /// DFA-over-RID transition ratio for this (benchmark, chunks, length)
    /// group, when both variants ran.
    pub ratio_dfa_over_rid: Option<f64>,
    pub ratio_nfa_over_rid: Option<f64>,
}

pub const CSV_HEADER: &str = "benchmark,variant,chunks,text_length,transitions_total,transitions_per_chunk,accepted,reach_ms,join_ms,ratio_dfa_over_rid,ratio_nfa_over_rid";

/// Column indexes of the wall-clock fields, for consumers that need to
/// compare sweeps modulo timing noise.
pub const CSV_TIMING_COLUMNS: [usize; 2] = [7, 8];

pub fn csv_row(row: &BenchRow) -> String {
    let per_chunk: Vec<String> = row.transitions_per_chunk.iter().map(u64::to_string).collect();
    let ratio = |r: Option<f64>| r.map_or(String::new(), |v| format!("{v:.6}"));
    format!(
        "{},{},{},{},{},{},{},{:.3},{:.3},{},{}",
        row.benchmark,
        row.variant,
        row.chunks,
        row.text_length,
        row.transitions_total,
        per_chunk.join("|"),
        row.accepted,
        row.reach_ms,
        row.join_ms,
        ratio(row.ratio_dfa_over_rid),
        ratio(row.ratio_nfa_over_rid),
    )
}

pub fn csv_document(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_row(row));
        out.push('\n');
    }
    out
}
