use std::fmt::Write as _;

use clap::ValueEnum;
use fullsupport::counting::CensusReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

pub fn render(reports: &[CensusReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => markdown(reports),
        OutputFormat::Csv => csv_table(reports),
        OutputFormat::Json => json(reports),
    }
}

fn markdown(reports: &[CensusReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", CensusReport::FIELDS.join(" | "));
    let rule: Vec<&str> = CensusReport::FIELDS.iter().map(|_| "---").collect();
    let _ = writeln!(out, "| {} |", rule.join(" | "));
    for r in reports {
        let cells: Vec<String> = r
            .values()
            .into_iter()
            .map(|v| if v.is_empty() { "-".to_string() } else { v })
            .collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn csv_table(reports: &[CensusReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CensusReport::FIELDS)
        .expect("writing to memory");
    for r in reports {
        writer.write_record(r.values()).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn json(reports: &[CensusReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// Key/value rendering of a single report for `info`.
pub fn detail(report: &CensusReport) -> String {
    let mut out = String::new();
    for (key, value) in CensusReport::FIELDS.iter().zip(report.values()) {
        let value = if value.is_empty() {
            "-".to_string()
        } else {
            value
        };
        let _ = writeln!(out, "{key:>13}: {value}");
    }
    out
}
