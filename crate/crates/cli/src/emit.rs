//! Deterministic rendering of results: fixed-width text, CSV and a
//! structured (JSON) form. Identical inputs always produce identical
//! bytes: stable orderings, fixed decimal formatting, scores as integers,
//! medians and averages with at most one decimal.

use serde::{Deserialize, Serialize};

use luxcil_core::numeric::{format_one_decimal, format_score_value};
use luxcil_core::{
    CilAssignment, DeviationLedger, HealthScheme, IntervalBound, MedianVector, ParameterKind,
    RadarSeries, SchemeBook, ScoreTable, SurveyReport,
};

use crate::error::{AppError, AppResult};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Structured,
}

impl OutputFormat {
    pub fn from_token(token: &str) -> AppResult<OutputFormat> {
        match token.trim().to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "structured" => Ok(OutputFormat::Structured),
            other => Err(AppError::validation(format!(
                "unsupported format token \"{other}\"; expected table, csv or structured"
            ))),
        }
    }
}

/// Left-align rows into fixed-width columns, two spaces apart.
pub fn align_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_join(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| {
            if f.contains(',') || f.contains('"') || f.contains('\n') {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// CIL assignment listing
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct AssignmentDoc {
    environment: String,
    objective: String,
    age_groups: String,
    mtoe_class: String,
    cil: String,
    derivation: String,
}

fn assignment_docs(assignments: &[CilAssignment]) -> Vec<AssignmentDoc> {
    assignments
        .iter()
        .map(|a| AssignmentDoc {
            environment: a.environment_id.clone(),
            objective: a.objective.clone(),
            age_groups: a.age_groups.to_string(),
            mtoe_class: a.mtoe_class.to_string(),
            cil: a.cil.to_string(),
            derivation: if a.overridden { "override".into() } else { "derived".into() },
        })
        .collect()
}

pub fn render_assignments(assignments: &[CilAssignment], format: OutputFormat) -> String {
    let docs = assignment_docs(assignments);
    match format {
        OutputFormat::Structured => to_json(&docs),
        OutputFormat::Table | OutputFormat::Csv => {
            let header = ["environment", "objective", "age_groups", "mtoe", "cil", "derivation"];
            let mut rows: Vec<Vec<String>> =
                vec![header.iter().map(|s| s.to_string()).collect()];
            for d in &docs {
                rows.push(vec![
                    d.environment.clone(),
                    d.objective.clone(),
                    d.age_groups.clone(),
                    d.mtoe_class.clone(),
                    d.cil.clone(),
                    d.derivation.clone(),
                ]);
            }
            if format == OutputFormat::Table {
                align_table(&rows)
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Scheme book listing
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct BoundDoc {
    lower: Option<f64>,
    lower_closed: bool,
    upper: Option<f64>,
    upper_closed: bool,
}

#[derive(Debug, Serialize)]
struct BandDoc {
    environment: String,
    parameter: String,
    cil: String,
    hs: u8,
    intervals: Vec<BoundDoc>,
}

fn bound_doc(lower: IntervalBound, upper: IntervalBound) -> BoundDoc {
    BoundDoc {
        lower: lower.value(),
        lower_closed: lower.is_closed(),
        upper: upper.value(),
        upper_closed: upper.is_closed(),
    }
}

fn anchors_text(scheme: &HealthScheme) -> String {
    let fmt = |v: Option<f64>| v.map(|x| format!("{x}")).unwrap_or_else(|| "-".into());
    format!("{}/{}", fmt(scheme.targets().standard), fmt(scheme.targets().target))
}

fn band_text(scheme: &HealthScheme, hs: luxcil_core::HealthStatus) -> String {
    let set = scheme.band(hs);
    if set.is_empty() {
        return "-".into();
    }
    set.intervals()
        .iter()
        .map(|iv| iv.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn render_scheme_book(
    book: &SchemeBook,
    filter: Option<ParameterKind>,
    deviations: Option<&DeviationLedger>,
    format: OutputFormat,
) -> String {
    let selected = |p: ParameterKind| filter.map(|f| f == p).unwrap_or(true);
    match format {
        OutputFormat::Structured => {
            #[derive(Serialize)]
            struct SchemeDoc<'a> {
                bands: Vec<BandDoc>,
                #[serde(skip_serializing_if = "Option::is_none")]
                deviations: Option<Vec<DeviationDoc<'a>>>,
            }
            let mut bands = Vec::new();
            for entry in book.entries() {
                for scheme in entry.schemes() {
                    if !selected(scheme.parameter()) {
                        continue;
                    }
                    for (hs, set) in scheme.bands() {
                        bands.push(BandDoc {
                            environment: entry.environment_id.clone(),
                            parameter: scheme.parameter().token().into(),
                            cil: scheme.cil().to_string(),
                            hs: hs.index(),
                            intervals: set
                                .intervals()
                                .iter()
                                .map(|iv| bound_doc(iv.lower(), iv.upper()))
                                .collect(),
                        });
                    }
                }
            }
            let doc = SchemeDoc { bands, deviations: deviations.map(deviation_docs) };
            to_json(&doc)
        }
        OutputFormat::Table | OutputFormat::Csv => {
            let header =
                ["environment", "parameter", "cil", "s/t", "hs1", "hs2", "hs3", "hs4", "hs5"];
            let mut rows: Vec<Vec<String>> =
                vec![header.iter().map(|s| s.to_string()).collect()];
            for entry in book.entries() {
                for scheme in entry.schemes() {
                    if !selected(scheme.parameter()) {
                        continue;
                    }
                    let mut row = vec![
                        entry.environment_id.clone(),
                        scheme.parameter().token().into(),
                        scheme.cil().to_string(),
                        anchors_text(scheme),
                    ];
                    for hs in luxcil_core::HealthStatus::ALL {
                        row.push(band_text(scheme, hs));
                    }
                    rows.push(row);
                }
            }
            let mut out = if format == OutputFormat::Table {
                align_table(&rows)
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            };
            if let Some(ledger) = deviations {
                out.push('\n');
                out.push_str(&render_deviations(ledger, format));
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
struct DeviationDoc<'a> {
    table: &'a str,
    cell: &'a str,
    printed: &'a str,
    generated: &'a str,
    resolution: &'a str,
}

fn deviation_docs(ledger: &DeviationLedger) -> Vec<DeviationDoc<'_>> {
    ledger
        .entries()
        .iter()
        .map(|e| DeviationDoc {
            table: e.table.token(),
            cell: &e.cell,
            printed: &e.printed,
            generated: &e.generated,
            resolution: &e.resolution,
        })
        .collect()
}

pub fn render_deviations(ledger: &DeviationLedger, format: OutputFormat) -> String {
    match format {
        OutputFormat::Structured => to_json(&deviation_docs(ledger)),
        OutputFormat::Table | OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = vec![vec![
                "table".into(),
                "cell".into(),
                "printed".into(),
                "generated".into(),
                "resolution".into(),
            ]];
            for e in ledger.entries() {
                rows.push(vec![
                    e.table.token().into(),
                    e.cell.clone(),
                    e.printed.clone(),
                    e.generated.clone(),
                    e.resolution.clone(),
                ]);
            }
            if format == OutputFormat::Table {
                format!("deviations:\n{}", align_table(&rows))
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Score table + medians
// ---------------------------------------------------------------------------

/// Serialized form of a scored survey; the `compare` command reads these
/// back, so it round-trips through JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScoreDoc {
    pub site: String,
    pub survey: String,
    pub columns: Vec<String>,
    pub rows: Vec<ScoreDocRow>,
    pub medians: Vec<Option<f64>>,
    pub median_counts: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScoreDocRow {
    pub environment: String,
    pub position: String,
    pub scores: Vec<Option<u8>>,
}

impl ScoreDoc {
    pub fn new(table: &ScoreTable, medians: &MedianVector) -> ScoreDoc {
        ScoreDoc {
            site: table.site.clone(),
            survey: table.survey.clone(),
            columns: table.columns.iter().map(|p| p.label().to_string()).collect(),
            rows: table
                .rows
                .iter()
                .map(|r| ScoreDocRow {
                    environment: r.environment_id.clone(),
                    position: r.position.token().into(),
                    scores: r.scores.clone(),
                })
                .collect(),
            medians: medians.values.iter().map(|v| v.map(|(m, _)| m)).collect(),
            median_counts: medians.values.iter().map(|v| v.map_or(0, |(_, n)| n)).collect(),
        }
    }

    pub fn parameter_columns(&self) -> AppResult<Vec<ParameterKind>> {
        self.columns
            .iter()
            .map(|label| {
                ParameterKind::from_token(label).ok_or_else(|| {
                    AppError::validation(format!("unknown score column \"{label}\""))
                })
            })
            .collect()
    }

    pub fn median_vector(&self) -> AppResult<MedianVector> {
        Ok(MedianVector::from_medians(
            self.survey.clone(),
            self.parameter_columns()?,
            self.medians.clone(),
        ))
    }
}

fn score_cell(score: Option<u8>) -> String {
    score.map(|s| s.to_string()).unwrap_or_else(|| "/".into())
}

fn median_cell(median: Option<f64>) -> String {
    median.map(format_score_value).unwrap_or_else(|| "/".into())
}

pub fn render_scores(doc: &ScoreDoc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Structured => to_json(doc),
        OutputFormat::Table | OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            let mut header = vec!["environment".to_string(), "position".to_string()];
            header.extend(doc.columns.iter().cloned());
            rows.push(header);
            for row in &doc.rows {
                let mut cells = vec![row.environment.clone(), row.position.clone()];
                cells.extend(row.scores.iter().map(|s| score_cell(*s)));
                rows.push(cells);
            }
            let mut median_row = vec!["Median".to_string(), String::new()];
            median_row.extend(doc.medians.iter().map(|m| median_cell(*m)));
            rows.push(median_row);
            if format == OutputFormat::Table {
                format!("Survey {} (site {})\n{}", doc.survey, doc.site, align_table(&rows))
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Classification listing
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ClassifyDoc {
    pub site: String,
    pub survey: String,
    pub cells: Vec<ClassifyCellDoc>,
    pub missing: Vec<MissingDoc>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyCellDoc {
    pub environment: String,
    pub position: String,
    pub parameter: String,
    pub value: f64,
    pub status: String,
    pub score: u8,
    pub abnormal: bool,
    pub over_provisioned: bool,
}

#[derive(Debug, Serialize)]
pub struct MissingDoc {
    pub environment: String,
    pub position: String,
    pub count: usize,
}

pub fn render_classifications(doc: &ClassifyDoc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Structured => to_json(doc),
        OutputFormat::Table | OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = vec![vec![
                "environment".into(),
                "position".into(),
                "parameter".into(),
                "value".into(),
                "status".into(),
                "score".into(),
                "flags".into(),
            ]];
            for c in &doc.cells {
                let mut flags = Vec::new();
                if c.abnormal {
                    flags.push("abnormal");
                }
                if c.over_provisioned {
                    flags.push("over-provisioned");
                }
                rows.push(vec![
                    c.environment.clone(),
                    c.position.clone(),
                    c.parameter.clone(),
                    format!("{}", c.value),
                    c.status.clone(),
                    c.score.to_string(),
                    flags.join("+"),
                ]);
            }
            let mut out = if format == OutputFormat::Table {
                format!("Survey {} (site {})\n{}", doc.survey, doc.site, align_table(&rows))
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            };
            if !doc.missing.is_empty() && format == OutputFormat::Table {
                out.push_str("missing readings:\n");
                for m in &doc.missing {
                    out.push_str(&format!("  {} {}: {}\n", m.environment, m.position, m.count));
                }
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Comparison + radar
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct CompareDoc {
    pub columns: Vec<String>,
    pub medians: Vec<LabeledValues>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub average: Option<LabeledValues>,
    pub deltas: Vec<LabeledValues>,
    pub radar: Vec<RadarDoc>,
}

#[derive(Debug, Serialize)]
pub struct LabeledValues {
    pub label: String,
    pub values: Vec<Option<f64>>,
}

#[derive(Debug, Serialize)]
pub struct RadarDoc {
    pub label: String,
    pub axes: Vec<String>,
    pub values: Vec<f64>,
}

pub fn radar_doc(series: &RadarSeries) -> RadarDoc {
    RadarDoc {
        label: series.label.clone(),
        axes: series.axes.iter().map(|p| p.label().to_string()).collect(),
        values: series.values.clone(),
    }
}

fn delta_cell(value: Option<f64>) -> String {
    match value {
        None => "/".into(),
        Some(v) if v > 0.0 => format!("+{}", format_score_value(v)),
        Some(v) => format_score_value(v),
    }
}

pub fn render_compare(doc: &CompareDoc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Structured => to_json(doc),
        OutputFormat::Table | OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            let mut header = vec!["series".to_string()];
            header.extend(doc.columns.iter().cloned());
            rows.push(header);
            for m in &doc.medians {
                let mut row = vec![m.label.clone()];
                row.extend(m.values.iter().map(|v| median_cell(*v)));
                rows.push(row);
            }
            if let Some(avg) = &doc.average {
                let mut row = vec![avg.label.clone()];
                row.extend(avg.values.iter().map(|v| {
                    v.map(format_one_decimal).unwrap_or_else(|| "/".into())
                }));
                rows.push(row);
            }
            for d in &doc.deltas {
                let mut row = vec![d.label.clone()];
                row.extend(d.values.iter().map(|v| delta_cell(*v)));
                rows.push(row);
            }
            if format == OutputFormat::Table {
                align_table(&rows)
            } else {
                rows.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

pub fn render_report(report: &SurveyReport, format: OutputFormat) -> AppResult<String> {
    if format == OutputFormat::Structured {
        return Err(AppError::validation(
            "unsupported format token \"structured\" for reports; use table or csv".to_string(),
        ));
    }
    let mut sections: Vec<Vec<String>> = Vec::new();
    sections.push(vec![
        "section".into(),
        "environment".into(),
        "position".into(),
        "parameter".into(),
        "value".into(),
        "status".into(),
        "score".into(),
        "color".into(),
        "note".into(),
    ]);
    for row in &report.rows {
        for cell in &row.cells {
            sections.push(vec![
                "cell".into(),
                row.environment_id.clone(),
                row.position.token().into(),
                cell.parameter.label().into(),
                format!("{}", cell.value),
                cell.status.to_string(),
                cell.score.to_string(),
                cell.color.clone(),
                if cell.abnormal { "abnormal".into() } else { String::new() },
            ]);
        }
        if !row.missing.is_empty() {
            sections.push(vec![
                "missing".into(),
                row.environment_id.clone(),
                row.position.token().into(),
                row.missing
                    .iter()
                    .map(|p| p.label())
                    .collect::<Vec<_>>()
                    .join(";"),
                String::new(),
                String::new(),
                row.missing.len().to_string(),
                String::new(),
                String::new(),
            ]);
        }
    }
    for (p, median) in report.medians.columns.iter().zip(&report.medians.values) {
        sections.push(vec![
            "median".into(),
            String::new(),
            String::new(),
            p.label().into(),
            String::new(),
            String::new(),
            median.map(|(m, _)| format_score_value(m)).unwrap_or_else(|| "/".into()),
            String::new(),
            median.map(|(_, n)| format!("{n} values")).unwrap_or_default(),
        ]);
    }
    for a in &report.anomalies {
        sections.push(vec![
            "anomaly".into(),
            a.environment_id.clone(),
            a.position.token().into(),
            a.parameter.label().into(),
            format!("{}", a.value),
            String::new(),
            String::new(),
            String::new(),
            "outside domain".into(),
        ]);
    }
    for o in &report.over_provision {
        sections.push(vec![
            "over-provision".into(),
            o.environment_id.clone(),
            o.position.token().into(),
            o.parameter.label().into(),
            format!("{}", o.value),
            String::new(),
            String::new(),
            String::new(),
            format!("exceeds target {} by {}%", o.target, format_one_decimal(o.exceedance_pct)),
        ]);
    }
    let low = &report.low_light;
    sections.push(vec![
        "summary".into(),
        String::new(),
        String::new(),
        "Lux".into(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        format!(
            "rows at HS1: {} of {} ({}%); at HS2: {}; at HS1 or HS2: {} of {} ({}%)",
            low.hs1_rows,
            low.total_rows,
            format_one_decimal(low.hs1_fraction() * 100.0),
            low.hs2_rows,
            low.hs1_rows + low.hs2_rows,
            low.total_rows,
            format_one_decimal(low.hs1_or_hs2_fraction() * 100.0),
        ),
    ]);

    Ok(if format == OutputFormat::Table {
        format!(
            "Assessment report: survey {} (site {})\n{}",
            report.survey,
            report.site,
            align_table(&sections)
        )
    } else {
        sections.iter().map(|r| csv_join(r)).collect::<Vec<_>>().join("\n") + "\n"
    })
}
