//! Report and radar-series data.
//!
//! Everything here is plot-agnostic: labels, numbers and colour tokens.
//! Text and file rendering live in the companion crate.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::RecordAssessment;
use crate::numeric::snap;
use crate::param::ParameterKind;
use crate::scheme::SchemeBook;
use crate::score::{average_across, median_by_parameter, AggregateError, MedianVector, ScoreTable};
use crate::status::HealthStatus;
use crate::survey::{Position, Survey};

/// Colour tokens available to palettes.
pub const PALETTE: [&str; 7] =
    ["red", "orange", "yellow", "green", "dark-blue", "dark-green", "grey"];

/// Health status -> colour token mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorClass {
    tokens: [String; 5],
    /// Colour used instead of the HS5 token on over-supply parameters.
    over_supply_top: String,
}

/// Palette configuration failure.
#[derive(Debug, Clone, PartialEq)]
pub enum PaletteError {
    UnknownToken { token: String },
    NotInjective { token: String },
}

impl fmt::Display for PaletteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaletteError::UnknownToken { token } => {
                write!(f, "unknown colour token \"{token}\"; palette: {PALETTE:?}")
            }
            PaletteError::NotInjective { token } => {
                write!(f, "colour token \"{token}\" is mapped to more than one status")
            }
        }
    }
}

impl core::error::Error for PaletteError {}

impl Default for ColorClass {
    /// Worst to best: red, orange, yellow, green, dark-blue. The top band
    /// of over-supply parameters renders dark-green instead, signalling
    /// waste rather than excellence.
    fn default() -> ColorClass {
        ColorClass {
            tokens: [
                "red".to_owned(),
                "orange".to_owned(),
                "yellow".to_owned(),
                "green".to_owned(),
                "dark-blue".to_owned(),
            ],
            over_supply_top: "dark-green".to_owned(),
        }
    }
}

impl ColorClass {
    pub fn new(tokens: [&str; 5], over_supply_top: &str) -> Result<ColorClass, PaletteError> {
        for t in tokens.iter().chain([&over_supply_top]) {
            if !PALETTE.contains(t) {
                return Err(PaletteError::UnknownToken { token: (*t).to_owned() });
            }
        }
        for (i, t) in tokens.iter().enumerate() {
            if tokens[..i].contains(t) {
                return Err(PaletteError::NotInjective { token: (*t).to_owned() });
            }
        }
        Ok(ColorClass {
            tokens: tokens.map(|t| t.to_owned()),
            over_supply_top: over_supply_top.to_owned(),
        })
    }

    pub fn token(&self, status: HealthStatus) -> &str {
        &self.tokens[(status.index() - 1) as usize]
    }

    /// Colour for a classified cell, honouring the over-supply override.
    pub fn cell_token(&self, parameter: ParameterKind, status: HealthStatus) -> &str {
        if parameter.over_supply_at_top() && status == HealthStatus::Hs5 {
            &self.over_supply_top
        } else {
            self.token(status)
        }
    }
}

/// One cell of a report row.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportCell {
    pub parameter: ParameterKind,
    pub value: f64,
    pub status: HealthStatus,
    pub score: u8,
    pub color: String,
    pub abnormal: bool,
}

/// One report row: a record with its classified cells.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub environment_id: String,
    pub position: Position,
    pub cells: Vec<ReportCell>,
    pub missing: Vec<ParameterKind>,
}

/// An abnormal reading worth flagging.
#[derive(Debug, Clone, PartialEq)]
pub struct Anomaly {
    pub environment_id: String,
    pub position: Position,
    pub parameter: ParameterKind,
    pub value: f64,
}

/// A top-band reading on an over-supply parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct OverProvisionEntry {
    pub environment_id: String,
    pub position: Position,
    pub parameter: ParameterKind,
    pub value: f64,
    pub target: f64,
    /// `(value - target) / target`, as a percentage.
    pub exceedance_pct: f64,
}

/// Count of rows whose illuminance sits below standard.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LowLightSummary {
    pub hs1_rows: usize,
    pub hs2_rows: usize,
    pub total_rows: usize,
}

impl LowLightSummary {
    pub fn hs1_fraction(&self) -> f64 {
        if self.total_rows == 0 {
            0.0
        } else {
            self.hs1_rows as f64 / self.total_rows as f64
        }
    }

    pub fn hs1_or_hs2_fraction(&self) -> f64 {
        if self.total_rows == 0 {
            0.0
        } else {
            (self.hs1_rows + self.hs2_rows) as f64 / self.total_rows as f64
        }
    }
}

/// Full assessment report of one survey.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyReport {
    pub site: String,
    pub survey: String,
    pub rows: Vec<ReportRow>,
    pub medians: MedianVector,
    pub anomalies: Vec<Anomaly>,
    pub over_provision: Vec<OverProvisionEntry>,
    pub low_light: LowLightSummary,
}

/// Build a report from a survey, its classifications and its score table.
///
/// Repeated generation over the same inputs is identical; nothing here
/// mutates its inputs.
pub fn build_report(
    survey: &Survey,
    assessments: &[RecordAssessment],
    table: &ScoreTable,
    book: &SchemeBook,
    colors: &ColorClass,
) -> SurveyReport {
    let mut rows = Vec::new();
    let mut anomalies = Vec::new();
    let mut over_provision = Vec::new();
    let mut low_light = LowLightSummary::default();

    for (record, assessment) in survey.records.iter().zip(assessments) {
        let mut cells = Vec::new();
        for (parameter, classification) in &assessment.results {
            let value = record
                .value(*parameter)
                .and_then(|v| v.numeric())
                .expect("classified parameters carry numeric readings");
            cells.push(ReportCell {
                parameter: *parameter,
                value,
                status: classification.status,
                score: classification.status.index(),
                color: colors.cell_token(*parameter, classification.status).to_owned(),
                abnormal: classification.abnormal,
            });
            if classification.abnormal {
                anomalies.push(Anomaly {
                    environment_id: record.environment_id.clone(),
                    position: record.position,
                    parameter: *parameter,
                    value,
                });
            }
            if classification.over_provisioned {
                let target = book
                    .for_environment(&record.environment_id)
                    .map(|schemes| schemes.scheme(*parameter).targets())
                    .and_then(|t| t.target)
                    .unwrap_or(0.0);
                let exceedance_pct = if target > 0.0 {
                    snap((value - target) / target * 100.0)
                } else {
                    0.0
                };
                over_provision.push(OverProvisionEntry {
                    environment_id: record.environment_id.clone(),
                    position: record.position,
                    parameter: *parameter,
                    value,
                    target,
                    exceedance_pct,
                });
            }
            if *parameter == ParameterKind::Illuminance {
                low_light.total_rows += 1;
                match classification.status {
                    HealthStatus::Hs1 => low_light.hs1_rows += 1,
                    HealthStatus::Hs2 => low_light.hs2_rows += 1,
                    _ => {}
                }
            }
        }
        rows.push(ReportRow {
            environment_id: record.environment_id.clone(),
            position: record.position,
            cells,
            missing: assessment.missing.clone(),
        });
    }

    SurveyReport {
        site: survey.site.clone(),
        survey: survey.label.clone(),
        rows,
        medians: median_by_parameter(table),
        anomalies,
        over_provision,
        low_light,
    }
}

/// One radar series: a label and a value per fixed axis.
#[derive(Debug, Clone, PartialEq)]
pub struct RadarSeries {
    pub label: String,
    pub axes: Vec<ParameterKind>,
    pub values: Vec<f64>,
}

/// Radar data error.
#[derive(Debug, Clone, PartialEq)]
pub enum RadarError {
    /// A vector does not cover the six reported axes.
    AxisMismatch { label: String },
    Aggregate(AggregateError),
}

impl fmt::Display for RadarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadarError::AxisMismatch { label } => {
                write!(f, "series \"{label}\" does not cover all six radar axes")
            }
            RadarError::Aggregate(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RadarError {}

/// Turn median vectors into radar series over the six reported axes.
///
/// With `include_average` an extra series labelled "average" carries the
/// per-axis mean of the inputs.
pub fn radar_data(
    medians: &[MedianVector],
    include_average: bool,
) -> Result<Vec<RadarSeries>, RadarError> {
    let axes: Vec<ParameterKind> = ParameterKind::REPORTED.to_vec();
    let mut series = Vec::with_capacity(medians.len() + 1);
    for m in medians {
        let values: Option<Vec<f64>> = axes.iter().map(|p| m.get(*p)).collect();
        let values = values.ok_or_else(|| RadarError::AxisMismatch { label: m.label.clone() })?;
        series.push(RadarSeries { label: m.label.clone(), axes: axes.clone(), values });
    }
    if include_average {
        let avg = average_across(medians).map_err(RadarError::Aggregate)?;
        let values: Option<Vec<f64>> = axes.iter().map(|p| avg.get(*p)).collect();
        let values = values.ok_or_else(|| RadarError::AxisMismatch {
            label: "average".to_owned(),
        })?;
        series.push(RadarSeries { label: "average".to_owned(), axes, values });
    }
    Ok(series)
}
