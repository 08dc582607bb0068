//! Scores, medians and cross-survey averages.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::RecordAssessment;
use crate::param::ParameterKind;
use crate::status::HealthStatus;
use crate::survey::{Position, Survey};

/// Health status to score: the identity on the ordinal index.
pub fn hs_to_score(status: HealthStatus) -> u8 {
    status.index()
}

/// Scores of one measurement row. `None` cells are missing readings.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRow {
    pub environment_id: String,
    pub position: Position,
    pub scores: Vec<Option<u8>>,
}

/// Score matrix of one survey: rows in measurement order, columns fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    pub site: String,
    pub survey: String,
    pub columns: Vec<ParameterKind>,
    pub rows: Vec<ScoreRow>,
}

impl ScoreTable {
    pub fn column_index(&self, parameter: ParameterKind) -> Option<usize> {
        self.columns.iter().position(|p| *p == parameter)
    }

    /// Present scores of one column, in row order.
    pub fn column_scores(&self, parameter: ParameterKind) -> Vec<u8> {
        let Some(idx) = self.column_index(parameter) else {
            return Vec::new();
        };
        self.rows.iter().filter_map(|r| r.scores[idx]).collect()
    }
}

/// Build the score table for a survey from its per-record classifications.
///
/// `assessments` must be in record order, one entry per record. Columns
/// default to the six reported parameters; pass a custom list to widen.
pub fn survey_scores(
    survey: &Survey,
    assessments: &[RecordAssessment],
    columns: &[ParameterKind],
) -> ScoreTable {
    let mut rows = Vec::with_capacity(survey.records.len());
    for (record, assessment) in survey.records.iter().zip(assessments) {
        let scores = columns
            .iter()
            .map(|p| assessment.get(*p).map(|c| hs_to_score(c.status)))
            .collect();
        rows.push(ScoreRow {
            environment_id: record.environment_id.clone(),
            position: record.position,
            scores,
        });
    }
    ScoreTable {
        site: survey.site.clone(),
        survey: survey.label.clone(),
        columns: columns.to_vec(),
        rows,
    }
}

/// Median score per parameter. Absent when a column has no present value.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianVector {
    pub label: String,
    pub columns: Vec<ParameterKind>,
    /// `(median, contributing count)` per column.
    pub values: Vec<Option<(f64, usize)>>,
}

impl MedianVector {
    pub fn get(&self, parameter: ParameterKind) -> Option<f64> {
        let idx = self.columns.iter().position(|p| *p == parameter)?;
        self.values[idx].map(|(m, _)| m)
    }

    /// Construct directly from per-column medians; `None` marks absence.
    pub fn from_medians(
        label: String,
        columns: Vec<ParameterKind>,
        medians: Vec<Option<f64>>,
    ) -> MedianVector {
        let values = medians.into_iter().map(|m| m.map(|v| (v, 1))).collect();
        MedianVector { label, columns, values }
    }
}

/// Arithmetic median: mean of the two middle values for even counts.
fn median_of(scores: &mut Vec<u8>) -> Option<(f64, usize)> {
    if scores.is_empty() {
        return None;
    }
    scores.sort_unstable();
    let n = scores.len();
    let median = if n % 2 == 1 {
        scores[n / 2] as f64
    } else {
        (scores[n / 2 - 1] as f64 + scores[n / 2] as f64) / 2.0
    };
    Some((median, n))
}

/// Per-column medians of a score table. Missing cells are excluded, not
/// zero-filled; empty columns come back absent.
pub fn median_by_parameter(table: &ScoreTable) -> MedianVector {
    let values = table
        .columns
        .iter()
        .map(|p| {
            let mut scores = table.column_scores(*p);
            median_of(&mut scores)
        })
        .collect();
    MedianVector {
        label: table.survey.clone(),
        columns: table.columns.clone(),
        values,
    }
}

/// Mean of per-survey medians, one value per parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct AverageVector {
    pub columns: Vec<ParameterKind>,
    pub values: Vec<Option<f64>>,
}

impl AverageVector {
    pub fn get(&self, parameter: ParameterKind) -> Option<f64> {
        let idx = self.columns.iter().position(|p| *p == parameter)?;
        self.values[idx]
    }
}

/// Aggregation errors.
#[derive(Debug, Clone, PartialEq)]
pub enum AggregateError {
    /// No vectors supplied.
    Empty,
    /// Vectors disagree on their parameter axes.
    AxisMismatch,
}

impl fmt::Display for AggregateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AggregateError::Empty => write!(f, "need at least one median vector"),
            AggregateError::AxisMismatch => write!(f, "median vectors cover different parameters"),
        }
    }
}

impl core::error::Error for AggregateError {}

/// Arithmetic mean of medians per parameter. Absent entries are excluded
/// per parameter; a parameter absent everywhere stays absent.
pub fn average_across(medians: &[MedianVector]) -> Result<AverageVector, AggregateError> {
    let first = medians.first().ok_or(AggregateError::Empty)?;
    if medians.iter().any(|m| m.columns != first.columns) {
        return Err(AggregateError::AxisMismatch);
    }
    let values = first
        .columns
        .iter()
        .enumerate()
        .map(|(idx, _)| {
            let present: Vec<f64> = medians
                .iter()
                .filter_map(|m| m.values[idx].map(|(v, _)| v))
                .collect();
            if present.is_empty() {
                None
            } else {
                Some(present.iter().sum::<f64>() / present.len() as f64)
            }
        })
        .collect();
    Ok(AverageVector { columns: first.columns.clone(), values })
}

/// Signed per-parameter deltas `b - a`. Absent on either side stays absent.
pub fn compare_series(
    a: &MedianVector,
    b: &MedianVector,
) -> Result<Vec<(ParameterKind, Option<f64>)>, AggregateError> {
    if a.columns != b.columns {
        return Err(AggregateError::AxisMismatch);
    }
    Ok(a.columns
        .iter()
        .enumerate()
        .map(|(idx, p)| {
            let delta = match (a.values[idx], b.values[idx]) {
                (Some((va, _)), Some((vb, _))) => Some(vb - va),
                _ => None,
            };
            (*p, delta)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::borrow::ToOwned;
    use alloc::vec;

    fn table(rows: Vec<Vec<Option<u8>>>) -> ScoreTable {
        ScoreTable {
            site: "X".to_owned(),
            survey: "X_Test".to_owned(),
            columns: ParameterKind::REPORTED.to_vec(),
            rows: rows
                .into_iter()
                .map(|scores| ScoreRow {
                    environment_id: "env".to_owned(),
                    position: Position::Unspecified,
                    scores,
                })
                .collect(),
        }
    }

    fn medians(label: &str, values: [Option<f64>; 6]) -> MedianVector {
        MedianVector::from_medians(
            label.to_owned(),
            ParameterKind::REPORTED.to_vec(),
            values.to_vec(),
        )
    }

    #[test]
    fn hs_to_score_is_ordinal_identity() {
        assert_eq!(hs_to_score(HealthStatus::Hs5), 5);
        assert_eq!(hs_to_score(HealthStatus::Hs1), 1);
        assert_eq!(hs_to_score(HealthStatus::Hs3), 3);
        let mut last = 0;
        for hs in HealthStatus::ALL {
            let s = hs_to_score(hs);
            assert!(s > last);
            last = s;
        }
    }

    #[test]
    fn median_excludes_missing_and_marks_empty_columns() {
        let t = table(vec![
            vec![Some(1), Some(5), None, Some(2), None, None],
            vec![Some(3), Some(5), None, Some(4), None, None],
            vec![Some(2), Some(5), None, None, None, None],
        ]);
        let m = median_by_parameter(&t);
        assert_eq!(m.get(ParameterKind::Illuminance), Some(2.0));
        assert_eq!(m.get(ParameterKind::R9), Some(5.0));
        assert_eq!(m.get(ParameterKind::Cct), None);
        // Even count: mean of the two middle values.
        assert_eq!(m.get(ParameterKind::Duv), Some(3.0));
        assert_eq!(m.values[0], Some((2.0, 3)));
    }

    #[test]
    fn single_row_table_medians_are_that_row() {
        let t = table(vec![vec![Some(4), Some(1), Some(3), Some(5), Some(5), Some(2)]]);
        let m = median_by_parameter(&t);
        assert_eq!(m.get(ParameterKind::Illuminance), Some(4.0));
        assert_eq!(m.get(ParameterKind::Eml), Some(2.0));
    }

    #[test]
    fn empty_table_has_absent_medians() {
        let t = table(vec![]);
        let m = median_by_parameter(&t);
        assert!(m.values.iter().all(Option::is_none));
    }

    #[test]
    fn averages_match_hand_computation() {
        let rows = [
            medians("G", [Some(1.0), Some(1.0), Some(3.0), Some(4.0), Some(5.0), Some(1.0)]),
            medians("S1", [Some(1.0), Some(5.0), Some(3.0), Some(4.0), Some(5.0), Some(2.0)]),
            medians("S2", [Some(1.0), Some(5.0), Some(3.0), Some(5.0), Some(5.0), Some(1.0)]),
            medians("C1", [Some(4.0), Some(5.0), Some(5.0), Some(4.0), Some(5.0), Some(4.0)]),
            medians("C2", [Some(1.0), Some(3.0), Some(3.0), Some(4.0), Some(5.0), Some(1.0)]),
        ];
        let avg = average_across(&rows).unwrap();
        assert_eq!(avg.get(ParameterKind::Illuminance), Some(1.6));
        assert_eq!(avg.get(ParameterKind::R9), Some(3.8));
        assert_eq!(avg.get(ParameterKind::Cct), Some(3.4));
        assert_eq!(avg.get(ParameterKind::Duv), Some(4.2));
        assert_eq!(avg.get(ParameterKind::Svm), Some(5.0));
        assert_eq!(avg.get(ParameterKind::Eml), Some(1.8));
    }

    #[test]
    fn average_of_identical_vectors_is_identity() {
        let v = medians("A", [Some(3.0); 6]);
        let avg = average_across(&[v.clone(), v.clone(), v]).unwrap();
        assert!(avg.values.iter().all(|x| *x == Some(3.0)));
        assert!(matches!(average_across(&[]), Err(AggregateError::Empty)));
    }

    #[test]
    fn absent_parameters_are_excluded_per_parameter() {
        let a = medians("A", [Some(2.0), None, Some(4.0), Some(4.0), Some(5.0), None]);
        let b = medians("B", [Some(4.0), Some(3.0), Some(2.0), Some(4.0), Some(5.0), None]);
        let avg = average_across(&[a, b]).unwrap();
        assert_eq!(avg.get(ParameterKind::Illuminance), Some(3.0));
        assert_eq!(avg.get(ParameterKind::R9), Some(3.0));
        assert_eq!(avg.get(ParameterKind::Eml), None);
    }

    #[test]
    fn series_deltas() {
        let mar = medians("C_Mar", [Some(4.0), Some(5.0), Some(5.0), Some(4.0), Some(5.0), Some(4.0)]);
        let oct = medians("C_Oct", [Some(1.0), Some(3.0), Some(3.0), Some(4.0), Some(5.0), Some(1.0)]);
        let deltas = compare_series(&mar, &oct).unwrap();
        assert_eq!(deltas[0], (ParameterKind::Illuminance, Some(-3.0)));
        assert_eq!(deltas[3], (ParameterKind::Duv, Some(0.0)));

        let same = compare_series(&mar, &mar).unwrap();
        assert!(same.iter().all(|(_, d)| *d == Some(0.0)));

        let s_mar = medians("S_Mar", [Some(1.0), Some(5.0), Some(3.0), Some(4.0), Some(5.0), Some(2.0)]);
        let s_oct = medians("S_Oct", [Some(1.0), Some(5.0), Some(3.0), Some(5.0), Some(5.0), Some(1.0)]);
        let deltas = compare_series(&s_mar, &s_oct).unwrap();
        assert_eq!(deltas[3], (ParameterKind::Duv, Some(1.0)));
    }

    #[test]
    fn median_bounded_by_column_extremes() {
        let t = table(vec![
            vec![Some(2), None, None, None, None, None],
            vec![Some(5), None, None, None, None, None],
            vec![Some(1), None, None, None, None, None],
            vec![Some(4), None, None, None, None, None],
        ]);
        let m = median_by_parameter(&t);
        let median = m.get(ParameterKind::Illuminance).unwrap();
        assert!((1.0..=5.0).contains(&median));
        assert_eq!(median, 3.0);
    }
}
