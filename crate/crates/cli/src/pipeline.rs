//! End-to-end wiring: registry + survey -> classifications, scores,
//! medians and reports.

use luxcil_core::{
    build_report, classify_record, median_by_parameter, survey_scores, ColorClass, MedianVector,
    ParameterKind, ProfileRegistry, RecordAssessment, SchemeBook, ScoreTable, Survey,
    SurveyReport,
};

use crate::emit::{ClassifyCellDoc, ClassifyDoc, MissingDoc, ScoreDoc};
use crate::error::{AppError, AppResult};

/// The assessed form of one survey.
pub struct Assessment {
    pub survey: Survey,
    pub records: Vec<RecordAssessment>,
    pub table: ScoreTable,
    pub medians: MedianVector,
}

pub fn build_book(registry: &ProfileRegistry) -> AppResult<SchemeBook> {
    SchemeBook::build(registry).map_err(|e| AppError::config(e.to_string()))
}

/// Classify and score one survey against a registry and its scheme book.
pub fn assess(
    registry: &ProfileRegistry,
    book: &SchemeBook,
    survey: Survey,
) -> AppResult<Assessment> {
    let mut records = Vec::with_capacity(survey.records.len());
    for record in &survey.records {
        let assessment = classify_record(registry, book, record).map_err(|e| match &e {
            luxcil_core::classify::RecordError::NoScheme { .. } => {
                AppError::config(e.to_string())
            }
            _ => AppError::validation(e.to_string()),
        })?;
        records.push(assessment);
    }
    let table = survey_scores(&survey, &records, &ParameterKind::REPORTED);
    let medians = median_by_parameter(&table);
    Ok(Assessment { survey, records, table, medians })
}

impl Assessment {
    pub fn score_doc(&self) -> ScoreDoc {
        ScoreDoc::new(&self.table, &self.medians)
    }

    pub fn classify_doc(&self) -> ClassifyDoc {
        let mut cells = Vec::new();
        let mut missing = Vec::new();
        for (record, assessment) in self.survey.records.iter().zip(&self.records) {
            for (parameter, classification) in &assessment.results {
                let value = record
                    .value(*parameter)
                    .and_then(|v| v.numeric())
                    .expect("classified values are numeric");
                cells.push(ClassifyCellDoc {
                    environment: record.environment_id.clone(),
                    position: record.position.token().into(),
                    parameter: parameter.token().into(),
                    value,
                    status: classification.status.to_string(),
                    score: classification.status.index(),
                    abnormal: classification.abnormal,
                    over_provisioned: classification.over_provisioned,
                });
            }
            if assessment.missing_count() > 0 {
                missing.push(MissingDoc {
                    environment: record.environment_id.clone(),
                    position: record.position.token().into(),
                    count: assessment.missing_count(),
                });
            }
        }
        ClassifyDoc {
            site: self.survey.site.clone(),
            survey: self.survey.label.clone(),
            cells,
            missing,
        }
    }

    pub fn report(&self, book: &SchemeBook) -> SurveyReport {
        build_report(
            &self.survey,
            &self.records,
            &self.table,
            book,
            &ColorClass::default(),
        )
    }
}
