//! Measured value -> health status classification.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::param::{MeasuredValue, ParameterKind};
use crate::scheme::{HealthScheme, SchemeBook};
use crate::status::HealthStatus;
use crate::survey::{MeasurementRecord, ProfileRegistry};

/// Outcome of classifying one value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub status: HealthStatus,
    /// Value lies outside the parameter's declared domain. Always HS1.
    pub abnormal: bool,
    /// Top band reached on a parameter whose top band means over-supply.
    pub over_provisioned: bool,
}

/// Classification failure.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassifyError {
    /// The value is missing; callers filter missing values out instead of
    /// classifying them.
    Missing,
    /// NaN or infinite reading.
    NotFinite { parameter: ParameterKind },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Missing => write!(f, "value is missing"),
            ClassifyError::NotFinite { parameter } => {
                write!(f, "{parameter}: reading is not a finite number")
            }
        }
    }
}

impl core::error::Error for ClassifyError {}

/// Classify one measured value against a scheme.
///
/// In-domain values land in exactly one band. Out-of-domain values are
/// abnormal and classify as HS1 regardless of any band arithmetic.
pub fn classify_value(
    scheme: &HealthScheme,
    value: MeasuredValue,
) -> Result<Classification, ClassifyError> {
    let number = match value {
        MeasuredValue::Missing => return Err(ClassifyError::Missing),
        MeasuredValue::Value { value, .. } => value,
    };
    if !number.is_finite() {
        return Err(ClassifyError::NotFinite { parameter: scheme.parameter() });
    }
    let parameter = scheme.parameter();
    if !parameter.domain().contains(number) {
        return Ok(Classification {
            status: HealthStatus::Hs1,
            abnormal: true,
            over_provisioned: false,
        });
    }
    let status = scheme
        .locate(number)
        .expect("schemes partition their domain");
    Ok(Classification {
        status,
        abnormal: false,
        over_provisioned: parameter.over_supply_at_top() && status == HealthStatus::Hs5,
    })
}

/// Classification of one record, parameter by parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordAssessment {
    pub environment_id: String,
    pub results: Vec<(ParameterKind, Classification)>,
    /// Parameters present in the record but without a reading.
    pub missing: Vec<ParameterKind>,
}

impl RecordAssessment {
    pub fn get(&self, parameter: ParameterKind) -> Option<Classification> {
        self.results
            .iter()
            .find(|(p, _)| *p == parameter)
            .map(|(_, c)| *c)
    }

    pub fn missing_count(&self) -> usize {
        self.missing.len()
    }
}

/// Record-level failure.
#[derive(Debug, Clone, PartialEq)]
pub enum RecordError {
    UnknownEnvironment { environment_id: String },
    NoScheme { environment_id: String, parameter: ParameterKind },
    Value { parameter: ParameterKind, error: ClassifyError },
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordError::UnknownEnvironment { environment_id } => {
                write!(f, "unknown environment id \"{environment_id}\"")
            }
            RecordError::NoScheme { environment_id, parameter } => {
                write!(f, "environment \"{environment_id}\" has no scheme for {parameter}")
            }
            RecordError::Value { parameter, error } => write!(f, "{parameter}: {error}"),
        }
    }
}

impl core::error::Error for RecordError {}

/// Classify every present, non-missing parameter of one record.
///
/// Missing readings are skipped and counted, never zero-filled.
pub fn classify_record(
    registry: &ProfileRegistry,
    book: &SchemeBook,
    record: &MeasurementRecord,
) -> Result<RecordAssessment, RecordError> {
    if registry.profile(&record.environment_id).is_none() {
        return Err(RecordError::UnknownEnvironment {
            environment_id: record.environment_id.clone(),
        });
    }
    let schemes = book.for_environment(&record.environment_id).ok_or_else(|| {
        RecordError::UnknownEnvironment { environment_id: record.environment_id.clone() }
    })?;
    let mut results = Vec::new();
    let mut missing = Vec::new();
    for (parameter, value) in record.values() {
        if value.is_missing() {
            missing.push(*parameter);
            continue;
        }
        let scheme = schemes.scheme(*parameter);
        let classification = classify_value(scheme, *value).map_err(|error| {
            RecordError::Value { parameter: *parameter, error }
        })?;
        results.push((*parameter, classification));
    }
    Ok(RecordAssessment {
        environment_id: record.environment_id.clone(),
        results,
        missing,
    })
}
