//! Core engine for context-driven lighting health assessment.
//!
//! The crate turns a small amount of context (who uses a space and for how
//! long) into per-parameter interval schemes, classifies photometric
//! measurements against those schemes, and aggregates the outcomes into
//! scores, medians and cross-site comparisons.
//!
//! Everything in here is pure and allocation-only: no IO, no clocks, no
//! global state. The companion CLI crate carries file formats and rendering.
//!
//! The pipeline, in order:
//!
//! 1. [`cil`] — classify mean time of exposure and resolve the criticality
//!    level (CIL) of an environment from its user age groups.
//! 2. [`targets`] — the default standard/target registry per environment
//!    objective.
//! 3. [`scheme`] — generate the HS1–HS5 interval scheme for a
//!    (parameter, CIL, standard/target) triple.
//! 4. [`classify`] — map measured values onto health statuses.
//! 5. [`score`] — scores, per-survey medians, cross-survey averages.
//! 6. [`report`] — report and radar-series data (plot-agnostic).

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cil;
pub mod classify;
pub mod deviations;
pub mod interval;
pub mod numeric;
pub mod param;
pub mod report;
pub mod scheme;
pub mod score;
pub mod status;
pub mod survey;
pub mod targets;

pub use cil::{cil_for_environment, cil_lookup, classify_mtoe, CilMatrix};
pub use classify::{classify_record, classify_value, Classification, RecordAssessment};
pub use deviations::{fixture_deviations, DeviationEntry, DeviationLedger};
pub use interval::{Interval, IntervalBound, IntervalSet, PartitionReport};
pub use param::{MeasuredValue, ParameterKind};
pub use report::{build_report, radar_data, ColorClass, RadarSeries, SurveyReport};
pub use scheme::{build_scheme, HealthScheme, SchemeBook};
pub use score::{
    average_across, compare_series, hs_to_score, median_by_parameter, survey_scores,
    AverageVector, MedianVector, ScoreRow, ScoreTable,
};
pub use status::{AgeGroup, AgeGroupSet, CilLevel, HealthStatus, MtoeClass};
pub use survey::{
    CilAssignment, EnvironmentProfile, MeasurementRecord, MtoeSpec, Position, ProfileRegistry,
    Survey, TriState,
};
pub use targets::{default_targets, ParamTargets, TargetRegistry};
