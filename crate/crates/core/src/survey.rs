//! Environment profiles, measurement records and surveys.
//!
//! These are the in-memory shapes the ingestion layer parses into. A
//! profile describes one physical sub-environment (a bookshelf, a reading
//! table); a record is one row of a measurement session at one position.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cil::{cil_for_environment, classify_mtoe, CilError, CilMatrix};
use crate::param::{MeasuredValue, ParameterKind};
use crate::scheme::HealthScheme;
use crate::status::{AgeGroupSet, CilLevel, MtoeClass};
use crate::targets::{ParamTargets, TargetRegistry, UnknownObjective};

/// Yes/no context flag that may be left unspecified ("/" in field sheets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TriState {
    Yes,
    No,
    #[default]
    Unspecified,
}

impl TriState {
    pub fn from_token(token: &str) -> Option<TriState> {
        let t = token.trim();
        if t.is_empty() || t == "/" {
            return Some(TriState::Unspecified);
        }
        if t.eq_ignore_ascii_case("yes") {
            return Some(TriState::Yes);
        }
        if t.eq_ignore_ascii_case("no") {
            return Some(TriState::No);
        }
        None
    }

    pub fn token(self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unspecified => "/",
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Measurement position within an environment. Shelf heights and desk
/// surfaces share one vocabulary; spelling variants normalize here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord)]
pub enum Position {
    High,
    Medium,
    Low,
    Table,
    Screen,
    #[default]
    Unspecified,
}

impl Position {
    pub fn from_token(token: &str) -> Option<Position> {
        let t = token.trim();
        if t.is_empty() || t == "/" {
            return Some(Position::Unspecified);
        }
        if t.eq_ignore_ascii_case("high") {
            return Some(Position::High);
        }
        if t.eq_ignore_ascii_case("medium") {
            return Some(Position::Medium);
        }
        if t.eq_ignore_ascii_case("low") {
            return Some(Position::Low);
        }
        // "tabel" shows up in real field sheets.
        if t.eq_ignore_ascii_case("table") || t.eq_ignore_ascii_case("tabel") {
            return Some(Position::Table);
        }
        if t.eq_ignore_ascii_case("screen") {
            return Some(Position::Screen);
        }
        None
    }

    pub fn token(self) -> &'static str {
        match self {
            Position::High => "high",
            Position::Medium => "medium",
            Position::Low => "low",
            Position::Table => "table",
            Position::Screen => "screen",
            Position::Unspecified => "/",
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Exposure duration, either raw minutes or an already-classified class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MtoeSpec {
    Minutes(f64),
    Class(MtoeClass),
}

impl MtoeSpec {
    pub fn class(self) -> Result<MtoeClass, CilError> {
        match self {
            MtoeSpec::Minutes(m) => classify_mtoe(m),
            MtoeSpec::Class(c) => Ok(c),
        }
    }
}

/// One physical sub-environment and its assessment context.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvironmentProfile {
    pub id: String,
    pub objective: String,
    pub age_groups: AgeGroupSet,
    pub mtoe: MtoeSpec,
    pub cil_override: Option<CilLevel>,
    pub target_overrides: Vec<(ParameterKind, ParamTargets)>,
}

/// Registry construction failure.
#[derive(Debug, Clone, PartialEq)]
pub enum RegistryError {
    DuplicateId { id: String },
    EmptyGroups { id: String },
    InvalidMtoe { id: String, error: CilError },
    UnknownObjective { id: String, error: UnknownObjective },
    InvalidOverride { id: String, parameter: ParameterKind, detail: String },
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::DuplicateId { id } => write!(f, "duplicate environment id \"{id}\""),
            RegistryError::EmptyGroups { id } => {
                write!(f, "environment \"{id}\" lists no age groups")
            }
            RegistryError::InvalidMtoe { id, error } => {
                write!(f, "environment \"{id}\": {error}")
            }
            RegistryError::UnknownObjective { id, error } => {
                write!(f, "environment \"{id}\": {error}")
            }
            RegistryError::InvalidOverride { id, parameter, detail } => {
                write!(f, "environment \"{id}\", parameter {parameter}: {detail}")
            }
        }
    }
}

impl core::error::Error for RegistryError {}

/// How a profile's criticality level was determined.
#[derive(Debug, Clone, PartialEq)]
pub struct CilAssignment {
    pub environment_id: String,
    pub objective: String,
    pub age_groups: AgeGroupSet,
    pub mtoe_class: MtoeClass,
    pub cil: CilLevel,
    pub overridden: bool,
}

/// All loaded profiles plus the matrix and anchor registry they resolve
/// against. Frozen after load.
#[derive(Debug, Clone)]
pub struct ProfileRegistry {
    matrix: CilMatrix,
    targets: TargetRegistry,
    profiles: Vec<EnvironmentProfile>,
    scheme_overrides: Vec<HealthScheme>,
}

impl Default for ProfileRegistry {
    fn default() -> Self {
        ProfileRegistry::new(CilMatrix::default(), TargetRegistry::shipped())
    }
}

impl ProfileRegistry {
    pub fn new(matrix: CilMatrix, targets: TargetRegistry) -> ProfileRegistry {
        ProfileRegistry {
            matrix,
            targets,
            profiles: Vec::new(),
            scheme_overrides: Vec::new(),
        }
    }

    pub fn matrix(&self) -> &CilMatrix {
        &self.matrix
    }

    pub fn targets(&self) -> &TargetRegistry {
        &self.targets
    }

    /// Validate and add a profile. Order of addition is preserved.
    pub fn add_profile(&mut self, profile: EnvironmentProfile) -> Result<(), RegistryError> {
        if self.profiles.iter().any(|p| p.id == profile.id) {
            return Err(RegistryError::DuplicateId { id: profile.id });
        }
        if profile.age_groups.is_empty() {
            return Err(RegistryError::EmptyGroups { id: profile.id });
        }
        if let Err(error) = profile.mtoe.class() {
            return Err(RegistryError::InvalidMtoe { id: profile.id, error });
        }
        let objective_known = self
            .targets
            .known_objectives()
            .iter()
            .any(|o| *o == profile.objective);
        if !objective_known && profile.target_overrides.is_empty() {
            let error = UnknownObjective {
                objective: profile.objective.clone(),
                known: self.targets.known_objectives(),
            };
            return Err(RegistryError::UnknownObjective { id: profile.id, error });
        }
        for (parameter, targets) in &profile.target_overrides {
            if let (Some(s), Some(t)) = (targets.standard, targets.target) {
                let needs_order = matches!(
                    parameter,
                    ParameterKind::Illuminance
                        | ParameterKind::Uniformity
                        | ParameterKind::Ra
                        | ParameterKind::Rf
                );
                if needs_order && t < s {
                    return Err(RegistryError::InvalidOverride {
                        id: profile.id,
                        parameter: *parameter,
                        detail: alloc::format!("target {t} below standard {s}"),
                    });
                }
            }
        }
        self.profiles.push(profile);
        Ok(())
    }

    /// Replace the full scheme for one (parameter, criticality) pair.
    pub fn add_scheme_override(&mut self, scheme: HealthScheme) {
        self.scheme_overrides
            .retain(|s| !(s.parameter() == scheme.parameter() && s.cil() == scheme.cil()));
        self.scheme_overrides.push(scheme);
    }

    pub fn scheme_override(
        &self,
        parameter: ParameterKind,
        cil: CilLevel,
    ) -> Option<&HealthScheme> {
        self.scheme_overrides
            .iter()
            .find(|s| s.parameter() == parameter && s.cil() == cil)
    }

    pub fn profiles(&self) -> &[EnvironmentProfile] {
        &self.profiles
    }

    pub fn profile(&self, id: &str) -> Option<&EnvironmentProfile> {
        self.profiles.iter().find(|p| p.id == id)
    }

    /// Criticality level of a loaded profile (override wins).
    pub fn cil_for(&self, profile: &EnvironmentProfile) -> CilLevel {
        if let Some(level) = profile.cil_override {
            return level;
        }
        let mtoe = profile.mtoe.class().expect("validated at registration");
        cil_for_environment(&self.matrix, profile.age_groups, mtoe)
            .expect("validated at registration")
    }

    /// Effective anchors: profile overrides fill over registry defaults.
    pub fn effective_targets(
        &self,
        profile: &EnvironmentProfile,
        parameter: ParameterKind,
    ) -> Result<ParamTargets, UnknownObjective> {
        let base = match self.targets.get(&profile.objective, parameter) {
            Ok(t) => t,
            // An unknown objective is allowed when the profile carries its
            // own anchors (validated at registration).
            Err(_) => ParamTargets::NONE,
        };
        let overridden = profile
            .target_overrides
            .iter()
            .find(|(p, _)| *p == parameter)
            .map(|(_, t)| *t)
            .unwrap_or(ParamTargets::NONE);
        Ok(overridden.or(base))
    }

    /// Derived-vs-overridden CIL listing in profile order.
    pub fn cil_assignments(&self) -> Vec<CilAssignment> {
        self.profiles
            .iter()
            .map(|p| CilAssignment {
                environment_id: p.id.clone(),
                objective: p.objective.clone(),
                age_groups: p.age_groups,
                mtoe_class: p.mtoe.class().expect("validated at registration"),
                cil: self.cil_for(p),
                overridden: p.cil_override.is_some(),
            })
            .collect()
    }
}

/// One measurement row: an environment, a position, and the readings.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    pub environment_id: String,
    pub objective: String,
    pub shelf_lighting: TriState,
    pub daylight: TriState,
    pub position: Position,
    values: Vec<(ParameterKind, MeasuredValue)>,
}

impl MeasurementRecord {
    pub fn new(environment_id: String, objective: String) -> MeasurementRecord {
        MeasurementRecord {
            environment_id,
            objective,
            shelf_lighting: TriState::Unspecified,
            daylight: TriState::Unspecified,
            position: Position::Unspecified,
            values: Vec::new(),
        }
    }

    pub fn set_value(&mut self, parameter: ParameterKind, value: MeasuredValue) {
        if let Some(slot) = self.values.iter_mut().find(|(p, _)| *p == parameter) {
            slot.1 = value;
        } else {
            self.values.push((parameter, value));
        }
    }

    pub fn value(&self, parameter: ParameterKind) -> Option<MeasuredValue> {
        self.values
            .iter()
            .find(|(p, _)| *p == parameter)
            .map(|(_, v)| *v)
    }

    pub fn values(&self) -> &[(ParameterKind, MeasuredValue)] {
        &self.values
    }

    /// True when no parameter carries a numeric reading.
    pub fn is_empty(&self) -> bool {
        self.values.iter().all(|(_, v)| v.is_missing())
    }
}

/// An ordered measurement session at one site.
#[derive(Debug, Clone, PartialEq)]
pub struct Survey {
    pub site: String,
    pub label: String,
    pub records: Vec<MeasurementRecord>,
}

impl Survey {
    pub fn new(site: String, label: String) -> Survey {
        Survey { site, label, records: Vec::new() }
    }
}
