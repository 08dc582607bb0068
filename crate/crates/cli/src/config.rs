//! Profile configuration: environments, optional criticality-matrix
//! override and optional scheme overrides.

use std::collections::BTreeMap;

use serde::Deserialize;

use luxcil_core::{
    AgeGroup, AgeGroupSet, CilLevel, CilMatrix, EnvironmentProfile, HealthScheme, Interval,
    IntervalBound, IntervalSet, MtoeClass, MtoeSpec, ParamTargets, ParameterKind, ProfileRegistry,
    TargetRegistry,
};

use crate::error::{AppError, AppResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFile {
    cil_matrix: Option<MatrixConfig>,
    #[serde(default)]
    environments: Vec<EnvironmentConfig>,
    #[serde(default)]
    scheme_overrides: Vec<SchemeOverrideConfig>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixConfig {
    t1: MatrixRow,
    t2: MatrixRow,
    t3: MatrixRow,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRow {
    a: String,
    b: String,
    c: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EnvironmentConfig {
    id: String,
    objective: String,
    age_groups: Vec<String>,
    mtoe_minutes: Option<f64>,
    mtoe_class: Option<String>,
    cil_override: Option<String>,
    #[serde(default)]
    targets: BTreeMap<String, TargetConfig>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetConfig {
    s: Option<f64>,
    t: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeOverrideConfig {
    parameter: String,
    cil: String,
    bands: Vec<BandConfig>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BandConfig {
    hs: u8,
    intervals: Vec<IntervalConfig>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalConfig {
    /// Absent means unbounded below.
    lower: Option<f64>,
    #[serde(default = "default_true")]
    lower_closed: bool,
    /// Absent means unbounded above.
    upper: Option<f64>,
    #[serde(default)]
    upper_closed: bool,
}

fn default_true() -> bool {
    true
}

fn parse_cil(token: &str) -> AppResult<CilLevel> {
    match token.trim().to_ascii_uppercase().as_str() {
        "I" | "CIL-I" | "1" => Ok(CilLevel::I),
        "II" | "CIL-II" | "2" => Ok(CilLevel::II),
        other => Err(AppError::validation(format!(
            "unknown criticality level \"{other}\"; expected I or II"
        ))),
    }
}

fn parse_age_group(token: &str) -> AppResult<AgeGroup> {
    match token.trim().to_ascii_uppercase().as_str() {
        "A" => Ok(AgeGroup::A),
        "B" => Ok(AgeGroup::B),
        "C" => Ok(AgeGroup::C),
        other => Err(AppError::validation(format!(
            "age-group token \"{other}\" outside A, B, C"
        ))),
    }
}

fn parse_mtoe_class(token: &str) -> AppResult<MtoeClass> {
    match token.trim().to_ascii_uppercase().as_str() {
        "T1" => Ok(MtoeClass::T1),
        "T2" => Ok(MtoeClass::T2),
        "T3" => Ok(MtoeClass::T3),
        other => Err(AppError::validation(format!(
            "unknown exposure class \"{other}\"; expected T1, T2 or T3"
        ))),
    }
}

fn parse_parameter(token: &str) -> AppResult<ParameterKind> {
    ParameterKind::from_token(token).ok_or_else(|| {
        let valid: Vec<&str> = ParameterKind::ALL.iter().map(|p| p.token()).collect();
        AppError::validation(format!(
            "unknown parameter token \"{token}\"; valid tokens: {}",
            valid.join(", ")
        ))
    })
}

fn interval_from_config(cfg: &IntervalConfig) -> AppResult<Interval> {
    let lower = match (cfg.lower, cfg.lower_closed) {
        (None, _) => IntervalBound::Unbounded,
        (Some(v), true) => IntervalBound::Closed(v),
        (Some(v), false) => IntervalBound::Open(v),
    };
    let upper = match (cfg.upper, cfg.upper_closed) {
        (None, _) => IntervalBound::Unbounded,
        (Some(v), true) => IntervalBound::Closed(v),
        (Some(v), false) => IntervalBound::Open(v),
    };
    Interval::new(lower, upper).map_err(|e| AppError::validation(e.to_string()))
}

/// Parse a profile configuration document into a frozen registry.
pub fn parse_profiles(path: &str, text: &str) -> AppResult<ProfileRegistry> {
    let file: ProfileFile =
        toml::from_str(text).map_err(|e| AppError::parse(path, e.to_string()))?;

    let mut matrix = CilMatrix::default();
    if let Some(m) = &file.cil_matrix {
        for (mtoe, row) in [
            (MtoeClass::T1, &m.t1),
            (MtoeClass::T2, &m.t2),
            (MtoeClass::T3, &m.t3),
        ] {
            matrix.set(AgeGroup::A, mtoe, parse_cil(&row.a)?);
            matrix.set(AgeGroup::B, mtoe, parse_cil(&row.b)?);
            matrix.set(AgeGroup::C, mtoe, parse_cil(&row.c)?);
        }
    }

    let mut registry = ProfileRegistry::new(matrix, TargetRegistry::shipped());

    for env in &file.environments {
        let mut groups = AgeGroupSet::EMPTY;
        for token in &env.age_groups {
            groups.insert(parse_age_group(token)?);
        }
        let mtoe = match (env.mtoe_minutes, &env.mtoe_class) {
            (Some(_), Some(_)) => {
                return Err(AppError::validation(format!(
                    "environment \"{}\": give mtoe_minutes or mtoe_class, not both",
                    env.id
                )));
            }
            (Some(minutes), None) => MtoeSpec::Minutes(minutes),
            (None, Some(class)) => MtoeSpec::Class(parse_mtoe_class(class)?),
            (None, None) => {
                return Err(AppError::validation(format!(
                    "environment \"{}\": one of mtoe_minutes or mtoe_class is required",
                    env.id
                )));
            }
        };
        let cil_override = env
            .cil_override
            .as_deref()
            .map(parse_cil)
            .transpose()?;
        let mut target_overrides = Vec::new();
        for (token, anchors) in &env.targets {
            let parameter = parse_parameter(token)?;
            target_overrides.push((
                parameter,
                ParamTargets { standard: anchors.s, target: anchors.t },
            ));
        }
        let profile = EnvironmentProfile {
            id: env.id.clone(),
            objective: env.objective.clone(),
            age_groups: groups,
            mtoe,
            cil_override,
            target_overrides,
        };
        registry
            .add_profile(profile)
            .map_err(|e| AppError::validation(e.to_string()))?;
    }

    for cfg in &file.scheme_overrides {
        let parameter = parse_parameter(&cfg.parameter)?;
        let cil = parse_cil(&cfg.cil)?;
        let mut bands: [IntervalSet; 5] = Default::default();
        let mut seen = [false; 5];
        for band in &cfg.bands {
            if !(1..=5).contains(&band.hs) {
                return Err(AppError::validation(format!(
                    "scheme override {}/{}: band index {} outside 1..=5",
                    cfg.parameter, cfg.cil, band.hs
                )));
            }
            let idx = (band.hs - 1) as usize;
            if seen[idx] {
                return Err(AppError::validation(format!(
                    "scheme override {}/{}: band {} given twice",
                    cfg.parameter, cfg.cil, band.hs
                )));
            }
            seen[idx] = true;
            let intervals: AppResult<Vec<Interval>> =
                band.intervals.iter().map(interval_from_config).collect();
            bands[idx] = IntervalSet::new(intervals?)
                .map_err(|e| AppError::validation(e.to_string()))?;
        }
        if seen.iter().any(|s| !s) {
            return Err(AppError::validation(format!(
                "scheme override {}/{}: all five bands are required",
                cfg.parameter, cfg.cil
            )));
        }
        let scheme = HealthScheme::from_bands(parameter, cil, ParamTargets::NONE, bands)
            .map_err(|e| AppError::config(e.to_string()))?;
        registry.add_scheme_override(scheme);
    }

    Ok(registry)
}

/// Read and parse a profile file from disk.
pub fn load_profiles(path: &str) -> AppResult<ProfileRegistry> {
    let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_profiles(path, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[[environments]]
id = "reserve"
objective = "Bookshelf_Reserve_Adult"
age_groups = ["B", "C"]
mtoe_class = "T2"
"#;

    #[test]
    fn minimal_profile_derives_cil() {
        let registry = parse_profiles("test.toml", MINIMAL).unwrap();
        let assignments = registry.cil_assignments();
        assert_eq!(assignments.len(), 1);
        assert_eq!(assignments[0].cil, CilLevel::I);
        assert!(!assignments[0].overridden);
    }

    #[test]
    fn override_is_reported() {
        let text = r#"
[[environments]]
id = "display"
objective = "Bookshelf_Display_Adult"
age_groups = ["A"]
mtoe_class = "T3"
cil_override = "II"
"#;
        let registry = parse_profiles("test.toml", text).unwrap();
        let assignments = registry.cil_assignments();
        assert_eq!(assignments[0].cil, CilLevel::II);
        assert!(assignments[0].overridden);
    }

    #[test]
    fn bad_age_token_is_validation_error() {
        let text = MINIMAL.replace("\"C\"", "\"D\"");
        let err = parse_profiles("test.toml", &text).unwrap_err();
        assert_eq!(err.category(), crate::error::ErrorCategory::Validation);
        assert!(err.to_string().contains("age-group token"));
    }

    #[test]
    fn negative_mtoe_is_rejected() {
        let text = MINIMAL.replace("mtoe_class = \"T2\"", "mtoe_minutes = -3.0");
        let err = parse_profiles("test.toml", &text).unwrap_err();
        assert_eq!(err.category(), crate::error::ErrorCategory::Validation);
    }

    #[test]
    fn unknown_objective_without_anchors_is_rejected() {
        let text = MINIMAL.replace("Bookshelf_Reserve_Adult", "Maker_Space");
        let err = parse_profiles("test.toml", &text).unwrap_err();
        assert!(err.to_string().contains("unknown objective"));
    }

    #[test]
    fn toml_syntax_error_is_parse_error() {
        let err = parse_profiles("test.toml", "[[environments]\nid = 3").unwrap_err();
        assert_eq!(err.category(), crate::error::ErrorCategory::Parse);
    }

    #[test]
    fn matrix_override_changes_derivation() {
        let text = format!(
            r#"
[cil_matrix]
t1 = {{ a = "I", b = "I", c = "I" }}
t2 = {{ a = "I", b = "I", c = "I" }}
t3 = {{ a = "I", b = "I", c = "I" }}
{MINIMAL}
[[environments]]
id = "display"
objective = "Bookshelf_Display_Adult"
age_groups = ["B"]
mtoe_class = "T1"
"#
        );
        let registry = parse_profiles("test.toml", &text).unwrap();
        let assignments = registry.cil_assignments();
        assert!(assignments.iter().all(|a| a.cil == CilLevel::I));
    }

    #[test]
    fn target_override_applies() {
        let text = format!(
            "{MINIMAL}\n[environments.targets]\nlux = {{ s = 400.0, t = 520.0 }}\n"
        );
        let registry = parse_profiles("test.toml", &text).unwrap();
        let profile = registry.profile("reserve").unwrap();
        let lux = registry
            .effective_targets(profile, ParameterKind::Illuminance)
            .unwrap();
        assert_eq!(lux, ParamTargets::standard_and_target(400.0, 520.0));
    }

    #[test]
    fn scheme_override_must_partition() {
        let bad = r#"
[[scheme_overrides]]
parameter = "sdcm"
cil = "I"
bands = [
  { hs = 1, intervals = [{ lower = 5.0 }] },
  { hs = 2, intervals = [{ lower = 4.0, upper = 5.0 }] },
  { hs = 3, intervals = [{ lower = 3.0, upper = 4.0 }] },
  { hs = 4, intervals = [{ lower = 2.5, upper = 3.0 }] },
  { hs = 5, intervals = [{ lower = 1.0, lower_closed = false, upper = 2.0 }] },
]
"#;
        let err = parse_profiles("test.toml", bad).unwrap_err();
        assert_eq!(err.category(), crate::error::ErrorCategory::Config);
        assert!(err.to_string().contains("partition"));

        let good = bad.replace("lower = 2.5", "lower = 2.0");
        let registry = parse_profiles("test.toml", &good).unwrap();
        assert!(registry
            .scheme_override(ParameterKind::Sdcm, CilLevel::I)
            .is_some());
    }
}
