//! Health-scheme generation: for a (parameter, criticality, anchors)
//! triple, produce the five interval bands HS1..HS5 that partition the
//! parameter's domain.
//!
//! Each parameter belongs to a rule family. Ascending ladders (illuminance,
//! colour rendering, melanopic lux) get wider as criticality drops; bands
//! for glare, flicker and colour consistency run the other way; colour
//! coordinates use two-sided bands around an ideal point.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::interval::{partition_check, Interval, IntervalSet, PartitionReport};
use crate::numeric::snap;
use crate::param::ParameterKind;
use crate::status::{CilLevel, HealthStatus};
use crate::survey::ProfileRegistry;
use crate::targets::ParamTargets;

/// Configuration failure while generating a scheme.
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeError {
    MissingStandard { parameter: ParameterKind, family: &'static str },
    MissingTarget { parameter: ParameterKind, family: &'static str },
    TargetBelowStandard { parameter: ParameterKind, standard: f64, target: f64 },
    InvalidAnchor { parameter: ParameterKind, family: &'static str, detail: String },
    /// The generated bands do not partition the domain. Indicates an
    /// anchor combination the rule family cannot support.
    NotAPartition { parameter: ParameterKind, report: PartitionReport },
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeError::MissingStandard { parameter, family } => {
                write!(f, "{parameter}: family \"{family}\" needs a standard value")
            }
            SchemeError::MissingTarget { parameter, family } => {
                write!(f, "{parameter}: family \"{family}\" needs a target value")
            }
            SchemeError::TargetBelowStandard { parameter, standard, target } => {
                write!(f, "{parameter}: target {target} below standard {standard}")
            }
            SchemeError::InvalidAnchor { parameter, family, detail } => {
                write!(f, "{parameter}: family \"{family}\": {detail}")
            }
            SchemeError::NotAPartition { parameter, report } => {
                write!(f, "{parameter}: bands do not partition the domain ({report})")
            }
        }
    }
}

impl core::error::Error for SchemeError {}

/// The five bands of one (parameter, criticality) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct HealthScheme {
    parameter: ParameterKind,
    cil: CilLevel,
    targets: ParamTargets,
    bands: [IntervalSet; 5],
}

impl HealthScheme {
    pub fn parameter(&self) -> ParameterKind {
        self.parameter
    }

    pub fn cil(&self) -> CilLevel {
        self.cil
    }

    pub fn targets(&self) -> ParamTargets {
        self.targets
    }

    pub fn band(&self, status: HealthStatus) -> &IntervalSet {
        &self.bands[(status.index() - 1) as usize]
    }

    pub fn bands(&self) -> impl Iterator<Item = (HealthStatus, &IntervalSet)> {
        HealthStatus::ALL.iter().map(move |hs| (*hs, self.band(*hs)))
    }

    /// The unique status whose band contains `x`, `None` outside the domain.
    pub fn locate(&self, x: f64) -> Option<HealthStatus> {
        HealthStatus::ALL
            .into_iter()
            .find(|hs| self.band(*hs).contains(x))
    }

    pub fn partition_report(&self) -> PartitionReport {
        partition_check(&self.bands, &self.parameter.domain())
    }
}

impl HealthScheme {
    /// Assemble a scheme from explicit bands, e.g. a configured override.
    /// The bands must partition the parameter's domain.
    pub fn from_bands(
        parameter: ParameterKind,
        cil: CilLevel,
        targets: ParamTargets,
        bands: [IntervalSet; 5],
    ) -> Result<HealthScheme, SchemeError> {
        let domain = parameter.domain();
        let report = partition_check(&bands, &domain);
        if !report.is_partition() {
            return Err(SchemeError::NotAPartition { parameter, report });
        }
        Ok(HealthScheme { parameter, cil, targets, bands })
    }
}

/// Build the scheme for one (parameter, criticality, anchors) triple.
///
/// The returned bands always partition the parameter's domain exactly;
/// anchor combinations that cannot achieve this are rejected.
pub fn build_scheme(
    parameter: ParameterKind,
    cil: CilLevel,
    targets: ParamTargets,
) -> Result<HealthScheme, SchemeError> {
    let raw = raw_bands(parameter, cil, targets)?;
    let domain = parameter.domain();
    let bands_vec: Vec<IntervalSet> = raw.into_iter().map(|set| set.clip(&domain)).collect();
    let bands: [IntervalSet; 5] = bands_vec.try_into().expect("five bands");
    let report = partition_check(&bands, &domain);
    if !report.is_partition() {
        return Err(SchemeError::NotAPartition { parameter, report });
    }
    Ok(HealthScheme { parameter, cil, targets, bands })
}

fn family_name(parameter: ParameterKind) -> &'static str {
    match parameter {
        ParameterKind::Illuminance
        | ParameterKind::Uniformity
        | ParameterKind::Ra
        | ParameterKind::Rf => "standard/target ladder",
        ParameterKind::Ugr => "standard-offset ladder",
        ParameterKind::R9 => "target-fraction ladder",
        ParameterKind::Cct => "target band ladder",
        ParameterKind::Duv => "zero-centred bands",
        ParameterKind::Rg => "hundred-centred bands",
        ParameterKind::Sdcm => "fixed step ladder",
        ParameterKind::Svm => "flicker ladder",
        ParameterKind::Eml => "melanopic ladder",
    }
}

fn need_standard(parameter: ParameterKind, targets: ParamTargets) -> Result<f64, SchemeError> {
    targets.standard.ok_or(SchemeError::MissingStandard {
        parameter,
        family: family_name(parameter),
    })
}

fn need_target(parameter: ParameterKind, targets: ParamTargets) -> Result<f64, SchemeError> {
    targets.target.ok_or(SchemeError::MissingTarget {
        parameter,
        family: family_name(parameter),
    })
}

fn check_finite(parameter: ParameterKind, anchors: &[f64]) -> Result<(), SchemeError> {
    if anchors.iter().any(|a| !a.is_finite()) {
        return Err(SchemeError::InvalidAnchor {
            parameter,
            family: family_name(parameter),
            detail: String::from("anchors must be finite numbers"),
        });
    }
    Ok(())
}

/// Ascending ladder pieces from a strictly interleaved cut list. Cuts that
/// coincide produce an empty piece rather than an error, so clipped and
/// degenerate-but-consistent configurations still partition.
fn ascending_piece(lo: f64, hi: f64) -> IntervalSet {
    if lo < hi {
        IntervalSet::of(Interval::closed_open(lo, hi))
    } else {
        IntervalSet::empty()
    }
}

fn raw_bands(
    parameter: ParameterKind,
    cil: CilLevel,
    targets: ParamTargets,
) -> Result<Vec<IntervalSet>, SchemeError> {
    match parameter {
        ParameterKind::Illuminance | ParameterKind::Uniformity | ParameterKind::Ra
        | ParameterKind::Rf => {
            let (low_frac, cap_mul) = match (parameter, cil) {
                (ParameterKind::Illuminance, CilLevel::I) => (0.95, 1.5),
                (ParameterKind::Illuminance, CilLevel::II) => (0.90, 1.2),
                (ParameterKind::Uniformity, CilLevel::I) => (0.95, 1.2),
                (ParameterKind::Uniformity, CilLevel::II) => (0.90, 1.1),
                (_, CilLevel::I) => (0.95, 1.15),
                (_, CilLevel::II) => (0.90, 1.10),
            };
            let standard = need_standard(parameter, targets)?;
            let target = need_target(parameter, targets)?;
            check_finite(parameter, &[standard, target])?;
            if target < standard {
                return Err(SchemeError::TargetBelowStandard { parameter, standard, target });
            }
            let warn = snap(low_frac * standard);
            let cap = snap(cap_mul * target);
            Ok(vec![
                IntervalSet::of(Interval::less_than(warn)),
                ascending_piece(warn, standard),
                ascending_piece(standard, target),
                IntervalSet::of(Interval::closed(target, cap)),
                IntervalSet::of(Interval::greater_than(cap)),
            ])
        }
        ParameterKind::Ugr => {
            let standard = need_standard(parameter, targets)?;
            check_finite(parameter, &[standard])?;
            let (top, mid, low_off) = match cil {
                CilLevel::I => (1.5, 1.2, 3.0),
                CilLevel::II => (3.0, 1.5, 2.0),
            };
            let worst = snap(standard + top);
            let warn = snap(standard + mid);
            let good = snap(standard - low_off);
            Ok(vec![
                IntervalSet::of(Interval::greater_than(worst)),
                IntervalSet::of(Interval::closed(warn, worst)),
                IntervalSet::of(Interval::open(standard, warn)),
                IntervalSet::of(Interval::closed(good, standard)),
                IntervalSet::of(Interval::less_than(good)),
            ])
        }
        ParameterKind::R9 => {
            let target = need_target(parameter, targets)?;
            check_finite(parameter, &[target])?;
            let fracs = match cil {
                CilLevel::I => [0.5, 0.65, 0.8],
                CilLevel::II => [0.4, 0.55, 0.7],
            };
            let c1 = snap(fracs[0] * target);
            let c2 = snap(fracs[1] * target);
            let c3 = snap(fracs[2] * target);
            Ok(vec![
                IntervalSet::of(Interval::less_than(c1)),
                ascending_piece(c1, c2),
                ascending_piece(c2, c3),
                ascending_piece(c3, target),
                IntervalSet::of(Interval::at_least(target)),
            ])
        }
        ParameterKind::Cct => {
            let target = need_target(parameter, targets)?;
            check_finite(parameter, &[target])?;
            let fracs = match cil {
                CilLevel::I => [0.6, 0.9, 0.95, 1.05],
                CilLevel::II => [0.5, 0.8, 0.95, 1.1],
            };
            let c1 = snap(fracs[0] * target);
            let c2 = snap(fracs[1] * target);
            let c3 = snap(fracs[2] * target);
            let c4 = snap(fracs[3] * target);
            Ok(vec![
                IntervalSet::of(Interval::less_than(c1)),
                ascending_piece(c1, c2),
                ascending_piece(c2, c3),
                ascending_piece(c3, c4),
                IntervalSet::of(Interval::at_least(c4)),
            ])
        }
        ParameterKind::Duv => {
            let b = match cil {
                CilLevel::I => [0.005, 0.004, 0.003, 0.001],
                CilLevel::II => [0.006, 0.005, 0.003, 0.001],
            };
            let two_sided = |inner: f64, outer: f64| {
                IntervalSet::new(vec![
                    Interval::open_closed(-outer, -inner),
                    Interval::closed_open(inner, outer),
                ])
                .expect("mirrored bands are disjoint")
            };
            Ok(vec![
                IntervalSet::new(vec![Interval::at_most(-b[0]), Interval::at_least(b[0])])
                    .expect("outer bands are disjoint"),
                two_sided(b[1], b[0]),
                two_sided(b[2], b[1]),
                two_sided(b[3], b[2]),
                IntervalSet::of(Interval::open(-b[3], b[3])),
            ])
        }
        ParameterKind::Rg => {
            let (lo, hi) = match cil {
                CilLevel::I => ([85.0, 90.0, 95.0, 99.0], [110.0, 105.0, 103.0, 101.0]),
                CilLevel::II => ([80.0, 85.0, 95.0, 99.0], [115.0, 110.0, 103.0, 101.0]),
            };
            let two_sided = |lo_from: f64, lo_to: f64, hi_from: f64, hi_to: f64| {
                IntervalSet::new(vec![
                    Interval::open_closed(lo_from, lo_to),
                    Interval::closed_open(hi_from, hi_to),
                ])
                .expect("gamut bands are disjoint")
            };
            Ok(vec![
                IntervalSet::new(vec![Interval::at_most(lo[0]), Interval::at_least(hi[0])])
                    .expect("outer gamut bands are disjoint"),
                two_sided(lo[0], lo[1], hi[1], hi[0]),
                two_sided(lo[1], lo[2], hi[2], hi[1]),
                two_sided(lo[2], lo[3], hi[3], hi[2]),
                IntervalSet::of(Interval::open(lo[3], hi[3])),
            ])
        }
        ParameterKind::Sdcm => {
            let steps = match cil {
                CilLevel::I => [5.0, 4.0, 3.0],
                CilLevel::II => [6.0, 5.0, 3.0],
            };
            Ok(vec![
                IntervalSet::of(Interval::at_least(steps[0])),
                IntervalSet::of(Interval::closed_open(steps[1], steps[0])),
                IntervalSet::of(Interval::closed_open(steps[2], steps[1])),
                IntervalSet::of(Interval::closed_open(2.0, steps[2])),
                // Exactly 2 belongs to HS4; the top band stays open.
                IntervalSet::of(Interval::less_than(2.0)),
            ])
        }
        ParameterKind::Svm => {
            let target = need_target(parameter, targets)?;
            check_finite(parameter, &[target])?;
            let cuts = match cil {
                CilLevel::I => [0.2, 0.15, 0.1],
                CilLevel::II => [0.25, 0.2, 0.1],
            };
            if !(target > 0.0 && target < cuts[2]) {
                return Err(SchemeError::InvalidAnchor {
                    parameter,
                    family: family_name(parameter),
                    detail: alloc::format!(
                        "target {target} must lie strictly between 0 and {}",
                        cuts[2]
                    ),
                });
            }
            Ok(vec![
                IntervalSet::of(Interval::at_least(cuts[0])),
                ascending_piece(cuts[1], cuts[0]),
                ascending_piece(cuts[2], cuts[1]),
                ascending_piece(target, cuts[2]),
                IntervalSet::of(Interval::less_than(target)),
            ])
        }
        ParameterKind::Eml => {
            let cuts = match cil {
                CilLevel::I => [120.0, 132.0, 150.0, 275.0],
                CilLevel::II => [108.0, 120.0, 150.0, 180.0],
            };
            Ok(vec![
                IntervalSet::of(Interval::less_than(cuts[0])),
                ascending_piece(cuts[0], cuts[1]),
                ascending_piece(cuts[1], cuts[2]),
                IntervalSet::of(Interval::closed(cuts[2], cuts[3])),
                IntervalSet::of(Interval::greater_than(cuts[3])),
            ])
        }
    }
}

/// All schemes of one environment, in parameter declaration order.
#[derive(Debug, Clone)]
pub struct EnvironmentSchemes {
    pub environment_id: String,
    pub objective: String,
    pub cil: CilLevel,
    schemes: Vec<HealthScheme>,
}

impl EnvironmentSchemes {
    pub fn scheme(&self, parameter: ParameterKind) -> &HealthScheme {
        self.schemes
            .iter()
            .find(|s| s.parameter() == parameter)
            .expect("book entries carry all twelve parameters")
    }

    pub fn schemes(&self) -> &[HealthScheme] {
        &self.schemes
    }
}

/// Scheme book: every (environment, parameter) scheme for a registry.
#[derive(Debug, Clone, Default)]
pub struct SchemeBook {
    entries: Vec<EnvironmentSchemes>,
}

/// Error while assembling a scheme book.
#[derive(Debug, Clone)]
pub enum BookError {
    UnknownObjective(crate::targets::UnknownObjective),
    Scheme { environment: String, error: SchemeError },
}

impl fmt::Display for BookError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BookError::UnknownObjective(e) => write!(f, "{e}"),
            BookError::Scheme { environment, error } => {
                write!(f, "environment \"{environment}\": {error}")
            }
        }
    }
}

impl core::error::Error for BookError {}

impl SchemeBook {
    /// Build schemes for every environment in the registry, profile file
    /// order preserved.
    pub fn build(registry: &ProfileRegistry) -> Result<SchemeBook, BookError> {
        let mut entries = Vec::new();
        for profile in registry.profiles() {
            let cil = registry.cil_for(profile);
            let mut schemes = Vec::with_capacity(ParameterKind::ALL.len());
            for parameter in ParameterKind::ALL {
                let targets = registry
                    .effective_targets(profile, parameter)
                    .map_err(BookError::UnknownObjective)?;
                if let Some(overridden) = registry.scheme_override(parameter, cil) {
                    schemes.push(overridden.clone());
                    continue;
                }
                let scheme = build_scheme(parameter, cil, targets).map_err(|error| {
                    BookError::Scheme { environment: profile.id.clone(), error }
                })?;
                schemes.push(scheme);
            }
            entries.push(EnvironmentSchemes {
                environment_id: profile.id.clone(),
                objective: profile.objective.clone(),
                cil,
                schemes,
            });
        }
        Ok(SchemeBook { entries })
    }

    pub fn entries(&self) -> &[EnvironmentSchemes] {
        &self.entries
    }

    pub fn for_environment(&self, environment_id: &str) -> Option<&EnvironmentSchemes> {
        self.entries.iter().find(|e| e.environment_id == environment_id)
    }
}
