//! Standard (S) and target (T) anchor values per environment objective.
//!
//! Standards are the normative minimums; targets are the design values the
//! installation was commissioned against. Illuminance targets sit 100 lx
//! above the standard and uniformity targets 0.1 above, colour rendering
//! targets 5 points above. Colour temperature targets are per-objective
//! design choices; the melanopic target is a fixed 150 EML floor.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::param::ParameterKind;

/// Standard and target anchors for one parameter, either may be absent.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ParamTargets {
    pub standard: Option<f64>,
    pub target: Option<f64>,
}

impl ParamTargets {
    pub const NONE: ParamTargets = ParamTargets { standard: None, target: None };

    pub fn standard_and_target(s: f64, t: f64) -> ParamTargets {
        ParamTargets { standard: Some(s), target: Some(t) }
    }

    pub fn standard_only(s: f64) -> ParamTargets {
        ParamTargets { standard: Some(s), target: None }
    }

    pub fn target_only(t: f64) -> ParamTargets {
        ParamTargets { standard: None, target: Some(t) }
    }

    /// Fill absent values from `base`, keeping present ones.
    pub fn or(self, base: ParamTargets) -> ParamTargets {
        ParamTargets {
            standard: self.standard.or(base.standard),
            target: self.target.or(base.target),
        }
    }
}

/// Lookup failure for an unregistered objective.
#[derive(Debug, Clone, PartialEq)]
pub struct UnknownObjective {
    pub objective: String,
    pub known: Vec<String>,
}

impl fmt::Display for UnknownObjective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown objective \"{}\"; known objectives: ", self.objective)?;
        for (i, k) in self.known.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl core::error::Error for UnknownObjective {}

/// The twelve library sub-environment objectives shipped with the engine.
pub const OBJECTIVES: [&str; 12] = [
    "Bookshelf_Display_Adult",
    "Bookshelf_Reserve_Adult",
    "Table_Book borrow_digital_Adult",
    "Table_Book return_Adult",
    "Table Counter_multifunction_Staff",
    "Sofa_Reading/learning_Adult",
    "Sofa_Reading/learning_Children",
    "Table_Digital inquiry_Adult",
    "Table_Reading/learning_multifunction_Adult",
    "Table_Reading/learning_digital_Adult",
    "Table_Hobby_Children",
    "Table_Workshop_Adult",
];

/// Map from objective label to its per-parameter anchors.
///
/// User-registered objectives extend the shipped set; unknown objectives
/// are an error rather than a silent default.
#[derive(Debug, Clone, Default)]
pub struct TargetRegistry {
    extra: Vec<(String, Vec<(ParameterKind, ParamTargets)>)>,
}

impl TargetRegistry {
    pub fn shipped() -> TargetRegistry {
        TargetRegistry::default()
    }

    /// Register (or override) anchors for an objective.
    pub fn register(&mut self, objective: &str, entries: Vec<(ParameterKind, ParamTargets)>) {
        if let Some(slot) = self.extra.iter_mut().find(|(o, _)| o == objective) {
            slot.1 = entries;
        } else {
            self.extra.push((objective.to_owned(), entries));
        }
    }

    pub fn known_objectives(&self) -> Vec<String> {
        let mut known: Vec<String> = OBJECTIVES.iter().map(|s| (*s).to_owned()).collect();
        for (o, _) in &self.extra {
            if !known.iter().any(|k| k == o) {
                known.push(o.clone());
            }
        }
        known
    }

    /// Anchors for one (objective, parameter) pair.
    pub fn get(
        &self,
        objective: &str,
        parameter: ParameterKind,
    ) -> Result<ParamTargets, UnknownObjective> {
        if let Some((_, entries)) = self.extra.iter().find(|(o, _)| o == objective) {
            let from_extra = entries
                .iter()
                .find(|(p, _)| *p == parameter)
                .map(|(_, t)| *t);
            if let Some(t) = from_extra {
                return Ok(t);
            }
            // Registered objectives fall back to shipped defaults when the
            // label is also a shipped one.
            if OBJECTIVES.contains(&objective) {
                return Ok(shipped_targets(objective, parameter).expect("shipped objective"));
            }
            return Ok(ParamTargets::NONE);
        }
        shipped_targets(objective, parameter).ok_or_else(|| UnknownObjective {
            objective: objective.to_owned(),
            known: self.known_objectives(),
        })
    }

    /// Anchors for all twelve parameters of one objective.
    pub fn all_for(
        &self,
        objective: &str,
    ) -> Result<Vec<(ParameterKind, ParamTargets)>, UnknownObjective> {
        ParameterKind::ALL
            .into_iter()
            .map(|p| self.get(objective, p).map(|t| (p, t)))
            .collect()
    }
}

/// Default anchors for one (objective, parameter) pair.
pub fn default_targets(
    objective: &str,
    parameter: ParameterKind,
) -> Result<ParamTargets, UnknownObjective> {
    TargetRegistry::shipped().get(objective, parameter)
}

fn shipped_targets(objective: &str, parameter: ParameterKind) -> Option<ParamTargets> {
    if !OBJECTIVES.contains(&objective) {
        return None;
    }
    let lux_standard = match objective {
        "Bookshelf_Display_Adult" | "Bookshelf_Reserve_Adult" => 300.0,
        "Table Counter_multifunction_Staff"
        | "Sofa_Reading/learning_Adult"
        | "Table_Reading/learning_multifunction_Adult"
        | "Table_Workshop_Adult" => 750.0,
        _ => 500.0,
    };
    let uniformity_standard = match objective {
        "Bookshelf_Display_Adult" | "Bookshelf_Reserve_Adult" => 0.4,
        _ => 0.6,
    };
    let glare_standard = match objective {
        "Table_Book borrow_digital_Adult" | "Table_Book return_Adult" => 22.0,
        _ => 19.0,
    };
    let cct_target = match objective {
        "Sofa_Reading/learning_Adult" | "Sofa_Reading/learning_Children" => 3000.0,
        "Table_Hobby_Children" => 3300.0,
        "Table Counter_multifunction_Staff"
        | "Table_Digital inquiry_Adult"
        | "Table_Reading/learning_multifunction_Adult"
        | "Table_Reading/learning_digital_Adult"
        | "Table_Workshop_Adult" => 4000.0,
        _ => 3500.0,
    };
    Some(match parameter {
        ParameterKind::Illuminance => {
            ParamTargets::standard_and_target(lux_standard, lux_standard + 100.0)
        }
        ParameterKind::Uniformity => ParamTargets::standard_and_target(
            uniformity_standard,
            crate::numeric::snap(uniformity_standard + 0.1),
        ),
        ParameterKind::Ugr => ParamTargets::standard_only(glare_standard),
        ParameterKind::Ra | ParameterKind::Rf => ParamTargets::standard_and_target(80.0, 85.0),
        ParameterKind::R9 => ParamTargets::target_only(60.0),
        ParameterKind::Rg => ParamTargets::NONE,
        ParameterKind::Sdcm => ParamTargets::target_only(3.0),
        ParameterKind::Cct => ParamTargets::target_only(cct_target),
        ParameterKind::Duv => ParamTargets::target_only(0.0),
        ParameterKind::Svm => ParamTargets::target_only(0.05),
        ParameterKind::Eml => ParamTargets::standard_only(150.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn sofa_children_anchors() {
        let lux = default_targets("Sofa_Reading/learning_Children", ParameterKind::Illuminance)
            .unwrap();
        assert_eq!(lux, ParamTargets::standard_and_target(500.0, 600.0));
        let cct = default_targets("Sofa_Reading/learning_Children", ParameterKind::Cct).unwrap();
        assert_eq!(cct, ParamTargets::target_only(3000.0));
    }

    #[test]
    fn hobby_table_cct() {
        let cct = default_targets("Table_Hobby_Children", ParameterKind::Cct).unwrap();
        assert_eq!(cct, ParamTargets::target_only(3300.0));
    }

    #[test]
    fn staff_counter_anchors() {
        let ugr = default_targets("Table Counter_multifunction_Staff", ParameterKind::Ugr)
            .unwrap();
        assert_eq!(ugr, ParamTargets::standard_only(19.0));
        let lux = default_targets("Table Counter_multifunction_Staff", ParameterKind::Illuminance)
            .unwrap();
        assert_eq!(lux, ParamTargets::standard_and_target(750.0, 850.0));
    }

    #[test]
    fn unknown_objective_lists_known_ones() {
        let err = default_targets("Cafe_Corner", ParameterKind::Illuminance).unwrap_err();
        assert_eq!(err.objective, "Cafe_Corner");
        assert_eq!(err.known.len(), 12);
    }

    #[test]
    fn every_objective_covers_every_parameter() {
        let registry = TargetRegistry::shipped();
        for objective in OBJECTIVES {
            let all = registry.all_for(objective).unwrap();
            assert_eq!(all.len(), 12);
            for (p, t) in all {
                match p {
                    ParameterKind::Rg => assert_eq!(t, ParamTargets::NONE),
                    ParameterKind::Eml => {
                        assert_eq!(t.standard, Some(150.0));
                        assert_eq!(t.target, None);
                    }
                    ParameterKind::Duv => assert_eq!(t.target, Some(0.0)),
                    ParameterKind::Ugr => assert!(t.standard.is_some() && t.target.is_none()),
                    ParameterKind::Illuminance
                    | ParameterKind::Uniformity
                    | ParameterKind::Ra
                    | ParameterKind::Rf => {
                        let (s, t) = (t.standard.unwrap(), t.target.unwrap());
                        assert!(t >= s, "{objective}/{p}: target {t} below standard {s}");
                    }
                    _ => assert!(t.target.is_some()),
                }
            }
        }
    }

    #[test]
    fn registered_objective_takes_priority() {
        let mut registry = TargetRegistry::shipped();
        registry.register(
            "Atrium_Walkway",
            vec![(
                ParameterKind::Illuminance,
                ParamTargets::standard_and_target(100.0, 200.0),
            )],
        );
        let lux = registry.get("Atrium_Walkway", ParameterKind::Illuminance).unwrap();
        assert_eq!(lux, ParamTargets::standard_and_target(100.0, 200.0));
        // Parameters without anchors on a registered objective are simply absent.
        let ugr = registry.get("Atrium_Walkway", ParameterKind::Ugr).unwrap();
        assert_eq!(ugr, ParamTargets::NONE);
        assert!(registry.known_objectives().contains(&"Atrium_Walkway".to_owned()));
    }
}
