//! Exposure classification and criticality assignment.
//!
//! An environment's criticality level follows from who uses it (age
//! groups) and for how long (mean time of exposure). The mapping lives in
//! a 3x3 matrix that ships with a default but is injectable configuration.

use core::fmt;

use crate::status::{AgeGroup, AgeGroupSet, CilLevel, MtoeClass};

/// Map from (age group, exposure class) to criticality level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CilMatrix {
    // Row-major: [mtoe][group], indices follow declaration order T1..T3, A..C.
    cells: [[CilLevel; 3]; 3],
}

impl CilMatrix {
    pub fn new(cells: [[CilLevel; 3]; 3]) -> CilMatrix {
        CilMatrix { cells }
    }

    pub fn get(&self, group: AgeGroup, mtoe: MtoeClass) -> CilLevel {
        self.cells[mtoe_index(mtoe)][group_index(group)]
    }

    pub fn set(&mut self, group: AgeGroup, mtoe: MtoeClass, level: CilLevel) {
        self.cells[mtoe_index(mtoe)][group_index(group)] = level;
    }
}

impl Default for CilMatrix {
    /// Short exposures are low criticality for everyone, long exposures are
    /// high criticality for everyone, and mid-length exposures are high
    /// criticality only for the vulnerable age groups (under 12, over 65).
    fn default() -> CilMatrix {
        use CilLevel::{I, II};
        CilMatrix {
            cells: [
                [II, II, II], // T1
                [I, II, I],   // T2
                [I, I, I],    // T3
            ],
        }
    }
}

fn group_index(group: AgeGroup) -> usize {
    match group {
        AgeGroup::A => 0,
        AgeGroup::B => 1,
        AgeGroup::C => 2,
    }
}

fn mtoe_index(mtoe: MtoeClass) -> usize {
    match mtoe {
        MtoeClass::T1 => 0,
        MtoeClass::T2 => 1,
        MtoeClass::T3 => 2,
    }
}

/// Errors from criticality assignment inputs.
#[derive(Debug, Clone, PartialEq)]
pub enum CilError {
    /// Exposure duration below zero.
    NegativeDuration { minutes: f64 },
    /// Exposure duration not a finite number.
    InvalidDuration,
    /// No age groups supplied for an environment.
    EmptyGroupSet,
}

impl fmt::Display for CilError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CilError::NegativeDuration { minutes } => {
                write!(f, "exposure duration must be non-negative, got {minutes} minutes")
            }
            CilError::InvalidDuration => write!(f, "exposure duration is not a finite number"),
            CilError::EmptyGroupSet => write!(f, "environment needs at least one age group"),
        }
    }
}

impl core::error::Error for CilError {}

/// Classify a mean time of exposure, in minutes.
///
/// Under 5 minutes is `T1`, 5 to 15 minutes inclusive is `T2`, anything
/// longer is `T3`.
pub fn classify_mtoe(minutes: f64) -> Result<MtoeClass, CilError> {
    if !minutes.is_finite() {
        return Err(CilError::InvalidDuration);
    }
    if minutes < 0.0 {
        return Err(CilError::NegativeDuration { minutes });
    }
    Ok(if minutes < 5.0 {
        MtoeClass::T1
    } else if minutes <= 15.0 {
        MtoeClass::T2
    } else {
        MtoeClass::T3
    })
}

/// Single-cell matrix lookup.
pub fn cil_lookup(matrix: &CilMatrix, group: AgeGroup, mtoe: MtoeClass) -> CilLevel {
    matrix.get(group, mtoe)
}

/// Criticality of an environment used by several age groups: the most
/// critical cell wins (`I` beats `II`).
pub fn cil_for_environment(
    matrix: &CilMatrix,
    groups: AgeGroupSet,
    mtoe: MtoeClass,
) -> Result<CilLevel, CilError> {
    if groups.is_empty() {
        return Err(CilError::EmptyGroupSet);
    }
    let any_high = groups
        .iter()
        .any(|g| matrix.get(g, mtoe) == CilLevel::I);
    Ok(if any_high { CilLevel::I } else { CilLevel::II })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::status::AgeGroup::{A, B, C};

    #[test]
    fn mtoe_classification_boundaries() {
        assert_eq!(classify_mtoe(4.0), Ok(MtoeClass::T1));
        assert_eq!(classify_mtoe(0.0), Ok(MtoeClass::T1));
        assert_eq!(classify_mtoe(5.0), Ok(MtoeClass::T2));
        assert_eq!(classify_mtoe(15.0), Ok(MtoeClass::T2));
        assert_eq!(classify_mtoe(15.0001), Ok(MtoeClass::T3));
        assert!(matches!(
            classify_mtoe(-1.0),
            Err(CilError::NegativeDuration { .. })
        ));
        assert_eq!(classify_mtoe(f64::NAN), Err(CilError::InvalidDuration));
    }

    #[test]
    fn default_matrix_cells() {
        let m = CilMatrix::default();
        assert_eq!(cil_lookup(&m, A, MtoeClass::T2), CilLevel::I);
        assert_eq!(cil_lookup(&m, B, MtoeClass::T2), CilLevel::II);
        assert_eq!(cil_lookup(&m, C, MtoeClass::T3), CilLevel::I);
        for g in AgeGroup::ALL {
            assert_eq!(cil_lookup(&m, g, MtoeClass::T1), CilLevel::II);
            assert_eq!(cil_lookup(&m, g, MtoeClass::T3), CilLevel::I);
        }
    }

    #[test]
    fn environment_takes_max_criticality() {
        let m = CilMatrix::default();
        let all = AgeGroupSet::new(&[A, B, C]);
        assert_eq!(cil_for_environment(&m, all, MtoeClass::T1), Ok(CilLevel::II));
        let bc = AgeGroupSet::new(&[B, C]);
        assert_eq!(cil_for_environment(&m, bc, MtoeClass::T2), Ok(CilLevel::I));
        let b = AgeGroupSet::new(&[B]);
        assert_eq!(cil_for_environment(&m, b, MtoeClass::T3), Ok(CilLevel::I));
        assert_eq!(
            cil_for_environment(&m, AgeGroupSet::EMPTY, MtoeClass::T1),
            Err(CilError::EmptyGroupSet)
        );
    }

    #[test]
    fn singleton_set_equals_lookup() {
        let m = CilMatrix::default();
        for g in AgeGroup::ALL {
            for t in MtoeClass::ALL {
                let single = AgeGroupSet::new(&[g]);
                assert_eq!(
                    cil_for_environment(&m, single, t).unwrap(),
                    cil_lookup(&m, g, t)
                );
            }
        }
    }

    #[test]
    fn default_matrix_is_monotone_in_exposure() {
        // Raising the exposure class never lowers criticality.
        let m = CilMatrix::default();
        let rank = |c: CilLevel| if c == CilLevel::I { 1 } else { 0 };
        for bits in 1u8..8 {
            let groups: AgeGroupSet = AgeGroup::ALL
                .into_iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << i) != 0)
                .map(|(_, g)| g)
                .collect();
            let mut prev = 0;
            for t in MtoeClass::ALL {
                let level = rank(cil_for_environment(&m, groups, t).unwrap());
                assert!(level >= prev, "criticality dropped at {t} for {groups}");
                prev = level;
            }
        }
    }

    #[test]
    fn matrix_override_is_respected() {
        let mut m = CilMatrix::default();
        m.set(B, MtoeClass::T1, CilLevel::I);
        assert_eq!(cil_lookup(&m, B, MtoeClass::T1), CilLevel::I);
        let b = AgeGroupSet::new(&[B]);
        assert_eq!(cil_for_environment(&m, b, MtoeClass::T1), Ok(CilLevel::I));
    }
}
