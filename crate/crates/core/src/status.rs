//! Ordinal vocabulary shared by the whole engine: health statuses,
//! criticality levels, user age groups and exposure classes.

use core::fmt;

/// Five-level condition rating of one lighting parameter.
///
/// `Hs1` is the worst condition, `Hs5` the optimal one. The ordering is
/// total: `Hs1 < Hs2 < Hs3 < Hs4 < Hs5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HealthStatus {
    Hs1,
    Hs2,
    Hs3,
    Hs4,
    Hs5,
}

impl HealthStatus {
    pub const ALL: [HealthStatus; 5] = [
        HealthStatus::Hs1,
        HealthStatus::Hs2,
        HealthStatus::Hs3,
        HealthStatus::Hs4,
        HealthStatus::Hs5,
    ];

    /// Ordinal index, 1 through 5.
    pub fn index(self) -> u8 {
        match self {
            HealthStatus::Hs1 => 1,
            HealthStatus::Hs2 => 2,
            HealthStatus::Hs3 => 3,
            HealthStatus::Hs4 => 4,
            HealthStatus::Hs5 => 5,
        }
    }

    pub fn from_index(index: u8) -> Option<HealthStatus> {
        match index {
            1 => Some(HealthStatus::Hs1),
            2 => Some(HealthStatus::Hs2),
            3 => Some(HealthStatus::Hs3),
            4 => Some(HealthStatus::Hs4),
            5 => Some(HealthStatus::Hs5),
            _ => None,
        }
    }
}

impl fmt::Display for HealthStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HS{}", self.index())
    }
}

/// Criticality level of a lighting environment.
///
/// `I` denotes higher criticality than `II`: its schemes use the tighter
/// band multipliers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CilLevel {
    /// Higher priority.
    I,
    /// Lower priority.
    II,
}

impl CilLevel {
    pub const ALL: [CilLevel; 2] = [CilLevel::I, CilLevel::II];
}

impl fmt::Display for CilLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CilLevel::I => write!(f, "CIL-I"),
            CilLevel::II => write!(f, "CIL-II"),
        }
    }
}

/// User age group. The three groups are disjoint and cover all ages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AgeGroup {
    /// Under 12 years.
    A,
    /// 12 to 65 years.
    B,
    /// Over 65 years.
    C,
}

impl AgeGroup {
    pub const ALL: [AgeGroup; 3] = [AgeGroup::A, AgeGroup::B, AgeGroup::C];
}

impl fmt::Display for AgeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AgeGroup::A => write!(f, "A"),
            AgeGroup::B => write!(f, "B"),
            AgeGroup::C => write!(f, "C"),
        }
    }
}

/// Small set of age groups, cheap to copy and order-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct AgeGroupSet(u8);

impl AgeGroupSet {
    pub const EMPTY: AgeGroupSet = AgeGroupSet(0);

    pub fn new(groups: &[AgeGroup]) -> AgeGroupSet {
        let mut set = AgeGroupSet::EMPTY;
        for &g in groups {
            set.insert(g);
        }
        set
    }

    pub fn all() -> AgeGroupSet {
        AgeGroupSet::new(&AgeGroup::ALL)
    }

    fn bit(group: AgeGroup) -> u8 {
        match group {
            AgeGroup::A => 1,
            AgeGroup::B => 2,
            AgeGroup::C => 4,
        }
    }

    pub fn insert(&mut self, group: AgeGroup) {
        self.0 |= Self::bit(group);
    }

    pub fn contains(self, group: AgeGroup) -> bool {
        self.0 & Self::bit(group) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = AgeGroup> {
        AgeGroup::ALL.into_iter().filter(move |&g| self.contains(g))
    }
}

impl FromIterator<AgeGroup> for AgeGroupSet {
    fn from_iter<I: IntoIterator<Item = AgeGroup>>(iter: I) -> Self {
        let mut set = AgeGroupSet::EMPTY;
        for g in iter {
            set.insert(g);
        }
        set
    }
}

impl fmt::Display for AgeGroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

/// Exposure-duration class derived from mean time of exposure (minutes).
///
/// `T1` is under 5 minutes, `T2` is 5 to 15 minutes inclusive, `T3` is
/// longer than 15 minutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MtoeClass {
    T1,
    T2,
    T3,
}

impl MtoeClass {
    pub const ALL: [MtoeClass; 3] = [MtoeClass::T1, MtoeClass::T2, MtoeClass::T3];
}

impl fmt::Display for MtoeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MtoeClass::T1 => write!(f, "T1"),
            MtoeClass::T2 => write!(f, "T2"),
            MtoeClass::T3 => write!(f, "T3"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn health_status_is_totally_ordered() {
        assert!(HealthStatus::Hs1 < HealthStatus::Hs2);
        assert!(HealthStatus::Hs4 < HealthStatus::Hs5);
        for (i, hs) in HealthStatus::ALL.iter().enumerate() {
            assert_eq!(hs.index() as usize, i + 1);
            assert_eq!(HealthStatus::from_index(hs.index()), Some(*hs));
        }
        assert_eq!(HealthStatus::from_index(0), None);
        assert_eq!(HealthStatus::from_index(6), None);
    }

    #[test]
    fn age_group_set_roundtrip() {
        let set = AgeGroupSet::new(&[AgeGroup::C, AgeGroup::A]);
        assert!(set.contains(AgeGroup::A));
        assert!(!set.contains(AgeGroup::B));
        assert!(set.contains(AgeGroup::C));
        let collected: alloc::vec::Vec<_> = set.iter().collect();
        assert_eq!(collected, [AgeGroup::A, AgeGroup::C]);
        assert!(AgeGroupSet::EMPTY.is_empty());
    }
}
