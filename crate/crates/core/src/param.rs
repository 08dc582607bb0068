//! The twelve monitored lighting parameters, their units, value domains,
//! and the measured-value wrapper.

use core::fmt;

use crate::interval::Interval;

/// One of the twelve recommended lighting parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParameterKind {
    /// Maintained average illuminance, lux.
    Illuminance,
    /// Uniformity ratio of illuminance, dimensionless in [0, 1].
    Uniformity,
    /// Unified glare rating; lower is better.
    Ugr,
    /// General colour rendering index.
    Ra,
    /// Saturated-red colour rendering index.
    R9,
    /// TM-30 fidelity index.
    Rf,
    /// TM-30 gamut index; ideal near 100.
    Rg,
    /// Colour consistency in MacAdam steps; lower is better.
    Sdcm,
    /// Correlated colour temperature, kelvin.
    Cct,
    /// Signed distance from the black-body locus.
    Duv,
    /// Stroboscopic visibility measure in [0, 1]; lower is better.
    Svm,
    /// Equivalent melanopic lux.
    Eml,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 12] = [
        ParameterKind::Illuminance,
        ParameterKind::Uniformity,
        ParameterKind::Ugr,
        ParameterKind::Ra,
        ParameterKind::R9,
        ParameterKind::Rf,
        ParameterKind::Rg,
        ParameterKind::Sdcm,
        ParameterKind::Cct,
        ParameterKind::Duv,
        ParameterKind::Svm,
        ParameterKind::Eml,
    ];

    /// The six parameters carried in score tables and radar series.
    pub const REPORTED: [ParameterKind; 6] = [
        ParameterKind::Illuminance,
        ParameterKind::R9,
        ParameterKind::Cct,
        ParameterKind::Duv,
        ParameterKind::Svm,
        ParameterKind::Eml,
    ];

    /// Measurement unit, empty string for dimensionless parameters.
    pub fn unit(self) -> &'static str {
        match self {
            ParameterKind::Illuminance => "lx",
            ParameterKind::Cct => "K",
            ParameterKind::Eml => "EML",
            _ => "",
        }
    }

    /// Machine token used in CSV columns, config keys and CLI filters.
    pub fn token(self) -> &'static str {
        match self {
            ParameterKind::Illuminance => "lux",
            ParameterKind::Uniformity => "u0",
            ParameterKind::Ugr => "ugr",
            ParameterKind::Ra => "ra",
            ParameterKind::R9 => "r9",
            ParameterKind::Rf => "rf",
            ParameterKind::Rg => "rg",
            ParameterKind::Sdcm => "sdcm",
            ParameterKind::Cct => "cct",
            ParameterKind::Duv => "duv",
            ParameterKind::Svm => "svm",
            ParameterKind::Eml => "eml",
        }
    }

    /// Column label used in rendered tables.
    pub fn label(self) -> &'static str {
        match self {
            ParameterKind::Illuminance => "Lux",
            ParameterKind::Uniformity => "U0",
            ParameterKind::Ugr => "UGR",
            ParameterKind::Ra => "Ra",
            ParameterKind::R9 => "R9",
            ParameterKind::Rf => "Rf",
            ParameterKind::Rg => "Rg",
            ParameterKind::Sdcm => "SDCM",
            ParameterKind::Cct => "CCT",
            ParameterKind::Duv => "DUV",
            ParameterKind::Svm => "SVM",
            ParameterKind::Eml => "EML",
        }
    }

    pub fn from_token(token: &str) -> Option<ParameterKind> {
        ParameterKind::ALL
            .into_iter()
            .find(|p| p.token().eq_ignore_ascii_case(token))
    }

    /// Declared value domain. Values outside it are abnormal, never a
    /// valid health status above HS1.
    pub fn domain(self) -> Interval {
        match self {
            ParameterKind::Illuminance => Interval::at_least(0.0),
            ParameterKind::Uniformity => Interval::closed(0.0, 1.0),
            ParameterKind::Ugr => Interval::greater_than(0.0),
            ParameterKind::Ra => Interval::open_closed(0.0, 100.0),
            // Negative readings occur in the field but are treated as
            // abnormal rather than given their own bands.
            ParameterKind::R9 => Interval::closed(0.0, 100.0),
            ParameterKind::Rf => Interval::open_closed(0.0, 100.0),
            ParameterKind::Rg => Interval::closed(1.0, 150.0),
            // Declared open at 1 so the (1, 2) top band completes the ladder.
            ParameterKind::Sdcm => Interval::greater_than(1.0),
            ParameterKind::Cct => Interval::greater_than(0.0),
            ParameterKind::Duv => Interval::closed(-0.05, 0.05),
            ParameterKind::Svm => Interval::closed(0.0, 1.0),
            ParameterKind::Eml => Interval::at_least(0.0),
        }
    }

    /// Whether the top band means over-supply rather than excellence.
    pub fn over_supply_at_top(self) -> bool {
        matches!(self, ParameterKind::Illuminance | ParameterKind::Uniformity)
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A single measured value, possibly missing or out of domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasuredValue {
    /// No reading was taken.
    Missing,
    /// A numeric reading. `abnormal` marks values flagged at ingestion as
    /// lying outside the parameter's domain.
    Value { value: f64, abnormal: bool },
}

impl MeasuredValue {
    pub fn ok(value: f64) -> MeasuredValue {
        MeasuredValue::Value { value, abnormal: false }
    }

    pub fn abnormal(value: f64) -> MeasuredValue {
        MeasuredValue::Value { value, abnormal: true }
    }

    pub fn is_missing(self) -> bool {
        matches!(self, MeasuredValue::Missing)
    }

    pub fn numeric(self) -> Option<f64> {
        match self {
            MeasuredValue::Missing => None,
            MeasuredValue::Value { value, .. } => Some(value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_twelve_kinds_with_unique_tokens() {
        assert_eq!(ParameterKind::ALL.len(), 12);
        for (i, a) in ParameterKind::ALL.iter().enumerate() {
            for b in &ParameterKind::ALL[i + 1..] {
                assert_ne!(a.token(), b.token());
            }
            assert_eq!(ParameterKind::from_token(a.token()), Some(*a));
        }
        assert_eq!(ParameterKind::from_token("EML"), Some(ParameterKind::Eml));
        assert_eq!(ParameterKind::from_token("bogus"), None);
    }

    #[test]
    fn domains_match_declared_ranges() {
        assert!(ParameterKind::Illuminance.domain().contains(0.0));
        assert!(!ParameterKind::Ugr.domain().contains(0.0));
        assert!(ParameterKind::Ra.domain().contains(100.0));
        assert!(!ParameterKind::Ra.domain().contains(0.0));
        assert!(!ParameterKind::R9.domain().contains(-1.0));
        assert!(ParameterKind::R9.domain().contains(0.0));
        assert!(!ParameterKind::Sdcm.domain().contains(1.0));
        assert!(ParameterKind::Sdcm.domain().contains(1.01));
        assert!(ParameterKind::Duv.domain().contains(-0.05));
        assert!(!ParameterKind::Duv.domain().contains(13.0));
        assert!(!ParameterKind::Svm.domain().contains(4.0));
        assert!(ParameterKind::Rg.domain().contains(150.0));
        assert!(!ParameterKind::Rg.domain().contains(0.5));
    }
}
