//! Property tests over the scheme generator, classifier and aggregation.

use proptest::prelude::*;

use luxcil_core::{
    build_scheme, classify_value, median_by_parameter, CilLevel, HealthStatus, MeasuredValue,
    ParamTargets, ParameterKind, Position, ScoreRow, ScoreTable,
};

fn anchors_for(p: ParameterKind, s: f64, t: f64) -> ParamTargets {
    match p {
        ParameterKind::Illuminance | ParameterKind::Uniformity | ParameterKind::Ra
        | ParameterKind::Rf => ParamTargets::standard_and_target(s, t),
        ParameterKind::Ugr => ParamTargets::standard_only(s),
        ParameterKind::R9 | ParameterKind::Cct | ParameterKind::Svm | ParameterKind::Duv
        | ParameterKind::Sdcm => ParamTargets::target_only(t),
        ParameterKind::Rg | ParameterKind::Eml => ParamTargets::NONE,
    }
}

/// Representative anchor grid per parameter: (standard, target) pairs.
fn anchor_grid(p: ParameterKind) -> Vec<(f64, f64)> {
    match p {
        ParameterKind::Illuminance => (2..=20)
            .map(|k| {
                let s = 50.0 * k as f64;
                (s, s + 100.0)
            })
            .collect(),
        ParameterKind::Uniformity => vec![(0.2, 0.3), (0.4, 0.5), (0.6, 0.7), (0.8, 0.83)],
        ParameterKind::Ugr => (10..=28).map(|s| (s as f64, 0.0)).collect(),
        ParameterKind::Ra | ParameterKind::Rf => {
            vec![(70.0, 75.0), (80.0, 85.0), (85.0, 86.0), (90.0, 90.0)]
        }
        ParameterKind::R9 => vec![(0.0, 40.0), (0.0, 60.0), (0.0, 80.0), (0.0, 95.0)],
        ParameterKind::Cct => vec![(0.0, 2700.0), (0.0, 3000.0), (0.0, 3300.0), (0.0, 3500.0), (0.0, 4000.0), (0.0, 6500.0)],
        ParameterKind::Svm => vec![(0.0, 0.01), (0.0, 0.05), (0.0, 0.09)],
        ParameterKind::Sdcm | ParameterKind::Duv | ParameterKind::Rg | ParameterKind::Eml => {
            vec![(0.0, 3.0)]
        }
    }
}

#[test]
fn partition_completeness_over_anchor_grid() {
    for p in ParameterKind::ALL {
        for cil in CilLevel::ALL {
            for (s, t) in anchor_grid(p) {
                let scheme = build_scheme(p, cil, anchors_for(p, s, t))
                    .unwrap_or_else(|e| panic!("{p}/{cil} s={s} t={t}: {e}"));
                let report = scheme.partition_report();
                assert!(
                    report.is_partition(),
                    "{p}/{cil} s={s} t={t}: {report}"
                );
            }
        }
    }
}

/// Sample values across the interesting part of each domain, including the
/// exact band boundaries.
fn domain_samples(p: ParameterKind, scheme: &luxcil_core::HealthScheme) -> Vec<f64> {
    let mut xs: Vec<f64> = Vec::new();
    let (lo, hi) = match p {
        ParameterKind::Illuminance => (0.0, 2000.0),
        ParameterKind::Uniformity | ParameterKind::Svm => (0.0, 1.0),
        ParameterKind::Ugr => (0.01, 40.0),
        ParameterKind::Ra | ParameterKind::Rf => (0.01, 100.0),
        ParameterKind::R9 => (0.0, 100.0),
        ParameterKind::Rg => (1.0, 150.0),
        ParameterKind::Sdcm => (1.01, 12.0),
        ParameterKind::Cct => (1.0, 8000.0),
        ParameterKind::Duv => (-0.05, 0.05),
        ParameterKind::Eml => (0.0, 500.0),
    };
    let n = 10_000;
    for i in 0..=n {
        xs.push(lo + (hi - lo) * i as f64 / n as f64);
    }
    for (_, set) in scheme.bands() {
        for iv in set.intervals() {
            for b in [iv.lower(), iv.upper()] {
                if let Some(v) = b.value() {
                    xs.push(v);
                }
            }
        }
    }
    xs.retain(|x| p.domain().contains(*x));
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs
}

#[test]
fn ladder_monotonicity_per_family() {
    use ParameterKind::*;
    for p in ParameterKind::ALL {
        for cil in CilLevel::ALL {
            let (s, t) = anchor_grid(p)[0];
            let scheme = build_scheme(p, cil, anchors_for(p, s, t)).unwrap();
            let xs = domain_samples(p, &scheme);
            // Transform to the axis along which the status index must be
            // monotone non-decreasing.
            let key = |x: f64| -> f64 {
                match p {
                    Illuminance | Uniformity | Ra | Rf | R9 | Cct | Eml => x,
                    Ugr | Sdcm | Svm => -x,
                    Duv => -x.abs(),
                    Rg => -(x - 100.0).abs(),
                }
            };
            let mut ordered: Vec<f64> = xs.clone();
            ordered.sort_by(|a, b| key(*a).partial_cmp(&key(*b)).unwrap());
            let mut last = 0u8;
            for x in ordered {
                let hs = scheme
                    .locate(x)
                    .unwrap_or_else(|| panic!("{p}/{cil}: {x} unclassified"));
                let idx = hs.index();
                assert!(
                    idx >= last || key_ties(p, x),
                    "{p}/{cil}: status dropped to HS{idx} after HS{last} at {x}"
                );
                last = if key_ties(p, x) { last.min(idx) } else { idx };
            }
        }
    }
}

// Two-sided families map distinct values to the same key (|x|); ties may
// legitimately move between statuses when the two sides' brackets differ.
fn key_ties(p: ParameterKind, _x: f64) -> bool {
    matches!(p, ParameterKind::Duv | ParameterKind::Rg)
}

#[test]
fn two_sided_families_are_monotone_in_distance() {
    // For the two-sided families, check monotonicity on each side of the
    // centre separately, where boundary ownership is well defined.
    for cil in CilLevel::ALL {
        let duv = build_scheme(ParameterKind::Duv, cil, ParamTargets::target_only(0.0)).unwrap();
        let rg = build_scheme(ParameterKind::Rg, cil, ParamTargets::NONE).unwrap();
        for (scheme, centre, lo, hi) in [(&duv, 0.0, -0.05, 0.05), (&rg, 100.0, 1.0, 150.0)] {
            let n = 5_000;
            for side in [false, true] {
                let mut last = 5u8;
                for i in 0..=n {
                    let frac = i as f64 / n as f64;
                    let x = if side {
                        centre + (hi - centre) * frac
                    } else {
                        centre + (lo - centre) * frac
                    };
                    let Some(hs) = scheme.locate(x) else { continue };
                    assert!(
                        hs.index() <= last,
                        "{}/{cil}: status rose to HS{} at {x}",
                        scheme.parameter(),
                        hs.index()
                    );
                    last = hs.index();
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn abnormal_values_always_classify_hs1(seed in any::<u32>()) {
        // Out-of-domain probes derived from the seed.
        let probes: Vec<(ParameterKind, f64)> = vec![
            (ParameterKind::R9, -((seed % 1000) as f64) / 10.0 - 0.1),
            (ParameterKind::R9, 100.0 + (seed % 1000) as f64 / 10.0 + 0.1),
            (ParameterKind::Uniformity, 1.0 + (seed % 100) as f64 / 10.0 + 0.01),
            (ParameterKind::Svm, 1.0 + (seed % 100) as f64 / 7.0 + 0.01),
            (ParameterKind::Duv, 0.05 + (seed % 50) as f64 / 100.0 + 0.001),
            (ParameterKind::Duv, -0.05 - (seed % 50) as f64 / 100.0 - 0.001),
            (ParameterKind::Rg, 0.99 - (seed % 99) as f64 / 100.0),
            (ParameterKind::Sdcm, 1.0 - (seed % 100) as f64 / 101.0),
            (ParameterKind::Cct, -((seed % 5000) as f64) - 0.5),
            (ParameterKind::Illuminance, -((seed % 2000) as f64) - 0.25),
        ];
        for (p, x) in probes {
            prop_assert!(!p.domain().contains(x), "{p}: probe {x} should be out of domain");
            for cil in CilLevel::ALL {
                let (s, t) = anchor_grid(p)[0];
                let scheme = build_scheme(p, cil, anchors_for(p, s, t)).unwrap();
                let c = classify_value(&scheme, MeasuredValue::ok(x)).unwrap();
                prop_assert_eq!(c.status, HealthStatus::Hs1);
                prop_assert!(c.abnormal);
            }
        }
    }

    #[test]
    fn median_is_permutation_invariant(
        scores in proptest::collection::vec(proptest::option::of(1u8..=5), 1..40),
        shuffle_seed in any::<u64>(),
    ) {
        let table = |rows: &[Option<u8>]| ScoreTable {
            site: "X".into(),
            survey: "X_Test".into(),
            columns: vec![ParameterKind::Illuminance],
            rows: rows
                .iter()
                .map(|s| ScoreRow {
                    environment_id: "env".into(),
                    position: Position::Unspecified,
                    scores: vec![*s],
                })
                .collect(),
        };
        let original = median_by_parameter(&table(&scores));

        // Deterministic shuffle driven by the seed.
        let mut shuffled = scores.clone();
        let mut state = shuffle_seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        let permuted = median_by_parameter(&table(&shuffled));
        prop_assert_eq!(&original.values, &permuted.values);

        // Median stays within the column extremes.
        let present: Vec<u8> = scores.iter().flatten().copied().collect();
        if let Some((median, count)) = original.values[0] {
            prop_assert_eq!(count, present.len());
            let lo = *present.iter().min().unwrap() as f64;
            let hi = *present.iter().max().unwrap() as f64;
            prop_assert!(median >= lo && median <= hi);
        } else {
            prop_assert!(present.is_empty());
        }
    }

    #[test]
    fn in_domain_values_classify_uniquely(x in -100.0f64..2100.0) {
        for p in ParameterKind::ALL {
            if !p.domain().contains(x) {
                continue;
            }
            for cil in CilLevel::ALL {
                let (s, t) = anchor_grid(p)[0];
                let scheme = build_scheme(p, cil, anchors_for(p, s, t)).unwrap();
                let hits = HealthStatus::ALL
                    .iter()
                    .filter(|hs| scheme.band(**hs).contains(x))
                    .count();
                prop_assert_eq!(hits, 1, "{}/{:?} at {}", p, cil, x);
            }
        }
    }
}
