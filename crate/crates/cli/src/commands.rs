//! Subcommand implementations. Each returns the rendered output string;
//! IO (stdout vs --out) is handled by the caller.

use luxcil_core::{
    average_across, compare_series, fixture_deviations, radar_data, MedianVector, ParameterKind,
};

use crate::config::load_profiles;
use crate::csvio::load_measurements;
use crate::emit::{
    radar_doc, render_assignments, render_classifications, render_compare, render_report,
    render_scheme_book, render_scores, CompareDoc, LabeledValues, OutputFormat, ScoreDoc,
};
use crate::error::{AppError, AppResult};
use crate::pipeline::{assess, build_book};

pub fn cmd_assign_cil(profiles: &str, format: OutputFormat) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    Ok(render_assignments(&registry.cil_assignments(), format))
}

pub fn cmd_thresholds(
    profiles: &str,
    param_filter: Option<&str>,
    with_deviations: bool,
    format: OutputFormat,
) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    let filter = param_filter
        .map(|token| {
            ParameterKind::from_token(token).ok_or_else(|| {
                let valid: Vec<&str> = ParameterKind::ALL.iter().map(|p| p.token()).collect();
                AppError::validation(format!(
                    "unknown parameter filter \"{token}\"; valid tokens: {}",
                    valid.join(", ")
                ))
            })
        })
        .transpose()?;
    let book = build_book(&registry)?;
    let ledger = fixture_deviations();
    Ok(render_scheme_book(
        &book,
        filter,
        with_deviations.then_some(&ledger),
        format,
    ))
}

pub fn cmd_classify(profiles: &str, measurements: &str, format: OutputFormat) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    let book = build_book(&registry)?;
    let survey = load_measurements(measurements)?;
    let assessment = assess(&registry, &book, survey)?;
    Ok(render_classifications(&assessment.classify_doc(), format))
}

pub fn cmd_score(profiles: &str, measurements: &str, format: OutputFormat) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    let book = build_book(&registry)?;
    let survey = load_measurements(measurements)?;
    let assessment = assess(&registry, &book, survey)?;
    Ok(render_scores(&assessment.score_doc(), format))
}

pub fn cmd_report(profiles: &str, measurements: &str, format: OutputFormat) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    let book = build_book(&registry)?;
    let survey = load_measurements(measurements)?;
    let assessment = assess(&registry, &book, survey)?;
    render_report(&assessment.report(&book), format)
}

/// Inputs to `compare`: structured score documents and/or raw measurement
/// files scored against a profile registry.
pub struct CompareInputs<'a> {
    pub score_docs: &'a [String],
    pub profiles: Option<&'a str>,
    pub measurements: &'a [String],
}

pub fn cmd_compare(
    inputs: CompareInputs<'_>,
    include_average: bool,
    format: OutputFormat,
) -> AppResult<String> {
    let mut medians: Vec<MedianVector> = Vec::new();
    for path in inputs.score_docs {
        let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        let doc: ScoreDoc =
            serde_json::from_str(&text).map_err(|e| AppError::parse(path, e.to_string()))?;
        medians.push(doc.median_vector()?);
    }
    if !inputs.measurements.is_empty() {
        let profiles = inputs.profiles.ok_or_else(|| {
            AppError::validation("--measurements inputs need --profiles".to_string())
        })?;
        let registry = load_profiles(profiles)?;
        let book = build_book(&registry)?;
        for path in inputs.measurements {
            let survey = load_measurements(path)?;
            let assessment = assess(&registry, &book, survey)?;
            medians.push(assessment.medians.clone());
        }
    }
    if medians.len() < 2 {
        return Err(AppError::validation(format!(
            "need at least two score inputs to compare, got {}",
            medians.len()
        )));
    }

    let columns: Vec<ParameterKind> = medians[0].columns.clone();
    let average = if include_average {
        Some(average_across(&medians).map_err(|e| AppError::validation(e.to_string()))?)
    } else {
        None
    };
    let mut deltas = Vec::new();
    for i in 0..medians.len() {
        for j in (i + 1)..medians.len() {
            let delta = compare_series(&medians[i], &medians[j])
                .map_err(|e| AppError::validation(e.to_string()))?;
            deltas.push(LabeledValues {
                label: format!("{} - {}", medians[j].label, medians[i].label),
                values: delta.into_iter().map(|(_, d)| d).collect(),
            });
        }
    }
    let radar = radar_data(&medians, include_average)
        .map_err(|e| AppError::validation(e.to_string()))?;

    let doc = CompareDoc {
        columns: columns.iter().map(|p| p.label().to_string()).collect(),
        medians: medians
            .iter()
            .map(|m| LabeledValues {
                label: m.label.clone(),
                values: m.values.iter().map(|v| v.map(|(x, _)| x)).collect(),
            })
            .collect(),
        average: average.map(|a| LabeledValues {
            label: "average".to_string(),
            values: a.values.clone(),
        }),
        deltas,
        radar: radar.iter().map(radar_doc).collect(),
    };
    Ok(render_compare(&doc, format))
}

pub fn cmd_validate(profiles: &str, measurements: &[String]) -> AppResult<String> {
    let registry = load_profiles(profiles)?;
    let book = build_book(&registry)?;
    let mut out = String::new();
    out.push_str(&format!(
        "profiles: {} environments ({} derived, {} overridden)\n",
        registry.profiles().len(),
        registry.cil_assignments().iter().filter(|a| !a.overridden).count(),
        registry.cil_assignments().iter().filter(|a| a.overridden).count(),
    ));
    for a in registry.cil_assignments() {
        out.push_str(&format!(
            "  {}: {} [{}] {} -> {}{}\n",
            a.environment_id,
            a.objective,
            a.age_groups,
            a.mtoe_class,
            a.cil,
            if a.overridden { " (override)" } else { "" },
        ));
    }
    for path in measurements {
        let survey = load_measurements(path)?;
        let assessment = assess(&registry, &book, survey)?;
        let missing: usize = assessment.records.iter().map(|r| r.missing_count()).sum();
        let abnormal: usize = assessment
            .records
            .iter()
            .flat_map(|r| r.results.iter())
            .filter(|(_, c)| c.abnormal)
            .count();
        out.push_str(&format!(
            "{path}: survey {} (site {}), {} records, {} missing readings, {} abnormal readings\n",
            assessment.survey.label,
            assessment.survey.site,
            assessment.survey.records.len(),
            missing,
            abnormal,
        ));
    }
    out.push_str("ok\n");
    Ok(out)
}

/// Absolute paths of the bundled fixture corpus.
pub fn fixture_paths() -> Vec<String> {
    let base = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    [
        "profiles.toml",
        "survey_profiles.toml",
        "library_g_feb2023.csv",
        "library_s_mar2023.csv",
        "library_s_oct2023.csv",
        "library_c_mar2023.csv",
        "library_c_oct2023.csv",
    ]
    .iter()
    .map(|name| format!("{base}/{name}"))
    .collect()
}

pub fn cmd_fixtures() -> String {
    let mut out = String::new();
    for path in fixture_paths() {
        out.push_str(&path);
        out.push('\n');
    }
    out
}
