//! Measurement CSV ingestion and the canonical CSV writer.
//!
//! One row per (environment, position). Missing readings are "" or "/",
//! abnormal readings carry a trailing "*" with the numeric value retained.

use std::collections::HashMap;

use luxcil_core::{MeasuredValue, MeasurementRecord, ParameterKind, Position, Survey, TriState};

use crate::error::{AppError, AppResult};

/// The nine parameters carried by measurement files, in column order.
pub const VALUE_COLUMNS: [ParameterKind; 9] = [
    ParameterKind::Illuminance,
    ParameterKind::Ra,
    ParameterKind::R9,
    ParameterKind::Rf,
    ParameterKind::Rg,
    ParameterKind::Cct,
    ParameterKind::Duv,
    ParameterKind::Svm,
    ParameterKind::Eml,
];

const CONTEXT_COLUMNS: [&str; 7] = [
    "site_id",
    "survey_label",
    "environment_id",
    "objective",
    "shelf_lighting",
    "daylight",
    "position",
];

fn expected_columns() -> Vec<&'static str> {
    CONTEXT_COLUMNS
        .iter()
        .copied()
        .chain(VALUE_COLUMNS.iter().map(|p| p.token()))
        .collect()
}

fn cell_error(path: &str, row: usize, column: &str, message: impl AsRef<str>) -> AppError {
    AppError::parse(
        path,
        format!("row {row}, column \"{column}\": {}", message.as_ref()),
    )
}

fn parse_value_cell(
    path: &str,
    row: usize,
    parameter: ParameterKind,
    cell: &str,
) -> AppResult<MeasuredValue> {
    let trimmed = cell.trim();
    if trimmed.is_empty() || trimmed == "/" {
        return Ok(MeasuredValue::Missing);
    }
    let (number_text, flagged) = match trimmed.strip_suffix('*') {
        Some(body) => (body.trim(), true),
        None => (trimmed, false),
    };
    let value: f64 = number_text.parse().map_err(|_| {
        cell_error(path, row, parameter.token(), format!("cannot parse \"{trimmed}\" as a number"))
    })?;
    if !value.is_finite() {
        return Err(cell_error(path, row, parameter.token(), "value must be finite"));
    }
    if flagged && parameter.domain().contains(value) {
        return Err(cell_error(
            path,
            row,
            parameter.token(),
            format!("value {value} is marked abnormal but lies inside the {parameter} domain"),
        ));
    }
    Ok(if flagged {
        MeasuredValue::abnormal(value)
    } else {
        MeasuredValue::ok(value)
    })
}

/// Parse one measurement CSV into a survey. Record order equals file order.
pub fn parse_measurements(path: &str, text: &str) -> AppResult<Survey> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(false)
        .from_reader(text.as_bytes());

    let headers = reader
        .headers()
        .map_err(|e| AppError::parse(path, e.to_string()))?
        .clone();
    let expected = expected_columns();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in headers.iter().enumerate() {
        let canonical = expected
            .iter()
            .find(|c| c.eq_ignore_ascii_case(name))
            .ok_or_else(|| AppError::parse(path, format!("unknown column \"{name}\"")))?;
        if index.insert(canonical, i).is_some() {
            return Err(AppError::parse(path, format!("duplicate column \"{name}\"")));
        }
    }
    for column in &expected {
        if !index.contains_key(column) {
            return Err(AppError::parse(path, format!("missing column \"{column}\"")));
        }
    }
    let field = |record: &csv::StringRecord, column: &str| -> String {
        record.get(index[column]).unwrap_or("").to_string()
    };

    let mut survey: Option<Survey> = None;
    let mut seen: Vec<(String, Position)> = Vec::new();
    for (i, result) in reader.records().enumerate() {
        let row = i + 2; // 1-based, after the header
        let record = result.map_err(|e| AppError::parse(path, e.to_string()))?;

        let site = field(&record, "site_id");
        let label = field(&record, "survey_label");
        match &survey {
            None => survey = Some(Survey::new(site.clone(), label.clone())),
            Some(s) => {
                if s.site != site || s.label != label {
                    return Err(cell_error(
                        path,
                        row,
                        "survey_label",
                        format!(
                            "file mixes surveys: started as {}/{}, found {site}/{label}",
                            s.site, s.label
                        ),
                    ));
                }
            }
        }

        let environment_id = field(&record, "environment_id");
        if environment_id.is_empty() {
            return Err(cell_error(path, row, "environment_id", "must not be empty"));
        }
        let mut measurement =
            MeasurementRecord::new(environment_id.clone(), field(&record, "objective"));
        let shelf = field(&record, "shelf_lighting");
        measurement.shelf_lighting = TriState::from_token(&shelf).ok_or_else(|| {
            cell_error(path, row, "shelf_lighting", format!("unknown token \"{shelf}\""))
        })?;
        let daylight = field(&record, "daylight");
        measurement.daylight = TriState::from_token(&daylight).ok_or_else(|| {
            cell_error(path, row, "daylight", format!("unknown token \"{daylight}\""))
        })?;
        let position = field(&record, "position");
        measurement.position = Position::from_token(&position).ok_or_else(|| {
            cell_error(path, row, "position", format!("unknown token \"{position}\""))
        })?;

        let key = (environment_id, measurement.position);
        if seen.contains(&key) {
            return Err(cell_error(
                path,
                row,
                "position",
                format!("duplicate (environment, position) pair \"{}\"/{}", key.0, key.1),
            ));
        }
        seen.push(key);

        for parameter in VALUE_COLUMNS {
            let cell = field(&record, parameter.token());
            let value = parse_value_cell(path, row, parameter, &cell)?;
            measurement.set_value(parameter, value);
        }
        survey.as_mut().unwrap().records.push(measurement);
    }

    Ok(survey.unwrap_or_else(|| Survey::new(String::new(), String::new())))
}

/// Read and parse a measurement file from disk.
pub fn load_measurements(path: &str) -> AppResult<Survey> {
    let text = std::fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_measurements(path, &text)
}

fn value_cell(value: MeasuredValue) -> String {
    match value {
        MeasuredValue::Missing => "/".to_string(),
        MeasuredValue::Value { value, abnormal: false } => format!("{value}"),
        MeasuredValue::Value { value, abnormal: true } => format!("{value}*"),
    }
}

/// Write a survey back out in canonical CSV form.
pub fn emit_measurements(survey: &Survey) -> String {
    let mut out = String::new();
    out.push_str(&expected_columns().join(","));
    out.push('\n');
    for record in &survey.records {
        let mut fields: Vec<String> = vec![
            survey.site.clone(),
            survey.label.clone(),
            record.environment_id.clone(),
            record.objective.clone(),
            record.shelf_lighting.token().to_string(),
            record.daylight.token().to_string(),
            record.position.token().to_string(),
        ];
        for parameter in VALUE_COLUMNS {
            let cell = record
                .value(parameter)
                .map(value_cell)
                .unwrap_or_else(|| "/".to_string());
            fields.push(cell);
        }
        // Objective labels may contain spaces and slashes but never commas
        // or quotes; everything else is machine tokens.
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "site_id,survey_label,environment_id,objective,shelf_lighting,daylight,position,lux,ra,r9,rf,rg,cct,duv,svm,eml";

    fn one_row(row: &str) -> String {
        format!("{HEADER}\n{row}\n")
    }

    #[test]
    fn abnormal_marker_keeps_value() {
        let text = one_row(
            "G,G_Feb2023,table_hobby,Table_Hobby_Children,/,no,/,447,83,-1*,79,101,2838,0.0049,0,122",
        );
        let survey = parse_measurements("t.csv", &text).unwrap();
        assert_eq!(survey.site, "G");
        assert_eq!(survey.label, "G_Feb2023");
        let record = &survey.records[0];
        assert_eq!(
            record.value(ParameterKind::R9),
            Some(MeasuredValue::abnormal(-1.0))
        );
        assert_eq!(record.value(ParameterKind::Illuminance), Some(MeasuredValue::ok(447.0)));
        assert_eq!(record.shelf_lighting, TriState::Unspecified);
        assert_eq!(record.daylight, TriState::No);
    }

    #[test]
    fn all_missing_row_is_empty_record() {
        let text = one_row("C,C_Oct2023,table_hobby,Table_Hobby_Children,no,no,/,/,/,/,/,/,/,/,/,/");
        let survey = parse_measurements("t.csv", &text).unwrap();
        assert!(survey.records[0].is_empty());
    }

    #[test]
    fn empty_cell_is_missing() {
        let text = one_row("S,S_Mar2023,counter,Table Counter_multifunction_Staff,no,no,/,300,94,64,93,100,3219,-0.0006,0,");
        let survey = parse_measurements("t.csv", &text).unwrap();
        let record = &survey.records[0];
        assert_eq!(record.value(ParameterKind::Eml), Some(MeasuredValue::Missing));
        assert!(!record.is_empty());
    }

    #[test]
    fn unknown_column_is_rejected() {
        let text = format!("{HEADER},extra\nG,G_Feb2023,e,o,/,/,/,1,1,1,1,99,1,0,0,1,9\n");
        let err = parse_measurements("t.csv", &text).unwrap_err();
        assert!(err.to_string().contains("unknown column"));
    }

    #[test]
    fn non_numeric_cell_reports_coordinates() {
        let text = one_row("G,G_Feb2023,e,Table_Hobby_Children,/,/,/,abc,83,6,79,101,2838,0.0049,0,122");
        let err = parse_measurements("t.csv", &text).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("row 2"), "{message}");
        assert!(message.contains("lux"), "{message}");
    }

    #[test]
    fn duplicate_environment_position_is_rejected() {
        let row = "G,G_Feb2023,shelf,Bookshelf_Display_Adult,yes,no,high,100,83,6,79,101,2838,0.0049,0,122";
        let text = format!("{HEADER}\n{row}\n{row}\n");
        let err = parse_measurements("t.csv", &text).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
        assert!(err.to_string().contains("row 3"));
    }

    #[test]
    fn abnormal_marker_inside_domain_is_rejected() {
        let text = one_row("G,G_Feb2023,e,Table_Hobby_Children,/,/,/,447,83,50*,79,101,2838,0.0049,0,122");
        let err = parse_measurements("t.csv", &text).unwrap_err();
        assert!(err.to_string().contains("marked abnormal"));
    }

    #[test]
    fn mixed_surveys_are_rejected() {
        let text = format!(
            "{HEADER}\nG,G_Feb2023,a,Table_Hobby_Children,/,/,/,1,83,6,79,101,2838,0,0,1\nS,S_Mar2023,b,Table_Hobby_Children,/,/,/,1,83,6,79,101,2838,0,0,1\n"
        );
        let err = parse_measurements("t.csv", &text).unwrap_err();
        assert!(err.to_string().contains("mixes surveys"));
    }

    #[test]
    fn header_only_file_is_an_empty_survey() {
        let survey = parse_measurements("t.csv", &format!("{HEADER}\n")).unwrap();
        assert!(survey.records.is_empty());
    }

    #[test]
    fn roundtrip_is_stable() {
        let text = format!(
            "{HEADER}\nG,G_Feb2023,shelf,Bookshelf_Display_Adult,yes,no,high,1221,85,6,82,101,2929,0.0017,0,353\nG,G_Feb2023,t,Table_Hobby_Children,/,/,screen,/,/,-13*,/,/,/,13*,/,\n"
        );
        let parsed = parse_measurements("t.csv", &text).unwrap();
        let emitted = emit_measurements(&parsed);
        let reparsed = parse_measurements("t.csv", &emitted).unwrap();
        assert_eq!(parsed, reparsed);
        assert_eq!(emit_measurements(&reparsed), emitted);
    }
}
