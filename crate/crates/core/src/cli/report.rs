//! Report envelope and its JSON, CSV and text renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Hypotheses the verdicts depend on that are not checked numerically.
    pub assumptions: Vec<String>,
    pub warnings: Vec<String>,
    /// The criterion a verdict-bearing report applies.
    pub proposition: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse {
                field: "format".into(),
                value: s.into(),
                message: "expected json, csv or text".into(),
            }),
        }
    }
}

pub const FAMILY_HEADER: [&str; 10] = [
    "n", "m", "c2", "c3", "ch0", "ch1", "ch2", "ch3", "nu_zero", "bmt_violated",
];
pub const WALL_HEADER: [&str; 2] = ["beta", "alpha_sq"];
pub const CANDIDATE_HEADER: [&str; 10] = [
    "w0",
    "w1",
    "w2",
    "w3",
    "nu_hat",
    "strict",
    "infinite_slope",
    "sub_delta_bar",
    "quotient_delta_bar",
    "quotient_nu_hat",
];

/// Canonical JSON: keys sorted at every level, rationals as strings,
/// two-space indentation, trailing newline.
pub fn to_canonical_json(value: &impl Serialize) -> String {
    // serde_json's map type is ordered, so routing through `Value` sorts keys.
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn emit(report: &ReportEnvelope, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_canonical_json(report)),
        Format::Csv => emit_csv(report),
        Format::Text => Ok(emit_text(report)),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn emit_csv(report: &ReportEnvelope) -> Result<String> {
    let r = &report.results;
    let (header, rows): (&[&str], Vec<Vec<String>>) = match report.command.as_str() {
        "p3-family" => (
            &FAMILY_HEADER,
            array(r, "members")
                .map(|m| {
                    let mut row: Vec<String> = ["n", "m", "c2", "c3"].iter().map(|k| cell(&m[k])).collect();
                    row.extend(array(m, "chern_f").map(cell));
                    row.push(cell(&m["nu_zero_verified"]));
                    row.push(cell(&m["bmt_violated"]));
                    row
                })
                .collect(),
        ),
        "wall" => (
            &WALL_HEADER,
            array(&r["sample"], "points")
                .map(|p| vec![cell(&p["beta"]), cell(&p["alpha_sq"])])
                .collect(),
        ),
        "search" => {
            let rows = ["finite", "infinite_slope"]
                .iter()
                .flat_map(|list| array(r, list).map(move |c| (c, *list == "infinite_slope")))
                .map(|(c, inf)| {
                    let mut row: Vec<String> = array(c, "w").map(cell).collect();
                    row.push(cell(&c["nu_hat_w"]));
                    row.push(cell(&c["strict"]));
                    row.push(inf.to_string());
                    for k in ["sub_delta_bar", "quotient_delta_bar", "quotient_nu_hat"] {
                        row.push(cell(&c[k]));
                    }
                    row
                })
                .collect();
            (&CANDIDATE_HEADER, rows)
        }
        other => {
            return Err(Error::precondition(
                "format",
                "csv output is available for p3-family, wall and search",
                format!("command {other} has no tabular result"),
            ))
        }
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
}

fn array<'a>(v: &'a Value, key: &str) -> impl Iterator<Item = &'a Value> {
    v[key].as_array().into_iter().flatten()
}

fn emit_text(report: &ReportEnvelope) -> String {
    let mut out = format!("{}\n", report.command);
    if let Some(p) = &report.proposition {
        out.push_str(&format!("criterion: {p}\n"));
    }
    flatten("", &report.results, &mut out);
    for a in &report.assumptions {
        out.push_str(&format!("assumes: {a}\n"));
    }
    for w in &report.warnings {
        out.push_str(&format!("WARNING: {w}\n"));
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = xs.iter().map(cell).collect();
            out.push_str(&format!("{prefix}: ({})\n", items.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", cell(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn envelope(command: &str, results: Value) -> ReportEnvelope {
        ReportEnvelope {
            schema: SCHEMA_VERSION,
            command: command.into(),
            inputs: json!({"command": command}),
            results,
            assumptions: vec!["Pic = Z H".into()],
            warnings: vec![],
            proposition: None,
        }
    }

    #[test]
    fn json_keys_sorted() {
        let s = emit(&envelope("slope", json!({"z": "1", "a": "2"})), Format::Json).unwrap();
        let a = s.find("\"a\"").unwrap();
        let z = s.find("\"z\"").unwrap();
        assert!(a < z);
        assert!(s.find("\"assumptions\"").unwrap() < s.find("\"command\"").unwrap());
    }

    #[test]
    fn wall_csv() {
        let r = envelope(
            "wall",
            json!({"sample": {"points": [{"beta": "1/2", "alpha_sq": "3/4"}], "vertical": []}}),
        );
        assert_eq!(emit(&r, Format::Csv).unwrap(), "beta,alpha_sq\n1/2,3/4\n");
        assert!(emit(&envelope("slope", json!({})), Format::Csv).is_err());
    }
}
