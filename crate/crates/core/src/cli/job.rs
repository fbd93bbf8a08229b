//! Job specifications, built from command-line flags or a flat TOML job
//! file. Both routes produce the same raw key-value map, so equal inputs give
//! equal [`JobSpec`]s.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::rational::{self, Q};
use crate::tilt::BmtForm;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CommandName {
    Slope,
    Charge,
    Discriminant,
    Bmt,
    LineBundle,
    TwoC,
    IdealSheaf,
    P3Family,
    Search,
    Wall,
}

impl CommandName {
    pub const ALL: [CommandName; 10] = [
        Self::Slope,
        Self::Charge,
        Self::Discriminant,
        Self::Bmt,
        Self::LineBundle,
        Self::TwoC,
        Self::IdealSheaf,
        Self::P3Family,
        Self::Search,
        Self::Wall,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Slope => "slope",
            Self::Charge => "charge",
            Self::Discriminant => "discriminant",
            Self::Bmt => "bmt",
            Self::LineBundle => "line-bundle",
            Self::TwoC => "two-c",
            Self::IdealSheaf => "ideal-sheaf",
            Self::P3Family => "p3-family",
            Self::Search => "search",
            Self::Wall => "wall",
        }
    }

    /// Fields the command reads, with their defaults (`None` = required).
    /// A field missing here is rejected when supplied.
    fn fields(self) -> &'static [(&'static str, Option<&'static str>)] {
        const GEOM: [(&str, Option<&str>); 2] = [("D", Some("1")), ("lattice", Some("1,1,2,6"))];
        match self {
            Self::Slope | Self::Charge | Self::Discriminant => &[
                GEOM[0],
                GEOM[1],
                ("alpha_sq", None),
                ("beta", Some("0")),
                ("v", None),
            ],
            Self::Bmt => &[
                GEOM[0],
                GEOM[1],
                ("alpha_sq", None),
                ("beta", Some("0")),
                ("v", None),
                ("form", Some("strong")),
            ],
            Self::LineBundle => &[
                GEOM[0],
                GEOM[1],
                ("alpha_sq", Some("1")),
                ("beta", Some("0")),
                ("k", None),
            ],
            Self::TwoC => &[
                GEOM[0],
                GEOM[1],
                ("alpha_sq", None),
                ("beta", Some("0")),
                ("v", None),
                ("mu_max_sq", Some("")),
            ],
            Self::IdealSheaf => &[
                GEOM[0],
                GEOM[1],
                ("d", None),
                ("ch3_oc", Some("")),
                ("genus", Some("")),
                ("hypersurface", Some("false")),
            ],
            Self::P3Family => &[("n", None), ("m", None)],
            Self::Search => &[
                GEOM[0],
                GEOM[1],
                ("alpha_sq", None),
                ("beta", Some("0")),
                ("v", None),
                ("rank_bound", None),
                ("ch2_bound", None),
                ("quotient_positivity", Some("false")),
                ("prune", Some("false")),
            ],
            Self::Wall => &[
                ("v", None),
                ("w", None),
                ("beta_lo", None),
                ("beta_hi", None),
                ("count", Some("9")),
            ],
        }
    }
}

impl fmt::Display for CommandName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CommandName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse {
                field: "command".into(),
                value: s.into(),
                message: format!(
                    "expected one of {}",
                    Self::ALL.map(|c| c.as_str()).join(", ")
                ),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Rational,
    Vector,
    Lattice,
    Int,
    Bool,
    Form,
}

/// Every field any command accepts, with its value type and help text.
pub const FIELDS: &[(&str, &str)] = &[
    ("D", "degree H^3 of the polarization"),
    ("lattice", "denominators of ch_0..ch_3 in the lattice, e.g. 1,1,2,6"),
    ("alpha_sq", "alpha^2 with omega = alpha H"),
    ("beta", "beta with B = beta H"),
    ("v", "Chern vector ch_0,ch_1,ch_2,ch_3 in units of H^i"),
    ("w", "second Chern vector"),
    ("form", "strong or weak"),
    ("k", "line bundle O(kH)"),
    ("mu_max_sq", "square of the maximal HN slope"),
    ("d", "curve degree H.C"),
    ("ch3_oc", "ch_3(O_C)"),
    ("genus", "arithmetic genus of C"),
    ("hypersurface", "C lies on a smooth degree-D hypersurface in P^4"),
    ("n", "twist n of the rank-three family"),
    ("m", "omega = m H"),
    ("rank_bound", "|w_0| bound of the search box"),
    ("ch2_bound", "|w_2| bound of the search box"),
    ("quotient_positivity", "also require Delta_bar(v - w) >= 0"),
    ("prune", "prune with the line-bundle slope bound"),
    ("beta_lo", "lower end of the beta range"),
    ("beta_hi", "upper end of the beta range"),
    ("count", "number of beta samples"),
];

fn kind(key: &str) -> Kind {
    match key {
        "v" | "w" => Kind::Vector,
        "lattice" => Kind::Lattice,
        "genus" | "n" | "m" | "rank_bound" | "count" => Kind::Int,
        "hypersurface" | "quotient_positivity" | "prune" => Kind::Bool,
        "form" => Kind::Form,
        _ => Kind::Rational,
    }
}

pub fn is_bool_field(key: &str) -> bool {
    kind(key) == Kind::Bool
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Rational(Q),
    Vector(Vec<Q>),
    Lattice([u32; 4]),
    Int(i64),
    Bool(bool),
    Form(BmtForm),
}

impl FieldValue {
    fn parse(key: &str, raw: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            field: key.into(),
            value: raw.into(),
            message: message.into(),
        };
        Ok(match kind(key) {
            Kind::Rational => FieldValue::Rational(rational::parse(key, raw)?),
            Kind::Vector => {
                let xs = rational::parse_list(key, raw)?;
                if xs.len() != 4 {
                    return Err(bad("expected four components ch_0,ch_1,ch_2,ch_3"));
                }
                FieldValue::Vector(xs)
            }
            Kind::Lattice => {
                let parts: Vec<u32> = raw
                    .split(',')
                    .map(|p| p.trim().parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad("expected four positive integers"))?;
                FieldValue::Lattice(
                    parts
                        .try_into()
                        .map_err(|_| bad("expected four positive integers"))?,
                )
            }
            Kind::Int => {
                if raw.contains(['.', 'e', 'E']) {
                    return Err(bad("floating-point literals are not accepted"));
                }
                FieldValue::Int(raw.trim().parse().map_err(|_| bad("expected an integer"))?)
            }
            Kind::Bool => FieldValue::Bool(match raw.trim() {
                "true" => true,
                "false" => false,
                _ => return Err(bad("expected true or false")),
            }),
            Kind::Form => FieldValue::Form(raw.parse()?),
        })
    }

    fn to_json(&self) -> Value {
        match self {
            FieldValue::Rational(x) => json!(rational::format(x)),
            FieldValue::Vector(xs) => json!(xs.iter().map(rational::format).collect::<Vec<_>>()),
            FieldValue::Lattice(l) => json!(l),
            FieldValue::Int(n) => json!(n),
            FieldValue::Bool(b) => json!(b),
            FieldValue::Form(f) => serde_json::to_value(f).expect("enum serializes"),
        }
    }
}

/// Raw `key -> text` pairs with keys normalized (`-` replaced by `_`).
pub type RawFields = BTreeMap<String, String>;

pub fn normalize_key(key: &str) -> String {
    key.trim().replace('-', "_")
}

/// A fully resolved job: the command and every field it reads, defaults
/// filled in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: CommandName,
    values: BTreeMap<String, FieldValue>,
}

impl JobSpec {
    pub fn from_fields(command: CommandName, raw: &RawFields) -> Result<Self> {
        let spec = command.fields();
        if let Some(unknown) = raw.keys().find(|k| spec.iter().all(|(f, _)| f != k)) {
            let message = if FIELDS.iter().any(|(f, _)| f == unknown) {
                format!("not used by command {command}")
            } else {
                "unknown field".to_string()
            };
            return Err(Error::Parse {
                field: unknown.clone(),
                value: raw[unknown].clone(),
                message,
            });
        }
        let mut values = BTreeMap::new();
        for &(key, default) in spec {
            let text = match (raw.get(key), default) {
                (Some(t), _) => t.as_str(),
                (None, Some(d)) => d,
                (None, None) => {
                    return Err(Error::precondition(
                        key,
                        "required field",
                        format!("command {command} needs {key}"),
                    ))
                }
            };
            if text.is_empty() && default == Some("") {
                continue;
            }
            values.insert(key.to_string(), FieldValue::parse(key, text)?);
        }
        Ok(Self { command, values })
    }

    /// The resolved inputs as canonical JSON, for echoing in reports.
    pub fn echo(&self) -> Value {
        let mut map: serde_json::Map<String, Value> =
            self.values.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        map.insert("command".into(), json!(self.command.as_str()));
        Value::Object(map)
    }

    pub(crate) fn get(&self, key: &str) -> Option<&FieldValue> {
        self.values.get(key)
    }

    pub(crate) fn rational(&self, key: &str) -> Option<&Q> {
        match self.get(key)? {
            FieldValue::Rational(x) => Some(x),
            _ => None,
        }
    }

    pub(crate) fn vector(&self, key: &str) -> Option<&[Q]> {
        match self.get(key)? {
            FieldValue::Vector(x) => Some(x),
            _ => None,
        }
    }

    pub(crate) fn int(&self, key: &str) -> Option<i64> {
        match self.get(key)? {
            FieldValue::Int(x) => Some(*x),
            _ => None,
        }
    }

    pub(crate) fn flag(&self, key: &str) -> bool {
        matches!(self.get(key), Some(FieldValue::Bool(true)))
    }

    pub(crate) fn form(&self) -> BmtForm {
        match self.get("form") {
            Some(FieldValue::Form(f)) => *f,
            _ => BmtForm::Strong,
        }
    }

    pub(crate) fn lattice(&self) -> Option<[u32; 4]> {
        match self.get("lattice")? {
            FieldValue::Lattice(l) => Some(*l),
            _ => None,
        }
    }
}

/// Contents of a job file: the optional `command` key and the raw fields.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Jobfile {
    pub command: Option<String>,
    pub fields: RawFields,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn key_line(text: &str, key: &str) -> Option<usize> {
    text.lines().position(|l| {
        let l = l.trim_start();
        let k = l.split('=').next().unwrap_or("").trim().trim_matches('"');
        l.contains('=') && normalize_key(k) == key
    })
    .map(|i| i + 1)
}

/// Parses a flat TOML job file. Values may be strings, integers, booleans
/// or arrays of strings and integers; floats and nested tables are errors.
pub fn parse_jobfile(text: &str) -> Result<Jobfile> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| Error::Jobfile {
        line: e.span().map(|s| line_of(text, s.start)),
        field: "syntax".into(),
        message: e.message().to_string(),
    })?;
    let mut out = Jobfile::default();
    for (key, value) in table {
        let norm = normalize_key(&key);
        let err = |message: &str| Error::Jobfile {
            line: key_line(text, &norm),
            field: norm.clone(),
            message: message.into(),
        };
        let scalar = |v: &toml::Value| -> Result<String> {
            match v {
                toml::Value::String(s) => Ok(s.clone()),
                toml::Value::Integer(n) => Ok(n.to_string()),
                toml::Value::Boolean(b) => Ok(b.to_string()),
                toml::Value::Float(_) => Err(err("floating-point values are not accepted; write \"p/q\"")),
                _ => Err(err("expected a string, integer or boolean")),
            }
        };
        let text_value = match &value {
            toml::Value::Array(items) => items.iter().map(scalar).collect::<Result<Vec<_>>>()?.join(","),
            other => scalar(other)?,
        };
        if norm == "command" {
            out.command = Some(text_value);
        } else if FIELDS.iter().any(|(f, _)| *f == norm) {
            if let Some(bad) = FieldValue::parse(&norm, &text_value).err() {
                return Err(err(&bad.to_string()));
            }
            out.fields.insert(norm, text_value);
        } else {
            return Err(err("unknown field"));
        }
    }
    Ok(out)
}

pub fn load_jobfile(path: &Path) -> Result<Jobfile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_jobfile(&text)
}

/// Merges a job file with flag values (flags win) into a [`JobSpec`].
pub fn resolve(
    file: Option<Jobfile>,
    command: Option<CommandName>,
    flags: RawFields,
) -> Result<JobSpec> {
    let file = file.unwrap_or_default();
    let command = match (command, &file.command) {
        (Some(c), _) => c,
        (None, Some(c)) => c.parse()?,
        (None, None) => {
            return Err(Error::precondition(
                "command",
                "required field",
                "give a command or a job file with a command key",
            ))
        }
    };
    let mut fields = file.fields;
    fields.extend(flags);
    JobSpec::from_fields(command, &fields)
}
