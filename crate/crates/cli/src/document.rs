//! JSON document format for spherical systems.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;
use wonderful_core::{
    Color, Component, Functional, Label, LatticeVector, Rational, RootSystem, Series,
    SphericalSystem,
};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {message} at line {line}, column {column}")]
    Syntax {
        path: String,
        message: String,
        line: usize,
        column: usize,
    },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: impl Into<String>, message: impl fmt::Display) -> DocumentError {
    DocumentError::Field {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub root_system: RootSystemDoc,
    pub spherical_roots: Vec<RootDoc>,
    pub colors: Vec<ColorDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemDoc {
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub series: String,
    pub rank: usize,
    /// Omitted when the labels continue the default numbering `a1, a2, ...`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDoc {
    pub coeffs: Coeffs,
}

/// Coefficients keyed by label, written in root-system order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Coeffs(pub Vec<(String, i64)>);

impl Serialize for Coeffs {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Coeffs {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Coeffs;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from simple root labels to integers")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<Coeffs, A::Error> {
                let mut out: Vec<(String, i64)> = Vec::new();
                while let Some((k, v)) = m.next_entry::<String, i64>()? {
                    if out.iter().any(|(l, _)| *l == k) {
                        return Err(de::Error::custom(format!("duplicate label `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(Coeffs(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColorDoc {
    pub id: String,
    pub moved_by: Vec<String>,
    pub phi: Vec<RationalDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Text(String),
}

impl RationalDoc {
    fn from_rational(q: Rational) -> Self {
        if q.is_integer() {
            RationalDoc::Int(q.to_integer())
        } else {
            RationalDoc::Text(q.to_string())
        }
    }

    fn to_rational(&self) -> Result<Rational, String> {
        match self {
            RationalDoc::Int(n) => Ok(Rational::from_integer(*n)),
            RationalDoc::Text(s) => {
                let (p, q) = match s.split_once('/') {
                    Some((p, q)) => (p.trim(), q.trim()),
                    None => (s.trim(), "1"),
                };
                let p: i64 = p.parse().map_err(|_| format!("not a rational: `{s}`"))?;
                let q: i64 = q.parse().map_err(|_| format!("not a rational: `{s}`"))?;
                if q == 0 {
                    return Err(format!("zero denominator in `{s}`"));
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Document, DocumentError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        DocumentError::Syntax {
            path,
            message: strip_position(&inner.to_string()),
            line: inner.line(),
            column: inner.column(),
        }
    })?;
    Ok(doc)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn to_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn default_labels(offset: usize, rank: usize) -> Vec<String> {
    (offset + 1..=offset + rank)
        .map(|k| format!("a{k}"))
        .collect()
}

impl Document {
    pub fn from_system(s: &SphericalSystem) -> Self {
        let rs = s.root_system();
        let mut offset = 0;
        let components = rs
            .components()
            .iter()
            .map(|c| {
                let names: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
                let labels = (names != default_labels(offset, c.rank)).then_some(names);
                offset += c.rank;
                ComponentDoc {
                    series: c.series.to_string(),
                    rank: c.rank,
                    labels,
                }
            })
            .collect();
        let order = |l: &Label| rs.index_of(l).unwrap_or(usize::MAX);
        let spherical_roots = s
            .spherical_roots()
            .iter()
            .map(|r| {
                let mut pairs: Vec<(&Label, i64)> = r.iter().collect();
                pairs.sort_by_key(|(l, _)| order(l));
                RootDoc {
                    coeffs: Coeffs(pairs.into_iter().map(|(l, c)| (l.to_string(), c)).collect()),
                }
            })
            .collect();
        let colors = s
            .colors()
            .iter()
            .map(|c| {
                let mut moved: Vec<&Label> = c.moved_by.iter().collect();
                moved.sort_by_key(|l| order(l));
                ColorDoc {
                    id: c.id.clone(),
                    moved_by: moved.into_iter().map(|l| l.to_string()).collect(),
                    phi: c
                        .phi
                        .values()
                        .iter()
                        .map(|&q| RationalDoc::from_rational(q))
                        .collect(),
                }
            })
            .collect();
        Document {
            root_system: RootSystemDoc { components },
            spherical_roots,
            colors,
        }
    }

    pub fn to_system(&self) -> Result<SphericalSystem, DocumentError> {
        let mut components = Vec::new();
        let mut offset = 0;
        for (i, c) in self.root_system.components.iter().enumerate() {
            let path = format!("root_system.components[{i}]");
            let series: Series = c
                .series
                .parse()
                .map_err(|e| field(format!("{path}.series"), e))?;
            series
                .check_rank(c.rank)
                .map_err(|e| field(format!("{path}.rank"), e))?;
            let names = match &c.labels {
                Some(names) if names.len() != c.rank => {
                    return Err(field(
                        format!("{path}.labels"),
                        format!("expected {} labels, found {}", c.rank, names.len()),
                    ))
                }
                Some(names) => names.clone(),
                None => default_labels(offset, c.rank),
            };
            offset += c.rank;
            components.push(Component {
                series,
                rank: c.rank,
                labels: names.into_iter().map(Label::new).collect(),
            });
        }
        let rs = RootSystem::from_components(components).map_err(|e| field("root_system", e))?;
        let known = |path: String, name: &str| -> Result<Label, DocumentError> {
            let l = Label::new(name);
            if rs.contains(&l) {
                Ok(l)
            } else {
                Err(field(path, format!("unknown simple root label `{name}`")))
            }
        };

        let mut psi = Vec::new();
        for (i, r) in self.spherical_roots.iter().enumerate() {
            let mut v = LatticeVector::zero();
            for (name, c) in &r.coeffs.0 {
                let l = known(format!("spherical_roots[{i}].coeffs.{name}"), name)?;
                v.set_coeff(l, *c);
            }
            psi.push(v);
        }

        let mut colors = Vec::new();
        for (i, c) in self.colors.iter().enumerate() {
            let path = format!("colors[{i}]");
            let mut moved_by = BTreeSet::new();
            for (j, name) in c.moved_by.iter().enumerate() {
                moved_by.insert(known(format!("{path}.moved_by[{j}]"), name)?);
            }
            let phi = c
                .phi
                .iter()
                .enumerate()
                .map(|(j, q)| {
                    q.to_rational()
                        .map_err(|m| field(format!("{path}.phi[{j}]"), m))
                })
                .collect::<Result<Vec<_>, _>>()?;
            colors.push(Color {
                id: c.id.clone(),
                moved_by,
                phi: Functional::new(phi),
            });
        }
        SphericalSystem::new(rs, psi, colors).map_err(|e| field("colors", e))
    }
}
