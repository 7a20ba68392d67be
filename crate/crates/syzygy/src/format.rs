//! JSON files for ideals and module presentations.
//!
//! ```json
//! {
//!   "field": { "characteristic": 0 },
//!   "variables": ["x", "y"],
//!   "generators": [
//!     [{ "coefficient": 1, "exponents": [2, 0] }],
//!     [{ "coefficient": "-3/2", "exponents": [0, 2] }]
//!   ]
//! }
//! ```
//!
//! Coefficients are JSON integers or strings `"a"` / `"a/b"`. Writing emits integers
//! that fit in `i64` as numbers and everything else as strings, so a written file
//! parses back to the same description and re-serializes to the same bytes.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use syzygy_core::exactla::{Field, FieldSpec};
use syzygy_core::gradedring::{Coefficient, IdealDescription, Presentation, Relation, Term};
use syzygy_core::gradedring::{ExponentVector, Polynomial};

/// A malformed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// `line L, column C` for syntax and type errors, a JSON path otherwise.
    pub location: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            location: location.into(),
            message: message.into(),
        }
    }

    fn from_json(e: serde_json::Error) -> Self {
        let msg = e.to_string();
        // serde_json appends " at line L column C"; keep the message without it.
        let message = match msg.rfind(" at line ") {
            Some(k) => msg[..k].to_string(),
            None => msg,
        };
        ParseError::at(format!("line {}, column {}", e.line(), e.column()), message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Coeff(Coefficient);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let small = if self.0.is_integer() {
            i64::try_from(&self.0.numer).ok()
        } else {
            None
        };
        match small {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string \"a/b\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coeff, E> {
                Ok(Coeff(Coefficient::integer(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coeff, E> {
                Ok(Coeff(Coefficient {
                    numer: BigInt::from(v),
                    denom: BigInt::from(1),
                }))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coeff, E> {
                Err(E::custom(format!(
                    "coefficient {v} is not exact; write it as a string \"a/b\""
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coeff, E> {
                Coefficient::parse(v)
                    .map(Coeff)
                    .ok_or_else(|| E::custom(format!("bad coefficient {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    coefficient: Coeff,
    exponents: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldFile {
    characteristic: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFile {
    field: FieldFile,
    variables: Vec<String>,
    generators: Vec<Vec<TermFile>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationFile {
    degree: i64,
    components: Vec<Vec<TermFile>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    generators: Vec<i64>,
    relations: Vec<RelationFile>,
}

fn check_terms(path: &str, terms: &[TermFile], nvars: usize) -> Result<(), ParseError> {
    for (k, t) in terms.iter().enumerate() {
        if t.exponents.len() != nvars {
            return Err(ParseError::at(
                format!("{path}[{k}].exponents"),
                format!("{} exponents for {nvars} variables", t.exponents.len()),
            ));
        }
    }
    let mut seen: Vec<&[u32]> = terms.iter().map(|t| t.exponents.as_slice()).collect();
    seen.sort();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(ParseError::at(path, "repeated monomial"));
    }
    Ok(())
}

fn terms_of(terms: Vec<TermFile>) -> Vec<Term> {
    terms
        .into_iter()
        .map(|t| Term {
            coefficient: t.coefficient.0,
            exponents: t.exponents,
        })
        .collect()
}

fn term_files(terms: &[Term]) -> Vec<TermFile> {
    terms
        .iter()
        .map(|t| TermFile {
            coefficient: Coeff(t.coefficient.clone()),
            exponents: t.exponents.clone(),
        })
        .collect()
}

pub fn parse_ideal(text: &str) -> Result<IdealDescription, ParseError> {
    let file: IdealFile = serde_json::from_str(text).map_err(ParseError::from_json)?;
    FieldSpec::new(file.field.characteristic).map_err(|_| {
        ParseError::at(
            "field.characteristic",
            format!("{} is neither 0 nor a prime", file.field.characteristic),
        )
    })?;
    let e = file.variables.len();
    if e == 0 {
        return Err(ParseError::at(
            "variables",
            "at least one variable is needed",
        ));
    }
    for (i, v) in file.variables.iter().enumerate() {
        if file.variables[..i].contains(v) {
            return Err(ParseError::at(
                format!("variables[{i}]"),
                format!("duplicate name {v:?}"),
            ));
        }
    }
    for (g, terms) in file.generators.iter().enumerate() {
        let path = format!("generators[{g}]");
        check_terms(&path, terms, e)?;
        let mut degrees = terms.iter().map(|t| t.exponents.iter().sum::<u32>());
        if let Some(d) = degrees.next() {
            if degrees.any(|x| x != d) {
                return Err(ParseError::at(path, "generator is not homogeneous"));
            }
        }
    }
    Ok(IdealDescription {
        characteristic: file.field.characteristic,
        variables: file.variables,
        generators: file.generators.into_iter().map(terms_of).collect(),
    })
}

pub fn write_ideal(desc: &IdealDescription) -> String {
    let file = IdealFile {
        field: FieldFile {
            characteristic: desc.characteristic,
        },
        variables: desc.variables.clone(),
        generators: desc.generators.iter().map(|g| term_files(g)).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
    s.push('\n');
    s
}

/// A module presentation over the ring of `ideal`: generator degrees and relations,
/// each relation a degree and one polynomial per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDescription {
    pub generators: Vec<i64>,
    pub relations: Vec<(i64, Vec<Vec<Term>>)>,
}

pub fn parse_module(text: &str, nvars: usize) -> Result<ModuleDescription, ParseError> {
    let file: ModuleFile = serde_json::from_str(text).map_err(ParseError::from_json)?;
    if file.generators.is_empty() {
        return Err(ParseError::at("generators", "a module needs a generator"));
    }
    let mut relations = Vec::new();
    for (r, rel) in file.relations.into_iter().enumerate() {
        if rel.components.len() != file.generators.len() {
            return Err(ParseError::at(
                format!("relations[{r}].components"),
                format!(
                    "{} components for {} generators",
                    rel.components.len(),
                    file.generators.len()
                ),
            ));
        }
        for (l, c) in rel.components.iter().enumerate() {
            let path = format!("relations[{r}].components[{l}]");
            check_terms(&path, c, nvars)?;
            let want = rel.degree - file.generators[l];
            if c.iter()
                .any(|t| t.exponents.iter().sum::<u32>() as i64 != want)
            {
                return Err(ParseError::at(
                    path,
                    format!("terms must have degree {want}"),
                ));
            }
        }
        relations.push((
            rel.degree,
            rel.components.into_iter().map(terms_of).collect(),
        ));
    }
    Ok(ModuleDescription {
        generators: file.generators,
        relations,
    })
}

pub fn write_module(m: &ModuleDescription) -> String {
    let file = ModuleFile {
        generators: m.generators.clone(),
        relations: m
            .relations
            .iter()
            .map(|(d, comps)| RelationFile {
                degree: *d,
                components: comps.iter().map(|c| term_files(c)).collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
    s.push('\n');
    s
}

impl ModuleDescription {
    pub fn presentation<F: Field>(
        &self,
        field: &F,
        nvars: usize,
    ) -> syzygy_core::Result<Presentation<F>> {
        let poly = |terms: &[Term]| -> syzygy_core::Result<Polynomial<F>> {
            let ts = terms
                .iter()
                .map(|t| {
                    let c = field
                        .from_fraction(&t.coefficient.numer, &t.coefficient.denom)
                        .ok_or_else(|| {
                            syzygy_core::Error::Invalid(format!(
                                "coefficient {} is undefined in the field",
                                t.coefficient
                            ))
                        })?;
                    Ok((c, ExponentVector(t.exponents.clone())))
                })
                .collect::<syzygy_core::Result<Vec<_>>>()?;
            Polynomial::new(field.clone(), nvars, ts)
        };
        let relations = self
            .relations
            .iter()
            .map(|(degree, comps)| {
                Ok(Relation {
                    degree: *degree,
                    components: comps
                        .iter()
                        .map(|c| poly(c))
                        .collect::<syzygy_core::Result<_>>()?,
                })
            })
            .collect::<syzygy_core::Result<_>>()?;
        Ok(Presentation {
            generator_degrees: self.generators.clone(),
            relations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARES: &str = r#"{
  "field": { "characteristic": 0 },
  "variables": ["x", "y"],
  "generators": [
    [{ "coefficient": 1, "exponents": [2, 0] }],
    [{ "coefficient": "-6/4", "exponents": [0, 2] }, { "coefficient": "123456789012345678901234567890", "exponents": [1, 1] }]
  ]
}"#;

    #[test]
    fn parse_and_round_trip() {
        let d = parse_ideal(SQUARES).unwrap();
        assert_eq!(d.generators[1][0].coefficient.to_string(), "-3/2");
        let text = write_ideal(&d);
        assert!(text.contains("\"-3/2\"") && text.contains("\"123456789012345678901234567890\""));
        let back = parse_ideal(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(write_ideal(&back), text);
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_ideal("{ \"field\": { \"characteristic\": 0 },\n  \"variables\": [\"x\"],\n  \"generators\": [[{\"coefficient\": 1.5, \"exponents\": [2]}]] }").unwrap_err();
        assert_eq!(e.location, "line 3, column 37");
        assert!(e.message.contains("not exact"));
        let e = parse_ideal(r#"{"field":{"characteristic":4},"variables":["x"],"generators":[]}"#)
            .unwrap_err();
        assert_eq!(e.location, "field.characteristic");
        let e = parse_ideal(r#"{"field":{"characteristic":0},"variables":["x","y"],"generators":[[{"coefficient":1,"exponents":[2]}]]}"#).unwrap_err();
        assert_eq!(e.location, "generators[0][0].exponents");
        let e = parse_ideal(r#"{"field":{"characteristic":0},"variables":["x","y"],"generators":[[{"coefficient":1,"exponents":[2,0]},{"coefficient":1,"exponents":[0,1]}]]}"#).unwrap_err();
        assert_eq!(
            (e.location.as_str(), e.message.as_str()),
            ("generators[0]", "generator is not homogeneous")
        );
        let e =
            parse_ideal(r#"{"field":{"characteristic":0},"variables":["x","x"],"generators":[]}"#)
                .unwrap_err();
        assert_eq!(e.location, "variables[1]");
        let e = parse_ideal(r#"{"field":{"characteristic":0},"variables":["x"],"generators":[[{"coefficient":"1/0","exponents":[2]}]]}"#).unwrap_err();
        assert!(e.location.starts_with("line 1"), "{e}");
        assert!(parse_ideal(
            r#"{"field":{"characteristic":0},"variables":["x"],"generators":[],"extra":1}"#
        )
        .is_err());
    }

    #[test]
    fn module_files() {
        let text = r#"{"generators":[0],"relations":[{"degree":1,"components":[[{"coefficient":1,"exponents":[1,0]}]]}]}"#;
        let m = parse_module(text, 2).unwrap();
        assert_eq!(parse_module(&write_module(&m), 2).unwrap(), m);
        let bad = r#"{"generators":[0],"relations":[{"degree":2,"components":[[{"coefficient":1,"exponents":[1,0]}]]}]}"#;
        assert_eq!(
            parse_module(bad, 2).unwrap_err().location,
            "relations[0].components[0]"
        );
    }
}
