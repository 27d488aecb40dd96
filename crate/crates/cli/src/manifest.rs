//! JSON manifests describing a (possibly hypothetical) compact manifold.
//!
//! ```json
//! {"name": "P2", "dimension": 2, "chern": {"1,1": 9, "2": 3},
//!  "hodge": [[1,0,0],[0,1,0],[0,0,1]], "structure": "kaehler"}
//! ```
//!
//! Hodge rows are indexed by `q`. Chern keys are comma-joined partition
//! parts; they are canonicalized to descending order on parse.

use std::fmt;
use std::str::FromStr;

use chiy_core::scalar::parse_rational;
use chiy_core::{BettiVector, ChernNumbers, FixedPoint, FixedPointData, HodgeDiamond, Partition, Rational, Scalar, Tier};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing dimension")]
    MissingDimension,
    #[error("manifest carries no data: give at least one of chern, hodge, betti, fixed_points")]
    NoData,
    #[error("malformed partition key {0:?}")]
    MalformedKey(String),
    #[error("partition {0:?} appears twice after canonicalization")]
    DuplicateKey(String),
    #[error("diamond shape must be (n+1)x(n+1): expected {expected}x{expected} for dimension {dimension}")]
    DiamondShape { expected: usize, dimension: u32 },
    #[error("betti numbers disagree with the hodge diamond: given {given:?}, diamond gives {derived:?}")]
    HodgeBettiMismatch { given: Vec<i64>, derived: Vec<i64> },
    #[error("unknown structure {0:?} (expected almost-complex, kaehler, mirror, hyperkaehler or calabi-yau)")]
    UnknownStructure(String),
    #[error("fixed_points must contain exactly one of \"weights\" or \"indices\"")]
    FixedPointShape,
    #[error("weight {0} is not an integer or a \"p/q\" string")]
    BadWeight(String),
    #[error(transparent)]
    Core(#[from] chiy_core::Error),
}

/// Claimed geometric structure; selects the validation tier and which
/// bounds apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    AlmostComplex,
    Kaehler,
    Mirror,
    HyperKaehler,
    CalabiYau,
}

impl Structure {
    pub fn as_str(self) -> &'static str {
        match self {
            Structure::AlmostComplex => "almost-complex",
            Structure::Kaehler => "kaehler",
            Structure::Mirror => "mirror",
            Structure::HyperKaehler => "hyperkaehler",
            Structure::CalabiYau => "calabi-yau",
        }
    }

    pub fn tier(self) -> Tier {
        match self {
            Structure::AlmostComplex => Tier::Raw,
            Structure::Kaehler | Structure::CalabiYau => Tier::Kaehler,
            Structure::Mirror | Structure::HyperKaehler => Tier::Mirror,
        }
    }

    /// Whether the Kaehler Betti bounds apply.
    pub fn is_kaehler(self) -> bool {
        self != Structure::AlmostComplex
    }
}

impl FromStr for Structure {
    type Err = ManifestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "almost-complex" => Structure::AlmostComplex,
            "kaehler" => Structure::Kaehler,
            "mirror" => Structure::Mirror,
            "hyperkaehler" => Structure::HyperKaehler,
            "calabi-yau" => Structure::CalabiYau,
            other => return Err(ManifestError::UnknownStructure(other.to_string())),
        })
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    name: Option<String>,
    dimension: Option<u32>,
    chern: Option<Map<String, Value>>,
    hodge: Option<Vec<Vec<i64>>>,
    betti: Option<Vec<i64>>,
    fixed_points: Option<RawFixedPoints>,
    structure: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixedPoints {
    weights: Option<Vec<Vec<Value>>>,
    indices: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldManifest {
    pub name: Option<String>,
    pub dimension: u32,
    pub chern: Option<ChernNumbers>,
    pub hodge: Option<HodgeDiamond>,
    pub betti: Option<BettiVector>,
    pub fixed_points: Option<FixedPointData>,
    pub structure: Option<Structure>,
}

fn parse_weight(value: &Value) -> Result<Rational, ManifestError> {
    let bad = || ManifestError::BadWeight(value.to_string());
    match value {
        Value::Number(n) => n.as_i64().map(Rational::from_i64).ok_or_else(bad),
        Value::String(s) => parse_rational(s).ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn parse_chern(n: u32, raw: &Map<String, Value>) -> Result<ChernNumbers, ManifestError> {
    let mut chern = ChernNumbers::new(n);
    let mut seen = std::collections::BTreeSet::new();
    for (key, value) in raw {
        let partition = Partition::from_str(key).map_err(|_| ManifestError::MalformedKey(key.clone()))?;
        if !seen.insert(partition.clone()) {
            return Err(ManifestError::DuplicateKey(partition.key()));
        }
        let value = value.as_i64().ok_or_else(|| ManifestError::MalformedKey(format!("{key}: {value}")))?;
        chern.insert(partition, value)?;
    }
    Ok(chern)
}

fn parse_hodge(n: u32, rows: &[Vec<i64>]) -> Result<HodgeDiamond, ManifestError> {
    let expected = n as usize + 1;
    if rows.len() != expected || rows.iter().any(|r| r.len() != expected) {
        return Err(ManifestError::DiamondShape { expected, dimension: n });
    }
    Ok(HodgeDiamond::from_rows(rows)?)
}

fn parse_fixed_points(n: u32, raw: RawFixedPoints) -> Result<FixedPointData, ManifestError> {
    match (raw.weights, raw.indices) {
        (Some(weights), None) => {
            let points = weights
                .iter()
                .map(|w| w.iter().map(parse_weight).collect::<Result<Vec<_>, _>>().map(FixedPoint::from_weights))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FixedPointData::new(n, points)?)
        }
        (None, Some(indices)) => Ok(FixedPointData::from_indices(n, &indices)?),
        _ => Err(ManifestError::FixedPointShape),
    }
}

impl ManifoldManifest {
    pub fn parse(text: &str) -> Result<Self, ManifestError> {
        let raw: RawManifest = serde_json::from_str(text)?;
        let n = raw.dimension.ok_or(ManifestError::MissingDimension)?;
        if raw.chern.is_none() && raw.hodge.is_none() && raw.betti.is_none() && raw.fixed_points.is_none() {
            return Err(ManifestError::NoData);
        }
        let chern = raw.chern.as_ref().map(|c| parse_chern(n, c)).transpose()?;
        let hodge = raw.hodge.as_deref().map(|rows| parse_hodge(n, rows)).transpose()?;
        let betti = match raw.betti {
            Some(entries) => {
                let expected = 2 * n as usize + 1;
                if entries.len() != expected {
                    return Err(chiy_core::Error::BettiLength { expected, actual: entries.len() }.into());
                }
                Some(BettiVector::new(entries))
            }
            None => None,
        };
        if let (Some(b), Some(d)) = (&betti, &hodge) {
            let derived = d.betti();
            if derived.entries() != b.entries() {
                return Err(ManifestError::HodgeBettiMismatch {
                    given: b.entries().to_vec(),
                    derived: derived.entries().to_vec(),
                });
            }
        }
        let fixed_points = raw.fixed_points.map(|f| parse_fixed_points(n, f)).transpose()?;
        let structure = raw.structure.as_deref().map(Structure::from_str).transpose()?;
        Ok(ManifoldManifest { name: raw.name, dimension: n, chern, hodge, betti, fixed_points, structure })
    }

    /// Given Betti numbers, else those of the diamond.
    pub fn effective_betti(&self) -> Option<BettiVector> {
        self.betti.clone().or_else(|| self.hodge.as_ref().map(HodgeDiamond::betti))
    }

    /// Claimed structure; defaults to Kaehler when a diamond is given and
    /// to almost-complex otherwise.
    pub fn effective_structure(&self) -> Structure {
        self.structure.unwrap_or(if self.hodge.is_some() { Structure::Kaehler } else { Structure::AlmostComplex })
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        if let Some(name) = &self.name {
            out.insert("name".into(), json!(name));
        }
        out.insert("dimension".into(), json!(self.dimension));
        if let Some(chern) = &self.chern {
            // largest partition first, matching the formula tables
            let entries: Vec<_> = chern.iter().collect();
            let map: Map<String, Value> = entries.into_iter().rev().map(|(p, v)| (p.key(), json!(v))).collect();
            out.insert("chern".into(), Value::Object(map));
        }
        if let Some(hodge) = &self.hodge {
            out.insert("hodge".into(), json!(hodge.rows()));
        }
        if let Some(betti) = &self.betti {
            out.insert("betti".into(), json!(betti.entries()));
        }
        if let Some(fp) = &self.fixed_points {
            let value = if fp.points().iter().all(|p| p.weights().is_some()) {
                let weights: Vec<Vec<String>> = fp
                    .points()
                    .iter()
                    .map(|p| p.weights().unwrap_or_default().iter().map(|w| w.to_string()).collect())
                    .collect();
                json!({ "weights": weights })
            } else {
                let indices: Vec<u32> = fp.points().iter().map(FixedPoint::index).collect();
                json!({ "indices": indices })
            };
            out.insert("fixed_points".into(), value);
        }
        if let Some(s) = self.structure {
            out.insert("structure".into(), json!(s.as_str()));
        }
        Value::Object(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("manifest values serialize")
    }
}
