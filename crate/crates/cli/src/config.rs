//! Run configuration and torus-point parsing.

use std::path::PathBuf;

use clap::ValueEnum;
use hecke_core::laurent::TorusPoint;
use hecke_core::root_data::RootType;
use hecke_core::scalar::{fmt_rational, parse_rational, Specialization, Q};
use hecke_core::{Error, Result};
use num::Zero;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Prop12,
    Lemma22,
    Formulas,
    Thm34,
    Thm35,
    Thm41,
    LieCheck,
    Cells,
    Presentation,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop12 => "prop12",
            Suite::Lemma22 => "lemma22",
            Suite::Formulas => "formulas",
            Suite::Thm34 => "thm34",
            Suite::Thm35 => "thm35",
            Suite::Thm41 => "thm41",
            Suite::LieCheck => "lie-check",
            Suite::Cells => "cells",
            Suite::Presentation => "presentation",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Suite as ValueEnum>::from_str(s, true).map_err(|_| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// A torus point given explicitly: the specialization and coordinates
/// `c_i v^{m_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSpec {
    pub spec: Specialization,
    pub coords: Vec<(Q, i32)>,
}

impl PointSpec {
    pub fn torus_point(&self) -> Result<TorusPoint> {
        TorusPoint::from_v_monomials(&self.coords, self.spec.clone())
    }

    /// Parses `q=<r> c_1 … c_n` or `v=<r> c_1 … c_n`, each `c_i` of the form
    /// `a`, `a*v` or `a*v^m`.
    pub fn parse(line: &str) -> Result<Self> {
        let mut it = line.split_whitespace();
        let head = it.next().ok_or_else(|| Error::Parse("empty point line".into()))?;
        let spec = if let Some(r) = head.strip_prefix("q=") {
            Specialization::q(parse_rational(r)?)?
        } else if let Some(r) = head.strip_prefix("v=") {
            Specialization::sqrt_q(parse_rational(r)?)?
        } else {
            return Err(Error::Parse(format!("expected q=<r> or v=<r>, got `{head}`")));
        };
        let coords = it.map(parse_coordinate).collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("no coordinates in `{line}`")));
        }
        Ok(Self { spec, coords })
    }

    pub fn parse_file(text: &str) -> Result<Vec<Self>> {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(Self::parse)
            .collect()
    }
}

fn parse_coordinate(tok: &str) -> Result<(Q, i32)> {
    let (c, m) = match tok.split_once("*v") {
        None => (tok, 0),
        Some((c, "")) => (c, 1),
        Some((c, rest)) => {
            let e = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad coordinate `{tok}`")))?;
            (c, e.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?)
        }
    };
    let c = parse_rational(c)?;
    if c.is_zero() {
        return Err(Error::Parse(format!("zero coordinate `{tok}`")));
    }
    Ok((c, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub suite: Suite,
    pub root_type: RootType,
    pub q: Option<Q>,
    pub sqrt_q: Option<Q>,
    pub max_len: Option<usize>,
    pub points: Option<Vec<PointSpec>>,
    pub seed: u64,
    pub samples: usize,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(suite: Suite, root_type: RootType) -> Self {
        Self {
            suite,
            root_type,
            q: None,
            sqrt_q: None,
            max_len: None,
            points: None,
            seed: 1,
            samples: 20,
            cache_dir: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q.is_some() && self.sqrt_q.is_some() {
            return Err(Error::Parse("--q and --sqrt-q are mutually exclusive".into()));
        }
        if let Some(pts) = &self.points {
            let n = self.root_type.cartan().len();
            if let Some(p) = pts.iter().find(|p| p.coords.len() != n) {
                return Err(Error::Parse(format!(
                    "point has {} coordinates, type {} needs {n}",
                    p.coords.len(),
                    self.root_type
                )));
            }
        }
        Ok(())
    }

    /// The explicitly requested specialization, if any.
    pub fn specialization(&self) -> Result<Option<Specialization>> {
        match (&self.q, &self.sqrt_q) {
            (Some(q), None) => Ok(Some(Specialization::q(q.clone())?)),
            (None, Some(r)) => Ok(Some(Specialization::sqrt_q(r.clone())?)),
            _ => Ok(None),
        }
    }

    /// The parts of the configuration that determine the report body.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "type": self.root_type.to_string(),
            "q": self.q.as_ref().map(fmt_rational),
            "sqrt_q": self.sqrt_q.as_ref().map(fmt_rational),
            "max_len": self.max_len,
            "points": self.points.as_ref().map(|p| p.len()),
            "seed": self.seed,
            "samples": self.samples,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hecke_core::scalar::{int, rat};

    #[test]
    fn parses_point_lines() {
        let p = PointSpec::parse("q=2 -1/4*v 5/3*v^-1").unwrap();
        assert_eq!(p.spec.q0(), int(2));
        assert_eq!(p.coords, vec![(rat(-1, 4), 1), (rat(5, 3), -1)]);
        let p = PointSpec::parse("v=2 3").unwrap();
        assert_eq!(p.coords, vec![(int(3), 0)]);
        assert!(PointSpec::parse("x=2 3").is_err());
        assert!(PointSpec::parse("q=4 0").is_err());
        let f = PointSpec::parse_file("# header\nq=4 3\n\nv=3 2 # trailing\n").unwrap();
        assert_eq!(f.len(), 2);
    }
}
