//! Dynkin quivers, Auslander-Reiten knitting, and the Coxeter and grade
//! bijection data of the Auslander algebra `End(M)` computed on the side of
//! the path algebra.

mod knit;
mod nrf;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::homology::{Arrow, BQAlgebra, HomologyError};

pub use knit::{
    ar_formula_violations, auslander_coxeter, endomorphism_grade_bijection, knit, knit_with_bound, ARQuiverData, AuslanderCoxeter,
    EndomorphismGradeBijection,
};
pub use nrf::{verify_nrf_identity, NrfData, NrfFile, NrfReport, NRF_SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DynkinError {
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("knitting produced more than {bound} indecomposables")]
    NonDynkin { bound: usize },
    #[error("Coxeter cross-check failed at column {column}")]
    CoxeterCrossCheckFailed { column: String },
    #[error("mesh check failed at {module}")]
    MeshMismatch { module: String },
    #[error("grade bijection data is not a bijection")]
    NotBijective,
    #[error("malformed data: {0}")]
    MalformedData(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn new(letter: char, rank: usize) -> Result<Self, DynkinError> {
        let t = match letter.to_ascii_uppercase() {
            'A' if rank >= 1 => DynkinType::A(rank),
            'D' if rank >= 4 => DynkinType::D(rank),
            'E' if (6..=8).contains(&rank) => DynkinType::E(rank),
            _ => return Err(DynkinError::InvalidType(format!("{letter}{rank}"))),
        };
        Ok(t)
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(_) => unreachable!("validated on construction"),
        }
    }

    /// Edges of the diagram on vertices `0..rank`, each as `(i, j)` with
    /// `i < j`. `A_n` is a path; `D_n` is a path `1..n-2` with `n-1` and `n`
    /// attached to `n-2`; `E_n` is a path `1..n-1` with `n` attached to `3`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank();
        match self {
            DynkinType::A(_) => (0..n - 1).map(|i| (i, i + 1)).collect(),
            DynkinType::D(_) => {
                let mut e: Vec<(usize, usize)> = (0..n - 3).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            DynkinType::E(_) => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = DynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| DynkinError::InvalidType(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| DynkinError::InvalidType(s.to_string()))?;
        DynkinType::new(letter, rank)
    }
}

/// Arrow directions on the edges of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Every edge points from the smaller to the larger vertex.
    Linear,
    /// Bipartite, with vertex 1 a source.
    Alternating,
    /// One `(source, target)` pair per edge, zero-based.
    Explicit(Vec<(usize, usize)>),
}

/// A Dynkin type with an orientation.
///
/// Text form: `A3`, `A3:linear`, `D4:alternating`, or explicit one-based
/// arrows such as `A3:1->2,3->2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    pub kind: DynkinType,
    pub orientation: Orientation,
}

impl DynkinSpec {
    pub fn new(kind: DynkinType, orientation: Orientation) -> Result<Self, DynkinError> {
        let spec = DynkinSpec { kind, orientation };
        spec.arrows()?;
        Ok(spec)
    }

    pub fn arrows(&self) -> Result<Vec<Arrow>, DynkinError> {
        let edges = self.kind.edges();
        match &self.orientation {
            Orientation::Linear => Ok(edges.into_iter().map(|(i, j)| Arrow { source: i, target: j }).collect()),
            Orientation::Alternating => {
                let colour = bipartition(self.kind.rank(), &edges);
                Ok(edges
                    .into_iter()
                    .map(|(i, j)| if colour[i] == 0 { Arrow { source: i, target: j } } else { Arrow { source: j, target: i } })
                    .collect())
            }
            Orientation::Explicit(pairs) => {
                let mut arrows = Vec::with_capacity(edges.len());
                for &(i, j) in &edges {
                    let matching: Vec<&(usize, usize)> =
                        pairs.iter().filter(|&&(s, t)| (s, t) == (i, j) || (s, t) == (j, i)).collect();
                    if matching.len() != 1 {
                        return Err(DynkinError::InvalidOrientation(format!(
                            "edge {}-{} must be oriented exactly once",
                            i + 1,
                            j + 1
                        )));
                    }
                    arrows.push(Arrow { source: matching[0].0, target: matching[0].1 });
                }
                if pairs.len() != edges.len() {
                    return Err(DynkinError::InvalidOrientation("arrows must match the edges of the diagram".into()));
                }
                Ok(arrows)
            }
        }
    }

    /// All `2^(rank-1)` orientations, in a fixed order.
    pub fn all_orientations(kind: DynkinType) -> Vec<DynkinSpec> {
        let edges = kind.edges();
        (0u64..1 << edges.len())
            .map(|mask| {
                let pairs = edges
                    .iter()
                    .enumerate()
                    .map(|(b, &(i, j))| if mask >> b & 1 == 0 { (i, j) } else { (j, i) })
                    .collect();
                DynkinSpec { kind, orientation: Orientation::Explicit(pairs) }
            })
            .collect()
    }

    pub fn algebra(&self) -> Result<BQAlgebra, DynkinError> {
        dynkin_path_algebra(self)
    }
}

fn bipartition(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut colour = vec![u8::MAX; n];
    colour[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(i, j) in edges {
            let w = if i == v { j } else if j == v { i } else { continue };
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[v];
                stack.push(w);
            }
        }
    }
    colour
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.orientation {
            Orientation::Linear => write!(f, "{}:linear", self.kind),
            Orientation::Alternating => write!(f, "{}:alternating", self.kind),
            Orientation::Explicit(pairs) => {
                let arrows: Vec<String> = pairs.iter().map(|(s, t)| format!("{}->{}", s + 1, t + 1)).collect();
                write!(f, "{}:{}", self.kind, arrows.join(","))
            }
        }
    }
}

impl FromStr for DynkinSpec {
    type Err = DynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, orientation) = match s.trim().split_once(':') {
            Some((k, o)) => (k, o.trim()),
            None => (s.trim(), "linear"),
        };
        let kind: DynkinType = kind.parse()?;
        let orientation = match orientation {
            "linear" => Orientation::Linear,
            "alternating" => Orientation::Alternating,
            list => Orientation::Explicit(parse_arrows(list, kind.rank())?),
        };
        DynkinSpec::new(kind, orientation)
    }
}

fn parse_arrows(list: &str, rank: usize) -> Result<Vec<(usize, usize)>, DynkinError> {
    let bad = || DynkinError::InvalidOrientation(list.to_string());
    list.split(',')
        .map(|item| {
            let (s, t) = item.trim().split_once("->").ok_or_else(bad)?;
            let s: usize = s.trim().parse().map_err(|_| bad())?;
            let t: usize = t.trim().parse().map_err(|_| bad())?;
            if s == 0 || t == 0 || s > rank || t > rank {
                return Err(bad());
            }
            Ok((s - 1, t - 1))
        })
        .collect()
}

/// On-disk form of a [`DynkinSpec`]: `{"type": "D4", "orientation": "alternating"}`
/// or with `"orientation": [[1, 2], [3, 2], [4, 2]]` (one-based arrows).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynkinFile {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub orientation: Option<OrientationFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrientationFile {
    Named(String),
    Arrows(Vec<[usize; 2]>),
}

impl TryFrom<DynkinFile> for DynkinSpec {
    type Error = DynkinError;

    fn try_from(file: DynkinFile) -> Result<Self, Self::Error> {
        let kind: DynkinType = file.kind.parse()?;
        let orientation = match file.orientation {
            None => Orientation::Linear,
            Some(OrientationFile::Named(name)) => match name.as_str() {
                "linear" => Orientation::Linear,
                "alternating" => Orientation::Alternating,
                other => Orientation::Explicit(parse_arrows(other, kind.rank())?),
            },
            Some(OrientationFile::Arrows(pairs)) => {
                let text: Vec<String> = pairs.iter().map(|[s, t]| format!("{s}->{t}")).collect();
                Orientation::Explicit(parse_arrows(&text.join(","), kind.rank())?)
            }
        };
        DynkinSpec::new(kind, orientation)
    }
}

/// The path algebra of an oriented Dynkin diagram, vertices labelled `1..n`.
pub fn dynkin_path_algebra(spec: &DynkinSpec) -> Result<BQAlgebra, DynkinError> {
    let labels = (1..=spec.kind.rank()).map(|i| i.to_string()).collect();
    Ok(BQAlgebra::path_algebra(labels, spec.arrows()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrows(spec: &str) -> Vec<(usize, usize)> {
        let s: DynkinSpec = spec.parse().unwrap();
        s.arrows().unwrap().into_iter().map(|a| (a.source + 1, a.target + 1)).collect()
    }

    #[test]
    fn shapes_and_orientations() {
        assert_eq!(arrows("A2"), vec![(1, 2)]);
        assert_eq!(arrows("A3:alternating"), vec![(1, 2), (3, 2)]);
        assert_eq!(arrows("D4:alternating"), vec![(1, 2), (3, 2), (4, 2)]);
        assert_eq!(arrows("E6"), vec![(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]);
        assert_eq!(arrows("A3:2->1,2->3"), vec![(2, 1), (2, 3)]);
    }

    #[test]
    fn invalid_specs() {
        for bad in ["B3", "D3", "E9", "A0", "A3:1->2", "A3:1->3,2->3", "A2:x", "A2:1->2,2->1"] {
            assert!(bad.parse::<DynkinSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["A4:linear", "D5:alternating", "A3:2->1,2->3"] {
            let spec: DynkinSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn orientation_count() {
        assert_eq!(DynkinSpec::all_orientations(DynkinType::A(5)).len(), 16);
        assert_eq!(DynkinSpec::all_orientations(DynkinType::A(1)).len(), 1);
    }

    #[test]
    fn file_form() {
        let f: DynkinFile = serde_json::from_str(r#"{"type": "D4", "orientation": [[1,2],[3,2],[4,2]]}"#).unwrap();
        let spec = DynkinSpec::try_from(f).unwrap();
        assert_eq!(spec.to_string(), "D4:1->2,3->2,4->2");
    }
}
