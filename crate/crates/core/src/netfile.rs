//! JSON serialization of networks and matrices.
//!
//! Network files look like
//! `{"vertices": [...], "edges": [{"from": "a", "to": "b", "weight": "1/2"}],
//! "sources": [...], "sinks": [...]}`; weights are `"p"` or `"p/q"` strings
//! so that they survive any JSON toolchain exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::network::{Edge, NetworkSpec, PlanarNetwork};
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
}

impl NetworkFile {
    pub fn from_network(net: &PlanarNetwork) -> Self {
        NetworkFile {
            vertices: net.vertices().to_vec(),
            edges: net
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    weight: format_rational(&e.weight),
                })
                .collect(),
            sources: net.sources().to_vec(),
            sinks: net.sinks().to_vec(),
        }
    }

    pub fn to_spec(&self) -> Result<NetworkSpec> {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(idx, e)| {
                let weight = parse_rational(&e.weight).map_err(|err| {
                    Error::Parse(format!("edges[{idx}].weight {:?}: {err}", e.weight))
                })?;
                Ok(Edge::new(e.from.clone(), e.to.clone(), weight))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NetworkSpec {
            vertices: self.vertices.clone(),
            edges,
            sources: self.sources.clone(),
            sinks: self.sinks.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn json_error(err: serde_json::Error) -> Error {
    Error::Parse(err.to_string())
}

pub fn parse_network_file(text: &str) -> Result<PlanarNetwork> {
    let file: NetworkFile = serde_json::from_str(text).map_err(json_error)?;
    file.to_spec()?.build()
}

pub fn network_to_json(net: &PlanarNetwork) -> String {
    NetworkFile::from_network(net).to_json()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    /// Row-major, one inner array per row.
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ExactMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .row_vecs()
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} grid",
                self.rows, self.cols
            )));
        }
        let mut values = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                values.push(
                    parse_rational(text)
                        .map_err(|err| Error::Parse(format!("entries[{i}][{j}]: {err}")))?,
                );
            }
        }
        ExactMatrix::new(self.rows, self.cols, values)
    }
}

pub fn matrix_to_json(m: &ExactMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(m)).expect("plain data serializes")
}

pub fn parse_matrix_json(text: &str) -> Result<ExactMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(json_error)?;
    file.to_matrix()
}
