use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::CliError;
use crate::geometry::{Point, VPolytope};
use crate::linalg::{parse_rational, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dimension: usize,
    vertices: Vec<Vec<Value>>,
    #[serde(default)]
    edges: Option<Vec<(usize, usize)>>,
}

fn coordinate(value: &Value, vertex: usize) -> Result<Rational, CliError> {
    let bad = || CliError::Input(format!("vertex {vertex}: coordinate {value} is neither an integer nor a \"p/q\" string"));
    match value {
        Value::Number(n) => n.as_i64().map(|x| Rational::from_integer(x.into())).ok_or_else(bad),
        Value::String(s) => parse_rational(s).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// Parses the polytope file format: `{"dimension", "vertices", "edges"?}`.
pub fn parse_polytope(text: &str) -> Result<VPolytope, CliError> {
    let file: PolytopeFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed polytope file: {e}")))?;
    let mut vertices: Vec<Point> = Vec::with_capacity(file.vertices.len());
    for (i, row) in file.vertices.iter().enumerate() {
        if row.len() != file.dimension {
            return Err(CliError::Input(format!(
                "vertex {i} has {} coordinates, expected dimension {}",
                row.len(),
                file.dimension
            )));
        }
        vertices.push(row.iter().map(|v| coordinate(v, i)).collect::<Result<_, _>>()?);
    }
    Ok(VPolytope::new(vertices, file.edges)?)
}

pub fn read_polytope(path: &Path) -> Result<VPolytope, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_polytope(&text)
}
