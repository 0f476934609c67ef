//! Text and JSON formats for complexes, polytopes and facet paths.
//!
//! Complex files come in two shapes, told apart by their first non-blank
//! byte: a JSON document `{"facets": [[...], ...]}`, or the line format with
//! one facet per line, whitespace-separated vertex tokens, `#` comments.

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::polytope::{PolytopeData, SimplePolytope};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexData {
    facets: Vec<Vec<Vertex>>,
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Reads either complex format.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if looks_like_json(text) {
        let data: ComplexData = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        return SimplicialComplex::from_vertex_lists(data.facets);
    }
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let vertices = tokens.iter().map(|t| Vertex::parse(t)).collect::<Result<Vec<_>>>();
        let simplex =
            vertices.and_then(Simplex::new).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
        facets.push(simplex);
    }
    SimplicialComplex::new(facets)
}

/// Line format, facets in canonical order.
pub fn complex_to_lines(complex: &SimplicialComplex) -> String {
    complex.to_string()
}

/// `{"facets": [...]}`, pretty-printed.
pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let data = ComplexData { facets: complex.facets().iter().map(|f| f.vertices().to_vec()).collect() };
    serde_json::to_string_pretty(&data).expect("serializable") + "\n"
}

pub fn parse_polytope(text: &str) -> Result<SimplePolytope> {
    let data: PolytopeData = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    SimplePolytope::from_data(data)
}

pub fn polytope_to_json(polytope: &SimplePolytope) -> String {
    serde_json::to_string_pretty(&polytope.to_data()).expect("serializable") + "\n"
}

/// A facet path as a JSON array of vertex lists, e.g. `[[1,2,4],[2,4,5]]`.
pub fn parse_facet_path(text: &str) -> Result<Vec<Simplex>> {
    let lists: Vec<Vec<Vertex>> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    lists.into_iter().map(Simplex::new).collect()
}

/// Several facet paths, as a JSON array of paths.
pub fn parse_facet_paths(text: &str) -> Result<Vec<Vec<Simplex>>> {
    let lists: Vec<Vec<Vec<Vertex>>> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    lists.into_iter().map(|p| p.into_iter().map(Simplex::new).collect()).collect()
}
