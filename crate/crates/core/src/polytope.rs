//! Simple polytopes given by their vertex-facet incidence.
//!
//! A simple `d`-polytope has every vertex on exactly `d` facets. Edges and
//! 2-faces are recovered from the incidence alone: an edge is a pair of
//! vertices sharing `d - 1` facets, a 2-face the set of vertices containing a
//! fixed `(d - 2)`-set of facets. The dual simplicial complex has one facet
//! `𝓕(v)` per vertex `v`, so projectivities of the polytope act on facets.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::coloring::{
    chromatic_number, is_balanced, is_bipartite, k_coloring, Bipartiteness, Chromatic, Coloring, Graph,
};
use crate::complex::{disjoint_relabeling, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::permgroup::{PermutationGroup, SymmetricProduct};
use crate::projectivity::{embed, perspectivity, pi_group, ProjectivityGroup};

/// Chromatic numbers above this are not searched for when computing `γ(P)`.
pub const GAMMA_CAP: usize = 16;

/// A 2-face: the facets cutting it out and its boundary cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFace {
    /// The `d - 2` facets (indices) containing the 2-face.
    pub facets: Vec<usize>,
    /// Vertex indices in cyclic order, starting at the smallest, continuing to
    /// its smaller neighbour.
    pub boundary: Vec<usize>,
}

impl TwoFace {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.boundary.len().is_multiple_of(2)
    }
}

/// On-disk shape: `{"dim": d, "facets": [...], "vertices": {v: [facets...]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeData {
    pub dim: usize,
    pub facets: Vec<Vertex>,
    pub vertices: BTreeMap<Vertex, Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolytope {
    dim: usize,
    facets: Vec<Vertex>,
    vertices: Vec<Vertex>,
    /// `incidence[v]`: sorted facet indices through vertex `v`, length `dim`.
    incidence: Vec<Vec<usize>>,
    /// Sorted pairs `(v, w)` with `v < w`.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    two_faces: Vec<TwoFace>,
}

impl SimplePolytope {
    /// Validates and indexes an incidence description.
    pub fn new(dim: usize, facets: Vec<Vertex>, vertices: BTreeMap<Vertex, Vec<Vertex>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadParameter("polytope dimension must be at least 1".into()));
        }
        if vertices.is_empty() || facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut sorted_facets = facets.clone();
        sorted_facets.sort();
        if let Some(w) = sorted_facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFacet(w[0].clone()));
        }
        let facets = sorted_facets;
        let vertex_labels: Vec<Vertex> = vertices.keys().cloned().collect();
        let mut incidence = Vec::with_capacity(vertices.len());
        for (v, fs) in &vertices {
            let mut idx = Vec::with_capacity(fs.len());
            for f in fs {
                idx.push(facets.binary_search(f).map_err(|_| Error::UnknownFacet(f.clone()))?);
            }
            idx.sort_unstable();
            idx.dedup();
            if idx.len() != dim || fs.len() != dim {
                return Err(Error::NotSimple { vertex: v.clone(), count: idx.len(), dim });
            }
            incidence.push(idx);
        }
        for (fi, f) in facets.iter().enumerate() {
            if !incidence.iter().any(|inc| inc.contains(&fi)) {
                return Err(Error::EmptyFacet(f.clone()));
            }
        }
        let mut by_set: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (vi, inc) in incidence.iter().enumerate() {
            if let Some(&other) = by_set.get(inc.as_slice()) {
                return Err(Error::DuplicateVertex(vertex_labels[other].clone(), vertex_labels[vi].clone()));
            }
            by_set.insert(inc, vi);
        }

        let containing = |s: &[usize]| -> Vec<usize> {
            (0..incidence.len()).filter(|&w| s.iter().all(|f| incidence[w].binary_search(f).is_ok())).collect()
        };

        let mut edges = BTreeSet::new();
        let mut seen_ridges = BTreeSet::new();
        for inc in &incidence {
            for s in subsets(inc, dim - 1) {
                if !seen_ridges.insert(s.clone()) {
                    continue;
                }
                let on = containing(&s);
                if on.len() != 2 {
                    return Err(Error::BadEdge {
                        facets: s.iter().map(|&f| facets[f].clone()).collect(),
                        count: on.len(),
                    });
                }
                edges.insert((on[0], on[1]));
            }
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut neighbors = vec![Vec::new(); incidence.len()];
        for &(a, b) in &edges {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for (vi, n) in neighbors.iter_mut().enumerate() {
            n.sort_unstable();
            if n.len() != dim {
                return Err(Error::NotRegular { vertex: vertex_labels[vi].clone(), count: n.len(), dim });
            }
        }
        let graph = Graph::new(incidence.len(), edges.iter().copied()).expect("edges are simple");
        if graph.components() != 1 {
            return Err(Error::Disconnected);
        }

        let mut two_faces = Vec::new();
        if dim >= 2 {
            let mut seen = BTreeSet::new();
            for inc in &incidence {
                for s in subsets(inc, dim - 2) {
                    if !seen.insert(s.clone()) {
                        continue;
                    }
                    let on = containing(&s);
                    let boundary = trace_cycle(&on, &neighbors)
                        .ok_or_else(|| Error::TwoFaceNotCycle(s.iter().map(|&f| facets[f].clone()).collect()))?;
                    two_faces.push(TwoFace { facets: s, boundary });
                }
            }
        }

        Ok(SimplePolytope { dim, facets, vertices: vertex_labels, incidence, edges, neighbors, two_faces })
    }

    pub fn from_data(data: PolytopeData) -> Result<Self> {
        SimplePolytope::new(data.dim, data.facets, data.vertices)
    }

    pub fn to_data(&self) -> PolytopeData {
        PolytopeData {
            dim: self.dim,
            facets: self.facets.clone(),
            vertices: (0..self.vertices.len()).map(|v| (self.vertices[v].clone(), self.facets_of(v))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Vertex] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn facet_index(&self, f: &Vertex) -> Option<usize> {
        self.facets.binary_search(f).ok()
    }

    fn require_vertex(&self, v: &Vertex) -> Result<usize> {
        self.vertex_index(v).ok_or_else(|| Error::UnknownVertex(v.clone()))
    }

    /// Facet indices through vertex `v`.
    pub fn incidence(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// `𝓕(v)` as labels.
    pub fn facets_of(&self, v: usize) -> Vec<Vertex> {
        self.incidence[v].iter().map(|&f| self.facets[f].clone()).collect()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn two_faces(&self) -> &[TwoFace] {
        &self.two_faces
    }

    /// `(f_0, f_1, …, f_{d-1})`, counted as faces by the facet sets containing
    /// them: a `k`-face is the set of vertices containing some `(d-k)`-set.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim;
        (0..d)
            .map(|k| {
                let mut sets = BTreeSet::new();
                for inc in &self.incidence {
                    for s in subsets(inc, d - k) {
                        sets.insert(s);
                    }
                }
                sets.len()
            })
            .collect()
    }

    /// The facet of `𝓕(v)` not containing `w`, written `F(v,w)`.
    fn facet_away(&self, v: usize, w: usize) -> usize {
        let inc_w = &self.incidence[w];
        *self.incidence[v].iter().find(|f| inc_w.binary_search(f).is_err()).expect("adjacent vertices")
    }

    fn adjacent(&self, v: usize, w: usize) -> bool {
        self.neighbors[v].binary_search(&w).is_ok()
    }

    /// Perspectivity `𝓕(v) → 𝓕(w)` along an edge: `F(v,w) ↦ F(w,v)`, the
    /// shared facets fixed. Pairs are listed in the order of `𝓕(v)`.
    pub fn vertex_perspectivity(&self, v: &Vertex, w: &Vertex) -> Result<Vec<(Vertex, Vertex)>> {
        let (vi, wi) = (self.require_vertex(v)?, self.require_vertex(w)?);
        if !self.adjacent(vi, wi) {
            return Err(Error::VerticesNotAdjacent(v.clone(), w.clone()));
        }
        let (away, back) = (self.facet_away(vi, wi), self.facet_away(wi, vi));
        Ok(self.incidence[vi]
            .iter()
            .map(|&f| {
                let g = if f == away { back } else { f };
                (self.facets[f].clone(), self.facets[g].clone())
            })
            .collect())
    }

    /// The dual simplicial complex on facet labels.
    pub fn dual(&self) -> Dual {
        let simplices: Vec<Simplex> =
            (0..self.vertices.len()).map(|v| Simplex::from_sorted(self.facets_of(v))).collect();
        let complex = SimplicialComplex::new(simplices).expect("polytope has a vertex");
        let facet_of_vertex = (0..self.vertices.len())
            .map(|v| complex.facet_index(&Simplex::from_sorted(self.facets_of(v))).expect("vertex facet"))
            .collect();
        Dual { complex, facet_of_vertex }
    }

    /// `Π(P, v)`, acting on `𝓕(v)`.
    pub fn pi_group(&self, v: &Vertex) -> Result<ProjectivityGroup> {
        let vi = self.require_vertex(v)?;
        let dual = self.dual();
        pi_group(&dual.complex, dual.facet_of_vertex[vi])
    }

    /// Every 2-face has an even number of vertices.
    pub fn is_even(&self) -> bool {
        self.two_faces.iter().all(TwoFace::is_even)
    }

    pub fn vertex_edge_graph(&self) -> Graph {
        Graph::new(self.vertices.len(), self.edges.iter().copied()).expect("edges are simple")
    }

    /// `Γ̄(P)`: facets adjacent when they share a vertex.
    pub fn facet_intersection_graph(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for inc in &self.incidence {
            for (i, &a) in inc.iter().enumerate() {
                for &b in &inc[i + 1..] {
                    pairs.insert((a, b));
                }
            }
        }
        Graph::new(self.facets.len(), pairs).expect("pairs are simple")
    }

    /// `γ(P)`, the chromatic number of `Γ̄(P)`.
    pub fn gamma(&self) -> Result<Chromatic> {
        chromatic_number(&self.facet_intersection_graph(), GAMMA_CAP)
    }

    /// The four conditions of the coloring theorem, each computed on its own.
    /// Fails with [`Error::TheoremViolation`] if they disagree.
    pub fn coloring_theorem_check(&self) -> Result<ColoringTheorem> {
        let even = self.is_even();
        let bipartition = is_bipartite(&self.vertex_edge_graph());
        let dual = self.dual();
        let balance = is_balanced(&dual.complex);
        let d_coloring = k_coloring(&self.facet_intersection_graph(), self.dim);
        let gamma = self.gamma()?;
        let report = ColoringTheorem {
            dim: self.dim,
            even,
            bipartite: bipartition.is_bipartite(),
            balanced_dual: balance.balanced,
            gamma_is_d: d_coloring.is_some(),
            gamma,
            bipartition,
            dual_coloring: balance.coloring,
            facet_coloring: d_coloring,
        };
        if !report.agree() {
            return Err(Error::TheoremViolation(format!(
                "even={}, bipartite={}, balanced dual={}, gamma=d: {}",
                report.even, report.bipartite, report.balanced_dual, report.gamma_is_d
            )));
        }
        Ok(report)
    }

    /// `n - γ(P) ≤ s(P) ≤ n - d`.
    pub fn s_bounds(&self) -> Result<SBounds> {
        let gamma = self.gamma()?;
        let n = self.facets.len();
        let tight = k_coloring(&self.facet_intersection_graph(), self.dim).is_some();
        Ok(SBounds { lower: n - gamma.colors, upper: n - self.dim, tight, gamma_exact: gamma.exact })
    }

    /// Colors each edge `{v,w}` by the common color of `F(v,w)` and `F(w,v)`.
    ///
    /// `facet_coloring[i]` is the color of facet `i`; it must be a proper
    /// coloring of `Γ̄(P)` with colors `0..d`.
    pub fn induced_edge_coloring(&self, facet_coloring: &[usize]) -> Result<EdgeColoring> {
        if facet_coloring.len() != self.facets.len() {
            return Err(Error::ColoringLength { expected: self.facets.len(), got: facet_coloring.len() });
        }
        if let Some(&c) = facet_coloring.iter().find(|&&c| c >= self.dim) {
            return Err(Error::ColorOutOfRange { color: c, dim: self.dim });
        }
        if let Some((a, b)) =
            self.facet_intersection_graph().edges().find(|&(a, b)| facet_coloring[a] == facet_coloring[b])
        {
            return Err(Error::ImproperColoring(self.facets[a].clone(), self.facets[b].clone()));
        }
        let mut colors = Vec::with_capacity(self.edges.len());
        for &(v, w) in &self.edges {
            let (a, b) = (facet_coloring[self.facet_away(v, w)], facet_coloring[self.facet_away(w, v)]);
            if a != b {
                return Err(Error::TheoremViolation(format!(
                    "edge {}-{} sees colors {a} and {b}",
                    self.vertices[v], self.vertices[w]
                )));
            }
            colors.push(a);
        }
        let proper = (0..self.vertices.len()).all(|v| {
            let mut cs: Vec<usize> =
                self.edges.iter().zip(&colors).filter(|((a, b), _)| *a == v || *b == v).map(|(_, &c)| c).collect();
            cs.sort_unstable();
            cs.windows(2).all(|w| w[0] != w[1])
        });
        let mut used = colors.clone();
        used.sort_unstable();
        used.dedup();
        let edges = self.edges.iter().map(|&(v, w)| (self.vertices[v].clone(), self.vertices[w].clone())).collect();
        Ok(EdgeColoring { edges, colors, proper, colors_used: used.len() })
    }

    /// For an even polytope, `F(v,w)` and `F(w,v)` are disjoint for every edge.
    pub fn disjoint_facet_check(&self) -> Result<bool> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        Ok(self.edges.iter().all(|&(v, w)| {
            let (a, b) = (self.facet_away(v, w), self.facet_away(w, v));
            !self.incidence.iter().any(|inc| inc.binary_search(&a).is_ok() && inc.binary_search(&b).is_ok())
        }))
    }

    /// Rank over GF(2) of the 2-face boundary cycles in the edge space,
    /// compared with `|E| - |V| + 1`.
    pub fn cycle_space_check(&self) -> CycleSpace {
        let edge_index: BTreeMap<(usize, usize), usize> = self.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let rows: Vec<BitVec> = self
            .two_faces
            .iter()
            .map(|f| {
                let n = f.boundary.len();
                let ones = (0..n).map(|i| {
                    let (a, b) = (f.boundary[i], f.boundary[(i + 1) % n]);
                    edge_index[&(a.min(b), a.max(b))]
                });
                BitVec::from_ones(self.edges.len(), ones)
            })
            .collect();
        let rank = gf2::rank(&rows);
        let expected = self.edges.len() + 1 - self.vertices.len();
        CycleSpace { faces: rows.len(), rank, expected, equal: rank == expected }
    }

    /// For an even polytope, the number of vertices is even.
    pub fn even_vertex_parity(&self) -> Result<bool> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        Ok(self.vertices.len().is_multiple_of(2))
    }

    /// `P × Q`. Facets of `Q` are relabelled if the labels clash; the vertex
    /// `(v, w)` is named `(v,w)`.
    pub fn product(&self, other: &SimplePolytope) -> Product {
        let left: BTreeSet<Vertex> = self.facets.iter().cloned().collect();
        let relabeling = if other.facets.iter().any(|f| left.contains(f)) {
            disjoint_relabeling(&left, &other.facets)
        } else {
            BTreeMap::new()
        };
        let lift = |f: &Vertex| relabeling.get(f).cloned().unwrap_or_else(|| f.clone());
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(lift));
        let mut vertices = BTreeMap::new();
        for v in 0..self.vertices.len() {
            for w in 0..other.vertices.len() {
                let mut fs = self.facets_of(v);
                fs.extend(other.facets_of(w).iter().map(lift));
                vertices.insert(product_vertex(&self.vertices[v], &other.vertices[w]), fs);
            }
        }
        let polytope =
            SimplePolytope::new(self.dim + other.dim, facets, vertices).expect("product of simple polytopes is simple");
        Product { polytope, relabeling }
    }
}

/// Label of the product vertex `(v, w)`.
pub fn product_vertex(v: &Vertex, w: &Vertex) -> Vertex {
    Vertex::Name(format!("({v},{w})"))
}

/// All `k`-subsets of a sorted slice, in lexicographic order.
fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Orders `nodes` into a cycle using only edges among them. `None` unless the
/// induced subgraph is a single cycle of length at least 3.
fn trace_cycle(nodes: &[usize], neighbors: &[Vec<usize>]) -> Option<Vec<usize>> {
    if nodes.len() < 3 {
        return None;
    }
    let inside = |x: &usize| nodes.binary_search(x).is_ok();
    let local: Vec<Vec<usize>> = nodes.iter().map(|&v| neighbors[v].iter().copied().filter(inside).collect()).collect();
    if local.iter().any(|n| n.len() != 2) {
        return None;
    }
    let start = nodes[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = local[0][0];
    while cur != start {
        cycle.push(cur);
        let i = nodes.binary_search(&cur).ok()?;
        let next = if local[i][0] == prev { local[i][1] } else { local[i][0] };
        prev = cur;
        cur = next;
    }
    (cycle.len() == nodes.len()).then_some(cycle)
}

/// The dual complex with the correspondence vertex ↦ facet index.
#[derive(Clone, Debug)]
pub struct Dual {
    pub complex: SimplicialComplex,
    pub facet_of_vertex: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoringTheorem {
    pub dim: usize,
    pub even: bool,
    pub bipartite: bool,
    pub balanced_dual: bool,
    /// `Γ̄(P)` has a proper `d`-coloring, decided by exact search.
    pub gamma_is_d: bool,
    pub gamma: Chromatic,
    pub bipartition: Bipartiteness,
    pub dual_coloring: Option<Coloring>,
    /// A proper `d`-coloring of `Γ̄(P)` by facet index, when one exists.
    pub facet_coloring: Option<Vec<usize>>,
}

impl ColoringTheorem {
    /// All four conditions agree, and an exact `γ` is consistent with them.
    pub fn agree(&self) -> bool {
        let gamma_consistent = !self.gamma.exact || (self.gamma.colors == self.dim) == self.gamma_is_d;
        gamma_consistent && [self.bipartite, self.balanced_dual, self.gamma_is_d].iter().all(|&x| x == self.even)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SBounds {
    pub lower: usize,
    pub upper: usize,
    /// `γ(P) = d`, so both bounds coincide.
    pub tight: bool,
    /// False when `lower` comes from a greedy coloring.
    pub gamma_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub edges: Vec<(Vertex, Vertex)>,
    pub colors: Vec<usize>,
    pub proper: bool,
    pub colors_used: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpace {
    pub faces: usize,
    pub rank: usize,
    pub expected: usize,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct Product {
    pub polytope: SimplePolytope,
    /// Relabeling applied to the facets of the second factor.
    pub relabeling: BTreeMap<Vertex, Vertex>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductCheck {
    pub order: usize,
    pub left_order: usize,
    pub right_order: usize,
    pub equal: bool,
    pub partition: SymmetricProduct,
}

/// `Π(P×Q, (v,w)) = Π(P,v) × Π(Q,w)`, comparing the product's group with the
/// group generated by both factor groups acting on their own facets.
pub fn verify_product(p: &SimplePolytope, v: &Vertex, q: &SimplePolytope, w: &Vertex) -> Result<ProductCheck> {
    let prod = p.product(q);
    let whole = prod.polytope.pi_group(&product_vertex(v, w))?.group;
    let left = p.pi_group(v)?.group;
    let right = q.pi_group(w)?.group;
    let lift = |f: &Vertex| prod.relabeling.get(f).cloned().unwrap_or_else(|| f.clone());
    let mut gens = embed(&left, whole.ground(), Clone::clone);
    gens.extend(embed(&right, whole.ground(), lift));
    let product = PermutationGroup::generate(whole.ground().to_vec(), gens)?;
    Ok(ProductCheck {
        order: whole.order(),
        left_order: left.order(),
        right_order: right.order(),
        equal: product.equal(&whole)? && whole.order() == left.order() * right.order(),
        partition: whole.classify_symmetric_product(),
    })
}

/// Perspectivity of the dual complex between the facets of vertices `v` and
/// `w` (indices), as label pairs in the order of `𝓕(v)`.
pub fn dual_perspectivity(dual: &Dual, v: usize, w: usize) -> Result<Vec<(Vertex, Vertex)>> {
    let step = perspectivity(&dual.complex, dual.facet_of_vertex[v], dual.facet_of_vertex[w])?;
    Ok(step.pairs(&dual.complex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn cube_structure() {
        let c = builders::cube(3).unwrap();
        assert_eq!(c.num_vertices(), 8);
        assert_eq!(c.edges().len(), 12);
        assert_eq!(c.two_faces().len(), 6);
        assert!(c.two_faces().iter().all(|f| f.len() == 4));
        assert_eq!(c.f_vector(), vec![8, 12, 6]);
    }

    #[test]
    fn tetrahedron_structure() {
        let t = builders::simplex_polytope(3).unwrap();
        assert_eq!(t.two_faces().len(), 4);
        assert!(t.two_faces().iter().all(|f| f.len() == 3));
        let dual = t.dual();
        assert_eq!(dual.complex, builders::simplex_boundary(3).unwrap());
    }

    #[test]
    fn non_simple_input_is_rejected() {
        // octahedron: each vertex on 4 of the 8 triangles
        let facets: Vec<Vertex> = (1..=8).map(Vertex::Int).collect();
        let mut vertices = BTreeMap::new();
        let tri = [[1, 3, 5], [1, 3, 6], [1, 4, 5], [1, 4, 6], [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6]];
        for v in 1..=6 {
            let on: Vec<Vertex> = (0..8).filter(|&i| tri[i].contains(&v)).map(|i| Vertex::Int(i as i64 + 1)).collect();
            vertices.insert(Vertex::Int(v), on);
        }
        assert!(matches!(SimplePolytope::new(3, facets, vertices), Err(Error::NotSimple { count: 4, .. })));
    }

    #[test]
    fn unknown_and_duplicate_labels() {
        let mut vertices = BTreeMap::new();
        vertices.insert(Vertex::Int(1), vec![Vertex::Int(9)]);
        let r = SimplePolytope::new(1, vec![Vertex::Int(1), Vertex::Int(2)], vertices);
        assert_eq!(r, Err(Error::UnknownFacet(Vertex::Int(9))));
        let r = SimplePolytope::new(1, vec![Vertex::Int(1), Vertex::Int(1)], BTreeMap::new());
        assert_eq!(r, Err(Error::EmptyInput));
    }

    #[test]
    fn dodecahedron_dual_is_icosahedron() {
        let d = builders::dodecahedron();
        let dual = d.dual();
        assert_eq!(dual.complex.num_facets(), 20);
        assert_eq!(dual.complex.num_vertices(), 12);
        assert_eq!(dual.complex.dual_graph().num_edges(), 30);
    }

    #[test]
    fn vertex_perspectivity_matches_dual() {
        for p in [builders::cube(3).unwrap(), builders::dodecahedron(), builders::permutohedron()] {
            let dual = p.dual();
            for &(v, w) in p.edges() {
                let a = p.vertex_perspectivity(&p.vertices()[v], &p.vertices()[w]).unwrap();
                assert_eq!(a, dual_perspectivity(&dual, v, w).unwrap());
                let back = p.vertex_perspectivity(&p.vertices()[w], &p.vertices()[v]).unwrap();
                let inverse: BTreeMap<_, _> = back.into_iter().map(|(x, y)| (y, x)).collect();
                assert!(a.iter().all(|(x, y)| inverse[x] == *y));
            }
        }
    }

    #[test]
    fn cube_edge_swaps_perpendicular_facets() {
        let c = builders::cube(3).unwrap();
        let pairs = c.vertex_perspectivity(&Vertex::name("v000"), &Vertex::name("v100")).unwrap();
        // the edge runs along the first coordinate: facets 1 (x=0) and 2 (x=1)
        assert!(pairs.contains(&(Vertex::Int(1), Vertex::Int(2))));
        assert_eq!(pairs.iter().filter(|(a, b)| a != b).count(), 1);
        let far = c.vertex_perspectivity(&Vertex::name("v000"), &Vertex::name("v111"));
        assert!(matches!(far, Err(Error::VerticesNotAdjacent(..))));
    }

    #[test]
    fn regular_polytope_groups() {
        assert_eq!(builders::simplex_polytope(3).unwrap().pi_group(&Vertex::Int(1)).unwrap().group.order(), 6);
        assert_eq!(builders::simplex_polytope(4).unwrap().pi_group(&Vertex::Int(1)).unwrap().group.order(), 24);
        let d = builders::dodecahedron();
        assert_eq!(d.pi_group(&d.vertices()[0]).unwrap().group.order(), 6);
        for n in [3, 4] {
            let c = builders::cube(n).unwrap();
            assert!(c.pi_group(&c.vertices()[0]).unwrap().group.is_trivial());
        }
    }

    #[test]
    fn coloring_theorem_examples() {
        let cube = builders::cube(3).unwrap().coloring_theorem_check().unwrap();
        assert!(cube.even && cube.bipartite && cube.balanced_dual && cube.gamma_is_d);
        assert_eq!(cube.gamma.colors, 3);

        let dod = builders::dodecahedron().coloring_theorem_check().unwrap();
        assert!(!dod.even && !dod.bipartite && !dod.balanced_dual && !dod.gamma_is_d);
        assert_eq!((dod.gamma.colors, dod.gamma.exact), (4, true));

        let perm = builders::permutohedron().coloring_theorem_check().unwrap();
        assert!(perm.even && perm.gamma_is_d);
    }

    #[test]
    fn s_bounds_examples() {
        let s = builders::cube(3).unwrap().s_bounds().unwrap();
        assert_eq!((s.lower, s.upper, s.tight), (3, 3, true));
        let s = builders::dodecahedron().s_bounds().unwrap();
        assert_eq!((s.lower, s.upper, s.tight), (8, 9, false));
    }

    #[test]
    fn cube_edge_coloring_has_parallel_classes() {
        let c = builders::cube(3).unwrap();
        // facets 2i-1, 2i are opposite; color them i-1
        let colors: Vec<usize> = c
            .facets()
            .iter()
            .map(|f| match f {
                Vertex::Int(i) => ((i - 1) / 2) as usize,
                _ => unreachable!(),
            })
            .collect();
        let e = c.induced_edge_coloring(&colors).unwrap();
        assert!(e.proper);
        assert_eq!(e.colors_used, 3);
        for k in 0..3 {
            assert_eq!(e.colors.iter().filter(|&&x| x == k).count(), 4);
        }
    }

    #[test]
    fn edge_coloring_rejects_bad_input() {
        let t = builders::simplex_polytope(3).unwrap();
        assert!(matches!(t.induced_edge_coloring(&[0, 1, 2, 0]), Err(Error::ImproperColoring(..))));
        assert!(matches!(t.induced_edge_coloring(&[0, 1]), Err(Error::ColoringLength { .. })));
        assert!(matches!(t.induced_edge_coloring(&[0, 1, 2, 3]), Err(Error::ColorOutOfRange { .. })));
    }

    #[test]
    fn cycle_space_ranks() {
        assert_eq!(builders::cube(3).unwrap().cycle_space_check().rank, 5);
        assert_eq!(builders::dodecahedron().cycle_space_check().rank, 11);
        assert_eq!(builders::simplex_polytope(3).unwrap().cycle_space_check().rank, 3);
    }

    #[test]
    fn disjoint_facets_need_even() {
        assert_eq!(builders::cube(3).unwrap().disjoint_facet_check(), Ok(true));
        assert_eq!(builders::dodecahedron().disjoint_facet_check(), Err(Error::NotEven));
    }

    #[test]
    fn prism_product() {
        let tri = builders::simplex_polytope(2).unwrap();
        let seg = builders::simplex_polytope(1).unwrap();
        let check = verify_product(&tri, &Vertex::Int(1), &seg, &Vertex::Int(1)).unwrap();
        assert_eq!(check.order, 2);
        assert!(check.equal);
        assert_eq!(check.partition, SymmetricProduct::Partition(vec![1, 2]));
    }

    #[test]
    fn cube_times_segment_is_trivial() {
        let c = builders::cube(3).unwrap();
        let seg = builders::simplex_polytope(1).unwrap();
        let check = verify_product(&c, &c.vertices()[0], &seg, &Vertex::Int(1)).unwrap();
        assert_eq!(check.order, 1);
        assert!(check.equal);
    }

    #[test]
    fn data_round_trip() {
        let c = builders::cube(3).unwrap();
        let again = SimplePolytope::from_data(c.to_data()).unwrap();
        assert_eq!(again, c);
    }
}
