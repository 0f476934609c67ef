//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] keeps only its inclusion-maximal faces, sorted
//! lexicographically. Faces, stars, links and the dual graph are derived on
//! demand; the dual graph and the face list are memoized because almost every
//! downstream computation walks them.
//!
//! Facet indices (positions in [`SimplicialComplex::facets`]) are the currency
//! of the rest of the crate: facet paths, spanning trees and projectivities all
//! refer to facets by index.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Vertex label: an integer or a whitespace-free name.
///
/// Integers sort before names; integers numerically, names lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Int(i64),
    Name(String),
}

impl Vertex {
    /// Parses a token. Anything that reads as an `i64` becomes [`Vertex::Int`].
    ///
    /// Tokens must be non-empty and may not contain whitespace, control
    /// characters or any of `# { } "`.
    pub fn parse(token: &str) -> Result<Self> {
        let bad = |c: char| c.is_whitespace() || c.is_control() || matches!(c, '#' | '{' | '}' | '"');
        if token.is_empty() || token.chars().any(bad) {
            return Err(Error::MalformedToken(token.to_owned()));
        }
        Ok(match token.parse::<i64>() {
            Ok(i) => Vertex::Int(i),
            Err(_) => Vertex::Name(token.to_owned()),
        })
    }

    pub fn name(s: impl Into<String>) -> Self {
        Vertex::Name(s.into())
    }
}

impl From<i64> for Vertex {
    fn from(i: i64) -> Self {
        Vertex::Int(i)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(i) => write!(f, "{i}"),
            Vertex::Name(s) => f.write_str(s),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Vertex::Int(i) => serializer.serialize_i64(*i),
            Vertex::Name(s) => serializer.serialize_str(s),
        }
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(i) => Ok(Vertex::Int(i)),
            Raw::Str(s) => Vertex::parse(&s).map_err(serde::de::Error::custom),
        }
    }
}

/// A finite set of vertices, kept sorted. The empty simplex is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex, rejecting repeated vertices.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0].clone()));
        }
        Ok(Simplex(vs))
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Caller guarantees `vs` is sorted and duplicate-free.
    pub(crate) fn from_sorted(vs: Vec<Vertex>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Simplex(vs)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `#σ − 1`; the empty simplex has dimension −1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn position(&self, v: &Vertex) -> Option<usize> {
        self.0.binary_search(v).ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<Vertex> = self.0.iter().chain(&other.0).cloned().collect();
        Simplex(set.into_iter().collect())
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().filter(|v| other.contains(v)).cloned().collect())
    }

    /// Vertices of `self` not in `other`.
    pub fn minus(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().filter(|v| !other.contains(v)).cloned().collect())
    }

    pub fn without(&self, v: &Vertex) -> Simplex {
        Simplex(self.0.iter().filter(|w| *w != v).cloned().collect())
    }

    /// All subsets with exactly `k` vertices, in lexicographic order.
    pub fn subsets(&self, k: usize) -> Vec<Simplex> {
        fn rec(vs: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Simplex>) {
            if cur.len() == k {
                out.push(Simplex(cur.clone()));
                return;
            }
            for i in start..vs.len() {
                if vs.len() - i < k - cur.len() {
                    break;
                }
                cur.push(vs[i].clone());
                rec(vs, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k <= self.0.len() {
            rec(&self.0, k, 0, &mut Vec::with_capacity(k), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;
    fn try_from(vs: Vec<Vertex>) -> Result<Self> {
        Simplex::new(vs)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

/// Set semantics: repeated integers collapse.
impl<const N: usize> From<[i64; N]> for Simplex {
    fn from(ints: [i64; N]) -> Self {
        let set: BTreeSet<Vertex> = ints.into_iter().map(Vertex::Int).collect();
        Simplex(set.into_iter().collect())
    }
}

impl From<&[i64]> for Simplex {
    fn from(ints: &[i64]) -> Self {
        let set: BTreeSet<Vertex> = ints.iter().copied().map(Vertex::Int).collect();
        Simplex(set.into_iter().collect())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An edge of the dual graph: two facets and the ridge they share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    pub ridge: Simplex,
}

/// Facets as nodes, shared ridges as edges.
///
/// The empty set is never treated as a ridge, so a 0-dimensional complex has
/// an edgeless dual graph.
#[derive(Clone, Debug)]
pub struct DualGraph {
    neighbors: Vec<Vec<usize>>,
    edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn num_nodes(&self) -> usize {
        self.neighbors.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of facet `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Edges with `a < b`, sorted.
    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors.get(a).is_some_and(|n| n.binary_search(&b).is_ok())
    }

    /// Facet indices in the connected component of `start`, ascending.
    pub fn component(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.num_nodes()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.neighbors[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.num_nodes() > 0 && self.component(0).len() == self.num_nodes()
    }
}

/// Result of [`SimplicialComplex::join`].
#[derive(Clone, Debug)]
pub struct Join {
    pub complex: SimplicialComplex,
    /// Renaming applied to the right factor's vertices. Empty when the two
    /// vertex sets were already disjoint.
    pub relabeling: BTreeMap<Vertex, Vertex>,
}

impl Join {
    /// Maps a simplex of the right factor into the join's labels.
    pub fn lift_right(&self, s: &Simplex) -> Simplex {
        if self.relabeling.is_empty() {
            return s.clone();
        }
        let set: BTreeSet<Vertex> =
            s.vertices().iter().map(|v| self.relabeling.get(v).cloned().unwrap_or_else(|| v.clone())).collect();
        Simplex(set.into_iter().collect())
    }

    pub fn lift_vertex_right(&self, v: &Vertex) -> Vertex {
        self.relabeling.get(v).cloned().unwrap_or_else(|| v.clone())
    }
}

/// Result of [`SimplicialComplex::barycentric_subdivision`].
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// New vertex ↦ the face of the original complex it stands for.
    pub faces: BTreeMap<Vertex, Simplex>,
    /// New vertex ↦ dimension of its face.
    pub coloring: Coloring,
}

/// Whether a codimension-2 face has an even or odd cycle around it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Shape of the link of a codimension-2 face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkShape {
    /// A single cycle with this many edges (equivalently, facets in the star).
    Cycle(usize),
    /// Anything else: a path, a branching graph, several cycles.
    NotCycle { facets: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim2Face {
    pub face: Simplex,
    pub link: LinkShape,
}

impl Codim2Face {
    pub fn cycle_length(&self) -> Option<usize> {
        match self.link {
            LinkShape::Cycle(n) => Some(n),
            LinkShape::NotCycle { .. } => None,
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        self.cycle_length().map(Parity::of)
    }
}

/// Outcome of the decidable part of combinatorial-manifold recognition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldPrecheck {
    pub dim: isize,
    pub pure: bool,
    /// Every ridge lies in at most two facets.
    pub pseudomanifold: bool,
    /// Every ridge lies in exactly two facets.
    pub closed: bool,
    pub codim2_links_are_cycles: bool,
    /// Vertex links are spheres; `None` when the dimension exceeds 3 and the
    /// check is not attempted.
    pub vertex_links_are_spheres: Option<bool>,
    pub problems: Vec<String>,
}

impl ManifoldPrecheck {
    pub fn passes(&self) -> bool {
        self.pure && self.pseudomanifold && self.codim2_links_are_cycles && self.vertex_links_are_spheres != Some(false)
    }
}

/// A finite simplicial complex given by its facets.
#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    vertices: Vec<Vertex>,
    dual: OnceLock<DualGraph>,
    faces: OnceLock<Vec<Simplex>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex").field("facets", &self.facets).finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from a list of simplices. Simplices contained in
    /// another listed simplex are dropped, so the result keeps only facets.
    pub fn new(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let mut list: Vec<Simplex> = simplices.into_iter().collect();
        if list.is_empty() {
            return Err(Error::EmptyInput);
        }
        list.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        list.dedup();
        let mut facets: Vec<Simplex> = Vec::with_capacity(list.len());
        for s in list {
            if !facets.iter().any(|f| f.len() > s.len() && s.is_face_of(f)) {
                facets.push(s);
            }
        }
        facets.sort();
        let vertices: BTreeSet<Vertex> = facets.iter().flat_map(|f| f.0.iter().cloned()).collect();
        Ok(SimplicialComplex {
            facets,
            vertices: vertices.into_iter().collect(),
            dual: OnceLock::new(),
            faces: OnceLock::new(),
        })
    }

    /// Builds a complex from raw vertex lists.
    pub fn from_vertex_lists<I, F>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let simplices = lists.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        Self::new(simplices)
    }

    /// Convenience for integer-labelled complexes.
    pub fn from_int_facets<F: AsRef<[i64]>>(lists: &[F]) -> Result<Self> {
        Self::from_vertex_lists(lists.iter().map(|l| l.as_ref().iter().map(|&i| Vertex::Int(i))))
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> Result<&Simplex> {
        self.facets.get(i).ok_or(Error::FacetIndex(i))
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn facet_index(&self, s: &Simplex) -> Option<usize> {
        self.facets.binary_search(s).ok()
    }

    /// Index of `s`, or [`Error::NotAFacet`].
    pub fn require_facet(&self, s: &Simplex) -> Result<usize> {
        self.facet_index(s).ok_or_else(|| Error::NotAFacet(s.clone()))
    }

    /// Maximum facet dimension.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let n = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == n)
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Indices of the facets containing `s`.
    pub fn facets_containing(&self, s: &Simplex) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| s.is_face_of(&self.facets[i])).collect()
    }

    /// All non-empty faces, sorted. Memoized.
    pub fn faces(&self) -> &[Simplex] {
        self.faces.get_or_init(|| {
            let mut set = BTreeSet::new();
            for f in &self.facets {
                for k in 1..=f.len() {
                    set.extend(f.subsets(k));
                }
            }
            set.into_iter().collect()
        })
    }

    /// `f_vector()[k]` counts the k-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 1).max(0) as usize];
        for s in self.faces() {
            f[s.len() - 1] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Closed star: the subcomplex generated by the facets containing `s`.
    pub fn star(&self, s: &Simplex) -> Result<SimplicialComplex> {
        let facets: Vec<Simplex> = self.facets.iter().filter(|f| s.is_face_of(f)).cloned().collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(s.clone()));
        }
        SimplicialComplex::new(facets)
    }

    /// Link: faces of the star disjoint from `s`. The link of a facet is `{∅}`.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        let facets: Vec<Simplex> = self.facets.iter().filter(|f| s.is_face_of(f)).map(|f| f.minus(s)).collect();
        if facets.is_empty() {
            return Err(Error::NotAFace(s.clone()));
        }
        SimplicialComplex::new(facets)
    }

    /// Number of facets containing each ridge (faces one vertex short of a facet).
    pub fn ridge_degrees(&self) -> BTreeMap<Simplex, usize> {
        let mut map = BTreeMap::new();
        for f in &self.facets {
            if f.len() < 2 {
                continue;
            }
            for v in f.vertices() {
                *map.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        map
    }

    /// The dual graph. Memoized.
    pub fn dual_graph(&self) -> &DualGraph {
        self.dual.get_or_init(|| {
            let mut by_ridge: HashMap<Simplex, Vec<usize>> = HashMap::new();
            for (i, f) in self.facets.iter().enumerate() {
                if f.len() < 2 {
                    continue;
                }
                for v in f.vertices() {
                    by_ridge.entry(f.without(v)).or_default().push(i);
                }
            }
            let mut neighbors = vec![Vec::new(); self.facets.len()];
            let mut edges = Vec::new();
            for (ridge, fs) in by_ridge {
                for x in 0..fs.len() {
                    for y in x + 1..fs.len() {
                        let (a, b) = (fs[x].min(fs[y]), fs[x].max(fs[y]));
                        neighbors[a].push(b);
                        neighbors[b].push(a);
                        edges.push(DualEdge { a, b, ridge: ridge.clone() });
                    }
                }
            }
            for n in &mut neighbors {
                n.sort_unstable();
            }
            edges.sort_by_key(|e| (e.a, e.b));
            DualGraph { neighbors, edges }
        })
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.dual_graph().is_connected()
    }

    /// Strongly connected, and so is the star of every vertex.
    pub fn is_locally_strongly_connected(&self) -> bool {
        self.is_strongly_connected()
            && self.vertices.iter().all(|v| {
                let star = self.star(&Simplex(vec![v.clone()])).expect("vertex of the complex");
                star.is_strongly_connected()
            })
    }

    /// Edges of the 1-skeleton as pairs of vertex indices, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            let idx: Vec<usize> = f.vertices().iter().map(|v| self.vertex_index(v).unwrap()).collect();
            for i in 0..idx.len() {
                for j in i + 1..idx.len() {
                    set.insert((idx[i], idx[j]));
                }
            }
        }
        set.into_iter().collect()
    }

    /// The join, relabeling the right factor if the vertex sets meet.
    pub fn join(&self, other: &SimplicialComplex) -> Join {
        let left: BTreeSet<Vertex> = self.vertices.iter().cloned().collect();
        let relabeling = if other.vertices.iter().any(|v| left.contains(v)) {
            disjoint_relabeling(&left, &other.vertices)
        } else {
            BTreeMap::new()
        };
        let mut join = Join { complex: self.clone(), relabeling };
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(&join.lift_right(g)));
            }
        }
        join.complex = SimplicialComplex::new(facets).expect("non-empty product of facet lists");
        join
    }

    /// Vertices are the non-empty faces, facets the maximal chains. The new
    /// vertex for face `{a,b,c}` is labelled `[a,b,c]` and colored by `dim`.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let label = |s: &Simplex| {
            let inner: Vec<String> = s.vertices().iter().map(ToString::to_string).collect();
            Vertex::Name(format!("[{}]", inner.join(",")))
        };
        let mut faces = BTreeMap::new();
        let mut colors = BTreeMap::new();
        for s in self.faces() {
            let v = label(s);
            colors.insert(v.clone(), s.len() - 1);
            faces.insert(v, s.clone());
        }
        let mut chains = Vec::new();
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            for order in permutations(f.len()) {
                let mut prefix = Vec::with_capacity(f.len());
                let mut chain = BTreeSet::new();
                for &i in &order {
                    prefix.push(f.0[i].clone());
                    prefix.sort();
                    chain.insert(label(&Simplex(prefix.clone())));
                }
                chains.push(Simplex(chain.into_iter().collect()));
            }
        }
        if chains.is_empty() {
            chains.push(Simplex::empty());
        }
        Subdivision {
            complex: SimplicialComplex::new(chains).expect("non-empty chain list"),
            faces,
            coloring: Coloring::new(colors),
        }
    }

    /// Every codimension-2 face with the shape of its link. Needs a pure
    /// complex; 0-dimensional complexes have none.
    pub fn codim2_census(&self) -> Result<Vec<Codim2Face>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let d = self.dim();
        if d < 1 {
            return Ok(Vec::new());
        }
        let k = (d - 1) as usize;
        let kappas: BTreeSet<Simplex> = self.facets.iter().flat_map(|f| f.subsets(k)).collect();
        Ok(kappas
            .into_iter()
            .map(|kappa| {
                let link_edges: Vec<Simplex> =
                    self.facets.iter().filter(|f| kappa.is_face_of(f)).map(|f| f.minus(&kappa)).collect();
                let link = if is_single_cycle(&link_edges) {
                    LinkShape::Cycle(link_edges.len())
                } else {
                    LinkShape::NotCycle { facets: link_edges.len() }
                };
                Codim2Face { face: kappa, link }
            })
            .collect())
    }

    /// Like [`codim2_census`](Self::codim2_census), but fails on the first
    /// codimension-2 face whose link is not a single cycle.
    pub fn codim2_faces(&self) -> Result<Vec<Codim2Face>> {
        let census = self.codim2_census()?;
        if let Some(bad) = census.iter().find(|c| c.cycle_length().is_none()) {
            return Err(Error::LinkNotCycle(bad.face.clone()));
        }
        Ok(census)
    }

    /// Pure, pseudomanifold, cycle links around codimension-2 faces, and for
    /// dimension at most 3, sphere links at vertices.
    pub fn manifold_precheck(&self) -> ManifoldPrecheck {
        let mut problems = Vec::new();
        let pure = self.is_pure();
        if !pure {
            problems.push("complex is not pure".to_owned());
        }
        let degrees = self.ridge_degrees();
        let mut pseudomanifold = true;
        let mut closed = true;
        for (ridge, &n) in &degrees {
            if n > 2 {
                pseudomanifold = false;
                problems.push(format!("ridge {ridge} lies in {n} facets"));
            }
            if n != 2 {
                closed = false;
            }
        }
        let codim2_links_are_cycles = match self.codim2_census() {
            Ok(census) => {
                let bad: Vec<&Codim2Face> = census.iter().filter(|c| c.cycle_length().is_none()).collect();
                for c in &bad {
                    problems.push(format!("link of {} is not a cycle", c.face));
                }
                bad.is_empty()
            }
            Err(_) => false,
        };
        let d = self.dim();
        let vertex_links_are_spheres = if d <= 3 && pure {
            let mut ok = true;
            for v in &self.vertices {
                let link = self.link(&Simplex(vec![v.clone()])).expect("vertex of the complex");
                if !is_sphere_low_dim(&link, d - 1) {
                    ok = false;
                    problems.push(format!("link of vertex {v} is not a {}-sphere", d - 1));
                }
            }
            Some(ok)
        } else if pure {
            None
        } else {
            Some(false)
        };
        ManifoldPrecheck {
            dim: d,
            pure,
            pseudomanifold,
            closed,
            codim2_links_are_cycles,
            vertex_links_are_spheres,
            problems,
        }
    }
}

impl fmt::Display for SimplicialComplex {
    /// Line format: one facet per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            let line: Vec<String> = facet.vertices().iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fresh labels for `right` avoiding `left`: integers are shifted past the
/// largest integer of `left`, names get primes appended.
pub(crate) fn disjoint_relabeling(left: &BTreeSet<Vertex>, right: &[Vertex]) -> BTreeMap<Vertex, Vertex> {
    let max_left = left.iter().filter_map(|v| if let Vertex::Int(i) = v { Some(*i) } else { None }).max();
    let min_right = right.iter().filter_map(|v| if let Vertex::Int(i) = v { Some(*i) } else { None }).min();
    let shift = match (max_left, min_right) {
        (Some(a), Some(b)) => (a - b + 1).max(0),
        _ => 0,
    };
    let mut primes = 1;
    while right
        .iter()
        .any(|v| matches!(v, Vertex::Name(s) if left.contains(&Vertex::Name(format!("{s}{}", "'".repeat(primes))))))
    {
        primes += 1;
    }
    right
        .iter()
        .map(|v| {
            let new = match v {
                Vertex::Int(i) => Vertex::Int(i + shift),
                Vertex::Name(s) => Vertex::Name(format!("{s}{}", "'".repeat(primes))),
            };
            (v.clone(), new)
        })
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
    out
}

/// Do these 2-element sets form one cycle graph?
fn is_single_cycle(edges: &[Simplex]) -> bool {
    if edges.len() < 3 || edges.iter().any(|e| e.len() != 2) {
        return false;
    }
    let mut adj: BTreeMap<&Vertex, Vec<&Vertex>> = BTreeMap::new();
    for e in edges {
        adj.entry(&e.0[0]).or_default().push(&e.0[1]);
        adj.entry(&e.0[1]).or_default().push(&e.0[0]);
    }
    if adj.values().any(|n| n.len() != 2) {
        return false;
    }
    let start = *adj.keys().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == adj.len()
}

/// Sphere recognition for dimensions −1..=2.
fn is_sphere_low_dim(c: &SimplicialComplex, dim: isize) -> bool {
    if c.dim() != dim || !c.is_pure() {
        return false;
    }
    match dim {
        -1 => true,
        0 => c.num_facets() == 2,
        1 => is_single_cycle(c.facets()),
        2 => {
            let every_edge_twice = c.ridge_degrees().values().all(|&n| n == 2);
            every_edge_twice && c.euler_characteristic() == 2 && skeleton_connected(c)
        }
        _ => false,
    }
}

fn skeleton_connected(c: &SimplicialComplex) -> bool {
    let n = c.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for (a, b) in c.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_int_facets(lists).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn build_examples() {
        let single = cx(&[&[1, 2, 3]]);
        assert_eq!(single.dim(), 2);
        assert_eq!(single.num_facets(), 1);

        let c3 = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(c3.dim(), 1);
        assert_eq!(c3.num_facets(), 3);

        let collapsed = cx(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(collapsed.facets(), &[Simplex::from([1, 2, 3])]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(SimplicialComplex::new(Vec::new()), Err(Error::EmptyInput));
        assert!(matches!(Vertex::parse("a b"), Err(Error::MalformedToken(_))));
        assert!(matches!(Vertex::parse(""), Err(Error::MalformedToken(_))));
        assert!(matches!(Vertex::parse("{x"), Err(Error::MalformedToken(_))));
        assert_eq!(
            SimplicialComplex::from_int_facets(&[&[1, 1, 2][..]]).unwrap_err(),
            Error::RepeatedVertex(Vertex::Int(1))
        );
    }

    #[test]
    fn vertex_order_and_parsing() {
        assert_eq!(Vertex::parse("17").unwrap(), Vertex::Int(17));
        assert_eq!(Vertex::parse("v1").unwrap(), Vertex::name("v1"));
        assert!(Vertex::Int(100) < Vertex::name("a"));
        assert!(Vertex::Int(-3) < Vertex::Int(2));
    }

    #[test]
    fn star_examples() {
        let t = tetra_boundary();
        assert_eq!(t.star(&Simplex::from([1])).unwrap().num_facets(), 3);
        let f = Simplex::from([1, 2, 3]);
        assert_eq!(t.star(&f).unwrap().facets(), std::slice::from_ref(&f));
        assert_eq!(t.star(&Simplex::from([9])).unwrap_err(), Error::NotAFace(Simplex::from([9])));
    }

    #[test]
    fn link_examples() {
        let t = tetra_boundary();
        let lk = t.link(&Simplex::from([1])).unwrap();
        assert_eq!(lk, cx(&[&[2, 3], &[2, 4], &[3, 4]]));
        let lk_facet = t.link(&Simplex::from([1, 2, 3])).unwrap();
        assert_eq!(lk_facet.facets(), &[Simplex::empty()]);
        assert_eq!(lk_facet.dim(), -1);
        assert!(t.link(&Simplex::from([1, 5])).is_err());
    }

    #[test]
    fn pentagonal_edge_link() {
        // In pentagon * edge the edge {10,11} is a codimension-2 face whose
        // link is the pentagon.
        let pentagon = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let edge = cx(&[&[10, 11]]);
        let j = pentagon.join(&edge).complex;
        let lk = j.link(&Simplex::from([10, 11])).unwrap();
        assert_eq!(lk, pentagon);
        let census = j.codim2_census().unwrap();
        let c = census.iter().find(|c| c.face == Simplex::from([10, 11])).unwrap();
        assert_eq!(c.link, LinkShape::Cycle(5));
        assert_eq!(c.parity(), Some(Parity::Odd));
    }

    #[test]
    fn dual_graph_examples() {
        let t = tetra_boundary();
        let g = t.dual_graph();
        assert_eq!(g.num_edges(), 6);
        assert!((0..4).all(|i| g.neighbors(i).len() == 3));

        let single = cx(&[&[1, 2, 3, 4]]);
        assert_eq!(single.dual_graph().num_nodes(), 1);
        assert_eq!(single.dual_graph().num_edges(), 0);

        let two_points = cx(&[&[1], &[2]]);
        assert_eq!(two_points.dual_graph().num_edges(), 0);
        assert!(!two_points.is_strongly_connected());
    }

    #[test]
    fn dual_edges_carry_ridges() {
        let t = tetra_boundary();
        let e = &t.dual_graph().edges()[0];
        assert_eq!(e.ridge, t.facets()[e.a].intersection(&t.facets()[e.b]));
    }

    #[test]
    fn connectivity_examples() {
        let t = tetra_boundary();
        assert!(t.is_strongly_connected());
        assert!(t.is_locally_strongly_connected());

        let path = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 4, 5]]);
        assert!(path.is_strongly_connected());
        assert!(!path.is_locally_strongly_connected());

        let disjoint = cx(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(!disjoint.is_strongly_connected());
    }

    #[test]
    fn join_examples() {
        let p = cx(&[&[1]]);
        let q = cx(&[&[2]]);
        assert_eq!(p.join(&q).complex, cx(&[&[1, 2]]));

        let c3 = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let j = c3.join(&c3);
        assert_eq!(j.complex.dim(), 3);
        assert_eq!(j.complex.num_facets(), 9);
        assert!(j.complex.facets().iter().all(|f| f.len() == 4));
        assert_eq!(j.relabeling.len(), 3);
        assert_eq!(j.relabeling[&Vertex::Int(1)], Vertex::Int(4));

        let t = tetra_boundary();
        let cone = t.join(&cx(&[&[0]]));
        assert_eq!(cone.complex.num_facets(), 4);
        assert!(cone.complex.facets().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn join_relabels_names() {
        let a = SimplicialComplex::from_vertex_lists([[Vertex::name("a"), Vertex::name("b")]]).unwrap();
        let j = a.join(&a);
        assert_eq!(j.complex.num_vertices(), 4);
        assert_eq!(j.lift_vertex_right(&Vertex::name("a")), Vertex::name("a'"));
    }

    #[test]
    fn subdivision_examples() {
        let edge = cx(&[&[1, 2]]);
        let sd = edge.barycentric_subdivision();
        assert_eq!(sd.complex.num_vertices(), 3);
        assert_eq!(sd.complex.num_facets(), 2);

        let triangle = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let sd = triangle.barycentric_subdivision();
        assert_eq!(sd.complex.num_vertices(), 6);
        assert_eq!(sd.complex.num_facets(), 6);
        assert!(sd.complex.codim2_faces().unwrap().iter().all(|c| c.cycle_length() == Some(6)));
        assert!(sd.coloring.is_proper(&sd.complex));
    }

    #[test]
    fn codim2_examples() {
        let t = tetra_boundary();
        let faces = t.codim2_faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|c| c.parity() == Some(Parity::Odd) && c.cycle_length() == Some(3)));

        let disk = cx(&[&[1, 2, 3], &[1, 3, 4]]);
        assert!(matches!(disk.codim2_faces(), Err(Error::LinkNotCycle(_))));
        assert_eq!(cx(&[&[1, 2], &[3]]).codim2_census(), Err(Error::NotPure));
    }

    #[test]
    fn precheck_examples() {
        let b4 = cx(&[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 5], &[1, 3, 4, 5], &[2, 3, 4, 5]]);
        let report = b4.manifold_precheck();
        assert!(report.passes(), "{report:?}");
        assert!(report.closed);

        let fin = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        let report = fin.manifold_precheck();
        assert!(!report.pseudomanifold);
        assert!(!report.passes());
    }

    #[test]
    fn euler_characteristic_of_sphere() {
        assert_eq!(tetra_boundary().euler_characteristic(), 2);
        assert_eq!(tetra_boundary().f_vector(), vec![4, 6, 4]);
    }

    #[test]
    fn serde_round_trip_of_simplex() {
        let s = Simplex::new([Vertex::Int(3), Vertex::name("x"), Vertex::Int(1)]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[1,3,"x"]"#);
        let back: Simplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Simplex>("[1,1]").is_err());
    }
}
