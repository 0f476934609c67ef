//! Vertex colorings of complexes and small exact graph coloring.
//!
//! A `d`-dimensional complex is balanced when its vertices can be colored
//! with `d + 1` colors so that every facet sees each color once. For locally
//! strongly connected complexes that is decided by pushing a coloring of one
//! facet through the spanning tree of perspectivities and checking that the
//! vertices end up with consistent colors; otherwise an exact search on the
//! 1-skeleton decides it.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::projectivity::{perspectivity, SpanningTree};

/// Vertex ↦ color index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: BTreeMap<Vertex, usize>,
}

impl Coloring {
    pub fn new(colors: BTreeMap<Vertex, usize>) -> Self {
        Coloring { colors }
    }

    pub fn get(&self, v: &Vertex) -> Option<usize> {
        self.colors.get(v).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<Vertex, usize> {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        let mut used: Vec<usize> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Every vertex colored and no edge of the complex monochromatic.
    pub fn is_proper(&self, complex: &SimplicialComplex) -> bool {
        complex.facets().iter().all(|f| {
            let mut cs: Vec<Option<usize>> = f.vertices().iter().map(|v| self.get(v)).collect();
            if cs.iter().any(Option::is_none) {
                return false;
            }
            cs.sort_unstable();
            cs.windows(2).all(|w| w[0] != w[1])
        })
    }
}

/// A simple undirected graph on nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::NodeIndex(a.max(b)));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if adj[a].contains(&b) {
                return Err(Error::MultiEdge(a.min(b), a.max(b)));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for n in &mut adj {
            n.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, n)| n.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.num_nodes() && self.edges().all(|(a, b)| colors[a] != colors[b])
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.num_nodes()];
        let mut count = 0;
        for s in 0..self.num_nodes() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }
}

/// Either a 2-coloring or an odd cycle proving none exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    Bipartite {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Nodes of an odd closed walk without repeated nodes, in order.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    /// Checks the certificate against the graph.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Bipartiteness::Bipartite { left, right } => {
                let mut side = vec![None; g.num_nodes()];
                for &l in left {
                    side[l] = Some(0);
                }
                for &r in right {
                    if side[r].is_some() {
                        return false;
                    }
                    side[r] = Some(1);
                }
                side.iter().all(Option::is_some) && g.edges().all(|(a, b)| side[a] != side[b])
            }
            Bipartiteness::OddCycle(c) => {
                let mut sorted = c.clone();
                sorted.sort_unstable();
                sorted.dedup();
                c.len() % 2 == 1
                    && sorted.len() == c.len()
                    && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
            }
        }
    }
}

/// Breadth-first 2-coloring, component by component.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.num_nodes();
    let mut side = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return Bipartiteness::OddCycle(odd_cycle(x, y, &parent, &depth));
                }
            }
        }
    }
    let left = (0..n).filter(|&i| side[i] == 0).collect();
    let right = (0..n).filter(|&i| side[i] == 1).collect();
    Bipartiteness::Bipartite { left, right }
}

/// Tree paths from `x` and `y` up to their common ancestor, closed by the edge `x-y`.
fn odd_cycle(x: usize, y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    up_a
}

/// Graphs up to this many nodes get an exact chromatic number.
pub const EXACT_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chromatic {
    pub colors: usize,
    /// False when the graph exceeded [`EXACT_LIMIT`] and `colors` is only the
    /// greedy upper bound.
    pub exact: bool,
    pub coloring: Vec<usize>,
}

/// Chromatic number by DSATUR branch and bound.
///
/// Fails with [`Error::ExceedsCap`] as soon as a lower bound (or, for exact
/// mode, the search) shows more than `cap` colors are needed.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<Chromatic> {
    let n = g.num_nodes();
    if n == 0 {
        return Ok(Chromatic { colors: 0, exact: true, coloring: Vec::new() });
    }
    if greedy_clique(g) > cap {
        return Err(Error::ExceedsCap(cap));
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().unwrap() + 1;
    if n > EXACT_LIMIT {
        if upper > cap {
            return Err(Error::ExceedsCap(cap));
        }
        return Ok(Chromatic { colors: upper, exact: false, coloring: greedy });
    }
    let lower = greedy_clique(g);
    let mut best = (upper, greedy);
    for k in lower..upper {
        if k > cap {
            break;
        }
        if let Some(c) = k_coloring(g, k) {
            best = (k, c);
            break;
        }
    }
    if best.0 > cap {
        return Err(Error::ExceedsCap(cap));
    }
    Ok(Chromatic { colors: best.0, exact: true, coloring: best.1 })
}

/// Size of a clique found greedily: a lower bound for the chromatic number.
pub fn greedy_clique(g: &Graph) -> usize {
    let n = g.num_nodes();
    let mut best = usize::from(n > 0);
    for s in 0..n {
        let mut clique = vec![s];
        let mut cands: Vec<usize> = g.neighbors(s).to_vec();
        cands.sort_by_key(|&c| std::cmp::Reverse(g.neighbors(c).len()));
        for c in cands {
            if clique.iter().all(|&q| g.has_edge(q, c)) {
                clique.push(c);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// DSATUR without backtracking.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.num_nodes();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let v = pick_dsatur(g, &colors).unwrap();
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| colors[w] == Some(c)) {
            c += 1;
        }
        colors[v] = Some(c);
    }
    colors.into_iter().map(Option::unwrap).collect()
}

/// Uncolored node with the most distinct neighbour colors; ties go to higher
/// uncolored degree, then to the smaller index.
fn pick_dsatur(g: &Graph, colors: &[Option<usize>]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..g.num_nodes() {
        if colors[v].is_some() {
            continue;
        }
        let mut seen: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| colors[w]).collect();
        seen.sort_unstable();
        seen.dedup();
        let free_degree = g.neighbors(v).iter().filter(|&&w| colors[w].is_none()).count();
        let key = (seen.len(), free_degree, v);
        if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
            best = Some(key);
        }
    }
    best.map(|b| b.2)
}

/// A proper coloring with at most `k` colors, if one exists. Exact.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn search(g: &Graph, k: usize, colors: &mut Vec<Option<usize>>, used: usize) -> bool {
        let Some(v) = pick_dsatur(g, colors) else {
            return true;
        };
        // new colors are only opened one at a time, which breaks the symmetry
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().any(|&w| colors[w] == Some(c)) {
                continue;
            }
            colors[v] = Some(c);
            if search(g, k, colors, used.max(c + 1)) {
                return true;
            }
            colors[v] = None;
        }
        false
    }
    let n = g.num_nodes();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![None; n];
    search(g, k, &mut colors, 0).then(|| colors.into_iter().map(Option::unwrap).collect())
}

/// Vertex-edge graph of a complex, nodes indexed like `complex.vertices()`.
pub fn one_skeleton(complex: &SimplicialComplex) -> Graph {
    Graph::new(complex.num_vertices(), complex.edges()).expect("edges of a complex form a simple graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BalanceMethod {
    /// Colors propagated through perspectivities along a spanning tree.
    Propagation,
    /// Exact `(d+1)`-coloring search on the 1-skeleton.
    ExactSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Balance {
    pub balanced: bool,
    /// Proper `(d+1)`-coloring, checked before it is returned.
    pub coloring: Option<Coloring>,
    pub method: BalanceMethod,
}

/// Decides whether `complex` has a proper coloring with `dim + 1` colors.
pub fn is_balanced(complex: &SimplicialComplex) -> Balance {
    let colors_needed = (complex.dim() + 1).max(0) as usize;
    if complex.is_locally_strongly_connected() {
        let coloring = propagate(complex);
        let balanced = coloring.is_some();
        return Balance { balanced, coloring, method: BalanceMethod::Propagation };
    }
    let g = one_skeleton(complex);
    let coloring =
        k_coloring(&g, colors_needed).map(|cs| Coloring::new(complex.vertices().iter().cloned().zip(cs).collect()));
    let coloring = coloring.filter(|c| c.is_proper(complex));
    Balance { balanced: coloring.is_some(), coloring, method: BalanceMethod::ExactSearch }
}

/// Colors facet 0 with `0..=d` in vertex order and transports the colors
/// along a spanning tree of the dual graph. `None` if some vertex receives two
/// different colors.
fn propagate(complex: &SimplicialComplex) -> Option<Coloring> {
    let tree = SpanningTree::bfs(complex, 0).expect("complex has a facet");
    let mut facet_colors: Vec<Vec<usize>> = vec![Vec::new(); complex.num_facets()];
    facet_colors[0] = (0..complex.facets()[0].len()).collect();
    for &x in &tree.order()[1..] {
        let p = tree.parent(x).unwrap();
        let step = perspectivity(complex, p, x).expect("tree edges are adjacent");
        let mut cs = vec![0; complex.facets()[x].len()];
        for (i, &j) in step.positions().iter().enumerate() {
            cs[j] = facet_colors[p][i];
        }
        facet_colors[x] = cs;
    }
    let mut colors: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (f, cs) in complex.facets().iter().zip(&facet_colors) {
        for (v, &c) in f.vertices().iter().zip(cs) {
            if *colors.entry(v.clone()).or_insert(c) != c {
                return None;
            }
        }
    }
    let coloring = Coloring::new(colors);
    coloring.is_proper(complex).then_some(coloring)
}
