//! Independent oracles. Nothing here calls the projectivity, coloring or
//! GF(2) code of the library; complexes are only read through their facet
//! lists.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use pxk::{SimplePolytope, SimplicialComplex, Vertex};

pub type Facet = BTreeSet<Vertex>;
pub type Map = BTreeMap<Vertex, Vertex>;

pub fn facets(c: &SimplicialComplex) -> Vec<Facet> {
    c.facets().iter().map(|f| f.vertices().iter().cloned().collect()).collect()
}

/// Perspectivity by set difference, or `None` if the facets do not share a
/// ridge.
pub fn perspectivity(s: &Facet, t: &Facet) -> Option<Map> {
    if s.len() != t.len() || s.intersection(t).count() + 1 != s.len() {
        return None;
    }
    let from = s.difference(t).next()?.clone();
    let to = t.difference(s).next()?.clone();
    Some(s.iter().map(|v| (v.clone(), if *v == from { to.clone() } else { v.clone() })).collect())
}

/// Applies `second` after `first`.
pub fn compose(first: &Map, second: &Map) -> Map {
    first.iter().map(|(k, v)| (k.clone(), second[v].clone())).collect()
}

pub fn invert(m: &Map) -> Map {
    m.iter().map(|(k, v)| (v.clone(), k.clone())).collect()
}

/// Projectivity along a path of facet indices, or `None` if a step is not a
/// ridge crossing.
pub fn path_map(fs: &[Facet], path: &[usize]) -> Option<Map> {
    let mut acc: Map = fs[path[0]].iter().map(|v| (v.clone(), v.clone())).collect();
    for w in path.windows(2) {
        acc = compose(&acc, &perspectivity(&fs[w[0]], &fs[w[1]])?);
    }
    Some(acc)
}

/// Every projectivity along every facet loop at `base`, by exhaustive search
/// of the states (facet, map from the base facet). A state is reachable iff
/// some facet path realizes it, so the maps found at `base` are the group.
pub fn brute_force_group(c: &SimplicialComplex, base: usize) -> BTreeSet<Map> {
    let fs = facets(c);
    let id: Map = fs[base].iter().map(|v| (v.clone(), v.clone())).collect();
    let mut seen: BTreeSet<(usize, Map)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert((base, id.clone()));
    queue.push_back((base, id));
    while let Some((at, m)) = queue.pop_front() {
        for next in 0..fs.len() {
            if let Some(p) = perspectivity(&fs[at], &fs[next]) {
                let state = (next, compose(&m, &p));
                if seen.insert(state.clone()) {
                    queue.push_back(state);
                }
            }
        }
    }
    seen.into_iter().filter(|(f, _)| *f == base).map(|(_, m)| m).collect()
}

/// Elements of a library group as maps on its ground set.
pub fn group_maps(g: &pxk::PermutationGroup) -> BTreeSet<Map> {
    let ground = g.ground();
    g.elements()
        .iter()
        .map(|p| (0..ground.len()).map(|i| (ground[i].clone(), ground[p.image(i)].clone())).collect())
        .collect()
}

/// Whether `n` nodes with `edges` admit a proper coloring with `k` colors,
/// by plain backtracking in index order. Returns a witness.
pub fn k_colorable(n: usize, edges: &[(usize, usize)], k: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn go(i: usize, k: usize, adj: &[Vec<usize>], col: &mut Vec<usize>) -> bool {
        if i == adj.len() {
            return true;
        }
        for c in 0..k {
            if adj[i].iter().all(|&j| j >= i || col[j] != c) {
                col[i] = c;
                if go(i + 1, k, adj, col) {
                    return true;
                }
            }
        }
        false
    }
    let mut col = vec![0; n];
    go(0, k, &adj, &mut col).then_some(col)
}

/// Smallest `k` with a proper `k`-coloring.
pub fn chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    (0..=n).find(|&k| k_colorable(n, edges, k).is_some()).unwrap()
}

/// Vertex-index edges of a complex, read off the facets.
pub fn skeleton(c: &SimplicialComplex) -> (usize, Vec<(usize, usize)>) {
    let index: BTreeMap<&Vertex, usize> = c.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = BTreeSet::new();
    for f in c.facets() {
        let vs = f.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                edges.insert((index[&vs[i]], index[&vs[j]]));
            }
        }
    }
    (c.num_vertices(), edges.into_iter().collect())
}

/// Two-coloring of a graph by BFS; `None` if some edge joins equal colors.
pub fn two_color(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                    q.push_back(y);
                }
            }
        }
    }
    edges.iter().all(|&(a, b)| side[a] != side[b]).then_some(side)
}

/// Polytope edges recomputed from the incidence: vertex pairs with exactly
/// `d - 1` common facets.
pub fn polytope_edges(p: &SimplePolytope) -> Vec<(usize, usize)> {
    let n = p.num_vertices();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let common = p.incidence(a).iter().filter(|f| p.incidence(b).contains(f)).count();
            if common + 1 == p.dim() {
                out.push((a, b));
            }
        }
    }
    out
}

/// Facet pairs sharing a vertex.
pub fn facet_graph(p: &SimplePolytope) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for v in 0..p.num_vertices() {
        let inc = p.incidence(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                out.insert((inc[i], inc[j]));
            }
        }
    }
    out.into_iter().collect()
}

/// Vertex sets of the 2-faces: for each `(d-2)`-subset `S` of some `𝓕(v)`,
/// the vertices whose facets contain `S`.
pub fn two_face_vertex_sets(p: &SimplePolytope) -> Vec<BTreeSet<usize>> {
    let mut sets = BTreeSet::new();
    for v in 0..p.num_vertices() {
        let inc = p.incidence(v);
        for skip in subsets_of_size(inc.len(), 2) {
            let s: Vec<usize> = (0..inc.len()).filter(|i| !skip.contains(i)).map(|i| inc[i]).collect();
            sets.insert(s);
        }
    }
    sets.iter()
        .map(|s| (0..p.num_vertices()).filter(|&v| s.iter().all(|f| p.incidence(v).contains(f))).collect())
        .collect()
}

pub fn two_face_sizes(p: &SimplePolytope) -> Vec<usize> {
    let mut sizes: Vec<usize> = two_face_vertex_sets(p).iter().map(BTreeSet::len).collect();
    sizes.sort_unstable();
    sizes
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Rank over GF(2) as log2 of the size of the span, by enumerating every
/// subset sum. Only for a handful of rows.
pub fn span_rank(rows: &[Vec<bool>]) -> usize {
    assert!(rows.len() <= 20, "too many rows for enumeration");
    let mut span = BTreeSet::new();
    for mask in 0u32..1 << rows.len() {
        let mut acc = vec![false; rows.first().map_or(0, Vec::len)];
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(r) {
                    *a ^= b;
                }
            }
        }
        span.insert(acc);
    }
    span.len().trailing_zeros() as usize
}

/// 2-face boundary edge vectors: for each 2-face, the edges with both ends in it.
pub fn two_face_edge_rows(p: &SimplePolytope) -> Vec<Vec<bool>> {
    let edges = polytope_edges(p);
    two_face_vertex_sets(p)
        .iter()
        .map(|on| edges.iter().map(|(a, b)| on.contains(a) && on.contains(b)).collect())
        .collect()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
