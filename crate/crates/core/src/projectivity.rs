//! Perspectivities, projectivities and groups of projectivities.
//!
//! Two facets `σ`, `τ` sharing a ridge differ in exactly one vertex each. The
//! perspectivity `σ → τ` sends the vertex of `σ` missing from `τ` to the
//! vertex of `τ` missing from `σ` and fixes the ridge. Composing
//! perspectivities along a facet path gives a projectivity; the projectivities
//! along closed paths at a base facet form a permutation group of that facet's
//! vertex set.
//!
//! Composition is written left to right throughout: `p.then(q)` applies `p`
//! first, matching the path concatenation `g * h`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::complex::{Join, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::permgroup::{Permutation, PermutationGroup};

/// A walk in the dual graph, as facet indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetPath {
    facets: Vec<usize>,
}

impl FacetPath {
    /// Validates adjacency of consecutive facets.
    pub fn new(complex: &SimplicialComplex, facets: Vec<usize>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyPath);
        }
        for &f in &facets {
            complex.facet(f)?;
        }
        let dual = complex.dual_graph();
        for w in facets.windows(2) {
            if !dual.are_adjacent(w[0], w[1]) {
                return Err(Error::NotAdjacent(complex.facets()[w[0]].clone(), complex.facets()[w[1]].clone()));
            }
        }
        Ok(FacetPath { facets })
    }

    /// Looks facets up by their vertex sets.
    pub fn from_simplices(complex: &SimplicialComplex, simplices: &[Simplex]) -> Result<Self> {
        let idx = simplices.iter().map(|s| complex.require_facet(s)).collect::<Result<Vec<_>>>()?;
        Self::new(complex, idx)
    }

    /// The path of length zero at `facet`.
    pub fn trivial(facet: usize) -> Self {
        FacetPath { facets: vec![facet] }
    }

    pub fn facets(&self) -> &[usize] {
        &self.facets
    }

    pub fn start(&self) -> usize {
        self.facets[0]
    }

    pub fn end(&self) -> usize {
        *self.facets.last().unwrap()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.facets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// `self * other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &FacetPath) -> Result<FacetPath> {
        if self.end() != other.start() {
            return Err(Error::PathEndpoints {
                start: other.start(),
                end: other.end(),
                expected_start: self.end(),
                expected_end: other.end(),
            });
        }
        let mut facets = self.facets.clone();
        facets.extend_from_slice(&other.facets[1..]);
        Ok(FacetPath { facets })
    }

    /// `g⁻`, the path walked backwards.
    pub fn reversed(&self) -> FacetPath {
        FacetPath { facets: self.facets.iter().rev().copied().collect() }
    }

    pub fn to_simplices(&self, complex: &SimplicialComplex) -> Vec<Simplex> {
        self.facets.iter().map(|&i| complex.facets()[i].clone()).collect()
    }
}

/// A bijection from the vertices of one facet to those of another.
///
/// `map[i]` is the position, within the sorted vertices of `target`, of the
/// image of the `i`-th vertex of `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Projectivity {
    source: usize,
    target: usize,
    map: Vec<usize>,
}

impl Projectivity {
    pub fn identity(complex: &SimplicialComplex, facet: usize) -> Result<Self> {
        let n = complex.facet(facet)?.len();
        Ok(Projectivity { source: facet, target: facet, map: (0..n).collect() })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn positions(&self) -> &[usize] {
        &self.map
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Projectivity) -> Result<Projectivity> {
        if self.target != other.source {
            return Err(Error::PathEndpoints {
                start: other.source,
                end: other.target,
                expected_start: self.target,
                expected_end: other.target,
            });
        }
        Ok(Projectivity {
            source: self.source,
            target: other.target,
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Projectivity {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Projectivity { source: self.target, target: self.source, map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The image of a vertex of the source facet.
    pub fn apply(&self, complex: &SimplicialComplex, v: &Vertex) -> Option<Vertex> {
        let s = &complex.facets()[self.source];
        let t = &complex.facets()[self.target];
        s.position(v).map(|i| t.vertices()[self.map[i]].clone())
    }

    /// `(vertex, image)` pairs in source order.
    pub fn pairs(&self, complex: &SimplicialComplex) -> Vec<(Vertex, Vertex)> {
        let s = &complex.facets()[self.source];
        let t = &complex.facets()[self.target];
        s.vertices().iter().zip(&self.map).map(|(v, &j)| (v.clone(), t.vertices()[j].clone())).collect()
    }

    /// Only for loops (`source == target`).
    pub fn to_permutation(&self) -> Option<Permutation> {
        (self.source == self.target).then(|| Permutation::new(self.map.clone()).expect("projectivities are bijections"))
    }
}

/// The perspectivity from facet `sigma` to the adjacent facet `tau`.
pub fn perspectivity(complex: &SimplicialComplex, sigma: usize, tau: usize) -> Result<Projectivity> {
    let s = complex.facet(sigma)?;
    let t = complex.facet(tau)?;
    if !complex.dual_graph().are_adjacent(sigma, tau) {
        return Err(Error::NotAdjacent(s.clone(), t.clone()));
    }
    let incoming = t.minus(s);
    let target_of_missing = t.position(&incoming.vertices()[0]).unwrap();
    let map = s.vertices().iter().map(|v| t.position(v).unwrap_or(target_of_missing)).collect();
    Ok(Projectivity { source: sigma, target: tau, map })
}

/// The projectivity along `path`.
pub fn projectivity(complex: &SimplicialComplex, path: &FacetPath) -> Result<Projectivity> {
    let mut acc = Projectivity::identity(complex, path.start())?;
    for w in path.facets().windows(2) {
        acc = acc.then(&perspectivity(complex, w[0], w[1])?)?;
    }
    Ok(acc)
}

/// Breadth-first spanning tree of the dual-graph component of `root`.
///
/// Neighbours are visited in ascending facet order, which is the
/// lexicographic order of the facets, so the tree is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl SpanningTree {
    pub fn bfs(complex: &SimplicialComplex, root: usize) -> Result<Self> {
        complex.facet(root)?;
        let dual = complex.dual_graph();
        let mut parent = vec![None; complex.num_facets()];
        let mut seen = vec![false; complex.num_facets()];
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            for &y in dual.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        Ok(SpanningTree { root, parent, order })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Facets reached, in visiting order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn contains(&self, facet: usize) -> bool {
        facet == self.root || self.parent.get(facet).is_some_and(Option::is_some)
    }

    pub fn parent(&self, facet: usize) -> Option<usize> {
        self.parent.get(facet).copied().flatten()
    }

    /// `(child, parent)` pairs in visiting order.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.order.iter().filter_map(|&c| self.parent(c).map(|p| (c, p))).collect()
    }

    /// Path from the root to `facet` inside the tree.
    pub fn path_to(&self, facet: usize) -> Option<FacetPath> {
        if !self.contains(facet) {
            return None;
        }
        let mut facets = vec![facet];
        let mut x = facet;
        while let Some(p) = self.parent(x) {
            facets.push(p);
            x = p;
        }
        facets.reverse();
        Some(FacetPath { facets })
    }

    /// Dual-graph edges `(a, b)`, `a < b`, inside the component but not in the tree.
    pub fn non_tree_edges(&self, complex: &SimplicialComplex) -> Vec<(usize, usize)> {
        complex
            .dual_graph()
            .edges()
            .iter()
            .filter(|e| self.contains(e.a) && self.parent(e.a) != Some(e.b) && self.parent(e.b) != Some(e.a))
            .map(|e| (e.a, e.b))
            .collect()
    }

    /// The loop `t_a * (a, b) * t_b⁻` closing a non-tree edge.
    pub fn fundamental_loop(&self, a: usize, b: usize) -> Option<FacetPath> {
        let ta = self.path_to(a)?;
        let tb = self.path_to(b)?;
        let mut facets = ta.facets;
        facets.extend(tb.facets.iter().rev());
        Some(FacetPath { facets })
    }

    /// Projectivity from the root to every reached facet along the tree.
    fn tree_projectivities(&self, complex: &SimplicialComplex) -> Result<BTreeMap<usize, Projectivity>> {
        let mut out = BTreeMap::new();
        out.insert(self.root, Projectivity::identity(complex, self.root)?);
        for &x in &self.order[1..] {
            let p = self.parent(x).unwrap();
            let step = perspectivity(complex, p, x)?;
            let acc = out[&p].then(&step)?;
            out.insert(x, acc);
        }
        Ok(out)
    }
}

/// The group of projectivities at a base facet, with the data used to build it.
#[derive(Clone, Debug)]
pub struct ProjectivityGroup {
    pub base: usize,
    pub group: PermutationGroup,
    pub tree: SpanningTree,
    /// Non-tree edges `(x, y)` whose loops `fundamental_loop(x, y)` gave the
    /// generators, one per generator, in generator order.
    pub generator_edges: Vec<(usize, usize)>,
    /// False when the dual graph is disconnected and only the component of the
    /// base facet was analysed.
    pub full_scope: bool,
}

fn base_ground(complex: &SimplicialComplex, base: usize) -> Result<Vec<Vertex>> {
    Ok(complex.facet(base)?.vertices().to_vec())
}

/// `Π(Δ, σ₀)`: generated by the fundamental loops of a spanning tree of the
/// dual graph. Every facet loop factors through tree paths and non-tree edges,
/// so these loops suffice. A loop is listed as a generator only if it enlarges
/// the group generated by the loops of earlier non-tree edges.
pub fn pi_group(complex: &SimplicialComplex, base: usize) -> Result<ProjectivityGroup> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let ground = base_ground(complex, base)?;
    let tree = SpanningTree::bfs(complex, base)?;
    let along = tree.tree_projectivities(complex)?;
    let mut candidates = Vec::new();
    let mut edges = Vec::new();
    // Each non-tree edge a < b is crossed from b to a.
    for (a, b) in tree.non_tree_edges(complex) {
        let lp = along[&b].then(&perspectivity(complex, b, a)?)?.then(&along[&a].inverse())?;
        candidates.push(lp.to_permutation().expect("fundamental loops are closed"));
        edges.push((b, a));
    }
    let (group, kept) = PermutationGroup::generate_irredundant(ground, &candidates)?;
    let generator_edges = kept.into_iter().map(|i| edges[i]).collect();
    let full_scope = tree.order().len() == complex.num_facets();
    Ok(ProjectivityGroup { base, group, tree, generator_edges, full_scope })
}

/// One generator of the odd-face subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct OddGenerator {
    /// The odd codimension-2 face.
    pub face: Simplex,
    /// Facet containing `face` where the loop around it starts.
    pub facet: usize,
    /// Full loop `g * l * g⁻` at the base facet.
    #[serde(skip)]
    pub path: FacetPath,
    #[serde(skip)]
    pub permutation: Permutation,
}

#[derive(Clone, Debug)]
pub struct OddSubgroup {
    pub base: usize,
    pub group: PermutationGroup,
    pub generators: Vec<OddGenerator>,
    /// Odd faces whose loop projectivity turned out to be the identity. Always
    /// empty when every codimension-2 link is a cycle; kept as a diagnostic.
    pub degenerate: Vec<Simplex>,
}

/// The subgroup generated by conjugated loops around the odd codimension-2
/// faces. For combinatorial manifolds this is the reduced group `Π₀`; for
/// other pure complexes it is just a subgroup of [`pi_group`].
pub fn odd_subgroup(complex: &SimplicialComplex, base: usize) -> Result<OddSubgroup> {
    let ground = base_ground(complex, base)?;
    let census = complex.codim2_faces()?;
    let tree = SpanningTree::bfs(complex, base)?;
    let mut generators = Vec::new();
    let mut degenerate = Vec::new();
    let mut perms = Vec::new();
    for c in census.into_iter().filter(|c| c.parity() == Some(crate::complex::Parity::Odd)) {
        let star = complex.facets_containing(&c.face);
        let start = star[0];
        let Some(g) = tree.path_to(start) else {
            continue;
        };
        let l = star_loop(complex, &star);
        let path = g.concat(&l)?.concat(&g.reversed())?;
        let perm = projectivity(complex, &path)?.to_permutation().expect("closed path");
        if perm.is_identity() {
            degenerate.push(c.face.clone());
        } else {
            perms.push(perm.clone());
        }
        generators.push(OddGenerator { face: c.face, facet: start, path, permutation: perm });
    }
    let (group, _) = PermutationGroup::generate_irredundant(ground, &perms)?;
    Ok(OddSubgroup { base, group, generators, degenerate })
}

/// Loop once around the cycle `Γ(st κ)` from its smallest facet, stepping
/// first to the smaller of its two neighbours.
fn star_loop(complex: &SimplicialComplex, star: &[usize]) -> FacetPath {
    let dual = complex.dual_graph();
    let in_star = |x: &usize| star.binary_search(x).is_ok();
    let start = star[0];
    let mut facets = vec![start];
    let mut prev = start;
    let mut cur = *dual.neighbors(start).iter().find(|x| in_star(x)).expect("cycle link");
    while cur != start {
        facets.push(cur);
        let next = *dual.neighbors(cur).iter().find(|&&x| x != prev && in_star(&x)).expect("cycle link");
        prev = cur;
        cur = next;
    }
    facets.push(start);
    FacetPath { facets }
}

/// Groups at both ends of a path and whether conjugation by the path's
/// projectivity carries one onto the other.
#[derive(Clone, Debug)]
pub struct BaseChange {
    pub at_source: PermutationGroup,
    pub at_target: PermutationGroup,
    pub conjugate: bool,
}

/// Checks `Π(Δ,σ₀) = ⟨g⟩ Π(Δ,σ₁) ⟨g⁻⟩` for a path `g` from `σ₀` to `σ₁`.
pub fn base_change(complex: &SimplicialComplex, source: usize, target: usize, path: &FacetPath) -> Result<BaseChange> {
    if path.start() != source || path.end() != target {
        return Err(Error::PathEndpoints {
            start: path.start(),
            end: path.end(),
            expected_start: source,
            expected_end: target,
        });
    }
    let g = projectivity(complex, path)?;
    let g_inv = g.inverse();
    let at_source = pi_group(complex, source)?.group;
    let at_target = pi_group(complex, target)?.group;
    let mut conjugated = BTreeSet::new();
    for p in at_target.elements() {
        let as_proj = Projectivity { source: target, target, map: p.images() };
        let c = g.then(&as_proj)?.then(&g_inv)?;
        conjugated.insert(c.to_permutation().unwrap());
    }
    let conjugate =
        conjugated.len() == at_source.order() && at_source.elements().iter().all(|p| conjugated.contains(p));
    Ok(BaseChange { at_source, at_target, conjugate })
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationCheck {
    pub holds: bool,
    pub pi_order: usize,
    pub odd_order: usize,
    pub generated_order: usize,
    /// Projectivities of the supplied loops, in cycle notation.
    pub loop_projectivities: Vec<String>,
}

/// Does the odd-face subgroup together with the supplied loops generate the
/// whole group of projectivities?
pub fn verify_generation(complex: &SimplicialComplex, base: usize, loops: &[FacetPath]) -> Result<GenerationCheck> {
    let base_facet = complex.facet(base)?.clone();
    let pi = pi_group(complex, base)?;
    let odd = odd_subgroup(complex, base)?;
    let mut gens: Vec<Permutation> = odd.group.generators().to_vec();
    let mut loop_projectivities = Vec::new();
    for l in loops {
        if l.start() != base || l.end() != base {
            return Err(Error::NotALoop(base_facet));
        }
        let p = projectivity(complex, l)?.to_permutation().unwrap();
        loop_projectivities.push(pi.group.format(&p));
        gens.push(p);
    }
    let generated = PermutationGroup::generate(pi.group.ground().to_vec(), gens)?;
    Ok(GenerationCheck {
        holds: generated.equal(&pi.group)?,
        pi_order: pi.group.order(),
        odd_order: odd.group.order(),
        generated_order: generated.order(),
        loop_projectivities,
    })
}

/// What a vertex map does to a group of projectivities.
#[derive(Clone, Debug)]
pub struct InducedHomomorphism {
    pub source_order: usize,
    /// Image of `Π(Δ, σ₀)` inside `Sym f(σ₀)`.
    pub image: PermutationGroup,
    /// Every pushed-forward generator equals the projectivity of the image loop.
    pub respects_paths: bool,
    /// The image lies in `Π(Δ', f(σ₀))`.
    pub image_contained: bool,
    pub facet_injective: bool,
    pub injective: bool,
}

/// Pushes the generating loops of `Π(source, base)` through the vertex map
/// `f` into `target`.
pub fn induced_map(
    f: &BTreeMap<Vertex, Vertex>,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    base: usize,
) -> Result<InducedHomomorphism> {
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch(source.dim(), target.dim()));
    }
    let map_vertex = |v: &Vertex| f.get(v).cloned().ok_or_else(|| Error::UnknownVertex(v.clone()));
    let mut facet_image = Vec::with_capacity(source.num_facets());
    for s in source.facets() {
        let image: BTreeSet<Vertex> = s.vertices().iter().map(map_vertex).collect::<Result<_>>()?;
        if image.len() != s.len() {
            return Err(Error::DegenerateMap(s.clone()));
        }
        let image = Simplex::from_sorted(image.into_iter().collect());
        let idx = target.facet_index(&image).ok_or(Error::NotSimplicial(image))?;
        facet_image.push(idx);
    }
    let target_vertices = target.facets()[facet_image[base]].vertices();
    let embedding = source.facets()[base]
        .vertices()
        .iter()
        .map(|v| target_vertices.binary_search(&f[v]).expect("image facet contains f(v)"))
        .collect();
    push_forward(source, base, target, &facet_image, embedding)
}

/// The inclusion of the left factor into a join, `σ ↦ σ ∪ σ₀'`, on groups of
/// projectivities.
pub fn join_factor_inclusion(
    left: &SimplicialComplex,
    left_base: usize,
    right: &SimplicialComplex,
    right_base: usize,
) -> Result<InducedHomomorphism> {
    let join = left.join(right);
    let fixed = join.lift_right(right.facet(right_base)?);
    let facet_image =
        left.facets().iter().map(|s| join.complex.require_facet(&s.union(&fixed))).collect::<Result<Vec<_>>>()?;
    let target_vertices = join.complex.facets()[facet_image[left_base]].vertices();
    let embedding =
        left.facet(left_base)?.vertices().iter().map(|v| target_vertices.binary_search(v).unwrap()).collect();
    push_forward(left, left_base, &join.complex, &facet_image, embedding)
}

/// `facet_image[i]` is the target facet of source facet `i`; `embedding[i]`
/// the position in the image of the base facet of the base facet's `i`-th
/// vertex. Points of the target base facet outside the embedding stay fixed.
fn push_forward(
    source: &SimplicialComplex,
    base: usize,
    target: &SimplicialComplex,
    facet_image: &[usize],
    embedding: Vec<usize>,
) -> Result<InducedHomomorphism> {
    let facet_injective = facet_image.iter().collect::<BTreeSet<_>>().len() == facet_image.len();
    let pi = pi_group(source, base)?;
    let target_base = facet_image[base];
    let target_pi = pi_group(target, target_base)?;
    let width = target.facets()[target_base].len();
    let push = |p: &Permutation| {
        let mut images: Vec<usize> = (0..width).collect();
        for i in 0..embedding.len() {
            images[embedding[i]] = embedding[p.image(i)];
        }
        Permutation::new(images).unwrap()
    };

    let mut respects_paths = true;
    let mut pushed = Vec::new();
    for &(a, b) in &pi.generator_edges {
        let lp = pi.tree.fundamental_loop(a, b).unwrap();
        let own = projectivity(source, &lp)?.to_permutation().unwrap();
        let mut image_facets: Vec<usize> = lp.facets().iter().map(|&i| facet_image[i]).collect();
        // facets glued together by a non-injective map give stationary steps
        image_facets.dedup();
        let image_loop = FacetPath::new(target, image_facets)?;
        let image_perm = projectivity(target, &image_loop)?.to_permutation().unwrap();
        respects_paths &= image_perm == push(&own);
        pushed.push(image_perm);
    }
    let image = PermutationGroup::generate(target_pi.group.ground().to_vec(), pushed)?;
    Ok(InducedHomomorphism {
        source_order: pi.group.order(),
        image_contained: image.is_subgroup_of(&target_pi.group)?,
        injective: image.order() == pi.group.order(),
        image,
        respects_paths,
        facet_injective,
    })
}

/// Lifts permutations of a factor's base facet into the ground of a larger
/// facet, fixing the remaining points.
pub(crate) fn embed(
    group: &PermutationGroup,
    big_ground: &[Vertex],
    relabel: impl Fn(&Vertex) -> Vertex,
) -> Vec<Permutation> {
    let pos: Vec<usize> =
        group.ground().iter().map(|v| big_ground.binary_search(&relabel(v)).expect("factor ground embeds")).collect();
    group
        .generators()
        .iter()
        .map(|g| {
            let mut images: Vec<usize> = (0..big_ground.len()).collect();
            for i in 0..pos.len() {
                images[pos[i]] = pos[g.image(i)];
            }
            Permutation::new(images).unwrap()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct JoinProductCheck {
    pub join_order: usize,
    pub left_order: usize,
    pub right_order: usize,
    /// `Π` of the join equals the internal direct product of the factor images.
    pub equal: bool,
}

/// Computes `Π(Δ*Δ', σ₀∪σ₀')` directly and compares it with the group
/// generated by the two factor groups acting on their own halves.
pub fn verify_join_product(
    left: &SimplicialComplex,
    left_base: usize,
    right: &SimplicialComplex,
    right_base: usize,
) -> Result<JoinProductCheck> {
    let join = left.join(right);
    let base = join_base(&join, left, left_base, right, right_base)?;
    let whole = pi_group(&join.complex, base)?.group;
    let l = pi_group(left, left_base)?.group;
    let r = pi_group(right, right_base)?.group;
    let mut gens = embed(&l, whole.ground(), Clone::clone);
    gens.extend(embed(&r, whole.ground(), |v| join.lift_vertex_right(v)));
    let product = PermutationGroup::generate(whole.ground().to_vec(), gens)?;
    Ok(JoinProductCheck {
        join_order: whole.order(),
        left_order: l.order(),
        right_order: r.order(),
        equal: product.equal(&whole)? && whole.order() == l.order() * r.order(),
    })
}

fn join_base(join: &Join, left: &SimplicialComplex, lb: usize, right: &SimplicialComplex, rb: usize) -> Result<usize> {
    let s = left.facet(lb)?.union(&join.lift_right(right.facet(rb)?));
    join.complex.require_facet(&s)
}

/// The exchange identity in a join: for adjacent `σ, τ` in the left factor
/// and adjacent `σ', τ'` in the right factor,
/// `⟨σ∪σ', σ∪τ', τ∪τ'⟩ = ⟨σ∪σ', τ∪σ', τ∪τ'⟩`.
pub fn square_identity(
    join: &Join,
    left: &SimplicialComplex,
    (sigma, tau): (usize, usize),
    right: &SimplicialComplex,
    (sigma_r, tau_r): (usize, usize),
) -> Result<bool> {
    let s = left.facet(sigma)?;
    let t = left.facet(tau)?;
    let sr = join.lift_right(right.facet(sigma_r)?);
    let tr = join.lift_right(right.facet(tau_r)?);
    let first = FacetPath::from_simplices(&join.complex, &[s.union(&sr), s.union(&tr), t.union(&tr)])?;
    let second = FacetPath::from_simplices(&join.complex, &[s.union(&sr), t.union(&sr), t.union(&tr)])?;
    Ok(projectivity(&join.complex, &first)? == projectivity(&join.complex, &second)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    fn cx(lists: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_int_facets(lists).unwrap()
    }

    fn idx(c: &SimplicialComplex, s: [i64; 3]) -> usize {
        c.require_facet(&Simplex::from(s)).unwrap()
    }

    fn path(c: &SimplicialComplex, facets: &[[i64; 3]]) -> FacetPath {
        let simplices: Vec<Simplex> = facets.iter().map(|&f| Simplex::from(f)).collect();
        FacetPath::from_simplices(c, &simplices).unwrap()
    }

    #[test]
    fn perspectivity_examples() {
        let c = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let p = perspectivity(&c, 0, 1).unwrap();
        let pairs = p.pairs(&c);
        assert_eq!(
            pairs,
            vec![(Vertex::Int(1), Vertex::Int(4)), (Vertex::Int(2), Vertex::Int(2)), (Vertex::Int(3), Vertex::Int(3))]
        );
        assert_eq!(perspectivity(&c, 1, 0).unwrap(), p.inverse());
        assert!(matches!(perspectivity(&c, 0, 0), Err(Error::NotAdjacent(..))));
    }

    #[test]
    fn projectivity_examples() {
        let t = builders::torus_t();
        let p = path(&t, &[[1, 2, 4], [2, 4, 5], [4, 5, 7], [5, 7, 8], [1, 7, 8], [1, 2, 8], [1, 2, 4]]);
        assert!(projectivity(&t, &p).unwrap().is_identity());

        let a = builders::anti_torus_a();
        let q = path(&a, &[[1, 2, 4], [2, 4, 5], [2, 5, 6], [2, 3, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4]]);
        let perm = projectivity(&a, &q).unwrap().to_permutation().unwrap();
        let ground = a.facets()[idx(&a, [1, 2, 4])].vertices().to_vec();
        assert_eq!(perm.to_cycle_string(&ground), "(1 4 2)");

        let trivial = FacetPath::trivial(0);
        assert!(projectivity(&t, &trivial).unwrap().is_identity());
    }

    #[test]
    fn broken_paths_are_rejected() {
        let t = builders::torus_t();
        let a = idx(&t, [1, 2, 4]);
        let far = idx(&t, [5, 6, 8]);
        assert!(matches!(FacetPath::new(&t, vec![a, far]), Err(Error::NotAdjacent(..))));
        assert_eq!(FacetPath::new(&t, vec![]), Err(Error::EmptyPath));
    }

    #[test]
    fn pi_group_examples() {
        let b3 = builders::simplex_boundary(3).unwrap();
        let g = pi_group(&b3, 0).unwrap();
        assert_eq!(g.group.order(), 6);
        assert!(g.full_scope);

        let t = builders::torus_t();
        assert!(pi_group(&t, idx(&t, [1, 2, 4])).unwrap().group.is_trivial());

        let a = builders::anti_torus_a();
        let pa = pi_group(&a, idx(&a, [1, 2, 4])).unwrap();
        assert_eq!(pa.group.order(), 3);
        let c = Permutation::parse_cycles(pa.group.ground(), "(1 4 2)").unwrap();
        assert!(pa.group.contains(&c));

        assert!(matches!(pi_group(&t, 99), Err(Error::FacetIndex(99))));
    }

    #[test]
    fn pi_group_on_disconnected_input_is_partial() {
        let c = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[7, 8, 9]]);
        let g = pi_group(&c, 0).unwrap();
        assert!(!g.full_scope);
        assert_eq!(g.group.order(), 6);
    }

    #[test]
    fn odd_subgroup_examples() {
        let t = builders::torus_t();
        assert!(odd_subgroup(&t, 0).unwrap().group.is_trivial());

        let b3 = builders::simplex_boundary(3).unwrap();
        let odd = odd_subgroup(&b3, 0).unwrap();
        assert_eq!(odd.group.order(), 6);
        assert!(odd.generators.iter().all(|g| g.permutation.is_transposition()));
        assert!(odd.degenerate.is_empty());

        let a = builders::anti_torus_a();
        let base = idx(&a, [1, 2, 4]);
        assert!(odd_subgroup(&a, base).unwrap().group.is_trivial());
        assert_eq!(pi_group(&a, base).unwrap().group.order(), 3);

        let disk = cx(&[&[1, 2, 3], &[1, 3, 4]]);
        assert!(matches!(odd_subgroup(&disk, 0), Err(Error::LinkNotCycle(_))));
    }

    #[test]
    fn base_change_examples() {
        let b3 = builders::simplex_boundary(3).unwrap();
        let trivial = base_change(&b3, 0, 0, &FacetPath::trivial(0)).unwrap();
        assert!(trivial.conjugate);
        assert!(trivial.at_source.equal(&trivial.at_target).unwrap());

        let g = FacetPath::new(&b3, vec![0, 1, 2]).unwrap();
        assert!(base_change(&b3, 0, 2, &g).unwrap().conjugate);

        let a = builders::anti_torus_a();
        let s = idx(&a, [1, 2, 4]);
        let t = idx(&a, [2, 4, 5]);
        let bc = base_change(&a, s, t, &FacetPath::new(&a, vec![s, t]).unwrap()).unwrap();
        assert!(bc.conjugate);
        assert_eq!(bc.at_target.order(), 3);

        assert!(matches!(base_change(&b3, 1, 2, &g), Err(Error::PathEndpoints { .. })));
    }

    #[test]
    fn generation_examples() {
        let t = builders::torus_t();
        let base = idx(&t, [1, 2, 4]);
        let p = path(&t, &[[1, 2, 4], [2, 4, 5], [4, 5, 7], [5, 7, 8], [1, 7, 8], [1, 2, 8], [1, 2, 4]]);
        let q = path(&t, &[[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4]]);
        assert!(verify_generation(&t, base, &[p.clone(), q]).unwrap().holds);

        let a = builders::anti_torus_a();
        let pa = path(&a, &[[1, 2, 4], [2, 4, 5], [4, 5, 7], [5, 7, 8], [1, 7, 8], [1, 2, 8], [1, 2, 4]]);
        let qa = path(&a, &[[1, 2, 4], [2, 4, 5], [2, 5, 6], [2, 3, 6], [1, 3, 6], [1, 4, 6], [1, 2, 4]]);
        let check = verify_generation(&a, base, &[pa.clone(), qa]).unwrap();
        assert!(check.holds);
        assert_eq!(check.loop_projectivities, vec!["()".to_owned(), "(1 4 2)".to_owned()]);
        // without q' the loops miss the 3-cycle
        assert!(!verify_generation(&a, base, &[pa]).unwrap().holds);

        let b3 = builders::simplex_boundary(3).unwrap();
        assert!(verify_generation(&b3, 0, &[]).unwrap().holds);

        let open = FacetPath::new(&b3, vec![0, 1]).unwrap();
        assert!(matches!(verify_generation(&b3, 0, &[open]), Err(Error::NotALoop(_))));
    }

    #[test]
    fn induced_map_examples() {
        let b3 = builders::simplex_boundary(3).unwrap();
        let star = b3.star(&Simplex::from([1])).unwrap();
        let id: BTreeMap<Vertex, Vertex> = b3.vertices().iter().map(|v| (v.clone(), v.clone())).collect();
        let h = induced_map(&id, &star, &b3, 0).unwrap();
        assert!(h.image_contained && h.respects_paths && h.facet_injective && h.injective);
        assert_eq!(6 % h.image.order(), 0);
        assert_eq!(h.image.order(), 2);

        let h = induced_map(&id, &b3, &b3, 0).unwrap();
        assert_eq!(h.image.order(), 6);
        assert!(h.image.equal(&pi_group(&b3, 0).unwrap().group).unwrap());

        let c3 = builders::cycle(3).unwrap();
        let c4 = builders::cycle(4).unwrap();
        let h = join_factor_inclusion(&c3, 0, &c4, 0).unwrap();
        assert!(h.image_contained && h.respects_paths && h.facet_injective && h.injective);
        assert_eq!(h.image.order(), 2);

        let mismatched = SimplicialComplex::new([Simplex::from([1, 2])]).unwrap();
        assert!(matches!(induced_map(&id, &mismatched, &b3, 0), Err(Error::DimensionMismatch(1, 2))));

        let collapse: BTreeMap<Vertex, Vertex> =
            b3.vertices().iter().map(|v| (v.clone(), Vertex::Int(if *v == Vertex::Int(4) { 3 } else { 1 }))).collect();
        assert!(matches!(induced_map(&collapse, &b3, &b3, 0), Err(Error::DegenerateMap(_))));
    }

    #[test]
    fn join_product_examples() {
        let c3 = builders::cycle(3).unwrap();
        let c4 = builders::cycle(4).unwrap();
        let r = verify_join_product(&c3, 0, &c3, 0).unwrap();
        assert_eq!((r.join_order, r.left_order, r.right_order, r.equal), (4, 2, 2, true));
        let r = verify_join_product(&c4, 0, &c3, 0).unwrap();
        assert_eq!((r.join_order, r.equal), (2, true));
        let pt = SimplicialComplex::new([Simplex::from([0])]).unwrap();
        let b3 = builders::simplex_boundary(3).unwrap();
        let r = verify_join_product(&pt, 0, &b3, 0).unwrap();
        assert_eq!((r.join_order, r.equal), (6, true));
    }

    #[test]
    fn square_identity_in_c3_join() {
        let c3 = builders::cycle(3).unwrap();
        let join = c3.join(&c3);
        let dual = c3.dual_graph();
        for e in dual.edges() {
            for f in dual.edges() {
                assert!(square_identity(&join, &c3, (e.a, e.b), &c3, (f.a, f.b)).unwrap());
                assert!(square_identity(&join, &c3, (e.b, e.a), &c3, (f.b, f.a)).unwrap());
            }
        }
    }
}
