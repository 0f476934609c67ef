//! The analysis report shared by `analyze` and `polytope`.
//!
//! Every list is in canonical order, so the same input always renders to the
//! same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use pxk::coloring::{is_balanced, BalanceMethod, Bipartiteness, Coloring};
use pxk::complex::{LinkShape, ManifoldPrecheck};
use pxk::polytope::{CycleSpace, SBounds};
use pxk::projectivity::{odd_subgroup, pi_group};
use pxk::{Error, PermutationGroup, SimplePolytope, Simplex, SimplicialComplex, SymmetricProduct, Vertex};

use crate::Failure;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: &str = "pxk-report/1";

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema_version: &'static str,
    pub source: String,
    pub digest: String,
    /// `complex` or `polytope`. For polytopes the complex section describes
    /// the dual complex.
    pub kind: &'static str,
    pub complex: ComplexReport,
    pub polytope: Option<PolytopeReport>,
}

#[derive(Serialize)]
pub struct ComplexReport {
    pub dimension: isize,
    pub facets: usize,
    pub vertices: usize,
    pub pure: bool,
    pub strongly_connected: bool,
    pub locally_strongly_connected: bool,
    pub manifold_precheck: ManifoldPrecheck,
    pub parity_census: Option<ParityCensus>,
    pub base_facet: Simplex,
    pub pi: Option<PiReport>,
    pub odd_subgroup: Option<OddReport>,
    pub balance: BalanceReport,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct ParityCensus {
    pub even: usize,
    pub odd: usize,
    pub not_cycle: usize,
}

#[derive(Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub ground: Vec<Vertex>,
    pub generators: Vec<String>,
    /// Orbit sizes when the group is a product of symmetric groups.
    pub partition: Option<Vec<usize>>,
    pub classification: String,
}

impl GroupReport {
    fn of(g: &PermutationGroup) -> Self {
        let class = g.classify_symmetric_product();
        GroupReport {
            order: g.order(),
            ground: g.ground().to_vec(),
            generators: g.generator_strings(),
            partition: match &class {
                SymmetricProduct::Partition(p) => Some(p.clone()),
                _ => None,
            },
            classification: class.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct PiReport {
    #[serde(flatten)]
    pub group: GroupReport,
    /// False when only the dual-graph component of the base facet was used.
    pub full_scope: bool,
    /// Spanning tree of the dual graph as `[child, parent]` facet pairs.
    pub spanning_tree: Vec<[Simplex; 2]>,
    /// Non-tree edges whose fundamental loops give the listed generators.
    pub generator_edges: Vec<[Simplex; 2]>,
}

#[derive(Serialize)]
pub struct OddReport {
    #[serde(flatten)]
    pub group: GroupReport,
    /// Each odd codimension-2 face with the projectivity of its loop.
    pub faces: Vec<OddFace>,
    pub contained_in_pi: bool,
    pub equals_pi: bool,
}

#[derive(Serialize)]
pub struct OddFace {
    pub face: Simplex,
    pub projectivity: String,
}

#[derive(Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub method: BalanceMethod,
    pub coloring: Option<Coloring>,
}

#[derive(Serialize)]
pub struct PolytopeReport {
    pub dimension: usize,
    pub f_vector: Vec<usize>,
    pub base_vertex: Vertex,
    pub even: bool,
    /// Number of 2-faces with each vertex count.
    pub two_face_sizes: BTreeMap<usize, usize>,
    pub bipartite: bool,
    pub bipartition: Option<[Vec<Vertex>; 2]>,
    pub odd_cycle: Option<Vec<Vertex>>,
    pub gamma: usize,
    pub gamma_exact: bool,
    pub gamma_is_dimension: bool,
    pub s_bounds: SBounds,
    pub cycle_space: CycleSpace,
    pub even_vertex_count: Option<bool>,
    pub disjoint_facets: Option<bool>,
    pub edge_coloring_proper: Option<bool>,
}

/// Parses `1 2 4` or `1,2,4` into a facet of `complex`.
pub fn parse_facet(complex: &SimplicialComplex, s: &str) -> Result<usize, Failure> {
    let vertices = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(Vertex::parse)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(complex.require_facet(&Simplex::new(vertices)?)?)
}

fn violation(msg: String) -> Failure {
    Failure::Pxk(Error::TheoremViolation(msg))
}

pub fn complex_report(c: &SimplicialComplex, base: usize) -> Result<ComplexReport, Failure> {
    let base_facet = c.facet(base)?.clone();
    let mut notes = Vec::new();
    let census = c.codim2_census().ok();
    let parity_census = census.as_ref().map(|cs| {
        let mut pc = ParityCensus { even: 0, odd: 0, not_cycle: 0 };
        for f in cs {
            match f.link {
                LinkShape::Cycle(n) if n % 2 == 0 => pc.even += 1,
                LinkShape::Cycle(_) => pc.odd += 1,
                LinkShape::NotCycle { .. } => pc.not_cycle += 1,
            }
        }
        pc
    });

    let pi = if c.is_pure() {
        let pg = pi_group(c, base)?;
        if !pg.full_scope {
            notes.push("dual graph is disconnected; only the component of the base facet was analysed".into());
        }
        let pair = |(a, b): (usize, usize)| [c.facets()[a].clone(), c.facets()[b].clone()];
        Some((
            pg.group.clone(),
            PiReport {
                group: GroupReport::of(&pg.group),
                full_scope: pg.full_scope,
                spanning_tree: pg.tree.tree_edges().into_iter().map(pair).collect(),
                generator_edges: pg.generator_edges.iter().copied().map(pair).collect(),
            },
        ))
    } else {
        notes.push("complex is not pure; groups of projectivities are not computed".into());
        None
    };

    let odd = match (&pi, odd_subgroup(c, base)) {
        (Some((pi_g, _)), Ok(odd)) => {
            let contained = odd.group.is_subgroup_of(pi_g)?;
            if !contained {
                return Err(violation("odd-face subgroup is not contained in the group of projectivities".into()));
            }
            let faces = odd
                .generators
                .iter()
                .map(|g| OddFace { face: g.face.clone(), projectivity: odd.group.format(&g.permutation) })
                .collect();
            Some(OddReport {
                group: GroupReport::of(&odd.group),
                faces,
                contained_in_pi: contained,
                equals_pi: odd.group.equal(pi_g)?,
            })
        }
        (Some(_), Err(e)) => {
            notes.push(format!("odd-face subgroup not computed: {e}"));
            None
        }
        (None, _) => None,
    };

    let balance = is_balanced(c);
    if let Some(col) = &balance.coloring {
        if !col.is_proper(c) {
            return Err(violation("balancedness witness is not a proper coloring".into()));
        }
    }
    if let Some((pi_g, _)) = &pi {
        if balance.method == BalanceMethod::Propagation && balance.balanced != pi_g.is_trivial() {
            return Err(violation(format!(
                "locally strongly connected complex: balanced = {} but the group has order {}",
                balance.balanced,
                pi_g.order()
            )));
        }
    }
    if balance.method == BalanceMethod::ExactSearch {
        notes.push("not locally strongly connected; balancedness decided by exact coloring search".into());
    }

    Ok(ComplexReport {
        dimension: c.dim(),
        facets: c.num_facets(),
        vertices: c.num_vertices(),
        pure: c.is_pure(),
        strongly_connected: c.is_strongly_connected(),
        locally_strongly_connected: c.is_locally_strongly_connected(),
        manifold_precheck: c.manifold_precheck(),
        parity_census,
        base_facet,
        pi: pi.map(|(_, r)| r),
        odd_subgroup: odd,
        balance: BalanceReport { balanced: balance.balanced, method: balance.method, coloring: balance.coloring },
        notes,
    })
}

pub fn polytope_report(p: &SimplePolytope, vertex: usize) -> Result<(ComplexReport, PolytopeReport), Failure> {
    let dual = p.dual();
    let complex = complex_report(&dual.complex, dual.facet_of_vertex[vertex])?;
    let ct = p.coloring_theorem_check()?;
    let s_bounds = p.s_bounds()?;
    let cycle_space = p.cycle_space_check();
    if !cycle_space.equal {
        return Err(violation(format!(
            "2-face cycles span rank {} but the cycle space has dimension {}",
            cycle_space.rank, cycle_space.expected
        )));
    }
    if s_bounds.tight != ct.even {
        return Err(violation("s-bounds tightness disagrees with evenness".into()));
    }
    let label = |v: &usize| p.vertices()[*v].clone();
    let (bipartition, odd_cycle) = match &ct.bipartition {
        Bipartiteness::Bipartite { left, right } => {
            (Some([left.iter().map(label).collect(), right.iter().map(label).collect()]), None)
        }
        Bipartiteness::OddCycle(c) => (None, Some(c.iter().map(label).collect())),
    };
    let (even_vertex_count, disjoint_facets, edge_coloring_proper) = if ct.even {
        let parity = p.even_vertex_parity()?;
        let disjoint = p.disjoint_facet_check()?;
        let colors =
            ct.facet_coloring.as_ref().ok_or_else(|| violation("even polytope without a d-coloring".into()))?;
        let edges = p.induced_edge_coloring(colors)?;
        if !(parity && disjoint && edges.proper && edges.colors_used == p.dim()) {
            return Err(violation(format!(
                "even polytope: even vertex count {parity}, disjoint facets {disjoint}, proper edge coloring {}",
                edges.proper
            )));
        }
        (Some(parity), Some(disjoint), Some(edges.proper))
    } else {
        (None, None, None)
    };
    let mut two_face_sizes = BTreeMap::new();
    for f in p.two_faces() {
        *two_face_sizes.entry(f.len()).or_insert(0) += 1;
    }
    let report = PolytopeReport {
        dimension: p.dim(),
        f_vector: p.f_vector(),
        base_vertex: p.vertices()[vertex].clone(),
        even: ct.even,
        two_face_sizes,
        bipartite: ct.bipartite,
        bipartition,
        odd_cycle,
        gamma: ct.gamma.colors,
        gamma_exact: ct.gamma.exact,
        gamma_is_dimension: ct.gamma_is_d,
        s_bounds,
        cycle_space,
        even_vertex_count,
        disjoint_facets,
        edge_coloring_proper,
    };
    Ok((complex, report))
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn render_group(out: &mut String, title: &str, g: &GroupReport) {
    let gens = if g.generators.is_empty() { "none".to_owned() } else { g.generators.join(" ") };
    let _ = writeln!(out, "{title}: order {}, {}", g.order, g.classification);
    let _ = writeln!(out, "  generators: {gens}");
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.complex;
        let _ = writeln!(out, "source: {} ({})", self.source, self.digest);
        if let Some(p) = &self.polytope {
            let _ = writeln!(out, "simple {}-polytope, f-vector ({})", p.dimension, list(&p.f_vector));
            let _ = writeln!(out, "base vertex: {}", p.base_vertex);
            let _ = writeln!(out, "dual complex:");
        }
        let _ = writeln!(out, "dimension {}, {} facets, {} vertices", c.dimension, c.facets, c.vertices);
        let _ = writeln!(
            out,
            "strongly connected: {}, locally strongly connected: {}, manifold precheck: {}",
            c.strongly_connected,
            c.locally_strongly_connected,
            if c.manifold_precheck.passes() { "pass" } else { "fail" }
        );
        if let Some(pc) = &c.parity_census {
            let _ = writeln!(
                out,
                "codimension-2 faces: {} even, {} odd, {} without cycle link",
                pc.even, pc.odd, pc.not_cycle
            );
        }
        let _ = writeln!(out, "base facet: {}", c.base_facet);
        if let Some(pi) = &c.pi {
            render_group(&mut out, "group of projectivities", &pi.group);
        }
        if let Some(odd) = &c.odd_subgroup {
            render_group(&mut out, "odd-face subgroup", &odd.group);
            let _ = writeln!(out, "  equals the group of projectivities: {}", odd.equals_pi);
        }
        let _ = writeln!(out, "balanced: {}", c.balance.balanced);
        if let Some(col) = &c.balance.coloring {
            let pairs: Vec<String> = col.as_map().iter().map(|(v, k)| format!("{v}:{k}")).collect();
            let _ = writeln!(out, "  coloring: {}", pairs.join(" "));
        }
        if let Some(p) = &self.polytope {
            let sizes: Vec<String> = p.two_face_sizes.iter().map(|(s, n)| format!("{n}×{s}-gon")).collect();
            let _ = writeln!(out, "polytope:");
            let _ = writeln!(out, "  even: {} (2-faces: {})", p.even, sizes.join(", "));
            match (&p.bipartition, &p.odd_cycle) {
                (Some([l, r]), _) => {
                    let _ = writeln!(out, "  vertex-edge graph bipartite: {}+{}", l.len(), r.len());
                }
                (_, Some(cycle)) => {
                    let _ = writeln!(out, "  vertex-edge graph not bipartite, odd cycle: {}", list(cycle));
                }
                _ => {}
            }
            let exact = if p.gamma_exact { "" } else { " (upper bound)" };
            let _ = writeln!(out, "  gamma: {}{exact}", p.gamma);
            let s = &p.s_bounds;
            let _ = writeln!(
                out,
                "  s-bounds: ({}, {}, {})",
                s.lower,
                s.upper,
                if s.tight { "tight" } else { "not tight" }
            );
            let cs = &p.cycle_space;
            let _ = writeln!(
                out,
                "  cycle space: rank {} of {} 2-face cycles, expected {}",
                cs.rank, cs.faces, cs.expected
            );
            if let (Some(a), Some(b), Some(e)) = (p.even_vertex_count, p.disjoint_facets, p.edge_coloring_proper) {
                let _ = writeln!(out, "  even vertex count: {a}, disjoint facets: {b}, proper edge coloring: {e}");
            }
        }
        for n in &c.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}
