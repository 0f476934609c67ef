//! Named complexes and polytopes, and seeded random pure complexes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::polytope::SimplePolytope;

/// `∂Δ^d` on the vertices `1..=d+1`.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    check_range("simplex_boundary d", d, 1, 8)?;
    let n = d as i64 + 1;
    let facets: Vec<Vec<i64>> = (1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect()).collect();
    SimplicialComplex::from_int_facets(&facets)
}

/// The `n`-gon as a 1-dimensional complex on `1..=n`.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    check_range("cycle n", n, 3, 10_000)?;
    let n = n as i64;
    let facets: Vec<[i64; 2]> = (1..=n).map(|i| [i, i % n + 1]).collect();
    SimplicialComplex::from_int_facets(&facets)
}

/// Boundary of the `d`-dimensional cross-polytope. Antipodal vertices are
/// `2i-1` and `2i`, matching the facet labels of [`cube`] so that this equals
/// `cube(d).dual()`.
pub fn cross_polytope(d: usize) -> Result<SimplicialComplex> {
    check_range("cross_polytope d", d, 1, 10)?;
    let facets: Vec<Vec<i64>> =
        (0..1u32 << d).map(|bits| (0..d).map(|i| 2 * i as i64 + 1 + i64::from(bits >> i & 1)).collect()).collect();
    SimplicialComplex::from_int_facets(&facets)
}

/// The `d`-cube. Facet `2i-1` is `x_i = 0`, facet `2i` is `x_i = 1`; vertex
/// `v0110…` has `x_i` as its `i`-th digit.
pub fn cube(d: usize) -> Result<SimplePolytope> {
    check_range("cube d", d, 1, 10)?;
    let facets: Vec<Vertex> = (1..=2 * d as i64).map(Vertex::Int).collect();
    let vertices = (0..1u32 << d)
        .map(|bits| {
            let digits: String = (0..d).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
            let on = (0..d).map(|i| Vertex::Int(2 * i as i64 + 1 + i64::from(bits >> i & 1))).collect();
            (Vertex::Name(format!("v{digits}")), on)
        })
        .collect();
    SimplePolytope::new(d, facets, vertices)
}

/// The `d`-simplex as a polytope: facets and vertices both `1..=d+1`, vertex
/// `i` opposite facet `i`.
pub fn simplex_polytope(d: usize) -> Result<SimplePolytope> {
    check_range("simplex d", d, 1, 8)?;
    let n = d as i64 + 1;
    let facets: Vec<Vertex> = (1..=n).map(Vertex::Int).collect();
    let vertices = (1..=n).map(|v| (Vertex::Int(v), (1..=n).filter(|&f| f != v).map(Vertex::Int).collect())).collect();
    SimplePolytope::new(d, facets, vertices)
}

/// `Δ^a × Δ^b`; `simplex_product(2, 1)` is the triangular prism.
pub fn simplex_product(a: usize, b: usize) -> Result<SimplePolytope> {
    Ok(simplex_polytope(a)?.product(&simplex_polytope(b)?).polytope)
}

/// The icosahedron boundary on `1..=12`: apex 1, upper ring 2..=6, lower
/// ring 7..=11, apex 12. Lower vertex `7+i` sits between `2+i` and `2+(i+1)%5`.
pub fn icosahedron() -> SimplicialComplex {
    let up = |i: i64| 2 + i.rem_euclid(5);
    let low = |i: i64| 7 + i.rem_euclid(5);
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push([1, up(i), up(i + 1)]);
        facets.push([up(i), up(i + 1), low(i)]);
        facets.push([low(i), low(i + 1), up(i + 1)]);
        facets.push([12, low(i), low(i + 1)]);
    }
    SimplicialComplex::from_int_facets(&facets).expect("fixed data")
}

/// The dodecahedron, dual to [`icosahedron`]: facets `1..=12`, vertices
/// `1..=20` numbered in the order of the sorted icosahedron triangles.
pub fn dodecahedron() -> SimplePolytope {
    polar(&icosahedron(), 3)
}

/// The simple polytope whose dual is `complex`. Vertex `i + 1` is facet `i`.
fn polar(complex: &SimplicialComplex, dim: usize) -> SimplePolytope {
    let facets = complex.vertices().to_vec();
    let vertices =
        complex.facets().iter().enumerate().map(|(i, f)| (Vertex::Int(i as i64 + 1), f.vertices().to_vec())).collect();
    SimplePolytope::new(dim, facets, vertices).expect("dual of a simplicial sphere")
}

/// The permutohedron of order 4 (truncated octahedron). Vertex `p2413` is the
/// point `(2,4,1,3)`; facet `s13` is `x_1 + x_3 = 1 + 2`, so a vertex lies on
/// `sS` exactly when its coordinates on `S` are `1..=|S|`.
pub fn permutohedron() -> SimplePolytope {
    let n = 4usize;
    let subset_name =
        |s: &[usize]| -> Vertex { Vertex::Name(format!("s{}", s.iter().map(|i| i.to_string()).collect::<String>())) };
    let mut facets = Vec::new();
    for mask in 1..(1u32 << n) - 1 {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        facets.push(subset_name(&s));
    }
    let mut vertices = BTreeMap::new();
    for perm in crate::complex::permutations(n) {
        let x: Vec<usize> = perm.iter().map(|&p| p + 1).collect();
        let name = Vertex::Name(format!("p{}", x.iter().map(|i| i.to_string()).collect::<String>()));
        // coordinates holding the values 1..=k, for k < n
        let on = (1..n)
            .map(|k| {
                let mut s: Vec<usize> = (0..n).filter(|&i| x[i] <= k).map(|i| i + 1).collect();
                s.sort_unstable();
                subset_name(&s)
            })
            .collect();
        vertices.insert(name, on);
    }
    SimplePolytope::new(n - 1, facets, vertices).expect("fixed data")
}

/// Vertex of the 3×3 torus grid at row `r`, column `c`.
fn grid(r: i64, c: i64) -> i64 {
    3 * r.rem_euclid(3) + c.rem_euclid(3) + 1
}

/// Triangulated torus on the 3×3 grid with all diagonals running the same way:
/// the square with corners `a = (r,c)`, `b = (r,c+1)`, `c' = (r+1,c)`,
/// `d = (r+1,c+1)` is cut into `{a,b,c'}` and `{b,c',d}`.
pub fn torus_t() -> SimplicialComplex {
    torus(&[])
}

/// [`torus_t`] with the diagonals of the middle column flipped: there the
/// squares are cut into `{a,b,d}` and `{a,c',d}`.
pub fn anti_torus_a() -> SimplicialComplex {
    torus(&[1])
}

fn torus(flipped_columns: &[i64]) -> SimplicialComplex {
    let mut facets = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            let (a, b, c2, d) = (grid(r, c), grid(r, c + 1), grid(r + 1, c), grid(r + 1, c + 1));
            if flipped_columns.contains(&c) {
                facets.push([a, b, d]);
                facets.push([a, c2, d]);
            } else {
                facets.push([a, b, c2]);
                facets.push([b, c2, d]);
            }
        }
    }
    SimplicialComplex::from_int_facets(&facets).expect("fixed data")
}

/// A strongly connected 2-complex whose dual graph is a path and whose end
/// triangles share only the vertex 1.
pub fn nonlocal_path() -> SimplicialComplex {
    SimplicialComplex::from_int_facets(&[[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5]]).expect("fixed data")
}

/// Two 3-cubes blended at a vertex: the vertex `000` is cut from both copies,
/// each former neighbour `a_i` of it is joined to its twin `b_i`, and the two
/// facets `x_i = 0` are merged into one hexagonal facet `xi`. The remaining
/// facets are `a2, a4, a6` and `b2, b4, b6` (`x_i = 1` in either copy).
/// f-vector `(14, 21, 9)`.
pub fn blend_m() -> SimplePolytope {
    let mut facets: Vec<Vertex> = Vec::new();
    for i in 1..=3 {
        facets.push(Vertex::Name(format!("x{i}")));
        facets.push(Vertex::Name(format!("a{}", 2 * i)));
        facets.push(Vertex::Name(format!("b{}", 2 * i)));
    }
    let mut vertices = BTreeMap::new();
    for copy in ["a", "b"] {
        for bits in 1u32..8 {
            let digits: String = (0..3).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
            let on = (0..3)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Vertex::Name(format!("{copy}{}", 2 * (i + 1)))
                    } else {
                        Vertex::Name(format!("x{}", i + 1))
                    }
                })
                .collect();
            vertices.insert(Vertex::Name(format!("{copy}{digits}")), on);
        }
    }
    SimplePolytope::new(3, facets, vertices).expect("fixed data")
}

/// `n` distinct `d`-simplices on the vertices `1..=pool`, chosen uniformly
/// with a ChaCha8 stream seeded by `seed`. Fewer facets are returned when the
/// pool has fewer than `n` simplices.
pub fn random_pure_on(d: usize, n: usize, pool: usize, seed: u64) -> Result<SimplicialComplex> {
    check_range("random_pure d", d, 0, 6)?;
    check_range("random_pure n", n, 1, 256)?;
    if pool < d + 1 || pool > 64 {
        return Err(Error::BadParameter(format!("random_pure pool {pool} must lie in {}..=64", d + 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let available = binomial(pool, d + 1);
    let target = n.min(available);
    let mut chosen = BTreeSet::new();
    while chosen.len() < target {
        let mut f: Vec<i64> = sample(&mut rng, pool, d + 1).into_iter().map(|i| i as i64 + 1).collect();
        f.sort_unstable();
        chosen.insert(f);
    }
    let facets: Vec<Vec<i64>> = chosen.into_iter().collect();
    SimplicialComplex::from_int_facets(&facets)
}

/// [`random_pure_on`] with a pool of `d + 1 + n / 2` vertices.
pub fn random_pure(d: usize, n: usize, seed: u64) -> Result<SimplicialComplex> {
    random_pure_on(d, n, (d + 1 + n / 2).min(64), seed)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The 600-cell boundary: 120 unit quaternions of the binary icosahedral
/// group, with a tetrahedron for each 4-clique of nearest neighbours.
/// Vertices are numbered `1..=120` in a fixed coordinate order.
pub fn cell600() -> SimplicialComplex {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut points: Vec<[f64; 4]> = Vec::with_capacity(120);
    for i in 0..4 {
        for s in [1.0, -1.0] {
            let mut p = [0.0; 4];
            p[i] = s;
            points.push(p);
        }
    }
    for signs in 0..16u32 {
        points.push(std::array::from_fn(|i| if signs >> i & 1 == 1 { -0.5 } else { 0.5 }));
    }
    let base = [phi / 2.0, 0.5, 0.5 / phi, 0.0];
    for perm in crate::complex::permutations(4) {
        if !is_even_permutation(&perm) {
            continue;
        }
        for signs in 0..8u32 {
            let mut vals = base;
            for (k, v) in vals.iter_mut().take(3).enumerate() {
                if signs >> k & 1 == 1 {
                    *v = -*v;
                }
            }
            let mut p = [0.0; 4];
            for i in 0..4 {
                p[perm[i]] = vals[i];
            }
            points.push(p);
        }
    }
    debug_assert_eq!(points.len(), 120);
    // nearest neighbours have inner product φ/2 ≈ 0.809; the next shell 0.5
    let dot = |a: &[f64; 4], b: &[f64; 4]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let adj: Vec<Vec<usize>> =
        (0..120).map(|i| (0..120).filter(|&j| j != i && dot(&points[i], &points[j]) > 0.7).collect()).collect();
    let mut facets = Vec::new();
    for a in 0..120 {
        for &b in adj[a].iter().filter(|&&b| b > a) {
            for &c in adj[b].iter().filter(|&&c| c > b && adj[a].contains(&c)) {
                for &d in adj[c].iter().filter(|&&d| d > c && adj[a].contains(&d) && adj[b].contains(&d)) {
                    facets.push([a as i64 + 1, b as i64 + 1, c as i64 + 1, d as i64 + 1]);
                }
            }
        }
    }
    SimplicialComplex::from_int_facets(&facets).expect("fixed construction")
}

fn is_even_permutation(p: &[usize]) -> bool {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

/// The 120-cell, dual to [`cell600`]: 120 dodecahedral facets, 600 vertices.
pub fn cell120() -> SimplePolytope {
    polar(&cell600(), 4)
}

fn check_range(what: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::BadParameter(format!("{what} = {value} must lie in {lo}..={hi}")));
    }
    Ok(())
}

/// A builder name with integer parameters, e.g. `cube 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuilderSpec {
    pub name: String,
    pub params: Vec<i64>,
}

impl BuilderSpec {
    pub fn new(name: impl Into<String>, params: Vec<i64>) -> Self {
        BuilderSpec { name: name.into(), params }
    }
}

impl FromStr for BuilderSpec {
    type Err = Error;

    /// Whitespace-separated: the name, then integers.
    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let name = tokens.next().ok_or(Error::EmptyInput)?.to_owned();
        let params = tokens
            .map(|t| t.parse::<i64>().map_err(|_| Error::BadParameter(format!("{t:?} is not an integer"))))
            .collect::<Result<_>>()?;
        Ok(BuilderSpec { name, params })
    }
}

impl fmt::Display for BuilderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for p in &self.params {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Output of [`make`].
#[derive(Clone, Debug)]
pub enum Built {
    Complex(SimplicialComplex),
    Polytope(SimplePolytope),
}

/// Names accepted by [`make`], with their parameters.
pub const BUILDERS: &[(&str, &str)] = &[
    ("simplex_boundary", "d"),
    ("cycle", "n"),
    ("cross_polytope", "d"),
    ("cube", "d"),
    ("simplex", "d"),
    ("simplex_product", "a b"),
    ("dodecahedron", ""),
    ("icosahedron", ""),
    ("permutohedron", ""),
    ("torus_T", ""),
    ("anti_torus_A", ""),
    ("nonlocal_path", ""),
    ("blend_M", ""),
    ("random_pure", "d n seed"),
    ("cell600", ""),
    ("cell120", ""),
];

/// Builds a named object.
pub fn make(spec: &BuilderSpec) -> Result<Built> {
    let arity = BUILDERS
        .iter()
        .find(|(n, _)| *n == spec.name)
        .map(|(_, p)| p.split_whitespace().count())
        .ok_or_else(|| Error::UnknownBuilder(spec.name.clone()))?;
    if spec.params.len() != arity {
        return Err(Error::BadParameter(format!(
            "{} takes {arity} parameter(s), got {}",
            spec.name,
            spec.params.len()
        )));
    }
    let p = |i: usize| -> Result<usize> {
        usize::try_from(spec.params[i])
            .map_err(|_| Error::BadParameter(format!("{} must be non-negative", spec.params[i])))
    };
    use Built::{Complex, Polytope};
    Ok(match spec.name.as_str() {
        "simplex_boundary" => Complex(simplex_boundary(p(0)?)?),
        "cycle" => Complex(cycle(p(0)?)?),
        "cross_polytope" => Complex(cross_polytope(p(0)?)?),
        "cube" => Polytope(cube(p(0)?)?),
        "simplex" => Polytope(simplex_polytope(p(0)?)?),
        "simplex_product" => Polytope(simplex_product(p(0)?, p(1)?)?),
        "dodecahedron" => Polytope(dodecahedron()),
        "icosahedron" => Complex(icosahedron()),
        "permutohedron" => Polytope(permutohedron()),
        "torus_T" => Complex(torus_t()),
        "anti_torus_A" => Complex(anti_torus_a()),
        "nonlocal_path" => Complex(nonlocal_path()),
        "blend_M" => Polytope(blend_m()),
        "random_pure" => Complex(random_pure(p(0)?, p(1)?, p(2)? as u64)?),
        "cell600" => Complex(cell600()),
        "cell120" => Polytope(cell120()),
        _ => unreachable!("checked against BUILDERS"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    fn s(v: [i64; 3]) -> Simplex {
        Simplex::from(v)
    }

    #[test]
    fn torus_contains_loop_p() {
        let t = torus_t();
        for f in [[1, 2, 4], [2, 4, 5], [4, 5, 7], [5, 7, 8], [1, 7, 8], [1, 2, 8]] {
            assert!(t.facet_index(&s(f)).is_some(), "{f:?}");
        }
        assert_eq!(t.num_facets(), 18);
    }

    #[test]
    fn anti_torus_flips_middle_column() {
        let a = anti_torus_a();
        let t = torus_t();
        for f in [[2, 5, 6], [2, 3, 6]] {
            assert!(a.facet_index(&s(f)).is_some());
            assert!(t.facet_index(&s(f)).is_none());
        }
        for f in [[2, 3, 5], [3, 5, 6]] {
            assert!(t.facet_index(&s(f)).is_some());
            assert!(a.facet_index(&s(f)).is_none());
        }
        assert_eq!(a.num_facets(), 18);
        assert_eq!(a.f_vector(), t.f_vector());
    }

    #[test]
    fn vertex_degrees_coincide() {
        let deg = |c: &SimplicialComplex| -> Vec<usize> {
            let mut d: Vec<usize> =
                c.vertices().iter().map(|v| c.facets_containing(&Simplex::new([v.clone()]).unwrap()).len()).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(deg(&torus_t()), vec![6; 9]);
        assert_eq!(deg(&anti_torus_a()), vec![6; 9]);
    }

    #[test]
    fn blend_f_vector() {
        let m = blend_m();
        assert_eq!(m.f_vector(), vec![14, 21, 9]);
        assert!(m.is_even());
    }

    #[test]
    fn cross_polytope_is_dual_cube() {
        for d in 1..=4 {
            assert_eq!(cube(d).unwrap().dual().complex, cross_polytope(d).unwrap());
        }
    }

    #[test]
    fn permutohedron_counts() {
        let p = permutohedron();
        assert_eq!(p.f_vector(), vec![24, 36, 14]);
        let mut sizes: Vec<usize> = p.two_faces().iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [vec![4; 6], vec![6; 8]].concat());
    }

    #[test]
    fn dodecahedron_counts() {
        let d = dodecahedron();
        assert_eq!(d.f_vector(), vec![20, 30, 12]);
        assert!(d.two_faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn random_pure_is_reproducible() {
        let a = random_pure(2, 6, 42).unwrap();
        let b = random_pure(2, 6, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_pure());
        assert_eq!(a.num_facets(), 6);
        assert_eq!(random_pure_on(2, 50, 4, 1).unwrap().num_facets(), 4);
    }

    #[test]
    fn cell600_counts() {
        let c = cell600();
        assert_eq!(c.num_vertices(), 120);
        assert_eq!(c.num_facets(), 600);
        assert!(c.dual_graph().edges().len() == 1200);
    }

    #[test]
    fn make_dispatches_and_validates() {
        assert!(matches!(make(&"cube 3".parse().unwrap()), Ok(Built::Polytope(_))));
        assert!(matches!(make(&"torus_T".parse().unwrap()), Ok(Built::Complex(_))));
        assert!(matches!(make(&"nope".parse().unwrap()), Err(Error::UnknownBuilder(_))));
        assert!(matches!(make(&"cube".parse().unwrap()), Err(Error::BadParameter(_))));
        assert!(matches!(make(&"cube 0".parse().unwrap()), Err(Error::BadParameter(_))));
        assert!(matches!(make(&"cycle -3".parse().unwrap()), Err(Error::BadParameter(_))));
    }
}
