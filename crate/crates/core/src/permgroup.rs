//! Finite permutation groups on a small ordered ground set.
//!
//! Groups are enumerated completely by breadth-first closure. Ground sets here
//! are the vertex sets of facets, so they rarely exceed 8 points and the
//! element lists stay below 8! = 40320.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::complex::Vertex;
use crate::error::{Error, Result};

/// A bijection on `0..n`; `images[i]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::GroundTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotABijection(images));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// Transposition of points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_transposition(&self) -> bool {
        let c = self.cycles();
        c.len() == 1 && c[0].len() == 2
    }

    /// Smallest `k > 0` with `self^k = id`.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Cycle notation with ground labels, e.g. `(1 4 2)`; identity is `()`.
    pub fn to_cycle_string(&self, ground: &[Vertex]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_owned();
        }
        let mut out = String::new();
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|&i| ground[i].to_string()).collect();
            out.push('(');
            out.push_str(&labels.join(" "));
            out.push(')');
        }
        out
    }

    /// Parses cycle notation over `ground`. Fixed points may be omitted.
    pub fn parse_cycles(ground: &[Vertex], s: &str) -> Result<Permutation> {
        let err = || Error::CycleSyntax(s.to_owned());
        let mut images: Vec<usize> = (0..ground.len()).collect();
        let mut moved = vec![false; ground.len()];
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(err());
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(err)?;
            let close = body.find(')').ok_or_else(err)?;
            let points = body[..close]
                .split_whitespace()
                .map(|t| {
                    let v = Vertex::parse(t).map_err(|_| err())?;
                    ground.iter().position(|g| *g == v).ok_or_else(err)
                })
                .collect::<Result<Vec<usize>>>()?;
            for (k, &p) in points.iter().enumerate() {
                if std::mem::replace(&mut moved[p], true) {
                    return Err(err());
                }
                images[p] = points[(k + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::new(images)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// How a group decomposes relative to its orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetricProduct {
    /// The group is the full product of symmetric groups on its orbits; orbit
    /// sizes in ascending order, fixed points included as 1s.
    Partition(Vec<usize>),
    NotAProduct,
}

impl fmt::Display for SymmetricProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetricProduct::Partition(p) => {
                let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            SymmetricProduct::NotAProduct => f.write_str("not a product"),
        }
    }
}

/// A subgroup of `Sym(ground)` with all elements enumerated.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    ground: Vec<Vertex>,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Closure of `generators` on `ground`.
    pub fn generate(ground: Vec<Vertex>, generators: Vec<Permutation>) -> Result<Self> {
        let n = ground.len();
        if n > u8::MAX as usize {
            return Err(Error::GroundTooLarge(n));
        }
        if generators.iter().any(|g| g.degree() != n) {
            return Err(Error::GroundMismatch);
        }
        let id = Permutation::identity(n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermutationGroup { ground, generators, elements })
    }

    /// Generates from `candidates`, keeping only those that enlarge the group
    /// generated by the ones kept before them. Returns the group and the
    /// indices of the kept candidates.
    pub fn generate_irredundant(ground: Vec<Vertex>, candidates: &[Permutation]) -> Result<(Self, Vec<usize>)> {
        let mut group = PermutationGroup::generate(ground, Vec::new())?;
        let mut kept = Vec::new();
        for (i, c) in candidates.iter().enumerate() {
            if c.degree() != group.ground.len() {
                return Err(Error::GroundMismatch);
            }
            if !group.contains(c) {
                let mut gens = group.generators.clone();
                gens.push(c.clone());
                group = PermutationGroup::generate(group.ground, gens)?;
                kept.push(i);
            }
        }
        Ok((group, kept))
    }

    pub fn trivial(ground: Vec<Vertex>) -> Self {
        let n = ground.len();
        PermutationGroup { ground, generators: Vec::new(), elements: vec![Permutation::identity(n)] }
    }

    /// The full symmetric group, generated by adjacent transpositions.
    pub fn symmetric(ground: Vec<Vertex>) -> Result<Self> {
        let n = ground.len();
        let gens = (1..n).map(|i| Permutation::transposition(n, i - 1, i)).collect();
        Self::generate(ground, gens)
    }

    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Same ground set and same elements.
    pub fn equal(&self, other: &PermutationGroup) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.elements == other.elements)
    }

    /// Is `self` a subgroup of `other`?
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.elements.iter().all(|p| other.contains(p)))
    }

    fn check_ground(&self, other: &PermutationGroup) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// Orbits of the ground points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.ground.len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = id;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.image(x);
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Recognizes products of symmetric groups on the orbits.
    ///
    /// A group always embeds in the product of the symmetric groups on its
    /// orbits, so equality holds exactly when the orders match.
    pub fn classify_symmetric_product(&self) -> SymmetricProduct {
        let mut sizes: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        if sizes.iter().map(|&k| factorial(k)).product::<usize>() == self.order() {
            sizes.sort_unstable();
            SymmetricProduct::Partition(sizes)
        } else {
            SymmetricProduct::NotAProduct
        }
    }

    pub fn format(&self, p: &Permutation) -> String {
        p.to_cycle_string(&self.ground)
    }

    /// Generators in cycle notation.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.format(g)).collect()
    }
}
