//! Groups of projectivities of simplicial complexes and simple polytopes.
//!
//! Walking from facet to facet of a pure simplicial complex across shared
//! ridges moves the vertices of one facet onto the next. Closed walks at a
//! base facet permute its vertices, and those permutations form the group of
//! projectivities. This crate computes that group, the subgroup generated by
//! loops around odd codimension-2 faces, balancedness of complexes, and the
//! related coloring invariants of simple polytopes.
//!
//! ```
//! use pxk::{builders, projectivity::pi_group, Simplex};
//!
//! let a = builders::anti_torus_a();
//! let base = a.require_facet(&Simplex::from([1, 2, 4]))?;
//! let pi = pi_group(&a, base)?.group;
//! assert_eq!(pi.order(), 3);
//! assert_eq!(pi.generator_strings(), ["(1 4 2)"]);
//! # Ok::<(), pxk::Error>(())
//! ```

pub mod builders;
pub mod coloring;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod io;
pub mod permgroup;
pub mod polytope;
pub mod projectivity;

pub use complex::{Simplex, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use permgroup::{Permutation, PermutationGroup, SymmetricProduct};
pub use polytope::SimplePolytope;
pub use projectivity::{FacetPath, Projectivity};

/// Guide chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/projectivities.md")]
    mod projectivities {}
    #[doc = include_str!("../../../book/src/odd-faces.md")]
    mod odd_faces {}
    #[doc = include_str!("../../../book/src/balance.md")]
    mod balance {}
    #[doc = include_str!("../../../book/src/joins-products.md")]
    mod joins_products {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
