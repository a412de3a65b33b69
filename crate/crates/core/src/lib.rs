//! Edge rings of finite graphs.
//!
//! The pipeline runs from a [`Graph`] to its toric ideal (primitive even
//! closed walks), a reduced Gröbner basis, the squarefree initial ideal and
//! its Stanley–Reisner complex, a shelling, and the h-vector. The cone of the
//! edge polytope then gives the canonical module, the Cohen–Macaulay type and
//! the (almost) Gorenstein verdicts.
//!
//! ```
//! use edgering::{gn, h_polynomial_pipeline, Family, PipelineOptions};
//!
//! let (g, _) = gn(3).unwrap();
//! let report = h_polynomial_pipeline(&g, &PipelineOptions::for_family(Family::Gn { n: 3 })).unwrap();
//! assert_eq!(report.h().trimmed(), &[1, 2, 3, 1]);
//! ```

pub mod cli;
pub mod complex;
pub mod cone;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod toric;

pub use complex::{
    complex_from_squarefree_ideal, f_vector, gn_facets, h_from_f, h_from_shelling, lex_facet_order,
    minimal_transversals, search_shelling, verify_shelling, HVector, ShellingReport, SimplicialComplex,
};
pub use cone::{
    alpha_vector, alpha_witness_checks, canonical_generators, canonical_generators_with, cone_inequalities, e_tilde,
    extreme_rays, interior_lattice_points, interior_lattice_points_with, lattice_member, membership, verdicts,
    AlphaCheck, CanonicalReport, ConeDescription, EnumerationOptions, Inequality, InequalityTag, LatticePoint,
    Membership, Verdicts,
};
pub use error::{Error, Result};
pub use graph::{
    build_family, chordless_odd_cycles, complete, complete_bipartite, fundamental_sets, gn, is_bipartite,
    regular_vertices, satisfies_odd_cycle_condition, Bipartiteness, Family, GnLabels, Graph, OddCycleCheck,
};
pub use groebner::{
    buchberger, initial_ideal, is_groebner_basis, leading_term, reduce, s_pair, FailingPair, MonomialIdeal,
    MonomialOrder, SPair,
};
pub use hilbert::{
    closed_form_h, h_polynomial_pipeline, hilbert_function_value, krull_dimension, semigroup_count,
    HilbertSource, PipelineOptions, PipelineReport,
};
pub use toric::{
    gn_generators, toric_generators, walk_binomial, Binomial, EvenClosedWalk, Monomial,
};
