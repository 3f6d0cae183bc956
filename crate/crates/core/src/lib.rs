//! Exact computation of chromatic symmetric functions and their Schur
//! expansions, built for one question: does any tree on 2n vertices with a
//! degree-n vertex have a Schur-positive chromatic symmetric function?
//!
//! The pipeline: `graphs` constructs the candidate spider trees, `csf`
//! expands their chromatic symmetric functions over edge subsets into the
//! power-sum basis, `symfunc` converts to the Schur basis through
//! symmetric-group character tables, and `positivity` renders the verdict
//! (with an independent stable-partition screen). Everything is integer
//! arithmetic with overflow detection; there are no floats anywhere.

pub mod csf;
pub mod error;
pub mod graphs;
pub mod partitions;
pub mod positivity;
pub mod symfunc;

pub use csf::{
    chromatic_polynomial_at, csf_power_basis, csf_schur, negative_schur_coefficients,
    tree_coloring_count, MAX_CSF_EDGES,
};
pub use error::{Error, Result};
pub use graphs::{
    bipartition_type, coloring_monomial_expansion, component_size_partition, spider,
    stable_partition_types, Graph, MAX_STABLE_PARTITION_VERTICES,
};
pub use partitions::{dominates, partitions_of, Partition};
pub use positivity::{
    candidate_trees, dominance_screen, hub_leaf_reduction_check, is_schur_positive,
    theorem_verdict, verify_theorem, PositivityReport, ScreenCertificate, TheoremVerdict,
};
pub use symfunc::{
    hook_dimension, kostka, mn_character, p_to_s, s_to_m, schur_principal_evaluation, Basis,
    CharacterTable, Coeff, SymPoly, MAX_CHARACTER_DEGREE, MAX_TABLE_DEGREE,
};
