//! Weisfeiler-Leman refinement and a homomorphism-count oracle for the
//! same equivalence.
//!
//! Two graphs are k-WL-equivalent when every graph of treewidth at most
//! k has as many homomorphisms into one as into the other. Folklore
//! k-WL decides this; [`hom_indist_oracle`] checks the definition
//! directly on small patterns. Under that definition 2K3 and C6 are
//! 1-WL-equivalent (all tree counts agree) but not 2-WL-equivalent (the
//! triangle has treewidth 2).

mod oracle;
mod refine;

pub use oracle::{connected_patterns, hom_indist_oracle, hom_indist_oracle_with, Verdict};
pub use refine::{
    wl_compare, wl_equivalence_classes, wl_equivalent, wl_equivalent_with, wl_refine, wl_refine_with, WlColouring,
    WlComparison,
};
