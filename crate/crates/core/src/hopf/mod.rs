//! Explicit rank-4 Hopf algebras over `Z[1/N]` and their group laws.

pub mod laws;
pub mod mpoly;
pub mod parse;
pub mod presentation;

pub use laws::{
    annihilation_order, check_coassociativity, check_commutativity, check_identity, check_relations,
    check_sequence_maps,
    ext_mu_dimension, law_report, point_field_class, quotient_map_ok, LawReport,
};
pub use mpoly::MPoly;
pub use parse::parse_expr;
pub use presentation::{normal_form, Catalog, CatalogEntry, HopfPresentation, RankTwo, RuleOrder, Rewriter};
