//! 2-torsion of an elliptic curve, F_2 representations of small groups and
//! the finite-group scans.

pub mod curve;
pub mod f2module;
pub mod groups;
pub mod scans;

pub use curve::{two_division_cubic, two_torsion_disc_class, verify_two_torsion_field, EllipticCurveQ};
pub use f2module::{
    hom_dim, module_end_dim, module_is_irreducible, submodule_lattice, F2Matrix, F2Module, SubmoduleLattice,
};
pub use groups::SmallGroup;
pub use scans::{
    lemma_scan_order_le_11, pgroup_generation_check, three_group_abelianization_scan, unipotent_exponent_check,
    FlaggedModule, GroupScanReport,
};
