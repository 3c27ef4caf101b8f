//! Number fields given by certified integral bases.

pub mod certificate;
pub mod classgroup;
pub mod embed;
pub mod field;
pub mod ideal;
pub mod maximal;
pub mod real;
pub mod roots;
pub mod units;

pub use certificate::{load_verified, verified_field, verify_field_certificate};
pub use classgroup::{minkowski_bound, verify_class_number_one, ClassNumberOneCertificate};
pub use field::{element_norm, FieldCertificate, FieldElement, NumberField};
pub use ideal::{factor_rational_prime, FractionalIdeal, PrimeFactor};
pub use roots::{has_root, RootSearch};
pub use units::{
    ray_class_group, unit_image_order, unit_quotient_structure, verify_unit_certificate, FiniteAbelianGroup,
    ResidueUnitGroup, UnitCertificate,
};
