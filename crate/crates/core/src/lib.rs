//! Quintic trinomials `x^5 + a x + b` with a root in a fixed quintic field:
//! exact arithmetic, the genus-4 curve attached to a field, point search,
//! and the surrounding surface and elliptic-curve computations.

pub mod algebra;
pub mod curve;
pub mod elliptic;
pub mod error;
pub mod numberfield;
pub mod surface;
pub mod trinomial;
pub mod verify;

pub use algebra::{MPoly, Rational, UniPoly};
pub use curve::{curve_from_field, curve_from_t, point_search, CurveCK, CurvePoint, PointImage, SearchResult};
pub use elliptic::{quadratic_twist_factor, EcPoint, TwistRelation, WeierstrassCurve};
pub use error::{Error, Result};
pub use numberfield::{has_root_in_field, FieldElement, FieldRef, NumberField, RootSearch};
pub use surface::{on_surface, recover_t, RecoveredT, SurfacePoint};
pub use trinomial::{galois_type_heuristic, EquivClass, GaloisGroup, Trinomial};
