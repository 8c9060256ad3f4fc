//! Link invariants of braid closures, used to test claimed equivalences.

pub mod alexander;
pub mod jones;
pub mod laurent;
pub mod profile;

pub use alexander::{alexander, alexander_detail, alexander_exact, burau_determinant, AlexanderDetail};
pub use jones::{kauffman_bracket, kauffman_jones, DEFAULT_JONES_LIMIT};
pub use laurent::LaurentPoly;
pub use profile::{consistent, profile, Consistency, Invariant, InvariantProfile};
