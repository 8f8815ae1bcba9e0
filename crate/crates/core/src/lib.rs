//! Exact arithmetic engine for the quartic-product equation
//! `m(a^4 - b^4) = (c^4 - d^4)(e^4 - f^4)` and the degree-sixteen equation
//! `(a^4 - b^4)(c^4 - d^4)(e^8 - f^8) = (u^4 - v^4)(w^4 - x^4)(y^8 - z^8)`.
//!
//! Solutions are generated from multiples of a rational point on an elliptic
//! curve attached to a quartic model, and every parametric family handled here
//! is checked as a polynomial identity over the rationals.

pub mod curve;
pub mod error;
pub mod exact;
pub mod identities;
pub mod oracle;
pub mod poly;
pub mod printed;
pub mod quartic;
pub mod report;
pub mod sectiona;
pub mod sectionb;

pub use curve::{Curve, Point};
pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use identities::{catalog, errata, lookup, run_all, IdentityDescriptor};
pub use poly::Poly;
pub use quartic::{HomPair, QuarticModel};
pub use report::{Mode, Report, Status};
pub use sectiona::{ParamsA, QuadraticEF, SectionA, Tuple6};
pub use sectionb::{QuadLink, Tuple12};
