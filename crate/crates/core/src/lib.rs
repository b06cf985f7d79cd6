//! Exact depth and Stanley depth for quotients by monomial ideals, with
//! constructors for the path and cycle ideal families and a harness that
//! checks identities and bounds about their powers.

pub mod depth;
pub mod error;
pub mod exec;
pub mod harness;
pub mod families;
pub mod homology;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod sdepth;

pub use error::{Error, Result};
pub use exec::Exec;
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
