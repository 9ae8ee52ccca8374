//! Shared numerical primitives.

mod diff;
mod quadrature;
mod roots;

pub use diff::derivative;
pub use quadrature::{integrate, integrate_from, integrate_semi_infinite, QuadratureSpec};
pub use roots::{find_root, RootBracket};
