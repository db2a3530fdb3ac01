//! Standard bases of submodules of free modules over the local ring
//! `ℚ[x]_(x)`, quotient dimensions, and the jet-truncation oracle.

mod buchberger;
mod dim;
mod jet;
mod mora;
mod vector;

pub use buchberger::std_basis;
pub use dim::{quotient_dim, DimResult};
pub use jet::{jet_quotient_dim, stable_jet_dim};
pub use mora::{ideal_std_basis, mora_normal_form, mora_normal_form_with_unit, NormalForm, StdBasis};
pub use vector::{ModVector, ModuleOrder, PositionRule};
