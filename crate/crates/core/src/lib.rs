//! Exact local standard bases over ℚ and the invariants of a pair of
//! hypersurface germs `(f, V = g⁻¹(0))`: Milnor, Tjurina, Bruce-Roberts and
//! Greuel numbers, together with machine checks of the identities relating
//! them.

pub mod cli;
pub mod error;
pub mod forms;
pub mod invariants;
pub mod logder;
pub mod parse;
pub mod poly;
pub mod report;
pub mod stdbasis;

pub use error::{Error, Result};
pub use parse::{parse_poly, ExprSource, ParseError};
pub use poly::{Coeff, LocalOrder, Monomial, Poly, VarContext};
pub use stdbasis::{DimResult, ModVector, ModuleOrder, StdBasis};
