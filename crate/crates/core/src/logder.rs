//! Logarithmic vector fields `Θ(V)` of a hypersurface `V = {g = 0}` and the
//! ideal `J_f(V)` of derivatives of `f` along them.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::stdbasis::{std_basis, ModVector, ModuleOrder};

/// Vector field `X = Σ a_i ∂/∂x_i` with `X(g) = cofactor · g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDerivation {
    pub coefficients: ModVector,
    pub cofactor: Poly,
}

impl LogDerivation {
    /// `X(h) = Σ a_i ∂h/∂x_i`.
    pub fn apply(&self, h: &Poly) -> Poly {
        apply_field(&self.coefficients, h)
    }

    /// Checks `X(g) = cofactor · g` exactly.
    pub fn is_tangent_to(&self, g: &Poly) -> bool {
        self.apply(g) == &self.cofactor * g
    }
}

pub(crate) fn apply_field(coefficients: &ModVector, h: &Poly) -> Poly {
    coefficients
        .entries()
        .iter()
        .zip(h.gradient())
        .fold(Poly::zero(h.context()), |acc, (a, dh)| &acc + &(a * &dh))
}

/// Generators of the syzygy module `{a : Σ a_i h_i = 0}` over the local ring.
///
/// Computed from a standard basis of the graph module spanned by
/// `h_i e_0 + e_{i+1}` under a position-over-term order: the basis elements
/// whose leading term avoids component 0 have vanishing image and generate
/// the relations. The order is degree-descending, so the result generates
/// the polynomial syzygies; the local ring is flat over the polynomial ring,
/// so they also generate the local ones.
pub fn syzygy_module(h: &[Poly]) -> Result<Vec<ModVector>> {
    let first = h.first().ok_or(Error::RankMismatch { expected: 1, found: 0 })?;
    if h.iter().any(|p| !p.same_context(first)) {
        return Err(Error::ContextMismatch);
    }
    let ctx = first.context();
    let k = h.len();
    let graph: Vec<ModVector> = h
        .iter()
        .enumerate()
        .map(|(i, hi)| {
            let mut entries = vec![Poly::zero(ctx); k + 1];
            entries[0] = hi.clone();
            entries[i + 1] = Poly::one(ctx);
            ModVector::new(entries).expect("shared context")
        })
        .collect();
    let sb = std_basis(&graph, k + 1, ModuleOrder::pot_global())?;
    Ok(sb
        .generators()
        .iter()
        .zip(sb.leading_terms())
        .filter(|(_, (_, comp))| *comp != 0)
        .map(|(v, _)| {
            debug_assert!(v.entries()[0].is_zero());
            v.components(1..k + 1)
        })
        .collect())
}

pub(crate) fn check_germ(p: &Poly, which: &'static str) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.constant_term().is_zero() {
        return Err(Error::NotAGerm { which });
    }
    Ok(())
}

/// Generating set of `Θ(V)`, read off the syzygies of `(∂_0 g, …, ∂_n g, g)`.
pub fn theta_v(g: &Poly) -> Result<Vec<LogDerivation>> {
    check_germ(g, "g")?;
    let n1 = g.nvars();
    let mut h = g.gradient();
    h.push(g.clone());
    Ok(syzygy_module(&h)?
        .into_iter()
        .filter_map(|s| {
            let coefficients = s.components(0..n1);
            if coefficients.is_zero() {
                return None;
            }
            let cofactor = -&s.entries()[n1];
            Some(LogDerivation { coefficients, cofactor })
        })
        .collect())
}

/// Generators `X(f)` of `J_f(V)`, one per generator `X` of `Θ(V)`.
pub fn jf_v(f: &Poly, g: &Poly) -> Result<Vec<Poly>> {
    if !f.same_context(g) {
        return Err(Error::ContextMismatch);
    }
    Ok(theta_v(g)?
        .iter()
        .map(|x| x.apply(f))
        .filter(|p| !p.is_zero())
        .collect())
}
