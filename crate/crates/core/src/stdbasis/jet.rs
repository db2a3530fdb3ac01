//! Jet-truncation oracle: quotient dimensions by exact linear algebra,
//! independent of the standard-basis engine.
//!
//! For a submodule `M ⊆ F = O^r` and a degree bound `d`, the space
//! `F / (M + m^{d+1} F)` is spanned by module monomials of degree ≤ d, and
//! `M` contributes the truncations of all monomial multiples `u * v` of the
//! generators. Its dimension is the monomial count minus the rank of those
//! truncations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::ModVector;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Monomials of total degree exactly `d` in `nvars` variables.
pub(super) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

type SparseRow = Vec<(usize, BigInt)>;

/// Row echelon form over ℤ with content removal (fraction free).
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

fn primitive(mut row: SparseRow) -> SparseRow {
    let g = row.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in &mut row {
            *c /= &g;
        }
    }
    if row.first().is_some_and(|(_, c)| c.is_negative()) {
        for (_, c) in &mut row {
            *c = -&*c;
        }
    }
    row
}

/// `a * row - b * pivot`, dropping the cancelled leading column.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push((row[i].0, a * &row[i].1));
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let c = a * &row[i].1 - b * &pivot[j].1;
            if !c.is_zero() {
                out.push((row[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    /// Inserts a row; returns whether it increased the rank.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            if row.is_empty() {
                return false;
            }
            let col = row[0].0;
            match self.pivots.get(&col) {
                Some(p) => row = primitive(eliminate(&row, p)),
                None => {
                    self.pivots.insert(col, primitive(row));
                    return true;
                }
            }
        }
    }
}

fn check_gens(gens: &[ModVector], rank: usize) -> Result<usize> {
    let first = gens.first().ok_or(Error::RankMismatch {
        expected: rank,
        found: 0,
    })?;
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: g.rank(),
            });
        }
        if g.context() != first.context() {
            return Err(Error::ContextMismatch);
        }
    }
    Ok(first.context().len())
}

/// `dim F / (M + m^{d+1} F)` for the submodule `M` generated by `gens`.
pub fn jet_quotient_dim(gens: &[ModVector], rank: usize, degree_bound: u32) -> Result<usize> {
    let nvars = check_gens(gens, rank)?;
    Ok(truncated_dim(gens, rank, nvars, degree_bound))
}

fn truncated_dim(gens: &[ModVector], rank: usize, nvars: usize, d: u32) -> usize {
    let by_degree: Vec<Vec<Monomial>> = (0..=d).map(|k| monomials_of_degree(nvars, k)).collect();
    // Columns ordered by degree, then component, so pivots fall on low degrees.
    let mut index: HashMap<(Monomial, usize), usize> = HashMap::new();
    for mons in &by_degree {
        for comp in 0..rank {
            for m in mons {
                let next = index.len();
                index.insert((m.clone(), comp), next);
            }
        }
    }
    let total = index.len();

    let mut echelon = Echelon::default();
    let mut rank_found = 0;
    for g in gens {
        let Some(low) = g.entries().iter().filter_map(|p| p.min_degree()).min() else {
            continue;
        };
        if low > d {
            continue;
        }
        // clear denominators once per generator
        let denom_lcm = g
            .entries()
            .iter()
            .flat_map(|p| p.terms().iter())
            .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        let int_terms: Vec<(usize, &Monomial, BigInt)> = g
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                let denom_lcm = &denom_lcm;
                p.terms()
                    .iter()
                    .map(move |(m, c)| (comp, m, c.numer() * (denom_lcm / c.denom())))
            })
            .collect();
        for shift_deg in 0..=(d - low) {
            for u in &by_degree[shift_deg as usize] {
                let mut row: SparseRow = int_terms
                    .iter()
                    .filter(|(_, m, _)| m.degree() + shift_deg <= d)
                    .map(|(comp, m, c)| (index[&(m.mul(u), *comp)], c.clone()))
                    .collect();
                row.sort_by_key(|(i, _)| *i);
                if echelon.insert(row) {
                    rank_found += 1;
                }
            }
        }
    }
    total - rank_found
}

/// Stabilized jet dimension: raises the truncation degree until two
/// consecutive values agree, up to `max_degree`.
///
/// Equality at `d - 1` and `d` means `m^d F ⊆ M + m^{d+1} F`, i.e. every
/// degree-`d` module monomial reduces into lower degrees; by Nakayama this
/// gives `m^d F ⊆ M`, so the value is the exact dimension of `F / M`.
pub fn stable_jet_dim(gens: &[ModVector], rank: usize, max_degree: u32) -> Result<usize> {
    let nvars = check_gens(gens, rank)?;
    let mut previous = truncated_dim(gens, rank, nvars, 0);
    for d in 1..=max_degree {
        let current = truncated_dim(gens, rank, nvars, d);
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::OracleIndeterminate { max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::VarContext;

    fn gens(src: &[&str]) -> Vec<ModVector> {
        let ctx = VarContext::new(["x", "y"]).unwrap();
        src.iter()
            .map(|s| ModVector::from_poly(parse_poly(s, &ctx).unwrap()))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(jet_quotient_dim(&gens(&["x^2", "y^2"]), 1, 4).unwrap(), 4);
        assert_eq!(jet_quotient_dim(&gens(&["x^2+y^3", "x*y"]), 1, 6).unwrap(), 5);
        // two variables: 1, y, y^2, y^3 survive
        assert_eq!(jet_quotient_dim(&gens(&["x"]), 1, 3).unwrap(), 4);
        assert_eq!(jet_quotient_dim(&gens(&["x", "y"]), 1, 3).unwrap(), 1);
    }

    #[test]
    fn truncation_counts_monomials_when_module_is_high_order() {
        // (x^5) truncated at degree 2: all 6 monomials of degree <= 2 survive.
        assert_eq!(jet_quotient_dim(&gens(&["x^5"]), 1, 2).unwrap(), 6);
    }

    #[test]
    fn stabilization() {
        assert_eq!(stable_jet_dim(&gens(&["x^2+y^3", "x*y"]), 1, 24).unwrap(), 5);
        assert_eq!(stable_jet_dim(&gens(&["x", "y"]), 1, 24).unwrap(), 1);
        assert_eq!(stable_jet_dim(&gens(&["1+x"]), 1, 24).unwrap(), 0);
        assert_eq!(
            stable_jet_dim(&gens(&["x"]), 1, 8),
            Err(Error::OracleIndeterminate { max_degree: 8 })
        );
    }

    #[test]
    fn rational_coefficients() {
        assert_eq!(
            stable_jet_dim(&gens(&["1/2*x^2 + 2/3*y^3", "x*y/5"]), 1, 24).unwrap(),
            5
        );
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(3)]);
    }
}
