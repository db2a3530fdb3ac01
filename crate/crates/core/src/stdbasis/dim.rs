use std::fmt;

use serde::{Serialize, Serializer};

use super::mora::StdBasis;
use crate::poly::Monomial;

/// Vector-space dimension of a quotient, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimResult {
    Finite(usize),
    Infinite,
}

impl DimResult {
    pub fn finite(self) -> Option<usize> {
        match self {
            DimResult::Finite(n) => Some(n),
            DimResult::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, DimResult::Finite(_))
    }
}

impl fmt::Display for DimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimResult::Finite(n) => write!(f, "{n}"),
            DimResult::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for DimResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimResult::Finite(n) => s.serialize_u64(*n as u64),
            DimResult::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Counts the monomials of one component lying under the staircase spanned
/// by `corners`, or `None` if some variable has no pure power among them.
fn staircase_count(corners: &[&Monomial], nvars: usize) -> Option<usize> {
    if corners.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in corners {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut count = 0;
    let mut exps = vec![0u32; nvars];
    loop {
        let under = !corners.iter().any(|c| c.exps().iter().zip(&exps).all(|(a, b)| a <= b));
        if under {
            count += 1;
        }
        // odometer over the box [0, bounds)
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Number of module monomials outside the leading staircase of `basis`.
pub fn quotient_dim(basis: &StdBasis) -> DimResult {
    let nvars = basis.context().len();
    let mut total = 0;
    for comp in 0..basis.rank() {
        let corners: Vec<&Monomial> = basis
            .leading_terms()
            .iter()
            .filter(|(_, c)| *c == comp)
            .map(|(m, _)| m)
            .collect();
        match staircase_count(&corners, nvars) {
            Some(n) => total += n,
            None => return DimResult::Infinite,
        }
    }
    DimResult::Finite(total)
}
