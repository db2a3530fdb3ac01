//! Sparse multivariate polynomials over ℚ, ordered for the local ring.
//!
//! Terms are kept sorted by the local order, greatest first, so the
//! leading term in the local sense (a term of lowest total degree) is
//! always `terms()[0]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Ordered list of variable names; variable `i` is the i-th coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        if names.len() < 2 {
            return Err(Error::TooFewVariables(names.len()));
        }
        Ok(Arc::new(VarContext { names }))
    }

    /// Parses a comma separated list such as `x,y,z`.
    pub fn parse_list(list: &str) -> Result<Arc<Self>> {
        Self::new(list.split(',').map(str::trim))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector with cached total degree.
///
/// `Ord` is the local order: `a > b` means `a ≻ b`, so lower total degree
/// compares greater and `1` is the maximum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into(),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial {
            exps: exps.into(),
            degree: 1,
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    /// If this is a pure power `x_i^e` with `e ≥ 1`, returns `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Partial derivative of the monomial: `(exponent, monomial / x_i)`.
    fn derive(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.to_vec();
        exps[i] -= 1;
        Some((
            e,
            Monomial {
                exps: exps.into(),
                degree: self.degree - 1,
            },
        ))
    }

    pub(crate) fn fmt_with(&self, ctx: &VarContext, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        LocalOrder::NegDegRevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial order for the local ring at the origin.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum LocalOrder {
    /// Negative degree reverse lexicographic: lower total degree is greater;
    /// on equal degree, `a ≻ b` iff the last nonzero entry of `a - b` is negative.
    #[default]
    NegDegRevLex,
}

impl LocalOrder {
    /// `Ordering::Greater` means `a ≻ b`.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            LocalOrder::NegDegRevLex => {
                if a.degree != b.degree {
                    return b.degree.cmp(&a.degree);
                }
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored, every monomial has one
/// exponent per context variable, and terms are sorted greatest-first in
/// the local order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: Arc<VarContext>,
    terms: Vec<(Monomial, Coeff)>,
}

fn merge_terms(a: &[(Monomial, Coeff)], b: impl IntoIterator<Item = (Monomial, Coeff)>) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len());
    let mut ai = a.iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ai.next().unwrap().clone()),
            (None, Some(_)) => out.push(bi.next().unwrap()),
            (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                Ordering::Greater => out.push(ai.next().unwrap().clone()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (m, ca) = ai.next().unwrap();
                    let (_, cb) = bi.next().unwrap();
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            },
        }
    }
    out
}

impl Poly {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, Coeff::one())
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Coeff) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn from_int(ctx: &Arc<VarContext>, c: i64) -> Self {
        Self::constant(ctx, Coeff::from_integer(BigInt::from(c)))
    }

    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Result<Self> {
        if i >= ctx.len() {
            return Err(Error::VarIndexOutOfRange {
                index: i,
                nvars: ctx.len(),
            });
        }
        Ok(Self::monomial(ctx, Monomial::var(ctx.len(), i), Coeff::one()))
    }

    pub fn monomial(ctx: &Arc<VarContext>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ctx.len(), "monomial arity does not match context");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ctx: &Arc<VarContext>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.len(), "monomial arity does not match context");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Poly {
            ctx: ctx.clone(),
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_context(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    fn check_context(&self, other: &Poly) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    /// Leading term in the local order (a term of minimal total degree).
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_term_local(&self, ord: LocalOrder) -> Result<(Monomial, Coeff)> {
        match ord {
            LocalOrder::NegDegRevLex => self
                .leading_term()
                .map(|(m, c)| (m.clone(), c.clone()))
                .ok_or(Error::ZeroPolynomial),
        }
    }

    /// Highest total degree among the terms.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_context(other)?;
        Ok(Poly {
            ctx: self.ctx.clone(),
            terms: merge_terms(&self.terms, other.terms.iter().cloned()),
        })
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_context(other)?;
        Ok(Poly {
            ctx: self.ctx.clone(),
            terms: merge_terms(&self.terms, other.terms.iter().map(|(m, c)| (m.clone(), -c))),
        })
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_context(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        Ok(Poly {
            ctx: self.ctx.clone(),
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * m`; the order is multiplicative so sorting is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars() {
            return Err(Error::VarIndexOutOfRange {
                index: i,
                nvars: self.nvars(),
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            m.derive(i)
                .map(|(e, dm)| (dm, c * Coeff::from_integer(BigInt::from(e))))
        });
        Ok(Poly::from_terms(&self.ctx, terms))
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars())
            .map(|i| self.partial(i).expect("index in range"))
            .collect()
    }

    /// Exponent vectors of the support, in stored order.
    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Same polynomial reinterpreted in another context with the same arity.
    pub fn with_context(&self, ctx: &Arc<VarContext>) -> Result<Poly> {
        if ctx.len() != self.nvars() {
            return Err(Error::ContextMismatch);
        }
        Ok(Poly {
            ctx: ctx.clone(),
            terms: self.terms.clone(),
        })
    }
}

impl Add for &Poly {
    type Output = Poly;

    /// Panics if the contexts differ; see [`Poly::try_add`].
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("context mismatch in polynomial addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("context mismatch in polynomial subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs)
            .expect("context mismatch in polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Prints in a form `parse_poly` reads back, e.g. `-1/4*x + 2*x*y^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                f.write_str(&fmt_coeff(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_coeff(&abs))?;
                }
                m.fmt_with(&self.ctx, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(["x", "y"]).unwrap()
    }

    fn p(terms: &[(i64, [u32; 2])]) -> Poly {
        let ctx = ctx();
        Poly::from_terms(
            &ctx,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), Coeff::from_integer((*c).into()))),
        )
    }

    #[test]
    fn context_validation() {
        assert!(matches!(VarContext::new(["x"]), Err(Error::TooFewVariables(1))));
        assert!(matches!(VarContext::new(["x", "x"]), Err(Error::DuplicateVariable(_))));
        assert!(matches!(
            VarContext::new(["x", "1y"]),
            Err(Error::InvalidVariableName(_))
        ));
        assert!(matches!(VarContext::new(["x", ""]), Err(Error::InvalidVariableName(_))));
        let c = VarContext::parse_list("x, y_1,Z2").unwrap();
        assert_eq!(c.names(), ["x", "y_1", "Z2"]);
    }

    #[test]
    fn multiplication_examples() {
        let x_plus_y = p(&[(1, [1, 0]), (1, [0, 1])]);
        let x_minus_y = p(&[(1, [1, 0]), (-1, [0, 1])]);
        assert_eq!(&x_plus_y * &x_minus_y, p(&[(1, [2, 0]), (-1, [0, 2])]));

        let q = p(&[(1, [2, 0]), (1, [0, 3])]);
        assert_eq!(&q * &Poly::one(&ctx()), q);
        let y = p(&[(1, [0, 1])]);
        assert_eq!(&q * &y, p(&[(1, [2, 1]), (1, [0, 4])]));
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let other = VarContext::new(["u", "v"]).unwrap();
        let a = Poly::var(&ctx(), 0).unwrap();
        let b = Poly::var(&other, 0).unwrap();
        assert_eq!(a.try_mul(&b), Err(Error::ContextMismatch));
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn partial_derivative_examples() {
        let q = p(&[(1, [2, 0]), (1, [0, 3])]);
        assert_eq!(q.partial(0).unwrap(), p(&[(2, [1, 0])]));
        assert!(Poly::from_int(&ctx(), 5).partial(1).unwrap().is_zero());
        assert_eq!(p(&[(1, [1, 2])]).partial(0).unwrap(), p(&[(1, [0, 2])]));
        assert!(matches!(
            q.partial(2),
            Err(Error::VarIndexOutOfRange { index: 2, nvars: 2 })
        ));
    }

    #[test]
    fn leading_term_examples() {
        let one = Coeff::one();
        let q = p(&[(1, [2, 0]), (1, [0, 3])]);
        assert_eq!(
            q.leading_term_local(LocalOrder::NegDegRevLex).unwrap(),
            (Monomial::new(vec![2, 0]), one.clone())
        );
        let q = p(&[(1, [0, 0]), (1, [1, 0]), (1, [0, 5])]);
        assert_eq!(
            q.leading_term_local(LocalOrder::NegDegRevLex).unwrap(),
            (Monomial::one(2), one.clone())
        );
        let q = p(&[(1, [1, 0]), (1, [0, 1])]);
        assert_eq!(
            q.leading_term_local(LocalOrder::NegDegRevLex).unwrap(),
            (Monomial::new(vec![1, 0]), one)
        );
        assert_eq!(
            Poly::zero(&ctx()).leading_term_local(LocalOrder::NegDegRevLex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn revlex_tie_break_in_three_variables() {
        // x*z vs y^2: difference (1,-2,1), last nonzero entry positive, so y^2 wins.
        let xz = Monomial::new(vec![1, 0, 1]);
        let y2 = Monomial::new(vec![0, 2, 0]);
        assert_eq!(LocalOrder::NegDegRevLex.cmp(&y2, &xz), Ordering::Greater);
        assert!(Monomial::one(3) > y2);
    }

    #[test]
    fn display() {
        let q = p(&[(1, [2, 0]), (-3, [1, 2]), (4, [0, 0])]);
        assert_eq!(q.to_string(), "4 + x^2 - 3*x*y^2");
        assert_eq!(Poly::zero(&ctx()).to_string(), "0");
        let half = Poly::constant(&ctx(), Coeff::new((-1).into(), 4.into()));
        assert_eq!((&half * &Poly::var(&ctx(), 0).unwrap()).to_string(), "-1/4*x");
    }

    #[test]
    fn pow_matches_repeated_product() {
        let q = p(&[(1, [1, 0]), (2, [0, 1])]);
        assert_eq!(q.pow(3), &(&q * &q) * &q);
        assert_eq!(q.pow(0), Poly::one(&ctx()));
    }
}
