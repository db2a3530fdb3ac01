use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, LocalOrder, Monomial, Poly, VarContext};

/// Element of the free module `O^r`, one polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModVector {
    entries: Vec<Poly>,
}

impl ModVector {
    pub fn new(entries: Vec<Poly>) -> Result<Self> {
        let first = entries.first().ok_or(Error::RankMismatch { expected: 1, found: 0 })?;
        if entries.iter().any(|p| !p.same_context(first)) {
            return Err(Error::ContextMismatch);
        }
        Ok(ModVector { entries })
    }

    pub fn zero(ctx: &Arc<VarContext>, rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        ModVector {
            entries: vec![Poly::zero(ctx); rank],
        }
    }

    /// The basis vector `e_i` scaled by `p`.
    pub fn single(rank: usize, i: usize, p: Poly) -> Self {
        let mut v = Self::zero(p.context(), rank);
        v.entries[i] = p;
        v
    }

    pub fn from_poly(p: Poly) -> Self {
        ModVector { entries: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.entries[0].context()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn scale_by(&self, p: &Poly) -> ModVector {
        ModVector {
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn try_add(&self, other: &ModVector) -> Result<ModVector> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(ModVector { entries })
    }

    pub fn try_sub(&self, other: &ModVector) -> Result<ModVector> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> ModVector {
        ModVector {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Keeps components `range`, e.g. to project a syzygy.
    pub fn components(&self, range: std::ops::Range<usize>) -> ModVector {
        ModVector {
            entries: self.entries[range].to_vec(),
        }
    }

    /// Leading module term under `ord`.
    pub fn leading_term(&self, ord: ModuleOrder) -> Option<(Monomial, usize, Coeff)> {
        let mut best: Option<(&Monomial, usize, &Coeff)> = None;
        for (comp, p) in self.entries.iter().enumerate() {
            if let Some((m, c)) = p.leading_term() {
                let better = match best {
                    None => true,
                    Some((bm, bc, _)) => ord.cmp((m, comp), (bm, bc)) == Ordering::Greater,
                };
                if better {
                    best = Some((m, comp, c));
                }
            }
        }
        best.map(|(m, i, c)| (m.clone(), i, c.clone()))
    }
}

/// How the component index enters the module order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionRule {
    /// Monomials first, ties broken by the smaller component index.
    TermOverPosition,
    /// Smaller component index first, then monomials. Eliminates low components.
    PositionOverTerm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub local: LocalOrder,
    pub position: PositionRule,
    /// Degree-descending variant used only to compute polynomial syzygies,
    /// which generate the local syzygies by flatness.
    pub(crate) global: bool,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder::top()
    }
}

impl ModuleOrder {
    pub fn top() -> Self {
        ModuleOrder {
            local: LocalOrder::NegDegRevLex,
            position: PositionRule::TermOverPosition,
            global: false,
        }
    }

    pub fn pot() -> Self {
        ModuleOrder {
            local: LocalOrder::NegDegRevLex,
            position: PositionRule::PositionOverTerm,
            global: false,
        }
    }

    pub(crate) fn pot_global() -> Self {
        ModuleOrder {
            global: true,
            ..ModuleOrder::pot()
        }
    }

    fn cmp_mon(self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.global && a.degree() != b.degree() {
            a.degree().cmp(&b.degree())
        } else {
            self.local.cmp(a, b)
        }
    }

    /// `Greater` means `(a, i) ≻ (b, j)`.
    pub fn cmp(self, (a, i): (&Monomial, usize), (b, j): (&Monomial, usize)) -> Ordering {
        match self.position {
            PositionRule::TermOverPosition => self.cmp_mon(a, b).then(j.cmp(&i)),
            PositionRule::PositionOverTerm => j.cmp(&i).then_with(|| self.cmp_mon(a, b)),
        }
    }
}

/// Module term `coeff * mon * e_comp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: usize,
    pub coeff: Coeff,
}

/// Flat term list sorted greatest-first under a module order; the working
/// representation of the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn from_modvector(v: &ModVector, ord: ModuleOrder) -> SVec {
        let mut terms: Vec<Term> = v
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    mon: m.clone(),
                    comp,
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp((&b.mon, b.comp), (&a.mon, a.comp)));
        SVec { terms }
    }

    pub fn to_modvector(&self, ctx: &Arc<VarContext>, rank: usize) -> ModVector {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp].push((t.mon.clone(), t.coeff.clone()));
        }
        ModVector {
            entries: buckets.into_iter().map(|b| Poly::from_terms(ctx, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    /// Spread between the highest total degree and the degree of the leading term.
    pub fn ecart(&self) -> u32 {
        let top = self.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0);
        top - self.lead().mon.degree()
    }

    /// Drops every non-leading term of degree at least `n`; a leading term
    /// of degree at least `n` is kept alone.
    pub fn truncate(&mut self, n: u32) {
        if self.terms.is_empty() {
            return;
        }
        if self.terms[0].mon.degree() >= n {
            self.terms.truncate(1);
        } else {
            self.terms.retain(|t| t.mon.degree() < n);
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(first) = self.terms.first() {
            if !first.coeff.is_one() {
                let inv = first.coeff.recip();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
    }

    /// `self - c * m * other`.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, other: &SVec, ord: ModuleOrder) -> SVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| Term {
                mon: t.mon.mul(m),
                comp: t.comp,
                coeff: -(&t.coeff * c),
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp((&x.mon, x.comp), (&y.mon, y.comp)) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let coeff = &x.coeff + &y.coeff;
                        if !coeff.is_zero() {
                            out.push(Term {
                                mon: x.mon.clone(),
                                comp: x.comp,
                                coeff,
                            });
                        }
                    }
                },
            }
        }
        SVec { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn position_rules() {
        let one = Monomial::one(2);
        let x = Monomial::var(2, 0);
        // TOP: x*e0 vs 1*e1 -> 1*e1 wins on the monomial part.
        assert_eq!(ModuleOrder::top().cmp((&x, 0), (&one, 1)), Ordering::Less);
        // POT: component 0 dominates.
        assert_eq!(ModuleOrder::pot().cmp((&x, 0), (&one, 1)), Ordering::Greater);
        // Ties go to the smaller index in both.
        assert_eq!(ModuleOrder::top().cmp((&x, 0), (&x, 1)), Ordering::Greater);
    }

    #[test]
    fn svec_roundtrip_and_lead() {
        let ctx = VarContext::new(["x", "y"]).unwrap();
        let x = Poly::var(&ctx, 0).unwrap();
        let y = Poly::var(&ctx, 1).unwrap();
        let v = ModVector::new(vec![&x * &x, &y + &(&x * &y)]).unwrap();
        let s = SVec::from_modvector(&v, ModuleOrder::top());
        assert_eq!(s.lead().comp, 1);
        assert_eq!(s.lead().mon, Monomial::var(2, 1));
        assert_eq!(s.ecart(), 1);
        assert_eq!(s.to_modvector(&ctx, 2), v);
        let (m, comp, _) = v.leading_term(ModuleOrder::top()).unwrap();
        assert_eq!((m, comp), (Monomial::var(2, 1), 1));
        let (m, comp, _) = v.leading_term(ModuleOrder::pot()).unwrap();
        assert_eq!((m, comp), (Monomial::new(vec![2, 0]), 0));
    }
}
