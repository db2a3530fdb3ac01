//! Mora's weak normal form for submodules of `O^r` over the local ring, and
//! the [`StdBasis`] type.
//!
//! The local order is not a well-order, so plain division need not stop.
//! Mora's normal form keeps a growing reducer set `T`; a reducer of minimal
//! ecart is chosen among those whose leading term divides, and whenever the
//! current remainder has smaller ecart than that reducer, the remainder is
//! added to `T` first. The result is a weak normal form `r` with
//! `u * v - r ∈ M` for a unit `u` of the local ring.

use std::sync::Arc;

use super::dim::{quotient_dim, DimResult};
use super::jet::monomials_of_degree;
use super::vector::{ModVector, ModuleOrder, SVec};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, VarContext};

/// Weak normal form together with the unit it was computed against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: ModVector,
    /// A polynomial with nonzero constant term such that `unit * v - remainder`
    /// lies in the submodule.
    pub unit: Poly,
}

struct Reducer<'a> {
    vec: std::borrow::Cow<'a, SVec>,
    ecart: u32,
    /// Multiplier of the input vector carried by this reducer; `None` for
    /// the original basis elements.
    unit: Option<Poly>,
}

pub(super) fn check_vectors(vs: &[&ModVector], rank: usize) -> Result<()> {
    let Some(first) = vs.first() else {
        return Ok(());
    };
    let ctx = first.context();
    for v in vs {
        if v.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: v.rank(),
            });
        }
        if !(Arc::ptr_eq(v.context(), ctx) || v.context() == ctx) {
            return Err(Error::ContextMismatch);
        }
    }
    Ok(())
}

/// `bound`, when known, is a degree `N` with `m^N F` inside the module;
/// terms of degree at least `N` are then dropped along the way.
pub(crate) fn nf_mora(
    mut v: SVec,
    basis: &[SVec],
    ord: ModuleOrder,
    ctx: &Arc<VarContext>,
    bound: Option<u32>,
) -> (SVec, Poly) {
    let mut reducers: Vec<Reducer<'_>> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| Reducer {
            ecart: b.ecart(),
            vec: std::borrow::Cow::Borrowed(b),
            unit: None,
        })
        .collect();
    if let Some(n) = bound {
        v.truncate(n);
    }
    let mut h = v;
    let mut unit = Poly::one(ctx);
    while !h.is_zero() {
        let lead = h.lead();
        let mut best: Option<usize> = None;
        for (k, r) in reducers.iter().enumerate() {
            let rl = r.vec.lead();
            if rl.comp == lead.comp && rl.mon.divides(&lead.mon) && best.is_none_or(|b| r.ecart <= reducers[b].ecart) {
                best = Some(k);
            }
        }
        let Some(k) = best else {
            break;
        };
        let h_ecart = h.ecart();
        let reducer_ecart = reducers[k].ecart;
        let shift = reducers[k].vec.lead().mon.quotient_of(&lead.mon).expect("divisor");
        let c = &lead.coeff / &reducers[k].vec.lead().coeff;
        let mut next = h.sub_scaled(&c, &shift, &reducers[k].vec, ord);
        if let Some(n) = bound {
            next.truncate(n);
        }
        let next_unit = match &reducers[k].unit {
            Some(u) => &unit - &u.mul_term(&shift, &c),
            None => unit.clone(),
        };
        if reducer_ecart > h_ecart && !ord.global {
            // stored monic, so reusing it does not compound coefficient growth
            let inv = h.lead().coeff.recip();
            let mut monic = h;
            monic.make_monic();
            reducers.push(Reducer {
                ecart: h_ecart,
                vec: std::borrow::Cow::Owned(monic),
                unit: Some(unit.scale(&inv)),
            });
        }
        h = next;
        unit = next_unit;
        if !ord.global && !h.is_zero() {
            let inv = h.lead().coeff.recip();
            h.make_monic();
            unit = unit.scale(&inv);
        }
    }
    let c = unit.constant_term();
    if !ord.global && !num_traits::One::is_one(&c) {
        let inv = c.recip();
        for t in &mut h.terms {
            t.coeff *= &inv;
        }
        unit = unit.scale(&inv);
    }
    (h, unit)
}

/// Weak normal form of `v` with respect to `basis` (any generating list).
pub fn mora_normal_form(v: &ModVector, basis: &[ModVector], ord: ModuleOrder) -> Result<ModVector> {
    Ok(mora_normal_form_with_unit(v, basis, ord)?.remainder)
}

pub fn mora_normal_form_with_unit(v: &ModVector, basis: &[ModVector], ord: ModuleOrder) -> Result<NormalForm> {
    let mut all: Vec<&ModVector> = vec![v];
    all.extend(basis.iter());
    check_vectors(&all, v.rank())?;
    let basis: Vec<SVec> = basis.iter().map(|b| SVec::from_modvector(b, ord)).collect();
    let (r, unit) = nf_mora(SVec::from_modvector(v, ord), &basis, ord, v.context(), None);
    Ok(NormalForm {
        remainder: r.to_modvector(v.context(), v.rank()),
        unit,
    })
}

/// Interreduced standard basis of a submodule of `O^rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdBasis {
    ctx: Arc<VarContext>,
    rank: usize,
    order: ModuleOrder,
    generators: Vec<ModVector>,
    leading_terms: Vec<(Monomial, usize)>,
    elems: Vec<SVec>,
    bound: Option<u32>,
}

impl StdBasis {
    pub fn generators(&self) -> &[ModVector] {
        &self.generators
    }

    pub fn leading_terms(&self) -> &[(Monomial, usize)] {
        &self.leading_terms
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn normal_form(&self, v: &ModVector) -> Result<ModVector> {
        check_vectors(&[v], self.rank)?;
        if !(Arc::ptr_eq(v.context(), &self.ctx) || **v.context() == *self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let (r, _) = nf_mora(
            SVec::from_modvector(v, self.order),
            &self.elems,
            self.order,
            &self.ctx,
            self.bound,
        );
        Ok(r.to_modvector(&self.ctx, self.rank))
    }

    /// Membership in the submodule over the local ring.
    ///
    /// Without a truncation degree the weak normal form can take very long,
    /// so membership is decided by comparing leading terms after adding `v`.
    pub fn contains(&self, v: &ModVector) -> Result<bool> {
        if self.bound.is_some() || self.order.global {
            return Ok(self.normal_form(v)?.is_zero());
        }
        check_vectors(&[v], self.rank)?;
        let mut gens = self.generators.clone();
        gens.push(v.clone());
        let wider = super::buchberger::std_basis(&gens, self.rank, self.order)?;
        Ok(wider.leading_terms == self.leading_terms)
    }

    pub fn quotient_dim(&self) -> DimResult {
        quotient_dim(self)
    }
}

/// Smallest `N` such that every module monomial of degree `N` is divisible
/// by one of `leads`, if each component has a pure power of every variable.
pub(super) fn corner_degree(leads: &[(&Monomial, usize)], rank: usize, nvars: usize) -> Option<u32> {
    let mut worst = 0;
    for comp in 0..rank {
        let corners: Vec<&Monomial> = leads.iter().filter(|(_, c)| *c == comp).map(|(m, _)| *m).collect();
        let mut powers = vec![None::<u32>; nvars];
        for m in &corners {
            if let Some((i, e)) = m.pure_power() {
                powers[i] = Some(powers[i].map_or(e, |p| p.min(e)));
            } else if m.is_one() {
                powers.iter_mut().for_each(|p| *p = Some(0));
            }
        }
        let ceiling: u32 = powers
            .iter()
            .map(|p| p.map(|e| e.saturating_sub(1)))
            .sum::<Option<u32>>()?
            + 1;
        let first_full = (0..ceiling)
            .find(|&d| {
                monomials_of_degree(nvars, d)
                    .iter()
                    .all(|m| corners.iter().any(|c| c.divides(m)))
            })
            .unwrap_or(ceiling);
        worst = worst.max(first_full);
    }
    Some(worst)
}

pub(super) fn finish(
    ctx: Arc<VarContext>,
    rank: usize,
    ord: ModuleOrder,
    basis: Vec<SVec>,
    bound: Option<u32>,
) -> StdBasis {
    let mut indexed: Vec<(usize, SVec)> = basis.into_iter().enumerate().collect();
    indexed.sort_by(|(ia, a), (ib, b)| {
        let (la, lb) = (a.lead(), b.lead());
        ord.cmp((&lb.mon, lb.comp), (&la.mon, la.comp)).then(ia.cmp(ib))
    });
    // Divisors compare greater, so a single forward pass suffices.
    let mut kept: Vec<SVec> = Vec::new();
    for (_, s) in indexed {
        let l = s.lead();
        if kept
            .iter()
            .any(|k| k.lead().comp == l.comp && k.lead().mon.divides(&l.mon))
        {
            continue;
        }
        kept.push(s);
    }
    let generators = kept.iter().map(|s| s.to_modvector(&ctx, rank)).collect();
    let leading_terms = kept.iter().map(|s| (s.lead().mon.clone(), s.lead().comp)).collect();
    StdBasis {
        ctx,
        rank,
        order: ord,
        generators,
        leading_terms,
        elems: kept,
        bound,
    }
}

/// Ideal version of [`std_basis`] for generators in `O`.
pub fn ideal_std_basis(gens: &[Poly]) -> Result<StdBasis> {
    let vs: Vec<ModVector> = gens.iter().cloned().map(ModVector::from_poly).collect();
    super::buchberger::std_basis(&vs, 1, ModuleOrder::top())
}
