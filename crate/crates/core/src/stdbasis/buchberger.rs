//! Standard bases via Lazard's homogenization, with the homogenizing
//! variable kept implicit.
//!
//! Each element carries a degree `d` at least its largest term degree; it
//! stands for the homogeneous vector `t^d v(x/t)`. Under a degree-first
//! order on `ℚ[t, x]` whose ties are broken by the local order, the lead of
//! that vector is the local lead of `v` times `t^ecart`, so a reducer is
//! admissible only when its ecart does not exceed the ecart of the vector
//! being reduced. Every reduction stays inside one homogeneous degree and
//! Buchberger's algorithm terminates; setting `t = 1` in a Gröbner basis of
//! the homogenized generators gives a standard basis over the local ring.

use std::cmp::Ordering;

use super::mora::{check_vectors, corner_degree, finish, StdBasis};
use super::vector::{ModVector, ModuleOrder, PositionRule, SVec};
use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Debug, Clone)]
struct Elem {
    vec: SVec,
    degree: u32,
}

fn ecart(vec: &SVec, degree: u32, ord: ModuleOrder) -> u32 {
    if ord.global {
        0
    } else {
        degree - vec.lead().mon.degree()
    }
}

impl Elem {
    fn ecart(&self, ord: ModuleOrder) -> u32 {
        ecart(&self.vec, self.degree, ord)
    }
}

/// A critical pair. `lcm` and `t` together are the lcm of the homogenized
/// leads: `t^t * lcm`.
#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    t: u32,
    comp: usize,
    degree: u32,
}

impl Pair {
    fn new(basis: &[Elem], i: usize, j: usize, ord: ModuleOrder) -> Pair {
        let (li, lj) = (basis[i].vec.lead(), basis[j].vec.lead());
        let lcm = li.mon.lcm(&lj.mon);
        let t = basis[i].ecart(ord).max(basis[j].ecart(ord));
        Pair {
            i,
            j,
            degree: t + lcm.degree(),
            lcm,
            t,
            comp: lj.comp,
        }
    }

    fn same_lcm(&self, other: &Pair) -> bool {
        self.t == other.t && self.lcm == other.lcm
    }

    fn lcm_divides(&self, other: &Pair) -> bool {
        self.t <= other.t && self.lcm.divides(&other.lcm)
    }
}

/// Drops every term of degree at least `n`; a vector whose lead is such a
/// term vanishes, since it lies in `m^n F`.
fn cut(v: &mut SVec, bound: Option<u32>) {
    let Some(n) = bound else {
        return;
    };
    if v.terms.first().is_some_and(|t| t.mon.degree() >= n) {
        v.terms.clear();
    } else {
        v.truncate(n);
    }
}

fn top_degree(v: &SVec) -> u32 {
    v.terms.iter().map(|t| t.mon.degree()).max().unwrap_or(0)
}

/// Reduces `h` of homogenized degree `degree`. Powers of `t` dividing the
/// homogenized vector are cancelled after every step; this keeps each
/// element in the saturation of the homogenized module, which still
/// dehomogenizes into the original one.
fn reduce(mut h: SVec, mut degree: u32, basis: &[Elem], ord: ModuleOrder, bound: Option<u32>) -> (SVec, u32) {
    cut(&mut h, bound);
    while !h.is_zero() {
        degree = degree.min(top_degree(&h));
        let lead = h.lead();
        let e = ecart(&h, degree, ord);
        let reducer = basis
            .iter()
            .filter(|g| {
                let gl = g.vec.lead();
                gl.comp == lead.comp && gl.mon.divides(&lead.mon) && g.ecart(ord) <= e
            })
            .min_by_key(|g| g.ecart(ord));
        let Some(g) = reducer else {
            break;
        };
        let gl = g.vec.lead();
        let shift = gl.mon.quotient_of(&lead.mon).expect("divisor");
        let c = &lead.coeff / &gl.coeff;
        h = h.sub_scaled(&c, &shift, &g.vec, ord);
        cut(&mut h, bound);
    }
    (h, degree)
}

fn spoly(a: &SVec, b: &SVec, lcm: &Monomial, ord: ModuleOrder) -> SVec {
    let (la, lb) = (a.lead(), b.lead());
    let ma = la.mon.quotient_of(lcm).expect("lcm");
    let mb = lb.mon.quotient_of(lcm).expect("lcm");
    let scaled_a = SVec { terms: Vec::new() }.sub_scaled(&-la.coeff.recip(), &ma, a, ord);
    scaled_a.sub_scaled(&lb.coeff.recip(), &mb, b, ord)
}

/// Normal strategy on the homogenized degree, then the greatest lcm in the
/// module order, then creation order.
fn select_pair(pairs: &[Pair], ord: ModuleOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let better = match p.degree.cmp(&b.degree) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match ord.cmp((&p.lcm, p.comp), (&b.lcm, b.comp)) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => (p.j, p.i) < (b.j, b.i),
            },
        };
        if better {
            best = k;
        }
    }
    best
}

/// Gebauer-Möller update after appending element `k`. The product
/// criterion only holds for ideals, so it is skipped for `rank > 1`.
fn update_pairs(basis: &[Elem], pairs: &mut Vec<Pair>, k: usize, rank: usize, ord: ModuleOrder) {
    let lk = basis[k].vec.lead();
    let tk = basis[k].ecart(ord);
    pairs.retain(|p| {
        if p.comp != lk.comp || tk > p.t || !lk.mon.divides(&p.lcm) {
            return true;
        }
        Pair::new(basis, p.i, k, ord).same_lcm(p) || Pair::new(basis, p.j, k, ord).same_lcm(p)
    });

    let fresh: Vec<Pair> = (0..k)
        .filter(|&i| basis[i].vec.lead().comp == lk.comp)
        .map(|i| Pair::new(basis, i, k, ord))
        .collect();
    let minimal: Vec<&Pair> = fresh
        .iter()
        .filter(|p| !fresh.iter().any(|q| q.lcm_divides(p) && !q.same_lcm(p)))
        .collect();
    let coprime = |p: &Pair| {
        let li = basis[p.i].vec.lead();
        rank == 1 && p.lcm.degree() == li.mon.degree() + lk.mon.degree() && basis[p.i].ecart(ord).min(tk) == 0
    };
    let mut seen: Vec<&Pair> = Vec::new();
    for p in &minimal {
        if seen.iter().any(|q| q.same_lcm(p)) {
            continue;
        }
        seen.push(p);
        if !minimal.iter().any(|q| q.same_lcm(p) && coprime(q)) {
            pairs.push((*p).clone());
        }
    }
}

/// Recomputes the truncation degree and, when it improves, cuts every basis
/// element down to it. Only valid for degree-compatible term-over-position
/// orders, where a leading term of degree `N` forces all terms into `m^N`.
fn update_bound(basis: &mut [Elem], bound: &mut Option<u32>, rank: usize, nvars: usize, ord: ModuleOrder) {
    if ord.position != PositionRule::TermOverPosition || ord.global {
        return;
    }
    let leads: Vec<(&Monomial, usize)> = basis.iter().map(|e| (&e.vec.lead().mon, e.vec.lead().comp)).collect();
    let Some(n) = corner_degree(&leads, rank, nvars) else {
        return;
    };
    if bound.is_some_and(|b| b <= n) {
        return;
    }
    *bound = Some(n);
    for e in basis.iter_mut() {
        e.vec.truncate(n);
        if e.vec.lead().mon.degree() >= n {
            e.degree = e.vec.lead().mon.degree();
        }
    }
}

fn push(basis: &mut Vec<Elem>, pairs: &mut Vec<Pair>, mut vec: SVec, degree: u32, rank: usize, ord: ModuleOrder) {
    vec.make_monic();
    basis.push(Elem { vec, degree });
    update_pairs(basis, pairs, basis.len() - 1, rank, ord);
}

/// Standard basis of the submodule generated by `gens` in `O^rank`.
///
/// Zero generators are ignored. The output is leading-term interreduced,
/// every generator is monic, and generators are sorted by leading term,
/// greatest first.
pub fn std_basis(gens: &[ModVector], rank: usize, ord: ModuleOrder) -> Result<StdBasis> {
    let first = gens.first().ok_or(Error::RankMismatch {
        expected: rank,
        found: 0,
    })?;
    let refs: Vec<&ModVector> = gens.iter().collect();
    check_vectors(&refs, rank)?;
    let ctx = first.context().clone();

    let nvars = ctx.len();
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut bound = None;
    for g in gens {
        let s = SVec::from_modvector(g, ord);
        if s.is_zero() {
            continue;
        }
        let degree = top_degree(&s);
        push(&mut basis, &mut pairs, s, degree, rank, ord);
    }
    update_bound(&mut basis, &mut bound, rank, nvars, ord);

    while !pairs.is_empty() {
        let pair = pairs.swap_remove(select_pair(&pairs, ord));
        let s = spoly(&basis[pair.i].vec, &basis[pair.j].vec, &pair.lcm, ord);
        let (h, degree) = reduce(s, pair.degree, &basis, ord, bound);
        if h.is_zero() {
            continue;
        }
        push(&mut basis, &mut pairs, h, degree, rank, ord);
        update_bound(&mut basis, &mut bound, rank, nvars, ord);
    }

    Ok(finish(
        ctx,
        rank,
        ord,
        basis.into_iter().map(|e| e.vec).collect(),
        bound,
    ))
}
