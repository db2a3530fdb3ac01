//! Invariants of a pair `(f, V = {g = 0})` and the identities relating them.
//!
//! Every reported dimension is computed independently from its own
//! generator set; the identities are then checked on those numbers. The
//! one exception is `μ(f_V)`, which has no direct presentation here and is
//! obtained twice: from Greuel's module and from the determinantal ideal
//! `(g) + I_2(Jac(g, f))`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{ferrari_submodule, greuel_submodule, module_colength};
use crate::logder::jf_v;
use crate::poly::{Coeff, Poly, VarContext};
use crate::stdbasis::{ideal_std_basis, stable_jet_dim, DimResult, ModVector};

/// A pair of germs through the origin sharing one set of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermPair {
    pub f: Poly,
    pub g: Poly,
}

impl GermPair {
    pub fn new(f: Poly, g: Poly) -> Result<Self> {
        if !f.same_context(&g) {
            return Err(Error::ContextMismatch);
        }
        if !f.constant_term().is_zero() {
            return Err(Error::NotAGerm { which: "f" });
        }
        if !g.constant_term().is_zero() {
            return Err(Error::NotAGerm { which: "g" });
        }
        Ok(GermPair { f, g })
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.f.context()
    }
}

fn ideal_dim(gens: &[Poly]) -> Result<DimResult> {
    Ok(ideal_std_basis(gens)?.quotient_dim())
}

fn require_germ(p: &Poly, which: &'static str) -> Result<()> {
    if p.constant_term().is_zero() {
        Ok(())
    } else {
        Err(Error::NotAGerm { which })
    }
}

/// `μ(f) = dim O / (∂_0 f, …, ∂_n f)`.
pub fn milnor_number(f: &Poly) -> Result<DimResult> {
    require_germ(f, "f")?;
    ideal_dim(&jacobian_ideal(f))
}

/// `τ(V) = dim O / (g, ∂_0 g, …, ∂_n g)`.
pub fn tjurina_number(g: &Poly) -> Result<DimResult> {
    require_germ(g, "g")?;
    ideal_dim(&tjurina_ideal(g))
}

pub fn jacobian_ideal(f: &Poly) -> Vec<Poly> {
    f.gradient()
}

pub fn tjurina_ideal(g: &Poly) -> Vec<Poly> {
    let mut gens = vec![g.clone()];
    gens.extend(g.gradient());
    gens
}

/// `(g) + (2×2 minors of the Jacobian matrix of (g, f))`.
pub fn determinantal_ideal(f: &Poly, g: &Poly) -> Vec<Poly> {
    let (df, dg) = (f.gradient(), g.gradient());
    let mut gens = vec![g.clone()];
    for i in 0..df.len() {
        for j in (i + 1)..df.len() {
            let minor = &(&dg[i] * &df[j]) - &(&dg[j] * &df[i]);
            if !minor.is_zero() {
                gens.push(minor);
            }
        }
    }
    gens
}

fn finite(d: DimResult, what: &str) -> Result<usize> {
    d.finite()
        .ok_or_else(|| Error::Precondition(format!("{what} has infinite dimension")))
}

/// `μ(f_V)` by the Lê-Greuel formula, computed along two independent paths
/// that must agree: Greuel's module `μ_G(f_V) - μ(V)` and the determinantal
/// form `dim O/((g) + I_2(Jac(g, f))) - μ(V)`.
pub fn mu_fv_le_greuel(f: &Poly, g: &Poly) -> Result<usize> {
    let (a, b) = le_greuel_paths(f, g)?;
    if a != b {
        return Err(Error::Inconsistency(format!(
            "Lê-Greuel paths disagree: Greuel module gives {a}, determinantal ideal gives {b}"
        )));
    }
    usize::try_from(a).map_err(|_| Error::Inconsistency(format!("negative μ(f_V) = {a}")))
}

fn le_greuel_paths(f: &Poly, g: &Poly) -> Result<(i64, i64)> {
    let mu_v = finite(milnor_number(g)?, "Jacobian algebra of g")? as i64;
    let mu_g = module_colength(&greuel_submodule(f, g)?, f.nvars(), "Greuel module")? as i64;
    let det = finite(ideal_dim(&determinantal_ideal(f, g))?, "determinantal algebra")? as i64;
    Ok((mu_g - mu_v, det - mu_v))
}

/// `μ_BR(f, V) = dim O / J_f(V)`.
pub fn bruce_roberts(f: &Poly, g: &Poly) -> Result<usize> {
    let gens = jf_v(f, g)?;
    match ideal_dim(&gens)? {
        DimResult::Finite(n) => Ok(n),
        DimResult::Infinite => Err(Error::Inconsistency(
            "Bruce-Roberts algebra is infinite although preconditions may hold".into(),
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PreconditionReport {
    pub f_isolated: bool,
    pub g_isolated: bool,
    pub icis_ok: bool,
    pub reduced_ok: bool,
}

impl PreconditionReport {
    pub fn all_hold(&self) -> bool {
        self.f_isolated && self.g_isolated && self.icis_ok && self.reduced_ok
    }

    /// Name of the first failed test, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.f_isolated, "f_isolated"),
            (self.g_isolated, "g_isolated"),
            (self.icis_ok, "icis_ok"),
            (self.reduced_ok, "reduced_ok"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

pub fn check_preconditions(pair: &GermPair) -> Result<PreconditionReport> {
    let f_isolated = milnor_number(&pair.f)?.is_finite();
    let g_isolated = milnor_number(&pair.g)?.is_finite();
    let icis_ok = ideal_dim(&determinantal_ideal(&pair.f, &pair.g))?.is_finite();
    Ok(PreconditionReport {
        f_isolated,
        g_isolated,
        icis_ok,
        // an isolated critical point forces g to be square free
        reduced_ok: g_isolated,
    })
}

/// Result of the two quasihomogeneity tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasihomogeneity {
    /// `μ(V) = τ(V)`, which characterizes quasihomogeneity up to coordinates.
    pub by_saito: bool,
    /// Positive weights making every monomial of `g` weighted degree 1, if
    /// some exist in the given coordinates (sufficient only).
    pub weights: Option<Vec<Coeff>>,
}

pub fn is_quasihomogeneous(g: &Poly) -> Result<Quasihomogeneity> {
    let mu = finite(milnor_number(g)?, "Jacobian algebra of g")?;
    let tau = finite(tjurina_number(g)?, "Tjurina algebra of g")?;
    let rows: Vec<Vec<Coeff>> = g
        .support()
        .map(|m| m.exps().iter().map(|&e| Coeff::from_integer(e.into())).collect())
        .collect();
    Ok(Quasihomogeneity {
        by_saito: mu == tau,
        weights: positive_weights(&rows, g.nvars()),
    })
}

/// Solves `rows · w = 1` with every `w_i > 0`, or returns `None`.
pub fn positive_weights(rows: &[Vec<Coeff>], nvars: usize) -> Option<Vec<Coeff>> {
    // reduced row echelon form of [rows | 1]
    let mut m: Vec<Vec<Coeff>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(Coeff::one());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..nvars {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in m[row].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[nvars].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    // w_pivot = b - Σ c_f t_f, w_free = t_f; all must be > 0
    let mut constraints: Vec<(Vec<Coeff>, Coeff)> = Vec::new();
    for (r, _) in pivots.iter().enumerate() {
        let coeffs = free.iter().map(|&f| -&m[r][f]).collect();
        constraints.push((coeffs, m[r][nvars].clone()));
    }
    for k in 0..free.len() {
        let mut coeffs = vec![Coeff::zero(); free.len()];
        coeffs[k] = Coeff::one();
        constraints.push((coeffs, Coeff::zero()));
    }
    let t = strict_feasible_point(constraints, free.len())?;
    let mut w = vec![Coeff::zero(); nvars];
    for (k, &f) in free.iter().enumerate() {
        w[f] = t[k].clone();
    }
    for (r, &p) in pivots.iter().enumerate() {
        let mut val = m[r][nvars].clone();
        for (k, &f) in free.iter().enumerate() {
            val -= &m[r][f] * &t[k];
        }
        w[p] = val;
    }
    w.iter().all(Coeff::is_positive).then_some(w)
}

/// Fourier-Motzkin elimination for a system of strict inequalities
/// `a · t + b > 0`; returns a witness point if the system is feasible.
fn strict_feasible_point(constraints: Vec<(Vec<Coeff>, Coeff)>, nvars: usize) -> Option<Vec<Coeff>> {
    let mut stages = vec![constraints];
    for k in (0..nvars).rev() {
        let current = stages.last().unwrap();
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in current {
            if c.0[k].is_positive() {
                pos.push(c);
            } else if c.0[k].is_negative() {
                neg.push(c);
            } else {
                next.push(c.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let (sp, sn) = (-&n.0[k], p.0[k].clone());
                let coeffs = p.0.iter().zip(&n.0).map(|(a, b)| &sp * a + &sn * b).collect();
                next.push((coeffs, &sp * &p.1 + &sn * &n.1));
            }
        }
        stages.push(next);
    }
    if stages.last().unwrap().iter().any(|(_, b)| !b.is_positive()) {
        return None;
    }
    let mut t: Vec<Coeff> = Vec::with_capacity(nvars);
    for k in 0..nvars {
        // constraints that involve t_0..t_k only
        let stage = &stages[nvars - k - 1];
        let (mut lower, mut upper): (Option<Coeff>, Option<Coeff>) = (None, None);
        for (a, b) in stage {
            if a[k].is_zero() {
                continue;
            }
            let rest = t.iter().zip(a).fold(b.clone(), |acc, (ti, ai)| acc + ti * ai);
            let bound = -rest / &a[k];
            if a[k].is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l: Coeff| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u: Coeff| u.min(bound)));
            }
        }
        let two = Coeff::from_integer(2.into());
        let value = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / two,
            (Some(l), None) => l + Coeff::one(),
            (None, Some(u)) => u - Coeff::one(),
            (None, None) => Coeff::one(),
        };
        t.push(value);
    }
    Some(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl IdentityVerdict {
    fn equality(lhs: i64, rhs: i64) -> Self {
        IdentityVerdict {
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

/// Verdicts for the named identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Identities {
    /// `μ_BR(f,V) = μ(f) + μ_BR(f_V)`.
    #[serde(rename = "EQ3")]
    pub eq3: IdentityVerdict,
    /// `μ(f,V) = μ(f) + μ(f_V)`; definitional here.
    #[serde(rename = "EQ5")]
    pub eq5: IdentityVerdict,
    /// `μ_BR(f,V) = μ(f) + μ(f_V) + μ(V) - τ(V)`.
    #[serde(rename = "EQ6")]
    pub eq6: IdentityVerdict,
    /// `μ_G(f_V) = μ_BR(f_V) + τ(V)`.
    #[serde(rename = "LEM3")]
    pub lem3: IdentityVerdict,
    /// `μ_G(f_V) = μ(f_V) + μ(V)` with `μ(f_V)` from the determinantal ideal.
    #[serde(rename = "GRLE")]
    pub grle: IdentityVerdict,
    /// `μ_BR(f,V) = μ(f) + μ(f_V)` exactly when `μ(V) = τ(V)`.
    #[serde(rename = "COR1")]
    pub cor1: IdentityVerdict,
}

impl Identities {
    pub fn all_hold(&self) -> bool {
        self.iter().all(|(_, v)| v.holds)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &IdentityVerdict)> {
        [
            ("EQ3", &self.eq3),
            ("EQ5", &self.eq5),
            ("EQ6", &self.eq6),
            ("LEM3", &self.lem3),
            ("GRLE", &self.grle),
            ("COR1", &self.cor1),
        ]
        .into_iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct Invariants {
    pub mu_f: usize,
    pub mu_V: usize,
    pub tau_V: usize,
    /// `μ(V) - τ(V)`; negative values signal an engine bug.
    pub q_V: i64,
    pub mu_BR_pair: usize,
    pub mu_BR_rel: usize,
    pub mu_G: usize,
    pub mu_fV: i64,
    /// `μ(f) + μ(f_V)`, the topological Milnor number of the pair.
    pub mu_pair_topological: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub preconditions: PreconditionReport,
    pub invariants: Invariants,
    /// `dim O/((g) + I_2(Jac(g, f)))`, the determinantal side of Lê-Greuel.
    pub determinantal_dim: usize,
    pub identities: Identities,
    pub quasihomogeneous: Quasihomogeneity,
}

impl InvariantReport {
    pub fn all_identities_hold(&self) -> bool {
        self.identities.all_hold()
    }
}

/// Computes all invariants of `pair` and evaluates every identity.
///
/// Fails with [`Error::Precondition`] naming the first failed test when the
/// pair is not an isolated singularity in the required sense.
pub fn verify_theorem(pair: &GermPair) -> Result<InvariantReport> {
    let preconditions = check_preconditions(pair)?;
    if let Some(failed) = preconditions.first_failure() {
        return Err(Error::Precondition(failed.to_string()));
    }
    let (f, g) = (&pair.f, &pair.g);
    let n1 = f.nvars();

    let mu_f = finite(milnor_number(f)?, "Jacobian algebra of f")?;
    let mu_v = finite(milnor_number(g)?, "Jacobian algebra of g")?;
    let tau_v = finite(tjurina_number(g)?, "Tjurina algebra of g")?;
    let mu_br_pair = bruce_roberts(f, g)?;
    let mu_br_rel = module_colength(&ferrari_submodule(f, g)?, n1, "relative Bruce-Roberts module")?;
    let mu_g = module_colength(&greuel_submodule(f, g)?, n1, "Greuel module")?;
    let det = finite(ideal_dim(&determinantal_ideal(f, g))?, "determinantal algebra")?;
    let quasihomogeneous = is_quasihomogeneous(g)?;

    let (mu_f_i, mu_v_i, tau_i) = (mu_f as i64, mu_v as i64, tau_v as i64);
    let (br_i, rel_i, g_i, det_i) = (mu_br_pair as i64, mu_br_rel as i64, mu_g as i64, det as i64);
    let mu_fv = det_i - mu_v_i;
    let q_v = mu_v_i - tau_i;
    let mu_pair_topological = mu_f_i + mu_fv;

    let cor1_equal = br_i == mu_f_i + mu_fv;
    let identities = Identities {
        eq3: IdentityVerdict::equality(br_i, mu_f_i + rel_i),
        eq5: IdentityVerdict::equality(mu_pair_topological, mu_f_i + mu_fv),
        eq6: IdentityVerdict::equality(br_i, mu_f_i + mu_fv + mu_v_i - tau_i),
        lem3: IdentityVerdict::equality(g_i, rel_i + tau_i),
        grle: IdentityVerdict::equality(g_i, mu_fv + mu_v_i),
        cor1: IdentityVerdict {
            lhs: br_i,
            rhs: mu_f_i + mu_fv,
            holds: cor1_equal == quasihomogeneous.by_saito,
        },
    };

    Ok(InvariantReport {
        preconditions,
        invariants: Invariants {
            mu_f,
            mu_V: mu_v,
            tau_V: tau_v,
            q_V: q_v,
            mu_BR_pair: mu_br_pair,
            mu_BR_rel: mu_br_rel,
            mu_G: mu_g,
            mu_fV: mu_fv,
            mu_pair_topological,
        },
        determinantal_dim: det,
        identities,
        quasihomogeneous,
    })
}

/// Agreement of each reported dimension with the jet-truncation oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct OracleAgreement {
    pub mu_f: bool,
    pub mu_V: bool,
    pub tau_V: bool,
    pub mu_BR_pair: bool,
    pub mu_BR_rel: bool,
    pub mu_G: bool,
    pub mu_fV: bool,
}

impl OracleAgreement {
    pub fn all_agree(&self) -> bool {
        self.mu_f && self.mu_V && self.tau_V && self.mu_BR_pair && self.mu_BR_rel && self.mu_G && self.mu_fV
    }
}

fn oracle_ideal(gens: &[Poly], max_degree: u32) -> Option<usize> {
    let vs: Vec<ModVector> = gens.iter().cloned().map(ModVector::from_poly).collect();
    if vs.is_empty() {
        return None;
    }
    stable_jet_dim(&vs, 1, max_degree).ok()
}

/// Recomputes every dimension of `report` with the jet oracle.
pub fn oracle_check(pair: &GermPair, report: &InvariantReport, max_degree: u32) -> Result<OracleAgreement> {
    let (f, g) = (&pair.f, &pair.g);
    let n1 = f.nvars();
    let inv = &report.invariants;
    let mu_f = oracle_ideal(&jacobian_ideal(f), max_degree);
    let mu_v = oracle_ideal(&jacobian_ideal(g), max_degree);
    let tau_v = oracle_ideal(&tjurina_ideal(g), max_degree);
    let br = oracle_ideal(&jf_v(f, g)?, max_degree);
    let rel = stable_jet_dim(&ferrari_submodule(f, g)?, n1, max_degree).ok();
    let mu_g = stable_jet_dim(&greuel_submodule(f, g)?, n1, max_degree).ok();
    let det = oracle_ideal(&determinantal_ideal(f, g), max_degree);
    let mu_fv = match (det, mu_v) {
        (Some(d), Some(m)) => Some(d as i64 - m as i64),
        _ => None,
    };
    Ok(OracleAgreement {
        mu_f: mu_f == Some(inv.mu_f),
        mu_V: mu_v == Some(inv.mu_V),
        tau_V: tau_v == Some(inv.tau_V),
        mu_BR_pair: br == Some(inv.mu_BR_pair),
        mu_BR_rel: rel == Some(inv.mu_BR_rel),
        mu_G: mu_g == Some(inv.mu_G),
        mu_fV: mu_fv == Some(inv.mu_fV),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ctx()).unwrap()
    }

    fn pair(f: &str, g: &str) -> GermPair {
        GermPair::new(p(f), p(g)).unwrap()
    }

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(n.into(), d.into())
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_number(&p("x^2+y^2")).unwrap(), DimResult::Finite(1));
        assert_eq!(milnor_number(&p("x^3+y^3")).unwrap(), DimResult::Finite(4));
        assert_eq!(milnor_number(&p("x^2+y^3")).unwrap(), DimResult::Finite(2));
        assert_eq!(milnor_number(&p("x^2")).unwrap(), DimResult::Infinite);
        assert_eq!(milnor_number(&p("1+x^2")), Err(Error::NotAGerm { which: "f" }));
    }

    #[test]
    fn tjurina_examples() {
        assert_eq!(tjurina_number(&p("x^2+y^3")).unwrap(), DimResult::Finite(2));
        assert_eq!(tjurina_number(&p("x")).unwrap(), DimResult::Finite(0));
        assert_eq!(tjurina_number(&p("x^2+y^2")).unwrap(), DimResult::Finite(1));
    }

    #[test]
    fn le_greuel_examples() {
        assert_eq!(mu_fv_le_greuel(&p("x^2+y^2"), &p("x^2+y^3")).unwrap(), 3);
        assert_eq!(mu_fv_le_greuel(&p("x^2+y^3"), &p("x")).unwrap(), 2);
        assert_eq!(mu_fv_le_greuel(&p("x^2+y^2"), &p("x")).unwrap(), 1);
    }

    #[test]
    fn bruce_roberts_examples() {
        assert_eq!(bruce_roberts(&p("x^2+y^3"), &p("x")).unwrap(), 4);
        assert_eq!(bruce_roberts(&p("x^2+y^2"), &p("x^2+y^3")).unwrap(), 4);
        assert_eq!(bruce_roberts(&p("x^2+y^2"), &p("x")).unwrap(), 2);
    }

    #[test]
    fn precondition_examples() {
        let r = check_preconditions(&pair("x^2+y^3", "x")).unwrap();
        assert!(r.all_hold());
        let r = check_preconditions(&pair("x^2+y^2", "x*y")).unwrap();
        assert!(r.all_hold(), "{r:?}");
        let r = check_preconditions(&pair("x^2", "y")).unwrap();
        assert!(!r.f_isolated);
        assert_eq!(r.first_failure(), Some("f_isolated"));
        assert_eq!(GermPair::new(p("x"), p("1 + y")), Err(Error::NotAGerm { which: "g" }));
    }

    #[test]
    fn non_reduced_g_is_rejected() {
        let r = check_preconditions(&pair("x^2+y^2", "x^2")).unwrap();
        assert!(!r.g_isolated && !r.reduced_ok);
        assert_eq!(
            verify_theorem(&pair("x^2+y^2", "x^2")),
            Err(Error::Precondition("g_isolated".into()))
        );
    }

    #[test]
    fn quasihomogeneity_examples() {
        let qh = is_quasihomogeneous(&p("x^2+y^3")).unwrap();
        assert!(qh.by_saito);
        assert_eq!(qh.weights, Some(vec![q(1, 2), q(1, 3)]));
        let qh = is_quasihomogeneous(&p("x^2+y^2")).unwrap();
        assert_eq!(qh.weights, Some(vec![q(1, 2), q(1, 2)]));
        let qh = is_quasihomogeneous(&p("x^5+y^5+x^2*y^2")).unwrap();
        assert_eq!(qh.weights, None);
    }

    #[test]
    fn underdetermined_weight_system() {
        // x*y: w1 + w2 = 1 has many positive solutions.
        let qh = is_quasihomogeneous(&p("x*y")).unwrap();
        let w = qh.weights.unwrap();
        assert!(w.iter().all(Coeff::is_positive));
        assert_eq!(&w[0] + &w[1], Coeff::one());
        // support {x, x^2*y}: w1 = 1 forces w2 = -1
        let rows = vec![vec![q(1, 1), q(0, 1)], vec![q(2, 1), q(1, 1)]];
        assert_eq!(positive_weights(&rows, 2), None);
    }

    #[test]
    fn fourier_motzkin_in_three_free_variables() {
        // single row x*y*z: w1 + w2 + w3 = 1
        let rows = vec![vec![q(1, 1), q(1, 1), q(1, 1)]];
        let w = positive_weights(&rows, 3).unwrap();
        assert!(w.iter().all(Coeff::is_positive));
        assert_eq!(w.iter().fold(Coeff::zero(), |a, b| a + b), Coeff::one());
    }

    #[test]
    fn boundary_case_report() {
        let r = verify_theorem(&pair("x^2+y^3", "x")).unwrap();
        let i = r.invariants;
        assert_eq!(
            (i.mu_BR_pair, i.mu_f, i.mu_fV, i.mu_V, i.tau_V, i.q_V),
            (4, 2, 2, 0, 0, 0)
        );
        assert_eq!(
            r.identities.eq6,
            IdentityVerdict {
                lhs: 4,
                rhs: 4,
                holds: true
            }
        );
        assert!(r.all_identities_hold());
    }

    #[test]
    fn cusp_case_report() {
        let pr = pair("x^2+y^2", "x^2+y^3");
        let r = verify_theorem(&pr).unwrap();
        let i = r.invariants;
        assert_eq!(
            (i.mu_BR_pair, i.mu_f, i.mu_fV, i.mu_V, i.tau_V, i.q_V),
            (4, 1, 3, 2, 2, 0)
        );
        assert_eq!(
            r.identities.lem3,
            IdentityVerdict {
                lhs: 5,
                rhs: 5,
                holds: true
            }
        );
        assert!(r.all_identities_hold());
        assert!(oracle_check(&pr, &r, 24).unwrap().all_agree());
    }
}
