//! Modules of differential n-forms on `(ℚ^{n+1}, 0)` realized inside `O^{n+1}`.
//!
//! An n-form is written `a = Σ a_i ω_i` with
//! `ω_i = (-1)^i dx_0 ∧ … ∧ dx_i^ ∧ … ∧ dx_n`, the contraction of the volume
//! form by `∂/∂x_i`. With this convention `dh ∧ a = (Σ a_i ∂h/∂x_i) · vol`,
//! so n-forms and vector fields share one coordinate vector, and the
//! quotients of interest become quotients of `O^{n+1}` by submodules:
//!
//! * `Ω^n(V) = dg ∧ Ω^{n-1} + g Ω^n`
//! * `Ω^n(V*) = { a : dg ∧ a ∈ g Ω^{n+1} }`, the image of `Θ(V)`
//! * Greuel's `Ω_{f_V} = Ω^n / (df ∧ Ω^{n-1} + Ω^n(V))`
//! * `Ω̃_{f_V} = Ω^n / (df ∧ Ω^{n-1} + Ω^n(V*))`

use crate::error::{Error, Result};
use crate::logder::{check_germ, theta_v};
use crate::poly::Poly;
use crate::stdbasis::{std_basis, DimResult, ModVector, ModuleOrder};

/// The contraction basis `ω_0, …, ω_n` of `Ω^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NFormBasis {
    pub nvars: usize,
}

impl NFormBasis {
    pub fn rank(self) -> usize {
        self.nvars
    }

    /// Sign of `ω_i` relative to `dx_0 ∧ … ∧ dx_i^ ∧ … ∧ dx_n`.
    pub fn sign(self, i: usize) -> i64 {
        if i.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Coefficient `c` in `dh ∧ a = c · vol`.
    pub fn wedge_coefficient(self, h: &Poly, a: &ModVector) -> Poly {
        crate::logder::apply_field(a, h)
    }
}

/// Minimal exterior algebra over `O`, used to pin down sign conventions.
pub mod exterior {
    use std::collections::BTreeMap;

    use super::NFormBasis;
    use crate::poly::{Coeff, Poly};
    use crate::stdbasis::ModVector;

    /// Differential form `Σ p_I dx_I`, keyed by strictly increasing index sets.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct Form {
        pub terms: BTreeMap<Vec<usize>, Poly>,
    }

    impl Form {
        pub fn zero() -> Self {
            Form { terms: BTreeMap::new() }
        }

        pub fn basis(indices: Vec<usize>, coeff: Poly) -> Self {
            debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
            let mut f = Form::zero();
            if !coeff.is_zero() {
                f.terms.insert(indices, coeff);
            }
            f
        }

        /// `dh = Σ ∂h/∂x_i dx_i`.
        pub fn differential(h: &Poly) -> Self {
            let mut f = Form::zero();
            for (i, d) in h.gradient().into_iter().enumerate() {
                if !d.is_zero() {
                    f.terms.insert(vec![i], d);
                }
            }
            f
        }

        pub fn volume(h: Poly) -> Self {
            let n = h.nvars();
            Form::basis((0..n).collect(), h)
        }

        /// `ω_i` scaled by `coeff`.
        pub fn omega(nvars: usize, i: usize, coeff: Poly) -> Self {
            let idx: Vec<usize> = (0..nvars).filter(|&k| k != i).collect();
            let sign = NFormBasis { nvars }.sign(i);
            Form::basis(idx, coeff.scale(&Coeff::from_integer(sign.into())))
        }

        /// `Σ a_i ω_i`.
        pub fn from_nform_coords(a: &ModVector) -> Self {
            let n = a.rank();
            let mut out = Form::zero();
            for (i, ai) in a.entries().iter().enumerate() {
                out = out.add(&Form::omega(n, i, ai.clone()));
            }
            out
        }

        /// Inverse of [`Form::from_nform_coords`] on n-forms.
        pub fn to_nform_coords(&self, ctx: &std::sync::Arc<crate::poly::VarContext>) -> ModVector {
            let n = ctx.len();
            let entries = (0..n)
                .map(|i| {
                    let idx: Vec<usize> = (0..n).filter(|&k| k != i).collect();
                    let sign = NFormBasis { nvars: n }.sign(i);
                    self.terms
                        .get(&idx)
                        .map_or_else(|| Poly::zero(ctx), |p| p.scale(&Coeff::from_integer(sign.into())))
                })
                .collect();
            ModVector::new(entries).expect("shared context")
        }

        pub fn add(&self, other: &Form) -> Form {
            let mut out = self.clone();
            for (k, p) in &other.terms {
                let sum = match out.terms.get(k) {
                    Some(q) => q + p,
                    None => p.clone(),
                };
                if sum.is_zero() {
                    out.terms.remove(k);
                } else {
                    out.terms.insert(k.clone(), sum);
                }
            }
            out
        }

        pub fn wedge(&self, other: &Form) -> Form {
            let mut out = Form::zero();
            for (i, p) in &self.terms {
                for (j, q) in &other.terms {
                    if i.iter().any(|a| j.contains(a)) {
                        continue;
                    }
                    let inversions = i.iter().map(|a| j.iter().filter(|b| *b < a).count()).sum::<usize>();
                    let mut idx: Vec<usize> = i.iter().chain(j).copied().collect();
                    idx.sort_unstable();
                    let mut coeff = p * q;
                    if inversions % 2 == 1 {
                        coeff = -&coeff;
                    }
                    out = out.add(&Form::basis(idx, coeff));
                }
            }
            out
        }
    }
}

/// Which submodule of `Ω^n` a [`FormSubmodule`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormTag {
    /// `Ω^n(V*)`, forms whose restriction to the smooth part of `V` vanishes.
    OmegaNVStar,
    /// `Ω^n(V) = dg ∧ Ω^{n-1} + g Ω^n`.
    OmegaNV,
    /// An image `dh ∧ Ω^{n-1}`.
    WedgeDf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSubmodule {
    pub generators: Vec<ModVector>,
    pub tag: FormTag,
}

/// Generators `∂_i h · ω_j - ∂_j h · ω_i` (i < j) of `dh ∧ Ω^{n-1}`.
pub fn koszul_wedge_generators(h: &Poly) -> Vec<ModVector> {
    let n = h.nvars();
    let grad = h.gradient();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut entries = vec![Poly::zero(h.context()); n];
            entries[j] = grad[i].clone();
            entries[i] = -&grad[j];
            let v = ModVector::new(entries).expect("shared context");
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

fn g_times_omegas(g: &Poly) -> Vec<ModVector> {
    (0..g.nvars())
        .map(|k| ModVector::single(g.nvars(), k, g.clone()))
        .collect()
}

pub fn omega_n_v(g: &Poly) -> Result<FormSubmodule> {
    check_germ(g, "g")?;
    let mut generators = koszul_wedge_generators(g);
    generators.extend(g_times_omegas(g));
    Ok(FormSubmodule {
        generators,
        tag: FormTag::OmegaNV,
    })
}

/// `Ω^n(V*)` as the image of `Θ(V)` under `X ↦ X ⌟ vol`.
pub fn omega_n_vstar(g: &Poly) -> Result<FormSubmodule> {
    let generators = theta_v(g)?.into_iter().map(|x| x.coefficients).collect();
    Ok(FormSubmodule {
        generators,
        tag: FormTag::OmegaNVStar,
    })
}

/// Generators of `df ∧ Ω^{n-1} + Ω^n(V)` (Greuel's module for `f_V`).
pub fn greuel_submodule(f: &Poly, g: &Poly) -> Result<Vec<ModVector>> {
    if !f.same_context(g) {
        return Err(Error::ContextMismatch);
    }
    let mut gens = koszul_wedge_generators(f);
    gens.extend(omega_n_v(g)?.generators);
    Ok(gens)
}

/// Generators of `df ∧ Ω^{n-1} + Ω^n(V*)`.
pub fn ferrari_submodule(f: &Poly, g: &Poly) -> Result<Vec<ModVector>> {
    if !f.same_context(g) {
        return Err(Error::ContextMismatch);
    }
    let mut gens = koszul_wedge_generators(f);
    gens.extend(omega_n_vstar(g)?.generators);
    Ok(gens)
}

pub(crate) fn module_colength(gens: &[ModVector], rank: usize, what: &str) -> Result<usize> {
    match std_basis(gens, rank, ModuleOrder::top())?.quotient_dim() {
        DimResult::Finite(n) => Ok(n),
        DimResult::Infinite => Err(Error::Precondition(format!("{what} has infinite dimension"))),
    }
}

/// `μ_G(f_V) = dim Ω^n / (df ∧ Ω^{n-1} + dg ∧ Ω^{n-1} + g Ω^n)`.
pub fn mu_g(f: &Poly, g: &Poly) -> Result<usize> {
    module_colength(&greuel_submodule(f, g)?, f.nvars(), "Greuel module")
}

/// `μ_BR(f_V) = dim Ω^n / (df ∧ Ω^{n-1} + Ω^n(V*))`.
pub fn mu_br_rel(f: &Poly, g: &Poly) -> Result<usize> {
    module_colength(&ferrari_submodule(f, g)?, f.nvars(), "relative Bruce-Roberts module")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::exterior::Form;
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::VarContext;
    use crate::stdbasis::stable_jet_dim;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ctx()).unwrap()
    }

    fn mv(s: &[&str]) -> ModVector {
        ModVector::new(s.iter().map(|t| p(t)).collect()).unwrap()
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_wedge_generators(&p("x")), vec![mv(&["0", "1"])]);
        assert_eq!(koszul_wedge_generators(&p("x^2 + y^3")), vec![mv(&["-3*y^2", "2*x"])]);
        assert!(koszul_wedge_generators(&p("7")).is_empty());
    }

    #[test]
    fn omega_n_v_examples() {
        assert_eq!(
            omega_n_v(&p("x")).unwrap().generators,
            vec![mv(&["0", "1"]), mv(&["x", "0"]), mv(&["0", "x"])]
        );
        assert_eq!(
            omega_n_v(&p("x^2+y^3")).unwrap().generators,
            vec![mv(&["-3*y^2", "2*x"]), mv(&["x^2+y^3", "0"]), mv(&["0", "x^2+y^3"])]
        );
    }

    #[test]
    fn omega_n_vstar_examples() {
        let gens = omega_n_vstar(&p("x")).unwrap().generators;
        let sb = std_basis(&gens, 2, ModuleOrder::top()).unwrap();
        assert!(sb.contains(&mv(&["x", "0"])).unwrap());
        assert!(sb.contains(&mv(&["0", "1"])).unwrap());

        let g = p("x^2+y^3");
        let star = omega_n_vstar(&g).unwrap();
        let sb = std_basis(&star.generators, 2, ModuleOrder::top()).unwrap();
        assert!(sb.contains(&mv(&["3*x", "2*y"])).unwrap());
        assert!(sb.contains(&mv(&["3*y^2", "-2*x"])).unwrap());
        // dg ∧ a ∈ g · vol for every generator
        let g_ideal = crate::stdbasis::ideal_std_basis(std::slice::from_ref(&g)).unwrap();
        for a in &star.generators {
            let c = NFormBasis { nvars: 2 }.wedge_coefficient(&g, a);
            assert!(g_ideal.contains(&ModVector::from_poly(c)).unwrap());
        }
    }

    #[test]
    fn omega_v_inside_omega_vstar() {
        for g in ["x", "x^2+y^3", "x^2+y^2", "x^3+y^4+x^2*y^2"] {
            let g = p(g);
            let star = std_basis(&omega_n_vstar(&g).unwrap().generators, 2, ModuleOrder::top()).unwrap();
            for a in omega_n_v(&g).unwrap().generators {
                assert!(star.contains(&a).unwrap(), "{a:?} not in Ω^n(V*) for {g}");
            }
        }
    }

    #[test]
    fn wedge_identity_for_contraction_basis() {
        let c3 = VarContext::new(["x", "y", "z"]).unwrap();
        let h = parse_poly("x^2*y + z^3 - y*z", &c3).unwrap();
        let a = ModVector::new(vec![
            parse_poly("y", &c3).unwrap(),
            parse_poly("1 + x*z", &c3).unwrap(),
            parse_poly("-2*x^2", &c3).unwrap(),
        ])
        .unwrap();
        let lhs = Form::differential(&h).wedge(&Form::from_nform_coords(&a));
        let rhs = Form::volume(NFormBasis { nvars: 3 }.wedge_coefficient(&h, &a));
        assert_eq!(lhs, rhs);
        assert_eq!(Form::from_nform_coords(&a).to_nform_coords(&c3), a);
    }

    #[test]
    fn koszul_generators_span_dh_wedge_forms() {
        // In three variables, dh ∧ dx_k are exactly ± the Koszul generators.
        let c3 = VarContext::new(["x", "y", "z"]).unwrap();
        let h = parse_poly("x^3 + y^2*z + z^4", &c3).unwrap();
        let kos = koszul_wedge_generators(&h);
        let dh = Form::differential(&h);
        for k in 0..3 {
            let img = dh.wedge(&Form::basis(vec![k], Poly::one(&c3))).to_nform_coords(&c3);
            assert!(kos.contains(&img) || kos.contains(&img.neg()), "dh ∧ dx_{k} missing");
        }
    }

    #[test]
    fn mu_g_examples() {
        assert_eq!(mu_g(&p("x^2+y^2"), &p("x^2+y^3")).unwrap(), 5);
        assert_eq!(mu_g(&p("x^2+y^3"), &p("x")).unwrap(), 2);
        assert_eq!(mu_g(&p("x^2+y^2"), &p("x")).unwrap(), 1);
    }

    #[test]
    fn mu_br_rel_examples() {
        assert_eq!(mu_br_rel(&p("x^2+y^3"), &p("x")).unwrap(), 2);
        assert_eq!(mu_br_rel(&p("x^2+y^2"), &p("x^2+y^3")).unwrap(), 3);
        assert_eq!(mu_br_rel(&p("x^2+y^2"), &p("x")).unwrap(), 1);
    }

    #[test]
    fn module_dims_match_jet_oracle() {
        for (f, g, greuel, ferrari) in [
            ("x^2+y^2", "x^2+y^3", 5, 3),
            ("x^2+y^3", "x", 2, 2),
            ("x^2+y^2", "x", 1, 1),
        ] {
            let (f, g) = (p(f), p(g));
            assert_eq!(
                stable_jet_dim(&greuel_submodule(&f, &g).unwrap(), 2, 24).unwrap(),
                greuel
            );
            assert_eq!(
                stable_jet_dim(&ferrari_submodule(&f, &g).unwrap(), 2, 24).unwrap(),
                ferrari
            );
        }
    }

    #[test]
    fn flipping_one_basis_sign_keeps_dimensions() {
        let (f, g) = (p("x^2+y^2"), p("x^2+y^3"));
        let flip = |vs: Vec<ModVector>| -> Vec<ModVector> {
            vs.into_iter()
                .map(|v| {
                    let mut e = v.into_entries();
                    e[1] = -&e[1];
                    ModVector::new(e).unwrap()
                })
                .collect()
        };
        let greuel = flip(greuel_submodule(&f, &g).unwrap());
        let ferrari = flip(ferrari_submodule(&f, &g).unwrap());
        assert_eq!(module_colength(&greuel, 2, "flipped").unwrap(), 5);
        assert_eq!(module_colength(&ferrari, 2, "flipped").unwrap(), 3);
    }

    #[test]
    fn infinite_module_is_a_precondition_failure() {
        // f = x^2 vanishes identically on V = {x = 0}.
        assert!(matches!(mu_g(&p("x^2"), &p("x")), Err(Error::Precondition(_))));
    }
}
