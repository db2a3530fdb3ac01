//! Serializable reports for a single pair: the full verification result, or
//! a refusal naming the failed precondition.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{
    check_preconditions, oracle_check, verify_theorem, GermPair, Identities, InvariantReport, Invariants,
    OracleAgreement, PreconditionReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasihomogeneousJson {
    pub by_saito: bool,
    /// Weights as reduced fractions, e.g. `"1/2"`.
    pub weights: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifiedReport {
    pub vars: Vec<String>,
    pub f: String,
    pub g: String,
    pub preconditions: PreconditionReport,
    pub invariants: Invariants,
    pub identities: Identities,
    pub quasihomogeneous: QuasihomogeneousJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<OracleAgreement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefusalReport {
    pub vars: Vec<String>,
    pub f: String,
    pub g: String,
    pub preconditions: PreconditionReport,
    pub refused: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PairReport {
    Verified(VerifiedReport),
    Refused(RefusalReport),
}

fn header(pair: &GermPair) -> (Vec<String>, String, String) {
    (pair.context().names().to_vec(), pair.f.to_string(), pair.g.to_string())
}

impl VerifiedReport {
    pub fn new(pair: &GermPair, report: &InvariantReport, oracle: Option<OracleAgreement>) -> Self {
        let (vars, f, g) = header(pair);
        VerifiedReport {
            vars,
            f,
            g,
            preconditions: report.preconditions,
            invariants: report.invariants,
            identities: report.identities,
            quasihomogeneous: QuasihomogeneousJson {
                by_saito: report.quasihomogeneous.by_saito,
                weights: report
                    .quasihomogeneous
                    .weights
                    .as_ref()
                    .map(|w| w.iter().map(ToString::to_string).collect()),
            },
            oracle_agrees: oracle,
        }
    }

    /// Identities all hold and, if the oracle ran, it agrees everywhere.
    pub fn is_consistent(&self) -> bool {
        self.identities.all_hold() && self.oracle_agrees.is_none_or(|o| o.all_agree())
    }
}

impl PairReport {
    /// Runs the preconditions and, when they pass, the full verification.
    /// `oracle_degree` enables the jet-oracle cross-check.
    pub fn evaluate(pair: &GermPair, oracle_degree: Option<u32>) -> Result<Self> {
        let pre = check_preconditions(pair)?;
        if let Some(failed) = pre.first_failure() {
            let (vars, f, g) = header(pair);
            return Ok(PairReport::Refused(RefusalReport {
                vars,
                f,
                g,
                preconditions: pre,
                refused: failed,
            }));
        }
        let report = verify_theorem(pair)?;
        let oracle = oracle_degree.map(|d| oracle_check(pair, &report, d)).transpose()?;
        Ok(PairReport::Verified(VerifiedReport::new(pair, &report, oracle)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Process exit status: 0 verified, 1 refused, 3 inconsistent.
    pub fn exit_code(&self) -> i32 {
        match self {
            PairReport::Verified(v) if v.is_consistent() => 0,
            PairReport::Verified(_) => 3,
            PairReport::Refused(_) => 1,
        }
    }
}

/// Exit status for an error raised before a report exists.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) => 1,
        Error::Inconsistency(_) | Error::OracleIndeterminate { .. } | Error::InfiniteDimension { .. } => 3,
        _ => 2,
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl fmt::Display for PairReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self {
            PairReport::Refused(r) => {
                writeln!(s, "f = {}    g = {}    vars = {}", r.f, r.g, r.vars.join(","))?;
                writeln!(s, "refused: precondition {} does not hold", r.refused)?;
            }
            PairReport::Verified(r) => {
                let i = &r.invariants;
                writeln!(s, "f = {}    g = {}    vars = {}", r.f, r.g, r.vars.join(","))?;
                writeln!(s, "mu(f)          = {}", i.mu_f)?;
                writeln!(s, "mu(V)          = {}", i.mu_V)?;
                writeln!(s, "tau(V)         = {}", i.tau_V)?;
                writeln!(s, "q(V)           = {}", i.q_V)?;
                writeln!(s, "mu_BR(f,V)     = {}", i.mu_BR_pair)?;
                writeln!(s, "mu_BR(f_V)     = {}", i.mu_BR_rel)?;
                writeln!(s, "mu_G(f_V)      = {}", i.mu_G)?;
                writeln!(s, "mu(f_V)        = {}", i.mu_fV)?;
                writeln!(s, "mu(f,V)        = {}  (mu(f) + mu(f_V))", i.mu_pair_topological)?;
                for (name, v) in r.identities.iter() {
                    writeln!(s, "{name:<5} {:>4} vs {:<4} {}", v.lhs, v.rhs, mark(v.holds))?;
                }
                let weights = match &r.quasihomogeneous.weights {
                    Some(w) => format!("({})", w.join(", ")),
                    None => "none".into(),
                };
                writeln!(
                    s,
                    "quasihomogeneous: {} (weights {weights})",
                    r.quasihomogeneous.by_saito
                )?;
                if let Some(o) = &r.oracle_agrees {
                    writeln!(s, "oracle: {}", mark(o.all_agree()))?;
                }
            }
        }
        out.write_str(&s)
    }
}
