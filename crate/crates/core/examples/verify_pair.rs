//! Every invariant of a pair (f, V) and the identities relating them, with
//! the jet oracle as an independent check.

use singcheck::invariants::{oracle_check, verify_theorem, GermPair};
use singcheck::{parse_poly, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let pair = GermPair::new(parse_poly("x^2 + y^3", &ctx)?, parse_poly("x^5 + y^5 + x^2*y^2", &ctx)?)?;
    let report = verify_theorem(&pair)?;
    let i = report.invariants;

    println!("f = {}, g = {}", pair.f, pair.g);
    println!(
        "mu(f) = {}  mu(V) = {}  tau(V) = {}  q(V) = {}",
        i.mu_f, i.mu_V, i.tau_V, i.q_V
    );
    println!("mu_BR(f,V) = {}  mu(f_V) = {}", i.mu_BR_pair, i.mu_fV);
    for (name, v) in report.identities.iter() {
        println!(
            "{name:<5} {} = {}  {}",
            v.lhs,
            v.rhs,
            if v.holds { "holds" } else { "FAILS" }
        );
    }
    let oracle = oracle_check(&pair, &report, 24)?;
    println!("jet oracle agrees: {}", oracle.all_agree());
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
