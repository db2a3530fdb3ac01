//! Milnor and Tjurina numbers, and the two quasihomogeneity tests.

use singcheck::invariants::{is_quasihomogeneous, milnor_number, tjurina_number};
use singcheck::{parse_poly, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    for text in ["x^2 + y^3", "x^3 + y^4", "x^5 + y^5 + x^2*y^2", "x^2"] {
        let g = parse_poly(text, &ctx)?;
        let mu = milnor_number(&g)?;
        let tau = tjurina_number(&g)?;
        print!(
            "{:<24} mu = {:<9} tau = {:<9}",
            g.to_string(),
            mu.to_string(),
            tau.to_string()
        );
        if mu.is_finite() {
            let q = is_quasihomogeneous(&g)?;
            let w = q
                .weights
                .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
                .unwrap_or_else(|| "none".into());
            print!(" quasihomogeneous: {} (weights {w})", q.by_saito);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
