//! Cross-checks a standard-basis colength with truncated linear algebra on
//! jets.

use singcheck::stdbasis::{jet_quotient_dim, stable_jet_dim, std_basis};
use singcheck::{parse_poly, ModVector, ModuleOrder, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let gens: Vec<ModVector> = ["3*x^2 + 2*y^2", "3*x*y^2 - 2*x*y"]
        .iter()
        .map(|s| Ok(ModVector::from_poly(parse_poly(s, &ctx)?)))
        .collect::<singcheck::Result<_>>()?;

    for d in 1..=5 {
        println!("dim O/(I + m^{}) = {}", d + 1, jet_quotient_dim(&gens, 1, d)?);
    }
    let oracle = stable_jet_dim(&gens, 1, 24)?;
    let engine = std_basis(&gens, 1, ModuleOrder::top())?.quotient_dim();
    println!("stable jet dimension {oracle}, standard basis {engine}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
