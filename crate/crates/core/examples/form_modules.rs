//! Modules of top-degree forms attached to a function on a hypersurface,
//! and the colengths built from them.

use singcheck::forms::{greuel_submodule, mu_br_rel, mu_g, omega_n_v, omega_n_vstar};
use singcheck::invariants::mu_fv_le_greuel;
use singcheck::{parse_poly, ModVector, VarContext};

fn show(v: &ModVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let f = parse_poly("x^2 + y^2", &ctx)?;
    let g = parse_poly("x^2 + y^3", &ctx)?;

    // with two variables the forms in question are 1-forms, written in dx, dy
    println!("forms vanishing on the smooth part of V:");
    for v in omega_n_vstar(&g)?.generators {
        println!("  {}", show(&v));
    }
    println!("dg ^ forms + g * forms:");
    for v in omega_n_v(&g)?.generators {
        println!("  {}", show(&v));
    }
    println!("Greuel module has {} generators", greuel_submodule(&f, &g)?.len());
    println!("mu_G(f_V)  = {}", mu_g(&f, &g)?);
    println!("mu_BR(f_V) = {}", mu_br_rel(&f, &g)?);
    println!("mu(f_V)    = {}", mu_fv_le_greuel(&f, &g)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
