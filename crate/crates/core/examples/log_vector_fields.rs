//! Vector fields tangent to a hypersurface and the Bruce-Roberts ideal
//! they generate.

use singcheck::logder::{jf_v, theta_v};
use singcheck::{parse_poly, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let g = parse_poly("x^2 + y^3", &ctx)?;
    println!("vector fields X with X(g) = a * g for g = {g}:");
    for field in theta_v(&g)? {
        let parts: Vec<String> = field.coefficients.entries().iter().map(ToString::to_string).collect();
        println!(
            "  ({})   a = {}   tangent: {}",
            parts.join(", "),
            field.cofactor,
            field.is_tangent_to(&g)
        );
    }

    let f = parse_poly("x^2 + y^2", &ctx)?;
    let ideal: Vec<String> = jf_v(&f, &g)?.iter().map(ToString::to_string).collect();
    println!("df(Theta_V) for f = {f}: ({})", ideal.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
