//! Standard bases over the local ring, colengths, membership and Mora's
//! weak normal form.

use singcheck::stdbasis::{mora_normal_form_with_unit, std_basis};
use singcheck::{parse_poly, ModVector, ModuleOrder, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let ideal = |gens: &[&str]| -> singcheck::Result<Vec<ModVector>> {
        gens.iter()
            .map(|s| Ok(ModVector::from_poly(parse_poly(s, &ctx)?)))
            .collect()
    };

    let gens = ideal(&["x^2 + y^3", "x*y"])?;
    let sb = std_basis(&gens, 1, ModuleOrder::top())?;
    println!("standard basis of (x^2 + y^3, xy):");
    for g in sb.generators() {
        println!("  {}", g.entries()[0]);
    }
    println!("colength: {}", sb.quotient_dim());

    // y * (1 + x) is y times a unit, so the ideal is (y) in the local ring
    let sb = std_basis(&ideal(&["y + x*y"])?, 1, ModuleOrder::top())?;
    let y = ModVector::from_poly(parse_poly("y", &ctx)?);
    println!("y in (y + xy): {}", sb.contains(&y)?);
    println!("colength of (y + xy): {}", sb.quotient_dim());

    let nf = mora_normal_form_with_unit(&y, &ideal(&["y + x*y"])?, ModuleOrder::top())?;
    println!(
        "weak normal form of y: {}  (unit {})",
        nf.remainder.entries()[0],
        nf.unit
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
