//! Exact polynomial arithmetic over ℚ: parsing, products, partial
//! derivatives and the local monomial order.

use singcheck::{parse_poly, LocalOrder, VarContext};

pub fn run() -> singcheck::Result<()> {
    let ctx = VarContext::new(["x", "y"])?;
    let f = parse_poly("x^2 + y^3", &ctx)?;
    let g = parse_poly("(x - y)^2 / 3", &ctx)?;

    println!("f       = {f}");
    println!("g       = {g}");
    println!("f * g   = {}", &f * &g);
    println!("f - g   = {}", &f - &g);
    println!("df/dx   = {}", f.partial(0)?);
    println!("df/dy   = {}", f.partial(1)?);

    // lower degree wins in the local order
    let (lead, c) = f.leading_term_local(LocalOrder::NegDegRevLex)?;
    println!("local lead of f: {c} * {:?}", lead.exps());

    match parse_poly("x^2 + z", &ctx) {
        Ok(p) => println!("unexpected: {p}"),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
