//! JSON reports for several pairs evaluated in parallel, including one the
//! preconditions refuse.

use rayon::prelude::*;
use singcheck::invariants::GermPair;
use singcheck::report::PairReport;
use singcheck::{parse_poly, VarContext};

const PAIRS: &[(&str, &str, &str)] = &[
    ("x,y", "x^2 + y^3", "x"),
    ("x,y", "x^2 + y^2", "x^2 + y^2"),
    ("x,y,z", "x^2 + y^2 + z^2", "x*y + z^2"),
];

pub fn run() -> singcheck::Result<()> {
    let reports: Vec<PairReport> = PAIRS
        .par_iter()
        .map(|&(vars, f, g)| {
            let ctx = VarContext::parse_list(vars)?;
            let pair = GermPair::new(parse_poly(f, &ctx)?, parse_poly(g, &ctx)?)?;
            PairReport::evaluate(&pair, None)
        })
        .collect::<singcheck::Result<_>>()?;
    for r in &reports {
        println!("exit code {}:", r.exit_code());
        println!("{}", r.to_json());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> singcheck::Result<()> {
    run()
}
