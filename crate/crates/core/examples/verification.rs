// Clause-by-clause verification of a computed result, then the same check
// after corrupting one evaluation vector.
//
//     cargo run --example verification

use secinv::{catalog, engine, evalpoints::EvalVector};

fn print_report(report: &engine::VerificationReport) {
    for c in &report.clauses {
        println!("  ({}) {}: {:?}", c.clause, c.description, c.status);
    }
}

fn run() -> secinv::Result<()> {
    let group = catalog::parse_group("C4")?;
    let mut result = engine::secondary_invariants(&group, &engine::Options::default())?;
    let report = engine::verify(&result, &group);
    println!("C4, t = {}:", result.t());
    print_report(&report);
    assert!(report.passed());

    let field = result.field();
    let width = result.points.len();
    result.secondaries[2][0].phi = EvalVector(vec![field.zero(); width]);
    let broken = engine::verify(&result, &group);
    println!("after zeroing one vector:");
    print_report(&broken);
    assert!(!broken.passed());
    match broken.into_result() {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
