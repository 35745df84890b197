// The alternating group A3 from start to finish: Hilbert series, the two
// evaluation points, the orbit sum of x1^2 x2 and the resulting secondary
// invariants 1 and O(2,1,0).
//
//     cargo run --example a3_worked_example

use secinv::{catalog, engine, evalpoints, monomials::Monomial};

fn run() -> secinv::Result<()> {
    let group = catalog::parse_group("A3")?;
    let result = engine::secondary_invariants(&group, &engine::Options::default())?;

    println!("|G| = {}, t = n!/|G| = {}", group.order(), result.t());
    println!("secondary numerator: {:?}", result.spec.s);
    for p in result.points.points() {
        println!("point: exponents {:?}", p.0);
    }

    let orbit_sum = evalpoints::eval_orbitsum(&group, &Monomial::new(vec![2, 1, 0]), &result.points)?;
    let phi: Vec<String> = orbit_sum.entries().iter().map(ToString::to_string).collect();
    println!("Φ(O(2,1,0)) = ({})", phi.join(", "));

    let e3 = evalpoints::eval_elementary(3, &result.points)?;
    let e1 = evalpoints::eval_elementary(1, &result.points)?;
    println!("Φ(e3) is constant {}, Φ(e1) is zero: {}", e3.entries()[0], e1.is_zero());

    for s in result.all_secondaries() {
        let poly = result.expand(s, &group)?;
        let terms: Vec<String> = poly.iter().map(|(m, c)| format!("{c}·x^{:?}", m.0)).collect();
        println!("degree {}: {}", s.degree, terms.join(" + "));
    }

    let report = engine::verify(&result, &group);
    println!("verification passed: {}", report.passed());
    assert!(report.passed());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
