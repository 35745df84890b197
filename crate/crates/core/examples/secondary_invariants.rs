// Secondary invariants of a group given on the command line (default D5),
// with per-phase timings and per-degree counts.
//
//     cargo run --release --example secondary_invariants -- "4:(1 2)(3 4);(1 3)(2 4)"

use secinv::{catalog, engine};

fn run_for(spec: &str) -> secinv::Result<()> {
    let group = catalog::parse_group(spec)?;
    let result = engine::secondary_invariants(&group, &engine::Options::default())?;

    println!("{spec}: order {}, t = {}", group.order(), result.t());
    println!("numerator s_d = {:?}", result.spec.s);
    for (d, (s_d, i_d)) in result.secondaries.iter().zip(&result.irreducibles).enumerate() {
        if s_d.is_empty() {
            continue;
        }
        let irr: Vec<String> = i_d.iter().map(|i| format!("{:?}", i.monomial.0)).collect();
        println!(
            "degree {d:2}: {} secondaries, {} products tried, new irreducibles {}",
            s_d.len(),
            result.stats[d].products_tried,
            irr.join(" ")
        );
    }
    let t = &result.timings;
    println!(
        "closure {:?}, series {:?}, points {:?}, evaluation {:?}, elimination {:?}",
        t.closure, t.series, t.points, t.evaluation, t.elimination
    );
    Ok(())
}

fn run() -> secinv::Result<()> {
    run_for("D5")
}

fn main() {
    let outcome = match std::env::args().nth(1) {
        Some(spec) => run_for(&spec),
        None => run(),
    };
    if let Err(e) = outcome {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
