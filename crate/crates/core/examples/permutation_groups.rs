// Group specifications in their three accepted forms, closure by
// generators, cycle types and orbits of exponent vectors.
//
//     cargo run --example permutation_groups

use secinv::catalog;

fn run() -> secinv::Result<()> {
    for spec in [
        "S5",
        "A5",
        "D6",
        "4:(1 2)(3 4);(1 3)(2 4)",
        r#"{"degree":4,"generators":[[[1,2,3,4]]]}"#,
    ] {
        let g = catalog::parse_group(spec)?;
        let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
        println!("{spec}: order {}, generators {}", g.order(), gens.join(" "));
    }

    let g = catalog::parse_group("C4")?;
    for p in g.elements() {
        println!("  {p} cycle type {:?}", p.cycle_type());
    }
    let orbit = g.orbit_of_vector(&[2u32, 1, 0, 0])?;
    println!("C4-orbit of (2,1,0,0): {orbit:?}");

    match catalog::parse_group("(1 2 1)") {
        Err(e) => println!("rejected: {e}"),
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
