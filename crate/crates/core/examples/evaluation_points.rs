// Evaluation points for the dihedral group D4: one permutation of
// (1, ζ, ζ², ζ³) per coset, and the images of the elementary symmetric
// polynomials, which vanish except for e_n.
//
//     cargo run --example evaluation_points

use secinv::{catalog, cyclo::CycloField, evalpoints};

fn run() -> secinv::Result<()> {
    let group = catalog::parse_group("D4")?;
    let field = CycloField::get(4);
    let points = evalpoints::build_point_set(&group, field)?;
    println!("{} points for |G| = {}", points.len(), group.order());
    for p in points.points() {
        println!("  ζ^{:?}", p.0);
    }
    for i in 1..=4 {
        let v = evalpoints::eval_elementary(i, &points)?;
        let shown: Vec<String> = v.entries().iter().map(ToString::to_string).collect();
        println!("Φ(e{i}) = ({})", shown.join(", "));
    }
    println!("epsilon = {}", evalpoints::epsilon(4));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
