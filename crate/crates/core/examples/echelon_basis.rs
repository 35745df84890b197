// Incremental reduced echelon form over Q(ζ_3): inserting vectors, testing
// membership, and copying a basis before extending it.
//
//     cargo run --example echelon_basis

use secinv::{cyclo::CycloField, evalpoints::EvalVector, exactla::EchelonBasis};

fn run() -> secinv::Result<()> {
    let f = CycloField::get(3);
    let z = f.root_power(1);
    let v1 = EvalVector(vec![f.one(), z.clone(), &z * &z]);
    let v2 = EvalVector(vec![f.one(), &z * &z, z.clone()]);
    let sum = EvalVector(v1.entries().iter().zip(v2.entries()).map(|(a, b)| a + b).collect());

    let mut basis = EchelonBasis::new(f, 3);
    println!("insert v1: {}", basis.insert(&v1)?);
    let mut wider = basis.clone();
    println!("insert v2: {}", wider.insert(&v2)?);
    println!("insert v1 + v2: {}", wider.insert(&sum)?);
    println!("original dimension {}, copy dimension {}", basis.dimension(), wider.dimension());
    for (row, p) in wider.rows().iter().zip(wider.pivots()) {
        let shown: Vec<String> = row.entries().iter().map(ToString::to_string).collect();
        println!("  pivot {p}: ({})", shown.join(", "));
    }
    let residual = basis.reduce(&v2)?;
    println!("v2 reduced by the original: zero = {}", residual.is_zero());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
