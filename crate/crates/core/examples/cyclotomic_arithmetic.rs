// Exact arithmetic in Q(ζ_n): cyclotomic polynomials, reduction of powers
// of ζ, inverses, and the vanishing sum of all n-th roots of unity.
//
//     cargo run --example cyclotomic_arithmetic

use secinv::cyclo::{cyclotomic_polynomial, CycloField};

fn run() -> secinv::Result<()> {
    for n in [3, 4, 6, 7, 12] {
        println!("Φ_{n} coefficients (low to high): {:?}", cyclotomic_polynomial(n));
    }
    let f = CycloField::get(7);
    let z = f.root_power(1);
    println!("ζ^7 = {}", f.root_power(7));
    println!("ζ^6 = {}", f.root_power(6));
    let sum = (0..7).fold(f.zero(), |acc, k| &acc + &f.root_power(k));
    println!("1 + ζ + ... + ζ^6 = {sum}");

    let x = &f.from_int(2) - &z;
    let inv = x.invert()?;
    println!("(2 - ζ)^-1 = {inv}");
    println!("(2 - ζ)(2 - ζ)^-1 = {}", &x * &inv);
    println!("JSON: {}", serde_json::to_string(&inv).expect("serializable"));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
