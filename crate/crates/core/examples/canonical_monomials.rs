// Canonical (lex-maximal) orbit representatives under the staircase, the
// counts C(G) and C'(G), and the candidate lists the engine draws from.
//
//     cargo run --example canonical_monomials

use secinv::{catalog, monomials};

fn run() -> secinv::Result<()> {
    for spec in ["C4", "D4", "A4", "trivial4"] {
        let group = catalog::parse_group(spec)?;
        let counts = monomials::count_canonical(&group);
        println!(
            "{spec:>8}: per degree {:?}, C = {}, C' = {}, n!/|G| = {}",
            counts.per_degree,
            counts.c,
            counts.c_prime,
            group.index_in_symmetric()
        );
    }
    let group = catalog::parse_group("C4")?;
    for d in 0..=6 {
        let cands: Vec<Vec<u32>> = monomials::candidates_of_degree(&group, d, false)
            .into_iter()
            .map(|m| m.0)
            .collect();
        println!("C4 degree {d}: {cands:?}");
    }
    let m = monomials::Monomial::new(vec![0, 1, 2, 0]);
    println!(
        "canonical form of {:?} under C4: {:?}",
        m.0,
        monomials::canonical_representative(&group, &m).0
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
