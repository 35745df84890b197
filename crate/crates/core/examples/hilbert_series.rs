// Molien series of a few groups, the secondary numerator obtained by
// clearing the denominator (1-z)(1-z^2)...(1-z^n), and a brute-force orbit
// count of monomials for comparison.
//
//     cargo run --example hilbert_series

use secinv::{catalog, series};

fn run() -> secinv::Result<()> {
    for spec in ["S4", "A4", "C4", "D4", "trivial3"] {
        let group = catalog::parse_group(spec)?;
        let h = series::hilbert_series(&group, 8)?;
        let prefix = h.to_naturals().unwrap_or_default();
        let brute: Vec<u64> = (0..=8)
            .map(|d| series::burnside_dimension(&group, d))
            .collect::<secinv::Result<_>>()?;
        let sec = series::secondary_spec(&group)?;
        println!("{spec:>8}: H = {prefix:?}");
        println!("{:>8}  orbits = {brute:?}", "");
        println!("{:>8}  numerator = {:?}, t = {}", "", sec.s, sec.t);
        assert_eq!(prefix, brute);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
