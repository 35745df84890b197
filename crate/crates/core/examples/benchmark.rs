// Times the computation over the built-in catalog up to a given degree
// (default 5) and prints the same CSV as `secinv bench`.
//
//     cargo run --release --example benchmark -- 7

use std::time::Instant;

use secinv::{catalog, engine};

fn run_up_to(max_n: usize) -> secinv::Result<()> {
    println!("name,n,order,t,seconds,peak_candidates");
    for (name, group) in catalog::catalog_up_to(max_n)? {
        let clock = Instant::now();
        let result = engine::secondary_invariants(&group, &engine::Options::default())?;
        println!(
            "{name},{},{},{},{:.6},{}",
            group.degree(),
            group.order(),
            result.t(),
            clock.elapsed().as_secs_f64(),
            result.peak_candidates()
        );
    }
    Ok(())
}

fn run() -> secinv::Result<()> {
    run_up_to(5)
}

fn main() {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok());
    if let Err(e) = max_n.map_or_else(run, run_up_to) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
