//! Runs the full verification over a grid of cells in parallel and prints
//! a summary line per cell.
//!
//!     cargo run --release --example full_grid -- 3 6

use instanton_ext2::cli::{run_grid, AlphaSource, Format, RunConfig};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (max_n, max_k) = (*args.first().unwrap_or(&3), *args.get(1).unwrap_or(&6));

    let config = RunConfig {
        n: format!("1..{max_n}").parse().expect("span"),
        k: format!("2..{max_k}").parse().expect("span"),
        alpha: AlphaSource::Random,
        seed: 0,
        samples: 100,
        format: Format::Text,
        jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
        stable: false,
    };
    let reports = run_grid(&config).expect("grid runs");
    for r in &reports {
        println!(
            "n={} k={} {}  ext2 {}/{}  ext1 {}  euler {}  rank Phi {}  {} ms",
            r.n,
            r.k,
            if r.pass { "PASS" } else { "FAIL" },
            r.ext2_computed,
            r.ext2_formula,
            r.ext1_formula,
            r.euler,
            r.ranks.phi,
            r.elapsed_ms
        );
        for f in &r.failures {
            println!("    {f}");
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} cells, {failed} failed", reports.len());
}
