//! Chern series of the monad compared with the instanton's `(1 - h²)^{-k}`, plus the dimension formulas for a small grid.
//!
//!     cargo run --example chern_series

use instanton_ext2::cohomology::{
    chern_check, chern_series, euler_formula, ext1_dim_formula, ext2_dim_formula,
    instanton_chern_series,
};

fn main() {
    for (n, k) in [(1, 2), (2, 3), (3, 4)] {
        println!("n={n} k={k}");
        println!("  monad     = {}", chern_series(n, k));
        println!("  expected  = {}", instanton_chern_series(n, k));
        println!("  agree: {}", chern_check(n, k));
    }

    println!("\n n  k  ext1  ext2  euler");
    for n in 1..=3 {
        for k in 2..=6 {
            println!(
                "{n:>2} {k:>2} {:>5} {:>5} {:>6}",
                ext1_dim_formula(n, k),
                ext2_dim_formula(n, k),
                euler_formula(n, k)
            );
        }
    }
}
