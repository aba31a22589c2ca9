//! Clebsch–Gordan maps `S_{k-1} ⊗ S_n → S_{k-1+n}` and their twisted
//! variants, with ranks and a few sample entries.
//!
//!     cargo run --example clebsch_gordan -- 3 2

use instanton_ext2::exactla::rank;
use instanton_ext2::rep::{cg_beta, cg_beta_twisted, cg_mu, cg_mu_twisted};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (k, n) = (*args.first().unwrap_or(&3), *args.get(1).unwrap_or(&2));

    for (name, m) in [
        ("beta", cg_beta(k, n)),
        ("mu", cg_mu(k, n)),
        ("beta twisted", cg_beta_twisted(k, n)),
        ("mu twisted", cg_mu_twisted(k, n)),
    ] {
        println!(
            "{name:>13}: {} -> {}  ({}x{}, rank {}, {} nonzeros)",
            m.domain(),
            m.codomain(),
            m.nrows(),
            m.ncols(),
            rank(&m),
            m.nnz()
        );
    }

    let b = cg_beta(k, n);
    println!("\nfirst column of beta:");
    for (r, c, v) in b.entries().filter(|&(_, c, _)| c == 0) {
        println!("  [{r},{c}] = {v}");
    }
}
