//! Builds the special monad for a random catalecticant and checks that it
//! is a complex and has full-rank fibers at sampled points.
//!
//!     cargo run --example monad_checks -- 2 3 42

use instanton_ext2::exactla::rank;
use instanton_ext2::instanton_maps::{
    monad_complex_check, sample_fibers, FiberSampling, MonadMatrices, MonadSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, k) = (*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&3));
    let seed = *args.get(2).unwrap_or(&42) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let spec = MonadSpec::random(n, k, &mut rng).expect("valid cell");
    let alpha: Vec<String> = spec.alpha().iter().map(ToString::to_string).collect();
    println!("alpha = [{}]", alpha.join(", "));

    let m = MonadMatrices::special(&spec);
    let (dim_a, dim_b, dim_c) = m.dims();
    println!("a: {}x{} rank {}", m.a.nrows(), m.a.ncols(), rank(&m.a));
    println!("b: {}x{} rank {}", m.b.nrows(), m.b.ncols(), rank(&m.b));
    println!("multiplicity spaces: dim A = {dim_a}, dim B = {dim_b}, dim C = {dim_c}");
    println!("b∘a = 0: {}", monad_complex_check(&m).unwrap());

    let report = sample_fibers(&m, FiberSampling::default(), &mut rng).unwrap();
    println!(
        "{} points: a full {}/{}, b full {}/{}, min ranks {} / {}",
        report.points,
        report.a_full,
        report.points,
        report.b_full,
        report.points,
        report.min_rank_a,
        report.min_rank_b
    );
    for d in &report.deficient {
        println!("  deficient: {d}");
    }
}
