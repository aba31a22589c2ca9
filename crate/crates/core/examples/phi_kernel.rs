//! Builds `Φ^∨` both from the explicit formula and as the transpose of the
//! composite `Φ`, then compares its kernel with the image of `ε`.
//!
//!     cargo run --release --example phi_kernel -- 2 4

use instanton_ext2::exactla::{in_column_space, kernel_basis, rank};
use instanton_ext2::instanton_maps::{epsilon, phi, phi_dual_explicit};
use instanton_ext2::cohomology::ext2_dim_formula;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, k) = (*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&3));

    let explicit = phi_dual_explicit(k, n);
    let composite = phi(k, n).transpose();
    println!("Phi^v : {} -> {}", explicit.domain(), explicit.codomain());
    println!("        {}x{}, {} nonzeros", explicit.nrows(), explicit.ncols(), explicit.nnz());
    println!("explicit == transpose(Phi): {}", explicit == composite);

    let kernel = kernel_basis(&explicit);
    println!("rank {}, kernel dim {} (formula {})", rank(&explicit), kernel.len(), ext2_dim_formula(n, k));
    if let Ok(c) = explicit.kernel_character() {
        println!("kernel character: {}", c.decompose().unwrap());
    }

    let eps = epsilon(k, n);
    let all_in_image = kernel.iter().all(|v| in_column_space(&eps, v).unwrap().is_some());
    println!("epsilon: rank {} of {} columns; kernel inside its image: {all_in_image}", rank(&eps), eps.ncols());
}
