//! Reduces each kernel vector of `Φ^∨` modulo the image of `ε`, printing the
//! leading-term steps of the certificate.
//!
//!     cargo run --example reduction -- 2 4

use instanton_ext2::exactla::kernel_basis;
use num_traits::Zero;
use instanton_ext2::instanton_maps::{check_leading_term, phi_dual_explicit, reduce_mod_epsilon};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, k) = (*args.first().unwrap_or(&2), *args.get(1).unwrap_or(&3));

    for (i, xi) in kernel_basis(&phi_dual_explicit(k, n)).iter().enumerate() {
        let lead = check_leading_term(k, n, xi).unwrap();
        println!("kernel vector {i}: leading term {}", lead.map_or("none".into(), |c| c.to_string()));
        match reduce_mod_epsilon(k, n, xi) {
            Ok(cert) => {
                for step in &cert.steps {
                    println!("    {} -= {} · eps({})", step.leading, step.coefficient, step.source);
                }
                let support: Vec<String> = cert
                    .preimage
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| format!("{c}·e{j}"))
                    .collect();
                println!("    preimage: {}", support.join(" + "));
            }
            Err(e) => println!("    stuck: {e}"),
        }
    }
}
