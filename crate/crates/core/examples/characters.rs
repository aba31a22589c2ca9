//! Torus characters of tensor spaces and their decomposition into
//! irreducibles. Takes an optional space expression.
//!
//!     cargo run --example characters -- "Sym2(V(2))*S(1)"

use instanton_ext2::cli::parse_space;
use instanton_ext2::instanton_maps::expected_ext2_character;
use instanton_ext2::rep::{Factor, TensorSpace};

fn main() {
    let v2 = TensorSpace::new(vec![Factor::v(2)]);
    let wedge = TensorSpace::new(vec![Factor::wedge2_v(2)]);
    let sym = TensorSpace::new(vec![Factor::sym2_v(2)]);
    for space in [&v2, &wedge, &sym] {
        let c = space.character();
        println!("{space}: dim {}  char {c}  = {}", c.dim(), c.decompose().unwrap());
    }

    for (n, k) in [(2, 3), (2, 5), (3, 4)] {
        let c = expected_ext2_character(n, k);
        println!("expected Ext^2 for n={n}, k={k}: {}", c.decompose().unwrap());
    }

    if let Some(expr) = std::env::args().nth(1) {
        match parse_space(&expr) {
            Ok(c) => println!("{expr} = {}  (dim {})", c.decompose().unwrap(), c.dim()),
            Err(e) => eprintln!("{e}"),
        }
    }
}
