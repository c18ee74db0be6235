//! Certify a family of pairwise non-isomorphic indecomposables of strictly
//! increasing dimension over A_n — the desk-scale evidence that the algebra
//! is not representation finite (so its representation dimension exceeds 2).
//!
//!     cargo run --release --example infinite_type_witnesses -- [n] [count]

use repdim::algebra::MonomialAlgebra;
use repdim::field::Rationals;
use repdim::hom::{is_indecomposable, EndAlgebra};
use repdim::module::zigzag_module;
use repdim::orchestrate::witness_infinite_type;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let count: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let alg = MonomialAlgebra::an(n);

    let report = witness_infinite_type(&alg, Rationals, count, 0).expect("witnesses certify");
    println!(
        "A_{n}: {} certified indecomposables, dims {:?}",
        report.count, report.dims
    );

    // a closer look at one of them
    let z = zigzag_module(3, &alg, Rationals).unwrap();
    let (ok, cert) = is_indecomposable(&z, 0).unwrap();
    let end = EndAlgebra::new(&z).unwrap();
    println!(
        "zigzag of length 3: dim {}, End dim {}, rad dim {}, indecomposable: {ok}",
        z.dim(),
        cert.end_dim,
        end.radical_dim()
    );
}
