//! Run the full verification that gl.dim End(M_n) = 3 over A_n and print
//! the certificate.
//!
//!     cargo run --release --example verify_theorem -- [n] [q|f2|fp:P]

use repdim::field::{FieldSpec, PrimeField, Rationals};
use repdim::orchestrate::{verify_an, VerifyOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let field = args.next().unwrap_or_else(|| "q".to_string());
    let spec = FieldSpec::parse(&field).expect("field is q, f2 or fp:P");
    let opts = VerifyOptions::default();
    let cert = match spec {
        FieldSpec::Rational => {
            verify_an(n, Rationals, &opts)
                .expect("verification runs")
                .certificate
        }
        FieldSpec::Prime(p) => {
            verify_an(n, PrimeField::new(p), &opts)
                .expect("verification runs")
                .certificate
        }
    };
    print!("{}", cert.to_json());
    eprintln!(
        "gl.dim End(M_{n}) = {} over {} — verdict {:?}",
        cert.global_dimension, cert.algebra.field, cert.verdict
    );
}
