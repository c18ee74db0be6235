//! The self-injective lift: over Λ_n = k[x,y]/(x², y^{n+2}) the module
//! N = inflate(M_n) ⊕ Λ_n is a generator-cogenerator with gl.dim End(N) ≤ 3.
//! Over F_2 this covers the group algebras of C_2 × C_{2^m}.
//!
//!     cargo run --release --example lambda_lift -- [n] [q|f2|fp:P]

use repdim::field::{FieldSpec, PrimeField, Rationals};
use repdim::orchestrate::{verify_lambda, VerifyOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let field = args.next().unwrap_or_else(|| "f2".to_string());
    let spec = FieldSpec::parse(&field).expect("field is q, f2 or fp:P");
    let opts = VerifyOptions::default();
    let cert = match spec {
        FieldSpec::Rational => verify_lambda(n, Rationals, &opts).unwrap().certificate,
        FieldSpec::Prime(p) => {
            verify_lambda(n, PrimeField::new(p), &opts)
                .unwrap()
                .certificate
        }
    };
    println!(
        "Λ_{n} over {}: {} summands, gl.dim End = {}, self-injective: {}, verdict {:?}",
        cert.algebra.field,
        cert.summands.len(),
        cert.global_dimension,
        cert.checks.gen_cogen.self_injective,
        cert.verdict
    );
    for r in &cert.resolutions {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|t| {
                t.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join("⊕")
            })
            .collect();
        println!("  E_{{{}}}: pd {}  [{}]", r.target, r.pd, terms.join(" | "));
    }
}
