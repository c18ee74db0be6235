//! Validate the engine on known ground truth: over the representation-finite
//! k[y]/(y^m) the sum of all chains is a generator-cogenerator whose
//! endomorphism ring (the Auslander algebra) has global dimension ≤ 2.
//!
//!     cargo run --release --example auslander_check -- [max_m]

use repdim::field::Rationals;
use repdim::orchestrate::{auslander_sanity, VerifyOptions};

fn main() {
    let max: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let opts = VerifyOptions::default();
    for m in 1..=max {
        let r = auslander_sanity(m, Rationals, &opts).expect("sanity run");
        println!(
            "k[y]/(y^{m}): chains of length 1..{m}, gl.dim End = {} (checks passed: {})",
            r.global_dimension, r.checks_passed
        );
    }
}
