//! Compute the minimal projective resolution of one simple End(M_n)-module
//! step by step, showing the approximation data the engine produces.
//!
//!     cargo run --release --example resolve_one_simple -- [n] [label]

use repdim::approx::{global_dimension, HomTable};
use repdim::field::Rationals;
use repdim::label::LabelExpr;
use repdim::orchestrate::build_mn;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let target = args.next().unwrap_or_else(|| "U[0]".to_string());
    let label = LabelExpr::parse(&target)
        .expect("a label like U[0], X, A[1,1], DA[0,2] or P")
        .resolve(n);

    let mut set = build_mn(n, Rationals).expect("M_n builds");
    set.certify(0).expect("M_n certifies");
    let table = HomTable::build(&set).expect("hom table builds");

    let t = set.index_of(label).expect("label is a summand of M_n");
    let resolution =
        repdim::approx::resolve_simple(&set, &table, t, 10).expect("resolution terminates");
    println!("simple at {label} over End(M_{n}): pd = {}", resolution.pd);
    for (d, term) in resolution.terms.iter().enumerate() {
        let labels: Vec<String> = term.iter().map(|l| l.to_string()).collect();
        println!("  degree {}: {}", d + 1, labels.join(" ⊕ "));
    }
    println!(
        "  all step checks passed: {}",
        resolution.checks.all_passed()
    );

    let (gl, _) = global_dimension(&set, &table, 10).expect("global dimension");
    println!("gl.dim End(M_{n}) = {gl}");
}
