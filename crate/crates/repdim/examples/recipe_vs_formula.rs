//! Build M_n inductively — extend every summand diagram of M_{n-1} by a
//! vertex on top (no new squares), drop the old projective, add the new
//! projective and its dual — and diff each stage against the closed form.
//!
//!     cargo run --release --example recipe_vs_formula -- [n]

use repdim::field::Rationals;
use repdim::orchestrate::build_mn_by_recipe;

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let result = build_mn_by_recipe(n, Rationals, 0).expect("recipe runs");
    for stage in &result.stages {
        let fmt = |ls: &[repdim::Label]| {
            ls.iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("M_{} → M_{}:", stage.n - 1, stage.n);
        println!("  removed: {}", fmt(&stage.removed));
        println!("  added:   {}", fmt(&stage.added));
        println!("  kept:    {} summands", stage.kept.len());
        println!(
            "  {}",
            if stage.matches_formula {
                "≅ closed form, summand for summand"
            } else {
                "MISMATCH"
            }
        );
    }
    println!("overall: {}", if result.passed { "PASS" } else { "FAIL" });
}
