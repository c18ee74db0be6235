//! A tour of the low-level machinery on M_0: hom spaces, radical covers of
//! the category, kernels, and one right add(M)-approximation — the raw
//! ingredients the resolution engine is built from.
//!
//!     cargo run --example hom_table_tour

use repdim::approx::{radical_cover, right_approximation, HomTable};
use repdim::field::Rationals;
use repdim::hom::kernel_of;
use repdim::label::Label;
use repdim::orchestrate::build_mn;

fn main() {
    let mut set = build_mn(0, Rationals).expect("M_0 builds");
    set.certify(0).expect("M_0 certifies");
    let table = HomTable::build(&set).expect("hom table builds");

    println!("Hom dimensions over M_0 (rows = source, cols = target):");
    print!("{:>8}", "");
    for s in &set.summands {
        print!("{:>8}", s.label.to_string());
    }
    println!();
    for (i, s) in set.summands.iter().enumerate() {
        print!("{:>8}", s.label.to_string());
        for j in 0..set.len() {
            print!("{:>8}", table.hom_dim(i, j));
        }
        println!();
    }

    let t = set.index_of(Label::U(0)).unwrap();
    let cover = radical_cover(&set, &table, t).expect("cover exists");
    let sources: Vec<String> = cover.source_labels.iter().map(|l| l.to_string()).collect();
    println!(
        "\nminimal cover of rad(−, U[0]): {} → U[0]",
        sources.join(" ⊕ ")
    );

    let (kernel, _) = kernel_of(&cover.map).expect("kernel");
    println!("its kernel has dimension {}", kernel.dim());

    let approx = right_approximation(&set, &table, &kernel).expect("approximation");
    let sources: Vec<String> = approx.source_labels.iter().map(|l| l.to_string()).collect();
    println!(
        "minimal right approximation of the kernel: {} → K",
        sources.join(" ⊕ ")
    );
}
