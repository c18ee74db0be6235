//! Render the diagrams of the named string modules: the uniserials, X, the
//! ladders A_i^j, their DA_i^j companions and the regular modules.
//!
//!     cargo run --example show_diagrams -- [n]

use repdim::algebra::MonomialAlgebra;
use repdim::module::{
    a_diagram, da_diagram, regular_diagram, u_diagram, x_diagram, zigzag_diagram,
};

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    println!("U[{}]:", n + 1);
    print!("{}", u_diagram(n + 1).render());
    println!("\nX:");
    print!("{}", x_diagram().render());
    for (i, j) in [(n, 0), (0, n.max(1)), (n.saturating_sub(1), 1)] {
        if i + j > n {
            continue;
        }
        println!("\nA[{i},{j}]  (dim {}):", j + 2 * i + 3);
        print!("{}", a_diagram(i, j).render());
        println!("\nDA[{i},{j}]  (dim {}):", j + 2 * i + 3);
        print!("{}", da_diagram(i, j).render());
    }
    println!("\nzigzag of length 3:");
    print!("{}", zigzag_diagram(3).render());
    println!("\nregular module of Λ_{n}:");
    print!("{}", regular_diagram(&MonomialAlgebra::lambda(n)).render());
    println!("\nregular module of A_{n} (= A[{n},0]):");
    print!("{}", regular_diagram(&MonomialAlgebra::an(n)).render());
}
