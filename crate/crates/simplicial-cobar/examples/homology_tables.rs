//! Exact integer homology through Smith normal form: spheres, products,
//! cobar constructions, and the word-length window of the James monoid.
//!
//! Run with `cargo run --release --example homology_tables`.

use simplicial_cobar::chains::{FreeComplex, NormalizedChains, WordChains};
use simplicial_cobar::coalgebra::Coalgebra;
use simplicial_cobar::cobar::{CobarAlgebra, CobarComplex};
use simplicial_cobar::fixtures::{sphere, wedge};
use simplicial_cobar::snf::homology_ranks;

fn table(cx: &dyn FreeComplex, max_degree: usize) {
    let h = homology_ranks(cx, max_degree, 100_000).unwrap();
    let ranks: Vec<String> = h
        .iter()
        .map(|s| {
            if s.torsion.is_empty() {
                format!("{}", s.rank)
            } else {
                format!("{}+{:?}", s.rank, s.torsion)
            }
        })
        .collect();
    println!("{:<28} H_0..H_{max_degree} = [{}]", cx.name(), ranks.join(", "));
}

fn main() {
    let s1 = sphere(1);
    let s2 = sphere(2);
    table(&NormalizedChains::new(s1.clone()), 2);
    table(&NormalizedChains::new(s2.clone()), 3);
    table(&NormalizedChains::new(s1.product(&s1)), 2); // the torus
    table(
        &NormalizedChains::new(wedge(&s1, &s1).unwrap().suspension()),
        3,
    );

    // Cobar homology realizes the loop space: H(Ω C(ES^n)) is a tensor
    // algebra on one generator of degree n.
    for n in [1usize, 2] {
        let omega =
            CobarAlgebra::new(Coalgebra::chains(sphere(n).suspension())).unwrap();
        table(
            &CobarComplex {
                algebra: omega,
                max_len: None,
            },
            6,
        );
    }

    // The same answer appears in the James monoid's word-length window,
    // matching the comparison map γ at desk scale.
    table(&WordChains::new(s1.james_monoid(), 4), 4);
}
