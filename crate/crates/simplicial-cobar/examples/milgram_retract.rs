//! The Milgram retract Ω A ⊗ Ω B ⇄ Ω(A ⊗ B): the algebra maps q and σ,
//! the distributing homotopy h, and the full verification report with the
//! mod-2 homotopy identity and the reported integer-level outcome.
//!
//! Run with `cargo run --example milgram_retract`.

use simplicial_cobar::chains::BasisLabel;
use simplicial_cobar::coalgebra::Coalgebra;
use simplicial_cobar::fixtures::sphere;
use simplicial_cobar::milgram::{milgram_sdr_verify, Milgram};

fn main() {
    let s1 = sphere(1);
    let s2 = sphere(2);
    let mg = Milgram::new(
        Coalgebra::chains(s1.clone()),
        Coalgebra::chains(s2.clone()),
    )
    .unwrap();

    // letters: [a] = a⊗1, [b] = 1⊗b, [ab] = a⊗b
    let x = s1.nondeg(1).unwrap()[0].clone();
    let y = s2.nondeg(2).unwrap()[0].clone();
    let a = BasisLabel::tensor(
        BasisLabel::Simplex(x.clone()),
        mg.b.unit_label(),
    );
    let b = BasisLabel::tensor(
        mg.a.unit_label(),
        BasisLabel::Simplex(y.clone()),
    );

    let ba = BasisLabel::Word(vec![b.clone(), a.clone()]);
    println!("q[b|a] = {}", mg.q_label(&ba));
    println!("h[b|a] = {}", mg.h_label(&ba));
    let baa = BasisLabel::Word(vec![b.clone(), a.clone(), a.clone()]);
    println!("h[b|a|a] = {}", mg.h_label(&baa));

    // σ splices the two sides back together; qσ = 1.
    let pair = BasisLabel::tensor(
        BasisLabel::Word(vec![BasisLabel::Simplex(x)]),
        BasisLabel::Word(vec![BasisLabel::Simplex(y)]),
    );
    let back = mg.sigma_label(&pair);
    println!("\nσ([x]⊗[y]) = {back}");
    println!("qσ([x]⊗[y]) = {}", mg.q(&back));

    // The full report: the integer identity holds on primitive-diagonal
    // pairs and is reported either way.
    println!("\nverification on (C(S¹), C(S²)), degree ≤ 4, length ≤ 3:");
    for c in milgram_sdr_verify(&s1, &s2, 4, 3).unwrap() {
        println!(
            "  {:<34} [{}]  {}",
            c.id,
            c.range,
            if c.pass { "ok" } else { "FAIL" }
        );
    }
}
