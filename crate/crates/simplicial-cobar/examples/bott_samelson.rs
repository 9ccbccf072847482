//! The chain-level Bott-Samelson isomorphism: the free Hopf algebra
//! (T C̃(K), d̂, Δ̂) is isomorphic to (Ω C(EK), ψ) via the letterwise
//! suspension α̂, for an arbitrary pointed K.
//!
//! Run with `cargo run --example bott_samelson`.

use simplicial_cobar::chains::BasisLabel;
use simplicial_cobar::fixtures::sphere;
use simplicial_cobar::james::{apply_tensor, JamesData};

fn main() {
    // S⁰ is not reduced: T C̃(S⁰) is the free algebra on one degree-zero
    // generator y - k₀, and Ω C(ES⁰) matches it word for word.
    let s0 = sphere(0);
    let jd = JamesData::new(&s0).unwrap();
    let ah = jd.alpha_hat();

    for degree in 0..=1 {
        let src = jd.hopf.words(degree, Some(3)).unwrap();
        println!("degree {degree}:");
        for w in &src {
            println!("  α̂ {w}  =  {}", jd.alpha_hat_label(w));
        }
    }

    // The diagonal on the degree-zero letter has three terms, and α̂
    // transports it onto ψ.
    let y = jd.hopf.letters(0).unwrap()[0].clone();
    let wy = BasisLabel::FreeWord(vec![y]);
    println!("\nΔ̂ [y-*] = {}", jd.hopf.diagonal_label(&wy));
    let lhs = apply_tensor(&jd.hopf.diagonal_label(&wy), &ah, &ah);
    let rhs = jd.psi(&ah.apply_label(&wy));
    println!("(α̂⊗α̂)Δ̂ = {lhs}");
    println!("ψ α̂     = {rhs}");
    assert_eq!(lhs, rhs);

    // Counting basis words shows the isomorphism numerically: over S¹ the
    // two sides have one word in each degree.
    let s1 = sphere(1);
    let jd = JamesData::new(&s1).unwrap();
    let counts: Vec<(usize, usize)> = (0..=6)
        .map(|d| {
            (
                jd.hopf.words(d, None).unwrap().len(),
                jd.omega.words(d, None).unwrap().len(),
            )
        })
        .collect();
    println!("\nbasis counts over S¹, degrees 0..6 (T C̃ vs Ω C(E)): {counts:?}");
}
