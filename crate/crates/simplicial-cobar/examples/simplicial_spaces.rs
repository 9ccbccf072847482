//! Build the standard spaces, evaluate faces and degeneracies, and watch
//! Eilenberg-Zilber normal forms at work in suspensions, loop groups and
//! the James monoid.
//!
//! Run with `cargo run --example simplicial_spaces`.

use simplicial_cobar::fixtures::{delta, sphere};
use simplicial_cobar::simplicial::{Simplex, WordKind};

fn main() {
    // The pointed circle model: one nondegenerate 1-simplex, both faces at
    // the basepoint.
    let s1 = sphere(1);
    let x = s1.nondeg(1).unwrap()[0].clone();
    println!("S1 generator: {x}, faces: {} , {}", x.face(0), x.face(1));

    // Degeneracies keep canonical form: s_0 s_0 x = s_1 s_0 x.
    let d = x.degeneracy(0).degeneracy(0);
    println!("s0 s0 x normalizes to {d} (degens {:?})", d.degens());
    assert_eq!(d, x.degeneracy(0).degeneracy(1));

    // The suspension EK: (1,x) with ∂_0(1,x) = b_n and the shifted faces.
    let es1 = s1.suspension();
    let cx = Simplex::cone(&x);
    println!(
        "\nE(S1): (1,x) = {cx} has dim {}, faces {} {} {}",
        cx.dim(),
        cx.face(0),
        cx.face(1),
        cx.face(2)
    );
    println!("(2,x) = s_0 (1,x) = {}", cx.degeneracy(0));
    println!("E(S1) is reduced: {}", es1.is_reduced());

    // The loop group G(ES1): letters are simplices of ES1, with inverses.
    let ges1 = es1.loop_group().unwrap();
    let t = Simplex::tau(WordKind::Group, &cx);
    let inv = t.word_inverse();
    println!("\nG(ES1): τ(1,x) = {t},  τ(1,x)^-1 = {inv}");
    println!("product with inverse reduces: {}", t.word_mul(&inv));
    println!("∂_0 τ(1,x) = {}", t.face(0));
    drop(ges1);

    // The James monoid G+E(S1): no inverses, ∂_0 is still determined.
    let j = s1.james_monoid();
    let tj = Simplex::tau(WordKind::James, &cx);
    let square = tj.word_mul(&tj);
    println!("\nG+E(S1): τ(1,x)·τ(1,x) = {square}");
    println!("∂_1 of it: {}", square.face(1));
    println!(
        "words of dim 1 with ≤ 2 letters: {:?}",
        j.words_nondeg(1, 2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
    );

    // Products normalize pairs by extracting common degeneracies.
    let d1 = delta(2);
    let edge = d1.nondeg(1).unwrap()[0].clone();
    let p = Simplex::pair(&edge.degeneracy(0), &edge.degeneracy(0));
    println!("\n(s0 e, s0 e) in Δ[2]×Δ[2] is degenerate: {}", p.is_degenerate());
    let q = Simplex::pair(&edge.degeneracy(0), &edge.degeneracy(1));
    println!("(s0 e, s1 e) is nondegenerate: {}", !q.is_degenerate());
}
