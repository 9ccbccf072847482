//! The cobar construction on C(EK), the chain James map α, and the
//! extended cobar diagonal ψ — computed two independent ways — plus the
//! "wrong" primitive coalgebra structure it is often confused with.
//!
//! Run with `cargo run --example cobar_diagonal`.

use simplicial_cobar::chains::{BasisLabel, Chain};
use simplicial_cobar::coalgebra::Coalgebra;
use simplicial_cobar::fixtures::{delta, sphere};
use simplicial_cobar::james::JamesData;
use simplicial_cobar::simplicial::Simplex;

fn main() {
    // The pointed interval Δ[1] is not reduced; its suspension still is,
    // so Ω C(EΔ[1]) is defined and has a degree-zero generator.
    let d1 = delta(1);
    let jd = JamesData::new(&d1).unwrap();
    let x = d1.nondeg(1).unwrap()[0].clone();
    let cx = Simplex::cone(&x);

    println!("letters of ΩC(EΔ[1]) in degree 0: {:?}",
        jd.omega.letters(0).unwrap().iter().map(|l| l.to_string()).collect::<Vec<_>>());
    let w = BasisLabel::Word(vec![BasisLabel::Simplex(cx.clone())]);
    println!("d_Ω[{cx}] = {}", jd.omega.diff_label(&w));

    // α is the chain model of the James map.
    let coalg = Coalgebra::chains(d1.clone());
    for label in coalg.basis(1).unwrap() {
        println!("α({label}) = {}", jd.alpha_label(&label));
    }

    // ψ on a generator: the closed formula and the generic pipeline
    // q ∘ (F₁⊕F₂) ∘ C(Λ) agree.
    let closed = jd.xi_closed(&cx);
    let pipeline = jd.xi_pipeline(&cx);
    println!("\nψ[(1,x)] closed   = {closed}");
    println!("ψ[(1,x)] pipeline = {pipeline}");
    assert_eq!(closed, pipeline);

    // The foil q ∘ Ω(Δ_EK) is primitive and misses the middle term.
    let word = Chain::from_label(w, 0);
    println!("q Ω(Δ)[(1,x)]     = {}", jd.wrong_coproduct(&word));

    // On the sphere the middle terms die and the two coproducts agree.
    let s1 = sphere(1);
    let jd1 = JamesData::new(&s1).unwrap();
    let y = s1.nondeg(1).unwrap()[0].clone();
    let cy = Simplex::cone(&y);
    println!("\nover S¹: ψ[(1,x)] = {}", jd1.xi_closed(&cy));
}
