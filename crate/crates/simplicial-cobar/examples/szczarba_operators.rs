//! Szczarba's operators D^n_{0,i} and their collapse on suspensions: every
//! operator beyond the first begins with a degeneracy, so the twisting
//! cochain reduces to a signed inverse letter, and the induced algebra map
//! θ is comultiplicative on the nose.
//!
//! Run with `cargo run --example szczarba_operators`.

use simplicial_cobar::chains::BasisLabel;
use simplicial_cobar::fixtures::sphere;
use simplicial_cobar::simplicial::Simplex;
use simplicial_cobar::szczarba::{d_operator, epsilon, SzczarbaData};

fn main() {
    // The operator table for small n.
    for n in 1..=4usize {
        let fact: usize = (1..n).product();
        println!("level n = {n}:");
        for i in 1..=fact {
            println!(
                "  D^{n}_(0,{i}) = {:<14} ε = {}",
                d_operator(n, i).unwrap().to_string(),
                epsilon(i, n).unwrap()
            );
        }
    }

    // The raw sum against the closed form on ES².
    let s2 = sphere(2);
    let sd = SzczarbaData::new(&s2).unwrap();
    let x = s2.nondeg(2).unwrap()[0].clone();
    let z = Simplex::cone(&x);
    println!("\nt_EK(1,x) raw    = {}", sd.t_ek_raw(&z).unwrap());
    println!("t_EK(1,x) closed = {}", sd.t_ek_closed(&z));
    assert_eq!(sd.t_ek_raw(&z).unwrap(), sd.t_ek_closed(&z));

    // θ sends cobar words to Pontryagin products of inverse letters in
    // C(GEK), and respects the diagonals.
    let s1 = sphere(1);
    let sd = SzczarbaData::new(&s1).unwrap();
    let theta = sd.theta();
    let y = Simplex::cone(&s1.nondeg(1).unwrap()[0]);
    let w = BasisLabel::Word(vec![
        BasisLabel::Simplex(y.clone()),
        BasisLabel::Simplex(y.clone()),
    ]);
    println!("\nθ[(1,x)|(1,x)] = {}", theta.apply_label(&w));
    let defect = sd.comultiplicativity_defect(&w);
    println!("Δθ - (θ⊗θ)ψ on it: {defect}");
    assert!(defect.is_zero());
}
