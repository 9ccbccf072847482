//! The Gugenheim-Munkholm higher homotopies F_k and Φ_k, their vanishing
//! pattern on suspension products, and the transferred strong deformation
//! retract Ω(C(K)⊗C(L)) ⇄ Ω(C(K×L)).
//!
//! Run with `cargo run --example perturbation_recursion`.

use simplicial_cobar::chains::{BasisLabel, Chain};
use simplicial_cobar::cobar::DgAlgebra;
use simplicial_cobar::ezaw::{SdrData, SdrVerify};
use simplicial_cobar::fixtures::sphere;
use simplicial_cobar::perturbation::GmData;
use simplicial_cobar::simplicial::Simplex;

fn main() {
    // On suspension products, everything above F_2 vanishes.
    let es1 = sphere(1).suspension();
    let gm = GmData::new(&es1, &es1).unwrap();
    let x = sphere(1).nondeg(1).unwrap()[0].clone();
    let cx = Simplex::cone(&x);
    let diag = BasisLabel::Simplex(Simplex::pair(&cx, &cx));
    for k in 1..=4 {
        println!("F_{k}((1,x)×(1,x)) = {}", gm.f_component(&diag, k));
    }
    println!("Φ_1((1,x)×(1,x)) = {}", gm.phi_component(&diag, 1));

    // On a general pair the recursion is longer but locally nilpotent;
    // exceeding the bound with a nonzero component is an error, not a hang.
    let s1 = sphere(1);
    let gm = GmData::new(&s1, &s1).unwrap();
    let torus_cell = gm.ez.product.nondeg(2).unwrap()[0].clone();
    let label = BasisLabel::Simplex(torus_cell.clone());
    println!("\non the torus 2-cell {torus_cell}:");
    for k in 1..=3 {
        println!("  F_{k} = {}", gm.f_component(&label, k));
    }
    println!("  F(total, bound 4) = {}", gm.f_total(&label, 4).unwrap());

    // The transferred SDR at cobar level, verified identity by identity.
    let sdr = SdrData {
        nabla: gm.omega_nabla(),
        f: gm.omega_f(4),
        phi: gm.omega_phi(4),
    };
    let x_basis = |d: usize| gm.omega_x.words(d, Some(3));
    let y_basis = |d: usize| gm.omega_y.words(d, Some(3));
    let x_diff = |c: &Chain| gm.omega_x.diff(c);
    let y_diff = |c: &Chain| gm.omega_y.diff(c);
    println!("\ntransferred SDR Ω(C(S¹)⊗C(S¹)) ⇄ Ω(C(S¹×S¹)):");
    let checks = SdrVerify {
        data: &sdr,
        x_basis: &x_basis,
        x_diff: &x_diff,
        y_basis: &y_basis,
        y_diff: &y_diff,
        coalgebras: None,
        modulus: 0,
    }
    .run(3)
    .unwrap();
    for c in checks {
        println!("  {:<20} [{}]  {}", c.id, c.range, if c.pass { "ok" } else { "FAIL" });
    }
}
