//! The Alexander-Whitney and Eilenberg-Zilber maps and the
//! Eilenberg-MacLane homotopy φ, with the full strong-deformation-retract
//! verification of the E-Z data `C(K) ⊗ C(L) ⇄ C(K × L)`.
//!
//! Run with `cargo run --example ez_aw_homotopy`.

use simplicial_cobar::ezaw::{phi_table, shuffles, verify_ez_sdr, EzData};
use simplicial_cobar::fixtures::{delta, sphere};
use simplicial_cobar::simplicial::Simplex;

fn main() {
    // Shuffles index the Eilenberg-Zilber summands.
    println!("(2,1)-shuffles and signatures:");
    for sh in shuffles(2, 1) {
        println!("  μ = {:?}, ν = {:?}, ε = {}", sh.mu, sh.nu, sh.signature());
    }

    // φ is a universal operator table per dimension.
    println!("\nφ operator table in dimension 1 (pairs, coefficient):");
    for ((l, r), c) in phi_table(1) {
        println!("  {c:>2} · ({l}) × ({r})");
    }
    println!("φ table sizes in dims 1..5: {:?}",
        (1..=5).map(|q| phi_table(q).len()).collect::<Vec<_>>());

    // Evaluate the three maps on the torus.
    let s1 = sphere(1);
    let data = EzData::new(&s1, &s1);
    let x = s1.nondeg(1).unwrap()[0].clone();
    println!("\n∇(x ⊗ x)   = {}", data.ez_label(&x, &x));
    let diag = Simplex::pair(&x, &x);
    println!("f(x × x)   = {}", data.aw_label(&diag));
    println!("φ(x × x)   = {}", data.phi_label(&diag));

    // All six E-Z identities, exhaustively up to degree 4.
    for (k, l) in [(sphere(1), sphere(1)), (sphere(1), delta(1))] {
        println!("\nSDR verification on C({}) ⊗ C({}) ⇄ C({}×{}):",
            k.name(), l.name(), k.name(), l.name());
        for check in verify_ez_sdr(&k, &l, 4).unwrap() {
            println!(
                "  {:<20} [{}]  {}",
                check.id,
                check.range,
                if check.pass { "ok" } else { "FAIL" }
            );
        }
    }
}
