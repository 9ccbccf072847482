//! Named verification suites over chosen fixtures, producing deterministic
//! reports. Each suite runs the identities its module asserts, exhaustively
//! on enumerable bases and with seeded sampling for group/monoid words.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chains::{
    BasisLabel, Chain, FreeComplex, NormalizedChains, ReducedChains, TensorComplex, WordChains,
};
use crate::coalgebra::Coalgebra;
use crate::cobar::{twisting_cochain_check, CobarAlgebra, CobarComplex, DgAlgebra};
use crate::ezaw::{verify_ez_sdr, IdentityCheck};
use crate::fixtures;
use crate::james::{apply_tensor, JamesData};
use crate::milgram::milgram_sdr_verify;
use crate::perturbation::GmData;
use crate::simplicial::{Simplex, Space, WordKind};
use crate::snf::homology_ranks;
use crate::szczarba::{d_operator, SzczarbaData};
use crate::{Error, Result};

/// Bounds shared by every suite.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bounds {
    pub max_degree: usize,
    pub max_word_length: usize,
    pub modulus: u32,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 6,
            max_word_length: 4,
            modulus: 0,
            seed: 0xC0BA5EED,
        }
    }
}

/// Outcome of one suite run. Serialization is deterministic given the
/// fixture, bounds and seed; wall-clock timing goes to stderr only.
#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub fixture: String,
    pub bounds: Bounds,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl VerificationReport {
    fn new(suite: &str, fixture: String, bounds: Bounds, checks: Vec<IdentityCheck>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport {
            suite: suite.into(),
            fixture,
            bounds,
            checks,
            pass,
            data: None,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization")
    }
}

/// Parses `"A,B"` into a pair of spaces, or duplicates a single spec.
pub fn parse_fixture_pair(spec: &str) -> Result<(Space, Space)> {
    // split on a top-level comma
    let mut depth = 0usize;
    for (idx, ch) in spec.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                let a = fixtures::parse_space(&spec[..idx])?;
                let b = fixtures::parse_space(&spec[idx + 1..])?;
                return Ok((a, b));
            }
            _ => {}
        }
    }
    let a = fixtures::parse_space(spec)?;
    Ok((a.clone(), a))
}

/// Random nondegenerate word simplices of a group/monoid space, seeded.
fn sample_words(space: &Space, dim: usize, max_len: usize, rng: &mut ChaCha8Rng) -> Vec<Simplex> {
    let kind = space.word_kind().expect("sample_words on non-group space");
    let letters = match space.letter_basis(dim) {
        Ok(ls) if !ls.is_empty() => ls,
        _ => return Vec::new(),
    };
    let mut out = Vec::new();
    for _ in 0..12 {
        let len = rng.gen_range(0..=max_len);
        let mut raw = Vec::with_capacity(len);
        for _ in 0..len {
            let y = letters[rng.gen_range(0..letters.len())].clone();
            let sign = if kind == WordKind::Group && rng.gen_bool(0.3) {
                -1
            } else {
                1
            };
            raw.push((y, sign));
        }
        out.push(Simplex::word(kind, raw, dim));
    }
    out
}

/// Simplices to exercise for a space: exhaustive for finite-type spaces,
/// seeded words otherwise.
fn probe_simplices(space: &Space, bounds: &Bounds) -> Result<Vec<Simplex>> {
    let mut out = Vec::new();
    match space.word_kind() {
        None => {
            for d in 0..=bounds.max_degree {
                out.extend(space.all_simplices(d)?);
            }
        }
        Some(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
            for d in 0..=bounds.max_degree.min(4) {
                out.extend(space.words_nondeg(d, bounds.max_word_length.min(3))?);
                out.extend(sample_words(space, d, bounds.max_word_length, &mut rng));
            }
            out.sort();
            out.dedup();
        }
    }
    Ok(out)
}

/// The five simplicial identities plus basepoint stability, the degeneracy
/// oracle, derived-operator composition and homomorphism checks.
pub fn suite_simplicial(space: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let range = format!("dim <= {}", bounds.max_degree);
    let mut checks = Vec::new();
    let probes = probe_simplices(space, bounds)?;

    let mut identities = IdentityCheck::pass("simplicial identities", range.clone());
    'outer: for z in &probes {
        let n = z.dim();
        // ∂_i ∂_j = ∂_{j-1} ∂_i (i < j)
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    if z.face(j).face(i) != z.face(i).face(j - 1) {
                        identities = IdentityCheck::fail(
                            "simplicial identities",
                            range.clone(),
                            format!("∂{i}∂{j} on {z}"),
                        );
                        break 'outer;
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i (i <= j)
        for j in 0..=n {
            for i in 0..=j {
                if z.degeneracy(j).degeneracy(i) != z.degeneracy(i).degeneracy(j + 1) {
                    identities = IdentityCheck::fail(
                        "simplicial identities",
                        range.clone(),
                        format!("s{i}s{j} on {z}"),
                    );
                    break 'outer;
                }
            }
        }
        // ∂_i s_j: all three cases
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = z.degeneracy(j).face(i);
                let rhs = if i < j {
                    z.face(i).degeneracy(j - 1)
                } else if i == j || i == j + 1 {
                    z.clone()
                } else {
                    z.face(i - 1).degeneracy(j)
                };
                if lhs != rhs {
                    identities = IdentityCheck::fail(
                        "simplicial identities",
                        range.clone(),
                        format!("∂{i}s{j} on {z}"),
                    );
                    break 'outer;
                }
            }
        }
    }
    checks.push(identities);

    // basepoint fixed by all operators
    let mut bp_check = IdentityCheck::pass("operators fix the basepoint", range.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x9e3779b9);
    'bp: for n in 1..=bounds.max_degree {
        let k = space.basepoint(n);
        for _ in 0..8 {
            let mut z = k.clone();
            for _ in 0..4 {
                if z.dim() >= 1 && rng.gen_bool(0.5) {
                    z = z.face(rng.gen_range(0..=z.dim()));
                } else {
                    z = z.degeneracy(rng.gen_range(0..=z.dim()));
                }
            }
            if !z.is_basepoint() {
                bp_check = IdentityCheck::fail(
                    "operators fix the basepoint",
                    range.clone(),
                    format!("landed on {z}"),
                );
                break 'bp;
            }
        }
    }
    checks.push(bp_check);

    // normal-form degeneracy test agrees with x = s_i ∂_i x
    let mut oracle = IdentityCheck::pass("degeneracy oracle", range.clone());
    for z in &probes {
        if z.is_degenerate() != z.is_degenerate_by_identity() {
            oracle = IdentityCheck::fail("degeneracy oracle", range.clone(), format!("{z}"));
            break;
        }
    }
    checks.push(oracle);

    // derived operators compose: (fg)' = f'g' on evaluated simplices
    let mut derived = IdentityCheck::pass("(fg)' = f'g'", range.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x51ED5EED);
    'derived: for z in probes.iter().filter(|z| z.dim() >= 1).take(40) {
        for _ in 0..4 {
            use crate::operator::{OpSymbol, SimplicialOperator};
            let mut dim = z.dim();
            let mut syms = Vec::new();
            for _ in 0..4 {
                if dim >= 1 && rng.gen_bool(0.5) {
                    syms.push(OpSymbol::Face(rng.gen_range(0..=dim)));
                    dim -= 1;
                } else {
                    syms.push(OpSymbol::Degeneracy(rng.gen_range(0..=dim)));
                    dim += 1;
                }
            }
            syms.reverse();
            let cut = rng.gen_range(0..=syms.len());
            let inner = SimplicialOperator::normalize(&syms[cut..], z.dim()).unwrap();
            let outer =
                SimplicialOperator::normalize(&syms[..cut], inner.target_dim()).unwrap();
            let composed = outer.compose(&inner).unwrap();
            let lhs = composed.derived();
            let rhs = outer.derived().compose(&inner.derived()).unwrap();
            if lhs != rhs
                || lhs.apply(&z.degeneracy(0)) != rhs.apply(&z.degeneracy(0))
            {
                derived = IdentityCheck::fail(
                    "(fg)' = f'g'",
                    range.clone(),
                    format!("{composed} on {z}"),
                );
                break 'derived;
            }
        }
    }
    checks.push(derived);

    // for group-like spaces: operators are homomorphisms on words
    if space.word_kind().is_some() {
        let mut hom = IdentityCheck::pass("op(uv) = op(u)op(v)", range.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x40404040);
        'hom: for d in 1..=bounds.max_degree.min(4) {
            let words = sample_words(space, d, bounds.max_word_length, &mut rng);
            for chunk in words.chunks(2) {
                if chunk.len() < 2 {
                    continue;
                }
                let (u, v) = (&chunk[0], &chunk[1]);
                let uv = u.word_mul(v);
                for i in 0..=d {
                    if uv.face(i) != u.face(i).word_mul(&v.face(i)) {
                        hom = IdentityCheck::fail(
                            "op(uv) = op(u)op(v)",
                            range.clone(),
                            format!("∂{i} on {u} · {v}"),
                        );
                        break 'hom;
                    }
                    if uv.degeneracy(i) != u.degeneracy(i).word_mul(&v.degeneracy(i)) {
                        hom = IdentityCheck::fail(
                            "op(uv) = op(u)op(v)",
                            range.clone(),
                            format!("s{i} on {u} · {v}"),
                        );
                        break 'hom;
                    }
                }
            }
        }
        checks.push(hom);
    }

    // suspensions are reduced; suspensions of reduced spaces are 1-reduced
    if let Space::Suspension(inner) = space {
        let mut red = IdentityCheck::pass("EK reduced / 1-reduced", range.clone());
        if space.nondeg(0)?.len() != 1 {
            red = IdentityCheck::fail("EK reduced / 1-reduced", range.clone(), "E K not reduced".into());
        } else if inner.is_reduced() && space.nondeg(1)?.iter().any(|s| !s.is_basepoint()) {
            red = IdentityCheck::fail(
                "EK reduced / 1-reduced",
                range.clone(),
                "E of reduced K not 1-reduced".into(),
            );
        }
        checks.push(red);
    }

    Ok(VerificationReport::new(
        "simplicial",
        space.name(),
        *bounds,
        checks,
    ))
}

/// `∂² = 0`, reduced chains, and the Koszul rule on tensor products.
pub fn suite_chains(space: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let max_degree = bounds.max_degree;
    let complexes: Vec<Box<dyn FreeComplex>> = match space.word_kind() {
        None => vec![
            Box::new(NormalizedChains::new(space.clone())),
            Box::new(ReducedChains::new(space.clone())),
        ],
        Some(_) => vec![Box::new(WordChains::new(
            space.clone(),
            bounds.max_word_length,
        ))],
    };
    for cx in &complexes {
        let basis = |d: usize| cx.basis(d);
        checks.push(IdentityCheck::on_basis(
            &format!("∂² = 0 on {}", cx.name()),
            max_degree,
            &basis,
            &|l| {
                let once = cx.diff(l);
                once.map_labels(l.degree().saturating_sub(2), |m| cx.diff(m))
            },
        )?);
    }
    // counit kills reduced chains: ε ∘ inclusion = 0
    if space.word_kind().is_none() {
        let red = ReducedChains::new(space.clone());
        let co = Coalgebra::chains(space.clone());
        let basis = |d: usize| red.basis(d);
        checks.push(IdentityCheck::on_basis("ε ∘ inclusion = 0", 0, &basis, &|l| {
            let mut out = Chain::zero(0, 0);
            for (m, c) in co.unreduce(l).terms() {
                let e = co.counit(m);
                if e != 0 {
                    out.add_term(BasisLabel::Simplex(space.basepoint(0)), c * e);
                }
            }
            out
        })?);
        // Koszul differential on C(K) ⊗ C(K) squares to zero
        let t = TensorComplex {
            left: std::sync::Arc::new(NormalizedChains::new(space.clone())),
            right: std::sync::Arc::new(NormalizedChains::new(space.clone())),
        };
        let basis = |d: usize| t.basis(d);
        checks.push(IdentityCheck::on_basis(
            "tensor d² = 0",
            max_degree.min(4),
            &basis,
            &|l| {
                let once = t.diff(l);
                once.map_labels(l.degree().saturating_sub(2), |m| t.diff(m))
            },
        )?);
    }
    Ok(VerificationReport::new(
        "chains",
        space.name(),
        *bounds,
        checks,
    ))
}

/// E-Z data: the five SDR identities and comultiplicativity of `∇`.
pub fn suite_ez_sdr(k: &Space, l: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let checks = verify_ez_sdr(k, l, bounds.max_degree.min(4))?;
    Ok(VerificationReport::new(
        "ez-sdr",
        format!("{},{}", k.name(), l.name()),
        *bounds,
        checks,
    ))
}

/// Gugenheim-Munkholm: `F` twisting cochain, vanishing patterns on
/// suspension pairs, and the transferred SDR.
pub fn suite_gm(k: &Space, l: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let gm = GmData::new(k, l)?;
    let deg = bounds.max_degree.min(4);

    let t = gm.f_cochain(bounds.max_word_length);
    let witness = twisting_cochain_check(&t, &gm.ez.y_coalg, &gm.omega_x, deg)?;
    checks.push(match witness {
        None => IdentityCheck::pass("F is a twisting cochain", format!("degree <= {deg}")),
        Some((l, d)) => IdentityCheck::fail(
            "F is a twisting cochain",
            format!("degree <= {deg}"),
            format!("{l}: defect {d}"),
        ),
    });

    // F dies on the image of ∇
    checks.push(IdentityCheck::on_basis(
        "F_{≥2} ∘ ∇ = 0",
        deg,
        &|d| gm.ez.x_coalg.basis(d),
        &|label| {
            let mut out = Chain::zero(label.degree().saturating_sub(1), 0);
            let (a, b) = match label {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            if let (BasisLabel::Simplex(x), BasisLabel::Simplex(y)) = (a.as_ref(), b.as_ref()) {
                for (w, c) in gm.ez.ez_label(x, y).terms() {
                    for m in 2..=3 {
                        out = out.add(&gm.f_component(w, m).scale(c));
                    }
                }
            }
            out
        },
    )?);

    // on suspension pairs: F = F_1 ⊕ F_2 on (1,x) × (1,y), and the closed
    // form of Δ̄φ
    if let (Space::Suspension(_), Space::Suspension(_)) = (k, l) {
        checks.push(IdentityCheck::on_basis(
            "F_{≥3}((1,x)×(1,y)) = 0",
            deg + 1,
            &|d| {
                let mut out = Vec::new();
                if d >= 1 {
                    for cx in k.nondeg(d)? {
                        for cy in l.nondeg(d)? {
                            let p = Simplex::pair(&cx, &cy);
                            if !p.is_degenerate() {
                                out.push(BasisLabel::Simplex(p));
                            }
                        }
                    }
                }
                Ok(out)
            },
            &|label| {
                let mut out = Chain::zero(label.degree().saturating_sub(1), 0);
                for m in 3..=5 {
                    out = out.add(&gm.f_component(label, m));
                }
                out
            },
        )?);
    }

    // transferred SDR at reduced bounds
    use crate::ezaw::{SdrData, SdrVerify};
    let max_len = bounds.max_word_length;
    let sdr = SdrData {
        nabla: gm.omega_nabla(),
        f: gm.omega_f(max_len),
        phi: gm.omega_phi(max_len),
    };
    let x_basis = |d: usize| gm.omega_x.words(d, Some(3));
    let y_basis = |d: usize| gm.omega_y.words(d, Some(3));
    let x_diff = |c: &Chain| gm.omega_x.diff(c);
    let y_diff = |c: &Chain| gm.omega_y.diff(c);
    checks.extend(
        SdrVerify {
            data: &sdr,
            x_basis: &x_basis,
            x_diff: &x_diff,
            y_basis: &y_basis,
            y_diff: &y_diff,
            coalgebras: None,
            modulus: 0,
        }
        .run(deg.min(3))?
        .into_iter()
        .map(|mut c| {
            c.id = format!("Ω-level {}", c.id);
            c
        }),
    );
    let mut report = VerificationReport::new(
        "gm",
        format!("{},{}", k.name(), l.name()),
        *bounds,
        checks,
    );
    report.data = Some(json!({
        "sign_conventions": {
            "F_k": "F_k = -Σ (F_i ⊗ F_j) Δφ with (-1)^{deg u} when the odd F_j crosses the first factor u",
            "Phi": "Φ₁ = -ρφ; Φ_k = (Φ_{k-1} ⊗ ρ + Σ Ω(∇)F_j ⊗ Φ_i) Δφ with (-1)^{deg u} when ρ crosses u",
            "omega_phi": "(Ω∇ Ω̃f, 1)-derivation extension",
        }
    }));
    Ok(report)
}

/// James: `α`, `ξ`, `ψ`, the Bott-Samelson isomorphism and the
/// comparison triangle through `C(G⁺EK)`.
pub fn suite_james(k: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let jd = JamesData::new(k)?;
    let coalg = Coalgebra::chains(k.clone());
    let deg = bounds.max_degree.min(5);
    let word_len = bounds.max_word_length.min(3);

    let alpha = jd.alpha();
    let basis = |d: usize| coalg.basis(d);
    checks.push(IdentityCheck::on_basis("α is a chain map", deg, &basis, &|l| {
        alpha
            .apply(&coalg.diff(l))
            .sub(&jd.omega.diff(&jd.alpha_label(l)))
    })?);

    checks.push(IdentityCheck::on_basis(
        "(α⊗α)Δ = ψ α",
        deg,
        &basis,
        &|l| {
            apply_tensor(&coalg.diagonal(l), &alpha, &alpha).sub(&jd.psi(&jd.alpha_label(l)))
        },
    )?);

    let xi = jd.xi_cochain();
    let witness = twisting_cochain_check(&xi, &jd.omega.coalgebra, &jd.omega_sq, deg)?;
    checks.push(match witness {
        None => IdentityCheck::pass("ξ is a twisting cochain", format!("degree <= {deg}")),
        Some((l, d)) => IdentityCheck::fail(
            "ξ is a twisting cochain",
            format!("degree <= {deg}"),
            format!("{l}: defect {d}"),
        ),
    });

    checks.push(IdentityCheck::on_basis(
        "ψ closed form = q(F₁⊕F₂)CΛ",
        deg,
        &|d| {
            Ok(jd
                .ek
                .nondeg(d)?
                .into_iter()
                .map(BasisLabel::Simplex)
                .collect())
        },
        &|l| {
            let z = l.as_simplex().unwrap();
            jd.xi_closed(z).sub(&jd.xi_pipeline(z))
        },
    )?);

    // ψ is a chain map and coassociative on words
    let words = |d: usize| jd.omega.words(d, Some(word_len));
    checks.push(IdentityCheck::on_basis("ψ is a chain map", deg, &words, &|w| {
        jd.omega_sq
            .diff(&jd.psi(&Chain::from_label(w.clone(), 0)))
            .sub(&jd.psi(&jd.omega.diff_label(w)))
    })?);
    checks.push(IdentityCheck::on_basis("ψ coassociative", deg, &words, &|w| {
        let ps = jd.psi(&Chain::from_label(w.clone(), 0));
        let left = ps.map_labels(w.degree(), |pair| {
            let (a, b) = match pair {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            jd.psi(&Chain::from_label((**a).clone(), 0))
                .tensor(&Chain::from_label((**b).clone(), 0))
        });
        let right = ps.map_labels(w.degree(), |pair| {
            let (a, b) = match pair {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            Chain::from_label((**a).clone(), 0)
                .tensor(&jd.psi(&Chain::from_label((**b).clone(), 0)))
        });
        crate::james::rebracket(&left).sub(&right)
    })?);

    // Bott-Samelson
    let ah = jd.alpha_hat();
    let mut bs = IdentityCheck::pass("α̂ bijective on basis", format!("degree <= {deg}"));
    'bs: for d in 0..=deg {
        let src = jd.hopf.words(d, Some(bounds.max_word_length))?;
        let dst = jd.omega.words(d, Some(bounds.max_word_length))?;
        let mut image: Vec<BasisLabel> = src.iter().map(|w| jd.alpha_hat_label(w)).collect();
        image.sort();
        image.dedup();
        if image.len() != src.len() || image != dst {
            bs = IdentityCheck::fail(
                "α̂ bijective on basis",
                format!("degree <= {deg}"),
                format!("degree {d}"),
            );
            break 'bs;
        }
    }
    checks.push(bs);
    let hw = |d: usize| jd.hopf.words(d, Some(word_len));
    checks.push(IdentityCheck::on_basis("α̂ is a chain map", deg, &hw, &|w| {
        ah.apply(&jd.hopf.diff_label(w))
            .sub(&jd.omega.diff_label(&jd.alpha_hat_label(w)))
    })?);
    checks.push(IdentityCheck::on_basis(
        "(α̂⊗α̂)Δ̂ = ψ α̂",
        deg,
        &hw,
        &|w| {
            apply_tensor(&jd.hopf.diagonal_label(w), &ah, &ah).sub(&jd.psi(&ah.apply_label(w)))
        },
    )?);

    // the comparison triangle
    let gamma = jd.gamma();
    checks.push(IdentityCheck::on_basis("γα = C(η)", deg, &basis, &|l| {
        gamma.apply(&jd.alpha_label(l)).sub(&jd.c_eta(l))
    })?);
    checks.push(IdentityCheck::on_basis("γ is a chain map", deg, &words, &|w| {
        gamma
            .apply(&jd.omega.diff_label(w))
            .sub(&jd.c_james.diff(&gamma.apply_label(w)))
    })?);

    // the "wrong" coproduct agrees exactly when the middle terms vanish
    let mut foil = IdentityCheck::pass(
        "ψ = qΩ(Δ) iff F₂-terms vanish",
        format!("degree <= {deg}"),
    );
    'foil: for d in 1..=deg {
        for z in jd.ek.nondeg(d)? {
            let w = Chain::from_label(
                BasisLabel::Word(vec![BasisLabel::Simplex(z.clone())]),
                0,
            );
            let psi = jd.psi(&w);
            let wrong = jd.wrong_coproduct(&w);
            let middle_terms = jd.xi_closed(&z).len() > 2;
            if (psi == wrong) == middle_terms {
                foil = IdentityCheck::fail(
                    "ψ = qΩ(Δ) iff F₂-terms vanish",
                    format!("degree <= {deg}"),
                    format!("(1,x) = {z}"),
                );
                break 'foil;
            }
        }
    }
    checks.push(foil);

    Ok(VerificationReport::new("james", k.name(), *bounds, checks))
}

/// Szczarba: operator table facts, the collapse of the raw sum, the
/// twisting-cochain equation and comultiplicativity of `θ`.
pub fn suite_szczarba(k: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    let sd = SzczarbaData::new(k)?;
    let deg = bounds.max_degree.min(4);

    let mut table = IdentityCheck::pass("D^n_{0,1} = id", "n <= 6".into());
    for n in 1..=6 {
        if !d_operator(n, 1)?.is_identity() {
            table = IdentityCheck::fail("D^n_{0,1} = id", "n <= 6".into(), format!("n = {n}"));
            break;
        }
    }
    checks.push(table);

    let mut lemma = IdentityCheck::pass(
        "D^n_{0,i≥2} begins with a degeneracy, no ∂₀",
        "n <= 6".into(),
    );
    'lemma: for n in 2..=6 {
        let mut fact = 1;
        for t in 1..n {
            fact *= t;
        }
        for i in 2..=fact {
            let op = d_operator(n, i)?;
            if !op.begins_with_degeneracy() || op.faces.iter().any(|&j| j == 0) {
                lemma = IdentityCheck::fail(
                    "D^n_{0,i≥2} begins with a degeneracy, no ∂₀",
                    "n <= 6".into(),
                    format!("D^{n}_{{0,{i}}} = {op}"),
                );
                break 'lemma;
            }
        }
    }
    checks.push(lemma);

    checks.push(IdentityCheck::on_basis(
        "raw t_EK = (-1)^{n+1}τ((1,x))^{-1}",
        bounds.max_degree.min(5),
        &|d| {
            Ok(sd
                .jd
                .ek
                .nondeg(d)?
                .into_iter()
                .map(BasisLabel::Simplex)
                .collect())
        },
        &|l| {
            let z = l.as_simplex().unwrap();
            if z.dim() == 0 {
                return Chain::zero(0, 0);
            }
            sd.t_ek_raw(z).unwrap().sub(&sd.t_ek_closed(z))
        },
    )?);

    checks.push(match sd.check_twisting(deg)? {
        None => IdentityCheck::pass("t_EK is a twisting cochain", format!("degree <= {deg}")),
        Some(w) => {
            IdentityCheck::fail("t_EK is a twisting cochain", format!("degree <= {deg}"), w)
        }
    });

    let theta = sd.theta();
    let words = |d: usize| sd.jd.omega.words(d, Some(2));
    checks.push(IdentityCheck::on_basis("θ is a chain map", deg, &words, &|w| {
        theta
            .apply(&sd.jd.omega.diff_label(w))
            .sub(&sd.c_gek.diff(&theta.apply_label(w)))
    })?);
    checks.push(IdentityCheck::on_basis(
        "Δθ = (θ⊗θ)ψ",
        deg,
        &words,
        &|w| sd.comultiplicativity_defect(w),
    )?);

    Ok(VerificationReport::new("szczarba", k.name(), *bounds, checks))
}

/// Appendix A identities.
pub fn suite_milgram(a: &Space, b: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let checks = milgram_sdr_verify(
        a,
        b,
        bounds.max_degree.min(5),
        bounds.max_word_length.min(3),
    )?;
    Ok(VerificationReport::new(
        "milgram",
        format!("{},{}", a.name(), b.name()),
        *bounds,
        checks,
    ))
}

/// Homology tables with Smith normal form, plus order-independence.
pub fn suite_homology(space: &Space, bounds: &Bounds) -> Result<VerificationReport> {
    let cap = 20_000;
    let mut checks = Vec::new();
    let mut tables = serde_json::Map::new();
    let deg = bounds.max_degree;

    let describe = |h: &[crate::snf::HomologySummand]| -> Value {
        json!(h
            .iter()
            .map(|s| {
                json!({
                    "degree": s.degree,
                    "rank": s.rank,
                    "torsion": s.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>())
    };

    match space.word_kind() {
        None => {
            let cx = NormalizedChains::new(space.clone());
            let h = homology_ranks(&cx, deg.min(space.top_dim().unwrap_or(deg)), cap)?;
            checks.push(IdentityCheck::pass(
                &format!("H₀({}) has rank {}", cx.name(), h[0].rank),
                format!("degree <= {deg}"),
            ));
            tables.insert(cx.name(), describe(&h));
            // cobar homology when defined; the word-length bound applies
            // only where degree-zero letters make the basis infinite
            let coalg = Coalgebra::chains(space.clone());
            if coalg.is_connected() {
                let omega = CobarAlgebra::new(coalg)?;
                let max_len = if omega.has_degree_zero_letters() {
                    Some(bounds.max_word_length)
                } else {
                    None
                };
                let ocx = CobarComplex {
                    algebra: omega,
                    max_len,
                };
                let h = homology_ranks(&ocx, deg, cap)?;
                tables.insert(ocx.name(), describe(&h));
            }
        }
        Some(_) => {
            let cx = WordChains::new(space.clone(), bounds.max_word_length);
            let h = homology_ranks(&cx, deg.min(4), cap)?;
            tables.insert(cx.name(), describe(&h));
        }
    }

    // ranks do not depend on basis enumeration order
    struct Shuffled<'a> {
        inner: &'a dyn FreeComplex,
        seed: u64,
    }
    impl<'a> FreeComplex for Shuffled<'a> {
        fn name(&self) -> String {
            format!("{} (shuffled)", self.inner.name())
        }
        fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
            let mut b = self.inner.basis(degree)?;
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ degree as u64);
            b.shuffle(&mut rng);
            Ok(b)
        }
        fn diff(&self, label: &BasisLabel) -> Chain {
            self.inner.diff(label)
        }
    }
    let base: Box<dyn FreeComplex> = match space.word_kind() {
        None => Box::new(NormalizedChains::new(space.clone())),
        Some(_) => Box::new(WordChains::new(space.clone(), bounds.max_word_length)),
    };
    let d = deg.min(3);
    let h1 = homology_ranks(base.as_ref(), d, cap)?;
    let h2 = homology_ranks(
        &Shuffled {
            inner: base.as_ref(),
            seed: bounds.seed,
        },
        d,
        cap,
    )?;
    checks.push(if h1 == h2 {
        IdentityCheck::pass("ranks independent of basis order", format!("degree <= {d}"))
    } else {
        IdentityCheck::fail(
            "ranks independent of basis order",
            format!("degree <= {d}"),
            "shuffled basis changed the answer".into(),
        )
    });

    let mut report =
        VerificationReport::new("homology", space.name(), *bounds, checks);
    report.pass = report.pass && report.checks.iter().all(|c| c.pass);
    report.data = Some(Value::Object(tables));
    Ok(report)
}

/// Runs one named suite. `fixture` falls back to a per-suite default.
pub fn run_suite(suite: &str, fixture: Option<&str>, bounds: &Bounds) -> Result<Vec<VerificationReport>> {
    match suite {
        "simplicial" => {
            let spec = fixture.unwrap_or("product(S1, S1)");
            let space = fixtures::parse_space(spec)?;
            Ok(vec![suite_simplicial(&space, bounds)?])
        }
        "chains" => {
            let spec = fixture.unwrap_or("ES1");
            let space = fixtures::parse_space(spec)?;
            Ok(vec![suite_chains(&space, bounds)?])
        }
        "ez-sdr" => {
            let (k, l) = parse_fixture_pair(fixture.unwrap_or("S1,S1"))?;
            Ok(vec![suite_ez_sdr(&k, &l, bounds)?])
        }
        "gm" => {
            let (k, l) = parse_fixture_pair(fixture.unwrap_or("ES1,ES1"))?;
            Ok(vec![suite_gm(&k, &l, bounds)?])
        }
        "james" => {
            let space = fixtures::parse_space(fixture.unwrap_or("S1"))?;
            Ok(vec![suite_james(&space, bounds)?])
        }
        "szczarba" => {
            let space = fixtures::parse_space(fixture.unwrap_or("S1"))?;
            Ok(vec![suite_szczarba(&space, bounds)?])
        }
        "milgram" => {
            let (a, b) = parse_fixture_pair(fixture.unwrap_or("S1,S1"))?;
            Ok(vec![suite_milgram(&a, &b, bounds)?])
        }
        "homology" => {
            let space = fixtures::parse_space(fixture.unwrap_or("ES1"))?;
            Ok(vec![suite_homology(&space, bounds)?])
        }
        "all" => {
            let mut out = Vec::new();
            let small = Bounds {
                max_degree: bounds.max_degree.min(4),
                ..*bounds
            };
            out.extend(run_suite("simplicial", fixture.or(Some("product(S1, S1)")), &small)?);
            out.extend(run_suite("chains", fixture.or(Some("ES1")), bounds)?);
            out.extend(run_suite("ez-sdr", None, &small)?);
            out.extend(run_suite("gm", None, &small)?);
            out.extend(run_suite("james", fixture.or(Some("S1")), &small)?);
            out.extend(run_suite("szczarba", fixture.or(Some("S1")), &small)?);
            out.extend(run_suite("milgram", None, &small)?);
            out.extend(run_suite("homology", None, bounds)?);
            Ok(out)
        }
        other => Err(Error::Usage(format!("unknown suite {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_degree: 3,
            max_word_length: 3,
            ..Bounds::default()
        }
    }

    #[test]
    fn simplicial_suite_on_product_and_monoid() {
        let s1 = fixtures::parse_space("S1").unwrap();
        let r = suite_simplicial(&s1.product(&s1), &small()).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        let j = fixtures::parse_space("james(S1)").unwrap();
        let r = suite_simplicial(&j, &small()).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        let g = fixtures::parse_space("loopgroup(ES1)").unwrap();
        let r = suite_simplicial(&g, &small()).unwrap();
        assert!(r.pass, "{:?}", r.checks);
    }

    #[test]
    fn chains_suite() {
        for spec in ["ES1", "product(S1, D1)", "james(S1)"] {
            let space = fixtures::parse_space(spec).unwrap();
            let r = suite_chains(&space, &small()).unwrap();
            assert!(r.pass, "{spec}: {:?}", r.checks);
        }
    }

    #[test]
    fn james_suite_on_delta1() {
        let d1 = fixtures::parse_space("D1").unwrap();
        let r = suite_james(&d1, &small()).unwrap();
        assert!(r.pass, "{:?}", r.checks);
    }

    #[test]
    fn report_serialization_is_deterministic() {
        let b = small();
        let r1 = run_suite("ez-sdr", Some("S1,D1"), &b).unwrap();
        let r2 = run_suite("ez-sdr", Some("S1,D1"), &b).unwrap();
        let s1 = serde_json::to_string(&r1.iter().map(|r| r.to_json()).collect::<Vec<_>>()).unwrap();
        let s2 = serde_json::to_string(&r2.iter().map(|r| r.to_json()).collect::<Vec<_>>()).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn homology_suite_reports_tables() {
        let r = suite_homology(
            &fixtures::parse_space("ES1").unwrap(),
            &Bounds {
                max_degree: 4,
                ..small()
            },
        )
        .unwrap();
        assert!(r.pass);
        let data = r.data.unwrap();
        let table = &data["ΩC(E(S1))"];
        assert!(table.is_array(), "{data}");
        // EK of a reduced complex has no degree-zero cobar letters, so the
        // table is unbounded and matches the loop-space answer exactly
        let ranks: Vec<u64> = table
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row["rank"].as_u64().unwrap())
            .collect();
        assert_eq!(ranks, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn unknown_suite_errors() {
        assert!(run_suite("nonsense", None, &small()).is_err());
    }
}
