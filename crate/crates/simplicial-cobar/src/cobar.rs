//! The cobar construction `Ω(C)`, twisting cochains, the algebra maps they
//! induce, and the free chain Hopf algebra `(T C̃(K), d̂, Δ̂)`.
//!
//! Sign conventions: a cobar letter `[c]` has degree `deg c - 1`, the
//! differential on a generator is `d_Ω[c] = -[dc] + Σ (-1)^{|c'|}[c'|c'']`
//! over the reduced diagonal `Δ̄c = Σ c'⊗c''`, and the derivation extension
//! carries the Koszul prefix sign. These choices are pinned by `d_Ω² = 0`
//! and by the linear differential formula on suspensions, both asserted in
//! the tests.

use std::sync::Arc;

use crate::chains::{BasisLabel, Chain, ChainMap, FreeComplex};
use crate::coalgebra::Coalgebra;
use crate::{Error, Result};

/// A chain algebra presented by operations on chains of labels.
pub trait DgAlgebra: Send + Sync {
    fn name(&self) -> String;
    fn modulus(&self) -> u32;
    fn unit(&self) -> Chain;
    fn mul(&self, a: &Chain, b: &Chain) -> Chain;
    fn diff(&self, a: &Chain) -> Chain;
}

/// The cobar construction on a connected coaugmented coalgebra.
#[derive(Clone)]
pub struct CobarAlgebra {
    pub coalgebra: Arc<Coalgebra>,
}

impl CobarAlgebra {
    pub fn new(coalgebra: Coalgebra) -> Result<Self> {
        coalgebra.require_connected()?;
        Ok(CobarAlgebra {
            coalgebra: Arc::new(coalgebra),
        })
    }

    /// Generators of cobar degree `n`: the reduced basis in degree `n+1`.
    pub fn letters(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.coalgebra.reduced_basis(degree + 1)
    }

    pub fn has_degree_zero_letters(&self) -> bool {
        self.letters(0).map(|l| !l.is_empty()).unwrap_or(false)
    }

    /// Basis words of one degree, with an optional word-length bound. The
    /// bound is mandatory when degree-zero letters exist.
    pub fn words(&self, degree: usize, max_len: Option<usize>) -> Result<Vec<BasisLabel>> {
        if self.has_degree_zero_letters() && max_len.is_none() {
            return Err(Error::InfiniteBasis {
                complex: self.name(),
                degree,
            });
        }
        let mut letters_by_deg: Vec<Vec<BasisLabel>> = Vec::new();
        for d in 0..=degree {
            letters_by_deg.push(self.letters(d)?);
        }
        let mut out = Vec::new();
        let mut word: Vec<BasisLabel> = Vec::new();
        fn rec(
            letters_by_deg: &[Vec<BasisLabel>],
            remaining: usize,
            budget: Option<usize>,
            word: &mut Vec<BasisLabel>,
            out: &mut Vec<BasisLabel>,
        ) {
            if remaining == 0 && (budget.is_none() || word.len() <= budget.unwrap()) {
                out.push(BasisLabel::Word(word.clone()));
            }
            if let Some(b) = budget {
                if word.len() >= b {
                    return;
                }
            }
            for d in 0..=remaining {
                for l in &letters_by_deg[d] {
                    word.push(l.clone());
                    rec(letters_by_deg, remaining - d, budget, word, out);
                    word.pop();
                }
            }
        }
        rec(&letters_by_deg, degree, max_len, &mut word, &mut out);
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `d_Ω` on a single letter, as a chain of words of length one and two.
    pub fn diff_letter(&self, letter: &BasisLabel) -> Chain {
        let m = self.modulus();
        let out_degree = letter.degree().saturating_sub(2); // cobar degree - 1
        let mut out = Chain::zero(out_degree, m);
        // linear part: -[dc], rewritten in the reduced basis
        for (l, c) in self.coalgebra.reduced_diff(letter).terms() {
            out.add_term(BasisLabel::Word(vec![l.clone()]), -c);
        }
        // quadratic part: (-1)^{|c'|} [c'|c''] over the reduced diagonal
        for (pair, c) in self.coalgebra.reduced_diagonal(letter).terms() {
            let (a, b) = match pair {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            let sign = if a.degree() % 2 == 0 { 1 } else { -1 };
            out.add_term(
                BasisLabel::Word(vec![(**a).clone(), (**b).clone()]),
                sign * c,
            );
        }
        out
    }

    /// The derivation extension of `diff_letter` to words.
    pub fn diff_label(&self, label: &BasisLabel) -> Chain {
        let letters = match label {
            BasisLabel::Word(ls) => ls,
            _ => panic!("cobar differential on non-word {label}"),
        };
        let degree = label.degree();
        let mut out = Chain::zero(degree.saturating_sub(1), self.modulus());
        let mut prefix = 0usize;
        for (i, letter) in letters.iter().enumerate() {
            let sign = if prefix % 2 == 0 { 1 } else { -1 };
            for (w, c) in self.diff_letter(letter).terms() {
                let inner = match w {
                    BasisLabel::Word(ws) => ws,
                    _ => unreachable!(),
                };
                let mut spliced = letters[..i].to_vec();
                spliced.extend(inner.iter().cloned());
                spliced.extend(letters[i + 1..].iter().cloned());
                out.add_term(BasisLabel::Word(spliced), sign * c);
            }
            prefix += letter.degree() - 1;
        }
        out
    }
}

impl DgAlgebra for CobarAlgebra {
    fn name(&self) -> String {
        format!("Ω{}", self.coalgebra.name())
    }

    fn modulus(&self) -> u32 {
        self.coalgebra.modulus()
    }

    fn unit(&self) -> Chain {
        Chain::from_label(BasisLabel::Word(vec![]), self.modulus())
    }

    fn mul(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero(a.degree + b.degree, self.modulus());
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let (lu, lv) = match (u, v) {
                    (BasisLabel::Word(lu), BasisLabel::Word(lv)) => (lu, lv),
                    _ => panic!("cobar product on non-words"),
                };
                let mut w = lu.clone();
                w.extend(lv.iter().cloned());
                out.add_term(BasisLabel::Word(w), cu * cv);
            }
        }
        out
    }

    fn diff(&self, a: &Chain) -> Chain {
        a.map_labels(a.degree.saturating_sub(1), |l| self.diff_label(l))
    }
}

/// `Ω(C)` as a free complex, for homology. The word-length bound is
/// required exactly when degree-zero letters exist.
pub struct CobarComplex {
    pub algebra: CobarAlgebra,
    pub max_len: Option<usize>,
}

impl FreeComplex for CobarComplex {
    fn name(&self) -> String {
        match self.max_len {
            Some(l) => format!("{}[len<={l}]", self.algebra.name()),
            None => self.algebra.name(),
        }
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.algebra.words(degree, self.max_len)
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        self.algebra.diff_label(label)
    }

    fn modulus(&self) -> u32 {
        self.algebra.modulus()
    }
}

/// Tensor product of two chain algebras, with the Koszul product
/// `(u⊗v)(u'⊗v') = (-1)^{|v||u'|} uu' ⊗ vv'`.
pub struct TensorAlgebra {
    pub left: Arc<dyn DgAlgebra>,
    pub right: Arc<dyn DgAlgebra>,
}

impl TensorAlgebra {
    pub fn new(left: Arc<dyn DgAlgebra>, right: Arc<dyn DgAlgebra>) -> Self {
        TensorAlgebra { left, right }
    }
}

impl DgAlgebra for TensorAlgebra {
    fn name(&self) -> String {
        format!("{} (x) {}", self.left.name(), self.right.name())
    }

    fn modulus(&self) -> u32 {
        self.left.modulus()
    }

    fn unit(&self) -> Chain {
        self.left.unit().tensor(&self.right.unit())
    }

    fn mul(&self, a: &Chain, b: &Chain) -> Chain {
        let m = self.modulus();
        let mut out = Chain::zero(a.degree + b.degree, m);
        for (x, cx) in a.terms() {
            let (u, v) = match x {
                BasisLabel::Tensor(u, v) => (u, v),
                _ => panic!("tensor product on non-tensor label"),
            };
            for (y, cy) in b.terms() {
                let (u2, v2) = match y {
                    BasisLabel::Tensor(u2, v2) => (u2, v2),
                    _ => panic!("tensor product on non-tensor label"),
                };
                let sign = if (v.degree() * u2.degree()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let uu = self.left.mul(
                    &Chain::from_label((**u).clone(), m),
                    &Chain::from_label((**u2).clone(), m),
                );
                let vv = self.right.mul(
                    &Chain::from_label((**v).clone(), m),
                    &Chain::from_label((**v2).clone(), m),
                );
                for (wu, cu) in uu.terms() {
                    for (wv, cv) in vv.terms() {
                        out.add_term(
                            BasisLabel::tensor(wu.clone(), wv.clone()),
                            sign * cx * cy * cu * cv,
                        );
                    }
                }
            }
        }
        out
    }

    fn diff(&self, a: &Chain) -> Chain {
        let m = self.modulus();
        let mut out = Chain::zero(a.degree.saturating_sub(1), m);
        for (x, cx) in a.terms() {
            let (u, v) = match x {
                BasisLabel::Tensor(u, v) => (u, v),
                _ => panic!("tensor differential on non-tensor label"),
            };
            let du = self.left.diff(&Chain::from_label((**u).clone(), m));
            for (w, c) in du.terms() {
                out.add_term(BasisLabel::tensor(w.clone(), (**v).clone()), cx * c);
            }
            let sign = if u.degree() % 2 == 0 { 1 } else { -1 };
            let dv = self.right.diff(&Chain::from_label((**v).clone(), m));
            for (w, c) in dv.terms() {
                out.add_term(BasisLabel::tensor((**u).clone(), w.clone()), sign * cx * c);
            }
        }
        out
    }
}

/// A degree `-1` map from a coalgebra to a chain algebra, presented by its
/// values on basis labels; candidate twisting cochain.
#[derive(Clone)]
pub struct TwistingCochain {
    pub name: String,
    eval: Arc<dyn Fn(&BasisLabel) -> Chain + Send + Sync>,
}

impl TwistingCochain {
    pub fn new<F>(name: &str, f: F) -> Self
    where
        F: Fn(&BasisLabel) -> Chain + Send + Sync + 'static,
    {
        TwistingCochain {
            name: name.into(),
            eval: Arc::new(f),
        }
    }

    pub fn apply_label(&self, label: &BasisLabel) -> Chain {
        (self.eval)(label)
    }

    pub fn apply(&self, chain: &Chain) -> Chain {
        let degree = chain.degree.saturating_sub(1);
        chain.map_labels(degree, |l| (self.eval)(l))
    }
}

/// Verifies `dt + td = μ(t⊗t)Δ` on every basis label of `source` up to the
/// degree bound; returns the first counterexample.
pub fn twisting_cochain_check(
    t: &TwistingCochain,
    source: &Coalgebra,
    target: &dyn DgAlgebra,
    max_degree: usize,
) -> Result<Option<(BasisLabel, Chain)>> {
    for n in 0..=max_degree {
        for label in source.basis(n)? {
            let lhs = target
                .diff(&t.apply_label(&label))
                .add(&t.apply(&source.diff(&label)));
            // μ(t⊗t)Δ with the Koszul sign (-1)^{|c'|} for odd t
            let mut rhs = Chain::zero(n.saturating_sub(2), target.modulus());
            for (pair, c) in source.diagonal(&label).terms() {
                let (a, b) = match pair {
                    BasisLabel::Tensor(a, b) => (a, b),
                    _ => unreachable!(),
                };
                if a.degree() == 0 || b.degree() == 0 {
                    continue; // t vanishes in degree 0
                }
                let ta = t.apply_label(a);
                let tb = t.apply_label(b);
                let sign = if a.degree() % 2 == 0 { 1 } else { -1 };
                rhs = rhs.add(&target.mul(&ta, &tb).scale(sign * c));
            }
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Ok(Some((label, defect)));
            }
        }
    }
    Ok(None)
}

/// The chain algebra map `θ: Ω(C) → A` with `θ[c] = t(c)`, extended
/// multiplicatively over words.
pub fn cochain_to_algebra_map(t: &TwistingCochain, target: Arc<dyn DgAlgebra>) -> ChainMap {
    let t = t.clone();
    ChainMap::new(0, move |label| {
        let letters = match label {
            BasisLabel::Word(ls) => ls,
            _ => panic!("algebra map applied to non-word {label}"),
        };
        let mut acc = target.unit();
        for l in letters {
            acc = target.mul(&acc, &t.apply_label(l));
        }
        acc
    })
}

/// The free chain Hopf algebra `(T C̃(K), d̂, Δ̂_K)`: the derivation
/// extension of the differential of `C(K)` and the algebra-morphism
/// extension of the Alexander-Whitney diagonal.
pub struct TensorHopf {
    pub coalgebra: Arc<Coalgebra>,
}

impl TensorHopf {
    pub fn new(coalgebra: Coalgebra) -> Self {
        TensorHopf {
            coalgebra: Arc::new(coalgebra),
        }
    }

    /// Letters: the reduced basis of `C(K)`, including degree 0.
    pub fn letters(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.coalgebra.reduced_basis(degree)
    }

    pub fn has_degree_zero_letters(&self) -> bool {
        self.letters(0).map(|l| !l.is_empty()).unwrap_or(false)
    }

    pub fn words(&self, degree: usize, max_len: Option<usize>) -> Result<Vec<BasisLabel>> {
        if self.has_degree_zero_letters() && max_len.is_none() {
            return Err(Error::InfiniteBasis {
                complex: self.name(),
                degree,
            });
        }
        let mut letters_by_deg: Vec<Vec<BasisLabel>> = Vec::new();
        for d in 0..=degree {
            letters_by_deg.push(self.letters(d)?);
        }
        let mut out = Vec::new();
        fn rec(
            letters_by_deg: &[Vec<BasisLabel>],
            remaining: usize,
            budget: Option<usize>,
            word: &mut Vec<BasisLabel>,
            out: &mut Vec<BasisLabel>,
        ) {
            if remaining == 0 && (budget.is_none() || word.len() <= budget.unwrap()) {
                out.push(BasisLabel::FreeWord(word.clone()));
            }
            if let Some(b) = budget {
                if word.len() >= b {
                    return;
                }
            }
            for d in 0..=remaining {
                for l in &letters_by_deg[d] {
                    word.push(l.clone());
                    rec(letters_by_deg, remaining - d, budget, word, out);
                    word.pop();
                }
            }
        }
        rec(&letters_by_deg, degree, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `d̂` on a word: the derivation extension of the reduced differential.
    pub fn diff_label(&self, label: &BasisLabel) -> Chain {
        let letters = match label {
            BasisLabel::FreeWord(ls) => ls,
            _ => panic!("tensor-algebra differential on {label}"),
        };
        let degree = label.degree();
        let mut out = Chain::zero(degree.saturating_sub(1), self.modulus());
        let mut prefix = 0usize;
        for (i, letter) in letters.iter().enumerate() {
            let sign = if prefix % 2 == 0 { 1 } else { -1 };
            for (l, c) in self.coalgebra.reduced_diff(letter).terms() {
                let mut spliced = letters[..i].to_vec();
                spliced.push(l.clone());
                spliced.extend(letters[i + 1..].iter().cloned());
                out.add_term(BasisLabel::FreeWord(spliced), sign * c);
            }
            prefix += letter.degree();
        }
        out
    }

    /// `ρ: C(K) → T C̃(K)` sending `k_0 ↦ []`, a vertex `y ↦ [y-k_0] + []`,
    /// and `x ↦ [x]` in higher degrees.
    pub fn rho(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        let mut out = Chain::zero(label.degree(), m);
        for (l, c) in self.coalgebra.pi(label).terms() {
            out.add_term(BasisLabel::FreeWord(vec![l.clone()]), c);
        }
        let e = self.coalgebra.counit(label);
        if e != 0 {
            out.add_term(BasisLabel::FreeWord(vec![]), e);
        }
        out
    }

    /// `Δ̂` on a letter: `(ρ⊗ρ) Δ_K`, landing in `T C̃ ⊗ T C̃`.
    pub fn diagonal_letter(&self, letter: &BasisLabel) -> Chain {
        let m = self.modulus();
        let mut out = Chain::zero(letter.degree(), m);
        for (pair, c) in self.coalgebra.diagonal(letter).terms() {
            let (a, b) = match pair {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            for (x, cx) in self.rho(a).terms() {
                for (y, cy) in self.rho(b).terms() {
                    out.add_term(BasisLabel::tensor(x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }

    /// `Δ̂` on a word: the algebra-morphism extension into `T⊗T`.
    pub fn diagonal_label(&self, label: &BasisLabel) -> Chain {
        let letters = match label {
            BasisLabel::FreeWord(ls) => ls,
            _ => panic!("tensor-algebra diagonal on {label}"),
        };
        let sq = TensorAlgebra::new(
            Arc::new(FreeWordAlgebra::of(self)),
            Arc::new(FreeWordAlgebra::of(self)),
        );
        let mut acc = sq.unit();
        for l in letters {
            acc = sq.mul(&acc, &self.diagonal_letter(l));
        }
        acc
    }

    fn name(&self) -> String {
        format!("T(C~{})", self.coalgebra.name())
    }

    fn modulus(&self) -> u32 {
        self.coalgebra.modulus()
    }
}

/// `T C̃(K)` as a plain chain algebra (concatenation product).
pub struct FreeWordAlgebra {
    coalgebra: Arc<Coalgebra>,
}

impl FreeWordAlgebra {
    pub fn of(h: &TensorHopf) -> Self {
        FreeWordAlgebra {
            coalgebra: Arc::clone(&h.coalgebra),
        }
    }
}

impl DgAlgebra for FreeWordAlgebra {
    fn name(&self) -> String {
        format!("T(C~{})", self.coalgebra.name())
    }

    fn modulus(&self) -> u32 {
        self.coalgebra.modulus()
    }

    fn unit(&self) -> Chain {
        Chain::from_label(BasisLabel::FreeWord(vec![]), self.modulus())
    }

    fn mul(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero(a.degree + b.degree, self.modulus());
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let (lu, lv) = match (u, v) {
                    (BasisLabel::FreeWord(lu), BasisLabel::FreeWord(lv)) => (lu, lv),
                    _ => panic!("free-word product on non-words"),
                };
                let mut w = lu.clone();
                w.extend(lv.iter().cloned());
                out.add_term(BasisLabel::FreeWord(w), cu * cv);
            }
        }
        out
    }

    fn diff(&self, a: &Chain) -> Chain {
        let h = TensorHopf {
            coalgebra: Arc::clone(&self.coalgebra),
        };
        a.map_labels(a.degree.saturating_sub(1), |l| h.diff_label(l))
    }
}

/// `T C̃(K)` as a free complex.
pub struct TensorHopfComplex {
    pub hopf: TensorHopf,
    pub max_len: Option<usize>,
}

impl FreeComplex for TensorHopfComplex {
    fn name(&self) -> String {
        self.hopf.name()
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.hopf.words(degree, self.max_len)
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        self.hopf.diff_label(label)
    }

    fn modulus(&self) -> u32 {
        self.hopf.modulus()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::BasisLabel as L;
    use crate::fixtures;
    use crate::simplicial::Simplex;

    #[test]
    fn cobar_requires_connected() {
        assert!(CobarAlgebra::new(Coalgebra::chains(fixtures::sphere(0))).is_err());
        assert!(CobarAlgebra::new(Coalgebra::chains(fixtures::sphere(1))).is_ok());
    }

    #[test]
    fn unit_is_a_cycle() {
        let omega = CobarAlgebra::new(Coalgebra::chains(fixtures::sphere(1))).unwrap();
        assert!(omega.diff(&omega.unit()).is_zero());
    }

    #[test]
    fn linear_differential_on_suspension() {
        // d_Ω[(1,x)] = Σ_j (-1)^j [(1, ∂_j x)] for x ∈ K_n
        let d2 = fixtures::delta(2);
        let ed2 = d2.suspension();
        let omega = CobarAlgebra::new(Coalgebra::chains(ed2.clone())).unwrap();
        let x = d2.nondeg(2).unwrap()[0].clone();
        let w = L::Word(vec![L::Simplex(Simplex::cone(&x))]);
        let d = omega.diff_label(&w);
        let mut expect = Chain::zero(1, 0);
        for j in 0..=2usize {
            let f = Simplex::cone(&x.face(j));
            if !f.is_degenerate() {
                expect.add_term(
                    L::Word(vec![L::Simplex(f)]),
                    if j % 2 == 0 { 1 } else { -1 },
                );
            }
        }
        assert_eq!(d, expect);
    }

    #[test]
    fn quadratic_sign_on_torus() {
        // For c with Δ̄c ∋ a⊗b, d_Ω[c] carries (-1)^{|a|}[a|b]. On the
        // torus Δ̄(s_0 x, s_1 x) = (k_1, x) ⊗ (x, k_1), |a| = 1.
        let s1 = fixtures::sphere(1);
        let t = s1.product(&s1);
        let omega = CobarAlgebra::new(Coalgebra::chains(t.clone())).unwrap();
        let x = s1.nondeg(1).unwrap()[0].clone();
        let c = Simplex::pair(&x.degeneracy(0), &x.degeneracy(1));
        let a = Simplex::pair(&Simplex::basepoint(1), &x);
        let b = Simplex::pair(&x, &Simplex::basepoint(1));
        // first check the reduced diagonal itself
        let red = omega.coalgebra.reduced_diagonal(&L::Simplex(c.clone()));
        assert_eq!(
            red.coeff(&L::tensor(L::Simplex(a.clone()), L::Simplex(b.clone()))),
            1,
            "Δ̄(s0x, s1x) = {red}"
        );
        let d = omega.diff_label(&L::Word(vec![L::Simplex(c)]));
        // |a| = 1: sign (-1)^1 = -1
        assert_eq!(
            d.coeff(&L::Word(vec![L::Simplex(a), L::Simplex(b)])),
            -1,
            "d was {d}"
        );
    }

    #[test]
    fn cobar_d_squared_zero() {
        for base in [fixtures::sphere(1), fixtures::delta(1), fixtures::sphere(0)] {
            let ek = base.suspension();
            let omega = CobarAlgebra::new(Coalgebra::chains(ek)).unwrap();
            // on generators up to degree 6
            for degree in 0..=6 {
                for l in omega.letters(degree).unwrap() {
                    let w = BasisLabel::Word(vec![l]);
                    let dd = omega.diff(&omega.diff_label(&w));
                    assert!(dd.is_zero(), "d²{w} = {dd}");
                }
            }
            // and on words
            for degree in 0..=4 {
                for w in omega.words(degree, Some(4)).unwrap() {
                    let d = omega.diff_label(&w);
                    let dd = omega.diff(&d);
                    assert!(dd.is_zero(), "d²{w} = {dd}");
                }
            }
        }
        // and on a coalgebra with nonvanishing reduced diagonal
        let s1 = fixtures::sphere(1);
        let omega = CobarAlgebra::new(Coalgebra::chains(s1.product(&s1))).unwrap();
        for degree in 0..=4 {
            for w in omega.words(degree, Some(3)).unwrap() {
                let d = omega.diff_label(&w);
                let dd = omega.diff(&d);
                assert!(dd.is_zero(), "d²{w} = {dd}");
            }
        }
    }

    #[test]
    fn cobar_of_es1_is_one_generator_per_degree() {
        let omega =
            CobarAlgebra::new(Coalgebra::chains(fixtures::sphere(1).suspension())).unwrap();
        for degree in 0..=6 {
            assert_eq!(omega.words(degree, None).unwrap().len(), 1);
        }
    }

    #[test]
    fn twisting_cochain_round_trip() {
        // γ-like setup is exercised elsewhere; here: the cochain extracted
        // from the algebra map on single-letter words returns the values.
        let es1 = fixtures::sphere(1).suspension();
        let omega = Arc::new(
            CobarAlgebra::new(Coalgebra::chains(es1.clone())).unwrap(),
        );
        let letter = omega.letters(1).unwrap()[0].clone();
        // cochain into Ω itself: c ↦ [c] on the 2-simplex, 0 otherwise
        let m = omega.modulus();
        let l2 = letter.clone();
        let t = TwistingCochain::new("unit-cochain", move |l| {
            if *l == l2 {
                Chain::from_label(BasisLabel::Word(vec![l.clone()]), m)
            } else {
                Chain::zero(l.degree().saturating_sub(1), m)
            }
        });
        let theta = cochain_to_algebra_map(&t, omega.clone());
        let w = BasisLabel::Word(vec![letter.clone(), letter.clone()]);
        let img = theta.apply_label(&w);
        assert_eq!(img.coeff(&w), 1);
        // restriction to a single letter returns t
        let single = theta.apply_label(&BasisLabel::Word(vec![letter.clone()]));
        assert_eq!(single, t.apply_label(&letter));
    }

    #[test]
    fn tensor_hopf_structures() {
        // Δ̂ on the empty word is [] ⊗ []
        let h = TensorHopf::new(Coalgebra::chains(fixtures::sphere(1)));
        let empty = BasisLabel::FreeWord(vec![]);
        let d = h.diagonal_label(&empty);
        assert_eq!(d.coeff(&L::tensor(empty.clone(), empty.clone())), 1);
        assert_eq!(d.len(), 1);
        // Δ̂(x) = x⊗1 + 1⊗x for the S¹ generator
        let x = h.letters(1).unwrap()[0].clone();
        let wx = BasisLabel::FreeWord(vec![x.clone()]);
        let dx = h.diagonal_label(&wx);
        assert_eq!(dx.len(), 2);
        assert_eq!(dx.coeff(&L::tensor(wx.clone(), empty.clone())), 1);
        assert_eq!(dx.coeff(&L::tensor(empty.clone(), wx.clone())), 1);
        // Δ̂(y - k0) has the three stated terms
        let h0 = TensorHopf::new(Coalgebra::chains(fixtures::sphere(0)));
        let y = h0.letters(0).unwrap()[0].clone();
        let wy = BasisLabel::FreeWord(vec![y.clone()]);
        let dy = h0.diagonal_letter(&y);
        let e = BasisLabel::FreeWord(vec![]);
        assert_eq!(dy.len(), 3);
        assert_eq!(dy.coeff(&L::tensor(wy.clone(), wy.clone())), 1);
        assert_eq!(dy.coeff(&L::tensor(wy.clone(), e.clone())), 1);
        assert_eq!(dy.coeff(&L::tensor(e.clone(), wy.clone())), 1);
    }

    #[test]
    fn tensor_hopf_d_squared_zero() {
        let h = TensorHopf::new(Coalgebra::chains(fixtures::delta(2)));
        for degree in 0..=3 {
            for w in h.words(degree, Some(3)).unwrap() {
                let d = h.diff_label(&w);
                let dd = d.map_labels(degree.saturating_sub(2), |l| h.diff_label(l));
                assert!(dd.is_zero(), "d̂²{w} = {dd}");
            }
        }
    }
}
