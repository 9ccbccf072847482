//! The chain model of the James map: `α : C(K) → Ω C(EK)`, the twisting
//! cochain `ξ_K` and the extended cobar diagonal `ψ_EK`, the chain-level
//! Bott-Samelson isomorphism `α̂ : T C̃(K) → Ω C(EK)`, and the comparison
//! map `γ : Ω C(EK) → C(G⁺EK)`.
//!
//! `ψ_EK` is available in two independent ways: the closed formula
//! `ψ[(1,x)] = [(1,x)]⊗[] + Σ_j [(1,∂̃^{n-j}x)]⊗[(1,∂_0^{j-1}x)] + []⊗[(1,x)]`
//! and the generic pipeline `q ∘ (F_1 ⊕ F_2) ∘ C(Λ)` through the
//! Gugenheim-Munkholm recursion and the Milgram map. Their agreement is a
//! cross-check, not a definition chasing itself.

use std::sync::Arc;

use crate::chains::{simplex_boundary, BasisLabel, Chain, ChainMap};
use crate::coalgebra::{back_face, front_face, Coalgebra};
use crate::cobar::{
    cochain_to_algebra_map, CobarAlgebra, DgAlgebra, TensorAlgebra, TensorHopf, TwistingCochain,
};
use crate::ezaw::shuffles;
use crate::milgram::Milgram;
use crate::perturbation::GmData;
use crate::simplicial::{Simplex, Space, WordKind};
use crate::Result;

/// Normalized chains of a simplicial monoid or group, with the Pontryagin
/// product `u · v = C(mult) ∘ ∇ (u ⊗ v)`.
pub struct GroupChainAlgebra {
    pub space: Space,
    pub modulus: u32,
}

impl GroupChainAlgebra {
    pub fn new(space: Space) -> Self {
        assert!(space.word_kind().is_some(), "not a group-like space");
        GroupChainAlgebra { space, modulus: 0 }
    }
}

impl DgAlgebra for GroupChainAlgebra {
    fn name(&self) -> String {
        format!("C({})", self.space.name())
    }

    fn modulus(&self) -> u32 {
        self.modulus
    }

    fn unit(&self) -> Chain {
        Chain::from_label(BasisLabel::Simplex(self.space.basepoint(0)), self.modulus)
    }

    fn mul(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero(a.degree + b.degree, self.modulus);
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let (su, sv) = match (u, v) {
                    (BasisLabel::Simplex(su), BasisLabel::Simplex(sv)) => (su, sv),
                    _ => panic!("group product on non-simplex labels"),
                };
                let (p, q) = (su.dim(), sv.dim());
                for sh in shuffles(p, q) {
                    let mut x = su.clone();
                    for &j in &sh.nu {
                        x = x.degeneracy(j);
                    }
                    let mut y = sv.clone();
                    for &j in &sh.mu {
                        y = y.degeneracy(j);
                    }
                    let w = x.word_mul(&y);
                    if !w.is_degenerate() {
                        out.add_term(BasisLabel::Simplex(w), sh.sign() * cu * cv);
                    }
                }
            }
        }
        out
    }

    fn diff(&self, a: &Chain) -> Chain {
        a.map_labels(a.degree.saturating_sub(1), |l| match l {
            BasisLabel::Simplex(s) => simplex_boundary(s, self.modulus),
            _ => panic!("group differential on non-simplex label"),
        })
    }
}

/// Everything attached to one pointed simplicial set `K`.
pub struct JamesData {
    pub k: Space,
    pub ek: Space,
    /// `Ω C(EK)`.
    pub omega: CobarAlgebra,
    /// `Ω C(EK) ⊗ Ω C(EK)`.
    pub omega_sq: TensorAlgebra,
    /// GM recursion data for the pair `(EK, EK)`.
    pub gm: Arc<GmData>,
    /// Milgram data for `A = B = C(EK)`.
    pub milgram: Arc<Milgram>,
    /// `T C̃(K)` with its Hopf structure.
    pub hopf: TensorHopf,
    /// `G⁺EK` and its chain algebra.
    pub james: Space,
    pub c_james: Arc<GroupChainAlgebra>,
}

impl JamesData {
    pub fn new(k: &Space) -> Result<Arc<JamesData>> {
        let ek = k.suspension();
        let coalg = Coalgebra::chains(ek.clone());
        let omega = CobarAlgebra::new(coalg.clone())?;
        let omega_sq = TensorAlgebra::new(Arc::new(omega.clone()), Arc::new(omega.clone()));
        let gm = GmData::new(&ek, &ek)?;
        let milgram = Milgram::new(coalg.clone(), coalg)?;
        let hopf = TensorHopf::new(Coalgebra::chains(k.clone()));
        let james = k.james_monoid();
        let c_james = Arc::new(GroupChainAlgebra::new(james.clone()));
        Ok(Arc::new(JamesData {
            k: k.clone(),
            ek,
            omega,
            omega_sq,
            gm,
            milgram,
            hopf,
            james,
            c_james,
        }))
    }

    fn modulus(&self) -> u32 {
        0
    }

    /// `α`: `k_0 ↦ []`, `y - k_0 ↦ [(1,y)]`, `x ↦ [(1,x)]`. On the plain
    /// vertex basis `α(y) = [(1,y)] + []`.
    pub fn alpha_label(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        match label {
            BasisLabel::Simplex(s) if s.dim() == 0 => {
                let mut out = Chain::zero(0, m);
                out.add_term(BasisLabel::Word(vec![]), 1);
                if !s.is_basepoint() {
                    out.add_term(
                        BasisLabel::Word(vec![BasisLabel::Simplex(Simplex::cone(s))]),
                        1,
                    );
                }
                out
            }
            BasisLabel::ReducedVertex(y) => Chain::from_label(
                BasisLabel::Word(vec![BasisLabel::Simplex(Simplex::cone(y))]),
                m,
            ),
            BasisLabel::Simplex(s) => {
                let c = Simplex::cone(s);
                let mut out = Chain::zero(s.dim(), m);
                if !c.is_degenerate() {
                    out.add_term(BasisLabel::Word(vec![BasisLabel::Simplex(c)]), 1);
                }
                out
            }
            _ => panic!("α on {label}"),
        }
    }

    pub fn alpha(self: &Arc<Self>) -> ChainMap {
        let me = Arc::clone(self);
        ChainMap::new(0, move |l| me.alpha_label(l))
    }

    /// The closed formula for `ξ_K` on a generator `(1,x)` of `C(EK)`,
    /// with letters through the basepoint dropped.
    pub fn xi_closed(&self, z: &Simplex) -> Chain {
        let m = self.modulus();
        let n = z.dim();
        let mut out = Chain::zero(n.saturating_sub(1), m);
        if n == 0 || z.is_degenerate() {
            return out;
        }
        let x = match z.payload() {
            crate::simplicial::Payload::Cone(x) => (**x).clone(),
            _ => panic!("ξ on a non-suspension simplex {z}"),
        };
        let letter =
            |s: &Simplex| -> Option<BasisLabel> {
                let c = Simplex::cone(s);
                if c.is_degenerate() {
                    None
                } else {
                    Some(BasisLabel::Word(vec![BasisLabel::Simplex(c)]))
                }
            };
        let empty = BasisLabel::Word(vec![]);
        let zl = BasisLabel::Word(vec![BasisLabel::Simplex(z.clone())]);
        out.add_term(BasisLabel::tensor(zl.clone(), empty.clone()), 1);
        out.add_term(BasisLabel::tensor(empty, zl), 1);
        for j in 1..=n {
            // ∂̃^{n-j} x = ∂_j ... ∂_{n-1} x and ∂_0^{j-1} x
            let front = front_face(&x, j - 1);
            let back = back_face(&x, j - 1);
            if let (Some(a), Some(b)) = (letter(&front), letter(&back)) {
                out.add_term(BasisLabel::tensor(a, b), 1);
            }
        }
        out
    }

    /// `ξ_K = q ∘ (F_1 ⊕ F_2) ∘ C(Λ)`: the generic pipeline through the
    /// perturbation recursion and the Milgram map.
    pub fn xi_pipeline(&self, z: &Simplex) -> Chain {
        let m = self.modulus();
        let n = z.dim();
        if n == 0 || z.is_degenerate() {
            return Chain::zero(n.saturating_sub(1), m);
        }
        let label = BasisLabel::Simplex(crate::simplicial::diagonal(z));
        let f12 = self
            .gm
            .f_component(&label, 1)
            .add(&self.gm.f_component(&label, 2));
        self.milgram.q(&f12)
    }

    /// The twisting cochain `ξ_K` (closed form).
    pub fn xi_cochain(self: &Arc<Self>) -> TwistingCochain {
        let me = Arc::clone(self);
        TwistingCochain::new("ξ", move |label| match label {
            BasisLabel::Simplex(z) => me.xi_closed(z),
            _ => Chain::zero(label.degree().saturating_sub(1), 0),
        })
    }

    /// `ψ_EK` on a chain of `Ω C(EK)` words: the algebra-map extension of
    /// `[(1,x)] ↦ ξ_K((1,x))`.
    pub fn psi(&self, c: &Chain) -> Chain {
        c.map_labels(c.degree, |w| {
            let letters = match w {
                BasisLabel::Word(ls) => ls,
                _ => panic!("ψ on non-word {w}"),
            };
            let mut acc = self.omega_sq.unit();
            for l in letters {
                let z = match l {
                    BasisLabel::Simplex(z) => z,
                    _ => panic!("ψ on letter {l}"),
                };
                acc = self.omega_sq.mul(&acc, &self.xi_closed(z));
            }
            acc
        })
    }

    /// The "wrong" coproduct `q ∘ Ω(Δ_EK)`, used only as a foil: it is
    /// primitive on every generator.
    pub fn wrong_coproduct(&self, c: &Chain) -> Chain {
        let coalg = &self.omega.coalgebra;
        c.map_labels(c.degree, |w| {
            let letters = match w {
                BasisLabel::Word(ls) => ls,
                _ => panic!("foil on non-word {w}"),
            };
            let mut acc = self.omega_sq.unit();
            for l in letters {
                // Ω(Δ)[c] = [Δc] with Δc rewritten in the reduced basis of
                // the tensor coalgebra, then q
                let mut letter_words =
                    Chain::zero(l.degree().saturating_sub(1), self.modulus());
                for (pair, cf) in coalg.diagonal(l).terms() {
                    let (a, b) = match pair {
                        BasisLabel::Tensor(a, b) => (a, b),
                        _ => unreachable!(),
                    };
                    for (ra, ca) in self.milgram.a.pi(a).terms() {
                        for (rb, cb) in self.milgram.b.pi(b).terms() {
                            letter_words.add_term(
                                BasisLabel::Word(vec![BasisLabel::tensor(
                                    ra.clone(),
                                    rb.clone(),
                                )]),
                                cf * ca * cb,
                            );
                        }
                    }
                    if self.milgram.b.counit(b) != 0 {
                        for (ra, ca) in self.milgram.a.pi(a).terms() {
                            letter_words.add_term(
                                BasisLabel::Word(vec![BasisLabel::tensor(
                                    ra.clone(),
                                    self.milgram.b.unit_label(),
                                )]),
                                cf * ca * self.milgram.b.counit(b),
                            );
                        }
                    }
                    if self.milgram.a.counit(a) != 0 {
                        for (rb, cb) in self.milgram.b.pi(b).terms() {
                            letter_words.add_term(
                                BasisLabel::Word(vec![BasisLabel::tensor(
                                    self.milgram.a.unit_label(),
                                    rb.clone(),
                                )]),
                                cf * self.milgram.a.counit(a) * cb,
                            );
                        }
                    }
                }
                acc = self.omega_sq.mul(&acc, &self.milgram.q(&letter_words));
            }
            acc
        })
    }

    /// The Bott-Samelson correspondence on letters: `x ↦ (1,x)`.
    pub fn alpha_hat_label(&self, label: &BasisLabel) -> BasisLabel {
        let letters = match label {
            BasisLabel::FreeWord(ls) => ls,
            _ => panic!("α̂ on non-free-word {label}"),
        };
        BasisLabel::Word(
            letters
                .iter()
                .map(|l| match l {
                    BasisLabel::Simplex(x) => BasisLabel::Simplex(Simplex::cone(x)),
                    BasisLabel::ReducedVertex(y) => BasisLabel::Simplex(Simplex::cone(y)),
                    _ => panic!("α̂ letter {l}"),
                })
                .collect(),
        )
    }

    pub fn alpha_hat(self: &Arc<Self>) -> ChainMap {
        let me = Arc::clone(self);
        let m = self.modulus();
        ChainMap::new(0, move |l| Chain::from_label(me.alpha_hat_label(l), m))
    }

    /// The twisting cochain generating `γ`: `t(1,x) = τ(1,x)` reduced along
    /// the coaugmentation (in degree one this is `τ(1,y) - e_0`).
    pub fn gamma_cochain(self: &Arc<Self>) -> TwistingCochain {
        let me = Arc::clone(self);
        TwistingCochain::new("γ-cochain", move |label| {
            let m = me.modulus();
            match label {
                BasisLabel::Simplex(z) if z.dim() >= 1 => {
                    let t = Simplex::tau(WordKind::James, z);
                    let mut out = Chain::zero(z.dim() - 1, m);
                    if !t.is_degenerate() {
                        out.add_term(BasisLabel::Simplex(t), 1);
                    }
                    if z.dim() == 1 {
                        out.add_term(
                            BasisLabel::Simplex(me.james.basepoint(0)),
                            -1,
                        );
                    }
                    out
                }
                _ => Chain::zero(label.degree().saturating_sub(1), m),
            }
        })
    }

    /// `γ : Ω C(EK) → C(G⁺EK)`.
    pub fn gamma(self: &Arc<Self>) -> ChainMap {
        let target: Arc<dyn DgAlgebra> = Arc::clone(&self.c_james) as Arc<dyn DgAlgebra>;
        cochain_to_algebra_map(&self.gamma_cochain(), target)
    }

    /// `C(η_K)` on basis labels of `C(K)`: `x ↦ τ(1,x)` as a normalized
    /// class, with `y - k_0 ↦ τ(1,y) - e_0`.
    pub fn c_eta(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        match label {
            BasisLabel::Simplex(s) => {
                let t = Simplex::tau(WordKind::James, &Simplex::cone(s));
                let mut out = Chain::zero(s.dim(), m);
                if !t.is_degenerate() {
                    out.add_term(BasisLabel::Simplex(t), 1);
                }
                out
            }
            BasisLabel::ReducedVertex(y) => {
                let t = Simplex::tau(WordKind::James, &Simplex::cone(y));
                let mut out = Chain::zero(0, m);
                out.add_term(BasisLabel::Simplex(t), 1);
                out.add_term(BasisLabel::Simplex(self.james.basepoint(0)), -1);
                out
            }
            _ => panic!("C(η) on {label}"),
        }
    }
}

/// `(f ⊗ g)` on a chain of tensor labels, for degree-zero maps.
pub fn apply_tensor(c: &Chain, f: &ChainMap, g: &ChainMap) -> Chain {
    c.map_labels(c.degree, |pair| {
        let (a, b) = match pair {
            BasisLabel::Tensor(a, b) => (a, b),
            _ => panic!("tensor application on {pair}"),
        };
        f.apply_label(a).tensor(&g.apply_label(b))
    })
}

/// Rebrackets `(a⊗b)⊗c` as `a⊗(b⊗c)` for coassociativity comparisons.
pub fn rebracket(c: &Chain) -> Chain {
    c.map_labels(c.degree, |l| {
        if let BasisLabel::Tensor(q, r) = l {
            if let BasisLabel::Tensor(a, b) = q.as_ref() {
                return Chain::from_label(
                    BasisLabel::tensor(
                        (**a).clone(),
                        BasisLabel::tensor((**b).clone(), (**r).clone()),
                    ),
                    c.modulus,
                );
            }
        }
        panic!("rebracket on {l}")
    })
}
