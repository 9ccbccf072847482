//! The Alexander-Whitney map, the Eilenberg-Zilber shuffle map, and the
//! Eilenberg-MacLane homotopy `φ`, forming E-Z data
//! `C(K) ⊗ C(L) ⇄ C(K × L)`.
//!
//! `φ` obeys the recursion `φ = -φ' + (∇f)' s_0` with `φ = 0` in degree 0.
//! Since every map involved is a natural sum of simplicial operator pairs,
//! the recursion is evaluated once per dimension into a table of operator
//! pairs with integer coefficients; this is the unnormalized-chain regime,
//! and results are projected to normalized chains only at the end.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::chains::{BasisLabel, Chain, ChainMap};
use crate::coalgebra::{back_face, front_face, Coalgebra};
use crate::operator::{OpSymbol, SimplicialOperator};
use crate::simplicial::{Simplex, Space};
use crate::Result;

/// A `(p,q)`-shuffle: a partition of `{0..p+q-1}` into increasing blocks
/// `μ` (length `p`) and `ν` (length `q`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
}

impl Shuffle {
    /// The signature `ε(μ) = Σ_i [μ_i - (i-1)]`.
    pub fn signature(&self) -> usize {
        self.mu.iter().enumerate().map(|(i, &m)| m - i).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.signature() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All `(p,q)`-shuffles; there are `C(p+q, p)` of them.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    let mut out = Vec::new();
    let mut mu = Vec::new();
    fn rec(start: usize, left: usize, n: usize, mu: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if left == 0 {
            let nu: Vec<usize> = (0..n).filter(|i| !mu.contains(i)).collect();
            out.push(Shuffle {
                mu: mu.clone(),
                nu,
            });
            return;
        }
        for i in start..=n - left {
            mu.push(i);
            rec(i + 1, left - 1, n, mu, out);
            mu.pop();
        }
    }
    rec(0, p, n, &mut mu, &mut out);
    out
}

/// A natural operator on products: a pair of simplicial operators applied
/// componentwise.
pub type OperatorPair = (SimplicialOperator, SimplicialOperator);

/// Table of `∇ ∘ f` in one dimension as operator pairs (unnormalized).
fn nabla_f_table(q: usize) -> Vec<(OperatorPair, i64)> {
    let mut out: BTreeMap<OperatorPair, i64> = BTreeMap::new();
    for i in 0..=q {
        // f sends x × y to ∂̃^{q-i} x ⊗ ∂_0^i y
        let front_syms: Vec<OpSymbol> = (i + 1..=q).map(OpSymbol::Face).collect();
        let front = SimplicialOperator::normalize(&front_syms, q).unwrap();
        let back_syms: Vec<OpSymbol> = (0..i).map(|_| OpSymbol::Face(0)).collect();
        let back = SimplicialOperator::normalize(&back_syms, q).unwrap();
        // ∇ on bidegree (i, q-i)
        for sh in shuffles(i, q - i) {
            let mut left = front.clone();
            for &j in &sh.nu {
                left.prepend_degeneracy(j).unwrap();
            }
            let mut right = back.clone();
            for &j in &sh.mu {
                right.prepend_degeneracy(j).unwrap();
            }
            *out.entry((left, right)).or_insert(0) += sh.sign();
        }
    }
    out.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Table of the Eilenberg-MacLane homotopy in one dimension, mapping
/// dimension `q` to `q + 1` componentwise.
pub fn phi_table(q: usize) -> Vec<(OperatorPair, i64)> {
    static TABLES: OnceLock<Mutex<Vec<Vec<(OperatorPair, i64)>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(vec![Vec::new()]));
    let mut guard = tables.lock().unwrap();
    while guard.len() <= q {
        let prev = guard.last().unwrap().clone();
        let dim = guard.len();
        let mut next: BTreeMap<OperatorPair, i64> = BTreeMap::new();
        // -φ'
        for ((l, r), c) in prev {
            *next.entry((l.derived(), r.derived())).or_insert(0) -= c;
        }
        // (∇f)' s_0 componentwise
        let s0 = SimplicialOperator::normalize(&[OpSymbol::Degeneracy(0)], dim).unwrap();
        for ((l, r), c) in nabla_f_table(dim) {
            let pair = (
                l.derived().compose(&s0).unwrap(),
                r.derived().compose(&s0).unwrap(),
            );
            *next.entry(pair).or_insert(0) += c;
        }
        guard.push(next.into_iter().filter(|(_, c)| *c != 0).collect());
    }
    guard[q].clone()
}

/// E-Z data for a pair of spaces: `C(K) ⊗ C(L) ⇄ C(K×L)` with the
/// Eilenberg-MacLane homotopy.
#[derive(Clone)]
pub struct EzData {
    pub k: Space,
    pub l: Space,
    pub product: Space,
    /// `X = C(K) ⊗ C(L)` as a coalgebra.
    pub x_coalg: Coalgebra,
    /// `Y = C(K×L)` as a coalgebra.
    pub y_coalg: Coalgebra,
    pub modulus: u32,
}

impl EzData {
    pub fn new(k: &Space, l: &Space) -> EzData {
        EzData {
            k: k.clone(),
            l: l.clone(),
            product: k.product(l),
            x_coalg: Coalgebra::tensor(Coalgebra::chains(k.clone()), Coalgebra::chains(l.clone())),
            y_coalg: Coalgebra::chains(k.product(l)),
            modulus: 0,
        }
    }

    /// `f(x × y) = Σ ∂̃^{n-i} x ⊗ ∂_0^i y`, degenerate factors dropped.
    pub fn aw_label(&self, z: &Simplex) -> Chain {
        let n = z.dim();
        let (x, y) = z.components().expect("aw on non-product simplex");
        let mut out = Chain::zero(n, self.modulus);
        for i in 0..=n {
            let front = front_face(&x, i);
            let back = back_face(&y, i);
            if !front.is_degenerate() && !back.is_degenerate() {
                out.add_term(
                    BasisLabel::tensor(BasisLabel::Simplex(front), BasisLabel::Simplex(back)),
                    1,
                );
            }
        }
        out
    }

    pub fn aw(&self) -> ChainMap {
        let data = self.clone();
        ChainMap::new(0, move |label| match label {
            BasisLabel::Simplex(z) => data.aw_label(z),
            _ => panic!("aw on {label}"),
        })
    }

    /// `∇(x ⊗ y) = Σ (-1)^{ε(μ)} s_ν x × s_μ y` over `(p,q)`-shuffles.
    pub fn ez_label(&self, x: &Simplex, y: &Simplex) -> Chain {
        let (p, q) = (x.dim(), y.dim());
        let mut out = Chain::zero(p + q, self.modulus);
        for sh in shuffles(p, q) {
            let mut sx = x.clone();
            for &j in &sh.nu {
                sx = sx.degeneracy(j);
            }
            let mut sy = y.clone();
            for &j in &sh.mu {
                sy = sy.degeneracy(j);
            }
            let pair = Simplex::pair(&sx, &sy);
            if !pair.is_degenerate() {
                out.add_term(BasisLabel::Simplex(pair), sh.sign());
            }
        }
        out
    }

    pub fn ez(&self) -> ChainMap {
        let data = self.clone();
        ChainMap::new(0, move |label| match label {
            BasisLabel::Tensor(a, b) => match (a.as_ref(), b.as_ref()) {
                (BasisLabel::Simplex(x), BasisLabel::Simplex(y)) => data.ez_label(x, y),
                _ => panic!("ez on {label}"),
            },
            _ => panic!("ez on {label}"),
        })
    }

    /// `φ(z)`, computed from the operator table and projected to
    /// normalized chains.
    pub fn phi_label(&self, z: &Simplex) -> Chain {
        let q = z.dim();
        let mut out = Chain::zero(q + 1, self.modulus);
        if q == 0 {
            return out;
        }
        let (x, y) = z.components().expect("phi on non-product simplex");
        for ((l, r), c) in phi_table(q) {
            let pair = Simplex::pair(&l.apply(&x), &r.apply(&y));
            if !pair.is_degenerate() {
                out.add_term(BasisLabel::Simplex(pair), c);
            }
        }
        out
    }

    pub fn phi(&self) -> ChainMap {
        let data = self.clone();
        ChainMap::new(1, move |label| match label {
            BasisLabel::Simplex(z) => data.phi_label(z),
            _ => panic!("phi on {label}"),
        })
    }

    /// Basis of `X = C(K) ⊗ C(L)` in a degree.
    pub fn x_basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.x_coalg.basis(degree)
    }

    /// Basis of `Y = C(K×L)` in a degree.
    pub fn y_basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        self.y_coalg.basis(degree)
    }

    pub fn x_diff(&self, c: &Chain) -> Chain {
        c.map_labels(c.degree.saturating_sub(1), |l| self.x_coalg.diff(l))
    }

    pub fn y_diff(&self, c: &Chain) -> Chain {
        c.map_labels(c.degree.saturating_sub(1), |l| self.y_coalg.diff(l))
    }
}

/// A strong deformation retract candidate `(∇, f, φ)`.
pub struct SdrData {
    pub nabla: ChainMap,
    pub f: ChainMap,
    pub phi: ChainMap,
}

/// One verified identity with an optional first counterexample.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub range: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    pub fn pass(id: &str, range: String) -> Self {
        IdentityCheck {
            id: id.into(),
            range,
            pass: true,
            counterexample: None,
        }
    }

    pub fn fail(id: &str, range: String, witness: String) -> Self {
        IdentityCheck {
            id: id.into(),
            range,
            pass: false,
            counterexample: Some(witness),
        }
    }

    /// Checks that a defect vanishes on every basis label up to a bound.
    pub fn on_basis(
        id: &str,
        max_degree: usize,
        basis: &dyn Fn(usize) -> Result<Vec<BasisLabel>>,
        defect: &dyn Fn(&BasisLabel) -> Chain,
    ) -> Result<IdentityCheck> {
        let range = format!("degree <= {max_degree}");
        for n in 0..=max_degree {
            for label in basis(n)? {
                let dft = defect(&label);
                if !dft.is_zero() {
                    return Ok(IdentityCheck::fail(
                        id,
                        range,
                        format!("{label}: defect {dft}"),
                    ));
                }
            }
        }
        Ok(IdentityCheck::pass(id, range))
    }
}

/// Verifies the five SDR identities and, when coalgebras are supplied, the
/// comultiplicativity of `∇`; exhaustive up to the degree bound.
pub struct SdrVerify<'a> {
    pub data: &'a SdrData,
    pub x_basis: &'a dyn Fn(usize) -> Result<Vec<BasisLabel>>,
    pub x_diff: &'a dyn Fn(&Chain) -> Chain,
    pub y_basis: &'a dyn Fn(usize) -> Result<Vec<BasisLabel>>,
    pub y_diff: &'a dyn Fn(&Chain) -> Chain,
    /// Coalgebras `(X, Y)` for the E-Z condition on `∇`.
    pub coalgebras: Option<(&'a Coalgebra, &'a Coalgebra)>,
    pub modulus: u32,
}

impl<'a> SdrVerify<'a> {
    pub fn run(&self, max_degree: usize) -> Result<Vec<IdentityCheck>> {
        let mut checks = Vec::new();
        let d = self.data;
        let m = self.modulus;

        checks.push(IdentityCheck::on_basis(
            "f∇ = 1",
            max_degree,
            self.x_basis,
            &|label| {
                d.f.apply(&d.nabla.apply_label(label))
                    .sub(&Chain::from_label(label.clone(), m))
            },
        )?);
        checks.push(IdentityCheck::on_basis(
            "dφ + φd = ∇f - 1",
            max_degree,
            self.y_basis,
            &|label| {
                let c = Chain::from_label(label.clone(), m);
                let lhs = (self.y_diff)(&d.phi.apply_label(label))
                    .add(&d.phi.apply(&(self.y_diff)(&c)));
                let rhs = d.nabla.apply(&d.f.apply_label(label)).sub(&c);
                lhs.sub(&rhs)
            },
        )?);
        checks.push(IdentityCheck::on_basis(
            "φ∇ = 0",
            max_degree,
            self.x_basis,
            &|label| d.phi.apply(&d.nabla.apply_label(label)),
        )?);
        checks.push(IdentityCheck::on_basis(
            "fφ = 0",
            max_degree,
            self.y_basis,
            &|label| d.f.apply(&d.phi.apply_label(label)),
        )?);
        checks.push(IdentityCheck::on_basis(
            "φ² = 0",
            max_degree,
            self.y_basis,
            &|label| d.phi.apply(&d.phi.apply_label(label)),
        )?);
        if let Some((x_coalg, y_coalg)) = self.coalgebras {
            checks.push(IdentityCheck::on_basis(
                "Δ∇ = (∇⊗∇)Δ",
                max_degree,
                self.x_basis,
                &|label| {
                    let lhs = d
                        .nabla
                        .apply_label(label)
                        .map_labels(label.degree(), |l| y_coalg.diagonal(l));
                    let rhs = x_coalg.diagonal(label).map_labels(label.degree(), |pair| {
                        let (a, b) = match pair {
                            BasisLabel::Tensor(a, b) => (a, b),
                            _ => unreachable!(),
                        };
                        d.nabla.apply_label(a).tensor(&d.nabla.apply_label(b))
                    });
                    lhs.sub(&rhs)
                },
            )?);
        }
        Ok(checks)
    }
}

/// Runs the full E-Z SDR verification for a pair of spaces.
pub fn verify_ez_sdr(k: &Space, l: &Space, max_degree: usize) -> Result<Vec<IdentityCheck>> {
    let data = EzData::new(k, l);
    let sdr = SdrData {
        nabla: data.ez(),
        f: data.aw(),
        phi: data.phi(),
    };
    let x_basis = |d: usize| data.x_basis(d);
    let y_basis = |d: usize| data.y_basis(d);
    let x_diff = |c: &Chain| data.x_diff(c);
    let y_diff = |c: &Chain| data.y_diff(c);
    SdrVerify {
        data: &sdr,
        x_basis: &x_basis,
        x_diff: &x_diff,
        y_basis: &y_basis,
        y_diff: &y_diff,
        coalgebras: Some((&data.x_coalg, &data.y_coalg)),
        modulus: 0,
    }
    .run(max_degree)
}
