//! Chain coalgebras: normalized chains with the Alexander-Whitney diagonal,
//! and tensor products of coalgebras. The reduced diagonal is computed as
//! `(π ⊗ π) ∘ Δ` where `π` is the projection along the coaugmentation; on
//! the kernel of the counit this agrees with `Δ(c) - c⊗1 - 1⊗c` and lands
//! directly in the reduced basis.

use crate::chains::{reduce_label, simplex_boundary, BasisLabel, Chain};
use crate::simplicial::{Simplex, Space};
use crate::{Error, Result};

/// A coaugmented chain coalgebra with a combinatorial basis.
#[derive(Debug, Clone)]
pub enum Coalgebra {
    /// `C(K)` for a space `K`, with the Alexander-Whitney diagonal.
    Chains { space: Space, modulus: u32 },
    Tensor(Box<Coalgebra>, Box<Coalgebra>),
}

/// Iterated front face `∂̃^{n-i} = ∂_{i+1} ... ∂_n` (innermost first).
pub fn front_face(x: &Simplex, i: usize) -> Simplex {
    let n = x.dim();
    let mut out = x.clone();
    for j in (i + 1..=n).rev() {
        out = out.face(j);
    }
    out
}

/// Iterated back face `∂_0^i`.
pub fn back_face(x: &Simplex, i: usize) -> Simplex {
    let mut out = x.clone();
    for _ in 0..i {
        out = out.face(0);
    }
    out
}

impl Coalgebra {
    pub fn chains(space: Space) -> Coalgebra {
        Coalgebra::Chains { space, modulus: 0 }
    }

    pub fn tensor(a: Coalgebra, b: Coalgebra) -> Coalgebra {
        Coalgebra::Tensor(Box::new(a), Box::new(b))
    }

    pub fn name(&self) -> String {
        match self {
            Coalgebra::Chains { space, .. } => format!("C({})", space.name()),
            Coalgebra::Tensor(a, b) => format!("{} (x) {}", a.name(), b.name()),
        }
    }

    pub fn modulus(&self) -> u32 {
        match self {
            Coalgebra::Chains { modulus, .. } => *modulus,
            Coalgebra::Tensor(a, _) => a.modulus(),
        }
    }

    pub fn with_modulus(&self, m: u32) -> Coalgebra {
        match self {
            Coalgebra::Chains { space, .. } => Coalgebra::Chains {
                space: space.clone(),
                modulus: m,
            },
            Coalgebra::Tensor(a, b) => {
                Coalgebra::tensor(a.with_modulus(m), b.with_modulus(m))
            }
        }
    }

    /// The coaugmentation image in degree zero.
    pub fn unit_label(&self) -> BasisLabel {
        match self {
            Coalgebra::Chains { space, .. } => BasisLabel::Simplex(space.basepoint(0)),
            Coalgebra::Tensor(a, b) => BasisLabel::tensor(a.unit_label(), b.unit_label()),
        }
    }

    /// Basis of the underlying complex in one degree.
    pub fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        match self {
            Coalgebra::Chains { space, .. } => Ok(space
                .nondeg(degree)?
                .into_iter()
                .map(BasisLabel::Simplex)
                .collect()),
            Coalgebra::Tensor(a, b) => {
                let mut out = Vec::new();
                for p in 0..=degree {
                    for x in a.basis(p)? {
                        for y in b.basis(degree - p)? {
                            out.push(BasisLabel::tensor(x.clone(), y));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Basis of the reduced module `C̄ = ker ε` in one degree.
    pub fn reduced_basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        match self {
            Coalgebra::Chains { space, .. } => {
                if degree == 0 {
                    Ok(space
                        .nondeg(0)?
                        .into_iter()
                        .filter(|s| !s.is_basepoint())
                        .map(BasisLabel::ReducedVertex)
                        .collect())
                } else {
                    Ok(space
                        .nondeg(degree)?
                        .into_iter()
                        .map(BasisLabel::Simplex)
                        .collect())
                }
            }
            Coalgebra::Tensor(a, b) => {
                let mut out = Vec::new();
                for x in a.reduced_basis(degree)? {
                    out.push(BasisLabel::tensor(x, b.unit_label()));
                }
                for y in b.reduced_basis(degree)? {
                    out.push(BasisLabel::tensor(a.unit_label(), y));
                }
                for p in 0..=degree {
                    let q = degree - p;
                    for x in a.reduced_basis(p)? {
                        for y in b.reduced_basis(q)? {
                            out.push(BasisLabel::tensor(x.clone(), y));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Connected: the counit kernel vanishes in degree zero.
    pub fn is_connected(&self) -> bool {
        self.reduced_basis(0).map(|b| b.is_empty()).unwrap_or(false)
    }

    pub fn counit(&self, label: &BasisLabel) -> i64 {
        match label {
            BasisLabel::Simplex(s) => {
                if s.dim() == 0 {
                    1
                } else {
                    0
                }
            }
            BasisLabel::ReducedVertex(_) => 0,
            BasisLabel::Tensor(a, b) => match self {
                Coalgebra::Tensor(ca, cb) => ca.counit(a) * cb.counit(b),
                _ => panic!("tensor label in {}", self.name()),
            },
            BasisLabel::Word(_) | BasisLabel::FreeWord(_) => {
                panic!("word label in {}", self.name())
            }
        }
    }

    /// Projection onto the reduced module along the coaugmentation.
    pub fn pi(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        match (self, label) {
            (Coalgebra::Chains { .. }, BasisLabel::Simplex(_))
            | (Coalgebra::Chains { .. }, BasisLabel::ReducedVertex(_)) => reduce_label(label, m),
            (Coalgebra::Tensor(ca, cb), BasisLabel::Tensor(a, b)) => {
                let pa = ca.pi(a);
                let ea = ca.counit(a);
                let pb = cb.pi(b);
                let eb = cb.counit(b);
                let mut out = Chain::zero(label.degree(), m);
                for (x, cx) in pa.terms() {
                    for (y, cy) in pb.terms() {
                        out.add_term(BasisLabel::tensor(x.clone(), y.clone()), cx * cy);
                    }
                }
                if eb != 0 {
                    for (x, cx) in pa.terms() {
                        out.add_term(BasisLabel::tensor(x.clone(), cb.unit_label()), cx * eb);
                    }
                }
                if ea != 0 {
                    for (y, cy) in pb.terms() {
                        out.add_term(BasisLabel::tensor(ca.unit_label(), y.clone()), cy * ea);
                    }
                }
                out
            }
            _ => panic!("label {label} does not belong to {}", self.name()),
        }
    }

    /// Rewrites a reduced-basis label as a chain over the plain basis:
    /// `x - k_0` expands, everything else is left alone.
    pub fn unreduce(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        match (self, label) {
            (Coalgebra::Chains { space, .. }, BasisLabel::ReducedVertex(v)) => {
                let mut out = Chain::zero(0, m);
                out.add_term(BasisLabel::Simplex(v.clone()), 1);
                out.add_term(BasisLabel::Simplex(space.basepoint(0)), -1);
                out
            }
            (Coalgebra::Tensor(ca, cb), BasisLabel::Tensor(a, b)) => {
                ca.unreduce(a).tensor(&cb.unreduce(b))
            }
            _ => Chain::from_label(label.clone(), m),
        }
    }

    /// Differential, defined on plain and reduced labels alike.
    pub fn diff(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        match (self, label) {
            (Coalgebra::Chains { .. }, BasisLabel::Simplex(s)) => simplex_boundary(s, m),
            (Coalgebra::Chains { .. }, BasisLabel::ReducedVertex(_)) => Chain::zero(0, m),
            (Coalgebra::Tensor(ca, cb), BasisLabel::Tensor(a, b)) => {
                let degree = label.degree();
                let mut out = Chain::zero(degree.saturating_sub(1), m);
                for (x, c) in ca.diff(a).terms() {
                    out.add_term(BasisLabel::tensor(x.clone(), (**b).clone()), c);
                }
                let sign = if a.degree() % 2 == 0 { 1 } else { -1 };
                for (y, c) in cb.diff(b).terms() {
                    out.add_term(BasisLabel::tensor((**a).clone(), y.clone()), sign * c);
                }
                out
            }
            _ => panic!("label {label} does not belong to {}", self.name()),
        }
    }

    /// Differential rewritten in the reduced basis (exact on `ker ε`).
    pub fn reduced_diff(&self, label: &BasisLabel) -> Chain {
        let d = self.diff(label);
        let degree = d.degree;
        d.map_labels(degree, |l| self.pi(l))
    }

    /// The full diagonal as a chain in the tensor square of label pairs.
    ///
    /// For `C(K)` this is the Alexander-Whitney formula
    /// `Δ(x) = Σ_i ∂̃^{n-i} x ⊗ ∂_0^i x` with degenerate factors dropped;
    /// for tensors the componentwise diagonal with the Koszul swap sign.
    pub fn diagonal(&self, label: &BasisLabel) -> Chain {
        let m = self.modulus();
        let degree = label.degree();
        match (self, label) {
            (Coalgebra::Chains { .. }, BasisLabel::Simplex(s)) => {
                let n = s.dim();
                let mut out = Chain::zero(degree, m);
                for i in 0..=n {
                    let front = front_face(s, i);
                    let back = back_face(s, i);
                    if !front.is_degenerate() && !back.is_degenerate() {
                        out.add_term(
                            BasisLabel::tensor(
                                BasisLabel::Simplex(front),
                                BasisLabel::Simplex(back),
                            ),
                            1,
                        );
                    }
                }
                out
            }
            (Coalgebra::Chains { space, .. }, BasisLabel::ReducedVertex(v)) => {
                // Δ(x - k_0) = x⊗x - k_0⊗k_0
                let mut out = Chain::zero(0, m);
                let x = BasisLabel::Simplex(v.clone());
                let k = BasisLabel::Simplex(space.basepoint(0));
                out.add_term(BasisLabel::tensor(x.clone(), x), 1);
                out.add_term(BasisLabel::tensor(k.clone(), k), -1);
                out
            }
            (Coalgebra::Tensor(ca, cb), BasisLabel::Tensor(a, b)) => {
                let da = ca.diagonal(a);
                let db = cb.diagonal(b);
                let mut out = Chain::zero(degree, m);
                for (pa, cx) in da.terms() {
                    let (a1, a2) = match pa {
                        BasisLabel::Tensor(a1, a2) => (a1, a2),
                        _ => unreachable!(),
                    };
                    for (pb, cy) in db.terms() {
                        let (b1, b2) = match pb {
                            BasisLabel::Tensor(b1, b2) => (b1, b2),
                            _ => unreachable!(),
                        };
                        // (1 ⊗ swap ⊗ 1) sign
                        let sign = if (a2.degree() * b1.degree()) % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        out.add_term(
                            BasisLabel::tensor(
                                BasisLabel::tensor((**a1).clone(), (**b1).clone()),
                                BasisLabel::tensor((**a2).clone(), (**b2).clone()),
                            ),
                            sign * cx * cy,
                        );
                    }
                }
                out
            }
            _ => panic!("label {label} does not belong to {}", self.name()),
        }
    }

    /// The reduced diagonal `Δ̄ = (π ⊗ π) Δ`.
    pub fn reduced_diagonal(&self, label: &BasisLabel) -> Chain {
        let d = self.diagonal(label);
        let m = self.modulus();
        let mut out = Chain::zero(label.degree(), m);
        for (pair, c) in d.terms() {
            let (a, b) = match pair {
                BasisLabel::Tensor(a, b) => (a, b),
                _ => unreachable!(),
            };
            for (x, cx) in self.pi(a).terms() {
                for (y, cy) in self.pi(b).terms() {
                    out.add_term(BasisLabel::tensor(x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }

    /// Checks coassociativity `(Δ⊗1)Δ = (1⊗Δ)Δ` and the counit laws on
    /// every basis label up to a degree bound.
    pub fn check_coalgebra_axioms(&self, max_degree: usize) -> Result<Option<BasisLabel>> {
        for n in 0..=max_degree {
            for label in self.basis(n)? {
                let d = self.diagonal(&label);
                // counit laws: (ε⊗1)Δ = 1 = (1⊗ε)Δ
                let mut left = Chain::zero(n, self.modulus());
                let mut right = Chain::zero(n, self.modulus());
                for (pair, c) in d.terms() {
                    let (a, b) = match pair {
                        BasisLabel::Tensor(a, b) => (a, b),
                        _ => unreachable!(),
                    };
                    left.add_term((**b).clone(), c * self.counit(a));
                    right.add_term((**a).clone(), c * self.counit(b));
                }
                let id = Chain::from_label(label.clone(), self.modulus());
                if left != id || right != id {
                    return Ok(Some(label));
                }
                // coassociativity
                let mut lhs = Chain::zero(n, self.modulus());
                let mut rhs = Chain::zero(n, self.modulus());
                for (pair, c) in d.terms() {
                    let (a, b) = match pair {
                        BasisLabel::Tensor(a, b) => (a, b),
                        _ => unreachable!(),
                    };
                    for (q, cq) in self.diagonal(a).terms() {
                        lhs.add_term(
                            BasisLabel::tensor(q.clone(), (**b).clone()),
                            c * cq,
                        );
                    }
                    for (q, cq) in self.diagonal(b).terms() {
                        rhs.add_term(
                            BasisLabel::tensor((**a).clone(), q.clone()),
                            c * cq,
                        );
                    }
                }
                // rebracket lhs (a1⊗a2)⊗b as a1⊗(a2⊗b)
                let mut lhs_r = Chain::zero(n, self.modulus());
                for (pair, c) in lhs.terms() {
                    if let BasisLabel::Tensor(q, b) = pair {
                        if let BasisLabel::Tensor(a1, a2) = q.as_ref() {
                            lhs_r.add_term(
                                BasisLabel::tensor(
                                    (**a1).clone(),
                                    BasisLabel::tensor((**a2).clone(), (**b).clone()),
                                ),
                                c,
                            );
                            continue;
                        }
                    }
                    unreachable!()
                }
                if lhs_r != rhs {
                    return Ok(Some(label));
                }
            }
        }
        Ok(None)
    }

    /// Both tensor factors, or the coalgebra itself twice for `C(K)`.
    pub fn factors(&self) -> (&Coalgebra, &Coalgebra) {
        match self {
            Coalgebra::Tensor(a, b) => (a, b),
            Coalgebra::Chains { .. } => (self, self),
        }
    }

    /// The underlying space for chain coalgebras.
    pub fn space(&self) -> Option<&Space> {
        match self {
            Coalgebra::Chains { space, .. } => Some(space),
            _ => None,
        }
    }

    /// Requires connectivity, for the cobar construction.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected(self.name()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn aw_on_one_simplex() {
        // Δx = ∂_1 x ⊗ x + x ⊗ ∂_0 x
        let d1 = fixtures::delta(1);
        let c = Coalgebra::chains(d1.clone());
        let x = BasisLabel::Simplex(d1.nondeg(1).unwrap()[0].clone());
        let d = c.diagonal(&x);
        assert_eq!(d.len(), 2);
        let v0 = BasisLabel::Simplex(Simplex::basepoint(0));
        let v1 = BasisLabel::Simplex(crate::chains::find_generator(&d1, "v1").unwrap());
        assert_eq!(d.coeff(&BasisLabel::tensor(v0, x.clone())), 1);
        assert_eq!(d.coeff(&BasisLabel::tensor(x.clone(), v1)), 1);
    }

    #[test]
    fn primitive_diagonal_on_suspension() {
        // Δ(1,x) = b_0 ⊗ (1,x) + (1,x) ⊗ b_0, so the reduced diagonal of
        // C(EK) vanishes.
        for base in [fixtures::sphere(1), fixtures::delta(2), fixtures::sphere(0)] {
            let ek = base.suspension();
            let c = Coalgebra::chains(ek.clone());
            for n in 1..=3 {
                for s in ek.nondeg(n).unwrap() {
                    let label = BasisLabel::Simplex(s);
                    let red = c.reduced_diagonal(&label);
                    assert!(red.is_zero(), "Δ̄({label}) = {red}");
                }
            }
        }
    }

    #[test]
    fn reduced_diagonal_of_delta1_edge() {
        // Δ̄x = x ⊗ (v1 - k0) for the edge of the pointed Δ[1]
        let d1 = fixtures::delta(1);
        let c = Coalgebra::chains(d1.clone());
        let x = BasisLabel::Simplex(d1.nondeg(1).unwrap()[0].clone());
        let red = c.reduced_diagonal(&x);
        assert_eq!(red.len(), 1);
        let v1 = crate::chains::find_generator(&d1, "v1").unwrap();
        assert_eq!(
            red.coeff(&BasisLabel::tensor(
                x.clone(),
                BasisLabel::ReducedVertex(v1)
            )),
            1
        );
    }

    #[test]
    fn reduced_vertex_diagonal() {
        // Δ̄(y - k0) = (y-k0) ⊗ (y-k0)
        let s0 = fixtures::sphere(0);
        let c = Coalgebra::chains(s0.clone());
        let y = s0
            .nondeg(0)
            .unwrap()
            .into_iter()
            .find(|v| !v.is_basepoint())
            .unwrap();
        let label = BasisLabel::ReducedVertex(y);
        let red = c.reduced_diagonal(&label);
        assert_eq!(red.len(), 1);
        assert_eq!(red.coeff(&BasisLabel::tensor(label.clone(), label.clone())), 1);
    }

    #[test]
    fn coalgebra_axioms_on_fixtures() {
        for space in [fixtures::sphere(1), fixtures::delta(2), fixtures::sphere(2)] {
            let c = Coalgebra::chains(space);
            assert_eq!(c.check_coalgebra_axioms(4).unwrap(), None);
        }
        let t = Coalgebra::tensor(
            Coalgebra::chains(fixtures::sphere(1)),
            Coalgebra::chains(fixtures::delta(1)),
        );
        assert_eq!(t.check_coalgebra_axioms(3).unwrap(), None);
    }

    #[test]
    fn connectivity() {
        assert!(Coalgebra::chains(fixtures::sphere(1)).is_connected());
        assert!(!Coalgebra::chains(fixtures::sphere(0)).is_connected());
        assert!(Coalgebra::chains(fixtures::sphere(0).suspension()).is_connected());
    }
}
