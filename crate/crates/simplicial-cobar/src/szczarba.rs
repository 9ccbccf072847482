//! Szczarba's simplicial operators `D^n_{0,i}`, the signature `ε(i,n)`,
//! the suspension twisting cochain `t_EK`, and the induced Hopf morphism
//! `θ_EK : Ω C(EK) → C(GEK)` for reduced `K`.
//!
//! The operators follow the recursion `D^1_{0,1} = id`,
//! `D^{n+1}_{0,i+k(n-1)!} = (D^n_{0,i})' s_0 ∂_k` (`k > 0`) or
//! `(D^n_{0,i})'` (`k = 0`); the signature satisfies `ε(1,1) = 0` and
//! `ε(i+k(n-1)!, n+1) = ε(i,n) + k + 1 (mod 2)`. After normalization every
//! operator with `i ≥ 2` begins with a degeneracy, so the raw sum
//! `t_EK(1,x) = Σ_i (-1)^{ε(i,n)} D^n_{0,i} τ((1,x))^{-1}` collapses to
//! `(-1)^{n+1} τ((1,x))^{-1}` in normalized chains.

use std::sync::Arc;

use crate::chains::{BasisLabel, Chain, ChainMap};
use crate::cobar::{cochain_to_algebra_map, twisting_cochain_check, DgAlgebra, TwistingCochain};
use crate::james::{GroupChainAlgebra, JamesData};
use crate::operator::{OpSymbol, SimplicialOperator};
use crate::simplicial::{Simplex, Space, WordKind};
use crate::{Error, Result};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `D^n_{0,i}` in canonical form, acting on dimension `n - 1`.
pub fn d_operator(n: usize, i: usize) -> Result<SimplicialOperator> {
    if n == 0 || i == 0 || i > factorial(n - 1) {
        return Err(Error::SzczarbaIndex { i, n });
    }
    if n == 1 {
        return Ok(SimplicialOperator::identity(0));
    }
    let f = factorial(n - 2);
    let k = (i - 1) / f;
    let i0 = ((i - 1) % f) + 1;
    let prev = d_operator(n - 1, i0)?.derived();
    if k == 0 {
        Ok(prev)
    } else {
        let inner =
            SimplicialOperator::normalize(&[OpSymbol::Degeneracy(0), OpSymbol::Face(k)], n - 1)?;
        prev.compose(&inner)
    }
}

/// The parity `ε(i, n)`.
pub fn epsilon(i: usize, n: usize) -> Result<u8> {
    if n == 0 || i == 0 || i > factorial(n - 1) {
        return Err(Error::SzczarbaIndex { i, n });
    }
    if n == 1 {
        return Ok(0);
    }
    let f = factorial(n - 2);
    let k = (i - 1) / f;
    let i0 = ((i - 1) % f) + 1;
    Ok((epsilon(i0, n - 1)? + k as u8 + 1) % 2)
}

/// Data for the Szczarba comparison over a reduced `K`.
pub struct SzczarbaData {
    pub jd: Arc<JamesData>,
    /// `GEK`, the loop group of the suspension.
    pub gek: Space,
    pub c_gek: Arc<GroupChainAlgebra>,
}

impl SzczarbaData {
    pub fn new(k: &Space) -> Result<Arc<SzczarbaData>> {
        if !k.is_reduced() {
            return Err(Error::NotReduced(k.name()));
        }
        let jd = JamesData::new(k)?;
        let gek = jd.ek.loop_group()?;
        let c_gek = Arc::new(GroupChainAlgebra::new(gek.clone()));
        Ok(Arc::new(SzczarbaData { jd, gek, c_gek }))
    }

    /// The raw sum `Σ_i (-1)^{ε(i,n)} D^n_{0,i} τ((1,x))^{-1}` in
    /// normalized chains.
    pub fn t_ek_raw(&self, z: &Simplex) -> Result<Chain> {
        let n = z.dim();
        assert!(n >= 1, "t_EK on a vertex");
        let inv = Simplex::tau(WordKind::Group, z).word_inverse();
        let mut out = Chain::zero(n - 1, 0);
        for i in 1..=factorial(n - 1) {
            let op = d_operator(n, i)?;
            let value = op.apply(&inv);
            if !value.is_degenerate() {
                let sign = if epsilon(i, n)? == 0 { 1 } else { -1 };
                out.add_term(BasisLabel::Simplex(value), sign);
            }
        }
        Ok(out)
    }

    /// The closed form `(-1)^{n+1} τ((1,x))^{-1}`.
    pub fn t_ek_closed(&self, z: &Simplex) -> Chain {
        let n = z.dim();
        let inv = Simplex::tau(WordKind::Group, z).word_inverse();
        let mut out = Chain::zero(n - 1, 0);
        if !inv.is_degenerate() {
            out.add_term(BasisLabel::Simplex(inv), if n % 2 == 0 { -1 } else { 1 });
        }
        out
    }

    /// `t_EK` as a twisting cochain `C(EK) → C(GEK)`.
    pub fn t_ek(self: &Arc<Self>) -> TwistingCochain {
        let me = Arc::clone(self);
        TwistingCochain::new("t_EK", move |label| match label {
            BasisLabel::Simplex(z) if z.dim() >= 2 => me.t_ek_closed(z),
            _ => Chain::zero(label.degree().saturating_sub(1), 0),
        })
    }

    /// `θ_EK = cochain_to_algebra_map(t_EK)`.
    pub fn theta(self: &Arc<Self>) -> ChainMap {
        let target: Arc<dyn DgAlgebra> = Arc::clone(&self.c_gek) as Arc<dyn DgAlgebra>;
        cochain_to_algebra_map(&self.t_ek(), target)
    }

    /// Verifies `t_EK` against the twisting-cochain equation.
    pub fn check_twisting(self: &Arc<Self>, max_degree: usize) -> Result<Option<String>> {
        let witness = twisting_cochain_check(
            &self.t_ek(),
            &self.jd.omega.coalgebra,
            self.c_gek.as_ref(),
            max_degree,
        )?;
        Ok(witness.map(|(l, d)| format!("{l}: defect {d}")))
    }

    /// Defect of `Δ θ = (θ ⊗ θ) ψ` on one word of `Ω C(EK)`.
    pub fn comultiplicativity_defect(self: &Arc<Self>, w: &BasisLabel) -> Chain {
        let theta = self.theta();
        let coalg = crate::coalgebra::Coalgebra::chains(self.gek.clone());
        let lhs = theta
            .apply_label(w)
            .map_labels(w.degree(), |l| coalg.diagonal(l));
        let rhs = crate::james::apply_tensor(&self.jd.psi(&Chain::from_label(w.clone(), 0)), &theta, &theta);
        lhs.sub(&rhs)
    }
}
