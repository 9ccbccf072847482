//! Simplicial operators in canonical form.
//!
//! Every composite of face and degeneracy maps factors uniquely as
//! `s_{i_1} ... s_{i_k} d_{j_1} ... d_{j_l}` with the degeneracy indices
//! strictly decreasing and the face indices strictly increasing. The
//! rewriting rules are the five simplicial identities; this module keeps
//! operators in that normal form under composition.

use serde::Serialize;

use crate::Error;

/// A single face or degeneracy symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpSymbol {
    Face(usize),
    Degeneracy(usize),
}

/// A simplicial operator in canonical form, acting on simplices of a fixed
/// source dimension.
///
/// `degens` is read left to right as `s_{d_1} ∘ s_{d_2} ∘ ...` (strictly
/// decreasing), `faces` as `∂_{j_1} ∘ ∂_{j_2} ∘ ...` (strictly increasing).
/// Faces are applied to a simplex first, then degeneracies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimplicialOperator {
    pub degens: Vec<usize>,
    pub faces: Vec<usize>,
    pub source_dim: usize,
}

impl SimplicialOperator {
    pub fn identity(source_dim: usize) -> Self {
        SimplicialOperator {
            degens: Vec::new(),
            faces: Vec::new(),
            source_dim,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.degens.is_empty() && self.faces.is_empty()
    }

    pub fn target_dim(&self) -> usize {
        self.source_dim - self.faces.len() + self.degens.len()
    }

    /// Composes `∂_i` on the outside: `∂_i ∘ self`.
    pub fn prepend_face(&mut self, i: usize) -> Result<(), Error> {
        let t = self.target_dim();
        if t == 0 || i > t {
            return Err(Error::OperatorIndex {
                symbol: format!("d{i}"),
                dim: t,
            });
        }
        let mut i = i;
        let mut pos = 0;
        while pos < self.degens.len() {
            let d = self.degens[pos];
            if i < d {
                // d_i s_d = s_{d-1} d_i
                self.degens[pos] = d - 1;
                pos += 1;
            } else if i == d || i == d + 1 {
                // d_i s_d = identity
                self.degens.remove(pos);
                return Ok(());
            } else {
                // i > d + 1: d_i s_d = s_d d_{i-1}
                i -= 1;
                pos += 1;
            }
        }
        // Merge the surviving face into the increasing face word.
        let mut pos = 0;
        while pos < self.faces.len() && i >= self.faces[pos] {
            // d_i d_j = d_j d_{i+1} for i >= j
            i += 1;
            pos += 1;
        }
        self.faces.insert(pos, i);
        Ok(())
    }

    /// Composes `s_j` on the outside: `s_j ∘ self`.
    pub fn prepend_degeneracy(&mut self, j: usize) -> Result<(), Error> {
        let t = self.target_dim();
        if j > t {
            return Err(Error::OperatorIndex {
                symbol: format!("s{j}"),
                dim: t,
            });
        }
        let mut pos = 0;
        while pos < self.degens.len() && self.degens[pos] >= j {
            // s_j s_d = s_{d+1} s_j for j <= d
            self.degens[pos] += 1;
            pos += 1;
        }
        self.degens.insert(pos, j);
        Ok(())
    }

    /// Normalizes a list of symbols given in composition order (leftmost
    /// symbol applied last) into canonical form.
    pub fn normalize(symbols: &[OpSymbol], source_dim: usize) -> Result<Self, Error> {
        let mut op = SimplicialOperator::identity(source_dim);
        for sym in symbols.iter().rev() {
            match *sym {
                OpSymbol::Face(i) => op.prepend_face(i)?,
                OpSymbol::Degeneracy(j) => op.prepend_degeneracy(j)?,
            }
        }
        Ok(op)
    }

    /// `self ∘ inner`; requires `inner.target_dim() == self.source_dim`.
    pub fn compose(&self, inner: &Self) -> Result<Self, Error> {
        if inner.target_dim() != self.source_dim {
            return Err(Error::OperatorIndex {
                symbol: "compose".into(),
                dim: inner.target_dim(),
            });
        }
        let mut out = inner.clone();
        for &j in self.faces.iter().rev() {
            out.prepend_face(j)?;
        }
        for &d in self.degens.iter().rev() {
            out.prepend_degeneracy(d)?;
        }
        Ok(out)
    }

    /// The derived operator: every index shifted up by one.
    pub fn derived(&self) -> Self {
        SimplicialOperator {
            degens: self.degens.iter().map(|d| d + 1).collect(),
            faces: self.faces.iter().map(|j| j + 1).collect(),
            source_dim: self.source_dim + 1,
        }
    }

    /// Symbols of this operator in composition order.
    pub fn symbols(&self) -> Vec<OpSymbol> {
        let mut out: Vec<OpSymbol> = self.degens.iter().map(|&d| OpSymbol::Degeneracy(d)).collect();
        out.extend(self.faces.iter().map(|&j| OpSymbol::Face(j)));
        out
    }

    /// True if the canonical form starts (outermost) with a degeneracy.
    pub fn begins_with_degeneracy(&self) -> bool {
        !self.degens.is_empty()
    }
}

impl std::fmt::Display for SimplicialOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut first = true;
        for d in &self.degens {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "s{d}")?;
            first = false;
        }
        for j in &self.faces {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "d{j}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn norm(symbols: &[OpSymbol], dim: usize) -> SimplicialOperator {
        SimplicialOperator::normalize(symbols, dim).unwrap()
    }

    #[test]
    fn face_degeneracy_cancellation() {
        use OpSymbol::*;
        // d_j s_j = id = d_{j+1} s_j
        assert!(norm(&[Face(1), Degeneracy(1)], 2).is_identity());
        assert!(norm(&[Face(2), Degeneracy(1)], 2).is_identity());
    }

    #[test]
    fn face_past_degeneracy() {
        use OpSymbol::*;
        // d_0 s_1 = s_0 d_0
        let op = norm(&[Face(0), Degeneracy(1)], 2);
        assert_eq!(op.degens, vec![0]);
        assert_eq!(op.faces, vec![0]);
        // d_3 s_1 = s_1 d_2
        let op = norm(&[Face(3), Degeneracy(1)], 2);
        assert_eq!(op.degens, vec![1]);
        assert_eq!(op.faces, vec![2]);
    }

    #[test]
    fn canonical_orderings() {
        use OpSymbol::*;
        // s_0 s_0 = s_1 s_0
        let op = norm(&[Degeneracy(0), Degeneracy(0)], 1);
        assert_eq!(op.degens, vec![1, 0]);
        // d_0 d_0 = d_0 d_1
        let op = norm(&[Face(0), Face(0)], 2);
        assert_eq!(op.faces, vec![0, 1]);
    }

    #[test]
    fn derived_shifts_indices() {
        use OpSymbol::*;
        // (s_0 d_1)' = s_1 d_2
        let op = norm(&[Degeneracy(0), Face(1)], 2).derived();
        assert_eq!(op.degens, vec![1]);
        assert_eq!(op.faces, vec![2]);
        assert_eq!(op.source_dim, 3);
        // derived of the identity is the identity
        assert!(SimplicialOperator::identity(4).derived().is_identity());
    }

    #[test]
    fn index_out_of_range() {
        use OpSymbol::*;
        assert!(SimplicialOperator::normalize(&[Face(3)], 2).is_err());
        assert!(SimplicialOperator::normalize(&[Degeneracy(3)], 2).is_err());
        assert!(SimplicialOperator::normalize(&[Face(0)], 0).is_err());
    }

    fn arb_symbols(dim: usize, len: usize) -> impl Strategy<Value = Vec<OpSymbol>> {
        // Generate a valid symbol string for the given source dimension by
        // choosing each symbol innermost-first against the running dimension.
        proptest::collection::vec((any::<bool>(), any::<usize>()), 0..len).prop_map(
            move |choices| {
                let mut dim = dim;
                let mut syms = Vec::new();
                for (is_face, raw) in choices {
                    if is_face && dim >= 1 {
                        syms.push(OpSymbol::Face(raw % (dim + 1)));
                        dim -= 1;
                    } else {
                        syms.push(OpSymbol::Degeneracy(raw % (dim + 1)));
                        dim += 1;
                    }
                }
                syms.reverse();
                syms
            },
        )
    }

    proptest! {
        #[test]
        fn composition_matches_normalization(syms in arb_symbols(3, 8), cut in 0usize..9) {
            // Normalizing the whole string equals composing the two halves.
            let cut = cut.min(syms.len());
            let whole = SimplicialOperator::normalize(&syms, 3).unwrap();
            // Inner part acts first: it is the right segment.
            let inner = SimplicialOperator::normalize(&syms[cut..], 3).unwrap();
            let outer = SimplicialOperator::normalize(&syms[..cut], inner.target_dim()).unwrap();
            prop_assert_eq!(outer.compose(&inner).unwrap(), whole);
        }

        #[test]
        fn derived_commutes_with_composition(syms in arb_symbols(3, 6), cut in 0usize..7) {
            let cut = cut.min(syms.len());
            let inner = SimplicialOperator::normalize(&syms[cut..], 3).unwrap();
            let outer = SimplicialOperator::normalize(&syms[..cut], inner.target_dim()).unwrap();
            let lhs = outer.compose(&inner).unwrap().derived();
            let rhs = outer.derived().compose(&inner.derived()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
