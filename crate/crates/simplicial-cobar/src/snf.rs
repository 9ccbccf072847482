//! Smith normal form over exact big integers, and integer homology of the
//! free complexes in this crate.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chains::{BasisLabel, FreeComplex};
use crate::{Error, Result};

/// Dense integer matrix, row major.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            let t = self.get(target, j) + v;
            self.set(target, j, t);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            let t = self.get(i, target) + v;
            self.set(i, target, t);
        }
    }
}

/// Diagonal of the Smith normal form: nonzero invariant factors
/// `d_1 | d_2 | ...`, all positive.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut m = m.clone();
    let bound = m.rows.min(m.cols);
    let mut diag = Vec::new();
    let mut k = 0;
    while k < bound {
        // find a pivot of minimal absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..m.rows {
            for j in k..m.cols {
                if !m.get(i, j).is_zero() {
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if m.get(i, j).abs() < m.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        // clear the pivot row and column
        let mut dirty = false;
        for i in k + 1..m.rows {
            let q = m.get(i, k) / m.get(k, k);
            if !q.is_zero() {
                let f = -q;
                m.add_row_multiple(i, k, &f);
            }
            if !m.get(i, k).is_zero() {
                dirty = true;
            }
        }
        for j in k + 1..m.cols {
            let q = m.get(k, j) / m.get(k, k);
            if !q.is_zero() {
                let f = -q;
                m.add_col_multiple(j, k, &f);
            }
            if !m.get(k, j).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue; // smaller remainders exist; pick a new pivot
        }
        // enforce divisibility of the remaining block by the pivot
        let mut fixed = true;
        'scan: for i in k + 1..m.rows {
            for j in k + 1..m.cols {
                if !(m.get(i, j) % m.get(k, k)).is_zero() {
                    let one = BigInt::from(1);
                    m.add_row_multiple(k, i, &one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        let mut d = m.get(k, k).clone();
        if d.is_negative() {
            d = -d;
        }
        diag.push(d);
        k += 1;
    }
    diag
}

/// Rank and torsion of one homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummand {
    pub degree: usize,
    pub rank: usize,
    /// Elementary divisors larger than one.
    pub torsion: Vec<BigInt>,
}

/// Boundary matrix of a complex from degree `n` to `n-1`.
pub fn boundary_matrix(
    cx: &dyn FreeComplex,
    n: usize,
    domain: &[BasisLabel],
    codomain: &[BasisLabel],
) -> IntMatrix {
    let mut m = IntMatrix::zero(codomain.len(), domain.len());
    let index: std::collections::BTreeMap<&BasisLabel, usize> =
        codomain.iter().enumerate().map(|(i, l)| (l, i)).collect();
    for (j, l) in domain.iter().enumerate() {
        let d = cx.diff(l);
        debug_assert!(d.is_zero() || d.degree + 1 == n);
        for (lab, c) in d.terms() {
            let i = *index
                .get(lab)
                .unwrap_or_else(|| panic!("face {lab} missing from basis in degree {}", n - 1));
            m.set(i, j, BigInt::from(c));
        }
    }
    m
}

/// Exact homology in a degree range. `cap` bounds the basis size per degree.
pub fn homology_ranks(
    cx: &dyn FreeComplex,
    max_degree: usize,
    cap: usize,
) -> Result<Vec<HomologySummand>> {
    assert_eq!(cx.modulus(), 0, "integral homology requires modulus 0");
    let mut bases = Vec::new();
    for n in 0..=max_degree + 1 {
        let b = cx.basis(n)?;
        if b.len() > cap {
            return Err(Error::BasisCap {
                complex: cx.name(),
                cap,
            });
        }
        bases.push(b);
    }
    let mut out = Vec::new();
    for n in 0..=max_degree {
        let mut torsion_below = Vec::new();
        let d_n_rank = if n == 0 {
            0
        } else {
            let m = boundary_matrix(cx, n, &bases[n], &bases[n - 1]);
            smith_diagonal(&m).len()
        };
        let m_up = boundary_matrix(cx, n + 1, &bases[n + 1], &bases[n]);
        let diag_up = smith_diagonal(&m_up);
        let d_up_rank = diag_up.len();
        for d in diag_up {
            if d > BigInt::from(1) {
                torsion_below.push(d);
            }
        }
        out.push(HomologySummand {
            degree: n,
            rank: bases[n].len() - d_n_rank - d_up_rank,
            torsion: torsion_below,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::NormalizedChains;
    use crate::fixtures;

    fn from_rows(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    #[test]
    fn smith_diagonal_small() {
        let m = from_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let d = smith_diagonal(&m);
        assert_eq!(
            d,
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]
        );
        let zero = IntMatrix::zero(3, 2);
        assert!(smith_diagonal(&zero).is_empty());
    }

    #[test]
    fn smith_divisibility_chain() {
        let m = from_rows(&[&[6, 0], &[0, 10]]);
        let d = smith_diagonal(&m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(30)]);
    }

    #[test]
    fn sphere_homology() {
        // C(S^2): ranks 1, 0, 1 in degrees 0..2. Checked by hand: the
        // boundary matrices on the two-generator complex are zero.
        let cx = NormalizedChains::new(fixtures::sphere(2));
        let h = homology_ranks(&cx, 2, 10_000).unwrap();
        let ranks: Vec<usize> = h.iter().map(|s| s.rank).collect();
        assert_eq!(ranks, vec![1, 0, 1]);
        assert!(h.iter().all(|s| s.torsion.is_empty()));
    }

    #[test]
    fn torus_homology() {
        let s1 = fixtures::sphere(1);
        let cx = NormalizedChains::new(s1.product(&s1));
        let h = homology_ranks(&cx, 2, 10_000).unwrap();
        let ranks: Vec<usize> = h.iter().map(|s| s.rank).collect();
        assert_eq!(ranks, vec![1, 2, 1]);
    }

    #[test]
    fn connected_h0() {
        for space in [
            fixtures::sphere(1),
            fixtures::delta(2),
            fixtures::wedge(&fixtures::sphere(1), &fixtures::sphere(1)).unwrap(),
        ] {
            let cx = NormalizedChains::new(space);
            let h = homology_ranks(&cx, 0, 10_000).unwrap();
            assert_eq!(h[0].rank, 1);
        }
    }
}
