//! Pointed simplicial sets as effective objects.
//!
//! Simplices are stored in Eilenberg-Zilber normal form: a strictly
//! decreasing degeneracy word applied to a nondegenerate core. Every face or
//! degeneracy evaluation re-normalizes, so degeneracy detection is a check
//! on the stored word and equality is structural.
//!
//! The constructions are the simplicial suspension `EK`, the loop group
//! `GK` (reduced `K`), the James monoid `G⁺EK`, and binary products, all
//! with on-demand operator evaluation. Finite complexes come from fixture
//! tables; group and monoid complexes are enumerated under a word-length
//! bound only.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::operator::SimplicialOperator;
use crate::{Error, Result};

/// A named nondegenerate generator of a finite complex.
#[derive(Debug, Clone)]
pub struct GenData {
    pub id: String,
    pub dim: usize,
    /// Faces in order `∂_0 .. ∂_dim`; empty for vertices.
    pub faces: Vec<FaceRef>,
}

/// Reference to a face inside a finite complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceRef {
    Basepoint,
    Gen { idx: usize, degens: Vec<usize> },
}

/// A finite pointed simplicial set given by generator tables.
///
/// The basepoint vertex is implicit and is not listed among the generators.
#[derive(Debug)]
pub struct FiniteSpace {
    pub name: String,
    pub basepoint_id: String,
    pub gens: Vec<GenData>,
}

impl FiniteSpace {
    pub fn gen_index(&self, id: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.id == id)
    }

    pub fn max_dim(&self) -> usize {
        self.gens.iter().map(|g| g.dim).max().unwrap_or(0)
    }
}

/// Group versus James-monoid word structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordKind {
    /// Loop group `G(K)`: letters are simplices of `K`, inverses allowed.
    Group,
    /// James monoid `G⁺E(K)`: letters are simplices of `EK`, no inverses.
    James,
}

/// A reduced word of letters `τ(y)^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub kind: WordKind,
    pub letters: Vec<(Simplex, i8)>,
}

/// The nondegenerate core of a simplex.
#[derive(Debug, Clone)]
pub enum Payload {
    /// The basepoint vertex `k_0`.
    Basepoint,
    /// A named generator of a finite complex.
    Generator(Arc<FiniteSpace>, usize),
    /// A suspension pair `(1, x)` with `x` nondegenerate, not the basepoint.
    Cone(Box<Simplex>),
    /// A product pair with no common degeneracy.
    Pair(Box<Simplex>, Box<Simplex>),
    /// A reduced, nondegenerate group or monoid word.
    Word(Word),
}

impl Payload {
    fn key(&self) -> (u8, Option<(&str, usize)>) {
        match self {
            Payload::Basepoint => (0, None),
            Payload::Generator(sp, i) => (1, Some((sp.name.as_str(), *i))),
            Payload::Cone(_) => (2, None),
            Payload::Pair(_, _) => (3, None),
            Payload::Word(_) => (4, None),
        }
    }
}

impl PartialEq for Payload {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Payload::Basepoint, Payload::Basepoint) => true,
            (Payload::Generator(a, i), Payload::Generator(b, j)) => {
                i == j && a.name == b.name
            }
            (Payload::Cone(a), Payload::Cone(b)) => a == b,
            (Payload::Pair(a, b), Payload::Pair(c, d)) => a == c && b == d,
            (Payload::Word(a), Payload::Word(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Payload {}

impl std::hash::Hash for Payload {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Payload::Basepoint => 0u8.hash(state),
            Payload::Generator(sp, i) => {
                1u8.hash(state);
                sp.name.hash(state);
                i.hash(state);
            }
            Payload::Cone(x) => {
                2u8.hash(state);
                x.hash(state);
            }
            Payload::Pair(a, b) => {
                3u8.hash(state);
                a.hash(state);
                b.hash(state);
            }
            Payload::Word(w) => {
                4u8.hash(state);
                w.hash(state);
            }
        }
    }
}

impl PartialOrd for Payload {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Payload {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Payload::Generator(a, i), Payload::Generator(b, j)) => {
                (a.name.as_str(), i).cmp(&(b.name.as_str(), j))
            }
            (Payload::Cone(a), Payload::Cone(b)) => a.cmp(b),
            (Payload::Pair(a, b), Payload::Pair(c, d)) => (a, b).cmp(&(c, d)),
            (Payload::Word(a), Payload::Word(b)) => a.cmp(b),
            _ => self.key().cmp(&other.key()),
        }
    }
}

/// A simplex in Eilenberg-Zilber normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    dim: usize,
    degens: Vec<usize>,
    payload: Payload,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degens(&self) -> &[usize] {
        &self.degens
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    /// Dimension of the nondegenerate core.
    pub fn core_dim(&self) -> usize {
        self.dim - self.degens.len()
    }

    pub fn core(&self) -> Simplex {
        Simplex {
            dim: self.core_dim(),
            degens: Vec::new(),
            payload: self.payload.clone(),
        }
    }

    /// In normal form a simplex is degenerate exactly when its degeneracy
    /// word is nonempty.
    pub fn is_degenerate(&self) -> bool {
        !self.degens.is_empty()
    }

    /// Degeneracy decided from the identity `x = s_i ∂_i x`; the oracle the
    /// normal form is tested against.
    pub fn is_degenerate_by_identity(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        (0..self.dim).any(|i| &self.face(i).degeneracy(i) == self)
    }

    /// True for `k_n`, the basepoint in any dimension (for words, the
    /// identity element; for pairs, the pair of basepoints).
    pub fn is_basepoint(&self) -> bool {
        match &self.payload {
            Payload::Basepoint => true,
            Payload::Word(w) => w.letters.is_empty(),
            Payload::Pair(a, b) => a.is_basepoint() && b.is_basepoint(),
            _ => false,
        }
    }

    /// The basepoint simplex `k_n = s_0^n k_0`.
    pub fn basepoint(dim: usize) -> Simplex {
        Simplex {
            dim,
            degens: (0..dim).rev().collect(),
            payload: Payload::Basepoint,
        }
    }

    pub fn generator(space: &Arc<FiniteSpace>, idx: usize) -> Simplex {
        Simplex {
            dim: space.gens[idx].dim,
            degens: Vec::new(),
            payload: Payload::Generator(Arc::clone(space), idx),
        }
    }

    /// The suspension pair `(1, x)`, normalized: `(1, s_j x) = s_{j+1}(1, x)`
    /// and `(1, k_n) = b_{n+1}`.
    pub fn cone(x: &Simplex) -> Simplex {
        if matches!(x.payload, Payload::Basepoint) {
            return Simplex::basepoint(x.dim + 1);
        }
        Simplex {
            dim: x.dim + 1,
            degens: x.degens.iter().map(|d| d + 1).collect(),
            payload: Payload::Cone(Box::new(x.core())),
        }
    }

    /// The product pair, normalized by extracting common degeneracies.
    pub fn pair(x: &Simplex, y: &Simplex) -> Simplex {
        assert_eq!(x.dim, y.dim, "pair components must share a dimension");
        // A common factor s_i exists exactly when i appears in both
        // degeneracy words.
        let common = x.degens.iter().find(|i| y.degens.contains(i)).copied();
        match common {
            None => Simplex {
                dim: x.dim,
                degens: Vec::new(),
                payload: Payload::Pair(Box::new(x.clone()), Box::new(y.clone())),
            },
            Some(i) => Simplex::pair(&x.strip(i), &y.strip(i)).degeneracy(i),
        }
    }

    /// A reduced word simplex from raw letters; letters `τ(s_0 z)` are the
    /// identity and adjacent inverse pairs cancel (group case). The result
    /// is then put in normal form as a simplex.
    pub fn word(kind: WordKind, letters: Vec<(Simplex, i8)>, dim: usize) -> Simplex {
        let mut reduced: Vec<(Simplex, i8)> = Vec::with_capacity(letters.len());
        for (y, sign) in letters {
            debug_assert_eq!(y.dim(), dim + 1, "letter dimension mismatch");
            debug_assert!(sign == 1 || (sign == -1 && kind == WordKind::Group));
            if y.degens.last() == Some(&0) {
                continue; // s_0-image: identity letter
            }
            if kind == WordKind::Group {
                if let Some((prev, psign)) = reduced.last() {
                    if *prev == y && *psign == -sign {
                        reduced.pop();
                        continue;
                    }
                }
            }
            reduced.push((y, sign));
        }
        // Peel degeneracies: w = s_i w' iff every letter is an s_{i+1}-image.
        let mut dim = dim;
        let mut peeled: Vec<usize> = Vec::new();
        'peel: loop {
            if dim == 0 {
                break;
            }
            for i in (0..dim).rev() {
                if reduced.iter().all(|(y, _)| y.degens.contains(&(i + 1))) {
                    for (y, _) in &mut reduced {
                        *y = y.strip(i + 1);
                    }
                    peeled.push(i);
                    dim -= 1;
                    continue 'peel;
                }
            }
            break;
        }
        let mut out = Simplex {
            dim,
            degens: Vec::new(),
            payload: Payload::Word(Word {
                kind,
                letters: reduced,
            }),
        };
        for i in peeled.into_iter().rev() {
            out = out.degeneracy(i);
        }
        out
    }

    /// The generator `τ(y)` as a word simplex of dimension `dim(y) - 1`.
    pub fn tau(kind: WordKind, y: &Simplex) -> Simplex {
        assert!(y.dim() >= 1);
        Simplex::word(kind, vec![(y.clone(), 1)], y.dim() - 1)
    }

    /// Removes `s_i` from the degeneracy word: the unique `x'` with
    /// `x = s_i x'`. Panics unless `i` appears in the word.
    fn strip(&self, i: usize) -> Simplex {
        let pos = self
            .degens
            .iter()
            .position(|&d| d == i)
            .expect("strip: index not present");
        let mut degens = self.degens.clone();
        degens.remove(pos);
        for d in degens.iter_mut().take(pos) {
            *d -= 1;
        }
        Simplex {
            dim: self.dim - 1,
            degens,
            payload: self.payload.clone(),
        }
    }

    /// The face `∂_i`, pushed through the degeneracy word and re-normalized.
    pub fn face(&self, i: usize) -> Simplex {
        assert!(self.dim >= 1 && i <= self.dim, "face index out of range");
        let mut degens = self.degens.clone();
        let mut i = i;
        let mut pos = 0;
        while pos < degens.len() {
            let d = degens[pos];
            if i < d {
                degens[pos] = d - 1;
                pos += 1;
            } else if i == d || i == d + 1 {
                degens.remove(pos);
                return Simplex {
                    dim: self.dim - 1,
                    degens,
                    payload: self.payload.clone(),
                };
            } else {
                i -= 1;
                pos += 1;
            }
        }
        let mut out = self.core_face(i);
        for &d in degens.iter().rev() {
            out = out.degeneracy(d);
        }
        out
    }

    /// Face of the nondegenerate core.
    fn core_face(&self, i: usize) -> Simplex {
        let core_dim = self.core_dim();
        match &self.payload {
            Payload::Basepoint => unreachable!("basepoint core has no faces"),
            Payload::Generator(space, idx) => {
                let gen = &space.gens[*idx];
                resolve_face_ref(space, &gen.faces[i], core_dim - 1)
            }
            Payload::Cone(x) => {
                if i == 0 {
                    Simplex::basepoint(core_dim - 1)
                } else if x.dim == 0 {
                    // ∂_1(1, x) = b_0 for a vertex x
                    Simplex::basepoint(0)
                } else {
                    Simplex::cone(&x.face(i - 1))
                }
            }
            Payload::Pair(x, y) => Simplex::pair(&x.face(i), &y.face(i)),
            Payload::Word(w) => {
                let mut letters: Vec<(Simplex, i8)> = Vec::new();
                for (y, sign) in &w.letters {
                    if i > 0 {
                        letters.push((y.face(i + 1), *sign));
                    } else {
                        match w.kind {
                            WordKind::Group => {
                                // solve τ(∂_0 y) ∂_0 τ(y) = τ(∂_1 y)
                                if *sign == 1 {
                                    letters.push((y.face(0), -1));
                                    letters.push((y.face(1), 1));
                                } else {
                                    letters.push((y.face(1), -1));
                                    letters.push((y.face(0), 1));
                                }
                            }
                            WordKind::James => {
                                // τ(∂_0 y) is the identity for letters of EK
                                letters.push((y.face(1), 1));
                            }
                        }
                    }
                }
                Simplex::word(w.kind, letters, core_dim - 1)
            }
        }
    }

    /// The degeneracy `s_j`, merged into the degeneracy word.
    pub fn degeneracy(&self, j: usize) -> Simplex {
        assert!(j <= self.dim, "degeneracy index out of range");
        let mut degens = self.degens.clone();
        let mut pos = 0;
        while pos < degens.len() && degens[pos] >= j {
            degens[pos] += 1;
            pos += 1;
        }
        degens.insert(pos, j);
        Simplex {
            dim: self.dim + 1,
            degens,
            payload: self.payload.clone(),
        }
    }

    /// Components of a product simplex at full dimension: for
    /// `s_J(x, y)` this is `(s_J x, s_J y)`.
    pub fn components(&self) -> Option<(Simplex, Simplex)> {
        match &self.payload {
            Payload::Pair(a, b) => {
                let mut x = (**a).clone();
                let mut y = (**b).clone();
                for &d in self.degens.iter().rev() {
                    x = x.degeneracy(d);
                    y = y.degeneracy(d);
                }
                Some((x, y))
            }
            _ => None,
        }
    }

    /// Expands a word simplex into its letters at full dimension, pushing
    /// the degeneracy word onto each letter.
    pub fn expand_word(&self) -> Option<(WordKind, Vec<(Simplex, i8)>)> {
        match &self.payload {
            Payload::Word(w) => {
                let mut letters = w.letters.clone();
                for &d in self.degens.iter().rev() {
                    for (y, _) in &mut letters {
                        *y = y.degeneracy(d + 1);
                    }
                }
                Some((w.kind, letters))
            }
            _ => None,
        }
    }

    /// Product of two word simplices of equal dimension.
    pub fn word_mul(&self, other: &Simplex) -> Simplex {
        let (ka, mut la) = self.expand_word().expect("word_mul on non-word");
        let (kb, lb) = other.expand_word().expect("word_mul on non-word");
        assert_eq!(ka, kb);
        assert_eq!(self.dim, other.dim);
        la.extend(lb);
        Simplex::word(ka, la, self.dim)
    }

    /// Inverse of a group word simplex.
    pub fn word_inverse(&self) -> Simplex {
        let (kind, letters) = self.expand_word().expect("word_inverse on non-word");
        assert_eq!(kind, WordKind::Group, "inverse requires a group word");
        let inv = letters
            .into_iter()
            .rev()
            .map(|(y, s)| (y, -s))
            .collect();
        Simplex::word(kind, inv, self.dim)
    }
}

fn resolve_face_ref(space: &Arc<FiniteSpace>, fr: &FaceRef, dim: usize) -> Simplex {
    match fr {
        FaceRef::Basepoint => Simplex::basepoint(dim),
        FaceRef::Gen { idx, degens } => {
            let mut out = Simplex::generator(space, *idx);
            for &d in degens.iter().rev() {
                out = out.degeneracy(d);
            }
            debug_assert_eq!(out.dim(), dim);
            out
        }
    }
}

impl SimplicialOperator {
    /// Evaluates the operator on a simplex of the source dimension.
    pub fn apply(&self, x: &Simplex) -> Simplex {
        assert_eq!(x.dim(), self.source_dim, "operator/simplex dimension");
        let mut out = x.clone();
        for &j in self.faces.iter().rev() {
            out = out.face(j);
        }
        for &d in self.degens.iter().rev() {
            out = out.degeneracy(d);
        }
        out
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for d in &self.degens {
            write!(f, "s{d} ")?;
        }
        match &self.payload {
            Payload::Basepoint => write!(f, "*"),
            Payload::Generator(_, idx) => {
                if let Payload::Generator(sp, _) = &self.payload {
                    write!(f, "{}", sp.gens[*idx].id)
                } else {
                    unreachable!()
                }
            }
            Payload::Cone(x) => write!(f, "(1,{x})"),
            Payload::Pair(a, b) => write!(f, "({a} , {b})"),
            Payload::Word(w) => {
                if w.letters.is_empty() {
                    return write!(f, "e");
                }
                for (t, (y, sign)) in w.letters.iter().enumerate() {
                    if t > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "t({y})")?;
                    if *sign == -1 {
                        write!(f, "^-1")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A pointed simplicial set, finite or built by a construction.
#[derive(Debug, Clone)]
pub enum Space {
    Finite(Arc<FiniteSpace>),
    Suspension(Box<Space>),
    LoopGroup(Box<Space>),
    James(Box<Space>),
    Product(Box<Space>, Box<Space>),
}

impl Space {
    pub fn finite(fs: FiniteSpace) -> Space {
        Space::Finite(Arc::new(fs))
    }

    /// The simplicial suspension `EK`.
    pub fn suspension(&self) -> Space {
        Space::Suspension(Box::new(self.clone()))
    }

    /// The loop group `GK`; `K` must be reduced.
    pub fn loop_group(&self) -> Result<Space> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(self.name()));
        }
        Ok(Space::LoopGroup(Box::new(self.clone())))
    }

    /// The James monoid `G⁺EK`; defined for any pointed `K`.
    pub fn james_monoid(&self) -> Space {
        Space::James(Box::new(self.clone()))
    }

    pub fn product(&self, other: &Space) -> Space {
        Space::Product(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn name(&self) -> String {
        match self {
            Space::Finite(fs) => fs.name.clone(),
            Space::Suspension(k) => format!("E({})", k.name()),
            Space::LoopGroup(k) => format!("G({})", k.name()),
            Space::James(k) => format!("G+E({})", k.name()),
            Space::Product(k, l) => format!("({} x {})", k.name(), l.name()),
        }
    }

    pub fn basepoint(&self, dim: usize) -> Simplex {
        match self {
            Space::Finite(_) | Space::Suspension(_) => Simplex::basepoint(dim),
            Space::LoopGroup(_) => Simplex::word(WordKind::Group, Vec::new(), dim),
            Space::James(_) => Simplex::word(WordKind::James, Vec::new(), dim),
            Space::Product(k, l) => Simplex::pair(&k.basepoint(dim), &l.basepoint(dim)),
        }
    }

    /// The word kind for group-like spaces.
    pub fn word_kind(&self) -> Option<WordKind> {
        match self {
            Space::LoopGroup(_) => Some(WordKind::Group),
            Space::James(_) => Some(WordKind::James),
            _ => None,
        }
    }

    /// For `GK` the letters live in `K`, for `G⁺EK` in `EK`.
    pub fn letter_space(&self) -> Option<Space> {
        match self {
            Space::LoopGroup(k) => Some((**k).clone()),
            Space::James(k) => Some(k.suspension()),
            _ => None,
        }
    }

    /// Letters of the group/monoid in word dimension `n`: the simplices of
    /// the letter space in dimension `n + 1` that are not `s_0`-images.
    pub fn letter_basis(&self, n: usize) -> Result<Vec<Simplex>> {
        let base = self
            .letter_space()
            .ok_or_else(|| Error::BadSpaceSpec(format!("{} has no letters", self.name())))?;
        Ok(base
            .all_simplices(n + 1)?
            .into_iter()
            .filter(|y| y.degens().last() != Some(&0))
            .collect())
    }

    /// Nondegenerate simplices in one dimension. Errors for group/monoid
    /// spaces, whose basis is infinite; use [`Space::words_nondeg`] there.
    pub fn nondeg(&self, dim: usize) -> Result<Vec<Simplex>> {
        match self {
            Space::Finite(fs) => {
                let mut out = Vec::new();
                if dim == 0 {
                    out.push(Simplex::basepoint(0));
                }
                for (idx, g) in fs.gens.iter().enumerate() {
                    if g.dim == dim {
                        out.push(Simplex::generator(fs, idx));
                    }
                }
                Ok(out)
            }
            Space::Suspension(k) => {
                if dim == 0 {
                    return Ok(vec![Simplex::basepoint(0)]);
                }
                Ok(k.nondeg(dim - 1)?
                    .into_iter()
                    .filter(|x| !x.is_basepoint())
                    .map(|x| Simplex::cone(&x))
                    .collect())
            }
            Space::Product(k, l) => {
                let xs = k.all_simplices(dim)?;
                let ys = l.all_simplices(dim)?;
                let mut out = Vec::new();
                for x in &xs {
                    for y in &ys {
                        let p = Simplex::pair(x, y);
                        if !p.is_degenerate() {
                            out.push(p);
                        }
                    }
                }
                out.sort();
                Ok(out)
            }
            Space::LoopGroup(_) | Space::James(_) => Err(Error::InfiniteBasis {
                complex: self.name(),
                degree: dim,
            }),
        }
    }

    /// All simplices (degenerate included) in one dimension.
    pub fn all_simplices(&self, dim: usize) -> Result<Vec<Simplex>> {
        let mut out = Vec::new();
        for c in 0..=dim {
            for core in self.nondeg(c)? {
                for word in decreasing_words(dim - c, dim) {
                    let mut s = core.clone();
                    for &d in word.iter().rev() {
                        s = s.degeneracy(d);
                    }
                    out.push(s);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Nondegenerate words of the group/monoid in word dimension `n`, with
    /// at most `max_len` letters.
    pub fn words_nondeg(&self, n: usize, max_len: usize) -> Result<Vec<Simplex>> {
        let kind = self
            .word_kind()
            .ok_or_else(|| Error::BadSpaceSpec(format!("{} is not group-like", self.name())))?;
        let letters = self.letter_basis(n)?;
        let signs: &[i8] = match kind {
            WordKind::Group => &[1, -1],
            WordKind::James => &[1],
        };
        let mut out: Vec<Simplex> = Vec::new();
        let mut layer: Vec<Vec<(Simplex, i8)>> = vec![Vec::new()];
        for len in 0..=max_len {
            for raw in &layer {
                let w = Simplex::word(kind, raw.clone(), n);
                if !w.is_degenerate() {
                    if let Payload::Word(inner) = w.payload() {
                        if inner.letters.len() == len {
                            out.push(w.clone());
                        }
                    }
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for raw in &layer {
                for y in &letters {
                    for &s in signs {
                        // skip immediately cancelling extensions
                        if let Some((py, ps)) = raw.last() {
                            if kind == WordKind::Group && py == y && *ps == -s {
                                continue;
                            }
                        }
                        let mut ext = raw.clone();
                        ext.push((y.clone(), s));
                        next.push(ext);
                    }
                }
            }
            layer = next;
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn is_reduced(&self) -> bool {
        match self {
            Space::Finite(fs) => fs.gens.iter().all(|g| g.dim > 0),
            Space::Suspension(_) => true,
            Space::Product(k, l) => k.is_reduced() && l.is_reduced(),
            Space::LoopGroup(_) | Space::James(_) => self
                .letter_basis(0)
                .map(|ls| ls.is_empty())
                .unwrap_or(false),
        }
    }

    /// Largest dimension with nondegenerate simplices beyond the basepoint,
    /// for finite-type spaces.
    pub fn top_dim(&self) -> Option<usize> {
        match self {
            Space::Finite(fs) => Some(fs.max_dim()),
            Space::Suspension(k) => k.top_dim().map(|d| d + 1),
            Space::Product(k, l) => Some(k.top_dim()? + l.top_dim()?),
            _ => None,
        }
    }
}

/// The simplicial diagonal `Λ : K → K × K`, `x ↦ (x, x)`.
pub fn diagonal(x: &Simplex) -> Simplex {
    Simplex::pair(x, x)
}

/// Strictly decreasing words of a given length with entries below `bound`.
pub fn decreasing_words(len: usize, bound: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, max_excl: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            out.push(acc.clone());
            return;
        }
        for d in (len - 1..max_excl).rev() {
            acc.push(d);
            rec(len - 1, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if len <= bound {
        rec(len, bound, &mut Vec::new(), &mut out);
    }
    out
}

/// Validates generator tables: face dimensions and the identity
/// `∂_i ∂_j = ∂_{j-1} ∂_i` on every generator.
pub fn validate_finite(space: &Arc<FiniteSpace>) -> Result<()> {
    for g in &space.gens {
        if g.dim == 0 {
            if !g.faces.is_empty() {
                return Err(Error::BadFixture(format!(
                    "vertex {} must not list faces",
                    g.id
                )));
            }
            continue;
        }
        if g.faces.len() != g.dim + 1 {
            return Err(Error::BadFixture(format!(
                "generator {} of dim {} must list {} faces",
                g.id,
                g.dim,
                g.dim + 1
            )));
        }
        for fr in &g.faces {
            if let FaceRef::Gen { idx, degens } = fr {
                if *idx >= space.gens.len() {
                    return Err(Error::BadFixture(format!("face index out of range in {}", g.id)));
                }
                let total = space.gens[*idx].dim + degens.len();
                if total + 1 != g.dim {
                    return Err(Error::BadFixture(format!(
                        "face of {} has dimension {total}, expected {}",
                        g.id,
                        g.dim - 1
                    )));
                }
                if !degens.windows(2).all(|w| w[0] > w[1]) {
                    return Err(Error::BadFixture(format!(
                        "degeneracy word in a face of {} is not strictly decreasing",
                        g.id
                    )));
                }
            }
        }
    }
    // ∂_i ∂_j = ∂_{j-1} ∂_i for i < j, checked by evaluation.
    for (idx, g) in space.gens.iter().enumerate() {
        if g.dim < 2 {
            continue;
        }
        let s = Simplex::generator(space, idx);
        for j in 1..=g.dim {
            for i in 0..j {
                if s.face(j).face(i) != s.face(i).face(j - 1) {
                    return Err(Error::BadFixture(format!(
                        "face identity fails on {} at (i,j)=({i},{j})",
                        g.id
                    )));
                }
            }
        }
    }
    Ok(())
}
