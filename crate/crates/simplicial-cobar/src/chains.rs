//! Free graded modules over ℤ (or ℤ/m) on combinatorial basis labels, and
//! the chain complexes built on them: normalized chains of a simplicial
//! set, reduced chains, word-length-bounded chains of group/monoid
//! complexes, and tensor products with the Koszul sign rule.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::simplicial::{Simplex, Space};
use crate::{Error, Result};

/// A basis label of one of the graded modules in play.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// A nondegenerate simplex.
    Simplex(Simplex),
    /// The reduced 0-chain `x - k_0` for a non-basepoint vertex `x`.
    ReducedVertex(Simplex),
    /// A tensor pair.
    Tensor(Box<BasisLabel>, Box<BasisLabel>),
    /// A cobar word `[x_1 | ... | x_n]` of desuspended reduced-chain labels;
    /// its degree is `Σ (deg x_i - 1)`.
    Word(Vec<BasisLabel>),
    /// A word of the free algebra `T(V)` on reduced-chain labels, with no
    /// desuspension: degree `Σ deg x_i`.
    FreeWord(Vec<BasisLabel>),
}

impl BasisLabel {
    pub fn simplex(s: Simplex) -> Self {
        BasisLabel::Simplex(s)
    }

    pub fn tensor(a: BasisLabel, b: BasisLabel) -> Self {
        BasisLabel::Tensor(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            BasisLabel::Simplex(s) => s.dim(),
            BasisLabel::ReducedVertex(_) => 0,
            BasisLabel::Tensor(a, b) => a.degree() + b.degree(),
            BasisLabel::Word(letters) => letters.iter().map(|l| l.degree() - 1).sum(),
            BasisLabel::FreeWord(letters) => letters.iter().map(|l| l.degree()).sum(),
        }
    }

    pub fn as_simplex(&self) -> Option<&Simplex> {
        match self {
            BasisLabel::Simplex(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Simplex(s) => write!(f, "{s}"),
            BasisLabel::ReducedVertex(s) => write!(f, "({s} - *)"),
            BasisLabel::Tensor(a, b) => write!(f, "{a} (x) {b}"),
            BasisLabel::Word(letters) | BasisLabel::FreeWord(letters) => {
                write!(f, "[")?;
                for (i, l) in letters.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A finite integer-linear combination of basis labels of one degree.
///
/// `modulus` 0 means ℤ; a modulus `m ≥ 2` reduces coefficients into
/// `0..m-1`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub modulus: u32,
    terms: BTreeMap<BasisLabel, i64>,
}

impl Chain {
    pub fn zero(degree: usize, modulus: u32) -> Chain {
        Chain {
            degree,
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_label(label: BasisLabel, modulus: u32) -> Chain {
        let mut c = Chain::zero(label.degree(), modulus);
        c.add_term(label, 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &BasisLabel) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    fn reduce(&self, c: i64) -> i64 {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i64)
        }
    }

    pub fn add_term(&mut self, label: BasisLabel, coeff: i64) {
        if coeff == 0 {
            return;
        }
        debug_assert_eq!(label.degree(), self.degree, "degree mismatch: {label}");
        let next = self.reduce(self.terms.get(&label).copied().unwrap_or(0) + coeff);
        if next == 0 {
            self.terms.remove(&label);
        } else {
            self.terms.insert(label, next);
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        debug_assert_eq!(self.modulus, other.modulus);
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Chain {
        let mut out = Chain::zero(self.degree, self.modulus);
        for (l, c) in self.terms() {
            out.add_term(l.clone(), c * k);
        }
        out
    }

    /// Reduces every coefficient mod `m` (a ring map ℤ → ℤ/m).
    pub fn reduce_mod(&self, m: u32) -> Chain {
        let mut out = Chain::zero(self.degree, m);
        for (l, c) in self.terms() {
            out.add_term(l.clone(), c);
        }
        out
    }

    /// Linear extension of a label map. The map must be degree-homogeneous;
    /// `out_degree` names the target degree (needed when the result is 0).
    pub fn map_labels<F>(&self, out_degree: usize, f: F) -> Chain
    where
        F: Fn(&BasisLabel) -> Chain,
    {
        let mut out = Chain::zero(out_degree, self.modulus);
        for (l, c) in self.terms() {
            let img = f(l);
            debug_assert!(img.is_zero() || img.degree == out_degree);
            for (m, d) in img.terms() {
                out.add_term(m.clone(), c * d);
            }
        }
        out
    }

    /// Bilinear tensor of chains (no signs; signs belong to maps).
    pub fn tensor(&self, other: &Chain) -> Chain {
        debug_assert_eq!(self.modulus, other.modulus);
        let mut out = Chain::zero(self.degree + other.degree, self.modulus);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(BasisLabel::tensor(a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            if i == 0 {
                if c == 1 {
                    write!(f, "{l}")?;
                } else if c == -1 {
                    write!(f, "-{l}")?;
                } else {
                    write!(f, "{c} {l}")?;
                }
            } else if c == 1 {
                write!(f, " + {l}")?;
            } else if c == -1 {
                write!(f, " - {l}")?;
            } else if c < 0 {
                write!(f, " - {} {l}", -c)?;
            } else {
                write!(f, " + {c} {l}")?;
            }
        }
        Ok(())
    }
}

/// A degree-homogeneous linear map presented by its values on labels.
#[derive(Clone)]
pub struct ChainMap {
    pub degree: i64,
    eval: Arc<dyn Fn(&BasisLabel) -> Chain + Send + Sync>,
}

impl ChainMap {
    pub fn new<F>(degree: i64, f: F) -> ChainMap
    where
        F: Fn(&BasisLabel) -> Chain + Send + Sync + 'static,
    {
        ChainMap {
            degree,
            eval: Arc::new(f),
        }
    }

    pub fn identity(modulus: u32) -> ChainMap {
        ChainMap::new(0, move |l| Chain::from_label(l.clone(), modulus))
    }

    pub fn zero(degree: i64, modulus: u32) -> ChainMap {
        ChainMap::new(degree, move |l| {
            let d = (l.degree() as i64 + degree).max(0) as usize;
            Chain::zero(d, modulus)
        })
    }

    pub fn apply_label(&self, label: &BasisLabel) -> Chain {
        (self.eval)(label)
    }

    pub fn apply(&self, chain: &Chain) -> Chain {
        let out_degree = (chain.degree as i64 + self.degree).max(0) as usize;
        chain.map_labels(out_degree, |l| (self.eval)(l))
    }
}

/// A non-negatively graded free complex with finite basis per degree.
pub trait FreeComplex: Send + Sync {
    fn name(&self) -> String;
    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>>;
    /// The differential on a basis label; degree drops by one.
    fn diff(&self, label: &BasisLabel) -> Chain;
    fn modulus(&self) -> u32 {
        0
    }
}

/// Boundary of a simplex in normalized chains: the alternating face sum
/// with degenerate faces dropped.
pub fn simplex_boundary(s: &Simplex, modulus: u32) -> Chain {
    let n = s.dim();
    let mut out = Chain::zero(n.saturating_sub(1), modulus);
    if n == 0 {
        return out;
    }
    for i in 0..=n {
        let f = s.face(i);
        if !f.is_degenerate() {
            out.add_term(BasisLabel::Simplex(f), if i % 2 == 0 { 1 } else { -1 });
        }
    }
    out
}

/// The normalized chain complex `C(K)` of a finite-type space.
pub struct NormalizedChains {
    pub space: Space,
    pub modulus: u32,
}

impl NormalizedChains {
    pub fn new(space: Space) -> Self {
        NormalizedChains { space, modulus: 0 }
    }
}

impl FreeComplex for NormalizedChains {
    fn name(&self) -> String {
        format!("C({})", self.space.name())
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        Ok(self
            .space
            .nondeg(degree)?
            .into_iter()
            .map(BasisLabel::Simplex)
            .collect())
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        match label {
            BasisLabel::Simplex(s) => simplex_boundary(s, self.modulus),
            _ => panic!("unexpected label in {}", self.name()),
        }
    }

    fn modulus(&self) -> u32 {
        self.modulus
    }
}

/// The word-length-bounded chain complex of a group or monoid space. The
/// span of words with at most `max_len` letters is closed under the
/// differential since faces never lengthen words.
pub struct WordChains {
    pub space: Space,
    pub max_len: usize,
    pub modulus: u32,
}

impl WordChains {
    pub fn new(space: Space, max_len: usize) -> Self {
        WordChains {
            space,
            max_len,
            modulus: 0,
        }
    }
}

impl FreeComplex for WordChains {
    fn name(&self) -> String {
        format!("C({})[len<={}]", self.space.name(), self.max_len)
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        Ok(self
            .space
            .words_nondeg(degree, self.max_len)?
            .into_iter()
            .map(BasisLabel::Simplex)
            .collect())
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        match label {
            BasisLabel::Simplex(s) => simplex_boundary(s, self.modulus),
            _ => panic!("unexpected label in {}", self.name()),
        }
    }

    fn modulus(&self) -> u32 {
        self.modulus
    }
}

/// Projection `π : C(K) → C̃(K)` along the coaugmentation: kills the
/// basepoint class and rewrites other vertices as `x - k_0`.
pub fn reduce_label(label: &BasisLabel, modulus: u32) -> Chain {
    match label {
        BasisLabel::Simplex(s) if s.dim() == 0 => {
            if s.is_basepoint() {
                Chain::zero(0, modulus)
            } else {
                Chain::from_label(BasisLabel::ReducedVertex(s.clone()), modulus)
            }
        }
        _ => Chain::from_label(label.clone(), modulus),
    }
}

/// The reduced chain complex `C̃(K) = ker ε`.
pub struct ReducedChains {
    pub space: Space,
    pub modulus: u32,
}

impl ReducedChains {
    pub fn new(space: Space) -> Self {
        ReducedChains { space, modulus: 0 }
    }
}

impl FreeComplex for ReducedChains {
    fn name(&self) -> String {
        format!("C~({})", self.space.name())
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        if degree == 0 {
            Ok(self
                .space
                .nondeg(0)?
                .into_iter()
                .filter(|s| !s.is_basepoint())
                .map(BasisLabel::ReducedVertex)
                .collect())
        } else {
            Ok(self
                .space
                .nondeg(degree)?
                .into_iter()
                .map(BasisLabel::Simplex)
                .collect())
        }
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        match label {
            BasisLabel::ReducedVertex(_) => Chain::zero(0, self.modulus),
            BasisLabel::Simplex(s) if s.dim() == 1 => {
                let modulus = self.modulus;
                simplex_boundary(s, modulus).map_labels(0, |l| reduce_label(l, modulus))
            }
            BasisLabel::Simplex(s) => simplex_boundary(s, self.modulus),
            _ => panic!("unexpected label in {}", self.name()),
        }
    }

    fn modulus(&self) -> u32 {
        self.modulus
    }
}

/// Tensor product of two free complexes with the Koszul differential
/// `d(a ⊗ b) = da ⊗ b + (-1)^{|a|} a ⊗ db`.
pub struct TensorComplex {
    pub left: Arc<dyn FreeComplex>,
    pub right: Arc<dyn FreeComplex>,
}

impl FreeComplex for TensorComplex {
    fn name(&self) -> String {
        format!("{} (x) {}", self.left.name(), self.right.name())
    }

    fn basis(&self, degree: usize) -> Result<Vec<BasisLabel>> {
        let mut out = Vec::new();
        for p in 0..=degree {
            for a in self.left.basis(p)? {
                for b in self.right.basis(degree - p)? {
                    out.push(BasisLabel::tensor(a.clone(), b));
                }
            }
        }
        Ok(out)
    }

    fn diff(&self, label: &BasisLabel) -> Chain {
        let modulus = self.modulus();
        match label {
            BasisLabel::Tensor(a, b) => {
                let degree = label.degree();
                let mut out = Chain::zero(degree.saturating_sub(1), modulus);
                let da = self.left.diff(a);
                for (l, c) in da.terms() {
                    out.add_term(BasisLabel::tensor(l.clone(), (**b).clone()), c);
                }
                let sign = if a.degree() % 2 == 0 { 1 } else { -1 };
                let db = self.right.diff(b);
                for (l, c) in db.terms() {
                    out.add_term(BasisLabel::tensor((**a).clone(), l.clone()), sign * c);
                }
                out
            }
            _ => panic!("unexpected label in {}", self.name()),
        }
    }

    fn modulus(&self) -> u32 {
        self.left.modulus()
    }
}

// ---------------------------------------------------------------------------
// JSON encoding: { "degree", "modulus", "terms": [ { "coeff", "label" } ] }
// with a recursive label schema mirroring BasisLabel.
// ---------------------------------------------------------------------------

pub fn simplex_to_json(s: &Simplex) -> Value {
    use crate::simplicial::Payload;
    let core = match s.payload() {
        Payload::Basepoint => json!({ "basepoint": {} }),
        Payload::Generator(sp, idx) => json!({ "gen": sp.gens[*idx].id }),
        Payload::Cone(x) => json!({ "cone": simplex_to_json(x) }),
        Payload::Pair(a, b) => json!({ "pair": [simplex_to_json(a), simplex_to_json(b)] }),
        Payload::Word(w) => {
            let kind = match w.kind {
                crate::simplicial::WordKind::Group => "group",
                crate::simplicial::WordKind::James => "james",
            };
            let letters: Vec<Value> = w
                .letters
                .iter()
                .map(|(y, s)| json!({ "simplex": simplex_to_json(y), "sign": s }))
                .collect();
            json!({ "word": { "kind": kind, "letters": letters } })
        }
    };
    json!({ "dim": s.dim(), "degens": s.degens(), "core": core })
}

pub fn label_to_json(label: &BasisLabel) -> Value {
    match label {
        BasisLabel::Simplex(s) => json!({ "simplex": simplex_to_json(s) }),
        BasisLabel::ReducedVertex(s) => json!({ "reduced": simplex_to_json(s) }),
        BasisLabel::Tensor(a, b) => json!({ "tensor": [label_to_json(a), label_to_json(b)] }),
        BasisLabel::Word(ls) => json!({ "word": ls.iter().map(label_to_json).collect::<Vec<_>>() }),
        BasisLabel::FreeWord(ls) => {
            json!({ "freeword": ls.iter().map(label_to_json).collect::<Vec<_>>() })
        }
    }
}

pub fn chain_to_json(chain: &Chain) -> Value {
    let terms: Vec<Value> = chain
        .terms()
        .map(|(l, c)| json!({ "coeff": c, "label": label_to_json(l) }))
        .collect();
    json!({ "degree": chain.degree, "modulus": chain.modulus, "terms": terms })
}

fn err_label(v: &Value) -> Error {
    Error::UnknownLabel(v.to_string())
}

pub fn simplex_from_json(space: &Space, v: &Value) -> Result<Simplex> {
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| err_label(v))? as usize;
    let degens: Vec<usize> = v
        .get("degens")
        .and_then(Value::as_array)
        .map(|a| a.iter().filter_map(Value::as_u64).map(|d| d as usize).collect())
        .unwrap_or_default();
    let core = v.get("core").ok_or_else(|| err_label(v))?;
    let core_dim = dim - degens.len();
    let mut s = core_simplex_from_json(space, core, core_dim)?;
    for &d in degens.iter().rev() {
        s = s.degeneracy(d);
    }
    if s.dim() != dim {
        return Err(err_label(v));
    }
    Ok(s)
}

fn core_simplex_from_json(space: &Space, core: &Value, core_dim: usize) -> Result<Simplex> {
    use crate::simplicial::WordKind;
    if core.get("basepoint").is_some() {
        return Ok(Simplex::basepoint(core_dim));
    }
    if let Some(id) = core.get("gen").and_then(Value::as_str) {
        return find_generator(space, id).ok_or_else(|| Error::UnknownLabel(id.into()));
    }
    if let Some(inner) = core.get("cone") {
        let base = match space {
            Space::Suspension(k) => (**k).clone(),
            _ => return Err(err_label(core)),
        };
        return Ok(Simplex::cone(&simplex_from_json(&base, inner)?));
    }
    if let Some(pair) = core.get("pair").and_then(Value::as_array) {
        let (k, l) = match space {
            Space::Product(k, l) => ((**k).clone(), (**l).clone()),
            _ => return Err(err_label(core)),
        };
        return Ok(Simplex::pair(
            &simplex_from_json(&k, &pair[0])?,
            &simplex_from_json(&l, &pair[1])?,
        ));
    }
    if let Some(word) = core.get("word") {
        let kind = match word.get("kind").and_then(Value::as_str) {
            Some("group") => WordKind::Group,
            Some("james") => WordKind::James,
            _ => return Err(err_label(core)),
        };
        let base = space.letter_space().ok_or_else(|| err_label(core))?;
        let mut letters = Vec::new();
        for lv in word
            .get("letters")
            .and_then(Value::as_array)
            .ok_or_else(|| err_label(core))?
        {
            let y = simplex_from_json(&base, lv.get("simplex").ok_or_else(|| err_label(lv))?)?;
            let sign = lv.get("sign").and_then(Value::as_i64).unwrap_or(1) as i8;
            letters.push((y, sign));
        }
        return Ok(Simplex::word(kind, letters, core_dim));
    }
    Err(err_label(core))
}

/// Looks a named generator up anywhere inside a space tree.
pub fn find_generator(space: &Space, id: &str) -> Option<Simplex> {
    match space {
        Space::Finite(fs) => fs.gen_index(id).map(|idx| Simplex::generator(fs, idx)),
        _ => None,
    }
}
