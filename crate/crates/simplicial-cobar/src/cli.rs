//! Command surface: build fixtures, evaluate any of the named maps on a
//! chosen input, and run verification suites. All results are JSON on
//! stdout; logs and timing go to stderr. Exit codes: 0 success, 1
//! verification failure, 2 usage error.


use serde_json::{json, Value};

use crate::chains::{chain_to_json, BasisLabel, Chain};
use crate::coalgebra::Coalgebra;
use crate::fixtures;
use crate::james::JamesData;
use crate::milgram::Milgram;
use crate::perturbation::GmData;
use crate::simplicial::{Simplex, Space};
use crate::szczarba::{d_operator, epsilon, SzczarbaData};
use crate::verify::{parse_fixture_pair, run_suite, Bounds};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// label parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Pipe,
    Hash,
    Star,
    Minus,
    Dot,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            '[' => {
                chars.next();
                out.push(Tok::LBracket);
            }
            ']' => {
                chars.next();
                out.push(Tok::RBracket);
            }
            ',' => {
                chars.next();
                out.push(Tok::Comma);
            }
            '|' => {
                chars.next();
                out.push(Tok::Pipe);
            }
            '#' | '⊗' => {
                chars.next();
                out.push(Tok::Hash);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '.' => {
                chars.next();
                out.push(Tok::Dot);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut n = 0usize;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n * 10 + d as usize;
                    chars.next();
                }
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == ':' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            other => return Err(Error::UnknownLabel(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct LabelParser {
    toks: Vec<Tok>,
    pos: usize,
}

impl LabelParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::UnknownLabel(format!("expected {t:?}, got {got:?}"))),
        }
    }

    /// A label: tensor of word/simplex expressions, `a # b` or `a ⊗ b`.
    /// Tensor sides parse against the product's factor spaces.
    fn label(&mut self, space: &Space) -> Result<BasisLabel> {
        let (a_space, b_space) = match space {
            Space::Product(a, b) => ((**a).clone(), (**b).clone()),
            other => (other.clone(), other.clone()),
        };
        let save = self.pos;
        if let Ok(first) = self.atom(&a_space) {
            if self.peek() == Some(&Tok::Hash) {
                self.next();
                let rhs = self.atom(&b_space)?;
                return Ok(BasisLabel::tensor(first, rhs));
            }
        }
        self.pos = save;
        self.atom(space)
    }

    fn atom(&mut self, space: &Space) -> Result<BasisLabel> {
        match self.peek() {
            Some(Tok::LBracket) => self.word(space),
            Some(Tok::Int(1)) => {
                // the coaugmentation in a tensor factor
                self.next();
                Ok(BasisLabel::Simplex(space.basepoint(0)))
            }
            _ => Ok(BasisLabel::Simplex(self.simplex(space)?)),
        }
    }

    /// `[a|b|c]`, a cobar word whose letters are labels.
    fn word(&mut self, space: &Space) -> Result<BasisLabel> {
        self.expect(Tok::LBracket)?;
        let mut letters = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            self.next();
            return Ok(BasisLabel::Word(letters));
        }
        loop {
            letters.push(self.label(space)?);
            match self.next() {
                Some(Tok::Pipe) => continue,
                Some(Tok::RBracket) => break,
                got => {
                    return Err(Error::UnknownLabel(format!(
                        "expected | or ] in word, got {got:?}"
                    )))
                }
            }
        }
        Ok(BasisLabel::Word(letters))
    }

    /// A simplex expression in a given ambient space.
    fn simplex(&mut self, space: &Space) -> Result<Simplex> {
        // degeneracy prefixes s<j>
        if let Some(Tok::Ident(id)) = self.peek() {
            if let Some(j) = id.strip_prefix('s').and_then(|t| t.parse::<usize>().ok()) {
                if id.starts_with('s') && space_has_no_generator(space, id) {
                    self.next();
                    let inner = self.simplex(space)?;
                    return Ok(inner.degeneracy(j));
                }
            }
        }
        match self.next() {
            Some(Tok::Star) => Ok(space.basepoint(0)),
            Some(Tok::Ident(id)) => {
                if let Some(n) = id
                    .strip_prefix('b')
                    .or_else(|| id.strip_prefix('k'))
                    .and_then(|t| t.parse::<usize>().ok())
                {
                    if space_has_no_generator(space, &id) {
                        return Ok(space.basepoint(n));
                    }
                }
                if id == "e" && space.word_kind().is_some() {
                    return Ok(space.basepoint(0));
                }
                if id == "t" && space.word_kind().is_some() {
                    return self.group_word(space);
                }
                crate::chains::find_generator(space, &id)
                    .ok_or_else(|| Error::UnknownLabel(format!("no generator {id} in {}", space.name())))
            }
            Some(Tok::LParen) => {
                // (i, x) suspension pair, (x , y) product pair, or (y - *)
                match self.peek().cloned() {
                    Some(Tok::Int(i)) => {
                        self.next();
                        self.expect(Tok::Comma)?;
                        let inner_space = match space {
                            Space::Suspension(k) => (**k).clone(),
                            _ => {
                                return Err(Error::UnknownLabel(format!(
                                    "(i, x) needs a suspension, fixture is {}",
                                    space.name()
                                )))
                            }
                        };
                        let x = self.simplex(&inner_space)?;
                        self.expect(Tok::RParen)?;
                        let mut out = Simplex::cone(&x);
                        for _ in 1..i {
                            out = out.degeneracy(0);
                        }
                        Ok(out)
                    }
                    _ => {
                        let (a_space, b_space) = match space {
                            Space::Product(a, b) => ((**a).clone(), (**b).clone()),
                            other => (other.clone(), other.clone()),
                        };
                        let x = self.simplex(&a_space)?;
                        match self.next() {
                            Some(Tok::Comma) => {
                                let y = self.simplex(&b_space)?;
                                self.expect(Tok::RParen)?;
                                Ok(Simplex::pair(&x, &y))
                            }
                            Some(Tok::Minus) => {
                                self.expect(Tok::Star)?;
                                self.expect(Tok::RParen)?;
                                // reduced vertices surface as labels, not
                                // bare simplices; keep the vertex and let
                                // the caller wrap it
                                Err(Error::UnknownLabel(
                                    "use alpha on (y - *) via the reduced label form \
                                     `red(y)`"
                                        .into(),
                                ))
                            }
                            got => Err(Error::UnknownLabel(format!(
                                "expected , or - in pair, got {got:?}"
                            ))),
                        }
                    }
                }
            }
            got => Err(Error::UnknownLabel(format!("unexpected {got:?}"))),
        }
    }

    /// `t(y)`, `t(y)^-1`, products joined with `.`; the leading `t` has
    /// already been consumed.
    fn group_word(&mut self, space: &Space) -> Result<Simplex> {
        let kind = space.word_kind().unwrap();
        let letter_space = space.letter_space().unwrap();
        let mut letters: Vec<(Simplex, i8)> = Vec::new();
        loop {
            self.expect(Tok::LParen)?;
            let y = self.simplex(&letter_space)?;
            self.expect(Tok::RParen)?;
            let mut sign = 1i8;
            if self.peek() == Some(&Tok::Caret) {
                self.next();
                self.expect(Tok::Minus)?;
                match self.next() {
                    Some(Tok::Int(1)) => sign = -1,
                    got => {
                        return Err(Error::UnknownLabel(format!(
                            "expected ^-1, got ^-{got:?}"
                        )))
                    }
                }
            }
            letters.push((y, sign));
            if self.peek() == Some(&Tok::Dot) {
                self.next();
                match self.next() {
                    Some(Tok::Ident(t)) if t == "t" => continue,
                    got => {
                        return Err(Error::UnknownLabel(format!(
                            "expected t(...) after '.', got {got:?}"
                        )))
                    }
                }
            }
            break;
        }
        let dim = letters
            .first()
            .map(|(y, _)| y.dim() - 1)
            .ok_or_else(|| Error::UnknownLabel("empty word".into()))?;
        Ok(Simplex::word(kind, letters, dim))
    }
}

fn space_has_no_generator(space: &Space, id: &str) -> bool {
    crate::chains::find_generator(space, id).is_none()
}

/// Parses a label (simplex, tensor, reduced vertex `red(y)`, or word)
/// against a fixture space.
pub fn parse_label(space: &Space, input: &str) -> Result<BasisLabel> {
    let trimmed = input.trim();
    if let Some(rest) = trimmed.strip_prefix("red(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::UnknownLabel(format!("unbalanced {trimmed:?}")))?;
        let mut p = LabelParser {
            toks: tokenize(inner)?,
            pos: 0,
        };
        let s = p.simplex(space)?;
        return Ok(BasisLabel::ReducedVertex(s));
    }
    let mut p = LabelParser {
        toks: tokenize(trimmed)?,
        pos: 0,
    };
    let label = p.label(space)?;
    if p.pos != p.toks.len() {
        return Err(Error::UnknownLabel(format!(
            "trailing input in {trimmed:?}"
        )));
    }
    Ok(label)
}

/// Parses a simplex against a fixture space.
pub fn parse_simplex(space: &Space, input: &str) -> Result<Simplex> {
    match parse_label(space, input)? {
        BasisLabel::Simplex(s) => Ok(s),
        other => Err(Error::UnknownLabel(format!("{other} is not a simplex"))),
    }
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

/// `build <space-spec>`: materialize a fixture document.
pub fn cmd_build(spec: &str) -> Result<Value> {
    let space = fixtures::parse_space(spec)?;
    fixtures::to_fixture_json(&space)
}

/// `eval <map> --fixture <spec> --input <label>`: evaluate one of the
/// library's maps on a basis element and return its chain as JSON.
pub fn cmd_eval(
    map: &str,
    fixture: Option<&str>,
    input: Option<&str>,
    n: Option<usize>,
    i: Option<usize>,
    k_index: Option<usize>,
    max_word_length: usize,
) -> Result<Value> {
    let need_fixture = || fixture.ok_or_else(|| Error::Usage("--fixture is required".into()));
    let need_input = || input.ok_or_else(|| Error::Usage("--input is required".into()));
    let suspension_base = |space: &Space| -> Space {
        match space {
            Space::Suspension(k) => (**k).clone(),
            other => other.clone(),
        }
    };
    let value = match map {
        "aw" | "ez" | "phi" => {
            let (k, l) = parse_fixture_pair(need_fixture()?)?;
            let (k, l) = match (&k, &l) {
                // accept `product(A, B)` as the fixture too
                (Space::Product(a, b), _) if fixture.unwrap().find(',').is_none() => {
                    ((**a).clone(), (**b).clone())
                }
                _ => (k, l),
            };
            let data = crate::ezaw::EzData::new(&k, &l);
            match map {
                "aw" => {
                    let z = parse_simplex(&data.product, need_input()?)?;
                    data.aw_label(&z)
                }
                "phi" => {
                    let z = parse_simplex(&data.product, need_input()?)?;
                    data.phi_label(&z)
                }
                _ => {
                    let label = parse_label(&data.product, need_input()?)?;
                    match &label {
                        BasisLabel::Tensor(a, b) => match (a.as_ref(), b.as_ref()) {
                            (BasisLabel::Simplex(x), BasisLabel::Simplex(y)) => {
                                data.ez_label(x, y)
                            }
                            _ => return Err(Error::UnknownLabel(format!("{label}"))),
                        },
                        _ => return Err(Error::UnknownLabel(format!("{label}"))),
                    }
                }
            }
        }
        "alpha" => {
            let k = fixtures::parse_space(need_fixture()?)?;
            let jd = JamesData::new(&k)?;
            let label = parse_label(&k, need_input()?)?;
            jd.alpha_label(&label)
        }
        "psi" | "xi" => {
            let space = fixtures::parse_space(need_fixture()?)?;
            let base = suspension_base(&space);
            let jd = JamesData::new(&base)?;
            let z = parse_simplex(&jd.ek, need_input()?)?;
            if map == "xi" {
                jd.xi_closed(&z)
            } else {
                jd.psi(&Chain::from_label(
                    BasisLabel::Word(vec![BasisLabel::Simplex(z)]),
                    0,
                ))
            }
        }
        "gamma" => {
            let space = fixtures::parse_space(need_fixture()?)?;
            let base = suspension_base(&space);
            let jd = JamesData::new(&base)?;
            let label = parse_label_word_over(&jd.ek, need_input()?)?;
            jd.gamma().apply_label(&label)
        }
        "q" | "sigma" | "h" => {
            let (a, b) = parse_fixture_pair(need_fixture()?)?;
            let mg = Milgram::new(Coalgebra::chains(a.clone()), Coalgebra::chains(b.clone()))?;
            let product = a.product(&b); // ambient for tensor-letter parsing
            let input = need_input()?;
            match map {
                "q" => {
                    let w = parse_label_word_over(&product, input)?;
                    mg.q_label(&w)
                }
                "h" => {
                    let w = parse_label_word_over(&product, input)?;
                    mg.h_label(&w)
                }
                _ => {
                    let label = parse_label(&product, input)?;
                    mg.sigma_label(&label)
                }
            }
        }
        "t_ek" | "theta" => {
            let space = fixtures::parse_space(need_fixture()?)?;
            let base = suspension_base(&space);
            let sd = SzczarbaData::new(&base)?;
            if map == "t_ek" {
                let z = parse_simplex(&sd.jd.ek, need_input()?)?;
                sd.t_ek_raw(&z)?
            } else {
                let w = parse_label_word_over(&sd.jd.ek, need_input()?)?;
                sd.theta().apply_label(&w)
            }
        }
        "f_k" | "phi_k" => {
            let (k, l) = parse_fixture_pair(need_fixture()?)?;
            let gm = GmData::new(&k, &l)?;
            let z = parse_simplex(&gm.ez.product, need_input()?)?;
            let kk =
                k_index.ok_or_else(|| Error::Usage("--k component index required".into()))?;
            if map == "f_k" {
                gm.f_component(&BasisLabel::Simplex(z), kk)
            } else {
                gm.phi_component(&BasisLabel::Simplex(z), kk)
            }
        }
        "d_operator" => {
            let n = n.ok_or_else(|| Error::Usage("--n is required".into()))?;
            let table = |i: usize| -> Result<Value> {
                let op = d_operator(n, i)?;
                Ok(json!({
                    "n": n,
                    "i": i,
                    "operator": op,
                    "display": op.to_string(),
                    "epsilon": epsilon(i, n)?,
                }))
            };
            return match i {
                Some(i) => table(i),
                None => {
                    let fact: usize = (1..n).product();
                    let rows: Result<Vec<Value>> = (1..=fact).map(table).collect();
                    Ok(Value::Array(rows?))
                }
            };
        }
        other => return Err(Error::Usage(format!("unknown map {other:?}"))),
    };
    let _ = max_word_length;
    Ok(json!({
        "map": map,
        "value": chain_to_json(&value),
        "display": value.to_string(),
    }))
}

/// Words `[...]` parse directly; a bare simplex becomes a one-letter word.
fn parse_label_word_over(space: &Space, input: &str) -> Result<BasisLabel> {
    let label = parse_label(space, input)?;
    Ok(match label {
        BasisLabel::Word(_) => label,
        other => BasisLabel::Word(vec![other]),
    })
}

/// `verify <suite>`: run and report; the exit code reflects the outcome.
pub fn cmd_verify(suite: &str, fixture: Option<&str>, bounds: &Bounds) -> Result<(Value, bool)> {
    let started = std::time::Instant::now();
    let reports = run_suite(suite, fixture, bounds)?;
    let pass = reports.iter().all(|r| r.pass);
    eprintln!(
        "suite {suite}: {} report(s) in {:?}",
        reports.len(),
        started.elapsed()
    );
    let value = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        Value::Array(reports.iter().map(|r| r.to_json()).collect())
    };
    Ok((value, pass))
}
