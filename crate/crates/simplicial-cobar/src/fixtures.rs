//! Standard fixture spaces and the space-spec language.
//!
//! The standard library: pointed sphere models `S^n` (one nondegenerate
//! n-simplex with all faces at the basepoint), the two-vertex `S^0`, the
//! pointed standard simplex `Δ[n]` based at vertex 0, and wedges. Specs are
//! written `sphere 2`, `delta 1`, `wedge(S1, S1)`, `suspension(S1)`,
//! `product(S1, S2)`, `loopgroup(S1)`, `james(S1)`, with shorthands like
//! `S1`, `D2`, `ES1`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::simplicial::{validate_finite, FaceRef, FiniteSpace, GenData, Simplex, Space};
use crate::{Error, Result};

/// The pointed n-sphere model. `sphere(0)` is the two-vertex complex.
pub fn sphere(n: usize) -> Space {
    if n == 0 {
        return Space::finite(FiniteSpace {
            name: "S0".into(),
            basepoint_id: "*".into(),
            gens: vec![GenData {
                id: "y".into(),
                dim: 0,
                faces: vec![],
            }],
        });
    }
    Space::finite(FiniteSpace {
        name: format!("S{n}"),
        basepoint_id: "*".into(),
        gens: vec![GenData {
            id: "x".into(),
            dim: n,
            faces: vec![FaceRef::Basepoint; n + 1],
        }],
    })
}

/// The pointed standard simplex `Δ[n]`, based at vertex 0.
pub fn delta(n: usize) -> Space {
    assert!(n >= 1 && n <= 6);
    // Nondegenerate simplices are the nonempty subsets of {0..n}; vertex 0
    // is the basepoint and is left implicit.
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << (n + 1)) {
        let s: Vec<usize> = (0..=n).filter(|i| mask & (1 << i) != 0).collect();
        if s != vec![0] {
            subsets.push(s);
        }
    }
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    let id_of = |s: &[usize]| -> String {
        if s.len() == 1 {
            format!("v{}", s[0])
        } else {
            let digits: String = s.iter().map(|d| d.to_string()).collect();
            format!("x{digits}")
        }
    };
    let index_of = |subsets: &[Vec<usize>], s: &[usize]| subsets.iter().position(|t| t == s);
    let mut gens = Vec::new();
    for s in &subsets {
        let dim = s.len() - 1;
        let mut faces = Vec::new();
        if dim >= 1 {
            for j in 0..=dim {
                let mut f = s.clone();
                f.remove(j);
                if f == vec![0] {
                    faces.push(FaceRef::Basepoint);
                } else {
                    faces.push(FaceRef::Gen {
                        idx: index_of(&subsets, &f).unwrap(),
                        degens: vec![],
                    });
                }
            }
        }
        gens.push(GenData {
            id: id_of(s),
            dim,
            faces,
        });
    }
    Space::finite(FiniteSpace {
        name: format!("D{n}"),
        basepoint_id: "v0".into(),
        gens,
    })
}

/// Wedge of two pointed complexes along their basepoints.
pub fn wedge(a: &Space, b: &Space) -> Result<Space> {
    let (fa, fb) = match (a, b) {
        (Space::Finite(fa), Space::Finite(fb)) => (fa, fb),
        _ => {
            return Err(Error::BadSpaceSpec(
                "wedge requires finite fixture complexes".into(),
            ))
        }
    };
    let mut gens: Vec<GenData> = Vec::new();
    let shift = fa.gens.len();
    for g in &fa.gens {
        gens.push(GenData {
            id: format!("l:{}", g.id),
            dim: g.dim,
            faces: g.faces.clone(),
        });
    }
    for g in &fb.gens {
        let faces = g
            .faces
            .iter()
            .map(|fr| match fr {
                FaceRef::Basepoint => FaceRef::Basepoint,
                FaceRef::Gen { idx, degens } => FaceRef::Gen {
                    idx: idx + shift,
                    degens: degens.clone(),
                },
            })
            .collect();
        gens.push(GenData {
            id: format!("r:{}", g.id),
            dim: g.dim,
            faces,
        });
    }
    Ok(Space::finite(FiniteSpace {
        name: format!("({}v{})", fa.name, fb.name),
        basepoint_id: "*".into(),
        gens,
    }))
}

/// Parses a space spec. See module docs for the grammar.
pub fn parse_space(spec: &str) -> Result<Space> {
    let tokens = tokenize(spec)?;
    let mut pos = 0;
    let space = parse_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::BadSpaceSpec(format!(
            "trailing input after position {pos} in {spec:?}"
        )));
    }
    Ok(space)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
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
            ',' => {
                chars.next();
                out.push(Tok::Comma);
            }
            c if c.is_ascii_digit() => {
                let mut n = 0usize;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v as usize;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '+' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '+' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            other => {
                return Err(Error::BadSpaceSpec(format!("unexpected character {other:?}")))
            }
        }
    }
    Ok(out)
}

fn parse_expr(tokens: &[Tok], pos: &mut usize) -> Result<Space> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::BadSpaceSpec("unexpected end of spec".into()))?
        .clone();
    *pos += 1;
    let name = match tok {
        Tok::Ident(name) => name,
        other => return Err(Error::BadSpaceSpec(format!("unexpected token {other:?}"))),
    };
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "sphere" | "delta" => {
            let n = parse_int_arg(tokens, pos)?;
            if lower == "sphere" {
                Ok(sphere(n))
            } else {
                Ok(delta(n))
            }
        }
        "suspension" | "e" => Ok(parse_one(tokens, pos)?.suspension()),
        "loopgroup" | "g" => parse_one(tokens, pos)?.loop_group(),
        "james" | "g+e" | "gplus" => Ok(parse_one(tokens, pos)?.james_monoid()),
        "product" => {
            let (a, b) = parse_two(tokens, pos)?;
            Ok(a.product(&b))
        }
        "wedge" => {
            let (a, b) = parse_two(tokens, pos)?;
            wedge(&a, &b)
        }
        _ => shorthand(&name),
    }
}

fn parse_int_arg(tokens: &[Tok], pos: &mut usize) -> Result<usize> {
    // accept `sphere 1` and `sphere(1)`
    match tokens.get(*pos) {
        Some(Tok::Int(n)) => {
            *pos += 1;
            Ok(*n)
        }
        Some(Tok::LParen) => {
            *pos += 1;
            let n = match tokens.get(*pos) {
                Some(Tok::Int(n)) => *n,
                _ => return Err(Error::BadSpaceSpec("expected integer".into())),
            };
            *pos += 1;
            expect(tokens, pos, Tok::RParen)?;
            Ok(n)
        }
        _ => Err(Error::BadSpaceSpec("expected integer argument".into())),
    }
}

fn parse_one(tokens: &[Tok], pos: &mut usize) -> Result<Space> {
    expect(tokens, pos, Tok::LParen)?;
    let a = parse_expr(tokens, pos)?;
    expect(tokens, pos, Tok::RParen)?;
    Ok(a)
}

fn parse_two(tokens: &[Tok], pos: &mut usize) -> Result<(Space, Space)> {
    expect(tokens, pos, Tok::LParen)?;
    let a = parse_expr(tokens, pos)?;
    expect(tokens, pos, Tok::Comma)?;
    let b = parse_expr(tokens, pos)?;
    expect(tokens, pos, Tok::RParen)?;
    Ok((a, b))
}

fn expect(tokens: &[Tok], pos: &mut usize, want: Tok) -> Result<()> {
    if tokens.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::BadSpaceSpec(format!(
            "expected {want:?} at position {pos}"
        )))
    }
}

/// `S1`, `D2`, `ES1`, `EES0`, `W11` style shorthands.
fn shorthand(name: &str) -> Result<Space> {
    let upper = name.to_ascii_uppercase();
    if upper == "W11" {
        return wedge(&sphere(1), &sphere(1));
    }
    let mut rest = upper.as_str();
    let mut suspensions = 0;
    while let Some(r) = rest.strip_prefix('E') {
        suspensions += 1;
        rest = r;
    }
    let base = if let Some(n) = rest.strip_prefix('S') {
        let n: usize = n
            .parse()
            .map_err(|_| Error::BadSpaceSpec(format!("unknown space {name:?}")))?;
        sphere(n)
    } else if let Some(n) = rest.strip_prefix('D') {
        let n: usize = n
            .parse()
            .map_err(|_| Error::BadSpaceSpec(format!("unknown space {name:?}")))?;
        delta(n)
    } else {
        return Err(Error::BadSpaceSpec(format!("unknown space {name:?}")));
    };
    let mut out = base;
    for _ in 0..suspensions {
        out = out.suspension();
    }
    Ok(out)
}

/// Materializes a finite-type space as a fixture document.
pub fn to_fixture_json(space: &Space) -> Result<Value> {
    let top = space.top_dim().ok_or_else(|| {
        Error::BadSpaceSpec(format!(
            "{} has no finite generator enumeration",
            space.name()
        ))
    })?;
    let mut ids: Vec<(Simplex, String)> = Vec::new();
    for d in 0..=top {
        for s in space.nondeg(d)? {
            if !s.is_basepoint() {
                let id = s.to_string();
                ids.push((s, id));
            }
        }
    }
    let lookup = |s: &Simplex| -> Option<(String, Vec<usize>)> {
        let core = s.core();
        ids.iter()
            .find(|(t, _)| *t == core)
            .map(|(_, id)| (id.clone(), s.degens().to_vec()))
    };
    let mut gens = Vec::new();
    for (s, id) in &ids {
        let mut faces = Vec::new();
        if s.dim() >= 1 {
            for i in 0..=s.dim() {
                let f = s.face(i);
                if f.is_basepoint() {
                    faces.push(json!({ "basepoint": f.dim() }));
                } else {
                    let (gid, degens) = lookup(&f).ok_or_else(|| {
                        Error::BadFixture(format!("face {f} of {id} not in generator table"))
                    })?;
                    faces.push(json!({ "gen": gid, "degens": degens }));
                }
            }
        }
        gens.push(json!({ "id": id, "dim": s.dim(), "faces": faces }));
    }
    Ok(json!({
        "name": space.name(),
        "basepoint": "*",
        "generators": gens,
    }))
}

/// Loads a fixture document into a finite space.
pub fn from_fixture_json(doc: &Value) -> Result<Space> {
    let name = doc
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::BadFixture("missing name".into()))?
        .to_string();
    let basepoint_id = doc
        .get("basepoint")
        .and_then(Value::as_str)
        .unwrap_or("*")
        .to_string();
    let raw = doc
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::BadFixture("missing generators".into()))?;
    let ids: Vec<String> = raw
        .iter()
        .map(|g| {
            g.get("id")
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::BadFixture("generator without id".into()))
        })
        .collect::<Result<_>>()?;
    let mut gens = Vec::new();
    for g in raw {
        let id = g["id"].as_str().unwrap().to_string();
        let dim = g
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::BadFixture(format!("generator {id} without dim")))?
            as usize;
        let mut faces = Vec::new();
        for f in g.get("faces").and_then(Value::as_array).unwrap_or(&vec![]) {
            if f.get("basepoint").is_some() {
                faces.push(FaceRef::Basepoint);
            } else {
                let gid = f
                    .get("gen")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::BadFixture(format!("bad face in {id}")))?;
                let idx = ids
                    .iter()
                    .position(|i| i == gid)
                    .ok_or_else(|| Error::BadFixture(format!("unknown face {gid} in {id}")))?;
                let degens = f
                    .get("degens")
                    .and_then(Value::as_array)
                    .map(|a| a.iter().filter_map(Value::as_u64).map(|d| d as usize).collect())
                    .unwrap_or_default();
                faces.push(FaceRef::Gen { idx, degens });
            }
        }
        gens.push(GenData { id, dim, faces });
    }
    let fs = Arc::new(FiniteSpace {
        name,
        basepoint_id,
        gens,
    });
    validate_finite(&fs)?;
    Ok(Space::Finite(fs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_spaces() {
        assert_eq!(sphere(2).nondeg(2).unwrap().len(), 1);
        assert_eq!(sphere(0).nondeg(0).unwrap().len(), 2);
        let d2 = delta(2);
        assert_eq!(d2.nondeg(0).unwrap().len(), 3); // v0(=*), v1, v2
        assert_eq!(d2.nondeg(1).unwrap().len(), 3);
        assert_eq!(d2.nondeg(2).unwrap().len(), 1);
        let w = wedge(&sphere(1), &sphere(1)).unwrap();
        assert_eq!(w.nondeg(1).unwrap().len(), 2);
        assert!(w.is_reduced());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_space("sphere 1").unwrap().name(), "S1");
        assert_eq!(parse_space("suspension (sphere 1)").unwrap().name(), "E(S1)");
        assert_eq!(parse_space("ES1").unwrap().name(), "E(S1)");
        assert_eq!(parse_space("product(S1, S2)").unwrap().name(), "(S1 x S2)");
        assert_eq!(parse_space("wedge(S1, S1)").unwrap().name(), "(S1vS1)");
        assert_eq!(parse_space("james(D1)").unwrap().name(), "G+E(D1)");
        assert!(parse_space("loopgroup(S0)").is_err()); // S0 not reduced
        assert!(parse_space("nope").is_err());
    }

    #[test]
    fn fixture_round_trip() {
        for space in [sphere(1), delta(2), sphere(1).suspension()] {
            let doc = to_fixture_json(&space).unwrap();
            let loaded = from_fixture_json(&doc).unwrap();
            for d in 0..=space.top_dim().unwrap() {
                assert_eq!(
                    space.nondeg(d).unwrap().len(),
                    loaded.nondeg(d).unwrap().len(),
                    "dim {d}"
                );
            }
            // faces agree under the id correspondence
            let doc2 = to_fixture_json(&loaded).unwrap();
            let norm = |v: &Value| {
                let mut gens: Vec<Value> =
                    v["generators"].as_array().unwrap().clone();
                gens.sort_by_key(|g| g["id"].as_str().unwrap().to_string());
                gens
            };
            assert_eq!(norm(&doc).len(), norm(&doc2).len());
        }
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let doc = serde_json::json!({
            "name": "bad",
            "basepoint": "*",
            "generators": [
                { "id": "x", "dim": 1, "faces": [ {"basepoint": 0} ] }
            ]
        });
        assert!(from_fixture_json(&doc).is_err());
    }
}
