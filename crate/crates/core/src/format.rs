//! Line-oriented text format for categories, classes W, additive structure
//! and functors.
//!
//! ```text
//! # comment
//! object <name>
//! morphism <name> : <dom> -> <cod>
//! identity <obj> = <mor>
//! compose <g> . <f> = <h>
//! w <mor>
//! zero <A> <B> = <mor>
//! add <f> + <g> = <h>
//! neg <f> = <g>
//! word <obj> : <lit>,<lit>,...
//! ```
//!
//! Names are declared before use and map to ids in file order. Every
//! composable pair must have a `compose` line. When any additive line is
//! present the structure must be complete: a zero for every hom-set and a
//! sum for every ordered parallel pair, where `add f + g = h` also fills
//! `g + f` if that line is absent. Missing `neg` lines are derived from the
//! sums.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::additive::PreadditiveStructure;
use crate::category::{CategoryBuilder, FiniteCategory, MorphClass, MorphId, ObjId};
use crate::functor::Functor;
use crate::oracle::{Literal, LiteralString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err<T>(line: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        reason: reason.into(),
    })
}

/// Everything a category file can declare.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryFile {
    pub category: FiniteCategory,
    pub w: MorphClass,
    pub additive: Option<PreadditiveStructure>,
    pub words: Vec<LiteralString>,
}

struct RawWord {
    line: usize,
    start: String,
    literals: Vec<String>,
}

#[derive(Default)]
struct Names {
    objects: HashMap<String, ObjId>,
    morphisms: HashMap<String, MorphId>,
}

impl Names {
    fn obj(&self, line: usize, name: &str) -> Result<ObjId, ParseError> {
        match self.objects.get(name) {
            Some(a) => Ok(*a),
            None => err(line, format!("undefined object `{name}`")),
        }
    }

    fn mor(&self, line: usize, name: &str) -> Result<MorphId, ParseError> {
        match self.morphisms.get(name) {
            Some(f) => Ok(*f),
            None => err(line, format!("undefined morphism `{name}`")),
        }
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with('~')
        && !name.contains([',', '(', ')', '#'])
        && !matches!(name, ":" | "->" | "=" | "." | "+")
}

fn expect(line: usize, toks: &[&str], pattern: &[Option<&str>]) -> Result<(), ParseError> {
    if toks.len() != pattern.len() {
        return err(line, format!("expected {} tokens, found {}", pattern.len(), toks.len()));
    }
    for (tok, want) in toks.iter().zip(pattern) {
        if let Some(w) = want {
            if tok != w {
                return err(line, format!("expected `{w}`, found `{tok}`"));
            }
        }
    }
    Ok(())
}

/// Parses a category file.
pub fn parse_category(text: &str) -> Result<CategoryFile, ParseError> {
    let mut names = Names::default();
    let mut builder = CategoryBuilder::new();
    let mut obj_lines = Vec::new();
    let mut mor_decls: Vec<(ObjId, ObjId, usize)> = Vec::new();
    let mut mor_names: Vec<String> = Vec::new();
    let mut identities: Vec<Option<MorphId>> = Vec::new();
    let mut composites: HashMap<(MorphId, MorphId), MorphId> = HashMap::new();
    let mut w_members = Vec::new();
    let mut zeros: HashMap<(ObjId, ObjId), (MorphId, usize)> = HashMap::new();
    let mut sums: HashMap<(MorphId, MorphId), MorphId> = HashMap::new();
    let mut negs: HashMap<MorphId, MorphId> = HashMap::new();
    let mut additive_seen = false;
    let mut raw_words = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&keyword) = toks.first() else { continue };
        match keyword {
            "object" => {
                expect(line, &toks, &[None, None])?;
                let name = toks[1];
                if !valid_name(name) {
                    return err(line, format!("invalid name `{name}`"));
                }
                if names.objects.contains_key(name) {
                    return err(line, format!("duplicate object `{name}`"));
                }
                let id = builder.object(name);
                names.objects.insert(name.to_string(), id);
                obj_lines.push(line);
                identities.push(None);
            }
            "morphism" => {
                expect(line, &toks, &[None, None, Some(":"), None, Some("->"), None])?;
                let name = toks[1];
                if !valid_name(name) {
                    return err(line, format!("invalid name `{name}`"));
                }
                if names.morphisms.contains_key(name) {
                    return err(line, format!("duplicate morphism `{name}`"));
                }
                let dom = names.obj(line, toks[3])?;
                let cod = names.obj(line, toks[5])?;
                let id = builder.morphism(name, dom, cod);
                names.morphisms.insert(name.to_string(), id);
                mor_decls.push((dom, cod, line));
                mor_names.push(name.to_string());
            }
            "identity" => {
                expect(line, &toks, &[None, None, Some("="), None])?;
                let a = names.obj(line, toks[1])?;
                let f = names.mor(line, toks[3])?;
                if identities[a.0].is_some() {
                    return err(line, format!("duplicate identity for `{}`", toks[1]));
                }
                let (dom, cod, _) = mor_decls[f.0];
                if dom != a || cod != a {
                    return err(
                        line,
                        format!("identity `{}` is not an endomorphism of `{}`", toks[3], toks[1]),
                    );
                }
                identities[a.0] = Some(f);
                builder.identity(a, f);
            }
            "compose" => {
                expect(line, &toks, &[None, None, Some("."), None, Some("="), None])?;
                let g = names.mor(line, toks[1])?;
                let f = names.mor(line, toks[3])?;
                let h = names.mor(line, toks[5])?;
                if mor_decls[f.0].1 != mor_decls[g.0].0 {
                    return err(
                        line,
                        format!(
                            "`{}` . `{}` is not composable: cod({}) != dom({})",
                            toks[1], toks[3], toks[3], toks[1]
                        ),
                    );
                }
                if composites.insert((g, f), h).is_some() {
                    return err(line, format!("duplicate composite `{} . {}`", toks[1], toks[3]));
                }
                builder.compose(g, f, h);
            }
            "w" => {
                expect(line, &toks, &[None, None])?;
                let f = names.mor(line, toks[1])?;
                if w_members.contains(&f) {
                    return err(line, format!("duplicate W member `{}`", toks[1]));
                }
                w_members.push(f);
            }
            "zero" => {
                expect(line, &toks, &[None, None, None, Some("="), None])?;
                additive_seen = true;
                let a = names.obj(line, toks[1])?;
                let b = names.obj(line, toks[2])?;
                let z = names.mor(line, toks[4])?;
                if zeros.insert((a, b), (z, line)).is_some() {
                    return err(line, format!("duplicate zero for `{} {}`", toks[1], toks[2]));
                }
            }
            "add" => {
                expect(line, &toks, &[None, None, Some("+"), None, Some("="), None])?;
                additive_seen = true;
                let f = names.mor(line, toks[1])?;
                let g = names.mor(line, toks[3])?;
                let h = names.mor(line, toks[5])?;
                if (mor_decls[f.0].0, mor_decls[f.0].1) != (mor_decls[g.0].0, mor_decls[g.0].1) {
                    return err(line, format!("`{}` and `{}` are not parallel", toks[1], toks[3]));
                }
                if sums.insert((f, g), h).is_some() {
                    return err(line, format!("duplicate sum `{} + {}`", toks[1], toks[3]));
                }
            }
            "neg" => {
                expect(line, &toks, &[None, None, Some("="), None])?;
                additive_seen = true;
                let f = names.mor(line, toks[1])?;
                let g = names.mor(line, toks[3])?;
                if negs.insert(f, g).is_some() {
                    return err(line, format!("duplicate negation of `{}`", toks[1]));
                }
            }
            "word" => {
                if toks.len() < 3 || toks[2] != ":" {
                    return err(line, "expected `word <obj> : <lit>,...`");
                }
                let joined: String = toks[3..].concat();
                let literals = if joined.is_empty() {
                    Vec::new()
                } else {
                    joined.split(',').map(str::to_string).collect()
                };
                raw_words.push(RawWord {
                    line,
                    start: toks[1].to_string(),
                    literals,
                });
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
    }

    for (i, id) in identities.iter().enumerate() {
        if id.is_none() {
            return err(obj_lines[i], "object has no identity");
        }
    }
    let n = mor_decls.len();
    for g in 0..n {
        for f in 0..n {
            if mor_decls[f].1 == mor_decls[g].0 && !composites.contains_key(&(MorphId(g), MorphId(f))) {
                let line = mor_decls[f].2.max(mor_decls[g].2);
                return err(line, format!("missing composite `{} . {}`", mor_names[g], mor_names[f]));
            }
        }
    }
    let category = builder.build().map_err(|e| ParseError {
        line: 0,
        reason: e.to_string(),
    })?;
    let w = MorphClass::from_iter(&category, w_members);

    let additive = if additive_seen {
        Some(assemble_additive(
            &category,
            &zeros,
            &sums,
            &negs,
            text.lines().count(),
        )?)
    } else {
        None
    };

    let mut words = Vec::new();
    for raw in raw_words {
        let start = names.obj(raw.line, &raw.start)?;
        let mut lits = Vec::with_capacity(raw.literals.len());
        for lit in &raw.literals {
            let l = match lit.strip_prefix('~') {
                Some(base) => Literal::Inverse(names.mor(raw.line, base)?),
                None => Literal::Forward(names.mor(raw.line, lit)?),
            };
            lits.push(l);
        }
        let word = LiteralString::new(&category, &w, start, lits).map_err(|e| ParseError {
            line: raw.line,
            reason: e.to_string(),
        })?;
        words.push(word);
    }

    Ok(CategoryFile {
        category,
        w,
        additive,
        words,
    })
}

fn assemble_additive(
    c: &FiniteCategory,
    zeros: &HashMap<(ObjId, ObjId), (MorphId, usize)>,
    sums: &HashMap<(MorphId, MorphId), MorphId>,
    negs: &HashMap<MorphId, MorphId>,
    last_line: usize,
) -> Result<PreadditiveStructure, ParseError> {
    let n_obj = c.num_objects();
    let n = c.num_morphisms();
    let mut zero = Vec::with_capacity(n_obj * n_obj);
    for a in c.objects() {
        for b in c.objects() {
            match zeros.get(&(a, b)) {
                Some((z, _)) => zero.push(*z),
                None => {
                    return err(
                        last_line,
                        format!("missing zero for `{} {}`", c.object_name(a), c.object_name(b)),
                    )
                }
            }
        }
    }
    let mut add = vec![None; n * n];
    for f in c.morphisms() {
        for &g in c.hom(c.dom(f), c.cod(f)) {
            let sum = sums.get(&(f, g)).or_else(|| sums.get(&(g, f)));
            match sum {
                Some(h) => add[f.0 * n + g.0] = Some(*h),
                None => {
                    return err(
                        last_line,
                        format!("missing sum `{} + {}`", c.morphism_name(f), c.morphism_name(g)),
                    )
                }
            }
        }
    }
    let mut neg = Vec::with_capacity(n);
    for f in c.morphisms() {
        if let Some(g) = negs.get(&f) {
            neg.push(*g);
            continue;
        }
        let z = zero[c.dom(f).0 * n_obj + c.cod(f).0];
        let candidates: Vec<MorphId> = c
            .hom(c.dom(f), c.cod(f))
            .iter()
            .copied()
            .filter(|g| add[f.0 * n + g.0] == Some(z))
            .collect();
        match candidates.as_slice() {
            [g] => neg.push(*g),
            [] => return err(last_line, format!("cannot derive negation of `{}`", c.morphism_name(f))),
            _ => return err(last_line, format!("ambiguous negation of `{}`", c.morphism_name(f))),
        }
    }
    Ok(PreadditiveStructure::from_parts(c, zero, add, neg))
}

/// Serializes a category file. Parsing the output yields an equal value.
pub fn serialize_category(file: &CategoryFile) -> String {
    let c = &file.category;
    let mut out = String::new();
    for a in c.objects() {
        let _ = writeln!(out, "object {}", c.object_name(a));
    }
    for f in c.morphisms() {
        let _ = writeln!(
            out,
            "morphism {} : {} -> {}",
            c.morphism_name(f),
            c.object_name(c.dom(f)),
            c.object_name(c.cod(f))
        );
    }
    for a in c.objects() {
        let _ = writeln!(out, "identity {} = {}", c.object_name(a), c.morphism_name(c.id(a)));
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            if let Some(h) = c.comp(g, f) {
                let _ = writeln!(
                    out,
                    "compose {} . {} = {}",
                    c.morphism_name(g),
                    c.morphism_name(f),
                    c.morphism_name(h)
                );
            }
        }
    }
    for m in file.w.iter() {
        let _ = writeln!(out, "w {}", c.morphism_name(m));
    }
    if let Some(p) = &file.additive {
        for a in c.objects() {
            for b in c.objects() {
                let _ = writeln!(
                    out,
                    "zero {} {} = {}",
                    c.object_name(a),
                    c.object_name(b),
                    c.morphism_name(p.zero(a, b))
                );
            }
        }
        for f in c.morphisms() {
            for &g in c.hom(c.dom(f), c.cod(f)) {
                if let Some(h) = p.add(f, g) {
                    let _ = writeln!(
                        out,
                        "add {} + {} = {}",
                        c.morphism_name(f),
                        c.morphism_name(g),
                        c.morphism_name(h)
                    );
                }
            }
        }
        for f in c.morphisms() {
            let _ = writeln!(out, "neg {} = {}", c.morphism_name(f), c.morphism_name(p.neg(f)));
        }
    }
    for word in &file.words {
        let _ = writeln!(out, "word {}", word.render(c));
    }
    out
}

/// Parses a functor file (`object <a> -> <b>`, `morphism <f> -> <g>`)
/// against its source and target categories. Every object and morphism of
/// the source must be mapped exactly once.
pub fn parse_functor(
    text: &str,
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
) -> Result<Functor, ParseError> {
    let mut obj_map: Vec<Option<ObjId>> = vec![None; source.num_objects()];
    let mut mor_map: Vec<Option<MorphId>> = vec![None; source.num_morphisms()];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let Some(&keyword) = toks.first() else { continue };
        expect(line, &toks, &[None, None, Some("->"), None])?;
        match keyword {
            "object" => {
                let Some(a) = source.object_by_name(toks[1]) else {
                    return err(line, format!("undefined source object `{}`", toks[1]));
                };
                let Some(b) = target.object_by_name(toks[3]) else {
                    return err(line, format!("undefined target object `{}`", toks[3]));
                };
                if obj_map[a.0].replace(b).is_some() {
                    return err(line, format!("object `{}` mapped twice", toks[1]));
                }
            }
            "morphism" => {
                let Some(f) = source.morphism_by_name(toks[1]) else {
                    return err(line, format!("undefined source morphism `{}`", toks[1]));
                };
                let Some(g) = target.morphism_by_name(toks[3]) else {
                    return err(line, format!("undefined target morphism `{}`", toks[3]));
                };
                if mor_map[f.0].replace(g).is_some() {
                    return err(line, format!("morphism `{}` mapped twice", toks[1]));
                }
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
    }
    let last = text.lines().count();
    let obj_map = obj_map
        .iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| format!("object `{}` is not mapped", source.object_name(ObjId(i)))))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|reason| ParseError { line: last, reason })?;
    let mor_map = mor_map
        .iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| format!("morphism `{}` is not mapped", source.morphism_name(MorphId(i)))))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|reason| ParseError { line: last, reason })?;
    Ok(Functor::new(source, target, obj_map, mor_map))
}
