//! Free localization by strings of literals.
//!
//! A string `⟨l1, ..., ln⟩` denotes `l1 ∘ ... ∘ ln`; each literal is a
//! morphism of C or the formal inverse of a member of W. Two strings are
//! identified when they are connected by the elementary equivalences
//!
//! * `⟨⟩_A ~ ⟨id_A⟩`
//! * `⟨g, f⟩ ~ ⟨g ∘ f⟩`
//! * `⟨w, w⁻¹⟩ ~ ⟨⟩`, `⟨w⁻¹, w⟩ ~ ⟨⟩`
//!
//! applied inside any context. Equality is searched for by a bounded
//! breadth-first search from both ends, so verdicts can be `Unknown`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::category::{FiniteCategory, MorphClass, MorphId, ObjId};
use crate::error::{Error, Result};
use crate::fractions::{check_universe, localize, roofs_between, Roof};
use crate::union_find::UnionFind;

pub const DEFAULT_MAX_STEPS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Literal {
    Forward(MorphId),
    Inverse(MorphId),
}

impl Literal {
    pub fn dom(self, c: &FiniteCategory) -> ObjId {
        match self {
            Literal::Forward(m) => c.dom(m),
            Literal::Inverse(m) => c.cod(m),
        }
    }

    pub fn cod(self, c: &FiniteCategory) -> ObjId {
        match self {
            Literal::Forward(m) => c.cod(m),
            Literal::Inverse(m) => c.dom(m),
        }
    }

    fn code(self) -> u32 {
        match self {
            Literal::Forward(m) => 2 * m.0 as u32,
            Literal::Inverse(m) => 2 * m.0 as u32 + 1,
        }
    }

    fn from_code(code: u32) -> Self {
        let m = MorphId((code / 2) as usize);
        if code.is_multiple_of(2) {
            Literal::Forward(m)
        } else {
            Literal::Inverse(m)
        }
    }

    pub fn render(self, c: &FiniteCategory) -> String {
        match self {
            Literal::Forward(m) => c.morphism_name(m).to_string(),
            Literal::Inverse(m) => format!("~{}", c.morphism_name(m)),
        }
    }
}

/// A composable string of literals from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiteralString {
    start: ObjId,
    end: ObjId,
    literals: Vec<Literal>,
}

impl LiteralString {
    /// Checks that the literals compose starting from `start` and that
    /// every inverse literal names a member of W.
    pub fn new(c: &FiniteCategory, w: &MorphClass, start: ObjId, literals: Vec<Literal>) -> Result<Self> {
        if start.0 >= c.num_objects() {
            return Err(Error::InvalidWord(format!("unknown object {start}")));
        }
        let mut at = start;
        for lit in literals.iter().rev() {
            let m = match *lit {
                Literal::Forward(m) | Literal::Inverse(m) => m,
            };
            if m.0 >= c.num_morphisms() {
                return Err(Error::InvalidWord(format!("unknown morphism {m}")));
            }
            if let Literal::Inverse(m) = lit {
                if !w.contains(*m) {
                    return Err(Error::InvalidWord(format!(
                        "formal inverse of {} which is not in W",
                        c.morphism_name(*m)
                    )));
                }
            }
            if lit.dom(c) != at {
                return Err(Error::InvalidWord(format!(
                    "{} does not start at {}",
                    lit.render(c),
                    c.object_name(at)
                )));
            }
            at = lit.cod(c);
        }
        Ok(LiteralString {
            start,
            end: at,
            literals,
        })
    }

    /// The empty string `⟨⟩_A`.
    pub fn empty(a: ObjId) -> Self {
        LiteralString {
            start: a,
            end: a,
            literals: Vec::new(),
        }
    }

    /// `⟨w⁻¹, f⟩` for the roof `(f, w)`.
    pub fn of_roof(c: &FiniteCategory, roof: &Roof) -> Self {
        LiteralString {
            start: c.dom(roof.f),
            end: c.dom(roof.w),
            literals: vec![Literal::Inverse(roof.w), Literal::Forward(roof.f)],
        }
    }

    pub fn start(&self) -> ObjId {
        self.start
    }

    pub fn end(&self) -> ObjId {
        self.end
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    /// `self ∘ inner`, if `inner` ends where `self` starts.
    pub fn after(&self, inner: &LiteralString) -> Option<LiteralString> {
        if inner.end != self.start {
            return None;
        }
        let mut literals = self.literals.clone();
        literals.extend_from_slice(&inner.literals);
        Some(LiteralString {
            start: inner.start,
            end: self.end,
            literals,
        })
    }

    pub fn parallel(&self, other: &LiteralString) -> bool {
        self.start == other.start && self.end == other.end
    }

    /// The `<obj> : <lit>,...` form used by `word` lines.
    pub fn render(&self, c: &FiniteCategory) -> String {
        let lits: Vec<String> = self.literals.iter().map(|l| l.render(c)).collect();
        if lits.is_empty() {
            format!("{} :", c.object_name(self.start))
        } else {
            format!("{} : {}", c.object_name(self.start), lits.join(","))
        }
    }

    /// `⟨l1,...,ln⟩`.
    pub fn display<'a>(&'a self, c: &'a FiniteCategory) -> impl fmt::Display + 'a {
        struct D<'a>(&'a LiteralString, &'a FiniteCategory);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let lits: Vec<String> = self.0.literals.iter().map(|l| l.render(self.1)).collect();
                write!(f, "⟨{}⟩", lits.join(","))
            }
        }
        D(self, c)
    }

    fn codes(&self) -> Vec<u32> {
        self.literals.iter().map(|l| l.code()).collect()
    }

    fn from_codes(start: ObjId, end: ObjId, codes: &[u32]) -> Self {
        LiteralString {
            start,
            end,
            literals: codes.iter().map(|&x| Literal::from_code(x)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::Distinct => "distinct",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_len: usize,
    pub max_steps: usize,
}

impl Bounds {
    /// `2 · longest + 4` literals and [`DEFAULT_MAX_STEPS`] expansions.
    pub fn for_longest(longest: usize) -> Self {
        Bounds {
            max_len: 2 * longest + 4,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

/// Precomputed tables for generating one-step rewrites of encoded strings.
struct Rewriter<'a> {
    c: &'a FiniteCategory,
    /// All `(g, f)` with `g ∘ f = h`, indexed by `h`.
    factorizations: Vec<Vec<(MorphId, MorphId)>>,
    /// W members by codomain and by domain.
    w_by_cod: Vec<Vec<MorphId>>,
    w_by_dom: Vec<Vec<MorphId>>,
}

impl<'a> Rewriter<'a> {
    fn new(c: &'a FiniteCategory, w: &MorphClass) -> Self {
        let mut factorizations = vec![Vec::new(); c.num_morphisms()];
        for f in c.morphisms() {
            for &g in c.from(c.cod(f)) {
                factorizations[c.then(f, g).0].push((g, f));
            }
        }
        let mut w_by_cod = vec![Vec::new(); c.num_objects()];
        let mut w_by_dom = vec![Vec::new(); c.num_objects()];
        for m in w.iter() {
            w_by_cod[c.cod(m).0].push(m);
            w_by_dom[c.dom(m).0].push(m);
        }
        Rewriter {
            c,
            factorizations,
            w_by_cod,
            w_by_dom,
        }
    }

    fn cod(&self, code: u32) -> ObjId {
        Literal::from_code(code).cod(self.c)
    }

    /// Object sitting at gap `k`, i.e. just right of literal `k - 1`.
    fn gap(&self, start: ObjId, s: &[u32], k: usize) -> ObjId {
        if k < s.len() {
            self.cod(s[k])
        } else {
            start
        }
    }

    fn neighbors(&self, start: ObjId, s: &[u32], max_len: usize, out: &mut Vec<Vec<u32>>) {
        let c = self.c;
        let n = s.len();
        let splice = |i: usize, remove: usize, insert: &[u32]| -> Vec<u32> {
            let mut t = Vec::with_capacity(n - remove + insert.len());
            t.extend_from_slice(&s[..i]);
            t.extend_from_slice(insert);
            t.extend_from_slice(&s[i + remove..]);
            t
        };
        for i in 0..n {
            let lit = Literal::from_code(s[i]);
            if let Literal::Forward(h) = lit {
                if c.is_identity(h) {
                    out.push(splice(i, 1, &[]));
                }
                if n < max_len {
                    for &(g, f) in &self.factorizations[h.0] {
                        out.push(splice(i, 1, &[Literal::Forward(g).code(), Literal::Forward(f).code()]));
                    }
                }
            }
            if i + 1 < n {
                match (lit, Literal::from_code(s[i + 1])) {
                    (Literal::Forward(g), Literal::Forward(f)) => {
                        out.push(splice(i, 2, &[Literal::Forward(c.then(f, g)).code()]));
                    }
                    (Literal::Forward(a), Literal::Inverse(b)) | (Literal::Inverse(a), Literal::Forward(b))
                        if a == b =>
                    {
                        out.push(splice(i, 2, &[]));
                    }
                    _ => {}
                }
            }
        }
        for k in 0..=n {
            let at = self.gap(start, s, k);
            if n < max_len {
                out.push(splice(k, 0, &[Literal::Forward(c.id(at)).code()]));
            }
            if n + 2 <= max_len {
                for &m in &self.w_by_cod[at.0] {
                    out.push(splice(k, 0, &[Literal::Forward(m).code(), Literal::Inverse(m).code()]));
                }
                for &m in &self.w_by_dom[at.0] {
                    out.push(splice(k, 0, &[Literal::Inverse(m).code(), Literal::Forward(m).code()]));
                }
            }
        }
    }
}

/// Every string obtained from `s` by one elementary equivalence, in either
/// direction, at any position. Sorted and without duplicates.
pub fn rewrite_step(c: &FiniteCategory, w: &MorphClass, s: &LiteralString) -> Vec<LiteralString> {
    let r = Rewriter::new(c, w);
    let mut out = Vec::new();
    r.neighbors(s.start, &s.codes(), usize::MAX, &mut out);
    let mut result: Vec<LiteralString> = out
        .iter()
        .map(|t| LiteralString::from_codes(s.start, s.end, t))
        .collect();
    result.sort();
    result.dedup();
    result
}

/// Decides whether two parallel strings are identified, searching from both
/// ends through strings of at most `max_len` literals and expanding at most
/// `max_steps` strings in total.
///
/// `Distinct` is returned when one side's reachable set is exhausted
/// without meeting the other; it is relative to the length bound.
pub fn word_equal(
    c: &FiniteCategory,
    w: &MorphClass,
    s1: &LiteralString,
    s2: &LiteralString,
    bounds: Bounds,
) -> Result<Verdict> {
    check_universe(c, w)?;
    let r = Rewriter::new(c, w);
    word_equal_with(&r, s1, s2, bounds)
}

fn word_equal_with(r: &Rewriter, s1: &LiteralString, s2: &LiteralString, bounds: Bounds) -> Result<Verdict> {
    let needed = s1.len().max(s2.len());
    if bounds.max_len < needed {
        return Err(Error::Bounds {
            max_len: bounds.max_len,
            needed,
        });
    }
    if !s1.parallel(s2) {
        return Err(Error::InvalidWord("strings are not parallel".to_string()));
    }
    let (a, b) = (s1.codes(), s2.codes());
    if a == b {
        return Ok(Verdict::Equal);
    }
    let mut seen = [HashSet::from([a.clone()]), HashSet::from([b.clone()])];
    let mut queue = [VecDeque::from([a]), VecDeque::from([b])];
    let mut buf = Vec::new();
    let mut steps = 0;
    while steps < bounds.max_steps {
        let side = if queue[0].len() <= queue[1].len() { 0 } else { 1 };
        let Some(s) = queue[side].pop_front() else {
            return Ok(Verdict::Distinct);
        };
        steps += 1;
        buf.clear();
        r.neighbors(s1.start, &s, bounds.max_len, &mut buf);
        for t in buf.drain(..) {
            if seen[1 - side].contains(&t) {
                return Ok(Verdict::Equal);
            }
            if seen[side].insert(t.clone()) {
                queue[side].push_back(t);
            }
        }
    }
    Ok(Verdict::Unknown)
}

/// Outcome of comparing roof equivalence with the oracle on every ordered
/// pair of parallel roofs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementReport {
    pub bounds: Bounds,
    pub pairs: usize,
    pub agree: usize,
    pub unknown: usize,
}

impl AgreementReport {
    pub fn unknown_rate(&self) -> f64 {
        if self.pairs == 0 {
            0.0
        } else {
            self.unknown as f64 / self.pairs as f64
        }
    }

    pub fn render(&self) -> String {
        format!(
            "oracle: max_len={} max_steps={} pairs={} agree={} unknown={} disagreements=0\n",
            self.bounds.max_len, self.bounds.max_steps, self.pairs, self.agree, self.unknown
        )
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Expansions spent on each pair before the full budget is used.
const PROBE_STEPS: usize = 1_000;

/// Localizes `(c, w)` and checks every ordered pair of parallel roofs
/// against the oracle applied to `⟨w1⁻¹, f1⟩` and `⟨w2⁻¹, f2⟩`.
///
/// Oracle equalities are chained transitively. Each pair of oracle classes
/// first gets a short probe; the full budget is then spent once per pair of oracle
/// classes that are still unresolved, and the verdict is shared by all
/// their members.
pub fn oracle_compare(c: &FiniteCategory, w: &MorphClass, bounds: Option<Bounds>) -> Result<AgreementReport> {
    let l = localize(c, w)?;
    let bounds = bounds.unwrap_or(Bounds::for_longest(2));
    let r = Rewriter::new(c, w);
    let mut report = AgreementReport {
        bounds,
        pairs: 0,
        agree: 0,
        unknown: 0,
    };
    for a in c.objects() {
        for b in c.objects() {
            let roofs = roofs_between(c, w, a, b);
            let words: Vec<LiteralString> = roofs.iter().map(|x| LiteralString::of_roof(c, x)).collect();
            let n = roofs.len();
            let mut uf = UnionFind::new(n);
            let probe = Bounds {
                max_steps: PROBE_STEPS.min(bounds.max_steps),
                ..bounds
            };
            let mut probed = HashSet::new();
            for i in 0..n {
                for j in i + 1..n {
                    let (ri, rj) = (uf.find(i), uf.find(j));
                    if ri == rj || !probed.insert((ri.min(rj), ri.max(rj))) {
                        continue;
                    }
                    if word_equal_with(&r, &words[i], &words[j], probe)? == Verdict::Equal {
                        uf.union(i, j);
                    }
                }
            }
            let mut between: HashMap<(usize, usize), Verdict> = HashMap::new();
            for i in 0..n {
                for j in 0..n {
                    let (ri, rj) = (uf.find(i), uf.find(j));
                    let verdict = if ri == rj {
                        Verdict::Equal
                    } else {
                        let key = (ri.min(rj), ri.max(rj));
                        match between.get(&key) {
                            Some(&v) => v,
                            None => {
                                let v = word_equal_with(&r, &words[key.0], &words[key.1], bounds)?;
                                between.insert(key, v);
                                v
                            }
                        }
                    };
                    let same = l.class_of(&roofs[i]) == l.class_of(&roofs[j]);
                    report.pairs += 1;
                    match (verdict, same) {
                        (Verdict::Unknown, _) => report.unknown += 1,
                        (Verdict::Equal, true) | (Verdict::Distinct, false) => report.agree += 1,
                        _ => return Err(Error::Disagreement(roofs[i], roofs[j])),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fwd(c: &FiniteCategory, name: &str) -> Literal {
        Literal::Forward(c.morphism_by_name(name).unwrap())
    }

    fn inv(c: &FiniteCategory, name: &str) -> Literal {
        Literal::Inverse(c.morphism_by_name(name).unwrap())
    }

    #[test]
    fn string_validation() {
        let i = fixtures::interval();
        let (c, w) = (&i.category, &i.w);
        let zero = c.object_by_name("0").unwrap();
        let s = LiteralString::new(c, w, zero, vec![fwd(c, "u"), inv(c, "u"), fwd(c, "u")]).unwrap();
        assert_eq!(s.end(), c.object_by_name("1").unwrap());
        assert_eq!(s.render(c), "0 : u,~u,u");
        assert_eq!(s.display(c).to_string(), "⟨u,~u,u⟩");
        assert!(LiteralString::new(c, w, zero, vec![fwd(c, "u"), fwd(c, "u")]).is_err());
        let d = fixtures::discrete2();
        let x = d.category.object_by_name("X").unwrap();
        assert_eq!(
            LiteralString::new(&d.category, &d.w, x, vec![])
                .unwrap()
                .render(&d.category),
            "X :"
        );
        let p = fixtures::parallel_nocoeq();
        let b = p.category.object_by_name("B").unwrap();
        assert!(matches!(
            LiteralString::new(&p.category, &p.w, b, vec![inv(&p.category, "f1")]),
            Err(Error::InvalidWord(_))
        ));
    }

    #[test]
    fn elementary_rewrites() {
        let i = fixtures::interval();
        let (c, w) = (&i.category, &i.w);
        let zero = c.object_by_name("0").unwrap();
        let one = c.object_by_name("1").unwrap();

        let id = LiteralString::new(c, w, zero, vec![fwd(c, "id_0")]).unwrap();
        assert!(rewrite_step(c, w, &id).contains(&LiteralString::empty(zero)));

        let cancel = LiteralString::new(c, w, one, vec![fwd(c, "u"), inv(c, "u")]).unwrap();
        assert!(rewrite_step(c, w, &cancel).contains(&LiteralString::empty(one)));

        let pair = LiteralString::new(c, w, zero, vec![fwd(c, "id_1"), fwd(c, "u")]).unwrap();
        let u = LiteralString::new(c, w, zero, vec![fwd(c, "u")]).unwrap();
        assert!(rewrite_step(c, w, &pair).contains(&u));
        // and backwards
        assert!(rewrite_step(c, w, &u).contains(&pair));
        assert!(rewrite_step(c, w, &LiteralString::empty(zero)).contains(&id));
    }

    #[test]
    fn interval_words() {
        let i = fixtures::interval();
        let (c, w) = (&i.category, &i.w);
        let zero = c.object_by_name("0").unwrap();
        let u = LiteralString::new(c, w, zero, vec![fwd(c, "u")]).unwrap();
        let uuu = LiteralString::new(c, w, zero, vec![fwd(c, "u"), inv(c, "u"), fwd(c, "u")]).unwrap();
        let b = Bounds::for_longest(3);
        assert_eq!(word_equal(c, w, &u, &u, b), Ok(Verdict::Equal));
        assert_eq!(word_equal(c, w, &u, &uuu, b), Ok(Verdict::Equal));
        assert_eq!(word_equal(c, w, &uuu, &u, b), Ok(Verdict::Equal));
        let tight = Bounds {
            max_len: 2,
            max_steps: 10,
        };
        assert_eq!(
            word_equal(c, w, &u, &uuu, tight),
            Err(Error::Bounds { max_len: 2, needed: 3 })
        );
    }

    #[test]
    fn distinct_needs_exhaustion() {
        let d = fixtures::discrete2();
        let (c, w) = (&d.category, &d.w);
        let x = c.object_by_name("X").unwrap();
        let e = LiteralString::empty(x);
        let id = LiteralString::new(c, w, x, vec![fwd(c, "id_X")]).unwrap();
        assert_eq!(word_equal(c, w, &e, &id, Bounds::for_longest(1)), Ok(Verdict::Equal));

        let i = fixtures::interval();
        let (c, ids) = (&i.category, i.category.identities());
        let zero = c.object_by_name("0").unwrap();
        let u = LiteralString::new(c, &ids, zero, vec![fwd(c, "u")]).unwrap();
        let u2 = LiteralString::new(c, &ids, zero, vec![fwd(c, "id_1"), fwd(c, "u")]).unwrap();
        assert_eq!(word_equal(c, &ids, &u, &u2, Bounds::for_longest(2)), Ok(Verdict::Equal));
        // hom(0,0) in the free localization of the arrow category by identities
        let e0 = LiteralString::empty(zero);
        let back = LiteralString::new(c, &i.w, zero, vec![inv(c, "u"), fwd(c, "u")]).unwrap();
        assert_eq!(
            word_equal(c, &i.w, &e0, &back, Bounds::for_longest(2)),
            Ok(Verdict::Equal)
        );
    }

    #[test]
    fn parallel_pair_is_identified() {
        // f1 = f1 w w⁻¹ = g w⁻¹ = f2 w w⁻¹ = f2
        let p = fixtures::parallel_nocoeq();
        let (c, w) = (&p.category, &p.w);
        let b = c.object_by_name("B").unwrap();
        let f1 = LiteralString::new(c, w, b, vec![fwd(c, "f1")]).unwrap();
        let f2 = LiteralString::new(c, w, b, vec![fwd(c, "f2")]).unwrap();
        assert_eq!(word_equal(c, w, &f1, &f2, Bounds::for_longest(1)), Ok(Verdict::Equal));
        let ids = c.identities();
        let b = Bounds::for_longest(1);
        assert_eq!(word_equal(c, &ids, &f1, &f2, b), Ok(Verdict::Distinct));
    }

    #[test]
    fn agreement_on_fixtures() {
        let i = fixtures::interval();
        let report = oracle_compare(
            &i.category,
            &i.w,
            Some(Bounds {
                max_len: 6,
                max_steps: DEFAULT_MAX_STEPS,
            }),
        )
        .unwrap();
        assert_eq!((report.pairs, report.unknown), (7, 0));
        assert_eq!(report.agree, report.pairs);

        let d = fixtures::discrete2();
        let report = oracle_compare(&d.category, &d.w, None).unwrap();
        assert_eq!((report.pairs, report.agree, report.unknown), (2, 2, 0));
    }
}
