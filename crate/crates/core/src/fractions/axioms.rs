use std::fmt;

use crate::category::{FiniteCategory, MorphClass, MorphId};

/// Which axiom a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    L0,
    L1,
    L2,
    /// L1 quantified over `W_L`.
    L1Prime,
    /// L2 with the coequalizer drawn from `W_L`.
    L2Prime,
    /// L2 for preadditive categories: `f ∘ w = 0` implies `w' ∘ f = 0`.
    L2DoublePrime,
    /// The duals, checked on the opposite category.
    R1,
    R2,
    R1Prime,
    R2Prime,
    R2DoublePrime,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::L0 => "L0",
            Axiom::L1 => "L1",
            Axiom::L2 => "L2",
            Axiom::L1Prime => "L1'",
            Axiom::L2Prime => "L2'",
            Axiom::L2DoublePrime => "L2''",
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::R1Prime => "R1'",
            Axiom::R2Prime => "R2'",
            Axiom::R2DoublePrime => "R2''",
        }
    }

    /// The dual axiom, as reported when checking the opposite category.
    pub fn dual(self) -> Axiom {
        match self {
            Axiom::L0 => Axiom::L0,
            Axiom::L1 => Axiom::R1,
            Axiom::L2 => Axiom::R2,
            Axiom::L1Prime => Axiom::R1Prime,
            Axiom::L2Prime => Axiom::R2Prime,
            Axiom::L2DoublePrime => Axiom::R2DoublePrime,
            Axiom::R1 => Axiom::L1,
            Axiom::R2 => Axiom::L2,
            Axiom::R1Prime => Axiom::L1Prime,
            Axiom::R2Prime => Axiom::L2Prime,
            Axiom::R2DoublePrime => Axiom::L2DoublePrime,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A concrete tuple violating an axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// An identity missing from W.
    MissingIdentity { identity: MorphId },
    /// `w2 ∘ w1` is not in W.
    NotClosed {
        w1: MorphId,
        w2: MorphId,
        composite: MorphId,
    },
    /// No square completes the span `(w, f)`.
    NoCompletion { w: MorphId, f: MorphId },
    /// `f1 ∘ w = f2 ∘ w` but no admissible `w'` equalizes `f1, f2`.
    NoCoequalizer { w: MorphId, f1: MorphId, f2: MorphId },
    /// `f ∘ w = 0` but no `w'` in W has `w' ∘ f = 0`.
    NoAnnihilator { w: MorphId, f: MorphId },
}

impl Counterexample {
    pub fn render(&self, c: &FiniteCategory) -> String {
        let n = |m: &MorphId| c.morphism_name(*m);
        match self {
            Counterexample::MissingIdentity { identity } => format!("identity={}", n(identity)),
            Counterexample::NotClosed { w1, w2, composite } => {
                format!("w1={} w2={} composite={}", n(w1), n(w2), n(composite))
            }
            Counterexample::NoCompletion { w, f } => format!("w={} f={}", n(w), n(f)),
            Counterexample::NoCoequalizer { w, f1, f2 } => format!("w={} f1={} f2={}", n(w), n(f1), n(f2)),
            Counterexample::NoAnnihilator { w, f } => format!("w={} f={}", n(w), n(f)),
        }
    }
}

/// Whether a checker stops at the first counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scope {
    #[default]
    First,
    All,
}

impl Scope {
    fn done(self, found: usize) -> bool {
        self == Scope::First && found > 0
    }
}

/// Verdict of one axiom check. Holds iff there are no counterexamples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn first(&self) -> Option<&Counterexample> {
        self.counterexamples.first()
    }

    /// Relabels a report produced on the opposite category.
    pub fn dualized(mut self) -> Self {
        self.axiom = self.axiom.dual();
        self
    }

    /// `axiom L1: holds`, or one `FAILS witness ...` line per counterexample.
    pub fn render(&self, c: &FiniteCategory) -> String {
        if self.holds() {
            return format!("axiom {}: holds\n", self.axiom);
        }
        self.counterexamples
            .iter()
            .map(|x| format!("axiom {}: FAILS witness {}\n", self.axiom, x.render(c)))
            .collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "{}: holds", self.axiom),
            Some(x) => write!(f, "{}: fails at {:?}", self.axiom, x),
        }
    }
}

/// W contains every identity and is closed under composition.
pub fn check_l0(c: &FiniteCategory, w: &MorphClass, scope: Scope) -> AxiomReport {
    let mut found = Vec::new();
    for a in c.objects() {
        if !w.contains(c.id(a)) {
            found.push(Counterexample::MissingIdentity { identity: c.id(a) });
            if scope.done(found.len()) {
                return AxiomReport {
                    axiom: Axiom::L0,
                    counterexamples: found,
                };
            }
        }
    }
    for w1 in w.iter() {
        for &w2 in c.from(c.cod(w1)) {
            if !w.contains(w2) {
                continue;
            }
            if let Some(composite) = c.comp(w2, w1) {
                if !w.contains(composite) {
                    found.push(Counterexample::NotClosed { w1, w2, composite });
                    if scope.done(found.len()) {
                        return AxiomReport {
                            axiom: Axiom::L0,
                            counterexamples: found,
                        };
                    }
                }
            }
        }
    }
    AxiomReport {
        axiom: Axiom::L0,
        counterexamples: found,
    }
}

/// Smallest superset of `w` plus all identities that is closed under composition.
pub fn saturate(c: &FiniteCategory, w: &MorphClass) -> MorphClass {
    let mut closed = w.union(&c.identities());
    let mut queue: Vec<MorphId> = closed.iter().collect();
    while let Some(x) = queue.pop() {
        let mut fresh = Vec::new();
        for y in closed.iter() {
            if let Some(yx) = c.comp(y, x) {
                fresh.push(yx);
            }
            if let Some(xy) = c.comp(x, y) {
                fresh.push(xy);
            }
        }
        for z in fresh {
            if closed.insert(z) {
                queue.push(z);
            }
        }
    }
    closed
}

/// Searches for `(f', w')` with `w' ∈ target`, `w' ∘ f = f' ∘ w`.
/// `w` need not be in any class. Pairs are tried in `(w', f')` order.
pub(crate) fn completions<'a>(
    c: &'a FiniteCategory,
    target: &'a MorphClass,
    w: MorphId,
    f: MorphId,
) -> impl Iterator<Item = (MorphId, MorphId)> + 'a {
    c.from(c.cod(f))
        .iter()
        .copied()
        .filter(move |&wp| target.contains(wp))
        .flat_map(move |wp| {
            let lhs = c.comp(wp, f);
            c.hom(c.cod(w), c.cod(wp))
                .iter()
                .copied()
                .filter(move |&fp| c.comp(fp, w) == lhs)
                .map(move |fp| (fp, wp))
        })
}

pub(crate) fn scan_l1(
    c: &FiniteCategory,
    spans_from: &MorphClass,
    w_class: &MorphClass,
    axiom: Axiom,
    scope: Scope,
) -> AxiomReport {
    let mut found = Vec::new();
    'outer: for w in spans_from.iter() {
        for &f in c.from(c.dom(w)) {
            if completions(c, w_class, w, f).next().is_none() {
                found.push(Counterexample::NoCompletion { w, f });
                if scope.done(found.len()) {
                    break 'outer;
                }
            }
        }
    }
    AxiomReport {
        axiom,
        counterexamples: found,
    }
}

/// Every span `(w, f)` with `w ∈ W` completes to a commutative square
/// `w' ∘ f = f' ∘ w` with `w' ∈ W`.
pub fn check_l1(c: &FiniteCategory, w: &MorphClass, scope: Scope) -> AxiomReport {
    scan_l1(c, w, w, Axiom::L1, scope)
}

pub(crate) fn scan_l2(
    c: &FiniteCategory,
    w_class: &MorphClass,
    coequalizers: &MorphClass,
    axiom: Axiom,
    scope: Scope,
) -> AxiomReport {
    let mut found = Vec::new();
    'outer: for w in w_class.iter() {
        let mid = c.cod(w);
        for &f1 in c.from(mid) {
            for &f2 in c.hom(mid, c.cod(f1)) {
                if f2 <= f1 || c.comp(f1, w) != c.comp(f2, w) {
                    continue;
                }
                let equalized = c
                    .from(c.cod(f1))
                    .iter()
                    .any(|&wp| coequalizers.contains(wp) && c.comp(wp, f1) == c.comp(wp, f2));
                if !equalized {
                    found.push(Counterexample::NoCoequalizer { w, f1, f2 });
                    if scope.done(found.len()) {
                        break 'outer;
                    }
                }
            }
        }
    }
    AxiomReport {
        axiom,
        counterexamples: found,
    }
}

/// Whenever `f1 ∘ w = f2 ∘ w` with `w ∈ W` there is `w' ∈ W` with
/// `w' ∘ f1 = w' ∘ f2`.
pub fn check_l2(c: &FiniteCategory, w: &MorphClass, scope: Scope) -> AxiomReport {
    scan_l2(c, w, w, Axiom::L2, scope)
}
