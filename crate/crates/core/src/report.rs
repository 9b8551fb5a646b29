//! Validation reports: a list of violations, each carrying its witness.

use std::fmt;

use crate::category::{FiniteCategory, MorphId, ObjId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    IdentityEndpoints { object: ObjId, identity: MorphId },
    MissingComposite { g: MorphId, f: MorphId },
    SpuriousComposite { g: MorphId, f: MorphId },
    Coherence { g: MorphId, f: MorphId, composite: MorphId },
    LeftIdentity { f: MorphId, got: MorphId },
    RightIdentity { f: MorphId, got: MorphId },
    Associativity { h: MorphId, g: MorphId, f: MorphId },
    // functors
    ObjectMapOutOfRange { object: ObjId },
    MorphismMapOutOfRange { f: MorphId },
    EndpointNotPreserved { f: MorphId },
    IdentityNotPreserved { object: ObjId },
    CompositionNotPreserved { g: MorphId, f: MorphId },
    // preadditive structure
    AdditionUndefined { f1: MorphId, f2: MorphId },
    AdditionLeavesHom { f1: MorphId, f2: MorphId, sum: MorphId },
    ZeroNotInHom { dom: ObjId, cod: ObjId, zero: MorphId },
    NegationLeavesHom { f: MorphId },
    AddAssociativity { f1: MorphId, f2: MorphId, f3: MorphId },
    AddCommutativity { f1: MorphId, f2: MorphId },
    AddIdentity { f: MorphId },
    AddInverse { f: MorphId },
    LeftBilinearity { g: MorphId, f1: MorphId, f2: MorphId },
    RightBilinearity { f1: MorphId, f2: MorphId, g: MorphId },
    ZeroAbsorption { g: MorphId, f: MorphId },
    // localization certificates
    AdditionNotWellDefined { r1: String, r2: String },
    LocNotAdditive { f1: MorphId, f2: MorphId },
    BiproductNotPreserved { left: ObjId, right: ObjId },
    ZeroObjectNotPreserved { object: ObjId },
}

impl Violation {
    /// Renders the violation using morphism and object names from `c`.
    /// Names from functor or localization checks refer to the source
    /// category of the check.
    pub fn describe(&self, c: &FiniteCategory) -> String {
        let m = |x: &MorphId| {
            if x.0 < c.num_morphisms() {
                c.morphism_name(*x).to_string()
            } else {
                format!("{x}")
            }
        };
        let o = |x: &ObjId| {
            if x.0 < c.num_objects() {
                c.object_name(*x).to_string()
            } else {
                format!("{x}")
            }
        };
        use Violation::*;
        match self {
            IdentityEndpoints { object, identity } => {
                format!("identity endpoints: object={} identity={}", o(object), m(identity))
            }
            MissingComposite { g, f } => format!("missing composite: g={} f={}", m(g), m(f)),
            SpuriousComposite { g, f } => format!("composite of non-composable pair: g={} f={}", m(g), m(f)),
            Coherence { g, f, composite } => {
                format!("dom/cod coherence: g={} f={} composite={}", m(g), m(f), m(composite))
            }
            LeftIdentity { f, got } => format!("left identity: f={} got={}", m(f), m(got)),
            RightIdentity { f, got } => format!("right identity: f={} got={}", m(f), m(got)),
            Associativity { h, g, f } => format!("associativity: h={} g={} f={}", m(h), m(g), m(f)),
            ObjectMapOutOfRange { object } => format!("object map out of range: object={}", o(object)),
            MorphismMapOutOfRange { f } => format!("morphism map out of range: f={}", m(f)),
            EndpointNotPreserved { f } => format!("dom/cod not preserved: f={}", m(f)),
            IdentityNotPreserved { object } => format!("identity not preserved: object={}", o(object)),
            CompositionNotPreserved { g, f } => format!("composition not preserved: g={} f={}", m(g), m(f)),
            AdditionUndefined { f1, f2 } => format!("addition undefined: f1={} f2={}", m(f1), m(f2)),
            AdditionLeavesHom { f1, f2, sum } => {
                format!("sum leaves hom-set: f1={} f2={} sum={}", m(f1), m(f2), m(sum))
            }
            ZeroNotInHom { dom, cod, zero } => {
                format!("zero not in hom-set: dom={} cod={} zero={}", o(dom), o(cod), m(zero))
            }
            NegationLeavesHom { f } => format!("negation leaves hom-set: f={}", m(f)),
            AddAssociativity { f1, f2, f3 } => {
                format!("addition associativity: f1={} f2={} f3={}", m(f1), m(f2), m(f3))
            }
            AddCommutativity { f1, f2 } => format!("addition commutativity: f1={} f2={}", m(f1), m(f2)),
            AddIdentity { f } => format!("zero is not neutral: f={}", m(f)),
            AddInverse { f } => format!("negation is not inverse: f={}", m(f)),
            LeftBilinearity { g, f1, f2 } => {
                format!("left bilinearity: g={} f1={} f2={}", m(g), m(f1), m(f2))
            }
            RightBilinearity { f1, f2, g } => {
                format!("right bilinearity: f1={} f2={} g={}", m(f1), m(f2), m(g))
            }
            ZeroAbsorption { g, f } => format!("zero absorption: g={} f={}", m(g), m(f)),
            AdditionNotWellDefined { r1, r2 } => format!("addition not well defined: r1={r1} r2={r2}"),
            LocNotAdditive { f1, f2 } => format!("loc not additive: f1={} f2={}", m(f1), m(f2)),
            BiproductNotPreserved { left, right } => {
                format!("biproduct not preserved: A={} B={}", o(left), o(right))
            }
            ZeroObjectNotPreserved { object } => format!("zero object not preserved: object={}", o(object)),
        }
    }
}

/// Outcome of an exhaustive structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    subject: &'static str,
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: &'static str) -> Self {
        ValidationReport {
            subject,
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn subject(&self) -> &'static str {
        self.subject
    }

    /// One line per violation, or a single `valid` line.
    pub fn render(&self, names: &FiniteCategory) -> String {
        let mut out = String::new();
        if self.is_valid() {
            out.push_str(&format!("{}: valid\n", self.subject));
        } else {
            out.push_str(&format!(
                "{}: INVALID ({} violations)\n",
                self.subject,
                self.violations.len()
            ));
            for v in &self.violations {
                out.push_str(&format!("violation {}\n", v.describe(names)));
            }
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "{}: valid", self.subject)
        } else {
            write!(
                f,
                "{}: {} violations, first {:?}",
                self.subject,
                self.violations.len(),
                self.violations[0]
            )
        }
    }
}
