//! Command-line front end. Every subcommand renders a plain-text report;
//! [`run`] returns it together with the exit status.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use locfrac_core::additive::{add_roofs, check_additive_localization, check_l2_doubleprime};
use locfrac_core::fractions::{
    check_l0, check_l1, check_l1_prime, check_l2, check_l2_prime, factor_functor, localize, localize_right,
    roof_equivalent, roof_equivalent_weak, AxiomReport, Scope,
};
use locfrac_core::oracle::{oracle_compare, word_equal, Bounds, DEFAULT_MAX_STEPS};
use locfrac_core::{
    parse_category, parse_functor, CategoryFile, Error, FiniteCategory, FractionCategory, MorphClass, Roof,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "locfrac",
    version,
    about = "Localize finite categories by a calculus of fractions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the category laws, W and any additive structure.
    Validate { file: PathBuf },
    /// Report the fraction axioms for W.
    Check {
        file: PathBuf,
        /// Use W_L, the class generated by W and the split monos.
        #[arg(long)]
        weak: bool,
        /// List every counterexample instead of the first.
        #[arg(long)]
        all: bool,
        /// Check the axioms for right fractions.
        #[arg(long)]
        right: bool,
    },
    /// Print every hom-set of the localized category.
    Localize {
        file: PathBuf,
        #[arg(long)]
        right: bool,
    },
    /// Print one hom-set of the localized category.
    Hom {
        file: PathBuf,
        source: String,
        target: String,
        #[arg(long)]
        right: bool,
    },
    /// Decide whether two roofs `(f,w)` are equivalent.
    Equal {
        file: PathBuf,
        first: String,
        second: String,
        /// Let the equalizing leg range over W_L.
        #[arg(long)]
        weak: bool,
    },
    /// Add two parallel roofs.
    Add {
        file: PathBuf,
        first: String,
        second: String,
    },
    /// Factor a functor that inverts W through the localization.
    Factor {
        source: PathBuf,
        target: PathBuf,
        functor: PathBuf,
    },
    /// Cross-check roof classes against the word oracle.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BoundArgs {
    /// Longest string the search may visit [default: 2 * longest input + 4]
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Strings expanded per search.
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
}

impl BoundArgs {
    fn resolve(&self, longest: usize) -> Bounds {
        Bounds {
            max_len: self.max_len.unwrap_or(Bounds::for_longest(longest).max_len),
            max_steps: self.max_steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let mut out = String::new();
    match dispatch(&cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: &Command, out: &mut String) -> Res<i32> {
    match command {
        Command::Validate { file } => validate(file, out),
        Command::Check { file, weak, all, right } => check(file, *weak, *all, *right, out),
        Command::Localize { file, right } => {
            let file = load_valid(file, out)?;
            let Some(l) = fractions(&file, *right, out)? else {
                return Ok(EXIT_FAIL);
            };
            render_localization(&file, &l, out);
            Ok(EXIT_OK)
        }
        Command::Hom {
            file,
            source,
            target,
            right,
        } => {
            let file = load_valid(file, out)?;
            let c = &file.category;
            let a = object(c, source)?;
            let b = object(c, target)?;
            let Some(l) = fractions(&file, *right, out)? else {
                return Ok(EXIT_FAIL);
            };
            out.push_str(&l.render_hom(a, b));
            Ok(EXIT_OK)
        }
        Command::Equal {
            file,
            first,
            second,
            weak,
        } => equal(file, first, second, *weak, out),
        Command::Add { file, first, second } => add(file, first, second, out),
        Command::Factor {
            source,
            target,
            functor,
        } => factor(source, target, functor, out),
        Command::Oracle { file, bounds } => oracle(file, *bounds, out),
    }
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Res<CategoryFile> {
    let text = read(path)?;
    parse_category(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Loads a file and refuses to go on if its composition table is not a category.
fn load_valid(path: &Path, out: &mut String) -> Res<CategoryFile> {
    let file = load(path)?;
    let report = file.category.validate();
    if !report.is_valid() {
        out.push_str(&report.render(&file.category));
        return Err(Failure {
            code: EXIT_FAIL,
            message: format!("{} is not a category", path.display()),
        });
    }
    Ok(file)
}

fn object(c: &FiniteCategory, name: &str) -> Res<locfrac_core::ObjId> {
    c.object_by_name(name)
        .ok_or_else(|| Failure::usage(format!("unknown object `{name}`")))
}

/// Parses `(f,w)`.
fn roof(c: &FiniteCategory, w: &MorphClass, text: &str) -> Res<Roof> {
    let bad = || Failure::usage(format!("expected a roof `(f,w)`, got `{text}`"));
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (f, wm) = inner.split_once(',').ok_or_else(bad)?;
    let m = |name: &str| {
        c.morphism_by_name(name.trim())
            .ok_or_else(|| Failure::usage(format!("unknown morphism `{}`", name.trim())))
    };
    let r = Roof::new(m(f)?, m(wm)?);
    r.check(c, w).map_err(|e| Failure::usage(describe(c, &e)))?;
    Ok(r)
}

fn describe(c: &FiniteCategory, e: &Error) -> String {
    let name = |m: locfrac_core::MorphId| c.morphism_name(m).to_string();
    match e {
        Error::NotInClass(m) => format!("{} is not in W", name(*m)),
        Error::MalformedRoof(r) => format!("{} is not a roof", r.display(c)),
        Error::Parallelism(r1, r2) => format!("{} and {} are not parallel", r1.display(c), r2.display(c)),
        Error::NotLocal(m) => format!("functor does not invert {}", name(*m)),
        Error::NoWitness { w, f } => format!("no completion for w={} f={}", name(*w), name(*f)),
        Error::AxiomFailure(r) => r.render(c).trim_end().to_string(),
        Error::Disagreement(r1, r2) => {
            format!(
                "oracle disagrees with roof classes on {} and {}",
                r1.display(c),
                r2.display(c)
            )
        }
        other => other.to_string(),
    }
}

fn validate(path: &Path, out: &mut String) -> Res<i32> {
    let file = load(path)?;
    let c = &file.category;
    let mut ok = true;
    let report = c.validate();
    ok &= report.is_valid();
    out.push_str(&report.render(c));
    let _ = writeln!(out, "objects: {}", c.num_objects());
    let _ = writeln!(out, "morphisms: {}", c.num_morphisms());
    let _ = writeln!(out, "w: {} members", file.w.len());
    if let Some(p) = &file.additive {
        let report = p.validate(c);
        ok &= report.is_valid();
        out.push_str(&report.render(c));
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn axiom_reports(file: &CategoryFile, weak: bool, all: bool, right: bool) -> Vec<AxiomReport> {
    let scope = if all { Scope::All } else { Scope::First };
    let op;
    let c = if right {
        op = file.category.opposite();
        &op
    } else {
        &file.category
    };
    let w = &file.w;
    let mut reports = vec![check_l0(c, w, scope)];
    if weak {
        reports.push(check_l1_prime(c, w, scope));
        reports.push(check_l2_prime(c, w, scope));
    } else {
        reports.push(check_l1(c, w, scope));
        reports.push(check_l2(c, w, scope));
        if let (Some(p), false) = (&file.additive, right) {
            reports.push(check_l2_doubleprime(c, w, p, scope));
        }
    }
    if right {
        reports = reports.into_iter().map(AxiomReport::dualized).collect();
    }
    reports
}

fn check(path: &Path, weak: bool, all: bool, right: bool, out: &mut String) -> Res<i32> {
    let file = load_valid(path, out)?;
    let mut ok = true;
    for report in axiom_reports(&file, weak, all, right) {
        ok &= report.holds();
        out.push_str(&report.render(&file.category));
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

/// Localizes, printing the failing axiom and returning `None` when the
/// axioms do not hold.
fn fractions(file: &CategoryFile, right: bool, out: &mut String) -> Res<Option<FractionCategory>> {
    let c = &file.category;
    let result = if right {
        localize_right(c, &file.w)
    } else {
        localize(c, &file.w)
    };
    match result {
        Ok(l) => Ok(Some(l)),
        Err(Error::AxiomFailure(report)) => {
            out.push_str(&report.render(&if right { c.opposite() } else { c.clone() }));
            Ok(None)
        }
        Err(e) => Err(Failure {
            code: EXIT_FAIL,
            message: describe(c, &e),
        }),
    }
}

fn render_localization(file: &CategoryFile, l: &FractionCategory, out: &mut String) {
    let _ = writeln!(out, "objects: {}", l.base.num_objects());
    let _ = writeln!(out, "classes: {}", l.base.num_morphisms());
    out.push_str(&l.render());
    let Some(p) = &file.additive else { return };
    if l.side != locfrac_core::Side::Left {
        return;
    }
    match check_additive_localization(l, p) {
        Ok(add) => {
            let verdict = if add.is_valid() { "valid" } else { "INVALID" };
            let _ = writeln!(out, "additive: {verdict}");
            let zeros: Vec<&str> = add.zero_objects.iter().map(|&z| file.category.object_name(z)).collect();
            let zeros = if zeros.is_empty() {
                "none".to_string()
            } else {
                zeros.join(" ")
            };
            let _ = writeln!(out, "zero objects: {zeros}");
            let _ = writeln!(out, "biproducts: {}", add.biproducts.len());
            if !add.structure.is_valid() {
                out.push_str(&add.structure.render(&l.base));
            }
            if !add.transfer.is_valid() {
                out.push_str(&add.transfer.render(&file.category));
            }
        }
        Err(e) => {
            let _ = writeln!(out, "additive: {}", describe(&file.category, &e));
        }
    }
}

fn equal(path: &Path, first: &str, second: &str, weak: bool, out: &mut String) -> Res<i32> {
    let file = load_valid(path, out)?;
    let (c, w) = (&file.category, &file.w);
    let r1 = roof(c, w, first)?;
    let r2 = roof(c, w, second)?;
    if !r1.parallel(c, &r2) {
        return Err(Failure::usage(describe(c, &Error::Parallelism(r1, r2))));
    }
    let found = if weak {
        roof_equivalent_weak(c, w, &r1, &r2)
    } else {
        roof_equivalent(c, w, &r1, &r2)
    }
    .map_err(|e| Failure::usage(describe(c, &e)))?;
    match found {
        Some(x) => {
            let _ = writeln!(out, "equivalent g={} h={}", c.morphism_name(x.g), c.morphism_name(x.h));
        }
        None => out.push_str("not equivalent\n"),
    }
    Ok(EXIT_OK)
}

fn add(path: &Path, first: &str, second: &str, out: &mut String) -> Res<i32> {
    let file = load_valid(path, out)?;
    let (c, w) = (&file.category, &file.w);
    let Some(p) = &file.additive else {
        return Err(Failure::usage(format!("{} has no additive structure", path.display())));
    };
    let report = p.validate(c);
    if !report.is_valid() {
        out.push_str(&report.render(c));
        return Ok(EXIT_FAIL);
    }
    let r1 = roof(c, w, first)?;
    let r2 = roof(c, w, second)?;
    let Some(l) = fractions(&file, false, out)? else {
        return Ok(EXIT_FAIL);
    };
    let sum = add_roofs(c, w, p, &r1, &r2).map_err(|e| Failure::usage(describe(c, &e)))?;
    let _ = writeln!(out, "sum: {}", sum.display(c));
    if let Some(class) = l.class_of(&sum) {
        let _ = writeln!(out, "class: {}", l.representative(class).display(c));
    }
    Ok(EXIT_OK)
}

fn factor(source: &Path, target: &Path, functor: &Path, out: &mut String) -> Res<i32> {
    let src = load_valid(source, out)?;
    let tgt = load_valid(target, out)?;
    let text = read(functor)?;
    let f = parse_functor(&text, Arc::new(src.category.clone()), Arc::new(tgt.category.clone()))
        .map_err(|e| Failure::usage(format!("{}: {e}", functor.display())))?;
    let report = f.check();
    if !report.is_valid() {
        out.push_str(&report.render(&src.category));
        return Ok(EXIT_FAIL);
    }
    let Some(l) = fractions(&src, false, out)? else {
        return Ok(EXIT_FAIL);
    };
    let g = match factor_functor(&l, &f) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(out, "{}", describe(&src.category, &e));
            return Ok(EXIT_FAIL);
        }
    };
    let d = &tgt.category;
    for a in l.base.objects() {
        let _ = writeln!(out, "object {} -> {}", l.base.object_name(a), d.object_name(g.obj(a)));
    }
    for x in l.base.morphisms() {
        let _ = writeln!(
            out,
            "class {} -> {}",
            l.base.morphism_name(x),
            d.morphism_name(g.mor(x))
        );
    }
    out.push_str("factorization: G . loc = F\n");
    Ok(EXIT_OK)
}

fn oracle(path: &Path, bounds: BoundArgs, out: &mut String) -> Res<i32> {
    let file = load_valid(path, out)?;
    let (c, w) = (&file.category, &file.w);
    let mut code = EXIT_OK;
    match oracle_compare(c, w, Some(bounds.resolve(2))) {
        Ok(report) => out.push_str(&report.render()),
        Err(Error::AxiomFailure(report)) => {
            out.push_str(&report.render(c));
            out.push_str("oracle: roof comparison skipped\n");
            code = EXIT_FAIL;
        }
        Err(e @ Error::Disagreement(..)) => {
            let _ = writeln!(out, "{}", describe(c, &e));
            return Ok(EXIT_FAIL);
        }
        Err(e) => return Err(Failure::usage(describe(c, &e))),
    }
    for (i, s1) in file.words.iter().enumerate() {
        for (j, s2) in file.words.iter().enumerate().skip(i + 1) {
            if !s1.parallel(s2) {
                continue;
            }
            let b = bounds.resolve(s1.len().max(s2.len()));
            let verdict = word_equal(c, w, s1, s2, b).map_err(|e| Failure::usage(describe(c, &e)))?;
            let _ = writeln!(out, "word {i} vs {j}: {verdict} {} {}", s1.display(c), s2.display(c));
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roof_literals() {
        let file = parse_category(locfrac_core::fixtures::RING_Z6_TEXT).unwrap();
        let (c, w) = (&file.category, &file.w);
        assert_eq!(
            roof(c, w, "(5, 3)").ok(),
            Some(Roof::new(
                c.morphism_by_name("5").unwrap(),
                c.morphism_by_name("3").unwrap()
            ))
        );
        assert!(roof(c, w, "(5,2)").is_err());
        assert!(roof(c, w, "5,3").is_err());
        assert!(roof(c, w, "(7,3)").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
