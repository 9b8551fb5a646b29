//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use locfrac_core::additive::{check_additive_localization, check_l2_doubleprime};
use locfrac_core::fixtures;
use locfrac_core::fractions::{
    check_l0, check_l1, check_l2, check_l2_prime, factor_functor, find_k, generate_wl_with_derivations, l1_witnesses,
    localize, roof_equivalent, roof_equivalent_generated, roofs_between, Roof, Scope,
};
use locfrac_core::oracle::oracle_compare;
use locfrac_core::random::{fraction_corpus, l1_corpus, preadditive_corpus};
use locfrac_core::{CategoryFile, FiniteCategory, Functor, MorphClass, ObjId};

const AXIOM_SUITE_LIMIT: Duration = Duration::from_secs(1);
const LOCALIZE_LIMIT: Duration = Duration::from_secs(1);
const CORPUS_SIZE: usize = 1000;
const CORPUS_SEED: u64 = 2024;
/// Oracle results with default bounds, frozen as (pairs, unknown).
const INTERVAL_ORACLE: (usize, usize) = (7, 0);
const RING_Z6_ORACLE: (usize, usize) = (144, 72);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn render_axioms(file: &CategoryFile, w: &MorphClass) -> String {
    let c = &file.category;
    [
        check_l0(c, w, Scope::First),
        check_l1(c, w, Scope::First),
        check_l2(c, w, Scope::First),
    ]
    .iter()
    .map(|r| r.render(c))
    .collect()
}

fn axiom_suite() -> Verdict {
    let start = Instant::now();
    let holds = "axiom L0: holds\naxiom L1: holds\naxiom L2: holds\n";
    let cases = [
        ("INTERVAL", fixtures::interval(), holds),
        (
            "PARALLEL_NOCOEQ",
            fixtures::parallel_nocoeq(),
            "axiom L0: holds\naxiom L1: holds\naxiom L2: FAILS witness w=w f1=f1 f2=f2\n",
        ),
        ("RING_Z6", fixtures::ring_z6(), holds),
        ("RING_Z8", fixtures::ring_z8(), holds),
        ("SPLITMONO", fixtures::splitmono(), holds),
    ];
    for (name, file, expected) in &cases {
        let got = render_axioms(file, &file.w);
        ensure(got == *expected, format!("{name}: got {got:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < AXIOM_SUITE_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("5 fixtures match in {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn hom_counts(c: &FiniteCategory, w: &MorphClass) -> Result<Vec<usize>, String> {
    let start = Instant::now();
    let l = localize(c, w).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < LOCALIZE_LIMIT, format!("localize took {elapsed:?}"))?;
    let mut counts = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            counts.push(l.hom_classes(a, b).len());
        }
    }
    Ok(counts)
}

fn localization_counts() -> Verdict {
    let i = fixtures::interval();
    ensure(hom_counts(&i.category, &i.w)? == [1, 1, 1, 1], "INTERVAL")?;
    let z6 = fixtures::ring_z6();
    ensure(hom_counts(&z6.category, &z6.w)? == [2], "RING_Z6")?;
    let z8 = fixtures::ring_z8();
    ensure(hom_counts(&z8.category, &z8.w)? == [1], "RING_Z8")?;
    let mut checked = 0;
    for (name, file) in fixtures::all() {
        let c = &file.category;
        let expected: Vec<usize> = c
            .objects()
            .flat_map(|a| c.objects().map(move |b| (a, b)))
            .map(|(a, b)| c.hom(a, b).len())
            .collect();
        ensure(
            hom_counts(c, &c.identities())? == expected,
            format!("{name} with W = identities"),
        )?;
        checked += 1;
    }
    Ok(format!(
        "INTERVAL 1/1/1/1, RING_Z6 2, RING_Z8 1, {checked} fixtures with W = identities"
    ))
}

fn parallel_roofs(c: &FiniteCategory, w: &MorphClass) -> Vec<Vec<Roof>> {
    let mut out = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            out.push(roofs_between(c, w, a, b));
        }
    }
    out
}

fn witness_independence() -> Verdict {
    let corpus = fraction_corpus(CORPUS_SEED, CORPUS_SIZE);
    let mut pairs = 0usize;
    for (i, s) in corpus.iter().enumerate() {
        let (c, w) = (&s.category, &s.w);
        for wm in w.iter() {
            for &f in c.from(c.dom(wm)) {
                let found = l1_witnesses(c, w, wm, f).map_err(|e| format!("sample {i}: {e}"))?;
                for x in &found {
                    for y in &found {
                        let (rx, ry) = (Roof::new(x.f_prime, x.w_prime), Roof::new(y.f_prime, y.w_prime));
                        let eq = roof_equivalent(c, w, &rx, &ry).map_err(|e| e.to_string())?;
                        ensure(eq.is_some(), format!("sample {i}: {rx:?} vs {ry:?}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} categories, {pairs} witness pairs, 0 violations",
        corpus.len()
    ))
}

fn equivalence_generation() -> Verdict {
    let corpus = fraction_corpus(CORPUS_SEED, CORPUS_SIZE);
    let mut pairs = 0usize;
    for (i, s) in corpus.iter().enumerate() {
        let (c, w) = (&s.category, &s.w);
        for roofs in parallel_roofs(c, w) {
            for r1 in &roofs {
                for r2 in &roofs {
                    let direct = roof_equivalent(c, w, r1, r2).map_err(|e| e.to_string())?.is_some();
                    let generated = roof_equivalent_generated(c, w, r1, r2).map_err(|e| e.to_string())?;
                    ensure(direct == generated, format!("sample {i}: {r1:?} vs {r2:?}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{} categories, {pairs} roof pairs, 0 violations", corpus.len()))
}

fn weak_axioms() -> Verdict {
    let corpus = l1_corpus(CORPUS_SEED, CORPUS_SIZE);
    let mut l2_failures = 0;
    let mut members = 0usize;
    for (i, s) in corpus.iter().enumerate() {
        let (c, w) = (&s.category, &s.w);
        let strong = check_l2(c, w, Scope::First).holds();
        let weak = check_l2_prime(c, w, Scope::First).holds();
        ensure(strong == weak, format!("sample {i}: L2 {strong}, L2' {weak}"))?;
        l2_failures += usize::from(!strong);
        let wl = generate_wl_with_derivations(c, w);
        for m in wl.class.iter() {
            let dec = wl.decomposition(m).ok_or(format!("sample {i}: no derivation"))?;
            let k = find_k(c, w, m, dec).map_err(|e| format!("sample {i}: {e}"))?;
            ensure(
                c.comp(k, m).is_some_and(|x| w.contains(x)),
                format!("sample {i}: k w' not in W"),
            )?;
            members += 1;
        }
    }
    Ok(format!(
        "{} categories ({l2_failures} failing L2), {members} members of W_L, 0 violations",
        corpus.len()
    ))
}

fn universal_property() -> Verdict {
    let mut localized = 0;
    for (name, file) in fixtures::all() {
        let c = &file.category;
        if !check_l2(c, &file.w, Scope::First).holds() {
            continue;
        }
        let l = localize(c, &file.w).map_err(|e| format!("{name}: {e}"))?;
        ensure(l.base.validate().is_valid(), format!("{name}: base"))?;
        ensure(l.loc.check().is_valid(), format!("{name}: loc"))?;
        l.verify().map_err(|e| format!("{name}: {e}"))?;
        localized += 1;
    }
    let check = |file: CategoryFile, f: Option<Functor>, label: &str| -> Result<(), String> {
        let l = localize(&file.category, &file.w).map_err(|e| e.to_string())?;
        let f = f.unwrap_or_else(|| l.loc.clone());
        let g = factor_functor(&l, &f).map_err(|e| format!("{label}: {e}"))?;
        ensure(l.loc.then(&g).as_ref() == Some(&f), format!("{label}: G . loc != F"))?;
        ensure(l.check_generated_by_loc().is_ok(), format!("{label}: uniqueness"))
    };
    check(fixtures::ring_z6(), None, "loc")?;
    check(
        fixtures::interval(),
        Some(fixtures::interval_to_point()),
        "INTERVAL -> point",
    )?;
    check(
        fixtures::ring_z6(),
        Some(fixtures::ring_z6_to_z2()),
        "RING_Z6 -> RING_Z2",
    )?;
    Ok(format!("{localized} localizations valid, 3 factorizations exact"))
}

fn additive_localization() -> Verdict {
    for file in [fixtures::ring_z6(), fixtures::ring_z8()] {
        let l = localize(&file.category, &file.w).map_err(|e| e.to_string())?;
        let p = file.additive.as_ref().ok_or("missing additive block")?;
        let add = check_additive_localization(&l, p).map_err(|e| e.to_string())?;
        ensure(add.is_valid(), format!("{}\n{}", add.structure, add.transfer))?;
    }
    let z6 = fixtures::ring_z6();
    let l = localize(&z6.category, &z6.w).map_err(|e| e.to_string())?;
    let add = check_additive_localization(&l, z6.additive.as_ref().unwrap()).map_err(|e| e.to_string())?;
    let hom = l.hom_classes(ObjId(0), ObjId(0));
    ensure(hom.len() == 2, "RING_Z6 hom group order")?;
    let zero = add.induced.zero(ObjId(0), ObjId(0));
    let one = *hom.iter().find(|&&x| x != zero).ok_or("no nonzero class")?;
    // the unique group of order 2: 0 + x = x, x + x = 0
    let z2 = [(zero, zero, zero), (zero, one, one), (one, zero, one), (one, one, zero)];
    for (a, b, s) in z2 {
        ensure(add.induced.add(a, b) == Some(s), "RING_Z6 induced table is not Z/2")?;
    }
    ensure(l.base.id(ObjId(0)) == one, "identity class is not the generator")?;
    let corpus = preadditive_corpus(CORPUS_SEED, CORPUS_SIZE);
    for (i, s) in corpus.iter().enumerate() {
        let l2 = check_l2(&s.category, &s.w, Scope::First).holds();
        let l2pp = check_l2_doubleprime(&s.category, &s.w, &s.additive, Scope::First).holds();
        ensure(l2 == l2pp, format!("sample {i} ({}): L2 {l2}, L2'' {l2pp}", s.name))?;
    }
    Ok(format!(
        "RING_Z6, RING_Z8 valid; RING_Z6 group is Z/2; L2 = L2'' on {} samples",
        corpus.len()
    ))
}

fn oracle_agreement() -> Verdict {
    let mut line = Vec::new();
    for (name, file, golden) in [
        ("INTERVAL", fixtures::interval(), INTERVAL_ORACLE),
        ("RING_Z6", fixtures::ring_z6(), RING_Z6_ORACLE),
    ] {
        let report = oracle_compare(&file.category, &file.w, None).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            (report.pairs, report.unknown) == golden,
            format!("{name}: pairs {} unknown {}", report.pairs, report.unknown),
        )?;
        line.push(format!(
            "{name} {}/{} agree, unknown rate {:.3}",
            report.agree,
            report.pairs,
            report.unknown_rate()
        ));
    }
    Ok(line.join("; "))
}

fn cli_suite() -> Vec<u8> {
    let fixture = |n: &str| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("../core/fixtures")
            .join(n)
            .to_string_lossy()
            .into_owned()
    };
    let files = [
        "discrete2.cat",
        "interval.cat",
        "parallel_nocoeq.cat",
        "splitmono.cat",
        "ring_z2.cat",
        "ring_z6.cat",
        "ring_z8.cat",
        "matrix_z2.cat",
        "point.cat",
    ];
    let mut invocations: Vec<Vec<String>> = Vec::new();
    for f in files {
        for args in [
            vec!["validate"],
            vec!["check", "--all"],
            vec!["check", "--weak"],
            vec!["check", "--right"],
            vec!["localize"],
            vec!["localize", "--right"],
        ] {
            let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            v.push(fixture(f));
            invocations.push(v);
        }
    }
    let extra: [&[&str]; 6] = [
        &["hom", "ring_z6.cat", "•", "•"],
        &["equal", "interval.cat", "(u,u)", "(id_0,id_0)"],
        &["equal", "ring_z6.cat", "(0,1)", "(1,3)"],
        &["add", "ring_z6.cat", "(1,1)", "(1,3)"],
        &["factor", "ring_z6.cat", "ring_z2.cat", "ring_z6_to_z2.fun"],
        &["oracle", "interval.cat"],
    ];
    for args in extra {
        invocations.push(
            args.iter()
                .map(|a| {
                    if a.contains('.') && !a.starts_with('(') {
                        fixture(a)
                    } else {
                        a.to_string()
                    }
                })
                .collect(),
        );
    }
    let mut transcript = Vec::new();
    for args in invocations {
        let out = Command::new(env!("CARGO_BIN_EXE_locfrac"))
            .args(&args)
            .output()
            .expect("binary runs");
        transcript.extend(format!("$ {}\n", args.join(" ")).bytes());
        transcript.extend(format!("exit {}\n", out.status.code().unwrap_or(-1)).bytes());
        transcript.extend(out.stdout);
        transcript.extend(out.stderr);
    }
    transcript
}

fn determinism() -> Verdict {
    let first = cli_suite();
    let second = cli_suite();
    ensure(first == second, "transcripts differ")?;
    Ok(format!("two runs, {} identical bytes", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("axiom suite", axiom_suite),
        ("localization counts", localization_counts),
        ("L1 witness independence", witness_independence),
        ("direct = generated equivalence", equivalence_generation),
        ("L2 = L2' and find_k", weak_axioms),
        ("universal property", universal_property),
        ("additive localization", additive_localization),
        ("oracle agreement", oracle_agreement),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
