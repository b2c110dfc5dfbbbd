//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use fatcat_cli::{load_spec, run_suite, Report, SpecDocument, SuiteOptions};
use fatcat_core::instances::{FiniteGroup, LatticeConnection, Limits};
use fatcat_core::{FiniteCategory, ObjId};

const INTERCHANGE_BUDGET: Duration = Duration::from_secs(30);
const BIHOLONOMY_BUDGET: Duration = Duration::from_secs(1);
const CATEGORY_INSTANCES: [&str; 4] = ["z2", "z3", "s3", "gl2f2"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(input: &str, suite: &str) -> Result<Report, String> {
    let opts = SuiteOptions {
        input: format!("builtin:{input}"),
        ..SuiteOptions::default()
    };
    let doc = load_spec(&opts.input, &opts.limits).map_err(|e| e.to_string())?;
    run_suite(&doc, suite, &opts).map_err(|e| e.to_string())
}

fn category(input: &str) -> FiniteCategory {
    let doc = load_spec(&format!("builtin:{input}"), &Limits::default()).unwrap();
    match doc.resolve(&Limits::default()).unwrap() {
        fatcat_cli::Resolved::Category(c) => c,
        _ => panic!("{input} is not a category"),
    }
}

/// Every object of these groupoids has the same number `d` of outgoing
/// arrows, so with `M` morphisms there are `M·d²` induced squares, each with
/// `d²` partners on either side, and `M·d⁷` pasteable 2×2 grids.
fn out_degree(c: &FiniteCategory) -> u64 {
    let degree = |x: ObjId| c.objects().map(|y| c.hom_set(x, y).len()).sum::<usize>();
    let d = degree(ObjId(0));
    assert!(
        c.objects().all(|x| degree(x) == d),
        "non-uniform out-degree"
    );
    d as u64
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    for name in CATEGORY_INSTANCES {
        let r = run(name, "interchange")?;
        let c = category(name);
        let expected = c.morphism_count() as u64 * out_degree(&c).pow(7);
        let grids = r.checks_for("interchange");
        ensure(r.pass, || format!("{name}: {:?}", r.violations.first()))?;
        ensure(grids == expected, || {
            format!("{name}: {grids} grids, expected {expected}")
        })?;
        lines.push(format!("{name}={grids}"));
        if name == "s3" {
            ensure(grids >= 1000, || format!("s3 checked only {grids} grids"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < INTERCHANGE_BUDGET, || {
        format!("took {elapsed:.1?}")
    })?;
    Ok(format!("grids {} in {elapsed:.1?}", lines.join(", ")))
}

fn criterion_2() -> Outcome {
    let mut lines = Vec::new();
    for name in CATEGORY_INSTANCES {
        let r = run(name, "interchange")?;
        let c = category(name);
        let expected = c.morphism_count() as u64 * out_degree(&c).pow(4);
        let law = r
            .laws
            .iter()
            .find(|l| l.law == "horizontal-defining-condition")
            .ok_or("law missing")?;
        ensure(law.violations == 0, || {
            format!("{name}: {} violations", law.violations)
        })?;
        ensure(law.checked == expected, || {
            format!("{name}: {} pairs, expected {expected}", law.checked)
        })?;
        lines.push(format!("{name}={}", law.checked));
    }
    Ok(format!("composable pairs {}", lines.join(", ")))
}

fn criterion_3() -> Outcome {
    let mut lines = Vec::new();
    for name in CATEGORY_INSTANCES {
        let r = run(name, "lemma1")?;
        let c = category(name);
        let expected = c.morphism_count() as u64 * out_degree(&c).pow(4);
        ensure(r.pass, || format!("{name}: {:?}", r.violations.first()))?;
        let n = r.checks_for("induced-functoriality");
        ensure(n == expected, || {
            format!("{name}: {n} pasted pairs, expected {expected}")
        })?;
        lines.push(format!("{name}={n}"));
    }
    Ok(format!("pasted square pairs {}", lines.join(", ")))
}

fn criterion_4() -> Outcome {
    let r = run("s3", "enrichment")?;
    ensure(r.pass, || format!("{:?}", r.violations.first()))?;
    ensure(
        r.predicate.as_deref() == Some("two-sided-translation"),
        || "wrong predicate".into(),
    )?;
    // S3 as a one-object groupoid: six right translations, 216 induced
    // squares, each with 36 partners horizontally and vertically.
    for (law, n) in [
        ("right-translation-membership", 6),
        ("member-cells", 216),
        ("vertical-closure", 216 * 36),
        ("horizontal-closure", 216 * 36),
        ("translation-factorization", 216 * 36),
    ] {
        ensure(r.checks_for(law) == n, || {
            format!("{law}: {} checks, expected {n}", r.checks_for(law))
        })?;
    }
    let failing = run("s3", "enrichment").and_then(|_| {
        let opts = SuiteOptions {
            input: "builtin:s3".into(),
            predicate: "identity-table".into(),
            limits: Limits::default(),
        };
        let doc = load_spec(&opts.input, &opts.limits).map_err(|e| e.to_string())?;
        run_suite(&doc, "enrichment", &opts).map_err(|e| e.to_string())
    })?;
    ensure(
        !failing.pass
            && failing
                .violations
                .iter()
                .all(|v| v.law == "right-translation-membership"),
        || "identity-table predicate should fail only the precondition".into(),
    )?;
    Ok("two-sided translations closed; 7776 factorizations agree".into())
}

fn criterion_5() -> Outcome {
    let good = run("direct-sum", "coherence-base")?;
    ensure(good.pass, || {
        format!("strict structure: {:?}", good.violations.first())
    })?;
    ensure(
        good.checks_for("pentagon") > 0 && good.checks_for("triangle") > 0,
        || "no coherence checks".into(),
    )?;
    let bad = run("direct-sum-corrupt", "coherence-base")?;
    ensure(!bad.pass, || "corrupted associator passed".into())?;
    let naturality: Vec<_> = bad
        .violations
        .iter()
        .filter(|v| v.law == "assoc-naturality")
        .collect();
    ensure(!naturality.is_empty(), || "no naturality witness".into())?;
    ensure(
        naturality
            .iter()
            .all(|v| v.witness[..3] == ["d0", "d0", "d2"]),
        || format!("naturality witness names {:?}", naturality[0].witness),
    )?;
    let pentagon = bad
        .violations
        .iter()
        .filter(|v| v.law == "pentagon")
        .count();
    ensure(pentagon > 0, || "no pentagon witness".into())?;
    Ok(format!(
        "strict passes {} checks; corrupted: {} naturality witnesses at (d0, d0, d2), {pentagon} pentagon",
        good.checks,
        naturality.len()
    ))
}

fn criterion_6() -> Outcome {
    let r = run("direct-sum", "coherence-fat")?;
    ensure(r.pass, || format!("{:?}", r.violations.first()))?;
    // Oracle: fat objects are the arrows of the fibers d0 (1), d1 (1), d2 (6);
    // a tuple is in range when the dimensions add up to at most 2.
    let arrows = [(0usize, 1u64), (1, 1), (2, 6)];
    let mut pairs = 0;
    let mut triples = 0;
    let mut quadruples = 0;
    for &(a, na) in &arrows {
        for &(b, nb) in &arrows {
            if a + b <= 2 {
                pairs += na * nb;
            }
            for &(c, nc) in &arrows {
                if a + b + c <= 2 {
                    triples += na * nb * nc;
                }
                for &(d, nd) in &arrows {
                    if a + b + c + d <= 2 {
                        quadruples += na * nb * nc * nd;
                    }
                }
            }
        }
    }
    for (law, n) in [
        ("fat-triangle", pairs),
        ("fat-associator-bijective", triples),
        ("fat-pentagon", quadruples),
    ] {
        ensure(r.checks_for(law) == n, || {
            format!("{law}: {} checks, expected {n}", r.checks_for(law))
        })?;
    }
    Ok(format!(
        "{pairs} triangles, {quadruples} pentagons, {triples} bijective associators"
    ))
}

fn criterion_7() -> Outcome {
    let conj = run("conjugation-s3", "crossed-module")?;
    ensure(conj.pass, || format!("{:?}", conj.violations.first()))?;
    ensure(
        conj.checks_for("peiffer-1") == 36 && conj.checks_for("peiffer-2") == 36,
        || "expected 36 pairs per Peiffer identity".into(),
    )?;
    let bad = run("trivial-s3", "crossed-module")?;
    let witness = bad
        .violations
        .iter()
        .find(|v| v.law == "peiffer-2")
        .ok_or("no Peiffer 2 witness")?;
    let s3 = FiniteGroup::symmetric(3);
    let (h, h2) = (
        s3.element(&witness.witness[0]).ok_or("bad witness")?,
        s3.element(&witness.witness[1]).ok_or("bad witness")?,
    );
    ensure(s3.product(&[h, h2, s3.inverse(h)]) != h2, || {
        "witness pair commutes".into()
    })?;
    ensure(bad.violations.iter().all(|v| v.law == "peiffer-2"), || {
        "unexpected law failed".into()
    })?;
    let z4 = run("trivial-z4", "crossed-module")?;
    ensure(z4.pass, || format!("{:?}", z4.violations.first()))?;
    Ok(format!(
        "witness ({}, {})",
        witness.witness[0], witness.witness[1]
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let horiz = [[1, 3, 2], [0, 2, 1], [3, 3, 0], [2, 1, 1]];
    let vert = [[2, 0, 1, 3], [1, 1, 3, 0], [0, 2, 2, 1]];
    let lattice = LatticeConnection::new(
        FiniteGroup::cyclic(4),
        3,
        3,
        horiz.iter().map(|r| r.to_vec()).collect(),
        vert.iter().map(|r| r.to_vec()).collect(),
        &Limits::default(),
    )
    .map_err(|e| e.to_string())?;
    // Oracle in ℤ₄ written additively: the boundary word of each plaquette.
    let plaquette = |t: usize, s: usize| {
        (4 * 2 + horiz[s][t] + vert[s][t + 1] - horiz[s + 1][t] - vert[s][t]) % 4
    };
    let mut compared = 0;
    for t in 0..=3 {
        for s in 0..=3 {
            let oracle = (0..t)
                .flat_map(|a| (0..s).map(move |b| (a, b)))
                .map(|(a, b)| plaquette(a, b))
                .sum::<usize>()
                % 4;
            let got = lattice.biholonomy(t, s).map_err(|e| e.to_string())?;
            ensure(got == oracle, || {
                format!("g({t}, {s}) = {got}, plaquette product {oracle}")
            })?;
            compared += 1;
        }
    }
    for g in [FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)] {
        let flat = LatticeConnection::flat(g.clone(), 3, 3);
        ensure(
            flat.biholonomy_table()
                .iter()
                .flatten()
                .all(|&x| x == g.identity()),
            || "flat lattice has non-trivial bi-holonomy".into(),
        )?;
    }
    let flat = run("lattice-flat", "biholonomy")?;
    ensure(
        flat.table
            .as_ref()
            .is_some_and(|t| t.iter().flatten().all(|x| x == "e")),
        || "flat table not all identity".into(),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < BIHOLONOMY_BUDGET, || {
        format!("took {elapsed:.1?}")
    })?;
    Ok(format!("{compared} (t, s) pairs match in {elapsed:.1?}"))
}

fn fatcat(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fatcat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn criterion_9() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir = tmp.path();
    let cases = [
        ("axioms", "s3"),
        ("lemma1", "z3"),
        ("interchange", "z3"),
        ("enrichment", "s3"),
        ("coherence-base", "direct-sum-corrupt"),
        ("coherence-fat", "direct-sum"),
        ("crossed-module", "trivial-s3"),
        ("biholonomy", "lattice-s3"),
    ];
    for (suite, name) in cases {
        let input = format!("builtin:{name}");
        let (code1, first) = fatcat(&["check", suite, "--input", &input, "--format", "json"]);
        let (code2, second) = fatcat(&["check", suite, "--input", &input, "--format", "json"]);
        ensure(code1 == code2 && first == second, || {
            format!("{suite} on {name}: output differs between runs")
        })?;
        let report: Report = serde_json::from_str(&first).map_err(|e| e.to_string())?;
        let reparsed = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n";
        ensure(reparsed == first, || {
            format!("{suite}: report does not round-trip")
        })?;

        let (_, exported) = fatcat(&["export", "--input", &input]);
        let doc = SpecDocument::parse(&exported).map_err(|e| e.to_string())?;
        ensure(doc.to_json() + "\n" == exported, || {
            format!("{name}: document does not round-trip")
        })?;
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &exported).map_err(|e| e.to_string())?;
        let path = path.to_string_lossy().to_string();
        let (code3, from_file) = fatcat(&["check", suite, "--input", &path, "--format", "json"]);
        let mut from_file: Report = serde_json::from_str(&from_file).map_err(|e| e.to_string())?;
        from_file.input = input.clone();
        ensure(code3 == code1 && from_file == report, || {
            format!("{suite}: file and builtin reports differ")
        })?;
    }
    Ok(format!(
        "{} suites byte-identical across runs and round trips",
        cases.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("interchange law on z2, z3, s3, gl2f2", criterion_1),
        ("horizontal composites keep h''(f1'f1) = f2'f2", criterion_2),
        ("induced cells compose like pasted squares", criterion_3),
        (
            "enrichment closure for two-sided translations on s3",
            criterion_4,
        ),
        (
            "base coherence passes strict, catches corrupted associator",
            criterion_5,
        ),
        (
            "fat triangle and pentagon on the bounded direct sum",
            criterion_6,
        ),
        ("crossed modules and Peiffer identities", criterion_7),
        ("bi-holonomy matches plaquette products", criterion_8),
        ("CLI output is deterministic and round-trips", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
