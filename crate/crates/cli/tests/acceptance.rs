//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fingroup::classification::{
    corpus_properties, enumerate_groups_oracle, non_split_checks, presentation_checks, structure_checks, verify_oracle,
    Corpus, Recipe, Report, GUARD_BUDGETS,
};
use fingroup::constructors::{catalog_actions, semidirect_product};
use fingroup::isomorphism::find_isomorphism;
use serde_json::Value;

type Outcome = Result<String, String>;

fn fingroup(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fingroup")).args(args).output().expect("binary runs");
    let elapsed = start.elapsed();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), elapsed)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Passes when every row with one of `ids` passed and at least `min` exist.
fn rows_pass(report: &Report, ids: &[&str], min: usize) -> Outcome {
    let rows: Vec<_> = report.rows.iter().filter(|r| ids.contains(&r.check_id.as_str())).collect();
    ensure(rows.len() >= min, format!("only {} rows for {ids:?}", rows.len()))?;
    if let Some(bad) = rows.iter().find(|r| !r.pass) {
        return Err(format!("{} {}: expected {} computed {}", bad.check_id, bad.subject, bad.expected, bad.computed));
    }
    Ok(format!("{} checks", rows.len()))
}

fn classify(order: &str, limit: Duration) -> Result<(Vec<Value>, Duration), String> {
    let (code, out, elapsed) = fingroup(&["--json", "classify", "--order", order]);
    ensure(code == 0, format!("exit code {code}"))?;
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))?;
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(v["passed"] == true, "catalog checks failed")?;
    Ok((v["groups"].as_array().cloned().unwrap_or_default(), elapsed))
}

fn center_counts(groups: &[Value]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for g in groups {
        *counts.entry(g["center"].as_str().unwrap_or("?").to_string()).or_insert(0) += 1;
    }
    counts
}

fn order_eight() -> Outcome {
    let (groups, elapsed) = classify("8", Duration::from_secs(1))?;
    ensure(groups.len() == 5, format!("{} groups", groups.len()))?;
    let counts = center_counts(&groups);
    ensure(counts.get("Z(G)=G") == Some(&3), format!("centers {counts:?}"))?;
    let ids: Vec<&str> = groups.iter().filter_map(|g| g["id"].as_str()).collect();
    ensure(ids.contains(&"D4") && ids.contains(&"Q8"), format!("ids {ids:?}"))?;
    Ok(format!("5 groups, 3 abelian + D4 + Q8, pairwise non-isomorphic, {elapsed:.2?}"))
}

fn order_sixteen() -> Outcome {
    let (groups, elapsed) = classify("16", Duration::from_secs(10))?;
    ensure(groups.len() == 14, format!("{} groups", groups.len()))?;
    let counts = center_counts(&groups);
    let want = [("Z(G)=G", 5), ("Z₂×Z₂", 4), ("Z₄", 2), ("Z₂", 3)];
    for (k, n) in want {
        ensure(counts.get(k) == Some(&n), format!("centers {counts:?}"))?;
    }
    Ok(format!("14 groups, centers G/Z2xZ2/Z4/Z2 = 5/4/2/3, {elapsed:.2?}"))
}

fn constructions(corpus: &Corpus) -> Outcome {
    let mut matched = Vec::new();
    for (key, spec) in catalog_actions() {
        let b = corpus
            .catalog()
            .find(|b| b.entry.construction == Some(Recipe::Semidirect(key)))
            .ok_or(format!("no catalog entry for {key}"))?;
        let g = b.group().ok_or(format!("{} did not enumerate", b.entry.id))?;
        let built = semidirect_product(&spec);
        let w = find_isomorphism(&built, g).ok_or(format!("{key} not isomorphic to {}", b.entry.id))?;
        ensure(w.verify(&built, g), format!("bad witness for {}", b.entry.id))?;
        matched.push(b.entry.id);
    }
    for id in ["D4xZ2", "Q8xZ2"] {
        let b = corpus.entry(id).ok_or(format!("{id} missing"))?;
        let recipe = b.entry.construction.as_ref().ok_or(format!("{id} has no construction"))?;
        ensure(matches!(recipe, Recipe::Direct(..)), format!("{id} is not a direct product"))?;
        let (built, g) = (recipe.build(), b.group().ok_or(format!("{id} did not enumerate"))?);
        let w = find_isomorphism(&built, g).ok_or(format!("{id} not isomorphic"))?;
        ensure(w.verify(&built, g), format!("bad witness for {id}"))?;
        matched.push(id);
    }
    Ok(format!("{} witnesses: {}", matched.len(), matched.join(", ")))
}

fn oracle(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let eights = enumerate_groups_oracle(8).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("order 8 took {elapsed:?}"))?;
    ensure(eights.len() == 5, format!("{} groups of order 8", eights.len()))?;
    let counts = rows_pass(&verify_oracle(corpus), &["oracle-count", "oracle-match", "catalog-covered"], 18)?;
    Ok(format!("counts 1,1,1,2,1,2,1,5 and order 8 matches the catalog ({counts}), {elapsed:.2?}"))
}

fn guard(corpus: &Corpus) -> Outcome {
    let checks = rows_pass(
        &presentation_checks(corpus),
        &["bare-presentation", "central-presentation", "alt-presentation"],
        5,
    )?;
    let (code, _, _) = fingroup(&["build", "--presentation", "x^4=y^4=e, yx=x^3y^3", "--expect-order", "16"]);
    ensure(code == 1, format!("build exit code {code}"))?;
    Ok(format!("budgets {GUARD_BUDGETS:?} exceeded, build exits 1; {checks}"))
}

fn main() -> ExitCode {
    let corpus = match Corpus::load() {
        Ok(c) => c,
        Err(e) => {
            println!("[FAIL] corpus did not load: {e}");
            return ExitCode::FAILURE;
        }
    };
    let props = corpus_properties(&corpus);
    let structure = structure_checks(&corpus);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("classify order 8", order_eight()),
        ("classify order 16", order_sixteen()),
        ("constructions match presentations", constructions(&corpus)),
        ("brute-force enumeration up to order 8", oracle(&corpus)),
        ("groups of order 4 are abelian", rows_pass(&props, &["burnside"], 2)),
        ("cyclic quotient by the center", rows_pass(&props, &["cyclic-quotient"], 19)),
        ("class equation", rows_pass(&props, &["class-equation", "p-group-center"], 19)),
        ("product set size |HK|", rows_pass(&props, &["product-set"], 19)),
        (
            "maximal subgroups, abelian pair bound, derived minimality",
            structure.map_err(|e| e.to_string()).and_then(|s| {
                let a = rows_pass(&s, &["maximal-count", "maximal-product", "maximal-intersection", "abelian-pair-bound"], 6)?;
                let b = rows_pass(&props, &["derived-minimal"], 19)?;
                Ok(format!("{a}; derived {b}"))
            }),
        ),
        ("non-split extensions", rows_pass(&non_split_checks(&corpus), &["split"], 5)),
        ("infinite presentation guard", guard(&corpus)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
