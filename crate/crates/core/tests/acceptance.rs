//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use gardens::cli::{run, EXIT_DISAGREE};
use gardens::enumerate::{count_components, enumerate_gardens, enumerate_skeletons, enumerate_trees, Budget, EnumerationQuery};
use gardens::extract::{extract, RationalFunction, TraceConfig};
use gardens::hurwitz::{
    as_positive_integer, complex_g0_oracle, complex_hurwitz_g0, direct_count_garden, direct_count_tree, factorization_oracle,
    hurwitz_garden, hurwitz_pants, hurwitz_tree, real_hurwitz_table,
};
use gardens::{canonical_form, canonical_key, ChordDiagram, Direction, Garden, WeightedTree};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Partitions of `m` into `k` parts, nonincreasing.
fn partitions(m: u64, k: usize, max: u64) -> Vec<Vec<u64>> {
    if k == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (1..=max.min(m))
        .rev()
        .flat_map(|first| {
            partitions(m - first, k - 1, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn pants_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for m in 1..=5u64 {
        for k in 1..=m as usize {
            for w in partitions(m, k, m) {
                let a = hurwitz_pants(&w).map_err(|e| format!("{w:?}: {e}"))?;
                let b = factorization_oracle(&w).map_err(|e| format!("{w:?}: {e}"))?;
                ensure(a == b, || format!("{w:?}: formula {a}, oracle {b}"))?;
                checked += 1;
            }
        }
    }
    for w in [[2u64].as_slice(), &[1, 1]] {
        ensure(hurwitz_pants(w).unwrap() == int(1), || format!("{w:?} is not 1"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} boundary lists"))
}

fn formulas_vs_direct() -> Outcome {
    let start = Instant::now();
    let mut trees = 0;
    for w in 1..=7 {
        for t in enumerate_trees(w, None) {
            let a = hurwitz_tree(&t).map_err(|e| e.to_string())?;
            let b = direct_count_tree(&t).map_err(|e| e.to_string())?;
            ensure(a == b && as_positive_integer(&a).is_some(), || format!("tree {t:?}: {a} vs {b}"))?;
            trees += 1;
        }
    }
    let mut gardens = 0;
    for n in 1..=5 {
        let r = enumerate_gardens(&EnumerationQuery::new(n), Budget::default()).map_err(|e| e.to_string())?;
        for g in &r.gardens {
            let a = hurwitz_garden(g).map_err(|e| e.to_string())?;
            let b = direct_count_garden(g).map_err(|e| e.to_string())?;
            ensure(a == b && as_positive_integer(&a).is_some(), || format!("{}: {a} vs {b}", g.to_json_string()))?;
            gardens += 1;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{trees} trees, {gardens} gardens"))
}

fn single_root_law() -> Outcome {
    for w in 1..=8i64 {
        let expected = if w == 2 { int(1) } else { BigRational::new(BigInt::from(w).pow(w as u32), BigInt::from(w).pow(3)) };
        let got = hurwitz_tree(&WeightedTree::bare(w as u64)).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("w = {w}: {got}, expected {expected}"))?;
    }
    Ok("w = 1..8".into())
}

fn complex_references() -> Outcome {
    let g3 = complex_hurwitz_g0(3).map_err(|e| e.to_string())?;
    let g4 = complex_hurwitz_g0(4).map_err(|e| e.to_string())?;
    ensure(g3 == int(4), || format!("g0(3) = {g3}"))?;
    ensure(g4 == int(120), || format!("g0(4) = {g4}"))?;
    let start = Instant::now();
    let orbits = complex_g0_oracle(3);
    within(start, Duration::from_secs(1))?;
    ensure(BigRational::from_integer(orbits.orbits.into()) == g3, || format!("oracle found {} orbits", orbits.orbits))?;
    Ok(format!("g0(3) = 4, g0(4) = 120, {} orbits", orbits.orbits))
}

fn enumeration_sanity() -> Outcome {
    let start = Instant::now();
    let catalan: Vec<usize> = (0..=4).map(|l| enumerate_skeletons(l).len()).collect();
    ensure(catalan == [1, 1, 2, 5, 14], || format!("skeleton counts {catalan:?}"))?;
    let c1 = count_components(1, Budget::default()).map_err(|e| e.to_string())?.total();
    ensure(c1 == 1, || format!("count_components(1) = {c1}"))?;
    let mut total = 0;
    for n in 1..=4 {
        let r = enumerate_gardens(&EnumerationQuery::new(n), Budget::default()).map_err(|e| e.to_string())?;
        let keys: HashSet<_> = r.gardens.iter().map(|g| canonical_key(g).unwrap()).collect();
        ensure(keys.len() == r.gardens.len(), || format!("duplicate classes at n = {n}"))?;
        total += keys.len();
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("Catalan 1,1,2,5,14; {total} distinct gardens for n <= 4"))
}

fn fixtures() -> Vec<(&'static str, RationalFunction)> {
    vec![
        ("z^2-1", RationalFunction::from_i64(&[-1, 0, 1], &[1])),
        ("z^3+3z", RationalFunction::from_i64(&[0, 3, 0, 1], &[1])),
        ("z", RationalFunction::from_i64(&[0, 1], &[1])),
    ]
}

fn expected_fixture(name: &str) -> Garden {
    match name {
        "z^2-1" => Garden::new(
            ChordDiagram::unweighted(vec![[0, 1]], Direction::Forward, vec![1, 2]),
            vec![WeightedTree::bare(1), WeightedTree::bare(1)],
        ),
        "z^3+3z" => Garden::imaginary(WeightedTree::from_parents(&[(None, 1), (Some(0), 1)])),
        _ => Garden::imaginary(WeightedTree::bare(1)),
    }
}

fn extraction_fixtures() -> Outcome {
    for (name, f) in fixtures() {
        let start = Instant::now();
        let e = extract(&f, &TraceConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        within(start, Duration::from_secs(10)).map_err(|m| format!("{name}: {m}"))?;
        let want = expected_fixture(name);
        let got = canonical_form(&e.garden).map_err(|e| e.to_string())?;
        ensure(got == canonical_form(&want).unwrap(), || format!("{name}: got {}", e.garden.to_json_string()))?;
        if name == "z^2-1" {
            let d = &e.garden.diagram;
            ensure(
                d.matching.len() == 1
                    && d.labels == [1, 2]
                    && d.arc_weights.iter().chain(&d.chord_weights).all(|&w| w == 0)
                    && e.garden.trees == [WeightedTree::bare(1), WeightedTree::bare(1)],
                || format!("z^2-1: got {}", e.garden.to_json_string()),
            )?;
        }
    }
    Ok("z^2-1, z^3+3z, z".into())
}

fn extraction_invariance() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let cfg = TraceConfig::default();
    let mut checked = 0;
    for (name, f) in fixtures() {
        let key = canonical_key(&extract(&f, &cfg).map_err(|e| format!("{name}: {e}"))?.garden).unwrap();
        for _ in 0..5 {
            let m: [i64; 4] = loop {
                let m = [0; 4].map(|_| rng.random_range(-4..=4));
                if m[0] * m[3] - m[1] * m[2] > 0 {
                    break m;
                }
            };
            let g = f.precompose(&int(m[0]), &int(m[1]), &int(m[2]), &int(m[3]));
            let e = extract(&g, &cfg).map_err(|e| format!("{name} by {m:?}: {e}"))?;
            ensure(canonical_key(&e.garden).unwrap() == key, || format!("{name} by {m:?}: key changed"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pre-compositions"))
}

fn cross_module() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, f) in fixtures() {
        let e = extract(&f, &TraceConfig::default()).map_err(|e| format!("{name}: {e}"))?;
        let w = e.garden.total_weight().map_err(|e| e.to_string())?;
        ensure(w == f.degree() as u64, || format!("{name}: weight {w}"))?;
        let path = dir.path().join("garden.json");
        std::fs::write(&path, e.garden.to_json_string()).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["garden", "hurwitz", path.to_str().unwrap()], &mut out, &mut err);
        ensure(code != EXIT_DISAGREE && code == 0, || format!("{name}: hurwitz exited {code}"))?;
    }
    let t = real_hurwitz_table(3, Budget::default()).map_err(|e| e.to_string())?;
    let row = t.rows.get(&0).map(|r| r.sum.clone());
    ensure(row == Some(BigInt::from(2)), || format!("table(3) row l = 0: {row:?}"))?;
    Ok("fixtures pass hurwitz; table(3) l = 0 sums to 2".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "pants formula vs factorization oracle", pants_oracle),
        (2, "closed forms vs direct counts", formulas_vs_direct),
        (3, "single-root law", single_root_law),
        (4, "complex genus 0 references", complex_references),
        (5, "enumeration sanity", enumeration_sanity),
        (6, "extraction fixtures", extraction_fixtures),
        (7, "extraction Möbius invariance", extraction_invariance),
        (8, "cross-module consistency", cross_module),
    ];
    let mut failed = 0;
    for (n, title, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {n}: PASS {title} ({detail}) [{t:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL {title}: {why} [{t:.2?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
