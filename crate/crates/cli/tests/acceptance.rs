//! Acceptance suite. Every criterion runs, prints one PASS/FAIL line, and the
//! test fails if any criterion fails. Run with `--nocapture` to see the lines.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use fullsupport::cartan::{admissible_types, CartanType, Family, LengthClass, RootSystem};
use fullsupport::counting;
use fullsupport::invariants;
use fullsupport::oracle::{self, DEFAULT_GROUP_CAP};
use fullsupport_cli::verify::covers_are_simple_differences;
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_types() -> Vec<CartanType> {
    let types = admissible_types(8);
    assert_eq!(types.len(), 31);
    types
}

fn criterion_1_total_count() -> Outcome {
    let start = Instant::now();
    for t in all_types() {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let (total, _, _) = counting::brute_full_support_census(&rs);
        let formula = counting::chapoton_count(&gi, &ev).map_err(|e| format!("{t}: {e}"))?;
        ensure(total == formula, || {
            format!("{t}: brute {total} vs formula {formula}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("31 types, {elapsed:?}"))
}

fn criterion_2_refined_counts() -> Outcome {
    let mut brute: HashMap<String, (u64, u64)> = HashMap::new();
    for t in all_types() {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let (_, long, short) = counting::brute_full_support_census(&rs);
        let formula = counting::refined_counts(&gi, &ev).map_err(|e| format!("{t}: {e}"))?;
        ensure((long, short) == formula, || {
            format!("{t}: brute ({long},{short}) vs formula {formula:?}")
        })?;
        brute.insert(t.to_string(), (long, short));
    }
    // Anchors, frozen from the brute-force enumeration.
    for t in all_types() {
        let n = t.rank() as u64;
        let expected = match (t.family(), t.rank()) {
            (Family::A, _) => Some((1, 0)),
            (Family::B, _) => Some((n - 1, 1)),
            (Family::C, _) => Some((1, n - 1)),
            (Family::G, 2) => Some((2, 2)),
            (Family::F, 4) => Some((5, 5)),
            (Family::E, 8) => Some((44, 0)),
            _ => None,
        };
        if let Some(expected) = expected {
            let got = brute[&t.to_string()];
            ensure(got == expected, || {
                format!("{t}: anchor {expected:?}, got {got:?}")
            })?;
        }
    }
    Ok("31 types, anchors A/B/C/G2/F4/E8".into())
}

fn criterion_3_sommers() -> Outcome {
    let mut checked = 0;
    for t in all_types() {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let (_, long, short) = counting::brute_full_support_census(&rs);
        for (class, brute) in [(LengthClass::Long, long), (LengthClass::Short, short)] {
            if gi.class_size(class) == 0 {
                continue;
            }
            let s = counting::sommers_count(&ev, &gi, class).map_err(|e| format!("{t}: {e}"))?;
            ensure(s == brute, || format!("{t} {class}: {s} vs brute {brute}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (type, class) pairs"))
}

fn criterion_4_proof_chain() -> Outcome {
    let mut checked = 0;
    for t in all_types() {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        for class in [LengthClass::Long, LengthClass::Short] {
            if gi.class_size(class) == 0 {
                continue;
            }
            let ok = counting::proof_chain_check(&ev, &gi, class).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{t} {class}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (type, class) pairs incl. A1"))
}

fn criterion_5_charpoly_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for t in admissible_types(4) {
        let rs = RootSystem::from_type(t);
        let (ev, _) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let expected = counting::restriction_charpoly_formula(&ev);
        for i in 0..rs.rank() {
            let arr = oracle::restricted_arrangement(&rs, i).map_err(|e| e.to_string())?;
            let chi = oracle::characteristic_polynomial(&arr).map_err(|e| e.to_string())?;
            ensure(chi == expected, || {
                format!("{t} α{}: {chi} vs {expected}", i + 1)
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{checked} simple roots, {elapsed:?}"))
}

fn criterion_6_normalizer_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for t in admissible_types(4) {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let group =
            oracle::generate_weyl_group(&rs, DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?;
        ensure(BigUint::from(group.len()) == gi.weyl_order, || {
            format!("{t}: |W| generated {} vs {}", group.len(), gi.weyl_order)
        })?;
        for (i, simple) in rs.simple_roots().iter().enumerate() {
            let direct =
                oracle::normalizer_index_direct(&group, &rs, i).map_err(|e| e.to_string())?;
            let formula =
                counting::normalizer_index_formula(&ev, gi.class_size(simple.length_class()))
                    .map_err(|e| e.to_string())?;
            ensure(direct == formula, || {
                format!("{t} α{}: direct {direct} vs formula {formula}", i + 1)
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{checked} simple roots, {elapsed:?}"))
}

fn criterion_7_bijection() -> Outcome {
    for t in admissible_types(4) {
        let rs = RootSystem::from_type(t);
        let ok = counting::bijection_check(&rs).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{t}: ideal side differs from root side"))?;
        let ideal_side = counting::ideal_side_census(&rs).map_err(|e| e.to_string())?;
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let formula = counting::refined_counts(&gi, &ev).map_err(|e| e.to_string())?;
        ensure(ideal_side == formula, || {
            format!("{t}: ideal count {ideal_side:?} vs formula {formula:?}")
        })?;
    }
    Ok("all types of rank ≤ 4".into())
}

fn criterion_8_structure() -> Outcome {
    for t in all_types() {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).map_err(|e| e.to_string())?;
        let n = rs.rank();
        let h = gi.coxeter_number;
        let e = ev.as_slice();
        ensure(2 * rs.len() == n * h as usize, || {
            format!("{t}: |Φ⁺| != nh/2")
        })?;
        ensure(ev.sum() == rs.len() as u64, || format!("{t}: Σe != |Φ⁺|"))?;
        ensure(e[0] == 1, || format!("{t}: e₁ != 1"))?;
        ensure((0..n).all(|i| h - e[i] == e[n - 1 - i]), || {
            format!("{t}: duality")
        })?;
        ensure(covers_are_simple_differences(&rs), || {
            format!("{t}: covers")
        })?;
    }
    Ok("31 types".into())
}

fn criterion_9_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_fullsupport");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run(&["table", "--max-rank", "8", "--format", "csv"])?;
    let second = run(&["table", "--max-rank", "8", "--format", "csv"])?;
    ensure(first.status.success(), || {
        format!("table exit {:?}", first.status.code())
    })?;
    ensure(first.stdout == second.stdout, || {
        "table output differs between runs".into()
    })?;
    let text = String::from_utf8(first.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<&str> = text.lines().skip(1).collect();
    ensure(rows.len() == 31, || format!("{} rows", rows.len()))?;
    ensure(rows.iter().all(|r| r.ends_with(",true")), || {
        "a row disagrees".into()
    })?;

    let deep = run(&["verify", "--deep"])?;
    ensure(deep.status.code() == Some(0), || {
        format!("verify --deep exit {:?}", deep.status.code())
    })?;
    Ok("31 deterministic rows; verify --deep exit 0".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 total count = product formula", criterion_1_total_count),
        (
            "2 long/short counts = refined formulas",
            criterion_2_refined_counts,
        ),
        (
            "3 ideal-count expression = brute count",
            criterion_3_sommers,
        ),
        ("4 simplification chain exact", criterion_4_proof_chain),
        (
            "5 restricted χ from intersection poset",
            criterion_5_charpoly_oracle,
        ),
        (
            "6 normalizer index from explicit group",
            criterion_6_normalizer_oracle,
        ),
        ("7 principal-ideal bijection", criterion_7_bijection),
        ("8 structural invariants", criterion_8_structure),
        ("9 CLI contract", criterion_9_cli),
    ];
    let mut failures = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
