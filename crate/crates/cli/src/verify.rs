//! The verification suite: census agreement for every type, plus oracle
//! checks (restricted arrangements, normalizer indices, group orders, the
//! ideal bijection) at small rank.

use std::fmt;

use fullsupport::cartan::{admissible_types, CartanType, LengthClass, RootSystem};
use fullsupport::counting::{self, CountingError};
use fullsupport::invariants;
use fullsupport::oracle::{self, OracleError, DEFAULT_GROUP_CAP};
use fullsupport::poset::RootPoset;
use num_bigint::BigUint;
use rayon::prelude::*;

/// Oracle checks never go above this rank.
pub const DEEP_MAX_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub outcome: Outcome,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, detail) = match &self.outcome {
            Outcome::Pass => ("PASS", None),
            Outcome::Fail(why) => ("FAIL", Some(why)),
            Outcome::Skipped(why) => ("SKIP", Some(why)),
        };
        write!(f, "{tag} {:<12} {}", self.name, self.subject)?;
        if let Some(detail) = detail {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub checks: Vec<Check>,
}

impl Summary {
    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| *o == Outcome::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skipped(_)))
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        writeln!(
            f,
            "{} checks: {} passed, {} failed, {} skipped",
            self.checks.len(),
            self.passed(),
            self.failed(),
            self.skipped()
        )
    }
}

fn check(name: &str, subject: impl Into<String>, outcome: Outcome) -> Check {
    Check {
        name: name.to_string(),
        subject: subject.into(),
        outcome,
    }
}

fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(why())
    }
}

fn from_counting(result: Result<bool, CountingError>, why: impl FnOnce() -> String) -> Outcome {
    match result {
        Ok(ok) => from_bool(ok, why),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn from_oracle<T>(result: Result<T, OracleError>, judge: impl FnOnce(T) -> Outcome) -> Outcome {
    match result {
        Ok(v) => judge(v),
        Err(e @ OracleError::GroupCap { .. })
        | Err(e @ OracleError::ArrangementTooLarge { .. }) => Outcome::Skipped(e.to_string()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn simple_label(t: CartanType, i: usize, class: LengthClass) -> String {
    format!("{t} α{} ({class})", i + 1)
}

/// Census and structural checks for one type.
pub fn census_checks(t: CartanType) -> Vec<Check> {
    let rs = RootSystem::from_type(t);
    let mut out = Vec::new();
    let label = t.to_string();

    let census = counting::full_census(&rs);
    out.push(check(
        "census",
        &label,
        match &census {
            Ok(r) => from_bool(r.agree, || format!("{r:?}")),
            Err(e) => Outcome::Fail(e.to_string()),
        },
    ));

    match invariants::compute(&rs) {
        Ok((ev, gi)) => {
            for class in [LengthClass::Long, LengthClass::Short] {
                if gi.class_size(class) == 0 {
                    continue;
                }
                out.push(check(
                    "proof-chain",
                    format!("{label} {class}"),
                    from_counting(counting::proof_chain_check(&ev, &gi, class), || {
                        "stages differ".to_string()
                    }),
                ));
            }
            let n = rs.rank();
            let h = gi.coxeter_number as usize;
            let e = ev.as_slice();
            let structural = rs.len() * 2 == n * h
                && ev.sum() as usize == rs.len()
                && e[0] == 1
                && (0..n).all(|i| h as u32 - e[i] == e[n - 1 - i]);
            out.push(check(
                "structure",
                &label,
                from_bool(structural, || {
                    format!("exponents {ev}, h = {h}, |Φ⁺| = {}", rs.len())
                }),
            ));
        }
        Err(e) => out.push(check("structure", &label, Outcome::Fail(e.to_string()))),
    }

    out.push(check(
        "covers",
        &label,
        from_bool(covers_are_simple_differences(&rs), || {
            "a cover relation is not a simple-root difference".to_string()
        }),
    ));
    out
}

/// Generic transitive reduction compared against `{(β,γ) : γ − β ∈ Δ}`.
pub fn covers_are_simple_differences(rs: &RootSystem) -> bool {
    let poset = RootPoset::new(rs);
    let roots = rs.positive_roots();
    let mut expected = Vec::new();
    for (b, lo) in roots.iter().enumerate() {
        for (g, hi) in roots.iter().enumerate() {
            let mut ones = 0;
            let mut ok = true;
            for (x, y) in hi.coeffs().iter().zip(lo.coeffs()) {
                match i64::from(*x) - i64::from(*y) {
                    0 => {}
                    1 => ones += 1,
                    _ => ok = false,
                }
            }
            if ok && ones == 1 {
                expected.push((b, g));
            }
        }
    }
    expected.sort_unstable();
    poset.cover_relations() == expected
}

/// Oracle checks for one type.
pub fn deep_checks(t: CartanType) -> Vec<Check> {
    let rs = RootSystem::from_type(t);
    let label = t.to_string();
    let mut out = Vec::new();
    let (ev, gi) = match invariants::compute(&rs) {
        Ok(v) => v,
        Err(e) => return vec![check("oracle", &label, Outcome::Fail(e.to_string()))],
    };
    let expected_chi = counting::restriction_charpoly_formula(&ev);

    for (i, simple) in rs.simple_roots().iter().enumerate() {
        let subject = simple_label(t, i, simple.length_class());
        let outcome = from_oracle(
            oracle::restricted_arrangement(&rs, i)
                .and_then(|arr| oracle::characteristic_polynomial(&arr)),
            |chi| {
                from_bool(chi == expected_chi, || {
                    format!("got {chi}, expected {expected_chi}")
                })
            },
        );
        out.push(check("charpoly", subject, outcome));
    }

    let group = oracle::generate_weyl_group(&rs, DEFAULT_GROUP_CAP);
    out.push(check(
        "group-order",
        &label,
        from_oracle(group.clone(), |g| {
            from_bool(BigUint::from(g.len()) == gi.weyl_order, || {
                format!("generated {} elements, expected {}", g.len(), gi.weyl_order)
            })
        }),
    ));
    for (i, simple) in rs.simple_roots().iter().enumerate() {
        let class = simple.length_class();
        let subject = simple_label(t, i, class);
        let outcome = from_oracle(group.clone(), |g| {
            let formula = counting::normalizer_index_formula(&ev, gi.class_size(class));
            from_oracle(
                oracle::normalizer_index_direct(&g, &rs, i),
                |direct| match formula {
                    Ok(f) => from_bool(direct == f, || format!("direct {direct}, formula {f}")),
                    Err(e) => Outcome::Fail(e.to_string()),
                },
            )
        });
        out.push(check("normalizer", subject, outcome));
    }

    out.push(check(
        "bijection",
        &label,
        from_counting(counting::bijection_check(&rs), || {
            "ideal side and root side differ".to_string()
        }),
    ));
    out
}

/// Runs the suite over all admissible types of rank at most `max_rank`.
/// With `deep`, oracle checks run for ranks up to [`DEEP_MAX_RANK`].
pub fn run(max_rank: usize, deep: bool) -> Summary {
    let types = admissible_types(max_rank);
    let mut per_type: Vec<Vec<Check>> = types.par_iter().map(|&t| census_checks(t)).collect();
    if deep {
        let deep_types: Vec<CartanType> = types
            .iter()
            .copied()
            .filter(|t| t.rank() <= DEEP_MAX_RANK)
            .collect();
        per_type.extend(
            deep_types
                .par_iter()
                .map(|&t| deep_checks(t))
                .collect::<Vec<_>>(),
        );
    }
    Summary {
        checks: per_type.into_iter().flatten().collect(),
    }
}
