//! Both sides of the full-support counting identities, and every intermediate
//! expression connecting them.
//!
//! All formula evaluation is exact rational arithmetic. A formula whose value
//! is not a nonnegative integer is reported as an error, never rounded.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cartan::{LengthClass, RootSystem};
use crate::invariants::{self, ExponentVector, GroupInvariants, InvariantError};
pub use crate::polynomial::IntPolynomial;
use crate::poset::{OrderIdeal, PosetError, RootPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("{what} evaluated to {value}, which is not a nonnegative integer")]
    NotNatural { what: &'static str, value: String },
    #[error("there are no {0} simple roots, so the {0} class is empty")]
    EmptyClass(LengthClass),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn natural(what: &'static str, value: &BigRational) -> Result<u64, CountingError> {
    let err = || CountingError::NotNatural {
        what,
        value: value.to_string(),
    };
    if !value.is_integer() || value.is_negative() {
        return Err(err());
    }
    value.to_integer().to_u64().ok_or_else(err)
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn weyl_rat(gi: &GroupInvariants) -> BigRational {
    rat(BigInt::from(gi.weyl_order.clone()))
}

/// `∏_{i=2}^{n} (eᵢ − 1)`; empty for `n = 1`.
fn tail_product(ev: &ExponentVector) -> BigInt {
    ev.as_slice()[1..]
        .iter()
        .map(|&e| BigInt::from(e) - 1)
        .product()
}

/// `class_size·h/|W| · ∏_{i≥2}(eᵢ−1)` as an exact rational.
fn product_formula(class_size: usize, gi: &GroupInvariants, ev: &ExponentVector) -> BigRational {
    rat(class_size) * rat(gi.coxeter_number) * rat(tail_product(ev)) / weyl_rat(gi)
}

/// Brute-force count of full-support positive roots: `(total, long, short)`.
pub fn brute_full_support_census(rs: &RootSystem) -> (u64, u64, u64) {
    let (mut long, mut short) = (0, 0);
    for root in rs.positive_roots().iter().filter(|r| r.has_full_support()) {
        match root.length_class() {
            LengthClass::Long => long += 1,
            LengthClass::Short => short += 1,
        }
    }
    (long + short, long, short)
}

/// `n·h/|W| · ∏_{i=2}^{n}(eᵢ − 1)`.
pub fn chapoton_count(gi: &GroupInvariants, ev: &ExponentVector) -> Result<u64, CountingError> {
    natural("n·h/|W|·∏(eᵢ−1)", &product_formula(gi.rank, gi, ev))
}

/// The long/short refinement: `(n_l·h/|W|·∏, n_s·h/|W|·∏)`.
pub fn refined_counts(
    gi: &GroupInvariants,
    ev: &ExponentVector,
) -> Result<(u64, u64), CountingError> {
    Ok((
        natural("n_l·h/|W|·∏(eᵢ−1)", &product_formula(gi.n_long, gi, ev))?,
        natural("n_s·h/|W|·∏(eᵢ−1)", &product_formula(gi.n_short, gi, ev))?,
    ))
}

/// `χ(t) = ∏_{i=1}^{n−1} (t − eᵢ)`, the characteristic polynomial of the
/// Coxeter arrangement restricted to a root hyperplane.
pub fn restriction_charpoly_formula(ev: &ExponentVector) -> IntPolynomial {
    let e = ev.as_slice();
    IntPolynomial::from_roots(e[..e.len() - 1].iter().map(|&x| i64::from(x)))
}

/// `(−1)^{n−1}·χ(−1)`.
fn signed_charpoly_at_minus_one(ev: &ExponentVector) -> BigInt {
    let value = restriction_charpoly_formula(ev).eval_i64(-1);
    if ev.rank().is_multiple_of(2) {
        -value
    } else {
        value
    }
}

/// `[N(W_α):W_α] = (−1)^{n−1}·χ(−1) / class_size` for a simple root `α` in
/// a class of `class_size` simple roots.
pub fn normalizer_index_formula(
    ev: &ExponentVector,
    class_size: usize,
) -> Result<u64, CountingError> {
    if class_size == 0 {
        return Err(CountingError::EmptyClass(LengthClass::Short));
    }
    normalizer_index_rational(ev, class_size)
        .and_then(|idx| natural("(−1)^{n−1}χ(−1)/n_class", &idx))
}

fn normalizer_index_rational(
    ev: &ExponentVector,
    class_size: usize,
) -> Result<BigRational, CountingError> {
    Ok(rat(signed_charpoly_at_minus_one(ev)) / rat(class_size))
}

fn nonempty_class(gi: &GroupInvariants, class: LengthClass) -> Result<usize, CountingError> {
    match gi.class_size(class) {
        0 => Err(CountingError::EmptyClass(class)),
        k => Ok(k),
    }
}

/// `χ(h−1) / [N(W_α):W_α]` for a simple root `α` of the given class.
pub fn sommers_count(
    ev: &ExponentVector,
    gi: &GroupInvariants,
    class: LengthClass,
) -> Result<u64, CountingError> {
    let class_size = nonempty_class(gi, class)?;
    let index = normalizer_index_rational(ev, class_size)?;
    let chi = restriction_charpoly_formula(ev).eval_i64(i64::from(gi.coxeter_number) - 1);
    natural("χ(h−1)/[N(W_α):W_α]", &(rat(chi) / index))
}

/// Checks that the three stages of the simplification agree as exact
/// rationals:
///
/// 1. `χ(h−1) / [N(W_α):W_α]`
/// 2. `n_class·∏_{i<n}(h−1−eᵢ) / ∏_{i<n}(1+eᵢ)`
/// 3. `n_class·h·∏_{i≥2}(eᵢ−1) / |W|`
pub fn proof_chain_check(
    ev: &ExponentVector,
    gi: &GroupInvariants,
    class: LengthClass,
) -> Result<bool, CountingError> {
    let class_size = nonempty_class(gi, class)?;
    let e = ev.as_slice();
    let head = &e[..e.len() - 1];
    let h = BigInt::from(gi.coxeter_number);

    let chi = restriction_charpoly_formula(ev).eval(&(&h - 1));
    let first = rat(chi) / normalizer_index_rational(ev, class_size)?;

    let numer: BigInt = head.iter().map(|&x| &h - 1 - x).product();
    let denom: BigInt = head.iter().map(|&x| BigInt::from(x) + 1).product();
    let second = rat(class_size) * rat(numer) / rat(denom);

    let third = product_formula(class_size, gi, ev);

    Ok(first == second && second == third)
}

/// Full-support census for one root system: brute force, product formulas
/// and the ideal-count expression side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub h: u32,
    #[serde(serialize_with = "serialize_big")]
    pub weyl_order: BigUint,
    pub exponents: String,
    pub n_long: usize,
    pub n_short: usize,
    pub brute_total: u64,
    pub brute_long: u64,
    pub brute_short: u64,
    pub formula_total: u64,
    pub formula_long: u64,
    pub formula_short: u64,
    /// `None` when the class has no simple roots (the expression is undefined).
    pub sommers_long: Option<u64>,
    pub sommers_short: Option<u64>,
    pub agree: bool,
}

impl CensusReport {
    /// Column names in serialization order.
    pub const FIELDS: [&'static str; 16] = [
        "type",
        "rank",
        "h",
        "weylOrder",
        "exponents",
        "nLong",
        "nShort",
        "bruteTotal",
        "bruteLong",
        "bruteShort",
        "formulaTotal",
        "formulaLong",
        "formulaShort",
        "sommersLong",
        "sommersShort",
        "agree",
    ];

    /// Field values as strings, in [`CensusReport::FIELDS`] order. Undefined
    /// Sommers entries are empty strings.
    pub fn values(&self) -> Vec<String> {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.cartan_type.clone(),
            self.rank.to_string(),
            self.h.to_string(),
            self.weyl_order.to_string(),
            self.exponents.clone(),
            self.n_long.to_string(),
            self.n_short.to_string(),
            self.brute_total.to_string(),
            self.brute_long.to_string(),
            self.brute_short.to_string(),
            self.formula_total.to_string(),
            self.formula_long.to_string(),
            self.formula_short.to_string(),
            opt(self.sommers_long),
            opt(self.sommers_short),
            self.agree.to_string(),
        ]
    }
}

fn serialize_big<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&value.to_string()),
    }
}

pub fn full_census(rs: &RootSystem) -> Result<CensusReport, CountingError> {
    let (ev, gi) = invariants::compute(rs)?;
    let (brute_total, brute_long, brute_short) = brute_full_support_census(rs);
    let formula_total = chapoton_count(&gi, &ev)?;
    let (formula_long, formula_short) = refined_counts(&gi, &ev)?;
    let sommers = |class| match sommers_count(&ev, &gi, class) {
        Ok(v) => Ok(Some(v)),
        Err(CountingError::EmptyClass(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let sommers_long = sommers(LengthClass::Long)?;
    let sommers_short = sommers(LengthClass::Short)?;

    let class_agrees = |brute: u64, formula: u64, sommers: Option<u64>| {
        brute == formula && sommers.is_none_or(|s| s == brute)
    };
    let agree = brute_total == formula_total
        && formula_long + formula_short == formula_total
        && class_agrees(brute_long, formula_long, sommers_long)
        && class_agrees(brute_short, formula_short, sommers_short)
        && (sommers_short.is_some() || brute_short == 0);

    Ok(CensusReport {
        cartan_type: rs
            .cartan_type()
            .map(|t| t.to_string())
            .unwrap_or_else(|| "?".to_string()),
        rank: rs.rank(),
        h: gi.coxeter_number,
        weyl_order: gi.weyl_order.clone(),
        exponents: ev.to_string(),
        n_long: gi.n_long,
        n_short: gi.n_short,
        brute_total,
        brute_long,
        brute_short,
        formula_total,
        formula_long,
        formula_short,
        sommers_long,
        sommers_short,
        agree,
    })
}

/// Counts order ideals that contain every simple root and have a unique
/// maximal element, split by the length class of that element.
///
/// This enumerates all ideals and is meant for small ranks.
pub fn ideal_side_census(rs: &RootSystem) -> Result<(u64, u64), CountingError> {
    let poset = RootPoset::new(rs);
    let rank = rs.rank();
    let (mut long, mut short) = (0, 0);
    for ideal in poset.enumerate_ideals() {
        let ideal = ideal?;
        if poset.ideal_members_in_delta(&ideal).len() != rank {
            continue;
        }
        if let Some(top) = poset.unique_maximal_element(&ideal) {
            match rs.root(top).length_class() {
                LengthClass::Long => long += 1,
                LengthClass::Short => short += 1,
            }
        }
    }
    Ok((long, short))
}

/// Checks, by enumerating every order ideal, that `β ↦ I(β)` maps the
/// full-support roots of each length class onto the ideals containing all
/// simple roots whose unique maximal element has that class.
pub fn bijection_check(rs: &RootSystem) -> Result<bool, CountingError> {
    let poset = RootPoset::new(rs);
    let rank = rs.rank();
    let mut from_ideals: [HashSet<OrderIdeal>; 2] = Default::default();
    for ideal in poset.enumerate_ideals() {
        let ideal = ideal?;
        if poset.ideal_members_in_delta(&ideal).len() != rank {
            continue;
        }
        if let Some(top) = poset.unique_maximal_element(&ideal) {
            from_ideals[class_slot(rs.root(top).length_class())].insert(ideal);
        }
    }
    let mut from_roots: [HashSet<OrderIdeal>; 2] = Default::default();
    for (b, root) in rs.positive_roots().iter().enumerate() {
        if root.has_full_support() {
            from_roots[class_slot(root.length_class())].insert(poset.principal_ideal(b));
        }
    }
    let (_, long, short) = brute_full_support_census(rs);
    Ok(from_ideals == from_roots
        && from_roots[0].len() as u64 == long
        && from_roots[1].len() as u64 == short)
}

fn class_slot(class: LengthClass) -> usize {
    match class {
        LengthClass::Long => 0,
        LengthClass::Short => 1,
    }
}
