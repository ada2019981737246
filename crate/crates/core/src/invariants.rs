//! Exponents, Coxeter number, Weyl group order and the long/short census,
//! all derived from the generated roots.

use num_bigint::BigUint;
use thiserror::Error;

use crate::cartan::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("root heights do not form a partition: {0:?}")]
    HeightsNotPartition(Vec<usize>),
    #[error("exponent vector {exponents:?} violates {what}")]
    Exponents { exponents: Vec<u32>, what: String },
    #[error("Coxeter number {from_exponents} from exponents disagrees with highest-root height + 1 = {from_height}")]
    CoxeterMismatch {
        from_exponents: u32,
        from_height: u32,
    },
}

/// Exponents `e₁ ≤ … ≤ eₙ`, checked for `e₁ = 1` and duality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(mut exponents: Vec<u32>) -> Result<Self, InvariantError> {
        exponents.sort_unstable();
        let bad = |what: &str| InvariantError::Exponents {
            exponents: exponents.clone(),
            what: what.to_string(),
        };
        if exponents.is_empty() {
            return Err(bad("nonemptiness"));
        }
        if exponents[0] != 1 {
            return Err(bad("e₁ = 1"));
        }
        let n = exponents.len();
        let h = exponents[n - 1] + 1;
        if (0..n).any(|i| exponents[i] + exponents[n - 1 - i] != h) {
            return Err(bad("duality h − eᵢ = e₍ₙ₊₁₋ᵢ₎"));
        }
        Ok(ExponentVector(exponents))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn largest(&self) -> u32 {
        *self.0.last().expect("nonempty by construction")
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvariants {
    pub rank: usize,
    pub coxeter_number: u32,
    pub weyl_order: BigUint,
    pub n_long: usize,
    pub n_short: usize,
}

impl GroupInvariants {
    pub fn from_root_system(rs: &RootSystem, ev: &ExponentVector) -> Result<Self, InvariantError> {
        let (n_long, n_short) = simple_length_census(rs);
        Ok(GroupInvariants {
            rank: rs.rank(),
            coxeter_number: coxeter_number_checked(ev, rs)?,
            weyl_order: weyl_order(ev),
            n_long,
            n_short,
        })
    }

    pub fn class_size(&self, class: crate::cartan::LengthClass) -> usize {
        match class {
            crate::cartan::LengthClass::Long => self.n_long,
            crate::cartan::LengthClass::Short => self.n_short,
        }
    }
}

/// Number of positive roots at each height `1, 2, …`.
pub fn height_partition(rs: &RootSystem) -> Vec<usize> {
    let top = rs.highest_root().height() as usize;
    let mut counts = vec![0usize; top];
    for r in rs.positive_roots() {
        counts[r.height() as usize - 1] += 1;
    }
    counts
}

/// The exponents are the conjugate of the height partition.
pub fn exponents(rs: &RootSystem) -> Result<ExponentVector, InvariantError> {
    let heights = height_partition(rs);
    if heights.windows(2).any(|w| w[0] < w[1]) || heights.contains(&0) {
        return Err(InvariantError::HeightsNotPartition(heights));
    }
    let parts = heights[0];
    let conjugate: Vec<u32> = (1..=parts)
        .map(|j| heights.iter().filter(|&&count| count >= j).count() as u32)
        .collect();
    let ev = ExponentVector::new(conjugate)?;
    if ev.rank() != rs.rank() || ev.sum() != rs.len() as u64 {
        return Err(InvariantError::Exponents {
            exponents: ev.0,
            what: "Σ eᵢ = |Φ⁺| with n parts".to_string(),
        });
    }
    Ok(ev)
}

pub fn coxeter_number(ev: &ExponentVector) -> u32 {
    ev.largest() + 1
}

/// `eₙ + 1`, cross-checked against `1 + height(highest root)`.
pub fn coxeter_number_checked(ev: &ExponentVector, rs: &RootSystem) -> Result<u32, InvariantError> {
    let from_exponents = coxeter_number(ev);
    let from_height = rs.highest_root().height() + 1;
    if from_exponents != from_height {
        return Err(InvariantError::CoxeterMismatch {
            from_exponents,
            from_height,
        });
    }
    Ok(from_exponents)
}

/// `|W| = ∏ (1 + eᵢ)`.
pub fn weyl_order(ev: &ExponentVector) -> BigUint {
    ev.as_slice()
        .iter()
        .map(|&e| BigUint::from(e + 1))
        .product()
}

pub fn simple_length_census(rs: &RootSystem) -> (usize, usize) {
    rs.simple_length_census()
}

/// Exponents and group invariants in one pass.
pub fn compute(rs: &RootSystem) -> Result<(ExponentVector, GroupInvariants), InvariantError> {
    let ev = exponents(rs)?;
    let gi = GroupInvariants::from_root_system(rs, &ev)?;
    Ok((ev, gi))
}
