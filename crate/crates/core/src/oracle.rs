//! Independent computations of the two inputs the counting identities borrow
//! from the literature: the normalizer index of a rank-one parabolic, computed
//! from the explicit Weyl group, and the characteristic polynomial of the
//! restricted Coxeter arrangement, computed from its intersection poset.
//!
//! Everything here is exact and intended for small ranks.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::cartan::{RootSystem, SignedRoot};
use crate::counting::IntPolynomial;
use crate::exact;
use crate::invariants::{self, InvariantError};

pub const DEFAULT_GROUP_CAP: u64 = 10_000;
pub const MAX_HYPERPLANES: usize = 64;
pub const MAX_DIMENSION: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("Weyl group has order {required}, above the cap of {cap}; raise the cap to at least {required}")]
    GroupCap { required: BigUint, cap: u64 },
    #[error("arrangement with {hyperplanes} hyperplanes in dimension {dimension} exceeds the limits ({MAX_HYPERPLANES} hyperplanes, dimension {MAX_DIMENSION})")]
    ArrangementTooLarge {
        hyperplanes: usize,
        dimension: usize,
    },
    #[error("simple root index {index} out of range for rank {rank}")]
    SimpleIndex { index: usize, rank: usize },
    #[error("hyperplane normal has length {got}, expected {expected}")]
    Dimension { got: usize, expected: usize },
    #[error(transparent)]
    Invariants(#[from] InvariantError),
}

/// A Weyl group element, recorded by where it sends each positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylGroupElement {
    images: Vec<SignedRoot>,
}

impl WeylGroupElement {
    pub fn identity(size: usize) -> Self {
        WeylGroupElement {
            images: (0..size).map(SignedRoot::positive).collect(),
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        WeylGroupElement {
            images: (0..rs.len()).map(|b| rs.reflect_root(i, b)).collect(),
        }
    }

    pub fn apply(&self, root: SignedRoot) -> SignedRoot {
        let image = self.images[root.index];
        if root.negative {
            image.negate()
        } else {
            image
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylGroupElement) -> WeylGroupElement {
        WeylGroupElement {
            images: other.images.iter().map(|&r| self.apply(r)).collect(),
        }
    }

    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, r)| r.index == i && !r.negative)
    }
}

/// Breadth-first closure of the simple reflections. Elements appear in BFS
/// order starting from the identity.
pub fn generate_weyl_group(
    rs: &RootSystem,
    cap: u64,
) -> Result<Vec<WeylGroupElement>, OracleError> {
    let (ev, _) = invariants::compute(rs)?;
    let required = invariants::weyl_order(&ev);
    if required > BigUint::from(cap) {
        return Err(OracleError::GroupCap { required, cap });
    }
    let gens: Vec<WeylGroupElement> = (0..rs.rank())
        .map(|i| WeylGroupElement::simple_reflection(rs, i))
        .collect();
    let identity = WeylGroupElement::identity(rs.len());
    let mut seen: HashSet<WeylGroupElement> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let next = w.compose(s);
            if seen.insert(next.clone()) {
                if elements.len() as u64 >= cap {
                    return Err(OracleError::GroupCap {
                        required: BigUint::from(cap + 1),
                        cap,
                    });
                }
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(elements)
}

/// `|N| / 2` where `N = {w : w(αᵢ) = ±αᵢ}`, the normalizer of `{e, sᵢ}`.
pub fn normalizer_index_direct(
    group: &[WeylGroupElement],
    rs: &RootSystem,
    simple: usize,
) -> Result<u64, OracleError> {
    check_simple(rs, simple)?;
    let stabilizer = group
        .iter()
        .filter(|w| w.images[simple].index == simple)
        .count() as u64;
    Ok(stabilizer / 2)
}

fn check_simple(rs: &RootSystem, simple: usize) -> Result<(), OracleError> {
    if simple >= rs.rank() {
        return Err(OracleError::SimpleIndex {
            index: simple,
            rank: rs.rank(),
        });
    }
    Ok(())
}

/// A central hyperplane arrangement, each hyperplane given by a primitive
/// integer normal (a linear functional) with positive leading entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dimension: usize,
    normals: Vec<Vec<BigInt>>,
}

impl Arrangement {
    /// Drops zero normals and normals parallel to an earlier one.
    pub fn new(dimension: usize, normals: Vec<Vec<BigInt>>) -> Result<Self, OracleError> {
        let mut canonical: Vec<Vec<BigInt>> = Vec::new();
        for normal in normals {
            if normal.len() != dimension {
                return Err(OracleError::Dimension {
                    got: normal.len(),
                    expected: dimension,
                });
            }
            if let Some(p) = exact::primitive(&normal) {
                if !canonical.contains(&p) {
                    canonical.push(p);
                }
            }
        }
        Ok(Arrangement {
            dimension,
            normals: canonical,
        })
    }

    pub fn from_i64(dimension: usize, normals: &[&[i64]]) -> Result<Self, OracleError> {
        Self::new(
            dimension,
            normals
                .iter()
                .map(|n| n.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

/// The Coxeter arrangement `{β⊥ : β ∈ Φ⁺}` restricted to `αᵢ⊥`.
///
/// Vectors are kept in simple-root coordinates with the Gram matrix `D·A`
/// carrying the form, so `β⊥` is the kernel of the integer functional
/// `x ↦ (β, x)`. The hyperplane `αᵢ⊥` is parametrized by an integer kernel
/// basis `K`, and `β⊥ ∩ αᵢ⊥` becomes the functional `Kᵀ·(Gβ)` on it.
pub fn restricted_arrangement(rs: &RootSystem, simple: usize) -> Result<Arrangement, OracleError> {
    check_simple(rs, simple)?;
    let n = rs.rank();
    let gram = rs.cartan_matrix().gram();
    let functional = |coeffs: &[u32]| -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|k| i64::from(coeffs[k]) * gram[k][j]).sum())
            .collect()
    };
    let alpha = functional(rs.root(simple).coeffs());
    // Kernel basis of alpha: f_i·e_j − f_j·e_i for j ≠ i; f_i = 2dᵢ ≠ 0.
    let kernel: Vec<Vec<i64>> = (0..n)
        .filter(|&j| j != simple)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[j] = alpha[simple];
            v[simple] = -alpha[j];
            v
        })
        .collect();
    let normals = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|&(b, _)| b != simple)
        .map(|(_, root)| {
            let f = functional(root.coeffs());
            kernel
                .iter()
                .map(|k| BigInt::from(k.iter().zip(&f).map(|(a, b)| a * b).sum::<i64>()))
                .collect()
        })
        .collect();
    Arrangement::new(n - 1, normals)
}

/// `χ(t) = Σ_X μ(X)·t^{dim X}` over the intersection poset.
///
/// Each flat `X` is keyed by the canonical basis of the span of the normals
/// of the hyperplanes containing it. Flats are built rank by rank, and
/// `μ(X) = −Σ_{Y ⊋ X} μ(Y)`.
pub fn characteristic_polynomial(arr: &Arrangement) -> Result<IntPolynomial, OracleError> {
    if arr.len() > MAX_HYPERPLANES || arr.dimension() > MAX_DIMENSION {
        return Err(OracleError::ArrangementTooLarge {
            hyperplanes: arr.len(),
            dimension: arr.dimension(),
        });
    }
    type Flat = Vec<Vec<BigInt>>;
    let d = arr.dimension();

    let mut levels: Vec<Vec<Flat>> = vec![vec![Vec::new()]];
    loop {
        let mut next: Vec<Flat> = Vec::new();
        let mut seen: HashSet<Flat> = HashSet::new();
        for flat in levels.last().expect("nonempty") {
            for normal in arr.normals() {
                let mut rows = flat.clone();
                rows.push(normal.clone());
                let span = exact::canonical_basis(&rows);
                if span.len() == flat.len() + 1 && seen.insert(span.clone()) {
                    next.push(span);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    let contains = |big: &Flat, small: &Flat| -> bool {
        let mut rows = big.clone();
        rows.extend(small.iter().cloned());
        exact::rank(&rows) == big.len()
    };

    let mut mobius: HashMap<&Flat, BigInt> = HashMap::new();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for (rank, level) in levels.iter().enumerate() {
        for flat in level {
            let mu = if rank == 0 {
                BigInt::from(1)
            } else {
                let above: BigInt = levels[..rank]
                    .iter()
                    .flatten()
                    .filter(|y| contains(flat, y))
                    .map(|y| mobius[y].clone())
                    .sum();
                -above
            };
            coeffs[d - rank] += &mu;
            mobius.insert(flat, mu);
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Whitney's subset expansion `χ(t) = Σ_S (−1)^{|S|} t^{d − rank S}`. This is
/// exponential in the number of hyperplanes and exists as a cross-check.
pub fn characteristic_polynomial_whitney(arr: &Arrangement) -> IntPolynomial {
    let m = arr.len();
    assert!(m <= 20, "subset expansion is only for small arrangements");
    let d = arr.dimension();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for mask in 0u32..(1 << m) {
        let rows: Vec<Vec<BigInt>> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| arr.normals()[i].clone())
            .collect();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[d - exact::rank(&rows)] += sign;
    }
    IntPolynomial::new(coeffs)
}

/// Convenience: the normalizer index of every simple root, via one group
/// generation.
pub fn normalizer_indices(rs: &RootSystem, cap: u64) -> Result<Vec<u64>, OracleError> {
    let group = generate_weyl_group(rs, cap)?;
    (0..rs.rank())
        .map(|i| normalizer_index_direct(&group, rs, i))
        .collect()
}

pub fn group_order(group: &[WeylGroupElement]) -> u64 {
    group.len().to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{admissible_types, CartanType};
    use crate::counting::restriction_charpoly_formula;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse::<CartanType>().unwrap())
    }

    #[test]
    fn group_orders() {
        assert_eq!(
            generate_weyl_group(&rs("A2"), DEFAULT_GROUP_CAP)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            generate_weyl_group(&rs("B3"), DEFAULT_GROUP_CAP)
                .unwrap()
                .len(),
            48
        );
        assert_eq!(
            generate_weyl_group(&rs("F4"), DEFAULT_GROUP_CAP)
                .unwrap()
                .len(),
            1152
        );
    }

    #[test]
    fn group_cap_reports_required_order() {
        let err = generate_weyl_group(&rs("E6"), DEFAULT_GROUP_CAP).unwrap_err();
        assert_eq!(
            err,
            OracleError::GroupCap {
                required: BigUint::from(51840u32),
                cap: DEFAULT_GROUP_CAP
            }
        );
        assert!(err.to_string().contains("51840"));
    }

    #[test]
    fn group_is_closed_under_composition() {
        let b3 = rs("B3");
        let group = generate_weyl_group(&b3, DEFAULT_GROUP_CAP).unwrap();
        let set: HashSet<_> = group.iter().cloned().collect();
        for a in group.iter().step_by(5) {
            for b in &group {
                assert!(set.contains(&a.compose(b)));
            }
        }
        assert!(group[0].is_identity());
        let s = WeylGroupElement::simple_reflection(&b3, 2);
        assert!(s.compose(&s).is_identity());
    }

    #[test]
    fn normalizer_examples() {
        let a2 = rs("A2");
        let g = generate_weyl_group(&a2, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(normalizer_index_direct(&g, &a2, 0).unwrap(), 1);

        let b3 = rs("B3");
        let g = generate_weyl_group(&b3, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(normalizer_index_direct(&g, &b3, 0).unwrap(), 4);
        assert_eq!(normalizer_index_direct(&g, &b3, 2).unwrap(), 8);
        assert!(normalizer_index_direct(&g, &b3, 3).is_err());

        let g2 = rs("G2");
        let g = generate_weyl_group(&g2, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(normalizer_index_direct(&g, &g2, 1).unwrap(), 2);
    }

    #[test]
    fn restricted_arrangement_sizes() {
        let a2 = rs("A2");
        for i in 0..2 {
            let arr = restricted_arrangement(&a2, i).unwrap();
            assert_eq!((arr.dimension(), arr.len()), (1, 1));
        }
        let b3 = rs("B3");
        for i in [0, 2] {
            let arr = restricted_arrangement(&b3, i).unwrap();
            assert_eq!((arr.dimension(), arr.len()), (2, 4), "B3 at α{}", i + 1);
        }
    }

    #[test]
    fn charpoly_examples() {
        let empty = Arrangement::new(3, vec![]).unwrap();
        assert_eq!(
            characteristic_polynomial(&empty).unwrap(),
            IntPolynomial::from_i64(&[0, 0, 0, 1])
        );
        let b2 = Arrangement::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        assert_eq!(
            characteristic_polynomial(&b2).unwrap(),
            IntPolynomial::from_i64(&[3, -4, 1])
        );
        let b3 = restricted_arrangement(&rs("B3"), 0).unwrap();
        assert_eq!(
            characteristic_polynomial(&b3).unwrap(),
            IntPolynomial::from_i64(&[3, -4, 1])
        );
    }

    #[test]
    fn arrangement_dedup_and_limits() {
        let arr = Arrangement::from_i64(2, &[&[2, 4], &[-1, -2], &[0, 0], &[1, 0]]).unwrap();
        assert_eq!(arr.len(), 2);
        assert!(Arrangement::from_i64(2, &[&[1, 0, 0]]).is_err());
        let big = Arrangement::new(6, vec![]).unwrap();
        assert!(matches!(
            characteristic_polynomial(&big),
            Err(OracleError::ArrangementTooLarge { .. })
        ));
    }

    #[test]
    fn mobius_agrees_with_whitney() {
        let generic = Arrangement::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]],
        )
        .unwrap();
        assert_eq!(
            characteristic_polynomial(&generic).unwrap(),
            characteristic_polynomial_whitney(&generic)
        );
        for t in ["A3", "B3", "C3", "A4", "B4", "D4"] {
            let rs = rs(t);
            for i in 0..rs.rank() {
                let arr = restricted_arrangement(&rs, i).unwrap();
                if arr.len() <= 16 {
                    assert_eq!(
                        characteristic_polynomial(&arr).unwrap(),
                        characteristic_polynomial_whitney(&arr),
                        "{t} at α{}",
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn restricted_charpoly_matches_formula_through_rank_four() {
        for t in admissible_types(4) {
            let rs = RootSystem::from_type(t);
            let (ev, _) = invariants::compute(&rs).unwrap();
            let expected = restriction_charpoly_formula(&ev);
            for i in 0..rs.rank() {
                let chi =
                    characteristic_polynomial(&restricted_arrangement(&rs, i).unwrap()).unwrap();
                assert_eq!(chi, expected, "{t} at α{}", i + 1);
                if rs.rank() > 1 {
                    assert!(chi.eval_i64(1).is_zero());
                }
            }
        }
    }
}
