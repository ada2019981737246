//! Cartan types, their integer Cartan matrices, and positive-root generation.
//!
//! Simple roots follow Bourbaki numbering. Indices are 0-based in the API, so
//! Bourbaki's `α₁` is index `0`.
//!
//! The Cartan convention is `a[i][j] = 2(αᵢ,αⱼ)/(αᵢ,αᵢ)`. With symmetrizers
//! `d[i] = (αᵢ,αᵢ)/2`, the invariant form on the simple basis is
//! `(αᵢ,αⱼ) = d[i]·a[i][j]`, and the simple reflection `sᵢ` sends a
//! coefficient vector `c` to `c − (Σⱼ a[i][j]·c[j])·eᵢ`.
//!
//! | type | long simple roots | short simple roots | d |
//! |------|-------------------|--------------------|---|
//! | Bₙ   | α₁ … αₙ₋₁          | αₙ                  | (2,…,2,1) |
//! | Cₙ   | αₙ                 | α₁ … αₙ₋₁            | (1,…,1,2) |
//! | F₄   | α₁, α₂             | α₃, α₄               | (2,2,1,1) |
//! | G₂   | α₂                 | α₁                   | (1,3) |
//!
//! Dₙ attaches αₙ to αₙ₋₂. Eₙ has the chain α₁–α₃–α₄–…–αₙ with α₂ attached
//! to α₄.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("cannot parse Cartan type {0:?}: expected a family letter A-G followed by a rank, e.g. \"B4\"")]
    Parse(String),
    #[error("{family}{rank} is not an admissible type: {reason}")]
    Inadmissible {
        family: Family,
        rank: usize,
        reason: String,
    },
    #[error("malformed Cartan matrix: {0}")]
    Malformed(String),
    #[error(
        "root generation exceeded the height cap {cap}; the Cartan matrix is not of finite type"
    )]
    HeightCap { cap: u32 },
    #[error("generated roots have no unique highest root; the Cartan matrix is not irreducible")]
    NoHighestRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_admissible_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An irreducible finite crystallographic type, one per isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CartanError> {
        if family.is_admissible_rank(rank) {
            return Ok(CartanType { family, rank });
        }
        let reason = match (family, rank) {
            (_, 0) => "rank must be positive".to_string(),
            (Family::B, 1) | (Family::C, 1) => "isomorphic to A1; use A1".to_string(),
            (Family::C, 2) => "isomorphic to B2; use B2".to_string(),
            (Family::D, 2) => "D2 = A1×A1 is reducible".to_string(),
            (Family::D, 3) => "isomorphic to A3; use A3".to_string(),
            (Family::D, 1) => "D1 is not a root system".to_string(),
            (Family::E, _) => "type E exists only in ranks 6, 7, 8".to_string(),
            (Family::F, _) => "type F exists only in rank 4".to_string(),
            (Family::G, _) => "type G exists only in rank 2".to_string(),
            _ => "rank out of range".to_string(),
        };
        Err(CartanError::Inadmissible {
            family,
            rank,
            reason,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| CartanError::Parse(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CartanError::Parse(s.to_string()));
        }
        let rank = digits
            .parse::<usize>()
            .map_err(|_| CartanError::Parse(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Every admissible type of rank at most `max_rank`, ordered by family
/// (A, B, C, D, E, F, G) and then by ascending rank.
pub fn admissible_types(max_rank: usize) -> Vec<CartanType> {
    Family::ALL
        .iter()
        .flat_map(|&family| {
            (1..=max_rank)
                .filter(move |&rank| family.is_admissible_rank(rank))
                .map(move |rank| CartanType { family, rank })
        })
        .collect()
}

/// Integer Cartan matrix together with its symmetrizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    cartan_type: Option<CartanType>,
}

impl CartanMatrix {
    /// Checks the generalized-Cartan-matrix axioms and symmetrizability.
    ///
    /// Positive definiteness is not required here; see
    /// [`CartanMatrix::is_positive_definite`]. Root generation rejects
    /// non-finite matrices through its height cap.
    pub fn new(entries: Vec<Vec<i64>>, symmetrizers: Vec<i64>) -> Result<Self, CartanError> {
        let n = entries.len();
        if n == 0 {
            return Err(CartanError::Malformed("empty matrix".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(CartanError::Malformed("matrix is not square".into()));
        }
        if symmetrizers.len() != n {
            return Err(CartanError::Malformed(format!(
                "expected {n} symmetrizers, got {}",
                symmetrizers.len()
            )));
        }
        if symmetrizers.iter().any(|&d| d <= 0) {
            return Err(CartanError::Malformed(
                "symmetrizers must be positive".into(),
            ));
        }
        if symmetrizers.iter().min() != Some(&1) {
            return Err(CartanError::Malformed(
                "smallest symmetrizer must be 1".into(),
            ));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(CartanError::Malformed(format!("a[{i}][{i}] must be 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(CartanError::Malformed(format!("a[{i}][{j}] is positive")));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(CartanError::Malformed(format!(
                        "a[{i}][{j}] and a[{j}][{i}] disagree on being zero"
                    )));
                }
                if symmetrizers[i] * entries[i][j] != symmetrizers[j] * entries[j][i] {
                    return Err(CartanError::Malformed(format!(
                        "d[{i}]·a[{i}][{j}] != d[{j}]·a[{j}][{i}]"
                    )));
                }
            }
        }
        Ok(CartanMatrix {
            entries,
            symmetrizers,
            cartan_type: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_type
    }

    /// The invariant form on simple roots, `(αᵢ,αⱼ) = d[i]·a[i][j]`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        self.symmetrizers[i] * self.entries[i][j]
    }

    /// The symmetrized matrix `D·A` (the Gram matrix of the simple roots).
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.form(i, j)).collect())
            .collect()
    }

    /// `(x,y)` for vectors given in simple-root coordinates.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        x.iter()
            .enumerate()
            .filter(|(_, &xi)| xi != 0)
            .map(|(i, &xi)| {
                let row: i64 = y
                    .iter()
                    .enumerate()
                    .map(|(j, &yj)| self.form(i, j) * yj)
                    .sum();
                xi * row
            })
            .sum()
    }

    /// Sylvester's criterion on the Gram matrix, with exact determinants.
    pub fn is_positive_definite(&self) -> bool {
        let gram = self.gram();
        (1..=self.rank()).all(|k| {
            let minor: Vec<Vec<i64>> = gram[..k].iter().map(|row| row[..k].to_vec()).collect();
            exact::determinant_i64(&minor) > 0.into()
        })
    }

    /// Applies `sᵢ` to a coefficient vector.
    pub fn reflect(&self, i: usize, coeffs: &[i64]) -> Vec<i64> {
        let pairing: i64 = self.entries[i].iter().zip(coeffs).map(|(a, c)| a * c).sum();
        let mut out = coeffs.to_vec();
        out[i] -= pairing;
        out
    }
}

/// The standard Cartan matrix of `ty` in Bourbaki numbering.
pub fn cartan_matrix(ty: CartanType) -> CartanMatrix {
    let n = ty.rank();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut d = vec![1i64; n];
    match ty.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            edges.extend((1..n).map(|i| (i - 1, i)));
        }
        Family::D => {
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((n - 3, n - 1));
        }
        Family::E => {
            edges.push((0, 2));
            edges.push((1, 3));
            edges.extend((3..n).map(|i| (i - 1, i)));
        }
    }
    match ty.family() {
        Family::B => {
            d.iter_mut().take(n - 1).for_each(|x| *x = 2);
        }
        Family::C => d[n - 1] = 2,
        Family::F => d = vec![2, 2, 1, 1],
        Family::G => d = vec![1, 3],
        _ => {}
    }
    // Adjacent simple roots pair to -max(d[i], d[j]) in every finite type.
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &edges {
        let form = -d[i].max(d[j]);
        entries[i][j] = form / d[i];
        entries[j][i] = form / d[j];
    }
    let mut cm = CartanMatrix::new(entries, d).expect("built-in Cartan data is well formed");
    cm.cartan_type = Some(ty);
    cm
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LengthClass {
    Long,
    Short,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthClass::Long => write!(f, "long"),
            LengthClass::Short => write!(f, "short"),
        }
    }
}

/// A positive root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<u32>,
    height: u32,
    norm2: i64,
    length_class: LengthClass,
}

impl Root {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Squared length under the form `D·A`. Only comparisons between roots
    /// are meaningful; the global scale is arbitrary.
    pub fn norm2(&self) -> i64 {
        self.norm2
    }

    pub fn length_class(&self) -> LengthClass {
        self.length_class
    }

    pub fn is_long(&self) -> bool {
        self.length_class == LengthClass::Long
    }

    /// Simple-root indices with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        support(self)
    }

    pub fn has_full_support(&self) -> bool {
        self.coeffs.iter().all(|&c| c != 0)
    }

    fn signed_coeffs(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| i64::from(c)).collect()
    }
}

pub fn support(root: &Root) -> BTreeSet<usize> {
    root.coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect()
}

pub fn length_class(rs: &RootSystem, root: &Root) -> LengthClass {
    if root.norm2 == rs.highest_root().norm2 {
        LengthClass::Long
    } else {
        LengthClass::Short
    }
}

/// A root of `Φ = Φ⁺ ∪ −Φ⁺`, addressed by its positive-root index and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot {
            index,
            negative: false,
        }
    }

    pub fn negate(self) -> Self {
        SignedRoot {
            index: self.index,
            negative: !self.negative,
        }
    }
}

/// The positive roots of a finite irreducible root system.
///
/// Roots are ordered by height, ties broken by reverse lexicographic order on
/// coefficients; the first `rank` entries are therefore `α₁, …, αₙ` in order
/// and the last entry is the highest root.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_matrix: CartanMatrix,
    positive_roots: Vec<Root>,
    highest_root_index: usize,
    lookup: HashMap<Vec<u32>, usize>,
}

impl RootSystem {
    pub fn from_type(ty: CartanType) -> Self {
        generate_positive_roots(&cartan_matrix(ty)).expect("finite types generate finitely")
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_matrix.cartan_type()
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan_matrix
    }

    pub fn rank(&self) -> usize {
        self.cartan_matrix.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive_roots[index]
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.positive_roots[..self.rank()]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root_index
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root_index]
    }

    pub fn index_of(&self, coeffs: &[u32]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    /// Looks up `±β` for a signed coefficient vector.
    pub fn signed_index_of(&self, coeffs: &[i64]) -> Option<SignedRoot> {
        let negative = coeffs.iter().any(|&c| c < 0);
        let abs: Option<Vec<u32>> = coeffs
            .iter()
            .map(|&c| {
                if (c < 0) != negative && c != 0 {
                    None
                } else {
                    u32::try_from(c.abs()).ok()
                }
            })
            .collect();
        let index = self.index_of(&abs?)?;
        Some(SignedRoot { index, negative })
    }

    /// `sᵢ(β)` for the positive root at `index`.
    pub fn reflect_root(&self, simple: usize, index: usize) -> SignedRoot {
        let image = self
            .cartan_matrix
            .reflect(simple, &self.positive_roots[index].signed_coeffs());
        self.signed_index_of(&image)
            .expect("simple reflections permute the roots")
    }

    /// Number of long and short simple roots.
    pub fn simple_length_census(&self) -> (usize, usize) {
        let long = self.simple_roots().iter().filter(|r| r.is_long()).count();
        (long, self.rank() - long)
    }
}

/// Closes the simple roots under simple reflections, keeping positive vectors.
pub fn generate_positive_roots(cm: &CartanMatrix) -> Result<RootSystem, CartanError> {
    let n = cm.rank();
    let max_d = *cm.symmetrizers().iter().max().expect("nonempty");
    let height_cap = u32::try_from(4 * n as i64 * max_d).unwrap_or(u32::MAX);

    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let v = unit(i);
        seen.insert(v.clone(), ());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let image = cm.reflect(i, &beta);
            if image.iter().any(|&c| c < 0) || image.iter().all(|&c| c == 0) {
                continue;
            }
            if seen.contains_key(&image) {
                continue;
            }
            let height: i64 = image.iter().sum();
            if height > i64::from(height_cap) {
                return Err(CartanError::HeightCap { cap: height_cap });
            }
            seen.insert(image.clone(), ());
            queue.push_back(image);
        }
        found.push(beta);
    }

    found.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let top = found.last().expect("at least one simple root").clone();
    let dominated = |v: &Vec<i64>| v.iter().zip(&top).all(|(x, y)| x <= y);
    if !found.iter().all(dominated) {
        return Err(CartanError::NoHighestRoot);
    }
    let top_norm = cm.pairing(&top, &top);

    let positive_roots: Vec<Root> = found
        .iter()
        .map(|v| {
            let norm2 = cm.pairing(v, v);
            Root {
                coeffs: v.iter().map(|&c| c as u32).collect(),
                height: v.iter().sum::<i64>() as u32,
                norm2,
                length_class: if norm2 == top_norm {
                    LengthClass::Long
                } else {
                    LengthClass::Short
                },
            }
        })
        .collect();
    let lookup = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coeffs.clone(), i))
        .collect();
    Ok(RootSystem {
        cartan_matrix: cm.clone(),
        highest_root_index: positive_roots.len() - 1,
        positive_roots,
        lookup,
    })
}
