//! The root poset on `Φ⁺`: `β ≤ γ` iff `γ − β` has nonnegative simple-root
//! coefficients.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::cartan::{Root, RootSystem};

pub const DEFAULT_IDEAL_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("order-ideal enumeration exceeded the cap of {cap} ideals")]
    IdealCap { cap: usize },
}

/// Componentwise comparison of coefficient vectors.
pub fn leq(beta: &Root, gamma: &Root) -> bool {
    beta.coeffs()
        .iter()
        .zip(gamma.coeffs())
        .all(|(b, g)| b <= g)
}

/// A downward-closed set of positive roots, as a bitset over root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: FixedBitSet,
}

impl OrderIdeal {
    pub fn empty(size: usize) -> Self {
        OrderIdeal {
            members: FixedBitSet::with_capacity(size),
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn as_bitset(&self) -> &FixedBitSet {
        &self.members
    }

    /// The simple-root indices in the ideal. Simple roots occupy the first
    /// `rank` positive-root indices.
    pub fn members_in_delta(&self, rank: usize) -> BTreeSet<usize> {
        self.members.ones().take_while(|&i| i < rank).collect()
    }
}

/// `Φ⁺` with its cover relations and principal ideals precomputed.
#[derive(Debug, Clone)]
pub struct RootPoset<'a> {
    rs: &'a RootSystem,
    // covers[i]: indices immediately above root i.
    covers: Vec<Vec<usize>>,
    // covered_by[i]: indices immediately below root i.
    lower_covers: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
}

impl<'a> RootPoset<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let n = rs.len();
        let roots = rs.positive_roots();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (g, set) in below.iter_mut().enumerate() {
            for b in 0..n {
                if leq(&roots[b], &roots[g]) {
                    set.insert(b);
                }
            }
        }
        // Transitive reduction: b ⋖ g iff b < g and nothing strictly between.
        let mut covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for g in 0..n {
            for b in below[g].ones() {
                if b == g {
                    continue;
                }
                let between = below[g]
                    .ones()
                    .any(|d| d != b && d != g && below[d].contains(b));
                if !between {
                    covers[b].push(g);
                    lower_covers[g].push(b);
                }
            }
        }
        RootPoset {
            rs,
            covers,
            lower_covers,
            below,
        }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn len(&self) -> usize {
        self.rs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rs.is_empty()
    }

    pub fn leq_index(&self, beta: usize, gamma: usize) -> bool {
        self.below[gamma].contains(beta)
    }

    pub fn covers(&self, index: usize) -> &[usize] {
        &self.covers[index]
    }

    pub fn lower_covers(&self, index: usize) -> &[usize] {
        &self.lower_covers[index]
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .covers
            .iter()
            .enumerate()
            .flat_map(|(b, ups)| ups.iter().map(move |&g| (b, g)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// `I(β) = {γ : γ ≤ β}`.
    pub fn principal_ideal(&self, index: usize) -> OrderIdeal {
        OrderIdeal {
            members: self.below[index].clone(),
        }
    }

    pub fn ideal_members_in_delta(&self, ideal: &OrderIdeal) -> BTreeSet<usize> {
        ideal.members_in_delta(self.rs.rank())
    }

    pub fn is_order_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|g| self.below[g].is_subset(set))
    }

    pub fn maximal_elements(&self, ideal: &OrderIdeal) -> Vec<usize> {
        ideal
            .members()
            .filter(|&m| !self.covers[m].iter().any(|&up| ideal.contains(up)))
            .collect()
    }

    /// The maximal element of `ideal` when there is exactly one.
    pub fn unique_maximal_element(&self, ideal: &OrderIdeal) -> Option<usize> {
        match self.maximal_elements(ideal).as_slice() {
            &[single] => Some(single),
            _ => None,
        }
    }

    pub fn enumerate_ideals(&self) -> IdealIter<'_, 'a> {
        self.enumerate_ideals_capped(DEFAULT_IDEAL_CAP)
    }

    pub fn enumerate_ideals_capped(&self, cap: usize) -> IdealIter<'_, 'a> {
        IdealIter {
            poset: self,
            stack: vec![(0, OrderIdeal::empty(self.len()))],
            emitted: 0,
            cap,
            exhausted: false,
        }
    }
}

/// Depth-first enumeration of order ideals. Roots are decided in index order
/// (a linear extension), so a root may join the ideal exactly when all its
/// lower covers already have. Each ideal is produced once; the order is
/// deterministic.
pub struct IdealIter<'p, 'a> {
    poset: &'p RootPoset<'a>,
    stack: Vec<(usize, OrderIdeal)>,
    emitted: usize,
    cap: usize,
    exhausted: bool,
}

impl Iterator for IdealIter<'_, '_> {
    type Item = Result<OrderIdeal, PosetError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let n = self.poset.len();
        while let Some((pos, ideal)) = self.stack.pop() {
            if pos == n {
                if self.emitted == self.cap {
                    self.exhausted = true;
                    self.stack.clear();
                    return Some(Err(PosetError::IdealCap { cap: self.cap }));
                }
                self.emitted += 1;
                return Some(Ok(ideal));
            }
            let can_add = self.poset.lower_covers[pos]
                .iter()
                .all(|&b| ideal.contains(b));
            if can_add {
                let mut with = ideal.clone();
                with.members.insert(pos);
                self.stack.push((pos + 1, with));
            }
            self.stack.push((pos + 1, ideal));
        }
        self.exhausted = true;
        None
    }
}
