//! Finite multisets of weights.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::{qi, Weight, Q};

/// Finite map from weights to strictly positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity (dimension of the underlying weight module).
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct weights, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w.clone(), m);
        }
        out
    }

    /// `self - other`, or the first weight where the difference would be negative.
    pub fn difference(&self, other: &Self) -> Result<Self, (Weight, u64, u64)> {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            let have = out.mult(w);
            if have < m {
                return Err((w.clone(), m, have));
            }
            if have == m {
                out.entries.remove(w);
            } else {
                out.entries.insert(w.clone(), have - m);
            }
        }
        Ok(out)
    }

    pub fn map(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        let mut out = Self::new();
        for (w, m) in self.iter() {
            out.insert(f(w), m);
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.map(|w| -w)
    }

    /// `sum_d f(d) d`; `dim` is needed for the empty multiset.
    pub fn weighted_sum(&self, dim: usize) -> Weight {
        let mut acc = Weight::zero(dim);
        for (w, m) in self.iter() {
            acc = acc.add_scaled(&qi(m as i64), w);
        }
        acc
    }

    /// Half-sum `rho_f = 1/2 sum_d f(d) d`.
    pub fn rho(&self, dim: usize) -> Weight {
        self.weighted_sum(dim).scale(&Q::new(1.into(), 2.into()))
    }

    pub fn zero_mult(&self) -> u64 {
        self.entries.iter().find(|(w, _)| w.is_zero()).map_or(0, |(_, &m)| m)
    }

    pub fn without_zero(&self) -> Self {
        let mut out = self.clone();
        out.entries.retain(|w, _| !w.is_zero());
        out
    }

    /// Every weight repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<Weight> {
        self.iter().flat_map(|(w, m)| std::iter::repeat_n(w.clone(), m as usize)).collect()
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut out = Self::new();
        for w in iter {
            out.insert(w, 1);
        }
        out
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{w}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}
