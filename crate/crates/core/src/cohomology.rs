//! t-support of `H^j(n∩k, V(delta))` and the character identity behind it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multiset::WeightMultiset;
use crate::pairspec::ReductivePair;
use crate::rational::Weight;
use crate::rootsys::{character, weyl_group, RootSystem, WeylElement};

/// Weights of `H^j(n∩k, V(delta))`, by degree `j`; every weight has multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantSupport {
    pub by_degree: BTreeMap<usize, WeightMultiset>,
}

impl KostantSupport {
    pub fn degree(&self, j: usize) -> WeightMultiset {
        self.by_degree.get(&j).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> u64 {
        self.by_degree.values().map(WeightMultiset::total).sum()
    }

    /// `sum_j (-1)^j dim H^j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_degree.iter().map(|(j, m)| if j % 2 == 0 { m.total() as i64 } else { -(m.total() as i64) }).sum()
    }
}

/// `{ w(delta + rho) - rho : l(w) = j }` for each `j`, over the Weyl group of k.
pub fn kostant_support(pair: &ReductivePair, delta: &Weight) -> Result<KostantSupport> {
    pair.check_k_dominant(delta)?;
    Ok(support_from(&pair.weyl_k, &pair.rho_k, delta))
}

/// Same as [`kostant_support`] for a bare root system.
pub fn kostant_support_for(rs: &RootSystem, delta: &Weight) -> Result<KostantSupport> {
    rs.check_dominant_integral(delta)?;
    Ok(support_from(&weyl_group(rs)?, &rs.rho(), delta))
}

fn support_from(weyl: &[WeylElement], rho: &Weight, delta: &Weight) -> KostantSupport {
    let shifted = delta + rho;
    let mut by_degree: BTreeMap<usize, WeightMultiset> = BTreeMap::new();
    for w in weyl {
        by_degree.entry(w.length()).or_default().insert(&w.apply(&shifted) - rho, 1);
    }
    KostantSupport { by_degree }
}

/// Element of the group ring of the weight lattice.
pub type Laurent = BTreeMap<Weight, i64>;

fn add_term(p: &mut Laurent, w: Weight, c: i64) {
    let e = p.entry(w.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&w);
    }
}

pub fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (x, cx) in a {
        for (y, cy) in b {
            add_term(&mut out, x + y, cx * cy);
        }
    }
    out
}

/// `sum_w (-1)^{l(w)} e^{w(v) - rho}`.
pub fn alternating_sum(weyl: &[WeylElement], rho: &Weight, v: &Weight) -> Laurent {
    let mut out = Laurent::new();
    for w in weyl {
        add_term(&mut out, &w.apply(v) - rho, w.sign());
    }
    out
}

/// Largest k rank accepted by [`character_identity_check`].
pub const CHARACTER_CHECK_MAX_RANK: usize = 2;

/// Checks `sum_w (-1)^{l(w)} e^{w(delta+rho)-rho} = ch V(delta) * prod_{alpha>0} (1 - e^{-alpha})`
/// exactly, with `ch V(delta)` from Freudenthal's formula.
pub fn character_identity_check(k: &RootSystem, delta: &Weight) -> Result<bool> {
    if k.rank() > CHARACTER_CHECK_MAX_RANK {
        return Err(Error::Guard(format!(
            "character identity check limited to rank <= {CHARACTER_CHECK_MAX_RANK}, got {}",
            k.rank()
        )));
    }
    k.check_dominant_integral(delta)?;
    let weyl = weyl_group(k)?;
    let rho = k.rho();
    let lhs = alternating_sum(&weyl, &rho, &(delta + &rho));

    let ch: Laurent = character(k, delta)?.into_iter().map(|(w, m)| (w, m as i64)).collect();
    let mut rhs = ch;
    for alpha in k.positive_roots() {
        let factor: Laurent = [(Weight::zero(k.ambient_dim()), 1), (-alpha, -1)].into_iter().collect();
        rhs = laurent_mul(&rhs, &factor);
    }
    Ok(lhs == rhs)
}

/// Weyl dimension and the sum of Freudenthal multiplicities, for cross-checking.
pub fn dimension_cross_check(k: &RootSystem, delta: &Weight) -> Result<(u64, u64)> {
    let dim = crate::rootsys::weyl_dim(k, delta)?;
    let total = character(k, delta)?.values().sum();
    Ok((dim, total))
}
