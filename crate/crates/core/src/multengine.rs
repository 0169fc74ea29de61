//! k-type multiplicities of the fundamental series.
//!
//! For a validated inducing module E the Euler characteristic
//!
//! ```text
//! chi(delta) = sum_j (-1)^j sum_{l(w) = j} dim E * P(w(delta + rho) - rho - omega - 2 rho_perp)
//! ```
//!
//! is computed exactly, where `P(xi)` is the number of monomials of weight
//! `xi` in the symmetric algebra of `n ∩ k^perp` (a vector partition function
//! over the t-weights of `n ∩ k^perp`). E enters only through its t-weight
//! `omega` and its dimension, because t is central in the Levi factor.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::pairspec::ReductivePair;
use crate::parabolic::CompatibleParabolic;
use crate::rational::{fmt_q, qi, Weight, Q};
use crate::rootsys::{weyl_dim, WeylElement};

/// The inducing p-module, as far as the multiplicity formulas see it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EModule {
    /// Highest weight of E as an m-module, in h* (simple-root coordinates of g).
    pub kappa: Weight,
    /// The single t-weight of E.
    pub omega: Weight,
    pub dim_e: u64,
}

/// `mu - 2 rho_perp_n`, the t-weight E must carry.
pub fn required_omega(parab: &CompatibleParabolic, mu: &Weight) -> Weight {
    mu - &parab.rho_n_perp.scale(&qi(2))
}

pub fn validate_e(pair: &ReductivePair, parab: &CompatibleParabolic, mu: &Weight, kappa: &Weight) -> Result<EModule> {
    pair.check_k_dominant(mu)?;
    if kappa.dim() != pair.g.rank() {
        return Err(Error::Shape(format!(
            "kappa {kappa} has {} coordinates, rank(g) = {}",
            kappa.dim(),
            pair.g.rank()
        )));
    }
    let expected = required_omega(parab, mu);
    let omega = pair.restrict_weight(kappa);
    if omega != expected {
        return Err(Error::OmegaMismatch { expected: expected.to_string(), found: omega.to_string() });
    }
    if let Some((i, p)) = parab.levi.dominance_violation(kappa) {
        return Err(Error::NotDominantOnLevi {
            kappa: kappa.to_string(),
            root: parab.levi.simple_roots()[i].to_string(),
            pairing: fmt_q(&p),
        });
    }
    let dim_e = weyl_dim(&parab.levi, kappa)?;
    Ok(EModule { kappa: kappa.clone(), omega, dim_e })
}

/// The preimage of `mu - 2 rho_perp_n` orthogonal to the kernel of restriction.
/// It pairs to zero with every Levi root, so it is always Levi-dominant and E is
/// one-dimensional.
pub fn auto_kappa(pair: &ReductivePair, parab: &CompatibleParabolic, mu: &Weight) -> Result<Weight> {
    let kappa = pair.orthogonal_lift(&required_omega(parab, mu));
    if let Some((i, p)) = parab.levi.dominance_violation(&kappa) {
        return Err(Error::NotDominantOnLevi {
            kappa: format!("{kappa} (automatic choice; pass kappa explicitly)"),
            root: parab.levi.simple_roots()[i].to_string(),
            pairing: fmt_q(&p),
        });
    }
    Ok(kappa)
}

/// Weight-graded partition counts for the symmetric algebra of `n ∩ k^perp`.
///
/// Generators are rescaled to an integer lattice. Termination comes from an
/// integer linear form `phi` that is strictly positive on every generator: a
/// monomial of weight `xi` has degree at most `phi(xi) / min phi(beta)`.
#[derive(Clone, Debug)]
pub struct SymAlgebra {
    distinct: Vec<(Weight, u64)>,
    scaled: Vec<Vec<i64>>,
    /// generator index -> index into `distinct`
    owner: Vec<usize>,
    den: BigInt,
    phi: Vec<i128>,
    dim: usize,
}

impl SymAlgebra {
    pub fn new(parab: &CompatibleParabolic) -> Self {
        let dim = parab.rho_n.dim();
        let distinct: Vec<(Weight, u64)> = parab.n_cap_perp.iter().map(|(w, m)| (w.clone(), m)).collect();
        let den = distinct.iter().fold(BigInt::one(), |acc, (w, _)| num::integer::lcm(acc, w.denominator_lcm()));
        let scale = Q::from_integer(den.clone());
        let mut scaled = Vec::new();
        let mut owner = Vec::new();
        for (idx, (w, m)) in distinct.iter().enumerate() {
            let v: Vec<i64> = w.0.iter().map(|x| (x * &scale).to_integer().to_i64().expect("fits")).collect();
            for _ in 0..*m {
                scaled.push(v.clone());
                owner.push(idx);
            }
        }
        let phi_den = parab.phi_covector.iter().fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
        let phi_scale = Q::from_integer(phi_den);
        let phi: Vec<i128> =
            parab.phi_covector.iter().map(|x| (x * &phi_scale).to_integer().to_i128().expect("fits")).collect();
        let sym = SymAlgebra { distinct, scaled, owner, den, phi, dim };
        assert!(sym.scaled.iter().all(|g| sym.phi_of(g) > 0), "phi must be positive on generators");
        sym
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.distinct.iter().map(|(w, m)| (w, *m))
    }

    fn phi_of(&self, v: &[i64]) -> i128 {
        self.phi.iter().zip(v).map(|(a, &b)| a * b as i128).sum()
    }

    fn to_lattice(&self, xi: &Weight) -> Option<Vec<i64>> {
        assert_eq!(xi.dim(), self.dim, "weight dimension mismatch");
        let scale = Q::from_integer(self.den.clone());
        xi.0.iter()
            .map(|x| {
                let y = x * &scale;
                if y.is_integer() {
                    y.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Largest degree a monomial of weight `xi` can have; `None` when no
    /// monomial can have weight `xi` (negative `phi` or off the lattice).
    pub fn degree_bound(&self, xi: &Weight) -> Option<u64> {
        let v = self.to_lattice(xi)?;
        let value = self.phi_of(&v);
        if value < 0 {
            return None;
        }
        match self.scaled.iter().map(|g| self.phi_of(g)).min() {
            None => Some(0),
            Some(min) => Some((value / min) as u64),
        }
    }

    /// `graded(xi)[m]` = dimension of the `xi`-weight space of `S^m`.
    pub fn graded(&self, xi: &Weight) -> Vec<u64> {
        let Some(v) = self.to_lattice(xi) else {
            return Vec::new();
        };
        if self.phi_of(&v) < 0 {
            return Vec::new();
        }
        let mut memo = HashMap::new();
        let out = self.graded_rec(0, v, &mut memo);
        debug_assert!(out.len() as u64 <= self.degree_bound(xi).map_or(0, |b| b + 1));
        out
    }

    fn graded_rec(&self, i: usize, rem: Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), Vec<u64>>) -> Vec<u64> {
        if i == self.scaled.len() {
            return if rem.iter().all(|&x| x == 0) { vec![1] } else { Vec::new() };
        }
        let key = (i, rem);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let gen = &self.scaled[i];
        let mut acc: Vec<u64> = Vec::new();
        let mut cur = key.1.clone();
        let mut k = 0usize;
        while self.phi_of(&cur) >= 0 {
            let sub = self.graded_rec(i + 1, cur.clone(), memo);
            if acc.len() < sub.len() + k {
                acc.resize(sub.len() + k, 0);
            }
            for (d, c) in sub.iter().enumerate() {
                acc[d + k] = acc[d + k].checked_add(*c).expect("partition count overflows u64");
            }
            for (c, g) in cur.iter_mut().zip(gen) {
                *c -= g;
            }
            k += 1;
        }
        while acc.last() == Some(&0) {
            acc.pop();
        }
        memo.insert(key, acc.clone());
        acc
    }

    pub fn mult(&self, xi: &Weight, m: usize) -> u64 {
        self.graded(xi).get(m).copied().unwrap_or(0)
    }

    pub fn total(&self, xi: &Weight) -> u64 {
        self.graded(xi).iter().sum()
    }

    /// One multiset `beta -> n_beta` over the distinct generator weights with
    /// `sum n_beta beta = xi`.
    pub fn witness(&self, xi: &Weight) -> Option<BTreeMap<Weight, u64>> {
        let v = self.to_lattice(xi)?;
        let mut counts = vec![0u64; self.scaled.len()];
        let mut dead = HashSet::new();
        if !self.witness_rec(0, v, &mut counts, &mut dead) {
            return None;
        }
        let mut out: BTreeMap<Weight, u64> = self.distinct.iter().map(|(w, _)| (w.clone(), 0)).collect();
        for (g, c) in counts.iter().enumerate() {
            *out.get_mut(&self.distinct[self.owner[g]].0).unwrap() += c;
        }
        Some(out)
    }

    fn witness_rec(&self, i: usize, rem: Vec<i64>, counts: &mut [u64], dead: &mut HashSet<(usize, Vec<i64>)>) -> bool {
        if i == self.scaled.len() {
            return rem.iter().all(|&x| x == 0);
        }
        if dead.contains(&(i, rem.clone())) {
            return false;
        }
        let mut cur = rem.clone();
        let mut k = 0;
        while self.phi_of(&cur) >= 0 {
            if self.witness_rec(i + 1, cur.clone(), counts, dead) {
                counts[i] = k;
                return true;
            }
            for (c, g) in cur.iter_mut().zip(&self.scaled[i]) {
                *c -= g;
            }
            k += 1;
        }
        dead.insert((i, rem));
        false
    }
}

/// Dimension of the `xi`-weight space of `S^m(n ∩ k^perp)`.
pub fn sym_mult(parab: &CompatibleParabolic, xi: &Weight, m: usize) -> u64 {
    SymAlgebra::new(parab).mult(xi, m)
}

/// Dimension of the `xi`-weight space of `S(n ∩ k^perp)`; finite because every
/// generator pairs positively with the lexicographic functional.
pub fn sym_mult_total(parab: &CompatibleParabolic, xi: &Weight) -> u64 {
    SymAlgebra::new(parab).total(xi)
}

/// `||delta + 2 rho||^2`.
pub fn vogan_norm_sq(pair: &ReductivePair, delta: &Weight) -> Q {
    pair.t_norm_sq(&(delta + &pair.rho_k.scale(&qi(2))))
}

/// One row of the k-type table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypeRow {
    pub delta: Weight,
    /// Alternating sum over degrees `s - i` of Hom-dimensions.
    pub chi: i64,
    /// Multiplicity bound in degree `s`.
    pub bound_i0: u64,
    /// Sum of the bounds over all degrees.
    pub bound_total: u64,
    pub vogan_norm_sq: Q,
    pub lemma3_ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KTypeTable {
    pub rows: Vec<KTypeRow>,
    pub warnings: Vec<String>,
}

/// Term-by-term check of
/// `||delta + 2rho||^2 = ||mu + 2rho||^2 + ||sum n_b b||^2 + 2 sum n_b <mu + 2rho, b>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma3Expansion {
    pub witness: BTreeMap<Weight, u64>,
    pub lhs: Q,
    pub base: Q,
    pub shift_norm_sq: Q,
    /// `(beta, n_beta, <mu + 2rho, beta>)`
    pub cross_terms: Vec<(Weight, u64, Q)>,
}

impl Lemma3Expansion {
    pub fn cross_sum(&self) -> Q {
        self.cross_terms.iter().map(|(_, n, p)| qi(*n as i64) * p).sum::<Q>() * qi(2)
    }

    pub fn balances(&self) -> bool {
        self.lhs == &self.base + &self.shift_norm_sq + self.cross_sum()
    }

    pub fn cross_terms_nonnegative(&self) -> bool {
        self.cross_terms.iter().all(|(_, _, p)| !p.is_negative())
    }

    /// `delta != mu` forces a strictly positive shift norm and hence a strict increase.
    pub fn strict(&self) -> bool {
        self.shift_norm_sq.is_positive() && self.balances() && self.cross_terms_nonnegative() && self.lhs > self.base
    }
}

/// Outcome of checking the three lemmas and the nonvanishing claim for one `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Verdict {
    pub lemma1: bool,
    pub lemma2: bool,
    pub lemma3: bool,
    pub nonzero: bool,
    pub first_failure: Option<String>,
}

impl Theorem2Verdict {
    pub fn passed(&self) -> bool {
        self.lemma1 && self.lemma2 && self.lemma3 && self.nonzero
    }
}

/// Shared state for the multiplicity operations on one `(pair, p, E)`.
#[derive(Clone, Debug)]
pub struct Engine<'a> {
    pub pair: &'a ReductivePair,
    pub parab: &'a CompatibleParabolic,
    pub e: &'a EModule,
    pub sym: SymAlgebra,
}

impl<'a> Engine<'a> {
    pub fn new(pair: &'a ReductivePair, parab: &'a CompatibleParabolic, e: &'a EModule) -> Self {
        Engine { pair, parab, e, sym: SymAlgebra::new(parab) }
    }

    /// `xi(w) = w(delta + rho) - rho - omega - 2 rho_perp_n`.
    pub fn xi(&self, w: &WeylElement, delta: &Weight) -> Weight {
        let rho = &self.pair.rho_k;
        let moved = &w.apply(&(delta + rho)) - rho;
        &(&moved - &self.e.omega) - &self.parab.rho_n_perp.scale(&qi(2))
    }

    fn elements_of_length(&self, i: usize) -> impl Iterator<Item = &'a WeylElement> {
        self.pair.weyl_k.iter().filter(move |w| w.length() == i)
    }

    pub fn prop1_condition(&self, delta: &Weight, i: usize) -> Result<Vec<(WeylElement, BTreeMap<Weight, u64>)>> {
        self.pair.check_k_dominant(delta)?;
        Ok(self
            .elements_of_length(i)
            .filter_map(|w| self.sym.witness(&self.xi(w, delta)).map(|n| (w.clone(), n)))
            .collect())
    }

    pub fn prop1_bound(&self, delta: &Weight, i: usize) -> Result<u64> {
        self.pair.check_k_dominant(delta)?;
        let inner: u64 = self.elements_of_length(i).map(|w| self.sym.total(&self.xi(w, delta))).sum();
        Ok(self.e.dim_e * inner)
    }

    pub fn euler_multiplicity(&self, delta: &Weight) -> Result<i64> {
        self.pair.check_k_dominant(delta)?;
        let mut chi = 0i64;
        for w in &self.pair.weyl_k {
            let count = self.sym.total(&self.xi(w, delta)) as i64;
            chi += w.sign() * count;
        }
        Ok(chi * self.e.dim_e as i64)
    }

    /// No `w` of positive length satisfies the necessary condition at `delta = mu`.
    pub fn lemma1_check(&self, mu: &Weight) -> Result<bool> {
        for i in 1..=self.pair.max_length() {
            if !self.prop1_condition(mu, i)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn lemma3_expansion(&self, mu: &Weight, delta: &Weight) -> Option<Lemma3Expansion> {
        let witness = self.sym.witness(&(delta - mu))?;
        let lead = mu + &self.pair.rho_k.scale(&qi(2));
        let shift = delta - mu;
        Some(Lemma3Expansion {
            cross_terms: witness.iter().map(|(b, &n)| (b.clone(), n, self.pair.t_pair(&lead, b))).collect(),
            witness,
            lhs: vogan_norm_sq(self.pair, delta),
            base: vogan_norm_sq(self.pair, mu),
            shift_norm_sq: self.pair.t_norm_sq(&shift),
        })
    }

    pub fn row(&self, mu: &Weight, delta: &Weight) -> Result<KTypeRow> {
        let chi = self.euler_multiplicity(delta)?;
        let bound_i0 = self.prop1_bound(delta, 0)?;
        let mut bound_total = 0;
        for i in 0..=self.pair.max_length() {
            bound_total += self.prop1_bound(delta, i)?;
        }
        let norm = vogan_norm_sq(self.pair, delta);
        let lemma3_ok = delta == mu || norm > vogan_norm_sq(self.pair, mu);
        Ok(KTypeRow { delta: delta.clone(), chi, bound_i0, bound_total, vogan_norm_sq: norm, lemma3_ok })
    }

    /// Candidates `delta = mu + sum n_b b` over `b` in `n ∩ k^perp` that are
    /// dominant integral with Vogan norm at most `cutoff`, sorted by norm then `delta`.
    pub fn enumerate_ktypes(&self, mu: &Weight, cutoff: &Q) -> Result<KTypeTable> {
        self.pair.check_k_dominant(mu)?;
        let base = vogan_norm_sq(self.pair, mu);
        let mut table = KTypeTable::default();
        if *cutoff < base {
            table.warnings.push(format!(
                "cutoff {} is below the Vogan norm {} of mu; table is empty",
                fmt_q(cutoff),
                fmt_q(&base)
            ));
            return Ok(table);
        }
        // ||delta + 2rho||^2 >= base + ||xi||^2 and phi(xi)^2 <= |f|^2 ||xi||^2
        let f = &self.parab.positive_functional;
        let limit = self.pair.t_norm_sq(f) * (cutoff - &base);
        let steps: Vec<Weight> = self.parab.n_cap_perp.support().cloned().collect();
        let zero = Weight::zero(self.pair.t_dim());
        let mut seen: HashSet<Weight> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(xi) = queue.pop_front() {
            let delta = mu + &xi;
            if self.pair.k.is_dominant_integral(&delta) && vogan_norm_sq(self.pair, &delta) <= *cutoff {
                table.rows.push(self.row(mu, &delta)?);
            }
            for b in &steps {
                let next = &xi + b;
                let phi = self.pair.t_pair(f, &next);
                if &phi * &phi <= limit && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        table.rows.sort_by(|a, b| a.vogan_norm_sq.cmp(&b.vogan_norm_sq).then_with(|| a.delta.cmp(&b.delta)));
        Ok(table)
    }

    pub fn verify_theorem2(&self, mu: &Weight, cutoff: &Q) -> Result<Theorem2Verdict> {
        let mut first_failure = None;
        let lemma1 = self.lemma1_check(mu)?;
        if !lemma1 {
            first_failure = Some(format!("lemma 1: a positive-length w satisfies the condition at mu = {mu}"));
        }
        let chi_mu = self.euler_multiplicity(mu)?;
        let lemma2 = chi_mu == self.e.dim_e as i64;
        if !lemma2 && first_failure.is_none() {
            first_failure = Some(format!("lemma 2: chi(mu) = {chi_mu} but dim E = {}", self.e.dim_e));
        }
        let table = self.enumerate_ktypes(mu, cutoff)?;
        let mut lemma3 = true;
        for row in table.rows.iter().filter(|r| r.delta != *mu) {
            let expansion_ok = self.lemma3_expansion(mu, &row.delta).is_some_and(|x| x.strict());
            if !row.lemma3_ok || !expansion_ok {
                lemma3 = false;
                if first_failure.is_none() {
                    first_failure =
                        Some(format!("lemma 3: delta = {} has norm {}", row.delta, fmt_q(&row.vogan_norm_sq)));
                }
                break;
            }
        }
        let nonzero = chi_mu != 0;
        if !nonzero && first_failure.is_none() {
            first_failure = Some("the k-type mu does not occur".into());
        }
        Ok(Theorem2Verdict { lemma1, lemma2, lemma3, nonzero, first_failure })
    }
}

pub fn prop1_condition(
    pair: &ReductivePair,
    parab: &CompatibleParabolic,
    e: &EModule,
    delta: &Weight,
    i: usize,
) -> Result<Vec<(WeylElement, BTreeMap<Weight, u64>)>> {
    Engine::new(pair, parab, e).prop1_condition(delta, i)
}

pub fn prop1_bound(
    pair: &ReductivePair,
    parab: &CompatibleParabolic,
    e: &EModule,
    delta: &Weight,
    i: usize,
) -> Result<u64> {
    Engine::new(pair, parab, e).prop1_bound(delta, i)
}

pub fn euler_multiplicity(
    pair: &ReductivePair,
    parab: &CompatibleParabolic,
    e: &EModule,
    delta: &Weight,
) -> Result<i64> {
    Engine::new(pair, parab, e).euler_multiplicity(delta)
}

pub fn lemma1_check(pair: &ReductivePair, parab: &CompatibleParabolic, e: &EModule, mu: &Weight) -> Result<bool> {
    Engine::new(pair, parab, e).lemma1_check(mu)
}

pub fn enumerate_ktypes(
    pair: &ReductivePair,
    parab: &CompatibleParabolic,
    e: &EModule,
    mu: &Weight,
    cutoff: &Q,
) -> Result<KTypeTable> {
    Engine::new(pair, parab, e).enumerate_ktypes(mu, cutoff)
}
