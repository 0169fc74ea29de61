//! Minimal compatible parabolic subalgebras.
//!
//! Genericity is symbolic: a t*-weight is classified by the tuple of its
//! pairings with `mu + 2 rho` followed by a fixed basis of t*, compared
//! lexicographically. This is the parabolic `p_lambda` for `lambda` an
//! infinitesimal perturbation of `mu + 2 rho`, so it is contained in
//! `p_{mu + 2 rho}` and is minimal (every root in the Levi factor restricts
//! to zero on t).

use std::cmp::Ordering;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multiset::WeightMultiset;
use crate::pairspec::ReductivePair;
use crate::rational::{qi, Weight, Q};
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexFunctional {
    rows: Vec<Weight>,
}

impl LexFunctional {
    /// Rows must span t*; the first row is the leading functional.
    pub fn from_rows(pair: &ReductivePair, rows: Vec<Weight>) -> Result<Self> {
        if rows.iter().any(|r| r.dim() != pair.t_dim()) {
            return Err(Error::Shape("lex rows must live in t*".into()));
        }
        let m = crate::rational::Matrix::from_columns(&rows, pair.t_dim());
        if m.rank() < pair.t_dim() {
            return Err(Error::Invariant("lex rows do not span t*".into()));
        }
        Ok(LexFunctional { rows })
    }

    pub fn rows(&self) -> &[Weight] {
        &self.rows
    }

    /// Pairings of `x` with every row.
    pub fn value(&self, pair: &ReductivePair, x: &Weight) -> Vec<Q> {
        self.rows.iter().map(|r| pair.t_pair(r, x)).collect()
    }

    /// Sign of the first nonzero pairing.
    pub fn sign(&self, pair: &ReductivePair, x: &Weight) -> Ordering {
        self.value(pair, x).iter().find(|v| !v.is_zero()).map_or(Ordering::Equal, |v| {
            if v.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        })
    }

    /// A single t*-weight `f` with `<f, x> > 0` for every `x` in `positives`,
    /// each of which must be lexicographically positive. Built as
    /// `sum_k eps^k rows[k]` with a small rational `eps`.
    pub fn positive_functional(&self, pair: &ReductivePair, positives: &[Weight]) -> Weight {
        let mut eps = Q::one();
        for x in positives {
            let v = self.value(pair, x);
            let j = v.iter().position(|c| !c.is_zero()).expect("lex-positive weight is nonzero");
            assert!(v[j].is_positive(), "weight {x} is not lex-positive");
            let tail: Q = v[j + 1..].iter().map(|c| c.abs()).sum();
            if tail.is_positive() {
                let bound = &v[j] / (qi(2) * tail);
                if bound < eps {
                    eps = bound;
                }
            }
        }
        let mut f = Weight::zero(pair.t_dim());
        let mut power = Q::one();
        for r in &self.rows {
            f = f.add_scaled(&power, r);
            power *= &eps;
        }
        debug_assert!(positives.iter().all(|x| pair.t_pair(&f, x).is_positive()));
        f
    }
}

/// The lexicographic functional for `mu`: `mu + 2 rho` first, then the
/// standard basis of t* in the order given by `tiebreak`
/// (identity order when `None`).
pub fn lex_functional(pair: &ReductivePair, mu: &Weight, tiebreak: Option<&[usize]>) -> Result<LexFunctional> {
    pair.check_k_dominant(mu)?;
    let n = pair.t_dim();
    let order: Vec<usize> = match tiebreak {
        None => (0..n).collect(),
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return Err(Error::config("tiebreak", format!("{o:?} is not a permutation of 0..{n}")));
            }
            o.to_vec()
        }
    };
    let mut rows = vec![mu + &pair.rho_k.scale(&qi(2))];
    rows.extend(order.into_iter().map(|i| Weight::unit(n, i)));
    LexFunctional::from_rows(pair, rows)
}

#[derive(Clone, Debug)]
pub struct CompatibleParabolic {
    pub lex: LexFunctional,
    pub n_weights: WeightMultiset,
    pub m_weights: WeightMultiset,
    pub n_cap_k: WeightMultiset,
    pub n_cap_perp: WeightMultiset,
    /// g-roots (in h*) restricting to zero on t.
    pub levi_roots: Vec<Weight>,
    /// Root system of the Levi factor, positive system inherited from g.
    pub levi: RootSystem,
    pub rho_n: Weight,
    pub rho_n_perp: Weight,
    pub s: usize,
    /// t*-weight pairing strictly positively with every weight of n.
    pub positive_functional: Weight,
    /// Coordinates of `<positive_functional, .>` as a linear form on t*.
    pub phi_covector: Vec<Q>,
}

pub fn build_parabolic(pair: &ReductivePair, lex: LexFunctional) -> Result<CompatibleParabolic> {
    let dim = pair.t_dim();
    let mut n_weights = WeightMultiset::new();
    let mut m_weights = WeightMultiset::new();
    for (w, mult) in pair.chi_t_g.iter() {
        if w.is_zero() {
            m_weights.insert(w.clone(), mult);
            continue;
        }
        match lex.sign(pair, w) {
            Ordering::Greater => n_weights.insert(w.clone(), mult),
            Ordering::Less => {}
            Ordering::Equal => return Err(Error::MinimalityFailure(w.to_string())),
        }
    }
    let positive_k = pair.positive_k_roots();
    let n_cap_perp = n_weights
        .difference(&positive_k)
        .map_err(|(w, _, _)| Error::Invariant(format!("positive k-root {w} is not in n; p does not meet k in b_k")))?;
    let n_cap_k = positive_k;
    if n_cap_k.union(&n_cap_perp) != n_weights {
        return Err(Error::Invariant("n is not the union of n∩k and n∩k^perp".into()));
    }

    let levi_roots: Vec<Weight> = pair.g.roots().into_iter().filter(|r| pair.restrict_weight(r).is_zero()).collect();
    let levi_positive: Vec<Weight> =
        pair.g.positive_roots().iter().filter(|r| pair.restrict_weight(r).is_zero()).cloned().collect();
    let levi_simple: Vec<Weight> = levi_positive
        .iter()
        .filter(|r| {
            !levi_positive.iter().any(|a| {
                let rest = *r - a;
                levi_positive.contains(&rest)
            })
        })
        .cloned()
        .collect();
    let levi = RootSystem::from_simple_roots(pair.g.form().clone(), levi_simple)?;
    if levi.positive_roots().len() != levi_positive.len() {
        return Err(Error::Invariant("Levi positive roots do not close up".into()));
    }

    let support: Vec<Weight> = n_weights.support().cloned().collect();
    let positive_functional = lex.positive_functional(pair, &support);
    let phi_covector = pair.t_form.apply(&positive_functional).0;
    let rho_n = n_weights.rho(dim);
    let rho_n_perp = n_cap_perp.rho(dim);
    let s = n_cap_k.total() as usize;
    Ok(CompatibleParabolic {
        lex,
        n_weights,
        m_weights,
        n_cap_k,
        n_cap_perp,
        levi_roots,
        levi,
        rho_n,
        rho_n_perp,
        s,
        positive_functional,
        phi_covector,
    })
}

/// `lex_functional` followed by `build_parabolic`.
pub fn parabolic_for(pair: &ReductivePair, mu: &Weight, tiebreak: Option<&[usize]>) -> Result<CompatibleParabolic> {
    build_parabolic(pair, lex_functional(pair, mu, tiebreak)?)
}

/// Whether every weight of n pairs nonnegatively with `mu + 2 rho`,
/// i.e. `p ⊆ p_{mu + 2 rho}`.
pub fn check_containment(pair: &ReductivePair, parab: &CompatibleParabolic, mu: &Weight) -> bool {
    let lead = mu + &pair.rho_k.scale(&qi(2));
    parab.n_weights.support().all(|w| !pair.t_pair(&lead, w).is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn w(c: i64) -> Weight {
        Weight::from_ints(&[c])
    }

    fn ms(cs: &[i64]) -> WeightMultiset {
        cs.iter().map(|&c| w(c)).collect()
    }

    #[test]
    fn principal_split() {
        let pair = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        let lex = lex_functional(&pair, &w(0), None).unwrap();
        assert_eq!(lex.rows(), &[w(2), w(1)]);
        let p = build_parabolic(&pair, lex).unwrap();
        assert_eq!(p.n_weights, ms(&[2, 2, 4]));
        assert_eq!(p.n_cap_k, ms(&[2]));
        assert_eq!(p.n_cap_perp, ms(&[2, 4]));
        assert_eq!(p.m_weights, ms(&[0, 0]));
        assert_eq!(p.s, 1);
        assert_eq!(p.rho_n_perp, w(3));
        assert!(p.levi_roots.is_empty());
        assert!(check_containment(&pair, &p, &w(0)));
    }

    #[test]
    fn cartan_split_uses_tiebreak() {
        let pair = ReductivePair::builtin("cartan-in-a1").unwrap();
        let lex = lex_functional(&pair, &w(0), None).unwrap();
        assert_eq!(lex.rows()[0], w(0));
        let p = build_parabolic(&pair, lex).unwrap();
        assert_eq!(p.n_weights, ms(&[1]));
        assert!(p.n_cap_k.is_empty());
        assert_eq!(p.n_cap_perp, ms(&[1]));
        assert_eq!(p.s, 0);
        assert_eq!(p.rho_n_perp, Weight(vec![q(1, 2)]));
        assert!(check_containment(&pair, &p, &w(0)));
        // a negative character flips the parabolic
        let neg = parabolic_for(&pair, &w(-1), None).unwrap();
        assert_eq!(neg.n_cap_perp, ms(&[-1]));
    }

    #[test]
    fn diagonal_split() {
        let pair = ReductivePair::builtin("diagonal-a1-in-a1xa1").unwrap();
        let lex = lex_functional(&pair, &w(0), None).unwrap();
        assert_eq!(lex.rows()[0], w(2));
        let p = build_parabolic(&pair, lex).unwrap();
        assert_eq!(p.n_cap_k, ms(&[2]));
        assert_eq!(p.n_cap_perp, ms(&[2]));
        assert_eq!(p.m_weights, ms(&[0, 0]));
        assert_eq!(p.s, 1);
        assert_eq!(p.rho_n_perp, w(1));
    }

    #[test]
    fn flipped_lead_row_fails_containment() {
        let pair = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        let flipped = LexFunctional::from_rows(&pair, vec![w(-2), w(1)]).unwrap();
        // with the lead row flipped the positive k-root lands in -n
        assert!(matches!(build_parabolic(&pair, flipped.clone()), Err(Error::Invariant(_))));
        let torus = ReductivePair::builtin("cartan-in-a1").unwrap();
        let mu = w(1);
        let flipped = LexFunctional::from_rows(&torus, vec![w(-1), w(1)]).unwrap();
        let p = build_parabolic(&torus, flipped).unwrap();
        assert!(!check_containment(&torus, &p, &mu));
    }

    #[test]
    fn rejects_bad_tiebreak_and_nondominant_mu() {
        let pair = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        assert!(lex_functional(&pair, &w(0), Some(&[1])).is_err());
        assert!(matches!(lex_functional(&pair, &w(-1), None), Err(Error::NotDominantIntegral { .. })));
        assert!(LexFunctional::from_rows(&pair, vec![w(0)]).is_err());
    }

    #[test]
    fn splitting_conservation_and_positivity() {
        for name in crate::pairspec::BUILTIN_PAIRS {
            let pair = ReductivePair::builtin(name).unwrap();
            for mu in pair.dominant_weights(6) {
                let p = parabolic_for(&pair, &mu, None).unwrap();
                let total = p.m_weights.union(&p.n_weights).union(&p.n_weights.negated());
                assert_eq!(total, pair.chi_t_g);
                assert_eq!(p.n_cap_k, pair.positive_k_roots());
                assert!(p.m_weights.support().all(Weight::is_zero));
                for x in p.n_weights.support() {
                    assert_eq!(p.lex.sign(&pair, x), Ordering::Greater);
                    assert!(pair.t_pair(&p.positive_functional, x).is_positive());
                }
                assert!(check_containment(&pair, &p, &mu));
            }
        }
    }
}
