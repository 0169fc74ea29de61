//! The pair `k ⊂ g` at the level of `t`-weights.
//!
//! A pair is given by the root system of `g`, a basis of `t ⊂ h` written in
//! the fundamental-coweight coordinates of `h` (the columns of `embed`), and
//! the simple roots of `k` in the dual coordinates on `t*`. Everything else
//! (restriction map, induced form, `ch_t` multisets, `rho`) is derived here.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::WeightMultiset;
use crate::rational::{lattice_basis, parse_q, qi, Matrix, Weight, Q};
use crate::rootsys::{weyl_group, RootSystem, WeylElement};

pub const CONFIG_VERSION: u32 = 1;

/// Names of the pairs shipped with the crate.
pub const BUILTIN_PAIRS: [&str; 3] = ["cartan-in-a1", "principal-a1-in-a2", "diagonal-a1-in-a1xa1"];

fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "cartan-in-a1" => Some(include_str!("../pairs/cartan-in-a1.toml")),
        "principal-a1-in-a2" => Some(include_str!("../pairs/principal-a1-in-a2.toml")),
        "diagonal-a1-in-a1xa1" => Some(include_str!("../pairs/diagonal-a1-in-a1xa1.toml")),
        _ => None,
    }
}

/// A rational entry in a config file: either a TOML integer or a string like `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Text(String),
}

impl RatValue {
    fn to_q(&self, field: &str) -> Result<Q> {
        match self {
            RatValue::Int(n) => Ok(qi(*n)),
            RatValue::Text(s) => parse_q(s).map_err(|e| Error::config(field, e.to_string())),
        }
    }
}

impl From<&Q> for RatValue {
    fn from(x: &Q) -> Self {
        match crate::rational::to_i64(x) {
            Some(n) => RatValue::Int(n),
            None => RatValue::Text(crate::rational::fmt_q(x)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GSection {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TSection {
    /// rank(g) rows, dim(t) columns.
    pub embed: Vec<Vec<RatValue>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KSection {
    /// Simple roots of k in t*-coordinates.
    pub simple_roots: Vec<Vec<RatValue>>,
}

/// On-disk pair description (TOML).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairConfig {
    pub version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub g: GSection,
    pub t: TSection,
    pub k: KSection,
}

impl PairConfig {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let cfg: PairConfig = toml::from_str(text).map_err(|e| Error::config(origin, e.to_string()))?;
        if cfg.version != CONFIG_VERSION {
            return Err(Error::config(
                format!("{origin}: version"),
                format!("unsupported version {} (expected {CONFIG_VERSION})", cfg.version),
            ));
        }
        Ok(cfg)
    }

    pub fn builtin(name: &str) -> Option<Self> {
        builtin_source(name).map(|src| Self::parse(src, name).expect("shipped pair configs parse"))
    }

    /// A built-in name or a path to a TOML file.
    pub fn load(source: &str) -> Result<Self> {
        if let Some(cfg) = Self::builtin(source) {
            return Ok(cfg);
        }
        let path = Path::new(source);
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(source, format!("cannot read pair config: {e}")))?;
        Self::parse(&text, source)
    }

    pub fn build(&self) -> Result<ReductivePair> {
        let (g, g_label) = match (&self.g.type_name, &self.g.cartan) {
            (Some(t), None) => (RootSystem::from_type(t)?, t.clone()),
            (None, Some(c)) => (RootSystem::from_cartan(c)?, format!("cartan {c:?}")),
            _ => return Err(Error::config("g", "give exactly one of `type` or `cartan`")),
        };
        let rows: Vec<Vec<Q>> = self
            .t
            .embed
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|x| x.to_q(&format!("t.embed[{i}]"))).collect())
            .collect::<Result<_>>()?;
        if rows.len() != g.rank() {
            return Err(Error::config("t.embed", format!("has {} rows but rank(g) = {}", rows.len(), g.rank())));
        }
        let embed = Matrix::from_rows(rows).map_err(|e| Error::config("t.embed", e.to_string()))?;
        let t_dim = embed.cols();
        let k_simple = self
            .k
            .simple_roots
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let field = format!("k.simple_roots[{i}]");
                if r.len() != t_dim {
                    return Err(Error::config(&field, format!("expected {t_dim} coordinates")));
                }
                Ok(Weight(r.iter().map(|x| x.to_q(&field)).collect::<Result<_>>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        build_pair(&self.name, &g_label, g, embed, k_simple)
    }
}

/// Validated pair data.
#[derive(Clone, Debug)]
pub struct ReductivePair {
    pub name: String,
    pub g_label: String,
    pub g: RootSystem,
    pub k: RootSystem,
    /// Columns: basis of t in fundamental-coweight coordinates of h.
    pub embed: Matrix,
    /// h* (simple-root coordinates) -> t*.
    pub restriction: Matrix,
    pub t_form: Matrix,
    pub chi_t_g: WeightMultiset,
    pub chi_t_k: WeightMultiset,
    pub chi_t_perp: WeightMultiset,
    pub rho_k: Weight,
    pub weyl_k: Vec<WeylElement>,
}

/// Derive and validate all pair data.
pub fn build_pair(
    name: &str,
    g_label: &str,
    g: RootSystem,
    embed: Matrix,
    k_simple_roots: Vec<Weight>,
) -> Result<ReductivePair> {
    if embed.rows() != g.rank() {
        return Err(Error::Shape(format!("embed must have rank(g) = {} rows", g.rank())));
    }
    let rank = embed.rank();
    if rank < embed.cols() || embed.cols() == 0 {
        return Err(Error::EmbedRank { rank, cols: embed.cols() });
    }
    // form on h in coweight coordinates is B^{-1}; restrict it to t and invert
    let b_inv = g.form().inverse().expect("invariant form is nondegenerate");
    let t_gram = embed.transpose().mul(&b_inv).mul(&embed);
    if let Some((order, value)) = t_gram.first_nonpositive_minor() {
        return Err(Error::DegenerateForm(format!(
            "leading minor of order {order} of the form on t is {}",
            crate::rational::fmt_q(&value)
        )));
    }
    let t_form = t_gram.inverse().expect("positive definite");
    let restriction = embed.transpose();

    let mut chi_t_g = WeightMultiset::new();
    for r in g.roots() {
        chi_t_g.insert(restriction.apply(&r), 1);
    }
    let t_dim = embed.cols();
    chi_t_g.insert(Weight::zero(t_dim), g.rank() as u64);

    let k = RootSystem::from_simple_roots(t_form.clone(), k_simple_roots)?;
    let mut chi_t_k: WeightMultiset = k.roots().into_iter().collect();
    chi_t_k.insert(Weight::zero(t_dim), t_dim as u64);

    let chi_t_perp = chi_t_g.difference(&chi_t_k).map_err(|(w, k_mult, g_mult)| Error::NonContainment {
        weight: w.to_string(),
        k_mult,
        g_mult,
    })?;
    if chi_t_perp.negated() != chi_t_perp {
        return Err(Error::Invariant("ch_t(k^perp) is not stable under negation".into()));
    }
    for beta in k.simple_roots() {
        let image = chi_t_perp.map(|w| k.reflect(w, beta));
        if image != chi_t_perp {
            return Err(Error::Invariant(format!("ch_t(k^perp) is not invariant under the reflection in {beta}")));
        }
    }
    let rho_k = k.rho();
    let weyl_k = weyl_group(&k)?;
    Ok(ReductivePair {
        name: name.to_string(),
        g_label: g_label.to_string(),
        g,
        k,
        embed,
        restriction,
        t_form,
        chi_t_g,
        chi_t_k,
        chi_t_perp,
        rho_k,
        weyl_k,
    })
}

impl ReductivePair {
    pub fn builtin(name: &str) -> Result<Self> {
        PairConfig::builtin(name)
            .ok_or_else(|| Error::config("pair", format!("unknown built-in pair `{name}`")))?
            .build()
    }

    pub fn t_dim(&self) -> usize {
        self.embed.cols()
    }

    pub fn restrict_weight(&self, w: &Weight) -> Weight {
        self.restriction.apply(w)
    }

    pub fn t_pair(&self, x: &Weight, y: &Weight) -> Q {
        self.t_form.pair(x, y)
    }

    pub fn t_norm_sq(&self, w: &Weight) -> Q {
        self.t_form.pair(w, w)
    }

    /// The preimage of `omega` in h* orthogonal to the kernel of restriction.
    pub fn orthogonal_lift(&self, omega: &Weight) -> Weight {
        let b_inv = self.g.form().inverse().expect("nondegenerate");
        b_inv.mul(&self.embed).apply(&self.t_form.apply(omega))
    }

    /// Dominant integral weights of k with height at most `max_height`.
    ///
    /// A weight is `sum a_i w_i + sum b_j z_j` with `w_i` the fundamental
    /// weights of k, `z_j` a basis of the lattice obtained by projecting the
    /// restricted fundamental weights of g onto the centre of k, `a_i >= 0`
    /// and `b_j` arbitrary integers. Its height is `sum a_i + sum |b_j|`.
    pub fn dominant_weights(&self, max_height: u32) -> Vec<Weight> {
        let fundamental = self.k.fundamental_weights();
        let central: Vec<Weight> = {
            let projected: Vec<Weight> = self
                .g
                .fundamental_weights()
                .iter()
                .map(|w| self.project_to_centre(&self.restrict_weight(w)))
                .filter(|w| !w.is_zero())
                .collect();
            lattice_basis(&projected)
        };
        let mut out = Vec::new();
        let mut coeffs: Vec<i64> = Vec::new();
        self.sweep(&fundamental, &central, max_height as i64, &mut coeffs, &mut out);
        out.sort();
        out
    }

    fn sweep(
        &self,
        fundamental: &[Weight],
        central: &[Weight],
        budget: i64,
        coeffs: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        let idx = coeffs.len();
        if idx == fundamental.len() + central.len() {
            let mut w = Weight::zero(self.t_dim());
            for (c, b) in coeffs.iter().zip(fundamental.iter().chain(central)) {
                w = w.add_scaled(&qi(*c), b);
            }
            out.push(w);
            return;
        }
        let range: Vec<i64> =
            if idx < fundamental.len() { (0..=budget).collect() } else { (-budget..=budget).collect() };
        for c in range {
            coeffs.push(c);
            self.sweep(fundamental, central, budget - c.abs(), coeffs, out);
            coeffs.pop();
        }
    }

    /// Orthogonal projection of a t*-weight onto the complement of the k-roots.
    pub fn project_to_centre(&self, w: &Weight) -> Weight {
        let simple = self.k.simple_roots();
        if simple.is_empty() {
            return w.clone();
        }
        let n = simple.len();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram[(i, j)] = self.t_pair(&simple[i], &simple[j]);
            }
        }
        let rhs = Weight(simple.iter().map(|s| self.t_pair(s, w)).collect());
        let c = gram.inverse().expect("simple roots independent").apply(&rhs);
        let mut out = w.clone();
        for (ci, s) in c.0.iter().zip(simple) {
            out = out.add_scaled(&-ci.clone(), s);
        }
        out
    }

    /// Positive k-roots as a multiset (`ch_t n_k`).
    pub fn positive_k_roots(&self) -> WeightMultiset {
        self.k.positive_roots().iter().cloned().collect()
    }

    /// `s = dim n_k`.
    pub fn s(&self) -> usize {
        self.k.positive_roots().len()
    }

    /// Longest length in W_k.
    pub fn max_length(&self) -> usize {
        self.weyl_k.iter().map(WeylElement::length).max().unwrap_or(0)
    }

    pub fn check_k_dominant(&self, mu: &Weight) -> Result<()> {
        if mu.dim() != self.t_dim() {
            return Err(Error::Shape(format!(
                "weight {mu} has {} coordinates, t* has dimension {}",
                mu.dim(),
                self.t_dim()
            )));
        }
        self.k.check_dominant_integral(mu)
    }
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
    fn cartan_in_a1() {
        let p = ReductivePair::builtin("cartan-in-a1").unwrap();
        assert_eq!(p.chi_t_perp, ms(&[1, -1]));
        assert_eq!(p.rho_k, w(0));
        assert_eq!(p.weyl_k.len(), 1);
        assert_eq!(p.t_norm_sq(&w(1)), qi(2));
    }

    #[test]
    fn principal_in_a2() {
        let p = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        assert_eq!(p.chi_t_g, ms(&[2, 2, 4, -2, -2, -4, 0, 0]));
        assert_eq!(p.chi_t_k, ms(&[2, 0, -2]));
        assert_eq!(p.chi_t_perp, ms(&[4, 2, 0, -2, -4]));
        assert_eq!(p.restrict_weight(&Weight::from_ints(&[1, 0])), w(2));
        assert_eq!(p.restrict_weight(&Weight::from_ints(&[1, 1])), w(4));
        assert_eq!(p.restrict_weight(&Weight::zero(2)), w(0));
        assert_eq!(p.t_norm_sq(&w(4)), qi(2));
        assert_eq!(p.t_norm_sq(&w(2)), q(1, 2));
        assert_eq!(p.rho_k, w(1));
    }

    #[test]
    fn diagonal_in_a1xa1() {
        let p = ReductivePair::builtin("diagonal-a1-in-a1xa1").unwrap();
        assert_eq!(p.chi_t_perp, ms(&[2, 0, -2]));
        assert_eq!(p.t_norm_sq(&w(2)), qi(1));
    }

    #[test]
    fn non_containment_is_rejected() {
        let mut cfg = PairConfig::builtin("principal-a1-in-a2").unwrap();
        cfg.k.simple_roots = vec![vec![RatValue::Int(3)]];
        match cfg.build() {
            Err(Error::NonContainment { weight, .. }) => assert_eq!(weight, "[-3]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_embed_shapes() {
        let mut cfg = PairConfig::builtin("principal-a1-in-a2").unwrap();
        cfg.t.embed = vec![vec![RatValue::Int(2)]];
        assert!(matches!(cfg.build(), Err(Error::Config { .. })));
        let mut cfg = PairConfig::builtin("principal-a1-in-a2").unwrap();
        cfg.t.embed = vec![vec![RatValue::Int(1), RatValue::Int(2)], vec![RatValue::Int(1), RatValue::Int(2)]];
        cfg.k.simple_roots = vec![];
        assert!(matches!(cfg.build(), Err(Error::EmbedRank { rank: 1, cols: 2 })));
    }

    #[test]
    fn config_errors_name_the_field() {
        let err = PairConfig::parse("version = 1\nname = 3\n", "bad.toml").unwrap_err();
        assert!(err.to_string().contains("bad.toml"), "{err}");
        assert!(err.to_string().contains("line 2"), "{err}");
        let src = include_str!("../pairs/principal-a1-in-a2.toml").replace("version = 1", "version = 9");
        assert!(PairConfig::parse(&src, "x").unwrap_err().to_string().contains("version"));
        assert!(PairConfig::load("/nonexistent/pair.toml").is_err());
    }

    #[test]
    fn restriction_maps_roots_onto_chi_t_g() {
        for name in BUILTIN_PAIRS {
            let p = ReductivePair::builtin(name).unwrap();
            let restricted: WeightMultiset = p.g.roots().iter().map(|r| p.restrict_weight(r)).collect();
            let mut zeros = WeightMultiset::new();
            zeros.insert(Weight::zero(p.t_dim()), p.g.rank() as u64);
            assert_eq!(restricted, p.chi_t_g.difference(&zeros).unwrap());
        }
    }

    #[test]
    fn orthogonal_lift_restricts_back() {
        let p = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        let kappa = p.orthogonal_lift(&w(-6));
        assert_eq!(kappa, Weight(vec![q(-3, 2), q(-3, 2)]));
        assert_eq!(p.restrict_weight(&kappa), w(-6));
    }

    #[test]
    fn dominant_weight_sweeps() {
        let p = ReductivePair::builtin("principal-a1-in-a2").unwrap();
        assert_eq!(p.dominant_weights(3), vec![w(0), w(1), w(2), w(3)]);
        let c = ReductivePair::builtin("cartan-in-a1").unwrap();
        let sweep = c.dominant_weights(2);
        assert_eq!(sweep, vec![w(-1), Weight(vec![q(-1, 2)]), w(0), Weight(vec![q(1, 2)]), w(1)]);
    }
}
