//! Root systems, Weyl groups and finite-dimensional characters.
//!
//! A [`RootSystem`] lives in an ambient rational vector space carrying a
//! symmetric bilinear form. Root systems built from a Cartan matrix use the
//! simple-root basis as ambient coordinates and the invariant form normalized
//! so that long roots of every simple component have square length 2. Root
//! systems of a subalgebra are built from simple roots in some other ambient
//! space (for example `t*`) with a form supplied by the caller.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{coords_in_span, fmt_q, qi, Matrix, Weight, Q};

/// Weyl groups larger than this are refused unless a larger cap is passed
/// explicitly.
pub const DEFAULT_WEYL_CAP: usize = 5_000;

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    form: Matrix,
    components: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Root system of the semisimple Lie algebra with Cartan matrix
    /// `a[i][j] = <alpha_j, alpha_i^vee>`, in simple-root coordinates.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Result<Self> {
        validate_cartan_shape(cartan)?;
        let n = cartan.len();
        let components = dynkin_components(cartan);
        let mut len_sq = vec![Q::zero(); n];
        for comp in &components {
            // propagate relative root lengths along the Dynkin diagram
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([comp[0]]);
            len_sq[comp[0]] = Q::one();
            seen[comp[0]] = true;
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if cartan[i][j] != 0 && !seen[j] {
                        len_sq[j] = &len_sq[i] * qi(cartan[i][j]) / qi(cartan[j][i]);
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            let longest = comp.iter().map(|&i| len_sq[i].clone()).max().unwrap();
            for &i in comp {
                len_sq[i] = &len_sq[i] * qi(2) / &longest;
            }
        }
        let mut form = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                form[(i, j)] = &len_sq[i] * qi(cartan[i][j]) / qi(2);
            }
        }
        if !form.is_symmetric() {
            return Err(Error::NotCartan("matrix is not symmetrizable".into()));
        }
        if let Some((order, value)) = form.first_nonpositive_minor() {
            return Err(Error::NotFiniteType { order, value: fmt_q(&value) });
        }
        let simple: Vec<Weight> = (0..n).map(|i| Weight::unit(n, i)).collect();
        Self::assemble(cartan.to_vec(), simple, form, components)
    }

    /// Root system generated by `simple_roots` inside an ambient space with
    /// Gram matrix `form`. The form need not be normalized.
    pub fn from_simple_roots(form: Matrix, simple_roots: Vec<Weight>) -> Result<Self> {
        let dim = form.rows();
        if form.cols() != dim || !form.is_symmetric() {
            return Err(Error::Shape("form must be a symmetric square matrix".into()));
        }
        if simple_roots.iter().any(|r| r.dim() != dim) {
            return Err(Error::Shape(format!("simple roots must have {dim} coordinates")));
        }
        let n = simple_roots.len();
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            let len_i = form.pair(&simple_roots[i], &simple_roots[i]);
            if !len_i.is_positive() {
                return Err(Error::NotCartan(format!(
                    "simple root {} has non-positive square length",
                    simple_roots[i]
                )));
            }
            for j in 0..n {
                let a = qi(2) * form.pair(&simple_roots[i], &simple_roots[j]) / &len_i;
                cartan[i][j] = crate::rational::to_i64(&a).ok_or_else(|| {
                    Error::NotCartan(format!(
                        "<{}, {}^vee> = {} is not an integer",
                        simple_roots[j],
                        simple_roots[i],
                        fmt_q(&a)
                    ))
                })?;
            }
        }
        validate_cartan_shape(&cartan)?;
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram[(i, j)] = form.pair(&simple_roots[i], &simple_roots[j]);
            }
        }
        if let Some((order, value)) = gram.first_nonpositive_minor() {
            return Err(Error::NotFiniteType { order, value: fmt_q(&value) });
        }
        let components = dynkin_components(&cartan);
        Self::assemble(cartan, simple_roots, form, components)
    }

    /// Root system of a named type such as `A2`, `B3`, `A1xA1`.
    pub fn from_type(name: &str) -> Result<Self> {
        Self::from_cartan(&cartan_for_type(name)?)
    }

    fn assemble(
        cartan: Vec<Vec<i64>>,
        simple_roots: Vec<Weight>,
        form: Matrix,
        components: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut rs = RootSystem { cartan, simple_roots, positive_roots: Vec::new(), form, components };
        rs.positive_roots = rs.close_positive_roots();
        Ok(rs)
    }

    /// Positive roots by root-string closure, in order of increasing height.
    fn close_positive_roots(&self) -> Vec<Weight> {
        let mut roots: Vec<Weight> = self.simple_roots.clone();
        let mut known: HashSet<Weight> = roots.iter().cloned().collect();
        let mut next = 0;
        while next < roots.len() {
            let beta = roots[next].clone();
            next += 1;
            for alpha in &self.simple_roots {
                let mut p = 0i64;
                let mut down = &beta - alpha;
                while known.contains(&down) {
                    p += 1;
                    down = &down - alpha;
                }
                let pairing = self.coroot_pairing(&beta, alpha);
                let q = qi(p) - pairing;
                if q.is_positive() {
                    let up = &beta + alpha;
                    if known.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        roots
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// All roots, positive first.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.rows()
    }

    pub fn pair(&self, x: &Weight, y: &Weight) -> Q {
        self.form.pair(x, y)
    }

    pub fn norm_sq(&self, x: &Weight) -> Q {
        self.form.pair(x, x)
    }

    /// `<x, alpha^vee> = 2 (x, alpha) / (alpha, alpha)`
    pub fn coroot_pairing(&self, x: &Weight, alpha: &Weight) -> Q {
        qi(2) * self.pair(x, alpha) / self.norm_sq(alpha)
    }

    pub fn reflect(&self, x: &Weight, alpha: &Weight) -> Weight {
        x.add_scaled(&-self.coroot_pairing(x, alpha), alpha)
    }

    /// Half-sum of positive roots.
    pub fn rho(&self) -> Weight {
        let mut acc = Weight::zero(self.ambient_dim());
        for r in &self.positive_roots {
            acc += r;
        }
        acc.scale(&Q::new(1.into(), 2.into()))
    }

    /// Coordinates of `x` in the simple-root basis, if `x` is in their span.
    pub fn root_coords(&self, x: &Weight) -> Option<Vec<Q>> {
        coords_in_span(&self.form, &self.simple_roots, x)
    }

    /// Fundamental weights inside the span of the roots.
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let n = self.rank();
        if n == 0 {
            return Vec::new();
        }
        let a = Matrix::from_int_rows(&self.cartan).expect("square Cartan matrix");
        let inv = a.inverse().expect("Cartan matrix of finite type is invertible");
        (0..n)
            .map(|i| {
                let mut w = Weight::zero(self.ambient_dim());
                for k in 0..n {
                    w = w.add_scaled(&inv[(k, i)], &self.simple_roots[k]);
                }
                w
            })
            .collect()
    }

    /// First simple root whose coroot pairing with `x` is not a natural number.
    pub fn dominance_violation(&self, x: &Weight) -> Option<(usize, Q)> {
        self.simple_roots
            .iter()
            .map(|a| self.coroot_pairing(x, a))
            .enumerate()
            .find(|(_, p)| !p.is_integer() || p.is_negative())
    }

    pub fn is_dominant_integral(&self, x: &Weight) -> bool {
        self.dominance_violation(x).is_none()
    }

    pub fn check_dominant_integral(&self, x: &Weight) -> Result<()> {
        match self.dominance_violation(x) {
            None => Ok(()),
            Some((i, p)) => Err(Error::NotDominantIntegral {
                weight: x.to_string(),
                root: self.simple_roots[i].to_string(),
                pairing: fmt_q(&p),
            }),
        }
    }

    /// Dominant element of the Weyl orbit of `x`.
    pub fn dominant_conjugate(&self, x: &Weight) -> Weight {
        let mut cur = x.clone();
        'outer: loop {
            for a in &self.simple_roots {
                if self.coroot_pairing(&cur, a).is_negative() {
                    cur = self.reflect(&cur, a);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Matrix of the reflection in `alpha`, acting on ambient coordinates.
    pub fn reflection_matrix(&self, alpha: &Weight) -> Matrix {
        let n = self.ambient_dim();
        let cols: Vec<Weight> = (0..n).map(|j| self.reflect(&Weight::unit(n, j), alpha)).collect();
        Matrix::from_columns(&cols, n)
    }
}

fn validate_cartan_shape(cartan: &[Vec<i64>]) -> Result<()> {
    let n = cartan.len();
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotCartan(format!("row {i} has length {} (expected {n})", row.len())));
        }
        if row[i] != 2 {
            return Err(Error::NotCartan(format!("diagonal entry ({i},{i}) is {}", row[i])));
        }
        for j in 0..n {
            if i != j && row[j] > 0 {
                return Err(Error::NotCartan(format!("off-diagonal entry ({i},{j}) is positive")));
            }
            if i != j && (row[j] == 0) != (cartan[j][i] == 0) {
                return Err(Error::NotCartan(format!("entries ({i},{j}) and ({j},{i}) disagree on zero")));
            }
        }
    }
    Ok(())
}

fn dynkin_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            k += 1;
            for j in 0..n {
                if cartan[i][j] != 0 && !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Cartan matrix of a product of simple types, e.g. `"A1xA1"`, `"B2"`, `"G2xA3"`.
pub fn cartan_for_type(name: &str) -> Result<Vec<Vec<i64>>> {
    let mut blocks = Vec::new();
    for part in name.split(['x', 'X', '×']) {
        let part = part.trim();
        let bad = || Error::Parse(format!("unknown Cartan type `{part}` in `{name}`"));
        let mut chars = part.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        blocks.push(simple_cartan(letter, rank).ok_or_else(bad)?);
    }
    let total: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0i64; total]; total];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out[off + i][off + j] = v;
            }
        }
        off += b.len();
    }
    Ok(out)
}

fn simple_cartan(letter: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let edges: Vec<(usize, usize)> = match (letter, n) {
        ('A', 1..) | ('B', 2..) | ('C', 2..) | ('F', 4) | ('G', 2) => chain(n),
        ('D', 4..) => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        ('E', 6..=8) => {
            let mut e = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            e.extend((4..n - 1).map(|i| (i, i + 1)));
            e
        }
        _ => return None,
    };
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    match letter {
        'B' => a[n - 1][n - 2] = -2,
        'C' => a[n - 2][n - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[1][0] = -3,
        _ => {}
    }
    Some(a)
}

/// Element of a Weyl group: a reduced word in the simple reflections and the
/// matrix it induces on ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Matrix,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        self.matrix.apply(x)
    }

    /// `(-1)^length`
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        let positive: HashSet<&Weight> = rs.positive_roots().iter().collect();
        rs.positive_roots().iter().filter(|r| !positive.contains(&self.apply(r))).count()
    }
}

/// All elements of the Weyl group, in breadth-first order (non-decreasing length).
pub fn weyl_group(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    weyl_group_with_cap(rs, DEFAULT_WEYL_CAP)
}

pub fn weyl_group_with_cap(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let gens: Vec<Matrix> = rs.simple_roots().iter().map(|a| rs.reflection_matrix(a)).collect();
    let identity = WeylElement { word: Vec::new(), matrix: Matrix::identity(rs.ambient_dim()) };
    let mut seen: HashMap<Matrix, usize> = HashMap::from([(identity.matrix.clone(), 0)]);
    let mut out = vec![identity];
    let mut next = 0;
    while next < out.len() {
        let cur = out[next].clone();
        next += 1;
        for (i, g) in gens.iter().enumerate() {
            let m = g.mul(&cur.matrix);
            if seen.contains_key(&m) {
                continue;
            }
            if out.len() >= cap {
                return Err(Error::WeylGroupTooLarge { cap });
            }
            seen.insert(m.clone(), out.len());
            let mut word = vec![i];
            word.extend_from_slice(&cur.word);
            out.push(WeylElement { word, matrix: m });
        }
    }
    Ok(out)
}

/// Dimension of the simple module with the given dominant integral highest weight.
pub fn weyl_dim(rs: &RootSystem, highest_weight: &Weight) -> Result<u64> {
    rs.check_dominant_integral(highest_weight)?;
    let rho = rs.rho();
    let shifted = highest_weight + &rho;
    let mut dim = Q::one();
    for alpha in rs.positive_roots() {
        dim *= rs.pair(&shifted, alpha) / rs.pair(&rho, alpha);
    }
    debug_assert!(dim.is_integer());
    Ok(crate::rational::to_i64(&dim).expect("dimension fits in i64") as u64)
}

/// Full character of the simple module `V(highest_weight)` via Freudenthal's
/// recursion. Keys are the weights with nonzero multiplicity.
pub fn character(rs: &RootSystem, highest_weight: &Weight) -> Result<BTreeMap<Weight, u64>> {
    rs.check_dominant_integral(highest_weight)?;
    let rho = rs.rho();
    let top = rs.norm_sq(&(highest_weight + &rho));
    let in_support = |nu: &Weight| -> bool {
        let dom = rs.dominant_conjugate(nu);
        rs.root_coords(&(highest_weight - &dom)).is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    };

    let mut mult: HashMap<Weight, u64> = HashMap::from([(highest_weight.clone(), 1)]);
    let mut layer = vec![highest_weight.clone()];
    while !layer.is_empty() {
        let mut below: Vec<Weight> = Vec::new();
        let mut queued: HashSet<Weight> = HashSet::new();
        for nu in &layer {
            for a in rs.simple_roots() {
                let cand = nu - a;
                if !mult.contains_key(&cand) && !queued.contains(&cand) && in_support(&cand) {
                    queued.insert(cand.clone());
                    below.push(cand);
                }
            }
        }
        for nu in &below {
            let mut acc = Q::zero();
            for alpha in rs.positive_roots() {
                let mut up = nu + alpha;
                while let Some(&m) = mult.get(&up) {
                    acc += qi(m as i64) * rs.pair(&up, alpha);
                    up = &up + alpha;
                }
            }
            let denom = &top - rs.norm_sq(&(nu + &rho));
            let m = qi(2) * acc / denom;
            debug_assert!(m.is_integer() && !m.is_negative());
            mult.insert(nu.clone(), crate::rational::to_i64(&m).expect("multiplicity fits") as u64);
        }
        layer = below;
    }
    Ok(mult.into_iter().filter(|(_, m)| *m > 0).collect())
}

/// Multiplicity of `weight` in `V(highest_weight)`.
pub fn freudenthal_multiplicity(rs: &RootSystem, highest_weight: &Weight, weight: &Weight) -> Result<u64> {
    Ok(character(rs, highest_weight)?.get(weight).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn a1_single_root() {
        let rs = RootSystem::from_type("A1").unwrap();
        assert_eq!(rs.positive_roots(), &[Weight::from_ints(&[1])]);
        assert_eq!(rs.norm_sq(&rs.positive_roots()[0]), qi(2));
    }

    #[test]
    fn a2_roots_by_reflection_closure() {
        let rs = RootSystem::from_cartan(&[vec![2, -1], vec![-1, 2]]).unwrap();
        // oracle: close {simple roots} under all reflections, keep the positive ones
        let mut all: Vec<Weight> = rs.simple_roots().to_vec();
        all.extend(rs.simple_roots().iter().map(|r| -r));
        loop {
            let mut grew = false;
            for a in rs.simple_roots().to_vec() {
                for r in all.clone() {
                    let s = rs.reflect(&r, &a);
                    if !all.contains(&s) {
                        all.push(s);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut positive: Vec<Weight> = all.into_iter().filter(|r| r.0.iter().all(|c| !c.is_negative())).collect();
        positive.sort();
        let mut ours = rs.positive_roots().to_vec();
        ours.sort();
        assert_eq!(ours, positive);
        assert_eq!(ours.len(), 3);
        assert_eq!(rs.pair(&Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, 1])), qi(-1));
    }

    #[test]
    fn a1xa1_orthogonal() {
        let rs = RootSystem::from_cartan(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(rs.positive_roots().len(), 2);
        assert_eq!(rs.components().len(), 2);
        assert_eq!(rs.pair(&rs.simple_roots()[0], &rs.simple_roots()[1]), qi(0));
    }

    #[test]
    fn positive_root_counts_by_type() {
        let expected = [
            ("A1", 1),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("A2xB2", 7),
        ];
        for (name, count) in expected {
            let rs = RootSystem::from_type(name).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn long_roots_normalized() {
        for name in ["B2", "C3", "G2", "F4", "A2xG2"] {
            let rs = RootSystem::from_type(name).unwrap();
            for comp in rs.components() {
                let longest = rs
                    .positive_roots()
                    .iter()
                    .filter(|r| r.0.iter().enumerate().all(|(i, c)| c.is_zero() || comp.contains(&i)))
                    .map(|r| rs.norm_sq(r))
                    .max()
                    .unwrap();
                assert_eq!(longest, qi(2), "{name}");
            }
        }
    }

    #[test]
    fn rejects_affine_and_malformed() {
        match RootSystem::from_cartan(&[vec![2, -2], vec![-2, 2]]) {
            Err(Error::NotFiniteType { order, .. }) => assert_eq!(order, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(RootSystem::from_cartan(&[vec![2, 1], vec![1, 2]]), Err(Error::NotCartan(_))));
        assert!(matches!(
            RootSystem::from_cartan(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]),
            Err(Error::NotFiniteType { order: 3, .. })
        ));
        assert!(cartan_for_type("Q7").is_err());
    }

    #[test]
    fn weyl_group_profiles() {
        let profile = |name: &str| {
            let rs = RootSystem::from_type(name).unwrap();
            let w = weyl_group(&rs).unwrap();
            let max = w.iter().map(WeylElement::length).max().unwrap();
            let mut p = vec![0; max + 1];
            for e in &w {
                p[e.length()] += 1;
            }
            p
        };
        assert_eq!(profile("A1"), vec![1, 1]);
        assert_eq!(profile("A2"), vec![1, 2, 2, 1]);
        assert_eq!(profile("A1xA1"), vec![1, 2, 1]);
        assert_eq!(profile("B2").iter().sum::<usize>(), 8);
        assert_eq!(profile("G2").iter().sum::<usize>(), 12);
    }

    #[test]
    fn weyl_group_cap() {
        let rs = RootSystem::from_type("A3").unwrap();
        assert!(matches!(weyl_group_with_cap(&rs, 10), Err(Error::WeylGroupTooLarge { cap: 10 })));
        assert_eq!(weyl_group_with_cap(&rs, 24).unwrap().len(), 24);
    }

    #[test]
    fn lengths_are_inversion_counts_and_form_is_invariant() {
        for name in ["A2", "B2", "G2", "A1xA1"] {
            let rs = RootSystem::from_type(name).unwrap();
            let n = rs.ambient_dim();
            for w in weyl_group(&rs).unwrap() {
                assert_eq!(w.inversions(&rs), w.length());
                for i in 0..n {
                    for j in 0..n {
                        let (x, y) = (Weight::unit(n, i), Weight::unit(n, j));
                        assert_eq!(rs.pair(&w.apply(&x), &w.apply(&y)), rs.pair(&x, &y));
                    }
                }
            }
        }
    }

    #[test]
    fn reflections_permute_roots() {
        for name in ["A2", "B3", "G2"] {
            let rs = RootSystem::from_type(name).unwrap();
            let all: HashSet<Weight> = rs.roots().into_iter().collect();
            for a in rs.simple_roots() {
                let image: HashSet<Weight> = all.iter().map(|r| rs.reflect(r, a)).collect();
                assert_eq!(image, all);
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let a1 = RootSystem::from_type("A1").unwrap();
        assert_eq!(weyl_dim(&a1, &Weight::zero(1)).unwrap(), 1);
        // 4 * (alpha/2)
        assert_eq!(weyl_dim(&a1, &Weight(vec![qi(2)])).unwrap(), 5);
        let a2 = RootSystem::from_type("A2").unwrap();
        assert_eq!(weyl_dim(&a2, &Weight::from_ints(&[1, 1])).unwrap(), 8);
        assert!(matches!(weyl_dim(&a1, &Weight(vec![q(1, 4)])), Err(Error::NotDominantIntegral { .. })));
        assert!(weyl_dim(&a1, &Weight(vec![qi(-1)])).is_err());
    }

    #[test]
    fn freudenthal_examples() {
        let a1 = RootSystem::from_type("A1").unwrap();
        assert_eq!(freudenthal_multiplicity(&a1, &Weight(vec![qi(1)]), &Weight::zero(1)).unwrap(), 1);
        let a2 = RootSystem::from_type("A2").unwrap();
        let adjoint = Weight::from_ints(&[1, 1]);
        assert_eq!(freudenthal_multiplicity(&a2, &adjoint, &Weight::zero(2)).unwrap(), 2);
        assert_eq!(freudenthal_multiplicity(&a2, &adjoint, &Weight::from_ints(&[2, 1])).unwrap(), 0);
    }

    #[test]
    fn freudenthal_total_matches_weyl_dim() {
        for name in ["A1", "A2", "B2", "G2", "A1xA1"] {
            let rs = RootSystem::from_type(name).unwrap();
            let fw = rs.fundamental_weights();
            let r = rs.rank();
            let mut labels = vec![0usize; r];
            loop {
                if labels.iter().sum::<usize>() <= 4 {
                    let mut lam = Weight::zero(r);
                    for (i, &a) in labels.iter().enumerate() {
                        lam = lam.add_scaled(&qi(a as i64), &fw[i]);
                    }
                    let total: u64 = character(&rs, &lam).unwrap().values().sum();
                    assert_eq!(total, weyl_dim(&rs, &lam).unwrap(), "{name} {lam}");
                }
                let mut i = 0;
                while i < r {
                    labels[i] += 1;
                    if labels[i] <= 4 {
                        break;
                    }
                    labels[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }
}
