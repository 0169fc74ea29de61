//! Exact rational scalars, weight vectors and the small dense matrix
//! routines the rest of the crate needs.
//!
//! Every weight in this crate has rational coordinates, so the real part
//! of a weight is the weight itself; no complex data is ever represented.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

/// `n / d` as an exact rational. Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `"3"`, `"-3/4"` or `" 1 / 2 "` into an exact rational.
pub fn parse_q(text: &str) -> Result<Q> {
    let text = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a rational number"));
    if let Some((int, frac)) = text.split_once('.') {
        if text.contains('/') || frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        return Ok(Q::new(digits, num::pow(BigInt::from(10), frac.len())));
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a zero denominator")));
    }
    Ok(Q::new(num, den))
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Weight (or any vector) in a fixed rational coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| qi(c)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.0[i] = Q::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Q, other: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    /// Least common multiple of all coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, "]")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("matrix rows have unequal lengths".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Weight], dim: usize) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..dim {
                m[(i, j)] = c.0[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Weight {
        Weight((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        assert_eq!(self.cols, v.dim(), "matrix/vector shape mismatch");
        Weight((0..self.rows).map(|i| self.row(i).iter().zip(&v.0).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Determinant of the leading `k x k` block.
    pub fn leading_minor(&self, k: usize) -> Q {
        let mut block = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                block[(i, j)] = self[(i, j)].clone();
            }
        }
        block.determinant()
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Q::zero();
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[(r, col)] / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = &f * &a[(col, c)];
                    a[(r, c)] -= v;
                }
            }
        }
        det
    }

    /// Leading minors `1..=n`, returning the first non-positive one.
    pub fn first_nonpositive_minor(&self) -> Option<(usize, Q)> {
        (1..=self.rows).map(|k| (k, self.leading_minor(k))).find(|(_, d)| !d.is_positive())
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(piv) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, rank);
            let p = a[(rank, col)].clone();
            for r in 0..a.rows {
                if r == rank || a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &p;
                for c in col..a.cols {
                    let v = &f * &a[(rank, c)];
                    a[(r, c)] -= v;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] /= &p;
                inv[(col, c)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let v = &f * &a[(col, c)];
                    a[(r, c)] -= v;
                    let v = &f * &inv[(col, c)];
                    inv[(r, c)] -= v;
                }
            }
        }
        Some(inv)
    }

    /// Symmetric bilinear pairing `x^T self y`.
    pub fn pair(&self, x: &Weight, y: &Weight) -> Q {
        debug_assert!(self.rows == x.dim() && self.cols == y.dim());
        let mut acc = Q::zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * &self[(i, j)] * yj;
                }
            }
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&Weight> for &Matrix {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        self.apply(rhs)
    }
}

/// Coefficients `c` with `target = sum_i c_i basis_i`, if `target` lies in the
/// span of the (linearly independent) `basis`, using `form` to set up the
/// normal equations.
pub fn coords_in_span(form: &Matrix, basis: &[Weight], target: &Weight) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    let n = basis.len();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = form.pair(&basis[i], &basis[j]);
        }
    }
    let rhs = Weight(basis.iter().map(|b| form.pair(b, target)).collect());
    let c = gram.inverse()?.apply(&rhs);
    let mut back = Weight::zero(target.dim());
    for (ci, b) in c.0.iter().zip(basis) {
        back = back.add_scaled(ci, b);
    }
    (back == *target).then_some(c.0)
}

/// A basis of the lattice generated by `gens` (integer row reduction after
/// clearing denominators). Returned vectors are independent.
pub fn lattice_basis(gens: &[Weight]) -> Vec<Weight> {
    let Some(dim) = gens.first().map(Weight::dim) else {
        return Vec::new();
    };
    let den = gens.iter().fold(BigInt::one(), |acc, g| num::integer::lcm(acc, g.denominator_lcm()));
    let scale = Q::from_integer(den.clone());
    let mut rows: Vec<Vec<BigInt>> =
        gens.iter().map(|g| g.0.iter().map(|x| (x * &scale).to_integer()).collect()).collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..dim {
        // Euclid on column `col` among the remaining rows
        loop {
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            let pivot_row = rows[piv].clone();
            for &i in &nonzero {
                if i == piv {
                    continue;
                }
                let f = &rows[i][col] / &pivot_row[col];
                for c in 0..dim {
                    let v = &f * &pivot_row[c];
                    rows[i][c] -= v;
                }
            }
        }
        if let Some(i) = rows.iter().position(|r| !r[col].is_zero()) {
            basis.push(rows.remove(i));
        }
    }
    basis.into_iter().map(|r| Weight(r.into_iter().map(|x| Q::new(x, den.clone())).collect())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_q(" 4 ").unwrap(), qi(4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(parse_q("12.5").unwrap(), q(25, 2));
        assert_eq!(parse_q("-0.25").unwrap(), q(-1, 4));
        assert!(parse_q("1.").is_err());
        assert!(parse_q("1.5/2").is_err());
        assert_eq!(fmt_q(&q(6, 4)), "3/2");
        assert_eq!(fmt_q(&qi(-2)), "-2");
    }

    #[test]
    fn inverse_and_minors() {
        let a2 = Matrix::from_int_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let inv = a2.inverse().unwrap();
        assert_eq!(inv.mul(&a2), Matrix::identity(2));
        assert_eq!(inv[(0, 0)], q(2, 3));
        assert_eq!(a2.determinant(), qi(3));
        assert!(a2.first_nonpositive_minor().is_none());
        let affine = Matrix::from_int_rows(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(affine.first_nonpositive_minor(), Some((2, qi(0))));
        assert!(affine.inverse().is_none());
        assert_eq!(affine.rank(), 1);
    }

    #[test]
    fn lattice_basis_reduces_generators() {
        let gens = vec![Weight(vec![q(1, 2), qi(0)]), Weight(vec![qi(1), qi(0)]), Weight(vec![q(1, 2), qi(3)])];
        let basis = lattice_basis(&gens);
        assert_eq!(basis.len(), 2);
        let m = Matrix::from_columns(&basis, 2);
        assert_eq!(m.determinant().abs(), q(3, 2));
        assert!(lattice_basis(&[]).is_empty());
    }

    #[test]
    fn span_coordinates() {
        let form = Matrix::identity(3);
        let basis = vec![Weight::from_ints(&[1, 1, 0]), Weight::from_ints(&[0, 1, 1])];
        let c = coords_in_span(&form, &basis, &Weight::from_ints(&[2, 5, 3])).unwrap();
        assert_eq!(c, vec![qi(2), qi(3)]);
        assert!(coords_in_span(&form, &basis, &Weight::from_ints(&[1, 0, 0])).is_none());
    }
}
