//! Exact integer matrices and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let data: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().cloned().map(Into::into).collect()).collect();
        for r in &data {
            assert_eq!(r.len(), cols, "ragged matrix");
        }
        IntMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.clone()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src][j] * factor;
            self.data[dst][j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for r in &mut self.data {
            let v = &r[src] * factor;
            r[dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.data[i] {
            *v = -v.clone();
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `u · a · v = diag(diagonal)` with `u`, `v` unimodular and each nonzero
/// diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Integer combinations of the rows of the input that vanish: rows of `u`
    /// past the rank.
    pub fn left_kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.u.rows()).map(|i| self.u.row(i).to_vec()).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &d.data[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < d.data[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..m {
            if d.data[i][t].is_zero() {
                continue;
            }
            let q = -d.data[i][t].div_floor(&d.data[t][t]);
            d.add_row(i, t, &q);
            u.add_row(i, t, &q);
            if !d.data[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..n {
            if d.data[t][j].is_zero() {
                continue;
            }
            let q = -d.data[t][j].div_floor(&d.data[t][t]);
            d.add_col(j, t, &q);
            v.add_col(j, t, &q);
            if !d.data[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into row t and retry
        let pivot = d.data[t][t].clone();
        let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d.data[i][j] % &pivot).is_zero()));
        if let Some(i) = offending {
            let one = BigInt::one();
            d.add_row(t, i, &one);
            u.add_row(t, i, &one);
            continue;
        }
        if d.data[t][t].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..m.min(n)).map(|i| d.data[i][i].clone()).collect();
    SnfResult { diagonal, u, v }
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AbelianStructure {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianStructure {
    /// Cokernel of the row lattice of `relations` inside `Z^cols`.
    pub fn from_relations(relations: &IntMatrix) -> Result<Self> {
        let snf = smith_normal_form(relations);
        let mut torsion = Vec::new();
        for d in snf.diagonal.iter().filter(|d| !d.is_zero() && !d.is_one()) {
            let t: u64 = d.try_into().map_err(|_| Error::Overflow("torsion coefficient"))?;
            torsion.push(t);
        }
        Ok(AbelianStructure { free_rank: relations.cols() - snf.rank(), torsion })
    }

    pub fn free(rank: usize) -> Self {
        AbelianStructure { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Smallest `e ≥ 1` with `e·g = 0` for all `g`; `None` if infinite.
    pub fn exponent(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(1u64, |acc, &t| acc.lcm(&t)))
    }
}

impl fmt::Display for AbelianStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Does `target` lie in the integer row span of `a`?
pub fn row_lattice_contains(a: &IntMatrix, target: &[BigInt]) -> bool {
    assert_eq!(target.len(), a.cols());
    let snf = smith_normal_form(a);
    let t = IntMatrix::from_rows(a.cols(), &[target.to_vec()]);
    let tv = t.mul(&snf.v);
    (0..a.cols()).all(|j| {
        let x = tv.get(0, j);
        match snf.diagonal.get(j) {
            Some(dj) if !dj.is_zero() => (x % dj).is_zero(),
            _ => x.is_zero(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        let prod = s.u.mul(a).mul(&s.v);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let expected = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(prod.get(i, j), &expected);
            }
        }
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let nz: Vec<_> = s.diagonal.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            assert!((w[1] % w[0]).is_zero());
        }
        s
    }

    #[test]
    fn diagonal_examples() {
        let s = check(&IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 0]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::zero()]);
        for r in 1..6i64 {
            let s = check(&IntMatrix::from_rows(3, &[vec![-r * r, r, 0]]));
            assert_eq!(s.diagonal, vec![BigInt::from(r)]);
        }
        let s = check(&IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn empty_and_zero() {
        let s = check(&IntMatrix::zeros(0, 3));
        assert!(s.diagonal.is_empty());
        let ab = AbelianStructure::from_relations(&IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(ab.to_string(), "Z^2");
    }

    #[test]
    fn structure_display() {
        let ab = AbelianStructure::from_relations(&IntMatrix::from_rows(1, &[vec![2]])).unwrap();
        assert_eq!(ab.to_string(), "Z/2");
        let ab = AbelianStructure { free_rank: 2, torsion: vec![3] };
        assert_eq!(ab.to_string(), "Z^2 x Z/3");
        assert_eq!(AbelianStructure::free(0).to_string(), "0");
        assert_eq!(AbelianStructure { free_rank: 0, torsion: vec![2, 4] }.exponent(), Some(4));
    }

    #[test]
    fn lattice_membership() {
        let a = IntMatrix::from_rows(3, &[vec![1, 1, 2], vec![0, 1, -1]]);
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(row_lattice_contains(&a, &big(&[1, 0, 3])));
        assert!(!row_lattice_contains(&a, &big(&[1, 0, 0])));
        let b = IntMatrix::from_rows(2, &[vec![2, 0]]);
        assert!(!row_lattice_contains(&b, &big(&[1, 0])));
        assert!(row_lattice_contains(&b, &big(&[4, 0])));
    }

    #[test]
    fn left_kernel_vanishes() {
        let a = IntMatrix::from_rows(2, &[vec![1, 2], vec![2, 4], vec![3, 5]]);
        let s = smith_normal_form(&a);
        let k = s.left_kernel();
        assert_eq!(k.len(), 1);
        let km = IntMatrix::from_rows(3, &k).mul(&a);
        assert!(km.row(0).iter().all(|x| x.is_zero()));
    }
}
