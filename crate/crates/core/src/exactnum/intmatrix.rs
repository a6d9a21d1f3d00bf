//! Integer matrices, Smith normal form, and solution sets of `M·k ≡ 0 (mod l)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, NumError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(NumError::Ragged);
        }
        let n = rows.len();
        Ok(IntMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, NumError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[BigInt]>::to_vec).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, NumError> {
        if self.cols != other.rows {
            return Err(NumError::Shape { left: (self.rows, self.cols), right: (other.rows, other.cols) });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.get_mut(i, j) += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `M·v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * f;
            *self.get_mut(dst, j) += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * f;
            *self.get_mut(i, dst) += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(self.get_mut(r, j));
            *self.get_mut(r, j) = v;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

/// `left · M · right = diag`, with `left`, `right` unimodular and the
/// diagonal entries nonnegative, each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.diag.rows.min(self.diag.cols)).map(|i| self.diag.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pi, pj)) = min_abs_position(&d, t..r, t..c) else { break };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                // floor-division remainders are smaller than the pivot; promote one
                let in_col = min_abs_position(&d, t + 1..r, t..t + 1);
                let in_row = min_abs_position(&d, t..t + 1, t + 1..c);
                match (in_col, in_row) {
                    (Some((i, _)), _) => {
                        d.swap_rows(t, i);
                        left.swap_rows(t, i);
                    }
                    (None, Some((_, j))) => {
                        d.swap_cols(t, j);
                        right.swap_cols(t, j);
                    }
                    (None, None) => unreachable!("unclean pivot row/column without entries"),
                }
                continue;
            }
            // enforce pivot | every entry of the trailing block
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }
    SmithForm { left, diag: d, right }
}

fn min_abs_position(
    d: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// The solution group `{k ∈ (Z/lZ)^cols : M·k ≡ 0 (mod l)}`, presented as a
/// direct sum of cyclic pieces: every solution is uniquely
/// `Σ c_i · generators[i]` with `0 <= c_i < orders[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMod {
    pub modulus: u64,
    pub generators: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
}

impl KernelMod {
    /// Number of solutions.
    pub fn count(&self) -> u128 {
        self.orders.iter().map(|&o| o as u128).product()
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Vec::len)
    }

    /// Every solution, in lexicographic order of the coefficient tuples.
    pub fn elements(&self, width: usize) -> Vec<Vec<u64>> {
        let l = self.modulus;
        let mut out = vec![vec![0u64; width]];
        for (g, &ord) in self.generators.iter().zip(&self.orders) {
            let mut next = Vec::with_capacity(out.len() * ord as usize);
            for base in &out {
                for c in 0..ord {
                    next.push(base.iter().zip(g).map(|(&b, &x)| (b + c * x) % l).collect());
                }
            }
            out = next;
        }
        out
    }
}

/// Solves `M·k ≡ 0 (mod l)` via the Smith normal form of `M`; works for composite `l`.
pub fn kernel_mod(m: &IntMatrix, l: u64) -> Result<KernelMod, NumError> {
    if l < 2 {
        return Err(NumError::Modulus(l));
    }
    let snf = smith_normal_form(m);
    let lb = BigInt::from(l);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for i in 0..m.cols {
        // y_i must satisfy d_i·y_i ≡ 0, i.e. y_i ∈ (l/g)·Z with g = gcd(d_i, l)
        let di = if i < m.rows { snf.diag.get(i, i).clone() } else { BigInt::zero() };
        let g = di.gcd(&lb);
        let g = if di.is_zero() { lb.clone() } else { g };
        if g.is_one() {
            continue;
        }
        let step = &lb / &g;
        let gen: Vec<u64> =
            (0..m.cols).map(|row| (snf.right.get(row, i) * &step).mod_floor(&lb).to_u64().unwrap()).collect();
        generators.push(gen);
        orders.push(g.to_u64().unwrap());
    }
    Ok(KernelMod { modulus: l, generators, orders })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_matrix(m: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Greater => 1,
                        std::cmp::Ordering::Less => -1,
                        std::cmp::Ordering::Equal => 0,
                    })
                    .collect()
            })
            .collect();
        IntMatrix::from_i64_rows(&rows).unwrap()
    }

    #[test]
    fn smith_form_reconstructs() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diag);
        let f = s.invariant_factors();
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn two_by_two_k_has_trivial_kernel_mod_3() {
        let k = kernel_mod(&k_matrix(2), 3).unwrap();
        assert_eq!(k.count(), 1);
        assert_eq!(k.elements(2), vec![vec![0, 0]]);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = kernel_mod(&IntMatrix::zeros(1, 1), 5).unwrap();
        assert_eq!(k.count(), 5);
        let mut e = k.elements(1);
        e.sort();
        assert_eq!(e, (0..5).map(|i| vec![i]).collect::<Vec<_>>());
    }

    #[test]
    fn odd_k_mod_2() {
        let k = kernel_mod(&k_matrix(3), 2).unwrap();
        assert_eq!(k.count(), 2);
        let mut e = k.elements(3);
        e.sort();
        assert_eq!(e, vec![vec![0, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn rejects_small_modulus() {
        assert_eq!(kernel_mod(&IntMatrix::zeros(1, 1), 1), Err(NumError::Modulus(1)));
    }

    #[test]
    fn wide_matrix_has_free_columns() {
        let m = IntMatrix::from_i64_rows(&[vec![1, 1, 1]]).unwrap();
        let k = kernel_mod(&m, 4).unwrap();
        assert_eq!(k.count(), 16);
    }
}
