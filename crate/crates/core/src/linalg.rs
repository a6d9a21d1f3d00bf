//! Exact Gaussian elimination over cyclotomic fields.
//!
//! Vectors are dense `Vec<Cyclotomic>`; elimination skips zero entries, which
//! keeps the monomial-style systems arising from Clifford algebras cheap.

use crate::exactnum::{CycloField, Cyclotomic};

pub type Vector = Vec<Cyclotomic>;

/// Reduced row echelon form of a list of row vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the pivot rows; the result is zero iff `v` lies in the row span.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            axpy(&mut v, &f, row);
        }
        v
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v).iter().all(Cyclotomic::is_zero)
    }
}

/// `v -= f * row`, touching only the nonzero entries of `row`.
fn axpy(v: &mut [Cyclotomic], f: &Cyclotomic, row: &[Cyclotomic]) {
    for (x, r) in v.iter_mut().zip(row) {
        if !r.is_zero() {
            *x -= &(f * r);
        }
    }
}

pub fn row_reduce(mut rows: Vec<Vector>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(next, found);
        let inv = rows[next][col].inv().expect("nonzero pivot");
        for x in rows[next].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let f = row[col].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    Echelon { rows, pivots, ncols }
}

pub fn rank(rows: Vec<Vector>, ncols: usize) -> usize {
    row_reduce(rows, ncols).rank()
}

/// Basis of `{x : A·x = 0}` where `A` is given by its rows.
pub fn nullspace(rows: Vec<Vector>, ncols: usize, field: CycloField) -> Vec<Vector> {
    let ech = row_reduce(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![field.zero(); ncols];
            x[free] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[free].is_zero() {
                    x[p] = -&row[free];
                }
            }
            x
        })
        .collect()
}

/// Coefficients `c` with `Σ c_i · vectors[i] = target`, if any.
pub fn solve_combination(vectors: &[Vector], target: &[Cyclotomic], field: CycloField) -> Option<Vector> {
    // Columns are the given vectors plus the negated target; look for a
    // null vector whose last coordinate is 1.
    let n = vectors.len();
    let dim = target.len();
    let rows: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut r: Vector = vectors.iter().map(|v| v[i].clone()).collect();
            r.push(-&target[i]);
            r
        })
        .collect();
    let ech = row_reduce(rows, n + 1);
    if ech.pivots.contains(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = -&row[n];
    }
    Some(x)
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector], ncols: usize) -> bool {
    let ea = row_reduce(a.to_vec(), ncols);
    ea.rank() == rank(b.to_vec(), ncols) && b.iter().all(|v| ea.contains(v))
}

/// Inverse of a square matrix given by rows.
pub fn inverse(m: &[Vector], field: CycloField) -> Option<Vec<Vector>> {
    let n = m.len();
    let rows: Vec<Vector> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let ech = row_reduce(rows, 2 * n);
    if ech.rank() < n || ech.pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    Some(ech.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vector], b: &[Vector], field: CycloField) -> Vec<Vector> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![field.zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += &(x * y);
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycloField {
        CycloField::rationals()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().from_int(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(rows.clone(), 3), 2);
        let ns = nullspace(rows.clone(), 3, q());
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: Cyclotomic = r.iter().zip(&ns[0]).fold(q().zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn combination_and_span() {
        let basis = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let c = solve_combination(&basis, &v(&[2, 3, 5]), q()).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(solve_combination(&basis, &v(&[1, 1, 1]), q()).is_none());
        assert!(same_span(&basis, &[v(&[1, 1, 2]), v(&[1, -1, 0])], 3));
        assert!(!same_span(&basis, &[v(&[1, 1, 2])], 3));
    }

    #[test]
    fn inverse_over_gaussian_rationals() {
        let f = CycloField::gaussian();
        let i = f.zeta_pow(1);
        let m = vec![vec![f.one(), i.clone()], vec![-&i, f.from_int(2)]];
        let inv = inverse(&m, f).unwrap();
        let id = mat_mul(&m, &inv, f);
        assert!(id[0][0].is_one() && id[1][1].is_one() && id[0][1].is_zero() && id[1][0].is_zero());
        let singular = vec![vec![f.one(), i.clone()], vec![i.clone(), -&f.one()]];
        assert!(inverse(&singular, f).is_none());
    }
}
