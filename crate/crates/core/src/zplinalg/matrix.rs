use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds from row vectors. Panics if rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Copy with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> IntMatrix {
        let rows = (0..self.rows)
            .filter(|&a| a != i)
            .map(|a| (0..self.cols).filter(|&b| b != j).map(|b| self[(a, b)]).collect())
            .collect::<Vec<Vec<i64>>>();
        let mut m = IntMatrix::from_rows(rows);
        if m.rows == 0 {
            m.cols = self.cols.saturating_sub(1);
        }
        m
    }

    /// Row `k` of the result is row `perm[k]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> IntMatrix {
        assert_eq!(perm.len(), self.rows);
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (k, &src) in perm.iter().enumerate() {
            m.data[k * self.cols..(k + 1) * self.cols].copy_from_slice(self.row(src));
        }
        m
    }

    /// Column `k` of the result is column `perm[k]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> IntMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (k, &src) in perm.iter().enumerate() {
                m[(i, k)] = self[(i, src)];
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    /// `self · v` reduced into `[0, p)`.
    pub fn mul_vec_mod(&self, v: &[u64], p: u64) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let acc: i128 = self.row(i).iter().zip(v).map(|(&a, &x)| a as i128 * x as i128).sum();
                acc.rem_euclid(p as i128) as u64
            })
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minor_and_permutations() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.minor(1, 0).to_rows(), vec![vec![2, 3], vec![8, 9]]);
        assert_eq!(m.permute_rows(&[2, 0, 1]).row(0), &[7, 8, 9]);
        assert_eq!(m.permute_cols(&[2, 0, 1]).row(0), &[3, 1, 2]);
        assert_eq!(m.transpose()[(0, 2)], 7);
        let one = IntMatrix::from_rows(vec![vec![5]]).minor(0, 0);
        assert_eq!((one.rows(), one.cols()), (0, 0));
    }

    #[test]
    fn mul_vec() {
        let m = IntMatrix::from_rows(vec![vec![1, 1, -2], vec![-2, 1, 1]]);
        assert_eq!(m.mul_vec_mod(&[1, 1, 1], 3), vec![0, 0]);
        assert_eq!(m.mul_vec_mod(&[0, 0, 1], 5), vec![3, 1]);
    }
}
