//! Flats as row spaces of exact rational normal vectors.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;
use num_traits::Zero;

use crate::arrangements::Hyperplane;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Row<T> = Vec<Ratio<T>>;

/// Normal vector: `e_v` for `x_v = 0`, `e_lhs - 2^p e_rhs` for
/// `x_lhs = 2^p x_rhs`.
pub fn normal<T: Scalar>(h: &Hyperplane, n: usize) -> Result<Row<T>> {
    let mut row = vec![Ratio::zero(); n];
    match *h {
        Hyperplane::Coordinate { var } => row[var - 1] = Ratio::from_integer(T::one()),
        Hyperplane::Ratio { lhs, rhs, power } => {
            let scale = T::from_u64(1u64 << power)
                .ok_or_else(|| Error::InvalidParameter(format!("2^{power} does not fit")))?;
            row[lhs - 1] = Ratio::from_integer(T::one());
            row[rhs - 1] = Ratio::from_integer(-scale);
        }
        Hyperplane::Difference { .. } => {
            return Err(Error::InvalidParameter(
                "normals are only built for multiplicative hyperplanes".into(),
            ))
        }
    }
    Ok(row)
}

/// Reduced row echelon form with zero rows dropped. Two row lists span the
/// same space iff their reduced forms are equal.
pub fn rref<T: Scalar>(mut rows: Vec<Row<T>>) -> Vec<Row<T>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = Ratio::from_integer(T::one()) / rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot = rows[pivot_row].clone();
                for (x, p) in rows[r].iter_mut().zip(pivot) {
                    *x = x.clone() - factor.clone() * p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

pub fn rank<T: Scalar>(rows: &[Row<T>]) -> usize {
    rref(rows.to_vec()).len()
}

/// Variables `v` (1-based) with `x_v = 0` on the whole flat, i.e. `e_v` in the
/// row space.
pub fn forced_zeros<T: Scalar>(rows: &[Row<T>], n: usize) -> Vec<usize> {
    let r = rank(rows);
    (1..=n)
        .filter(|&v| {
            let mut extended = rows.to_vec();
            let mut e = vec![Ratio::zero(); n];
            e[v - 1] = Ratio::from_integer(T::one());
            extended.push(e);
            rank(&extended) == r
        })
        .collect()
}

/// Intersection lattice generated from row spaces, with the ambient space at
/// index 0.
#[derive(Debug, Clone)]
pub struct LinearPoset<T: Scalar> {
    pub n: usize,
    /// Reduced basis of each flat's normal space.
    pub bases: Vec<Vec<Row<T>>>,
}

impl<T: Scalar> LinearPoset<T> {
    pub fn build(n: usize, hyperplanes: &[Hyperplane]) -> Result<Self> {
        let normals = hyperplanes
            .iter()
            .map(|h| normal::<T>(h, n))
            .collect::<Result<Vec<_>>>()?;
        let mut index: HashMap<Vec<Row<T>>, usize> = HashMap::new();
        let mut bases: Vec<Vec<Row<T>>> = vec![Vec::new()];
        index.insert(Vec::new(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for nv in &normals {
                let mut rows = bases[i].clone();
                rows.push(nv.clone());
                let key = rref(rows);
                if key.len() == bases[i].len() || index.contains_key(&key) {
                    continue;
                }
                index.insert(key.clone(), bases.len());
                queue.push_back(bases.len());
                bases.push(key);
            }
        }
        Ok(Self { n, bases })
    }

    pub fn dimension(&self, i: usize) -> usize {
        self.n - self.bases[i].len()
    }

    /// Flat `i` is contained in flat `j`: the normals of `j` lie in the span of
    /// those of `i`.
    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        let mut rows = self.bases[i].clone();
        rows.extend(self.bases[j].iter().cloned());
        rank(&rows) == self.bases[i].len()
    }

    pub fn mobius(&self) -> Vec<i64> {
        let dims: Vec<usize> = (0..self.bases.len()).map(|i| self.dimension(i)).collect();
        super::mobius_top_down(&dims, |x, y| self.is_subset(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Ratio<i64> {
        Ratio::from_integer(v)
    }

    #[test]
    fn rank_and_forced_zeros() {
        // x1 = 2 x2, x2 = x1: forces x1 = x2 = 0
        let rows: Vec<Row<i64>> = vec![
            normal(&Hyperplane::ratio(1, 2, 1), 3).unwrap(),
            normal(&Hyperplane::ratio(1, 2, 0), 3).unwrap(),
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(forced_zeros(&rows, 3), vec![1, 2]);
        assert_eq!(rref(rows), vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
    }

    #[test]
    fn consistent_cycle_has_no_zeros() {
        let rows: Vec<Row<i64>> = [
            Hyperplane::ratio(2, 1, 1),
            Hyperplane::ratio(3, 2, 1),
            Hyperplane::ratio(3, 1, 2),
        ]
        .iter()
        .map(|h| normal(h, 3).unwrap())
        .collect();
        assert_eq!(rank(&rows), 2);
        assert!(forced_zeros(&rows, 3).is_empty());
    }
}
