//! Dense Gaussian elimination over `F_q`.

use crate::field::PrimeField;

/// Reduced row echelon form; zero rows are dropped, so the result has
/// exactly `rank` rows.
pub fn row_reduce(field: PrimeField, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

pub fn rank(field: PrimeField, rows: Vec<Vec<u32>>) -> usize {
    row_reduce(field, rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(rank(f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(f, vec![vec![1, 2], vec![2, 3]]), 2);
        assert_eq!(rank(f, vec![vec![0, 0, 0]]), 0);
        assert_eq!(rank(f, vec![]), 0);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(f2, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 2);
    }

    #[test]
    fn rref_shape() {
        let f = PrimeField::new(3).unwrap();
        let r = row_reduce(f, vec![vec![2, 1, 0], vec![1, 1, 1]]);
        assert_eq!(r, vec![vec![1, 0, 2], vec![0, 1, 2]]);
    }
}
