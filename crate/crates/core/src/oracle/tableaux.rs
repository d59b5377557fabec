//! Semistandard tableaux and contingency tables by exhaustive search.

use crate::partition::{partitions_of, Partition};

/// Semistandard tableaux of shape `nu` and content `lambda`.
pub fn brute_kostka(nu: &Partition, lambda: &Partition) -> u64 {
    if nu.size() != lambda.size() {
        return 0;
    }
    let shape: Vec<usize> = nu.parts().iter().map(|&x| x as usize).collect();
    let mut left: Vec<usize> = lambda.parts().iter().map(|&x| x as usize).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn fill(
        shape: &[usize],
        grid: &mut Vec<Vec<usize>>,
        left: &mut [usize],
        r: usize,
        c: usize,
    ) -> u64 {
        if r == shape.len() {
            return 1;
        }
        if c == shape[r] {
            return fill(shape, grid, left, r + 1, 0);
        }
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += fill(shape, grid, left, r, c + 1);
            left[v] += 1;
        }
        total
    }
    fill(&shape, &mut grid, &mut left, 0, 0)
}

/// Nonnegative integer matrices with row sums `rows` and column sums
/// `cols`; optionally symmetric, optionally with entries in `{0, 1}`.
pub fn brute_contingency(
    rows: &Partition,
    cols: &Partition,
    symmetric: bool,
    zero_one: bool,
) -> u64 {
    if rows.size() != cols.size() || (symmetric && rows != cols) {
        return 0;
    }
    let r: Vec<usize> = rows.parts().iter().map(|&x| x as usize).collect();
    let c: Vec<usize> = cols.parts().iter().map(|&x| x as usize).collect();
    let cap = if zero_one { 1 } else { usize::MAX };
    let mut m = vec![vec![0usize; c.len()]; r.len()];
    let mut col_left = c.clone();
    fn go(
        r: &[usize],
        m: &mut Vec<Vec<usize>>,
        col_left: &mut [usize],
        i: usize,
        j: usize,
        row_left: usize,
        symmetric: bool,
        cap: usize,
    ) -> u64 {
        if i == r.len() {
            return col_left.iter().all(|&x| x == 0) as u64;
        }
        if j == col_left.len() {
            if row_left != 0 {
                return 0;
            }
            let next = r.get(i + 1).copied().unwrap_or(0);
            return go(r, m, col_left, i + 1, 0, next, symmetric, cap);
        }
        if symmetric && j < i {
            let v = m[j][i];
            if v > row_left || v > col_left[j] {
                return 0;
            }
            m[i][j] = v;
            col_left[j] -= v;
            let t = go(r, m, col_left, i, j + 1, row_left - v, symmetric, cap);
            col_left[j] += v;
            return t;
        }
        let mut total = 0;
        for v in 0..=row_left.min(col_left[j]).min(cap) {
            m[i][j] = v;
            col_left[j] -= v;
            total += go(r, m, col_left, i, j + 1, row_left - v, symmetric, cap);
            col_left[j] += v;
        }
        m[i][j] = 0;
        total
    }
    let first = r.first().copied().unwrap_or(0);
    go(&r, &mut m, &mut col_left, 0, 0, first, symmetric, cap)
}

/// `Σ_{λ,μ ⊢ n}` of [`brute_contingency`]: matrices with sum `n`, no zero
/// row or column and non-increasing row and column sums.
pub fn brute_matrix_total(n: usize, symmetric: bool, zero_one: bool) -> u64 {
    let parts = partitions_of(n);
    parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l, m)))
        .map(|(l, m)| brute_contingency(l, m, symmetric, zero_one))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(brute_kostka(&p("4"), &p("4")), 1);
        assert_eq!(brute_kostka(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(brute_kostka(&p("1,1,1"), &p("2,1")), 0);
        assert_eq!(brute_kostka(&p("3,2"), &p("1,1,1,1,1")), 5);
    }

    #[test]
    fn contingency_examples() {
        assert_eq!(brute_contingency(&p("2,1"), &p("2,1"), false, false), 2);
        assert_eq!(brute_contingency(&p("2,2"), &p("2,2"), true, false), 3);
        assert_eq!(brute_contingency(&p("1,1"), &p("1,1"), false, true), 2);
        assert_eq!(brute_contingency(&p("2"), &p("1,1"), false, true), 1);
        assert_eq!(brute_contingency(&p("2"), &p("2"), false, true), 0);
    }
}
