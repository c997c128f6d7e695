//! Integer partitions by brute force: enumeration, Durfee statistics and the
//! decomposition of a partition around its Durfee triangle.
//!
//! These routines are the combinatorial ground truth against which the
//! generating functions are checked. Enumeration is capped at
//! [`ENUMERATION_CAP`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` accepted by the enumerating routines.
pub const ENUMERATION_CAP: usize = 60;

/// `k(k+1)/2`
pub fn triangular(k: usize) -> usize {
    k * (k + 1) / 2
}

/// A weakly decreasing list of positive parts. The empty list is the
/// partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `parts[j-1]` for 1-based `j`, zero beyond the last part.
    fn part(&self, j: usize) -> usize {
        self.parts.get(j - 1).copied().unwrap_or(0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        Err(Error::TooLarge {
            n,
            cap: ENUMERATION_CAP,
        })
    } else {
        Ok(())
    }
}

/// Iterator over the partitions of `n` in lexicographically decreasing order,
/// starting from `(n)` and ending with `(1, 1, ..., 1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: drop trailing ones, decrement the last part > 1 and
        // refill greedily with parts no larger than it.
        let mut succ = current.clone();
        let mut freed = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let part = cap.min(freed);
                succ.push(part);
                freed -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    check_cap(n)?;
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions { next: Some(first) })
}

/// Largest `k` with `parts[j-1] >= k` for `j = 1..=k`.
pub fn durfee_square_size(p: &Partition) -> usize {
    p.parts
        .iter()
        .enumerate()
        .take_while(|&(i, &part)| part > i)
        .count()
}

/// Largest `k` with `parts[j-1] >= k - j + 1` for `j = 1..=k`.
pub fn durfee_triangle_size(p: &Partition) -> usize {
    // The condition for k is monotone in k: if it holds for k it holds for k-1.
    let fits = |k: usize| (1..=k).all(|j| p.part(j) + j > k);
    let mut k = 0;
    while fits(k + 1) {
        k += 1;
    }
    k
}

/// Column lengths of the Ferrers board.
pub fn conjugate(p: &Partition) -> Partition {
    let width = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|c| p.parts.iter().take_while(|&&part| part >= c).count())
        .collect();
    Partition { parts }
}

/// A partition with Durfee triangle of size `k`, split into the triangle, the
/// excess `row_excess` of the first `d` rows, and the excess `col_excess` of
/// the first `k - d` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleDecomposition {
    pub k: usize,
    pub d: usize,
    pub row_excess: Vec<usize>,
    pub col_excess: Vec<usize>,
}

impl TriangleDecomposition {
    /// `T_k + sum(row_excess) + sum(col_excess)`
    pub fn size(&self) -> usize {
        triangular(self.k) + self.row_excess.iter().sum::<usize>() + self.col_excess.iter().sum::<usize>()
    }

    /// Checks the shape constraints on the excess sequences.
    pub fn is_valid(&self) -> bool {
        let steps_ok =
            |xs: &[usize]| xs.windows(2).all(|w| w[1] <= w[0] + 1);
        self.d <= self.k
            && self.row_excess.len() == self.d
            && self.col_excess.len() == self.k - self.d
            && self.row_excess.iter().all(|&m| m >= 1)
            && steps_ok(&self.row_excess)
            && steps_ok(&self.col_excess)
    }

    /// Inverse of [`decompose_by_triangle`].
    pub fn reconstruct(&self) -> Partition {
        let k = self.k;
        let d = self.d;
        let mut parts: Vec<usize> = (1..=d).map(|j| k - j + 1 + self.row_excess[j - 1]).collect();
        // Rows below d only reach into the first k - d columns.
        let columns: Vec<usize> = (1..=k - d).map(|j| k - j + 1 + self.col_excess[j - 1]).collect();
        let depth = columns.first().copied().unwrap_or(0);
        for row in d + 1..=depth {
            parts.push(columns.iter().filter(|&&c| c >= row).count());
        }
        Partition { parts }
    }
}

pub fn decompose_by_triangle(p: &Partition) -> TriangleDecomposition {
    let k = durfee_triangle_size(p);
    let d = (1..=k).take_while(|&j| p.part(j) > k - j + 1).count();
    let row_excess = (1..=d).map(|j| p.part(j) - (k - j + 1)).collect();
    let conj = conjugate(p);
    let col_excess = (1..=k - d).map(|j| conj.part(j) - (k - j + 1)).collect();
    TriangleDecomposition {
        k,
        d,
        row_excess,
        col_excess,
    }
}

fn count_where(n: usize, pred: impl Fn(&Partition) -> bool) -> Result<u64> {
    Ok(enumerate_partitions(n)?.filter(|p| pred(p)).count() as u64)
}

/// `R_k(n)`: partitions of `n` with Durfee triangle of size `k`.
pub fn count_rk_bruteforce(k: usize, n: usize) -> Result<u64> {
    count_where(n, |p| durfee_triangle_size(p) == k)
}

/// `D_k(n)`: partitions of `n` with Durfee square of size `k`.
pub fn count_dk_bruteforce(k: usize, n: usize) -> Result<u64> {
    count_where(n, |p| durfee_square_size(p) == k)
}

/// `p_d(n)`: partitions of `n` into at most `d` parts.
pub fn count_pd_bruteforce(d: usize, n: usize) -> Result<u64> {
    count_where(n, |p| p.len() <= d)
}

/// `a_d(n)`: weak compositions `(k_1, ..., k_d)` of `n` with
/// `k_j <= k_{j-1} + 1`, counted by explicit enumeration.
pub fn count_ad_bruteforce(d: usize, n: usize) -> Result<u64> {
    check_cap(n)?;
    fn go(remaining_parts: usize, remaining_sum: usize, max_part: usize) -> u64 {
        if remaining_parts == 0 {
            return u64::from(remaining_sum == 0);
        }
        (0..=max_part.min(remaining_sum))
            .map(|k| go(remaining_parts - 1, remaining_sum - k, k + 1))
            .sum()
    }
    if d == 0 {
        return Ok(u64::from(n == 0));
    }
    Ok(go(d, n, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    /// p(n) by Euler's pentagonal number recurrence.
    fn partition_numbers(max: usize) -> Vec<i64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut s = 0i64;
            for j in 1.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                s += sign * p[n - g1];
                let g2 = j * (3 * j + 1) / 2;
                if g2 <= n {
                    s += sign * p[n - g2];
                }
            }
            p[n] = s;
        }
        p
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0).unwrap().collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(5).unwrap().count(), 7);
        let pn = partition_numbers(30);
        assert_eq!(pn[20], 627);
        for n in 0..=30 {
            assert_eq!(enumerate_partitions(n).unwrap().count() as i64, pn[n], "n = {n}");
        }
        assert!(matches!(enumerate_partitions(61), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn enumeration_order_is_lex_decreasing() {
        let all: Vec<_> = enumerate_partitions(5).unwrap().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        let all: Vec<_> = enumerate_partitions(14).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn durfee_examples() {
        let lam = part(&[6, 4, 2, 1]);
        assert_eq!(durfee_square_size(&lam), 2);
        assert_eq!(durfee_triangle_size(&lam), 4);
        assert_eq!(durfee_square_size(&Partition::empty()), 0);
        assert_eq!(durfee_triangle_size(&Partition::empty()), 0);
        assert_eq!(durfee_square_size(&part(&[1, 1, 1])), 1);
        for n in 1..10 {
            assert_eq!(durfee_triangle_size(&part(&[n])), 1);
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&part(&[6, 4, 2, 1])), part(&[4, 3, 2, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part(&[3, 3, 3])), part(&[3, 3, 3]));
    }

    #[test]
    fn decomposition_examples() {
        let dec = decompose_by_triangle(&part(&[6, 4, 2, 1]));
        assert_eq!(
            dec,
            TriangleDecomposition { k: 4, d: 2, row_excess: vec![2, 1], col_excess: vec![0, 0] }
        );
        assert_eq!(dec.reconstruct(), part(&[6, 4, 2, 1]));

        let stair = decompose_by_triangle(&part(&[5, 4, 3, 2, 1]));
        assert_eq!(stair.k, 5);
        assert_eq!(stair.d, 0);
        assert!(stair.row_excess.is_empty());
        assert_eq!(stair.col_excess, vec![0; 5]);

        let empty = decompose_by_triangle(&Partition::empty());
        assert_eq!(empty, TriangleDecomposition { k: 0, d: 0, row_excess: vec![], col_excess: vec![] });
        assert_eq!(empty.reconstruct(), Partition::empty());
    }

    #[test]
    fn statistics_invariants_up_to_24() {
        for n in 0..=24 {
            for p in enumerate_partitions(n).unwrap() {
                let s = durfee_square_size(&p);
                let t = durfee_triangle_size(&p);
                assert!(s <= t && t <= 2 * s, "{p:?}");
                let c = conjugate(&p);
                assert_eq!(conjugate(&c), p);
                assert_eq!(durfee_square_size(&c), s);
                assert_eq!(durfee_triangle_size(&c), t);
                let dec = decompose_by_triangle(&p);
                assert!(dec.is_valid(), "{p:?} -> {dec:?}");
                assert_eq!(dec.size(), n);
                assert_eq!(dec.reconstruct(), p);
            }
        }
    }

    #[test]
    fn counts_partition_p_of_n() {
        let pn = partition_numbers(24);
        for n in 1..=24 {
            let r: u64 = (1..=n).map(|k| count_rk_bruteforce(k, n).unwrap()).sum();
            let d: u64 = (1..=n).map(|k| count_dk_bruteforce(k, n).unwrap()).sum();
            assert_eq!(r as i64, pn[n]);
            assert_eq!(d as i64, pn[n]);
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_rk_bruteforce(3, 11).unwrap(), 32);
        assert_eq!(count_rk_bruteforce(3, 5).unwrap(), 0);
        assert_eq!(count_rk_bruteforce(3, 6).unwrap(), 1);
        assert_eq!(count_dk_bruteforce(1, 5).unwrap(), 5);
        assert_eq!(count_dk_bruteforce(2, 4).unwrap(), 1);
        assert_eq!(count_dk_bruteforce(2, 3).unwrap(), 0);
        assert_eq!(count_ad_bruteforce(3, 5).unwrap(), 9);
        assert_eq!(count_ad_bruteforce(4, 2).unwrap(), 7);
        for n in 0..12 {
            assert_eq!(count_ad_bruteforce(1, n).unwrap(), 1);
        }
        assert_eq!(count_pd_bruteforce(2, 4).unwrap(), 3);
        assert_eq!(count_pd_bruteforce(3, 6).unwrap(), 7);
        assert_eq!(count_pd_bruteforce(9, 9).unwrap(), 30);
    }

    #[test]
    fn sandwich_bounds() {
        for d in 1..=6 {
            for n in 0..=20 {
                let a = count_ad_bruteforce(d, n).unwrap();
                assert!(count_pd_bruteforce(d, n).unwrap() <= a);
                assert!(a <= count_pd_bruteforce(d, n + triangular(d)).unwrap());
            }
        }
    }

    #[test]
    fn ad_matches_partitions_into_d_parts_with_full_triangle() {
        // a_d(n) also counts partitions of n + T_d into exactly d parts with
        // Durfee triangle of size d.
        for d in 1..=4 {
            for n in 0..=10 {
                let direct = enumerate_partitions(n + triangular(d))
                    .unwrap()
                    .filter(|p| p.len() == d && durfee_triangle_size(p) == d)
                    .count() as u64;
                assert_eq!(count_ad_bruteforce(d, n).unwrap(), direct);
            }
        }
    }
}
