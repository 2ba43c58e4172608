//! Ground-truth partition counting by dynamic programming, plus
//! integer-partition enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Tuple of positive integer parts d_1..d_m for the unconstrained count.
/// Duplicates are allowed; order is irrelevant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenomTuple {
    parts: Vec<u32>,
}

impl DenomTuple {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "need at least one part");
        assert!(parts.iter().all(|&d| d >= 1), "parts must be positive");
        DenomTuple { parts }
    }

    /// The consecutive tuple {1, ..., m}.
    pub fn consecutive(m: u32) -> Self {
        assert!(m >= 1);
        DenomTuple {
            parts: (1..=m).collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one part
    }

    /// Product of the parts.
    pub fn product(&self) -> BigInt {
        self.parts.iter().map(|&d| BigInt::from(d)).product()
    }
}

/// Number of nonnegative integer solutions of sum d_i * x_i = s.
pub fn count_unconstrained(s: usize, d: &DenomTuple) -> BigInt {
    let mut ways = vec![BigInt::zero(); s + 1];
    ways[0] = BigInt::one();
    for &part in d.parts() {
        let part = part as usize;
        for j in part..=s {
            let add = ways[j - part].clone();
            ways[j] += add;
        }
    }
    ways.pop().unwrap()
}

/// W_m(s): partitions of s into parts 1..m.
pub fn count_consecutive(s: usize, m: u32) -> BigInt {
    count_unconstrained(s, &DenomTuple::consecutive(m))
}

/// W_m(s) for s = 0..=s_max in one DP pass.
pub fn consecutive_table(s_max: usize, m: u32) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); s_max + 1];
    ways[0] = BigInt::one();
    for part in 1..=(m as usize) {
        for j in part..=s_max {
            let add = ways[j - part].clone();
            ways[j] += add;
        }
    }
    ways
}

/// The unrestricted partition count p(s), realized as W_s(s).
pub fn count_unrestricted(s: usize) -> BigInt {
    if s == 0 {
        return BigInt::one();
    }
    count_consecutive(s, s as u32)
}

/// P_n^m(s): partitions of s into parts <= m using at most n parts,
/// i.e. nonnegative solutions of sum r*x_r = s with sum x_r <= n.
///
/// 2-D DP over (amount, parts used); dp[a][u] counts partitions of `a`
/// into exactly `u` parts, each <= the part sizes processed so far.
pub fn count_constrained(s: usize, n: u32, m: u32) -> BigInt {
    let n = n as usize;
    let mut dp = vec![vec![BigInt::zero(); n + 1]; s + 1];
    dp[0][0] = BigInt::one();
    for r in 1..=(m as usize) {
        for a in r..=s {
            for u in 1..=n {
                let add = dp[a - r][u - 1].clone();
                dp[a][u] += add;
            }
        }
    }
    dp[s].iter().sum()
}

/// Raw enumeration over all multiplicity vectors; the slow second oracle
/// for `count_constrained`, usable up to s around 15.
pub fn count_constrained_enum(s: usize, n: u32, m: u32) -> BigInt {
    fn go(remaining: usize, part: usize, parts_left: u32) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        if part == 0 {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        let max_x = (remaining / part).min(parts_left as usize);
        for x in 0..=max_x {
            total += go(remaining - part * x, part - 1, parts_left - x as u32);
        }
        total
    }
    go(s, m as usize, n)
}

/// All partitions of `r` in reverse-lexicographic order, each a weakly
/// decreasing tuple of positive parts. `r = 0` yields the single empty
/// partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionList {
    r: usize,
    partitions: Vec<Vec<u32>>,
}

impl PartitionList {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn partitions(&self) -> &[Vec<u32>] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// Exponent-vector view: entry k-1 is the multiplicity of part k.
    /// Each vector has length r (length 0 for r = 0).
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.partitions
            .iter()
            .map(|p| {
                let mut q = vec![0u32; self.r];
                for &part in p {
                    q[part as usize - 1] += 1;
                }
                q
            })
            .collect()
    }
}

pub fn enumerate_partitions(r: usize) -> PartitionList {
    let mut partitions = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn go(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part as u32);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    go(r, r, &mut current, &mut partitions);
    PartitionList { r, partitions }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unconstrained_at_zero() {
        assert_eq!(count_unconstrained(0, &DenomTuple::new(vec![1, 2, 3])), BigInt::one());
    }

    #[test]
    fn unconstrained_parts_one_two() {
        // {4*1, 2*1+1*2, 2*2}
        assert_eq!(count_unconstrained(4, &DenomTuple::new(vec![1, 2])), BigInt::from(3));
    }

    #[test]
    fn unconstrained_parts_one_two_three() {
        assert_eq!(count_unconstrained(5, &DenomTuple::new(vec![1, 2, 3])), BigInt::from(5));
    }

    #[test]
    fn consecutive_at_zero() {
        for m in 1..=10 {
            assert_eq!(count_consecutive(0, m), BigInt::one());
        }
    }

    #[test]
    fn w2_at_six() {
        assert_eq!(count_consecutive(6, 2), BigInt::from(4));
    }

    #[test]
    fn stabilization_at_small_s() {
        // W_5(5) = W_6(5) = W_7(5) = 7
        assert_eq!(count_consecutive(5, 5), BigInt::from(7));
        assert_eq!(count_consecutive(5, 6), BigInt::from(7));
        assert_eq!(count_consecutive(5, 7), BigInt::from(7));
    }

    #[test]
    fn consecutive_table_matches_pointwise() {
        let table = consecutive_table(20, 4);
        for s in 0..=20 {
            assert_eq!(table[s], count_consecutive(s, 4));
        }
    }

    #[test]
    fn constrained_golden_values() {
        assert_eq!(count_constrained(2, 3, 2), BigInt::from(2));
        assert_eq!(count_constrained(0, 5, 7), BigInt::one());
        assert_eq!(count_constrained(35, 5, 7), BigInt::one());
        assert_eq!(count_constrained(36, 5, 7), BigInt::zero());
    }

    #[test]
    fn constrained_matches_enumeration() {
        for n in 1..=4 {
            for m in 1..=4 {
                for s in 0..=15 {
                    assert_eq!(
                        count_constrained(s, n, m),
                        count_constrained_enum(s, n, m),
                        "s={s} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn partitions_of_three() {
        let list = enumerate_partitions(3);
        assert_eq!(list.partitions(), &[vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partitions_of_zero() {
        let list = enumerate_partitions(0);
        assert_eq!(list.partitions(), &[Vec::<u32>::new()]);
    }

    #[test]
    fn partition_count_of_five() {
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn partition_count_matches_dp() {
        for r in 0..=20 {
            assert_eq!(
                BigInt::from(enumerate_partitions(r).len()),
                count_unrestricted(r),
                "r={r}"
            );
        }
    }

    #[test]
    fn exponent_vectors_satisfy_side_conditions() {
        for r in 1..=12 {
            let list = enumerate_partitions(r);
            for (p, q) in list.partitions().iter().zip(list.exponent_vectors()) {
                let weight: usize = q.iter().enumerate().map(|(k, &qk)| (k + 1) * qk as usize).sum();
                let count: u32 = q.iter().sum();
                assert_eq!(weight, r);
                assert_eq!(count as usize, p.len());
            }
        }
    }

    #[test]
    fn reverse_lex_order() {
        for r in 1..=10 {
            let list = enumerate_partitions(r);
            for w in list.partitions().windows(2) {
                assert!(w[0] > w[1], "r={r}: {:?} !> {:?}", w[0], w[1]);
            }
        }
    }
}
