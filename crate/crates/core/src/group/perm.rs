//! Permutations in one-line notation, lexicographic ranking, and cycle types.
//!
//! Symmetric-group elements are numbered by the lexicographic rank of their
//! one-line image. In lexicographic order the permutations at ranks `2j` and
//! `2j + 1` differ by swapping the last two entries, so exactly one of each
//! such pair is even; alternating-group element `j` is the even one.

use crate::arith::lcm;

pub(crate) fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Image of the permutation with lexicographic rank `rank` on `n` points.
pub(crate) fn unrank(n: u32, mut rank: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(n as usize);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

pub(crate) fn rank(perm: &[u8]) -> u64 {
    let n = perm.len();
    let mut r = 0u64;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count() as u64;
        r += smaller * factorial((n - 1 - i) as u32);
    }
    r
}

/// `(a * b)(i) = a(b(i))`: apply `b` first.
pub(crate) fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub(crate) fn cycle_lengths(perm: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

pub(crate) fn is_even(perm: &[u8]) -> bool {
    cycle_lengths(perm).iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
}

pub(crate) fn perm_order(perm: &[u8]) -> u64 {
    cycle_lengths(perm)
        .into_iter()
        .fold(1u64, |acc, l| lcm(acc, l as u64))
}

/// Alternating-group element `id` as a permutation (n >= 2).
pub(crate) fn unrank_even(n: u32, id: u64) -> Vec<u8> {
    let p = unrank(n, 2 * id);
    if is_even(&p) {
        p
    } else {
        unrank(n, 2 * id + 1)
    }
}

pub(crate) fn rank_even(perm: &[u8]) -> u64 {
    rank(perm) / 2
}

/// All integer partitions of `n` as non-increasing part lists.
pub(crate) fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations of `n` points with the given cycle type:
/// `n! / prod(a^r * r!)` where part `a` occurs `r` times.
pub(crate) fn cycle_type_count(n: u32, parts: &[u32]) -> u64 {
    let mut denom: u128 = 1;
    let mut i = 0;
    while i < parts.len() {
        let a = parts[i];
        let mut r = 0u32;
        while i < parts.len() && parts[i] == a {
            r += 1;
            i += 1;
        }
        denom *= (a as u128).pow(r) * factorial(r) as u128;
    }
    (factorial(n) as u128 / denom) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        for r in 0..factorial(5) {
            assert_eq!(rank(&unrank(5, r)), r);
        }
        assert_eq!(unrank(3, 0), vec![0, 1, 2]);
        assert_eq!(unrank(3, 5), vec![2, 1, 0]);
    }

    #[test]
    fn even_ranking_covers_alternating_group() {
        let n = 5;
        let evens: Vec<Vec<u8>> = (0..factorial(n) / 2).map(|j| unrank_even(n, j)).collect();
        assert!(evens.iter().all(|p| is_even(p)));
        for (j, p) in evens.iter().enumerate() {
            assert_eq!(rank_even(p), j as u64);
        }
        let mut sorted = evens.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 60);
        assert_eq!(sorted, evens);
    }

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 1..=9 {
            let total: u64 = partitions(n).iter().map(|t| cycle_type_count(n, t)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn composition_and_order() {
        // (0 1) then (1 2)
        let a = vec![1, 0, 2];
        let b = vec![0, 2, 1];
        assert_eq!(compose(&a, &b), vec![1, 2, 0]);
        assert_eq!(perm_order(&[1, 0, 3, 4, 2]), 6);
        assert_eq!(perm_order(&[0, 1, 2]), 1);
    }
}
