//! Test-only oracles, independent of the library's partition engine.

#![allow(dead_code)]

/// Number of `(a, b)` in N^2 with `2a + 4b = target`, by exhaustive search.
pub fn brute_force_pairs_2_4(target: i64) -> u64 {
    let mut count = 0;
    for a in 0..=target.max(0) {
        for b in 0..=target.max(0) {
            if 2 * a + 4 * b == target {
                count += 1;
            }
        }
    }
    count
}

/// Number of ways to write `target` as a sum of the integer `parts` (each
/// part an independent variable, order irrelevant), by exhaustive search over
/// bounded exponent vectors. All parts must be positive.
pub fn brute_force_partitions(parts: &[i64], target: i64) -> u64 {
    fn go(parts: &[i64], target: i64) -> u64 {
        match parts.split_first() {
            None => u64::from(target == 0),
            Some((&p, rest)) => (0..=target.max(0) / p).map(|k| go(rest, target - k * p)).sum(),
        }
    }
    if target < 0 {
        0
    } else {
        go(parts, target)
    }
}

#[test]
fn oracle_frozen_values() {
    let frozen: Vec<u64> = [0, 2, 4, 6, 8].iter().map(|&d| brute_force_pairs_2_4(d)).collect();
    assert_eq!(frozen, vec![1, 1, 2, 2, 3]);
    assert_eq!(brute_force_pairs_2_4(3), 0);
    assert_eq!(brute_force_partitions(&[2, 4], 8), 3);
    assert_eq!(brute_force_partitions(&[1, 1], 3), 4);
}
