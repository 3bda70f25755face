//! Reference computations of the ordinary partition numbers p(n) and the
//! cubic partition numbers a(n) by independent routes, so that every identity
//! check has a ground truth that does not share code with the series engine:
//!
//! * series inversion of the generating products,
//! * the pentagonal-number recurrence (p only),
//! * a combinatorial dynamic-programming count.
//!
//! a(n) counts partitions of n in which odd parts come in one color and even
//! parts in two colors; equivalently it is the coefficient of q^n in
//! `1 / ((q;q)_inf (q^2;q^2)_inf)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::products::euler;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Ordinary,
    Cubic,
}

/// An immutable table of partition values for n = 0 ..= limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    pub kind: PartitionKind,
    pub values: Vec<BigInt>,
}

impl PartitionTable {
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

/// p(n) by inverting `(q;q)_inf`.
pub fn p_series(limit: usize) -> PartitionTable {
    let inv = euler(1, limit).invert().expect("euler product is a unit");
    PartitionTable {
        kind: PartitionKind::Ordinary,
        values: inv.coeffs().to_vec(),
    }
}

/// p(n) by the pentagonal-number recurrence
/// `p(n) = sum_{j>=1} (-1)^(j-1) (p(n - j(3j-1)/2) + p(n - j(3j+1)/2))`.
pub fn p_pentagonal(limit: usize) -> PartitionTable {
    let mut values = vec![BigInt::zero(); limit + 1];
    values[0] = BigInt::from(1);
    for n in 1..=limit {
        let mut acc = BigInt::zero();
        let mut j = 1usize;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let positive = j % 2 == 1;
            if positive {
                acc += &values[n - g1];
            } else {
                acc -= &values[n - g1];
            }
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                if positive {
                    acc += &values[n - g2];
                } else {
                    acc -= &values[n - g2];
                }
            }
            j += 1;
        }
        values[n] = acc;
    }
    PartitionTable {
        kind: PartitionKind::Ordinary,
        values,
    }
}

/// a(n) by inverting `(q;q)_inf (q^2;q^2)_inf`.
pub fn a_series(limit: usize) -> PartitionTable {
    let inv = euler(1, limit)
        .mul(&euler(2, limit))
        .invert()
        .expect("euler products are units");
    PartitionTable {
        kind: PartitionKind::Cubic,
        values: inv.coeffs().to_vec(),
    }
}

/// Coin-style counting DP. Parts are iterated in increasing size; for the
/// cubic kind, each even size contributes as two independent part-kinds (the
/// two colors).
pub fn dp_oracle(kind: PartitionKind, limit: usize) -> PartitionTable {
    let mut values = vec![BigInt::zero(); limit + 1];
    values[0] = BigInt::from(1);
    for size in 1..=limit {
        let kinds = match kind {
            PartitionKind::Ordinary => 1,
            PartitionKind::Cubic => {
                if size % 2 == 0 {
                    2
                } else {
                    1
                }
            }
        };
        for _ in 0..kinds {
            for n in size..=limit {
                let earlier = values[n - size].clone();
                values[n] += earlier;
            }
        }
    }
    PartitionTable { kind, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_series_first_values() {
        assert_eq!(
            p_series(5).values,
            [1, 1, 2, 3, 5, 7].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn p_series_degenerate_limit() {
        assert_eq!(p_series(0).values, vec![BigInt::from(1)]);
    }

    #[test]
    fn p_at_24_is_1575() {
        assert_eq!(p_series(24).value(24), &BigInt::from(1575));
        assert_eq!(p_pentagonal(24).value(24), &BigInt::from(1575));
    }

    #[test]
    fn pentagonal_small_values() {
        assert_eq!(p_pentagonal(4).value(4), &BigInt::from(5));
        assert_eq!(p_pentagonal(1).value(1), &BigInt::from(1));
    }

    #[test]
    fn three_routes_agree_for_p() {
        let limit = 200;
        let by_series = p_series(limit);
        assert_eq!(by_series, p_pentagonal(limit));
        assert_eq!(by_series.values, dp_oracle(PartitionKind::Ordinary, limit).values);
    }

    #[test]
    fn cubic_first_values_match_hand_enumeration() {
        // a(0)..a(8); a(5) = 12 and a(8) = 54 are the anchor values, the rest
        // are checkable by listing the colored partitions directly.
        assert_eq!(
            dp_oracle(PartitionKind::Cubic, 8).values,
            [1, 1, 3, 4, 9, 12, 23, 31, 54].map(BigInt::from).to_vec()
        );
    }

    #[test]
    fn cubic_routes_agree() {
        let limit = 120;
        assert_eq!(
            a_series(limit).values,
            dp_oracle(PartitionKind::Cubic, limit).values
        );
    }

    #[test]
    fn dp_oracle_single_part() {
        assert_eq!(dp_oracle(PartitionKind::Cubic, 1).value(1), &BigInt::from(1));
    }

    #[test]
    fn cubic_dominates_ordinary_and_grows() {
        let limit = 80;
        let ordinary = dp_oracle(PartitionKind::Ordinary, limit);
        let cubic = dp_oracle(PartitionKind::Cubic, limit);
        for n in 0..=limit {
            assert!(cubic.value(n) >= ordinary.value(n), "n = {n}");
        }
        for n in 1..limit {
            assert!(cubic.value(n + 1) >= cubic.value(n), "n = {n}");
            assert!(ordinary.value(n + 1) >= ordinary.value(n), "n = {n}");
        }
    }

    #[test]
    fn congruence_families_small_scan() {
        let p = p_series(500);
        let a = a_series(500);
        let five = BigInt::from(5);
        let seven = BigInt::from(7);
        let three = BigInt::from(3);
        let twenty_seven = BigInt::from(27);
        for n in 0..=500usize {
            if n % 5 == 4 {
                assert!((p.value(n) % &five).is_zero(), "p({n}) mod 5");
            }
            if n % 7 == 5 {
                assert!((p.value(n) % &seven).is_zero(), "p({n}) mod 7");
            }
            if n % 3 == 2 {
                assert!((a.value(n) % &three).is_zero(), "a({n}) mod 3");
            }
            if n % 9 == 8 {
                assert!((a.value(n) % &twenty_seven).is_zero(), "a({n}) mod 27");
            }
        }
    }
}
