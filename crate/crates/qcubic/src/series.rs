//! Exact truncated formal power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] stores the coefficients of `q^0 .. q^order` densely.
//! Every operation is exact integer arithmetic on that window: a coefficient
//! inside the window is always the true coefficient of the untruncated series.
//! Binary operations truncate to the smaller order of the two operands;
//! [`TruncatedSeries::substitute_power`] grows the order (those coefficients
//! are genuinely exact) and [`TruncatedSeries::dissect`] shrinks it.
//!
//! Inversion is restricted to series with constant term +1 or -1 so that all
//! arithmetic stays in the integers. Every series handled by this crate is a
//! unit of that kind.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors produced by series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Inversion and negative powers require a constant term of +1 or -1 so
    /// that every coefficient of the result stays an integer.
    #[error("constant term {constant} is not a unit (expected +1 or -1)")]
    NonUnitConstantTerm { constant: BigInt },

    /// A dissection whose residue exceeds the truncation order selects no
    /// coefficients at all.
    #[error("dissection residue {residue} exceeds the series order {order}")]
    EmptyResult { order: usize, residue: usize },

    /// A comparison window reached past the exact coefficients of one side.
    #[error(
        "comparison up to index {requested} exceeds an operand order \
         (lhs order {lhs_order}, rhs order {rhs_order})"
    )]
    OrderTooSmall {
        requested: usize,
        lhs_order: usize,
        rhs_order: usize,
    },
}

/// Outcome of comparing two series on a shared coefficient window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Mismatch {
        index: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Dense formal power series with exact integer coefficients for
/// `q^0 ..= q^order`. Immutable after construction; all operations return a
/// new series.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn constant(value: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value.into();
        s
    }

    /// `coeff * q^degree` truncated at `order`; zero if the degree falls
    /// outside the window.
    pub fn monomial(coeff: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff.into();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Index of the last exact coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Restrict to the window `0..=new_order` (no-op beyond the current order).
    pub fn truncate(&self, new_order: usize) -> Self {
        let end = new_order.min(self.order());
        Self::from_coeffs(self.coeffs[..=end].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(
            (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(
            (0..=order)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact Cauchy product truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut acc = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        Self::from_coeffs(acc)
    }

    /// Multiplicative inverse by the forward recurrence
    /// `c[n] = -f[0] * sum_{k=1..=n} f[k] c[n-k]`, exact because the constant
    /// term is required to be +1 or -1.
    ///
    /// Errors with [`SeriesError::NonUnitConstantTerm`] otherwise.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let f0 = &self.coeffs[0];
        if !(f0.is_one() || (-f0).is_one()) {
            return Err(SeriesError::NonUnitConstantTerm {
                constant: f0.clone(),
            });
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = f0.clone();
        let negate = f0.is_one();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let fk = &self.coeffs[k];
                if fk.is_zero() {
                    continue;
                }
                let c = &inv[n - k];
                if c.is_zero() {
                    continue;
                }
                acc += fk * c;
            }
            inv[n] = if negate { -acc } else { acc };
        }
        Ok(Self::from_coeffs(inv))
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.order()));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = Self::one(base.order());
        let mut power = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&power);
            }
            exp >>= 1;
            if exp > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }

    /// Substitute `q -> q^k`. The result order grows to `k * order`; those
    /// coefficients are genuinely exact.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); k * order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k * i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Extract the coefficients at exponents `m*n + r`: the result holds
    /// `f[m*n + r]` at index `n`. This composes extract, divide by `q^r` and
    /// replace `q^m` by `q` into one operator; the result order is
    /// `floor((order - r) / m)`.
    pub fn dissect(&self, m: usize, r: usize) -> Result<Self, SeriesError> {
        assert!(m >= 1, "dissection modulus must be positive");
        assert!(r < m, "dissection residue must satisfy r < m");
        let order = self.order();
        if order < r {
            return Err(SeriesError::EmptyResult { order, residue: r });
        }
        Ok(Self::from_coeffs(
            (0..=(order - r) / m)
                .map(|n| self.coeffs[m * n + r].clone())
                .collect(),
        ))
    }

    /// Multiply by `q^s`, keeping the order fixed (high coefficients drop out
    /// of the window). Keeping the order monotone under composition is what
    /// lets shifted summands stay comparable.
    pub fn shift(&self, s: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        if s <= order {
            coeffs[s..].clone_from_slice(&self.coeffs[..=order - s]);
        }
        Self::from_coeffs(coeffs)
    }

    /// Replace every coefficient by its least non-negative residue mod `m`.
    pub fn reduce_mod(&self, m: u64) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        let m = BigInt::from(m);
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mod_floor(&m)).collect())
    }

    /// Compare coefficients `0..=n`, reporting the smallest disagreeing index.
    pub fn equal_up_to(&self, other: &Self, n: usize) -> Result<Comparison, SeriesError> {
        if n > self.order() || n > other.order() {
            return Err(SeriesError::OrderTooSmall {
                requested: n,
                lhs_order: self.order(),
                rhs_order: other.order(),
            });
        }
        for i in 0..=n {
            if self.coeffs[i] != other.coeffs[i] {
                return Ok(Comparison::Mismatch {
                    index: i,
                    lhs: self.coeffs[i].clone(),
                    rhs: other.coeffs[i].clone(),
                });
            }
        }
        Ok(Comparison::Equal)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MAX_TERMS: usize = 12;
        let mut printed = 0;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed == MAX_TERMS {
                write!(f, " + ...")?;
                break;
            }
            let magnitude = c.magnitude();
            if printed == 0 {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{magnitude}")?,
                _ if magnitude.is_one() => {}
                _ => write!(f, "{magnitude}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
            printed += 1;
        }
        if printed == 0 {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// (1 - q^n) at the given order.
    fn one_minus_q_pow(n: usize, order: usize) -> TruncatedSeries {
        TruncatedSeries::one(order).sub(&TruncatedSeries::monomial(1, n, order))
    }

    /// Euler factor product built directly, factor by factor, as an
    /// independent route for inversion tests.
    fn euler_by_factors(order: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(order);
        for n in 1..=order {
            acc = acc.mul(&one_minus_q_pow(n, order));
        }
        acc
    }

    #[test]
    fn add_cancels_opposite_terms() {
        let a = TruncatedSeries::from_i64(&[1, 1]);
        let b = TruncatedSeries::from_i64(&[1, -1]);
        assert_eq!(a.add(&b), TruncatedSeries::from_i64(&[2, 0]));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = TruncatedSeries::from_i64(&[3, -2, 5, 7]);
        assert_eq!(f.add(&TruncatedSeries::zero(3)), f);
    }

    #[test]
    fn add_truncates_to_smaller_order() {
        let a = TruncatedSeries::from_i64(&[1, 2, 3, 4]);
        let b = TruncatedSeries::from_i64(&[1, 1]);
        assert_eq!(a.add(&b).order(), 1);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let f = TruncatedSeries::from_i64(&[2, 0, -7, 1]);
        assert_eq!(f.mul(&TruncatedSeries::one(3)), f);
    }

    #[test]
    fn mul_telescopes_geometric_series() {
        let one_minus_q = TruncatedSeries::from_i64(&[1, -1, 0, 0, 0, 0]);
        let geometric = TruncatedSeries::from_i64(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(one_minus_q.mul(&geometric), TruncatedSeries::one(5));
    }

    #[test]
    fn invert_euler_factors_gives_partition_numbers() {
        // p(0)..p(10), classical values.
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        let inv = euler_by_factors(10).invert().unwrap();
        assert_eq!(inv, TruncatedSeries::from_i64(&expected));
    }

    #[test]
    fn invert_one_is_one() {
        assert_eq!(
            TruncatedSeries::one(6).invert().unwrap(),
            TruncatedSeries::one(6)
        );
    }

    #[test]
    fn invert_negative_unit_constant() {
        let f = TruncatedSeries::from_i64(&[-1, 3, 2, -5, 1, 0, 4]);
        let inv = f.invert().unwrap();
        assert_eq!(f.mul(&inv), TruncatedSeries::one(6));
    }

    #[test]
    fn invert_rejects_zero_constant_term() {
        let f = TruncatedSeries::from_i64(&[0, 1]);
        assert_eq!(
            f.invert(),
            Err(SeriesError::NonUnitConstantTerm {
                constant: BigInt::zero()
            })
        );
    }

    #[test]
    fn invert_rejects_non_unit_constant_term() {
        let f = TruncatedSeries::from_i64(&[2, 1]);
        assert!(matches!(
            f.invert(),
            Err(SeriesError::NonUnitConstantTerm { .. })
        ));
    }

    #[test]
    fn pow_zero_is_one() {
        let f = TruncatedSeries::from_i64(&[5, 3, 1]);
        assert_eq!(f.pow(0).unwrap(), TruncatedSeries::one(2));
    }

    #[test]
    fn pow_two_matches_self_product() {
        let f = TruncatedSeries::from_i64(&[1, -2, 0, 4, 1]);
        assert_eq!(f.pow(2).unwrap(), f.mul(&f));
    }

    #[test]
    fn pow_negative_inverts_first() {
        let one_minus_q = TruncatedSeries::from_i64(&[1, -1, 0, 0, 0]);
        assert_eq!(
            one_minus_q.pow(-1).unwrap(),
            TruncatedSeries::from_i64(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            one_minus_q.pow(-2).unwrap(),
            TruncatedSeries::from_i64(&[1, 2, 3, 4, 5])
        );
    }

    #[test]
    fn pow_negative_requires_unit() {
        let f = TruncatedSeries::from_i64(&[2, 1]);
        assert!(matches!(
            f.pow(-1),
            Err(SeriesError::NonUnitConstantTerm { .. })
        ));
    }

    #[test]
    fn substitute_power_spreads_exponents() {
        let f = TruncatedSeries::from_i64(&[1, 1]);
        assert_eq!(
            f.substitute_power(3),
            TruncatedSeries::from_i64(&[1, 0, 0, 1])
        );
    }

    #[test]
    fn substitute_power_one_is_identity() {
        let f = TruncatedSeries::from_i64(&[4, -1, 2]);
        assert_eq!(f.substitute_power(1), f);
    }

    #[test]
    fn dissect_identity() {
        let f = TruncatedSeries::from_i64(&[3, 1, 4, 1, 5]);
        assert_eq!(f.dissect(1, 0).unwrap(), f);
    }

    #[test]
    fn dissect_picks_residue_class() {
        let f = TruncatedSeries::from_i64(&[0, 1, 2, 3, 4, 5, 6, 7]);
        // exponents 1, 4, 7
        assert_eq!(
            f.dissect(3, 1).unwrap(),
            TruncatedSeries::from_i64(&[1, 4, 7])
        );
    }

    #[test]
    fn dissect_empty_window_is_an_error() {
        let f = TruncatedSeries::from_i64(&[1, 1]);
        assert_eq!(
            f.dissect(3, 2),
            Err(SeriesError::EmptyResult {
                order: 1,
                residue: 2
            })
        );
    }

    #[test]
    fn shift_moves_constant_up() {
        assert_eq!(
            TruncatedSeries::one(4).shift(2),
            TruncatedSeries::from_i64(&[0, 0, 1, 0, 0])
        );
    }

    #[test]
    fn shift_zero_is_identity() {
        let f = TruncatedSeries::from_i64(&[1, -1, 2]);
        assert_eq!(f.shift(0), f);
    }

    #[test]
    fn shift_drops_coefficients_past_the_order() {
        let f = TruncatedSeries::from_i64(&[1, 2]);
        assert_eq!(f.shift(1), TruncatedSeries::from_i64(&[0, 1]));
        assert_eq!(f.shift(5), TruncatedSeries::from_i64(&[0, 0]));
    }

    #[test]
    fn reduce_mod_kills_multiples() {
        let f = TruncatedSeries::from_i64(&[27, 54, 0, 270]);
        assert!(f.reduce_mod(27).is_zero());
    }

    #[test]
    fn reduce_mod_plain_arithmetic() {
        let f = TruncatedSeries::from_i64(&[1, 28]);
        assert_eq!(f.reduce_mod(27), TruncatedSeries::from_i64(&[1, 1]));
    }

    #[test]
    fn reduce_mod_is_least_non_negative() {
        let f = TruncatedSeries::from_i64(&[-1, -28]);
        assert_eq!(f.reduce_mod(27), TruncatedSeries::from_i64(&[26, 26]));
    }

    #[test]
    fn equal_up_to_self() {
        let f = TruncatedSeries::from_i64(&[1, 2, 3]);
        assert!(f.equal_up_to(&f, f.order()).unwrap().is_equal());
    }

    #[test]
    fn equal_up_to_reports_first_mismatch() {
        let f = TruncatedSeries::from_i64(&[1, 1]);
        let g = TruncatedSeries::from_i64(&[1, 2]);
        assert_eq!(
            f.equal_up_to(&g, 1).unwrap(),
            Comparison::Mismatch {
                index: 1,
                lhs: BigInt::from(1),
                rhs: BigInt::from(2)
            }
        );
    }

    #[test]
    fn equal_up_to_rejects_windows_past_the_order() {
        let f = TruncatedSeries::from_i64(&[1, 1]);
        let g = TruncatedSeries::from_i64(&[1, 1, 1]);
        assert_eq!(
            f.equal_up_to(&g, 2),
            Err(SeriesError::OrderTooSmall {
                requested: 2,
                lhs_order: 1,
                rhs_order: 2
            })
        );
    }

    #[test]
    fn display_is_readable() {
        let f = TruncatedSeries::from_i64(&[1, -2, 0, 0, 2]);
        assert_eq!(format!("{f}"), "1 - 2*q + 2*q^4 + O(q^5)");
    }

    fn small_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(-9i64..=9, 1..=max_order + 1)
            .prop_map(|v| TruncatedSeries::from_i64(&v))
    }

    fn unit_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (prop::bool::ANY, prop::collection::vec(-9i64..=9, 1..=max_order)).prop_map(
            |(positive, tail)| {
                let mut coeffs = vec![if positive { 1 } else { -1 }];
                coeffs.extend(tail);
                TruncatedSeries::from_i64(&coeffs)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_laws_hold_up_to_truncation(
            f in small_series(24),
            g in small_series(24),
            h in small_series(24),
        ) {
            let n = f.order().min(g.order()).min(h.order());
            prop_assert!(f.add(&g).equal_up_to(&g.add(&f), n).unwrap().is_equal());
            prop_assert!(f.mul(&g).equal_up_to(&g.mul(&f), n).unwrap().is_equal());
            prop_assert!(
                f.add(&g).add(&h).equal_up_to(&f.add(&g.add(&h)), n).unwrap().is_equal()
            );
            prop_assert!(
                f.mul(&g).mul(&h).equal_up_to(&f.mul(&g.mul(&h)), n).unwrap().is_equal()
            );
            prop_assert!(
                f.mul(&g.add(&h))
                    .equal_up_to(&f.mul(&g).add(&f.mul(&h)), n)
                    .unwrap()
                    .is_equal()
            );
        }

        #[test]
        fn inverse_is_two_sided(f in unit_series(24)) {
            let inv = f.invert().unwrap();
            prop_assert_eq!(f.mul(&inv), TruncatedSeries::one(f.order()));
        }

        #[test]
        fn dissection_is_complete(f in small_series(40), m in 1usize..=9) {
            prop_assume!(f.order() >= m);
            let mut sum = None;
            let mut safe_order = usize::MAX;
            for r in 0..m {
                let part = f.dissect(m, r).unwrap().substitute_power(m).shift(r);
                safe_order = safe_order.min(part.order());
                sum = Some(match sum {
                    None => part,
                    Some(acc) => part.add(&acc),
                });
            }
            let sum = sum.unwrap();
            prop_assert!(f.equal_up_to(&sum, safe_order.min(f.order())).unwrap().is_equal());
        }

        #[test]
        fn substitute_then_dissect_round_trips(f in small_series(24), k in 1usize..=7) {
            prop_assert_eq!(f.substitute_power(k).dissect(k, 0).unwrap(), f);
        }

        #[test]
        fn reduce_mod_is_a_ring_homomorphism(
            f in small_series(20),
            g in small_series(20),
            m in 2u64..=30,
        ) {
            let direct = f.mul(&g).reduce_mod(m);
            let reduced = f.reduce_mod(m).mul(&g.reduce_mod(m)).reduce_mod(m);
            prop_assert_eq!(direct, reduced);
        }
    }
}
