//! Builders for q-Pochhammer products, eta-quotient terms and the classical
//! theta-style functions used throughout the identity registry.
//!
//! Conventions:
//!
//! * `pochhammer(a, b, n)` is the truncated infinite product
//!   `(q^a; q^b)_inf = prod_{j>=0} (1 - q^(a + j*b))`, built factor by factor.
//! * `euler(k, n)` is `(q^k; q^k)_inf` through the sparse pentagonal-number
//!   expansion; `pochhammer(k, k, n)` is its independent slow route.
//! * `phi_neg(k, n)` is `sum_{n in Z} (-1)^n q^(k n^2)` and `psi(k, n)` is
//!   `sum_{n>=0} q^(k n(n+1)/2)`, each with an equivalent eta-product form
//!   that the tests cross-check. The two auxiliary products `p_func` and
//!   `x_neg` only have product forms.
//!
//! The names `phi_neg` and `x_neg` are atomic: the engine never evaluates
//! either function at a positive argument.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::{SeriesError, TruncatedSeries};

/// `(q^a; q^b)_inf` truncated at `order`, multiplying only the factors
/// `1 - q^(a + j*b)` that reach into the window.
pub fn pochhammer(a: u32, b: u32, order: usize) -> TruncatedSeries {
    assert!(a >= 1 && b >= 1, "pochhammer parameters must be positive");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    let mut m = a as usize;
    while m <= order {
        // In-place multiplication by (1 - q^m), descending so each source
        // coefficient is still the pre-multiplication value.
        for i in (m..=order).rev() {
            let (lo, hi) = coeffs.split_at_mut(i);
            if !lo[i - m].is_zero() {
                hi[0] -= &lo[i - m];
            }
        }
        m += b as usize;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(q^k; q^k)_inf` through the pentagonal number theorem:
/// `sum_{j in Z} (-1)^j q^(k j(3j-1)/2)`.
pub fn euler(k: u32, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "euler parameter must be positive");
    let k = k as usize;
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    let mut j = 1usize;
    loop {
        let g1 = k * (j * (3 * j - 1) / 2);
        if g1 > order {
            break;
        }
        let sign = if j % 2 == 1 { -1 } else { 1 };
        coeffs[g1] += sign;
        let g2 = k * (j * (3 * j + 1) / 2);
        if g2 <= order {
            coeffs[g2] += sign;
        }
        j += 1;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// One factor `(q^a; q^b)_inf ^ e` of an eta-quotient term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QFactor {
    pub a: u32,
    pub b: u32,
    pub e: i32,
}

/// Symbolic description of `scalar * q^qpower * prod (q^a; q^b)_inf ^ e`.
///
/// Every factor keeps `a >= 1`, so the product part is a unit series and the
/// whole term evaluates exactly at any order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    pub scalar: BigInt,
    pub qpower: usize,
    pub factors: Vec<QFactor>,
}

impl ProductSpec {
    pub fn new(scalar: impl Into<BigInt>, qpower: usize, factors: &[(u32, u32, i32)]) -> Self {
        ProductSpec {
            scalar: scalar.into(),
            qpower,
            factors: factors
                .iter()
                .map(|&(a, b, e)| QFactor { a, b, e })
                .collect(),
        }
    }

    /// Evaluate exactly to `order`.
    pub fn eval(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        let mut acc = TruncatedSeries::one(order);
        for f in &self.factors {
            assert!(f.a >= 1 && f.b >= 1, "product factors must have a, b >= 1");
            let base = if f.a == f.b {
                euler(f.a, order)
            } else {
                pochhammer(f.a, f.b, order)
            };
            acc = acc.mul(&base.pow(f.e as i64)?);
        }
        Ok(acc.scale(&self.scalar).shift(self.qpower))
    }

    /// Canonical rendering in the expression DSL, e.g.
    /// `3 * E(3,3)^3 * E(6,6)^3 * E(1,1)^-4 * E(2,2)^-4`.
    pub fn to_expr_string(&self) -> String {
        let mut pieces = Vec::new();
        if !self.scalar.is_one() || (self.qpower == 0 && self.factors.is_empty()) {
            pieces.push(self.scalar.to_string());
        }
        match self.qpower {
            0 => {}
            1 => pieces.push("q".to_string()),
            s => pieces.push(format!("q^{s}")),
        }
        for f in &self.factors {
            if f.e == 1 {
                pieces.push(format!("E({},{})", f.a, f.b));
            } else {
                pieces.push(format!("E({},{})^{}", f.a, f.b, f.e));
            }
        }
        pieces.join(" * ")
    }
}

/// Evaluate an eta-quotient term exactly to `order`.
pub fn eval_product_spec(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries, SeriesError> {
    spec.eval(order)
}

/// The four named functions of the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaTag {
    PhiNeg,
    Psi,
    P,
    XNeg,
}

/// A named function together with the formal substitution `q -> q^k`, kept
/// explicit because the identities silently mix the arguments q, q^3 and q^9.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedFunction {
    pub tag: ThetaTag,
    pub argument_power: u32,
}

impl NamedFunction {
    pub fn new(tag: ThetaTag, argument_power: u32) -> Self {
        assert!(argument_power >= 1, "argument power must be positive");
        NamedFunction {
            tag,
            argument_power,
        }
    }

    /// Reference construction: theta sums for `phi_neg` and `psi`, product
    /// forms for `p_func` and `x_neg`.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let k = self.argument_power;
        match self.tag {
            ThetaTag::PhiNeg => phi_neg(k, order),
            ThetaTag::Psi => psi(k, order),
            ThetaTag::P => p_func(k, order),
            ThetaTag::XNeg => x_neg(k, order),
        }
    }

    /// Equivalent eta-product form; for `phi_neg` and `psi` this is the
    /// cross-check route against the theta sum.
    pub fn product_form(&self) -> ProductSpec {
        let k = self.argument_power;
        let factors: &[(u32, u32, i32)] = match self.tag {
            ThetaTag::PhiNeg => &[(k, k, 2), (2 * k, 2 * k, -1)],
            ThetaTag::Psi => &[(2 * k, 2 * k, 1), (k, 2 * k, -1)],
            ThetaTag::P => &[(2 * k, 6 * k, 1), (4 * k, 6 * k, 1), (3 * k, 3 * k, 2), (k, k, -1)],
            ThetaTag::XNeg => &[(k, k, 1), (6 * k, 6 * k, 2), (2 * k, 2 * k, -1), (3 * k, 3 * k, -1)],
        };
        ProductSpec::new(1, 0, factors)
    }
}

/// `sum_{n in Z} (-1)^n q^(k n^2)`: 1 at exponent 0, then `2 (-1)^n` at
/// `k n^2`.
pub fn phi_neg(k: u32, order: usize) -> TruncatedSeries {
    assert!(k >= 1);
    let k = k as usize;
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    let mut n = 1usize;
    while k * n * n <= order {
        coeffs[k * n * n] = BigInt::from(if n % 2 == 1 { -2 } else { 2 });
        n += 1;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `sum_{n>=0} q^(k n(n+1)/2)`.
pub fn psi(k: u32, order: usize) -> TruncatedSeries {
    assert!(k >= 1);
    let k = k as usize;
    let mut coeffs = vec![BigInt::zero(); order + 1];
    let mut n = 0usize;
    while k * (n * (n + 1) / 2) <= order {
        coeffs[k * (n * (n + 1) / 2)] = BigInt::one();
        n += 1;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(q^2k; q^6k)(q^4k; q^6k)(q^3k; q^3k)^2 / (q^k; q^k)`.
pub fn p_func(k: u32, order: usize) -> TruncatedSeries {
    NamedFunction::new(ThetaTag::P, k)
        .product_form()
        .eval(order)
        .expect("eta factors are units")
}

/// `(q^k; q^k)(q^6k; q^6k)^2 / ((q^2k; q^2k)(q^3k; q^3k))`.
pub fn x_neg(k: u32, order: usize) -> TruncatedSeries {
    NamedFunction::new(ThetaTag::XNeg, k)
        .product_form()
        .eval(order)
        .expect("eta factors are units")
}
