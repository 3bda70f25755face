//! Exact multivariate polynomial ring in four opaque symbols with a q-degree
//! grading per monomial.
//!
//! The symbols are bound at render time to concrete series:
//!
//! * `F` — `phi_neg(9, .)`, i.e. the theta sum with argument q^9,
//! * `X` — `x_neg(3, .)`,
//! * `P` — `p_func(3, .)`,
//! * `S` — `psi(9, .)`.
//!
//! All four are series in q^3, so a monomial of q-degree d only produces
//! series exponents congruent to d mod 3. Extracting a residue class of the
//! grading therefore agrees with extracting the same residue class of the
//! rendered series, which is what makes the symbolic route checkable against
//! the numeric one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::products::{p_func, phi_neg, psi, x_neg};
use crate::series::TruncatedSeries;

/// Exponent vector of one monomial: `q^qdeg * F^f X^x P^p S^s`.
///
/// Ordering is canonical for report output: ascending q-degree, then
/// descending lexicographic on (p, x, f, s).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialKey {
    pub qdeg: u32,
    pub f: u32,
    pub x: u32,
    pub p: u32,
    pub s: u32,
}

impl MonomialKey {
    pub fn new(qdeg: u32, f: u32, x: u32, p: u32, s: u32) -> Self {
        MonomialKey { qdeg, f, x, p, s }
    }

    /// `q^d * F^a X^b P^c S^e` with zero exponents omitted; empty for the
    /// constant monomial.
    fn symbol_text(&self) -> String {
        let mut blocks = Vec::new();
        if self.qdeg > 0 {
            blocks.push(format!("q^{}", self.qdeg));
        }
        let symbols: Vec<String> = [("F", self.f), ("X", self.x), ("P", self.p), ("S", self.s)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(name, e)| format!("{name}^{e}"))
            .collect();
        if !symbols.is_empty() {
            blocks.push(symbols.join(" "));
        }
        blocks.join(" * ")
    }
}

impl Ord for MonomialKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.qdeg.cmp(&other.qdeg).then_with(|| {
            (other.p, other.x, other.f, other.s).cmp(&(self.p, self.x, self.f, self.s))
        })
    }
}

impl PartialOrd for MonomialKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.symbol_text();
        if text.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{text}")
        }
    }
}

/// Sparse polynomial: monomial key -> nonzero integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPoly {
    terms: BTreeMap<MonomialKey, BigInt>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut poly = GradedPoly::zero();
        poly.insert(MonomialKey::new(0, 0, 0, 0, 0), c.into());
        poly
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MonomialKey, BigInt)>) -> Self {
        let mut poly = GradedPoly::zero();
        for (key, coeff) in terms {
            poly.insert(key, coeff);
        }
        poly
    }

    /// Accumulate a coefficient, never storing zeros.
    pub fn insert(&mut self, key: MonomialKey, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonomialKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &MonomialKey) -> Option<&BigInt> {
        self.terms.get(key)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.insert(*key, coeff.clone());
        }
        out
    }

    /// Exact product: q-degrees add, exponent vectors add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GradedPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let key = MonomialKey::new(
                    a.qdeg + b.qdeg,
                    a.f + b.f,
                    a.x + b.x,
                    a.p + b.p,
                    a.s + b.s,
                );
                out.insert(key, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = GradedPoly::constant(1);
        let mut power = self.clone();
        let mut exp = e;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&power);
            }
            exp >>= 1;
            if exp > 0 {
                power = power.mul(&power);
            }
        }
        result
    }

    /// Sub-polynomial of the terms with `qdeg === r (mod m)`.
    pub fn residue_extract(&self, m: u32, r: u32) -> Self {
        assert!(r < m, "residue must satisfy r < m");
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.qdeg % m == r)
                .map(|(key, coeff)| (*key, coeff.clone()))
                .collect(),
        }
    }

    /// Substitute the four symbol series and `q^qdeg -> shift`, summing all
    /// terms exactly to `order`.
    pub fn render_series(&self, order: usize) -> TruncatedSeries {
        let mut max = [0u32; 4];
        for key in self.terms.keys() {
            max[0] = max[0].max(key.f);
            max[1] = max[1].max(key.x);
            max[2] = max[2].max(key.p);
            max[3] = max[3].max(key.s);
        }
        let bases = [
            phi_neg(9, order),
            x_neg(3, order),
            p_func(3, order),
            psi(9, order),
        ];
        let powers: Vec<Vec<TruncatedSeries>> = bases
            .iter()
            .zip(max)
            .map(|(base, hi)| {
                let mut table = vec![TruncatedSeries::one(order)];
                for e in 1..=hi as usize {
                    table.push(table[e - 1].mul(base));
                }
                table
            })
            .collect();
        let mut acc = TruncatedSeries::zero(order);
        for (key, coeff) in &self.terms {
            let term = powers[0][key.f as usize]
                .mul(&powers[1][key.x as usize])
                .mul(&powers[2][key.p as usize])
                .mul(&powers[3][key.s as usize])
                .scale(coeff)
                .shift(key.qdeg as usize);
            acc = acc.add(&term);
        }
        acc
    }

    /// Canonical text: `coef * q^d * F^a X^b P^c S^e` terms joined by ` + `,
    /// zero exponents omitted.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(key, coeff)| {
                let symbols = key.symbol_text();
                if symbols.is_empty() {
                    coeff.to_string()
                } else {
                    format!("{coeff} * {symbols}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// The quadratic factor of the 3-dissection of `1/phi_neg(1, .)`:
/// `F^2 + 2 q F X + 4 q^2 X^2`.
pub fn dissection_factor_phi() -> GradedPoly {
    GradedPoly::from_terms([
        (MonomialKey::new(0, 2, 0, 0, 0), BigInt::from(1)),
        (MonomialKey::new(1, 1, 1, 0, 0), BigInt::from(2)),
        (MonomialKey::new(2, 0, 2, 0, 0), BigInt::from(4)),
    ])
}

/// The quadratic factor of the 3-dissection of `1/psi(1, .)`:
/// `P^2 - q S P + q^2 S^2`.
pub fn dissection_factor_psi() -> GradedPoly {
    GradedPoly::from_terms([
        (MonomialKey::new(0, 0, 0, 2, 0), BigInt::from(1)),
        (MonomialKey::new(1, 0, 0, 1, 1), BigInt::from(-1)),
        (MonomialKey::new(2, 0, 0, 0, 2), BigInt::from(1)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    /// Brute-force expansion of `(t0 + t1 + t2)^4` by enumerating all
    /// multinomial compositions, independent of the polynomial arithmetic.
    fn brute_force_fourth_power(terms: &GradedPoly) -> GradedPoly {
        let terms: Vec<(MonomialKey, BigInt)> = terms
            .terms()
            .map(|(key, coeff)| (*key, coeff.clone()))
            .collect();
        assert_eq!(terms.len(), 3);
        let factorial = |n: u32| -> u64 { (1..=n as u64).product::<u64>().max(1) };
        let mut out = GradedPoly::zero();
        for i in 0..=4u32 {
            for j in 0..=4 - i {
                let k = 4 - i - j;
                let multinomial = factorial(4) / (factorial(i) * factorial(j) * factorial(k));
                let mut coeff = BigInt::from(multinomial);
                let mut key = MonomialKey::new(0, 0, 0, 0, 0);
                for (count, (term_key, term_coeff)) in
                    [i, j, k].into_iter().zip(terms.iter())
                {
                    for _ in 0..count {
                        coeff *= term_coeff;
                        key.qdeg += term_key.qdeg;
                        key.f += term_key.f;
                        key.x += term_key.x;
                        key.p += term_key.p;
                        key.s += term_key.s;
                    }
                }
                out.insert(key, coeff);
            }
        }
        out
    }

    fn residue_product() -> GradedPoly {
        dissection_factor_phi()
            .pow(4)
            .mul(&dissection_factor_psi().pow(4))
            .residue_extract(3, 2)
    }

    #[test]
    fn phi_factor_has_three_terms() {
        let poly = dissection_factor_phi();
        assert_eq!(poly.num_terms(), 3);
        let coeffs: Vec<BigInt> = poly.terms().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs, [1, 2, 4].map(BigInt::from).to_vec());
        let qdegs: Vec<u32> = poly.terms().map(|(key, _)| key.qdeg).collect();
        assert_eq!(qdegs, vec![0, 1, 2]);
    }

    #[test]
    fn psi_factor_middle_coefficient_is_negative() {
        let poly = dissection_factor_psi();
        assert_eq!(
            poly.coefficient(&MonomialKey::new(1, 0, 0, 1, 1)),
            Some(&BigInt::from(-1))
        );
    }

    #[test]
    fn pow_zero_is_the_constant_one() {
        assert_eq!(dissection_factor_phi().pow(0), GradedPoly::constant(1));
    }

    #[test]
    fn fourth_powers_match_the_multinomial_oracle() {
        // The 15 compositions of 4 into 3 parts merge down to 9 distinct
        // monomials because the q-degree is tied to the symbol exponents.
        let phi4 = dissection_factor_phi().pow(4);
        assert_eq!(phi4, brute_force_fourth_power(&dissection_factor_phi()));
        assert_eq!(phi4.num_terms(), 9);

        let psi4 = dissection_factor_psi().pow(4);
        assert_eq!(psi4, brute_force_fourth_power(&dissection_factor_psi()));
        assert_eq!(psi4.num_terms(), 9);

        let product = phi4.mul(&psi4);
        assert_eq!(product.num_terms(), 81);
    }

    #[test]
    fn residue_extraction_partitions_the_product() {
        let product = dissection_factor_phi()
            .pow(4)
            .mul(&dissection_factor_psi().pow(4));
        let rebuilt = product
            .residue_extract(3, 0)
            .add(&product.residue_extract(3, 1))
            .add(&product.residue_extract(3, 2));
        assert_eq!(rebuilt, product);
    }

    #[test]
    fn residue_extract_of_a_constant_is_zero() {
        assert!(GradedPoly::constant(7).residue_extract(3, 2).is_zero());
    }

    #[test]
    fn residue_two_part_has_27_grouped_monomials() {
        let poly = residue_product();
        assert_eq!(poly.num_terms(), 27);
        let mut group_sizes = std::collections::BTreeMap::new();
        for (key, _) in poly.terms() {
            *group_sizes.entry(key.qdeg).or_insert(0usize) += 1;
            assert_eq!(key.f + key.x, 8, "F/X degree bookkeeping at {key}");
            assert_eq!(key.p + key.s, 8, "P/S degree bookkeeping at {key}");
        }
        let expected: std::collections::BTreeMap<u32, usize> =
            [(2, 3), (5, 6), (8, 9), (11, 6), (14, 3)].into_iter().collect();
        assert_eq!(group_sizes, expected);
    }

    #[test]
    fn residue_two_spot_coefficients() {
        let poly = residue_product();
        let spot = [
            (MonomialKey::new(2, 6, 2, 8, 0), 40),
            (MonomialKey::new(2, 7, 1, 7, 1), -32),
            (MonomialKey::new(2, 8, 0, 6, 2), 10),
            (MonomialKey::new(8, 4, 4, 4, 4), 5776),
            (MonomialKey::new(8, 8, 0, 0, 8), 1),
            (MonomialKey::new(14, 2, 6, 0, 8), 640),
        ];
        for (key, expected) in spot {
            assert_eq!(
                poly.coefficient(&key),
                Some(&BigInt::from(expected)),
                "coefficient of {key}"
            );
        }
    }

    #[test]
    fn render_matches_direct_assembly() {
        let order = 60;
        let rendered = dissection_factor_phi().render_series(order);
        let f9 = phi_neg(9, order);
        let x3 = x_neg(3, order);
        let direct = f9
            .mul(&f9)
            .add(&f9.mul(&x3).scale(&BigInt::from(2)).shift(1))
            .add(&x3.mul(&x3).scale(&BigInt::from(4)).shift(2));
        assert_eq!(rendered, direct);
    }

    #[test]
    fn render_of_zero_is_the_zero_series() {
        assert!(GradedPoly::zero().render_series(10).is_zero());
    }

    #[test]
    fn rendered_monomials_respect_the_grading() {
        // Every symbol is a series in q^3, so a term of q-degree d only
        // populates exponents congruent to d mod 3.
        let poly = residue_product();
        let rendered = poly.render_series(40);
        for (n, c) in rendered.coeffs().iter().enumerate() {
            if n % 3 != 2 {
                assert!(c.is_zero(), "unexpected coefficient at q^{n}");
            }
        }
    }

    #[test]
    fn canonical_text_ordering() {
        let poly = residue_product();
        let text = poly.canonical_text();
        assert!(
            text.starts_with("40 * q^2 * F^6 X^2 P^8 + -32 * q^2 * F^7 X^1 P^7 S^1"),
            "unexpected ordering: {}",
            &text[..80.min(text.len())]
        );
        assert_eq!(GradedPoly::zero().canonical_text(), "0");
        assert_eq!(GradedPoly::constant(5).canonical_text(), "5");
    }

    fn small_poly() -> impl Strategy<Value = GradedPoly> {
        prop::collection::vec(
            (0u32..=3, 0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2, -5i64..=5),
            1..=3,
        )
        .prop_map(|terms| {
            GradedPoly::from_terms(terms.into_iter().map(|(qdeg, f, x, p, s, c)| {
                (MonomialKey::new(qdeg, f, x, p, s), BigInt::from(c))
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn poly_mul_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn rendering_is_a_ring_homomorphism(a in small_poly(), b in small_poly()) {
            let order = 24;
            let product = a.mul(&b).render_series(order);
            let factors = a.render_series(order).mul(&b.render_series(order));
            prop_assert_eq!(product, factors);
        }
    }
}
