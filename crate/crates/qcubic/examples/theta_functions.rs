//! The named functions and their cross-checks: theta sums against
//! eta-product forms, and the two product identities that tie them together.
//!
//!     cargo run --release --example theta_functions

use qcubic::products::{euler, p_func, phi_neg, psi, x_neg, NamedFunction, ThetaTag};

fn main() {
    let order = 400;

    println!("phi(1) = {}", phi_neg(1, 12));
    println!("psi(1) = {}", psi(1, 12));
    println!("P(1)   = {}", p_func(1, 12));
    println!("X(1)   = {}", x_neg(1, 12));
    println!();

    // Sum form against product form for the two theta functions.
    for (name, tag) in [("phi", ThetaTag::PhiNeg), ("psi", ThetaTag::Psi)] {
        let named = NamedFunction::new(tag, 1);
        let sum_form = named.series(order);
        let product_form = named.product_form().eval(order).expect("unit factors");
        assert_eq!(sum_form, product_form);
        println!("{name}: theta sum and eta product agree to order {order}");
    }

    // phi(-q) psi(q) = (q;q)(q^2;q^2) and X(-q) P(q) = (q^3;q^3)(q^6;q^6).
    assert_eq!(
        phi_neg(1, order).mul(&psi(1, order)),
        euler(1, order).mul(&euler(2, order))
    );
    println!("phi(1) * psi(1) = E(1,1) * E(2,2) to order {order}");

    assert_eq!(
        x_neg(1, order).mul(&p_func(1, order)),
        euler(3, order).mul(&euler(6, order))
    );
    println!("X(1) * P(1) = E(3,3) * E(6,6) to order {order}");

    // The 3-dissection of 1/phi(-q), assembled from shifted pieces.
    let f9 = phi_neg(9, order);
    let x3 = x_neg(3, order);
    let trinomial = f9
        .mul(&f9)
        .add(&f9.mul(&x3).scale(&2.into()).shift(1))
        .add(&x3.mul(&x3).scale(&4.into()).shift(2));
    let rhs = f9
        .mul(&phi_neg(3, order).pow(-4).expect("unit"))
        .mul(&trinomial);
    assert_eq!(phi_neg(1, order).invert().expect("unit"), rhs);
    println!("the 3-dissection of 1 / phi(1) holds to order {order}");
}
