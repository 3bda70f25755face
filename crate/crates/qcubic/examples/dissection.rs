//! Reproduce the 3-dissection identity for the cubic partition function with
//! raw series operations: dissect the generating function and compare it
//! against the closed eta-quotient form.
//!
//!     cargo run --release --example dissection

use qcubic::products::{euler, ProductSpec};
use qcubic::series::Comparison;

fn main() {
    let terms = 40;

    // Left side: the coefficients a(3n+2), taken from the generating
    // function 1 / ((q;q)(q^2;q^2)) built at order 3*terms + 2 so the
    // dissected window is exact.
    let source_order = 3 * terms + 2;
    let cubic = euler(1, source_order)
        .mul(&euler(2, source_order))
        .invert()
        .expect("unit constant term");
    let lhs = cubic.dissect(3, 2).expect("window is large enough");

    // Right side: 3 E(3,3)^3 E(6,6)^3 / (E(1,1)^4 E(2,2)^4).
    let spec = ProductSpec::new(3, 0, &[(3, 3, 3), (6, 6, 3), (1, 1, -4), (2, 2, -4)]);
    let rhs = spec.eval(terms).expect("unit factors");

    println!("sum a(3n+2) q^n            = {lhs}");
    println!("{:<26} = {rhs}", spec.to_expr_string());

    match lhs.equal_up_to(&rhs, terms).expect("orders match") {
        Comparison::Equal => println!("\nidentical on coefficients 0..={terms}"),
        Comparison::Mismatch { index, lhs, rhs } => {
            println!("\nfirst difference at q^{index}: {lhs} vs {rhs}");
            std::process::exit(1);
        }
    }

    // Every coefficient of the dissection is visibly divisible by 3.
    println!(
        "a(2), a(5), a(8), ... = {}",
        lhs.coeffs()
            .iter()
            .take(8)
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
}
