//! The expression language: parse, render, evaluate, and see how errors are
//! reported.
//!
//!     cargo run --release --example expressions

use qcubic::expr::{eval_expr, parse_expr, render};

fn main() {
    let terms = 12;

    let inputs = [
        "1 / (E(1,1) * E(2,2))",
        "3 * E(3,3)^3 * E(6,6)^3 / (E(1,1)^4 * E(2,2)^4)",
        "phi(1) * psi(1)",
        "q^2 * eta(5)^-1",
    ];
    for text in inputs {
        let ast = parse_expr(text).expect("well-formed input");
        let series = eval_expr(&ast, terms).expect("evaluates");
        println!("{text}");
        println!("  renders as: {}", render(&ast));
        println!("  expands to: {series}");
        println!();
    }

    // Parse errors carry a 1-based offset and an expected-token hint.
    let broken = "E(1,1";
    match parse_expr(broken) {
        Err(err) => println!("parsing `{broken}` fails: {err}"),
        Ok(_) => unreachable!(),
    }

    // Division by a non-unit is caught at evaluation time, with the
    // offending subexpression spelled out.
    let non_unit = "1 / (q + q^2)";
    let ast = parse_expr(non_unit).expect("parses fine");
    match eval_expr(&ast, terms) {
        Err(err) => println!("evaluating `{non_unit}` fails: {err}"),
        Ok(_) => unreachable!(),
    }
}
