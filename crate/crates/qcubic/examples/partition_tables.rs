//! Compute p(n) and the cubic partition numbers a(n) by every available
//! route and show that the routes agree.
//!
//!     cargo run --release --example partition_tables

use qcubic::partitions::{a_series, dp_oracle, p_pentagonal, p_series, PartitionKind};

fn main() {
    let limit = 30;

    let p_inv = p_series(limit);
    let p_rec = p_pentagonal(limit);
    let p_dp = dp_oracle(PartitionKind::Ordinary, limit);
    let a_inv = a_series(limit);
    let a_dp = dp_oracle(PartitionKind::Cubic, limit);

    println!("{:>4} {:>12} {:>12}", "n", "p(n)", "a(n)");
    for n in 0..=limit {
        assert_eq!(p_inv.value(n), p_rec.value(n));
        assert_eq!(p_inv.value(n), p_dp.value(n));
        assert_eq!(a_inv.value(n), a_dp.value(n));
        println!("{:>4} {:>12} {:>12}", n, p_inv.value(n), a_inv.value(n));
    }

    println!("\nall three p-routes and both a-routes agree up to n = {limit}");
    println!("anchors: p(4) = {}, p(24) = {}", p_inv.value(4), p_inv.value(24));
    println!(
        "         a(2) = {}, a(5) = {}, a(8) = {}",
        a_inv.value(2),
        a_inv.value(5),
        a_inv.value(8)
    );
}
