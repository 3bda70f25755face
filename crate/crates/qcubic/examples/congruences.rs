//! Scan the four congruence families on a partition table and print how many
//! cases each one covers.
//!
//!     cargo run --release --example congruences [limit]

use num_bigint::BigInt;
use num_traits::Zero;
use qcubic::partitions::{a_series, p_series};

fn main() {
    let limit: usize = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("limit must be a non-negative integer"))
        .unwrap_or(1000);

    let p = p_series(limit);
    let a = a_series(limit);

    let families: [(&str, &qcubic::partitions::PartitionTable, usize, usize, u64); 4] = [
        ("p(5n+4) == 0 (mod 5)", &p, 5, 4, 5),
        ("p(7n+5) == 0 (mod 7)", &p, 7, 5, 7),
        ("a(3n+2) == 0 (mod 3)", &a, 3, 2, 3),
        ("a(9n+8) == 0 (mod 27)", &a, 9, 8, 27),
    ];

    for (label, table, step, residue, modulus) in families {
        let modulus = BigInt::from(modulus);
        let mut checked = 0;
        for n in (residue..=limit).step_by(step) {
            assert!(
                (table.value(n) % &modulus).is_zero(),
                "{label} fails at n = {n}"
            );
            checked += 1;
        }
        println!("{label}: holds for all {checked} indices up to {limit}");
    }

    // The strongest family, written out for a few small cases.
    println!("\nfirst values of a(9n+8) / 27:");
    for k in 0..5 {
        let n = 9 * k + 8;
        println!("  a({n}) = {} = 27 * {}", a.value(n), a.value(n) / 27);
    }
}
