//! Run every identity in the registry and print a report table.
//!
//!     cargo run --release --example verify_all [terms]

use qcubic::identities::{verify_all, Status};

fn main() {
    let terms: usize = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("terms must be a positive integer"))
        .unwrap_or(200);

    println!("checking every registered identity on coefficients 0..={terms}\n");
    let start = std::time::Instant::now();
    let reports = verify_all(terms);

    for report in &reports {
        println!(
            "{:<18} {:<9} {:>5} terms  {:>8.1} ms",
            report.id,
            report.status.to_string(),
            report.terms_checked,
            report.elapsed.as_secs_f64() * 1000.0
        );
        if let Some(notes) = &report.notes {
            println!("    note: {notes}");
        }
    }

    let verified = reports.iter().filter(|r| r.status == Status::Verified).count();
    println!(
        "\n{verified} of {} cases verified in {:.2} s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );
    if verified != reports.len() {
        std::process::exit(1);
    }
}
