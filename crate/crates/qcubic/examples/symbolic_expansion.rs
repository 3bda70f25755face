//! Expand the fourth-power product of the two dissection trinomials in the
//! graded polynomial ring, extract the residue-2 part, and diff it against
//! the published 27-term transcription.
//!
//!     cargo run --release --example symbolic_expansion

use qcubic::identities::{machine_residue_poly, published_residue_poly};
use qcubic::polyring::{dissection_factor_phi, dissection_factor_psi};

fn main() {
    let phi_factor = dissection_factor_phi();
    let psi_factor = dissection_factor_psi();
    println!("phi trinomial: {phi_factor}");
    println!("psi trinomial: {psi_factor}");

    let product = phi_factor.pow(4).mul(&psi_factor.pow(4));
    println!("\n(phi trinomial)^4 * (psi trinomial)^4 has {} monomials", product.num_terms());

    let residue = product.residue_extract(3, 2);
    println!(
        "its q-degree 2 mod 3 part has {} monomials, grouped by q-degree:",
        residue.num_terms()
    );
    let mut current = None;
    for (key, coeff) in residue.terms() {
        if current != Some(key.qdeg) {
            current = Some(key.qdeg);
            println!("  q-degree {}:", key.qdeg);
        }
        println!("    {coeff:>6} * {key}");
    }

    // Diff against the transcription as published.
    let machine = machine_residue_poly();
    let published = published_residue_poly();
    println!("\ndiff against the published transcription:");
    let mut clean = true;
    for (key, coeff) in machine.terms() {
        match published.coefficient(key) {
            Some(p) if p == coeff => {}
            Some(p) => {
                clean = false;
                println!("  {key}: machine {coeff}, published {p}");
            }
            None => {
                clean = false;
                println!("  machine-only monomial: {coeff} * {key}");
            }
        }
    }
    for (key, coeff) in published.terms() {
        if machine.coefficient(key).is_none() {
            clean = false;
            println!("  published-only monomial: {coeff} * {key} (degree bookkeeping: F+X = {})",
                key.f + key.x);
        }
    }
    if clean {
        println!("  transcription matches the expansion exactly");
    }

    // The numeric cross-check: rendering the symbolic residue part equals
    // zeroing the other residue classes of the rendered full product.
    let order = 60;
    let rendered_part = residue.render_series(order);
    let full = product.render_series(order);
    let extracted = qcubic::series::TruncatedSeries::from_coeffs(
        full.coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 3 == 2 { c.clone() } else { 0.into() })
            .collect(),
    );
    assert_eq!(rendered_part, extracted);
    println!("\nsymbolic extraction agrees with numeric residue extraction to order {order}");
}
