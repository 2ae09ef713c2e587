//! Verifies the dodecahedral decompositions of inflated tiles by counts and
//! by exact volume, then shows that a one-off coefficient is caught.

use icotile::inflation::{dodecahedron_ledger, verify_decomposition};
use num_bigint::BigInt;

fn main() {
    let ledger = dodecahedron_ledger();
    for d in &ledger {
        let r = verify_decomposition(d).unwrap();
        println!("{} {d}", if r.ok() { "OK  " } else { "FAIL" });
        println!("     counts {}  volume {}", r.expected_counts, r.expected_volume);
    }
    let mut broken = ledger[0].clone();
    if let Some(last) = broken.parts.last_mut() {
        last.count += BigInt::from(1);
    }
    let r = verify_decomposition(&broken).unwrap();
    println!("\nmutated: {broken}");
    println!("count-consistent {}, volume-consistent {}", r.count_consistent, r.volume_consistent);
    println!("found {} instead of {}", r.found_counts, r.expected_counts);
}
