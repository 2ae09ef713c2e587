//! Exact spectrum of the inflation matrix, its Perron-Frobenius vectors,
//! the limit projection and how fast the powers approach it.

use icotile::inflation::{char_poly, frequency_deviation, projection_error, spectral_data, CountVector};

fn main() {
    let s = spectral_data().unwrap();
    println!("characteristic polynomial: {}", char_poly());
    for (x, f) in s.eigenvalues_exact.iter().zip(s.eigenvalues) {
        println!("  eigenvalue {x} ~ {f:.7}");
    }
    println!("volume fractions: {:.4?}", s.right_pf);
    println!("frequencies:      {:.4?}", s.left_pf);
    println!("\n n   max|tau^-3n M^n - P|   ratio   frequency deviation (unit T1)");
    let mut prev = None;
    for n in (5..=25).step_by(5) {
        let e = projection_error(n);
        let ratio = prev.map(|p: f64| (e / p).powf(0.2)).unwrap_or(f64::NAN);
        println!("{n:>2}   {e:>12.4e}         {ratio:.4}   {:.3e}", frequency_deviation(&CountVector::unit(0), n));
        prev = Some(e);
    }
    println!("per-step ratio tends to tau^-2 = 0.3820");
}
