//! Growth of tile counts under repeated inflation, with exact volumes.
//!
//! Usage: `cargo run --example inflation_counts -- [tile] [max order]`

use icotile::catalog::TileKind;
use icotile::inflation::{inflate_counts, CountVector};
use icotile::GoldenRational;

fn main() {
    let mut args = std::env::args().skip(1);
    let tile: TileKind = args.next().as_deref().unwrap_or("T1").parse().expect("tile tag");
    let max: u32 = args.next().map(|s| s.parse().expect("order")).unwrap_or(10);
    let base = CountVector::of(tile).expect("T1, T2, T3 or T4");
    for n in 0..=max {
        let c = inflate_counts(&base, n);
        let v = c.volume();
        assert_eq!(v, GoldenRational::tau_pow(3 * n as i64) * base.volume());
        println!("{tile}^({n:>2}): {:<40} total {:>10} volume {:.4}", c.to_string(), c.total(), v.to_f64());
    }
}
