//! Exact tetrahedron volumes from squared edge lengths.

use icotile::catalog::TileKind;
use icotile::geometry::{cm_volume, EdgeScheme};
use icotile::GoldenRational;

fn main() {
    for kind in TileKind::FUNDAMENTAL {
        let scheme = EdgeScheme::of(kind).unwrap();
        let v = cm_volume(&scheme).unwrap();
        println!(
            "{kind}: 288V^2 = {}, V = {} ~ {:.10}",
            v.determinant,
            v.volume_exact.as_ref().map(ToString::to_string).unwrap_or_default(),
            v.volume
        );
    }
    // the regular tetrahedron has V = sqrt(2)/12, outside the golden field
    let regular = EdgeScheme([(); 6].map(|_| GoldenRational::one()));
    let v = cm_volume(&regular).unwrap();
    println!("regular: V^2 = {}, exact root: {}, V ~ {:.10}", v.volume_squared, v.is_exact(), v.volume);
}
