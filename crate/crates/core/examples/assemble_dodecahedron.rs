//! Assembles the unit dodecahedron from 3 T1 + 4 T2 + 4 T4 (38 fundamental
//! tetrahedra) and checks its hull; writes an OBJ when given a path.
//!
//! Usage: `cargo run --example assemble_dodecahedron -- [out.obj]`

use icotile::catalog::census_label;
use icotile::geometry::{assemble, dihedrals, GeometryError, ShapeTarget, Tolerances};

fn main() -> Result<(), GeometryError> {
    let tol = Tolerances::default();
    let d1 = assemble(ShapeTarget::D1, &tol)?;
    let (proper, mirrored) = d1.parity_census();
    println!("{} tiles ({proper} proper, {mirrored} mirrored) in {} composite groups", d1.tiles.len(), d1.groups.len());
    println!("hull {:?}", d1.hull.counts());
    println!("faces {}", census_label(&d1.hull.census(tol.predicate).unwrap()));
    println!("hull volume {:.12}, sum of tiles {:.12}", d1.hull.volume(), d1.tile_volume());
    let angles: Vec<f64> = dihedrals(&d1.hull, &tol).iter().filter_map(|d| d.angle).collect();
    let spread = angles.iter().fold(0.0f64, |m, a| m.max((a - angles[0]).abs()));
    println!("{} dihedrals, all {:.9} (pi - atan 2 = {:.9}), spread {spread:.1e}", angles.len(), angles[0], std::f64::consts::PI - 2f64.atan());
    for g in &d1.groups {
        let h = d1.group_hull(g, &tol);
        println!("  {} from {} tiles: {}", g.kind, g.members.len(), census_label(&h.census(tol.predicate).unwrap()));
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, d1.to_obj()).expect("writable path");
        println!("wrote {path}");
    }
    Ok(())
}
