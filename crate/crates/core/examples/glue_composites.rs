//! Builds T3 by gluing two t5 onto the (tau,tau,tau) faces of a t6, shows
//! the unit pentagon, then turns the second t5 to get the T3bar variant.

use icotile::catalog::{census_label, TileKind};
use icotile::geometry::{glue, realize, FaceMatch, GeometryError, Surface, Tolerances};

fn build(second: [usize; 3]) -> Result<(), GeometryError> {
    let tol = Tolerances::default();
    let t6 = realize(TileKind::Tet6)?;
    let t5 = realize(TileKind::Tet5)?;
    // face 3 of every tile is its base ABC; for t6 face 2 is the other equilateral face
    let a = glue(&t6, 3, &t5, 3, FaceMatch::Explicit([2, 0, 1]), &tol)?;
    let b = glue(&t6, 2, &t5, 3, FaceMatch::Explicit(second), &tol)?;
    let tiles = [t6, a, b];
    let hull = Surface::from_tiles(&tiles, &tol).merge(&tol);
    let census = hull.census(1e-9).map(|c| census_label(&c)).unwrap_or_default();
    println!("second t5 matched by {second:?}: {:?}, faces {census}", hull.counts());
    for i in 0..hull.faces.len() {
        let f = hull.face(i);
        if f.corners() > 3 {
            println!("  {}-gon, edges {:.6?}, planarity {:.1e}", f.corners(), f.edge_lengths(), f.planarity());
        }
    }
    Ok(())
}

fn main() -> Result<(), GeometryError> {
    build([2, 0, 1])?;
    build([1, 2, 0])?;
    // an equilateral face admits three proper matches, so automatic matching refuses
    let tol = Tolerances::default();
    let err = glue(&realize(TileKind::Tet6)?, 3, &realize(TileKind::Tet5)?, 3, FaceMatch::Auto { flip: false }, &tol);
    println!("automatic match on an equilateral face: {}", err.unwrap_err());
    Ok(())
}
