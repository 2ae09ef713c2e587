//! The icosahedral axis frame: every interior wall of the dodecahedron and
//! icosahedron dissections is normal to a five-fold axis when it is a
//! Robinson triangle and to a three-fold axis when it is equilateral.

use std::collections::BTreeMap;

use icotile::geometry::{assemble, AxisFrame, GeometryError, Point3, ShapeTarget, Tolerances};

fn main() -> Result<(), GeometryError> {
    let tol = Tolerances::default();
    let frame = AxisFrame::new(tol.predicate);
    println!(
        "axes: {} five-fold, {} three-fold, {} two-fold; {} rotations",
        frame.five_fold.len(),
        frame.three_fold.len(),
        frame.two_fold.len(),
        frame.rotations.len()
    );
    for target in [ShapeTarget::D1, ShapeTarget::I1] {
        let a = assemble(target, &tol)?;
        let mut tally: BTreeMap<(String, String), usize> = BTreeMap::new();
        for w in a.walls(&frame, &tol) {
            let label = w.spec.map(|s| s.label()).unwrap_or_else(|| "?".into());
            *tally.entry((label, format!("{:?}", w.axis))).or_default() += 1;
        }
        println!("{target} interior walls:");
        for ((shape, axis), n) in tally {
            println!("  {n:>3} x {shape:<18} normal to {axis}");
        }
        let hull: Vec<Point3> = (0..a.hull.vertices.len()).map(|i| a.hull.point(i)).collect();
        println!("  hull vertices form one orbit: {}", frame.is_single_orbit(&hull, tol.predicate));
    }
    Ok(())
}
