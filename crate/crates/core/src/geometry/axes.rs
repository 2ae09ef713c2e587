//! Icosahedral symmetry axes and the rotation group.

use nalgebra::{Matrix3, Rotation3, Unit};

use super::Point3;
use crate::catalog::AxisClass;
use crate::golden::GoldenRational;

pub type Rotation = Matrix3<f64>;

/// Axes of the icosahedron with vertices at the cyclic permutations of
/// `(0, ±1, ±τ)/2`, together with its 60 rotations.
#[derive(Debug, Clone)]
pub struct AxisFrame {
    pub five_fold: Vec<Point3>,
    pub three_fold: Vec<Point3>,
    pub two_fold: Vec<Point3>,
    pub rotations: Vec<Rotation>,
}

/// The twelve vertices of the unit-edge icosahedron of the frame.
pub fn icosahedron_vertices() -> Vec<Point3> {
    let t = GoldenRational::tau().to_f64() / 2.0;
    let mut out = Vec::with_capacity(12);
    for s1 in [1.0, -1.0] {
        for s2 in [1.0, -1.0] {
            let (a, b) = (0.5 * s1, t * s2);
            out.push(Point3::new(0.0, a, b));
            out.push(Point3::new(a, b, 0.0));
            out.push(Point3::new(b, 0.0, a));
        }
    }
    out
}

/// Keeps one unit vector per line through the origin.
fn axis_lines(dirs: impl IntoIterator<Item = Point3>, tol: f64) -> Vec<Point3> {
    let mut out: Vec<Point3> = Vec::new();
    for d in dirs {
        let u = d.normalize();
        if !out.iter().any(|a| a.cross(&u).norm() <= tol) {
            out.push(u);
        }
    }
    out
}

fn contains_rotation(group: &[Rotation], r: &Rotation, tol: f64) -> bool {
    group.iter().any(|g| (g - r).abs().max() <= tol)
}

impl AxisFrame {
    pub fn new(tol: f64) -> AxisFrame {
        let v = icosahedron_vertices();
        let n = v.len();
        let near = |a: &Point3, b: &Point3| ((a - b).norm() - 1.0).abs() <= 1e-9;
        let mut mids = Vec::new();
        let mut centers = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !near(&v[i], &v[j]) {
                    continue;
                }
                mids.push((v[i] + v[j]) / 2.0);
                for k in j + 1..n {
                    if near(&v[i], &v[k]) && near(&v[j], &v[k]) {
                        centers.push((v[i] + v[j] + v[k]) / 3.0);
                    }
                }
            }
        }
        let five_fold = axis_lines(v.iter().copied(), tol);
        let three_fold = axis_lines(centers, tol);
        let two_fold = axis_lines(mids, tol);
        let gens = [
            Rotation3::from_axis_angle(&Unit::new_normalize(five_fold[0]), std::f64::consts::TAU / 5.0).into_inner(),
            Rotation3::from_axis_angle(&Unit::new_normalize(three_fold[0]), std::f64::consts::TAU / 3.0).into_inner(),
        ];
        let mut rotations = vec![Rotation::identity()];
        let mut frontier = rotations.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for g in &gens {
                    let p = g * r;
                    if !contains_rotation(&rotations, &p, tol) {
                        rotations.push(p);
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        AxisFrame { five_fold, three_fold, two_fold, rotations }
    }

    /// Whether every rotation maps each axis class onto itself.
    pub fn permutes_axes(&self, tol: f64) -> bool {
        self.rotations.iter().all(|r| {
            [&self.five_fold, &self.three_fold, &self.two_fold]
                .iter()
                .all(|class| class.iter().all(|a| class.iter().any(|b| (r * a).cross(b).norm() <= tol)))
        })
    }

    /// Whether the point set is one orbit of the rotation group.
    pub fn is_single_orbit(&self, points: &[Point3], tol: f64) -> bool {
        let Some(first) = points.first() else {
            return true;
        };
        let closed = self
            .rotations
            .iter()
            .all(|r| points.iter().all(|p| points.iter().any(|q| (r * p - q).norm() <= tol)));
        let reached = points.iter().all(|q| self.rotations.iter().any(|r| (r * first - q).norm() <= tol));
        closed && reached
    }
}

/// Which axis class a face normal is parallel to.
pub fn face_axis_class(normal: &Point3, frame: &AxisFrame, tol: f64) -> AxisClass {
    let u = normal.normalize();
    let on = |axes: &[Point3]| axes.iter().any(|a| a.cross(&u).norm() <= tol);
    if on(&frame.five_fold) {
        AxisClass::FiveFold
    } else if on(&frame.three_fold) {
        AxisClass::ThreeFold
    } else {
        AxisClass::None
    }
}
