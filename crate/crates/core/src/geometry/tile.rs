//! Placed tiles: canonical realization and face-to-face gluing.

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use super::scheme::{EdgeScheme, PAIRS};
use super::{GeometryError, Point3, Tolerances};
use crate::catalog::TileKind;

/// A fundamental tetrahedron in space.
///
/// Vertices follow scheme order `A, B, C, D`; face `i` is the triangle
/// opposite vertex `i`. `parity` is `+1` for a proper copy of the canonical
/// realization and `-1` for a mirror image.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedTile {
    pub kind: TileKind,
    pub vertices: [Point3; 4],
    pub parity: i8,
}

#[derive(Serialize, Deserialize)]
struct PlacedTileJson {
    kind: TileKind,
    parity: i8,
    vertices: Vec<[f64; 3]>,
}

impl Serialize for PlacedTile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PlacedTileJson {
            kind: self.kind,
            parity: self.parity,
            vertices: self.vertices.iter().map(|v| [v.x, v.y, v.z]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlacedTile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PlacedTileJson::deserialize(d)?;
        let vertices: [Point3; 4] = raw
            .vertices
            .iter()
            .map(|v| Point3::new(v[0], v[1], v[2]))
            .collect::<Vec<_>>()
            .try_into()
            .map_err(|_| serde::de::Error::custom("a tetrahedron has four vertices"))?;
        Ok(PlacedTile { kind: raw.kind, vertices, parity: raw.parity })
    }
}

impl PlacedTile {
    /// Places a tile at given vertices, taking parity from their orientation.
    pub fn at(kind: TileKind, vertices: [Point3; 4]) -> Self {
        let mut t = PlacedTile { kind, vertices, parity: 1 };
        t.parity = if t.signed_volume() >= 0.0 { 1 } else { -1 };
        t
    }

    /// Vertex indices of face `i`, the triangle opposite vertex `i`.
    pub fn face(i: usize) -> [usize; 3] {
        match i {
            0 => [1, 2, 3],
            1 => [0, 2, 3],
            2 => [0, 1, 3],
            _ => [0, 1, 2],
        }
    }

    pub fn face_points(&self, i: usize) -> [Point3; 3] {
        Self::face(i).map(|k| self.vertices[k])
    }

    /// `det(B−A, C−A, D−A) / 6`.
    pub fn signed_volume(&self) -> f64 {
        let [a, b, c, d] = self.vertices;
        (b - a).dot(&(c - a).cross(&(d - a))) / 6.0
    }

    pub fn volume(&self) -> f64 {
        self.signed_volume().abs()
    }

    pub fn centroid(&self) -> Point3 {
        self.vertices.iter().sum::<Point3>() / 4.0
    }

    /// Largest relative deviation of an edge from its scheme length.
    pub fn scheme_deviation(&self) -> f64 {
        let scheme = EdgeScheme::of(self.kind).expect("placed tiles are fundamental");
        PAIRS
            .iter()
            .map(|&(i, j)| {
                let want = scheme.length(i, j);
                ((self.vertices[i] - self.vertices[j]).norm() - want).abs() / want
            })
            .fold(0.0, f64::max)
    }

    /// Face `i` oriented so its right-hand normal points out of the tile.
    pub fn outward_face(&self, i: usize) -> [usize; 3] {
        let [a, b, c] = Self::face(i);
        let n = (self.vertices[b] - self.vertices[a]).cross(&(self.vertices[c] - self.vertices[a]));
        if n.dot(&(self.vertices[i] - self.vertices[a])) > 0.0 {
            [a, c, b]
        } else {
            [a, b, c]
        }
    }
}

/// Canonical placement: `A` at the origin, `B` on `+x`, `C` in the `z = 0`
/// plane with `y > 0`, apex `D` above.
pub fn realize(kind: TileKind) -> Result<PlacedTile, GeometryError> {
    let e = EdgeScheme::of(kind).ok_or_else(|| GeometryError::NotFundamental(kind.to_string()))?;
    let sq = |i, j| e.squared(i, j).to_f64();
    let ab = sq(0, 1).sqrt();
    let xc = (sq(0, 1) + sq(0, 2) - sq(1, 2)) / (2.0 * ab);
    let yc = (sq(0, 2) - xc * xc).sqrt();
    let xd = (sq(0, 1) + sq(0, 3) - sq(1, 3)) / (2.0 * ab);
    let yd = (sq(0, 3) + sq(0, 2) - sq(2, 3) - 2.0 * xd * xc) / (2.0 * yc);
    let zd = (sq(0, 3) - xd * xd - yd * yd).sqrt();
    Ok(PlacedTile {
        kind,
        vertices: [Point3::zeros(), Point3::new(ab, 0.0, 0.0), Point3::new(xc, yc, 0.0), Point3::new(xd, yd, zd)],
        parity: 1,
    })
}

/// How the moving face's vertices are matched to the fixed face's.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceMatch {
    /// Moving face position `i` lands on fixed face position `corr[i]`.
    Explicit([usize; 3]),
    /// Match vertices by incident edge lengths; `flip` asks for a reflection.
    Auto { flip: bool },
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

/// Orthonormal frame with origin `p[0]`, first axis towards `p[1]` and third
/// axis along the right-hand normal of the triangle.
fn frame(p: [Point3; 3]) -> (Point3, Matrix3<f64>) {
    let u = (p[1] - p[0]).normalize();
    let w = (p[1] - p[0]).cross(&(p[2] - p[0])).normalize();
    let v = w.cross(&u);
    (p[0], Matrix3::from_columns(&[u, v, w]))
}

fn side(p: [Point3; 3], q: Point3) -> f64 {
    (p[1] - p[0]).cross(&(p[2] - p[0])).dot(&(q - p[0])).signum()
}

/// The reflection sign a correspondence forces so the moved tile ends up
/// on the far side of the fixed face.
fn forced_sign(fixed: &PlacedTile, ff: usize, moving: &PlacedTile, mf: usize, corr: [usize; 3]) -> f64 {
    let fp = fixed.face_points(ff);
    let target = [fp[corr[0]], fp[corr[1]], fp[corr[2]]];
    let s_f = side(target, fixed.vertices[ff]);
    let s_m = side(moving.face_points(mf), moving.vertices[mf]);
    -s_f * s_m
}

fn lengths_match(fixed: &PlacedTile, ff: usize, moving: &PlacedTile, mf: usize, corr: [usize; 3], tol: f64) -> bool {
    let fp = fixed.face_points(ff);
    let mp = moving.face_points(mf);
    [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| {
        let a = (mp[i] - mp[j]).norm();
        let b = (fp[corr[i]] - fp[corr[j]]).norm();
        (a - b).abs() <= tol * a.max(1.0)
    })
}

fn sorted_lengths(p: [Point3; 3]) -> [f64; 3] {
    let mut l = [(p[0] - p[1]).norm(), (p[0] - p[2]).norm(), (p[1] - p[2]).norm()];
    l.sort_by(f64::total_cmp);
    l
}

/// Moves `moving` rigidly (with a reflection when required) so that its face
/// `moving_face` coincides with face `fixed_face` of `fixed` and the two
/// tiles lie on opposite sides of it.
pub fn glue(
    fixed: &PlacedTile,
    fixed_face: usize,
    moving: &PlacedTile,
    moving_face: usize,
    how: FaceMatch,
    tol: &Tolerances,
) -> Result<PlacedTile, GeometryError> {
    for f in [fixed_face, moving_face] {
        if f > 3 {
            return Err(GeometryError::BadFace(f));
        }
    }
    let fl = sorted_lengths(fixed.face_points(fixed_face));
    let ml = sorted_lengths(moving.face_points(moving_face));
    if fl.iter().zip(&ml).any(|(a, b)| (a - b).abs() > tol.predicate * a.max(1.0)) {
        return Err(GeometryError::NonCongruent(format!("{fl:?} vs {ml:?}")));
    }
    let corr = match how {
        FaceMatch::Explicit(c) => {
            if !PERMS.contains(&c) || !lengths_match(fixed, fixed_face, moving, moving_face, c, tol.predicate) {
                return Err(GeometryError::NonCongruent(format!("correspondence {c:?} breaks edge lengths")));
            }
            c
        }
        FaceMatch::Auto { flip } => {
            let want = if flip { -1.0 } else { 1.0 };
            let hits: Vec<[usize; 3]> = PERMS
                .into_iter()
                .filter(|&c| lengths_match(fixed, fixed_face, moving, moving_face, c, tol.predicate))
                .filter(|&c| forced_sign(fixed, fixed_face, moving, moving_face, c) == want)
                .collect();
            match hits.len() {
                0 => return Err(GeometryError::NonCongruent("no length-preserving correspondence".into())),
                1 => hits[0],
                n => return Err(GeometryError::Ambiguous(n)),
            }
        }
    };
    let k = forced_sign(fixed, fixed_face, moving, moving_face, corr);
    let fp = fixed.face_points(fixed_face);
    let (o_f, r_f) = frame([fp[corr[0]], fp[corr[1]], fp[corr[2]]]);
    let (o_m, r_m) = frame(moving.face_points(moving_face));
    let mut r_f = r_f;
    if k < 0.0 {
        r_f.set_column(2, &(-r_f.column(2)));
    }
    let rot = r_f * r_m.transpose();
    let vertices = moving.vertices.map(|p| o_f + rot * (p - o_m));
    let placed = PlacedTile { kind: moving.kind, vertices, parity: moving.parity * k as i8 };
    let drift = PAIRS
        .iter()
        .map(|&(i, j)| {
            let a = (moving.vertices[i] - moving.vertices[j]).norm();
            ((placed.vertices[i] - placed.vertices[j]).norm() - a).abs() / a
        })
        .fold(0.0, f64::max);
    if drift > tol.isometry {
        return Err(GeometryError::Isometry(drift));
    }
    Ok(placed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cm_volume;

    #[test]
    fn t1_apex() {
        let t = realize(TileKind::Tet1).unwrap();
        let d = t.vertices[3];
        assert!((d.x - 0.5).abs() < 1e-15);
        assert!((d.y + 5f64.sqrt() / (2.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!((d.z - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((t.volume() - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn realizations_match_schemes() {
        for kind in TileKind::FUNDAMENTAL {
            let t = realize(kind).unwrap();
            assert!(t.scheme_deviation() < 1e-12, "{kind}");
            assert!(t.signed_volume() > 0.0);
            let exact = cm_volume(&EdgeScheme::of(kind).unwrap()).unwrap().volume;
            assert!((t.volume() - exact).abs() < 1e-12 * exact, "{kind}");
        }
        let t6 = realize(TileKind::Tet6).unwrap();
        let tau = crate::golden::GoldenRational::tau().to_f64();
        assert!((t6.vertices[3].z - tau / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn composite_is_not_realizable() {
        assert!(matches!(realize(TileKind::T1), Err(GeometryError::NotFundamental(_))));
    }

    #[test]
    fn glued_tiles_sit_on_opposite_sides() {
        let tol = Tolerances::default();
        let t2 = realize(TileKind::Tet2).unwrap();
        let t4 = realize(TileKind::Tet4).unwrap();
        let g = glue(&t4, 3, &t2, 3, FaceMatch::Explicit([0, 1, 2]), &tol).unwrap();
        let base = t4.face_points(3);
        assert!(side(base, t4.vertices[3]) * side(base, g.vertices[3]) < 0.0);
        assert!(g.scheme_deviation() < 1e-12);
    }

    #[test]
    fn equilateral_auto_match_is_ambiguous() {
        let tol = Tolerances::default();
        let t2 = realize(TileKind::Tet2).unwrap();
        let t4 = realize(TileKind::Tet4).unwrap();
        assert_eq!(glue(&t4, 3, &t2, 3, FaceMatch::Auto { flip: false }, &tol), Err(GeometryError::Ambiguous(3)));
    }

    #[test]
    fn isosceles_auto_match_picks_parity() {
        let tol = Tolerances::default();
        let t1 = realize(TileKind::Tet1).unwrap();
        // face 0 of t1 is BCD with edges (1, 1, tau)
        let proper = glue(&t1, 0, &t1, 0, FaceMatch::Auto { flip: false }, &tol).unwrap();
        let mirror = glue(&t1, 0, &t1, 0, FaceMatch::Auto { flip: true }, &tol).unwrap();
        assert_eq!(proper.parity, 1);
        assert_eq!(mirror.parity, -1);
        assert!(proper.signed_volume() > 0.0);
        assert!(mirror.signed_volume() < 0.0);
    }

    #[test]
    fn mismatched_faces_are_rejected() {
        let tol = Tolerances::default();
        let t1 = realize(TileKind::Tet1).unwrap();
        let t6 = realize(TileKind::Tet6).unwrap();
        // (1,1,1) against (tau,tau,tau)
        let err = glue(&t1, 3, &t6, 3, FaceMatch::Auto { flip: false }, &tol).unwrap_err();
        assert!(matches!(err, GeometryError::NonCongruent(_)));
        assert!(matches!(glue(&t1, 4, &t6, 3, FaceMatch::Auto { flip: false }, &tol), Err(GeometryError::BadFace(4))));
    }

    #[test]
    fn json_round_trip() {
        let t = realize(TileKind::Tet5).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: PlacedTile = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
