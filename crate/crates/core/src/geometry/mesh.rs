//! Surfaces of tile assemblies: boundary extraction, coplanar merging,
//! face census, dihedral angles, overlap tests and export.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::tile::PlacedTile;
use super::{Point3, Tolerances};
use crate::catalog::{EdgeLength, FaceShape, FaceSpec, PolyCounts};

/// Triangulated boundary of a set of tetrahedra, before any merge.
#[derive(Debug, Clone)]
pub struct Surface {
    pub vertices: Vec<Point3>,
    /// Outward-oriented boundary triangles with the tile they belong to.
    pub triangles: Vec<([usize; 3], usize)>,
    /// Triangles shared by two tiles.
    pub walls: Vec<[usize; 3]>,
}

fn find_or_insert(points: &mut Vec<Point3>, p: Point3, tol: f64) -> usize {
    match points.iter().position(|q| (q - p).norm() <= tol) {
        Some(i) => i,
        None => {
            points.push(p);
            points.len() - 1
        }
    }
}

fn sorted3(t: [usize; 3]) -> [usize; 3] {
    let mut s = t;
    s.sort_unstable();
    s
}

impl Surface {
    /// Faces met by exactly one tile form the boundary; faces met by two
    /// are interior walls. Tiles are assumed to meet face to face.
    pub fn from_tiles(tiles: &[PlacedTile], tol: &Tolerances) -> Surface {
        let mut vertices = Vec::new();
        let mut seen: BTreeMap<[usize; 3], Vec<([usize; 3], usize)>> = BTreeMap::new();
        for (ti, tile) in tiles.iter().enumerate() {
            let ids = tile.vertices.map(|p| find_or_insert(&mut vertices, p, tol.predicate));
            for f in 0..4 {
                let oriented = tile.outward_face(f).map(|k| ids[k]);
                seen.entry(sorted3(oriented)).or_default().push((oriented, ti));
            }
        }
        let mut triangles = Vec::new();
        let mut walls = Vec::new();
        for (key, uses) in seen {
            if uses.len() == 1 {
                triangles.push(uses[0]);
            } else {
                walls.push(key);
            }
        }
        Surface { vertices, triangles, walls }
    }

    /// Enclosed volume by the divergence theorem.
    pub fn volume(&self) -> f64 {
        self.triangles
            .iter()
            .map(|(t, _)| {
                let [a, b, c] = t.map(|k| self.vertices[k]);
                a.dot(&b.cross(&c)) / 6.0
            })
            .sum()
    }

    fn normal(&self, t: [usize; 3]) -> Point3 {
        let [a, b, c] = t.map(|k| self.vertices[k]);
        (b - a).cross(&(c - a)).normalize()
    }

    /// Unites edge-adjacent coplanar boundary triangles into polygons and
    /// drops vertices that lie inside a straight polygon side.
    pub fn merge(&self, tol: &Tolerances) -> Mesh {
        let n = self.triangles.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, (t, _)) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        for users in by_edge.values() {
            for x in 0..users.len() {
                for y in x + 1..users.len() {
                    let (i, j) = (users[x], users[y]);
                    let nd = self.normal(self.triangles[i].0).dot(&self.normal(self.triangles[j].0));
                    if nd > 1.0 - tol.predicate {
                        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut clusters: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = root(&mut parent, i);
            clusters.entry(r).or_default().push(i);
        }
        let mut faces = Vec::new();
        for members in clusters.values() {
            let mut directed: BTreeSet<(usize, usize)> = BTreeSet::new();
            for &i in members {
                let t = self.triangles[i].0;
                for k in 0..3 {
                    directed.insert((t[k], t[(k + 1) % 3]));
                }
            }
            let boundary: BTreeMap<usize, usize> =
                directed.iter().filter(|(a, b)| !directed.contains(&(*b, *a))).copied().collect();
            let start = *boundary.keys().next().expect("a face has a boundary");
            let mut cycle = vec![start];
            let mut cur = boundary[&start];
            while cur != start && cycle.len() <= boundary.len() {
                cycle.push(cur);
                cur = boundary[&cur];
            }
            let cycle = self.drop_collinear(cycle, tol.predicate);
            let mut tiles: Vec<usize> = members.iter().map(|&i| self.triangles[i].1).collect();
            tiles.sort_unstable();
            tiles.dedup();
            faces.push((cycle, tiles));
        }
        Mesh::compact(&self.vertices, faces)
    }

    fn drop_collinear(&self, mut cycle: Vec<usize>, tol: f64) -> Vec<usize> {
        loop {
            let m = cycle.len();
            let hit = (0..m).find(|&i| {
                let p = self.vertices[cycle[(i + m - 1) % m]];
                let v = self.vertices[cycle[i]];
                let q = self.vertices[cycle[(i + 1) % m]];
                (v - p).cross(&(q - v)).norm() <= tol * (v - p).norm() * (q - v).norm()
            });
            match hit {
                Some(i) if m > 3 => {
                    cycle.remove(i);
                }
                _ => return cycle,
            }
        }
    }
}

/// Polygonal surface with per-face tile provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// Counter-clockwise seen from outside.
    pub faces: Vec<Vec<usize>>,
    /// Indices of the placed tiles each face is cut from.
    pub provenance: Vec<Vec<usize>>,
}

/// A face of a merged mesh with its geometry resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct MergedFace {
    pub points: Vec<Point3>,
    pub normal: Point3,
}

impl MergedFace {
    pub fn corners(&self) -> usize {
        self.points.len()
    }

    pub fn centroid(&self) -> Point3 {
        self.points.iter().sum::<Point3>() / self.points.len() as f64
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        let m = self.points.len();
        (0..m).map(|i| (self.points[(i + 1) % m] - self.points[i]).norm()).collect()
    }

    /// Largest distance of a corner from the plane through the centroid.
    pub fn planarity(&self) -> f64 {
        let c = self.centroid();
        self.points.iter().map(|p| (p - c).dot(&self.normal).abs()).fold(0.0, f64::max)
    }

    /// Census entry, or `None` when an edge length is not 1, τ or τ².
    pub fn spec(&self, tol: f64) -> Option<FaceSpec> {
        let edges: Option<Vec<EdgeLength>> =
            self.edge_lengths().into_iter().map(|l| EdgeLength::from_f64(l, tol)).collect();
        let shape = match self.corners() {
            3 => FaceShape::Triangle,
            4 => FaceShape::Trapezoid,
            5 => FaceShape::Pentagon,
            _ => return None,
        };
        Some(FaceSpec::new(1, shape, &edges?))
    }
}

/// Newell normal of a polygon, normalised.
fn newell(points: &[Point3]) -> Point3 {
    let m = points.len();
    let mut n = Point3::zeros();
    for i in 0..m {
        let (p, q) = (points[i], points[(i + 1) % m]);
        n.x += (p.y - q.y) * (p.z + q.z);
        n.y += (p.z - q.z) * (p.x + q.x);
        n.z += (p.x - q.x) * (p.y + q.y);
    }
    n.normalize()
}

impl Mesh {
    fn compact(all: &[Point3], faces: Vec<(Vec<usize>, Vec<usize>)>) -> Mesh {
        let used: BTreeSet<usize> = faces.iter().flat_map(|(c, _)| c.iter().copied()).collect();
        let index: BTreeMap<usize, usize> = used.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        Mesh {
            vertices: used.iter().map(|&i| [all[i].x, all[i].y, all[i].z]).collect(),
            faces: faces.iter().map(|(c, _)| c.iter().map(|i| index[i]).collect()).collect(),
            provenance: faces.into_iter().map(|(_, t)| t).collect(),
        }
    }

    pub fn point(&self, i: usize) -> Point3 {
        let [x, y, z] = self.vertices[i];
        Point3::new(x, y, z)
    }

    pub fn face(&self, i: usize) -> MergedFace {
        let points: Vec<Point3> = self.faces[i].iter().map(|&k| self.point(k)).collect();
        let normal = newell(&points);
        MergedFace { points, normal }
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i].min(f[(i + 1) % f.len()]), f[i].max(f[(i + 1) % f.len()]))))
            .collect()
    }

    pub fn counts(&self) -> PolyCounts {
        PolyCounts { vertices: self.vertices.len(), edges: self.edges().len(), faces: self.faces.len() }
    }

    pub fn volume(&self) -> f64 {
        (0..self.faces.len())
            .map(|i| {
                let f = self.face(i);
                (1..f.points.len() - 1)
                    .map(|k| f.points[0].dot(&f.points[k].cross(&f.points[k + 1])) / 6.0)
                    .sum::<f64>()
            })
            .sum()
    }

    /// Grouped face census in a canonical order; `None` if some face has an
    /// unexpected edge length or corner count.
    pub fn census(&self, tol: f64) -> Option<Vec<FaceSpec>> {
        let mut groups: BTreeMap<(FaceShape, String), FaceSpec> = BTreeMap::new();
        for i in 0..self.faces.len() {
            let spec = self.face(i).spec(tol)?;
            groups
                .entry((spec.shape, spec.label()))
                .and_modify(|g| g.multiplicity += 1)
                .or_insert(spec);
        }
        Some(groups.into_values().collect())
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(out, "v {:.16e} {:.16e} {:.16e}", v[0], v[1], v[2]).unwrap();
        }
        out.push_str("o hull\n");
        for f in &self.faces {
            let ids: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(out, "f {}", ids.join(" ")).unwrap();
        }
        out
    }
}

/// Census lists compared as multisets.
pub fn same_census(a: &[FaceSpec], b: &[FaceSpec]) -> bool {
    let key = |v: &[FaceSpec]| {
        let mut k: Vec<(FaceShape, String, u32)> = v.iter().map(|f| (f.shape, f.label(), f.multiplicity)).collect();
        k.sort();
        k
    };
    key(a) == key(b)
}

/// Interior dihedral angle along one mesh edge; `angle` is `None` for an
/// open or non-manifold edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dihedral {
    pub edge: (usize, usize),
    pub faces: Vec<usize>,
    pub angle: Option<f64>,
}

pub fn dihedrals(mesh: &Mesh, tol: &Tolerances) -> Vec<Dihedral> {
    let mut users: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, f) in mesh.faces.iter().enumerate() {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            users.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    users
        .into_iter()
        .map(|(edge, faces)| {
            let angle = (faces.len() == 2).then(|| {
                let f1 = mesh.face(faces[0]);
                let f2 = mesh.face(faces[1]);
                let cos = f1.normal.dot(&f2.normal).clamp(-1.0, 1.0);
                let lean = (f2.centroid() - mesh.point(edge.0)).dot(&f1.normal);
                if lean < -tol.predicate {
                    PI - cos.acos()
                } else if lean > tol.predicate {
                    PI + cos.acos()
                } else {
                    PI
                }
            });
            Dihedral { edge, faces, angle }
        })
        .collect()
}

fn project(points: &[Point3; 4], axis: &Point3) -> (f64, f64) {
    points
        .iter()
        .map(|p| p.dot(axis))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

/// Separating-axis test; tetrahedra that only touch do not overlap.
pub fn tetrahedra_overlap(a: &PlacedTile, b: &PlacedTile, tol: f64) -> bool {
    let mut axes: Vec<Point3> = Vec::with_capacity(44);
    for t in [a, b] {
        for f in 0..4 {
            let [p, q, r] = t.face_points(f);
            axes.push((q - p).cross(&(r - p)));
        }
    }
    let edges = |t: &PlacedTile| {
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].map(|(i, j)| t.vertices[j] - t.vertices[i])
    };
    for ea in edges(a) {
        for eb in edges(b) {
            axes.push(ea.cross(&eb));
        }
    }
    for axis in axes {
        let len = axis.norm();
        if len < 1e-12 {
            continue;
        }
        let axis = axis / len;
        let (a_lo, a_hi) = project(&a.vertices, &axis);
        let (b_lo, b_hi) = project(&b.vertices, &axis);
        if a_hi <= b_lo + tol || b_hi <= a_lo + tol {
            return false;
        }
    }
    true
}

/// First pair of tiles whose interiors intersect.
pub fn overlapping_pair(tiles: &[PlacedTile], tol: f64) -> Option<(usize, usize)> {
    (0..tiles.len())
        .flat_map(|i| (i + 1..tiles.len()).map(move |j| (i, j)))
        .find(|&(i, j)| tetrahedra_overlap(&tiles[i], &tiles[j], tol))
}
