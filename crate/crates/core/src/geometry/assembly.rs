//! Assemblies: composite tiles from glue chains, and the unit dodecahedron
//! and icosahedron from stored dissections in the icosahedral frame.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::axes::{face_axis_class, AxisFrame};
use super::mesh::{overlapping_pair, MergedFace, Mesh, Surface};
use super::tile::{glue, realize, FaceMatch, PlacedTile};
use super::{GeometryError, Point3, Tolerances};
use crate::catalog::{AxisClass, CatalogError, FaceSpec, TileKind};
use crate::golden::GoldenRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ShapeTarget {
    E,
    C,
    T1,
    T2,
    T3,
    #[serde(rename = "T3bar")]
    T3Bar,
    T4,
    #[serde(rename = "d1")]
    D1,
    #[serde(rename = "i1")]
    I1,
}

impl ShapeTarget {
    pub const ALL: [ShapeTarget; 9] = [
        ShapeTarget::E,
        ShapeTarget::C,
        ShapeTarget::T1,
        ShapeTarget::T2,
        ShapeTarget::T3,
        ShapeTarget::T3Bar,
        ShapeTarget::T4,
        ShapeTarget::D1,
        ShapeTarget::I1,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ShapeTarget::E => "E",
            ShapeTarget::C => "C",
            ShapeTarget::T1 => "T1",
            ShapeTarget::T2 => "T2",
            ShapeTarget::T3 => "T3",
            ShapeTarget::T3Bar => "T3bar",
            ShapeTarget::T4 => "T4",
            ShapeTarget::D1 => "d1",
            ShapeTarget::I1 => "i1",
        }
    }

    /// The catalog kind of a single composite tile.
    pub fn tile_kind(self) -> Option<TileKind> {
        match self {
            ShapeTarget::E => Some(TileKind::E),
            ShapeTarget::C => Some(TileKind::C),
            ShapeTarget::T1 => Some(TileKind::T1),
            ShapeTarget::T2 => Some(TileKind::T2),
            ShapeTarget::T3 => Some(TileKind::T3),
            ShapeTarget::T3Bar => Some(TileKind::T3Bar),
            ShapeTarget::T4 => Some(TileKind::T4),
            ShapeTarget::D1 | ShapeTarget::I1 => None,
        }
    }

    /// Whether the build is expressed in the icosahedral axis frame.
    pub fn in_axis_frame(self) -> bool {
        matches!(self, ShapeTarget::D1 | ShapeTarget::I1)
    }
}

impl fmt::Display for ShapeTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ShapeTarget {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ShapeTarget::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| CatalogError::UnknownKind(s.to_string()))
    }
}

/// Tiles of an assembly that together form one composite tile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub kind: TileKind,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Assembly {
    pub target: ShapeTarget,
    pub tiles: Vec<PlacedTile>,
    pub groups: Vec<Group>,
    pub surface: Surface,
    pub hull: Mesh,
}

/// One gluing step: place `kind` with its face `moving_face` on face
/// `fixed_face` of the already placed tile `fixed`, vertex `i` of the moving
/// face landing on vertex `corr[i]` of the fixed face.
#[derive(Debug, Clone, Copy)]
struct Step {
    kind: TileKind,
    fixed: usize,
    fixed_face: usize,
    moving_face: usize,
    corr: [usize; 3],
}

const fn step(kind: TileKind, fixed: usize, fixed_face: usize, moving_face: usize, corr: [usize; 3]) -> Step {
    Step { kind, fixed, fixed_face, moving_face, corr }
}

use TileKind::{Tet1, Tet2, Tet3, Tet4, Tet5, Tet6};

// Two t4 on the two unit equilateral faces of t1.
const E_CHAIN: [Step; 2] = [step(Tet4, 0, 3, 3, [2, 0, 1]), step(Tet4, 0, 2, 3, [2, 0, 1])];
// Two t3 on the two (tau,tau,tau) faces of t6.
const C_CHAIN: [Step; 2] = [step(Tet3, 0, 2, 3, [0, 1, 2]), step(Tet3, 0, 3, 3, [0, 1, 2])];
// E, then C inserted between its legs.
const T1_CHAIN: [Step; 5] = [
    step(Tet4, 0, 3, 3, [2, 0, 1]),
    step(Tet4, 0, 2, 3, [2, 0, 1]),
    step(Tet6, 1, 0, 1, [2, 0, 1]),
    step(Tet3, 3, 2, 3, [0, 1, 2]),
    step(Tet3, 3, 3, 3, [0, 1, 2]),
];
const T2_CHAIN: [Step; 1] = [step(Tet2, 0, 3, 3, [2, 0, 1])];
const T4_CHAIN: [Step; 2] = [step(Tet3, 0, 3, 3, [2, 0, 1]), step(Tet5, 0, 2, 3, [0, 2, 1])];
const T3_CHAIN: [Step; 2] = [step(Tet5, 0, 3, 3, [2, 0, 1]), step(Tet5, 0, 2, 3, [2, 0, 1])];
// The second t5 turned by a third of a revolution about the shared face.
const T3BAR_CHAIN: [Step; 2] = [step(Tet5, 0, 3, 3, [2, 0, 1]), step(Tet5, 0, 2, 3, [1, 2, 0])];

fn run_chain(start: TileKind, steps: &[Step], tol: &Tolerances) -> Result<Vec<PlacedTile>, GeometryError> {
    let mut tiles = vec![realize(start)?];
    for s in steps {
        let moving = realize(s.kind)?;
        let placed = glue(&tiles[s.fixed], s.fixed_face, &moving, s.moving_face, FaceMatch::Explicit(s.corr), tol)?;
        tiles.push(placed);
    }
    Ok(tiles)
}

/// Doubled golden coordinate: `(a, b)` stands for `(a + bτ)/2`.
type Half = (i8, i8);

fn half(c: Half) -> f64 {
    GoldenRational::new(c.0, c.1, 2).to_f64()
}

fn point(p: &[Half; 3]) -> Point3 {
    Point3::new(half(p[0]), half(p[1]), half(p[2]))
}

/// Unit dodecahedron: its 20 vertices followed by three interior points
/// forming a unit equilateral triangle.
const D1_POINTS: [[Half; 3]; 23] = [
    [(0, 1), (0, 1), (0, 1)],
    [(0, 1), (0, 1), (0, -1)],
    [(0, -1), (0, 1), (0, 1)],
    [(0, -1), (0, 1), (0, -1)],
    [(0, 1), (0, -1), (0, 1)],
    [(0, 1), (0, -1), (0, -1)],
    [(0, -1), (0, -1), (0, 1)],
    [(0, -1), (0, -1), (0, -1)],
    [(1, 0), (0, 0), (1, 1)],
    [(1, 1), (1, 0), (0, 0)],
    [(0, 0), (1, 1), (1, 0)],
    [(1, 0), (0, 0), (-1, -1)],
    [(-1, -1), (1, 0), (0, 0)],
    [(0, 0), (-1, -1), (1, 0)],
    [(-1, 0), (0, 0), (1, 1)],
    [(1, 1), (-1, 0), (0, 0)],
    [(0, 0), (1, 1), (-1, 0)],
    [(-1, 0), (0, 0), (-1, -1)],
    [(-1, -1), (-1, 0), (0, 0)],
    [(0, 0), (-1, -1), (-1, 0)],
    [(0, 0), (-1, 1), (1, 0)],
    [(0, 0), (-1, 1), (-1, 0)],
    [(1, -1), (-1, 0), (0, 0)],
];

type Cell = (TileKind, [usize; 4]);

/// The dodecahedron as 3 T1 + 4 T2 + 4 T4, each cell listing its vertices
/// in scheme order.
const D1_GROUPS: [(TileKind, &[Cell]); 11] = [
    (TileKind::T1, &[
        (Tet4, [0, 10, 20, 1]),
        (Tet4, [2, 10, 20, 3]),
        (Tet1, [10, 20, 0, 2]),
        (Tet3, [1, 3, 20, 21]),
        (Tet6, [1, 3, 10, 20]),
        (Tet3, [1, 3, 10, 16]),
    ]),
    (TileKind::T1, &[
        (Tet4, [8, 14, 20, 13]),
        (Tet1, [14, 20, 2, 8]),
        (Tet4, [2, 14, 20, 18]),
        (Tet6, [13, 18, 14, 20]),
        (Tet3, [13, 14, 18, 6]),
        (Tet3, [13, 18, 20, 22]),
    ]),
    (TileKind::T1, &[
        (Tet1, [17, 21, 3, 11]),
        (Tet4, [3, 17, 21, 18]),
        (Tet4, [11, 17, 21, 19]),
        (Tet3, [18, 19, 21, 22]),
        (Tet6, [18, 19, 17, 21]),
        (Tet3, [17, 18, 19, 7]),
    ]),
    (TileKind::T4, &[(Tet6, [1, 15, 0, 20]), (Tet3, [0, 1, 15, 9]), (Tet5, [1, 20, 15, 21])]),
    (TileKind::T4, &[(Tet6, [13, 15, 8, 20]), (Tet3, [8, 13, 15, 4]), (Tet5, [13, 20, 15, 22])]),
    (TileKind::T4, &[(Tet6, [3, 18, 2, 20]), (Tet3, [2, 3, 18, 12]), (Tet5, [3, 20, 18, 21])]),
    (TileKind::T4, &[(Tet5, [19, 21, 15, 22]), (Tet6, [15, 19, 11, 21]), (Tet3, [11, 15, 19, 5])]),
    (TileKind::T2, &[(Tet4, [0, 8, 20, 15]), (Tet2, [20, 0, 8, 2])]),
    (TileKind::T2, &[(Tet4, [1, 11, 21, 15]), (Tet2, [21, 1, 11, 3])]),
    (TileKind::T2, &[(Tet4, [20, 21, 22, 15]), (Tet2, [22, 20, 21, 18])]),
    (TileKind::T2, &[(Tet4, [13, 19, 22, 15]), (Tet2, [22, 13, 19, 18])]),
];

/// Unit icosahedron vertices, cyclic permutations of `(0, ±1, ±τ)/2`.
const I1_POINTS: [[Half; 3]; 12] = [
    [(0, 0), (1, 0), (0, 1)],
    [(1, 0), (0, 1), (0, 0)],
    [(0, 1), (0, 0), (1, 0)],
    [(0, 0), (1, 0), (0, -1)],
    [(1, 0), (0, -1), (0, 0)],
    [(0, -1), (0, 0), (1, 0)],
    [(0, 0), (-1, 0), (0, 1)],
    [(-1, 0), (0, 1), (0, 0)],
    [(0, 1), (0, 0), (-1, 0)],
    [(0, 0), (-1, 0), (0, -1)],
    [(-1, 0), (0, -1), (0, 0)],
    [(0, -1), (0, 0), (-1, 0)],
];

/// The icosahedron as 7 t1 + 6 t2 + 2 t5 + t6.
const I1_CELLS: [Cell; 16] = [
    (Tet2, [0, 1, 2, 5]),
    (Tet1, [0, 7, 1, 5]),
    (Tet1, [0, 6, 2, 5]),
    (Tet5, [2, 3, 5, 1]),
    (Tet1, [1, 8, 2, 3]),
    (Tet2, [7, 1, 3, 5]),
    (Tet1, [7, 11, 3, 5]),
    (Tet2, [6, 2, 4, 5]),
    (Tet1, [6, 10, 4, 5]),
    (Tet6, [3, 5, 2, 4]),
    (Tet2, [8, 2, 4, 3]),
    (Tet1, [8, 9, 3, 4]),
    (Tet5, [3, 5, 4, 11]),
    (Tet2, [9, 3, 11, 4]),
    (Tet2, [10, 5, 11, 4]),
    (Tet1, [9, 10, 4, 11]),
];

fn place_cells(points: &[Point3], cells: &[Cell], tol: &Tolerances) -> Result<Vec<PlacedTile>, GeometryError> {
    cells
        .iter()
        .map(|&(kind, idx)| {
            let tile = PlacedTile::at(kind, idx.map(|i| points[i]));
            let drift = tile.scheme_deviation();
            if drift > tol.isometry {
                return Err(GeometryError::Isometry(drift));
            }
            Ok(tile)
        })
        .collect()
}

/// Places every constituent, rejects overlapping interiors and extracts the
/// merged outer surface.
pub fn assemble(target: ShapeTarget, tol: &Tolerances) -> Result<Assembly, GeometryError> {
    let (tiles, groups) = match target {
        ShapeTarget::D1 => {
            let points: Vec<Point3> = D1_POINTS.iter().map(point).collect();
            let mut tiles = Vec::new();
            let mut groups = Vec::new();
            for (kind, cells) in D1_GROUPS {
                let start = tiles.len();
                tiles.extend(place_cells(&points, cells, tol)?);
                groups.push(Group { kind, members: (start..tiles.len()).collect() });
            }
            (tiles, groups)
        }
        ShapeTarget::I1 => {
            let points: Vec<Point3> = I1_POINTS.iter().map(point).collect();
            (place_cells(&points, &I1_CELLS, tol)?, Vec::new())
        }
        _ => {
            let (start, chain): (TileKind, &[Step]) = match target {
                ShapeTarget::E => (Tet1, &E_CHAIN),
                ShapeTarget::C => (Tet6, &C_CHAIN),
                ShapeTarget::T1 => (Tet1, &T1_CHAIN),
                ShapeTarget::T2 => (Tet4, &T2_CHAIN),
                ShapeTarget::T3 => (Tet6, &T3_CHAIN),
                ShapeTarget::T3Bar => (Tet6, &T3BAR_CHAIN),
                _ => (Tet6, &T4_CHAIN),
            };
            let tiles = run_chain(start, chain, tol)?;
            let mut groups = Vec::new();
            if target == ShapeTarget::T1 {
                groups.push(Group { kind: TileKind::E, members: vec![0, 1, 2] });
                groups.push(Group { kind: TileKind::C, members: vec![3, 4, 5] });
            }
            let kind = target.tile_kind().expect("composite target");
            groups.push(Group { kind, members: (0..tiles.len()).collect() });
            (tiles, groups)
        }
    };
    if let Some((i, j)) = overlapping_pair(&tiles, tol.predicate) {
        return Err(GeometryError::Overlap(i, j));
    }
    let surface = Surface::from_tiles(&tiles, tol);
    let hull = surface.merge(tol);
    Ok(Assembly { target, tiles, groups, surface, hull })
}

/// An interior wall of an assembly.
#[derive(Debug, Clone, PartialEq)]
pub struct Wall {
    pub spec: Option<FaceSpec>,
    pub axis: AxisClass,
}

#[derive(Serialize)]
struct PatchJson<'a> {
    frame: &'static str,
    tiles: &'a [PlacedTile],
    hull: &'a Mesh,
}

impl Assembly {
    pub fn tile_volume(&self) -> f64 {
        self.tiles.iter().map(PlacedTile::volume).sum()
    }

    /// Parity census `(proper, mirrored)`.
    pub fn parity_census(&self) -> (usize, usize) {
        let proper = self.tiles.iter().filter(|t| t.parity > 0).count();
        (proper, self.tiles.len() - proper)
    }

    /// Merged surface of one group, for checking it against the catalog.
    pub fn group_hull(&self, g: &Group, tol: &Tolerances) -> Mesh {
        let tiles: Vec<PlacedTile> = g.members.iter().map(|&i| self.tiles[i].clone()).collect();
        Surface::from_tiles(&tiles, tol).merge(tol)
    }

    /// Interior walls shared by two tiles, each with its edge census entry
    /// and the axis class of its normal.
    pub fn walls(&self, frame: &AxisFrame, tol: &Tolerances) -> Vec<Wall> {
        self.surface
            .walls
            .iter()
            .map(|w| {
                let [a, b, c] = w.map(|k| self.surface.vertices[k]);
                let face = MergedFace { points: vec![a, b, c], normal: (b - a).cross(&(c - a)).normalize() };
                Wall { spec: face.spec(tol.predicate), axis: face_axis_class(&face.normal, frame, tol.predicate) }
            })
            .collect()
    }

    /// OBJ text: one object per placed tile, then the merged hull.
    pub fn to_obj(&self) -> String {
        let mut out = format!("# {} assembly, {} tiles\n", self.target, self.tiles.len());
        let mut base = 1;
        let fmt_v = |out: &mut String, p: &Point3| writeln!(out, "v {:.16e} {:.16e} {:.16e}", p.x, p.y, p.z).unwrap();
        for (i, t) in self.tiles.iter().enumerate() {
            writeln!(out, "o {}_{}", t.kind, i).unwrap();
            for p in &t.vertices {
                fmt_v(&mut out, p);
            }
            for f in 0..4 {
                let [a, b, c] = t.outward_face(f).map(|k| k + base);
                writeln!(out, "f {a} {b} {c}").unwrap();
            }
            base += 4;
        }
        out.push_str("o hull\n");
        for k in 0..self.hull.vertices.len() {
            fmt_v(&mut out, &self.hull.point(k));
        }
        for f in &self.hull.faces {
            let ids: Vec<String> = f.iter().map(|i| (i + base).to_string()).collect();
            writeln!(out, "f {}", ids.join(" ")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let frame = if self.target.in_axis_frame() { "icosa-half-integer" } else { "canonical" };
        serde_json::to_string_pretty(&PatchJson { frame, tiles: &self.tiles, hull: &self.hull })
            .expect("assembly serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{census_label, expand_to_fundamental, inventory, record, InventoryTarget, PolyCounts};
    use crate::geometry::{dihedrals, same_census};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn atan2_pair() -> [f64; 2] {
        let a = 2f64.atan();
        [a, std::f64::consts::PI - a]
    }

    #[test]
    fn composite_tiles_match_their_records() {
        for target in ShapeTarget::ALL.into_iter().filter(|t| t.tile_kind().is_some()) {
            let a = assemble(target, &tol()).unwrap();
            let r = record(target.tile_kind().unwrap());
            assert_eq!(Some(a.hull.counts()), r.counts, "{target}");
            let census = a.hull.census(1e-9).unwrap();
            assert!(same_census(&census, &r.faces), "{target}: {}", census_label(&census));
            assert!((a.hull.volume() - r.volume.to_f64()).abs() < 1e-9, "{target}");
            assert!((a.surface.volume() - a.tile_volume()).abs() < 1e-9, "{target}");
            let mut kinds: Vec<TileKind> = a.tiles.iter().map(|t| t.kind).collect();
            let mut want: Vec<TileKind> = expand_to_fundamental(&[(r.kind, 1)]).into_iter().flat_map(|(k, n)| std::iter::repeat(k).take(n as usize)).collect();
            kinds.sort();
            want.sort();
            assert_eq!(kinds, want, "{target}");
        }
    }

    #[test]
    fn convex_composites_have_golden_dihedrals() {
        for target in [ShapeTarget::C, ShapeTarget::T1, ShapeTarget::T2, ShapeTarget::T3, ShapeTarget::T3Bar, ShapeTarget::T4] {
            let a = assemble(target, &tol()).unwrap();
            for d in dihedrals(&a.hull, &tol()) {
                let angle = d.angle.unwrap();
                assert!(atan2_pair().iter().any(|x| (angle - x).abs() < 1e-9), "{target}: {angle}");
            }
        }
    }

    #[test]
    fn e_has_one_reflex_edge_between_its_legs() {
        let a = assemble(ShapeTarget::E, &tol()).unwrap();
        let reflex: Vec<f64> =
            dihedrals(&a.hull, &tol()).into_iter().filter_map(|d| d.angle).filter(|x| *x > std::f64::consts::PI).collect();
        assert_eq!(reflex.len(), 1);
        assert!((reflex[0] - (std::f64::consts::TAU - 2f64.atan())).abs() < 1e-9);
    }

    #[test]
    fn t3_has_planar_unit_pentagon() {
        let a = assemble(ShapeTarget::T3, &tol()).unwrap();
        let pent: Vec<usize> = (0..a.hull.faces.len()).filter(|&i| a.hull.faces[i].len() == 5).collect();
        assert_eq!(pent.len(), 1);
        let f = a.hull.face(pent[0]);
        assert!(f.planarity() < 1e-9);
        assert!(f.edge_lengths().iter().all(|l| (l - 1.0).abs() < 1e-9));
    }

    #[test]
    fn t2_is_a_tetrahedron_with_a_long_edge() {
        let a = assemble(ShapeTarget::T2, &tol()).unwrap();
        assert_eq!(a.hull.counts(), PolyCounts { vertices: 4, edges: 6, faces: 4 });
        let t2 = GoldenRational::tau_pow(2).to_f64();
        let longest = a.hull.edges().iter().map(|&(i, j)| (a.hull.point(i) - a.hull.point(j)).norm()).fold(0.0, f64::max);
        assert!((longest - t2).abs() < 1e-12);
    }

    #[test]
    fn dodecahedron_hull() {
        let a = assemble(ShapeTarget::D1, &tol()).unwrap();
        assert_eq!(a.tiles.len(), 38);
        assert_eq!(a.hull.counts(), PolyCounts { vertices: 20, edges: 30, faces: 12 });
        for i in 0..12 {
            let f = a.hull.face(i);
            assert_eq!(f.corners(), 5);
            assert!(f.planarity() < 1e-9);
            assert!(f.edge_lengths().iter().all(|l| (l - 1.0).abs() < 1e-9));
        }
        let exact = GoldenRational::new(24, 42, 12).to_f64();
        assert!((a.hull.volume() - exact).abs() < 1e-9);
        assert!((a.tile_volume() - exact).abs() < 1e-9);
        for d in dihedrals(&a.hull, &tol()) {
            assert!((d.angle.unwrap() - atan2_pair()[1]).abs() < 1e-9);
        }
        let mut counts = expand_to_fundamental(&inventory(InventoryTarget::DodecahedronComposite).items);
        for t in &a.tiles {
            *counts.get_mut(&t.kind).unwrap() -= 1;
        }
        assert!(counts.values().all(|&c| c == 0));
    }

    #[test]
    fn dodecahedron_groups_are_catalog_tiles() {
        let a = assemble(ShapeTarget::D1, &tol()).unwrap();
        let kinds: Vec<TileKind> = a.groups.iter().map(|g| g.kind).collect();
        assert_eq!(kinds.iter().filter(|&&k| k == TileKind::T1).count(), 3);
        assert_eq!(kinds.iter().filter(|&&k| k == TileKind::T2).count(), 4);
        assert_eq!(kinds.iter().filter(|&&k| k == TileKind::T4).count(), 4);
        for g in &a.groups {
            let h = a.group_hull(g, &tol());
            let r = record(g.kind);
            assert_eq!(Some(h.counts()), r.counts);
            assert!(same_census(&h.census(1e-9).unwrap(), &r.faces));
        }
    }

    #[test]
    fn icosahedron_hull() {
        let a = assemble(ShapeTarget::I1, &tol()).unwrap();
        assert_eq!(a.tiles.len(), 16);
        assert_eq!(a.hull.counts(), PolyCounts { vertices: 12, edges: 30, faces: 20 });
        assert_eq!(census_label(&a.hull.census(1e-9).unwrap()), "20x(1,1,1)");
        let exact = GoldenRational::new(10, 10, 12).to_f64();
        assert!((a.hull.volume() - exact).abs() < 1e-9);
        assert!((a.tile_volume() - exact).abs() < 1e-9);
    }

    #[test]
    fn walls_follow_the_axis_rule() {
        let frame = AxisFrame::new(1e-9);
        for target in [ShapeTarget::D1, ShapeTarget::I1] {
            let a = assemble(target, &tol()).unwrap();
            let walls = a.walls(&frame, &tol());
            assert!(!walls.is_empty());
            for w in walls {
                let spec = w.spec.expect("wall edges are 1, tau or tau^2");
                assert_eq!(w.axis, spec.axis, "{target}: {}", spec.label());
            }
        }
    }

    #[test]
    fn hull_faces_sit_on_symmetry_planes() {
        let frame = AxisFrame::new(1e-9);
        let d1 = assemble(ShapeTarget::D1, &tol()).unwrap();
        for i in 0..d1.hull.faces.len() {
            assert_eq!(face_axis_class(&d1.hull.face(i).normal, &frame, 1e-9), AxisClass::FiveFold);
        }
        let i1 = assemble(ShapeTarget::I1, &tol()).unwrap();
        for i in 0..i1.hull.faces.len() {
            assert_eq!(face_axis_class(&i1.hull.face(i).normal, &frame, 1e-9), AxisClass::ThreeFold);
        }
    }

    #[test]
    fn dodecahedron_vertices_form_one_orbit() {
        let frame = AxisFrame::new(1e-9);
        let d1 = assemble(ShapeTarget::D1, &tol()).unwrap();
        let pts: Vec<Point3> = (0..d1.hull.vertices.len()).map(|i| d1.hull.point(i)).collect();
        assert!(frame.is_single_orbit(&pts, 1e-9));
    }

    #[test]
    fn builds_are_deterministic() {
        let a = assemble(ShapeTarget::D1, &tol()).unwrap();
        let b = assemble(ShapeTarget::D1, &tol()).unwrap();
        assert_eq!(a.to_obj(), b.to_obj());
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.parity_census(), b.parity_census());
    }

    #[test]
    fn obj_lists_every_tile() {
        let a = assemble(ShapeTarget::T4, &tol()).unwrap();
        let obj = a.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("o ")).count(), 4);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 12 + 6);
        assert!(obj.contains("o hull"));
    }

    #[test]
    fn shape_tags_parse() {
        for t in ShapeTarget::ALL {
            assert_eq!(t.tag().parse::<ShapeTarget>().unwrap(), t);
        }
        assert!("d2".parse::<ShapeTarget>().is_err());
    }
}
