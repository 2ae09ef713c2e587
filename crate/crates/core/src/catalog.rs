//! Static data model of the tiles: six fundamental tetrahedra, the composite
//! tiles built from them, and the polyhedron inventories.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::golden::GoldenRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown tile kind `{0}`")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TileKind {
    #[serde(rename = "t1")]
    Tet1,
    #[serde(rename = "t2")]
    Tet2,
    #[serde(rename = "t3")]
    Tet3,
    #[serde(rename = "t4")]
    Tet4,
    #[serde(rename = "t5")]
    Tet5,
    #[serde(rename = "t6")]
    Tet6,
    E,
    C,
    T1,
    T2,
    T3,
    T4,
    #[serde(rename = "T3bar")]
    T3Bar,
}

impl TileKind {
    pub const ALL: [TileKind; 13] = [
        TileKind::Tet1,
        TileKind::Tet2,
        TileKind::Tet3,
        TileKind::Tet4,
        TileKind::Tet5,
        TileKind::Tet6,
        TileKind::E,
        TileKind::C,
        TileKind::T1,
        TileKind::T2,
        TileKind::T3,
        TileKind::T4,
        TileKind::T3Bar,
    ];

    pub const FUNDAMENTAL: [TileKind; 6] = [
        TileKind::Tet1,
        TileKind::Tet2,
        TileKind::Tet3,
        TileKind::Tet4,
        TileKind::Tet5,
        TileKind::Tet6,
    ];

    /// The four tiles carrying an inflation rule, in matrix order.
    pub const PROTOTILES: [TileKind; 4] = [TileKind::T1, TileKind::T2, TileKind::T3, TileKind::T4];

    pub fn tag(self) -> &'static str {
        match self {
            TileKind::Tet1 => "t1",
            TileKind::Tet2 => "t2",
            TileKind::Tet3 => "t3",
            TileKind::Tet4 => "t4",
            TileKind::Tet5 => "t5",
            TileKind::Tet6 => "t6",
            TileKind::E => "E",
            TileKind::C => "C",
            TileKind::T1 => "T1",
            TileKind::T2 => "T2",
            TileKind::T3 => "T3",
            TileKind::T4 => "T4",
            TileKind::T3Bar => "T3bar",
        }
    }

    pub fn is_fundamental(self) -> bool {
        Self::FUNDAMENTAL.contains(&self)
    }

    pub fn is_composite(self) -> bool {
        !self.is_fundamental()
    }

    /// Row/column index of a prototile in the inflation matrix.
    pub fn prototile_index(self) -> Option<usize> {
        Self::PROTOTILES.iter().position(|&k| k == self)
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TileKind {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TileKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| CatalogError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceShape {
    Triangle,
    Trapezoid,
    Pentagon,
}

impl FaceShape {
    pub fn edge_count(self) -> usize {
        match self {
            FaceShape::Triangle => 3,
            FaceShape::Trapezoid => 4,
            FaceShape::Pentagon => 5,
        }
    }
}

/// Symmetry axis a face is normal to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxisClass {
    FiveFold,
    ThreeFold,
    None,
}

impl fmt::Display for AxisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxisClass::FiveFold => "five-fold",
            AxisClass::ThreeFold => "three-fold",
            AxisClass::None => "none",
        })
    }
}

/// Edge lengths that occur in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLength {
    One,
    Tau,
    TauSquared,
}

impl EdgeLength {
    pub fn value(self) -> GoldenRational {
        match self {
            EdgeLength::One => GoldenRational::one(),
            EdgeLength::Tau => GoldenRational::tau(),
            EdgeLength::TauSquared => GoldenRational::tau_pow(2),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            EdgeLength::One => "1",
            EdgeLength::Tau => "tau",
            EdgeLength::TauSquared => "tau^2",
        }
    }

    pub fn from_f64(len: f64, tol: f64) -> Option<Self> {
        [EdgeLength::One, EdgeLength::Tau, EdgeLength::TauSquared]
            .into_iter()
            .find(|e| (e.value().to_f64() - len).abs() <= tol * len.max(1.0))
    }
}

/// One line of a face census: `multiplicity × shape(edges)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub shape: FaceShape,
    /// Edge lengths in ascending order.
    pub edges: Vec<GoldenRational>,
    pub multiplicity: u32,
    pub axis: AxisClass,
}

impl FaceSpec {
    pub fn new(multiplicity: u32, shape: FaceShape, edges: &[EdgeLength]) -> Self {
        assert_eq!(edges.len(), shape.edge_count(), "edge count does not match shape");
        let mut sorted = edges.to_vec();
        sorted.sort();
        let axis = match shape {
            FaceShape::Triangle => triangle_axis(&sorted),
            _ => AxisClass::None,
        };
        FaceSpec {
            shape,
            edges: sorted.into_iter().map(EdgeLength::value).collect(),
            multiplicity,
            axis,
        }
    }

    fn tri(multiplicity: u32, a: EdgeLength, b: EdgeLength, c: EdgeLength) -> Self {
        Self::new(multiplicity, FaceShape::Triangle, &[a, b, c])
    }

    /// Shape label such as `(1,tau,tau)`, `(1,1,1,tau)` or `pentagon(1)`.
    pub fn label(&self) -> String {
        let names: Vec<String> = self.edges.iter().map(edge_label).collect();
        match self.shape {
            FaceShape::Pentagon => format!("pentagon({})", names[0]),
            _ => format!("({})", names.join(",")),
        }
    }
}

fn edge_label(x: &GoldenRational) -> String {
    [EdgeLength::One, EdgeLength::Tau, EdgeLength::TauSquared]
        .into_iter()
        .find(|e| &e.value() == x)
        .map(|e| e.label().to_string())
        .unwrap_or_else(|| x.to_string())
}

/// Robinson triangles (and their τ-scaled copies) sit on five-fold planes,
/// equilateral triangles on three-fold planes.
fn triangle_axis(sorted: &[EdgeLength]) -> AxisClass {
    use EdgeLength::*;
    match sorted {
        [x, y, z] if x == y && y == z => AxisClass::ThreeFold,
        [One, One, Tau] | [One, Tau, Tau] | [Tau, Tau, TauSquared] | [Tau, TauSquared, TauSquared] => {
            AxisClass::FiveFold
        }
        _ => AxisClass::None,
    }
}

/// Census string `2x(1,1,1);2x(1,1,tau)`.
pub fn census_label(faces: &[FaceSpec]) -> String {
    faces
        .iter()
        .map(|f| format!("{}x{}", f.multiplicity, f.label()))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl PolyCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileRecord {
    pub kind: TileKind,
    /// Faces after merging coplanar glued triangles.
    pub faces: Vec<FaceSpec>,
    /// Triangle census before any coplanar merge.
    pub triangle_faces: Vec<FaceSpec>,
    pub volume: GoldenRational,
    /// Constituents in gluing order; empty for fundamental tiles.
    pub composition: Vec<TileKind>,
    /// Vertex, edge and face counts of the merged surface (composite tiles only).
    pub counts: Option<PolyCounts>,
    pub inflation_rule: bool,
}

fn twelfth(x: GoldenRational) -> GoldenRational {
    x * GoldenRational::from_ratio(1, 12)
}

/// The full static record of one tile shape.
pub fn record(kind: TileKind) -> TileRecord {
    use EdgeLength::{One as I, Tau as T, TauSquared as TT};
    use TileKind::*;
    let tau_pow = |n| GoldenRational::tau_pow(n);
    let counts = |vertices, edges, faces| Some(PolyCounts { vertices, edges, faces });
    let fundamental = |faces: Vec<FaceSpec>, power: i64| TileRecord {
        kind,
        triangle_faces: faces.clone(),
        faces,
        volume: twelfth(tau_pow(power)),
        composition: Vec::new(),
        counts: None,
        inflation_rule: false,
    };
    let composite = |faces: Vec<FaceSpec>,
                     triangle_faces: Vec<FaceSpec>,
                     composition: Vec<TileKind>,
                     counts: Option<PolyCounts>,
                     volume: Option<GoldenRational>| {
        let volume = volume.unwrap_or_else(|| {
            composition.iter().map(|k| record(*k).volume).sum()
        });
        TileRecord {
            kind,
            faces,
            triangle_faces,
            volume,
            inflation_rule: kind.prototile_index().is_some(),
            composition,
            counts,
        }
    };
    let trapezoid = |m| FaceSpec::new(m, FaceShape::Trapezoid, &[I, I, I, T]);
    match kind {
        Tet1 => fundamental(vec![FaceSpec::tri(2, I, I, I), FaceSpec::tri(2, I, I, T)], 0),
        Tet2 => fundamental(
            vec![FaceSpec::tri(1, I, I, I), FaceSpec::tri(2, I, I, T), FaceSpec::tri(1, I, T, T)],
            1,
        ),
        Tet3 => fundamental(vec![FaceSpec::tri(1, T, T, T), FaceSpec::tri(3, I, I, T)], 1),
        Tet4 => fundamental(vec![FaceSpec::tri(1, I, I, I), FaceSpec::tri(3, I, T, T)], 2),
        Tet5 => fundamental(
            vec![FaceSpec::tri(1, T, T, T), FaceSpec::tri(1, I, I, T), FaceSpec::tri(2, I, T, T)],
            2,
        ),
        Tet6 => fundamental(vec![FaceSpec::tri(2, T, T, T), FaceSpec::tri(2, I, T, T)], 3),
        E => composite(
            vec![FaceSpec::tri(6, I, T, T), FaceSpec::tri(2, I, I, T)],
            vec![FaceSpec::tri(6, I, T, T), FaceSpec::tri(2, I, I, T)],
            vec![Tet4, Tet1, Tet4],
            counts(6, 12, 8),
            None,
        ),
        C => composite(
            vec![FaceSpec::tri(6, I, I, T), FaceSpec::tri(2, I, T, T)],
            vec![FaceSpec::tri(6, I, I, T), FaceSpec::tri(2, I, T, T)],
            vec![Tet3, Tet6, Tet3],
            counts(6, 12, 8),
            None,
        ),
        T1 => composite(
            vec![FaceSpec::tri(4, I, I, T), trapezoid(4)],
            vec![FaceSpec::tri(8, I, I, T), FaceSpec::tri(4, I, T, T)],
            vec![E, C],
            counts(8, 14, 8),
            Some(twelfth(GoldenRational::from_int(2) * tau_pow(4))),
        ),
        T2 => composite(
            vec![FaceSpec::tri(2, I, T, T), FaceSpec::tri(2, T, T, TT)],
            vec![FaceSpec::tri(2, I, I, T), FaceSpec::tri(4, I, T, T)],
            vec![Tet2, Tet4],
            counts(4, 6, 4),
            Some(twelfth(tau_pow(3))),
        ),
        T3 => composite(
            vec![FaceSpec::tri(5, I, T, T), FaceSpec::new(1, FaceShape::Pentagon, &[I, I, I, I, I])],
            vec![FaceSpec::tri(2, I, I, T), FaceSpec::tri(6, I, T, T)],
            vec![Tet5, Tet6, Tet5],
            counts(6, 10, 6),
            Some(twelfth(GoldenRational::new(3, 4, 1))),
        ),
        T4 => composite(
            vec![FaceSpec::tri(3, I, I, T), FaceSpec::tri(3, I, T, T), trapezoid(1)],
            vec![FaceSpec::tri(4, I, I, T), FaceSpec::tri(4, I, T, T)],
            vec![Tet3, Tet6, Tet5],
            counts(6, 11, 7),
            Some(twelfth(GoldenRational::from_int(2) * tau_pow(3))),
        ),
        // The second t5 turned by a third of a revolution on its (tau,tau,tau)
        // face: the pentagon breaks into two trapezoids.
        T3Bar => composite(
            vec![FaceSpec::tri(4, I, T, T), trapezoid(2)],
            vec![FaceSpec::tri(2, I, I, T), FaceSpec::tri(6, I, T, T)],
            vec![Tet5, Tet6, Tet5],
            counts(6, 10, 6),
            None,
        ),
    }
}

/// Every record, in dump order: t1..t6, E, C, T1..T4, T3bar.
pub fn catalog() -> Vec<TileRecord> {
    TileKind::ALL.into_iter().map(record).collect()
}

pub fn catalog_json() -> String {
    serde_json::to_string_pretty(&catalog()).expect("catalog serializes")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InventoryTarget {
    /// Icosahedron of edge 1 from fundamental tiles.
    Icosahedron,
    /// Icosahedron of edge τ from fundamental tiles.
    IcosahedronTau,
    /// Dodecahedron of edge 1 from fundamental tiles.
    DodecahedronFundamental,
    /// Dodecahedron of edge 1 from composite tiles.
    DodecahedronComposite,
    /// Dodecahedron of edge τ from composite tiles.
    DodecahedronTauComposite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inventory {
    pub target: InventoryTarget,
    pub items: Vec<(TileKind, u64)>,
}

pub fn inventory(target: InventoryTarget) -> Inventory {
    use TileKind::*;
    let items = match target {
        InventoryTarget::Icosahedron => vec![(Tet1, 7), (Tet2, 6), (Tet5, 2), (Tet6, 1)],
        InventoryTarget::IcosahedronTau => {
            vec![(Tet1, 1), (Tet2, 8), (Tet3, 10), (Tet4, 10), (Tet5, 16), (Tet6, 3)]
        }
        InventoryTarget::DodecahedronFundamental => {
            vec![(Tet1, 3), (Tet2, 4), (Tet3, 10), (Tet4, 10), (Tet5, 4), (Tet6, 7)]
        }
        InventoryTarget::DodecahedronComposite => vec![(T1, 3), (T2, 4), (T4, 4)],
        InventoryTarget::DodecahedronTauComposite => vec![(T1, 7), (T2, 18), (T3, 14), (T4, 10)],
    };
    Inventory { target, items }
}

pub type TileCounts = BTreeMap<TileKind, u64>;

/// Recursively replaces composite kinds by their constituents.
pub fn expand_to_fundamental(items: &[(TileKind, u64)]) -> TileCounts {
    let mut out = TileCounts::new();
    for &(kind, count) in items {
        if count == 0 {
            continue;
        }
        if kind.is_fundamental() {
            *out.entry(kind).or_default() += count;
        } else {
            let parts: Vec<(TileKind, u64)> =
                record(kind).composition.into_iter().map(|k| (k, count)).collect();
            for (k, c) in expand_to_fundamental(&parts) {
                *out.entry(k).or_default() += c;
            }
        }
    }
    out
}

/// Exact `Σ count · volume`.
pub fn total_volume(items: &[(TileKind, u64)]) -> GoldenRational {
    items
        .iter()
        .map(|&(kind, count)| record(kind).volume * GoldenRational::from_int(count))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, den: i64) -> GoldenRational {
        GoldenRational::new(a, b, den)
    }

    #[test]
    fn t6_record() {
        let r = record(TileKind::Tet6);
        assert_eq!(r.volume, g(1, 2, 12));
        assert_eq!(census_label(&r.faces), "2x(tau,tau,tau);2x(1,tau,tau)");
        assert!(r.composition.is_empty());
    }

    #[test]
    fn t3_composite_record() {
        let r = record(TileKind::T3);
        assert_eq!(r.counts, Some(PolyCounts { vertices: 6, edges: 10, faces: 6 }));
        assert_eq!(census_label(&r.faces), "5x(1,tau,tau);1xpentagon(1)");
        assert_eq!(r.volume, g(3, 4, 12));
    }

    #[test]
    fn t1_composition() {
        let r = record(TileKind::T1);
        assert_eq!(r.composition, vec![TileKind::E, TileKind::C]);
        assert_eq!(record(TileKind::E).composition, vec![TileKind::Tet4, TileKind::Tet1, TileKind::Tet4]);
        assert_eq!(record(TileKind::C).composition, vec![TileKind::Tet3, TileKind::Tet6, TileKind::Tet3]);
        assert_eq!(r.volume, g(4, 6, 12));
    }

    #[test]
    fn composite_volumes_equal_composition_sums() {
        for kind in TileKind::ALL.into_iter().filter(|k| k.is_composite()) {
            let r = record(kind);
            let sum: GoldenRational = r.composition.iter().map(|k| record(*k).volume).sum();
            assert_eq!(r.volume, sum, "{kind}");
        }
    }

    #[test]
    fn e_and_c_volumes() {
        // (1 + 2τ²)/12 and (2τ + τ³)/12
        assert_eq!(record(TileKind::E).volume, g(3, 2, 12));
        assert_eq!(record(TileKind::C).volume, g(1, 4, 12));
    }

    #[test]
    fn euler_relation_for_composites() {
        for kind in TileKind::ALL.into_iter().filter(|k| k.is_composite()) {
            let c = record(kind).counts.unwrap();
            assert_eq!(c.euler_characteristic(), 2, "{kind}");
            let faces: u32 = record(kind).faces.iter().map(|f| f.multiplicity).sum();
            assert_eq!(faces as usize, c.faces, "{kind}");
        }
    }

    #[test]
    fn glued_triangle_bookkeeping() {
        // gluing on a shared triangle removes exactly two faces
        for kind in TileKind::ALL.into_iter().filter(|k| k.is_composite()) {
            let r = record(kind);
            let fund = expand_to_fundamental(&[(kind, 1)]);
            let parts: u64 = fund.values().sum();
            let tri: u32 = r.triangle_faces.iter().map(|f| f.multiplicity).sum();
            let glued = match kind {
                TileKind::T1 => parts - 1 + 1, // E–C share two faces
                _ => parts - 1,
            };
            assert_eq!(tri as u64, 4 * parts - 2 * glued, "{kind}");
        }
        let t2: u32 = record(TileKind::T2).triangle_faces.iter().map(|f| f.multiplicity).sum();
        assert_eq!(t2, 4 + 4 - 2);
    }

    #[test]
    fn face_axis_labels() {
        let r = record(TileKind::Tet2);
        let axes: Vec<AxisClass> = r.faces.iter().map(|f| f.axis).collect();
        assert_eq!(axes, vec![AxisClass::ThreeFold, AxisClass::FiveFold, AxisClass::FiveFold]);
        let t1 = record(TileKind::T1);
        assert_eq!(t1.faces[1].axis, AxisClass::None);
        for f in record(TileKind::T2).faces {
            assert_eq!(f.axis, AxisClass::FiveFold);
        }
    }

    #[test]
    fn expansion_examples() {
        let d1 = expand_to_fundamental(&inventory(InventoryTarget::DodecahedronComposite).items);
        let want: TileCounts = inventory(InventoryTarget::DodecahedronFundamental).items.into_iter().collect();
        assert_eq!(d1, want);
        let t2 = expand_to_fundamental(&[(TileKind::T2, 1)]);
        assert_eq!(t2, [(TileKind::Tet2, 1), (TileKind::Tet4, 1)].into_iter().collect());
        assert!(expand_to_fundamental(&[]).is_empty());
    }

    #[test]
    fn inventory_volumes() {
        let ico = total_volume(&inventory(InventoryTarget::Icosahedron).items);
        assert_eq!(ico, g(10, 10, 12));
        let classical = 5.0 / 12.0 * (3.0 + 5f64.sqrt());
        assert!((ico.to_f64() - classical).abs() < 1e-12);
        let d1 = total_volume(&inventory(InventoryTarget::DodecahedronFundamental).items);
        assert_eq!(d1, g(24, 42, 12));
        let dtau = total_volume(&inventory(InventoryTarget::DodecahedronTauComposite).items);
        assert_eq!(dtau, g(108, 174, 12));
        assert_eq!(dtau, GoldenRational::tau_pow(3) * d1);
        let ico_tau = total_volume(&inventory(InventoryTarget::IcosahedronTau).items);
        assert_eq!(ico_tau, GoldenRational::tau_pow(3) * ico);
    }

    #[test]
    fn kind_tags_round_trip() {
        for k in TileKind::ALL {
            assert_eq!(k.tag().parse::<TileKind>().unwrap(), k);
        }
        assert!("T5".parse::<TileKind>().is_err());
    }

    #[test]
    fn dump_order() {
        let tags: Vec<&str> = catalog().iter().map(|r| r.kind.tag()).collect();
        assert_eq!(tags, ["t1", "t2", "t3", "t4", "t5", "t6", "E", "C", "T1", "T2", "T3", "T4", "T3bar"]);
        let v: serde_json::Value = serde_json::from_str(&catalog_json()).unwrap();
        assert_eq!(v[5]["kind"], "t6");
        assert_eq!(v[5]["volume"]["den"], "12");
    }
}
