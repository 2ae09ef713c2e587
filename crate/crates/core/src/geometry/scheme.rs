//! Edge schemes and exact Cayley–Menger volumes.

use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::catalog::TileKind;
use crate::golden::GoldenRational;

/// Vertex pairs in scheme order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Squared edge lengths of a tetrahedron `ABCD`, ordered `AB, AC, AD, BC, BD, CD`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeScheme(pub [GoldenRational; 6]);

impl EdgeScheme {
    /// Scheme of a fundamental tile; `None` for composites.
    ///
    /// Vertex order puts the base `ABC` first so the apex `D` is last.
    pub fn of(kind: TileKind) -> Option<Self> {
        // 1 marks a unit edge, 2 an edge of length τ
        let pattern: [u8; 6] = match kind {
            TileKind::Tet1 => [1, 1, 1, 1, 1, 2],
            TileKind::Tet2 => [1, 1, 1, 1, 2, 2],
            TileKind::Tet3 => [2, 2, 1, 2, 1, 1],
            TileKind::Tet4 => [1, 1, 2, 1, 2, 2],
            TileKind::Tet5 => [2, 2, 1, 2, 1, 2],
            TileKind::Tet6 => [2, 2, 2, 2, 2, 1],
            _ => return None,
        };
        Some(EdgeScheme(pattern.map(|p| {
            if p == 1 {
                GoldenRational::one()
            } else {
                GoldenRational::tau_pow(2)
            }
        })))
    }

    pub fn from_lengths_squared(sq: [GoldenRational; 6]) -> Self {
        EdgeScheme(sq)
    }

    /// Squared length between vertices `i` and `j`.
    pub fn squared(&self, i: usize, j: usize) -> &GoldenRational {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let k = PAIRS.iter().position(|&p| p == (lo, hi)).expect("distinct vertex pair");
        &self.0[k]
    }

    pub fn length(&self, i: usize, j: usize) -> f64 {
        self.squared(i, j).to_f64().sqrt()
    }
}

/// Result of a Cayley–Menger evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CmVolume {
    /// The determinant itself, `288·V²`.
    pub determinant: GoldenRational,
    pub volume_squared: GoldenRational,
    /// `V` when `V²` is a square in the golden field.
    pub volume_exact: Option<GoldenRational>,
    pub volume: f64,
}

impl CmVolume {
    pub fn is_exact(&self) -> bool {
        self.volume_exact.is_some()
    }
}

/// Determinant by Gaussian elimination with exact pivots.
fn determinant(mut m: Vec<Vec<GoldenRational>>) -> GoldenRational {
    let n = m.len();
    let mut det = GoldenRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return GoldenRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * &pivot;
        let inv = pivot.inv().expect("non-zero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    det
}

/// Exact `288·V²` of a tetrahedron from its squared edge lengths.
pub fn cm_volume(e: &EdgeScheme) -> Result<CmVolume, GeometryError> {
    let zero = GoldenRational::zero;
    let one = GoldenRational::one;
    let mut m = vec![vec![one(); 5]; 5];
    m[0][0] = zero();
    for i in 0..4 {
        for j in 0..4 {
            m[i + 1][j + 1] = if i == j { zero() } else { e.squared(i, j).clone() };
        }
    }
    let det = determinant(m);
    if det.signum() <= 0 {
        return Err(GeometryError::Degenerate(det.to_string()));
    }
    let volume_squared = &det / &GoldenRational::from_int(288);
    let volume_exact = volume_squared.sqrt_exact();
    let volume = match &volume_exact {
        Some(v) => v.to_f64(),
        None => volume_squared.to_f64().sqrt(),
    };
    Ok(CmVolume { determinant: det, volume_squared, volume_exact, volume })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, den: i64) -> GoldenRational {
        GoldenRational::new(a, b, den)
    }

    #[test]
    fn t1_volume_is_one_twelfth() {
        let v = cm_volume(&EdgeScheme::of(TileKind::Tet1).unwrap()).unwrap();
        assert_eq!(v.determinant, g(2, 0, 1));
        assert_eq!(v.volume_squared, g(1, 0, 144));
        assert_eq!(v.volume_exact, Some(g(1, 0, 12)));
    }

    #[test]
    fn fundamental_volumes_are_tau_powers() {
        let powers = [0, 1, 1, 2, 2, 3];
        for (kind, p) in TileKind::FUNDAMENTAL.into_iter().zip(powers) {
            let v = cm_volume(&EdgeScheme::of(kind).unwrap()).unwrap();
            let want = GoldenRational::tau_pow(p) * g(1, 0, 12);
            assert_eq!(v.volume_exact, Some(want.clone()), "{kind}");
            assert!((v.volume - want.to_f64()).abs() < 1e-15);
        }
    }

    #[test]
    fn regular_tetrahedron_takes_numeric_root() {
        let v = cm_volume(&EdgeScheme([(); 6].map(|_| GoldenRational::one()))).unwrap();
        assert_eq!(v.volume_squared, g(1, 0, 72));
        assert!(!v.is_exact());
        assert!((v.volume - 2f64.sqrt() / 12.0).abs() < 1e-15);
    }

    #[test]
    fn flat_scheme_is_degenerate() {
        // three collinear points: AB = 1, BC = 1, AC = 2
        let one = GoldenRational::one();
        let four = GoldenRational::from_int(4);
        let e = EdgeScheme([one.clone(), four, one.clone(), one.clone(), one.clone(), one]);
        assert!(matches!(cm_volume(&e), Err(GeometryError::Degenerate(_))));
    }

    #[test]
    fn scheme_lookup_is_symmetric() {
        let e = EdgeScheme::of(TileKind::Tet6).unwrap();
        assert_eq!(e.squared(3, 2), &GoldenRational::one());
        assert_eq!(e.squared(0, 3), &GoldenRational::tau_pow(2));
    }
}
