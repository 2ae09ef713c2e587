//! Substitution dynamics of the four prototiles.
//!
//! Counts are row vectors: a patch with multiplicities `c` inflates by τ to
//! `c · M`, so row `i` of `Mⁿ` lists the tiles filling `τⁿ T_i`.
//! The spectrum is computed exactly in `Q(τ)`: the characteristic
//! polynomial is factored over the integers, each quadratic factor is solved
//! with an exact square root, and eigenvectors are kernel vectors found by
//! Gaussian elimination over the golden field.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, InventoryTarget, TileKind};
use crate::golden::GoldenRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflationError {
    #[error("malformed decomposition part: {0}")]
    MalformedPart(String),
    #[error("characteristic polynomial does not split over the golden field")]
    NotSplit,
}

/// Entries of the inflation matrix; row `i` is `τ·T_i` in terms of `T_1..T_4`.
pub const INFLATION: [[u32; 4]; 4] = [[1, 2, 2, 2], [0, 2, 1, 0], [1, 2, 1, 1], [1, 1, 1, 1]];

/// Multiplicities of `T1..T4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CountVector(pub [BigUint; 4]);

impl CountVector {
    pub fn new(c: [u64; 4]) -> Self {
        CountVector(c.map(BigUint::from))
    }

    pub fn unit(i: usize) -> Self {
        let mut c = [0u64; 4];
        c[i] = 1;
        Self::new(c)
    }

    /// Counts of a single prototile.
    pub fn of(kind: TileKind) -> Option<Self> {
        kind.prototile_index().map(Self::unit)
    }

    /// Counts of a composite inventory; `None` if it uses non-prototiles.
    pub fn from_inventory(target: InventoryTarget) -> Option<Self> {
        let mut c = Self::default();
        for (kind, n) in catalog::inventory(target).items {
            c.0[kind.prototile_index()?] += BigUint::from(n);
        }
        Some(c)
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn scale(&self, k: &BigUint) -> Self {
        CountVector(self.0.clone().map(|x| x * k))
    }

    pub fn add(&self, other: &Self) -> Self {
        CountVector(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    /// Exact volume `Σ c_j V(T_j)`.
    pub fn volume(&self) -> GoldenRational {
        TileKind::PROTOTILES
            .iter()
            .zip(&self.0)
            .map(|(k, c)| catalog::record(*k).volume * GoldenRational::from_int(BigInt::from(c.clone())))
            .sum()
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.0.clone().map(|x| x.to_f64().unwrap_or(f64::INFINITY))
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for CountVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // JSON numbers for counts that fit, strings beyond u64
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(4))?;
        for x in &self.0 {
            match x.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CountVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Num(u64),
            Text(String),
        }
        let entries: Vec<Entry> = Vec::deserialize(d)?;
        if entries.len() != 4 {
            return Err(D::Error::custom("count vector needs four entries"));
        }
        let mut out = CountVector::default();
        for (slot, e) in out.0.iter_mut().zip(entries) {
            *slot = match e {
                Entry::Num(v) => BigUint::from(v),
                Entry::Text(s) => s.parse().map_err(D::Error::custom)?,
            };
        }
        Ok(out)
    }
}

/// A 4×4 integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix(pub [[BigInt; 4]; 4]);

impl IntMatrix {
    pub fn identity() -> Self {
        IntMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() })
        }))
    }

    pub fn inflation() -> Self {
        IntMatrix(INFLATION.map(|row| row.map(BigInt::from)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        IntMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())
        }))
    }

    pub fn trace(&self) -> BigInt {
        (0..4).map(|i| self.0[i][i].clone()).sum()
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        let mut sq = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let mut a = self.0.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..3 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..4).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..4 {
                for j in k + 1..4 {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[3][3]
    }

    pub fn row(&self, i: usize) -> [BigInt; 4] {
        self.0[i].clone()
    }

    pub fn to_f64(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].to_f64().unwrap_or(f64::NAN)))
    }

    pub fn to_golden(&self) -> GoldenMatrix {
        std::array::from_fn(|i| std::array::from_fn(|j| GoldenRational::from_int(self.0[i][j].clone())))
    }
}

pub type GoldenMatrix = [[GoldenRational; 4]; 4];
pub type GoldenVector = [GoldenRational; 4];

/// The inflation matrix with its exact operations.
#[derive(Debug, Clone, Copy, Default)]
pub struct InflationMatrix;

impl InflationMatrix {
    pub fn entries(&self) -> IntMatrix {
        IntMatrix::inflation()
    }

    pub fn power(&self, n: u32) -> IntMatrix {
        IntMatrix::inflation().pow(n)
    }

    pub fn det(&self) -> BigInt {
        IntMatrix::inflation().det()
    }

    pub fn trace(&self) -> BigInt {
        IntMatrix::inflation().trace()
    }
}

/// Exact `c · Mⁿ`.
pub fn inflate_counts(c: &CountVector, n: u32) -> CountVector {
    let p = IntMatrix::inflation().pow(n);
    CountVector(std::array::from_fn(|j| {
        let s: BigInt = (0..4).map(|i| BigInt::from(c.0[i].clone()) * &p.0[i][j]).sum();
        s.to_biguint().expect("non-negative matrix keeps counts non-negative")
    }))
}

/// Integer polynomial, coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.0.get(power).cloned().unwrap_or_default()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_golden(&self, x: &GoldenRational) -> GoldenRational {
        self.0
            .iter()
            .rev()
            .fold(GoldenRational::zero(), |acc, c| acc * x + GoldenRational::from_int(c.clone()))
    }
}

impl fmt::Display for IntPoly {
    /// `x^4 - 5x^3 + 2x^2 + 5x + 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && p > 0 { String::new() } else { mag.to_string() };
            match p {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(λI − A)` by the Faddeev–LeVerrier recursion.
pub fn char_poly_of(a: &IntMatrix) -> IntPoly {
    let n = 4usize;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix(std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero())));
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = a.mul(&mk);
        for i in 0..n {
            next.0[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let tr = a.mul(&mk).trace();
        coeffs[n - k] = -(tr / BigInt::from(k));
    }
    IntPoly(coeffs)
}

pub fn char_poly() -> IntPoly {
    char_poly_of(&IntMatrix::inflation())
}

/// Splits a monic quartic into two monic integer quadratics `(x² + px + q)`.
fn quadratic_factors(poly: &IntPoly) -> Option<[(BigInt, BigInt); 2]> {
    let c0 = poly.coeff(0);
    let c1 = poly.coeff(1);
    let c2 = poly.coeff(2);
    let c3 = poly.coeff(3);
    if c0.is_zero() {
        return None;
    }
    let bound = c0.abs().to_u64()?;
    for d in 1..=bound {
        let d = BigInt::from(d);
        if !c0.is_multiple_of(&d) {
            continue;
        }
        for q in [d.clone(), -d.clone()] {
            let s = &c0 / &q;
            // p + r = c3, p·r = c2 − q − s
            let prod = &c2 - &q - &s;
            let disc = &c3 * &c3 - BigInt::from(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                continue;
            }
            for sign in [1, -1] {
                let num = &c3 + &root * BigInt::from(sign);
                if num.is_odd() {
                    continue;
                }
                let p = num / 2;
                let r = &c3 - &p;
                if &p * &s + &q * &r == c1 {
                    return Some([(p, q.clone()), (r, s.clone())]);
                }
            }
        }
    }
    None
}

/// Exact eigenvalues of `M`, largest modulus first: `τ³, τ, σ, σ³`.
pub fn exact_eigenvalues() -> Result<Vec<GoldenRational>, InflationError> {
    let factors = quadratic_factors(&char_poly()).ok_or(InflationError::NotSplit)?;
    let mut roots = Vec::with_capacity(4);
    for (p, q) in factors {
        let p = GoldenRational::from_int(p);
        let q = GoldenRational::from_int(q);
        let disc = &p * &p - GoldenRational::from_int(4) * q;
        let root = disc.sqrt_exact().ok_or(InflationError::NotSplit)?;
        let half = GoldenRational::from_ratio(1, 2);
        roots.push((-&p + &root) * &half);
        roots.push((-&p - &root) * &half);
    }
    roots.sort_by(|a, b| b.abs().cmp(&a.abs()));
    Ok(roots)
}

/// A non-zero vector spanning the kernel of a rank-3 matrix.
pub fn kernel_vector(m: &GoldenMatrix) -> Option<GoldenVector> {
    let mut a = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        let Some(p) = (row..4).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().ok()?;
        for j in 0..4 {
            a[row][j] = &a[row][j] * &inv;
        }
        for r in 0..4 {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..4 {
                    let t = &factor * &a[row][j];
                    a[r][j] = &a[r][j] - &t;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let free = (0..4).find(|c| pivots.iter().all(|&(_, pc)| pc != *c))?;
    let mut v: GoldenVector = std::array::from_fn(|_| GoldenRational::zero());
    v[free] = GoldenRational::one();
    for &(r, c) in &pivots {
        v[c] = -&a[r][free];
    }
    Some(v)
}

fn normalize_l1(v: GoldenVector) -> GoldenVector {
    let sum: GoldenRational = v.iter().cloned().sum();
    v.map(|x| &x / &sum)
}

fn shifted(m: &GoldenMatrix, lambda: &GoldenRational) -> GoldenMatrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] - lambda;
    }
    out
}

fn transpose(m: &GoldenMatrix) -> GoldenMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn mat_vec(m: &GoldenMatrix, v: &GoldenVector) -> GoldenVector {
    std::array::from_fn(|i| (0..4).map(|j| &m[i][j] * &v[j]).sum())
}

pub fn vec_mat(v: &GoldenVector, m: &GoldenMatrix) -> GoldenVector {
    std::array::from_fn(|j| (0..4).map(|i| &v[i] * &m[i][j]).sum())
}

pub fn mat_mul(a: &GoldenMatrix, b: &GoldenMatrix) -> GoldenMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// Spectrum, Perron–Frobenius vectors and the PF projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub eigenvalues: [f64; 4],
    /// Right PF vector, L1-normalised: volume fractions of `T1..T4`.
    pub right_pf: [f64; 4],
    /// Left PF vector, L1-normalised: relative frequencies of `T1..T4`.
    pub left_pf: [f64; 4],
    pub eigenvalues_exact: [GoldenRational; 4],
    pub right_pf_exact: GoldenVector,
    pub left_pf_exact: GoldenVector,
    pub projection: GoldenMatrix,
}

pub fn pf_eigenvalue() -> GoldenRational {
    GoldenRational::tau_pow(3)
}

/// Exact right and left PF eigenvectors, each summing to 1.
pub fn pf_vectors() -> (GoldenVector, GoldenVector) {
    let m = IntMatrix::inflation().to_golden();
    let lambda = pf_eigenvalue();
    let right = kernel_vector(&shifted(&m, &lambda)).expect("PF eigenvalue is simple");
    let left = kernel_vector(&shifted(&transpose(&m), &lambda)).expect("PF eigenvalue is simple");
    (normalize_l1(right), normalize_l1(left))
}

/// `P = v uᵀ / (uᵀ v)` from the exact PF vectors.
pub fn projection_matrix() -> GoldenMatrix {
    let (v, u) = pf_vectors();
    let dot: GoldenRational = (0..4).map(|i| &u[i] * &v[i]).sum();
    std::array::from_fn(|i| std::array::from_fn(|j| &(&v[i] * &u[j]) / &dot))
}

pub fn spectral_data() -> Result<SpectralData, InflationError> {
    let exact = exact_eigenvalues()?;
    let eigenvalues_exact: [GoldenRational; 4] =
        exact.try_into().map_err(|_| InflationError::NotSplit)?;
    let (right, left) = pf_vectors();
    Ok(SpectralData {
        eigenvalues: eigenvalues_exact.clone().map(|x| x.to_f64()),
        right_pf: right.clone().map(|x| x.to_f64()),
        left_pf: left.clone().map(|x| x.to_f64()),
        eigenvalues_exact,
        right_pf_exact: right,
        left_pf_exact: left,
        projection: projection_matrix(),
    })
}

/// Largest entry of `|τ^{-3n} Mⁿ − P|`, evaluated exactly then embedded.
pub fn projection_error(n: u32) -> f64 {
    let mn = IntMatrix::inflation().pow(n).to_golden();
    let scale = GoldenRational::tau_pow(-3 * n as i64);
    let p = projection_matrix();
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let d = (&mn[i][j] * &scale - &p[i][j]).abs();
            worst = worst.max(d.to_f64());
        }
    }
    worst
}

/// Largest deviation of the normalised counts `c·Mⁿ / ‖c·Mⁿ‖₁` from the left PF vector.
pub fn frequency_deviation(c: &CountVector, n: u32) -> f64 {
    let counts = inflate_counts(c, n);
    let total = GoldenRational::from_int(BigInt::from(counts.total()));
    let (_, left) = pf_vectors();
    (0..4)
        .map(|i| {
            let share = &GoldenRational::from_int(BigInt::from(counts.0[i].clone())) / &total;
            (share - &left[i]).abs().to_f64()
        })
        .fold(0.0, f64::max)
}

/// A block of a dodecahedral decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "block", rename_all = "snake_case")]
pub enum Block {
    /// Dodecahedron of edge 1.
    D1,
    /// Dodecahedron of edge τ.
    DTau,
    /// `T_index^(order)`, index 1..=4.
    Tile { index: u8, order: u32 },
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::D1 => f.write_str("d(1)"),
            Block::DTau => f.write_str("d(tau)"),
            Block::Tile { index, order: 0 } => write!(f, "T{index}"),
            Block::Tile { index, order } => write!(f, "T{index}^({order})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    #[serde(flatten)]
    pub block: Block,
    #[serde(with = "bigint_string")]
    pub count: BigInt,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `base · M^order` written as a sum of dodecahedra and inflated prototiles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub label: String,
    pub base: CountVector,
    pub order: u32,
    pub parts: Vec<Part>,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .parts
            .iter()
            .map(|p| if p.count.is_one() { p.block.to_string() } else { format!("{}{}", p.count, p.block) })
            .collect();
        write!(f, "{} = {}", self.label, terms.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub count_consistent: bool,
    pub volume_consistent: bool,
    pub expected_counts: CountVector,
    pub found_counts: CountVector,
    pub expected_volume: GoldenRational,
    pub found_volume: GoldenRational,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.count_consistent && self.volume_consistent
    }
}

fn block_counts(block: &Block) -> Result<CountVector, InflationError> {
    match block {
        Block::D1 => Ok(CountVector::from_inventory(InventoryTarget::DodecahedronComposite)
            .expect("composite inventory")),
        Block::DTau => Ok(CountVector::from_inventory(InventoryTarget::DodecahedronTauComposite)
            .expect("composite inventory")),
        Block::Tile { index, order } => {
            let i = tile_slot(*index)?;
            Ok(inflate_counts(&CountVector::unit(i), *order))
        }
    }
}

fn block_volume(block: &Block) -> Result<GoldenRational, InflationError> {
    match block {
        Block::D1 => Ok(catalog::total_volume(
            &catalog::inventory(InventoryTarget::DodecahedronFundamental).items,
        )),
        Block::DTau => Ok(catalog::total_volume(
            &catalog::inventory(InventoryTarget::DodecahedronTauComposite).items,
        )),
        Block::Tile { index, order } => {
            let kind = TileKind::PROTOTILES[tile_slot(*index)?];
            Ok(GoldenRational::tau_pow(3 * *order as i64) * catalog::record(kind).volume)
        }
    }
}

fn tile_slot(index: u8) -> Result<usize, InflationError> {
    match index {
        1..=4 => Ok(index as usize - 1),
        _ => Err(InflationError::MalformedPart(format!("unknown tile T{index}"))),
    }
}

/// Checks a decomposition by counts (against `base · Mⁿ`) and, independently,
/// by exact volume (against `τ³ⁿ · V(base)`).
pub fn verify_decomposition(d: &Decomposition) -> Result<VerifyReport, InflationError> {
    let mut found = CountVector::default();
    let mut found_volume = GoldenRational::zero();
    for part in &d.parts {
        let count = part
            .count
            .to_biguint()
            .ok_or_else(|| InflationError::MalformedPart(format!("negative count {}", part.count)))?;
        found = found.add(&block_counts(&part.block)?.scale(&count));
        found_volume = found_volume + block_volume(&part.block)? * GoldenRational::from_int(part.count.clone());
    }
    let expected = inflate_counts(&d.base, d.order);
    let expected_volume = GoldenRational::tau_pow(3 * d.order as i64) * d.base.volume();
    Ok(VerifyReport {
        count_consistent: found == expected,
        volume_consistent: found_volume == expected_volume,
        expected_counts: expected,
        found_counts: found,
        expected_volume,
        found_volume,
    })
}

fn part(block: Block, count: u64) -> Part {
    Part { block, count: BigInt::from(count) }
}

fn tile(index: u8, order: u32, count: u64) -> Part {
    part(Block::Tile { index, order }, count)
}

/// The published dodecahedral decompositions of inflated tiles.
pub fn dodecahedron_ledger() -> Vec<Decomposition> {
    let entry = |label: &str, base: CountVector, order, parts| Decomposition {
        label: label.to_string(),
        base,
        order,
        parts,
    };
    let d1 = CountVector::from_inventory(InventoryTarget::DodecahedronComposite).expect("composite");
    vec![
        entry(
            "T1^(2)",
            CountVector::unit(0),
            2,
            vec![part(Block::D1, 1), tile(2, 1, 2), tile(3, 1, 1), tile(4, 1, 1), tile(2, 0, 1), tile(3, 0, 4)],
        ),
        entry(
            "T2^(3)",
            CountVector::unit(1),
            3,
            vec![part(Block::D1, 1), tile(2, 2, 2), tile(2, 0, 5), tile(3, 0, 6)],
        ),
        entry("T3^(2)", CountVector::unit(2), 2, vec![part(Block::D1, 1), tile(2, 0, 5), tile(3, 0, 6)]),
        entry("T4^(2)", CountVector::unit(3), 2, vec![part(Block::D1, 1), tile(2, 0, 3), tile(3, 0, 5)]),
        entry(
            "T2^(4)",
            CountVector::unit(1),
            4,
            vec![
                part(Block::D1, 2),
                part(Block::DTau, 1),
                tile(2, 2, 4),
                tile(2, 1, 5),
                tile(3, 1, 6),
                tile(2, 0, 10),
                tile(3, 0, 12),
            ],
        ),
        entry(
            "T1^(4)",
            CountVector::unit(0),
            4,
            vec![
                part(Block::D1, 13),
                part(Block::DTau, 2),
                tile(2, 2, 9),
                tile(2, 1, 14),
                tile(3, 1, 14),
                tile(4, 1, 3),
                tile(2, 0, 45),
                tile(3, 0, 68),
            ],
        ),
        entry(
            "d(tau^10)",
            d1,
            10,
            vec![
                part(Block::D1, 432139),
                part(Block::DTau, 92850),
                tile(1, 0, 1064050),
                tile(2, 0, 6341550),
                tile(3, 0, 4720730),
                tile(4, 0, 1064050),
            ],
        ),
    ]
}
