//! End-to-end checks of the published tile data, one per claim, shared by
//! the `verify` command and the acceptance run.

use std::time::Instant;

use nalgebra::Matrix4;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, expand_to_fundamental, inventory, record, AxisClass, InventoryTarget, PolyCounts, TileKind};
use crate::geometry::{assemble, cm_volume, dihedrals, same_census, AxisFrame, EdgeScheme, ShapeTarget, Tolerances};
use crate::golden::GoldenRational;
use crate::inflation::{self, CountVector, IntMatrix};
use crate::report::build_report;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub title: String,
    pub pass: bool,
    /// Failed sub-checks, or a short summary when everything held.
    pub detail: String,
}

/// Collects named sub-checks.
struct Probe {
    failures: Vec<String>,
}

impl Probe {
    fn new() -> Self {
        Probe { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u8, title: &str, summary: String) -> CheckOutcome {
        let pass = self.failures.is_empty();
        let detail = if pass { summary } else { self.failures.join("; ") };
        CheckOutcome { id, title: title.to_string(), pass, detail }
    }
}

fn g(a: i64, b: i64, den: i64) -> GoldenRational {
    GoldenRational::new(a, b, den)
}

fn twelfth(x: GoldenRational) -> GoldenRational {
    x * g(1, 0, 12)
}

pub fn fundamental_volumes() -> CheckOutcome {
    let mut p = Probe::new();
    let start = Instant::now();
    let powers = [0, 1, 1, 2, 2, 3];
    for (kind, k) in TileKind::FUNDAMENTAL.into_iter().zip(powers) {
        let want = twelfth(GoldenRational::tau_pow(k));
        match EdgeScheme::of(kind).map(|e| cm_volume(&e)) {
            Some(Ok(v)) => p.check(v.volume_exact.as_ref() == Some(&want), || format!("{kind}: {:?}", v.volume_exact)),
            _ => p.check(false, || format!("{kind}: no volume")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    p.check(secs < 1.0, || format!("took {secs:.3}s"));
    p.finish(1, "fundamental volumes (1, tau, tau, tau^2, tau^2, tau^3)/12", format!("exact, {secs:.4}s"))
}

pub fn composite_volumes() -> CheckOutcome {
    let mut p = Probe::new();
    let want = [
        g(2, 0, 1) * GoldenRational::tau_pow(4),
        GoldenRational::tau_pow(3),
        g(3, 4, 1),
        g(2, 0, 1) * GoldenRational::tau_pow(3),
    ];
    for (kind, w) in TileKind::PROTOTILES.into_iter().zip(want) {
        let parts = expand_to_fundamental(&[(kind, 1)]);
        let items: Vec<(TileKind, u64)> = parts.into_iter().collect();
        let sum = catalog::total_volume(&items);
        p.check(sum == twelfth(w.clone()), || format!("{kind}: {sum}"));
        p.check(record(kind).volume == sum, || format!("{kind}: stored volume differs"));
    }
    p.finish(2, "composite volumes (2tau^4, tau^3, 4tau+3, 2tau^3)/12", "exact".into())
}

pub fn inventories() -> CheckOutcome {
    let mut p = Probe::new();
    let expanded = expand_to_fundamental(&inventory(InventoryTarget::DodecahedronComposite).items);
    let fundamental: catalog::TileCounts = inventory(InventoryTarget::DodecahedronFundamental).items.into_iter().collect();
    p.check(expanded == fundamental, || format!("composite dodecahedron expands to {expanded:?}"));
    let dv = catalog::total_volume(&inventory(InventoryTarget::DodecahedronFundamental).items);
    p.check(dv == g(24, 42, 12), || format!("dodecahedron volume {dv}"));
    let classical_d = (15.0 + 7.0 * 5f64.sqrt()) / 4.0;
    p.check((dv.to_f64() - classical_d).abs() < 1e-12, || format!("dodecahedron {} vs {classical_d}", dv.to_f64()));
    let iv = catalog::total_volume(&inventory(InventoryTarget::Icosahedron).items);
    p.check(iv == g(10, 10, 12), || format!("icosahedron volume {iv}"));
    let classical_i = 5.0 * (3.0 + 5f64.sqrt()) / 12.0;
    p.check((iv.to_f64() - classical_i).abs() < 1e-12, || format!("icosahedron {} vs {classical_i}", iv.to_f64()));
    p.finish(3, "inventory consistency of the dodecahedron and icosahedron", format!("d(1) = {dv}, i(1) = {iv}"))
}

pub fn inflation_rules() -> CheckOutcome {
    let mut p = Probe::new();
    // tau*T1 = T1 + 2T2 + 2T3 + 2T4, tau*T2 = 2T2 + T3, tau*T3 = T1 + 2T2 + T3 + T4, tau*T4 = T1 + T2 + T3 + T4
    let rules = [[1, 2, 2, 2], [0, 2, 1, 0], [1, 2, 1, 1], [1, 1, 1, 1]];
    for (i, rule) in rules.iter().enumerate() {
        let row = inflation::inflate_counts(&CountVector::unit(i), 1);
        p.check(row == CountVector::new(*rule), || format!("row {}: {row}", i + 1));
        let lhs = GoldenRational::tau_pow(3) * record(TileKind::PROTOTILES[i]).volume;
        p.check(row.volume() == lhs, || format!("T{} volume not conserved", i + 1));
    }
    p.finish(4, "inflation rules and volume conservation", "4 rows exact".into())
}

pub fn spectrum() -> CheckOutcome {
    let mut p = Probe::new();
    let poly = inflation::char_poly();
    let want: Vec<BigInt> = [1, 5, 2, -5, 1].into_iter().map(BigInt::from).collect();
    p.check(poly.0 == want, || format!("characteristic polynomial {poly}"));
    let mf = IntMatrix::inflation().to_f64();
    let m = Matrix4::from_fn(|i, j| mf[i][j]);
    let mut numeric: Vec<f64> = m.complex_eigenvalues().iter().map(|z| z.re).collect();
    numeric.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    let s = GoldenRational::sigma();
    let closed = [GoldenRational::tau_pow(3), GoldenRational::tau(), s.clone(), s.pow(3).expect("power")];
    for (x, c) in numeric.iter().zip(&closed) {
        p.check((x - c.to_f64()).abs() < 1e-9, || format!("root {x} vs {c}"));
    }
    let (v, u) = inflation::pf_vectors();
    let mg = IntMatrix::inflation().to_golden();
    let lam = inflation::pf_eigenvalue();
    let mv = inflation::mat_vec(&mg, &v);
    let um = inflation::vec_mat(&u, &mg);
    for i in 0..4 {
        p.check((&mv[i] - &(&lam * &v[i])).is_zero(), || "right PF residual".into());
        p.check((&um[i] - &(&lam * &u[i])).is_zero(), || "left PF residual".into());
    }
    let printed_v = [0.3820, 0.1180, 0.2639, 0.2361];
    let printed_u = [0.1338, 0.4331, 0.2677, 0.1654];
    for i in 0..4 {
        let (vi, ui) = (v[i].to_f64(), u[i].to_f64());
        p.check((vi - printed_v[i]).abs() < 5e-5, || format!("volume fraction {i}: {vi}"));
        p.check((ui - printed_u[i]).abs() < 5e-5, || format!("frequency {i}: {ui}"));
    }
    p.finish(5, "spectrum and Perron-Frobenius vectors", format!("{poly}"))
}

/// The projection matrix as printed, with `√5 = 2τ − 1`.
pub fn printed_projection() -> [[GoldenRational; 4]; 4] {
    let tau = GoldenRational::tau();
    let sigma = GoldenRational::sigma();
    let r5 = GoldenRational::sqrt5();
    let i = |n: i64| GoldenRational::from_int(n);
    let tp2 = &tau + &i(2);
    let sp2 = &sigma + &i(2);
    let raw = [
        [i(2) * &tp2, i(4) * (i(3) * &tau + i(1)), i(4) * &tp2, i(4) * &r5],
        [r5.clone(), i(2) * &tp2, i(2) * &r5, i(2) * &sp2],
        [i(5), i(10) * &tau, i(10), i(-10) * &sigma],
        [i(2) * &r5, i(4) * &tp2, i(4) * &r5, i(4) * &sp2],
    ];
    raw.map(|row| row.map(|x| x * g(1, 0, 30)))
}

/// Order at which the limit bound is demanded, and the bound.
pub const PROJECTION_ORDER: u32 = 10;
pub const PROJECTION_BOUND: f64 = 1e-6;

pub fn projection() -> CheckOutcome {
    let mut p = Probe::new();
    let pm = inflation::projection_matrix();
    p.check(pm == printed_projection(), || "entries differ from the printed matrix".into());
    p.check(inflation::mat_mul(&pm, &pm) == pm, || "P^2 != P".into());
    let err = inflation::projection_error(PROJECTION_ORDER);
    p.check(err < PROJECTION_BOUND, || {
        format!("max |tau^-3n M^n - P| at n = {PROJECTION_ORDER} is {err:.3e}, not below {PROJECTION_BOUND:e}")
    });
    let rate = GoldenRational::tau_pow(-2).to_f64();
    for n in [10, 15, 20] {
        let ratio = inflation::projection_error(n + 1) / inflation::projection_error(n);
        p.check((ratio - rate).abs() < 0.1 * rate, || format!("decay ratio {ratio} at n = {n}"));
    }
    p.finish(6, "projection matrix and convergence", format!("error {err:.3e} at n = {PROJECTION_ORDER}"))
}

pub fn ledger() -> CheckOutcome {
    let mut p = Probe::new();
    let entries = inflation::dodecahedron_ledger();
    for d in &entries {
        match inflation::verify_decomposition(d) {
            Ok(r) => p.check(r.ok(), || format!("{} does not verify", d.label)),
            Err(e) => p.check(false, || format!("{}: {e}", d.label)),
        }
    }
    if let Some(last) = entries.last() {
        let r = inflation::verify_decomposition(last).ok();
        let want = g(47287176, 76512258, 12);
        p.check(r.as_ref().map(|r| &r.found_volume) == Some(&want), || "d(tau^10) total volume".into());
        p.check(want == GoldenRational::tau_pow(30) * g(24, 42, 12), || "tau^30 scaling".into());
    }
    let mut mutations = 0;
    for (i, d) in entries.iter().enumerate() {
        for k in 0..d.parts.len() {
            for delta in [-1i64, 1] {
                let mut m = d.clone();
                m.parts[k].count += delta;
                if m.parts[k].count < BigInt::from(0) {
                    continue;
                }
                mutations += 1;
                let caught = inflation::verify_decomposition(&m).map(|r| !r.count_consistent).unwrap_or(true);
                p.check(caught, || format!("entry {i} part {k} {delta:+} not detected"));
            }
        }
    }
    p.finish(7, "dodecahedral decompositions", format!("{} entries, {mutations} mutations caught", entries.len()))
}

fn golden_angles() -> [f64; 2] {
    let a = 2f64.atan();
    [a, std::f64::consts::PI - a]
}

pub fn assemblies(tol: &Tolerances) -> CheckOutcome {
    let mut p = Probe::new();
    match assemble(ShapeTarget::D1, tol) {
        Ok(a) => {
            let c = a.hull.counts();
            p.check(c == PolyCounts { vertices: 20, edges: 30, faces: 12 }, || format!("d1 counts {c:?}"));
            for i in 0..a.hull.faces.len() {
                let f = a.hull.face(i);
                p.check(f.corners() == 5 && f.planarity() < tol.predicate, || format!("d1 face {i} not a planar pentagon"));
                p.check(f.edge_lengths().iter().all(|l| (l - 1.0).abs() < tol.predicate), || format!("d1 face {i} edges"));
            }
            let exact = g(24, 42, 12).to_f64();
            p.check((a.hull.volume() - a.tile_volume()).abs() < tol.predicate, || "d1 volume additivity".into());
            p.check((a.hull.volume() - exact).abs() < tol.predicate, || format!("d1 volume {}", a.hull.volume()));
            for d in dihedrals(&a.hull, tol) {
                let ok = d.angle.is_some_and(|x| (x - golden_angles()[1]).abs() < tol.predicate);
                p.check(ok, || format!("d1 dihedral {:?}", d.angle));
            }
        }
        Err(e) => p.check(false, || format!("d1: {e}")),
    }
    match assemble(ShapeTarget::I1, tol) {
        Ok(a) => {
            let c = a.hull.counts();
            p.check(c.vertices == 12 && c.faces == 20, || format!("i1 counts {c:?}"));
            let eq = a.hull.census(tol.predicate).map(|s| catalog::census_label(&s));
            p.check(eq.as_deref() == Some("20x(1,1,1)"), || format!("i1 faces {eq:?}"));
            let exact = g(10, 10, 12).to_f64();
            p.check((a.hull.volume() - exact).abs() < tol.predicate, || format!("i1 volume {}", a.hull.volume()));
            p.check((a.hull.volume() - a.tile_volume()).abs() < tol.predicate, || "i1 volume additivity".into());
        }
        Err(e) => p.check(false, || format!("i1: {e}")),
    }
    for target in [ShapeTarget::T1, ShapeTarget::T2, ShapeTarget::T3, ShapeTarget::T4] {
        let kind = target.tile_kind().expect("composite");
        match assemble(target, tol) {
            Ok(a) => {
                let r = record(kind);
                p.check(Some(a.hull.counts()) == r.counts, || format!("{target} counts {:?}", a.hull.counts()));
                let census = a.hull.census(tol.predicate);
                p.check(census.as_ref().is_some_and(|c| same_census(c, &r.faces)), || format!("{target} face census"));
                for d in dihedrals(&a.hull, tol) {
                    let ok = d.angle.is_some_and(|x| golden_angles().iter().any(|y| (x - y).abs() < tol.predicate));
                    p.check(ok, || format!("{target} dihedral {:?}", d.angle));
                }
            }
            Err(e) => p.check(false, || format!("{target}: {e}")),
        }
    }
    p.finish(8, "assemblies of d(1), i(1) and T1..T4", "hulls, censuses and dihedrals match".into())
}

pub fn axis_classes(tol: &Tolerances) -> CheckOutcome {
    let mut p = Probe::new();
    let frame = AxisFrame::new(tol.predicate);
    let mut counted = [0usize; 2];
    for target in [ShapeTarget::D1, ShapeTarget::I1] {
        match assemble(target, tol) {
            Ok(a) => {
                for w in a.walls(&frame, tol) {
                    let Some(spec) = w.spec else {
                        p.check(false, || format!("{target}: wall with an unexpected edge"));
                        continue;
                    };
                    match spec.axis {
                        AxisClass::FiveFold => counted[0] += 1,
                        AxisClass::ThreeFold => counted[1] += 1,
                        AxisClass::None => {}
                    }
                    p.check(w.axis == spec.axis, || format!("{target}: {} wall is {:?}", spec.label(), w.axis));
                }
            }
            Err(e) => p.check(false, || format!("{target}: {e}")),
        }
    }
    p.finish(
        9,
        "interior walls normal to symmetry axes",
        format!("{} Robinson walls five-fold, {} equilateral walls three-fold", counted[0], counted[1]),
    )
}

pub fn determinism() -> CheckOutcome {
    let mut p = Probe::new();
    match (build_report(), build_report()) {
        (Ok(a), Ok(b)) => p.check(a == b, || "report bundles differ".into()),
        _ => p.check(false, || "report failed".into()),
    }
    p.finish(10, "report determinism", "identical bundles".into())
}

pub fn run_all(tol: &Tolerances) -> Vec<CheckOutcome> {
    vec![
        fundamental_volumes(),
        composite_volumes(),
        inventories(),
        inflation_rules(),
        spectrum(),
        projection(),
        ledger(),
        assemblies(tol),
        axis_classes(tol),
        determinism(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_projection_matches_first_row() {
        let p = printed_projection();
        assert_eq!(p[0][0], g(4, 2, 30));
        assert!((p[2][3].to_f64() - 10.0 * 0.618_033_988_749_895 / 30.0).abs() < 1e-12);
    }

    #[test]
    fn convergence_bound_at_order_ten_is_out_of_reach() {
        let out = projection();
        assert!(!out.pass);
        assert!(out.detail.contains("n = 10"));
        assert!(!out.detail.contains("P^2"));
        assert!(!out.detail.contains("differ"));
    }
}
