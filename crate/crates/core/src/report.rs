//! Markdown and CSV report bundle regenerating the tile tables, the
//! inflation matrix, its spectrum and the ledger checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::catalog::{self, census_label, TileKind};
use crate::golden::GoldenRational;
use crate::inflation::{self, InflationError, IntMatrix};

/// Bundle contents keyed by file name.
pub type Bundle = BTreeMap<String, String>;

/// `tau^2/12`, `2*tau^4/12` or the plain golden form.
pub fn volume_label(v: &GoldenRational) -> String {
    let twelve = v * &GoldenRational::from_int(12);
    for c in 1..=4i64 {
        let scaled = &twelve / &GoldenRational::from_int(c);
        for k in 0..=8 {
            if scaled == GoldenRational::tau_pow(k) {
                let power = match k {
                    0 => "1".to_string(),
                    1 => "tau".to_string(),
                    _ => format!("tau^{k}"),
                };
                return match (c, k) {
                    (1, _) => format!("{power}/12"),
                    (_, 0) => format!("{c}/12"),
                    _ => format!("{c}*{power}/12"),
                };
            }
        }
    }
    v.to_string()
}

fn f7(x: f64) -> String {
    format!("{x:.7}")
}

const HEADER: &str = "# Tile report

Regenerated from the exact data; every run produces identical bytes.

Files in this bundle (comma-separated, UTF-8, LF line endings, header row first):

- `table1.csv`: kind, faces, volume, volume_float. Fundamental tetrahedra.
- `table2.csv`: kind, vertices, edges, faces, face_census, composition, volume, volume_float. Composite tiles after coplanar merge.
- `matrix.csv`: tile, T1, T2, T3, T4. Row i lists the tiles filling tau*T_i.
- `projection.csv`: row, col, exact, float. Limit of tau^(-3n) M^n.
- `spectrum.csv`: index, eigenvalue, eigenvalue_float, volume_fraction, frequency.
- `ledger.csv`: entry, order, expected_counts, found_counts, count_consistent, volume_consistent.
";

pub fn build_report() -> Result<Bundle, InflationError> {
    let mut files = Bundle::new();
    let mut md = String::from(HEADER);

    let mut t1 = String::from("kind,faces,volume,volume_float\n");
    md.push_str("\n## Fundamental tiles\n\n| tile | faces | volume | float |\n|---|---|---|---|\n");
    for kind in TileKind::FUNDAMENTAL {
        let r = catalog::record(kind);
        let (faces, vol, vf) = (census_label(&r.faces), volume_label(&r.volume), f7(r.volume.to_f64()));
        writeln!(t1, "{kind},{faces},{vol},{vf}").unwrap();
        writeln!(md, "| {kind} | {faces} | {vol} | {vf} |").unwrap();
    }
    files.insert("table1.csv".into(), t1);

    let mut t2 = String::from("kind,vertices,edges,faces,face_census,composition,volume,volume_float\n");
    md.push_str("\n## Composite tiles\n\n| tile | N0 | N1 | N2 | faces | composition | volume |\n|---|---|---|---|---|---|---|\n");
    for kind in TileKind::ALL.into_iter().filter(|k| k.is_composite()) {
        let r = catalog::record(kind);
        let c = r.counts.expect("composites carry counts");
        let comp: Vec<&str> = r.composition.iter().map(|k| k.tag()).collect();
        let comp = comp.join("+");
        let (faces, vol) = (census_label(&r.faces), volume_label(&r.volume));
        writeln!(t2, "{kind},{},{},{},{faces},{comp},{vol},{}", c.vertices, c.edges, c.faces, f7(r.volume.to_f64())).unwrap();
        writeln!(md, "| {kind} | {} | {} | {} | {faces} | {comp} | {vol} |", c.vertices, c.edges, c.faces).unwrap();
    }
    files.insert("table2.csv".into(), t2);

    let m = IntMatrix::inflation();
    let mut mcsv = String::from("tile,T1,T2,T3,T4\n");
    md.push_str("\n## Inflation matrix\n\n| | T1 | T2 | T3 | T4 |\n|---|---|---|---|---|\n");
    for (i, kind) in TileKind::PROTOTILES.iter().enumerate() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        writeln!(mcsv, "{kind},{}", row.join(",")).unwrap();
        writeln!(md, "| tau*{kind} | {} |", row.join(" | ")).unwrap();
    }
    files.insert("matrix.csv".into(), mcsv);
    writeln!(md, "\nCharacteristic polynomial: `{}`", inflation::char_poly()).unwrap();

    let spec = inflation::spectral_data()?;
    let mut scsv = String::from("index,eigenvalue,eigenvalue_float,volume_fraction,frequency\n");
    for i in 0..4 {
        writeln!(
            scsv,
            "{},{},{},{},{}",
            i + 1,
            spec.eigenvalues_exact[i],
            f7(spec.eigenvalues[i]),
            f7(spec.right_pf[i]),
            f7(spec.left_pf[i])
        )
        .unwrap();
    }
    files.insert("spectrum.csv".into(), scsv);
    let join = |v: &[f64], digits: usize| v.iter().map(|x| format!("{x:.digits$}")).collect::<Vec<_>>().join(", ");
    writeln!(md, "\n## Spectrum\n\nEigenvalues: {}", join(&spec.eigenvalues, 7)).unwrap();
    writeln!(md, "\n## Volume fractions\n\n{}", join(&spec.right_pf, 4)).unwrap();
    writeln!(md, "\n## Frequencies\n\n{}", join(&spec.left_pf, 4)).unwrap();

    let mut pcsv = String::from("row,col,exact,float\n");
    md.push_str("\n## Projection\n\n| | T1 | T2 | T3 | T4 |\n|---|---|---|---|---|\n");
    for (i, row) in spec.projection.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        for (j, x) in row.iter().enumerate() {
            writeln!(pcsv, "{},{},{},{}", i + 1, j + 1, x, f7(x.to_f64())).unwrap();
        }
        writeln!(md, "| T{} | {} |", i + 1, cells.join(" | ")).unwrap();
    }
    files.insert("projection.csv".into(), pcsv);

    let mut lcsv = String::from("entry,order,expected_counts,found_counts,count_consistent,volume_consistent\n");
    md.push_str("\n## Dodecahedral decompositions\n\n");
    for d in inflation::dodecahedron_ledger() {
        let r = inflation::verify_decomposition(&d)?;
        writeln!(
            lcsv,
            "{},{},{},{},{},{}",
            d.label, d.order, r.expected_counts, r.found_counts, r.count_consistent, r.volume_consistent
        )
        .unwrap();
        writeln!(md, "- {} {}", if r.ok() { "OK" } else { "FAIL" }, d).unwrap();
    }
    files.insert("ledger.csv".into(), lcsv);
    files.insert("report.md".into(), md);
    Ok(files)
}

pub fn write_bundle(bundle: &Bundle, dir: &Path) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, body) in bundle {
        std::fs::write(dir.join(name), body)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volume_labels() {
        assert_eq!(volume_label(&catalog::record(TileKind::Tet4).volume), "tau^2/12");
        assert_eq!(volume_label(&catalog::record(TileKind::Tet1).volume), "1/12");
        assert_eq!(volume_label(&catalog::record(TileKind::Tet3).volume), "tau/12");
        assert_eq!(volume_label(&catalog::record(TileKind::T1).volume), "2*tau^4/12");
        assert_eq!(volume_label(&catalog::record(TileKind::T3).volume), "(4*tau+3)/12");
    }

    #[test]
    fn table_rows_and_sections() {
        let b = build_report().unwrap();
        assert!(b["table1.csv"].lines().any(|l| l == "t4,1x(1,1,1);3x(1,tau,tau),tau^2/12,0.2181695"));
        assert!(b["report.md"].contains("Eigenvalues: 4.2360680, 1.6180340, -0.6180340, -0.2360680"));
        assert!(b["report.md"].contains("0.1338, 0.4331, 0.2677, 0.1654"));
        assert!(b["report.md"].contains("0.3820, 0.1180, 0.2639, 0.2361"));
        assert_eq!(b.len(), 7);
        assert!(b.values().all(|s| !s.contains('\r')));
    }

    #[test]
    fn report_is_deterministic() {
        assert_eq!(build_report().unwrap(), build_report().unwrap());
    }
}
