//! Randomised invariants of the golden field, the inflation dynamics and gluing.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use proptest::prelude::*;

use icotile::catalog::TileKind;
use icotile::geometry::{glue, realize, FaceMatch, Tolerances};
use icotile::inflation::{inflate_counts, CountVector};
use icotile::GoldenRational;

fn golden() -> impl Strategy<Value = GoldenRational> {
    (-1000i64..1000, -1000i64..1000, 1i64..60).prop_map(|(a, b, d)| GoldenRational::new(a, b, d))
}

fn nonzero() -> impl Strategy<Value = GoldenRational> {
    golden().prop_filter("non-zero", |x| !x.is_zero())
}

/// `(a + bτ)/d` to about 16 digits via an integer square root of `5·10^80`.
fn oracle(x: &GoldenRational) -> f64 {
    let scale = BigInt::from(10).pow(40u32);
    let root5 = (BigInt::from(5) * &scale * &scale).sqrt();
    let two_a_b = BigInt::from(2) * x.a() + x.b();
    let num = &two_a_b * &scale + x.b() * root5;
    let den = BigInt::from(2) * x.den() * &scale;
    // keep 64 significant bits of the quotient
    let shift = (num.bits() as i64 - den.bits() as i64 - 64).min(0);
    let q = if shift < 0 { (num << (-shift) as usize) / den } else { num / den };
    q.to_f64().unwrap() * 2f64.powi(shift as i32)
}

proptest! {
    #[test]
    fn ring_axioms(x in golden(), y in golden(), z in golden()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, GoldenRational::zero());
        prop_assert_eq!(&x * &GoldenRational::one(), x.clone());
    }

    #[test]
    fn inverse(x in nonzero()) {
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        prop_assert_eq!(x.checked_div(&x).unwrap(), GoldenRational::one());
    }

    #[test]
    fn conjugation_is_a_field_automorphism(x in golden(), y in golden()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
    }

    #[test]
    fn norm_is_rational_and_multiplicative(x in golden(), y in golden()) {
        let prod = &x * &x.conj();
        prop_assert!(prod.is_rational());
        let (n, d) = x.norm();
        prop_assert_eq!(prod, GoldenRational::from_ratio(n.clone(), d.clone()));
        let (m, e) = y.norm();
        let (nm, de) = (&x * &y).norm();
        prop_assert_eq!(GoldenRational::from_ratio(nm, de), GoldenRational::from_ratio(n * m, d * e));
    }

    #[test]
    fn tau_powers_add_exponents(m in -80i64..80, n in -80i64..80) {
        prop_assert_eq!(GoldenRational::tau_pow(m) * GoldenRational::tau_pow(n), GoldenRational::tau_pow(m + n));
        prop_assert_eq!(GoldenRational::tau().pow(m).unwrap(), GoldenRational::tau_pow(m));
    }

    #[test]
    fn ordering_agrees_with_embedding(x in golden(), y in golden()) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 * fx.abs().max(fy.abs()).max(1.0) {
            prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
        }
        prop_assert_eq!(x.signum(), if x.is_zero() { 0 } else if fx > 0.0 { 1 } else { -1 });
    }

    #[test]
    fn embedding_is_accurate(x in nonzero()) {
        let want = oracle(&x);
        let got = x.embed().unwrap();
        prop_assert!(((got - want) / want).abs() < 1e-14, "{} vs {}", got, want);
    }

    #[test]
    fn embedding_survives_cancellation(n in 1i64..60, k in 1i64..5) {
        // sigma^n is tiny while its coefficients are large
        let x = GoldenRational::sigma().pow(n).unwrap() * GoldenRational::from_int(k);
        let want = oracle(&x);
        prop_assert!(((x.to_f64() - want) / want).abs() < 1e-13);
    }

    #[test]
    fn json_round_trip(x in golden()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: GoldenRational = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn inflation_conserves_volume(c in prop::array::uniform4(0u64..50), n in 0u32..=20) {
        let c = CountVector::new(c);
        let grown = inflate_counts(&c, n);
        prop_assert_eq!(grown.volume(), GoldenRational::tau_pow(3 * n as i64) * c.volume());
        prop_assert!(grown.total() >= c.total());
    }

    #[test]
    fn inflation_composes(c in prop::array::uniform4(0u64..20), m in 0u32..10, n in 0u32..10) {
        let c = CountVector::new(c);
        prop_assert_eq!(inflate_counts(&inflate_counts(&c, m), n), inflate_counts(&c, m + n));
    }

    #[test]
    fn gluing_is_isometric(fixed in 0usize..6, moving in 0usize..6, ff in 0usize..4, mf in 0usize..4, flip: bool) {
        let tol = Tolerances::default();
        let a = realize(TileKind::FUNDAMENTAL[fixed]).unwrap();
        let b = realize(TileKind::FUNDAMENTAL[moving]).unwrap();
        if let Ok(placed) = glue(&a, ff, &b, mf, FaceMatch::Auto { flip }, &tol) {
            prop_assert!(placed.scheme_deviation() < 1e-12);
            prop_assert_eq!(placed.parity, if flip { -1 } else { 1 });
            prop_assert!((placed.volume() - b.volume()).abs() < 1e-12);
            // the glued face is shared exactly
            let target = a.face_points(ff);
            for p in placed.face_points(mf) {
                prop_assert!(target.iter().any(|q| (p - q).norm() < 1e-12));
            }
        }
    }
}

#[test]
fn oracle_sanity() {
    let tau = oracle(&GoldenRational::tau());
    assert!((tau - 1.618_033_988_749_895).abs() < 1e-15);
    assert!(BigInt::one().is_positive());
    assert_eq!((BigInt::from(5) * BigInt::from(10).pow(4u32)).sqrt(), BigInt::from(223));
}
