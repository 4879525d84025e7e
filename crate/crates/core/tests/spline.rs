use hammock_core::oracle::{hammock_coeffs, HammockVariant};
use hammock_core::spline::{
    assemble_general_system, assemble_unique_system, bridge_interval, solve_system, ControlSystem,
};
use hammock_core::{
    approximate, binomial, error_bound, Error, HammockDims, KnownAnchors, Mode, SplineModel,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn dims(l: usize, w: usize) -> HammockDims {
    HammockDims::new(l, w).unwrap()
}

fn anchors_5x3(t: usize, s: usize) -> KnownAnchors {
    let h = hammock_coeffs(dims(5, 3), HammockVariant::BrickA).unwrap();
    KnownAnchors::from_exact(&h, t, s).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn anchors_from_flags_match_oracle() {
    let flags = KnownAnchors::from_u64(dims(5, 3), 1, 1, 21, 194, 16, 178).unwrap();
    assert_eq!(flags, anchors_5x3(1, 1));
    assert_eq!(flags.n_nw(), 439u32.into());
    assert_eq!(flags.n_nl_dual(), 2982u32.into());
    assert_eq!(flags.n_nws(), 1187u32.into());
    assert_eq!(flags.n_nlt_dual(), 4811u32.into());
}

#[test]
fn anchor_validation() {
    let d = dims(5, 3);
    assert!(matches!(
        KnownAnchors::from_u64(d, 0, 1, 21, 194, 16, 178),
        Err(Error::Anchors(_))
    ));
    assert!(matches!(
        KnownAnchors::from_u64(d, 7, 1, 21, 194, 16, 178),
        Err(Error::Anchors(_))
    ));
    assert!(matches!(
        KnownAnchors::from_u64(d, 1, 1, 194, 21, 16, 178),
        Err(Error::Anchors(_))
    ));
    assert!(matches!(
        KnownAnchors::from_u64(d, 1, 1, 0, 194, 16, 178),
        Err(Error::Anchors(_))
    ));
    assert!(matches!(
        KnownAnchors::from_u64(d, 1, 1, 21, 194, 16, 999_999),
        Err(Error::Anchors(_))
    ));
    // series/parallel-like shapes have no cubic interval
    assert!(matches!(
        KnownAnchors::from_u64(dims(4, 1), 1, 1, 1, 2, 1, 2),
        Err(Error::Degenerate { .. })
    ));
    assert!(matches!(
        KnownAnchors::from_u64(dims(2, 2), 1, 1, 1, 2, 1, 2),
        Err(Error::Degenerate { span: 0 })
    ));
}

#[test]
fn unique_system_rows_3x5() {
    let sys = assemble_unique_system(&anchors_5x3(1, 1)).unwrap();
    assert_eq!(sys.primal.rows(), &[ints(&[108, 18]), ints(&[18, 108])]);
    assert_eq!(sys.primal.rhs(), ints(&[61567, 312296]).as_slice());
    // A1 = N6 m^3 - N5 (m-1)^3 - N12
    assert_eq!(194 * 343 - 21 * 216 - 439, 61567);
    // A4' = N11 m^3 - N12 (m-1)^3 - N5
    assert_eq!(1187 * 343 - 439 * 216 - 21, 312296);
}

#[test]
fn self_dual_systems_coincide() {
    let a = KnownAnchors::from_u64(dims(5, 5), 1, 1, 52, 994, 52, 994).unwrap();
    let sys = assemble_unique_system(&a).unwrap();
    assert_eq!(sys.primal, sys.dual);
}

#[test]
fn control_values_3x5() {
    let sys = ControlSystem::Unique(assemble_unique_system(&anchors_5x3(1, 1)).unwrap());
    let [a, b, _, _] = solve_system(&sys).unwrap();
    // Cramer by hand: (61567*108 - 18*312296) / (108^2 - 18^2)
    let a_hand = (61567.0 * 108.0 - 18.0 * 312296.0) / (108.0 * 108.0 - 18.0 * 18.0);
    let b_hand = (108.0 * 312296.0 - 18.0 * 61567.0) / (108.0 * 108.0 - 18.0 * 18.0);
    assert!((a - 57106.0 / 630.0).abs() < 1e-12);
    assert!((a - a_hand).abs() < 1e-12);
    assert!((b - b_hand).abs() < 1e-9);
    assert!((b - 2876.5222).abs() < 1e-3);
}

#[test]
fn eval_examples_3x5() {
    let m = approximate(&anchors_5x3(1, 1), Mode::Unique).unwrap().model;
    let f7 = m.eval_f_lw(7.0).unwrap();
    assert!((f7 - 560.7).abs() < 0.05, "f(7) = {f7}");
    assert_eq!(f7.round(), 561.0);
    assert_eq!(m.eval_f_lw(5.0).unwrap(), 21.0);
    assert_eq!(m.eval_f_lw(15.0).unwrap(), 1.0);
    assert_eq!(m.eval_f_lw(3.7).unwrap(), 0.0);
    assert!((m.eval_f_lw(4.5).unwrap() - 10.5).abs() < 1e-12);
    assert!(m.eval_f_lw(15.01).is_err());
    assert!(m.eval_f_lw(-0.01).is_err());

    assert_eq!(m.eval_f_wl(3.0).unwrap(), 16.0);
    assert!((m.eval_f_wl(10.0).unwrap() - 2982.0).abs() < 1e-9);
    for x in [0.0, 1.0, 2.0] {
        assert_eq!(m.eval_f_wl(x).unwrap(), 0.0);
    }
    assert_eq!(m.eval_f_wl(15.0).unwrap(), 1.0);
}

#[test]
fn tail_chords() {
    let m = approximate(&anchors_5x3(1, 1), Mode::Unique).unwrap().model;
    // first tail chord runs from (12, N12) to (13, C(15,13))
    assert!((m.eval_f_lw(12.5).unwrap() - (439.0 + 105.0) / 2.0).abs() < 1e-9);
    assert!((m.eval_f_lw(13.5).unwrap() - (105.0 + 15.0) / 2.0).abs() < 1e-12);
    // dual tail starts at n-l = 10
    assert!((m.eval_f_wl(10.5).unwrap() - (2982.0 + 1365.0) / 2.0).abs() < 1e-9);
}

#[test]
fn pipeline_3x5_row() {
    let out = approximate(&anchors_5x3(1, 1), Mode::Unique).unwrap();
    let rounded = out.primal.rounded();
    assert_eq!(
        &rounded[5..=12],
        &[21, 194, 561, 982, 1320, 1434, 1187, 439]
    );
    assert!(rounded[..5].iter().all(|&c| c == 0));
    assert_eq!(&rounded[13..], &[105, 15, 1]);
    assert_eq!(out.primal.coeffs()[15], 1.0);
    let dual = out.dual.rounded();
    assert_eq!(
        &dual[3..=10],
        &[16, 178, 1265, 2775, 4205, 5051, 4811, 2982]
    );
    assert_eq!(out.dual.dims(), Some(dims(3, 5)));
}

#[test]
fn pipeline_5x5_column() {
    let a = KnownAnchors::from_u64(dims(5, 5), 1, 1, 52, 994, 52, 994).unwrap();
    let out = approximate(&a, Mode::Unique).unwrap();
    let r = out.primal.rounded();
    assert_eq!(r[7], 20757);
    assert_eq!(r[8], 55084);
    assert_eq!(r[14], 328434);
    assert_eq!(r[18], 262603);
    assert_eq!(out.primal.rounded(), out.dual.rounded());
}

#[test]
fn interpolation_conditions_hold() {
    for (t, s) in [(1, 1), (2, 1), (1, 3), (4, 2)] {
        let out = approximate(&anchors_5x3(t, s), Mode::Unique).unwrap();
        for r in out.model.interpolation_residuals() {
            assert!(r < 1e-6, "t={t} s={s} residual {r}");
        }
    }
}

#[test]
fn complementary_offsets_are_singular() {
    // m = 7 and s + t = m zero the 2x2 determinant
    let e = approximate(&anchors_5x3(6, 1), Mode::Unique);
    assert!(matches!(e, Err(Error::Singular(_))), "{e:?}");
}

/// Re-derives a bridge row by evaluating the model at unit control vectors:
/// `f(x) + f'(n-x)` is affine in `(a, b, c, d)`.
fn bridge_row_by_evaluation(anchors: &KnownAnchors, x: usize) -> (Vec<f64>, f64) {
    let n = anchors.dims().n();
    let m = anchors.dims().cubic_span() as f64;
    let m3 = m * m * m;
    let at = |controls: [f64; 4]| {
        let model = SplineModel::from_controls(anchors.clone(), Mode::Unique, controls);
        model.eval_f_lw(x as f64).unwrap() + model.eval_f_wl((n - x) as f64).unwrap()
    };
    let base = at([0.0; 4]);
    let mut row = Vec::new();
    for i in 0..4 {
        let mut e = [0.0; 4];
        e[i] = 1.0;
        row.push((at(e) - base) * m3);
    }
    let rhs = (binomial(n, x).to_f64().unwrap() - base) * m3;
    (row, rhs)
}

#[test]
fn general_rows_match_rederivation() {
    let a = anchors_5x3(1, 2);
    let sys = assemble_general_system(&a, 8, 7).unwrap();
    // C(15,8) 7^3 - C(15,5) (12-8)^3 - C(15,3) (8-5)^3
    assert_eq!(
        sys.rhs()[2],
        BigInt::from(6435 * 343 - 3003 * 64 - 455 * 27)
    );
    assert_eq!(sys.rhs()[2], BigInt::from(2_002_728));
    for (row_idx, x) in [(2, 8), (3, 7)] {
        let (row, rhs) = bridge_row_by_evaluation(&a, x);
        for (got, want) in sys.rows()[row_idx].iter().zip(&row) {
            assert!((got.to_f64().unwrap() - want).abs() < 1e-6 * want.abs().max(1.0));
        }
        assert!((sys.rhs()[row_idx].to_f64().unwrap() - rhs).abs() < 1e-6 * rhs.abs());
    }
}

#[test]
fn mirrored_bridge_point_uses_same_template() {
    let a = anchors_5x3(1, 2);
    let s87 = assemble_general_system(&a, 8, 7).unwrap();
    let s78 = assemble_general_system(&a, 7, 8).unwrap();
    assert_eq!(s87.rows()[3], s78.rows()[2]);
    assert_eq!(s87.rhs()[3], s78.rhs()[2]);
}

#[test]
fn general_mode_bridge_identity() {
    let h = hammock_coeffs(dims(5, 5), HammockVariant::BrickA).unwrap();
    let a = KnownAnchors::from_exact(&h, 1, 2).unwrap();
    let (lo, hi) = bridge_interval(&a);
    let mut solved = 0;
    for x1 in (lo + 1) as usize..hi as usize {
        let x2 = 25 - x1;
        if x1 == x2 || !((lo + 1) as usize..hi as usize).contains(&x2) {
            continue;
        }
        match approximate(&a, Mode::General { x1, x2 }) {
            Ok(out) => {
                solved += 1;
                for x in [x1, x2] {
                    let r = out.model.bridge_residual(x).unwrap();
                    assert!(r < 1e-6, "x1={x1} bridge residual {r}");
                }
                let res = out.model.interpolation_residuals();
                assert!(res[0] < 1e-6 && res[1] < 1e-6);
            }
            Err(Error::Singular(_)) => {}
            Err(e) => panic!("x1={x1}: {e}"),
        }
    }
    assert!(solved > 0);
}

#[test]
fn general_mode_rejects_bad_points() {
    let a = anchors_5x3(1, 2);
    assert!(matches!(
        assemble_general_system(&a, 6, 8),
        Err(Error::BridgePoint { x: 6, .. })
    ));
    assert!(matches!(
        assemble_general_system(&a, 12, 8),
        Err(Error::BridgePoint { x: 12, .. })
    ));
    assert!(matches!(
        assemble_general_system(&a, 8, 8),
        Err(Error::BridgePoint { .. })
    ));
    // the general system requires s != t
    assert!(matches!(
        assemble_general_system(&anchors_5x3(1, 1), 8, 7),
        Err(Error::Anchors(_))
    ));
}

#[test]
fn error_bound_3x5() {
    let eb = error_bound(dims(5, 3)).unwrap();
    let m_hand = 4u128.pow(4) * 11u128.pow(11);
    assert_eq!(m_hand, 73_039_787_676_416);
    assert_eq!(eb.m, m_hand.into());
    // independent route through logarithms
    let logged = ((m_hand as f64).ln() + 6f64.ln() - 15.0 * 15f64.ln()).exp() * (6435.0 - 1365.0);
    assert!((eb.per_network - logged).abs() < 1e-9);
    assert!((eb.per_network - 5.074).abs() < 1e-3);
    assert_eq!(eb.cumulative, 2.0 * eb.per_network);
}

#[test]
fn error_bound_square_terms_coincide() {
    let eb = error_bound(dims(5, 5)).unwrap();
    assert_eq!(eb.m, (6u128.pow(6) * 19u128.pow(19)).into());
    assert_eq!(eb.cumulative, 2.0 * eb.per_network);
    assert!(error_bound(dims(3, 1)).is_err());
}

#[test]
fn model_json_roundtrip_and_determinism() {
    let a = anchors_5x3(1, 1);
    let first = approximate(&a, Mode::Unique).unwrap();
    let second = approximate(&a, Mode::Unique).unwrap();
    assert_eq!(first, second);
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(first.primal.coeffs()), bits(second.primal.coeffs()));

    let json = serde_json::to_string(&first.model).unwrap();
    assert!(json.contains(r#""mode":"unique""#));
    assert!(json.contains(r#""n_nw":"439""#));
    let back: SplineModel = serde_json::from_str(&json).unwrap();
    assert_eq!(back, first.model);
    assert_eq!(
        back.controls().map(f64::to_bits),
        first.model.controls().map(f64::to_bits)
    );
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn unique_mode_pins_and_interpolates(
            (l, w) in prop_oneof![Just((3usize, 3usize)), Just((4, 3)), Just((3, 4)), Just((4, 4)), Just((5, 3))],
            t in 1usize..12,
            s in 1usize..12,
        ) {
            let d = dims(l, w);
            let m = d.cubic_span() as usize;
            prop_assume!(t < m && s < m && s + t != m);
            let h = hammock_coeffs(d, HammockVariant::BrickA).unwrap();
            let a = match KnownAnchors::from_exact(&h, t, s) {
                Ok(a) => a,
                Err(_) => return Ok(()),
            };
            let out = approximate(&a, Mode::Unique).unwrap();
            for r in out.model.interpolation_residuals() {
                prop_assert!(r < 1e-6);
            }
            let c = out.primal.coeffs();
            let n = d.n();
            for (k, &ck) in c.iter().enumerate().take(l) {
                prop_assert_eq!(ck, 0.0, "k={}", k);
            }
            prop_assert_eq!(c[l], h.get(l).to_f64().unwrap());
            for (k, &ck) in c.iter().enumerate().skip(n - w) {
                prop_assert_eq!(ck, h.get(k).to_f64().unwrap(), "k={}", k);
            }
        }
    }
}
