//! Touchstone write/parse round trips and malformed-input diagnostics.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use proptest::prelude::*;
use tcva_core::touchstone::{parse_touchstone, write_touchstone, DataFormat, NPortNetwork, SMatrix, TouchstoneError};

const FORMATS: [DataFormat; 3] = [DataFormat::Ri, DataFormat::Ma, DataFormat::Db];
const UNITS: [(&str, i32); 4] = [("Hz", 0), ("kHz", 3), ("MHz", 6), ("GHz", 9)];

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * a.norm().max(b.norm()) + 1e-12
}

fn assert_same(a: &NPortNetwork, b: &NPortNetwork) {
    assert_eq!(a.ports(), b.ports());
    assert_eq!(a.frequencies().len(), b.frequencies().len());
    for (fa, fb) in a.frequencies().iter().zip(b.frequencies()) {
        assert!((fa - fb).abs() <= 1e-12 * fa, "{fa} vs {fb}");
    }
    for (ma, mb) in a.matrices().iter().zip(b.matrices()) {
        for (za, zb) in ma.entries().iter().zip(mb.entries()) {
            assert!(close(*za, *zb), "{za} vs {zb}");
        }
    }
    assert_eq!(a.z0(), b.z0());
}

/// Independent writer with a selectable frequency unit, used to exercise the
/// parser on files the library writer never produces.
fn render(n: &NPortNetwork, format: DataFormat, unit: &str, exp: i32) -> String {
    let mut s = format!("! test file\n# {unit} S {} R {}\n", format.keyword(), n.z0());
    let ports = n.ports();
    for (f, m) in n.frequencies().iter().zip(n.matrices()) {
        let _ = write!(s, "{}", f / 10f64.powi(exp));
        let order: Vec<(usize, usize)> = if ports == 2 {
            vec![(0, 0), (1, 0), (0, 1), (1, 1)]
        } else {
            (0..ports).flat_map(|i| (0..ports).map(move |j| (i, j))).collect()
        };
        for (k, (i, j)) in order.into_iter().enumerate() {
            if ports > 2 && k % ports == 0 && k > 0 {
                s.push('\n');
            }
            let z = m[(i, j)];
            let (a, b) = match format {
                DataFormat::Ri => (z.re, z.im),
                DataFormat::Ma => (z.norm(), z.im.atan2(z.re).to_degrees()),
                DataFormat::Db => (20.0 * z.norm().log10(), z.im.atan2(z.re).to_degrees()),
            };
            let _ = write!(s, " {a:e} {b:e}");
        }
        s.push('\n');
    }
    s
}

fn arb_network() -> impl Strategy<Value = NPortNetwork> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(ports, points)| {
        (
            proptest::collection::vec(1e3f64..1e8, points),
            proptest::collection::vec((1e-6f64..1.0, -PI..PI), points * ports * ports),
            prop_oneof![Just(50.0), Just(75.0), 1.0f64..500.0],
        )
            .prop_map(move |(steps, vals, z0)| {
                let mut f = 1e6;
                let freqs: Vec<f64> = steps
                    .iter()
                    .map(|d| {
                        f += d.round();
                        f
                    })
                    .collect();
                let mats = (0..points)
                    .map(|k| {
                        SMatrix::from_fn(ports, |i, j| {
                            let (m, p) = vals[(k * ports + i) * ports + j];
                            Complex64::from_polar(m, p)
                        })
                    })
                    .collect();
                NPortNetwork::new(freqs, mats, z0).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn parse_of_write_is_identity(n in arb_network(), fmt in 0usize..3) {
        let bytes = write_touchstone(&n, FORMATS[fmt]);
        let back = parse_touchstone(&bytes, n.ports()).unwrap();
        assert_same(&n, &back);
    }

    #[test]
    fn every_unit_and_format_parses(n in arb_network(), fmt in 0usize..3, unit in 0usize..4) {
        let (name, exp) = UNITS[unit];
        let text = render(&n, FORMATS[fmt], name, exp);
        let back = parse_touchstone(text.as_bytes(), n.ports()).unwrap();
        assert_same(&n, &back);
    }
}

#[test]
fn two_port_column_order() {
    let text = "# GHZ S RI R 50\n1.5 0.1 0 0.2 0 0.3 0 0.4 0\n";
    let n = parse_touchstone(text.as_bytes(), 2).unwrap();
    let m = &n.matrices()[0];
    assert_eq!(m[(0, 0)].re, 0.1);
    assert_eq!(m[(1, 0)].re, 0.2, "second pair is S21");
    assert_eq!(m[(0, 1)].re, 0.3, "third pair is S12");
    assert_eq!(m[(1, 1)].re, 0.4);
    assert_eq!(n.frequencies()[0], 1.5e9);
    let again = parse_touchstone(&write_touchstone(&n, DataFormat::Ri), 2).unwrap();
    assert_eq!(again.matrices()[0], *m);
}

#[test]
fn defaults_are_ghz_ma_50() {
    let n = parse_touchstone(b"#\n2 0.5 90\n", 1).unwrap();
    assert_eq!(n.frequencies(), &[2e9]);
    assert_eq!(n.z0(), 50.0);
    assert!((n.matrices()[0][(0, 0)] - Complex64::new(0.0, 0.5)).norm() < 1e-15);
}

#[test]
fn malformed_files_are_rejected_with_line_numbers() {
    let cases: &[(&str, usize, &str)] = &[
        ("# GHZ Z RI R 50\n1 0 0\n", 1, "line 1"),
        ("# GHZ S XX R 50\n1 0 0\n", 1, "line 1"),
        ("# GHZ S RI R 50\n1 0.1 0\n2 0.1\n", 1, "line 3"),
        ("# GHZ S RI R 50\n2 0.1 0\n1 0.1 0\n", 1, "line 3"),
        ("# GHZ S RI R 50\n1 0.1 abc\n", 1, "line 2"),
        ("# GHZ S RI R 50\n1 0.1 0 0.2 0 0.3 0\n", 2, "line 2"),
        ("# GHZ S RI R -5\n1 0.1 0\n", 1, "line 1"),
    ];
    for (text, ports, needle) in cases {
        let err = parse_touchstone(text.as_bytes(), *ports).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(needle), "`{msg}` should mention {needle}");
    }
    assert!(matches!(parse_touchstone(b"# GHZ Y RI\n1 0 0\n", 1).unwrap_err(), TouchstoneError::Unsupported { .. }));
    assert!(matches!(parse_touchstone(&[0xff, 0xfe, 0x00], 1).unwrap_err(), TouchstoneError::Encoding));
}

#[test]
fn wrapped_rows_for_larger_networks() {
    let n = NPortNetwork::new(
        vec![1e9],
        vec![SMatrix::from_fn(6, |i, j| Complex64::new(i as f64 * 0.1, j as f64 * 0.01))],
        50.0,
    )
    .unwrap();
    let text = String::from_utf8(write_touchstone(&n, DataFormat::Ri)).unwrap();
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with(['!', '#'])).collect();
    // Six rows of six pairs, each wrapped after four pairs.
    assert_eq!(data.len(), 12);
    assert_same(&n, &parse_touchstone(text.as_bytes(), 6).unwrap());
}
