//! Writes the synthetic centre-row fixture: a 6-port network (three x-pol and
//! three y-pol ports in row 1, columns 0..=2) and its port map.
//!
//! Each co-polar 3x3 block is `tau(f) * M` with every row of `M` summing to
//! one, so an equi-phase drive of one polarization sees `S a = tau a` and its
//! TARC is exactly `|tau(f)|`. The cross-polar block has zero row and column
//! sums, so it never leaks into that TARC. `|tau|` in dB is piecewise linear
//! between knots placed on the 0.1 GHz grid, which puts every threshold
//! crossing at a closed-form frequency.
//!
//! Usage: cargo run -p tcva-core --example centre_row_fixture -- <out_dir>

use std::f64::consts::PI;
use std::path::PathBuf;

use num_complex::Complex64;
use tcva_core::geometry::Polarization;
use tcva_core::touchstone::{write_port_map, write_touchstone, DataFormat, NPortNetwork, PortLabel, SMatrix};

const X_KNOTS: &[(f64, f64)] = &[
    (1.0, -1.0),
    (3.0, -6.0),
    (4.6, -10.0),
    (8.0, -14.0),
    (15.0, -13.0),
    (19.8, -10.0),
    (20.0, -6.0),
    (22.0, -3.0),
    (25.0, -2.0),
];

const Y_KNOTS: &[(f64, f64)] = &[
    (1.0, -0.5),
    (2.7, -5.6),
    (2.8, -6.6),
    (6.8, -10.1),
    (6.9, -9.1),
    (7.0, -10.9),
    (12.0, -15.0),
    (18.0, -11.0),
    (19.0, -9.0),
    (21.0, -6.5),
    (21.5, -5.5),
    (25.0, -3.0),
];

const COUPLING: [[f64; 3]; 3] = [[0.6, 0.25, 0.15], [0.25, 0.5, 0.25], [0.15, 0.25, 0.6]];
const CROSS: [[f64; 3]; 3] = [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]];
const CROSS_LEVEL_DB: f64 = -25.0;

fn interp(knots: &[(f64, f64)], f_ghz: f64) -> f64 {
    let k = knots.windows(2).find(|w| f_ghz <= w[1].0).unwrap_or(&knots[knots.len() - 2..]);
    let ((f0, v0), (f1, v1)) = (k[0], k[1]);
    v0 + (v1 - v0) * (f_ghz - f0) / (f1 - f0)
}

fn tau(knots: &[(f64, f64)], f_hz: f64, delay_s: f64) -> Complex64 {
    let mag = 10f64.powf(interp(knots, f_hz / 1e9) / 20.0);
    Complex64::from_polar(mag, -2.0 * PI * f_hz * delay_s)
}

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures/centre_row".into()));
    std::fs::create_dir_all(&out).expect("create output dir");

    let frequencies: Vec<f64> = (0..241).map(|i| (10 + i) as f64 * 1e8).collect();
    let cross = 10f64.powf(CROSS_LEVEL_DB / 20.0);
    let matrices: Vec<SMatrix> = frequencies
        .iter()
        .map(|&f| {
            let tx = tau(X_KNOTS, f, 0.25e-9);
            let ty = tau(Y_KNOTS, f, 0.3e-9);
            let c = Complex64::from_polar(cross, -2.0 * PI * f * 0.4e-9);
            SMatrix::from_fn(6, |i, j| match (i < 3, j < 3) {
                (true, true) => tx * COUPLING[i][j],
                (false, false) => ty * COUPLING[i - 3][j - 3],
                (true, false) => c * CROSS[i][j - 3],
                (false, true) => c * CROSS[j][i - 3],
            })
        })
        .collect();
    let labels = (0..6)
        .map(|p| PortLabel::Element {
            row: 1,
            col: p % 3,
            polarization: if p < 3 { Polarization::X } else { Polarization::Y },
        })
        .collect();
    let network = NPortNetwork::new(frequencies, matrices, 50.0)
        .and_then(|n| n.with_port_labels(labels))
        .expect("fixture network");

    std::fs::write(out.join("centre_row.s6p"), write_touchstone(&network, DataFormat::Ma)).expect("write s6p");
    std::fs::write(out.join("ports.csv"), write_port_map(network.port_labels())).expect("write port map");
    println!("wrote {}", out.display());
}
