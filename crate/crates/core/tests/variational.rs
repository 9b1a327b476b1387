use std::time::Instant;

use uptail::families;
use uptail::variational::{closed_form, solve_f, solve_g, Family, Tightness};
use uptail::{Analysis, SolverConfig};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn triangle_bounds_follow_the_two_branch_formula() {
    let cfg = SolverConfig::default();
    for d in [families::transitive_triangle(), families::cyclic_triangle()] {
        let a = Analysis::new(&d).unwrap();
        for delta in [0.5, 1.0, 3.375, 8.0] {
            let out = a.bounds(delta, &cfg).unwrap();
            let expected = delta.powf(2.0 / 3.0).min(2.0 * delta / 3.0);
            assert!(rel(out.report.upper_bound, expected) < 1e-6, "{delta}: {:?}", out.report);
            assert!(rel(out.report.lower_bound, expected) < 1e-6);
            assert!(rel(out.f.value, 2.0 * delta / 3.0) < 1e-8);
            assert_eq!(closed_form(&d, delta), Some(expected));
        }
    }
}

#[test]
fn stars() {
    let cfg = SolverConfig::default();
    for (d, factor) in [(families::out_star(3), 1.0), (families::in_star(3), 1.0), (families::mixed_star(2, 1), 2.0)] {
        let a = Analysis::new(&d).unwrap();
        for delta in [0.01, 1.0, 1000.0] {
            let out = a.bounds(delta, &cfg).unwrap();
            assert!(rel(out.f.value, factor * delta) < 1e-8, "{delta} {:?}", out.f);
            assert!(rel(out.g.value, factor * delta) < 1e-8, "{delta} {:?}", out.g);
            assert_eq!(out.report.clique_branch, None);
        }
    }
}

#[test]
fn shared_sink_example() {
    let t = Instant::now();
    let a = Analysis::new(&families::shared_sink_construction(3)).unwrap();
    let out = a.bounds(100.0, &SolverConfig::default()).unwrap();
    eprintln!("shared sink {:?} in {:?}", out.report, t.elapsed());
    eprintln!("F {:?}\nG {:?}", out.f, out.g);
    assert!((out.g.argmin.y1 - 0.691).abs() < 0.005);
    assert!((out.f.argmin.y1 - 0.691).abs() < 0.005);
    assert_eq!(out.report.tightness, Tightness::TightCertified);
}

#[test]
fn gap_example() {
    let t = Instant::now();
    let a = Analysis::new(&families::gap_construction(5)).unwrap();
    let cfg = SolverConfig::default();
    let out = a.bounds(1e4, &cfg).unwrap();
    eprintln!("gap {:?} in {:?}", out.report, t.elapsed());
    eprintln!("F {:?}\nG {:?}", out.f, out.g);
    assert!((out.f.value - 7.283).abs() < 0.005);
    assert!((out.g.value - 7.031).abs() < 0.005);
    assert_eq!(out.report.tightness, Tightness::Gap);
    let _ = (solve_f, solve_g, Family::Y1One);
}
