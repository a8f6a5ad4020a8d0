//! Why smaller multiplicity of the larger eigenvalue means more trees:
//! with order, size, and degree spread fixed, both the log-complexity
//! profile and the trace-cube profile fall strictly as that multiplicity
//! grows.
//!
//! ```bash
//! cargo run --example multiplicity_curves
//! ```

use treelab::extremal::{log_ratio_gap, multiplicity_curves, MomentCurve};

fn main() {
    // moment data of the 9-vertex 4-regular class: n = 8, Tr L = 36, Tr L^2 = 180
    let (n, r, s) = (8usize, 36i64, 180i64);
    let curve = MomentCurve::new(n, r, s).unwrap();
    println!("two-eigenvalue curve for n = {n}, r = {r}, s = {s} (spread z = {}):", curve.spread());
    println!(
        "{:>6} {:>10} {:>10} {:>14} {:>14}",
        "x", "f(x)", "f'(x)", "c(x)", "c'(x)"
    );
    for p in multiplicity_curves(n, r, s, 8).unwrap() {
        println!(
            "{:>6.3} {:>10.5} {:>10.5} {:>14.1} {:>14.1}",
            p.x, p.log_complexity, p.log_complexity_deriv, p.trace_cube, p.trace_cube_deriv
        );
    }

    // the integer point x = 4 is the rook's graph: e^f / 9 = its tree count
    let f4 = curve.log_complexity(4.0).unwrap();
    println!("\nat x = 4: e^f / 9 = {:.1} (the rook's graph count)", f4.exp() / 9.0);
    let (x1, x2) = curve.split(4.0);
    println!("eigenvalue split at x = 4: ({x1}, {x2})");

    // the derivative in the gap-ratio variable never turns positive
    println!("\nlog-complexity derivative in the ratio variable t = (x1-x2)/x2:");
    for t in [0.01, 0.1, 1.0, 10.0, 100.0] {
        println!("  g({t:>6}) = {:+.6}", log_ratio_gap(t));
    }
}
