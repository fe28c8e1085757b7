//! Fixed-viewport SVG of the region: the filled nonreal part bounded by CR,
//! CL and their conjugates, plus the real segment `[-1, 1]`.

use std::fmt::Write as _;

use fourcycle::Complex;

use crate::trace::TraceRow;

pub const SIZE: u32 = 800;
/// Half-width of the plotted square `[-EXTENT, EXTENT]^2`.
const EXTENT: f64 = 1.15;

fn px(lam: Complex) -> (f64, f64) {
    let scale = f64::from(SIZE) / (2.0 * EXTENT);
    ((lam.re + EXTENT) * scale, (EXTENT - lam.im) * scale)
}

fn points(path: &[Complex]) -> String {
    let mut s = String::new();
    for (k, &lam) in path.iter().enumerate() {
        let (x, y) = px(lam);
        if k > 0 {
            s.push(' ');
        }
        write!(s, "{x:.3},{y:.3}").unwrap();
    }
    s
}

fn polyline(out: &mut String, path: &[Complex], stroke: &str, width: f64) {
    writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
        points(path)
    )
    .unwrap();
}

/// Renders from trace rows; CR is expected from `1` to `i` and CL from `i`
/// toward `0`, as the trace functions produce them.
pub fn render(rows: &[TraceRow]) -> String {
    let pick = |curve: &str| -> Vec<Complex> {
        rows.iter().filter(|r| r.curve == curve).map(|r| r.lam).collect()
    };
    let cr = pick("CR");
    let cl = pick("CL");

    let mut upper: Vec<Complex> = cr.iter().chain(cl.iter()).copied().collect();
    upper.push(Complex::new(0.0, 0.0));
    let lower: Vec<Complex> = upper.iter().map(|z| z.conj()).collect();

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r##"  <rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##).unwrap();
    let axis = |a: Complex, b: Complex| [a, b];
    polyline(&mut out, &axis(Complex::new(-EXTENT, 0.0), Complex::new(EXTENT, 0.0)), "#bbbbbb", 1.0);
    polyline(&mut out, &axis(Complex::new(0.0, -EXTENT), Complex::new(0.0, EXTENT)), "#bbbbbb", 1.0);
    for half in [&upper, &lower] {
        writeln!(
            out,
            r##"  <polygon points="{}" fill="#9ecae1" stroke="none"/>"##,
            points(half)
        )
        .unwrap();
    }
    for (curve, stroke) in [(&cr, "#d62728"), (&cl, "#1f77b4")] {
        let conj: Vec<Complex> = curve.iter().map(|z| z.conj()).collect();
        polyline(&mut out, curve, stroke, 2.0);
        polyline(&mut out, &conj, stroke, 2.0);
    }
    polyline(
        &mut out,
        &[Complex::new(-1.0, 0.0), Complex::new(1.0, 0.0)],
        "#000000",
        2.0,
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{rows, Curve};
    use fourcycle::Tolerance;

    #[test]
    fn corners_map_to_viewport() {
        assert_eq!(px(Complex::new(-EXTENT, EXTENT)), (0.0, 0.0));
        let (x, y) = px(Complex::new(EXTENT, -EXTENT));
        assert!((x - 800.0).abs() < 1e-9 && (y - 800.0).abs() < 1e-9);
    }

    #[test]
    fn render_is_stable() {
        let r = rows(Curve::Region, 50, &Tolerance::default()).unwrap();
        let a = render(&r);
        assert_eq!(a, render(&r));
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<polygon").count(), 2);
        // both CR endpoints 1 and i appear
        assert!(a.contains("747.826,400.000"));
        assert!(a.contains("400.000,52.174"));
    }
}
