//! Standalone SVG line plots (800×500, inline polylines).

use std::fmt::Write;

use momentpoly::confluence::SweepResult;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

pub struct Series<'a> {
    pub label: String,
    pub color: &'a str,
    pub width: f64,
    pub values: &'a [f64],
}

/// 1, 2 or 5 times a power of ten, about `span / 5`.
fn tick_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let m = raw / mag;
    mag * if m < 1.5 {
        1.0
    } else if m < 3.5 {
        2.0
    } else if m < 7.5 {
        5.0
    } else {
        10.0
    }
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = tick_step(hi - lo);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn label(v: f64) -> String {
    let s = format!("{:.6}", if v.abs() < 1e-12 { 0.0 } else { v });
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn plot(title: &str, xs: &[f64], series: &[Series]) -> String {
    let finite = |v: &&f64| v.is_finite();
    let (mut ylo, mut yhi) = series
        .iter()
        .flat_map(|s| s.values.iter().filter(finite))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if !(ylo.is_finite() && yhi.is_finite()) {
        (ylo, yhi) = (-1.0, 1.0);
    }
    if yhi - ylo < 1e-300 {
        (ylo, yhi) = (ylo - 1.0, yhi + 1.0);
    }
    let pad = 0.05 * (yhi - ylo);
    let (ylo, yhi) = (ylo - pad, yhi + pad);
    let (xlo, xhi) = (xs.first().copied().unwrap_or(0.0), xs.last().copied().unwrap_or(1.0));
    let xhi = if xhi > xlo { xhi } else { xlo + 1.0 };
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let px = |x: f64| LEFT + (x - xlo) / (xhi - xlo) * pw;
    let py = |y: f64| TOP + (yhi - y) / (yhi - ylo) * ph;

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(w, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(w, r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#, LEFT + pw / 2.0, escape(title));
    let _ = writeln!(w, r##"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>"##);
    for t in ticks(xlo, xhi) {
        let x = px(t);
        let _ = writeln!(w, r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#e5e5e5"/>"##, TOP + ph);
        let _ = writeln!(w, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, TOP + ph + 18.0, label(t));
    }
    for t in ticks(ylo, yhi) {
        let y = py(t);
        let _ = writeln!(w, r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#e5e5e5"/>"##, LEFT + pw);
        let _ = writeln!(w, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, LEFT - 6.0, y + 4.0, label(t));
    }
    if ylo < 0.0 && yhi > 0.0 {
        let y = py(0.0);
        let _ = writeln!(w, r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#999"/>"##, LEFT + pw);
    }
    let _ = writeln!(w, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">x</text>"#, LEFT + pw / 2.0, HEIGHT - 12.0);

    for s in series {
        let points: Vec<String> = xs
            .iter()
            .zip(s.values)
            .filter(|(_, v)| v.is_finite())
            .map(|(&x, &v)| format!("{:.2},{:.2}", px(x), py(v)))
            .collect();
        let _ = writeln!(
            w,
            r#"<polyline fill="none" stroke="{}" stroke-width="{}" points="{}"/>"#,
            s.color,
            s.width,
            points.join(" ")
        );
    }
    for (i, s) in series.iter().enumerate() {
        let y = TOP + 14.0 + 20.0 * i as f64;
        let x = LEFT + pw + 14.0;
        let _ = writeln!(
            w,
            r#"<line x1="{x:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{}" stroke-width="{}"/>"#,
            x + 24.0,
            s.color,
            s.width
        );
        let _ = writeln!(w, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 30.0, y + 4.0, escape(&s.label));
    }
    out.push_str("</svg>\n");
    out
}

/// Classical curve in black, one colored curve per parameter.
pub fn sweep(r: &SweepResult) -> String {
    let mut series = vec![Series {
        label: "classical".into(),
        color: "#000000",
        width: 2.5,
        values: &r.classical_values,
    }];
    for (i, row) in r.rows.iter().enumerate() {
        let p = num::ToPrimitive::to_f64(&row.param).unwrap_or(f64::NAN);
        series.push(Series {
            label: format!("{} = {}", r.kind, label(p)),
            color: PALETTE[i % PALETTE.len()],
            width: 1.5,
            values: &row.values,
        });
    }
    let title = format!("{} n = {} ({} sweep, normalized at {})", r.spec.family, r.spec.n, r.kind, r.normalization_tag());
    plot(&title, &r.xs, &series)
}
