//! Minimal SVG step-plot of the demand curves.

use std::fmt::Write;

use vessel_demand::profiles::HOURS;
use vessel_demand::scenario::{DemandCurve, HourlyCurve};

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 50.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

fn nice_ceiling(v: f64) -> f64 {
    if v <= 0.0 {
        return 1.0;
    }
    let mag = 10f64.powf(v.log10().floor());
    for step in [1.0, 2.0, 2.5, 5.0, 10.0] {
        if step * mag >= v {
            return step * mag;
        }
    }
    10.0 * mag
}

fn step_path(values: &HourlyCurve, y_max: f64) -> String {
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |h: usize| LEFT + plot_w * h as f64 / HOURS as f64;
    let y = |v: f64| TOP + plot_h * (1.0 - v / y_max);
    let mut d = String::new();
    for (h, &v) in values.iter().enumerate() {
        let cmd = if h == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{:.1},{:.1} L{:.1},{:.1} ", x(h), y(v), x(h + 1), y(v));
    }
    d.trim_end().to_string()
}

pub fn render(curve: &DemandCurve) -> String {
    let y_max = nice_ceiling(curve.peak_kw);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    for i in 0..=5 {
        let v = y_max * i as f64 / 5.0;
        let y = TOP + plot_h * (1.0 - i as f64 / 5.0);
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#ddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{v:.0}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0
        );
    }
    for h in (0..=HOURS).step_by(3) {
        let x = LEFT + plot_w * h as f64 / HOURS as f64;
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">{h}</text>"#,
            TOP + plot_h + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">hour of day</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        s,
        r#"<text transform="translate(16,{:.1}) rotate(-90)" text-anchor="middle">demand (kW)</text>"#,
        TOP + plot_h / 2.0
    );

    let mut legend_y = TOP + 10.0;
    let mut series: Vec<(&str, &HourlyCurve, &str, f64)> = curve
        .per_class
        .iter()
        .enumerate()
        .map(|(i, (class, values))| (class.as_str(), values, PALETTE[i % PALETTE.len()], 1.5))
        .collect();
    series.push(("Total", &curve.total, "#000", 2.5));
    for (label, values, colour, width) in series {
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="{colour}" stroke-width="{width}"><title>{}</title></path>"#,
            step_path(values, y_max),
            escape(label)
        );
        let lx = LEFT + plot_w + 12.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.1}" y1="{legend_y:.1}" x2="{:.1}" y2="{legend_y:.1}" stroke="{colour}" stroke-width="{width}"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 18.0,
            lx + 24.0,
            legend_y + 4.0,
            escape(label)
        );
        legend_y += 18.0;
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn ceiling() {
        assert_eq!(nice_ceiling(0.0), 1.0);
        assert_eq!(nice_ceiling(150.0), 200.0);
        assert_eq!(nice_ceiling(1000.0), 1000.0);
        assert_eq!(nice_ceiling(2300.0), 2500.0);
    }

    #[test]
    fn renders_every_series() {
        let mut v = [0.0; HOURS];
        v[17] = 150.0;
        let curve = DemandCurve {
            per_class: BTreeMap::from([("Search & rescue".to_string(), v)]),
            total: v,
            peak_kw: 150.0,
            peak_slots: vec![17],
        };
        let svg = render(&curve);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains("Search &amp; rescue"));
    }
}
