//! SVG node plots: the region outline and one marker per node, shaped by node class.

use std::fmt::Write;

use crate::cubature_rules::CubatureRule;
use crate::index_sets::NodeClass;

const MARGIN: f64 = 0.08;

fn marker(class: NodeClass, x: f64, y: f64, r: f64) -> String {
    match class {
        NodeClass::Interior => format!(r#"<circle class="interior" cx="{x:.3}" cy="{y:.3}" r="{r:.3}"/>"#),
        NodeClass::Edge => {
            let s = 1.8 * r;
            format!(r#"<rect class="edge" x="{:.3}" y="{:.3}" width="{s:.3}" height="{s:.3}"/>"#, x - s / 2.0, y - s / 2.0)
        }
        NodeClass::Vertex => {
            let h = 1.3 * r;
            format!(
                r#"<polygon class="vertex" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}"/>"#,
                x,
                y - 1.3 * h,
                x + h,
                y + 0.8 * h,
                x - h,
                y + 0.8 * h
            )
        }
    }
}

/// A square SVG document of side `size` pixels.
pub fn render_rule(rule: &CubatureRule, size: u32) -> String {
    let line = rule.region.outline();
    let pts: Vec<[f64; 2]> = rule.nodes.iter().map(|n| n.point.plane_f64()).collect();
    let all = line.iter().chain(&pts);
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in all {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let px = size as f64;
    let scale = px * (1.0 - 2.0 * MARGIN) / span;
    let cx = (lo[0] + hi[0]) / 2.0;
    let cy = (lo[1] + hi[1]) / 2.0;
    let map = |p: [f64; 2]| (px / 2.0 + (p[0] - cx) * scale, px / 2.0 - (p[1] - cy) * scale);
    let r = (px / 160.0).max(1.5);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, "<title>{} n={}</title>", rule.id, rule.n);
    let _ = writeln!(
        s,
        "<style>.outline{{fill:none;stroke:#333;stroke-width:1}} .interior{{fill:#1f77b4}} .edge{{fill:#ff7f0e}} .vertex{{fill:#d62728}}</style>"
    );
    let path: Vec<String> = line
        .iter()
        .map(|p| {
            let (x, y) = map(*p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(s, r#"<polygon class="outline" points="{}"/>"#, path.join(" "));
    for (node, p) in rule.nodes.iter().zip(&pts) {
        let (x, y) = map(*p);
        let _ = writeln!(s, "{}", marker(node.class, x, y, r));
    }
    s.push_str("</svg>\n");
    s
}
