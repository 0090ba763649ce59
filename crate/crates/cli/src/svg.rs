//! SVG figures of polygon documents.

use std::fmt::Write;

use crate::document::{PolygonDocument, SideShape};
use crate::report::C;

const SIZE: f64 = 1000.0;
const RADIUS: f64 = 450.0;

/// Disk coordinates to the viewBox, y pointing up.
fn screen([x, y]: C) -> (f64, f64) {
    (SIZE / 2.0 + RADIUS * x, SIZE / 2.0 - RADIUS * y)
}

fn side_midpoint(doc: &PolygonDocument, label: usize) -> (f64, f64) {
    let s = &doc.sides[label - 1];
    let (a, b) = (screen(doc.vertices[s.start].z), screen(doc.vertices[s.end].z));
    match s.shape {
        SideShape::Diameter => ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0),
        SideShape::Circle { center, radius } => {
            let c = screen(center);
            let r = RADIUS * radius;
            let (mx, my) = ((a.0 + b.0) / 2.0 - c.0, (a.1 + b.1) / 2.0 - c.1);
            let n = mx.hypot(my);
            (c.0 + r * mx / n, c.1 + r * my / n)
        }
    }
}

/// Render the unit circle, one path per side, one marker and label per
/// vertex, and an arrow per side pairing.
pub fn render_svg(doc: &PolygonDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(s, "<title>{} p={}</title>", doc.case, doc.p);
    let _ = writeln!(
        s,
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><polygon points="0,0 10,5 0,10" fill="#b03030"/></marker></defs>"##
    );
    let _ = writeln!(
        s,
        r##"<circle class="boundary" cx="{:.3}" cy="{:.3}" r="{RADIUS:.3}" fill="none" stroke="#888" stroke-width="1.5"/>"##,
        SIZE / 2.0,
        SIZE / 2.0
    );
    for side in &doc.sides {
        let a = screen(doc.vertices[side.start].z);
        let b = screen(doc.vertices[side.end].z);
        let d = match side.shape {
            SideShape::Diameter => format!("M {:.3} {:.3} L {:.3} {:.3}", a.0, a.1, b.0, b.1),
            SideShape::Circle { center, radius } => {
                let c = screen(center);
                let cross = (a.0 - c.0) * (b.1 - c.1) - (a.1 - c.1) * (b.0 - c.0);
                let sweep = u8::from(cross > 0.0);
                let r = RADIUS * radius;
                format!("M {:.3} {:.3} A {r:.3} {r:.3} 0 0 {sweep} {:.3} {:.3}", a.0, a.1, b.0, b.1)
            }
        };
        let _ = writeln!(s, r##"<path class="side" id="l{}" d="{d}" fill="none" stroke="#1f3f8f" stroke-width="2.5"/>"##, side.label);
    }
    for pr in &doc.pairings {
        let a = side_midpoint(doc, pr.from_side);
        let b = side_midpoint(doc, pr.to_side);
        // Pull the arrow ends toward the centre so they sit inside the polygon.
        let pull = |(x, y): (f64, f64)| (x + 0.12 * (SIZE / 2.0 - x), y + 0.12 * (SIZE / 2.0 - y));
        let (a, b) = (pull(a), pull(b));
        let _ = writeln!(
            s,
            r##"<line class="pairing" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#b03030" stroke-width="1.2" stroke-dasharray="6 4" marker-end="url(#arrow)"/>"##,
            a.0, a.1, b.0, b.1
        );
        let _ = writeln!(
            s,
            r##"<text class="pairing-label" x="{:.3}" y="{:.3}" font-size="18" fill="#b03030">{}</text>"##,
            (a.0 + b.0) / 2.0,
            (a.1 + b.1) / 2.0,
            pr.name
        );
    }
    for &l in &doc.boundary {
        let v = &doc.vertices[l];
        let (x, y) = screen(v.z);
        let fill = if v.ideal { "#ffffff" } else { "#000000" };
        let _ = writeln!(
            s,
            r##"<circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="5" fill="{fill}" stroke="#000" stroke-width="1.5"/>"##
        );
        let (dx, dy) = (x - SIZE / 2.0, y - SIZE / 2.0);
        let n = dx.hypot(dy).max(1e-9);
        let _ = writeln!(
            s,
            r#"<text class="vertex-label" x="{:.3}" y="{:.3}" font-size="20" text-anchor="middle" dominant-baseline="middle">x{}</text>"#,
            x + 24.0 * dx / n,
            y + 24.0 * dy / n,
            v.label
        );
    }
    s.push_str("</svg>\n");
    s
}
