//! Ladder drawings as a horizontal strip.
//!
//! Vertex `i` sits in column `i`: the two endpoints on the centre line, the
//! others on the top rail (`R`) or bottom rail (`L`). Each triangle after the
//! first brings in exactly one new vertex, so the strip reads left to right
//! in ladder order and each run shows up as a fan around its pivot.

use std::fmt::Write;

use farey_core::{Label, Ladder};

const STEP: f64 = 56.0;
const MARGIN: f64 = 48.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 160.0;

fn point(l: &Ladder, i: usize) -> (f64, f64) {
    let y = match l.rail(i) {
        Some(Label::R) => TOP,
        Some(Label::L) => BOTTOM,
        None => (TOP + BOTTOM) / 2.0,
    };
    (MARGIN + STEP * i as f64, y)
}

fn pivot_indices(l: &Ladder) -> Vec<usize> {
    let pivots = l.pivots();
    l.vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| pivots.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// SVG document: one `<polygon>` per triangle, one `<circle>` per pivot.
/// Endpoints get square markers, so circles count pivots only.
pub fn svg(l: &Ladder) -> String {
    let n = l.vertices().len();
    let width = 2.0 * MARGIN + STEP * (n - 1) as f64;
    let height = BOTTOM + 48.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let ty: Vec<String> = l.ladder_type().iter().map(|a| a.to_string()).collect();
    let _ = writeln!(
        s,
        "<title>ladder {} to {}, type ({})</title>",
        l.source(),
        l.target(),
        ty.join(",")
    );
    let _ = writeln!(s, r##"<g stroke="#333" stroke-width="1.2" stroke-linejoin="round">"##);
    for (c, label) in l.corners().iter().zip(l.labels()) {
        let pts: Vec<String> = c
            .iter()
            .map(|&i| {
                let (x, y) = point(l, i);
                format!("{x},{y}")
            })
            .collect();
        let (fill, class) = match label {
            Label::L => ("#cfe0f3", "L"),
            Label::R => ("#f6dcc2", "R"),
        };
        let _ = writeln!(s, r#"<polygon class="{class}" fill="{fill}" points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");

    for i in pivot_indices(l) {
        let (x, y) = point(l, i);
        let _ = writeln!(s, r##"<circle class="pivot" cx="{x}" cy="{y}" r="5" fill="#b00"/>"##);
    }
    for i in [0, l.target_index()] {
        let (x, y) = point(l, i);
        let _ = writeln!(
            s,
            r##"<rect class="endpoint" x="{}" y="{}" width="8" height="8" fill="#111"/>"##,
            x - 4.0,
            y - 4.0
        );
    }

    let _ = writeln!(s, r#"<g font-family="monospace" font-size="11" text-anchor="middle">"#);
    for (i, v) in l.vertices().iter().enumerate() {
        let (x, y) = point(l, i);
        let dy = match l.rail(i) {
            Some(Label::R) => -12.0,
            Some(Label::L) => 22.0,
            None => -12.0,
        };
        let _ = writeln!(s, r#"<text x="{x}" y="{}">{v}</text>"#, y + dy);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

/// Plain-text strip: top rail, endpoints, bottom rail, then one `L`/`R`
/// per triangle under the vertex it introduces. Pivots carry a `*`.
pub fn ascii(l: &Ladder) -> String {
    let verts = l.vertices();
    let pivots = pivot_indices(l);
    let names: Vec<String> = verts
        .iter()
        .enumerate()
        .map(|(i, v)| if pivots.contains(&i) { format!("{v}*") } else { v.to_string() })
        .collect();
    let width = names.iter().map(String::len).max().unwrap_or(1) + 1;

    let mut rows = [String::new(), String::new(), String::new(), String::new()];
    for (i, name) in names.iter().enumerate() {
        let row = match l.rail(i) {
            Some(Label::R) => 0,
            None => 1,
            Some(Label::L) => 2,
        };
        for (r, line) in rows.iter_mut().take(3).enumerate() {
            let cell = if r == row { name.as_str() } else { "" };
            let _ = write!(line, "{cell:<width$}");
        }
        // triangle k brings in vertex k + 2 (the first one also brings 0 and 1)
        let mark = match i.checked_sub(2).and_then(|k| l.labels().get(k)) {
            Some(Label::L) => "L",
            Some(Label::R) => "R",
            None => "",
        };
        let _ = write!(rows[3], "{mark:<width$}");
    }
    let mut out = String::new();
    for line in rows {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
