//! Deterministic SVG rendering of positionings.
//!
//! Output is restricted to a viewBox and `rect` elements: one per rectangle
//! in index order, then the bounding box outline. Coordinates are exact
//! rationals rendered as decimals; the y axis is flipped so the packing
//! appears in the usual orientation. Identical positionings yield identical
//! bytes.

use packbound_core::{Positioning, Scalar};

/// Fill colors cycled by rectangle index.
const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f",
];

/// Significant digits for coordinates; enough that distinct small rationals
/// stay distinct in the output.
const COORD_DIGITS: usize = 15;

fn num(v: &Scalar) -> String {
    v.decimal(COORD_DIGITS)
}

/// Renders `p` (assumed valid and nonempty) as an SVG document.
pub fn render(p: &Positioning) -> String {
    let spans: Vec<_> = (0..p.len()).map(|i| p.span(i)).collect();
    let min_x = spans.iter().map(|s| s.0.clone()).min().expect("nonempty");
    let max_y = spans.iter().map(|s| s.3.clone()).max().expect("nonempty");
    let m = p.measures().expect("nonempty");

    // 5% margin on each side of the bounding box
    let margin_x = &m.p / &Scalar::from_int(20);
    let margin_y = &m.q / &Scalar::from_int(20);
    let view = format!(
        "{} {} {} {}",
        num(&-&margin_x),
        num(&-&margin_y),
        num(&(&m.p + &(&margin_x + &margin_x))),
        num(&(&m.q + &(&margin_y + &margin_y))),
    );
    let stroke = {
        let larger = if m.p >= m.q { &m.p } else { &m.q };
        num(&(larger / &Scalar::from_int(400)))
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\">\n"
    ));
    for (i, (x0, x1, y0, y1)) in spans.iter().enumerate() {
        let w = x1 - x0;
        let l = y1 - y0;
        out.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#333333\" stroke-width=\"{}\"/>\n",
            num(&(x0 - &min_x)),
            num(&(&max_y - y1)),
            num(&w),
            num(&l),
            PALETTE[i % PALETTE.len()],
            stroke,
        ));
    }
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\"/>\n",
        num(&m.p),
        num(&m.q),
        stroke,
    ));
    out.push_str("</svg>\n");
    out
}
