//! Deterministic SVG output for projections and chord diagrams.

use std::f64::consts::PI;
use std::fmt::Write;

use simcross::chords::{axis_color, ChordDiagram};
use simcross::diagram::Locus;
use simcross::{project, Diagram, KnotEmbedding};

#[derive(Debug, Clone)]
pub struct RenderSpec {
    /// Width and height of one panel in pixels.
    pub size: f64,
    /// Length of the break in an under-strand, as a fraction of the panel size.
    pub gap: f64,
    pub stroke: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            size: 400.0,
            gap: 1.0 / 25.0,
            stroke: 2.0,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.gap > 0.0 && self.gap < 0.25) {
            return Err(format!("gap fraction must lie in (0, 1/4), got {}", self.gap));
        }
        if !(self.size > 0.0 && self.stroke > 0.0) {
            return Err("panel size and stroke width must be positive".into());
        }
        Ok(())
    }
}

fn header(out: &mut String, size: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// Projection of `knot` along the diagram's axis as seen from the positive
/// side of that axis, with each under-strand broken around its crossing.
pub fn projection_svg(knot: &KnotEmbedding, diagram: &Diagram, spec: &RenderSpec) -> String {
    let flip = diagram.axis.viewer_orientation() as f64;
    let pts: Vec<(f64, f64)> = knot
        .vertices()
        .iter()
        .map(|p| {
            let q = project(diagram.axis, p);
            (flip * q.u.to_f64(), q.v.to_f64())
        })
        .collect();
    let n = pts.len();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let margin = 0.08 * spec.size;
    let extent = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
    let scale = (spec.size - 2.0 * margin) / extent;
    let cx = (lo_x + hi_x) / 2.0;
    let cy = (lo_y + hi_y) / 2.0;
    let to_screen = |(x, y): (f64, f64)| (spec.size / 2.0 + (x - cx) * scale, spec.size / 2.0 - (y - cy) * scale);

    // Parameter intervals to leave out on each segment.
    let screen: Vec<(f64, f64)> = pts.iter().map(|&p| to_screen(p)).collect();
    let half_t = |i: usize| {
        let (a, b) = (screen[i], screen[(i + 1) % n]);
        let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
        (spec.gap * spec.size / 2.0 / len).min(0.45)
    };
    let mut cuts: Vec<Vec<(f64, f64)>> = vec![Vec::new(); n];
    for c in &diagram.crossings {
        let Locus { segment, t } = &c.under;
        let t = t.to_f64();
        if c.under.is_vertex() {
            let prev = (segment + n - 1) % n;
            cuts[*segment].push((0.0, half_t(*segment)));
            cuts[prev].push((1.0 - half_t(prev), 1.0));
        } else {
            let h = half_t(*segment);
            cuts[*segment].push(((t - h).max(0.0), (t + h).min(1.0)));
        }
    }

    let mut out = String::new();
    header(&mut out, spec.size);
    let (ox, oy) = to_screen((0.0, 0.0));
    let _ = writeln!(
        out,
        r#"<g stroke="lightgray" stroke-width="1"><line x1="0" y1="{oy:.3}" x2="{:.0}" y2="{oy:.3}"/><line x1="{ox:.3}" y1="0" x2="{ox:.3}" y2="{:.0}"/></g>"#,
        spec.size, spec.size
    );
    let _ = writeln!(
        out,
        r#"<g stroke="black" stroke-width="{:.3}" stroke-linecap="butt" stroke-linejoin="round" fill="none">"#,
        spec.stroke
    );
    for (i, segment_cuts) in cuts.iter_mut().enumerate() {
        let (a, b) = (screen[i], screen[(i + 1) % n]);
        segment_cuts.sort_by(|p, q| p.0.total_cmp(&q.0));
        let mut from = 0.0;
        let mut pieces = Vec::new();
        for &(s, e) in segment_cuts.iter() {
            if s > from {
                pieces.push((from, s));
            }
            from = from.max(e);
        }
        if from < 1.0 {
            pieces.push((from, 1.0));
        }
        for (s, e) in pieces {
            let at = |t: f64| (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1));
            let (p, q) = (at(s), at(e));
            let _ = writeln!(
                out,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                p.0, p.1, q.0, q.1
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<text x="10" y="20" font-family="sans-serif" font-size="14">{} projection: {} crossings</text>"#,
        diagram.axis, diagram.crossing_count
    );
    out.push_str("</svg>\n");
    out
}

fn circle_point(l: &Locus, n: usize, center: f64, radius: f64) -> (f64, f64) {
    let pos = l.segment as f64 + l.t.to_f64();
    let angle = PI / 2.0 - 2.0 * PI * pos / n as f64;
    (center + radius * angle.cos(), center - radius * angle.sin())
}

/// Chord diagram on a circle whose points are polygon loci in vertex order;
/// vertex indices are written around the circle.
pub fn chord_svg(cd: &ChordDiagram, spec: &RenderSpec) -> String {
    let n = cd.vertex_count;
    let center = spec.size / 2.0;
    let radius = spec.size * 0.38;
    let mut out = String::new();
    header(&mut out, spec.size);
    let _ = writeln!(
        out,
        r#"<circle cx="{center:.3}" cy="{center:.3}" r="{radius:.3}" stroke="black" stroke-width="{:.3}" fill="none"/>"#,
        spec.stroke
    );
    for i in 0..n {
        let v = Locus::vertex(i);
        let (x, y) = circle_point(&v, n, center, radius);
        let (lx, ly) = circle_point(&v, n, center, radius + 16.0);
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="10" text-anchor="middle" dominant-baseline="middle">{i}</text>"#
        );
    }
    for c in &cd.chords {
        let (a, b) = (
            circle_point(&c.a, n, center, radius),
            circle_point(&c.b, n, center, radius),
        );
        let width = if c.central { 2.0 * spec.stroke } else { spec.stroke };
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="{width:.3}"/>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            axis_color(c.axis)
        );
    }
    out.push_str("</svg>\n");
    out
}
