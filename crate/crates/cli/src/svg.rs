//! Static SVG rendering of a partition.

use std::fmt::Write;

use num_traits::ToPrimitive;

use stripcut::decomposition::Complex;
use stripcut::polygon_model::{DecodedCut, Point, Region};
use stripcut::reporting::Cell;
use stripcut::Rational;

const WIDTH: f64 = 800.0;
const PAD: f64 = 20.0;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn x(&self, x: &Rational) -> f64 {
        PAD + (f(x) - self.x0) * self.scale
    }

    fn y(&self, y: &Rational) -> f64 {
        PAD + (self.y1 - f(y)) * self.scale
    }

    fn pt(&self, p: &Point) -> String {
        format!("{:.3},{:.3}", self.x(&p.x), self.y(&p.y))
    }
}

fn hue(piece: usize) -> u32 {
    // golden-angle spacing keeps neighbouring labels apart
    ((piece as f64 * 137.507_764) % 360.0) as u32
}

pub fn render(region: &Region, c: &Complex, cells: &[Cell], cuts: &[DecodedCut]) -> String {
    let pts: Vec<&Point> = c.boundary.iter().flat_map(|s| [&s.p, &s.q]).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &pts {
        let (x, y) = (f(&p.x), f(&p.y));
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let fr = Frame { x0, y1, scale: (WIDTH - 2.0 * PAD) / span };
    let w = 2.0 * PAD + (x1 - x0) * fr.scale;
    let h = 2.0 * PAD + (y1 - y0) * fr.scale;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let _ = writeln!(s, r#"<g id="pieces" stroke="none" fill-opacity="0.45">"#);
    for cell in cells {
        let Some(piece) = cell.piece else { continue };
        let (bl, tl) = c.span_at(cell.trap, &cell.x_lo);
        let (br, tr) = c.span_at(cell.trap, &cell.x_hi);
        let corners = [
            Point::new(cell.x_lo.clone(), bl),
            Point::new(cell.x_hi.clone(), br),
            Point::new(cell.x_hi.clone(), tr),
            Point::new(cell.x_lo.clone(), tl),
        ];
        let path: Vec<String> = corners.iter().map(|p| fr.pt(p)).collect();
        let _ = writeln!(s, r#"<polygon points="{}" fill="hsl({}, 70%, 55%)"/>"#, path.join(" "), hue(piece));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g id="outline" fill="none" stroke="black" stroke-width="1.5">"#);
    match region {
        Region::Polygon(p) => {
            let path: Vec<String> = p.vertices.iter().map(|v| fr.pt(v)).collect();
            let _ = writeln!(s, r#"<polygon points="{}"/>"#, path.join(" "));
        }
        Region::Gluing(_) => {
            for e in &c.boundary {
                let _ = writeln!(s, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, fr.x(&e.p.x), fr.y(&e.p.y), fr.x(&e.q.x), fr.y(&e.q.y));
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g id="cuts" stroke="crimson" stroke-width="1">"#);
    for cut in cuts {
        let x = fr.x(&cut.x);
        let _ = writeln!(s, r#"<line x1="{x:.3}" y1="{:.3}" x2="{x:.3}" y2="{:.3}"/>"#, fr.y(&cut.y_lo), fr.y(&cut.y_hi));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
