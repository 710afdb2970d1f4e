//! SVG 1.1 renderings.
//!
//! Vertex `v_{i,j}` (or cell `(i,j)`) sits at `(40 j, 40 i)`. The viewBox of
//! an order-`n` picture is `-20 -20 40(n+2) 40(n+2)` for every class.

use std::fmt::Write;

use crate::grid::{Edge, GridGraph, Vertex};
use crate::object::Object;

const UNIT: i64 = 40;

fn header(n: usize) -> String {
    let side = UNIT * (n as i64 + 2);
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{side}\" height=\"{side}\" \
         viewBox=\"{o} {o} {side} {side}\">\n",
        o = -UNIT / 2
    )
}

fn pos(v: Vertex) -> (i64, i64) {
    (v.col as i64 * UNIT, v.row as i64 * UNIT)
}

fn text_grid(out: &mut String, rows: &[Vec<i64>], offset: usize) {
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let (cx, cy) = pos(Vertex::new(i + offset, j + offset));
            let _ = writeln!(
                out,
                "<text x=\"{cx}\" y=\"{cy}\" text-anchor=\"middle\" dominant-baseline=\"central\" \
                 font-family=\"monospace\" font-size=\"16\">{x}</text>"
            );
        }
    }
}

fn dots(out: &mut String, g: &GridGraph) {
    for v in g.vertices() {
        let (x, y) = pos(v);
        let _ = writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"black\"/>");
    }
}

fn segment(out: &mut String, e: Edge, style: &str) {
    let ((x1, y1), (x2, y2)) = (pos(e.first()), pos(e.second()));
    let _ = writeln!(out, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {style}/>");
}

/// One-sided arrowhead at the midpoint of the edge, pointing at `head`.
fn half_arrow(out: &mut String, tail: Vertex, head: Vertex) {
    let ((tx, ty), (hx, hy)) = (pos(tail), pos(head));
    let (dx, dy) = ((hx - tx).signum(), (hy - ty).signum());
    let (mx, my) = ((tx + hx) / 2, (ty + hy) / 2);
    let (px, py) = (mx + 6 * dx, my + 6 * dy);
    // barb on the left of the direction of travel
    let (bx, by) = (px - 10 * dx + 6 * dy, py - 10 * dy - 6 * dx);
    let _ = writeln!(
        out,
        "<polyline points=\"{bx},{by} {px},{py} {mx},{my}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"
    );
}

pub fn render_svg(x: &Object) -> String {
    let n = x.n();
    let mut out = header(n);
    let g = GridGraph::square(n);
    match x {
        Object::Matrix(m) => text_grid(&mut out, &m.matrix().rows(), 1),
        Object::CornerSum(c) => text_grid(&mut out, &c.cells(), 0),
        Object::Height(h) => text_grid(&mut out, &h.cells(), 0),
        Object::Fpl(f) => {
            for e in f.edges() {
                segment(&mut out, e, "stroke=\"black\" stroke-width=\"4\"");
            }
            dots(&mut out, &g);
        }
        Object::Vertex(v) => {
            for e in g.edges() {
                segment(&mut out, e, "stroke=\"gray\" stroke-width=\"1\"");
            }
            for (t, h) in v.arrows() {
                half_arrow(&mut out, t, h);
            }
            dots(&mut out, &g);
        }
    }
    out.push_str("</svg>\n");
    out
}
