//! Plain-text renderings.
//!
//! Loop diagrams use one line per vertex row. A vertex shows its vertical
//! edges (`|` both, `,` down only, `'` up only, `.` none) and the gap to its
//! right shows the horizontal edge (`-`). Vertex-model diagrams put vertex
//! rows on even lines and the vertical arrows on the lines between them.

use crate::grid::{Edge, FplConfiguration, GridGraph, Vertex, VertexModel};
use crate::object::Object;

/// Right-aligned integer grid, one row per line, columns separated by a
/// single space.
pub fn integer_grid(rows: &[Vec<i64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_ascii(x: &Object) -> String {
    match x {
        Object::Matrix(m) => integer_grid(&m.matrix().rows()),
        Object::CornerSum(c) => integer_grid(&c.cells()),
        Object::Height(h) => integer_grid(&h.cells()),
        Object::Fpl(f) => fpl_diagram(f),
        Object::Vertex(v) => vertex_diagram(v),
    }
}

fn fpl_diagram(f: &FplConfiguration) -> String {
    let n = f.n();
    let g = GridGraph::square(n);
    let has = |i: usize, j: usize, down: bool| {
        let e = if down {
            (i <= n).then(|| Edge::vertical(i, j))
        } else {
            i.checked_sub(1).map(|k| Edge::vertical(k, j))
        };
        e.is_some_and(|e| f.contains(e))
    };
    let mut out = String::new();
    for i in 0..=n + 1 {
        let mut line = String::new();
        for j in 0..=n + 1 {
            let v = Vertex::new(i, j);
            line.push(if !g.contains_vertex(v) {
                ' '
            } else {
                match (has(i, j, false), has(i, j, true)) {
                    (true, true) => '|',
                    (false, true) => ',',
                    (true, false) => '\'',
                    (false, false) => '.',
                }
            });
            if j <= n {
                line.push(if f.contains(Edge::horizontal(i, j)) { '-' } else { ' ' });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn vertex_diagram(m: &VertexModel) -> String {
    let n = m.n();
    let g = GridGraph::square(n);
    let mut out = String::new();
    for i in 0..=n + 1 {
        let mut line = String::new();
        for j in 0..=n + 1 {
            line.push(if g.contains_vertex(Vertex::new(i, j)) { '.' } else { ' ' });
            if j <= n {
                line.push(match m.arrow(Edge::horizontal(i, j)) {
                    Some((t, _)) if t.col == j => '>',
                    Some(_) => '<',
                    None => ' ',
                });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if i <= n {
            let mut line = String::new();
            for j in 0..=n + 1 {
                line.push(match m.arrow(Edge::vertical(i, j)) {
                    Some((t, _)) if t.row == i => 'v',
                    Some(_) => '^',
                    None => ' ',
                });
                line.push(' ');
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::Family;
    use crate::io::json::parse;

    #[test]
    fn height_grid() {
        let h = parse(r#"{"kind":"height-function","n":1,"cells":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(render_ascii(&h), "0 1\n1 0\n");
    }

    #[test]
    fn order_one_fpl() {
        let f = FplConfiguration::new(1, &[Edge::vertical(0, 1), Edge::vertical(1, 1)], Family::Magog).unwrap();
        assert_eq!(render_ascii(&Object::Fpl(f)), "  ,\n. | .\n  '\n");
    }

    #[test]
    fn order_one_vertex_model() {
        let f = FplConfiguration::new(1, &[Edge::vertical(0, 1), Edge::vertical(1, 1)], Family::Magog).unwrap();
        let v = crate::bijection::fpl_to_vertex(&f).unwrap();
        assert_eq!(render_ascii(&Object::Vertex(v)), "  .\n  ^\n.>.<.\n  v\n  .\n");
    }

    #[test]
    fn negative_entries_align() {
        assert_eq!(integer_grid(&[vec![0, 1], vec![1, -1]]), " 0  1\n 1 -1\n");
    }
}
