//! Text and vector renderings of weighted snake graphs: ASCII, SVG, TikZ
//! and a JSON dump.

use std::fmt::Write;

use serde::Serialize;

use crate::qrational::ContinuedFraction;
use crate::snake::{Color, Edge, Point, SnakeGraph, WeightExp};

/// Pixels per lattice unit in SVG output.
pub const SVG_UNIT: i64 = 60;
const SVG_MARGIN: i64 = 30;
pub const BLUE: &str = "#1f4fd8";
pub const RED: &str = "#d8321f";

fn extent(g: &SnakeGraph) -> (i64, i64) {
    let xs = g.vertices().iter().map(|p| p.x).max().unwrap_or(0);
    let ys = g.vertices().iter().map(|p| p.y).max().unwrap_or(0);
    (xs, ys)
}

fn label(exp: WeightExp) -> Option<&'static str> {
    match exp {
        0 => None,
        1 => Some("q"),
        -1 => Some("q⁻¹"),
        _ => Some("q^?"),
    }
}

/// ASCII art, north up. Horizontal edges carry their weight inline
/// (`q`, `1/q`); vertical edges carry it just right of the bar.
pub fn render_ascii(g: &SnakeGraph) -> String {
    const W: i64 = 6;
    const H: i64 = 2;
    let (mx, my) = extent(g);
    let width = (mx * W + 5) as usize;
    let height = (my * H + 1) as usize;
    let mut canvas = vec![vec![' '; width]; height];
    let cell = |p: Point| ((my - p.y) * H, p.x * W);
    let put = |canvas: &mut Vec<Vec<char>>, row: i64, col: i64, s: &str| {
        for (k, ch) in s.chars().enumerate() {
            canvas[row as usize][col as usize + k] = ch;
        }
    };
    for &e in g.edges() {
        let (row, col) = cell(e.a);
        let text = match g.weight_exp(e) {
            1 => "q",
            -1 => "1/q",
            _ => "",
        };
        if e.is_vertical() {
            put(&mut canvas, row - 1, col, "|");
            put(&mut canvas, row - 1, col + 1, text);
        } else {
            put(&mut canvas, row, col + 1, "-----");
            put(&mut canvas, row, col + 2, text);
        }
    }
    for &p in g.vertices() {
        let (row, col) = cell(p);
        put(&mut canvas, row, col, "+");
    }
    let mut out = String::new();
    for line in canvas {
        let line: String = line.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// SVG with a fixed unit square of [`SVG_UNIT`] pixels. Edges of weight `q`
/// are blue, `q^-1` red, the rest black; vertices are filled by colour.
pub fn render_svg(g: &SnakeGraph) -> String {
    let (mx, my) = extent(g);
    let w = mx * SVG_UNIT + 2 * SVG_MARGIN;
    let h = my * SVG_UNIT + 2 * SVG_MARGIN;
    let at = |p: Point| (SVG_MARGIN + p.x * SVG_UNIT, SVG_MARGIN + (my - p.y) * SVG_UNIT);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="serif" font-size="16">"#
    )
    .unwrap();
    writeln!(out, "<title>snake graph of {}</title>", g.cf()).unwrap();
    for &e in g.edges() {
        let exp = g.weight_exp(e);
        let (stroke, width) = match exp {
            1 => (BLUE, 3),
            -1 => (RED, 3),
            _ => ("black", 1),
        };
        let (x1, y1) = at(e.a);
        let (x2, y2) = at(e.b);
        writeln!(
            out,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{width}"/>"#
        )
        .unwrap();
        if let Some(text) = label(exp) {
            let (lx, ly) = if e.is_vertical() {
                (x1 - 14, (y1 + y2) / 2 + 5)
            } else {
                ((x1 + x2) / 2, y1 + 20)
            };
            writeln!(
                out,
                r#"<text x="{lx}" y="{ly}" fill="{stroke}" text-anchor="middle">{text}</text>"#
            )
            .unwrap();
        }
    }
    for &p in g.vertices() {
        let (cx, cy) = at(p);
        let fill = match p.color() {
            Color::Black => "black",
            Color::White => "white",
        };
        writeln!(
            out,
            r#"<circle cx="{cx}" cy="{cy}" r="4" fill="{fill}" stroke="black"/>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// A `tikzpicture` in lattice coordinates, coloured edges drawn thick with
/// their weight as a node label.
pub fn render_tikz(g: &SnakeGraph) -> String {
    let mut out = String::new();
    writeln!(out, "% snake graph of {}", g.cf()).unwrap();
    out.push_str("\\begin{tikzpicture}[scale=1]\n");
    for &e in g.edges() {
        let exp = g.weight_exp(e);
        let (a, b) = (e.a, e.b);
        let side = if e.is_vertical() { "left" } else { "below" };
        match exp {
            0 => writeln!(out, "  \\draw ({},{}) -- ({},{});", a.x, a.y, b.x, b.y),
            1 => writeln!(
                out,
                "  \\draw[blue, very thick] ({},{}) -- ({},{}) node[midway, {side}] {{$q$}};",
                a.x, a.y, b.x, b.y
            ),
            _ => writeln!(
                out,
                "  \\draw[red, very thick] ({},{}) -- ({},{}) node[midway, {side}] {{$q^{{{exp}}}$}};",
                a.x, a.y, b.x, b.y
            ),
        }
        .unwrap();
    }
    for &p in g.vertices() {
        let style = match p.color() {
            Color::Black => "fill=black",
            Color::White => "fill=white, draw=black",
        };
        writeln!(out, "  \\filldraw[{style}] ({},{}) circle (2pt);", p.x, p.y).unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[derive(Serialize)]
pub struct SnakeJson {
    pub cf: ContinuedFraction,
    pub boxes: Vec<Point>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
pub struct VertexJson {
    pub x: i64,
    pub y: i64,
    pub color: Color,
}

#[derive(Serialize)]
pub struct EdgeJson {
    pub a: Point,
    pub b: Point,
    /// The weight is `q^weight_exp`.
    pub weight_exp: WeightExp,
    /// Tail and head under the Kasteleyn orientation.
    pub from: Point,
    pub to: Point,
}

pub fn snake_json(g: &SnakeGraph) -> SnakeJson {
    let edge = |e: Edge| {
        let (from, to) = g.orientation(e).unwrap_or((e.a, e.b));
        EdgeJson {
            a: e.a,
            b: e.b,
            weight_exp: g.weight_exp(e),
            from,
            to,
        }
    };
    SnakeJson {
        cf: g.cf().clone(),
        boxes: g.path().cells.clone(),
        vertices: g
            .vertices()
            .iter()
            .map(|&p| VertexJson {
                x: p.x,
                y: p.y,
                color: p.color(),
            })
            .collect(),
        edges: g.edges().iter().map(|&e| edge(e)).collect(),
    }
}

pub fn render_json(g: &SnakeGraph) -> String {
    let mut s = serde_json::to_string_pretty(&snake_json(g)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snake::snake_graph;

    fn graph(v: &[i64]) -> SnakeGraph {
        snake_graph(&ContinuedFraction::new(v.to_vec()).unwrap())
    }

    #[test]
    fn ascii_one_box() {
        let art = render_ascii(&graph(&[2]));
        assert_eq!(art, "+-----+\n|     |\n+-----+\n".replace("|     |", "|q    |"));
    }

    #[test]
    fn svg_palette() {
        let svg = render_svg(&graph(&[2, 2, 2, 2]));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let blue = svg.matches(&format!("stroke=\"{BLUE}\"")).count();
        let red = svg.matches(&format!("stroke=\"{RED}\"")).count();
        let g = graph(&[2, 2, 2, 2]);
        let count = |k| g.edges().iter().filter(|&&e| g.weight_exp(e) == k).count();
        assert_eq!((blue, red), (count(1), count(-1)));
        assert!(svg.contains(">q⁻¹<"));
    }

    #[test]
    fn tikz_and_json() {
        let g = graph(&[2, 2, 2, 2]);
        let tikz = render_tikz(&g);
        assert_eq!(tikz.matches("\\draw").count(), g.edges().len());
        assert!(tikz.contains("{$q^{-1}$}"));
        let v: serde_json::Value = serde_json::from_str(&render_json(&g)).unwrap();
        assert_eq!(v["boxes"].as_array().unwrap().len(), 7);
        assert_eq!(v["edges"].as_array().unwrap().len(), g.edges().len());
        assert_eq!(v["vertices"][0]["color"], "black");
    }
}
