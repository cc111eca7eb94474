//! Snake graphs of rationals, embedded in the square lattice with the
//! down-left vertex at the origin.
//!
//! A continued fraction `[a1, ..., ak]` gives the sign sequence
//! `(-^{a1}, +^{a2}, -^{a3}, ...)`. The first sign labels the south edge of
//! box 0, each following sign labels the edge through which the next box is
//! attached. Inside every box the north and west edges share a sign, as do
//! the south and east edges, and north and south differ; consequently the
//! `i`-th attaching sign selects the east edge of box `i - 1` exactly when it
//! equals `(-1)^i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SnakeError;
use crate::laurent::LaurentPoly;
use crate::qrational::ContinuedFraction;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn color(self) -> Color {
        if (self.x + self.y).rem_euclid(2) == 0 {
            Color::Black
        } else {
            Color::White
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// Unit lattice edge with endpoints stored in sorted order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Edge {
    pub a: Point,
    pub b: Point,
}

impl Edge {
    pub fn new(p: Point, r: Point) -> Self {
        debug_assert_eq!((p.x - r.x).abs() + (p.y - r.y).abs(), 1, "not a unit edge");
        if p <= r {
            Self { a: p, b: r }
        } else {
            Self { a: r, b: p }
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    pub fn black_end(&self) -> Point {
        if self.a.color() == Color::Black {
            self.a
        } else {
            self.b
        }
    }

    pub fn white_end(&self) -> Point {
        if self.a.color() == Color::White {
            self.a
        } else {
            self.b
        }
    }

    pub fn other(&self, p: Point) -> Point {
        if p == self.a {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    fn alternating(i: usize) -> Self {
        if i % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignSequence(pub Vec<Sign>);

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Minus => "-",
                Sign::Plus => "+",
            })?;
        }
        Ok(())
    }
}

/// Runs of constant sign of lengths `a1, a2, ...`, starting with `-`.
pub fn sign_sequence(cf: &ContinuedFraction) -> SignSequence {
    let mut signs = Vec::with_capacity(cf.sum() as usize);
    for (i, &a) in cf.coeffs().iter().enumerate() {
        let s = if i % 2 == 0 { Sign::Minus } else { Sign::Plus };
        signs.extend(std::iter::repeat(s).take(a as usize));
    }
    SignSequence(signs)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Right,
    Up,
}

/// Lower-left corners of the boxes, in path order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxPath {
    pub cells: Vec<Point>,
}

impl BoxPath {
    pub fn from_signs(signs: &SignSequence) -> Self {
        let d = signs.0.len().saturating_sub(1);
        let mut cells = Vec::with_capacity(d);
        if d == 0 {
            return Self { cells };
        }
        let mut cur = Point::new(0, 0);
        cells.push(cur);
        for i in 1..d {
            cur = if signs.0[i] == Sign::alternating(i) {
                Point::new(cur.x + 1, cur.y)
            } else {
                Point::new(cur.x, cur.y + 1)
            };
            cells.push(cur);
        }
        Self { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Direction from box `i - 1` to box `i`, for `i >= 1`.
    pub fn step(&self, i: usize) -> Step {
        let (p, c) = (self.cells[i - 1], self.cells[i]);
        if c.x == p.x + 1 {
            Step::Right
        } else {
            Step::Up
        }
    }
}

/// The four sides of the box with lower-left corner `c`.
#[derive(Clone, Copy, Debug)]
pub struct BoxEdges {
    pub south: Edge,
    pub east: Edge,
    pub north: Edge,
    pub west: Edge,
}

impl BoxEdges {
    pub fn of(c: Point) -> Self {
        let sw = c;
        let se = Point::new(c.x + 1, c.y);
        let nw = Point::new(c.x, c.y + 1);
        let ne = Point::new(c.x + 1, c.y + 1);
        Self {
            south: Edge::new(sw, se),
            east: Edge::new(se, ne),
            north: Edge::new(nw, ne),
            west: Edge::new(sw, nw),
        }
    }

    pub fn all(&self) -> [Edge; 4] {
        [self.south, self.east, self.north, self.west]
    }
}

/// Weight of an edge as a power of `q`; every exponent is -1, 0 or 1.
pub type WeightExp = i32;

#[derive(Clone, Debug)]
pub struct SnakeGraph {
    cf: ContinuedFraction,
    path: BoxPath,
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    weights: Option<BTreeMap<Edge, WeightExp>>,
    orientation: Option<BTreeMap<Edge, (Point, Point)>>,
}

/// Unweighted skeleton of the snake graph of `cf`.
///
/// With zero boxes (the rational 1) the graph is the single edge
/// `(0,0)-(1,0)`.
pub fn build_snake(cf: &ContinuedFraction) -> SnakeGraph {
    let path = BoxPath::from_signs(&sign_sequence(cf));
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    if path.is_empty() {
        let e = Edge::new(Point::new(0, 0), Point::new(1, 0));
        vertices.extend([e.a, e.b]);
        edges.insert(e);
    }
    for &c in &path.cells {
        for e in BoxEdges::of(c).all() {
            vertices.extend([e.a, e.b]);
            edges.insert(e);
        }
    }
    SnakeGraph {
        cf: cf.clone(),
        path,
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
        weights: None,
        orientation: None,
    }
}

/// Exponent of the lattice coloring on an exposed west (vertical) or south
/// (horizontal) border edge. Horizontal edges in the first column carry no
/// color.
pub fn grid_weight(e: Edge) -> WeightExp {
    let parity = (e.a.x + e.a.y).rem_euclid(2);
    if e.is_vertical() {
        if parity == 0 {
            1
        } else {
            -1
        }
    } else if e.a.x == 0 {
        0
    } else if parity == 1 {
        1
    } else {
        -1
    }
}

/// Colors the western and southern borders from the lattice coloring; all
/// other edges get weight 1.
pub fn assign_weights(mut g: SnakeGraph) -> SnakeGraph {
    let mut weights: BTreeMap<Edge, WeightExp> = g.edges.iter().map(|&e| (e, 0)).collect();
    for (i, &c) in g.path.cells.iter().enumerate() {
        let sides = BoxEdges::of(c);
        let west_exposed = i == 0 || g.path.step(i) == Step::Up;
        let south_exposed = i == 0 || g.path.step(i) == Step::Right;
        if west_exposed {
            weights.insert(sides.west, grid_weight(sides.west));
        }
        if south_exposed {
            weights.insert(sides.south, grid_weight(sides.south));
        }
    }
    g.weights = Some(weights);
    g
}

/// Colored edges point black to white, uncolored edges white to black.
///
/// # Panics
/// If the weights have not been assigned.
pub fn orient_kasteleyn(mut g: SnakeGraph) -> SnakeGraph {
    let weights = g.weights.as_ref().expect("assign_weights must run first");
    let orientation = g
        .edges
        .iter()
        .map(|&e| {
            let (b, w) = (e.black_end(), e.white_end());
            let dir = if weights[&e] != 0 { (b, w) } else { (w, b) };
            (e, dir)
        })
        .collect();
    g.orientation = Some(orientation);
    g
}

/// Weighted, Kasteleyn-oriented snake graph of `cf`.
pub fn snake_graph(cf: &ContinuedFraction) -> SnakeGraph {
    orient_kasteleyn(assign_weights(build_snake(cf)))
}

/// Snake of the tail `[a2, ..., ak]`, whose matchings count the denominator.
pub fn denominator_snake(cf: &ContinuedFraction) -> Result<SnakeGraph, SnakeError> {
    let tail = cf
        .tail()
        .ok_or_else(|| SnakeError::NoDenominatorSnake(cf.coeffs().to_vec()))?;
    Ok(snake_graph(&tail))
}

impl SnakeGraph {
    pub fn cf(&self) -> &ContinuedFraction {
        &self.cf
    }

    pub fn path(&self) -> &BoxPath {
        &self.path
    }

    pub fn box_count(&self) -> usize {
        self.path.len()
    }

    /// Vertices in lexicographic `(x, y)` order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// Weight exponent of `e`; 0 before weights are assigned.
    pub fn weight_exp(&self, e: Edge) -> WeightExp {
        self.weights
            .as_ref()
            .and_then(|w| w.get(&e).copied())
            .unwrap_or(0)
    }

    pub fn weight(&self, e: Edge) -> LaurentPoly {
        LaurentPoly::q_pow(self.weight_exp(e) as i64)
    }

    /// `(from, to)` of the Kasteleyn orientation.
    pub fn orientation(&self, e: Edge) -> Option<(Point, Point)> {
        self.orientation.as_ref().and_then(|o| o.get(&e).copied())
    }

    pub fn color(&self, p: Point) -> Color {
        p.color()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Neighbours of `p`, in lexicographic order.
    pub fn neighbours(&self, p: Point) -> Vec<Point> {
        let mut out: Vec<Point> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .iter()
            .map(|(dx, dy)| Point::new(p.x + dx, p.y + dy))
            .filter(|&r| self.contains_edge(Edge::new(p, r)))
            .collect();
        out.sort();
        out
    }

    pub fn box_edges(&self, i: usize) -> BoxEdges {
        BoxEdges::of(self.path.cells[i])
    }

    /// Number of arrows pointing black to white around box `i`.
    pub fn black_to_white_arrows(&self, i: usize) -> usize {
        self.box_edges(i)
            .all()
            .iter()
            .filter(|&&e| {
                self.orientation(e)
                    .is_some_and(|(from, _)| from.color() == Color::Black)
            })
            .count()
    }
}
