//! Kasteleyn matrices of oriented snake graphs and their exact determinants.

use serde::Serialize;

use crate::error::CfError;
use crate::laurent::LaurentPoly;
use crate::matching::{enumerate_matchings, matching_stat_dp};
use crate::qrational::{q_rational, ContinuedFraction};
use crate::snake::{snake_graph, Color, Point, SnakeGraph};

/// Black and white vertices numbered along the snake by anti-diagonal
/// sweep: by `x + y`, then by `x`. Each anti-diagonal meets a snake in at
/// most two vertices of each colour, so the matrix is banded.
pub fn number_vertices(g: &SnakeGraph) -> (Vec<Point>, Vec<Point>) {
    let mut order: Vec<Point> = g.vertices().to_vec();
    order.sort_by_key(|p| (p.x + p.y, p.x));
    order.into_iter().partition(|p| p.color() == Color::Black)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KasteleynMatrix {
    pub size: usize,
    /// `entries[i][j]` pairs black vertex `i` with white vertex `j`.
    pub entries: Vec<Vec<LaurentPoly>>,
    pub black_order: Vec<Point>,
    pub white_order: Vec<Point>,
}

impl KasteleynMatrix {
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().flatten().filter(|e| !e.is_zero()).count()
    }

    /// Largest `|i - j|` over nonzero entries.
    pub fn bandwidth(&self) -> usize {
        let mut w = 0;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    w = w.max(i.abs_diff(j));
                }
            }
        }
        w
    }

    pub fn det(&self) -> LaurentPoly {
        det_exact(&self.entries)
    }
}

/// `+wt(e)` for edges oriented black to white, `-wt(e)` otherwise.
pub fn kasteleyn_matrix(g: &SnakeGraph) -> KasteleynMatrix {
    let (black_order, white_order) = number_vertices(g);
    let size = black_order.len();
    let mut entries = vec![vec![LaurentPoly::zero(); size]; size];
    for &e in g.edges() {
        let b = e.black_end();
        let w = e.white_end();
        let i = black_order.iter().position(|&p| p == b).expect("numbered");
        let j = white_order.iter().position(|&p| p == w).expect("numbered");
        let wt = g.weight(e);
        entries[i][j] = match g.orientation(e) {
            Some((from, _)) if from == b => wt,
            Some(_) => -wt,
            None => panic!("kasteleyn_matrix needs an oriented graph"),
        };
    }
    KasteleynMatrix {
        size,
        entries,
        black_order,
        white_order,
    }
}

/// Determinant over `Z[q, q^-1]` by fraction-free Bareiss elimination.
///
/// Each row is first divided by its lowest power of `q`, so all entries are
/// polynomials; the powers are restored at the end. Rows are brought up to
/// date lazily: a row with zeros left of the pivot column only picks up a
/// factor of the previous pivot, so it is scaled once, when first needed.
pub fn det_exact(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    let mut prefactor = 0;
    for row in m {
        assert_eq!(row.len(), n, "square matrix expected");
        let Some(low) = row.iter().filter(|e| !e.is_zero()).map(|e| e.min_deg()).min() else {
            return LaurentPoly::zero();
        };
        prefactor += low;
        a.push(row.iter().map(|e| e.shift(-low)).collect());
    }
    let mut fresh = vec![true; n];
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    let catch_up = |row: &mut Vec<LaurentPoly>, fresh: &mut bool, prev: &LaurentPoly| {
        if *fresh {
            if !prev.is_one() {
                for e in row.iter_mut() {
                    if !e.is_zero() {
                        *e = &*e * prev;
                    }
                }
            }
            *fresh = false;
        }
    };
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, p);
            fresh.swap(k, p);
            negate = !negate;
        }
        catch_up(&mut a[k], &mut fresh[k], &prev);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for (off, row) in rest.iter_mut().enumerate() {
            let i = k + 1 + off;
            if fresh[i] && row[k].is_zero() {
                continue;
            }
            catch_up(row, &mut fresh[i], &prev);
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let kept = &row[j] * &pivot_row[k];
                let cross = &lead * &pivot_row[j];
                row[j] = (&kept - &cross).div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].shift(prefactor);
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by expansion over all permutations. Exponential; an oracle
/// for small matrices.
pub fn det_permutation(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    fn go(m: &[Vec<LaurentPoly>], row: usize, used: &mut [bool], cols: &mut Vec<usize>, acc: &mut LaurentPoly) {
        let n = m.len();
        if row == n {
            let mut term = LaurentPoly::one();
            for (i, &j) in cols.iter().enumerate() {
                term = &term * &m[i][j];
            }
            if permutation_is_odd(cols) {
                term = -term;
            }
            *acc += &term;
            return;
        }
        for j in 0..n {
            if used[j] || m[row][j].is_zero() {
                continue;
            }
            used[j] = true;
            cols.push(j);
            go(m, row + 1, used, cols, acc);
            cols.pop();
            used[j] = false;
        }
    }
    let mut acc = LaurentPoly::zero();
    go(m, 0, &mut vec![false; m.len()], &mut Vec::new(), &mut acc);
    acc
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        inversions += p[i + 1..].iter().filter(|&&x| x < p[i]).count();
    }
    inversions % 2 == 1
}

/// The sign (`+1` or `-1`) of each perfect matching's term in the
/// determinant expansion, in [`enumerate_matchings`] order.
pub fn matching_term_signs(g: &SnakeGraph, m: &KasteleynMatrix) -> Vec<i8> {
    enumerate_matchings(g)
        .iter()
        .map(|matching| {
            let mut perm = vec![0; m.size];
            let mut negative = false;
            for &e in &matching.edges {
                let i = m.black_order.iter().position(|&p| p == e.black_end()).expect("numbered");
                let j = m.white_order.iter().position(|&p| p == e.white_end()).expect("numbered");
                perm[i] = j;
                negative ^= m.entries[i][j].lowest_coeff().is_some_and(|c| c.sign() == num_bigint::Sign::Minus);
            }
            if negative ^ permutation_is_odd(&perm) {
                -1
            } else {
                1
            }
        })
        .collect()
}

/// `p` or `-p`, whichever has a positive lowest coefficient.
pub fn normalize_sign(p: &LaurentPoly) -> (i8, LaurentPoly) {
    match p.lowest_coeff() {
        Some(c) if c.sign() == num_bigint::Sign::Minus => (-1, -p),
        _ => (1, p.clone()),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KasteleynReport {
    pub r: u64,
    pub s: u64,
    pub cf: ContinuedFraction,
    pub matrix: KasteleynMatrix,
    pub det: LaurentPoly,
    /// `det = sign * |det|`, with `|det|` having a positive lowest coefficient.
    pub sign: i8,
    pub abs_det: LaurentPoly,
    pub statistic: LaurentPoly,
    pub n: i64,
    pub numerator: LaurentPoly,
    pub pass: bool,
}

/// Checks `|det K(G)| = M_q(G)` and `q^n M_q(G) = R(q)` for `G = G_{r/s}`.
pub fn verify_kasteleyn(r: u64, s: u64) -> Result<KasteleynReport, CfError> {
    let cf = ContinuedFraction::expand(r, s)?;
    let numerator = q_rational(r, s)?.num().clone();
    let g = snake_graph(&cf);
    let matrix = kasteleyn_matrix(&g);
    let det = matrix.det();
    let (sign, abs_det) = normalize_sign(&det);
    let statistic = matching_stat_dp(&g);
    let n = cf.scalar_exponent();
    let pass = abs_det == statistic && statistic.shift(n) == numerator;
    Ok(KasteleynReport {
        r,
        s,
        cf,
        matrix,
        det,
        sign,
        abs_det,
        statistic,
        n,
        numerator,
        pass,
    })
}

/// The `n x n` tridiagonal band matrix of the vertical Fibonacci snake with
/// `n - 1` boxes: odd rows `(1, 1, 1)`, even rows `(-q, 1, -q^-1)` (rows
/// counted from 1), truncated at the corners.
pub fn fibonacci_band_matrix(n: usize) -> Vec<Vec<LaurentPoly>> {
    band(n, |i, _last| {
        if i % 2 == 0 {
            [1.into(), 1.into(), 1.into()]
        } else {
            [-LaurentPoly::q_pow(1), 1.into(), -LaurentPoly::q_pow(-1)]
        }
    })
}

/// The rescaled band: even rows `(-q^2, q, -1)`, except that a final even
/// row is `(-q, 1)`. Its determinant is `F̃_{n+1}`.
pub fn fibonacci_rescaled_band_matrix(n: usize) -> Vec<Vec<LaurentPoly>> {
    band(n, |i, last| {
        if i % 2 == 0 {
            [1.into(), 1.into(), 1.into()]
        } else if last {
            [-LaurentPoly::q_pow(1), 1.into(), LaurentPoly::zero()]
        } else {
            [-LaurentPoly::q_pow(2), LaurentPoly::q_pow(1), -LaurentPoly::one()]
        }
    })
}

fn band(n: usize, row: impl Fn(usize, bool) -> [LaurentPoly; 3]) -> Vec<Vec<LaurentPoly>> {
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        let [sub, diag, sup] = row(i, i + 1 == n);
        if i > 0 {
            m[i][i - 1] = sub;
        }
        m[i][i] = diag;
        if i + 1 < n {
            m[i][i + 1] = sup;
        }
    }
    m
}

/// Determinant of [`fibonacci_band_matrix`] by its three-term recurrence;
/// equals the matching statistic of the vertical `(n-1)`-box snake.
pub fn fibonacci_kasteleyn(n: usize) -> LaurentPoly {
    assert!(n >= 2, "fibonacci_kasteleyn needs n >= 2");
    let (mut before, mut last) = (LaurentPoly::one(), LaurentPoly::one());
    for i in 2..=n {
        let hop = if i % 2 == 0 { 1 } else { -1 };
        let next = &last + &before.shift(hop);
        before = std::mem::replace(&mut last, next);
    }
    last
}

/// Determinant of [`fibonacci_rescaled_band_matrix`], which is `F̃_{n+1}`.
pub fn fibonacci_kasteleyn_rescaled(n: usize) -> LaurentPoly {
    assert!(n >= 2, "fibonacci_kasteleyn_rescaled needs n >= 2");
    let (mut before, mut last) = (LaurentPoly::one(), LaurentPoly::one());
    for i in 2..=n {
        let next = if i % 2 == 1 {
            &last + &before
        } else if i == n {
            &last + &before.shift(1)
        } else {
            &last.shift(1) + &before.shift(2)
        };
        before = std::mem::replace(&mut last, next);
    }
    last
}
