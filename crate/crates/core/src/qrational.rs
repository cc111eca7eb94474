//! q-deformed rationals `[r/s]_q = R(q)/S(q)`.
//!
//! Four independent routes are provided:
//!
//! * [`q_matrix_eval`]: products of the generators `R_q`, `L_q` (authoritative),
//! * [`q_cf_eval`]: the nested q-continued fraction, evaluated in the fraction field,
//! * [`q_continuant`]: the tridiagonal q-continuant, giving the numerator,
//! * [`q_map_general`]: the two modular recurrences `[x+1] = q[x] + 1` and
//!   `[-1/x] = -1/(q[x])` applied down to `[0]_q = 0`.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CfError;
use crate::laurent::{write_ratio, LaurentFraction, LaurentPoly};

/// Regular continued fraction `[a1, ..., ak]` with positive coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ContinuedFraction {
    coeffs: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, CfError> {
        if coeffs.is_empty() {
            return Err(CfError::Empty);
        }
        if coeffs.iter().any(|&a| a < 1) {
            return Err(CfError::NonPositiveCoefficient(coeffs));
        }
        Ok(Self { coeffs })
    }

    /// Canonical expansion of `r/s >= 1` by the Euclidean algorithm; the last
    /// coefficient is at least 2 unless the expansion has length one.
    pub fn expand(r: u64, s: u64) -> Result<Self, CfError> {
        if s == 0 {
            return Err(CfError::ZeroDenominator);
        }
        if r.gcd(&s) != 1 {
            return Err(CfError::NotCoprime { r, s });
        }
        if r < s {
            return Err(CfError::BelowOne { r, s });
        }
        let (mut a, mut b) = (r, s);
        let mut coeffs = Vec::new();
        while b != 0 {
            let (quot, rem) = a.div_rem(&b);
            coeffs.push(quot as i64);
            a = b;
            b = rem;
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a1 + ... + ak`; the snake graph has one box fewer.
    pub fn sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_canonical(&self) -> bool {
        self.coeffs.len() == 1 || self.coeffs.last().is_some_and(|&a| a >= 2)
    }

    /// Folds a trailing 1 into its neighbour: `[.., a, 1] -> [.., a + 1]`.
    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.pop();
        *coeffs.last_mut().expect("length >= 2") += 1;
        Self { coeffs }
    }

    fn with_parity(&self, even: bool) -> Self {
        if (self.coeffs.len() % 2 == 0) == even {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        let last = coeffs.last_mut().expect("nonempty");
        if *last >= 2 {
            *last -= 1;
            coeffs.push(1);
        } else {
            // [.., a, 1] -> [.., a + 1]
            coeffs.pop();
            *coeffs.last_mut().expect("a length-1 expansion [1] has no other parity") += 1;
        }
        Self { coeffs }
    }

    /// Equivalent expansion with an even number of coefficients.
    ///
    /// `[1]` (the rational 1) has no such expansion with positive entries and
    /// is returned unchanged.
    pub fn even_form(&self) -> Self {
        if self.coeffs == [1] {
            return self.clone();
        }
        self.with_parity(true)
    }

    pub fn odd_form(&self) -> Self {
        self.with_parity(false)
    }

    /// `[a2, ..., ak]`, or `None` for a single coefficient.
    pub fn tail(&self) -> Option<Self> {
        (self.coeffs.len() >= 2).then(|| Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Classical value `r/s` via the integer continuant recurrence.
    pub fn value(&self) -> (u64, u64) {
        let (mut p, mut p_prev) = (1u64, 0u64);
        let (mut q, mut q_prev) = (0u64, 1u64);
        for &a in &self.coeffs {
            let a = a as u64;
            (p, p_prev) = (a.checked_mul(p).and_then(|x| x.checked_add(p_prev)).expect("overflow"), p);
            (q, q_prev) = (a.checked_mul(q).and_then(|x| x.checked_add(q_prev)).expect("overflow"), q);
        }
        (p, q)
    }

    /// The exponent `n = a2 + a4 + ... + a_{2m} - 1` read off the even form,
    /// so that `R(q) = q^n M_q(G)`. Zero for the rational 1.
    pub fn scalar_exponent(&self) -> i64 {
        if self.coeffs == [1] {
            return 0;
        }
        let even = self.even_form();
        even.coeffs.iter().skip(1).step_by(2).sum::<i64>() - 1
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`, or with `inverted` the same in `q^{-1}`.
pub fn q_int(n: u64, inverted: bool) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let ones = vec![1i64; n as usize];
    if inverted {
        LaurentPoly::from_coeffs(1 - n as i64, ones)
    } else {
        LaurentPoly::from_coeffs(0, ones)
    }
}

/// Reduced q-rational `R(q)/S(q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QRational {
    pub fn from_fraction(f: LaurentFraction) -> Self {
        assert!(!f.is_infinite(), "q-rational of infinity has no finite form");
        let (num, den) = f.into_parts();
        Self { num, den }
    }

    /// Reduces `num/den` to canonical form.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::from_fraction(LaurentFraction::from_projective(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn to_fraction(&self) -> LaurentFraction {
        LaurentFraction::from_projective(self.num.clone(), self.den.clone())
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.num, &self.den)
    }
}

/// 2x2 matrix over `Z[q, q^-1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl QMatrix {
    pub fn identity() -> Self {
        Self::from_rows([[1.into(), 0.into()], [0.into(), 1.into()]])
    }

    pub fn from_rows(entries: [[LaurentPoly; 2]; 2]) -> Self {
        Self { entries }
    }

    /// `R_q = [[q, 1], [0, 1]]`.
    pub fn r_q() -> Self {
        Self::from_rows([[LaurentPoly::q_pow(1), 1.into()], [0.into(), 1.into()]])
    }

    /// `L_q = [[q, 0], [q, 1]]`.
    pub fn l_q() -> Self {
        Self::from_rows([[LaurentPoly::q_pow(1), 0.into()], [LaurentPoly::q_pow(1), 1.into()]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.entries;
        let b = &rhs.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Self::from_rows([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn det(&self) -> LaurentPoly {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    pub fn column(&self, j: usize) -> (LaurentPoly, LaurentPoly) {
        (self.entries[0][j].clone(), self.entries[1][j].clone())
    }

    /// The word `R_q^{a1} L_q^{a2} R_q^{a3} ...` of a coefficient list.
    pub fn word(coeffs: &[i64]) -> Self {
        let (r, l) = (Self::r_q(), Self::l_q());
        coeffs.iter().enumerate().fold(Self::identity(), |acc, (i, &a)| {
            let g = if i % 2 == 0 { &r } else { &l };
            acc.mul(&g.pow(a as u64))
        })
    }
}

/// Evaluates the nested q-continued fraction bottom-up in the fraction field.
/// Odd positions use `[a]_q` with prefactor `q^a`; even positions use
/// `[a]_{q^-1}` with prefactor `q^-a`.
pub fn q_cf_eval(cf: &ContinuedFraction) -> QRational {
    let level = |i: usize| {
        let a = cf.coeffs[i];
        let odd = i % 2 == 0;
        let int = q_int(a as u64, !odd);
        let pre = LaurentPoly::q_pow(if odd { a } else { -a });
        (int, pre)
    };
    let k = cf.len();
    let mut value = LaurentFraction::from_poly(level(k - 1).0);
    for i in (0..k - 1).rev() {
        let (int, pre) = level(i);
        let tail = &LaurentFraction::from_poly(pre) * &value.recip();
        value = &LaurentFraction::from_poly(int) + &tail;
    }
    QRational::from_fraction(value)
}

/// Matrix route. Even length: the first column of `R^{a1} L^{a2} ... L^{a2m}`
/// is `(qR, qS)`. Odd length: the second column of `R^{a1} ... R^{a2m+1}` is
/// `(R, S)`.
pub fn q_matrix_eval(cf: &ContinuedFraction) -> QRational {
    let m = QMatrix::word(cf.coeffs());
    let (num, den) = if cf.len() % 2 == 0 {
        let (qr, qs) = m.column(0);
        let q = LaurentPoly::q_pow(1);
        (
            qr.div_exact(&q).expect("first column divisible by q"),
            qs.div_exact(&q).expect("first column divisible by q"),
        )
    } else {
        m.column(1)
    };
    QRational::from_parts(num, den)
}

/// Raw determinant of the tridiagonal q-continuant: diagonal `[a1]_q,
/// [a2]_{q^-1}, [a3]_q, ...`, superdiagonal `-1`, subdiagonal `q^{a1},
/// q^{-a2}, q^{a3}, ...`.
///
/// This equals `q^{-n} R(q)`, i.e. exactly the weighted matching count of the
/// snake graph.
pub fn continuant_determinant(cf: &ContinuedFraction) -> LaurentPoly {
    let mut prev = LaurentPoly::one();
    let mut cur = q_int(cf.coeffs[0] as u64, false);
    for i in 1..cf.len() {
        let odd = i % 2 == 0;
        let diag = q_int(cf.coeffs[i] as u64, !odd);
        let a_prev = cf.coeffs[i - 1];
        // sub-diagonal entry on row i is q^{+a_{i-1}} when the previous
        // position is odd (1-based), q^{-a_{i-1}} otherwise
        let sub = LaurentPoly::q_pow(if odd { -a_prev } else { a_prev });
        let next = &(&diag * &cur) + &(&sub * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Numerator `R(q)` from the continuant: `q^n` times [`continuant_determinant`].
pub fn q_continuant(cf: &ContinuedFraction) -> LaurentPoly {
    continuant_determinant(cf).shift(cf.scalar_exponent())
}

/// `[r/s]_q` for coprime `r >= s >= 1`, computed by the matrix route. Debug
/// builds cross-check the continued-fraction and continuant routes.
pub fn q_rational(r: u64, s: u64) -> Result<QRational, CfError> {
    let cf = ContinuedFraction::expand(r, s)?;
    let value = q_matrix_eval(&cf);
    debug_assert_eq!(value, q_cf_eval(&cf));
    debug_assert_eq!(value.num(), &q_continuant(&cf));
    Ok(value)
}

/// A point of the rational projective line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtRational {
    Finite(Rational64),
    Infinity,
}

impl From<Rational64> for ExtRational {
    fn from(x: Rational64) -> Self {
        Self::Finite(x)
    }
}

impl From<i64> for ExtRational {
    fn from(x: i64) -> Self {
        Self::Finite(Rational64::from_integer(x))
    }
}

enum Step {
    /// `[x] = q^k [x - k] + [k]_q`
    Up(i64),
    /// `[x] = ([x + k] - [k]_q) / q^k`
    Down(i64),
    /// `[x] = -1 / (q [-1/x])`
    Invert,
}

/// `[x]_q` for any `x` in `Q ∪ {∞}` from the modular recurrences, with
/// `[0]_q = 0` and `[∞]_q = 1/0`.
///
/// Negative inputs are raised by integer steps to `[0, 1)`; a value in
/// `(0, 1)` is inverted to `-1/x`, whose denominator is strictly smaller, so
/// the descent terminates.
pub fn q_map_general(x: impl Into<ExtRational>) -> LaurentFraction {
    let mut steps = Vec::new();
    let mut cur = x.into();
    let (mut num, mut den) = loop {
        let v = match cur {
            ExtRational::Infinity => break (LaurentPoly::one(), LaurentPoly::zero()),
            ExtRational::Finite(v) => v,
        };
        if v.is_zero() {
            break (LaurentPoly::zero(), LaurentPoly::one());
        }
        if v >= Rational64::one() {
            let k = v.to_integer();
            steps.push(Step::Up(k));
            cur = ExtRational::Finite(v - k);
        } else if v.is_negative() {
            let k = (-v).ceil().to_integer();
            steps.push(Step::Down(k));
            cur = ExtRational::Finite(v + k);
        } else {
            steps.push(Step::Invert);
            cur = ExtRational::Finite(-v.recip());
        }
    };
    for step in steps.iter().rev() {
        (num, den) = match *step {
            Step::Up(k) => (&num.shift(k) + &(&q_int(k as u64, false) * &den), den),
            Step::Down(k) => (&num - &(&q_int(k as u64, false) * &den), den.shift(k)),
            Step::Invert => (-den, num.shift(1)),
        };
    }
    LaurentFraction::from_projective(num, den)
}

/// Classical Fibonacci numbers, `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `F_n(q)`, the denominator of `[F_{n+1}/F_n]_q`, for `n = 1..=max`
/// (index 0 holds `F_0 = 0`), from `F_{n+2} = [3]_q F_n - q^2 F_{n-2}` with
/// seeds `F_1 = F_2 = 1`, `F_3 = [2]_q`, `F_4 = [3]_q`.
pub fn fibonacci_denominators(max: usize) -> Vec<LaurentPoly> {
    let seeds = [LaurentPoly::zero(), 1.into(), 1.into(), q_int(2, false), q_int(3, false)];
    run_fibonacci_recurrence(seeds.to_vec(), max)
}

/// `F̃_n(q)`, the numerator of `[F_n/F_{n-1}]_q`, for `n = 2..=max`; the
/// entries at indices 0 and 1 are placeholders (zero). Seeds `F̃_2 .. F̃_5`
/// are read off [`q_rational`], the rest follow the same recurrence as
/// [`fibonacci_denominators`].
pub fn fibonacci_numerators(max: usize) -> Vec<LaurentPoly> {
    let mut seeds = vec![LaurentPoly::zero(), LaurentPoly::zero()];
    for n in 2..=5 {
        let value = q_rational(fibonacci(n), fibonacci(n - 1)).expect("consecutive Fibonacci numbers are coprime");
        seeds.push(value.num().clone());
    }
    run_fibonacci_recurrence(seeds, max)
}

/// Extends `seq` to indices `0..=max` with `X_n = [3]_q X_{n-2} - q^2 X_{n-4}`;
/// the seeds must cover the first four meaningful indices.
fn run_fibonacci_recurrence(mut seq: Vec<LaurentPoly>, max: usize) -> Vec<LaurentPoly> {
    let three = q_int(3, false);
    let q2 = LaurentPoly::q_pow(2);
    while seq.len() <= max {
        let n = seq.len();
        let next = &(&three * &seq[n - 2]) - &(&q2 * &seq[n - 4]);
        seq.push(next);
    }
    seq.truncate(max + 1);
    seq
}

/// `(F̃_{n+1}, F_n)`, the numerator and denominator of `[F_{n+1}/F_n]_q`.
/// For `n = 0` this is `[1/0]_q = 1/0`.
pub fn fibonacci_polys(n: usize) -> (LaurentPoly, LaurentPoly) {
    if n == 0 {
        return (LaurentPoly::one(), LaurentPoly::zero());
    }
    let nums = fibonacci_numerators(n + 1);
    let dens = fibonacci_denominators(n);
    (nums[n + 1].clone(), dens[n].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::lp;

    fn cf(v: &[i64]) -> ContinuedFraction {
        ContinuedFraction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(ContinuedFraction::expand(5, 2).unwrap(), cf(&[2, 2]));
        assert_eq!(ContinuedFraction::expand(13, 3).unwrap(), cf(&[4, 3]));
        assert_eq!(ContinuedFraction::expand(7, 1).unwrap(), cf(&[7]));
        assert_eq!(ContinuedFraction::expand(1, 1).unwrap(), cf(&[1]));
        assert_eq!(ContinuedFraction::expand(179, 74).unwrap(), cf(&[2, 2, 2, 1, 1, 2, 2]));
    }

    #[test]
    fn expand_errors() {
        assert_eq!(ContinuedFraction::expand(4, 2), Err(CfError::NotCoprime { r: 4, s: 2 }));
        assert_eq!(ContinuedFraction::expand(2, 5), Err(CfError::BelowOne { r: 2, s: 5 }));
        assert_eq!(ContinuedFraction::expand(3, 0), Err(CfError::ZeroDenominator));
        assert!(ContinuedFraction::new(vec![]).is_err());
        assert!(ContinuedFraction::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn parity_forms() {
        assert_eq!(cf(&[2, 2]).even_form(), cf(&[2, 2]));
        assert_eq!(cf(&[2, 2, 2, 2]).odd_form(), cf(&[2, 2, 2, 1, 1]));
        assert_eq!(cf(&[1, 1, 3]).even_form(), cf(&[1, 1, 2, 1]));
        assert_eq!(cf(&[1, 1, 2, 1]).odd_form(), cf(&[1, 1, 3]));
        assert_eq!(cf(&[7]).even_form(), cf(&[6, 1]));
        assert_eq!(cf(&[1]).even_form(), cf(&[1]));
        assert_eq!(cf(&[2, 1, 1]).canonical(), cf(&[2, 2]));
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(3, false), lp("1 + q + q^2"));
        assert_eq!(q_int(1, false), LaurentPoly::one());
        assert_eq!(q_int(2, true), lp("1 + q^-1"));
        assert_eq!(q_int(0, true), LaurentPoly::zero());
    }

    #[test]
    fn cf_eval_examples() {
        let v = q_cf_eval(&cf(&[2, 2]));
        assert_eq!((v.num(), v.den()), (&lp("1 + 2q + q^2 + q^3"), &lp("1 + q")));
        let v = q_cf_eval(&cf(&[1, 1, 2, 1]));
        assert_eq!((v.num(), v.den()), (&lp("1 + q + 2q^2 + 2q^3 + q^4"), &lp("1 + q + q^2 + q^3")));
        let v = q_cf_eval(&cf(&[5]));
        assert_eq!((v.num(), v.den()), (&q_int(5, false), &LaurentPoly::one()));
    }

    #[test]
    fn matrix_eval_examples() {
        let v = q_matrix_eval(&cf(&[2, 2]));
        assert_eq!((v.num(), v.den()), (&lp("1 + 2q + q^2 + q^3"), &lp("1 + q")));
        let v = q_matrix_eval(&cf(&[2, 2, 2, 2]));
        assert_eq!(v.num(), &lp("1 + 3q + 5q^2 + 6q^3 + 6q^4 + 5q^5 + 2q^6 + q^7"));
        assert_eq!(v.den(), &lp("1 + 2q + 3q^2 + 3q^3 + 2q^4 + q^5"));
        let v = q_matrix_eval(&cf(&[1]));
        assert_eq!((v.num(), v.den()), (&LaurentPoly::one(), &LaurentPoly::one()));
        // 7/4 = R L R^3 (0)
        assert_eq!(q_matrix_eval(&cf(&[1, 1, 3])), q_matrix_eval(&cf(&[1, 1, 2, 1])));
    }

    #[test]
    fn integer_matrix_edge_case() {
        for n in 1..12u64 {
            let v = q_matrix_eval(&cf(&[n as i64]));
            assert_eq!(v.num(), &q_int(n, false));
            if n >= 2 {
                assert_eq!(q_matrix_eval(&cf(&[n as i64]).even_form()), v);
            }
        }
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(q_continuant(&cf(&[2, 2])), lp("1 + 2q + q^2 + q^3"));
        assert_eq!(q_continuant(&cf(&[4, 3])), lp("1 + 2q + 3q^2 + 3q^3 + 2q^4 + q^5 + q^6"));
        assert_eq!(q_continuant(&cf(&[6])), q_int(6, false));
        assert_eq!(continuant_determinant(&cf(&[2, 2])), lp("q^-1 + 2 + q + q^2"));
        assert_eq!(
            continuant_determinant(&cf(&[4, 3])),
            lp("q^-2 + 2q^-1 + 3 + 3q + 2q^2 + q^3 + q^4")
        );
    }

    #[test]
    fn q_rational_examples() {
        let v = q_rational(8, 5).unwrap();
        assert_eq!((v.num(), v.den()), (&lp("1 + 2q + 2q^2 + 2q^3 + q^4"), &lp("1 + 2q + q^2 + q^3")));
        let v = q_rational(21, 13).unwrap();
        assert_eq!(v.num(), &lp("1 + 3q + 4q^2 + 5q^3 + 4q^4 + 3q^5 + q^6"));
        assert_eq!(v.den(), &lp("1 + 3q + 3q^2 + 3q^3 + 2q^4 + q^5"));
        let v = q_rational(1, 1).unwrap();
        assert!(v.num().is_one() && v.den().is_one());
        assert!(q_rational(6, 4).is_err());
    }

    #[test]
    fn general_map_examples() {
        assert_eq!(q_map_general(0), LaurentFraction::zero());
        let v = q_map_general(Rational64::new(5, 2));
        assert_eq!((v.num(), v.den()), (&lp("1 + 2q + q^2 + q^3"), &lp("1 + q")));
        assert!(q_map_general(ExtRational::Infinity).is_infinite());
        // hand recursion: [-1/2] = -1/(q [2]_q)
        let two = LaurentFraction::from_poly(q_int(2, false));
        let q = LaurentFraction::from_poly(LaurentPoly::q_pow(1));
        let expected = -&(&q * &two).recip();
        assert_eq!(q_map_general(Rational64::new(-1, 2)), expected);
        assert_eq!(expected.num(), &lp("-q^-1"));
        assert_eq!(expected.den(), &lp("1 + q"));
    }

    #[test]
    fn general_map_negative_integers() {
        // [-1]_q = -q^-1 from [0] = q[-1] + 1
        assert_eq!(q_map_general(-1), LaurentFraction::from_poly(lp("-q^-1")));
        // [-n]_q = -q^-n [n]_q
        for n in 1..8u64 {
            let expected = LaurentFraction::from_poly(-q_int(n, false).shift(-(n as i64)));
            assert_eq!(q_map_general(-(n as i64)), expected);
        }
    }

    #[test]
    fn generator_determinants() {
        assert_eq!(QMatrix::r_q().det(), lp("q"));
        assert_eq!(QMatrix::l_q().det(), lp("q"));
        assert_eq!(QMatrix::word(&[2, 3, 1]).det(), lp("q^6"));
    }

    #[test]
    fn fibonacci_examples() {
        let (num, den) = fibonacci_polys(4);
        assert_eq!(num, lp("1 + q + 2q^2 + q^3"));
        assert_eq!(den, lp("1 + q + q^2"));
        let (num, den) = fibonacci_polys(6);
        assert_eq!(num, lp("1 + 2q + 3q^2 + 3q^3 + 3q^4 + q^5"));
        assert_eq!(den, lp("1 + 2q + 2q^2 + 2q^3 + q^4"));
        let (num, den) = fibonacci_polys(1);
        assert!(num.is_one() && den.is_one());
        let (num, den) = fibonacci_polys(0);
        assert!(num.is_one() && den.is_zero());
    }

    #[test]
    fn scalar_exponent_examples() {
        assert_eq!(cf(&[2, 2]).scalar_exponent(), 1);
        assert_eq!(cf(&[2, 2, 2, 2]).scalar_exponent(), 3);
        assert_eq!(cf(&[4, 3]).scalar_exponent(), 2);
        assert_eq!(cf(&[7]).scalar_exponent(), 0);
        assert_eq!(cf(&[1]).scalar_exponent(), 0);
    }
}
