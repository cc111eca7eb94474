//! Exact Laurent polynomials in `q` with big-integer coefficients, and their
//! fraction field.
//!
//! A [`LaurentPoly`] is stored densely: `coeffs[i]` is the coefficient of
//! `q^(min_deg + i)`. The canonical form has nonzero first and last
//! coefficients; the zero polynomial is the empty vector with `min_deg = 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LaurentError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from a dense coefficient list starting at
    /// `q^min_deg`; the result is trimmed to canonical form.
    pub fn new(min_deg: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_deg, coeffs };
        p.normalize();
        p
    }

    pub fn from_coeffs<T: Into<BigInt>>(min_deg: i64, coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::new(min_deg, coeffs.into_iter().map(Into::into).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn top_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_deg;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// A single term `c q^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_deg: self.min_deg + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `q^d * a(q^{-1})`.
    pub fn mirror(&self, d: i64) -> Self {
        match self.top_deg() {
            None => Self::zero(),
            Some(top) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self::new(d - top, coeffs)
            }
        }
    }

    /// Classical specialization `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_deg, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// All coefficients strictly positive (sign pattern of a q-deformed
    /// rational numerator or denominator).
    pub fn has_positive_coeffs(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(Signed::is_positive)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Quotient `c` with `divisor * c == self`, or an error if the division
    /// is not exact in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (quot, rem) = poly_divrem_exact_lead(&self.coeffs, &divisor.coeffs)
            .ok_or_else(|| LaurentError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })?;
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Self::new(self.min_deg - divisor.min_deg, quot))
    }

    /// Splits `self = q^k * p` where `p` is an honest polynomial with nonzero
    /// constant term.
    pub fn split_monomial(&self) -> (i64, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        (self.min_deg, Self::new(0, self.coeffs.clone()))
    }

    /// GCD of the polynomial parts (monomial factors removed), normalized to a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Self::zero(),
            (true, false) => normalize_sign(Self::new(0, other.coeffs.clone())),
            (false, true) => normalize_sign(Self::new(0, self.coeffs.clone())),
            (false, false) => Self::new(0, poly_gcd(&self.coeffs, &other.coeffs)),
        }
    }
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    if p.leading_coeff().is_some_and(Signed::is_negative) {
        -p
    } else {
        p
    }
}

/// Long division of dense ascending polynomials, requiring every leading
/// coefficient step to divide exactly. Returns `None` on a non-exact step.
fn poly_divrem_exact_lead(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    if a.len() < b.len() {
        return Some((Vec::new(), a.to_vec()));
    }
    let mut rem = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &q * bc;
        }
        quot[shift] = q;
    }
    Some((quot, rem))
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<BigInt> = p.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while rem.len() >= b.len() {
        let top = rem.last().cloned().expect("nonempty");
        let shift = rem.len() - b.len();
        rem.iter_mut().for_each(|x| *x *= lead);
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &top * bc;
        }
        rem = trim(rem);
    }
    rem
}

/// GCD over `Z[q]` via the primitive polynomial remainder sequence.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x.iter().map(|v| v * &c).collect()
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.min_deg.min(b.min_deg);
    let hi = a.top_deg().unwrap().max(b.top_deg().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_deg - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.min_deg - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::new(lo, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, false)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_dense(self, rhs, false);
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, true)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        self.coeffs.iter_mut().for_each(|c| *c = -&*c);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_deg + rhs.min_deg, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Ascending-exponent text form, e.g. `q^-1 + 2 + q + q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = exp == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("q")?,
                e => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the text form produced by `Display`. Accepts `2q^3`, `2*q^3`,
    /// `q^-1`, `q^{-1}` and bare integers, separated by `+` / `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut acc = LaurentPoly::zero();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            // a term ends at the next +/- that is not an exponent sign
            while i < bytes.len() {
                let c = bytes[i];
                if (c == b'+' || c == b'-') && i > start && bytes[i - 1] != b'^' && bytes[i - 1] != b'{' {
                    break;
                }
                i += 1;
            }
            let term = &cleaned[start..i];
            if term.is_empty() {
                return Err(bad());
            }
            let (coeff_str, var_part) = match term.find('q') {
                Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
                None => (term, None),
            };
            let coeff_str = coeff_str.trim_end_matches('*');
            let coeff = if coeff_str.is_empty() {
                if var_part.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coeff_str.parse::<BigInt>().map_err(|_| bad())?
            };
            let exp = match var_part {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let rest = rest.strip_prefix('^').ok_or_else(bad)?;
                    let rest = rest.trim_start_matches('{').trim_end_matches('}');
                    rest.parse::<i64>().map_err(|_| bad())?
                }
            };
            acc += &LaurentPoly::monomial(sign * coeff, exp);
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    min_deg: i64,
    coeffs: Vec<serde_json::Value>,
}

fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

/// JSON form `{"min_deg": -1, "coeffs": [1, 2, 1, 1]}`; coefficients outside
/// the `i64` range are written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentJson {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(bigint_to_json).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = LaurentJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient is not an integer")),
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom("coefficient string is not an integer")),
                _ => Err(D::Error::custom("coefficient must be a number or string")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(raw.min_deg, coeffs))
    }
}

/// Element of the fraction field of `Z[q, q^-1]`, kept reduced.
///
/// Canonical form: numerator and denominator share no factor of positive
/// degree nor any integer content, the denominator has `min_deg = 0` and a
/// positive constant term. The one exception is the point at infinity, the
/// value `1/0`, which only [`LaurentFraction::infinity`] produces.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Like [`new`](Self::new) but maps a zero denominator to `1/0`.
    pub fn from_projective(num: LaurentPoly, den: LaurentPoly) -> Self {
        if den.is_zero() {
            assert!(!num.is_zero(), "0/0 is not a projective point");
            return Self::infinity();
        }
        Self::reduced(num, den)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::reduced(p, LaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn infinity() -> Self {
        Self {
            num: LaurentPoly::one(),
            den: LaurentPoly::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: LaurentPoly::one(),
            };
        }
        let (a, n) = num.split_monomial();
        let (b, d) = den.split_monomial();
        let g = n.gcd(&d);
        let mut n = n.div_exact(&g).expect("gcd divides numerator");
        let mut d = d.div_exact(&g).expect("gcd divides denominator");
        if d.lowest_coeff().is_some_and(Signed::is_negative) {
            n = -n;
            d = -d;
        }
        Self { num: n.shift(a - b), den: d }
    }

    pub fn recip(&self) -> Self {
        Self::from_projective(self.den.clone(), self.num.clone())
    }

    /// Classical value at `q = 1` as `(numerator, denominator)` integers.
    pub fn eval_at_one(&self) -> (BigInt, BigInt) {
        (self.num.eval_at_one(), self.den.eval_at_one())
    }
}

impl Add for &LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::from_projective(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::from_projective(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::from_projective(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write_ratio(f, &self.num, &self.den)
        }
    }
}

/// `(1 + 2q + q^2 + q^3)/(1 + q)`; single terms are not parenthesized.
pub(crate) fn write_ratio(f: &mut fmt::Formatter<'_>, num: &LaurentPoly, den: &LaurentPoly) -> fmt::Result {
    let wrap = |p: &LaurentPoly| {
        if p.terms().count() > 1 {
            format!("({p})")
        } else {
            p.to_string()
        }
    };
    write!(f, "{}/{}", wrap(num), wrap(den))
}

/// Total order used only for deterministic sorting of polynomials in output.
impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min_deg
            .cmp(&other.min_deg)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Shorthand for tests and examples: parses the text form, panicking on
/// malformed input.
pub fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
