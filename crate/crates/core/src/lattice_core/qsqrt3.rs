//! Exact arithmetic in the quadratic field Q(√3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::rational::Ratio;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = Ratio<i128>;

/// Shorthand for an integer-valued [`Rational`].
pub fn q(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// Shorthand for `p / d`.
pub fn qf(p: i128, d: i128) -> Rational {
    Rational::new(p, d)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Split off the integer part so huge numerators keep their fractional digits.
    let int = r.to_integer();
    let frac = r - Rational::from_integer(int);
    int as f64 + frac.numer().to_f64().unwrap_or(f64::NAN) / frac.denom().to_f64().unwrap_or(f64::NAN)
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i128 = b.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::new(a.trim().parse().ok()?, d))
        }
        None => s.parse::<i128>().ok().map(Rational::from_integer),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `p + q·√3` with rational `p`, `q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QSqrt3 {
    pub p: Rational,
    pub q: Rational,
}

impl QSqrt3 {
    pub fn new(p: Rational, q: Rational) -> Self {
        QSqrt3 { p, q }
    }

    pub fn from_int(n: i128) -> Self {
        QSqrt3::new(q(n), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        QSqrt3::new(r, Rational::zero())
    }

    pub fn sqrt3() -> Self {
        QSqrt3::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        QSqrt3::default()
    }

    pub fn one() -> Self {
        QSqrt3::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.p)
    }

    /// Galois conjugate `p − q√3`.
    pub fn conj(&self) -> Self {
        QSqrt3::new(self.p, -self.q)
    }

    /// Field norm `p² − 3q²`.
    pub fn norm(&self) -> Rational {
        self.p * self.p - q(3) * self.q * self.q
    }

    pub fn signum(&self) -> i32 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp >= 0 && sq >= 0 {
            return if sp + sq > 0 { 1 } else { 0 };
        }
        if sp <= 0 && sq <= 0 {
            return -1;
        }
        // Opposite signs: the larger of p² and 3q² wins.
        let lhs = self.p * self.p;
        let rhs = q(3) * self.q * self.q;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -*self
        } else {
            *self
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.p) + rational_to_f64(&self.q) * 3f64.sqrt()
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QSqrt3::new(c.p / n, c.q / n))
    }

    /// Floor as an integer, decided exactly.
    pub fn floor(&self) -> i128 {
        let guess = self.to_f64().floor() as i128;
        let mut k = guess - 1;
        while QSqrt3::from_int(k + 1) <= *self {
            k += 1;
        }
        while QSqrt3::from_int(k) > *self {
            k -= 1;
        }
        k
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl From<i128> for QSqrt3 {
    fn from(n: i128) -> Self {
        QSqrt3::from_int(n)
    }
}

impl From<Rational> for QSqrt3 {
    fn from(r: Rational) -> Self {
        QSqrt3::from_rational(r)
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.p, -self.q)
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3::new(
            self.p * o.p + q(3) * self.q * o.q,
            self.p * o.q + self.q * o.p,
        )
    }
}

impl Mul<Rational> for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, r: Rational) -> QSqrt3 {
        QSqrt3::new(self.p * r, self.q * r)
    }
}

/// Panics on division by zero, like the integer types.
impl Div for QSqrt3 {
    type Output = QSqrt3;
    fn div(self, o: QSqrt3) -> QSqrt3 {
        self * o.recip().expect("division by zero in Q(sqrt 3)")
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `p`, `q*sqrt3`, or `p+q*sqrt3`; [`QSqrt3::from_str`] reads the same forms.
impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.p)),
            (true, false) => write!(f, "{}*sqrt3", format_rational(&self.q)),
            (false, false) => {
                let sign = if self.q.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*sqrt3", format_rational(&self.p), sign, format_rational(&self.q.abs()))
            }
        }
    }
}

impl std::str::FromStr for QSqrt3 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("not an element of Q(sqrt3): {s:?}");
        let Some(body) = s.strip_suffix("*sqrt3") else {
            return parse_rational(s).map(QSqrt3::from_rational).ok_or_else(bad);
        };
        // Split at the last sign that is not the leading one.
        let cut = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match cut {
            None => parse_rational(body).map(|r| QSqrt3::new(Rational::zero(), r)).ok_or_else(bad),
            Some(i) => {
                let p = parse_rational(&body[..i]).ok_or_else(bad)?;
                let qs = &body[i..];
                let qv = parse_rational(qs.trim_start_matches('+')).ok_or_else(bad)?;
                Ok(QSqrt3::new(p, qv))
            }
        }
    }
}
