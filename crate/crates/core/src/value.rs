//! Exact scalar values, extended costs, and the numeric comparison mode.
//!
//! Every quantity in this crate is carried as an exact rational
//! ([`Value`]), whatever the numeric mode of the space it came from. The
//! mode only controls two things: how equalities are decided (exact vs
//! within a relative tolerance) and how values are printed ("p/q" vs 12
//! significant digits). This keeps arithmetic deterministic and makes the
//! exact-equality operations (betweenness, relators, tight pairs) reliable,
//! while float-mode inputs still get tolerant comparisons.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// A finite exact scalar (signed rational).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(BigRational);

impl Value {
    pub fn zero() -> Self {
        Value(BigRational::zero())
    }

    pub fn one() -> Self {
        Value(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Value(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Value(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Exact conversion of a finite `f64` through its shortest decimal form,
    /// so `0.1` becomes `1/10` rather than the binary fraction behind it.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        Value::parse(&format!("{x}")).ok()
    }

    /// Parses `"p/q"`, integers, and decimal notation with an optional
    /// exponent (`"3/2"`, `"-7"`, `"0.25"`, `"1e-3"`).
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty numeric literal".into());
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            return Ok(Value(BigRational::new(n, d)));
        }
        parse_decimal(s).map(Value)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Value {
        Value(self.0.abs())
    }

    pub fn half(&self) -> Value {
        Value(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn max(self, other: Value) -> Value {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Value) -> Value {
        if self <= other {
            self
        } else {
            other
        }
    }
}

fn parse_decimal(s: &str) -> Result<BigRational, String> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("no digits in {s:?}"));
    }
    let all: String = format!("{int_part}{frac_part}");
    if !all.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("invalid numeric literal {s:?}"));
    }
    let num = BigInt::from_str(&all).map_err(|e| e.to_string())? * BigInt::from(sign);
    let scale = frac_part.len() as i64 - exp;
    let ten = BigInt::from(10);
    let rational = if scale >= 0 {
        BigRational::new(num, ten.pow(scale as u32))
    } else {
        BigRational::from_integer(num * ten.pow((-scale) as u32))
    };
    Ok(rational)
}

impl fmt::Display for Value {
    /// Exact form: bare integer when the denominator is 1, else `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Value {
            type Output = Value;
            fn $method(self, rhs: Value) -> Value {
                Value((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Value {
            type Output = Value;
            fn $method(self, rhs: &Value) -> Value {
                Value((&self.0).$method(&rhs.0))
            }
        }
    };
}

value_binop!(Add, add);
value_binop!(Sub, sub);
value_binop!(Mul, mul);
value_binop!(Div, div);

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-self.0)
    }
}

impl Neg for &Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-&self.0)
    }
}

/// An extended value: finite exact scalar or `+INF`.
///
/// Cost matrices hold nonnegative entries (enforced at construction), but
/// the type itself admits negative finite values; tightening operators
/// legitimately produce them. `INF` is absorbing for addition and greater
/// than every finite value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtCost {
    Finite(Value),
    Infinity,
}

impl ExtCost {
    pub fn zero() -> Self {
        ExtCost::Finite(Value::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtCost::Finite(Value::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        ExtCost::Finite(Value::ratio(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtCost::Finite(_))
    }

    pub fn finite(&self) -> Option<&Value> {
        match self {
            ExtCost::Finite(v) => Some(v),
            ExtCost::Infinity => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtCost::Finite(v) if v.is_zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtCost::Finite(v) => v.to_f64(),
            ExtCost::Infinity => f64::INFINITY,
        }
    }

    /// `self - rhs` with a finite right-hand side; `INF - x = INF`.
    pub fn sub_finite(&self, rhs: &Value) -> ExtCost {
        match self {
            ExtCost::Finite(v) => ExtCost::Finite(v - rhs),
            ExtCost::Infinity => ExtCost::Infinity,
        }
    }

    /// Ratio `self / den` for `den >= 0`, with the hard-constraint
    /// conventions at zero: `0/0 = 0` and `c/0 = INF` for `c > 0`.
    pub fn ratio_by(&self, den: &Value) -> ExtCost {
        assert!(!den.is_negative(), "negative denominator in cost ratio");
        match self {
            ExtCost::Infinity => ExtCost::Infinity,
            ExtCost::Finite(c) => {
                if den.is_zero() {
                    if c.is_zero() {
                        ExtCost::zero()
                    } else {
                        ExtCost::Infinity
                    }
                } else {
                    ExtCost::Finite(c / den)
                }
            }
        }
    }
}

impl Add for &ExtCost {
    type Output = ExtCost;
    fn add(self, rhs: &ExtCost) -> ExtCost {
        match (self, rhs) {
            (ExtCost::Finite(a), ExtCost::Finite(b)) => ExtCost::Finite(a + b),
            _ => ExtCost::Infinity,
        }
    }
}

impl Add for ExtCost {
    type Output = ExtCost;
    fn add(self, rhs: ExtCost) -> ExtCost {
        &self + &rhs
    }
}

impl From<Value> for ExtCost {
    fn from(v: Value) -> Self {
        ExtCost::Finite(v)
    }
}

impl fmt::Display for ExtCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCost::Finite(v) => write!(f, "{v}"),
            ExtCost::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// How a space decides equalities and prints values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericMode {
    /// Exact comparisons; values printed as `p/q`.
    Rational,
    /// Comparisons within a relative tolerance; values printed with 12
    /// significant digits.
    Float { tolerance: Value },
}

impl NumericMode {
    /// Float mode with the default tolerance `1e-9`.
    pub fn float_default() -> Self {
        NumericMode::Float {
            tolerance: Value::ratio(1, 1_000_000_000),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, NumericMode::Rational)
    }

    /// Equality of finite values. In float mode the test is
    /// `|a - b| <= tol * max(1, |scale|)`; the scale is the reference
    /// magnitude of the equation being tested (e.g. `c(p,r)` for a
    /// betweenness equality), which keeps the tolerance scale-free.
    pub fn eq_values(&self, a: &Value, b: &Value, scale: &Value) -> bool {
        match self {
            NumericMode::Rational => a == b,
            NumericMode::Float { tolerance } => {
                let bound = tolerance * &Value::one().max(scale.abs());
                (a - b).abs() <= bound
            }
        }
    }

    /// Equality of extended values; `INF` only equals `INF`.
    pub fn eq_costs(&self, a: &ExtCost, b: &ExtCost, scale: &Value) -> bool {
        match (a, b) {
            (ExtCost::Infinity, ExtCost::Infinity) => true,
            (ExtCost::Finite(x), ExtCost::Finite(y)) => self.eq_values(x, y, scale),
            _ => false,
        }
    }

    /// Is `v` zero at the active tolerance (scale 1)?
    pub fn is_zero(&self, v: &Value) -> bool {
        self.eq_values(v, &Value::zero(), &Value::one())
    }

    /// Strict positivity beyond the tolerance: `> 0` exactly in rational
    /// mode, `> tol` in float mode.
    pub fn is_positive(&self, v: &Value) -> bool {
        match self {
            NumericMode::Rational => v.is_positive(),
            NumericMode::Float { tolerance } => v > tolerance,
        }
    }

    /// Renders a finite value: exact `p/q` in rational mode, 12 significant
    /// digits in float mode.
    pub fn format_value(&self, v: &Value) -> String {
        match self {
            NumericMode::Rational => v.to_string(),
            NumericMode::Float { .. } => format_sig12(v.to_f64()),
        }
    }

    pub fn format_cost(&self, c: &ExtCost) -> String {
        match c {
            ExtCost::Finite(v) => self.format_value(v),
            ExtCost::Infinity => "inf".to_string(),
        }
    }
}

/// Rounds to 12 significant digits, then prints the shortest decimal form
/// of the rounded value.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

/// Total order on extended costs used for deterministic tie-breaking.
pub fn cmp_costs(a: &ExtCost, b: &ExtCost) -> Ordering {
    a.cmp(b)
}
