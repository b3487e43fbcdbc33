//! Commutative rings with unit, selectable at runtime.
//!
//! Every construction in this crate uses only `+`, `-`, unary negation and
//! `*`, so any commutative ring with unit works as a scalar type. Four
//! families are provided: arbitrary-precision integers, arbitrary-precision
//! rationals, integers modulo m (m >= 2, composite m allowed), and `f64`
//! with tolerance-based equality. The float ring is a convenience for
//! approximate data; its equality is not transitive and exact guarantees
//! only hold over the first three.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Serializable description of a ring, as it appears in JSON files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingSpec {
    Integer,
    Rational,
    Modular { modulus: u64 },
    Float { tolerance: f64 },
}

/// A validated ring, exposing the operations the rest of the crate needs.
#[derive(Debug, Clone, PartialEq)]
pub enum Ring {
    Integer,
    Rational,
    Modular { modulus: u64 },
    Float { tolerance: f64 },
}

/// An element of one of the supported rings.
///
/// Rational values are kept in lowest terms with positive denominator;
/// modular values are residues in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, PartialOrd, Eq, Ord, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Modular(u64),
    // f64 is not Eq/Ord/Hash; floats are wrapped so RingElement can key maps.
    Float(FloatBits),
}

/// Bit-level wrapper making `f64` usable inside `RingElement`.
///
/// Ordering and hashing use the raw bits; ring-level equality (with
/// tolerance) always goes through [`Ring::eq`].
#[derive(Debug, Clone, Copy)]
pub struct FloatBits(pub f64);

impl PartialEq for FloatBits {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}
impl Eq for FloatBits {}
impl PartialOrd for FloatBits {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FloatBits {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}
impl std::hash::Hash for FloatBits {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state)
    }
}

/// Operation selector for [`Ring::eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Neg,
    Mul,
    Eq,
}

/// Result of [`Ring::eval`]: an element for arithmetic ops, a bool for `Eq`.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalResult {
    Element(RingElement),
    Bool(bool),
}

impl Ring {
    /// Validates a spec and returns the ring it describes.
    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::Integer => Ok(Ring::Integer),
            RingSpec::Rational => Ok(Ring::Rational),
            RingSpec::Modular { modulus } => {
                if *modulus < 2 {
                    return Err(CoreError::Config(format!(
                        "modulus must be >= 2, got {modulus}"
                    )));
                }
                Ok(Ring::Modular { modulus: *modulus })
            }
            RingSpec::Float { tolerance } => {
                if !tolerance.is_finite() || *tolerance < 0.0 {
                    return Err(CoreError::Config(format!(
                        "tolerance must be finite and >= 0, got {tolerance}"
                    )));
                }
                Ok(Ring::Float {
                    tolerance: *tolerance,
                })
            }
        }
    }

    pub fn spec(&self) -> RingSpec {
        match self {
            Ring::Integer => RingSpec::Integer,
            Ring::Rational => RingSpec::Rational,
            Ring::Modular { modulus } => RingSpec::Modular { modulus: *modulus },
            Ring::Float { tolerance } => RingSpec::Float {
                tolerance: *tolerance,
            },
        }
    }

    /// True for rings whose equality is exact (everything but the float ring).
    pub fn is_exact(&self) -> bool {
        !matches!(self, Ring::Float { .. })
    }

    /// Checks that `el` is an element of this ring.
    pub fn check(&self, el: &RingElement) -> Result<()> {
        let ok = match (self, el) {
            (Ring::Integer, RingElement::Integer(_)) => true,
            (Ring::Rational, RingElement::Rational(_)) => true,
            (Ring::Modular { modulus }, RingElement::Modular(v)) => v < modulus,
            (Ring::Float { .. }, RingElement::Float(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(CoreError::Mismatch(format!(
                "element {el} does not belong to ring {self:?}"
            )))
        }
    }

    pub fn zero(&self) -> RingElement {
        match self {
            Ring::Integer => RingElement::Integer(BigInt::zero()),
            Ring::Rational => RingElement::Rational(BigRational::zero()),
            Ring::Modular { .. } => RingElement::Modular(0),
            Ring::Float { .. } => RingElement::Float(FloatBits(0.0)),
        }
    }

    pub fn one(&self) -> RingElement {
        match self {
            Ring::Integer => RingElement::Integer(BigInt::one()),
            Ring::Rational => RingElement::Rational(BigRational::one()),
            Ring::Modular { .. } => RingElement::Modular(1 % self.modulus_unwrap()),
            Ring::Float { .. } => RingElement::Float(FloatBits(1.0)),
        }
    }

    /// Embeds a small integer, reducing mod m in the modular ring.
    pub fn from_i64(&self, v: i64) -> RingElement {
        match self {
            Ring::Integer => RingElement::Integer(BigInt::from(v)),
            Ring::Rational => RingElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Ring::Modular { modulus } => {
                RingElement::Modular((v.rem_euclid(*modulus as i64)) as u64)
            }
            Ring::Float { .. } => RingElement::Float(FloatBits(v as f64)),
        }
    }

    fn modulus_unwrap(&self) -> u64 {
        match self {
            Ring::Modular { modulus } => *modulus,
            _ => unreachable!("modulus_unwrap on non-modular ring"),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (Ring::Integer, RingElement::Integer(x), RingElement::Integer(y)) => {
                RingElement::Integer(x + y)
            }
            (Ring::Rational, RingElement::Rational(x), RingElement::Rational(y)) => {
                RingElement::Rational(x + y)
            }
            (Ring::Modular { modulus }, RingElement::Modular(x), RingElement::Modular(y)) => {
                RingElement::Modular(((*x as u128 + *y as u128) % *modulus as u128) as u64)
            }
            (Ring::Float { .. }, RingElement::Float(x), RingElement::Float(y)) => {
                RingElement::Float(FloatBits(x.0 + y.0))
            }
            _ => panic!("ring/element mismatch in add: {self:?} with {a} and {b}"),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match (self, a) {
            (Ring::Integer, RingElement::Integer(x)) => RingElement::Integer(-x),
            (Ring::Rational, RingElement::Rational(x)) => RingElement::Rational(-x),
            (Ring::Modular { modulus }, RingElement::Modular(x)) => {
                RingElement::Modular(if *x == 0 { 0 } else { modulus - x })
            }
            (Ring::Float { .. }, RingElement::Float(x)) => RingElement::Float(FloatBits(-x.0)),
            _ => panic!("ring/element mismatch in neg: {self:?} with {a}"),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (Ring::Integer, RingElement::Integer(x), RingElement::Integer(y)) => {
                RingElement::Integer(x * y)
            }
            (Ring::Rational, RingElement::Rational(x), RingElement::Rational(y)) => {
                RingElement::Rational(x * y)
            }
            (Ring::Modular { modulus }, RingElement::Modular(x), RingElement::Modular(y)) => {
                RingElement::Modular(((*x as u128 * *y as u128) % *modulus as u128) as u64)
            }
            (Ring::Float { .. }, RingElement::Float(x), RingElement::Float(y)) => {
                RingElement::Float(FloatBits(x.0 * y.0))
            }
            _ => panic!("ring/element mismatch in mul: {self:?} with {a} and {b}"),
        }
    }

    /// Ring equality: exact for integer/rational/modular, within tolerance
    /// for floats.
    pub fn eq(&self, a: &RingElement, b: &RingElement) -> bool {
        match (self, a, b) {
            (Ring::Float { tolerance }, RingElement::Float(x), RingElement::Float(y)) => {
                (x.0 - y.0).abs() <= *tolerance
            }
            _ => a == b,
        }
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        self.eq(a, &self.zero())
    }

    /// Dispatches a ring operation by name, validating operands first.
    ///
    /// `Neg` takes one operand; all other ops take two.
    pub fn eval(&self, op: RingOp, a: &RingElement, b: Option<&RingElement>) -> Result<EvalResult> {
        self.check(a)?;
        let b = match (op, b) {
            (RingOp::Neg, None) => None,
            (RingOp::Neg, Some(_)) => {
                return Err(CoreError::Validation("neg takes one operand".into()))
            }
            (_, Some(b)) => {
                self.check(b)?;
                Some(b)
            }
            (_, None) => return Err(CoreError::Validation(format!("{op:?} takes two operands"))),
        };
        Ok(match op {
            RingOp::Add => EvalResult::Element(self.add(a, b.unwrap())),
            RingOp::Sub => EvalResult::Element(self.sub(a, b.unwrap())),
            RingOp::Neg => EvalResult::Element(self.neg(a)),
            RingOp::Mul => EvalResult::Element(self.mul(a, b.unwrap())),
            RingOp::Eq => EvalResult::Bool(self.eq(a, b.unwrap())),
        })
    }

    /// Parses the string form of an element.
    ///
    /// Integers: decimal. Rationals: `p/q` or a bare integer; the value is
    /// reduced and the denominator made positive. Modular: any decimal
    /// integer, reduced to its residue. Floats: any finite decimal.
    pub fn parse(&self, s: &str) -> Result<RingElement> {
        match self {
            Ring::Integer => BigInt::from_str(s)
                .map(RingElement::Integer)
                .map_err(|e| CoreError::Parse(format!("bad integer {s:?}: {e}"))),
            Ring::Rational => {
                if let Some((num, den)) = s.split_once('/') {
                    let n = BigInt::from_str(num)
                        .map_err(|e| CoreError::Parse(format!("bad numerator {num:?}: {e}")))?;
                    let d = BigInt::from_str(den)
                        .map_err(|e| CoreError::Parse(format!("bad denominator {den:?}: {e}")))?;
                    if d.is_zero() {
                        return Err(CoreError::Parse(format!("zero denominator in {s:?}")));
                    }
                    Ok(RingElement::Rational(BigRational::new(n, d)))
                } else {
                    BigInt::from_str(s)
                        .map(|n| RingElement::Rational(BigRational::from_integer(n)))
                        .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))
                }
            }
            Ring::Modular { modulus } => {
                let n = BigInt::from_str(s)
                    .map_err(|e| CoreError::Parse(format!("bad residue {s:?}: {e}")))?;
                let m = BigInt::from(*modulus);
                let r = ((n % &m) + &m) % &m;
                Ok(RingElement::Modular(r.to_u64().expect("residue fits u64")))
            }
            Ring::Float { .. } => {
                let v = f64::from_str(s)
                    .map_err(|e| CoreError::Parse(format!("bad float {s:?}: {e}")))?;
                if !v.is_finite() {
                    return Err(CoreError::Parse(format!("non-finite float {s:?}")));
                }
                Ok(RingElement::Float(FloatBits(v)))
            }
        }
    }

    /// Canonical string form; `parse(format(x)) == x` on every ring.
    pub fn format(&self, el: &RingElement) -> String {
        el.to_string()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(n) => write!(f, "{n}"),
            RingElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            RingElement::Modular(v) => write!(f, "{v}"),
            RingElement::Float(x) => write!(f, "{}", x.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_spec_builds_working_rings() {
        let z = Ring::from_spec(&RingSpec::Integer).unwrap();
        assert_eq!(z.add(&z.from_i64(2), &z.from_i64(3)), z.from_i64(5));

        let m7 = Ring::from_spec(&RingSpec::Modular { modulus: 7 }).unwrap();
        assert_eq!(m7.mul(&m7.from_i64(5), &m7.from_i64(3)), m7.one());

        let q = Ring::from_spec(&RingSpec::Rational).unwrap();
        let half = q.parse("1/2").unwrap();
        let third = q.parse("1/3").unwrap();
        assert_eq!(q.add(&half, &third), q.parse("5/6").unwrap());
    }

    #[test]
    fn from_spec_rejects_bad_configs() {
        assert!(matches!(
            Ring::from_spec(&RingSpec::Modular { modulus: 1 }),
            Err(CoreError::Config(_))
        ));
        assert!(matches!(
            Ring::from_spec(&RingSpec::Float { tolerance: -1.0 }),
            Err(CoreError::Config(_))
        ));
        assert!(matches!(
            Ring::from_spec(&RingSpec::Float {
                tolerance: f64::NAN
            }),
            Err(CoreError::Config(_))
        ));
    }

    #[test]
    fn eval_dispatches_and_validates() {
        let z = Ring::Integer;
        assert_eq!(
            z.eval(RingOp::Mul, &z.from_i64(-2), Some(&z.from_i64(3)))
                .unwrap(),
            EvalResult::Element(z.from_i64(-6))
        );

        let m7 = Ring::Modular { modulus: 7 };
        assert_eq!(
            m7.eval(RingOp::Neg, &m7.from_i64(3), None).unwrap(),
            EvalResult::Element(m7.from_i64(4))
        );

        let f = Ring::Float { tolerance: 1e-9 };
        let a = f.parse("1").unwrap();
        let b = RingElement::Float(FloatBits(1.0 + 1e-12));
        assert_eq!(
            f.eval(RingOp::Eq, &a, Some(&b)).unwrap(),
            EvalResult::Bool(true)
        );

        // cross-ring operands are rejected
        assert!(matches!(
            z.eval(RingOp::Add, &z.from_i64(1), Some(&m7.from_i64(1))),
            Err(CoreError::Mismatch(_))
        ));
        assert!(matches!(
            z.eval(RingOp::Add, &z.from_i64(1), None),
            Err(CoreError::Validation(_))
        ));
    }

    #[test]
    fn parse_format_round_trips() {
        let cases: Vec<(Ring, &str)> = vec![
            (Ring::Integer, "-12345678901234567890"),
            (Ring::Integer, "0"),
            (Ring::Rational, "5/6"),
            (Ring::Rational, "-7/3"),
            (Ring::Rational, "42"),
            (Ring::Modular { modulus: 97 }, "96"),
            (Ring::Float { tolerance: 0.0 }, "0.1"),
            (Ring::Float { tolerance: 0.0 }, "-2.5"),
        ];
        for (ring, s) in cases {
            let el = ring.parse(s).unwrap();
            assert_eq!(ring.format(&el), s, "canonical form of {s:?}");
            assert_eq!(ring.parse(&ring.format(&el)).unwrap(), el);
        }
        // scientific notation is accepted and survives by value
        let f = Ring::Float { tolerance: 0.0 };
        let el = f.parse("-3.5e-20").unwrap();
        assert_eq!(f.parse(&f.format(&el)).unwrap(), el);
    }

    #[test]
    fn parse_canonicalizes() {
        let q = Ring::Rational;
        assert_eq!(q.format(&q.parse("4/6").unwrap()), "2/3");
        assert_eq!(q.format(&q.parse("3/-6").unwrap()), "-1/2");
        assert_eq!(q.format(&q.parse("9/3").unwrap()), "3");
        let m = Ring::Modular { modulus: 7 };
        assert_eq!(m.format(&m.parse("-1").unwrap()), "6");
        assert_eq!(m.format(&m.parse("23").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        let f = Ring::Float { tolerance: 0.0 };
        assert!(f.parse("inf").is_err());
    }

    #[test]
    fn modular_arithmetic_stays_reduced() {
        let m = Ring::Modular { modulus: 6 }; // composite modulus is allowed
        for a in 0..6 {
            for b in 0..6 {
                let x = m.from_i64(a);
                let y = m.from_i64(b);
                m.check(&m.add(&x, &y)).unwrap();
                m.check(&m.mul(&x, &y)).unwrap();
                assert_eq!(m.add(&x, &m.neg(&x)), m.zero());
            }
        }
    }
}
