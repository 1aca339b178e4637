//! Exact coefficient arithmetic: arbitrary-precision rationals and a
//! word-size prime field, behind a single `Scalar` type.
//!
//! Every coefficient in the library is a `Scalar`; there is no floating
//! point anywhere. Rationals are kept in lowest terms with positive
//! denominator (guaranteed by `BigRational`), prime-field elements are
//! kept reduced to `[0, p)`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::fmt;
use std::sync::Mutex;

/// Default prime for finite-field computations: large enough that random
/// algebras behave generically, small enough that products fit in `u128`.
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field of a computation: exact rationals or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { val: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Fp { val: 1 % p, p },
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from(BigInt::from(v))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Fp { val: r, p }
            }
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from(v.clone())),
            Field::Prime(p) => {
                let m = v.mod_floor_u64(p);
                Scalar::Fp { val: m, p }
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{}", p),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (sign, digits) = m.to_u64_digits();
        match sign {
            Sign::NoSign => 0,
            Sign::Plus => digits[0],
            Sign::Minus => unreachable!("mod_floor of positive modulus"),
        }
    }
}

/// An exact field element: a rational number or an element of F_p.
///
/// Mixed-field arithmetic is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % p,
        }
    }

    pub fn from_rational(num: BigInt, den: BigInt) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        Scalar::Rat(BigRational::new(num, den))
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp { val: (a + b) % p, p: *p }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp { val: (p - val) % p, p: *p },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp { val: mulmod(*a, *b, *p), p: *p }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "inverse of zero");
                // Fermat: p is prime.
                Scalar::Fp { val: powmod(*val, p - 2, *p), p: *p }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                let mut acc = BigRational::one();
                let mut base = a.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                Scalar::Rat(acc)
            }
            Scalar::Fp { val, p } => Scalar::Fp { val: powmod(*val, e, *p), p: *p },
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// The F_p representative in `[0, p)`, if this is a prime-field scalar.
    pub fn as_fp(&self) -> Option<u64> {
        match self {
            Scalar::Fp { val, .. } => Some(*val),
            _ => None,
        }
    }

    /// Exact integer value of a rational scalar; `None` if it has a
    /// denominator or lives in F_p.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{}", val),
        }
    }
}

static FACTORIALS: Lazy<Mutex<Vec<BigInt>>> = Lazy::new(|| Mutex::new(vec![BigInt::one()]));

/// `n!` as a big integer, memoized up to the largest index requested.
pub fn factorial(n: usize) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `1/N!` as a rational scalar, with the convention `1/N! = 0` for `N < 0`.
pub fn inv_factorial(n: i64) -> Scalar {
    if n < 0 {
        Field::Rational.zero()
    } else {
        Scalar::Rat(BigRational::new(BigInt::one(), factorial(n as usize)))
    }
}

/// Sign `(-1)^n` as a big integer.
pub fn sign_pow(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Asserts that a rational scalar is an integer and returns it.
pub fn expect_integer(s: &Scalar, context: &str) -> BigInt {
    match s.to_integer() {
        Some(v) => v,
        None => panic!("expected an integer in {}, got {}", context, s),
    }
}

/// Asserts exact divisibility and returns the quotient.
pub fn exact_div_bigint(num: &BigInt, den: &BigInt, context: &str) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(num, den);
    assert!(r.is_zero(), "non-exact division in {}: {} / {}", context, num, den);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let a = Scalar::from_rational(BigInt::from(2), BigInt::from(4));
        let b = Scalar::from_rational(BigInt::from(1), BigInt::from(2));
        assert_eq!(a, b);
        let c = Scalar::from_rational(BigInt::from(1), BigInt::from(-2));
        assert!(c.as_rational().unwrap().denom().is_positive());
    }

    #[test]
    fn fp_reduced() {
        let f = Field::Prime(5);
        let a = f.from_i64(-3);
        assert_eq!(a.as_fp(), Some(2));
        assert_eq!(f.from_i64(7).as_fp(), Some(2));
        assert_eq!(a.mul(&f.from_i64(3)).as_fp(), Some(1)); // 2*3 = 6 = 1 mod 5
    }

    #[test]
    fn fp_inverse() {
        let f = Field::Prime(DEFAULT_PRIME);
        for v in [1i64, 2, 17, 32002] {
            let a = f.from_i64(v);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = Field::Rational.one().add(&Field::Prime(5).one());
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3628800u64));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        // large enough to overflow u64
        assert_eq!(
            binomial(70, 35),
            "112186277816662845432".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn inv_factorial_convention() {
        assert!(inv_factorial(-1).is_zero());
        assert_eq!(
            inv_factorial(3),
            Scalar::from_rational(BigInt::from(1), BigInt::from(6))
        );
    }
}
