use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::ring::Field;

/// Exact rational number. Values that fit in `i64/i64` stay on the machine
/// word path and only spill to big integers on overflow.
#[derive(Clone, Debug)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    pub fn from_integer(n: i64) -> Self {
        Rational::Small(Ratio::from_integer(n))
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational::Small(Ratio::new(num, den))
    }

    fn big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => b.clone(),
        }
    }

    fn shrink(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(b),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_one(),
            Rational::Big(b) => b.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_negative(),
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_integer(),
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.big().numer().clone()
    }

    pub fn denom(&self) -> BigInt {
        self.big().denom().clone()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rational::Small(r) if *r.numer() != i64::MIN => Rational::Small(r.recip()),
            _ => Rational::shrink(self.big().recip()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a == b,
            _ => self.big() == other.big(),
        }
    }
}

impl Eq for Rational {}

impl std::hash::Hash for Rational {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Small and Big values of the same number must hash alike.
        match self {
            Rational::Small(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Rational::Big(b) => match Rational::shrink(b.clone()) {
                Rational::Small(r) => {
                    r.numer().hash(state);
                    r.denom().hash(state);
                }
                Rational::Big(b) => b.hash(state),
            },
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
                    if let Some(r) = a.$checked(b) {
                        return Rational::Small(r);
                    }
                }
                Rational::shrink(self.big().$method(rhs.big()))
            }
        }
    };
}

rational_binop!(Add, add, checked_add);
rational_binop!(Sub, sub, checked_sub);
rational_binop!(Mul, mul, checked_mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(r) if *r.numer() != i64::MIN => Rational::Small(-r),
            _ => Rational::shrink(-self.big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) => write!(f, "{r}"),
            Rational::Big(b) => write!(f, "{b}"),
        }
    }
}

/// A field element: an exact rational or a residue modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(Rational),
    Residue { value: u32, modulus: u32 },
}

impl Coefficient {
    pub fn zero(field: Field) -> Self {
        Coefficient::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Coefficient::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rational => Coefficient::Rational(Rational::from_integer(n)),
            Field::Prime(p) => Coefficient::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num/den` in the given field; `None` if `den` vanishes there.
    pub fn from_ratio(field: Field, num: i64, den: i64) -> Option<Self> {
        match field {
            Field::Rational => (den != 0).then(|| Coefficient::Rational(Rational::new(num, den))),
            Field::Prime(_) => {
                let d = Coefficient::from_i64(field, den);
                (!d.is_zero()).then(|| &Coefficient::from_i64(field, num) * &d.inv())
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rational,
            Coefficient::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.recip()),
            Coefficient::Residue { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let (mut base, mut exp, mut acc) = (*value as u64, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Coefficient::Residue {
                    value: acc as u32,
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Coefficient::one(self.field());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign used when rendering (`true` for a leading minus).
    pub(crate) fn renders_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Residue { .. } => false,
        }
    }

    /// Image of a rational coefficient in `F_p`; `None` if the denominator
    /// is divisible by `p`.
    pub fn reduce_mod(&self, field: Field) -> Option<Self> {
        match (self, field) {
            (_, Field::Rational) => (self.field() == Field::Rational).then(|| self.clone()),
            (Coefficient::Rational(r), Field::Prime(p)) => {
                let p_big = BigInt::from(p);
                let num = (r.numer() % &p_big + &p_big) % &p_big;
                let den = (r.denom() % &p_big + &p_big) % &p_big;
                if den.is_zero() {
                    return None;
                }
                let num = Coefficient::from_i64(field, num.to_i64().unwrap());
                let den = Coefficient::from_i64(field, den.to_i64().unwrap());
                Some(&num * &den.inv())
            }
            (Coefficient::Residue { modulus, .. }, Field::Prime(p)) => (*modulus == p).then(|| self.clone()),
        }
    }
}

fn mismatch(a: &Coefficient, b: &Coefficient) -> ! {
    panic!("coefficient fields differ: {} vs {}", a.field(), b.field())
}

macro_rules! coeff_binop {
    ($trait:ident, $method:ident, $modop:expr) => {
        impl $trait for &Coefficient {
            type Output = Coefficient;
            #[allow(clippy::suspicious_arithmetic_impl)]
            fn $method(self, rhs: &Coefficient) -> Coefficient {
                match (self, rhs) {
                    (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a.$method(b)),
                    (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, modulus: q })
                        if p == q =>
                    {
                        let f: fn(u64, u64, u64) -> u64 = $modop;
                        Coefficient::Residue {
                            value: f(*a as u64, *b as u64, *p as u64) as u32,
                            modulus: *p,
                        }
                    }
                    _ => mismatch(self, rhs),
                }
            }
        }
    };
}

coeff_binop!(Add, add, |a, b, p| (a + b) % p);
coeff_binop!(Sub, sub, |a, b, p| (a + p - b) % p);
coeff_binop!(Mul, mul, |a, b, p| a * b % p);

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(-r),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => write!(f, "{r}"),
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
