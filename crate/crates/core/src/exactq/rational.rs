use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{dense_divmod, trim, LaurentPoly};
use super::ExactqError;

/// Element of Q(q) in canonical form: `den` is an honest polynomial with
/// nonzero constant term and positive leading coefficient, and the integer
/// content of numerator and denominator together is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalQ {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactqError> {
        if den.is_zero() {
            return Err(ExactqError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if any.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self, ExactqError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        normalize(self.num.bar(), self.den.bar())
    }

    /// Value at q = 0; `None` when there is a pole.
    pub fn eval_at_zero(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        let lo = self.num.min_exp().unwrap();
        // den has nonzero constant term after normalization
        match lo.cmp(&0) {
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Greater => Some(BigRational::zero()),
            std::cmp::Ordering::Equal => Some(BigRational::new(
                self.num.coeff(0),
                self.den.coeff(0),
            )),
        }
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RationalQ {
    if num.is_zero() {
        return RationalQ::zero();
    }
    let (sa, a) = num.to_dense();
    let (sd, d) = den.to_dense();
    let g = dense_gcd(&a, &d);
    let (Some(mut a), _) = dense_divmod(&a, &g) else {
        unreachable!("gcd divides numerator")
    };
    let (Some(mut d), _) = dense_divmod(&d, &g) else {
        unreachable!("gcd divides denominator")
    };
    trim(&mut a);
    trim(&mut d);
    let c = a.iter().chain(d.iter()).fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if d.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    for x in a.iter_mut().chain(d.iter_mut()) {
        *x = &*x / &c;
    }
    RationalQ {
        num: LaurentPoly::from_dense(sa - sd, &a),
        den: LaurentPoly::from_dense(0, &d),
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn prim(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        out.iter_mut().for_each(|x| *x = -&*x);
    }
    out
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let off = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Gcd in Z[q] by the primitive remainder sequence.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let cg = content(a).gcd(&content(b));
    let (mut x, mut y) = (prim(a), prim(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { prim(&r) };
    }
    x.iter().map(|c| c * &cg).collect()
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        normalize(p, LaurentPoly::one())
    }
}

impl Add<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalQ> for &RationalQ {
    type Output = Result<RationalQ, ExactqError>;
    fn div(self, rhs: &RationalQ) -> Result<RationalQ, ExactqError> {
        Ok(self * &rhs.inv()?)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
