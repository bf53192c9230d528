//! Arithmetic in Z\[τ\] and Q(√5), where τ = (1+√5)/2 is the golden mean.
//!
//! Elements are stored on the basis {1, τ} with τ² = τ + 1. The ring is
//! norm-Euclidean, so gcds exist; since results of gcd/lcm type are only
//! defined up to the units ±τ^k, every such result is returned in a fixed
//! canonical associate form (totally positive, minimal trace, ties broken
//! by the lexicographically smallest coefficient pair).

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{CslError, Result};

/// An element a + bτ of Z\[τ\].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        GoldenInt::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    /// τ itself.
    pub fn tau() -> Self {
        GoldenInt::new(0, 1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenInt {
            a: n.into(),
            b: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Algebraic conjugation τ ↦ τ' = 1 − τ, so (a+bτ)' = (a+b) − bτ.
    pub fn conj(&self) -> Self {
        GoldenInt {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field trace x + x' = 2a + b.
    pub fn trace(&self) -> BigInt {
        BigInt::from(2) * &self.a + &self.b
    }

    /// Field norm x·x' = a² + ab − b² (signed).
    pub fn signed_norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Number-theoretic norm Nr(x) = |x·x'| ≥ 0.
    pub fn norm(&self) -> BigInt {
        self.signed_norm().abs()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Exact sign of the image of x under τ ↦ (1+√5)/2.
    pub fn sign_primary(&self) -> i8 {
        sign_u_plus_v_sqrt5(&self.trace(), &self.b)
    }

    /// Exact sign of the image of x under τ ↦ (1−√5)/2.
    pub fn sign_conjugate(&self) -> i8 {
        sign_u_plus_v_sqrt5(&self.trace(), &(-&self.b))
    }

    /// Both real embeddings strictly positive.
    pub fn is_totally_positive(&self) -> bool {
        self.sign_primary() > 0 && self.sign_conjugate() > 0
    }

    /// Both real embeddings non-negative.
    pub fn is_totally_nonneg(&self) -> bool {
        self.is_zero() || self.is_totally_positive()
    }

    /// The canonical associate x·(±τ^k): totally positive where possible
    /// (always, for x ≠ 0) with minimal trace; ties resolved by the
    /// lexicographically smallest (a, b).
    pub fn canonical_assoc(&self) -> GoldenInt {
        if self.is_zero() {
            return GoldenInt::zero();
        }
        let mut x = self.clone();
        if x.signed_norm().is_negative() {
            // N(τ) = −1 flips the norm sign.
            x = &x * &GoldenInt::tau();
        }
        if x.sign_primary() < 0 {
            x = -x;
        }
        debug_assert!(x.is_totally_positive());
        let tau2 = GoldenInt::new(1, 1); // τ²
        let tau2_inv = GoldenInt::new(2, -1); // τ⁻²
        loop {
            let down = &x * &tau2_inv;
            if down.trace() < x.trace() {
                x = down;
                continue;
            }
            let up = &x * &tau2;
            if up.trace() < x.trace() {
                x = up;
                continue;
            }
            // Trace is minimal; at most one neighbour can tie it.
            for cand in [down, up] {
                if cand.trace() == x.trace() && lex_lt(&cand, &x) {
                    x = cand;
                }
            }
            return x;
        }
    }

    /// True when `self` and `other` differ by a unit ±τ^k.
    pub fn is_associate(&self, other: &GoldenInt) -> bool {
        self.canonical_assoc() == other.canonical_assoc()
    }

    /// Nearest-integer division: returns (q, r) with self = q·other + r and
    /// Nr(r) < Nr(other). Z\[τ\] is norm-Euclidean, so this always holds.
    pub fn divmod(&self, other: &GoldenInt) -> Result<(GoldenInt, GoldenInt)> {
        if other.is_zero() {
            return Err(CslError::ZeroDivisor);
        }
        let num = self * &other.conj();
        let den = other.signed_norm();
        let q = GoldenInt {
            a: round_nearest(&num.a, &den),
            b: round_nearest(&num.b, &den),
        };
        let r = self - &(&q * other);
        debug_assert!(r.norm() < other.norm());
        Ok((q, r))
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &GoldenInt) -> Option<GoldenInt> {
        if other.is_zero() {
            return None;
        }
        let num = self * &other.conj();
        let den = other.signed_norm();
        if (&num.a % &den).is_zero() && (&num.b % &den).is_zero() {
            Some(GoldenInt {
                a: num.a / &den,
                b: num.b / den,
            })
        } else {
            None
        }
    }

    pub fn divides(&self, other: &GoldenInt) -> bool {
        other.exact_div(self).is_some()
    }

    /// Canonical gcd; errors when both arguments are zero.
    pub fn gcd(x: &GoldenInt, y: &GoldenInt) -> Result<GoldenInt> {
        if x.is_zero() && y.is_zero() {
            return Err(CslError::ZeroArgument);
        }
        let mut a = x.clone();
        let mut b = y.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.canonical_assoc())
    }

    /// Canonical lcm = xy/gcd(x,y); errors when either argument is zero.
    pub fn lcm(x: &GoldenInt, y: &GoldenInt) -> Result<GoldenInt> {
        if x.is_zero() || y.is_zero() {
            return Err(CslError::ZeroArgument);
        }
        let g = GoldenInt::gcd(x, y)?;
        let prod = x * y;
        let l = prod.exact_div(&g).expect("gcd divides the product");
        Ok(l.canonical_assoc())
    }

    /// Exact square root in Z\[τ\], if one exists. The result is returned
    /// with positive primary embedding (it is unique up to sign).
    pub fn sqrt(&self) -> Option<GoldenInt> {
        if self.is_zero() {
            return Some(GoldenInt::zero());
        }
        if !self.is_totally_positive() {
            return None;
        }
        let mut roots: Vec<GoldenInt> = Vec::new();
        // y = c + dτ with y² = (c²+d²) + (2cd+d²)τ = a + bτ.
        if self.b.is_zero() {
            if let Some(c) = int_sqrt(&self.a).ok().flatten() {
                roots.push(GoldenInt {
                    a: c,
                    b: BigInt::zero(),
                });
            }
        }
        // d ≠ 0 branch: 5d⁴ − (4a+2b)d² + b² = 0.
        let four_a_two_b = BigInt::from(4) * &self.a + BigInt::from(2) * &self.b;
        let disc = &four_a_two_b * &four_a_two_b - BigInt::from(20) * &self.b * &self.b;
        if !disc.is_negative() {
            if let Some(s) = int_sqrt(&disc).ok().flatten() {
                for sign in [1i32, -1] {
                    let num = &four_a_two_b + BigInt::from(sign) * &s;
                    let ten = BigInt::from(10);
                    if (&num % &ten).is_zero() && !num.is_negative() {
                        let d_sq = num / &ten;
                        if d_sq.is_zero() {
                            continue;
                        }
                        if let Some(d) = int_sqrt(&d_sq).ok().flatten() {
                            for d in [d.clone(), -d] {
                                let two_d = BigInt::from(2) * &d;
                                let c_num = &self.b - &d * &d;
                                if (&c_num % &two_d).is_zero() {
                                    let c = c_num / &two_d;
                                    roots.push(GoldenInt { a: c, b: d });
                                }
                            }
                        }
                    }
                }
            }
        }
        roots
            .into_iter()
            .filter(|y| &(y * y) == self)
            .find(|y| y.sign_primary() > 0)
    }

    /// Comparison key (trace, a, b) — the total order used when quaternion
    /// coordinates have to be compared.
    pub fn key(&self) -> (BigInt, BigInt, BigInt) {
        (self.trace(), self.a.clone(), self.b.clone())
    }

    /// All divisors of `self`, one canonical totally positive representative
    /// per associate class (1 and `self` itself included).
    pub fn divisors(&self) -> Vec<GoldenInt> {
        assert!(!self.is_zero(), "divisors of zero are not enumerable");
        let nr = self.norm();
        // A canonical divisor d has trace(d) ≤ √5·√Nr(d) ≤ √(5·Nr).
        let bound = {
            let five_nr = BigInt::from(5) * &nr;
            let mut t = five_nr.sqrt();
            if &t * &t < five_nr {
                t += 1;
            }
            t
        };
        let tmax = i64::try_from(&bound).expect("divisor bound fits in i64");
        let mut seen: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
        let mut out = Vec::new();
        for t in 1..=tmax {
            // |b| ≤ t/√5 < t/2 + 1 for the totally positive region.
            let bmax = t / 2 + 1;
            for b in -bmax..=bmax {
                if (t - b) % 2 != 0 {
                    continue;
                }
                let d = GoldenInt::new((t - b) / 2, b);
                if !d.is_totally_positive() || !d.divides(self) {
                    continue;
                }
                let c = d.canonical_assoc();
                if seen.insert((c.a.clone(), c.b.clone())) {
                    out.push(c);
                }
            }
        }
        out.sort();
        out
    }
}

fn lex_lt(x: &GoldenInt, y: &GoldenInt) -> bool {
    (&x.a, &x.b) < (&y.a, &y.b)
}

/// Total order by (trace, a, b).
impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trace()
            .cmp(&other.trace())
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact sign of (u + v√5)/2.
fn sign_u_plus_v_sqrt5(u: &BigInt, v: &BigInt) -> i8 {
    let su = sign_of(u);
    let sv = sign_of(v);
    match (su, sv) {
        (0, 0) => 0,
        (s, 0) => s,
        (0, s) => s,
        (1, 1) => 1,
        (-1, -1) => -1,
        _ => {
            // Mixed signs: compare u² with 5v² (equality impossible for
            // nonzero v since √5 is irrational).
            let u2 = u * u;
            let v2_5 = BigInt::from(5) * v * v;
            match u2.cmp(&v2_5) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => 0,
            }
        }
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Round p/q to the nearest integer, ties away from zero.
fn round_nearest(p: &BigInt, q: &BigInt) -> BigInt {
    BigRational::new(p.clone(), q.clone()).round().to_integer()
}

/// Exact integer square root: Ok(Some(r)) when n = r², Ok(None) for
/// non-squares, Err on negative input.
pub fn int_sqrt(n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_negative() {
        return Err(CslError::NegativeInput);
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        &self + &rhs
    }
}

impl Sub for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        &self - &rhs
    }
}

impl Mul for &GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        // (a+bτ)(c+dτ) = (ac+bd) + (ad+bc+bd)τ
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &self.a * &rhs.b + &self.b * &rhs.a;
        GoldenInt {
            a: ac + &bd,
            b: ad_bc + bd,
        }
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        &self * &rhs
    }
}

impl Mul<&BigInt> for &GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &BigInt) -> GoldenInt {
        GoldenInt {
            a: &self.a * rhs,
            b: &self.b * rhs,
        }
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}t", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}-{}t", self.a, -&self.b)
        } else {
            write!(f, "{}+{}t", self.a, self.b)
        }
    }
}

/// An element of Q(√5): a golden integer numerator over a positive integer
/// denominator, kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenRat {
    num: GoldenInt,
    den: BigInt,
}

impl GoldenRat {
    pub fn new(num: GoldenInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = GoldenRat { num, den };
        r.reduce();
        r
    }

    pub fn from_golden(x: GoldenInt) -> Self {
        GoldenRat {
            num: x,
            den: BigInt::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenRat::from_golden(GoldenInt::from_int(n))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        GoldenRat::new(GoldenInt::from_int(r.numer().clone()), r.denom().clone())
    }

    pub fn zero() -> Self {
        GoldenRat::from_int(0)
    }

    pub fn one() -> Self {
        GoldenRat::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &GoldenInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = -self.num.clone();
        }
        let g = self.num.a.gcd(&self.num.b).gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            self.num.a = &self.num.a / &g;
            self.num.b = &self.num.b / &g;
            self.den = &self.den / &g;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
        }
    }

    pub fn conj(&self) -> Self {
        GoldenRat {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    /// The rational coordinates (a, b) with self = a + bτ.
    pub fn components(&self) -> (BigRational, BigRational) {
        (
            BigRational::new(self.num.a.clone(), self.den.clone()),
            BigRational::new(self.num.b.clone(), self.den.clone()),
        )
    }

    /// Some(r) when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.b.is_zero() {
            Some(BigRational::new(self.num.a.clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<GoldenRat> {
        if self.is_zero() {
            return None;
        }
        // 1/(x/d) = d·x' / N(x)
        let n = self.num.signed_norm();
        let num = &self.num.conj() * &self.den;
        if n.is_negative() {
            Some(GoldenRat::new(-num, -n))
        } else {
            Some(GoldenRat::new(num, n))
        }
    }
}

impl Neg for &GoldenRat {
    type Output = GoldenRat;
    fn neg(self) -> GoldenRat {
        GoldenRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for &GoldenRat {
    type Output = GoldenRat;
    fn add(self, rhs: &GoldenRat) -> GoldenRat {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        GoldenRat::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &GoldenRat {
    type Output = GoldenRat;
    fn sub(self, rhs: &GoldenRat) -> GoldenRat {
        self + &(-rhs)
    }
}

impl Mul for &GoldenRat {
    type Output = GoldenRat;
    fn mul(self, rhs: &GoldenRat) -> GoldenRat {
        GoldenRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for GoldenRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = &self.num;
        if n.is_zero() {
            return write!(f, "0");
        }
        if n.b.is_zero() {
            write!(f, "{}", n.a)?;
        } else if n.a.is_zero() {
            write!(f, "{}t", n.b)?;
        } else if n.b.is_negative() {
            write!(f, "{}-{}t", n.a, -&n.b)?;
        } else {
            write!(f, "{}+{}t", n.a, n.b)?;
        }
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

impl FromStr for GoldenRat {
    type Err = CslError;

    /// Parses the exact component syntax used by the CLI: `p`, `p/q`,
    /// `p+qt`, `p+qt/r`, `qt/r`, `-t`, ... with `t` standing for τ.
    fn from_str(s: &str) -> Result<GoldenRat> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CslError::Parse("empty component".into()));
        }
        let (num_part, den) = match s.rsplit_once('/') {
            Some((n, d)) => {
                let d = d.trim();
                let den: BigInt = d
                    .parse()
                    .map_err(|_| CslError::Parse(bad(s, "invalid denominator")))?;
                if !den.is_positive() {
                    return Err(CslError::Parse(bad(s, "denominator must be positive")));
                }
                (n.trim(), den)
            }
            None => (s, BigInt::one()),
        };
        let mut a: Option<BigInt> = None;
        let mut b: Option<BigInt> = None;
        for (sign, digits, has_t) in
            scan_terms(num_part).map_err(|m| CslError::Parse(bad(s, &m)))?
        {
            let mag: BigInt = if digits.is_empty() {
                if has_t {
                    BigInt::one()
                } else {
                    return Err(CslError::Parse(bad(s, "missing digits")));
                }
            } else {
                digits
                    .parse()
                    .map_err(|_| CslError::Parse(bad(s, "invalid integer")))?
            };
            let val = if sign < 0 { -mag } else { mag };
            let slot = if has_t { &mut b } else { &mut a };
            if slot.is_some() {
                return Err(CslError::Parse(bad(s, "duplicate term")));
            }
            *slot = Some(val);
        }
        let num = GoldenInt {
            a: a.unwrap_or_else(BigInt::zero),
            b: b.unwrap_or_else(BigInt::zero),
        };
        Ok(GoldenRat::new(num, den))
    }
}

fn bad(s: &str, msg: &str) -> String {
    let mut out = String::new();
    out.push_str(msg);
    out.push_str(" in \"");
    out.push_str(s);
    out.push('"');
    out
}

/// Splits "a", "a+bt", "-bt", ... into (sign, digits, has_t) terms.
fn scan_terms(s: &str) -> core::result::Result<Vec<(i8, String, bool)>, String> {
    let mut terms = Vec::new();
    let mut chars = s.chars().peekable();
    loop {
        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
            chars.next();
        }
        if chars.peek().is_none() {
            break;
        }
        let mut sign = 1i8;
        match chars.peek() {
            Some('+') => {
                chars.next();
            }
            Some('-') => {
                sign = -1;
                chars.next();
            }
            _ => {
                if !terms.is_empty() {
                    return Err("missing sign between terms".to_string());
                }
            }
        }
        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
            chars.next();
        }
        let mut digits = String::new();
        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(chars.next().unwrap());
        }
        let has_t = matches!(chars.peek(), Some('t'));
        if has_t {
            chars.next();
        }
        if digits.is_empty() && !has_t {
            return Err("expected digits or t".to_string());
        }
        if terms.len() >= 2 {
            return Err("too many terms".to_string());
        }
        terms.push((sign, digits, has_t));
    }
    if terms.is_empty() {
        return Err("empty component".to_string());
    }
    Ok(terms)
}
