//! The Hurwitz ring J of integer quaternions: the Z-span of
//! (1,0,0,0), (0,1,0,0), (0,0,1,0), ½(1,1,1,1).
//!
//! Elements are stored through doubled coordinates, so membership is the
//! condition that all four doubled coordinates share one parity. J is
//! norm-Euclidean; one-sided division with remainder gives greatest common
//! one-sided divisors, which are defined up to units and returned in a
//! canonical form (lexicographically smallest coordinate tuple over the
//! 24 unit multiples).

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::golden::GoldenRat;
use crate::{CslError, Result};

/// A Hurwitz quaternion, stored as doubled coordinates d with value d/2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzQuat {
    d: [BigInt; 4],
}

impl HurwitzQuat {
    /// Builds from doubled coordinates; all four must share one parity.
    pub fn from_doubled(d: [BigInt; 4]) -> Result<Self> {
        let parity = (&d[0] % 2u8).abs();
        for di in &d[1..] {
            if (di % 2u8).abs() != parity {
                return Err(CslError::NotInRing(format!(
                    "doubled coordinates {},{},{},{} are not all of one parity",
                    d[0], d[1], d[2], d[3]
                )));
            }
        }
        Ok(HurwitzQuat { d })
    }

    /// Integer-coordinate quaternion a + bi + cj + dk.
    pub fn from_ints(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        HurwitzQuat {
            d: [a.into() * 2, b.into() * 2, c.into() * 2, d.into() * 2],
        }
    }

    pub fn zero() -> Self {
        HurwitzQuat::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        HurwitzQuat::from_ints(1, 0, 0, 0)
    }

    pub fn scalar(n: impl Into<BigInt>) -> Self {
        HurwitzQuat::from_ints(n, 0, 0, 0)
    }

    /// ½(1,1,1,1), the half-integer basis vector (a unit).
    pub fn omega() -> Self {
        HurwitzQuat {
            d: [BigInt::one(), BigInt::one(), BigInt::one(), BigInt::one()],
        }
    }

    pub fn doubled(&self) -> &[BigInt; 4] {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Zero::is_zero)
    }

    /// Rational coordinates of the quaternion.
    pub fn coords(&self) -> [BigRational; 4] {
        core::array::from_fn(|i| BigRational::new(self.d[i].clone(), BigInt::from(2)))
    }

    pub fn conj(&self) -> Self {
        HurwitzQuat {
            d: [self.d[0].clone(), -&self.d[1], -&self.d[2], -&self.d[3]],
        }
    }

    pub fn neg(&self) -> Self {
        HurwitzQuat {
            d: core::array::from_fn(|i| -&self.d[i]),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        HurwitzQuat {
            d: core::array::from_fn(|i| &self.d[i] + &rhs.d[i]),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        HurwitzQuat {
            d: core::array::from_fn(|i| &self.d[i] - &rhs.d[i]),
        }
    }

    /// Quaternion product. Products of ring elements stay in the ring.
    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.d;
        let b = &rhs.d;
        let p0 = &a[0] * &b[0] - &a[1] * &b[1] - &a[2] * &b[2] - &a[3] * &b[3];
        let p1 = &a[0] * &b[1] + &a[1] * &b[0] + &a[2] * &b[3] - &a[3] * &b[2];
        let p2 = &a[0] * &b[2] - &a[1] * &b[3] + &a[2] * &b[0] + &a[3] * &b[1];
        let p3 = &a[0] * &b[3] + &a[1] * &b[2] - &a[2] * &b[1] + &a[3] * &b[0];
        let halve = |x: BigInt| -> BigInt {
            debug_assert!(x.is_even(), "product left the ring");
            x / 2
        };
        HurwitzQuat {
            d: [halve(p0), halve(p1), halve(p2), halve(p3)],
        }
    }

    /// Reduced norm |q|² = Σ (dᵢ/2)², a non-negative integer on J.
    pub fn norm(&self) -> BigInt {
        let s: BigInt = self.d.iter().map(|x| x * x).sum();
        debug_assert!((&s % 4u8).is_zero(), "norm of a ring element is integral");
        s / 4
    }

    /// The 24 units of J.
    pub fn units() -> Vec<HurwitzQuat> {
        let mut out = Vec::with_capacity(24);
        for i in 0..4 {
            for s in [1i64, -1] {
                let mut d = [
                    BigInt::zero(),
                    BigInt::zero(),
                    BigInt::zero(),
                    BigInt::zero(),
                ];
                d[i] = BigInt::from(2 * s);
                out.push(HurwitzQuat { d });
            }
        }
        for s0 in [1i64, -1] {
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    for s3 in [1i64, -1] {
                        out.push(HurwitzQuat {
                            d: [
                                BigInt::from(s0),
                                BigInt::from(s1),
                                BigInt::from(s2),
                                BigInt::from(s3),
                            ],
                        });
                    }
                }
            }
        }
        out
    }

    /// Canonical representative of the right-unit orbit {q·u}, together
    /// with the unit u realising it.
    pub fn canonical_right_rep_with_unit(&self) -> (HurwitzQuat, HurwitzQuat) {
        let mut best: Option<(HurwitzQuat, HurwitzQuat)> = None;
        for u in HurwitzQuat::units() {
            let cand = self.mul(&u);
            match &best {
                Some((b, _)) if b.d <= cand.d => {}
                _ => best = Some((cand, u)),
            }
        }
        best.unwrap()
    }

    pub fn canonical_right_rep(&self) -> HurwitzQuat {
        self.canonical_right_rep_with_unit().0
    }

    /// Canonical representative of the left-unit orbit {u·q}.
    pub fn canonical_left_rep(&self) -> HurwitzQuat {
        HurwitzQuat::units()
            .into_iter()
            .map(|u| u.mul(self))
            .min_by(|x, y| x.d.cmp(&y.d))
            .unwrap()
    }

    /// Splits q = content · primitive with maximal natural content.
    pub fn content_and_primitive(&self) -> Result<(BigInt, HurwitzQuat)> {
        if self.is_zero() {
            return Err(CslError::ZeroQuaternion);
        }
        let mut g = BigInt::zero();
        for di in &self.d {
            g = g.gcd(di);
        }
        // q/n lies in J iff n | dᵢ for all i and the dᵢ/n share one parity.
        let all_odd = self.d.iter().all(|di| (di / &g).is_odd());
        let content = if all_odd {
            g
        } else {
            debug_assert!(g.is_even(), "mixed parity forces an even gcd");
            g / 2
        };
        let prim = HurwitzQuat {
            d: core::array::from_fn(|i| &self.d[i] / &content),
        };
        Ok((content, prim))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.content_and_primitive()?.0.is_one())
    }

    /// A primitive quaternion is reduced when its norm is odd.
    pub fn is_reduced(&self) -> Result<bool> {
        if !self.is_primitive()? {
            return Err(CslError::NotPrimitive);
        }
        Ok(self.norm().is_odd())
    }

    /// Decomposes a primitive q as q = q_r·s with |q_r|² odd and |s|² a
    /// power of two; q_r is returned in canonical right-unit form.
    pub fn reduced_decompose(&self) -> Result<(HurwitzQuat, HurwitzQuat)> {
        if !self.is_primitive()? {
            return Err(CslError::NotPrimitive);
        }
        let two = HurwitzQuat::scalar(2);
        let mut qr = self.clone();
        let mut s = HurwitzQuat::one();
        while qr.norm().is_even() {
            // Primitive with even norm: the 2-part comes off as a right
            // divisor of norm 2.
            let t = HurwitzQuat::grcd(&qr, &two)?;
            debug_assert_eq!(t.norm(), BigInt::from(2));
            let x = qr.mul(&t.conj());
            let x = HurwitzQuat {
                d: core::array::from_fn(|i| &x.d[i] / 2),
            };
            s = t.mul(&s);
            qr = x;
        }
        let (canon, u) = qr.canonical_right_rep_with_unit();
        // q = qr·s = (qr·u)(ū·s)
        s = u.conj().mul(&s);
        qr = canon;
        debug_assert_eq!(qr.mul(&s), *self);
        Ok((qr, s))
    }

    /// Left-quotient division a = q·b + r with |r|² < |b|².
    pub fn left_divmod(a: &HurwitzQuat, b: &HurwitzQuat) -> Result<(HurwitzQuat, HurwitzQuat)> {
        if b.is_zero() {
            return Err(CslError::ZeroDivisor);
        }
        let num = a.mul(&b.conj());
        let n = b.norm();
        let q = nearest_hurwitz(&num.d, &n);
        let r = a.sub(&q.mul(b));
        debug_assert!(r.norm() < b.norm());
        Ok((q, r))
    }

    /// Right-quotient division a = b·q + r with |r|² < |b|².
    pub fn right_divmod(a: &HurwitzQuat, b: &HurwitzQuat) -> Result<(HurwitzQuat, HurwitzQuat)> {
        if b.is_zero() {
            return Err(CslError::ZeroDivisor);
        }
        let num = b.conj().mul(a);
        let n = b.norm();
        let q = nearest_hurwitz(&num.d, &n);
        let r = a.sub(&b.mul(&q));
        debug_assert!(r.norm() < b.norm());
        Ok((q, r))
    }

    /// Greatest common left divisor: a, b ∈ dJ, canonical up to right units.
    pub fn glcd(a: &HurwitzQuat, b: &HurwitzQuat) -> Result<HurwitzQuat> {
        if a.is_zero() && b.is_zero() {
            return Err(CslError::ZeroArgument);
        }
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = HurwitzQuat::right_divmod(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(x.canonical_right_rep())
    }

    /// Greatest common right divisor: a, b ∈ Jd, canonical up to left units.
    pub fn grcd(a: &HurwitzQuat, b: &HurwitzQuat) -> Result<HurwitzQuat> {
        if a.is_zero() && b.is_zero() {
            return Err(CslError::ZeroArgument);
        }
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = HurwitzQuat::left_divmod(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(x.canonical_left_rep())
    }

    /// Does d divide a on the left (a ∈ dJ)?
    pub fn left_divides(d: &HurwitzQuat, a: &HurwitzQuat) -> bool {
        if d.is_zero() {
            return a.is_zero();
        }
        let num = d.conj().mul(a);
        exact_quotient(&num.d, &d.norm()).is_some()
    }

    /// Does d divide a on the right (a ∈ Jd)?
    pub fn right_divides(d: &HurwitzQuat, a: &HurwitzQuat) -> bool {
        if d.is_zero() {
            return a.is_zero();
        }
        let num = a.mul(&d.conj());
        exact_quotient(&num.d, &d.norm()).is_some()
    }

    /// All q ∈ J with |q|² = m. For odd m the count is 24·σ₁(m).
    pub fn enumerate_norm(m: &BigInt) -> Vec<HurwitzQuat> {
        assert!(!m.is_negative(), "norm target must be non-negative");
        if m.is_zero() {
            return alloc::vec![HurwitzQuat::zero()];
        }
        let target = i64::try_from(m).expect("enumeration target fits in i64") * 4;
        let mut out = Vec::new();
        // Doubled coordinates: all even or all odd, Σ dᵢ² = 4m.
        for parity in [0i64, 1] {
            let mut d = [0i64; 4];
            enumerate_rec(target, parity, 0, &mut d, &mut out);
        }
        out
    }
}

fn enumerate_rec(
    remaining: i64,
    parity: i64,
    idx: usize,
    d: &mut [i64; 4],
    out: &mut Vec<HurwitzQuat>,
) {
    if idx == 3 {
        // Last coordinate determined up to sign.
        let r = isqrt_i64(remaining);
        if r * r == remaining && (r & 1) == parity {
            d[3] = r;
            out.push(HurwitzQuat {
                d: core::array::from_fn(|i| BigInt::from(d[i])),
            });
            if r != 0 {
                d[3] = -r;
                out.push(HurwitzQuat {
                    d: core::array::from_fn(|i| BigInt::from(d[i])),
                });
            }
        }
        return;
    }
    let max = isqrt_i64(remaining);
    let mut v = parity;
    while v <= max {
        for s in [v, -v] {
            d[idx] = s;
            enumerate_rec(remaining - v * v, parity, idx + 1, d, out);
            if v == 0 {
                break;
            }
        }
        v += 2;
    }
}

pub(crate) fn isqrt_i64(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = 1i64 << ((64 - n.leading_zeros() as i64) / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Exact quotient with doubled coordinates num/n, or None.
fn exact_quotient(num: &[BigInt; 4], n: &BigInt) -> Option<HurwitzQuat> {
    let mut d = [
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ];
    for i in 0..4 {
        if !(&num[i] % n).is_zero() {
            return None;
        }
        d[i] = &num[i] / n;
    }
    HurwitzQuat::from_doubled(d).ok()
}

/// Nearest element of J to the quaternion with coordinates numᵢ/(2n):
/// minimal squared distance (equivalently minimal remainder norm), ties
/// resolved by the lexicographically smallest doubled coordinates.
fn nearest_hurwitz(num: &[BigInt; 4], n: &BigInt) -> HurwitzQuat {
    let mut axis: [Vec<BigInt>; 4] = Default::default();
    for i in 0..4 {
        // Doubled-coordinate window around numᵢ/n.
        let f = BigRational::new(num[i].clone(), n.clone())
            .floor()
            .to_integer();
        let window = [&f - 1, f.clone(), &f + 1, &f + 2];
        axis[i] = best_per_parity(&window, &num[i], n);
    }
    let mut best: Option<(BigInt, HurwitzQuat)> = None;
    for c0 in &axis[0] {
        for c1 in &axis[1] {
            for c2 in &axis[2] {
                for c3 in &axis[3] {
                    let cand = [c0.clone(), c1.clone(), c2.clone(), c3.clone()];
                    if HurwitzQuat::from_doubled(cand.clone()).is_err() {
                        continue;
                    }
                    // Squared distance scaled by (2n)²: Σ (2·numᵢ − 2n·... )
                    // equivalently Σ (numᵢ − n·dᵢ)² with dᵢ the doubled
                    // candidate halves; both sides use doubled coordinates.
                    let dist: BigInt = (0..4)
                        .map(|i| {
                            let t = &num[i] - n * &cand[i];
                            &t * &t
                        })
                        .sum();
                    let q = HurwitzQuat { d: cand };
                    match &best {
                        Some((bd, bq)) if (bd, &bq.d) <= (&dist, &q.d) => {}
                        _ => best = Some((dist, q)),
                    }
                }
            }
        }
    }
    best.unwrap().1
}

/// From a window of doubled-coordinate candidates keep, per parity class,
/// the values minimising |numᵢ − n·z|.
fn best_per_parity(window: &[BigInt], num: &BigInt, n: &BigInt) -> Vec<BigInt> {
    let mut keep: Vec<BigInt> = Vec::new();
    for parity in 0..2u8 {
        let mut best: Option<BigInt> = None;
        let mut best_vals: Vec<BigInt> = Vec::new();
        for z in window {
            if (z % 2u8).abs() != BigInt::from(parity) {
                continue;
            }
            let t = (num - n * z).abs();
            match &best {
                Some(b) if *b < t => {}
                Some(b) if *b == t => best_vals.push(z.clone()),
                _ => {
                    best = Some(t);
                    best_vals = alloc::vec![z.clone()];
                }
            }
        }
        keep.extend(best_vals);
    }
    keep.sort();
    keep.dedup();
    keep
}

impl fmt::Display for HurwitzQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, di) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if di.is_even() {
                write!(f, "{}", di / 2)?;
            } else {
                write!(f, "{}/2", di)?;
            }
        }
        Ok(())
    }
}

impl FromStr for HurwitzQuat {
    type Err = CslError;

    fn from_str(s: &str) -> Result<HurwitzQuat> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(CslError::Parse(format!(
                "expected 4 comma-separated components, got {}",
                parts.len()
            )));
        }
        let mut d = [
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
        ];
        for (i, p) in parts.iter().enumerate() {
            let g: GoldenRat = p.parse()?;
            let r = g
                .as_rational()
                .ok_or_else(|| CslError::NotInRing(format!("component {p} contains t")))?;
            let doubled = BigRational::from_integer(BigInt::from(2)) * r;
            if !doubled.is_integer() {
                return Err(CslError::NotInRing(format!(
                    "component {p} is not a half-integer"
                )));
            }
            d[i] = doubled.to_integer();
        }
        HurwitzQuat::from_doubled(d)
    }
}

/// Total order on doubled coordinates, used for canonical representatives.
pub fn cmp_doubled(x: &HurwitzQuat, y: &HurwitzQuat) -> Ordering {
    x.d.cmp(&y.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> HurwitzQuat {
        HurwitzQuat::from_ints(a, b, c, d)
    }

    #[test]
    fn defining_relations() {
        let i = q(0, 1, 0, 0);
        let j = q(0, 0, 1, 0);
        let k = q(0, 0, 0, 1);
        assert_eq!(i.mul(&j), k);
        assert_eq!(i.mul(&i), q(-1, 0, 0, 0));
        assert_eq!(j.mul(&j), q(-1, 0, 0, 0));
        assert_eq!(k.mul(&k), q(-1, 0, 0, 0));
        // ijk = −kji = −1
        assert_eq!(i.mul(&j).mul(&k), q(-1, 0, 0, 0));
        assert_eq!(k.mul(&j).mul(&i), q(1, 0, 0, 0));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(HurwitzQuat::omega().norm(), BigInt::from(1));
        assert_eq!(q(1, 1, 1, 0).norm(), BigInt::from(3));
        assert_eq!(q(1, 0, 0, 0).norm(), BigInt::from(1));
    }

    #[test]
    fn membership() {
        assert!(HurwitzQuat::from_doubled([1.into(), 1.into(), 1.into(), 1.into()]).is_ok());
        assert!(HurwitzQuat::from_doubled([1.into(), 2.into(), 1.into(), 1.into()]).is_err());
    }

    #[test]
    fn unit_group() {
        let units = HurwitzQuat::units();
        assert_eq!(units.len(), 24);
        for u in &units {
            assert_eq!(u.norm(), BigInt::from(1));
            assert!(units.contains(&u.conj()));
        }
        for u in &units {
            for v in &units {
                assert!(units.contains(&u.mul(v)));
            }
        }
    }

    #[test]
    fn content_examples() {
        let (c, p) = q(2, 0, 0, 0).content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(p, q(1, 0, 0, 0));

        // (1,1,1,1) = 2·½(1,1,1,1), and the half-vector is a unit.
        let (c, p) = q(1, 1, 1, 1).content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(p, HurwitzQuat::omega());

        let (c, _) = HurwitzQuat::omega().content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(1));

        assert!(HurwitzQuat::zero().content_and_primitive().is_err());
    }

    #[test]
    fn reduced_examples() {
        assert!(q(1, 1, 1, 0).is_reduced().unwrap());
        assert!(!q(1, 1, 0, 0).is_reduced().unwrap());
        assert!(q(1, 0, 0, 0).is_reduced().unwrap());
        assert!(q(2, 0, 0, 0).is_reduced().is_err());
    }

    #[test]
    fn reduced_decompose_examples() {
        // already reduced: s must be a unit
        let (qr, s) = q(1, 1, 1, 0).reduced_decompose().unwrap();
        assert!(qr.norm().is_odd());
        assert_eq!(s.norm(), BigInt::from(1));
        assert_eq!(qr.mul(&s), q(1, 1, 1, 0));

        // norm 2: q_r is a unit, s has norm 2
        let (qr, s) = q(1, 1, 0, 0).reduced_decompose().unwrap();
        assert_eq!(qr.norm(), BigInt::from(1));
        assert_eq!(s.norm(), BigInt::from(2));
        assert_eq!(qr.mul(&s), q(1, 1, 0, 0));

        // unit input: both parts units
        let (qr, s) = HurwitzQuat::omega().reduced_decompose().unwrap();
        assert_eq!(qr.norm(), BigInt::from(1));
        assert_eq!(s.norm(), BigInt::from(1));
        assert_eq!(qr.mul(&s), HurwitzQuat::omega());
    }

    #[test]
    fn divmod_examples() {
        let a = q(2, 0, 0, 0);
        let b = q(1, 1, 0, 0);
        let (quot, rem) = HurwitzQuat::left_divmod(&a, &b).unwrap();
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.norm() < BigInt::from(2));

        let (quot, rem) = HurwitzQuat::left_divmod(&b, &b).unwrap();
        assert_eq!(quot, HurwitzQuat::one());
        assert!(rem.is_zero());

        // dividing by a unit leaves no remainder
        let u = HurwitzQuat::omega();
        let (quot, rem) = HurwitzQuat::left_divmod(&q(3, 1, 2, 0), &u).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot.mul(&u), q(3, 1, 2, 0));

        assert!(HurwitzQuat::left_divmod(&a, &HurwitzQuat::zero()).is_err());
    }

    #[test]
    fn glcd_examples() {
        // glcd(q, 1) is a unit
        let g = HurwitzQuat::glcd(&q(1, 1, 1, 0), &HurwitzQuat::one()).unwrap();
        assert_eq!(g.norm(), BigInt::from(1));

        // (1,1,1,1) = 2u, so glcd(2, (1,1,1,1)) is an associate of 2
        let g = HurwitzQuat::glcd(&q(2, 0, 0, 0), &q(1, 1, 1, 1)).unwrap();
        assert_eq!(g.norm(), BigInt::from(4));
        assert!(HurwitzQuat::left_divides(&g, &q(2, 0, 0, 0)));
        assert!(HurwitzQuat::left_divides(&g, &q(1, 1, 1, 1)));

        // glcd(q, q) is an associate of q
        let g = HurwitzQuat::glcd(&q(1, 1, 1, 0), &q(1, 1, 1, 0)).unwrap();
        assert_eq!(g.norm(), BigInt::from(3));
        assert_eq!(g, q(1, 1, 1, 0).canonical_right_rep());
    }

    #[test]
    fn glcd_is_greatest_exhaustively() {
        // Every common left divisor must left-divide the glcd; checked by
        // exhaustive search over all divisor norms.
        let pairs = [
            (q(1, 1, 1, 0), q(3, 0, 0, 0)),
            (q(2, 0, 0, 0), q(1, 1, 0, 0)),
            (q(2, 1, 0, 0), q(1, 2, 0, 0)),
            (q(1, 1, 1, 1), q(2, 2, 0, 0)),
            (q(4, 3, 0, 0), q(5, 0, 0, 0)),
        ];
        for (a, b) in pairs {
            let g = HurwitzQuat::glcd(&a, &b).unwrap();
            assert!(HurwitzQuat::left_divides(&g, &a));
            assert!(HurwitzQuat::left_divides(&g, &b));
            let an = a.norm();
            let mut k = BigInt::one();
            while k <= an {
                for d in HurwitzQuat::enumerate_norm(&k) {
                    if HurwitzQuat::left_divides(&d, &a) && HurwitzQuat::left_divides(&d, &b) {
                        assert!(
                            HurwitzQuat::left_divides(&d, &g),
                            "common divisor {d} does not divide glcd {g}"
                        );
                    }
                }
                k += 1;
            }
        }
    }

    #[test]
    fn enumerate_norm_counts() {
        assert_eq!(HurwitzQuat::enumerate_norm(&BigInt::zero()).len(), 1);
        assert_eq!(HurwitzQuat::enumerate_norm(&BigInt::one()).len(), 24);
        assert_eq!(HurwitzQuat::enumerate_norm(&BigInt::from(3)).len(), 96);
        // 24·σ₁(m) for odd m
        let sigma1 = |m: i64| -> i64 { (1..=m).filter(|d| m % d == 0).sum() };
        for m in [5i64, 7, 9, 15] {
            let got = HurwitzQuat::enumerate_norm(&BigInt::from(m)).len() as i64;
            assert_eq!(got, 24 * sigma1(m), "norm {m}");
        }
        for e in HurwitzQuat::enumerate_norm(&BigInt::from(6)) {
            assert_eq!(e.norm(), BigInt::from(6));
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["1,1,1,0", "1/2,1/2,1/2,1/2", "-1/2,3/2,1/2,-5/2", "2,0,0,0"] {
            let parsed: HurwitzQuat = s.parse().unwrap();
            assert_eq!(parsed.to_string(), s);
        }
        assert!("1,2,3".parse::<HurwitzQuat>().is_err());
        assert!("1/2,0,0,0".parse::<HurwitzQuat>().is_err()); // mixed parity
        assert!("1+1t,0,0,0".parse::<HurwitzQuat>().is_err());
        assert!("1/3,0,0,0".parse::<HurwitzQuat>().is_err());
    }

    fn arb_quat() -> impl Strategy<Value = HurwitzQuat> {
        (any::<bool>(), -6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6).prop_map(
            |(half, a, b, c, d)| {
                if half {
                    HurwitzQuat::from_doubled([
                        BigInt::from(2 * a + 1),
                        BigInt::from(2 * b + 1),
                        BigInt::from(2 * c + 1),
                        BigInt::from(2 * d + 1),
                    ])
                    .unwrap()
                } else {
                    HurwitzQuat::from_ints(a, b, c, d)
                }
            },
        )
    }

    proptest! {
        #[test]
        fn norm_multiplicative(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn conj_antihomomorphism(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
            prop_assert_eq!(a.mul(&a.conj()), HurwitzQuat::scalar(a.norm()));
        }

        #[test]
        fn divmod_reconstructs(a in arb_quat(), b in arb_quat()) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = HurwitzQuat::left_divmod(&a, &b).unwrap();
            prop_assert_eq!(quot.mul(&b).add(&rem), a.clone());
            prop_assert!(rem.norm() < b.norm());
            let (quot, rem) = HurwitzQuat::right_divmod(&a, &b).unwrap();
            prop_assert_eq!(b.mul(&quot).add(&rem), a);
            prop_assert!(rem.norm() < b.norm());
        }

        #[test]
        fn reduced_decomposition_holds(a in arb_quat()) {
            prop_assume!(!a.is_zero());
            let (_, p) = a.content_and_primitive().unwrap();
            let (qr, s) = p.reduced_decompose().unwrap();
            prop_assert_eq!(qr.mul(&s), p);
            prop_assert!(qr.norm().is_odd());
            let mut n = s.norm();
            while n.is_even() { n /= 2; }
            prop_assert_eq!(n, BigInt::one());
        }

        #[test]
        fn canonical_rep_constant_on_orbit(a in arb_quat(), idx in 0usize..24) {
            prop_assume!(!a.is_zero());
            let u = &HurwitzQuat::units()[idx];
            prop_assert_eq!(a.canonical_right_rep(), a.mul(u).canonical_right_rep());
        }
    }
}
