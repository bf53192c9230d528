//! The icosian ring I: the Z\[τ\]-span of the quaternions
//! (1,0,0,0), (0,1,0,0), ½(1,1,1,1), ½(1−τ,τ,0,1).
//!
//! As a Z-module it has rank 8. Membership, contents and the twist map are
//! all decided exactly through the basis representation. The positive
//! definite trace form T(x) = |x|² + (|x|²)' drives a recursive ball
//! enumeration: floating point only steers the branch bounds (with slack),
//! every emitted point is verified exactly in integer arithmetic.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::golden::{GoldenInt, GoldenRat};
use crate::{CslError, Result};

/// An icosian, stored as numerators over 2: the quaternion with
/// coordinates nᵢ/2, nᵢ ∈ Z\[τ\].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Icosian {
    n: [GoldenInt; 4],
}

/// Numerator pairs (a, b) of the eight Z-basis vectors e₁..e₄, τe₁..τe₄.
const ZBASIS_NUM: [[(i64, i64); 4]; 8] = [
    [(2, 0), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (2, 0), (0, 0), (0, 0)],
    [(1, 0), (1, 0), (1, 0), (1, 0)],
    [(1, -1), (0, 1), (0, 0), (1, 0)],
    [(0, 2), (0, 0), (0, 0), (0, 0)],
    [(0, 0), (0, 2), (0, 0), (0, 0)],
    [(0, 1), (0, 1), (0, 1), (0, 1)],
    [(-1, 0), (1, 1), (0, 0), (0, 1)],
];

impl Icosian {
    /// Builds from numerators (the quaternion nᵢ/2), checking membership.
    pub fn from_numerators(n: [GoldenInt; 4]) -> Result<Self> {
        let x = Icosian { n };
        if x.basis_coords_impl().is_some() {
            Ok(x)
        } else {
            Err(CslError::NotInRing(format!(
                "({},{},{},{})/2 is not an icosian",
                x.n[0], x.n[1], x.n[2], x.n[3]
            )))
        }
    }

    /// The Z\[τ\]-linear combination c₁e₁ + c₂e₂ + c₃e₃ + c₄e₄ of the four
    /// basis quaternions; always a member.
    pub fn from_basis_coords(c: &[GoldenInt; 4]) -> Self {
        let two = BigInt::from(2);
        let one_minus_tau = GoldenInt::new(1, -1);
        let n0 = &(&(&c[0] * &two) + &c[2]) + &(&c[3] * &one_minus_tau);
        let n1 = &(&(&c[1] * &two) + &c[2]) + &(&c[3] * &GoldenInt::tau());
        let n2 = c[2].clone();
        let n3 = &c[2] + &c[3];
        Icosian {
            n: [n0, n1, n2, n3],
        }
    }

    pub fn zero() -> Self {
        Icosian {
            n: core::array::from_fn(|_| GoldenInt::zero()),
        }
    }

    pub fn one() -> Self {
        Icosian::from_int_coords(1, 0, 0, 0)
    }

    /// Integer-coordinate quaternion a + bi + cj + dk.
    pub fn from_int_coords(a: i64, b: i64, c: i64, d: i64) -> Self {
        Icosian {
            n: [
                GoldenInt::new(2 * a, 0),
                GoldenInt::new(2 * b, 0),
                GoldenInt::new(2 * c, 0),
                GoldenInt::new(2 * d, 0),
            ],
        }
    }

    /// Scalar c ∈ Z\[τ\] as a quaternion.
    pub fn scalar(c: &GoldenInt) -> Self {
        Icosian {
            n: [
                c * &BigInt::from(2),
                GoldenInt::zero(),
                GoldenInt::zero(),
                GoldenInt::zero(),
            ],
        }
    }

    /// The four Z\[τ\]-basis quaternions.
    pub fn basis() -> [Icosian; 4] {
        core::array::from_fn(|i| Icosian::from_i64_numerators(&ZBASIS_NUM[i]))
    }

    /// A Z-basis of the rank-8 module: e₁..e₄ and τe₁..τe₄.
    pub fn zbasis() -> [Icosian; 8] {
        core::array::from_fn(|i| Icosian::from_i64_numerators(&ZBASIS_NUM[i]))
    }

    fn from_i64_numerators(n: &[(i64, i64); 4]) -> Icosian {
        Icosian {
            n: core::array::from_fn(|i| GoldenInt::new(n[i].0, n[i].1)),
        }
    }

    pub fn numerators(&self) -> &[GoldenInt; 4] {
        &self.n
    }

    /// Coordinates as elements of Q(√5).
    pub fn coords(&self) -> [GoldenRat; 4] {
        core::array::from_fn(|i| GoldenRat::new(self.n[i].clone(), BigInt::from(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.n.iter().all(GoldenInt::is_zero)
    }

    /// Coefficients over the four basis quaternions, None for non-members.
    fn basis_coords_impl(&self) -> Option<[GoldenInt; 4]> {
        let c3 = self.n[2].clone();
        let c4 = &self.n[3] - &self.n[2];
        let r2 = &(&self.n[1] - &self.n[2]) - &(&c4 * &GoldenInt::tau());
        let r1 = &(&self.n[0] - &self.n[2]) - &(&c4 * &GoldenInt::new(1, -1));
        let halve = |g: GoldenInt| -> Option<GoldenInt> {
            if g.a.is_even() && g.b.is_even() {
                Some(GoldenInt::new(g.a / 2, g.b / 2))
            } else {
                None
            }
        };
        Some([halve(r1)?, halve(r2)?, c3, c4])
    }

    pub fn basis_coords(&self) -> [GoldenInt; 4] {
        self.basis_coords_impl()
            .expect("constructed icosians are members")
    }

    pub fn conj(&self) -> Self {
        Icosian {
            n: [self.n[0].clone(), -&self.n[1], -&self.n[2], -&self.n[3]],
        }
    }

    /// The twist map x̃ = (x₀', x₁', x₃', x₂'): algebraic conjugation
    /// followed by swapping the last two coordinates. An involutive
    /// antiautomorphism of the ring.
    pub fn twist(&self) -> Self {
        Icosian {
            n: [
                self.n[0].conj(),
                self.n[1].conj(),
                self.n[3].conj(),
                self.n[2].conj(),
            ],
        }
    }

    pub fn neg(&self) -> Self {
        Icosian {
            n: core::array::from_fn(|i| -&self.n[i]),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Icosian {
            n: core::array::from_fn(|i| &self.n[i] + &rhs.n[i]),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Icosian {
            n: core::array::from_fn(|i| &self.n[i] - &rhs.n[i]),
        }
    }

    pub fn scalar_mul(&self, c: &GoldenInt) -> Self {
        Icosian {
            n: core::array::from_fn(|i| &self.n[i] * c),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.n;
        let b = &rhs.n;
        let p0 = &(&(&a[0] * &b[0]) - &(&a[1] * &b[1])) - &(&(&a[2] * &b[2]) + &(&a[3] * &b[3]));
        let p1 = &(&(&a[0] * &b[1]) + &(&a[1] * &b[0])) + &(&(&a[2] * &b[3]) - &(&a[3] * &b[2]));
        let p2 = &(&(&a[0] * &b[2]) - &(&a[1] * &b[3])) + &(&(&a[2] * &b[0]) + &(&a[3] * &b[1]));
        let p3 = &(&(&a[0] * &b[3]) + &(&a[1] * &b[2])) - &(&(&a[2] * &b[1]) - &(&a[3] * &b[0]));
        let halve = |g: GoldenInt| -> GoldenInt {
            debug_assert!(g.a.is_even() && g.b.is_even(), "product left the ring");
            GoldenInt::new(g.a / 2, g.b / 2)
        };
        Icosian {
            n: [halve(p0), halve(p1), halve(p2), halve(p3)],
        }
    }

    /// Reduced norm |x|² = Σ (nᵢ/2)² ∈ Z\[τ\], totally non-negative.
    pub fn norm(&self) -> GoldenInt {
        let mut s = GoldenInt::zero();
        for ni in &self.n {
            s = &s + &(ni * ni);
        }
        let four = BigInt::from(4);
        debug_assert!(s.a.is_multiple_of(&four) && s.b.is_multiple_of(&four));
        GoldenInt::new(s.a / &four, s.b / four)
    }

    /// The positive definite trace form T(x) = |x|² + (|x|²)' ∈ Z.
    pub fn trace_form(&self) -> BigInt {
        self.norm().trace()
    }

    /// Content in Z\[τ\] (canonical associate) and primitive part.
    pub fn content_and_primitive(&self) -> Result<(GoldenInt, Icosian)> {
        if self.is_zero() {
            return Err(CslError::ZeroQuaternion);
        }
        let c = self.basis_coords();
        let mut g: Option<GoldenInt> = None;
        for ci in &c {
            if ci.is_zero() {
                continue;
            }
            g = Some(match g {
                None => ci.canonical_assoc(),
                Some(prev) => GoldenInt::gcd(&prev, ci)?,
            });
        }
        let content = g.expect("nonzero icosian has a nonzero coordinate");
        let prim_coords: [GoldenInt; 4] =
            core::array::from_fn(|i| c[i].exact_div(&content).expect("content divides"));
        Ok((content, Icosian::from_basis_coords(&prim_coords)))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.content_and_primitive()?.0.is_unit())
    }

    /// The 120 norm-one units (the binary icosahedral group).
    pub fn units() -> Vec<Icosian> {
        let mut out: Vec<Icosian> = trace_ball_i64(2)
            .into_iter()
            .filter(|x| x.norm_golden() == (1, 0))
            .map(|x| x.to_icosian())
            .collect();
        out.sort();
        debug_assert_eq!(out.len(), 120);
        out
    }

    /// Canonical representative of the right-unit orbit {x·u} over the 120
    /// norm-one units, by the (trace, a, b)-lexicographic coordinate order.
    pub fn canonical_right_rep(&self, units: &[Icosian]) -> Icosian {
        units
            .iter()
            .map(|u| self.mul(u))
            .min_by(|x, y| x.n.cmp(&y.n))
            .expect("unit list is non-empty")
    }

    /// All x ∈ I with T(x) ≤ bound, exactly.
    pub fn enumerate_trace_ball(bound: &BigInt) -> Vec<Icosian> {
        assert!(!bound.is_negative(), "trace bound must be non-negative");
        let b = bound.to_i64().expect("trace bound fits in i64");
        trace_ball_i64(b)
            .into_iter()
            .map(|x| x.to_icosian())
            .collect()
    }
}

impl fmt::Display for Icosian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords();
        write!(f, "{},{},{},{}", c[0], c[1], c[2], c[3])
    }
}

impl FromStr for Icosian {
    type Err = CslError;

    fn from_str(s: &str) -> Result<Icosian> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(CslError::Parse(format!(
                "expected 4 comma-separated components, got {}",
                parts.len()
            )));
        }
        let mut n: [GoldenInt; 4] = core::array::from_fn(|_| GoldenInt::zero());
        for (i, p) in parts.iter().enumerate() {
            let g: GoldenRat = p.parse()?;
            // The stored numerator is 2·(num/den); it must land in Z[τ].
            let num = g.numer();
            let den = g.denom();
            let two_a = BigInt::from(2) * &num.a;
            let two_b = BigInt::from(2) * &num.b;
            if !(&two_a % den).is_zero() || !(&two_b % den).is_zero() {
                return Err(CslError::NotInRing(format!(
                    "component {p} is not a half golden integer"
                )));
            }
            n[i] = GoldenInt::new(two_a / den, two_b / den);
        }
        Icosian::from_numerators(n)
    }
}

// ---------------------------------------------------------------------------
// i64 fast path used by the enumerations.

/// Icosian with small numerators; mirror of `Icosian` for hot loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Ico64 {
    /// (a, b) numerator pairs per coordinate.
    pub n: [(i64, i64); 4],
}

#[inline]
fn gmul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 * y.0 + x.1 * y.1, x.0 * y.1 + x.1 * y.0 + x.1 * y.1)
}

#[inline]
fn gadd(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 + y.0, x.1 + y.1)
}

#[inline]
fn gsub(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 - y.0, x.1 - y.1)
}

impl Ico64 {
    pub fn mul(&self, rhs: &Ico64) -> Ico64 {
        let a = &self.n;
        let b = &rhs.n;
        let p0 = gsub(
            gsub(gmul(a[0], b[0]), gmul(a[1], b[1])),
            gadd(gmul(a[2], b[2]), gmul(a[3], b[3])),
        );
        let p1 = gadd(
            gadd(gmul(a[0], b[1]), gmul(a[1], b[0])),
            gsub(gmul(a[2], b[3]), gmul(a[3], b[2])),
        );
        let p2 = gadd(
            gsub(gmul(a[0], b[2]), gmul(a[1], b[3])),
            gadd(gmul(a[2], b[0]), gmul(a[3], b[1])),
        );
        let p3 = gsub(
            gadd(gmul(a[0], b[3]), gmul(a[1], b[2])),
            gsub(gmul(a[2], b[1]), gmul(a[3], b[0])),
        );
        let halve = |g: (i64, i64)| -> (i64, i64) {
            debug_assert!(g.0 % 2 == 0 && g.1 % 2 == 0);
            (g.0 / 2, g.1 / 2)
        };
        Ico64 {
            n: [halve(p0), halve(p1), halve(p2), halve(p3)],
        }
    }

    /// |x|² as a golden pair (a, b).
    pub fn norm_golden(&self) -> (i64, i64) {
        let mut s = (0i64, 0i64);
        for ni in &self.n {
            s = gadd(s, gmul(*ni, *ni));
        }
        debug_assert!(s.0 % 4 == 0 && s.1 % 4 == 0);
        (s.0 / 4, s.1 / 4)
    }

    /// T(x) = trace(|x|²).
    pub fn trace_form(&self) -> i64 {
        let (a, b) = self.norm_golden();
        2 * a + b
    }

    /// Comparison key matching the (trace, a, b) coordinate order.
    pub fn key(&self) -> [(i64, i64, i64); 4] {
        core::array::from_fn(|i| {
            let (a, b) = self.n[i];
            (2 * a + b, a, b)
        })
    }

    pub fn to_icosian(self) -> Icosian {
        Icosian {
            n: core::array::from_fn(|i| GoldenInt::new(self.n[i].0, self.n[i].1)),
        }
    }

    pub fn from_icosian(x: &Icosian) -> Option<Ico64> {
        let mut n = [(0i64, 0i64); 4];
        for i in 0..4 {
            n[i] = (x.n[i].a.to_i64()?, x.n[i].b.to_i64()?);
        }
        Some(Ico64 { n })
    }
}

/// Integer Gram matrix of 4·T on the Z-basis.
fn gram_4t() -> [[i64; 8]; 8] {
    let mut a = [[0i64; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let mut s = (0i64, 0i64);
            for k in 0..4 {
                s = gadd(s, gmul(ZBASIS_NUM[i][k], ZBASIS_NUM[j][k]));
            }
            a[i][j] = 2 * s.0 + s.1;
        }
    }
    a
}

/// Truncation-based floor/ceil (f64::floor is unavailable without std).
fn floor64(x: f64) -> i64 {
    let t = x as i64;
    if (t as f64) > x {
        t - 1
    } else {
        t
    }
}

fn ceil64(x: f64) -> i64 {
    let t = x as i64;
    if (t as f64) < x {
        t + 1
    } else {
        t
    }
}

/// Newton square root for f64 (core-only; used for branch bounds).
fn sqrt64(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut y = f64::from_bits((x.to_bits() >> 1) + (1023u64 << 51));
    for _ in 0..5 {
        y = 0.5 * (y + x / y);
    }
    y
}

/// All lattice points with trace form ≤ bound, as Ico64.
///
/// Branch intervals come from a floating Cholesky factor widened by a
/// fixed slack, so no point is missed; every leaf is checked exactly in
/// integer arithmetic before being emitted.
pub(crate) fn trace_ball_i64(bound: i64) -> Vec<Ico64> {
    assert!(bound >= 0);
    let a = gram_4t();
    let target = 4 * bound;
    // Floating Cholesky A = RᵀR.
    let mut r = [[0f64; 8]; 8];
    for i in 0..8 {
        for j in i..8 {
            let mut s = a[i][j] as f64;
            for k in 0..i {
                s -= r[k][i] * r[k][j];
            }
            if i == j {
                r[i][i] = sqrt64(s);
            } else {
                r[i][j] = s / r[i][i];
            }
        }
    }
    let mut out = Vec::new();
    let mut c = [0i64; 8];
    ball_rec(&a, &r, target, 7, target as f64 + 0.5, &mut c, &mut out);
    out
}

fn ball_rec(
    a: &[[i64; 8]; 8],
    r: &[[f64; 8]; 8],
    target: i64,
    level: usize,
    rem: f64,
    c: &mut [i64; 8],
    out: &mut Vec<Ico64>,
) {
    let mut u = 0f64;
    for i in (level + 1)..8 {
        u += r[level][i] * c[i] as f64;
    }
    let root = sqrt64(rem.max(0.0)) + 0.5;
    let lo = floor64((-root - u) / r[level][level]) - 1;
    let hi = ceil64((root - u) / r[level][level]) + 1;
    for v in lo..=hi {
        c[level] = v;
        let t = r[level][level] * v as f64 + u;
        let rem_next = rem - t * t;
        if rem_next < -1.0 {
            continue;
        }
        if level == 0 {
            // Exact check of cᵀAc ≤ 4·bound.
            let mut q = 0i64;
            for i in 0..8 {
                if c[i] == 0 {
                    continue;
                }
                q += a[i][i] * c[i] * c[i];
                for j in (i + 1)..8 {
                    q += 2 * a[i][j] * c[i] * c[j];
                }
            }
            if q <= target {
                let mut n = [(0i64, 0i64); 4];
                for (i, ci) in c.iter().enumerate() {
                    if *ci == 0 {
                        continue;
                    }
                    for k in 0..4 {
                        n[k].0 += ci * ZBASIS_NUM[i][k].0;
                        n[k].1 += ci * ZBASIS_NUM[i][k].1;
                    }
                }
                out.push(Ico64 { n });
            }
        } else {
            ball_rec(a, r, target, level - 1, rem_next, c, out);
        }
    }
    c[level] = 0;
}
