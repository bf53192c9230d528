//! Counting functions for coincidence rotations and coincidence modules.
//!
//! Both counts are multiplicative arithmetic functions. For the centred
//! hypercubic family they have closed prime-power forms; the primitive
//! hypercubic family differs only at the prime 2. For A4 and the icosian
//! ring the values are defined through the Euler products of their
//! Dirichlet series, expanded exactly per prime: primes are classified
//! modulo 5 as ramified (5), split (±1) or inert (±2), and each class has
//! its own local factor. All series arithmetic is exact; integrality of
//! every coefficient is asserted.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coincidence::Family;
use crate::{CslError, Result};

/// Which multiplicative function: symmetry classes of rotations, or
/// distinct coincidence modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountKind {
    Rotations,
    Csls,
}

impl CountKind {
    pub const BOTH: [CountKind; 2] = [CountKind::Rotations, CountKind::Csls];

    pub fn name(&self) -> &'static str {
        match self {
            CountKind::Rotations => "rot",
            CountKind::Csls => "csl",
        }
    }
}

/// One local Euler factor: an exact rational function num(x)/den(x) in
/// x = p^{−s}, with integer polynomial coefficients and constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactor {
    pub num: Vec<BigInt>,
    pub den: Vec<BigInt>,
}

impl EulerFactor {
    pub fn one() -> Self {
        EulerFactor {
            num: vec![BigInt::one()],
            den: vec![BigInt::one()],
        }
    }

    fn from_i64(num: &[i64], den: &[i64]) -> Self {
        EulerFactor {
            num: num.iter().map(|&x| BigInt::from(x)).collect(),
            den: den.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Product of two factors (polynomial multiplication on both parts).
    pub fn mul(&self, other: &EulerFactor) -> EulerFactor {
        EulerFactor {
            num: poly_mul(&self.num, &other.num),
            den: poly_mul(&self.den, &other.den),
        }
    }

    /// Substitutes x ↦ x², spreading the coefficients.
    pub fn substitute_x_squared(&self) -> EulerFactor {
        EulerFactor {
            num: spread(&self.num),
            den: spread(&self.den),
        }
    }

    /// Power-series coefficients of num/den up to x^terms (inclusive).
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        assert!(
            self.den[0].is_one(),
            "local factor must have constant term 1"
        );
        let mut out = Vec::with_capacity(terms + 1);
        for k in 0..=terms {
            // s_k = num_k − Σ_{i≥1} den_i·s_{k−i}
            let mut v = self.num.get(k).cloned().unwrap_or_else(BigInt::zero);
            for i in 1..self.den.len().min(k + 1) {
                v -= &self.den[i] * &out[k - i];
            }
            out.push(v);
        }
        out
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn spread(a: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); 2 * a.len() - 1];
    for (i, x) in a.iter().enumerate() {
        out[2 * i] = x.clone();
    }
    out
}

/// Residue class of a prime with respect to Q(√5).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeClass {
    Ramified, // p = 5
    Split,    // p ≡ ±1 (mod 5)
    Inert,    // p ≡ ±2 (mod 5)
}

pub fn prime_class(p: u64) -> PrimeClass {
    match p % 5 {
        0 => PrimeClass::Ramified,
        1 | 4 => PrimeClass::Split,
        _ => PrimeClass::Inert,
    }
}

/// Local factor of the hypercubic rotation series at an odd prime:
/// (1+x)(1+px) / ((1−px)(1−p²x)).
fn d4_rot_local(p: i64) -> EulerFactor {
    EulerFactor::from_i64(&[1, 1 + p, p], &[1, -(p + p * p), p * p * p])
}

/// Local factor of the hypercubic CSL series at an odd prime:
/// (1 + x + 2px + 2x² + px² + px³) / ((1−p²x)(1−px²)).
fn d4_csl_local(p: i64) -> EulerFactor {
    EulerFactor::from_i64(&[1, 1 + 2 * p, 2 + p, p], &[1, -p * p, -p, p * p * p])
}

/// The local factor of the family's Dirichlet series at prime p.
pub fn local_factor(family: Family, kind: CountKind, p: u64) -> EulerFactor {
    let pi = p as i64;
    match family {
        Family::D4Star => {
            if p == 2 {
                EulerFactor::one()
            } else {
                match kind {
                    CountKind::Rotations => d4_rot_local(pi),
                    CountKind::Csls => d4_csl_local(pi),
                }
            }
        }
        Family::Z4 => {
            if p == 2 {
                match kind {
                    CountKind::Rotations => EulerFactor::from_i64(&[1, 2], &[1]),
                    CountKind::Csls => EulerFactor::from_i64(&[1, 1], &[1]),
                }
            } else {
                local_factor(Family::D4Star, kind, p)
            }
        }
        Family::A4 => match prime_class(p) {
            PrimeClass::Ramified => match kind {
                CountKind::Rotations => EulerFactor::from_i64(&[1, 5], &[1, -25]),
                CountKind::Csls => EulerFactor::from_i64(&[1, 6 - 25], &[1, -25]),
            },
            PrimeClass::Split => match kind {
                CountKind::Rotations => d4_rot_local(pi),
                CountKind::Csls => d4_csl_local(pi),
            },
            PrimeClass::Inert => EulerFactor::from_i64(&[1, 1], &[1, -pi * pi]),
        },
        Family::IcosianRing => match prime_class(p) {
            PrimeClass::Ramified => match kind {
                CountKind::Rotations => d4_rot_local(5),
                CountKind::Csls => d4_csl_local(5),
            },
            PrimeClass::Split => {
                // two primes of Z[τ] above p, one hypercubic-style factor each
                let f = match kind {
                    CountKind::Rotations => d4_rot_local(pi),
                    CountKind::Csls => d4_csl_local(pi),
                };
                f.mul(&f)
            }
            PrimeClass::Inert => {
                // a single prime of norm p²: the hypercubic factor in p², x²
                let f = match kind {
                    CountKind::Rotations => d4_rot_local(pi * pi),
                    CountKind::Csls => d4_csl_local(pi * pi),
                };
                f.substitute_x_squared()
            }
        },
    }
}

/// Closed form for the hypercubic rotation count at odd prime powers.
fn d4_rot_closed(p: u64, r: u32) -> BigInt {
    let p = BigInt::from(p);
    let num: BigInt = (&p + 1) * p.pow(r - 1) * (p.pow(r + 1) + p.pow(r - 1) - 2);
    let den: BigInt = &p - 1;
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "closed form must be integral");
    q
}

/// Closed form for the hypercubic CSL count at odd prime powers.
fn d4_csl_closed(p: u64, r: u32) -> BigInt {
    let p = BigInt::from(p);
    let p1sq: BigInt = (&p + 1) * (&p + 1);
    let num: BigInt = if r % 2 == 1 {
        &p1sq * (p.pow(2 * r + 1) + p.pow(2 * r - 2) - BigInt::from(2) * p.pow((r - 1) / 2))
    } else {
        &p1sq * (p.pow(2 * r + 1) + p.pow(2 * r - 2))
            - BigInt::from(2) * p.pow(r / 2 - 1) * (BigInt::one() + &p * &p) * (BigInt::one() + &p)
    };
    let den: BigInt = &p * &p * &p - 1;
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "closed form must be integral");
    q
}

/// The multiplicative function value at a prime power.
pub fn prime_power_value(family: Family, kind: CountKind, p: u64, r: u32) -> Result<BigInt> {
    debug_assert!(r >= 1);
    match family {
        Family::D4Star => {
            if p == 2 {
                Ok(BigInt::zero())
            } else {
                Ok(match kind {
                    CountKind::Rotations => d4_rot_closed(p, r),
                    CountKind::Csls => d4_csl_closed(p, r),
                })
            }
        }
        Family::Z4 => {
            if p == 2 {
                Ok(match (kind, r) {
                    (CountKind::Rotations, 1) => BigInt::from(2),
                    (CountKind::Csls, 1) => BigInt::one(),
                    _ => BigInt::zero(),
                })
            } else {
                prime_power_value(Family::D4Star, kind, p, r)
            }
        }
        Family::A4 | Family::IcosianRing => {
            // The Euler product is the definition here.
            let series = local_factor(family, kind, p).expand(r as usize);
            let v = series[r as usize].clone();
            if v.is_negative() {
                return Err(CslError::NonIntegralCoefficient { n: p.pow(r) });
            }
            Ok(v)
        }
    }
}

/// f_rot(family, n): the number of symmetry classes of coincidence
/// rotations with index n, divided by the point-group order.
pub fn f_rot(family: Family, n: u64) -> Result<BigInt> {
    f_value(family, CountKind::Rotations, n)
}

/// f_csl(family, n): the number of distinct coincidence modules of index n.
pub fn f_csl(family: Family, n: u64) -> Result<BigInt> {
    f_value(family, CountKind::Csls, n)
}

pub fn f_value(family: Family, kind: CountKind, n: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(CslError::NegativeInput);
    }
    let mut acc = BigInt::one();
    for (p, r) in factorize(n) {
        let v = prime_power_value(family, kind, p, r)?;
        if v.is_zero() {
            return Ok(BigInt::zero());
        }
        acc *= v;
    }
    Ok(acc)
}

/// Exact Dirichlet coefficients a_1..a_N of the family's series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCoeffs {
    n_max: u64,
    a: Vec<BigInt>,
}

impl DirichletCoeffs {
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    /// a_n for 1 ≤ n ≤ N.
    pub fn get(&self, n: u64) -> &BigInt {
        assert!(n >= 1 && n <= self.n_max);
        &self.a[(n - 1) as usize]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.a
    }
}

/// Expands the family's Euler product into Dirichlet coefficients up to N:
/// per-prime power series assembled multiplicatively.
pub fn euler_expand(family: Family, kind: CountKind, n_max: u64) -> Result<DirichletCoeffs> {
    if n_max < 1 {
        return Err(CslError::NegativeInput);
    }
    let nm = n_max as usize;
    let mut a = vec![BigInt::zero(); nm + 1];
    a[1] = BigInt::one();
    for p in primes_up_to(n_max) {
        let max_r = {
            let mut r = 0u32;
            let mut pk = 1u64;
            while pk <= n_max / p {
                pk *= p;
                r += 1;
            }
            r
        };
        let series = local_factor(family, kind, p).expand(max_r as usize);
        for (n, c) in series.iter().enumerate() {
            if c.is_negative() {
                return Err(CslError::NonIntegralCoefficient { n: p.pow(n as u32) });
            }
        }
        let mut b = a.clone();
        let mut pk = 1u64;
        for r in 1..=max_r {
            pk *= p;
            let c = &series[r as usize];
            if c.is_zero() {
                continue;
            }
            let mut m = 1u64;
            while m * pk <= n_max {
                if !a[m as usize].is_zero() {
                    let t = c * &a[m as usize];
                    b[(m * pk) as usize] += t;
                }
                m += 1;
            }
        }
        a = b;
    }
    Ok(DirichletCoeffs {
        n_max,
        a: a[1..].to_vec(),
    })
}

/// Is n an attainable coincidence index for the family?
pub fn spectrum_member(family: Family, n: u64) -> bool {
    if n < 1 {
        return false;
    }
    match family {
        Family::D4Star => n % 2 == 1,
        Family::Z4 => n % 4 != 0,
        Family::A4 => true,
        Family::IcosianRing => factorize(n)
            .into_iter()
            .all(|(p, r)| prime_class(p) != PrimeClass::Inert || r % 2 == 0),
    }
}

/// Total number of coincidence rotations of index n.
pub fn rotation_count(family: Family, n: u64) -> Result<BigInt> {
    Ok(BigInt::from(family.group_order()) * f_rot(family, n)?)
}

/// Total number of coincidence isometries of index n: reflections double
/// the rotation count.
pub fn isometry_count(family: Family, n: u64) -> Result<BigInt> {
    Ok(BigInt::from(2) * rotation_count(family, n)?)
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut m = p * p;
            while m <= n {
                sieve[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut r = 0u32;
            while n % p == 0 {
                n /= p;
                r += 1;
            }
            out.push((p, r));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
