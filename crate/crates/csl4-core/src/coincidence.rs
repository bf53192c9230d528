//! Coincidence rotations and their lattices for the four families: the
//! centred hypercubic lattice (the Hurwitz ring), the primitive hypercubic
//! lattice Z⁴, the root lattice A4, and the icosian ring.
//!
//! A rotation is parameterised by a quaternion pair q x p̄/|qp| (or a single
//! quaternion q x q̃/|qq̃| for A4). Each family supplies an admissibility
//! condition, a coincidence index Σ, a closed-form coincidence module, and
//! the brute-force intersection Γ ∩ RΓ that serves as the independent
//! oracle for all of them.

use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::golden::{int_sqrt, GoldenInt, GoldenRat};
use crate::hurwitz::HurwitzQuat;
use crate::icosian::Icosian;
use crate::zmodule::{
    golden_embed_matrix, golden_embed_module, golden_embed_vector, FreeModule, RatMatrix,
};
use crate::{CslError, Result};

/// The four lattice/module families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    D4Star,
    Z4,
    A4,
    IcosianRing,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::D4Star, Family::Z4, Family::A4, Family::IcosianRing];

    /// Dimension of the rational ambient space the family's module lives in.
    pub fn ambient_dim(&self) -> usize {
        match self {
            Family::D4Star | Family::Z4 => 4,
            Family::A4 | Family::IcosianRing => 8,
        }
    }

    /// Order of the rotation point group.
    pub fn group_order(&self) -> u64 {
        match self {
            Family::D4Star => 576,
            Family::Z4 => 192,
            Family::A4 => 120,
            Family::IcosianRing => 7200,
        }
    }

    /// The lattice or module Γ as a free Z-module (A4 and the icosian ring
    /// live in Q⁸ through the golden embedding).
    pub fn gamma(&self) -> FreeModule {
        match self {
            Family::D4Star => {
                let cols: Vec<Vec<BigRational>> = [
                    HurwitzQuat::one(),
                    HurwitzQuat::from_ints(0, 1, 0, 0),
                    HurwitzQuat::from_ints(0, 0, 1, 0),
                    HurwitzQuat::omega(),
                ]
                .iter()
                .map(|q| q.coords().to_vec())
                .collect();
                FreeModule::from_columns(4, &cols)
            }
            Family::Z4 => FreeModule::standard_lattice(4),
            Family::A4 => golden_embed_module(4, &a4_basis(), false),
            Family::IcosianRing => {
                let gens: Vec<Vec<GoldenRat>> = Icosian::basis()
                    .iter()
                    .map(|b| b.coords().to_vec())
                    .collect();
                golden_embed_module(4, &gens, true)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::D4Star => "d4",
            Family::Z4 => "z4",
            Family::A4 => "a4",
            Family::IcosianRing => "icosian",
        }
    }

    pub fn parse_name(s: &str) -> Result<Family> {
        match s {
            "d4" | "D4" | "d4star" => Ok(Family::D4Star),
            "z4" | "Z4" => Ok(Family::Z4),
            "a4" | "A4" => Ok(Family::A4),
            "icosian" | "i" | "I" => Ok(Family::IcosianRing),
            _ => Err(CslError::Parse(alloc::format!("unknown family \"{s}\""))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Basis of the A4 lattice L as quaternion coordinate vectors over Q(√5).
fn a4_basis() -> Vec<Vec<GoldenRat>> {
    let g = |a: i64, b: i64, den: i64| GoldenRat::new(GoldenInt::new(a, b), BigInt::from(den));
    alloc::vec![
        alloc::vec![g(1, 0, 1), g(0, 0, 1), g(0, 0, 1), g(0, 0, 1)],
        alloc::vec![g(-1, 0, 2), g(1, 0, 2), g(1, 0, 2), g(1, 0, 2)],
        alloc::vec![g(0, 0, 1), g(-1, 0, 1), g(0, 0, 1), g(0, 0, 1)],
        alloc::vec![g(0, 0, 1), g(1, 0, 2), g(-1, 1, 2), g(0, -1, 2)],
    ]
}

/// Rotation parameters: a Hurwitz pair for the hypercubic families, a
/// single icosian for A4, an icosian pair for the icosian ring. Inputs are
/// primitivised on construction (recorded in a flag); Hurwitz pairs are
/// stored as reduced pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamKind {
    HurwitzPair { q: HurwitzQuat, p: HurwitzQuat },
    IcosianSingle { q: Icosian },
    IcosianPair { q: Icosian, p: Icosian },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotParam {
    kind: ParamKind,
    normalized: bool,
}

impl RotParam {
    /// Pair parameter for the hypercubic families. Contents are divided
    /// out and the two-power part of each norm is split off, so the stored
    /// pair is the reduced pair.
    pub fn hurwitz_pair(q: &HurwitzQuat, p: &HurwitzQuat) -> Result<RotParam> {
        let (qr, cq) = reduce_hurwitz(q)?;
        let (pr, cp) = reduce_hurwitz(p)?;
        Ok(RotParam {
            kind: ParamKind::HurwitzPair { q: qr, p: pr },
            normalized: cq || cp,
        })
    }

    /// Single-quaternion parameter for A4.
    pub fn icosian_single(q: &Icosian) -> Result<RotParam> {
        if q.is_zero() {
            return Err(CslError::ZeroQuaternion);
        }
        let (content, prim) = q.content_and_primitive()?;
        Ok(RotParam {
            kind: ParamKind::IcosianSingle { q: prim },
            normalized: !content.is_unit(),
        })
    }

    /// Pair parameter for the icosian ring.
    pub fn icosian_pair(q: &Icosian, p: &Icosian) -> Result<RotParam> {
        if q.is_zero() || p.is_zero() {
            return Err(CslError::ZeroQuaternion);
        }
        let (cq, qp) = q.content_and_primitive()?;
        let (cp, pp) = p.content_and_primitive()?;
        Ok(RotParam {
            kind: ParamKind::IcosianPair { q: qp, p: pp },
            normalized: !cq.is_unit() || !cp.is_unit(),
        })
    }

    /// True when construction altered the input (content divided out or a
    /// two-power factor split off).
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    pub fn kind(&self) -> &ParamKind {
        &self.kind
    }

    pub fn hurwitz_parts(&self) -> Option<(&HurwitzQuat, &HurwitzQuat)> {
        match &self.kind {
            ParamKind::HurwitzPair { q, p } => Some((q, p)),
            _ => None,
        }
    }

    pub fn icosian_single_part(&self) -> Option<&Icosian> {
        match &self.kind {
            ParamKind::IcosianSingle { q } => Some(q),
            _ => None,
        }
    }

    pub fn icosian_parts(&self) -> Option<(&Icosian, &Icosian)> {
        match &self.kind {
            ParamKind::IcosianPair { q, p } => Some((q, p)),
            _ => None,
        }
    }

    fn matches(&self, family: Family) -> bool {
        matches!(
            (family, &self.kind),
            (Family::D4Star | Family::Z4, ParamKind::HurwitzPair { .. })
                | (Family::A4, ParamKind::IcosianSingle { .. })
                | (Family::IcosianRing, ParamKind::IcosianPair { .. })
        )
    }
}

impl fmt::Display for RotParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParamKind::HurwitzPair { q, p } => write!(f, "q={q};p={p}"),
            ParamKind::IcosianSingle { q } => write!(f, "q={q}"),
            ParamKind::IcosianPair { q, p } => write!(f, "q={q};p={p}"),
        }
    }
}

fn reduce_hurwitz(q: &HurwitzQuat) -> Result<(HurwitzQuat, bool)> {
    let (content, prim) = q.content_and_primitive()?;
    let primitivized = !content.is_one();
    if prim.norm().is_odd() {
        return Ok((prim, primitivized));
    }
    let (qr, _s) = prim.reduced_decompose()?;
    Ok((qr, true))
}

/// α-factors and the extended pair (q_α, p_α); for A4 the p side is the
/// twist side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaExt {
    Hurwitz {
        alpha_q: BigInt,
        alpha_p: BigInt,
        q_alpha: HurwitzQuat,
        p_alpha: HurwitzQuat,
    },
    Golden {
        alpha_q: GoldenInt,
        alpha_p: GoldenInt,
        q_alpha: Icosian,
        p_alpha: Icosian,
    },
}

/// A coincidence rotation's data: index, coincidence module, α-extension.
#[derive(Clone, Debug)]
pub struct CoinData {
    pub sigma: BigInt,
    pub csl: FreeModule,
    pub alpha: AlphaExt,
}

/// Does the parameter satisfy the family's admissibility condition?
pub fn is_admissible(family: Family, param: &RotParam) -> Result<bool> {
    if !param.matches(family) {
        return Err(CslError::FamilyMismatch);
    }
    match &param.kind {
        ParamKind::HurwitzPair { q, p } => Ok(int_sqrt(&(q.norm() * p.norm()))?.is_some()),
        ParamKind::IcosianSingle { q } => {
            // |q q̃| ∈ N iff Nr(|q|²) is a perfect square in Z.
            Ok(int_sqrt(&q.norm().norm())?.is_some())
        }
        ParamKind::IcosianPair { q, p } => {
            // |qp| ∈ Z[τ] iff |q|²|p|² is a square in Z[τ].
            Ok((&q.norm() * &p.norm()).sqrt().is_some())
        }
    }
}

fn ensure_admissible(family: Family, param: &RotParam) -> Result<()> {
    if is_admissible(family, param)? {
        Ok(())
    } else {
        Err(CslError::NotAdmissible)
    }
}

/// The rotation matrix over Q (4×4 for the hypercubic families, the 8×8
/// golden embedding for A4 and the icosian ring).
pub fn rotation_matrix(family: Family, param: &RotParam) -> Result<RatMatrix> {
    ensure_admissible(family, param)?;
    match &param.kind {
        ParamKind::HurwitzPair { q, p } => {
            let s = int_sqrt(&(q.norm() * p.norm()))?.expect("admissible");
            let pbar = p.conj();
            let mut m = RatMatrix::zeros(4, 4);
            for (j, e) in hurwitz_frame().iter().enumerate() {
                let img = q.mul(e).mul(&pbar);
                for (i, c) in img.coords().iter().enumerate() {
                    *m.at_mut(i, j) = c / BigRational::from_integer(s.clone());
                }
            }
            Ok(m)
        }
        ParamKind::IcosianSingle { q } => {
            let s = int_sqrt(&q.norm().norm())?.expect("admissible");
            let div = GoldenRat::new(GoldenInt::one(), s);
            Ok(golden_embed_matrix(
                4,
                &golden_rotation_entries(q, &q.twist(), &div),
            ))
        }
        ParamKind::IcosianPair { q, p } => {
            let v = (&q.norm() * &p.norm()).sqrt().expect("admissible");
            let div = GoldenRat::from_golden(v).inv().expect("nonzero");
            Ok(golden_embed_matrix(
                4,
                &golden_rotation_entries(q, &p.conj(), &div),
            ))
        }
    }
}

/// Row-major 4×4 entries of x ↦ q·x·right scaled by div, over Q(√5).
fn golden_rotation_entries(q: &Icosian, right: &Icosian, div: &GoldenRat) -> Vec<GoldenRat> {
    let mut entries = alloc::vec![GoldenRat::zero(); 16];
    for (j, e) in icosian_frame().iter().enumerate() {
        let img = q.mul(e).mul(right);
        for (i, c) in img.coords().iter().enumerate() {
            entries[i * 4 + j] = c * div;
        }
    }
    entries
}

fn hurwitz_frame() -> [HurwitzQuat; 4] {
    [
        HurwitzQuat::one(),
        HurwitzQuat::from_ints(0, 1, 0, 0),
        HurwitzQuat::from_ints(0, 0, 1, 0),
        HurwitzQuat::from_ints(0, 0, 0, 1),
    ]
}

fn icosian_frame() -> [Icosian; 4] {
    [
        Icosian::one(),
        Icosian::from_int_coords(0, 1, 0, 0),
        Icosian::from_int_coords(0, 0, 1, 0),
        Icosian::from_int_coords(0, 0, 0, 1),
    ]
}

/// α-factors and the reduced extension of an admissible parameter.
pub fn reduced_extension(family: Family, param: &RotParam) -> Result<AlphaExt> {
    ensure_admissible(family, param)?;
    match &param.kind {
        ParamKind::HurwitzPair { q, p } => {
            let a = q.norm();
            let b = p.norm();
            let g = a.gcd(&b);
            let alpha_q = int_sqrt(&(&b / &g))?.ok_or(CslError::MissingSquareRoot)?;
            let alpha_p = int_sqrt(&(&a / &g))?.ok_or(CslError::MissingSquareRoot)?;
            let q_alpha = scale_hurwitz(q, &alpha_q);
            let p_alpha = scale_hurwitz(p, &alpha_p);
            Ok(AlphaExt::Hurwitz {
                alpha_q,
                alpha_p,
                q_alpha,
                p_alpha,
            })
        }
        ParamKind::IcosianSingle { q } => {
            let x = q.norm();
            let y = x.conj(); // |q̃|² = (|q|²)'
            golden_alpha(q, &q.twist(), &x, &y)
        }
        ParamKind::IcosianPair { q, p } => {
            let x = q.norm();
            let y = p.norm();
            golden_alpha(q, p, &x, &y)
        }
    }
}

fn golden_alpha(q: &Icosian, p: &Icosian, x: &GoldenInt, y: &GoldenInt) -> Result<AlphaExt> {
    let g = GoldenInt::gcd(x, y)?;
    let tq = y.exact_div(&g).expect("gcd divides").canonical_assoc();
    let tp = x.exact_div(&g).expect("gcd divides").canonical_assoc();
    let alpha_q = tq
        .sqrt()
        .ok_or(CslError::MissingSquareRoot)?
        .canonical_assoc();
    let alpha_p = tp
        .sqrt()
        .ok_or(CslError::MissingSquareRoot)?
        .canonical_assoc();
    let q_alpha = q.scalar_mul(&alpha_q);
    let p_alpha = p.scalar_mul(&alpha_p);
    Ok(AlphaExt::Golden {
        alpha_q,
        alpha_p,
        q_alpha,
        p_alpha,
    })
}

fn scale_hurwitz(q: &HurwitzQuat, s: &BigInt) -> HurwitzQuat {
    let d = q.doubled();
    HurwitzQuat::from_doubled(core::array::from_fn(|i| &d[i] * s))
        .expect("scaling preserves parity")
}

/// The coincidence index Σ.
pub fn sigma(family: Family, param: &RotParam) -> Result<BigInt> {
    ensure_admissible(family, param)?;
    match (family, &param.kind) {
        (Family::D4Star, ParamKind::HurwitzPair { q, p }) => Ok(q.norm().lcm(&p.norm())),
        (Family::Z4, ParamKind::HurwitzPair { q, p }) => {
            // No closed form for Z⁴: the index comes from the intersection
            // itself and must be Σ_{D4} or twice it.
            let csl = csl_brute(family, param)?;
            let idx = FreeModule::index_in(&csl, &family.gamma())?;
            let d4 = q.norm().lcm(&p.norm());
            debug_assert!(idx == d4 || idx == BigInt::from(2) * &d4);
            Ok(idx)
        }
        (Family::A4, ParamKind::IcosianSingle { q }) => {
            let x = q.norm();
            let l = GoldenInt::lcm(&x, &x.conj())?;
            // Conjugation-symmetric, so the canonical associate is the
            // positive rational integer.
            assert!(
                l.b.is_zero() && l.a.is_positive(),
                "A4 index must be rational"
            );
            Ok(l.a)
        }
        (Family::IcosianRing, ParamKind::IcosianPair { q, p }) => {
            Ok(GoldenInt::lcm(&q.norm(), &p.norm())?.norm())
        }
        _ => Err(CslError::FamilyMismatch),
    }
}

/// Closed-form coincidence module. For Z⁴, where no closed form exists,
/// this is the intersection itself.
pub fn csl_closed(family: Family, param: &RotParam) -> Result<FreeModule> {
    ensure_admissible(family, param)?;
    match (family, &param.kind) {
        (Family::D4Star, ParamKind::HurwitzPair { .. }) => {
            let AlphaExt::Hurwitz {
                q_alpha, p_alpha, ..
            } = reduced_extension(family, param)?
            else {
                unreachable!()
            };
            let basis = [
                HurwitzQuat::one(),
                HurwitzQuat::from_ints(0, 1, 0, 0),
                HurwitzQuat::from_ints(0, 0, 1, 0),
                HurwitzQuat::omega(),
            ];
            let p_bar = p_alpha.conj();
            let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(8);
            for b in &basis {
                cols.push(q_alpha.mul(b).coords().to_vec());
            }
            for b in &basis {
                cols.push(b.mul(&p_bar).coords().to_vec());
            }
            Ok(FreeModule::from_columns(4, &cols))
        }
        (Family::Z4, ParamKind::HurwitzPair { .. }) => csl_brute(family, param),
        (Family::A4, ParamKind::IcosianSingle { .. }) => {
            let AlphaExt::Golden { q_alpha, .. } = reduced_extension(family, param)? else {
                unreachable!()
            };
            let sum = one_sided_ideal_sum(&q_alpha, &q_alpha.twist());
            sum.intersect(&family.gamma())
        }
        (Family::IcosianRing, ParamKind::IcosianPair { .. }) => {
            let AlphaExt::Golden {
                q_alpha, p_alpha, ..
            } = reduced_extension(family, param)?
            else {
                unreachable!()
            };
            Ok(one_sided_ideal_sum(&q_alpha, &p_alpha.conj()))
        }
        _ => Err(CslError::FamilyMismatch),
    }
}

/// The Z-module q·I + I·r inside Q⁸.
fn one_sided_ideal_sum(q: &Icosian, r: &Icosian) -> FreeModule {
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(16);
    for b in Icosian::zbasis() {
        cols.push(golden_embed_vector(&q.mul(&b).coords()));
    }
    for b in Icosian::zbasis() {
        cols.push(golden_embed_vector(&b.mul(r).coords()));
    }
    FreeModule::from_columns(8, &cols)
}

/// The brute-force coincidence module Γ ∩ RΓ — the independent oracle.
pub fn csl_brute(family: Family, param: &RotParam) -> Result<FreeModule> {
    let gamma = family.gamma();
    let r = rotation_matrix(family, param)?;
    let image = gamma.apply_map(&r)?;
    gamma.intersect(&image)
}

/// Bundles Σ, the coincidence module and the α-extension.
pub fn coin_data(family: Family, param: &RotParam) -> Result<CoinData> {
    let sigma = sigma(family, param)?;
    let csl = csl_closed(family, param)?;
    let alpha = reduced_extension(family, param)?;
    debug_assert_eq!(FreeModule::index_in(&csl, &family.gamma()).unwrap(), sigma);
    Ok(CoinData { sigma, csl, alpha })
}

/// Arithmetic equality key deciding CSL equality of reduced admissible
/// Hurwitz pairs: (|qp|, lcm of norms, canonical glcd(q,|pq|), canonical
/// glcd(p,|pq|)).
pub fn pair_equality_key(param: &RotParam) -> Result<(BigInt, BigInt, HurwitzQuat, HurwitzQuat)> {
    let Some((q, p)) = param.hurwitz_parts() else {
        return Err(CslError::FamilyMismatch);
    };
    ensure_admissible(Family::D4Star, param)?;
    let s = int_sqrt(&(q.norm() * p.norm()))?.expect("admissible");
    let sig = q.norm().lcm(&p.norm());
    let s_quat = HurwitzQuat::scalar(s.clone());
    let gq = HurwitzQuat::glcd(q, &s_quat)?;
    let gp = HurwitzQuat::glcd(p, &s_quat)?;
    Ok((s, sig, gq, gp))
}

/// The closed CSL-equality criterion for two primitive reduced admissible
/// pairs: equal |qp|, equal lcm of norms, and equal canonical glcds.
pub fn pair_equality_criterion(p1: &RotParam, p2: &RotParam) -> Result<bool> {
    Ok(pair_equality_key(p1)? == pair_equality_key(p2)?)
}

/// Two admissible parameters are symmetry related iff their rotations have
/// the same lattice image RΓ.
pub fn symmetry_related(family: Family, p1: &RotParam, p2: &RotParam) -> Result<bool> {
    Ok(rotation_image(family, p1)? == rotation_image(family, p2)?)
}

/// Canonical form of RΓ, the dedup key for symmetry classes.
pub fn rotation_image(family: Family, param: &RotParam) -> Result<FreeModule> {
    let gamma = family.gamma();
    let r = rotation_matrix(family, param)?;
    gamma.apply_map(&r)
}

/// All rotations of the family's point group, as exact matrices. Candidate
/// parameters run over unit and norm-2 quaternion pairs (±R(u) for A4);
/// candidates are deduplicated and filtered by R·Γ = Γ.
pub fn point_group_rotations(family: Family) -> Vec<RatMatrix> {
    let gamma = family.gamma();
    let mut out: Vec<RatMatrix> = Vec::new();
    match family {
        Family::D4Star | Family::Z4 => {
            let mut seen = alloc::collections::BTreeSet::new();
            for (q, p) in hurwitz_unit_norm2_pairs() {
                let param = RotParam {
                    kind: ParamKind::HurwitzPair { q, p },
                    normalized: false,
                };
                let r =
                    rotation_matrix(Family::D4Star, &param).expect("equal norms are admissible");
                if !seen.insert(matrix_key(&r)) {
                    continue;
                }
                if gamma.apply_map(&r).unwrap() == gamma {
                    out.push(r);
                }
            }
        }
        Family::A4 => {
            let mut seen = alloc::collections::BTreeSet::new();
            for u in Icosian::units() {
                let base = golden_rotation_entries(&u, &u.twist(), &GoldenRat::one());
                for negate in [false, true] {
                    let entries: Vec<GoldenRat> = if negate {
                        base.iter().map(|e| -(e)).collect()
                    } else {
                        base.clone()
                    };
                    let r = golden_embed_matrix(4, &entries);
                    if !seen.insert(matrix_key(&r)) {
                        continue;
                    }
                    if gamma.apply_map(&r).unwrap() == gamma {
                        out.push(r);
                    }
                }
            }
        }
        Family::IcosianRing => {
            let units = Icosian::units();
            let mut seen = alloc::collections::BTreeSet::new();
            for u in &units {
                for v in &units {
                    let entries = golden_rotation_entries(u, &v.conj(), &GoldenRat::one());
                    let key: Vec<GoldenRat> = entries.clone();
                    if !seen.insert(key) {
                        continue;
                    }
                    let r = golden_embed_matrix(4, &entries);
                    if gamma.apply_map(&r).unwrap() == gamma {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// Unit and norm-2 parameter pairs (q, p) with |q|² = |p|².
fn hurwitz_unit_norm2_pairs() -> Vec<(HurwitzQuat, HurwitzQuat)> {
    let units = HurwitzQuat::units();
    let norm2 = HurwitzQuat::enumerate_norm(&BigInt::from(2));
    let mut out = Vec::with_capacity(units.len() * units.len() + norm2.len() * norm2.len());
    for q in &units {
        for p in &units {
            out.push((q.clone(), p.clone()));
        }
    }
    for q in &norm2 {
        for p in &norm2 {
            out.push((q.clone(), p.clone()));
        }
    }
    out
}

fn matrix_key(m: &RatMatrix) -> Vec<String> {
    use alloc::string::ToString;
    let mut key = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            key.push(m.at(i, j).to_string());
        }
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hq(a: i64, b: i64, c: i64, d: i64) -> HurwitzQuat {
        HurwitzQuat::from_ints(a, b, c, d)
    }

    fn pair(q: &HurwitzQuat, p: &HurwitzQuat) -> RotParam {
        RotParam::hurwitz_pair(q, p).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let t = hq(1, 1, 1, 0);
        let one = hq(1, 0, 0, 0);
        assert!(is_admissible(Family::D4Star, &pair(&t, &t)).unwrap());
        assert!(!is_admissible(Family::D4Star, &pair(&t, &one)).unwrap());

        let q = Icosian::from_int_coords(1, 1, 0, 0); // 1 + i
        let param = RotParam::icosian_single(&q).unwrap();
        assert!(is_admissible(Family::A4, &param).unwrap());

        // family/kind mismatch is an error
        assert!(is_admissible(Family::A4, &pair(&t, &t)).is_err());
    }

    #[test]
    fn rotation_identity_and_fixed_vector() {
        let one = hq(1, 0, 0, 0);
        let r = rotation_matrix(Family::D4Star, &pair(&one, &one)).unwrap();
        assert_eq!(r, RatMatrix::identity(4));

        // R(q,q) fixes the quaternion 1.
        let q = hq(1, 1, 1, 0);
        let r = rotation_matrix(Family::D4Star, &pair(&q, &q)).unwrap();
        let e0: Vec<BigRational> = [1, 0, 0, 0]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert_eq!(r.mul_vec(&e0), e0);
    }

    #[test]
    fn a4_rotation_has_order_four() {
        let q = Icosian::from_int_coords(1, 1, 0, 0);
        let param = RotParam::icosian_single(&q).unwrap();
        let r = rotation_matrix(Family::A4, &param).unwrap();
        let r2 = r.mul(&r);
        let r4 = r2.mul(&r2);
        assert_eq!(r4, RatMatrix::identity(8));
        assert_ne!(r2, RatMatrix::identity(8));
    }

    #[test]
    fn reduced_extension_examples() {
        // equal norms: both α equal 1
        let q = hq(1, 1, 1, 0);
        let AlphaExt::Hurwitz {
            alpha_q, alpha_p, ..
        } = reduced_extension(Family::D4Star, &pair(&q, &q)).unwrap()
        else {
            panic!()
        };
        assert_eq!(alpha_q, BigInt::one());
        assert_eq!(alpha_p, BigInt::one());

        // coprime norms 9 and 25: α_q = 5, α_p = 3
        let q9 = hq(2, 2, 1, 0);
        let p25 = hq(4, 3, 0, 0);
        assert_eq!(q9.norm(), BigInt::from(9));
        assert_eq!(p25.norm(), BigInt::from(25));
        let AlphaExt::Hurwitz {
            alpha_q,
            alpha_p,
            q_alpha,
            p_alpha,
        } = reduced_extension(Family::D4Star, &pair(&q9, &p25)).unwrap()
        else {
            panic!()
        };
        assert_eq!(alpha_q, BigInt::from(5));
        assert_eq!(alpha_p, BigInt::from(3));
        assert_eq!(q_alpha.norm(), BigInt::from(225));
        assert_eq!(p_alpha.norm(), BigInt::from(225));

        // A4 with |q|² = 2: α = 1
        let q = Icosian::from_int_coords(1, 1, 0, 0);
        let AlphaExt::Golden { alpha_q, .. } =
            reduced_extension(Family::A4, &RotParam::icosian_single(&q).unwrap()).unwrap()
        else {
            panic!()
        };
        assert_eq!(alpha_q, GoldenInt::one());
    }

    #[test]
    fn sigma_examples() {
        let one = hq(1, 0, 0, 0);
        assert_eq!(
            sigma(Family::D4Star, &pair(&one, &one)).unwrap(),
            BigInt::one()
        );

        let q = hq(1, 1, 1, 0);
        let param = pair(&q, &q);
        assert_eq!(sigma(Family::D4Star, &param).unwrap(), BigInt::from(3));
        // cross-check against the brute-force index
        let csl = csl_brute(Family::D4Star, &param).unwrap();
        assert_eq!(
            FreeModule::index_in(&csl, &Family::D4Star.gamma()).unwrap(),
            BigInt::from(3)
        );

        let q = Icosian::from_int_coords(1, 1, 0, 0);
        let sp = RotParam::icosian_single(&q).unwrap();
        assert_eq!(sigma(Family::A4, &sp).unwrap(), BigInt::from(2));
    }

    #[test]
    fn csl_closed_matches_brute() {
        let q = hq(1, 1, 1, 0);
        let param = pair(&q, &q);
        let closed = csl_closed(Family::D4Star, &param).unwrap();
        let brute = csl_brute(Family::D4Star, &param).unwrap();
        assert_eq!(closed, brute);
        assert_eq!(
            FreeModule::index_in(&closed, &Family::D4Star.gamma()).unwrap(),
            BigInt::from(3)
        );

        // identity parameter gives Γ itself
        let one = hq(1, 0, 0, 0);
        let id = pair(&one, &one);
        assert_eq!(
            csl_closed(Family::D4Star, &id).unwrap(),
            Family::D4Star.gamma()
        );

        // icosian unit pair: the whole ring, rank 8, index 1
        let u = Icosian::one();
        let ip = RotParam::icosian_pair(&u, &u).unwrap();
        let csm = csl_closed(Family::IcosianRing, &ip).unwrap();
        assert_eq!(csm, Family::IcosianRing.gamma());
        assert_eq!(csm.rank(), 8);

        // A4 example with Σ = 2
        let q = Icosian::from_int_coords(1, 1, 0, 0);
        let sp = RotParam::icosian_single(&q).unwrap();
        let closed = csl_closed(Family::A4, &sp).unwrap();
        let brute = csl_brute(Family::A4, &sp).unwrap();
        assert_eq!(closed, brute);
        assert_eq!(
            FreeModule::index_in(&closed, &Family::A4.gamma()).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn z4_sigma_is_d4_or_double() {
        let q = hq(1, 1, 1, 0);
        let param = pair(&q, &q);
        let s_d4 = sigma(Family::D4Star, &param).unwrap();
        let s_z4 = sigma(Family::Z4, &param).unwrap();
        assert!(s_z4 == s_d4 || s_z4 == BigInt::from(2) * &s_d4);
    }

    #[test]
    fn coin_data_consistency() {
        let q = hq(1, 1, 1, 0);
        let data = coin_data(Family::D4Star, &pair(&q, &q)).unwrap();
        assert_eq!(data.sigma, BigInt::from(3));
        assert_eq!(
            FreeModule::index_in(&data.csl, &Family::D4Star.gamma()).unwrap(),
            data.sigma
        );
    }

    #[test]
    fn pair_criterion_reflexive_and_unit_invariant() {
        let q = hq(1, 1, 1, 0);
        let param = pair(&q, &q);
        assert!(pair_equality_criterion(&param, &param).unwrap());

        // right-unit multiples give the same CSL and the same key
        let u = HurwitzQuat::omega();
        let param2 = pair(&q.mul(&u), &q.mul(&u));
        assert!(pair_equality_criterion(&param, &param2).unwrap());
        assert_eq!(
            csl_closed(Family::D4Star, &param).unwrap(),
            csl_closed(Family::D4Star, &param2).unwrap()
        );
    }

    #[test]
    fn symmetry_related_examples() {
        let q = hq(1, 1, 1, 0);
        let param = pair(&q, &q);
        assert!(symmetry_related(Family::D4Star, &param, &param).unwrap());

        let u = HurwitzQuat::omega();
        let related = pair(&q.mul(&u), &q);
        assert!(symmetry_related(Family::D4Star, &param, &related).unwrap());

        // different Σ means different CSL image classes
        let one = hq(1, 0, 0, 0);
        let id = pair(&one, &one);
        assert!(!symmetry_related(Family::D4Star, &param, &id).unwrap());
    }

    #[test]
    fn point_groups_small_families() {
        assert_eq!(point_group_rotations(Family::D4Star).len(), 576);
        assert_eq!(point_group_rotations(Family::Z4).len(), 192);
        assert_eq!(point_group_rotations(Family::A4).len(), 120);
    }

    #[test]
    fn normalization_flag() {
        let q = hq(2, 0, 0, 0);
        let param = RotParam::hurwitz_pair(&q, &q).unwrap();
        assert!(param.was_normalized());
        let (qr, pr) = param.hurwitz_parts().unwrap();
        assert!(qr.norm().is_odd() && pr.norm().is_odd());

        let t = hq(1, 1, 1, 0);
        let param = RotParam::hurwitz_pair(&t, &t).unwrap();
        assert!(!param.was_normalized());
        assert_eq!(param.hurwitz_parts().unwrap().0, &t);

        assert!(RotParam::hurwitz_pair(&HurwitzQuat::zero(), &t).is_err());
    }

    #[test]
    fn a4_lattice_is_the_twist_fixed_set() {
        // L = {x + x̃ : x ∈ I} as Z-modules, and every basis vector of L is
        // twist-fixed.
        let gamma = Family::A4.gamma();
        let mut gens: Vec<Vec<BigRational>> = Vec::new();
        for b in Icosian::zbasis() {
            let s = b.add(&b.twist());
            gens.push(golden_embed_vector(&s.coords()));
        }
        let sums = FreeModule::from_columns(8, &gens);
        assert_eq!(sums, gamma);

        for v in a4_basis() {
            let x: Icosian = {
                // interpret the basis vector as an icosian and check x = x̃
                let mut n: [GoldenInt; 4] = core::array::from_fn(|_| GoldenInt::zero());
                for (i, c) in v.iter().enumerate() {
                    let num = c.numer();
                    let den = c.denom();
                    let two_a = BigInt::from(2) * &num.a;
                    let two_b = BigInt::from(2) * &num.b;
                    assert!((&two_a % den).is_zero() && (&two_b % den).is_zero());
                    n[i] = GoldenInt::new(two_a / den, two_b / den);
                }
                Icosian::from_numerators(n).unwrap()
            };
            assert_eq!(x.twist(), x);
        }
    }
}
