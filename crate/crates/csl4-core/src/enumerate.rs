//! Exhaustive desk-scale enumeration of coincidence rotations per index:
//! the ground truth that ties the closed forms, the equality criterion and
//! the counting functions together.
//!
//! Completeness arguments per family: for the hypercubic families the
//! reduced norms divide n with lcm n, so all candidates come from
//! `enumerate_norm`; for A4 and the icosian ring the quaternion norm is a
//! totally positive divisor of n (up to unit squares), and per associate
//! class the trace-minimal representative is reachable inside the trace
//! ball of its own trace. Symmetry classes are deduplicated by the
//! canonical form of R·Γ, distinct coincidence modules by the canonical
//! form of the module itself.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::coincidence::{
    csl_closed, point_group_rotations, rotation_image, rotation_matrix, sigma, Family, RotParam,
};
use crate::counting::{f_csl, f_rot};
use crate::golden::{int_sqrt, GoldenInt};
use crate::hurwitz::HurwitzQuat;
use crate::icosian::{trace_ball_i64, Ico64, Icosian};
use crate::zmodule::FreeModule;
use crate::{CslError, Result};

/// Enumeration ceilings. Defaults are sized so that the full verification
/// suite finishes in minutes on a laptop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub d4_max: u64,
    pub z4_max: u64,
    pub a4_max: u64,
    pub icosian_max: u64,
    /// Largest allowed trace-ball bound for icosian enumerations.
    pub trace_bound_limit: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            d4_max: 21,
            z4_max: 12,
            a4_max: 12,
            icosian_max: 10,
            trace_bound_limit: 40,
        }
    }
}

impl Budget {
    pub fn max_n(&self, family: Family) -> u64 {
        match family {
            Family::D4Star => self.d4_max,
            Family::Z4 => self.z4_max,
            Family::A4 => self.a4_max,
            Family::IcosianRing => self.icosian_max,
        }
    }

    /// A budget that allows everything up to the given ceilings.
    pub fn with_max(n: u64) -> Self {
        Budget {
            d4_max: n,
            z4_max: n,
            a4_max: n,
            icosian_max: n,
            trace_bound_limit: (4 * n) as i64,
        }
    }
}

/// Result of one exhaustive run at a fixed index.
#[derive(Clone, Debug)]
pub struct EnumReport {
    pub family: Family,
    pub n: u64,
    pub rotation_class_count: u64,
    pub distinct_csl_count: u64,
    /// One parameter per distinct coincidence module, in canonical order.
    pub witnesses: Vec<RotParam>,
    /// Filled by std callers; the core stays clock-free.
    pub elapsed: Option<core::time::Duration>,
}

/// Reusable enumeration state: the family's module, unit tables, coset
/// representatives and trace-ball caches.
pub struct EnumSession {
    family: Family,
    budget: Budget,
    units64: Vec<Ico64>,
    ball: Option<(i64, Vec<Ico64>)>,
    z4_cosets: Option<Vec<(HurwitzQuat, HurwitzQuat)>>,
}

impl EnumSession {
    pub fn new(family: Family, budget: Budget) -> Self {
        let units64 = match family {
            Family::A4 | Family::IcosianRing => Icosian::units()
                .iter()
                .map(|u| Ico64::from_icosian(u).expect("units are small"))
                .collect(),
            _ => Vec::new(),
        };
        EnumSession {
            family,
            budget,
            units64,
            ball: None,
            z4_cosets: None,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Complete enumeration and classification at index n.
    pub fn count_classes(&mut self, n: u64) -> Result<EnumReport> {
        let params = self.enumerate_params(n)?;
        self.classify(n, params)
    }

    /// The complete list of class representatives at index n, one rotation
    /// parameter per symmetry class.
    pub fn enumerate_params(&mut self, n: u64) -> Result<Vec<RotParam>> {
        if n < 1 || n > self.budget.max_n(self.family) {
            return Err(CslError::BudgetExceeded {
                requested: n,
                limit: self.budget.max_n(self.family),
            });
        }
        match self.family {
            Family::D4Star => enum_pairs_d4(n),
            Family::Z4 => self.enum_z4(n),
            Family::A4 => self.enum_single_a4(n),
            Family::IcosianRing => self.enum_pairs_icosian(n),
        }
    }

    fn classify(&self, n: u64, params: Vec<RotParam>) -> Result<EnumReport> {
        let mut images: BTreeSet<FreeModule> = BTreeSet::new();
        let mut by_csl: BTreeMap<FreeModule, RotParam> = BTreeMap::new();
        for param in &params {
            debug_assert_eq!(sigma(self.family, param)?, BigInt::from(n));
            let image = rotation_image(self.family, param)?;
            images.insert(image);
            let csl = csl_closed(self.family, param)?;
            by_csl.entry(csl).or_insert_with(|| param.clone());
        }
        Ok(EnumReport {
            family: self.family,
            n,
            rotation_class_count: images.len() as u64,
            distinct_csl_count: by_csl.len() as u64,
            witnesses: by_csl.into_values().collect(),
            elapsed: None,
        })
    }

    /// Primitive hypercubic rotations at index n: one representative per
    /// symmetry class, derived from the centred classes at the odd part of
    /// n via the three point-group cosets.
    fn enum_z4(&mut self, n: u64) -> Result<Vec<RotParam>> {
        if n % 4 == 0 {
            return Ok(Vec::new());
        }
        let m = if n % 2 == 0 { n / 2 } else { n };
        let base = enum_pairs_d4(m)?;
        let cosets = self.z4_cosets()?.clone();
        let target = BigInt::from(n);
        let mut out = Vec::new();
        for param in &base {
            let (q, p) = param.hurwitz_parts().expect("d4 enumeration yields pairs");
            let mut sigmas: Vec<BigInt> = Vec::with_capacity(3);
            for (u, v) in &cosets {
                let variant = RotParam::hurwitz_pair(&q.mul(u), &p.mul(v))?;
                let s = sigma(Family::Z4, &variant)?;
                if s == target {
                    out.push(variant);
                }
                sigmas.push(s);
            }
            // Every centred class splits into one class of the same index
            // and two of twice the index.
            let expect_m = BigInt::from(m);
            let twice = BigInt::from(2 * m);
            debug_assert_eq!(sigmas.iter().filter(|s| **s == expect_m).count(), 1);
            debug_assert_eq!(sigmas.iter().filter(|s| **s == twice).count(), 2);
        }
        Ok(out)
    }

    /// Coset representatives of the Z⁴-preserving subgroup inside the
    /// centred point group, as unit parameter pairs (three distinct
    /// Z⁴-images, the identity's among them).
    fn z4_cosets(&mut self) -> Result<&Vec<(HurwitzQuat, HurwitzQuat)>> {
        if self.z4_cosets.is_none() {
            let z4 = Family::Z4.gamma();
            let units = HurwitzQuat::units();
            let mut images: BTreeMap<FreeModule, (HurwitzQuat, HurwitzQuat)> = BTreeMap::new();
            'outer: for u in &units {
                for v in &units {
                    let param = RotParam::hurwitz_pair(u, v)?;
                    let r = rotation_matrix(Family::D4Star, &param)?;
                    let img = z4.apply_map(&r)?;
                    images.entry(img).or_insert_with(|| (u.clone(), v.clone()));
                    if images.len() == 3 {
                        break 'outer;
                    }
                }
            }
            assert_eq!(images.len(), 3, "unit pairs must reach all three cosets");
            self.z4_cosets = Some(images.into_values().collect());
        }
        Ok(self.z4_cosets.as_ref().unwrap())
    }

    /// A4 rotation classes at index n: one primitive admissible icosian per
    /// class. Candidate norms are the totally positive canonical divisors
    /// x of n with Nr(x) a perfect square and lcm(x, x') = n.
    fn enum_single_a4(&mut self, n: u64) -> Result<Vec<RotParam>> {
        let n_g = GoldenInt::from_int(n as i64);
        let mut out = Vec::new();
        for x in n_g.divisors() {
            if int_sqrt(&x.norm())?.is_none() {
                continue;
            }
            if GoldenInt::lcm(&x, &x.conj())? != n_g {
                continue;
            }
            for rep in self.norm_orbit_reps(&x)? {
                let param = RotParam::icosian_single(&rep)?;
                debug_assert!(crate::coincidence::is_admissible(Family::A4, &param)?);
                out.push(param);
            }
        }
        Ok(out)
    }

    /// Icosian pair classes at index n: norms run over divisor pairs (x, y)
    /// of each totally positive m with Nr(m) = n, subject to lcm(x,y) = m
    /// and xy a square in Z\[τ\].
    fn enum_pairs_icosian(&mut self, n: u64) -> Result<Vec<RotParam>> {
        let n_g = GoldenInt::from_int(n as i64);
        let mut out = Vec::new();
        for m in n_g.divisors() {
            if m.norm() != BigInt::from(n) {
                continue;
            }
            let divs = m.divisors();
            for x in &divs {
                for y in &divs {
                    if GoldenInt::lcm(x, y).ok().as_ref() != Some(&m) {
                        continue;
                    }
                    if (x * y).sqrt().is_none() {
                        continue;
                    }
                    let qs = self.norm_orbit_reps(x)?;
                    let ps = self.norm_orbit_reps(y)?;
                    for q in &qs {
                        for p in &ps {
                            let param = RotParam::icosian_pair(q, p)?;
                            debug_assert_eq!(sigma(Family::IcosianRing, &param)?, BigInt::from(n));
                            out.push(param);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// One canonical representative per right-unit orbit of the primitive
    /// icosians with |q|² equal to the (trace-minimal, totally positive)
    /// golden integer x.
    fn norm_orbit_reps(&mut self, x: &GoldenInt) -> Result<Vec<Icosian>> {
        let bound = x
            .trace()
            .to_i64()
            .filter(|&b| b <= self.budget.trace_bound_limit)
            .ok_or(CslError::BudgetExceeded {
                requested: x.trace().to_u64().unwrap_or(u64::MAX),
                limit: self.budget.trace_bound_limit as u64,
            })?;
        let target = (
            x.a.to_i64().expect("small norm"),
            x.b.to_i64().expect("small norm"),
        );
        let ball = self.ball(bound);
        let mut reps: BTreeMap<[(i64, i64, i64); 4], Ico64> = BTreeMap::new();
        for e in ball {
            if e.norm_golden() != target {
                continue;
            }
            let rep = self
                .units64
                .iter()
                .map(|u| e.mul(u))
                .min_by_key(|c| c.key())
                .expect("nonempty unit table");
            reps.entry(rep.key()).or_insert(rep);
        }
        let mut out = Vec::new();
        for rep in reps.into_values() {
            let ico = rep.to_icosian();
            if ico.is_primitive()? {
                out.push(ico);
            }
        }
        Ok(out)
    }

    fn ball(&mut self, bound: i64) -> Vec<Ico64> {
        match &self.ball {
            Some((b, points)) if *b >= bound => points
                .iter()
                .filter(|x| x.trace_form() <= bound)
                .copied()
                .collect(),
            _ => {
                let points = trace_ball_i64(bound);
                self.ball = Some((bound, points.clone()));
                points
            }
        }
    }

    /// Precomputes the trace ball so ascending scans reuse one enumeration.
    pub fn prewarm(&mut self, bound: i64) {
        if bound <= self.budget.trace_bound_limit {
            self.ball(bound);
        }
    }
}

/// One-shot enumeration with a fresh session.
pub fn count_classes(family: Family, n: u64, budget: Budget) -> Result<EnumReport> {
    EnumSession::new(family, budget).count_classes(n)
}

/// All primitive reduced admissible pairs with Σ = n, one representative
/// per right-unit orbit of each side. Even n yield the empty list (the
/// centred spectrum is odd).
pub fn enum_pairs_d4(n: u64) -> Result<Vec<RotParam>> {
    if n < 1 {
        return Err(CslError::NegativeInput);
    }
    if n % 2 == 0 {
        return Ok(Vec::new());
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut reps: BTreeMap<u64, Vec<HurwitzQuat>> = BTreeMap::new();
    let mut out = Vec::new();
    for &a in &divisors {
        for &b in &divisors {
            if a.lcm(&b) != n {
                continue;
            }
            if int_sqrt(&BigInt::from(a * b))?.is_none() {
                continue;
            }
            for side in [a, b] {
                reps.entry(side)
                    .or_insert_with(|| primitive_norm_orbit_reps(side));
            }
            for q in &reps[&a] {
                for p in &reps[&b] {
                    out.push(RotParam::hurwitz_pair(q, p)?);
                }
            }
        }
    }
    Ok(out)
}

/// Canonical right-unit orbit representatives of the primitive Hurwitz
/// quaternions of norm m.
fn primitive_norm_orbit_reps(m: u64) -> Vec<HurwitzQuat> {
    let mut set: BTreeSet<HurwitzQuat> = BTreeSet::new();
    for q in HurwitzQuat::enumerate_norm(&BigInt::from(m)) {
        if q.is_primitive().expect("nonzero") {
            set.insert(q.canonical_right_rep());
        }
    }
    set.into_iter().collect()
}

/// A4 rotation classes at index n (fresh session, default budget).
pub fn enum_single_a4(n: u64) -> Result<Vec<RotParam>> {
    if n < 1 {
        return Err(CslError::NegativeInput);
    }
    EnumSession::new(Family::A4, Budget::default()).enum_single_a4(n)
}

/// Checks that the closed equality criterion for reduced admissible pairs
/// agrees with canonical-form equality of the coincidence modules over all
/// pairs of classes at index n.
pub fn verify_pair_criterion(n: u64) -> Result<bool> {
    let params = enum_pairs_d4(n)?;
    let mut keys = Vec::with_capacity(params.len());
    let mut csls = Vec::with_capacity(params.len());
    for p in &params {
        keys.push(crate::coincidence::pair_equality_key(p)?);
        csls.push(csl_closed(Family::D4Star, p)?);
    }
    for i in 0..params.len() {
        for j in (i + 1)..params.len() {
            if (keys[i] == keys[j]) != (csls[i] == csls[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the point-group orders of all four families (the generation
/// itself filters by R·Γ = Γ).
pub fn verify_point_groups() -> Result<bool> {
    Ok(Family::ALL
        .iter()
        .all(|f| point_group_rotations(*f).len() as u64 == f.group_order()))
}

/// Convenience: compare an enumeration report against the counting layer.
pub fn report_matches_counting(report: &EnumReport) -> Result<bool> {
    let rot = f_rot(report.family, report.n)?;
    let csl = f_csl(report.family, report.n)?;
    Ok(BigInt::from(report.rotation_class_count) == rot
        && BigInt::from(report.distinct_csl_count) == csl)
}
