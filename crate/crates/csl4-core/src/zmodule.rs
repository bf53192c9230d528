//! Finitely generated free Z-modules in rational ambient space Qⁿ.
//!
//! A module is stored through one fixed bit-exact canonical form: the
//! column-style Hermite normal form of the integer matrix obtained by
//! clearing denominators, together with the remaining scale. Two modules
//! are equal iff their canonical forms are identical, which makes modules
//! directly usable as dedup keys.
//!
//! Intersections go through the integer kernel of a stacked generator
//! matrix, which works uniformly for unequal ranks. All arithmetic is
//! arbitrary precision; no floating point anywhere.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::golden::GoldenRat;
use crate::{CslError, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(rows * cols, data.len());
        RatMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigRational>]) -> Self {
        let mut m = RatMatrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigRational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.at(k, j);
                    *out.at_mut(i, j) += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction Gaussian elimination.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return BigRational::zero();
            };
            if piv != col {
                for j in 0..n {
                    let tmp = m.at(piv, j).clone();
                    *m.at_mut(piv, j) = m.at(col, j).clone();
                    *m.at_mut(col, j) = tmp;
                }
                det = -det;
            }
            let p = m.at(col, col).clone();
            det *= p.clone();
            for r in (col + 1)..n {
                let f = m.at(r, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = &f * m.at(col, j);
                    *m.at_mut(r, j) -= t;
                }
            }
        }
        det
    }

    /// Exact inverse, None for singular input.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    let tmp = m.at(piv, j).clone();
                    *m.at_mut(piv, j) = m.at(col, j).clone();
                    *m.at_mut(col, j) = tmp;
                    let tmp = inv.at(piv, j).clone();
                    *inv.at_mut(piv, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let p = m.at(col, col).clone();
            for j in 0..n {
                *m.at_mut(col, j) /= p.clone();
                *inv.at_mut(col, j) /= p.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = m.at(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &f * m.at(col, j);
                    *m.at_mut(r, j) -= t;
                    let t = &f * inv.at(col, j);
                    *inv.at_mut(r, j) -= t;
                }
            }
        }
        Some(inv)
    }
}

/// A free Z-module of rank k in Qⁿ, stored in canonical form: an integer
/// column HNF basis over a positive denominator with coprime content.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeModule {
    ambient: usize,
    /// Canonical basis columns (integer части), length = rank.
    num: Vec<Vec<BigInt>>,
    den: BigInt,
}

impl FreeModule {
    /// The module generated by the given rational columns.
    pub fn from_columns(ambient: usize, generators: &[Vec<BigRational>]) -> FreeModule {
        let mut den = BigInt::one();
        for g in generators {
            assert_eq!(g.len(), ambient, "generator has wrong length");
            for x in g {
                den = den.lcm(x.denom());
            }
        }
        let mut cols: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| x.numer() * (&den / x.denom()))
                    .collect::<Vec<BigInt>>()
            })
            .collect();
        hnf_columns(&mut cols, ambient);
        // Reduce the common content against the denominator.
        let mut content = den.clone();
        for c in &cols {
            for x in c {
                content = content.gcd(x);
            }
        }
        if !content.is_one() && !content.is_zero() {
            for c in &mut cols {
                for x in c.iter_mut() {
                    *x = &*x / &content;
                }
            }
            den = &den / &content;
        }
        if cols.is_empty() {
            den = BigInt::one();
        }
        FreeModule {
            ambient,
            num: cols,
            den,
        }
    }

    /// Re-canonicalises (idempotent by construction).
    pub fn hnf_canonical(&self) -> FreeModule {
        FreeModule::from_columns(self.ambient, &self.basis_columns())
    }

    /// Zⁿ.
    pub fn standard_lattice(n: usize) -> FreeModule {
        let cols: Vec<Vec<BigRational>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        FreeModule::from_columns(n, &cols)
    }

    pub fn zero_module(ambient: usize) -> FreeModule {
        FreeModule::from_columns(ambient, &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.num.len()
    }

    /// Canonical basis as rational columns.
    pub fn basis_columns(&self) -> Vec<Vec<BigRational>> {
        self.num
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| BigRational::new(x.clone(), self.den.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(self.ambient, &self.basis_columns())
    }

    /// Smallest module containing both summands.
    pub fn sum(&self, other: &FreeModule) -> Result<FreeModule> {
        if self.ambient != other.ambient {
            return Err(CslError::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut cols = self.basis_columns();
        cols.extend(other.basis_columns());
        Ok(FreeModule::from_columns(self.ambient, &cols))
    }

    /// Exact intersection via the integer kernel of [A | −B].
    pub fn intersect(&self, other: &FreeModule) -> Result<FreeModule> {
        if self.ambient != other.ambient {
            return Err(CslError::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let ka = self.rank();
        let kb = other.rank();
        if ka == 0 || kb == 0 {
            return Ok(FreeModule::zero_module(self.ambient));
        }
        // Integer matrix [A' | −B'] with common scale.
        let scale = self.den.lcm(&other.den);
        let fa = &scale / &self.den;
        let fb = &scale / &other.den;
        let mut stacked: Vec<Vec<BigInt>> = Vec::with_capacity(ka + kb);
        for c in &self.num {
            stacked.push(c.iter().map(|x| x * &fa).collect());
        }
        for c in &other.num {
            stacked.push(c.iter().map(|x| -(x * &fb)).collect());
        }
        let kernel = integer_kernel(&stacked, self.ambient);
        // Intersection points: A·u for kernel vectors (u | v).
        let a_cols = self.basis_columns();
        let gens: Vec<Vec<BigRational>> = kernel
            .iter()
            .map(|k| {
                let mut acc = vec![BigRational::zero(); self.ambient];
                for (j, coeff) in k.iter().take(ka).enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let c = BigRational::from_integer(coeff.clone());
                    for i in 0..self.ambient {
                        acc[i] += &c * &a_cols[j][i];
                    }
                }
                acc
            })
            .collect();
        Ok(FreeModule::from_columns(self.ambient, &gens))
    }

    /// Coordinates of v in the canonical basis, None when v is outside the
    /// rational span.
    pub fn solve_coords(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(v.len(), self.ambient);
        // Forward substitution along the pivot staircase.
        let cols = self.basis_columns();
        let mut coords = vec![BigRational::zero(); self.rank()];
        let mut residue: Vec<BigRational> = v.to_vec();
        for (j, col) in cols.iter().enumerate() {
            let pivot_row = col
                .iter()
                .position(|x| !x.is_zero())
                .expect("no zero columns");
            let t = &residue[pivot_row] / &col[pivot_row];
            if !t.is_zero() {
                for i in 0..self.ambient {
                    let d = &t * &col[i];
                    residue[i] -= d;
                }
            }
            coords[j] = t;
        }
        if residue.iter().all(Zero::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &[BigRational]) -> bool {
        match self.solve_coords(v) {
            Some(c) => c.iter().all(|x| x.is_integer()),
            None => false,
        }
    }

    pub fn contains_module(&self, other: &FreeModule) -> bool {
        other
            .basis_columns()
            .iter()
            .all(|c| self.contains_vector(c))
    }

    /// Index [sup : sub] = |det T| with sub = sup·T over Z.
    pub fn index_in(sub: &FreeModule, sup: &FreeModule) -> Result<BigInt> {
        if sub.ambient != sup.ambient {
            return Err(CslError::DimensionMismatch {
                left: sub.ambient,
                right: sup.ambient,
            });
        }
        if sub.rank() != sup.rank() {
            return Err(CslError::RankMismatch {
                sub: sub.rank(),
                sup: sup.rank(),
            });
        }
        let k = sub.rank();
        if k == 0 {
            return Ok(BigInt::one());
        }
        let mut t = RatMatrix::zeros(k, k);
        for (j, col) in sub.basis_columns().iter().enumerate() {
            let coords = sup.solve_coords(col).ok_or(CslError::NotContained)?;
            for (i, c) in coords.iter().enumerate() {
                if !c.is_integer() {
                    return Err(CslError::NotContained);
                }
                *t.at_mut(i, j) = c.clone();
            }
        }
        let det = t.det();
        debug_assert!(det.is_integer());
        Ok(det.to_integer().abs())
    }

    /// The image R·M of the module under an invertible linear map.
    pub fn apply_map(&self, r: &RatMatrix) -> Result<FreeModule> {
        assert_eq!(r.rows(), self.ambient);
        assert_eq!(r.cols(), self.ambient);
        if r.det().is_zero() {
            return Err(CslError::SingularMap);
        }
        let cols: Vec<Vec<BigRational>> =
            self.basis_columns().iter().map(|c| r.mul_vec(c)).collect();
        Ok(FreeModule::from_columns(self.ambient, &cols))
    }

    /// Covolume |det(basis)| for full-rank modules.
    pub fn covolume(&self) -> Option<BigRational> {
        if self.rank() != self.ambient {
            return None;
        }
        Some(self.basis_matrix().det().abs())
    }
}

impl fmt::Display for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule(dim {}, rank {}", self.ambient, self.rank())?;
        for c in self.basis_columns() {
            write!(f, "; [")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, ")")
    }
}

/// In-place column-style Hermite normal form: pivot rows increase down the
/// staircase, pivots positive, entries left of each pivot reduced into
/// \[0, pivot). Zero columns are removed.
fn hnf_columns(cols: &mut Vec<Vec<BigInt>>, rows: usize) {
    let mut pivot_col = 0usize;
    for row in 0..rows {
        if pivot_col >= cols.len() {
            break;
        }
        // Clear row entries right of pivot_col by column gcd steps.
        loop {
            let mut active: Vec<usize> = (pivot_col..cols.len())
                .filter(|&j| !cols[j][row].is_zero())
                .collect();
            if active.is_empty() {
                break;
            }
            // Column with smallest nonzero |entry| becomes the pivot.
            active.sort_by_key(|&j| cols[j][row].abs());
            let jmin = active[0];
            cols.swap(pivot_col, jmin);
            if active.len() == 1 {
                break;
            }
            let pivot_val = cols[pivot_col][row].clone();
            for j in (pivot_col + 1)..cols.len() {
                if cols[j][row].is_zero() {
                    continue;
                }
                let q = &cols[j][row] / &pivot_val; // truncated division shrinks
                if !q.is_zero() {
                    for i in 0..rows {
                        let t = &q * &cols[pivot_col][i];
                        cols[j][i] -= t;
                    }
                }
            }
        }
        if !cols[pivot_col][row].is_zero() {
            if cols[pivot_col][row].is_negative() {
                for i in 0..rows {
                    cols[pivot_col][i] = -&cols[pivot_col][i];
                }
            }
            let pivot_val = cols[pivot_col][row].clone();
            for j in 0..pivot_col {
                let q = cols[j][row].div_floor(&pivot_val);
                if !q.is_zero() {
                    for i in 0..rows {
                        let t = &q * &cols[pivot_col][i];
                        cols[j][i] -= t;
                    }
                }
            }
            pivot_col += 1;
        }
    }
    cols.truncate(pivot_col);
}

/// Basis of the integer kernel {x ∈ Z^k : M·x = 0} for integer columns M
/// (k columns of height `rows`). Returned as vectors of length k.
pub fn integer_kernel(cols: &[Vec<BigInt>], rows: usize) -> Vec<Vec<BigInt>> {
    let k = cols.len();
    // Stack the identity below M and column-reduce the top part.
    let mut ext: Vec<Vec<BigInt>> = (0..k)
        .map(|j| {
            let mut c = cols[j].clone();
            c.extend((0..k).map(|i| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            c
        })
        .collect();
    let total = rows + k;
    let mut pivot_col = 0usize;
    for row in 0..rows {
        if pivot_col >= ext.len() {
            break;
        }
        loop {
            let mut active: Vec<usize> = (pivot_col..ext.len())
                .filter(|&j| !ext[j][row].is_zero())
                .collect();
            if active.is_empty() {
                break;
            }
            active.sort_by_key(|&j| ext[j][row].abs());
            let jmin = active[0];
            ext.swap(pivot_col, jmin);
            if active.len() == 1 {
                break;
            }
            let pivot_val = ext[pivot_col][row].clone();
            for j in (pivot_col + 1)..ext.len() {
                if ext[j][row].is_zero() {
                    continue;
                }
                let q = &ext[j][row] / &pivot_val;
                if !q.is_zero() {
                    for i in 0..total {
                        let t = &q * &ext[pivot_col][i];
                        ext[j][i] -= t;
                    }
                }
            }
        }
        if !ext[pivot_col][row].is_zero() {
            pivot_col += 1;
        }
    }
    // Columns whose top part is now zero carry kernel vectors below.
    ext[pivot_col..]
        .iter()
        .map(|c| c[rows..].to_vec())
        .collect()
}

/// Embeds an element of Q(√5) as the coordinate pair (a, b).
pub fn golden_embed_vector(v: &[GoldenRat]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(2 * v.len());
    for x in v {
        let (a, b) = x.components();
        out.push(a);
        out.push(b);
    }
    out
}

/// Embeds a Q(√5)-linear map on Q(√5)ⁿ as a rational map on Q²ⁿ; each
/// entry u + vτ becomes the 2×2 block [[u, v], [v, u+v]].
pub fn golden_embed_matrix(n: usize, entries: &[GoldenRat]) -> RatMatrix {
    assert_eq!(entries.len(), n * n);
    let mut m = RatMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let (u, v) = entries[i * n + j].components();
            *m.at_mut(2 * i, 2 * j) = u.clone();
            *m.at_mut(2 * i, 2 * j + 1) = v.clone();
            *m.at_mut(2 * i + 1, 2 * j) = v.clone();
            *m.at_mut(2 * i + 1, 2 * j + 1) = u + v;
        }
    }
    m
}

/// The Z-span of the embedded generators; with `tau_closure` the τ-multiples
/// are included, turning a Z\[τ\]-span into its full rank-2k Z-span.
pub fn golden_embed_module(
    golden_dim: usize,
    generators: &[Vec<GoldenRat>],
    tau_closure: bool,
) -> FreeModule {
    let tau = GoldenRat::from_golden(crate::golden::GoldenInt::tau());
    let mut cols: Vec<Vec<BigRational>> = Vec::new();
    for g in generators {
        assert_eq!(g.len(), golden_dim);
        cols.push(golden_embed_vector(g));
        if tau_closure {
            let tg: Vec<GoldenRat> = g.iter().map(|x| &tau * x).collect();
            cols.push(golden_embed_vector(&tg));
        }
    }
    FreeModule::from_columns(2 * golden_dim, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn module(ambient: usize, cols: &[&[i64]]) -> FreeModule {
        let cols: Vec<Vec<BigRational>> = cols
            .iter()
            .map(|c| c.iter().map(|&x| rat(x)).collect())
            .collect();
        FreeModule::from_columns(ambient, &cols)
    }

    #[test]
    fn hnf_examples() {
        let id = FreeModule::standard_lattice(2);
        assert_eq!(id.hnf_canonical(), id);
        assert_eq!(
            id.basis_columns(),
            vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]
        );

        // {(2,0),(1,1)} has HNF basis {(1,1),(0,2)}
        let m = module(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            m.basis_columns(),
            vec![vec![rat(1), rat(1)], vec![rat(0), rat(2)]]
        );

        // Unimodular recombination keeps the canonical form.
        let m2 = module(2, &[&[3, 1], &[1, 1], &[2, 0]]);
        assert_eq!(m, m2);
    }

    #[test]
    fn sum_examples() {
        let a = module(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(a.sum(&a).unwrap(), a);
        let b = module(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(a.sum(&b).unwrap(), FreeModule::standard_lattice(2));
        let zero = FreeModule::zero_module(2);
        assert_eq!(a.sum(&zero).unwrap(), a);
        assert!(a.sum(&FreeModule::zero_module(3)).is_err());
    }

    #[test]
    fn intersect_examples() {
        let a = module(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let two_z = module(1, &[&[2]]);
        let three_z = module(1, &[&[3]]);
        assert_eq!(two_z.intersect(&three_z).unwrap(), module(1, &[&[6]]));

        // A sublattice contained in Z² intersects to itself.
        let sub = module(2, &[&[1, 1], &[1, -1]]);
        let z2 = FreeModule::standard_lattice(2);
        assert_eq!(z2.intersect(&sub).unwrap(), sub);
    }

    #[test]
    fn index_examples() {
        let z2 = FreeModule::standard_lattice(2);
        let two_z2 = module(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(FreeModule::index_in(&two_z2, &z2).unwrap(), BigInt::from(4));
        assert_eq!(FreeModule::index_in(&z2, &z2).unwrap(), BigInt::from(1));
        // Z² is not contained in 2Z².
        assert_eq!(
            FreeModule::index_in(&z2, &two_z2),
            Err(CslError::NotContained)
        );
        // Rank mismatch means infinite index.
        let line = module(2, &[&[1, 0]]);
        assert!(matches!(
            FreeModule::index_in(&line, &z2),
            Err(CslError::RankMismatch { .. })
        ));
    }

    #[test]
    fn index_of_z4_in_hurwitz_lattice() {
        // The standard lattice is a sublattice of the centred one (with the
        // half-vector adjoined) of index 2.
        let j_cols = vec![
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(0)],
            vec![ratq(1, 2), ratq(1, 2), ratq(1, 2), ratq(1, 2)],
        ];
        let j = FreeModule::from_columns(4, &j_cols);
        let z4 = FreeModule::standard_lattice(4);
        assert_eq!(FreeModule::index_in(&z4, &j).unwrap(), BigInt::from(2));
    }

    #[test]
    fn apply_map_examples() {
        let z2 = FreeModule::standard_lattice(2);
        let id = RatMatrix::identity(2);
        assert_eq!(z2.apply_map(&id).unwrap(), z2);

        // π/2 rotation preserves Z²
        let rot = RatMatrix::new(2, 2, vec![rat(0), rat(-1), rat(1), rat(0)]);
        assert_eq!(z2.apply_map(&rot).unwrap(), z2);

        let m = module(2, &[&[1, 2], &[0, 3]]);
        let inv = rot.inverse().unwrap();
        assert_eq!(m.apply_map(&rot).unwrap().apply_map(&inv).unwrap(), m);

        let sing = RatMatrix::new(2, 2, vec![rat(1), rat(1), rat(1), rat(1)]);
        assert_eq!(m.apply_map(&sing), Err(CslError::SingularMap));
    }

    #[test]
    fn golden_embedding_examples() {
        use crate::golden::GoldenInt;
        // Z[τ] in one golden dimension with τ-closure is all of Z².
        let one = vec![GoldenRat::one()];
        let m = golden_embed_module(1, &[one], true);
        assert_eq!(m, FreeModule::standard_lattice(2));

        // Without closure, the τ-span is missing.
        let tau = vec![GoldenRat::from_golden(GoldenInt::tau())];
        let m = golden_embed_module(1, &[tau], false);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_and_contains() {
        let m = module(2, &[&[2, 0], &[1, 3]]);
        assert!(m.contains_vector(&[rat(3), rat(3)]));
        assert!(!m.contains_vector(&[rat(1), rat(0)]));
        let line = module(2, &[&[1, 1]]);
        assert!(line.solve_coords(&[rat(1), rat(0)]).is_none());
    }

    fn random_full_rank(rng_vals: &[i64]) -> Option<FreeModule> {
        let cols: Vec<Vec<BigRational>> = (0..4)
            .map(|j| (0..4).map(|i| rat(rng_vals[4 * j + i])).collect())
            .collect();
        let m = FreeModule::from_columns(4, &cols);
        (m.rank() == 4).then_some(m)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn determinant_identity(vals_a in proptest::array::uniform16(-5i64..=5),
                                vals_b in proptest::array::uniform16(-5i64..=5)) {
            let (Some(a), Some(b)) = (random_full_rank(&vals_a), random_full_rank(&vals_b)) else {
                return Ok(());
            };
            let inter = a.intersect(&b).unwrap();
            prop_assume!(inter.rank() == 4);
            let sum = a.sum(&b).unwrap();
            let lhs = inter.covolume().unwrap() * sum.covolume().unwrap();
            let rhs = a.covolume().unwrap() * b.covolume().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn intersection_is_contained(vals_a in proptest::array::uniform16(-5i64..=5),
                                     vals_b in proptest::array::uniform16(-5i64..=5)) {
            let (Some(a), Some(b)) = (random_full_rank(&vals_a), random_full_rank(&vals_b)) else {
                return Ok(());
            };
            let inter = a.intersect(&b).unwrap();
            prop_assert!(a.contains_module(&inter));
            prop_assert!(b.contains_module(&inter));
        }

        #[test]
        fn index_is_multiplicative_along_chains(
            vals_a in proptest::array::uniform16(-3i64..=3),
            vals_t in proptest::array::uniform16(-2i64..=2),
            vals_s in proptest::array::uniform16(-2i64..=2),
        ) {
            let Some(a) = random_full_rank(&vals_a) else { return Ok(()); };
            let t = RatMatrix::new(4, 4, vals_t.iter().map(|&x| rat(x)).collect());
            let s = RatMatrix::new(4, 4, vals_s.iter().map(|&x| rat(x)).collect());
            prop_assume!(!t.det().is_zero() && !s.det().is_zero());
            // B = A·T and C = B·S are nested integer-combination sublattices.
            let b = FreeModule::from_columns(4, &a.basis_matrix().mul(&t).columns());
            let c = FreeModule::from_columns(4, &b.basis_matrix().mul(&s).columns());
            let ab = FreeModule::index_in(&b, &a).unwrap();
            let bc = FreeModule::index_in(&c, &b).unwrap();
            let ac = FreeModule::index_in(&c, &a).unwrap();
            prop_assert_eq!(ac, ab * bc);
        }

        #[test]
        fn equality_is_double_containment(vals_a in proptest::array::uniform16(-4i64..=4),
                                          vals_b in proptest::array::uniform16(-4i64..=4)) {
            let (Some(a), Some(b)) = (random_full_rank(&vals_a), random_full_rank(&vals_b)) else {
                return Ok(());
            };
            let eq = a == b;
            let dc = a.contains_module(&b) && b.contains_module(&a);
            prop_assert_eq!(eq, dc);
        }
    }
}
