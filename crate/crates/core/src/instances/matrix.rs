//! Groupoids of invertible matrices over a prime field.
//!
//! Objects model the fibers `𝔽_p^d` of a vector bundle at finitely many base
//! points; a morphism between two fibers of equal dimension is an invertible
//! matrix, composed by matrix multiplication mod `p`.

use std::collections::HashMap;
use std::fmt;

use super::{InstanceError, Limits};
use crate::category::{FiniteCategory, MorId, MorRecord, ObjId};

/// A square matrix over `𝔽_p`, row-major, entries reduced mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    dim: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(dim: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix entry count");
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `self · rhs` mod `p`.
    pub fn mul(&self, rhs: &Matrix, p: u32) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += u64::from(self.get(i, k)) * u64::from(rhs.get(k, j));
                }
                entries[i * n + j] = (acc % u64::from(p)) as u32;
            }
        }
        Matrix { dim: n, entries }
    }

    /// Block-diagonal matrix `diag(self, rhs)`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let n = self.dim + rhs.dim;
        let mut entries = vec![0; n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..rhs.dim {
            for j in 0..rhs.dim {
                entries[(self.dim + i) * n + self.dim + j] = rhs.get(i, j);
            }
        }
        Matrix { dim: n, entries }
    }

    /// Rank over `𝔽_p` by Gaussian elimination.
    pub fn rank(&self, p: u32) -> usize {
        let n = self.dim;
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(self.get(i, j))).collect())
            .collect();
        let p = u64::from(p);
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_pow(m[rank][col], p - 2, p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..n {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    let pivot_row = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row) {
                        *x = (*x + p * p - factor * y) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self, p: u32) -> bool {
        self.rank(p) == self.dim
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `|GL(d, 𝔽_p)| = ∏ (p^d − p^i)`, saturating.
pub fn general_linear_order(p: u32, d: usize) -> u128 {
    let p = u128::from(p);
    let pd = p.saturating_pow(d as u32);
    (0..d as u32).fold(1u128, |acc, i| acc.saturating_mul(pd - p.pow(i)))
}

/// Every invertible `d × d` matrix over `𝔽_p`, in lexicographic order of entries.
pub fn general_linear(p: u32, d: usize, limits: &Limits) -> Result<Vec<Matrix>, InstanceError> {
    if !is_prime(p) {
        return Err(InstanceError::NotPrime(p));
    }
    let order = general_linear_order(p, d);
    if order > limits.max_hom as u128 {
        return Err(InstanceError::SizeGuard {
            what: format!("GL({d}, F_{p})"),
            size: order,
            limit: limits.max_hom,
        });
    }
    let cells = d * d;
    let total = u64::from(p).pow(cells as u32);
    let mut out = Vec::with_capacity(order as usize);
    for code in 0..total {
        let mut entries = vec![0; cells];
        let mut c = code;
        for slot in entries.iter_mut().rev() {
            *slot = (c % u64::from(p)) as u32;
            c /= u64::from(p);
        }
        let m = Matrix::new(d, entries);
        if m.is_invertible(p) {
            out.push(m);
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// A matrix groupoid: the category plus the matrix behind every morphism.
#[derive(Clone, Debug)]
pub struct MatrixGroupoid {
    p: u32,
    dims: Vec<usize>,
    category: FiniteCategory,
    matrices: Vec<Matrix>,
    lookup: HashMap<(ObjId, ObjId, Matrix), MorId>,
}

impl MatrixGroupoid {
    /// Objects with the given names and fiber dimensions; every pair of
    /// objects of equal dimension is joined by all of `GL(d, 𝔽_p)`.
    pub fn build(
        p: u32,
        objects: Vec<(String, usize)>,
        limits: &Limits,
    ) -> Result<Self, InstanceError> {
        if objects.len() > limits.max_objects {
            return Err(InstanceError::SizeGuard {
                what: "object count".into(),
                size: objects.len() as u128,
                limit: limits.max_objects,
            });
        }
        let mut groups: HashMap<usize, Vec<Matrix>> = HashMap::new();
        for &(_, d) in &objects {
            if let std::collections::hash_map::Entry::Vacant(slot) = groups.entry(d) {
                slot.insert(general_linear(p, d, limits)?);
            }
        }
        let mut records = Vec::new();
        let mut matrices = Vec::new();
        let mut lookup = HashMap::new();
        for (i, (xname, dx)) in objects.iter().enumerate() {
            for (j, (yname, dy)) in objects.iter().enumerate() {
                if dx != dy {
                    continue;
                }
                for m in &groups[dx] {
                    let id = MorId(records.len());
                    let label = if objects.len() == 1 {
                        m.to_string()
                    } else {
                        format!("{xname}->{yname}:{m}")
                    };
                    records.push(MorRecord {
                        id,
                        dom: ObjId(i),
                        cod: ObjId(j),
                        label: Some(label),
                    });
                    lookup.insert((ObjId(i), ObjId(j), m.clone()), id);
                    matrices.push(m.clone());
                }
            }
        }
        let identities = objects
            .iter()
            .enumerate()
            .map(|(i, &(_, d))| lookup[&(ObjId(i), ObjId(i), Matrix::identity(d))])
            .collect();
        let obj_dims = objects.iter().map(|&(_, d)| d).collect();
        let names = objects.into_iter().map(|(n, _)| n).collect::<Vec<_>>();
        let category = FiniteCategory::from_fn(names, records.clone(), identities, |g, f| {
            let product = matrices[g.0].mul(&matrices[f.0], p);
            lookup[&(records[f.0].dom, records[g.0].cod, product)]
        })?;
        Ok(MatrixGroupoid {
            p,
            dims: obj_dims,
            category,
            matrices,
            lookup,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn into_category(self) -> FiniteCategory {
        self.category
    }

    pub fn dim(&self, x: ObjId) -> usize {
        self.dims[x.0]
    }

    pub fn matrix(&self, f: MorId) -> &Matrix {
        &self.matrices[f.0]
    }

    /// The morphism `x → y` carried by matrix `m`, if any.
    pub fn morphism(&self, x: ObjId, y: ObjId, m: &Matrix) -> Option<MorId> {
        self.lookup.get(&(x, y, m.clone())).copied()
    }
}

/// `k` fibers `𝔽_p^d`, all pairwise connected by `GL(d, 𝔽_p)`.
pub fn matrix_groupoid_with(
    p: u32,
    d: usize,
    k: usize,
    limits: &Limits,
) -> Result<MatrixGroupoid, InstanceError> {
    if d == 0 || k == 0 {
        return Err(InstanceError::Invalid(
            "dimension and object count must be positive".into(),
        ));
    }
    let objects = (0..k).map(|i| (format!("E{i}"), d)).collect();
    MatrixGroupoid::build(p, objects, limits)
}

pub fn matrix_groupoid(p: u32, d: usize, k: usize) -> Result<MatrixGroupoid, InstanceError> {
    matrix_groupoid_with(p, d, k, &Limits::default())
}

/// One fiber of each dimension `0..=max_dim`, named `d0, d1, …`. Only
/// automorphisms exist, since fibers of different dimension are not isomorphic.
pub fn graded_matrix_groupoid(
    p: u32,
    max_dim: usize,
    limits: &Limits,
) -> Result<MatrixGroupoid, InstanceError> {
    let objects = (0..=max_dim).map(|d| (format!("d{d}"), d)).collect();
    MatrixGroupoid::build(p, objects, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_orders_match_formula() {
        let limits = Limits::default();
        // Oracle: brute-force count over all p^(d²) matrices, checking the determinant.
        let brute = |p: u32, d: usize| -> usize {
            let total = p.pow((d * d) as u32);
            (0..total)
                .filter(|&code| {
                    let mut e = Vec::new();
                    let mut c = code;
                    for _ in 0..d * d {
                        e.push(c % p);
                        c /= p;
                    }
                    let det = match d {
                        1 => e[0] % p,
                        2 => (e[0] * e[3] + p * p - e[1] * e[2]) % p,
                        _ => unreachable!(),
                    };
                    det != 0
                })
                .count()
        };
        for (p, d) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
            let gl = general_linear(p, d, &limits).unwrap();
            assert_eq!(gl.len(), brute(p, d), "GL({d},{p})");
            assert_eq!(gl.len() as u128, general_linear_order(p, d));
        }
        assert_eq!(general_linear(2, 2, &limits).unwrap().len(), 6);
        assert_eq!(general_linear(2, 3, &limits).unwrap().len(), 168);
    }

    #[test]
    fn builder_examples() {
        let c = matrix_groupoid(2, 1, 1).unwrap();
        assert_eq!(c.category().morphism_count(), 1);
        let c = matrix_groupoid(2, 2, 1).unwrap();
        assert_eq!(c.category().hom_set(ObjId(0), ObjId(0)).len(), 6);
        let c = matrix_groupoid(3, 1, 2).unwrap();
        for x in c.category().objects() {
            for y in c.category().objects() {
                assert_eq!(c.category().hom_set(x, y).len(), 2);
            }
        }
        let c = matrix_groupoid(2, 2, 2).unwrap();
        assert_eq!(c.category().morphism_count(), 24);
        assert!(c.category().validate().is_ok());
        assert!(c.category().is_groupoid());
    }

    #[test]
    fn guards_fail_fast() {
        assert!(matches!(
            matrix_groupoid(4, 1, 1),
            Err(InstanceError::NotPrime(4))
        ));
        assert!(matches!(
            matrix_groupoid(2, 4, 1),
            Err(InstanceError::SizeGuard { .. })
        ));
        assert!(matches!(
            matrix_groupoid(2, 1, 17),
            Err(InstanceError::SizeGuard { .. })
        ));
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let a = Matrix::new(1, vec![1]);
        let b = Matrix::new(2, vec![0, 1, 1, 1]);
        let s = a.direct_sum(&b);
        assert_eq!(s, Matrix::new(3, vec![1, 0, 0, 0, 0, 1, 0, 1, 1]));
        assert_eq!(Matrix::identity(0).direct_sum(&b), b);
    }
}
