//! Monoidal structures on the instance categories.

use super::group::FiniteGroup;
use super::matrix::{graded_matrix_groupoid, MatrixGroupoid};
use super::{group_as_groupoid, InstanceError, Limits};
use crate::category::{MorId, ObjId};
use crate::monoidal::MonoidalStructure;

/// The one-object groupoid of an abelian group, with `⊗` given by the group
/// product, trivial associator and both unitors equal to `unitor`.
///
/// For abelian groups every choice of `unitor` is a valid structure; for
/// non-abelian groups `⊗` fails to be a bifunctor.
pub fn group_product_monoidal(g: &FiniteGroup, unitor: usize) -> MonoidalStructure {
    let base = group_as_groupoid(g);
    let e = MorId(g.identity());
    let u = MorId(unitor);
    MonoidalStructure::from_fns(
        base,
        ObjId(0),
        |_, _| Some(ObjId(0)),
        |a, b| Some(MorId(g.mul(a.0, b.0))),
        |_, _, _| Some(e),
        |_| u,
        |_| u,
    )
    .expect("one-object tables are well formed")
}

/// Block direct sum on a graded matrix groupoid (one fiber per dimension
/// `0..=D`). `a ⊕ b` is defined when `dim a + dim b ≤ D`; the structure is
/// strict, with the zero-dimensional fiber as unit.
pub fn direct_sum_monoidal(grp: &MatrixGroupoid) -> Result<MonoidalStructure, InstanceError> {
    let c = grp.category();
    let by_dim: Vec<ObjId> = {
        let mut v: Vec<ObjId> = c.objects().collect();
        v.sort_by_key(|&x| grp.dim(x));
        v
    };
    if by_dim.iter().enumerate().any(|(i, &x)| grp.dim(x) != i) {
        return Err(InstanceError::Invalid(
            "direct sum needs exactly one fiber of each dimension 0..=D".into(),
        ));
    }
    let top = by_dim.len() - 1;
    let sum = |a: ObjId, b: ObjId| {
        let d = grp.dim(a) + grp.dim(b);
        (d <= top).then(|| by_dim[d])
    };
    let tensor_mor = |f: MorId, g: MorId| {
        let (x, y) = (sum(c.dom(f), c.dom(g))?, sum(c.cod(f), c.cod(g))?);
        grp.morphism(x, y, &grp.matrix(f).direct_sum(grp.matrix(g)))
    };
    let assoc = |a: ObjId, b: ObjId, d: ObjId| {
        let abd = sum(sum(a, b)?, d)?;
        Some(c.identity(abd))
    };
    let out = MonoidalStructure::from_fns(
        c.clone(),
        by_dim[0],
        sum,
        tensor_mor,
        assoc,
        |a| c.identity(a),
        |a| c.identity(a),
    )
    .map_err(|e| InstanceError::Invalid(e.to_string()))?;
    Ok(out)
}

/// The graded groupoid over `𝔽_p` up to dimension `max_dim`, with its direct sum.
pub fn direct_sum_family(
    p: u32,
    max_dim: usize,
    limits: &Limits,
) -> Result<(MatrixGroupoid, MonoidalStructure), InstanceError> {
    let grp = graded_matrix_groupoid(p, max_dim, limits)?;
    let m = direct_sum_monoidal(&grp)?;
    Ok((grp, m))
}

/// The direct sum over `𝔽_2` up to dimension 2, with the associator
/// component at `(d0, d0, d2)` replaced by the coordinate swap of `𝔽_2²`.
pub fn corrupt_associator() -> Result<MonoidalStructure, InstanceError> {
    let (grp, m) = direct_sum_family(2, 2, &Limits::default())?;
    let d0 = ObjId(0);
    let d2 = ObjId(2);
    let swap = grp
        .morphism(d2, d2, &super::matrix::Matrix::new(2, vec![0, 1, 1, 0]))
        .ok_or_else(|| InstanceError::Invalid("swap matrix missing".into()))?;
    Ok(m.with_assoc_component(d0, d0, d2, swap))
}
