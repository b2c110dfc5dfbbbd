//! Named instances addressable as `builtin:NAME`.

use fatcat_core::instances::{
    corrupt_associator, direct_sum_family, group_as_groupoid, group_product_monoidal,
    matrix_groupoid_with, CrossedModule, FiniteGroup, LatticeConnection, Limits,
};

use crate::document::SpecDocument;
use crate::error::LoadError;

/// `(name, description)` for every fixed builtin; `z<n>` and `s<n>` are also accepted.
pub const BUILTINS: &[(&str, &str)] = &[
    (
        "z<n>",
        "cyclic group of order n as a one-object category (1 ≤ n ≤ 64)",
    ),
    (
        "s<n>",
        "symmetric group on n letters as a one-object category (1 ≤ n ≤ 5)",
    ),
    (
        "gl2f2",
        "GL(2, F_2) between two fibers: 2 objects, 24 morphisms",
    ),
    ("gl2f2-1", "GL(2, F_2) on one fiber: 6 morphisms"),
    ("gl1f3", "GL(1, F_3) between two fibers: hom-sets of size 2"),
    ("z2-product", "Z_2 groupoid, tensor = group product, strict"),
    (
        "z3-unitor",
        "Z_3 groupoid, tensor = group product, both unitors = 1",
    ),
    (
        "direct-sum",
        "block direct sum on fibers of dimension 0..=2 over F_2",
    ),
    (
        "direct-sum-corrupt",
        "direct-sum with the associator at (d0, d0, d2) replaced by a swap",
    ),
    (
        "conjugation-s3",
        "crossed module H = G = S_3, tau = id, alpha = conjugation",
    ),
    (
        "trivial-s3",
        "crossed module G = H = S_3, tau = e, trivial action",
    ),
    (
        "trivial-z4",
        "crossed module G = S_3, H = Z_4, tau = e, trivial action",
    ),
    (
        "lattice-flat",
        "3×3 lattice over S_3 with every edge labelled e",
    ),
    (
        "lattice-z4",
        "3×3 lattice over Z_4 with fixed pseudo-random labels",
    ),
    (
        "lattice-s3",
        "3×3 lattice over S_3 with fixed pseudo-random labels",
    ),
];

pub fn builtin(name: &str, limits: &Limits) -> Result<SpecDocument, LoadError> {
    let parse_order = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
    };
    if let Some(n) = parse_order("z").filter(|n| (1..=64).contains(n)) {
        return Ok(SpecDocument::from_category(&group_as_groupoid(
            &FiniteGroup::cyclic(n),
        )));
    }
    if let Some(n) = parse_order("s").filter(|n| (1..=5).contains(n)) {
        return Ok(SpecDocument::from_category(&group_as_groupoid(
            &FiniteGroup::symmetric(n),
        )));
    }
    let s3 = || FiniteGroup::symmetric(3);
    Ok(match name {
        "gl2f2" => SpecDocument::from_category(matrix_groupoid_with(2, 2, 2, limits)?.category()),
        "gl2f2-1" => SpecDocument::from_category(matrix_groupoid_with(2, 2, 1, limits)?.category()),
        "gl1f3" => SpecDocument::from_category(matrix_groupoid_with(3, 1, 2, limits)?.category()),
        "z2-product" => {
            SpecDocument::from_monoidal(&group_product_monoidal(&FiniteGroup::cyclic(2), 0))
        }
        "z3-unitor" => {
            SpecDocument::from_monoidal(&group_product_monoidal(&FiniteGroup::cyclic(3), 1))
        }
        "direct-sum" => SpecDocument::from_monoidal(&direct_sum_family(2, 2, limits)?.1),
        "direct-sum-corrupt" => SpecDocument::from_monoidal(&corrupt_associator()?),
        "conjugation-s3" => SpecDocument::from_crossed_module(&CrossedModule::conjugation(&s3())),
        "trivial-s3" => SpecDocument::from_crossed_module(&CrossedModule::trivial(&s3(), &s3())),
        "trivial-z4" => SpecDocument::from_crossed_module(&CrossedModule::trivial(
            &s3(),
            &FiniteGroup::cyclic(4),
        )),
        "lattice-flat" => SpecDocument::from_lattice(&LatticeConnection::flat(s3(), 3, 3)),
        "lattice-z4" => SpecDocument::from_lattice(&scrambled_lattice(FiniteGroup::cyclic(4))?),
        "lattice-s3" => SpecDocument::from_lattice(&scrambled_lattice(s3())?),
        _ => return Err(LoadError::UnknownBuiltin(name.to_string())),
    })
}

/// Fixed, irregular edge labels on a 3×3 lattice.
pub fn scrambled_lattice(g: FiniteGroup) -> Result<LatticeConnection, LoadError> {
    let n = g.order();
    Ok(LatticeConnection::from_fn(
        g,
        3,
        3,
        |t, s| (5 * t + 3 * s * s + 1) % n,
        |t, s| (2 * t * t + 7 * s + t * s + 2) % n,
    )?)
}
