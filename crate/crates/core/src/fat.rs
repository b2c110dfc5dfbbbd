//! The fat category of a finite category.
//!
//! Its objects are the morphisms `f: x → y` of the base category. A morphism
//! from `(x₁, y₁, f₁)` to `(x₂, y₂, f₂)` is a cell `(g₁, g₂, h)` with
//! `g₁: x₁ → x₂`, `g₂: y₁ → y₂` and an arbitrary set map
//! `h: Mor(x₁, y₁) → Mor(x₂, y₂)` sending `f₁` to `f₂`.

use std::fmt;

use thiserror::Error;

use crate::category::{CategoryError, FiniteCategory, MorId, ObjId};
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FatError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("set map sends the source arrow to {got}, but the target arrow is {expected}")]
    DefiningCondition { expected: MorId, got: MorId },
    #[error("hom map table has {got} entries, hom-set has {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("hom map image {0} lies outside the target hom-set")]
    ImageOutsideHom(MorId),
    #[error("{0} is not in the source hom-set of the map")]
    NotInDomain(MorId),
    #[error("cells do not compose: {0}")]
    NotComposable(String),
    #[error("square does not commute: {left} ≠ {right}")]
    NonCommutingSquare { left: MorId, right: MorId },
    #[error("{0} is not invertible")]
    NotInvertible(MorId),
}

/// An object of the fat category: a base morphism together with its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FatObject {
    pub x: ObjId,
    pub y: ObjId,
    pub f: MorId,
}

impl FatObject {
    pub fn of(c: &FiniteCategory, f: MorId) -> Self {
        FatObject {
            x: c.dom(f),
            y: c.cod(f),
            f,
        }
    }

    pub fn hom(&self) -> (ObjId, ObjId) {
        (self.x, self.y)
    }
}

impl fmt::Display for FatObject {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "({}, {}, {})", self.x, self.y, self.f)
    }
}

/// Every object of the fat category, one per base morphism.
pub fn fat_objects(c: &FiniteCategory) -> Vec<FatObject> {
    c.morphisms().map(|f| FatObject::of(c, f)).collect()
}

/// A total set map `Mor(src) → Mor(dst)`, stored against the canonical hom-set order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomMap {
    src: (ObjId, ObjId),
    dst: (ObjId, ObjId),
    table: Vec<MorId>,
}

impl HomMap {
    /// `table[i]` is the image of the `i`-th element of `hom_set(src)`.
    pub fn new(
        c: &FiniteCategory,
        src: (ObjId, ObjId),
        dst: (ObjId, ObjId),
        table: Vec<MorId>,
    ) -> Result<Self, FatError> {
        let expected = c.hom_set(src.0, src.1).len();
        if table.len() != expected {
            return Err(FatError::TableLength {
                expected,
                got: table.len(),
            });
        }
        for &m in &table {
            if m.0 >= c.morphism_count() {
                return Err(CategoryError::DanglingMorphism(m).into());
            }
            if (c.dom(m), c.cod(m)) != dst {
                return Err(FatError::ImageOutsideHom(m));
            }
        }
        Ok(HomMap { src, dst, table })
    }

    pub fn from_fn<F>(
        c: &FiniteCategory,
        src: (ObjId, ObjId),
        dst: (ObjId, ObjId),
        mut image: F,
    ) -> Result<Self, FatError>
    where
        F: FnMut(MorId) -> Result<MorId, FatError>,
    {
        let table = c
            .hom_set(src.0, src.1)
            .iter()
            .map(|&phi| image(phi))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(c, src, dst, table)
    }

    pub fn identity(c: &FiniteCategory, x: ObjId, y: ObjId) -> Self {
        HomMap {
            src: (x, y),
            dst: (x, y),
            table: c.hom_set(x, y).to_vec(),
        }
    }

    pub fn src(&self) -> (ObjId, ObjId) {
        self.src
    }

    pub fn dst(&self) -> (ObjId, ObjId) {
        self.dst
    }

    pub fn table(&self) -> &[MorId] {
        &self.table
    }

    pub fn apply(&self, c: &FiniteCategory, f: MorId) -> Result<MorId, FatError> {
        if (c.dom(f), c.cod(f)) != self.src {
            return Err(FatError::NotInDomain(f));
        }
        Ok(self.table[c.hom_position(f)])
    }

    /// `self ∘ first`.
    pub fn after(&self, c: &FiniteCategory, first: &HomMap) -> Result<HomMap, FatError> {
        if first.dst != self.src {
            return Err(FatError::NotComposable(
                "target hom-set of the first map is not the source of the second".into(),
            ));
        }
        let table = first
            .table
            .iter()
            .map(|&m| self.table[c.hom_position(m)])
            .collect();
        Ok(HomMap {
            src: first.src,
            dst: self.dst,
            table,
        })
    }

    pub fn is_identity(&self, c: &FiniteCategory) -> bool {
        self.src == self.dst && self.table == c.hom_set(self.src.0, self.src.1)
    }

    /// True when the table is a bijection onto the target hom-set.
    pub fn is_bijection(&self, c: &FiniteCategory) -> bool {
        let target = c.hom_set(self.dst.0, self.dst.1);
        if target.len() != self.table.len() {
            return false;
        }
        let mut hit = vec![false; target.len()];
        for &m in &self.table {
            let p = c.hom_position(m);
            if hit[p] {
                return false;
            }
            hit[p] = true;
        }
        true
    }

    pub fn describe(&self, c: &FiniteCategory) -> String {
        let src = c.hom_set(self.src.0, self.src.1);
        let pairs: Vec<String> = src
            .iter()
            .zip(&self.table)
            .map(|(&a, &b)| format!("{}↦{}", c.name(a), c.name(b)))
            .collect();
        format!("{{{}}}", pairs.join(", "))
    }
}

/// A cell of the fat category. Equality is extensional: endpoints, both
/// verticals and the whole `h` table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FatMorphism {
    src: FatObject,
    dst: FatObject,
    g1: MorId,
    g2: MorId,
    h: HomMap,
}

impl FatMorphism {
    /// Validates and assembles a cell from `src` to `dst`.
    pub fn new(
        c: &FiniteCategory,
        src: FatObject,
        dst: FatObject,
        g1: MorId,
        g2: MorId,
        h: HomMap,
    ) -> Result<Self, FatError> {
        for obj in [src, dst] {
            if obj.f.0 >= c.morphism_count() {
                return Err(CategoryError::DanglingMorphism(obj.f).into());
            }
            if FatObject::of(c, obj.f) != obj {
                return Err(FatError::EndpointMismatch(format!(
                    "fat object {obj} does not match its arrow"
                )));
            }
        }
        for g in [g1, g2] {
            if g.0 >= c.morphism_count() {
                return Err(CategoryError::DanglingMorphism(g).into());
            }
        }
        if c.dom(g1) != src.x || c.cod(g1) != dst.x {
            return Err(FatError::EndpointMismatch(format!(
                "left vertical {} does not run {} → {}",
                c.name(g1),
                c.object_name(src.x),
                c.object_name(dst.x)
            )));
        }
        if c.dom(g2) != src.y || c.cod(g2) != dst.y {
            return Err(FatError::EndpointMismatch(format!(
                "right vertical {} does not run {} → {}",
                c.name(g2),
                c.object_name(src.y),
                c.object_name(dst.y)
            )));
        }
        if h.src != src.hom() || h.dst != dst.hom() {
            return Err(FatError::EndpointMismatch(
                "set map hom-sets do not match the fat objects".into(),
            ));
        }
        let got = h.apply(c, src.f)?;
        if got != dst.f {
            return Err(FatError::DefiningCondition {
                expected: dst.f,
                got,
            });
        }
        Ok(FatMorphism {
            src,
            dst,
            g1,
            g2,
            h,
        })
    }

    /// The identity cell `(id, id, identity table)` on `obj`.
    pub fn identity(c: &FiniteCategory, obj: FatObject) -> Self {
        FatMorphism {
            src: obj,
            dst: obj,
            g1: c.identity(obj.x),
            g2: c.identity(obj.y),
            h: HomMap::identity(c, obj.x, obj.y),
        }
    }

    pub fn src(&self) -> FatObject {
        self.src
    }

    pub fn dst(&self) -> FatObject {
        self.dst
    }

    pub fn g1(&self) -> MorId {
        self.g1
    }

    pub fn g2(&self) -> MorId {
        self.g2
    }

    pub fn h(&self) -> &HomMap {
        &self.h
    }

    pub fn is_identity(&self, c: &FiniteCategory) -> bool {
        *self == FatMorphism::identity(c, self.src)
    }

    pub fn describe(&self, c: &FiniteCategory) -> String {
        format!(
            "{} ⇒ {} via g1={}, g2={}, h={}",
            c.name(self.src.f),
            c.name(self.dst.f),
            c.name(self.g1),
            c.name(self.g2),
            self.h.describe(c)
        )
    }
}

/// `v ∘_V u`: `v` drawn below `u`.
pub fn vertical_compose(
    c: &FiniteCategory,
    v: &FatMorphism,
    u: &FatMorphism,
) -> Result<FatMorphism, FatError> {
    if u.dst != v.src {
        return Err(FatError::NotComposable(format!(
            "lower cell starts at {}, upper cell ends at {}",
            v.src, u.dst
        )));
    }
    Ok(FatMorphism {
        src: u.src,
        dst: v.dst,
        g1: c.compose(v.g1, u.g1)?,
        g2: c.compose(v.g2, u.g2)?,
        h: v.h.after(c, &u.h)?,
    })
}

/// The cell induced by a commuting square `g₂∘f₁ = f₂∘g₁` with `g₁` invertible:
/// `h(φ) = g₂ ∘ φ ∘ g₁⁻¹`.
pub fn induced_from_square(
    c: &FiniteCategory,
    f1: MorId,
    f2: MorId,
    g1: MorId,
    g2: MorId,
) -> Result<FatMorphism, FatError> {
    let left = c.compose(g2, f1)?;
    let right = c.compose(f2, g1)?;
    if left != right {
        return Err(FatError::NonCommutingSquare { left, right });
    }
    let g1_inv = c.inverse(g1).ok_or(FatError::NotInvertible(g1))?;
    let src = FatObject::of(c, f1);
    let dst = FatObject::of(c, f2);
    let h = HomMap::from_fn(c, src.hom(), dst.hom(), |phi| {
        Ok(c.compose(g2, c.compose(phi, g1_inv)?)?)
    })?;
    FatMorphism::new(c, src, dst, g1, g2, h)
}

/// A commuting square whose left vertical is invertible, as raw arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutingSquare {
    pub f1: MorId,
    pub f2: MorId,
    pub g1: MorId,
    pub g2: MorId,
}

/// Every commuting square out of `f1` with invertible left vertical.
///
/// The bottom arrow is forced: `f₂ = g₂ ∘ f₁ ∘ g₁⁻¹`.
pub fn commuting_squares_from(c: &FiniteCategory, f1: MorId) -> Vec<CommutingSquare> {
    let (x1, y1) = (c.dom(f1), c.cod(f1));
    let mut out = Vec::new();
    for x2 in c.objects() {
        for &g1 in c.hom_set(x1, x2) {
            let Some(g1_inv) = c.inverse(g1) else {
                continue;
            };
            for y2 in c.objects() {
                for &g2 in c.hom_set(y1, y2) {
                    let f2 = c
                        .compose_path(&[g1_inv, f1, g2])
                        .expect("valid category composes typed paths");
                    out.push(CommutingSquare { f1, f2, g1, g2 });
                }
            }
        }
    }
    out
}

/// Checks that the induced cells of two vertically pasted squares compose to
/// the cell induced by the pasted rectangle, for every such pair.
pub fn verify_lemma1(c: &FiniteCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    let squares: Vec<Vec<CommutingSquare>> = c
        .morphisms()
        .map(|f| commuting_squares_from(c, f))
        .collect();
    for upper_list in &squares {
        for upper in upper_list {
            let u = match induced_from_square(c, upper.f1, upper.f2, upper.g1, upper.g2) {
                Ok(u) => u,
                Err(e) => {
                    report.check(
                        "induced-cell",
                        false,
                        || square_witness(c, upper),
                        || e.to_string(),
                    );
                    continue;
                }
            };
            for lower in &squares[upper.f2.0] {
                let v = induced_from_square(c, lower.f1, lower.f2, lower.g1, lower.g2);
                let pasted = c
                    .compose(lower.g1, upper.g1)
                    .and_then(|g1| c.compose(lower.g2, upper.g2).map(|g2| (g1, g2)));
                let outcome = match (v, pasted) {
                    (Ok(v), Ok((g1, g2))) => {
                        let composite = vertical_compose(c, &v, &u);
                        let direct = induced_from_square(c, upper.f1, lower.f2, g1, g2);
                        match (composite, direct) {
                            (Ok(a), Ok(b)) if a == b => Ok(()),
                            (Ok(a), Ok(b)) => Err(format!(
                                "composite {} vs induced {}",
                                a.describe(c),
                                b.describe(c)
                            )),
                            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                        }
                    }
                    (Err(e), _) => Err(e.to_string()),
                    (_, Err(e)) => Err(e.to_string()),
                };
                report.check(
                    "induced-functoriality",
                    outcome.is_ok(),
                    || {
                        let mut w = square_witness(c, upper);
                        w.extend(square_witness(c, lower));
                        w
                    },
                    || outcome.clone().unwrap_err(),
                );
            }
        }
    }
    report
}

fn square_witness(c: &FiniteCategory, s: &CommutingSquare) -> Vec<String> {
    vec![c.name(s.f1), c.name(s.f2), c.name(s.g1), c.name(s.g2)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::group::FiniteGroup;
    use crate::instances::group_as_groupoid;

    fn z3() -> FiniteCategory {
        group_as_groupoid(&FiniteGroup::cyclic(3))
    }

    #[test]
    fn identity_cell_is_accepted() {
        let c = z3();
        let obj = FatObject::of(&c, MorId(1));
        let cell = FatMorphism::new(
            &c,
            obj,
            obj,
            MorId(0),
            MorId(0),
            HomMap::identity(&c, obj.x, obj.y),
        )
        .unwrap();
        assert!(cell.is_identity(&c));
    }

    #[test]
    fn defining_condition_is_enforced() {
        let c = z3();
        let (src, dst) = (FatObject::of(&c, MorId(1)), FatObject::of(&c, MorId(2)));
        // identity table sends 1 to 1, not to 2
        let h = HomMap::identity(&c, src.x, src.y);
        let err = FatMorphism::new(&c, src, dst, MorId(0), MorId(0), h).unwrap_err();
        assert_eq!(
            err,
            FatError::DefiningCondition {
                expected: MorId(2),
                got: MorId(1)
            }
        );
    }

    #[test]
    fn endpoint_errors_are_distinct_from_defining_condition() {
        let c = crate::instances::matrix_groupoid(3, 1, 2)
            .unwrap()
            .category()
            .clone();
        let f = c.hom_set(ObjId(0), ObjId(1))[0];
        let obj = FatObject::of(&c, f);
        let wrong = c.hom_set(ObjId(1), ObjId(1))[0];
        let err = FatMorphism::new(
            &c,
            obj,
            obj,
            wrong,
            c.identity(ObjId(1)),
            HomMap::identity(&c, obj.x, obj.y),
        )
        .unwrap_err();
        assert!(matches!(err, FatError::EndpointMismatch(_)));
    }

    #[test]
    fn vertical_identity_is_neutral() {
        let c = z3();
        let u = induced_from_square(&c, MorId(1), MorId(1), MorId(2), MorId(2)).unwrap();
        let id = FatMorphism::identity(&c, u.dst());
        assert_eq!(vertical_compose(&c, &id, &u).unwrap(), u);
        let id_top = FatMorphism::identity(&c, u.src());
        assert_eq!(vertical_compose(&c, &u, &id_top).unwrap(), u);
    }

    #[test]
    fn vertical_h_table_is_pointwise_composition() {
        let c = z3();
        // Hand-written set maps on the 3-element hom-set: constant and swap-like maps.
        let src = FatObject::of(&c, MorId(0));
        let mid = FatObject::of(&c, MorId(1));
        let dst = FatObject::of(&c, MorId(2));
        let u = FatMorphism::new(
            &c,
            src,
            mid,
            MorId(1),
            MorId(1),
            HomMap::new(&c, src.hom(), mid.hom(), vec![MorId(1), MorId(1), MorId(0)]).unwrap(),
        )
        .unwrap();
        let v = FatMorphism::new(
            &c,
            mid,
            dst,
            MorId(2),
            MorId(0),
            HomMap::new(&c, mid.hom(), dst.hom(), vec![MorId(0), MorId(2), MorId(2)]).unwrap(),
        )
        .unwrap();
        let vu = vertical_compose(&c, &v, &u).unwrap();
        // oracle: evaluate v.h(u.h(φ)) elementwise
        for &phi in c.hom_set(src.x, src.y) {
            let expected = v.h().apply(&c, u.h().apply(&c, phi).unwrap()).unwrap();
            assert_eq!(vu.h().apply(&c, phi).unwrap(), expected);
        }
        assert_eq!(vu.g1(), MorId(0)); // 2 + 1 mod 3
        assert_eq!(vu.g2(), MorId(1));
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let c = z3();
        let err = induced_from_square(&c, MorId(1), MorId(1), MorId(0), MorId(1)).unwrap_err();
        assert!(matches!(err, FatError::NonCommutingSquare { .. }));
    }

    #[test]
    fn induced_square_with_identities_is_identity_cell() {
        let c = z3();
        for f in c.morphisms() {
            let u = induced_from_square(&c, f, f, MorId(0), MorId(0)).unwrap();
            assert!(u.is_identity(&c));
        }
    }

    #[test]
    fn induced_table_matches_conjugation_oracle_in_s3() {
        let g = FiniteGroup::symmetric(3);
        let c = group_as_groupoid(&g);
        for sq in c.morphisms().flat_map(|f| commuting_squares_from(&c, f)) {
            let u = induced_from_square(&c, sq.f1, sq.f2, sq.g1, sq.g2).unwrap();
            assert_eq!(u.h().apply(&c, sq.f1).unwrap(), sq.f2);
            for phi in 0..6 {
                // group-level oracle: g2 · φ · g1⁻¹
                let expected = g.mul(g.mul(sq.g2.0, phi), g.inverse(sq.g1.0));
                assert_eq!(u.h().apply(&c, MorId(phi)).unwrap(), MorId(expected));
            }
        }
    }

    #[test]
    fn induced_functoriality_on_z2_and_s3() {
        let z2 = group_as_groupoid(&FiniteGroup::cyclic(2));
        let r = verify_lemma1(&z2);
        assert!(r.is_ok());
        let s3 = group_as_groupoid(&FiniteGroup::symmetric(3));
        let r = verify_lemma1(&s3);
        assert!(r.is_ok(), "{:?}", &r.violations()[..1]);
        // Oracle: an upper square is (f1, g1, g2), a lower one adds (g1', g2').
        assert_eq!(r.checks_for("induced-functoriality"), 6u64.pow(5));
    }
}
