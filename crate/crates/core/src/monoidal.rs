//! Monoidal structure on a finite category and the structure it induces on
//! objects of the fat category.
//!
//! Tables may be partial: a *bounded* structure leaves `a ⊗ b` undefined
//! outside a size bound (the direct sum of matrix groupoids truncated at a
//! maximum dimension is the motivating case). Every law is checked on all
//! tuples for which each of its terms is defined; a structure whose tables are
//! all total is an ordinary monoidal category.

use thiserror::Error;

use crate::category::{CategoryError, FiniteCategory, MorId, ObjId};
use crate::fat::{induced_from_square, vertical_compose, FatError, FatMorphism, FatObject};
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidalError {
    #[error("malformed monoidal tables: {0}")]
    Structure(String),
    #[error("tensor product undefined: {0}")]
    Undefined(String),
    #[error("structure square does not commute: {0}")]
    Naturality(String),
    #[error(transparent)]
    Fat(#[from] FatError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalStructure {
    base: FiniteCategory,
    tensor_obj: Vec<Option<ObjId>>,
    tensor_mor: Vec<Option<MorId>>,
    unit: ObjId,
    assoc: Vec<Option<MorId>>,
    lunit: Vec<MorId>,
    runit: Vec<MorId>,
}

impl MonoidalStructure {
    /// Assembles a structure from functions; `None` marks an undefined entry.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        base: FiniteCategory,
        unit: ObjId,
        tensor_obj: impl Fn(ObjId, ObjId) -> Option<ObjId>,
        tensor_mor: impl Fn(MorId, MorId) -> Option<MorId>,
        assoc: impl Fn(ObjId, ObjId, ObjId) -> Option<MorId>,
        lunit: impl Fn(ObjId) -> MorId,
        runit: impl Fn(ObjId) -> MorId,
    ) -> Result<Self, MonoidalError> {
        let objs: Vec<ObjId> = base.objects().collect();
        let mors: Vec<MorId> = base.morphisms().collect();
        let tobj = objs
            .iter()
            .flat_map(|&a| objs.iter().map(move |&b| (a, b)))
            .map(|(a, b)| tensor_obj(a, b))
            .collect();
        let tmor = mors
            .iter()
            .flat_map(|&f| mors.iter().map(move |&g| (f, g)))
            .map(|(f, g)| tensor_mor(f, g))
            .collect();
        let mut alpha = Vec::with_capacity(objs.len().pow(3));
        for &a in &objs {
            for &b in &objs {
                for &c in &objs {
                    alpha.push(assoc(a, b, c));
                }
            }
        }
        let l = objs.iter().map(|&a| lunit(a)).collect();
        let r = objs.iter().map(|&a| runit(a)).collect();
        Self::new(base, tobj, tmor, unit, alpha, l, r)
    }

    /// Raw tables: `tensor_obj[a·N + b]`, `tensor_mor[f·M + g]`, `assoc[(a·N + b)·N + c]`.
    pub fn new(
        base: FiniteCategory,
        tensor_obj: Vec<Option<ObjId>>,
        tensor_mor: Vec<Option<MorId>>,
        unit: ObjId,
        assoc: Vec<Option<MorId>>,
        lunit: Vec<MorId>,
        runit: Vec<MorId>,
    ) -> Result<Self, MonoidalError> {
        let (n, m) = (base.object_count(), base.morphism_count());
        let shape = |what: &str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(MonoidalError::Structure(format!(
                    "{what} has {got} entries, expected {want}"
                )))
            }
        };
        shape("tensor_obj", tensor_obj.len(), n * n)?;
        shape("tensor_mor", tensor_mor.len(), m * m)?;
        shape("assoc", assoc.len(), n * n * n)?;
        shape("lunit", lunit.len(), n)?;
        shape("runit", runit.len(), n)?;
        if unit.0 >= n {
            return Err(MonoidalError::Structure(format!(
                "unit {unit} is not an object"
            )));
        }
        if let Some(o) = tensor_obj.iter().flatten().find(|o| o.0 >= n) {
            return Err(MonoidalError::Structure(format!(
                "tensor object {o} out of range"
            )));
        }
        let bad_mor = tensor_mor
            .iter()
            .flatten()
            .chain(assoc.iter().flatten())
            .chain(lunit.iter())
            .chain(runit.iter())
            .find(|f| f.0 >= m);
        if let Some(f) = bad_mor {
            return Err(MonoidalError::Structure(format!(
                "morphism {f} out of range"
            )));
        }
        Ok(MonoidalStructure {
            base,
            tensor_obj,
            tensor_mor,
            unit,
            assoc,
            lunit,
            runit,
        })
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> Option<ObjId> {
        self.tensor_obj[a.0 * self.base.object_count() + b.0]
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.tensor_mor[f.0 * self.base.morphism_count() + g.0]
    }

    pub fn assoc(&self, a: ObjId, b: ObjId, c: ObjId) -> Option<MorId> {
        let n = self.base.object_count();
        self.assoc[(a.0 * n + b.0) * n + c.0]
    }

    pub fn lunit(&self, a: ObjId) -> MorId {
        self.lunit[a.0]
    }

    pub fn runit(&self, a: ObjId) -> MorId {
        self.runit[a.0]
    }

    pub fn is_total(&self) -> bool {
        self.tensor_obj.iter().all(Option::is_some)
            && self.tensor_mor.iter().all(Option::is_some)
            && self.assoc.iter().all(Option::is_some)
    }

    /// A copy with the associator component at `(a, b, c)` replaced.
    pub fn with_assoc_component(&self, a: ObjId, b: ObjId, c: ObjId, component: MorId) -> Self {
        let n = self.base.object_count();
        let mut out = self.clone();
        out.assoc[(a.0 * n + b.0) * n + c.0] = Some(component);
        out
    }

    /// Exhaustively checks bifunctoriality, naturality and invertibility of
    /// the structure maps, the pentagon and the triangle.
    ///
    /// Checking proceeds in stages: base category axioms, then table typing,
    /// then the equational laws. A failing stage stops the run.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.base.validate();
        if !report.is_ok() {
            return report;
        }
        self.check_typing(&mut report);
        if !report.is_ok() {
            return report;
        }
        self.check_laws(&mut report);
        report
    }

    fn oname(&self, a: ObjId) -> String {
        self.base.object_name(a).to_string()
    }

    fn check_typing(&self, report: &mut ValidationReport) {
        let c = &self.base;
        let t = |a, b| self.tensor_obj(a, b);
        for f in c.morphisms() {
            for g in c.morphisms() {
                let src = t(c.dom(f), c.dom(g));
                let dst = t(c.cod(f), c.cod(g));
                let fg = self.tensor_mor(f, g);
                report.check(
                    "tensor-definedness",
                    fg.is_some() == (src.is_some() && dst.is_some()),
                    || vec![c.name(f), c.name(g)],
                    || "f⊗g defined iff both endpoint tensors are".to_string(),
                );
                if let (Some(fg), Some(src), Some(dst)) = (fg, src, dst) {
                    report.check(
                        "tensor-endpoints",
                        c.dom(fg) == src && c.cod(fg) == dst,
                        || vec![c.name(f), c.name(g)],
                        || format!("f⊗g = {} has the wrong endpoints", c.name(fg)),
                    );
                }
            }
        }
        for a in c.objects() {
            let (ua, au) = (t(self.unit, a), t(a, self.unit));
            report.check(
                "unit-definedness",
                ua.is_some() && au.is_some(),
                || vec![self.oname(a)],
                || "1⊗a or a⊗1 undefined".to_string(),
            );
            if let Some(ua) = ua {
                let l = self.lunit(a);
                report.check(
                    "lunit-typing",
                    c.dom(l) == ua && c.cod(l) == a,
                    || vec![self.oname(a)],
                    || format!("l_a = {} is not 1⊗a → a", c.name(l)),
                );
            }
            if let Some(au) = au {
                let r = self.runit(a);
                report.check(
                    "runit-typing",
                    c.dom(r) == au && c.cod(r) == a,
                    || vec![self.oname(a)],
                    || format!("r_a = {} is not a⊗1 → a", c.name(r)),
                );
            }
        }
        for a in c.objects() {
            for b in c.objects() {
                for d in c.objects() {
                    let left = t(a, b).and_then(|ab| t(ab, d));
                    let right = t(b, d).and_then(|bd| t(a, bd));
                    let alpha = self.assoc(a, b, d);
                    let w = || vec![self.oname(a), self.oname(b), self.oname(d)];
                    report.check(
                        "assoc-definedness",
                        alpha.is_some() == (left.is_some() && right.is_some()),
                        w,
                        || "α defined iff both bracketings are".to_string(),
                    );
                    if let (Some(al), Some(l), Some(r)) = (alpha, left, right) {
                        report.check("assoc-typing", c.dom(al) == l && c.cod(al) == r, w, || {
                            format!("α = {} is not (ab)c → a(bc)", c.name(al))
                        });
                    }
                }
            }
        }
    }

    fn check_laws(&self, report: &mut ValidationReport) {
        let c = &self.base;
        let t = |a, b| self.tensor_obj(a, b);
        let tm = |f, g| self.tensor_mor(f, g);
        let comp = |path: &[MorId]| c.compose_path(path).expect("typed tables compose");
        let id = |a| c.identity(a);

        // bifunctoriality
        for a in c.objects() {
            for b in c.objects() {
                if let Some(ab) = t(a, b) {
                    let lhs = tm(id(a), id(b));
                    report.check(
                        "bifunctor-identity",
                        lhs == Some(id(ab)),
                        || vec![self.oname(a), self.oname(b)],
                        || format!("id⊗id = {:?}", lhs.map(|m| c.name(m))),
                    );
                }
            }
        }
        for f in c.morphisms() {
            for f2 in c
                .objects()
                .flat_map(|z| c.hom_set(c.cod(f), z).iter().copied())
                .collect::<Vec<_>>()
            {
                let ff = comp(&[f, f2]);
                for g in c.morphisms() {
                    let Some(fg) = tm(f, g) else { continue };
                    for z in c.objects() {
                        for &g2 in c.hom_set(c.cod(g), z) {
                            let (Some(fg2), Some(whole)) = (tm(f2, g2), tm(ff, comp(&[g, g2])))
                            else {
                                continue;
                            };
                            let lhs = comp(&[fg, fg2]);
                            report.check(
                                "bifunctor-composition",
                                lhs == whole,
                                || vec![c.name(f2), c.name(f), c.name(g2), c.name(g)],
                                || {
                                    format!(
                                        "(f'⊗g')(f⊗g) = {}, f'f⊗g'g = {}",
                                        c.name(lhs),
                                        c.name(whole)
                                    )
                                },
                            );
                        }
                    }
                }
            }
        }

        // invertibility
        for a in c.objects() {
            for (law, m) in [("lunit-iso", self.lunit(a)), ("runit-iso", self.runit(a))] {
                report.check(
                    law,
                    c.inverse(m).is_some(),
                    || vec![self.oname(a)],
                    || format!("{} is not invertible", c.name(m)),
                );
            }
            for b in c.objects() {
                for d in c.objects() {
                    if let Some(al) = self.assoc(a, b, d) {
                        report.check(
                            "assoc-iso",
                            c.inverse(al).is_some(),
                            || vec![self.oname(a), self.oname(b), self.oname(d)],
                            || format!("{} is not invertible", c.name(al)),
                        );
                    }
                }
            }
        }

        // naturality
        for f in c.morphisms() {
            let (x, y) = (c.dom(f), c.cod(f));
            if let (Some(uf), Some(fu)) = (tm(id(self.unit), f), tm(f, id(self.unit))) {
                let (lhs, rhs) = (comp(&[uf, self.lunit(y)]), comp(&[self.lunit(x), f]));
                report.check(
                    "lunit-naturality",
                    lhs == rhs,
                    || vec![self.oname(x), self.oname(y), c.name(f)],
                    || format!("l_y(1⊗f) = {}, f l_x = {}", c.name(lhs), c.name(rhs)),
                );
                let (lhs, rhs) = (comp(&[fu, self.runit(y)]), comp(&[self.runit(x), f]));
                report.check(
                    "runit-naturality",
                    lhs == rhs,
                    || vec![self.oname(x), self.oname(y), c.name(f)],
                    || format!("r_y(f⊗1) = {}, f r_x = {}", c.name(lhs), c.name(rhs)),
                );
            }
        }
        for f1 in c.morphisms() {
            for f2 in c.morphisms() {
                let Some(f12) = tm(f1, f2) else { continue };
                for f3 in c.morphisms() {
                    let (Some(left), Some(f23)) = (tm(f12, f3), tm(f2, f3)) else {
                        continue;
                    };
                    let Some(right) = tm(f1, f23) else { continue };
                    let (x1, x2, x3) = (c.dom(f1), c.dom(f2), c.dom(f3));
                    let (y1, y2, y3) = (c.cod(f1), c.cod(f2), c.cod(f3));
                    let (Some(ax), Some(ay)) = (self.assoc(x1, x2, x3), self.assoc(y1, y2, y3))
                    else {
                        continue;
                    };
                    let (lhs, rhs) = (comp(&[left, ay]), comp(&[ax, right]));
                    report.check(
                        "assoc-naturality",
                        lhs == rhs,
                        || {
                            vec![
                                self.oname(x1),
                                self.oname(x2),
                                self.oname(x3),
                                c.name(f1),
                                c.name(f2),
                                c.name(f3),
                            ]
                        },
                        || {
                            format!(
                                "α_y((f1⊗f2)⊗f3) = {}, (f1⊗(f2⊗f3))α_x = {}",
                                c.name(lhs),
                                c.name(rhs)
                            )
                        },
                    );
                }
            }
        }

        // pentagon
        for a in c.objects() {
            for b in c.objects() {
                for d in c.objects() {
                    for e in c.objects() {
                        let Some(p) = self.pentagon_sides(a, b, d, e) else {
                            continue;
                        };
                        report.check(
                            "pentagon",
                            p.0 == p.1,
                            || vec![self.oname(a), self.oname(b), self.oname(d), self.oname(e)],
                            || {
                                format!(
                                    "three-step side {}, two-step side {}",
                                    c.name(p.0),
                                    c.name(p.1)
                                )
                            },
                        );
                    }
                }
            }
        }

        // triangle
        for a in c.objects() {
            for b in c.objects() {
                let u = self.unit;
                let (Some(al), Some(au)) = (self.assoc(a, u, b), t(a, u)) else {
                    continue;
                };
                let (Some(ub), Some(_)) = (t(u, b), t(a, b)) else {
                    continue;
                };
                let (Some(il), Some(ri)) = (tm(id(a), self.lunit(b)), tm(self.runit(a), id(b)))
                else {
                    continue;
                };
                let _ = (au, ub);
                let lhs = comp(&[al, il]);
                report.check(
                    "triangle",
                    lhs == ri,
                    || vec![self.oname(a), self.oname(b)],
                    || format!("(1⊗l)α = {}, r⊗1 = {}", c.name(lhs), c.name(ri)),
                );
            }
        }
    }

    /// Both sides of the pentagon at `(a, b, c, d)`, when every term is defined.
    fn pentagon_sides(&self, a: ObjId, b: ObjId, c: ObjId, d: ObjId) -> Option<(MorId, MorId)> {
        let cat = &self.base;
        let t = |x, y| self.tensor_obj(x, y);
        let (ab, bc, cd) = (t(a, b)?, t(b, c)?, t(c, d)?);
        t(t(ab, c)?, d)?;
        let alpha_abc_d = self.tensor_mor(self.assoc(a, b, c)?, cat.identity(d))?;
        let alpha_a_bc_d = self.assoc(a, bc, d)?;
        let a_alpha_bcd = self.tensor_mor(cat.identity(a), self.assoc(b, c, d)?)?;
        let alpha_ab_c_d = self.assoc(ab, c, d)?;
        let alpha_a_b_cd = self.assoc(a, b, cd)?;
        let long = cat
            .compose_path(&[alpha_abc_d, alpha_a_bc_d, a_alpha_bcd])
            .ok()?;
        let short = cat.compose_path(&[alpha_ab_c_d, alpha_a_b_cd]).ok()?;
        Some((long, short))
    }
}

/// The unit of the fat category: the identity arrow on the unit object.
pub fn fat_unit(m: &MonoidalStructure) -> FatObject {
    FatObject::of(m.base(), m.base().identity(m.unit()))
}

/// `(x₁, y₁, f₁) ⊗ (x₂, y₂, f₂) = (x₁⊗x₂, y₁⊗y₂, f₁⊗f₂)`.
pub fn tensor_fat_objects(
    m: &MonoidalStructure,
    a: FatObject,
    b: FatObject,
) -> Result<FatObject, MonoidalError> {
    let f = m.tensor_mor(a.f, b.f).ok_or_else(|| {
        MonoidalError::Undefined(format!("{} ⊗ {}", m.base().name(a.f), m.base().name(b.f)))
    })?;
    Ok(FatObject::of(m.base(), f))
}

fn tensor_mor_or_err(m: &MonoidalStructure, f: MorId, g: MorId) -> Result<MorId, MonoidalError> {
    m.tensor_mor(f, g).ok_or_else(|| {
        MonoidalError::Undefined(format!("{} ⊗ {}", m.base().name(f), m.base().name(g)))
    })
}

fn assoc_or_err(
    m: &MonoidalStructure,
    a: ObjId,
    b: ObjId,
    c: ObjId,
) -> Result<MorId, MonoidalError> {
    m.assoc(a, b, c).ok_or_else(|| {
        let n = |o| m.base().object_name(o).to_string();
        MonoidalError::Undefined(format!("α at ({}, {}, {})", n(a), n(b), n(c)))
    })
}

/// The cell induced by a commuting square with top `top`, bottom `bottom`
/// and verticals `g1`, `g2`.
pub fn structure_cell(
    m: &MonoidalStructure,
    top: MorId,
    bottom: MorId,
    g1: MorId,
    g2: MorId,
) -> Result<FatMorphism, MonoidalError> {
    let c = m.base();
    induced_from_square(c, top, bottom, g1, g2).map_err(|e| match e {
        FatError::NonCommutingSquare { .. } | FatError::NotInvertible(_) => {
            MonoidalError::Naturality(format!(
                "square {} ⇒ {} with verticals {}, {}: {e}",
                c.name(top),
                c.name(bottom),
                c.name(g1),
                c.name(g2)
            ))
        }
        other => other.into(),
    })
}

/// `1_𝔽 ⊗ X → X`, induced by the unitor naturality square; `h(φ) = l_y φ l_x⁻¹`.
pub fn fat_left_unitor(m: &MonoidalStructure, x: FatObject) -> Result<FatMorphism, MonoidalError> {
    let src = tensor_fat_objects(m, fat_unit(m), x)?;
    structure_cell(m, src.f, x.f, m.lunit(x.x), m.lunit(x.y))
}

/// `X ⊗ 1_𝔽 → X`; `h(φ) = r_y φ r_x⁻¹`.
pub fn fat_right_unitor(m: &MonoidalStructure, x: FatObject) -> Result<FatMorphism, MonoidalError> {
    let src = tensor_fat_objects(m, x, fat_unit(m))?;
    structure_cell(m, src.f, x.f, m.runit(x.x), m.runit(x.y))
}

/// `(X₁ ⊗ X₂) ⊗ X₃ → X₁ ⊗ (X₂ ⊗ X₃)`, induced by the associator naturality square.
pub fn fat_associator(
    m: &MonoidalStructure,
    x1: FatObject,
    x2: FatObject,
    x3: FatObject,
) -> Result<FatMorphism, MonoidalError> {
    let src = tensor_fat_objects(m, tensor_fat_objects(m, x1, x2)?, x3)?;
    let dst = tensor_fat_objects(m, x1, tensor_fat_objects(m, x2, x3)?)?;
    let ax = assoc_or_err(m, x1.x, x2.x, x3.x)?;
    let ay = assoc_or_err(m, x1.y, x2.y, x3.y)?;
    structure_cell(m, src.f, dst.f, ax, ay)
}

/// Checks the triangle and pentagon as equalities of cells in the fat
/// category, for every pair and quadruple of fat objects on which the tensor
/// is defined.
///
/// The whiskered cells `r ⊗ 1`, `1 ⊗ l`, `α ⊗ 1` and `1 ⊗ α` are the cells
/// induced by their base squares; each such square is checked to commute
/// before it is used. Every fat associator built along the way is checked to
/// have a bijective `h`.
pub fn verify_fat_coherence(m: &MonoidalStructure) -> ValidationReport {
    let c = m.base();
    let mut report = ValidationReport::new();
    let objects: Vec<FatObject> = crate::fat::fat_objects(c);
    let name = |x: &FatObject| c.name(x.f);
    let t = |a: FatObject, b: FatObject| tensor_fat_objects(m, a, b).ok();

    for &x in &objects {
        for (law, cell) in [
            ("fat-left-unitor", fat_left_unitor(m, x)),
            ("fat-right-unitor", fat_right_unitor(m, x)),
        ] {
            if matches!(cell, Err(MonoidalError::Undefined(_))) {
                continue;
            }
            report.check(
                law,
                cell.is_ok(),
                || vec![name(&x)],
                || format!("{:?}", cell.err()),
            );
        }
    }

    for &x1 in &objects {
        for &x2 in &objects {
            if t(x1, x2).is_none() {
                continue;
            }
            for &x3 in &objects {
                let Some(_) = t(x1, x2).and_then(|a| t(a, x3)) else {
                    continue;
                };
                match fat_associator(m, x1, x2, x3) {
                    Ok(cell) => report.check(
                        "fat-associator-bijective",
                        cell.h().is_bijection(c),
                        || vec![name(&x1), name(&x2), name(&x3)],
                        || format!("h = {} is not a bijection", cell.h().describe(c)),
                    ),
                    Err(MonoidalError::Undefined(_)) => {}
                    Err(e) => report.check(
                        "fat-associator",
                        false,
                        || vec![name(&x1), name(&x2), name(&x3)],
                        || e.to_string(),
                    ),
                }
            }
        }
    }

    for &x1 in &objects {
        for &x2 in &objects {
            if t(x1, x2).is_none() {
                continue;
            }
            let witness = || vec![name(&x1), name(&x2)];
            match fat_triangle(m, x1, x2) {
                Ok(None) => {}
                Ok(Some((lhs, rhs))) => report.check("fat-triangle", lhs == rhs, witness, || {
                    format!("(1⊗l)∘α = {}; r⊗1 = {}", lhs.describe(c), rhs.describe(c))
                }),
                Err((law, e)) => report.check(law, false, witness, || e.to_string()),
            }
        }
    }

    for &x1 in &objects {
        for &x2 in &objects {
            let Some(x12) = t(x1, x2) else { continue };
            for &x3 in &objects {
                let Some(x123) = t(x12, x3) else { continue };
                for &x4 in &objects {
                    if t(x123, x4).is_none() {
                        continue;
                    }
                    let witness = || vec![name(&x1), name(&x2), name(&x3), name(&x4)];
                    match fat_pentagon(m, [x1, x2, x3, x4]) {
                        Ok(None) => {}
                        Ok(Some((lhs, rhs))) => {
                            report.check("fat-pentagon", lhs == rhs, witness, || {
                                format!(
                                    "three-step {}; two-step {}",
                                    lhs.describe(c),
                                    rhs.describe(c)
                                )
                            })
                        }
                        Err((law, e)) => report.check(law, false, witness, || e.to_string()),
                    }
                }
            }
        }
    }
    report
}

type CellPair = Option<(FatMorphism, FatMorphism)>;

/// Both sides of the triangle in the fat category: `(1⊗l) ∘ α` and `r ⊗ 1`.
fn fat_triangle(
    m: &MonoidalStructure,
    x1: FatObject,
    x2: FatObject,
) -> Result<CellPair, (&'static str, MonoidalError)> {
    let c = m.base();
    let u = m.unit();
    let iu = c.identity(u);
    let defined = |r: Result<MorId, MonoidalError>| r.ok();
    let Some(top_left) = defined(tensor_mor_or_err(m, x1.f, iu))
        .and_then(|a| defined(tensor_mor_or_err(m, a, x2.f)))
    else {
        return Ok(None);
    };
    let Some(top_right) = defined(tensor_mor_or_err(m, iu, x2.f))
        .and_then(|a| defined(tensor_mor_or_err(m, x1.f, a)))
    else {
        return Ok(None);
    };
    let Some(bottom) = m.tensor_mor(x1.f, x2.f) else {
        return Ok(None);
    };
    let verticals = (
        m.tensor_mor(m.runit(x1.x), c.identity(x2.x)),
        m.tensor_mor(m.runit(x1.y), c.identity(x2.y)),
        m.tensor_mor(c.identity(x1.x), m.lunit(x2.x)),
        m.tensor_mor(c.identity(x1.y), m.lunit(x2.y)),
    );
    let (Some(rx), Some(ry), Some(lx), Some(ly)) = verticals else {
        return Ok(None);
    };

    let alpha = fat_associator(m, x1, fat_unit(m), x2).map_err(|e| ("fat-associator", e))?;
    let left_slant =
        structure_cell(m, top_left, bottom, rx, ry).map_err(|e| ("slant-left-commutes", e))?;
    let right_slant =
        structure_cell(m, top_right, bottom, lx, ly).map_err(|e| ("slant-right-commutes", e))?;
    let lhs = vertical_compose(c, &right_slant, &alpha).map_err(|e| ("fat-triangle", e.into()))?;
    Ok(Some((lhs, left_slant)))
}

/// Both sides of the pentagon in the fat category.
fn fat_pentagon(
    m: &MonoidalStructure,
    xs: [FatObject; 4],
) -> Result<CellPair, (&'static str, MonoidalError)> {
    let c = m.base();
    let [x1, x2, x3, x4] = xs;
    let build = || -> Result<(FatMorphism, FatMorphism), MonoidalError> {
        let t = |a, b| tensor_fat_objects(m, a, b);
        let x12 = t(x1, x2)?;
        let x23 = t(x2, x3)?;
        let x34 = t(x3, x4)?;
        let x1_23 = t(x1, x23)?;
        let x12_3 = t(x12, x3)?;

        // α ⊗ 1 : ((X1X2)X3)X4 → (X1(X2X3))X4
        let p1 = structure_cell(
            m,
            t(x12_3, x4)?.f,
            t(x1_23, x4)?.f,
            tensor_mor_or_err(m, assoc_or_err(m, x1.x, x2.x, x3.x)?, c.identity(x4.x))?,
            tensor_mor_or_err(m, assoc_or_err(m, x1.y, x2.y, x3.y)?, c.identity(x4.y))?,
        )?;
        let p2 = fat_associator(m, x1, x23, x4)?;
        // 1 ⊗ α : X1((X2X3)X4) → X1(X2(X3X4))
        let p3 = structure_cell(
            m,
            t(x1, t(x23, x4)?)?.f,
            t(x1, t(x2, x34)?)?.f,
            tensor_mor_or_err(m, c.identity(x1.x), assoc_or_err(m, x2.x, x3.x, x4.x)?)?,
            tensor_mor_or_err(m, c.identity(x1.y), assoc_or_err(m, x2.y, x3.y, x4.y)?)?,
        )?;
        let q1 = fat_associator(m, x12, x3, x4)?;
        let q2 = fat_associator(m, x1, x2, x34)?;
        let long = vertical_compose(c, &p3, &vertical_compose(c, &p2, &p1)?)?;
        let short = vertical_compose(c, &q2, &q1)?;
        Ok((long, short))
    };
    match build() {
        Ok(pair) => Ok(Some(pair)),
        Err(MonoidalError::Undefined(_)) => Ok(None),
        Err(e) => Err(("fat-pentagon", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fat::fat_objects;
    use crate::instances::group::FiniteGroup;
    use crate::instances::tensor::{direct_sum_family, group_product_monoidal};
    use crate::instances::Limits;

    #[test]
    fn z2_product_structure_validates() {
        let m = group_product_monoidal(&FiniteGroup::cyclic(2), 0);
        let r = m.validate();
        assert!(r.is_ok(), "{:?}", r.violations());
        assert!(m.is_total());
        assert!(r.checks_for("pentagon") == 1 && r.checks_for("assoc-naturality") == 8);
    }

    #[test]
    fn nonabelian_product_breaks_bifunctoriality() {
        let m = group_product_monoidal(&FiniteGroup::symmetric(3), 0);
        let r = m.validate();
        assert!(r.violations_of("bifunctor-composition").next().is_some());
    }

    #[test]
    fn strict_direct_sum_validates() {
        let (_, m) = direct_sum_family(2, 2, &Limits::default()).unwrap();
        let r = m.validate();
        assert!(r.is_ok(), "{:?}", r.violations().first());
        assert!(r.checks_for("pentagon") > 0);
        assert!(!m.is_total());
    }

    #[test]
    fn strict_fat_structure_cells_are_identities() {
        let (_, m) = direct_sum_family(2, 2, &Limits::default()).unwrap();
        let c = m.base();
        for x in fat_objects(c) {
            assert!(fat_left_unitor(&m, x).unwrap().is_identity(c));
            assert!(fat_right_unitor(&m, x).unwrap().is_identity(c));
        }
        let x = FatObject::of(c, c.hom_set(ObjId(2), ObjId(2))[3]);
        let e = fat_unit(&m);
        assert!(fat_associator(&m, e, e, x).unwrap().is_identity(c));
        assert_eq!(tensor_fat_objects(&m, x, e).unwrap(), x);
    }

    #[test]
    fn nontrivial_unitor_cells_match_conjugation_oracle() {
        let g = FiniteGroup::cyclic(3);
        let m = group_product_monoidal(&g, 1);
        assert!(m.validate().is_ok());
        let c = m.base();
        for x in fat_objects(c) {
            let l = fat_left_unitor(&m, x).unwrap();
            let r = fat_right_unitor(&m, x).unwrap();
            assert!(!l.is_identity(c));
            let one_f = tensor_fat_objects(&m, fat_unit(&m), x).unwrap();
            assert_eq!(l.h().apply(c, one_f.f).unwrap(), x.f);
            let f_one = tensor_fat_objects(&m, x, fat_unit(&m)).unwrap();
            assert_eq!(r.h().apply(c, f_one.f).unwrap(), x.f);
            for phi in 0..3 {
                // oracle: l_y φ l_x⁻¹ in the group
                let expected = g.product(&[1, phi, g.inverse(1)]);
                assert_eq!(l.h().apply(c, MorId(phi)).unwrap(), MorId(expected));
                assert_eq!(r.h().apply(c, MorId(phi)).unwrap(), MorId(expected));
            }
        }
        assert!(verify_fat_coherence(&m).is_ok());
    }

    #[test]
    fn corrupted_associator_is_caught() {
        let (grp, m) = direct_sum_family(2, 2, &Limits::default()).unwrap();
        let c = m.base();
        let d0 = ObjId(0);
        let d2 = ObjId(2);
        let swap = grp
            .morphism(
                d2,
                d2,
                &crate::instances::matrix::Matrix::new(2, vec![0, 1, 1, 0]),
            )
            .unwrap();
        let bad = m.with_assoc_component(d0, d0, d2, swap);
        let r = bad.validate();
        let nat: Vec<_> = r.violations_of("assoc-naturality").collect();
        assert!(!nat.is_empty());
        assert!(nat.iter().all(|v| v.witness[..3] == ["d0", "d0", "d2"]));
        assert!(r.violations_of("pentagon").next().is_some());
        let fat = verify_fat_coherence(&bad);
        assert!(!fat.is_ok());
        let _ = c;
    }
}
