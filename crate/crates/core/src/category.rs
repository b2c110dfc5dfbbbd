//! Finite categories stored as explicit tables.
//!
//! Objects and morphisms carry dense integer ids. Composition is a lookup
//! table, never recomputed: `compose(g, f)` means "first `f`, then `g`" and is
//! defined exactly when `cod(f) = dom(g)`.

use std::fmt;

use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorRecord {
    pub id: MorId,
    pub dom: ObjId,
    pub cod: ObjId,
    pub label: Option<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("morphism {0} does not exist")]
    DanglingMorphism(MorId),
    #[error("object {0} referenced by {1} does not exist")]
    DanglingObject(ObjId, MorId),
    #[error("morphism record at position {position} carries id {id}")]
    IdMismatch { position: usize, id: MorId },
    #[error("identity table has {got} entries for {expected} objects")]
    IdentityCount { expected: usize, got: usize },
    #[error("composition ({g}, {f}) is listed twice")]
    DuplicateComposition { g: MorId, f: MorId },
    #[error("composition of {g} after {f} is undefined: cod({f}) = {cod_f}, dom({g}) = {dom_g}")]
    CompositionUndefined {
        g: MorId,
        f: MorId,
        cod_f: ObjId,
        dom_g: ObjId,
    },
    #[error("composition table has no entry for ({g}, {f})")]
    TableGap { g: MorId, f: MorId },
}

/// A finite category: object names, morphism records, a composition table
/// and an identity assignment.
///
/// Construction only checks that every id resolves. Whether the tables obey
/// the category axioms is the job of [`FiniteCategory::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorRecord>,
    compose: Vec<Option<MorId>>,
    identities: Vec<MorId>,
    homs: Vec<Vec<MorId>>,
    hom_pos: Vec<usize>,
    inverses: Vec<Option<MorId>>,
}

impl FiniteCategory {
    /// Assembles a category from raw tables. `compose` lists `((g, f), g∘f)`.
    pub fn from_parts<I>(
        objects: Vec<String>,
        morphisms: Vec<MorRecord>,
        compose: I,
        identities: Vec<MorId>,
    ) -> Result<Self, CategoryError>
    where
        I: IntoIterator<Item = ((MorId, MorId), MorId)>,
    {
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        for (position, rec) in morphisms.iter().enumerate() {
            if rec.id.0 != position {
                return Err(CategoryError::IdMismatch {
                    position,
                    id: rec.id,
                });
            }
            for o in [rec.dom, rec.cod] {
                if o.0 >= n_obj {
                    return Err(CategoryError::DanglingObject(o, rec.id));
                }
            }
        }
        if identities.len() != n_obj {
            return Err(CategoryError::IdentityCount {
                expected: n_obj,
                got: identities.len(),
            });
        }
        for &m in &identities {
            if m.0 >= n_mor {
                return Err(CategoryError::DanglingMorphism(m));
            }
        }
        let mut table = vec![None; n_mor * n_mor];
        for ((g, f), r) in compose {
            for m in [g, f, r] {
                if m.0 >= n_mor {
                    return Err(CategoryError::DanglingMorphism(m));
                }
            }
            let slot = &mut table[g.0 * n_mor + f.0];
            if slot.is_some() {
                return Err(CategoryError::DuplicateComposition { g, f });
            }
            *slot = Some(r);
        }

        let mut homs = vec![Vec::new(); n_obj * n_obj];
        let mut hom_pos = vec![0; n_mor];
        for rec in &morphisms {
            let hom = &mut homs[rec.dom.0 * n_obj + rec.cod.0];
            hom_pos[rec.id.0] = hom.len();
            hom.push(rec.id);
        }

        let mut cat = FiniteCategory {
            objects,
            morphisms,
            compose: table,
            identities,
            homs,
            hom_pos,
            inverses: Vec::new(),
        };
        cat.inverses = (0..n_mor).map(|i| cat.scan_inverse(MorId(i))).collect();
        Ok(cat)
    }

    /// Builds a category whose composition is given by a function on compatible pairs.
    pub fn from_fn<F>(
        objects: Vec<String>,
        morphisms: Vec<MorRecord>,
        identities: Vec<MorId>,
        mut compose: F,
    ) -> Result<Self, CategoryError>
    where
        F: FnMut(MorId, MorId) -> MorId,
    {
        let mut entries = Vec::new();
        for g in &morphisms {
            for f in &morphisms {
                if f.cod == g.dom {
                    entries.push(((g.id, f.id), compose(g.id, f.id)));
                }
            }
        }
        Self::from_parts(objects, morphisms, entries, identities)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn records(&self) -> &[MorRecord] {
        &self.morphisms
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    /// Human-readable name of a morphism: its label, or `m<id>`.
    pub fn name(&self, f: MorId) -> String {
        match &self.morphisms[f.0].label {
            Some(l) => l.clone(),
            None => f.to_string(),
        }
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.dom(f).0] == f
    }

    /// The raw table entry for `(g, f)`, regardless of endpoint compatibility.
    pub fn table_entry(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g.0 * self.morphisms.len() + f.0]
    }

    /// `g ∘ f`: first `f`, then `g`.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, CategoryError> {
        let n = self.morphisms.len();
        for m in [g, f] {
            if m.0 >= n {
                return Err(CategoryError::DanglingMorphism(m));
            }
        }
        let (cod_f, dom_g) = (self.cod(f), self.dom(g));
        if cod_f != dom_g {
            return Err(CategoryError::CompositionUndefined { g, f, cod_f, dom_g });
        }
        self.table_entry(g, f)
            .ok_or(CategoryError::TableGap { g, f })
    }

    /// Composes a path given in application order: `compose_path(&[a, b, c])` is `c∘b∘a`.
    pub fn compose_path(&self, path: &[MorId]) -> Result<MorId, CategoryError> {
        let (&first, rest) = path
            .split_first()
            .expect("compose_path needs at least one morphism");
        rest.iter()
            .try_fold(first, |acc, &next| self.compose(next, acc))
    }

    /// Every morphism `x → y`, ascending by id.
    pub fn hom_set(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    /// Index of `f` inside `hom_set(dom f, cod f)`.
    pub fn hom_position(&self, f: MorId) -> usize {
        self.hom_pos[f.0]
    }

    /// The two-sided inverse of `f`, if one exists.
    pub fn is_isomorphism(&self, f: MorId) -> Option<MorId> {
        self.inverses[f.0]
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        self.inverses[f.0]
    }

    fn scan_inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.dom(f), self.cod(f));
        let (id_x, id_y) = (self.identity(x), self.identity(y));
        self.hom_set(y, x)
            .iter()
            .copied()
            .find(|&g| self.table_entry(g, f) == Some(id_x) && self.table_entry(f, g) == Some(id_y))
    }

    pub fn is_groupoid(&self) -> bool {
        self.inverses.iter().all(Option::is_some)
    }

    /// Checks the category axioms exhaustively.
    ///
    /// Typing of the tables is checked first; associativity and the identity
    /// laws are only evaluated once every table entry is well typed, so one
    /// bad entry yields one violation instead of a cascade.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let name = |m: MorId| self.name(m);

        for x in self.objects() {
            let i = self.identity(x);
            report.check(
                "identity-typing",
                self.dom(i) == x && self.cod(i) == x,
                || vec![self.object_name(x).to_string()],
                || format!("identity {} is not an endomorphism of the object", name(i)),
            );
        }
        for g in self.morphisms() {
            for f in self.morphisms() {
                let entry = self.table_entry(g, f);
                if self.cod(f) == self.dom(g) {
                    match entry {
                        None => report.check(
                            "composition-totality",
                            false,
                            || vec![name(g), name(f)],
                            || "no table entry for a compatible pair".to_string(),
                        ),
                        Some(r) => report.check(
                            "composition-typing",
                            self.dom(r) == self.dom(f) && self.cod(r) == self.cod(g),
                            || vec![name(g), name(f)],
                            || {
                                format!(
                                    "result {} has endpoints ({}, {}), expected ({}, {})",
                                    name(r),
                                    self.object_name(self.dom(r)),
                                    self.object_name(self.cod(r)),
                                    self.object_name(self.dom(f)),
                                    self.object_name(self.cod(g)),
                                )
                            },
                        ),
                    }
                } else if let Some(r) = entry {
                    report.check(
                        "composition-domain",
                        false,
                        || vec![name(g), name(f)],
                        || format!("entry {} given for an incompatible pair", name(r)),
                    );
                }
            }
        }
        if !report.is_ok() {
            return report;
        }

        for f in self.morphisms() {
            let left = self.table_entry(self.identity(self.cod(f)), f);
            let right = self.table_entry(f, self.identity(self.dom(f)));
            report.check(
                "identity-law",
                left == Some(f) && right == Some(f),
                || vec![name(f)],
                || format!("id∘f = {:?}, f∘id = {:?}", left.map(name), right.map(name)),
            );
        }
        for f in self.morphisms() {
            let y = self.cod(f);
            for z in self.objects() {
                for &g in self.hom_set(y, z) {
                    let gf = self.table_entry(g, f).expect("typed table");
                    for w in self.objects() {
                        for &h in self.hom_set(z, w) {
                            let hg = self.table_entry(h, g).expect("typed table");
                            let lhs = self.table_entry(h, gf).expect("typed table");
                            let rhs = self.table_entry(hg, f).expect("typed table");
                            report.check(
                                "associativity",
                                lhs == rhs,
                                || vec![name(h), name(g), name(f)],
                                || format!("h∘(g∘f) = {}, (h∘g)∘f = {}", name(lhs), name(rhs)),
                            );
                        }
                    }
                }
            }
        }
        report
    }
}

/// Incremental construction of a [`FiniteCategory`] by name.
#[derive(Default, Debug, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorRecord>,
    compose: Vec<((MorId, MorId), MorId)>,
    identities: Vec<Option<MorId>>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        self.objects.push(name.into());
        self.identities.push(None);
        ObjId(self.objects.len() - 1)
    }

    pub fn morphism(&mut self, label: impl Into<String>, dom: ObjId, cod: ObjId) -> MorId {
        let id = MorId(self.morphisms.len());
        self.morphisms.push(MorRecord {
            id,
            dom,
            cod,
            label: Some(label.into()),
        });
        id
    }

    pub fn identity(&mut self, x: ObjId, f: MorId) -> &mut Self {
        self.identities[x.0] = Some(f);
        self
    }

    /// Sets `g ∘ f = result`.
    pub fn compose(&mut self, g: MorId, f: MorId, result: MorId) -> &mut Self {
        self.compose.push(((g, f), result));
        self
    }

    pub fn build(self) -> Result<FiniteCategory, CategoryError> {
        let identities = self
            .identities
            .iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or(CategoryError::IdentityCount {
                    expected: self.identities.len(),
                    got: i,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteCategory::from_parts(self.objects, self.morphisms, self.compose, identities)
    }
}
