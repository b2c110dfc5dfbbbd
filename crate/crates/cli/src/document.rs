//! JSON documents describing categories, monoidal structures, crossed
//! modules and lattice connections. Everything is referenced by name;
//! names are mapped to dense ids when a document is resolved.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use fatcat_core::instances::{CrossedModule, FiniteGroup, LatticeConnection, Limits};
use fatcat_core::{FiniteCategory, MonoidalStructure, MorId, MorRecord, ObjId};

use crate::error::LoadError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecDocument {
    Category(CategoryDoc),
    Monoidal(MonoidalDoc),
    CrossedModule(CrossedModuleDoc),
    Lattice(LatticeDoc),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<ComposeDoc>,
    pub identities: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// `g ∘ f = result`: first `f`, then `g`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ComposeDoc {
    pub g: String,
    pub f: String,
    pub result: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MonoidalDoc {
    #[serde(flatten)]
    pub category: CategoryDoc,
    pub tensor_obj: Vec<TensorObjDoc>,
    pub tensor_mor: Vec<TensorMorDoc>,
    pub unit: String,
    pub assoc: Vec<AssocDoc>,
    pub lunit: BTreeMap<String, String>,
    pub runit: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TensorObjDoc {
    pub a: String,
    pub b: String,
    pub result: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TensorMorDoc {
    pub f: String,
    pub g: String,
    pub result: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AssocDoc {
    pub a: String,
    pub b: String,
    pub c: String,
    pub mor: String,
}

/// A group, either by builtin name (`z<n>`, `s<n>`) or as a labelled
/// multiplication table.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupDoc {
    Builtin(String),
    Table {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleDoc {
    #[serde(rename = "G")]
    pub g: GroupDoc,
    #[serde(rename = "H")]
    pub h: GroupDoc,
    /// `tau[i]` is the image of the `i`-th element of `H`.
    pub tau: Vec<String>,
    /// `alpha[i][j]` is `α(g_i) h_j`.
    pub alpha: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LatticeDoc {
    pub group: GroupDoc,
    #[serde(rename = "T")]
    pub t: usize,
    #[serde(rename = "S")]
    pub s: usize,
    /// `horiz[s][t]` labels the edge `(t, s) → (t+1, s)`.
    pub horiz: Vec<Vec<String>>,
    /// `vert[s][t]` labels the edge `(t, s) → (t, s+1)`.
    pub vert: Vec<Vec<String>>,
}

/// A document with every name resolved.
#[derive(Clone, Debug)]
pub enum Resolved {
    Category(FiniteCategory),
    Monoidal(MonoidalStructure),
    CrossedModule(CrossedModule),
    Lattice(LatticeConnection),
}

impl SpecDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            SpecDocument::Category(_) => "category",
            SpecDocument::Monoidal(_) => "monoidal",
            SpecDocument::CrossedModule(_) => "crossed_module",
            SpecDocument::Lattice(_) => "lattice",
        }
    }

    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn resolve(&self, limits: &Limits) -> Result<Resolved, LoadError> {
        Ok(match self {
            SpecDocument::Category(doc) => Resolved::Category(resolve_category(doc, limits)?),
            SpecDocument::Monoidal(doc) => Resolved::Monoidal(resolve_monoidal(doc, limits)?),
            SpecDocument::CrossedModule(doc) => Resolved::CrossedModule(resolve_crossed(doc)?),
            SpecDocument::Lattice(doc) => Resolved::Lattice(resolve_lattice(doc, limits)?),
        })
    }

    pub fn from_category(c: &FiniteCategory) -> Self {
        SpecDocument::Category(category_doc(c))
    }

    pub fn from_monoidal(m: &MonoidalStructure) -> Self {
        let c = m.base();
        let on = |x: ObjId| c.object_name(x).to_string();
        let mut tensor_obj = Vec::new();
        let mut assoc = Vec::new();
        for a in c.objects() {
            for b in c.objects() {
                if let Some(r) = m.tensor_obj(a, b) {
                    tensor_obj.push(TensorObjDoc {
                        a: on(a),
                        b: on(b),
                        result: on(r),
                    });
                }
                for d in c.objects() {
                    if let Some(al) = m.assoc(a, b, d) {
                        assoc.push(AssocDoc {
                            a: on(a),
                            b: on(b),
                            c: on(d),
                            mor: c.name(al),
                        });
                    }
                }
            }
        }
        let mut tensor_mor = Vec::new();
        for f in c.morphisms() {
            for g in c.morphisms() {
                if let Some(r) = m.tensor_mor(f, g) {
                    tensor_mor.push(TensorMorDoc {
                        f: c.name(f),
                        g: c.name(g),
                        result: c.name(r),
                    });
                }
            }
        }
        SpecDocument::Monoidal(MonoidalDoc {
            category: category_doc(c),
            tensor_obj,
            tensor_mor,
            unit: on(m.unit()),
            assoc,
            lunit: c.objects().map(|a| (on(a), c.name(m.lunit(a)))).collect(),
            runit: c.objects().map(|a| (on(a), c.name(m.runit(a)))).collect(),
        })
    }

    pub fn from_crossed_module(cm: &CrossedModule) -> Self {
        let (g, h) = (cm.g(), cm.h());
        SpecDocument::CrossedModule(CrossedModuleDoc {
            g: group_doc(g),
            h: group_doc(h),
            tau: cm
                .tau_table()
                .iter()
                .map(|&x| g.label(x).to_string())
                .collect(),
            alpha: cm
                .alpha_rows()
                .iter()
                .map(|row| row.iter().map(|&x| h.label(x).to_string()).collect())
                .collect(),
        })
    }

    pub fn from_lattice(l: &LatticeConnection) -> Self {
        let g = l.group();
        let labels = |rows: Vec<Vec<usize>>| {
            rows.into_iter()
                .map(|row| row.into_iter().map(|x| g.label(x).to_string()).collect())
                .collect()
        };
        SpecDocument::Lattice(LatticeDoc {
            group: group_doc(g),
            t: l.t_extent(),
            s: l.s_extent(),
            horiz: labels(l.horiz_rows()),
            vert: labels(l.vert_rows()),
        })
    }
}

fn category_doc(c: &FiniteCategory) -> CategoryDoc {
    let mut compose = Vec::new();
    for g in c.morphisms() {
        for f in c.morphisms() {
            if let Some(r) = c.table_entry(g, f) {
                compose.push(ComposeDoc {
                    g: c.name(g),
                    f: c.name(f),
                    result: c.name(r),
                });
            }
        }
    }
    CategoryDoc {
        objects: c.object_names().to_vec(),
        morphisms: c
            .morphisms()
            .map(|f| MorphismDoc {
                name: c.name(f),
                dom: c.object_name(c.dom(f)).to_string(),
                cod: c.object_name(c.cod(f)).to_string(),
            })
            .collect(),
        compose,
        identities: c
            .objects()
            .map(|x| (c.object_name(x).to_string(), c.name(c.identity(x))))
            .collect(),
    }
}

fn group_doc(g: &FiniteGroup) -> GroupDoc {
    GroupDoc::Table {
        elements: g.labels().to_vec(),
        table: g
            .rows()
            .iter()
            .map(|row| row.iter().map(|&x| g.label(x).to_string()).collect())
            .collect(),
    }
}

/// Name → dense id, rejecting duplicates.
struct Names<'a> {
    what: &'static str,
    ids: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(
        what: &'static str,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self, LoadError> {
        let mut ids = HashMap::new();
        for (i, n) in names.into_iter().enumerate() {
            if ids.insert(n, i).is_some() {
                return Err(LoadError::Invalid(format!("duplicate {what} name {n:?}")));
            }
        }
        Ok(Names { what, ids })
    }

    fn get(&self, name: &str) -> Result<usize, LoadError> {
        self.ids
            .get(name)
            .copied()
            .ok_or_else(|| LoadError::Dangling {
                what: self.what,
                name: name.to_string(),
            })
    }
}

fn resolve_category(doc: &CategoryDoc, limits: &Limits) -> Result<FiniteCategory, LoadError> {
    let objs = Names::new("object", doc.objects.iter().map(String::as_str))?;
    let mors = Names::new("morphism", doc.morphisms.iter().map(|m| m.name.as_str()))?;
    if doc.objects.len() > limits.max_objects {
        return Err(LoadError::SizeGuard(format!(
            "{} objects, limit {}",
            doc.objects.len(),
            limits.max_objects
        )));
    }
    let mut records = Vec::with_capacity(doc.morphisms.len());
    let mut hom_sizes: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, m) in doc.morphisms.iter().enumerate() {
        let (dom, cod) = (objs.get(&m.dom)?, objs.get(&m.cod)?);
        let n = hom_sizes.entry((dom, cod)).or_default();
        *n += 1;
        if *n > limits.max_hom {
            return Err(LoadError::SizeGuard(format!(
                "hom-set {} → {} exceeds {} morphisms",
                m.dom, m.cod, limits.max_hom
            )));
        }
        records.push(MorRecord {
            id: MorId(i),
            dom: ObjId(dom),
            cod: ObjId(cod),
            label: Some(m.name.clone()),
        });
    }
    let compose = doc
        .compose
        .iter()
        .map(|e| {
            Ok((
                (MorId(mors.get(&e.g)?), MorId(mors.get(&e.f)?)),
                MorId(mors.get(&e.result)?),
            ))
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    for key in doc.identities.keys() {
        objs.get(key)?;
    }
    let identities = doc
        .objects
        .iter()
        .map(|o| {
            let name = doc
                .identities
                .get(o)
                .ok_or_else(|| LoadError::Invalid(format!("object {o:?} has no identity")))?;
            Ok(MorId(mors.get(name)?))
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    Ok(FiniteCategory::from_parts(
        doc.objects.clone(),
        records,
        compose,
        identities,
    )?)
}

fn resolve_monoidal(doc: &MonoidalDoc, limits: &Limits) -> Result<MonoidalStructure, LoadError> {
    let c = resolve_category(&doc.category, limits)?;
    let objs = Names::new("object", doc.category.objects.iter().map(String::as_str))?;
    let mors = Names::new(
        "morphism",
        doc.category.morphisms.iter().map(|m| m.name.as_str()),
    )?;
    let (n, m) = (c.object_count(), c.morphism_count());
    let mut tensor_obj = vec![None; n * n];
    for e in &doc.tensor_obj {
        tensor_obj[objs.get(&e.a)? * n + objs.get(&e.b)?] = Some(ObjId(objs.get(&e.result)?));
    }
    let mut tensor_mor = vec![None; m * m];
    for e in &doc.tensor_mor {
        tensor_mor[mors.get(&e.f)? * m + mors.get(&e.g)?] = Some(MorId(mors.get(&e.result)?));
    }
    let mut assoc = vec![None; n * n * n];
    for e in &doc.assoc {
        let idx = (objs.get(&e.a)? * n + objs.get(&e.b)?) * n + objs.get(&e.c)?;
        assoc[idx] = Some(MorId(mors.get(&e.mor)?));
    }
    let unitor = |table: &BTreeMap<String, String>, what: &str| {
        for key in table.keys() {
            objs.get(key)?;
        }
        doc.category
            .objects
            .iter()
            .map(|o| {
                let name = table.get(o).ok_or_else(|| {
                    LoadError::Invalid(format!("{what} missing for object {o:?}"))
                })?;
                Ok(MorId(mors.get(name)?))
            })
            .collect::<Result<Vec<_>, LoadError>>()
    };
    let lunit = unitor(&doc.lunit, "lunit")?;
    let runit = unitor(&doc.runit, "runit")?;
    let unit = ObjId(objs.get(&doc.unit)?);
    Ok(MonoidalStructure::new(
        c, tensor_obj, tensor_mor, unit, assoc, lunit, runit,
    )?)
}

pub fn resolve_group(doc: &GroupDoc) -> Result<FiniteGroup, LoadError> {
    match doc {
        GroupDoc::Builtin(name) => {
            let order = |prefix: &str| {
                name.strip_prefix(prefix)
                    .and_then(|n| n.parse::<usize>().ok())
            };
            match (order("z"), order("s")) {
                (Some(n), _) if (1..=64).contains(&n) => Ok(FiniteGroup::cyclic(n)),
                (_, Some(n)) if (1..=5).contains(&n) => Ok(FiniteGroup::symmetric(n)),
                _ => Err(LoadError::UnknownBuiltin(name.clone())),
            }
        }
        GroupDoc::Table { elements, table } => {
            let names = Names::new("group element", elements.iter().map(String::as_str))?;
            let rows = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| names.get(x))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FiniteGroup::from_table(elements.clone(), rows)?)
        }
    }
}

fn element(g: &FiniteGroup, label: &str) -> Result<usize, LoadError> {
    g.element(label).ok_or_else(|| LoadError::Dangling {
        what: "group element",
        name: label.to_string(),
    })
}

fn resolve_crossed(doc: &CrossedModuleDoc) -> Result<CrossedModule, LoadError> {
    let g = resolve_group(&doc.g)?;
    let h = resolve_group(&doc.h)?;
    let tau = doc
        .tau
        .iter()
        .map(|x| element(&g, x))
        .collect::<Result<Vec<_>, _>>()?;
    let alpha = doc
        .alpha
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| element(&h, x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CrossedModule::new(g, h, tau, alpha)?)
}

fn resolve_lattice(doc: &LatticeDoc, limits: &Limits) -> Result<LatticeConnection, LoadError> {
    let g = resolve_group(&doc.group)?;
    let grid = |rows: &Vec<Vec<String>>| {
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|x| element(&g, x))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
    };
    let (horiz, vert) = (grid(&doc.horiz)?, grid(&doc.vert)?);
    Ok(LatticeConnection::new(
        g, doc.t, doc.s, horiz, vert, limits,
    )?)
}
