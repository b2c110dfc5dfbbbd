//! Squares with invertible sides, their horizontal composition, the
//! interchange law, right translations and closure of sub-classes of cells.
//!
//! A [`Square`] is a fat-category cell whose four sides are isomorphisms.
//! Horizontal composition pastes two squares side by side along a shared
//! vertical:
//!
//! ```text
//!  x₁ ─f₁→ y₁ ─f₁'→ z₁
//!  g₁│  h   │g₂  h'  │g₂'
//!  x₂ ─f₂→ y₂ ─f₂'→ z₂
//! ```
//!
//! with `h''(f) = h'(f f₁⁻¹) ∘ h(f₁)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::category::{FiniteCategory, MorId, ObjId};
use crate::fat::{induced_from_square, vertical_compose, FatError, FatMorphism, FatObject, HomMap};
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error(transparent)]
    Fat(#[from] FatError),
    #[error("{role} {mor} is not invertible")]
    NotInvertible { role: &'static str, mor: MorId },
    #[error("shared vertical mismatch: left square has g2 = {left_g2}, right square has g1 = {right_g1}")]
    SharedVertical { left_g2: MorId, right_g1: MorId },
    #[error("grid is not pasteable: {0}")]
    NotPasteable(String),
}

impl From<crate::category::CategoryError> for DoubleError {
    fn from(e: crate::category::CategoryError) -> Self {
        DoubleError::Fat(e.into())
    }
}

/// A cell whose verticals and horizontals are all invertible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Square(FatMorphism);

impl Square {
    pub fn new(c: &FiniteCategory, cell: FatMorphism) -> Result<Self, DoubleError> {
        for (role, mor) in [
            ("top arrow", cell.src().f),
            ("bottom arrow", cell.dst().f),
            ("left vertical", cell.g1()),
            ("right vertical", cell.g2()),
        ] {
            if c.inverse(mor).is_none() {
                return Err(DoubleError::NotInvertible { role, mor });
            }
        }
        Ok(Square(cell))
    }

    /// The square induced by `g₂∘f₁ = f₂∘g₁`.
    pub fn induced(
        c: &FiniteCategory,
        f1: MorId,
        f2: MorId,
        g1: MorId,
        g2: MorId,
    ) -> Result<Self, DoubleError> {
        Square::new(c, induced_from_square(c, f1, f2, g1, g2)?)
    }

    /// Horizontal unit on `g: x → x'`: identity arrows on top and bottom,
    /// both verticals `g`, and `h(φ) = g φ g⁻¹`.
    pub fn horizontal_identity(c: &FiniteCategory, g: MorId) -> Result<Self, DoubleError> {
        let (x, x2) = (c.dom(g), c.cod(g));
        Square::induced(c, c.identity(x), c.identity(x2), g, g)
    }

    pub fn cell(&self) -> &FatMorphism {
        &self.0
    }

    pub fn into_cell(self) -> FatMorphism {
        self.0
    }

    pub fn top(&self) -> MorId {
        self.0.src().f
    }

    pub fn bottom(&self) -> MorId {
        self.0.dst().f
    }

    pub fn g1(&self) -> MorId {
        self.0.g1()
    }

    pub fn g2(&self) -> MorId {
        self.0.g2()
    }

    pub fn h(&self) -> &HomMap {
        self.0.h()
    }
}

/// `upper` stacked on `lower`.
pub fn vertical_compose_squares(
    c: &FiniteCategory,
    lower: &Square,
    upper: &Square,
) -> Result<Square, DoubleError> {
    Ok(Square(vertical_compose(c, &lower.0, &upper.0)?))
}

/// `left` pasted to the left of `right`; defined when `right.g1 = left.g2`.
pub fn horizontal_compose(
    c: &FiniteCategory,
    left: &Square,
    right: &Square,
) -> Result<Square, DoubleError> {
    Ok(Square(horizontal_compose_cells(c, &left.0, &right.0)?))
}

fn horizontal_compose_cells(
    c: &FiniteCategory,
    left: &FatMorphism,
    right: &FatMorphism,
) -> Result<FatMorphism, DoubleError> {
    if right.g1() != left.g2() {
        return Err(DoubleError::SharedVertical {
            left_g2: left.g2(),
            right_g1: right.g1(),
        });
    }
    let f1 = left.src().f;
    let f1_inv = c.inverse(f1).ok_or(DoubleError::NotInvertible {
        role: "top arrow",
        mor: f1,
    })?;
    let f2 = left.h().apply(c, f1)?;
    let top = c.compose(right.src().f, f1)?;
    let bottom = c.compose(right.dst().f, left.dst().f)?;
    let (src, dst) = (FatObject::of(c, top), FatObject::of(c, bottom));
    let h = HomMap::from_fn(c, src.hom(), dst.hom(), |f| {
        let shifted = right.h().apply(c, c.compose(f, f1_inv)?)?;
        Ok(c.compose(shifted, f2)?)
    })?;
    Ok(FatMorphism::new(c, src, dst, left.g1(), right.g2(), h)?)
}

/// `r_g: Mor(x, z) → Mor(y, z), f ↦ f g` for an isomorphism `g: y → x`.
pub fn right_translation(c: &FiniteCategory, g: MorId, z: ObjId) -> Result<HomMap, DoubleError> {
    if c.inverse(g).is_none() {
        return Err(DoubleError::NotInvertible {
            role: "translation",
            mor: g,
        });
    }
    let (y, x) = (c.dom(g), c.cod(g));
    Ok(HomMap::from_fn(
        c,
        (x, z),
        (y, z),
        |f| Ok(c.compose(f, g)?),
    )?)
}

/// `r_{h(f₁)} ∘ h' ∘ r_{f₁⁻¹}` for a horizontally composable pair.
pub fn factorized_horizontal(
    c: &FiniteCategory,
    left: &Square,
    right: &Square,
) -> Result<HomMap, DoubleError> {
    let f1 = left.top();
    let f1_inv = c.inverse(f1).ok_or(DoubleError::NotInvertible {
        role: "top arrow",
        mor: f1,
    })?;
    let f2 = left.h().apply(c, f1)?;
    let z1 = c.cod(right.top());
    let z2 = c.cod(right.bottom());
    let shift_in = right_translation(c, f1_inv, z1)?;
    let shift_out = right_translation(c, f2, z2)?;
    Ok(shift_out.after(c, &right.h().after(c, &shift_in)?)?)
}

/// A 2×2 arrangement of squares: `tl` and `tr` on top, `bl` and `br` below.
#[derive(Clone, Debug)]
pub struct Grid {
    pub tl: Square,
    pub tr: Square,
    pub bl: Square,
    pub br: Square,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterchangeOutcome {
    Equal(Square),
    /// Rows-first and columns-first composites differ.
    Counterexample {
        rows_first: Square,
        columns_first: Square,
    },
}

impl Grid {
    pub fn check_pasteable(&self, c: &FiniteCategory) -> Result<(), DoubleError> {
        let nm = |m: MorId| c.name(m);
        let fail = |msg: String| Err(DoubleError::NotPasteable(msg));
        if self.tr.g1() != self.tl.g2() {
            return fail(format!(
                "top row shares {} / {}",
                nm(self.tl.g2()),
                nm(self.tr.g1())
            ));
        }
        if self.br.g1() != self.bl.g2() {
            return fail(format!(
                "bottom row shares {} / {}",
                nm(self.bl.g2()),
                nm(self.br.g1())
            ));
        }
        if self.bl.top() != self.tl.bottom() {
            return fail(format!(
                "left column meets at {} / {}",
                nm(self.tl.bottom()),
                nm(self.bl.top())
            ));
        }
        if self.br.top() != self.tr.bottom() {
            return fail(format!(
                "right column meets at {} / {}",
                nm(self.tr.bottom()),
                nm(self.br.top())
            ));
        }
        Ok(())
    }
}

/// Evaluates both sides of the interchange law on a pasteable grid:
/// rows first `(br ∘_H bl) ∘_V (tr ∘_H tl)` and columns first
/// `(br ∘_V tr) ∘_H (bl ∘_V tl)`, compared as cells.
pub fn verify_interchange(
    c: &FiniteCategory,
    grid: &Grid,
) -> Result<InterchangeOutcome, DoubleError> {
    grid.check_pasteable(c)?;
    let top = horizontal_compose(c, &grid.tl, &grid.tr)?;
    let bottom = horizontal_compose(c, &grid.bl, &grid.br)?;
    let rows_first = vertical_compose_squares(c, &bottom, &top)?;
    let left = vertical_compose_squares(c, &grid.bl, &grid.tl)?;
    let right = vertical_compose_squares(c, &grid.br, &grid.tr)?;
    let columns_first = horizontal_compose(c, &left, &right)?;
    Ok(if rows_first == columns_first {
        InterchangeOutcome::Equal(rows_first)
    } else {
        InterchangeOutcome::Counterexample {
            rows_first,
            columns_first,
        }
    })
}

/// Every square induced by a commuting square with all four sides invertible,
/// ordered by top arrow, then left vertical, then right vertical.
pub fn induced_squares(c: &FiniteCategory) -> Vec<Square> {
    let mut out = Vec::new();
    for f1 in c.morphisms() {
        if c.inverse(f1).is_none() {
            continue;
        }
        for sq in crate::fat::commuting_squares_from(c, f1) {
            if let Ok(s) = Square::induced(c, sq.f1, sq.f2, sq.g1, sq.g2) {
                out.push(s);
            }
        }
    }
    out
}

/// A decidable, named property of hom-set maps, used to carve a class of
/// cells out of all squares.
type CellTest = dyn Fn(&FiniteCategory, &HomMap) -> bool + Send + Sync;

#[derive(Clone)]
pub struct CellPredicate {
    name: String,
    test: Arc<CellTest>,
}

impl fmt::Debug for CellPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CellPredicate")
            .field("name", &self.name)
            .finish()
    }
}

impl CellPredicate {
    pub fn new(
        name: impl Into<String>,
        test: impl Fn(&FiniteCategory, &HomMap) -> bool + Send + Sync + 'static,
    ) -> Self {
        CellPredicate {
            name: name.into(),
            test: Arc::new(test),
        }
    }

    pub fn always() -> Self {
        Self::new("always", |_, _| true)
    }

    pub fn identity_table() -> Self {
        Self::new("identity-table", |c, h| h.is_identity(c))
    }

    /// `h(φ) = u φ v` for some isomorphisms `u` and `v`, found by search.
    pub fn two_sided_translation() -> Self {
        Self::new("two-sided-translation", |c, h| {
            two_sided_factors(c, h).is_some()
        })
    }

    /// Looks a predicate up by the names used on the command line.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "always" => Some(Self::always()),
            "identity-table" => Some(Self::identity_table()),
            "two-sided-translation" => Some(Self::two_sided_translation()),
            _ => None,
        }
    }

    pub fn names() -> &'static [&'static str] {
        &["always", "identity-table", "two-sided-translation"]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn holds(&self, c: &FiniteCategory, h: &HomMap) -> bool {
        (self.test)(c, h)
    }
}

/// Isomorphisms `(u, v)` with `h(φ) = u φ v` for every `φ`, if any exist.
pub fn two_sided_factors(c: &FiniteCategory, h: &HomMap) -> Option<(MorId, MorId)> {
    let ((a, b), (x, y)) = (h.src(), h.dst());
    let domain = c.hom_set(a, b);
    for &u in c.hom_set(b, y) {
        if c.inverse(u).is_none() {
            continue;
        }
        for &v in c.hom_set(x, a) {
            if c.inverse(v).is_none() {
                continue;
            }
            let fits = domain
                .iter()
                .zip(h.table())
                .all(|(&phi, &img)| c.compose_path(&[v, phi, u]).ok() == Some(img));
            if fits {
                return Some((u, v));
            }
        }
    }
    None
}

/// Closure of the class of induced squares satisfying `p` under both
/// compositions, and the factorization of horizontal composites through
/// right translations.
///
/// Every right translation must satisfy `p` first; if one does not, the
/// report carries only `right-translation-membership` violations.
pub fn verify_enrichment_closure(c: &FiniteCategory, p: &CellPredicate) -> ValidationReport {
    let mut report = ValidationReport::new();
    let mut memo: HashMap<HomMap, bool> = HashMap::new();
    let mut holds = |h: &HomMap| *memo.entry(h.clone()).or_insert_with(|| p.holds(c, h));

    for g in c.morphisms() {
        if c.inverse(g).is_none() {
            continue;
        }
        for z in c.objects() {
            let r = right_translation(c, g, z).expect("g is invertible");
            let ok = holds(&r);
            report.check(
                "right-translation-membership",
                ok,
                || vec![format!("r_{}", c.name(g)), c.object_name(z).to_string()],
                || format!("r_g = {} fails {}", r.describe(c), p.name()),
            );
        }
    }
    if !report.is_ok() {
        return report;
    }

    let squares = induced_squares(c);
    let members: Vec<&Square> = squares.iter().filter(|s| holds(s.h())).collect();
    report.count("member-cells", members.len() as u64);
    let mut by_g1: HashMap<MorId, Vec<&Square>> = HashMap::new();
    let mut by_top: HashMap<MorId, Vec<&Square>> = HashMap::new();
    for &s in &members {
        by_g1.entry(s.g1()).or_default().push(s);
        by_top.entry(s.top()).or_default().push(s);
    }
    let name2 = |a: &Square, b: &Square| vec![a.cell().describe(c), b.cell().describe(c)];

    for &upper in &members {
        for &lower in by_top
            .get(&upper.bottom())
            .map(Vec::as_slice)
            .unwrap_or(&[])
        {
            let composite = vertical_compose_squares(c, lower, upper);
            let ok = composite.as_ref().is_ok_and(|v| holds(v.h()));
            report.check(
                "vertical-closure",
                ok,
                || name2(upper, lower),
                || format!("vertical composite leaves the class {}", p.name()),
            );
        }
    }
    for &left in &members {
        for &right in by_g1.get(&left.g2()).map(Vec::as_slice).unwrap_or(&[]) {
            let composite = horizontal_compose(c, left, right);
            let ok = composite.as_ref().is_ok_and(|s| holds(s.h()));
            report.check(
                "horizontal-closure",
                ok,
                || name2(left, right),
                || format!("horizontal composite leaves the class {}", p.name()),
            );
            let factored = factorized_horizontal(c, left, right);
            let same = match (&composite, &factored) {
                (Ok(s), Ok(f)) => s.h() == f,
                _ => false,
            };
            report.check(
                "translation-factorization",
                same,
                || name2(left, right),
                || match (&composite, &factored) {
                    (Ok(s), Ok(f)) => {
                        format!("h'' = {}, r∘h'∘r = {}", s.h().describe(c), f.describe(c))
                    }
                    (Err(e), _) | (_, Err(e)) => e.to_string(),
                },
            );
        }
    }
    report
}

/// First failing grid of an exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCounterexample {
    /// Descriptions of the four squares, in the order tl, tr, bl, br.
    pub squares: [String; 4],
    pub rows_first: String,
    pub columns_first: String,
}

/// All induced squares of a category, interned, with every horizontal and
/// vertical composite of two of them precomputed.
///
/// Composites are computed once with the generic operations and interned by
/// extensional equality, so equal cells share an id and every law over
/// grids reduces to table lookups and id comparisons. Composites that fall
/// outside the base set get fresh ids and are composed on demand.
pub struct SquareAtlas<'c> {
    c: &'c FiniteCategory,
    cells: Vec<FatMorphism>,
    index: HashMap<FatMorphism, u32>,
    base: usize,
    by_g1: Vec<Vec<u32>>,
    by_top: Vec<Vec<u32>>,
    by_top_g1: Vec<Vec<u32>>,
    rank_g1: Vec<u32>,
    rank_top: Vec<u32>,
    hc_off: Vec<usize>,
    hc: Vec<u32>,
    vc_off: Vec<usize>,
    vc: Vec<u32>,
    extra_hc: HashMap<(u32, u32), u32>,
    extra_vc: HashMap<(u32, u32), u32>,
    build_report: ValidationReport,
}

const FAILED: u32 = u32::MAX;

impl<'c> SquareAtlas<'c> {
    /// Builds the atlas over [`induced_squares`]. Building evaluates every
    /// composable pair once and checks that each horizontal composite sends
    /// `f₁'f₁` to `f₂'f₂`.
    pub fn new(c: &'c FiniteCategory) -> Self {
        let squares = induced_squares(c);
        let m = c.morphism_count();
        let mut atlas = SquareAtlas {
            c,
            cells: Vec::with_capacity(squares.len()),
            index: HashMap::new(),
            base: squares.len(),
            by_g1: vec![Vec::new(); m],
            by_top: vec![Vec::new(); m],
            by_top_g1: vec![Vec::new(); m * m],
            rank_g1: Vec::with_capacity(squares.len()),
            rank_top: Vec::with_capacity(squares.len()),
            hc_off: Vec::with_capacity(squares.len() + 1),
            hc: Vec::new(),
            vc_off: Vec::with_capacity(squares.len() + 1),
            vc: Vec::new(),
            extra_hc: HashMap::new(),
            extra_vc: HashMap::new(),
            build_report: ValidationReport::new(),
        };
        for s in squares {
            let id = atlas.cells.len() as u32;
            let cell = s.into_cell();
            let (g1, top) = (cell.g1().0, cell.src().f.0);
            atlas.rank_g1.push(atlas.by_g1[g1].len() as u32);
            atlas.rank_top.push(atlas.by_top[top].len() as u32);
            atlas.by_g1[g1].push(id);
            atlas.by_top[top].push(id);
            atlas.by_top_g1[top * m + g1].push(id);
            atlas.index.insert(cell.clone(), id);
            atlas.cells.push(cell);
        }
        atlas.fill_tables();
        atlas
    }

    fn intern(&mut self, cell: FatMorphism) -> u32 {
        if let Some(&id) = self.index.get(&cell) {
            return id;
        }
        let id = self.cells.len() as u32;
        self.index.insert(cell.clone(), id);
        self.cells.push(cell);
        id
    }

    fn fill_tables(&mut self) {
        let c = self.c;
        let mut report = ValidationReport::new();
        for l in 0..self.base {
            self.hc_off.push(self.hc.len());
            let partners = self.by_g1[self.cells[l].g2().0].clone();
            for r in partners {
                let (left, right) = (&self.cells[l], &self.cells[r as usize]);
                let expected = c
                    .compose(right.dst().f, left.dst().f)
                    .expect("bottom arrows are composable");
                let top = c
                    .compose(right.src().f, left.src().f)
                    .expect("top arrows are composable");
                let composite = horizontal_compose_cells(c, left, right);
                let got = composite
                    .as_ref()
                    .ok()
                    .and_then(|h| h.h().apply(c, top).ok());
                report.check(
                    "horizontal-defining-condition",
                    got == Some(expected),
                    || vec![left.describe(c), right.describe(c)],
                    || match &composite {
                        Ok(_) => format!(
                            "h''(f₁'f₁) = {:?}, f₂'f₂ = {}",
                            got.map(|g| c.name(g)),
                            c.name(expected)
                        ),
                        Err(e) => e.to_string(),
                    },
                );
                let id = match composite {
                    Ok(cell) => self.intern(cell),
                    Err(_) => FAILED,
                };
                self.hc.push(id);
            }
        }
        self.hc_off.push(self.hc.len());
        for u in 0..self.base {
            self.vc_off.push(self.vc.len());
            let partners = self.by_top[self.cells[u].dst().f.0].clone();
            for v in partners {
                let composite = vertical_compose(c, &self.cells[v as usize], &self.cells[u]);
                let id = match composite {
                    Ok(cell) => self.intern(cell),
                    Err(_) => FAILED,
                };
                self.vc.push(id);
            }
        }
        self.vc_off.push(self.vc.len());
        self.build_report = report;
    }

    pub fn category(&self) -> &FiniteCategory {
        self.c
    }

    /// Number of induced squares.
    pub fn square_count(&self) -> usize {
        self.base
    }

    /// Number of distinct cells seen, including composites outside the base set.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, id: u32) -> &FatMorphism {
        &self.cells[id as usize]
    }

    pub fn horizontal_pairs(&self) -> usize {
        self.hc.len()
    }

    pub fn vertical_pairs(&self) -> usize {
        self.vc.len()
    }

    /// The defining-condition checks made while building the atlas.
    pub fn defining_condition_report(&self) -> &ValidationReport {
        &self.build_report
    }

    fn hcomp(&mut self, l: u32, r: u32) -> u32 {
        if l == FAILED || r == FAILED {
            return FAILED;
        }
        if (l as usize) < self.base && (r as usize) < self.base {
            let (lc, rc) = (&self.cells[l as usize], &self.cells[r as usize]);
            if rc.g1() == lc.g2() {
                return self.hc[self.hc_off[l as usize] + self.rank_g1[r as usize] as usize];
            }
            return FAILED;
        }
        if let Some(&id) = self.extra_hc.get(&(l, r)) {
            return id;
        }
        let id = match horizontal_compose_cells(
            self.c,
            &self.cells[l as usize],
            &self.cells[r as usize],
        ) {
            Ok(cell) => self.intern(cell),
            Err(_) => FAILED,
        };
        self.extra_hc.insert((l, r), id);
        id
    }

    fn vcomp(&mut self, lower: u32, upper: u32) -> u32 {
        if lower == FAILED || upper == FAILED {
            return FAILED;
        }
        if (lower as usize) < self.base && (upper as usize) < self.base {
            let (lc, uc) = (&self.cells[lower as usize], &self.cells[upper as usize]);
            if lc.src() == uc.dst() {
                return self.vc
                    [self.vc_off[upper as usize] + self.rank_top[lower as usize] as usize];
            }
            return FAILED;
        }
        if let Some(&id) = self.extra_vc.get(&(lower, upper)) {
            return id;
        }
        let id = match vertical_compose(
            self.c,
            &self.cells[lower as usize],
            &self.cells[upper as usize],
        ) {
            Ok(cell) => self.intern(cell),
            Err(_) => FAILED,
        };
        self.extra_vc.insert((lower, upper), id);
        id
    }

    /// Checks the interchange law on every pasteable 2×2 grid of induced
    /// squares, in ascending order of `(tl, tr, bl, br)`. Returns the report
    /// (law `interchange`, one check per grid) and the first failing grid.
    pub fn interchange_sweep(&mut self) -> (ValidationReport, Option<GridCounterexample>) {
        let m = self.c.morphism_count();
        let base = self.base as u32;
        let g2_of: Vec<usize> = self.cells[..self.base].iter().map(|x| x.g2().0).collect();
        let bottom_of: Vec<usize> = self.cells[..self.base]
            .iter()
            .map(|x| x.dst().f.0)
            .collect();
        let by_g1 = self.by_g1.clone();
        let by_top = self.by_top.clone();
        let by_top_g1 = self.by_top_g1.clone();
        let mut checked = 0u64;
        let mut failures = 0u64;
        let mut first: Option<(u32, u32, u32, u32, u32, u32)> = None;
        let mut witnesses = Vec::new();
        for tl in 0..base {
            let trs = &by_g1[g2_of[tl as usize]];
            let bls = &by_top[bottom_of[tl as usize]];
            for &tr in trs {
                let top = self.hcomp(tl, tr);
                let tr_bottom = bottom_of[tr as usize];
                for &bl in bls {
                    let left = self.vcomp(bl, tl);
                    let brs = &by_top_g1[tr_bottom * m + g2_of[bl as usize]];
                    let hc_bl = self.hc_off[bl as usize];
                    let vc_tr = self.vc_off[tr as usize];
                    for &br in brs {
                        let bottom = self.hc[hc_bl + self.rank_g1[br as usize] as usize];
                        let right = self.vc[vc_tr + self.rank_top[br as usize] as usize];
                        let fast = top < base && bottom < base && left < base && right < base;
                        let (rows_first, columns_first) = if fast {
                            (
                                self.vc[self.vc_off[top as usize]
                                    + self.rank_top[bottom as usize] as usize],
                                self.hc[self.hc_off[left as usize]
                                    + self.rank_g1[right as usize] as usize],
                            )
                        } else {
                            (self.vcomp(bottom, top), self.hcomp(left, right))
                        };
                        checked += 1;
                        if rows_first == FAILED || rows_first != columns_first {
                            failures += 1;
                            if first.is_none() {
                                first = Some((tl, tr, bl, br, rows_first, columns_first));
                            }
                            if witnesses.len() < 16 {
                                witnesses.push((tl, tr, bl, br));
                            }
                        }
                    }
                }
            }
        }
        let mut report = ValidationReport::new();
        report.count("interchange", checked - failures);
        let c = self.c;
        for (tl, tr, bl, br) in witnesses {
            report.check(
                "interchange",
                false,
                || {
                    [tl, tr, bl, br]
                        .iter()
                        .map(|&i| self.cells[i as usize].describe(c))
                        .collect()
                },
                || "rows-first and columns-first composites differ".to_string(),
            );
        }
        if failures as usize > report.violations().len() {
            report.count("interchange", failures - report.violations().len() as u64);
        }
        let counterexample = first.map(|(tl, tr, bl, br, a, b)| {
            let show = |id: u32| {
                if id == FAILED {
                    "undefined".to_string()
                } else {
                    self.cells[id as usize].describe(c)
                }
            };
            GridCounterexample {
                squares: [show(tl), show(tr), show(bl), show(br)],
                rows_first: show(a),
                columns_first: show(b),
            }
        });
        (report, counterexample)
    }

    /// `(a ∘_H b) ∘_H d = a ∘_H (b ∘_H d)` on every composable triple.
    pub fn horizontal_associativity(&mut self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let c = self.c;
        for a in 0..self.base as u32 {
            let bs = self.by_g1[self.cells[a as usize].g2().0].clone();
            for b in bs {
                let ab = self.hcomp(a, b);
                let ds = self.by_g1[self.cells[b as usize].g2().0].clone();
                for d in ds {
                    let lhs = self.hcomp(ab, d);
                    let bd = self.hcomp(b, d);
                    let rhs = self.hcomp(a, bd);
                    report.check(
                        "horizontal-associativity",
                        lhs != FAILED && lhs == rhs,
                        || {
                            [a, b, d]
                                .iter()
                                .map(|&i| self.cells[i as usize].describe(c))
                                .collect()
                        },
                        || "bracketings differ".to_string(),
                    );
                }
            }
        }
        report
    }

    /// `h'' = r_{h(f₁)} ∘ h' ∘ r_{f₁⁻¹}` on every horizontally composable pair.
    pub fn factorization(&mut self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let c = self.c;
        for l in 0..self.base as u32 {
            let rs = self.by_g1[self.cells[l as usize].g2().0].clone();
            for r in rs {
                let composite = self.hcomp(l, r);
                let (left, right) = (
                    Square(self.cells[l as usize].clone()),
                    Square(self.cells[r as usize].clone()),
                );
                let factored = factorized_horizontal(c, &left, &right);
                let ok = composite != FAILED
                    && factored
                        .as_ref()
                        .is_ok_and(|f| f == self.cells[composite as usize].h());
                report.check(
                    "translation-factorization",
                    ok,
                    || vec![left.cell().describe(c), right.cell().describe(c)],
                    || "h'' differs from r∘h'∘r".to_string(),
                );
            }
        }
        report
    }
}

/// Exhaustive interchange check over all induced squares of `c`, together
/// with the defining-condition checks on every horizontal composite.
pub fn interchange_suite(c: &FiniteCategory) -> (ValidationReport, Option<GridCounterexample>) {
    let mut atlas = SquareAtlas::new(c);
    let mut report = atlas.defining_condition_report().clone();
    let (sweep, first) = atlas.interchange_sweep();
    report.merge(sweep);
    (report, first)
}
