//! Discrete bi-holonomy on a rectangular lattice.
//!
//! A lattice connection labels the horizontal edge `(t, s) → (t+1, s)` with
//! `horiz(t, s)` and the vertical edge `(t, s) → (t, s+1)` with `vert(t, s)`.
//! Transports compose right to left, so the word for a path lists its
//! edges last-to-first.

use super::group::FiniteGroup;
use super::{InstanceError, Limits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeConnection {
    t_extent: usize,
    s_extent: usize,
    group: FiniteGroup,
    horiz: Vec<usize>,
    vert: Vec<usize>,
}

impl LatticeConnection {
    /// `horiz[s][t]` for `0 ≤ s ≤ S, 0 ≤ t < T`; `vert[s][t]` for `0 ≤ s < S, 0 ≤ t ≤ T`.
    pub fn new(
        group: FiniteGroup,
        t_extent: usize,
        s_extent: usize,
        horiz: Vec<Vec<usize>>,
        vert: Vec<Vec<usize>>,
        limits: &Limits,
    ) -> Result<Self, InstanceError> {
        if t_extent > limits.max_lattice || s_extent > limits.max_lattice {
            return Err(InstanceError::SizeGuard {
                what: "lattice extent".into(),
                size: t_extent.max(s_extent) as u128,
                limit: limits.max_lattice,
            });
        }
        let n = group.order();
        let shape_ok = |rows: &Vec<Vec<usize>>, r: usize, c: usize| {
            rows.len() == r
                && rows
                    .iter()
                    .all(|row| row.len() == c && row.iter().all(|&v| v < n))
        };
        if !shape_ok(&horiz, s_extent + 1, t_extent) {
            return Err(InstanceError::Invalid(format!(
                "horiz must be {} rows of {} group elements",
                s_extent + 1,
                t_extent
            )));
        }
        if !shape_ok(&vert, s_extent, t_extent + 1) {
            return Err(InstanceError::Invalid(format!(
                "vert must be {} rows of {} group elements",
                s_extent,
                t_extent + 1
            )));
        }
        Ok(LatticeConnection {
            t_extent,
            s_extent,
            group,
            horiz: horiz.into_iter().flatten().collect(),
            vert: vert.into_iter().flatten().collect(),
        })
    }

    /// Every edge labelled with the identity.
    pub fn flat(group: FiniteGroup, t_extent: usize, s_extent: usize) -> Self {
        let e = group.identity();
        Self::new(
            group,
            t_extent,
            s_extent,
            vec![vec![e; t_extent]; s_extent + 1],
            vec![vec![e; t_extent + 1]; s_extent],
            &Limits::unbounded(),
        )
        .expect("flat tables have the right shape")
    }

    /// Builds labels from functions of the edge position.
    pub fn from_fn(
        group: FiniteGroup,
        t_extent: usize,
        s_extent: usize,
        mut horiz: impl FnMut(usize, usize) -> usize,
        mut vert: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, InstanceError> {
        let h = (0..=s_extent)
            .map(|s| (0..t_extent).map(|t| horiz(t, s)).collect())
            .collect();
        let v = (0..s_extent)
            .map(|s| (0..=t_extent).map(|t| vert(t, s)).collect())
            .collect();
        Self::new(group, t_extent, s_extent, h, v, &Limits::default())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn t_extent(&self) -> usize {
        self.t_extent
    }

    pub fn s_extent(&self) -> usize {
        self.s_extent
    }

    pub fn horiz(&self, t: usize, s: usize) -> usize {
        self.horiz[s * self.t_extent + t]
    }

    pub fn vert(&self, t: usize, s: usize) -> usize {
        self.vert[s * (self.t_extent + 1) + t]
    }

    pub fn horiz_rows(&self) -> Vec<Vec<usize>> {
        (0..=self.s_extent)
            .map(|s| (0..self.t_extent).map(|t| self.horiz(t, s)).collect())
            .collect()
    }

    pub fn vert_rows(&self) -> Vec<Vec<usize>> {
        (0..self.s_extent)
            .map(|s| (0..=self.t_extent).map(|t| self.vert(t, s)).collect())
            .collect()
    }

    /// Transport along row `s` from column `t0` to column `t1 ≥ t0`.
    pub fn row_transport(&self, s: usize, t0: usize, t1: usize) -> usize {
        (t0..t1).fold(self.group.identity(), |acc, t| {
            self.group.mul(self.horiz(t, s), acc)
        })
    }

    /// Transport up column `t` from row `s0` to row `s1 ≥ s0`.
    pub fn column_transport(&self, t: usize, s0: usize, s1: usize) -> usize {
        (s0..s1).fold(self.group.identity(), |acc, s| {
            self.group.mul(self.vert(t, s), acc)
        })
    }

    /// Bi-holonomy of the rectangle `[0, t] × [0, s]`: along the bottom, up
    /// the right side, back along the top and down the left side.
    pub fn biholonomy(&self, t: usize, s: usize) -> Result<usize, InstanceError> {
        if t > self.t_extent || s > self.s_extent {
            return Err(InstanceError::OutOfRange { t, s });
        }
        Ok(self.rectangle(0, 0, t, s))
    }

    /// Loop around `[t0, t1] × [s0, s1]` based at its lower-left corner.
    pub fn rectangle(&self, t0: usize, s0: usize, t1: usize, s1: usize) -> usize {
        let g = &self.group;
        let bottom = self.row_transport(s0, t0, t1);
        let up = self.column_transport(t1, s0, s1);
        let top = self.row_transport(s1, t0, t1);
        let left = self.column_transport(t0, s0, s1);
        g.product(&[g.inverse(left), g.inverse(top), up, bottom])
    }

    /// Bi-holonomy of the unit square with lower-left corner `(t, s)`.
    pub fn plaquette_biholonomy(&self, t: usize, s: usize) -> Result<usize, InstanceError> {
        if t >= self.t_extent || s >= self.s_extent {
            return Err(InstanceError::OutOfRange { t, s });
        }
        let g = &self.group;
        Ok(g.product(&[
            g.inverse(self.vert(t, s)),
            g.inverse(self.horiz(t, s + 1)),
            self.vert(t + 1, s),
            self.horiz(t, s),
        ]))
    }

    /// The sub-lattice of columns `t0..=t0+width` and rows `s0..=s0+height`, re-indexed from zero.
    pub fn window(
        &self,
        t0: usize,
        s0: usize,
        width: usize,
        height: usize,
    ) -> Result<Self, InstanceError> {
        if t0 + width > self.t_extent || s0 + height > self.s_extent {
            return Err(InstanceError::OutOfRange {
                t: t0 + width,
                s: s0 + height,
            });
        }
        Self::from_fn(
            self.group.clone(),
            width,
            height,
            |t, s| self.horiz(t0 + t, s0 + s),
            |t, s| self.vert(t0 + t, s0 + s),
        )
    }

    /// `g(t, s)` for every `0 ≤ t ≤ T`, `0 ≤ s ≤ S`, indexed `[t][s]`.
    pub fn biholonomy_table(&self) -> Vec<Vec<usize>> {
        (0..=self.t_extent)
            .map(|t| {
                (0..=self.s_extent)
                    .map(|s| self.rectangle(0, 0, t, s))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pseudo_labels(n: usize, seed: usize) -> impl FnMut(usize, usize) -> usize {
        move |t, s| (t * 7 + s * 13 + seed * 5 + t * s) % n
    }

    #[test]
    fn flat_connection_has_trivial_biholonomy() {
        let l = LatticeConnection::flat(FiniteGroup::symmetric(3), 4, 3);
        for row in l.biholonomy_table() {
            assert!(row.iter().all(|&g| g == l.group().identity()));
        }
    }

    #[test]
    fn degenerate_rectangles_are_trivial() {
        let l = LatticeConnection::from_fn(
            FiniteGroup::symmetric(3),
            3,
            3,
            pseudo_labels(6, 1),
            pseudo_labels(6, 2),
        )
        .unwrap();
        for k in 0..=3 {
            assert_eq!(l.biholonomy(0, k).unwrap(), l.group().identity());
            assert_eq!(l.biholonomy(k, 0).unwrap(), l.group().identity());
        }
        assert!(l.biholonomy(4, 0).is_err());
        assert!(l.plaquette_biholonomy(3, 0).is_err());
    }

    #[test]
    fn plaquette_agrees_with_unit_rectangle() {
        let l = LatticeConnection::from_fn(
            FiniteGroup::symmetric(3),
            3,
            2,
            pseudo_labels(6, 3),
            pseudo_labels(6, 4),
        )
        .unwrap();
        for t in 0..3 {
            for s in 0..2 {
                let w = l.window(t, s, 1, 1).unwrap();
                assert_eq!(
                    l.plaquette_biholonomy(t, s).unwrap(),
                    w.biholonomy(1, 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn single_bottom_edge() {
        // 1×1 lattice over ℤ₄ with only the bottom edge nontrivial: the loop word is just that edge.
        let z4 = FiniteGroup::cyclic(4);
        let l = LatticeConnection::new(
            z4,
            1,
            1,
            vec![vec![3], vec![0]],
            vec![vec![0, 0]],
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(l.plaquette_biholonomy(0, 0).unwrap(), 3);
        assert_eq!(l.biholonomy(1, 1).unwrap(), 3);
    }

    #[test]
    fn size_guard() {
        let z2 = FiniteGroup::cyclic(2);
        assert!(matches!(
            LatticeConnection::from_fn(z2, 33, 1, |_, _| 0, |_, _| 0),
            Err(InstanceError::SizeGuard { .. })
        ));
    }
}
