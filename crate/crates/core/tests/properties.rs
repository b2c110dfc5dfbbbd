use fatcat_core::double::{horizontal_compose, induced_squares, vertical_compose_squares, Square};
use fatcat_core::fat::{fat_objects, induced_from_square, vertical_compose, FatMorphism};
use fatcat_core::instances::{
    direct_sum_family, group_as_groupoid, matrix_groupoid, FiniteGroup, LatticeConnection, Limits,
};
use fatcat_core::monoidal::tensor_fat_objects;
use fatcat_core::{FiniteCategory, MorId, ObjId};
use proptest::prelude::*;

fn s3() -> FiniteCategory {
    group_as_groupoid(&FiniteGroup::symmetric(3))
}

fn gl2f2_two() -> FiniteCategory {
    matrix_groupoid(2, 2, 2).unwrap().into_category()
}

/// Three vertically stackable induced squares, chosen by index.
fn stack(c: &FiniteCategory, f: usize, gs: [usize; 6]) -> [FatMorphism; 3] {
    let m = c.morphism_count();
    let pick = |x: ObjId, k: usize| {
        let out: Vec<MorId> = c.objects().flat_map(|y| c.hom_set(x, y).to_vec()).collect();
        out[k % out.len()]
    };
    let mut top = MorId(f % m);
    let mut cells = Vec::new();
    for i in 0..3 {
        let g1 = pick(c.dom(top), gs[2 * i]);
        let g2 = pick(c.cod(top), gs[2 * i + 1]);
        let bottom = c.compose_path(&[c.inverse(g1).unwrap(), top, g2]).unwrap();
        cells.push(induced_from_square(c, top, bottom, g1, g2).unwrap());
        top = bottom;
    }
    cells.try_into().unwrap()
}

proptest! {
    #[test]
    fn vertical_composition_is_associative(f in 0usize..24, gs in prop::array::uniform6(0usize..12)) {
        let c = gl2f2_two();
        let [a, b, d] = stack(&c, f, gs);
        let left = vertical_compose(&c, &d, &vertical_compose(&c, &b, &a).unwrap()).unwrap();
        let right = vertical_compose(&c, &vertical_compose(&c, &d, &b).unwrap(), &a).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn vertical_identities_are_units(f in 0usize..24, gs in prop::array::uniform6(0usize..12)) {
        let c = gl2f2_two();
        let [a, _, _] = stack(&c, f, gs);
        let id_src = FatMorphism::identity(&c, a.src());
        let id_dst = FatMorphism::identity(&c, a.dst());
        prop_assert_eq!(&vertical_compose(&c, &a, &id_src).unwrap(), &a);
        prop_assert_eq!(&vertical_compose(&c, &id_dst, &a).unwrap(), &a);
    }

    #[test]
    fn horizontal_composites_keep_the_defining_condition(i in 0usize..3456, j in 0usize..144) {
        let c = gl2f2_two();
        let squares = induced_squares(&c);
        let left = &squares[i];
        let partners: Vec<&Square> = squares.iter().filter(|s| s.g1() == left.g2()).collect();
        let right = partners[j % partners.len()];
        let hc = horizontal_compose(&c, left, right).unwrap();
        let top = c.compose(right.top(), left.top()).unwrap();
        let bottom = c.compose(right.bottom(), left.bottom()).unwrap();
        prop_assert_eq!(hc.h().apply(&c, top).unwrap(), bottom);
    }

    #[test]
    fn vertical_squares_of_squares_stay_squares(i in 0usize..216, j in 0usize..36) {
        let c = s3();
        let squares = induced_squares(&c);
        let upper = &squares[i];
        let lowers: Vec<&Square> = squares.iter().filter(|s| s.top() == upper.bottom()).collect();
        let v = vertical_compose_squares(&c, lowers[j % lowers.len()], upper).unwrap();
        prop_assert!(Square::new(&c, v.into_cell()).is_ok());
    }

    #[test]
    fn inversion_is_an_involution(n in 1usize..12) {
        let c = group_as_groupoid(&FiniteGroup::cyclic(n));
        for f in c.morphisms() {
            let inv = c.inverse(f).unwrap();
            prop_assert_eq!(c.inverse(inv), Some(f));
            prop_assert_eq!(c.compose(inv, f).unwrap(), c.identity(ObjId(0)));
        }
    }

    #[test]
    fn abelian_biholonomy_is_the_plaquette_product(
        t_ext in 1usize..6,
        s_ext in 1usize..6,
        seed in any::<u64>(),
    ) {
        let z = FiniteGroup::cyclic(4);
        let label = |t: usize, s: usize, k: u64| {
            ((seed ^ k).wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add((t * 31 + s * 17) as u64) >> 7) as usize % 4
        };
        let l = LatticeConnection::from_fn(z.clone(), t_ext, s_ext, |t, s| label(t, s, 1), |t, s| label(t, s, 2)).unwrap();
        for t in 0..=t_ext {
            for s in 0..=s_ext {
                let mut oracle = 0;
                for a in 0..t {
                    for b in 0..s {
                        oracle = (oracle + l.plaquette_biholonomy(a, b).unwrap()) % 4;
                    }
                }
                prop_assert_eq!(l.biholonomy(t, s).unwrap(), oracle);
            }
        }
    }

    #[test]
    fn rectangles_paste_horizontally_over_s3(
        t1 in 0usize..4,
        t2 in 0usize..4,
        s in 0usize..4,
        horiz in prop::collection::vec(0usize..6, 40),
        vert in prop::collection::vec(0usize..6, 40),
    ) {
        let g = FiniteGroup::symmetric(3);
        let width = t1 + t2;
        let l = LatticeConnection::from_fn(
            g.clone(), width, 3,
            |t, s| horiz[(t * 5 + s) % 40],
            |t, s| vert[(t * 7 + s * 3) % 40],
        ).unwrap();
        let left = l.rectangle(0, 0, t1, s);
        let right = l.window(t1, 0, t2, 3).unwrap().biholonomy(t2, s).unwrap();
        let base = l.row_transport(0, 0, t1);
        let pasted = g.product(&[left, g.inverse(base), right, base]);
        prop_assert_eq!(l.biholonomy(width, s).unwrap(), pasted);
        prop_assert_eq!(l.rectangle(t1, 0, width, s), right);
    }
}

#[test]
fn instance_builders_always_validate() {
    for c in [
        group_as_groupoid(&FiniteGroup::cyclic(1)),
        group_as_groupoid(&FiniteGroup::cyclic(2)),
        s3(),
        matrix_groupoid(3, 1, 2).unwrap().into_category(),
        gl2f2_two(),
    ] {
        let r = c.validate();
        assert!(r.is_ok(), "{:?}", r.violations().first());
        assert!(c.is_groupoid());
    }
}

#[test]
fn direct_sum_matches_block_matrix_oracle() {
    let (grp, m) = direct_sum_family(2, 2, &Limits::default()).unwrap();
    let c = m.base();
    let d1 = ObjId(1);
    let one = c.hom_set(d1, d1)[0];
    for f in c.morphisms() {
        for g in c.morphisms() {
            let Some(fg) = m.tensor_mor(f, g) else {
                assert!(grp.dim(c.dom(f)) + grp.dim(c.dom(g)) > 2);
                continue;
            };
            let (a, b) = (grp.matrix(f), grp.matrix(g));
            let n = a.dim() + b.dim();
            // Oracle: place the blocks by hand.
            let mut block = vec![0u32; n * n];
            for r in 0..a.dim() {
                for k in 0..a.dim() {
                    block[r * n + k] = a.get(r, k);
                }
            }
            for r in 0..b.dim() {
                for k in 0..b.dim() {
                    block[(a.dim() + r) * n + a.dim() + k] = b.get(r, k);
                }
            }
            assert_eq!(grp.matrix(fg).entries(), block.as_slice());
        }
    }
    // Bifunctoriality on the 1 ⊕ 1 block against matrix multiplication.
    for &f in c.hom_set(d1, d1) {
        for &g in c.hom_set(d1, d1) {
            let lhs = c
                .compose(m.tensor_mor(g, f).unwrap(), m.tensor_mor(one, one).unwrap())
                .unwrap();
            let rhs = m
                .tensor_mor(c.compose(g, one).unwrap(), c.compose(f, one).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    for x in fat_objects(c) {
        for y in fat_objects(c) {
            if let Ok(t) = tensor_fat_objects(&m, x, y) {
                let expected = grp.matrix(x.f).direct_sum(grp.matrix(y.f));
                assert_eq!(grp.matrix(t.f), &expected);
            }
        }
    }
}
