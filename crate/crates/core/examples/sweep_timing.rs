use std::time::Instant;

use fatcat_core::double::interchange_suite;
use fatcat_core::instances::{group_as_groupoid, matrix_groupoid, FiniteGroup};

fn main() {
    let gl = matrix_groupoid(2, 2, 2).expect("gl2f2").into_category();
    let cases = [
        ("z2", group_as_groupoid(&FiniteGroup::cyclic(2))),
        ("z3", group_as_groupoid(&FiniteGroup::cyclic(3))),
        ("s3", group_as_groupoid(&FiniteGroup::symmetric(3))),
        ("gl2f2", gl),
    ];
    for (name, c) in cases {
        let t = Instant::now();
        let (report, first) = interchange_suite(&c);
        println!(
            "{name}: {} grids, ok={} first={:?} in {:.2?}",
            report.checks_for("interchange"),
            report.is_ok(),
            first.is_some(),
            t.elapsed()
        );
    }
}
