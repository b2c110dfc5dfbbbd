//! Crossed modules of finite groups and their exhaustive verifier.

use super::group::FiniteGroup;
use super::InstanceError;
use crate::report::ValidationReport;

/// Groups `G`, `H`, a map `τ: H → G` and an action `α: G × H → H`, as tables.
///
/// Construction only checks table shapes; [`CrossedModule::verify`] checks
/// the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: FiniteGroup,
    h: FiniteGroup,
    tau: Vec<usize>,
    alpha: Vec<usize>,
}

impl CrossedModule {
    /// `alpha[g][h]` is `α(g)h`.
    pub fn new(
        g: FiniteGroup,
        h: FiniteGroup,
        tau: Vec<usize>,
        alpha: Vec<Vec<usize>>,
    ) -> Result<Self, InstanceError> {
        let (ng, nh) = (g.order(), h.order());
        if tau.len() != nh || tau.iter().any(|&t| t >= ng) {
            return Err(InstanceError::Invalid(format!(
                "tau must list {nh} elements of G"
            )));
        }
        if alpha.len() != ng
            || alpha
                .iter()
                .any(|row| row.len() != nh || row.iter().any(|&v| v >= nh))
        {
            return Err(InstanceError::Invalid(format!(
                "alpha must be a {ng}×{nh} table of elements of H"
            )));
        }
        Ok(CrossedModule {
            g,
            h,
            tau,
            alpha: alpha.into_iter().flatten().collect(),
        })
    }

    /// `H = G`, `τ = id`, `α(g)h = g h g⁻¹`.
    pub fn conjugation(g: &FiniteGroup) -> Self {
        let n = g.order();
        let alpha = (0..n)
            .map(|a| (0..n).map(|b| g.product(&[a, b, g.inverse(a)])).collect())
            .collect();
        Self::new(g.clone(), g.clone(), (0..n).collect(), alpha).expect("well-shaped tables")
    }

    /// `τ ≡ e` and the trivial action.
    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let tau = vec![g.identity(); h.order()];
        let alpha = (0..g.order()).map(|_| (0..h.order()).collect()).collect();
        Self::new(g.clone(), h.clone(), tau, alpha).expect("well-shaped tables")
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn tau(&self, h: usize) -> usize {
        self.tau[h]
    }

    pub fn alpha(&self, g: usize, h: usize) -> usize {
        self.alpha[g * self.h.order() + h]
    }

    pub fn tau_table(&self) -> &[usize] {
        &self.tau
    }

    pub fn alpha_rows(&self) -> Vec<Vec<usize>> {
        self.alpha
            .chunks(self.h.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Checks that τ is a homomorphism, that α is an action by
    /// automorphisms, and both Peiffer identities, over every tuple.
    pub fn verify(&self) -> ValidationReport {
        let (g, h) = (&self.g, &self.h);
        let (ng, nh) = (g.order(), h.order());
        let gl = |a: usize| g.label(a).to_string();
        let hl = |a: usize| h.label(a).to_string();
        let mut report = ValidationReport::new();

        for a in 0..nh {
            for b in 0..nh {
                let lhs = self.tau(h.mul(a, b));
                let rhs = g.mul(self.tau(a), self.tau(b));
                report.check(
                    "tau-homomorphism",
                    lhs == rhs,
                    || vec![hl(a), hl(b)],
                    || format!("τ(hh') = {}, τ(h)τ(h') = {}", gl(lhs), gl(rhs)),
                );
            }
        }
        for x in 0..ng {
            let mut hit = vec![false; nh];
            for a in 0..nh {
                hit[self.alpha(x, a)] = true;
            }
            report.check(
                "alpha-bijective",
                hit.iter().all(|&b| b),
                || vec![gl(x)],
                || "α(g) is not a bijection of H".to_string(),
            );
            for a in 0..nh {
                for b in 0..nh {
                    let lhs = self.alpha(x, h.mul(a, b));
                    let rhs = h.mul(self.alpha(x, a), self.alpha(x, b));
                    report.check(
                        "alpha-homomorphism",
                        lhs == rhs,
                        || vec![gl(x), hl(a), hl(b)],
                        || format!("α(g)(hh') = {}, α(g)h·α(g)h' = {}", hl(lhs), hl(rhs)),
                    );
                }
            }
        }
        for a in 0..nh {
            report.check(
                "action-unit",
                self.alpha(g.identity(), a) == a,
                || vec![hl(a)],
                || format!("α(e)h = {}", hl(self.alpha(g.identity(), a))),
            );
        }
        for x in 0..ng {
            for y in 0..ng {
                for a in 0..nh {
                    let lhs = self.alpha(g.mul(x, y), a);
                    let rhs = self.alpha(x, self.alpha(y, a));
                    report.check(
                        "action-composition",
                        lhs == rhs,
                        || vec![gl(x), gl(y), hl(a)],
                        || format!("α(gg')h = {}, α(g)α(g')h = {}", hl(lhs), hl(rhs)),
                    );
                }
            }
        }
        for x in 0..ng {
            for a in 0..nh {
                let lhs = self.tau(self.alpha(x, a));
                let rhs = g.product(&[x, self.tau(a), g.inverse(x)]);
                report.check(
                    "peiffer-1",
                    lhs == rhs,
                    || vec![gl(x), hl(a)],
                    || format!("τ(α(g)h) = {}, gτ(h)g⁻¹ = {}", gl(lhs), gl(rhs)),
                );
            }
        }
        for a in 0..nh {
            for b in 0..nh {
                let lhs = self.alpha(self.tau(a), b);
                let rhs = h.product(&[a, b, h.inverse(a)]);
                report.check(
                    "peiffer-2",
                    lhs == rhs,
                    || vec![hl(a), hl(b)],
                    || format!("α(τ(h))h' = {}, hh'h⁻¹ = {}", hl(lhs), hl(rhs)),
                );
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_module_passes_for_every_small_group() {
        for g in [
            FiniteGroup::cyclic(1),
            FiniteGroup::cyclic(4),
            FiniteGroup::symmetric(3),
            FiniteGroup::symmetric(4),
        ] {
            let r = CrossedModule::conjugation(&g).verify();
            assert!(r.is_ok(), "{:?}", r.violations().first());
        }
    }

    #[test]
    fn trivial_tau_with_abelian_h_passes() {
        let r =
            CrossedModule::trivial(&FiniteGroup::symmetric(3), &FiniteGroup::cyclic(4)).verify();
        assert!(r.is_ok());
        assert_eq!(r.checks_for("peiffer-2"), 16);
    }

    #[test]
    fn trivial_tau_with_s3_fails_only_peiffer_2() {
        let s3 = FiniteGroup::symmetric(3);
        let r = CrossedModule::trivial(&s3, &s3).verify();
        assert!(!r.is_ok());
        assert!(r.violations().iter().all(|v| v.law == "peiffer-2"));
        // Oracle: the failing pairs are exactly the non-commuting ones.
        let noncommuting = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .filter(|&(a, b)| s3.mul(a, b) != s3.mul(b, a))
            .count();
        assert_eq!(r.violations().len(), noncommuting);
        assert_eq!(noncommuting, 18);
        let first = &r.violations()[0];
        let a = s3.element(&first.witness[0]).unwrap();
        let b = s3.element(&first.witness[1]).unwrap();
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
    }

    #[test]
    fn broken_tau_is_reported() {
        let z2 = FiniteGroup::cyclic(2);
        // τ sends the generator to itself but the identity to the generator too.
        let cm = CrossedModule::new(
            z2.clone(),
            z2.clone(),
            vec![1, 1],
            vec![vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        let r = cm.verify();
        assert!(r.violations_of("tau-homomorphism").next().is_some());
    }
}
