//! Finite groups as multiplication tables.

use super::InstanceError;

/// A finite group on elements `0..order`. `mul(a, b)` is `a·b`; for
/// permutation groups this is "apply `b`, then `a`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a labelled multiplication table, checking the group axioms.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, InstanceError> {
        let n = labels.len();
        if n == 0 {
            return Err(InstanceError::NotAGroup("empty element list".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(InstanceError::NotAGroup(format!(
                "multiplication table must be {n}×{n}"
            )));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(InstanceError::NotAGroup(format!(
                "product index {bad} out of range"
            )));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| InstanceError::NotAGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for (a, label) in labels.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| InstanceError::NotAGroup(format!("{label} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(InstanceError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table: flat,
            identity,
            inverse,
        })
    }

    /// The cyclic group ℤ/n, elements labelled `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group needs positive order");
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(labels, table).expect("cyclic table is a group")
    }

    /// The symmetric group on `n` letters, elements in lexicographic order of
    /// their image lists and labelled in cycle notation on `1..=n`.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n), "symmetric group limited to n ≤ 5");
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                        index(&ab)
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(labels, table).expect("permutation table is a group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Product of a word, rightmost factor applied first: `product(&[a, b, c]) = a·b·c`.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &w| self.mul(acc, w))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The multiplication table as rows of element indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(<[usize]>::to_vec)
            .collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        s.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            s.push_str(&(i + 1).to_string());
            i = p[i];
        }
        s.push(')');
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_labels_and_composition_convention() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(g.identity()), "e");
        let t12 = g.element("(12)").unwrap();
        let t13 = g.element("(13)").unwrap();
        // Oracle: apply (13) first, then (12), as maps on {1,2,3}.
        let apply = |cycle: &[usize], i: usize| -> usize {
            match cycle.iter().position(|&c| c == i) {
                Some(k) => cycle[(k + 1) % cycle.len()],
                None => i,
            }
        };
        let composite: Vec<usize> = (1..=3).map(|i| apply(&[1, 2], apply(&[1, 3], i))).collect();
        assert_eq!(composite, vec![3, 1, 2]); // 1↦3↦2↦1: the 3-cycle (132)
        assert_eq!(g.label(g.mul(t12, t13)), "(132)");
        assert_eq!(g.label(g.mul(t13, t12)), "(123)");
        assert!(!g.is_abelian());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(labels, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn cyclic_inverses() {
        let g = FiniteGroup::cyclic(4);
        assert!(g.is_abelian());
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.product(&[1, 1, 3, 2]), 3);
    }
}
