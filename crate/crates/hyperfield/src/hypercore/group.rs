use std::collections::BTreeSet;

use super::TableError;

/// Finite abelian group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a Cayley table: closure, associativity, identity, inverses,
    /// commutativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, TableError> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(TableError::Shape("group table must be n x n with n >= 1".into()));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(TableError::Shape("group table entry out of range".into()));
        }
        let t: Vec<usize> = table.into_iter().flatten().collect();
        let op = |a: usize, b: usize| t[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| op(e, x) == x))
            .ok_or_else(|| TableError::NotAGroup("no identity".into()))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| op(x, y) == identity)
                .ok_or_else(|| TableError::NotAGroup(format!("{} has no inverse", labels[x])))?;
        }
        for a in 0..n {
            for b in 0..n {
                if op(a, b) != op(b, a) {
                    return Err(TableError::NotAGroup("not commutative".into()));
                }
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(TableError::NotAGroup("not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table: t, identity, inverse })
    }

    /// Additive Z/n with labels `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup { labels, table, identity: 0, inverse }
    }

    /// Direct product; element `(a, b)` has index `a * |h| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order(), h.order());
        let labels = (0..m)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", g.labels[a], h.labels[b]))
            .collect();
        let idx = |a: usize, b: usize| a * k + b;
        let mut table = vec![0; m * k * m * k];
        for x in 0..m * k {
            for y in 0..m * k {
                table[x * m * k + y] = idx(g.op(x / k, y / k), h.op(x % k, y % k));
            }
        }
        let inverse = (0..m * k).map(|x| idx(g.inv(x / k), h.inv(x % k))).collect();
        FiniteGroup { labels, table, identity: idx(g.identity, h.identity), inverse }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.op(a, b))))
    }

    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        let n = self.order();
        if f.len() != n || f.iter().collect::<BTreeSet<_>>().len() != n {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == self.op(f[a], f[b])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(g.generated(&[2]), vec![0, 2, 4]);
        assert!(g.is_subgroup(&[0, 3]));
        assert!(!g.is_subgroup(&[0, 1]));
        let v = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(v.order(), 4);
        assert!((0..4).all(|x| v.op(x, x) == v.identity()));
        let rebuilt = FiniteGroup::from_table(
            v.labels().to_vec(),
            (0..4).map(|a| (0..4).map(|b| v.op(a, b)).collect()).collect(),
        )
        .unwrap();
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn rejects_non_groups() {
        let l = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table(l.clone(), vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(l, vec![vec![0, 1]]).is_err());
    }
}
