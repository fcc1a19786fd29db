//! Finite quandles as explicit operation tables: dihedral (core) quandles,
//! conjugation subquandles of finite groups, the axiom checker and an
//! isomorphism test with invariant pruning.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::finite::group::FiniteGroup;
use crate::term::QuandleTerm;
use crate::words::Sign;

/// An order-n quandle with `table[x * n + y] = x * y`. The inverse table
/// for `*^-1` is derived from the columns, which must be permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<usize>,
    inv_table: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Why a table fails to be a quandle, with the first witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    NotIdempotent { x: usize },
    ColumnNotBijective { y: usize },
    NotRightDistributive { x: usize, y: usize, z: usize },
}

impl FiniteQuandle {
    /// Build from a raw table without checking the axioms.
    pub fn from_table_unchecked(n: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> FiniteQuandle {
        let mut inv_table = vec![0usize; n * n];
        for y in 0..n {
            for x in 0..n {
                let z = table[x * n + y];
                inv_table[z * n + y] = x;
            }
        }
        FiniteQuandle { n, table, inv_table, labels }
    }

    /// Build from a raw table, verifying all three axiom families.
    pub fn from_table(n: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<FiniteQuandle> {
        let q = FiniteQuandle::from_table_unchecked(n, table, labels);
        match q.check_axioms() {
            Ok(()) => Ok(q),
            Err(w) => Err(Error::Unsupported(format!("not a quandle: {w:?}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.inv_table[x * self.n + y]
    }

    pub fn op_signed(&self, x: usize, sign: Sign, y: usize) -> usize {
        match sign {
            Sign::Pos => self.op(x, y),
            Sign::Neg => self.op_inv(x, y),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// All three axiom families, O(n^3), with a first-failure witness.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomFailure> {
        let n = self.n;
        for x in 0..n {
            if self.op(x, x) != x {
                return Err(AxiomFailure::NotIdempotent { x });
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let z = self.op(x, y);
                if seen[z] {
                    return Err(AxiomFailure::ColumnNotBijective { y });
                }
                seen[z] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op(self.op(x, y), z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Err(AxiomFailure::NotRightDistributive { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluate a left-associated term under an assignment of quandle
    /// elements to generators. Always defined: right translations are
    /// bijective, so the inverse operation is total.
    pub fn eval_term(&self, assign: &[usize], t: &QuandleTerm) -> usize {
        let mut x = assign[t.base.index()];
        for l in &t.tail {
            x = self.op_signed(x, l.sign, assign[l.gen.index()]);
        }
        x
    }

    /// Per-element invariant used to prune isomorphism search: the cycle
    /// type of the right translation by x, how many elements x fixes as an
    /// operator, and how many operators fix x.
    fn profile(&self, x: usize) -> (Vec<usize>, usize, usize) {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut cycle_type = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.op(cur, x);
            }
            cycle_type.push(len);
        }
        cycle_type.sort_unstable();
        let fixes = (0..n).filter(|&y| self.op(y, x) == y).count();
        let fixed_by = (0..n).filter(|&y| self.op(x, y) == x).count();
        (cycle_type, fixes, fixed_by)
    }
}

/// The dihedral (core) quandle on Z/n: `x * y = 2y - x mod n`.
pub fn core_quandle(n: usize) -> FiniteQuandle {
    assert!(n >= 1);
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = (2 * y + n - x % n) % n;
        }
    }
    let q = FiniteQuandle::from_table_unchecked(n, table, None);
    debug_assert!(q.check_axioms().is_ok());
    q
}

/// The trivial quandle `x * y = x` on n elements.
pub fn trivial_quandle(n: usize) -> FiniteQuandle {
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = x;
        }
    }
    FiniteQuandle::from_table_unchecked(n, table, None)
}

/// The conjugation quandle on the closure of the seed elements under
/// conjugation by the whole group: `x * y = y x y^-1`.
pub fn conjugation_dehn_quandle(g: &FiniteGroup, seeds: &[usize]) -> FiniteQuandle {
    let mut members: BTreeSet<usize> = seeds.iter().copied().collect();
    let mut frontier: Vec<usize> = members.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for y in 0..g.order() {
            let z = g.conjugate(x, y);
            if members.insert(z) {
                frontier.push(z);
            }
        }
    }
    let elements: Vec<usize> = members.into_iter().collect();
    let pos = |e: usize| elements.binary_search(&e).unwrap();
    let n = elements.len();
    let mut table = vec![0usize; n * n];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            table[i * n + j] = pos(g.conjugate(x, y));
        }
    }
    let labels = elements.iter().map(|&e| g.perm(e).to_string()).collect();
    let q = FiniteQuandle::from_table_unchecked(n, table, Some(labels));
    debug_assert!(q.check_axioms().is_ok());
    q
}

/// Search for an isomorphism, pruning assignments by element profiles.
pub fn quandle_isomorphic(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let pa: Vec<_> = (0..n).map(|x| a.profile(x)).collect();
    let pb: Vec<_> = (0..n).map(|x| b.profile(x)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: &FiniteQuandle,
        b: &FiniteQuandle,
        pa: &[(Vec<usize>, usize, usize)],
        pb: &[(Vec<usize>, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        let n = a.order();
        if x == n {
            // Deferred products become checkable only once every image is
            // fixed, so finish with a full verification pass.
            return (0..n).all(|u| (0..n).all(|v| b.op(map[u], map[v]) == map[a.op(u, v)]));
        }
        'cand: for y in 0..n {
            if used[y] || pa[x] != pb[y] {
                continue;
            }
            // Consistency against everything already assigned.
            for z in 0..x {
                let w = map[z];
                let img_xz = map[a.op(x, z)];
                if img_xz != usize::MAX && b.op(y, w) != img_xz {
                    continue 'cand;
                }
                let img_zx = map[a.op(z, x)];
                if img_zx != usize::MAX && b.op(w, y) != img_zx {
                    continue 'cand;
                }
            }
            map[x] = y;
            used[y] = true;
            if extend(a, b, pa, pb, map, used, x + 1) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if extend(a, b, &pa, &pb, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_quandle_values() {
        let q3 = core_quandle(3);
        assert_eq!(q3.op(0, 1), 2);
        let q1 = core_quandle(1);
        assert_eq!(q1.order(), 1);
        assert_eq!(q1.op(0, 0), 0);
        let q4 = core_quandle(4);
        assert_eq!(q4.op(1, 3), 1); // 2*3 - 1 = 5 = 1 mod 4
    }

    #[test]
    fn axiom_checker_flags_constant_column() {
        let n = 2;
        // x * y = 0 for all x, y: column not bijective.
        let t = vec![0, 0, 0, 0];
        let q = FiniteQuandle::from_table_unchecked(n, t, None);
        assert!(matches!(
            q.check_axioms(),
            Err(AxiomFailure::NotIdempotent { .. }) | Err(AxiomFailure::ColumnNotBijective { .. })
        ));
    }

    #[test]
    fn conjugation_quandle_of_d3_is_core3() {
        let (g, s1, s2) = FiniteGroup::dihedral(3).unwrap();
        let q = conjugation_dehn_quandle(&g, &[s1, s2]);
        assert_eq!(q.order(), 3);
        assert!(quandle_isomorphic(&q, &core_quandle(3)).is_some());
    }

    #[test]
    fn conjugation_quandle_of_abelian_group_is_trivial() {
        // Z4 as a cyclic permutation group.
        let r = crate::finite::group::Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        let g = FiniteGroup::from_generators(4, vec![r]).unwrap();
        let gens = g.generator_elements().to_vec();
        let q = conjugation_dehn_quandle(&g, &gens);
        for x in 0..q.order() {
            for y in 0..q.order() {
                assert_eq!(q.op(x, y), x);
            }
        }
    }

    #[test]
    fn s4_transpositions_give_six_elements() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let seed = g.generator_elements()[0];
        let q = conjugation_dehn_quandle(&g, &[seed]);
        assert_eq!(q.order(), 6);
        assert!(q.check_axioms().is_ok());
    }

    #[test]
    fn core3_not_isomorphic_to_trivial3() {
        assert!(quandle_isomorphic(&core_quandle(3), &trivial_quandle(3)).is_none());
    }

    #[test]
    fn identity_isomorphism_exists() {
        let q = core_quandle(5);
        assert!(quandle_isomorphic(&q, &q).is_some());
    }

    #[test]
    fn dihedral_conjugation_matches_core_up_to_12() {
        for n in 1..=12 {
            let (g, s1, s2) = FiniteGroup::dihedral(n).unwrap();
            let q = conjugation_dehn_quandle(&g, &[s1, s2]);
            assert_eq!(q.order(), n, "n = {n}");
            assert!(
                quandle_isomorphic(&q, &core_quandle(n)).is_some(),
                "n = {n}"
            );
        }
    }
}
