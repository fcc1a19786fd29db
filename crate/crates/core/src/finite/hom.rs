//! Counting quandle homomorphisms (colorings) from a presented quandle
//! into a finite quandle, by backtracking with relation propagation.

use crate::finite::quandle::FiniteQuandle;
use crate::presentation::QuandlePresentation;
use crate::term::QuandleRelation;

/// Hom counts into a list of named targets; equality of these vectors is
/// the workhorse consistency check between presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCountVector(pub Vec<(String, u64)>);

/// Number of generator assignments into `target` satisfying every relation.
///
/// Generators are assigned in decreasing order of how often they occur in
/// relations; after each assignment every relation whose generators are all
/// assigned is evaluated, so contradictions prune entire subtrees.
pub fn hom_count(q: &QuandlePresentation, target: &FiniteQuandle) -> u64 {
    let ngens = q.rank();
    if ngens == 0 {
        return 1;
    }
    let n = target.order();
    // Occurrence counts drive the assignment order.
    let mut occ = vec![0usize; ngens];
    for rel in &q.relations {
        for t in [&rel.lhs, &rel.rhs] {
            occ[t.base.index()] += 1;
            for l in &t.tail {
                occ[l.gen.index()] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..ngens).collect();
    order.sort_by_key(|&g| std::cmp::Reverse(occ[g]));
    let mut rank = vec![0usize; ngens];
    for (i, &g) in order.iter().enumerate() {
        rank[g] = i;
    }
    // A relation becomes checkable once all its generators are assigned.
    let ready_at = |rel: &QuandleRelation| -> usize {
        let mut last = 0;
        for t in [&rel.lhs, &rel.rhs] {
            last = last.max(rank[t.base.index()]);
            for l in &t.tail {
                last = last.max(rank[l.gen.index()]);
            }
        }
        last
    };
    let mut by_depth: Vec<Vec<&QuandleRelation>> = vec![Vec::new(); ngens];
    for rel in &q.relations {
        by_depth[ready_at(rel)].push(rel);
    }

    let mut assign = vec![0usize; ngens];
    fn go(
        depth: usize,
        order: &[usize],
        by_depth: &[Vec<&QuandleRelation>],
        assign: &mut Vec<usize>,
        target: &FiniteQuandle,
        n: usize,
    ) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            assign[order[depth]] = v;
            let ok = by_depth[depth]
                .iter()
                .all(|rel| target.eval_term(assign, &rel.lhs) == target.eval_term(assign, &rel.rhs));
            if ok {
                total += go(depth + 1, order, by_depth, assign, target, n);
            }
        }
        total
    }
    go(0, &order, &by_depth, &mut assign, target, n)
}

/// Hom counts from one finite quandle into another, parameterized by a
/// generating set of the source: assignments of the generators that extend
/// to a (necessarily unique) homomorphism.
pub fn hom_count_tables(source: &FiniteQuandle, source_gens: &[usize], target: &FiniteQuandle) -> u64 {
    // Every source element must be reachable from the generators.
    let reach = generated_closure(source, source_gens);
    assert_eq!(reach.len(), source.order(), "generators must generate the source");
    let n = target.order();
    let k = source_gens.len();
    let mut count = 0u64;
    let mut choice = vec![0usize; k];
    'outer: loop {
        // Try to extend the generator assignment to all of the source.
        let mut img = vec![usize::MAX; source.order()];
        let mut seed_ok = true;
        for (i, &g) in source_gens.iter().enumerate() {
            if img[g] != usize::MAX && img[g] != choice[i] {
                // Two generators equal in the source but assigned apart.
                seed_ok = false;
                break;
            }
            img[g] = choice[i];
        }
        if seed_ok && extend_hom(source, target, &mut img) {
            count += 1;
        }
        // Odometer over the generator images.
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
    count
}

fn generated_closure(q: &FiniteQuandle, gens: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; q.order()];
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for &g in gens {
        if !in_set[g] {
            in_set[g] = true;
            out.push(g);
            stack.push(g);
        }
    }
    while let Some(x) = stack.pop() {
        let snapshot: Vec<usize> = out.clone();
        for &y in &snapshot {
            for z in [q.op(x, y), q.op_inv(x, y), q.op(y, x), q.op_inv(y, x)] {
                if !in_set[z] {
                    in_set[z] = true;
                    out.push(z);
                    stack.push(z);
                }
            }
        }
    }
    out
}

fn extend_hom(source: &FiniteQuandle, target: &FiniteQuandle, img: &mut [usize]) -> bool {
    // Propagate images through products until stable, then check totally.
    let n = source.order();
    loop {
        let mut changed = false;
        for x in 0..n {
            if img[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if img[y] == usize::MAX {
                    continue;
                }
                let z = source.op(x, y);
                let w = target.op(img[x], img[y]);
                if img[z] == usize::MAX {
                    img[z] = w;
                    changed = true;
                } else if img[z] != w {
                    return false;
                }
                let z = source.op_inv(x, y);
                let w = target.op_inv(img[x], img[y]);
                if img[z] == usize::MAX {
                    img[z] = w;
                    changed = true;
                } else if img[z] != w {
                    return false;
                }
            }
        }
        if !changed {
            break;
        }
    }
    img.iter().all(|&v| v != usize::MAX)
}
