//! Concrete finite groups as permutation groups. Matrix groups over Z/m are
//! converted to permutations of column vectors so a single multiplication
//! path serves everything.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{GroupWord, Sign};

/// A permutation of `0..degree`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Function composition: `(a.compose(b))(x) = a(b(x))`, so the product
    /// of group words multiplies left factors on the outside.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// Build from disjoint cycles over 1-indexed points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        for cyc in cycles {
            for w in 0..cyc.len() {
                let a = cyc[w];
                let b = cyc[(w + 1) % cyc.len()];
                if a == 0 || b == 0 || a > degree || b > degree {
                    return Err(Error::Unsupported(format!(
                        "cycle point out of range 1..{degree}"
                    )));
                }
                img[a - 1] = (b - 1) as u32;
            }
        }
        Ok(Perm(img))
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A finite group given by generator permutations, with the full element
/// list computed once by closure.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
}

const MAX_GROUP_ORDER: usize = 200_000;

impl FiniteGroup {
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<FiniteGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Unsupported("generator degree mismatch".into()));
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let cur = elements[frontier].clone();
            frontier += 1;
            for g in &gens {
                let next = cur.compose(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    if elements.len() > MAX_GROUP_ORDER {
                        return Err(Error::Unsupported("group closure too large".into()));
                    }
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup { degree, elements, index, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn perm(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generator_elements(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_index(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        let p = self.elements[a].inverse();
        self.index[&p]
    }

    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        // y x y^-1
        self.mul(self.mul(y, x), self.inv(y))
    }

    /// Evaluate a signed word under the given generator images.
    pub fn eval_word(&self, images: &[usize], w: &GroupWord) -> usize {
        let mut acc = self.identity();
        for l in &w.0 {
            let g = images[l.gen.index()];
            let g = match l.sign {
                Sign::Pos => g,
                Sign::Neg => self.inv(g),
            };
            acc = self.mul(acc, g);
        }
        acc
    }

    /// The symmetric group on `1..=n` points, generated by adjacent
    /// transpositions.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            gens.push(Perm::from_cycles(n, &[vec![i + 1, i + 2]])?);
        }
        FiniteGroup::from_generators(n, gens)
    }

    /// Adjacent transposition images `(i, i+1)` in the symmetric group on
    /// `n` points, one per `i = 1..n-1`.
    pub fn transposition_images(n: usize) -> Result<Vec<Perm>> {
        (0..n - 1)
            .map(|i| Perm::from_cycles(n, &[vec![i + 1, i + 2]]))
            .collect()
    }

    /// The dihedral group of order 2n acting on itself; the two returned
    /// generator indices are the standard reflections whose product is a
    /// rotation by one step. The regular action keeps the representation
    /// faithful for every n >= 1.
    pub fn dihedral(n: usize) -> Result<(FiniteGroup, usize, usize)> {
        assert!(n >= 1);
        // Elements (k, b) = rotation^k * flip^b, numbered k + n*b.
        let order = 2 * n;
        let point = |k: usize, b: usize| (k % n) + n * b;
        // Left multiplication by s1 = flip (k, b) -> ?
        // Model reflections r0: x -> -x and r1: x -> 1 - x on Z_n; the
        // rotation r1*r0 shifts by 1. In (k, b) coordinates with element
        // value x -> (-1)^b x + k acting on Z_n:
        //   (k, b) * (k', b') = (k + (-1)^b k', b + b')
        // and left multiplication by an element g sends (k', b') to
        // g * (k', b').
        let mul = |(k, b): (usize, usize), (k2, b2): (usize, usize)| -> (usize, usize) {
            let sign: i64 = if b == 1 { -1 } else { 1 };
            let k3 = ((k as i64 + sign * k2 as i64).rem_euclid(n as i64)) as usize;
            (k3, (b + b2) % 2)
        };
        let left_mult = |g: (usize, usize)| -> Perm {
            let mut img = vec![0u32; order];
            for k in 0..n {
                for b in 0..2 {
                    let (k3, b3) = mul(g, (k, b));
                    img[point(k, b)] = point(k3, b3) as u32;
                }
            }
            Perm(img)
        };
        // s1 = r0 = (0, 1), s2 = r1 = (1, 1); s1*s2 = rotation by -1,
        // of order n, as required by (s1 s2)^n = 1.
        let s1 = left_mult((0, 1));
        let s2 = left_mult((1, 1));
        let group = FiniteGroup::from_generators(order, vec![s1.clone(), s2.clone()])?;
        let i1 = group.element_index(&s1).unwrap();
        let i2 = group.element_index(&s2).unwrap();
        Ok((group, i1, i2))
    }

    /// Convert 2x2 matrices over Z/m into permutations of the m^2 column
    /// vectors and return the generated group together with the images.
    pub fn from_sl2_matrices(m: u64, mats: &[[[i64; 2]; 2]]) -> Result<(FiniteGroup, Vec<Perm>)> {
        let mm = m as i64;
        let degree = (m * m) as usize;
        let perm_of = |mat: &[[i64; 2]; 2]| -> Perm {
            let mut img = vec![0u32; degree];
            for a in 0..mm {
                for b in 0..mm {
                    let a2 = (mat[0][0] * a + mat[0][1] * b).rem_euclid(mm);
                    let b2 = (mat[1][0] * a + mat[1][1] * b).rem_euclid(mm);
                    img[(a * mm + b) as usize] = (a2 * mm + b2) as u32;
                }
            }
            Perm(img)
        };
        let images: Vec<Perm> = mats.iter().map(perm_of).collect();
        let group = FiniteGroup::from_generators(degree, images.clone())?;
        Ok((group, images))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
    }

    #[test]
    fn dihedral_orders_and_relations() {
        for n in 1..=8 {
            let (g, s1, s2) = FiniteGroup::dihedral(n).unwrap();
            assert_eq!(g.order(), 2 * n);
            assert_eq!(g.mul(s1, s1), g.identity());
            assert_eq!(g.mul(s2, s2), g.identity());
            let mut rot = g.mul(s1, s2);
            let mut k = 1;
            while rot != g.identity() {
                rot = g.mul(rot, g.mul(s1, s2));
                k += 1;
            }
            assert_eq!(k, n, "s1 s2 must have order n");
        }
    }

    #[test]
    fn sl2_mod5_has_order_120() {
        let a = [[1, 1], [0, 1]];
        let b = [[1, 0], [-1, 1]];
        let (g, _) = FiniteGroup::from_sl2_matrices(5, &[a, b]).unwrap();
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn perm_cycle_roundtrip() {
        let p = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let q = Perm::from_cycles(4, &p.cycles()).unwrap();
        assert_eq!(p, q);
    }
}
