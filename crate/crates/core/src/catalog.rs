//! Built-in presentations: braid and Artin monoids, torus knot and link
//! monoids, the two mixed Garside monoids, dihedral and surface groups,
//! mapping class groups, right-angled Artin groups, and the expected
//! quandle presentations used as goldens by the verification suite.

use crate::centralizer::QuotientSpec;
use crate::error::{Error, Result};
use crate::finite::group::{FiniteGroup, Perm};
use crate::format::{Kind, PresentationFile};
use crate::presentation::{Complement, MonoidPresentation, QuandlePresentation};
use crate::term::{QuandleRelation, QuandleTerm};
use crate::words::{Gen, GroupWord, Letter, PositiveWord, Sign, Symbols};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// The alternating word `(f s f s ...)` of the given length, starting with
/// `first`.
fn alternating(first: Gen, second: Gen, len: usize) -> PositiveWord {
    PositiveWord(
        (0..len)
            .map(|i| if i % 2 == 0 { first } else { second })
            .collect(),
    )
}

/// Artin monoid from a Coxeter matrix; `0` entries mean no relation.
/// The complement is the standard right lcm selector `f(s,t) = (ts)_{m-1}`,
/// present only when every off-diagonal entry is finite.
pub fn artin_monoid(gen_names: &[String], coxeter: &[Vec<usize>]) -> MonoidPresentation {
    let symbols = Symbols::from_names(gen_names.iter().cloned()).expect("distinct names");
    let n = symbols.len();
    let mut m = MonoidPresentation::new(symbols);
    let spherical_data = coxeter
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &mij)| i == j || mij >= 2));
    for i in 0..n {
        for j in (i + 1)..n {
            let mij = coxeter[i][j];
            if mij >= 2 {
                let s = Gen(i as u32);
                let t = Gen(j as u32);
                m.relations
                    .push((alternating(s, t, mij), alternating(t, s, mij)));
            }
        }
    }
    if spherical_data {
        let mut c = Complement::new(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let s = Gen(i as u32);
                    let t = Gen(j as u32);
                    c.set(s, t, alternating(t, s, coxeter[i][j] - 1)).expect("valid entry");
                }
            }
        }
        m.complement = Some(c);
    }
    m
}

fn coxeter_matrix_a(n: usize) -> Vec<Vec<usize>> {
    let mut m = vec![vec![2; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
        if i + 1 < n {
            row[i + 1] = 3;
        }
        if i >= 1 {
            row[i - 1] = 3;
        }
    }
    m
}

fn coxeter_matrix_b(n: usize) -> Vec<Vec<usize>> {
    let mut m = coxeter_matrix_a(n);
    if n >= 2 {
        m[0][1] = 4;
        m[1][0] = 4;
    }
    m
}

/// The braid monoid on n strands with its Artin generators, complement and
/// Garside element.
pub fn braid_monoid(n: usize) -> MonoidPresentation {
    assert!(n >= 2);
    let k = n - 1;
    let mut m = artin_monoid(&names("s", k), &coxeter_matrix_a(k));
    // Delta = s1 (s2 s1) (s3 s2 s1) ...
    let mut delta = Vec::new();
    for i in 0..k {
        for j in (0..=i).rev() {
            delta.push(Gen(j as u32));
        }
    }
    m.delta = Some(PositiveWord(delta));
    m
}

/// `<x, y | x^p = y^q>` with complement `f(x,y) = x^{p-1}` and Garside
/// element `x^p`.
pub fn torus_knot_monoid(p: usize, q: usize) -> MonoidPresentation {
    assert!(p >= 2 && q >= 2);
    let symbols = Symbols::from_names(["x", "y"]).unwrap();
    let x = Gen(0);
    let y = Gen(1);
    let mut m = MonoidPresentation::new(symbols);
    m.relations.push((
        PositiveWord::single(x).pow(p),
        PositiveWord::single(y).pow(q),
    ));
    let mut c = Complement::new(2);
    c.set(x, y, PositiveWord::single(x).pow(p - 1)).unwrap();
    c.set(y, x, PositiveWord::single(y).pow(q - 1)).unwrap();
    m.complement = Some(c);
    m.delta = Some(PositiveWord::single(x).pow(p));
    m
}

fn cyclic_gen(n: usize, i: usize) -> Gen {
    Gen(((i - 1) % n) as u32)
}

/// `prod(x_i, x_{i+1}, ...; m)`: m letters starting at x_i, indices cyclic.
fn prod_word(n: usize, start: usize, m: usize) -> PositiveWord {
    PositiveWord((0..m).map(|k| cyclic_gen(n, start + k)).collect())
}

/// The torus link monoid: all cyclic rotations of the length-m product are
/// equal. Its group of fractions is the torus link group T(n, m).
pub fn torus_link_monoid(n: usize, m: usize) -> MonoidPresentation {
    assert!(n >= 2 && m >= 2);
    let symbols = Symbols::from_names(names("x", n)).unwrap();
    let mut mp = MonoidPresentation::new(symbols);
    let first = prod_word(n, 1, m);
    for start in 2..=n {
        mp.relations.push((first.clone(), prod_word(n, start, m)));
    }
    let mut c = Complement::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if cyclic_gen(n, i) != cyclic_gen(n, j) {
                // f(x_i, x_j) = x_{i+1} ... x_{i+m-1}, independent of j.
                c.set(cyclic_gen(n, i), cyclic_gen(n, j), prod_word(n, i + 1, m - 1))
                    .unwrap();
            }
        }
    }
    mp.complement = Some(c);
    mp.delta = Some(first);
    mp
}

/// `<x1, x2, y1, y2, y3 | x1^2 = x2^5 = y1y2y3y1 = y2y3y1y2 = y3y1y2y3>`.
pub fn mixed_ex3_monoid() -> MonoidPresentation {
    let symbols = Symbols::from_names(["x1", "x2", "y1", "y2", "y3"]).unwrap();
    let x1 = Gen(0);
    let x2 = Gen(1);
    let y = |i: usize| Gen(2 + ((i - 1) % 3) as u32);
    let mut m = MonoidPresentation::new(symbols);
    let w_x1 = PositiveWord::single(x1).pow(2);
    let yprod = |start: usize| PositiveWord((0..4).map(|k| y(start + k)).collect());
    m.relations.push((w_x1.clone(), PositiveWord::single(x2).pow(5)));
    for start in 1..=3 {
        m.relations.push((w_x1.clone(), yprod(start)));
    }
    let mut c = Complement::new(5);
    let f_of = |g: Gen| -> PositiveWord {
        if g == x1 {
            PositiveWord::single(x1)
        } else if g == x2 {
            PositiveWord::single(x2).pow(4)
        } else {
            let i = (g.0 - 2) as usize + 1;
            PositiveWord((0..3).map(|k| y(i + 1 + k)).collect())
        }
    };
    for s in 0..5u32 {
        for t in 0..5u32 {
            if s != t {
                c.set(Gen(s), Gen(t), f_of(Gen(s))).unwrap();
            }
        }
    }
    m.complement = Some(c);
    m.delta = Some(w_x1);
    m
}

/// The free product of Artin monoids of Coxeter types B3 and A3 with their
/// squared and cubed Garside elements identified.
pub fn mixed_ex4_monoid() -> MonoidPresentation {
    let symbols =
        Symbols::from_names(["x1", "x2", "x3", "y1", "y2", "y3"]).unwrap();
    let x = |i: usize| Gen(((i - 1) % 3) as u32);
    let y = |i: usize| Gen(3 + ((i - 1) % 3) as u32);
    let mut m = MonoidPresentation::new(symbols);
    let alt = |a: Gen, b: Gen, len: usize| alternating(a, b, len);
    // Artin relations of type B3 on the x block: m12 = 4, m13 = 2, m23 = 3.
    m.relations.push((alt(x(1), x(2), 4), alt(x(2), x(1), 4)));
    m.relations.push((alt(x(1), x(3), 2), alt(x(3), x(1), 2)));
    m.relations.push((alt(x(2), x(3), 3), alt(x(3), x(2), 3)));
    // Artin relations of type A3 on the y block.
    m.relations.push((alt(y(1), y(2), 3), alt(y(2), y(1), 3)));
    m.relations.push((alt(y(1), y(3), 2), alt(y(3), y(1), 2)));
    m.relations.push((alt(y(2), y(3), 3), alt(y(3), y(2), 3)));
    // (x1 x2 x3)^6 = (y1 y2 y3 y1 y2 y1)^3.
    let delta1_sq = PositiveWord(vec![x(1), x(2), x(3)]).pow(6);
    let delta2 = PositiveWord(vec![y(1), y(2), y(3), y(1), y(2), y(1)]);
    m.relations.push((delta1_sq.clone(), delta2.pow(3)));
    let mut c = Complement::new(6);
    // Within each Artin block, the usual selector.
    let artin_pairs: &[(Gen, Gen, usize)] = &[
        (x(1), x(2), 4),
        (x(1), x(3), 2),
        (x(2), x(3), 3),
        (y(1), y(2), 3),
        (y(1), y(3), 2),
        (y(2), y(3), 3),
    ];
    for &(s, t, mij) in artin_pairs {
        c.set(s, t, alternating(t, s, mij - 1)).unwrap();
        c.set(t, s, alternating(s, t, mij - 1)).unwrap();
    }
    // Across the blocks the right lcm is the identified element
    // Delta1^2 = Delta2^3, giving 17-letter complements.
    for i in 1..=3 {
        let fx = PositiveWord((1..=17).map(|k| x(i + k)).collect());
        for j in 1..=3 {
            c.set(x(i), y(j), fx.clone()).unwrap();
        }
    }
    for k in 1..=2 {
        let fy = PositiveWord((0..17).map(|d| y(k + 17 - d)).collect());
        for j in 1..=3 {
            c.set(y(k), x(j), fy.clone()).unwrap();
        }
    }
    let fy3 = PositiveWord((1..=17).map(|k| y(k)).collect());
    for j in 1..=3 {
        c.set(y(3), x(j), fy3.clone()).unwrap();
    }
    m.complement = Some(c);
    m.delta = Some(delta1_sq);
    m
}

fn gw_pos(gens: &[Gen]) -> GroupWord {
    GroupWord(gens.iter().map(|&g| Letter::pos(g)).collect())
}

/// Quandle golden: the trefoil presentation.
pub fn trefoil_quandle() -> QuandlePresentation {
    let symbols = Symbols::from_names(["a", "b"]).unwrap();
    let a = Gen(0);
    let b = Gen(1);
    let mut q = QuandlePresentation::new(symbols);
    q.relations.push(QuandleRelation::new(
        QuandleTerm::new(a, vec![Letter::pos(b), Letter::pos(a)]),
        QuandleTerm::gen(b),
    ));
    q.relations.push(QuandleRelation::new(
        QuandleTerm::new(b, vec![Letter::pos(a), Letter::pos(b)]),
        QuandleTerm::gen(a),
    ));
    q
}

/// `(a*b)_len` as a term: a * b * a * ... with `len` letters in total.
fn alternating_term(a: Gen, b: Gen, len: usize) -> QuandleTerm {
    assert!(len >= 1);
    let mut t = QuandleTerm::gen(a);
    for i in 1..len {
        t.push(if i % 2 == 1 { b } else { a }, Sign::Pos);
    }
    t
}

/// Quandle golden: the dihedral quandle presentation on two generators,
/// with the shape depending on the parity of n.
pub fn core_quandle_presentation(n: usize) -> QuandlePresentation {
    assert!(n >= 1);
    let symbols = Symbols::from_names(["s1", "s2"]).unwrap();
    let s1 = Gen(0);
    let s2 = Gen(1);
    let mut q = QuandlePresentation::new(symbols);
    q.relations.push(QuandleRelation::new(
        QuandleTerm::new(s2, vec![Letter::pos(s1), Letter::pos(s1)]),
        QuandleTerm::gen(s2),
    ));
    q.relations.push(QuandleRelation::new(
        QuandleTerm::new(s1, vec![Letter::pos(s2), Letter::pos(s2)]),
        QuandleTerm::gen(s1),
    ));
    if n % 2 == 1 {
        q.relations.push(QuandleRelation::new(
            alternating_term(s1, s2, n),
            QuandleTerm::gen(s2),
        ));
    } else {
        q.relations.push(QuandleRelation::new(
            alternating_term(s1, s2, n),
            QuandleTerm::gen(s1),
        ));
        q.relations.push(QuandleRelation::new(
            alternating_term(s2, s1, n),
            QuandleTerm::gen(s2),
        ));
    }
    q
}

/// Quandle golden: the link quandle of the torus link T(n, m),
/// `x_{m+i} * x_m * x_{m-1} * ... * x_1 = x_i`.
pub fn link_quandle_presentation(n: usize, m: usize) -> QuandlePresentation {
    assert!(n >= 2 && m >= 2);
    let symbols = Symbols::from_names(names("x", n)).unwrap();
    let mut q = QuandlePresentation::new(symbols);
    for i in 1..=n {
        let mut t = QuandleTerm::gen(cyclic_gen(n, m + i));
        for k in (1..=m).rev() {
            t.push(cyclic_gen(n, k), Sign::Pos);
        }
        q.relations.push(QuandleRelation::new(t, QuandleTerm::gen(cyclic_gen(n, i))));
    }
    q
}

/// Quandle golden: the reduced presentation of the Dehn quandle of the
/// braid group on its Artin generators.
pub fn braid_quandle_presentation(n: usize) -> QuandlePresentation {
    assert!(n >= 2);
    let k = n - 1;
    let symbols = Symbols::from_names(names("s", k)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let mut q = QuandlePresentation::new(symbols);
    for i in 1..k {
        q.relations.push(QuandleRelation::new(
            QuandleTerm::new(g(i), vec![Letter::pos(g(i + 1)), Letter::pos(g(i))]),
            QuandleTerm::gen(g(i + 1)),
        ));
    }
    if k >= 2 {
        q.relations.push(QuandleRelation::new(
            QuandleTerm::new(g(2), vec![Letter::pos(g(1)), Letter::pos(g(2))]),
            QuandleTerm::gen(g(1)),
        ));
    }
    for i in 1..=k {
        for j in (i + 2)..=k {
            q.relations.push(QuandleRelation::new(
                QuandleTerm::new(g(i), vec![Letter::pos(g(j))]),
                QuandleTerm::gen(g(i)),
            ));
        }
    }
    q
}

/// Quandle golden: the Dehn quandle of the six-punctured sphere on the
/// half-twist generators. The long relation is stored in the equivalent
/// single-base form, which is what the enveloping construction needs to
/// reproduce the commutator relator.
pub fn sphere6_quandle() -> QuandlePresentation {
    let symbols = Symbols::from_names(names("s", 5)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let mut q = QuandlePresentation::new(symbols);
    for i in 1..=5usize {
        for j in 1..=5usize {
            if i.abs_diff(j) >= 2 {
                q.relations.push(QuandleRelation::new(
                    QuandleTerm::new(g(i), vec![Letter::pos(g(j))]),
                    QuandleTerm::gen(g(i)),
                ));
            }
        }
    }
    for i in 1..=4usize {
        for (a, b) in [(i, i + 1), (i + 1, i)] {
            q.relations.push(QuandleRelation::new(
                QuandleTerm::new(g(a), vec![Letter::pos(g(b)), Letter::pos(g(a))]),
                QuandleTerm::gen(g(b)),
            ));
        }
    }
    let mut long = QuandleTerm::gen(g(1));
    for i in [2, 3, 4, 5, 5, 4, 3, 2] {
        long.push(g(i), Sign::Pos);
    }
    q.relations.push(QuandleRelation::new(long, QuandleTerm::gen(g(1))));
    q
}

/// Quandle golden: the twelve-relation presentation of the Dehn quandle of
/// the genus-two surface.
pub fn genus2_quandle() -> QuandlePresentation {
    let symbols = Symbols::from_names(names("a", 5)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let mut q = QuandlePresentation::new(symbols);
    for (i, j) in [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)] {
        q.relations.push(QuandleRelation::new(
            QuandleTerm::new(g(i), vec![Letter::pos(g(j))]),
            QuandleTerm::gen(g(i)),
        ));
    }
    for (a, b) in [(1, 2), (2, 1), (2, 3), (3, 4), (4, 5)] {
        q.relations.push(QuandleRelation::new(
            QuandleTerm::new(g(a), vec![Letter::pos(g(b)), Letter::pos(g(a))]),
            QuandleTerm::gen(g(b)),
        ));
    }
    let mut long = QuandleTerm::gen(g(1));
    for i in [2, 3, 4, 5, 5, 4, 3, 2] {
        long.push(g(i), Sign::Pos);
    }
    q.relations.push(QuandleRelation::new(long, QuandleTerm::gen(g(1))));
    q
}

fn monoid_file(name: &str, m: MonoidPresentation) -> PresentationFile {
    let mut f = PresentationFile::new(Kind::Monoid, name, m.symbols.clone());
    f.monoid_relations = m.relations;
    f.complement = m.complement;
    f.delta = m.delta;
    f
}

fn quandle_file(name: &str, q: QuandlePresentation) -> PresentationFile {
    let mut f = PresentationFile::new(Kind::Quandle, name, q.symbols.clone());
    f.quandle_relations = q.relations;
    f
}

fn braid_file(n: usize) -> PresentationFile {
    let mut f = monoid_file(&format!("braid{n}"), braid_monoid(n));
    let k = n - 1;
    let g = |i: usize| Gen((i - 1) as u32);
    // Centralizer of s1 and the spanning path of the single conjugacy class.
    let mut a1: Vec<GroupWord> = vec![gw_pos(&[g(1)])];
    for j in 3..=k {
        a1.push(gw_pos(&[g(j)]));
    }
    if k >= 2 {
        a1.push(gw_pos(&[g(2), g(1), g(1), g(2)]));
    }
    f.centralizers.push((g(1), a1));
    for i in 1..k {
        f.conjugators.push((g(i + 1), g(i), gw_pos(&[g(i), g(i + 1)])));
    }
    f.quotients.push(QuotientSpec {
        name: format!("s{n}"),
        images: FiniteGroup::transposition_images(n).expect("n >= 2"),
    });
    f
}

fn dihedral_file(n: usize) -> PresentationFile {
    let symbols = Symbols::from_names(["s1", "s2"]).unwrap();
    let s1 = Gen(0);
    let s2 = Gen(1);
    let mut f = PresentationFile::new(Kind::Group, &format!("dihedral{n}"), symbols);
    let one = GroupWord::empty();
    f.group_relations.push((gw_pos(&[s1, s1]), one.clone()));
    f.group_relations.push((gw_pos(&[s2, s2]), one.clone()));
    let mut rot = Vec::new();
    for _ in 0..n {
        rot.push(s1);
        rot.push(s2);
    }
    f.group_relations.push((gw_pos(&rot), one));
    if n % 2 == 1 {
        f.centralizers.push((s1, vec![gw_pos(&[s1])]));
        let half: Vec<Gen> = (0..(n - 1) / 2).flat_map(|_| [s1, s2]).collect();
        f.conjugators.push((s2, s1, gw_pos(&half)));
    } else {
        let half: Vec<Gen> = (0..n / 2).flat_map(|_| [s1, s2]).collect();
        f.centralizers.push((s1, vec![gw_pos(&[s1]), gw_pos(&half)]));
        f.centralizers.push((s2, vec![gw_pos(&[s2]), gw_pos(&half)]));
    }
    let (group, i1, i2) = FiniteGroup::dihedral(n).expect("dihedral group");
    f.quotients.push(QuotientSpec {
        name: format!("d{n}-regular"),
        images: vec![group.perm(i1).clone(), group.perm(i2).clone()],
    });
    f
}

fn surface_file(genus: usize) -> PresentationFile {
    assert!(genus >= 2);
    let mut gen_names = Vec::new();
    for i in 1..=genus {
        gen_names.push(format!("a{i}"));
        gen_names.push(format!("b{i}"));
    }
    let symbols = Symbols::from_names(gen_names).unwrap();
    let mut f = PresentationFile::new(Kind::Group, &format!("surface{genus}"), symbols.clone());
    // Product of commutators a_i^-1 b_i^-1 a_i b_i.
    let mut relator = Vec::new();
    for i in 0..genus {
        let a = Gen(2 * i as u32);
        let b = Gen(2 * i as u32 + 1);
        relator.extend([Letter::neg(a), Letter::neg(b), Letter::pos(a), Letter::pos(b)]);
    }
    f.group_relations.push((GroupWord(relator), GroupWord::empty()));
    for g in symbols.gens() {
        f.centralizers.push((g, vec![GroupWord(vec![Letter::pos(g)])]));
    }
    // All generators to a single transposition: commutators die.
    let t = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
    f.quotients.push(QuotientSpec {
        name: "fold".into(),
        images: vec![t; symbols.len()],
    });
    f
}

fn mcg_genus1_file() -> PresentationFile {
    let symbols = Symbols::from_names(["ta", "tb"]).unwrap();
    let ta = Gen(0);
    let tb = Gen(1);
    let mut f = PresentationFile::new(Kind::Group, "mcg-genus1", symbols);
    f.group_relations
        .push((gw_pos(&[ta, tb, ta]), gw_pos(&[tb, ta, tb])));
    let power: Vec<Gen> = (0..6).flat_map(|_| [ta, tb]).collect();
    f.group_relations.push((gw_pos(&power), GroupWord::empty()));
    f.centralizers
        .push((ta, vec![gw_pos(&[ta]), gw_pos(&[tb, ta, ta, tb])]));
    f.conjugators.push((tb, ta, gw_pos(&[ta, tb])));
    let a = [[1, 1], [0, 1]];
    let b = [[1, 0], [-1, 1]];
    for modulus in [5u64, 6] {
        let (_, images) = FiniteGroup::from_sl2_matrices(modulus, &[a, b]).expect("small degree");
        f.quotients.push(QuotientSpec {
            name: format!("sl2-z{modulus}"),
            images,
        });
    }
    f
}

fn mcg_genus2_file() -> PresentationFile {
    let symbols = Symbols::from_names(names("a", 5)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let mut f = PresentationFile::new(Kind::Group, "mcg-genus2", symbols);
    for i in 1..=5usize {
        for j in (i + 2)..=5usize {
            f.group_relations
                .push((gw_pos(&[g(i), g(j)]), gw_pos(&[g(j), g(i)])));
        }
    }
    for i in 1..=4usize {
        f.group_relations.push((
            gw_pos(&[g(i), g(i + 1), g(i)]),
            gw_pos(&[g(i + 1), g(i), g(i + 1)]),
        ));
    }
    let chain: Vec<Gen> = (1..=5).map(g).collect();
    let mut pow6 = Vec::new();
    for _ in 0..6 {
        pow6.extend_from_slice(&chain);
    }
    f.group_relations.push((gw_pos(&pow6), GroupWord::empty()));
    let iota: Vec<Gen> = [1, 2, 3, 4, 5, 5, 4, 3, 2, 1].map(g).to_vec();
    let mut iota_sq = iota.clone();
    iota_sq.extend_from_slice(&iota);
    f.group_relations.push((gw_pos(&iota_sq), GroupWord::empty()));
    let mut a1_iota = vec![g(1)];
    a1_iota.extend_from_slice(&iota);
    let mut iota_a1 = iota.clone();
    iota_a1.push(g(1));
    f.group_relations.push((gw_pos(&a1_iota), gw_pos(&iota_a1)));
    // C(a1) = <iota, a1, a3, a4, a5> with iota written from the a5 end.
    let iota_rev: Vec<Gen> = [5, 4, 3, 2, 1, 1, 2, 3, 4, 5].map(g).to_vec();
    f.centralizers.push((
        g(1),
        vec![
            gw_pos(&iota_rev),
            gw_pos(&[g(1)]),
            gw_pos(&[g(3)]),
            gw_pos(&[g(4)]),
            gw_pos(&[g(5)]),
        ],
    ));
    for i in 1..=4usize {
        f.conjugators.push((g(i + 1), g(i), gw_pos(&[g(i), g(i + 1)])));
    }
    f.quotients.push(QuotientSpec {
        name: "s6".into(),
        images: FiniteGroup::transposition_images(6).unwrap(),
    });
    f
}

fn mcg_sphere6_file() -> PresentationFile {
    let symbols = Symbols::from_names(names("s", 5)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let mut f = PresentationFile::new(Kind::Group, "mcg-sphere6", symbols);
    for i in 1..=5usize {
        for j in (i + 2)..=5usize {
            f.group_relations
                .push((gw_pos(&[g(i), g(j)]), gw_pos(&[g(j), g(i)])));
        }
    }
    for i in 1..=4usize {
        f.group_relations.push((
            gw_pos(&[g(i), g(i + 1), g(i)]),
            gw_pos(&[g(i + 1), g(i), g(i + 1)]),
        ));
    }
    let chain: Vec<Gen> = (1..=5).map(g).collect();
    let mut pow6 = Vec::new();
    for _ in 0..6 {
        pow6.extend_from_slice(&chain);
    }
    f.group_relations.push((gw_pos(&pow6), GroupWord::empty()));
    let cap: Vec<Gen> = [1, 2, 3, 4, 5, 5, 4, 3, 2, 1].map(g).to_vec();
    f.group_relations.push((gw_pos(&cap), GroupWord::empty()));
    f.quotients.push(QuotientSpec {
        name: "s6".into(),
        images: FiniteGroup::transposition_images(6).unwrap(),
    });
    f
}

fn raag_file(spec: &str) -> Result<PresentationFile> {
    // Accepted: complete:n, path:n, or n:1-2,2-3 explicit edge lists.
    let parts: Vec<&str> = spec.split(':').collect();
    let (n, edges): (usize, Vec<(usize, usize)>) = match parts.as_slice() {
        ["complete", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownBuiltin(format!("raag:{spec}")))?;
            let mut e = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    e.push((i, j));
                }
            }
            (n, e)
        }
        ["path", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownBuiltin(format!("raag:{spec}")))?;
            (n, (1..n).map(|i| (i, i + 1)).collect())
        }
        [n, edges] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownBuiltin(format!("raag:{spec}")))?;
            let mut e = Vec::new();
            for part in edges.split(',').filter(|p| !p.is_empty()) {
                let (a, b) = part
                    .split_once('-')
                    .ok_or_else(|| Error::UnknownBuiltin(format!("raag:{spec}")))?;
                let a: usize = a.parse().map_err(|_| Error::UnknownBuiltin(format!("raag:{spec}")))?;
                let b: usize = b.parse().map_err(|_| Error::UnknownBuiltin(format!("raag:{spec}")))?;
                e.push((a.min(b), a.max(b)));
            }
            (n, e)
        }
        _ => return Err(Error::UnknownBuiltin(format!("raag:{spec}"))),
    };
    if n == 0 || edges.iter().any(|&(a, b)| a == 0 || b > n || a == b) {
        return Err(Error::UnknownBuiltin(format!("raag:{spec}")));
    }
    let symbols = Symbols::from_names(names("x", n)).unwrap();
    let g = |i: usize| Gen((i - 1) as u32);
    let complete = edges.len() == n * (n - 1) / 2;
    let mut f = if complete {
        // The complete-graph case is a Garside monoid (free abelian).
        let mut cox = vec![vec![2usize; n]; n];
        for (i, row) in cox.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut m = artin_monoid(&names("x", n), &cox);
        m.delta = Some(PositiveWord((0..n as u32).map(Gen).collect()));
        monoid_file(&format!("raag-{spec}"), m)
    } else {
        let mut f = PresentationFile::new(Kind::Group, &format!("raag-{spec}"), symbols.clone());
        for &(a, b) in &edges {
            f.group_relations
                .push((gw_pos(&[g(a), g(b)]), gw_pos(&[g(b), g(a)])));
        }
        f
    };
    for i in 1..=n {
        let mut words = vec![gw_pos(&[g(i)])];
        for &(a, b) in &edges {
            if a == i {
                words.push(gw_pos(&[g(b)]));
            } else if b == i {
                words.push(gw_pos(&[g(a)]));
            }
        }
        f.centralizers.push((g(i), words));
    }
    let t = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
    f.quotients.push(QuotientSpec {
        name: "fold".into(),
        images: vec![t; n],
    });
    Ok(f)
}

fn torus_knot_file(p: usize, q: usize) -> PresentationFile {
    let mut f = monoid_file(&format!("torus-knot-{p}-{q}"), torus_knot_monoid(p, q));
    let deg = p.max(q);
    let xc = Perm::from_cycles(deg, &[(1..=p).collect()]).unwrap();
    let yc = Perm::from_cycles(deg, &[(1..=q).collect()]).unwrap();
    f.quotients.push(QuotientSpec { name: format!("s{deg}"), images: vec![xc, yc] });
    f
}

fn torus_link_file(n: usize, m: usize) -> PresentationFile {
    let mut f = monoid_file(&format!("torus-link-{n}-{m}"), torus_link_monoid(n, m));
    let t = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
    f.quotients.push(QuotientSpec { name: "fold".into(), images: vec![t; n] });
    f
}

fn mixed_ex3_file() -> PresentationFile {
    let mut f = monoid_file("mixed-ex3", mixed_ex3_monoid());
    // x1 -> (1 2), x2 -> (1 2 3 4 5), y_i -> id in S5.
    let id = Perm::identity(5);
    f.quotients.push(QuotientSpec {
        name: "s5".into(),
        images: vec![
            Perm::from_cycles(5, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap(),
            id.clone(),
            id.clone(),
            id,
        ],
    });
    f
}

fn mixed_ex4_file() -> PresentationFile {
    let mut f = monoid_file("mixed-ex4", mixed_ex4_monoid());
    // x block to the Coxeter group of type B3 as signed permutations on
    // six points (i and i+3 are +/- of coordinate i); y block dies.
    let x1 = Perm::from_cycles(6, &[vec![1, 4]]).unwrap();
    let x2 = Perm::from_cycles(6, &[vec![1, 2], vec![4, 5]]).unwrap();
    let x3 = Perm::from_cycles(6, &[vec![2, 3], vec![5, 6]]).unwrap();
    let id = Perm::identity(6);
    f.quotients.push(QuotientSpec {
        name: "coxeter-b3".into(),
        images: vec![x1, x2, x3, id.clone(), id.clone(), id],
    });
    f
}

fn artin_file(spec: &str) -> Result<PresentationFile> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["a", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownBuiltin(format!("artin:{spec}")))?;
            if n < 1 {
                return Err(Error::UnknownBuiltin(format!("artin:{spec}")));
            }
            Ok(monoid_file(&format!("artin-a{n}"), {
                let mut m = braid_monoid(n + 1);
                m.symbols = Symbols::from_names(names("x", n)).unwrap();
                m
            }))
        }
        ["b", n] => {
            let n: usize = n.parse().map_err(|_| Error::UnknownBuiltin(format!("artin:{spec}")))?;
            if n < 2 {
                return Err(Error::UnknownBuiltin(format!("artin:{spec}")));
            }
            let mut m = artin_monoid(&names("x", n), &coxeter_matrix_b(n));
            let chain: Vec<Gen> = (0..n as u32).map(Gen).collect();
            m.delta = Some(PositiveWord(chain).pow(n));
            Ok(monoid_file(&format!("artin-b{n}"), m))
        }
        ["i2", k] => {
            let k: usize = k.parse().map_err(|_| Error::UnknownBuiltin(format!("artin:{spec}")))?;
            if k < 2 {
                return Err(Error::UnknownBuiltin(format!("artin:{spec}")));
            }
            let cox = vec![vec![1, k], vec![k, 1]];
            let mut m = artin_monoid(&names("x", 2), &cox);
            m.delta = Some(alternating(Gen(0), Gen(1), k));
            Ok(monoid_file(&format!("artin-i2-{k}"), m))
        }
        _ => Err(Error::UnknownBuiltin(format!("artin:{spec}"))),
    }
}

/// Names of all builtins, with `<..>` placeholders for parameters.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "braid:<n>",
        "artin:a:<n>",
        "artin:b:<n>",
        "artin:i2:<m>",
        "torus-knot:<p>,<q>",
        "torus-link:<n>,<m>",
        "i2:<n>",
        "mixed:ex3",
        "mixed:ex4",
        "dihedral:<n>",
        "surface:<g>",
        "mcg:genus1",
        "mcg:genus2",
        "mcg:sphere6",
        "raag:complete:<n>",
        "raag:path:<n>",
        "raag:<n>:<i>-<j>,..",
        "trefoil",
        "core:<n>",
        "link-quandle:<n>,<m>",
        "braid-quandle:<n>",
        "sphere6-quandle",
        "genus2-quandle",
    ]
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Look up a builtin by name.
pub fn builtin(name: &str) -> Result<PresentationFile> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    if let Some(rest) = name.strip_prefix("braid:") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 2 {
            return Err(unknown());
        }
        return Ok(braid_file(n));
    }
    if let Some(rest) = name.strip_prefix("artin:") {
        return artin_file(rest);
    }
    if let Some(rest) = name.strip_prefix("torus-knot:") {
        let (p, q) = parse_pair(rest).ok_or_else(unknown)?;
        if p < 2 || q < 2 {
            return Err(unknown());
        }
        return Ok(torus_knot_file(p, q));
    }
    if let Some(rest) = name.strip_prefix("torus-link:") {
        let (n, m) = parse_pair(rest).ok_or_else(unknown)?;
        if n < 2 || m < 2 {
            return Err(unknown());
        }
        return Ok(torus_link_file(n, m));
    }
    if let Some(rest) = name.strip_prefix("i2:") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 2 {
            return Err(unknown());
        }
        return Ok(torus_link_file(n, 2));
    }
    if let Some(rest) = name.strip_prefix("dihedral:") {
        let n: usize = rest
            .strip_prefix("n=")
            .unwrap_or(rest)
            .parse()
            .map_err(|_| unknown())?;
        if n < 1 {
            return Err(unknown());
        }
        return Ok(dihedral_file(n));
    }
    if let Some(rest) = name.strip_prefix("surface:") {
        let genus: usize = rest.strip_prefix("g=").unwrap_or(rest).parse().map_err(|_| unknown())?;
        if genus < 2 {
            return Err(unknown());
        }
        return Ok(surface_file(genus));
    }
    if let Some(rest) = name.strip_prefix("raag:") {
        return raag_file(rest);
    }
    if let Some(rest) = name.strip_prefix("core:") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 1 {
            return Err(unknown());
        }
        return Ok(quandle_file(&format!("core{n}"), core_quandle_presentation(n)));
    }
    if let Some(rest) = name.strip_prefix("link-quandle:") {
        let (n, m) = parse_pair(rest).ok_or_else(unknown)?;
        if n < 2 || m < 2 {
            return Err(unknown());
        }
        return Ok(quandle_file(
            &format!("link-quandle-{n}-{m}"),
            link_quandle_presentation(n, m),
        ));
    }
    if let Some(rest) = name.strip_prefix("braid-quandle:") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 2 {
            return Err(unknown());
        }
        return Ok(quandle_file(
            &format!("braid-quandle-{n}"),
            braid_quandle_presentation(n),
        ));
    }
    match name {
        "mixed:ex3" => Ok(mixed_ex3_file()),
        "mixed:ex4" => Ok(mixed_ex4_file()),
        "mcg:genus1" => Ok(mcg_genus1_file()),
        "mcg:genus2" => Ok(mcg_genus2_file()),
        "mcg:sphere6" => Ok(mcg_sphere6_file()),
        "trefoil" => Ok(quandle_file("trefoil", trefoil_quandle())),
        "sphere6-quandle" => Ok(quandle_file("sphere6-quandle", sphere6_quandle())),
        "genus2-quandle" => Ok(quandle_file("genus2-quandle", genus2_quandle())),
        _ => Err(unknown()),
    }
}

/// A finite target quandle by name: `core:<n>`, `conj:s<n>` (transpositions
/// in the symmetric group) or `conj:d<n>` (reflections in the dihedral
/// group).
pub fn builtin_target(name: &str) -> Result<crate::finite::quandle::FiniteQuandle> {
    use crate::finite::quandle::{conjugation_dehn_quandle, core_quandle};
    let unknown = || Error::UnknownBuiltin(name.to_string());
    if let Some(rest) = name.strip_prefix("core:") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 1 {
            return Err(unknown());
        }
        return Ok(core_quandle(n));
    }
    if let Some(rest) = name.strip_prefix("conj:") {
        if let Some(n) = rest.strip_prefix('s') {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            let g = FiniteGroup::symmetric(n)?;
            let seeds = g.generator_elements().to_vec();
            return Ok(conjugation_dehn_quandle(&g, &seeds));
        }
        if let Some(n) = rest.strip_prefix('d') {
            let n: usize = n.parse().map_err(|_| unknown())?;
            if n < 1 {
                return Err(unknown());
            }
            let (g, s1, s2) = FiniteGroup::dihedral(n)?;
            return Ok(conjugation_dehn_quandle(&g, &[s1, s2]));
        }
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format;

    #[test]
    fn braid3_has_expected_shape() {
        let m = braid_monoid(3);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.relations.len(), 1);
        assert_eq!(m.delta.as_ref().unwrap().len(), 3);
        let c = m.complement().unwrap();
        let s1 = Gen(0);
        let s2 = Gen(1);
        assert_eq!(c.get(s1, s2).unwrap().0, vec![s2, s1]);
    }

    #[test]
    fn torus_knot_matches_the_worked_example() {
        let m = torus_knot_monoid(2, 3);
        let x = Gen(0);
        let y = Gen(1);
        let c = m.complement().unwrap();
        assert_eq!(c.get(x, y).unwrap().0, vec![x]);
        assert_eq!(c.get(y, x).unwrap().0, vec![y, y]);
        assert_eq!(m.relations[0].0 .0, vec![x, x]);
        assert_eq!(m.relations[0].1 .0, vec![y, y, y]);
    }

    #[test]
    fn mixed_ex4_has_seven_relations_and_total_complement() {
        let m = mixed_ex4_monoid();
        assert_eq!(m.relations.len(), 7);
        assert!(m.complement().unwrap().is_total());
        assert!(m.is_homogeneous());
        assert_eq!(m.delta.as_ref().unwrap().len(), 18);
    }

    #[test]
    fn mixed_ex3_is_inhomogeneous() {
        let m = mixed_ex3_monoid();
        assert!(!m.is_homogeneous());
    }

    #[test]
    fn builtin_files_roundtrip_through_the_text_format() {
        for name in [
            "braid:3",
            "braid:4",
            "torus-knot:2,3",
            "torus-link:3,2",
            "i2:4",
            "mixed:ex3",
            "mixed:ex4",
            "dihedral:5",
            "dihedral:6",
            "surface:2",
            "mcg:genus1",
            "mcg:genus2",
            "mcg:sphere6",
            "raag:complete:3",
            "raag:path:3",
            "trefoil",
            "core:5",
            "core:6",
            "link-quandle:2,3",
            "braid-quandle:4",
            "sphere6-quandle",
            "genus2-quandle",
        ] {
            let f = builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            // Quotient display names are not part of the text format, so
            // the identity is checked on the canonical (printed) form.
            let canonical = format::parse(&format::print(&f)).unwrap_or_else(|e| panic!("{name}: {e}"));
            let twice = format::parse(&format::print(&canonical)).unwrap();
            assert_eq!(canonical, twice, "roundtrip failed for {name}");
            assert_eq!(f.monoid_relations, canonical.monoid_relations, "{name}");
            assert_eq!(f.group_relations, canonical.group_relations, "{name}");
            assert_eq!(f.quandle_relations, canonical.quandle_relations, "{name}");
            assert_eq!(f.complement, canonical.complement, "{name}");
            assert_eq!(f.delta, canonical.delta, "{name}");
            assert_eq!(f.centralizers, canonical.centralizers, "{name}");
            assert_eq!(f.conjugators, canonical.conjugators, "{name}");
            assert_eq!(f.quotients.len(), canonical.quotients.len(), "{name}");
            for (a, b) in f.quotients.iter().zip(&canonical.quotients) {
                assert_eq!(a.images, b.images, "{name}");
            }
        }
    }

    #[test]
    fn unknown_builtins_are_rejected() {
        assert!(builtin("nope").is_err());
        assert!(builtin("braid:1").is_err());
    }

    #[test]
    fn sphere6_has_the_cap_relator() {
        let f = builtin("mcg:sphere6").unwrap();
        let g = f.to_group().unwrap();
        // One relator of length 10: the cap word.
        assert!(g.relators.iter().any(|r| r.len() == 10));
    }

    #[test]
    fn builtin_quotients_are_homomorphisms() {
        for name in [
            "braid:3",
            "braid:4",
            "braid:5",
            "torus-knot:2,3",
            "torus-knot:3,2",
            "torus-link:2,3",
            "torus-link:2,4",
            "i2:5",
            "mixed:ex3",
            "mixed:ex4",
            "dihedral:4",
            "dihedral:7",
            "surface:2",
            "mcg:genus1",
            "mcg:genus2",
            "mcg:sphere6",
            "raag:path:4",
        ] {
            let f = builtin(name).unwrap();
            let g = f.to_group().unwrap();
            for spec in &f.quotients {
                let (group, idx) =
                    crate::finite::env::group_from_images(spec.images.clone()).unwrap();
                assert!(
                    crate::finite::env::verify_group_hom(&g, &group, &idx),
                    "{name}: quotient {} is not a homomorphism",
                    spec.name
                );
            }
        }
    }
}
