//! The line-oriented presentation file format, its parser and printer, and
//! the quandle-table format used for finite targets.
//!
//! ```text
//! monoid b3
//! gens s1 s2
//! rel s1 s2 s1 = s2 s1 s2
//! complement s1 s2 : s2 s1
//! delta : s1 s2 s1
//! ```
//!
//! Group files use `rel u = v` with `^-1` allowed on letters and `1` for the
//! empty word; quandle files use `rel a * b *- a = b`, left-associated.
//! `centralizer s : w1 | w2`, `conjugator t s : w` and blocks of consecutive
//! `quotient perm s -> (1 2)(3 4)` lines carry the auxiliary data.

use std::fmt::Write as _;

use crate::centralizer::{CentralizerData, ConjugacyData, QuotientSpec};
use crate::error::{Error, Result};
use crate::finite::group::Perm;
use crate::finite::quandle::FiniteQuandle;
use crate::presentation::{
    Complement, GroupPresentation, MonoidPresentation, QuandlePresentation,
};
use crate::term::{QuandleRelation, QuandleTerm};
use crate::words::{Gen, GroupWord, Letter, PositiveWord, Sign, Symbols};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Monoid,
    Group,
    Quandle,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Monoid => "monoid",
            Kind::Group => "group",
            Kind::Quandle => "quandle",
        }
    }
}

/// Parsed contents of a presentation file.
#[derive(Debug, Clone, PartialEq)]
pub struct PresentationFile {
    pub kind: Kind,
    pub name: String,
    pub symbols: Symbols,
    pub monoid_relations: Vec<(PositiveWord, PositiveWord)>,
    pub group_relations: Vec<(GroupWord, GroupWord)>,
    pub quandle_relations: Vec<QuandleRelation>,
    pub complement: Option<Complement>,
    pub delta: Option<PositiveWord>,
    pub centralizers: Vec<(Gen, Vec<GroupWord>)>,
    pub conjugators: Vec<(Gen, Gen, GroupWord)>,
    pub quotients: Vec<QuotientSpec>,
}

impl PresentationFile {
    pub fn new(kind: Kind, name: &str, symbols: Symbols) -> PresentationFile {
        PresentationFile {
            kind,
            name: name.to_string(),
            symbols,
            monoid_relations: Vec::new(),
            group_relations: Vec::new(),
            quandle_relations: Vec::new(),
            complement: None,
            delta: None,
            centralizers: Vec::new(),
            conjugators: Vec::new(),
            quotients: Vec::new(),
        }
    }

    pub fn to_monoid(&self) -> Result<MonoidPresentation> {
        if self.kind != Kind::Monoid {
            return Err(Error::Unsupported(format!(
                "{} file where a monoid presentation is required",
                self.kind.keyword()
            )));
        }
        let m = MonoidPresentation {
            symbols: self.symbols.clone(),
            relations: self.monoid_relations.clone(),
            complement: self.complement.clone(),
            delta: self.delta.clone(),
        };
        m.validate()?;
        Ok(m)
    }

    /// Group view: a group file directly, or a monoid file through its
    /// group of fractions, which has the same presentation.
    pub fn to_group(&self) -> Result<GroupPresentation> {
        match self.kind {
            Kind::Group => {
                let relators = self
                    .group_relations
                    .iter()
                    .map(|(u, v)| crate::words::free_reduce(&u.concat(&v.inverse())))
                    .filter(|r| !r.is_empty())
                    .collect();
                Ok(GroupPresentation { symbols: self.symbols.clone(), relators })
            }
            Kind::Monoid => Ok(self.to_monoid()?.to_group()),
            Kind::Quandle => Err(Error::Unsupported(
                "quandle file where a group presentation is required".into(),
            )),
        }
    }

    pub fn to_quandle(&self) -> Result<QuandlePresentation> {
        if self.kind != Kind::Quandle {
            return Err(Error::Unsupported(format!(
                "{} file where a quandle presentation is required",
                self.kind.keyword()
            )));
        }
        Ok(QuandlePresentation {
            symbols: self.symbols.clone(),
            relations: self.quandle_relations.clone(),
        })
    }

    pub fn centralizer_data(&self) -> CentralizerData {
        let mut cent = CentralizerData::new(self.symbols.len());
        for (g, ws) in &self.centralizers {
            cent.words[g.index()] = ws.clone();
        }
        cent
    }

    pub fn conjugacy_data(&self) -> ConjugacyData {
        ConjugacyData { edges: self.conjugators.clone() }
    }
}

struct Tokenizer<'a> {
    line: &'a str,
    lineno: usize,
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    col: usize,
}

impl<'a> Tokenizer<'a> {
    fn new(line: &'a str, lineno: usize) -> Tokenizer<'a> {
        Tokenizer { line, lineno }
    }

    fn error(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Syntax { line: self.lineno, col, msg: msg.into() }
    }

    fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.line.char_indices().chain([(self.line.len(), ' ')]) {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    out.push(Token { text: self.line[s..i].to_string(), col: s + 1 });
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        out
    }
}

fn lookup_gen(syms: &Symbols, tok: &Token, lineno: usize) -> Result<Gen> {
    syms.lookup(&tok.text).ok_or(Error::UnknownGenerator {
        name: tok.text.clone(),
        line: lineno,
        col: tok.col,
    })
}

fn parse_positive_word(syms: &Symbols, toks: &[Token], lineno: usize) -> Result<PositiveWord> {
    if toks.len() == 1 && toks[0].text == "1" {
        return Ok(PositiveWord::empty());
    }
    let mut w = Vec::new();
    for t in toks {
        w.push(lookup_gen(syms, t, lineno)?);
    }
    Ok(PositiveWord(w))
}

fn parse_group_word(syms: &Symbols, toks: &[Token], lineno: usize) -> Result<GroupWord> {
    if toks.len() == 1 && toks[0].text == "1" {
        return Ok(GroupWord::empty());
    }
    let mut w = Vec::new();
    for t in toks {
        let (name, sign) = match t.text.strip_suffix("^-1") {
            Some(base) => (base, Sign::Neg),
            None => (t.text.as_str(), Sign::Pos),
        };
        let g = syms.lookup(name).ok_or(Error::UnknownGenerator {
            name: name.to_string(),
            line: lineno,
            col: t.col,
        })?;
        w.push(Letter { gen: g, sign });
    }
    Ok(GroupWord(w))
}

fn parse_quandle_term(syms: &Symbols, toks: &[Token], lineno: usize) -> Result<QuandleTerm> {
    if toks.is_empty() {
        return Err(Error::Syntax { line: lineno, col: 1, msg: "empty term".into() });
    }
    let mut term = QuandleTerm::gen(lookup_gen(syms, &toks[0], lineno)?);
    let mut i = 1;
    while i < toks.len() {
        let sign = match toks[i].text.as_str() {
            "*" => Sign::Pos,
            "*-" => Sign::Neg,
            other => {
                return Err(Error::Syntax {
                    line: lineno,
                    col: toks[i].col,
                    msg: format!("expected * or *-, found {other:?}"),
                })
            }
        };
        let Some(arg) = toks.get(i + 1) else {
            return Err(Error::Syntax {
                line: lineno,
                col: toks[i].col,
                msg: "operator without right operand".into(),
            });
        };
        if arg.text == "=" {
            return Err(Error::Syntax {
                line: lineno,
                col: arg.col,
                msg: "operator without right operand".into(),
            });
        }
        term.push(lookup_gen(syms, arg, lineno)?, sign);
        i += 2;
    }
    Ok(term)
}

fn split_on(toks: &[Token], sep: &str) -> Vec<Vec<Token>> {
    let mut parts = vec![Vec::new()];
    for t in toks {
        if t.text == sep {
            parts.push(Vec::new());
        } else {
            parts.last_mut().unwrap().push(t.clone());
        }
    }
    parts
}

/// Parse presentation file text.
pub fn parse(text: &str) -> Result<PresentationFile> {
    let mut kind: Option<(Kind, String)> = None;
    let mut symbols: Option<Symbols> = None;
    let mut file: Option<PresentationFile> = None;
    let mut quotient_block: Vec<(Gen, Perm, usize)> = Vec::new();
    let mut gens_seen = false;

    let close_quotient_block =
        |file: &mut Option<PresentationFile>, block: &mut Vec<(Gen, Perm, usize)>| -> Result<()> {
            if block.is_empty() {
                return Ok(());
            }
            let f = file.as_mut().expect("quotient lines come after the header");
            let rank = f.symbols.len();
            let mut images: Vec<Option<Perm>> = vec![None; rank];
            let mut degree = 0;
            for (_, p, _) in block.iter() {
                degree = degree.max(p.degree());
            }
            for (g, p, line) in block.drain(..) {
                let mut img: Vec<u32> = (0..degree as u32).collect();
                img[..p.degree()].copy_from_slice(&p.0);
                if images[g.index()].is_some() {
                    return Err(Error::Syntax {
                        line,
                        col: 1,
                        msg: format!(
                            "generator {} listed twice in one quotient block",
                            f.symbols.name(g)
                        ),
                    });
                }
                images[g.index()] = Some(Perm(img));
            }
            let images: Vec<Perm> = images
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    p.ok_or_else(|| {
                        Error::MissingData(format!(
                            "quotient block misses generator {}",
                            f.symbols.names()[i]
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            let name = format!("q{}", f.quotients.len() + 1);
            f.quotients.push(QuotientSpec { name, images });
            Ok(())
        };

    for (lineno0, raw) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = raw.trim_end();
        let tk = Tokenizer::new(line, lineno);
        let toks = tk.tokens();
        if toks.is_empty() || toks[0].text.starts_with('#') {
            close_quotient_block(&mut file, &mut quotient_block)?;
            continue;
        }
        let head = toks[0].text.as_str();
        if head != "quotient" {
            close_quotient_block(&mut file, &mut quotient_block)?;
        }
        match head {
            "monoid" | "group" | "quandle" => {
                if kind.is_some() {
                    return Err(Error::DuplicateSection("header".into()));
                }
                if toks.len() != 2 {
                    return Err(tk.error(1, "expected: <kind> <name>"));
                }
                let k = match head {
                    "monoid" => Kind::Monoid,
                    "group" => Kind::Group,
                    _ => Kind::Quandle,
                };
                kind = Some((k, toks[1].text.clone()));
            }
            "gens" => {
                let Some((k, name)) = kind.clone() else {
                    return Err(tk.error(1, "gens before the header line"));
                };
                if gens_seen {
                    return Err(Error::DuplicateSection("gens".into()));
                }
                gens_seen = true;
                let syms = Symbols::from_names(toks[1..].iter().map(|t| t.text.clone()))?;
                symbols = Some(syms.clone());
                file = Some(PresentationFile::new(k, &name, syms));
            }
            "rel" => {
                let (Some(f), Some(syms)) = (file.as_mut(), symbols.as_ref()) else {
                    return Err(tk.error(1, "rel before gens"));
                };
                let parts = split_on(&toks[1..], "=");
                if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
                    let col = toks.last().map(|t| t.col).unwrap_or(1);
                    return Err(tk.error(col, "relation needs two sides around ="));
                }
                match f.kind {
                    Kind::Monoid => {
                        let first = parse_positive_word(syms, &parts[0], lineno)?;
                        for part in &parts[1..] {
                            let w = parse_positive_word(syms, part, lineno)?;
                            f.monoid_relations.push((first.clone(), w));
                        }
                    }
                    Kind::Group => {
                        let first = parse_group_word(syms, &parts[0], lineno)?;
                        for part in &parts[1..] {
                            let w = parse_group_word(syms, part, lineno)?;
                            f.group_relations.push((first.clone(), w));
                        }
                    }
                    Kind::Quandle => {
                        if parts.len() != 2 {
                            return Err(tk.error(1, "quandle relations have exactly two sides"));
                        }
                        let lhs = parse_quandle_term(syms, &parts[0], lineno)?;
                        let rhs = parse_quandle_term(syms, &parts[1], lineno)?;
                        f.quandle_relations.push(QuandleRelation::new(lhs, rhs));
                    }
                }
            }
            "complement" => {
                let (Some(f), Some(syms)) = (file.as_mut(), symbols.as_ref()) else {
                    return Err(tk.error(1, "complement before gens"));
                };
                let parts = split_on(&toks[1..], ":");
                if parts.len() != 2 || parts[0].len() != 2 {
                    return Err(tk.error(1, "expected: complement s t : word"));
                }
                let s = lookup_gen(syms, &parts[0][0], lineno)?;
                let t = lookup_gen(syms, &parts[0][1], lineno)?;
                let w = parse_positive_word(syms, &parts[1], lineno)?;
                let c = f.complement.get_or_insert_with(|| Complement::new(syms.len()));
                c.set(s, t, w)?;
            }
            "delta" => {
                let (Some(f), Some(syms)) = (file.as_mut(), symbols.as_ref()) else {
                    return Err(tk.error(1, "delta before gens"));
                };
                if f.delta.is_some() {
                    return Err(Error::DuplicateSection("delta".into()));
                }
                let parts = split_on(&toks[1..], ":");
                if parts.len() != 2 || !parts[0].is_empty() {
                    return Err(tk.error(1, "expected: delta : word"));
                }
                f.delta = Some(parse_positive_word(syms, &parts[1], lineno)?);
            }
            "centralizer" => {
                let (Some(f), Some(syms)) = (file.as_mut(), symbols.as_ref()) else {
                    return Err(tk.error(1, "centralizer before gens"));
                };
                let parts = split_on(&toks[1..], ":");
                if parts.len() != 2 || parts[0].len() != 1 {
                    return Err(tk.error(1, "expected: centralizer s : w1 | w2"));
                }
                let s = lookup_gen(syms, &parts[0][0], lineno)?;
                let mut words = Vec::new();
                for wpart in split_on(&parts[1], "|") {
                    if wpart.is_empty() {
                        return Err(tk.error(1, "empty centralizer word"));
                    }
                    words.push(parse_group_word(syms, &wpart, lineno)?);
                }
                if f.centralizers.iter().any(|(g, _)| *g == s) {
                    return Err(Error::DuplicateSection(format!(
                        "centralizer {}",
                        syms.name(s)
                    )));
                }
                f.centralizers.push((s, words));
            }
            "conjugator" => {
                let (Some(f), Some(syms)) = (file.as_mut(), symbols.as_ref()) else {
                    return Err(tk.error(1, "conjugator before gens"));
                };
                let parts = split_on(&toks[1..], ":");
                if parts.len() != 2 || parts[0].len() != 2 {
                    return Err(tk.error(1, "expected: conjugator t s : word"));
                }
                let t = lookup_gen(syms, &parts[0][0], lineno)?;
                let s = lookup_gen(syms, &parts[0][1], lineno)?;
                let w = parse_group_word(syms, &parts[1], lineno)?;
                f.conjugators.push((t, s, w));
            }
            "quotient" => {
                let (Some(_), Some(syms)) = (file.as_ref(), symbols.as_ref()) else {
                    return Err(tk.error(1, "quotient before gens"));
                };
                if toks.len() < 4 || toks[1].text != "perm" || toks[3].text != "->" {
                    return Err(tk.error(1, "expected: quotient perm s -> (cycles)"));
                }
                let g = lookup_gen(syms, &toks[2], lineno)?;
                let cycle_text: String = toks[4..]
                    .iter()
                    .map(|t| t.text.as_str())
                    .collect::<Vec<_>>()
                    .join(" ");
                let perm = parse_cycles(&cycle_text, lineno, toks.get(4).map(|t| t.col).unwrap_or(1))?;
                quotient_block.push((g, perm, lineno));
            }
            other => {
                return Err(tk.error(toks[0].col, format!("unknown directive {other:?}")));
            }
        }
    }
    close_quotient_block(&mut file, &mut quotient_block)?;
    let f = file.ok_or(Error::Syntax { line: 1, col: 1, msg: "empty file".into() })?;
    Ok(f)
}

/// Parse `(1 2)(3 4)` or `()`; points are 1-indexed, commas optional.
fn parse_cycles(text: &str, line: usize, col: usize) -> Result<Perm> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut cur: Option<Vec<usize>> = None;
    let mut num = String::new();
    let mut max_point = 0usize;
    let err = |msg: &str| Error::Syntax { line, col, msg: msg.to_string() };
    for c in text.chars() {
        match c {
            '(' => {
                if cur.is_some() {
                    return Err(err("nested parenthesis in cycles"));
                }
                cur = Some(Vec::new());
            }
            ')' => {
                let mut cyc = cur.take().ok_or_else(|| err("unbalanced parenthesis"))?;
                if !num.is_empty() {
                    cyc.push(num.parse().map_err(|_| err("bad point"))?);
                    num.clear();
                }
                if !cyc.is_empty() {
                    max_point = max_point.max(*cyc.iter().max().unwrap());
                    cycles.push(cyc);
                }
            }
            '0'..='9' => num.push(c),
            ' ' | ',' => {
                if !num.is_empty() {
                    cur.as_mut()
                        .ok_or_else(|| err("point outside a cycle"))?
                        .push(num.parse().map_err(|_| err("bad point"))?);
                    num.clear();
                }
            }
            other => return Err(err(&format!("unexpected character {other:?} in cycles"))),
        }
    }
    if cur.is_some() || !num.is_empty() {
        return Err(err("unbalanced parenthesis"));
    }
    Perm::from_cycles(max_point.max(1), &cycles)
}

/// Canonical textual form; `parse(print(f))` returns an equal file up to
/// permutation degrees being normalized.
pub fn print(f: &PresentationFile) -> String {
    let mut out = String::new();
    let syms = &f.symbols;
    let _ = writeln!(out, "{} {}", f.kind.keyword(), f.name);
    let _ = writeln!(out, "gens {}", syms.names().join(" "));
    match f.kind {
        Kind::Monoid => {
            for (a, b) in &f.monoid_relations {
                let _ = writeln!(out, "rel {} = {}", a.display(syms), b.display(syms));
            }
        }
        Kind::Group => {
            for (a, b) in &f.group_relations {
                let _ = writeln!(out, "rel {} = {}", a.display(syms), b.display(syms));
            }
        }
        Kind::Quandle => {
            for r in &f.quandle_relations {
                let _ = writeln!(out, "rel {} = {}", r.lhs.display(syms), r.rhs.display(syms));
            }
        }
    }
    if let Some(c) = &f.complement {
        for s in syms.gens() {
            for t in syms.gens() {
                if s != t {
                    if let Some(w) = c.get(s, t) {
                        let _ = writeln!(
                            out,
                            "complement {} {} : {}",
                            syms.name(s),
                            syms.name(t),
                            w.display(syms)
                        );
                    }
                }
            }
        }
    }
    if let Some(d) = &f.delta {
        let _ = writeln!(out, "delta : {}", d.display(syms));
    }
    for (s, ws) in &f.centralizers {
        let words: Vec<String> = ws.iter().map(|w| w.display(syms).to_string()).collect();
        let _ = writeln!(out, "centralizer {} : {}", syms.name(*s), words.join(" | "));
    }
    for (t, s, w) in &f.conjugators {
        let _ = writeln!(
            out,
            "conjugator {} {} : {}",
            syms.name(*t),
            syms.name(*s),
            w.display(syms)
        );
    }
    for spec in &f.quotients {
        let _ = writeln!(out);
        for (i, p) in spec.images.iter().enumerate() {
            let _ = writeln!(
                out,
                "quotient perm {} -> {}",
                syms.names()[i],
                p
            );
        }
    }
    out
}

/// Parse a quandle table file:
/// ```text
/// qtable name
/// order 3
/// row 0 2 1
/// row 2 1 0
/// row 1 0 2
/// ```
/// Row x lists `x * y` for `y = 0..n-1`, 0-indexed.
pub fn parse_table(text: &str) -> Result<FiniteQuandle> {
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (lineno0, raw) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0].starts_with('#') {
            continue;
        }
        match toks[0] {
            "qtable" => {}
            "order" => {
                order = Some(toks.get(1).and_then(|t| t.parse().ok()).ok_or(Error::Syntax {
                    line: lineno,
                    col: 1,
                    msg: "order needs a number".into(),
                })?);
            }
            "row" => {
                let row: Vec<usize> = toks[1..]
                    .iter()
                    .map(|t| {
                        t.parse().map_err(|_| Error::Syntax {
                            line: lineno,
                            col: 1,
                            msg: format!("bad table entry {t:?}"),
                        })
                    })
                    .collect::<Result<_>>()?;
                rows.push(row);
            }
            other => {
                return Err(Error::Syntax {
                    line: lineno,
                    col: 1,
                    msg: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    let n = order.ok_or(Error::MissingData("qtable needs an order line".into()))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::MissingData("qtable rows do not match the order".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for r in rows {
        for v in r {
            if v >= n {
                return Err(Error::MissingData("table entry out of range".into()));
            }
            table.push(v);
        }
    }
    FiniteQuandle::from_table(n, table, None)
}

pub fn print_table(name: &str, q: &FiniteQuandle) -> String {
    let n = q.order();
    let mut out = String::new();
    let _ = writeln!(out, "qtable {name}");
    let _ = writeln!(out, "order {n}");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| q.op(x, y).to_string()).collect();
        let _ = writeln!(out, "row {}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const B3: &str = "\
monoid b3
gens s1 s2
rel s1 s2 s1 = s2 s1 s2
complement s1 s2 : s2 s1
complement s2 s1 : s1 s2
delta : s1 s2 s1
";

    #[test]
    fn roundtrip_monoid_file() {
        let f = parse(B3).unwrap();
        assert_eq!(f.kind, Kind::Monoid);
        assert_eq!(f.symbols.len(), 2);
        assert_eq!(f.monoid_relations.len(), 1);
        assert!(f.complement.is_some());
        let printed = print(&f);
        let f2 = parse(&printed).unwrap();
        assert_eq!(f, f2);
    }

    #[test]
    fn quandle_relation_parses_left_associated() {
        let text = "quandle t\ngens a b\nrel a * b = a\n";
        let f = parse(text).unwrap();
        let r = &f.quandle_relations[0];
        assert_eq!(r.lhs.base, f.symbols.lookup("a").unwrap());
        assert_eq!(r.lhs.tail.len(), 1);
        assert!(r.rhs.is_gen());
    }

    #[test]
    fn malformed_quandle_relation_reports_position() {
        let text = "quandle t\ngens a b\nrel a * = b\n";
        match parse(text) {
            Err(Error::Syntax { line: 3, .. }) => {}
            other => panic!("expected syntax error on line 3, got {other:?}"),
        }
    }

    #[test]
    fn unknown_generator_is_reported() {
        let text = "monoid m\ngens a\nrel a b = a\n";
        match parse(text) {
            Err(Error::UnknownGenerator { name, line: 3, .. }) => assert_eq!(name, "b"),
            other => panic!("expected unknown generator, got {other:?}"),
        }
    }

    #[test]
    fn quotient_blocks_group_by_blank_lines() {
        let text = "\
group g
gens a b
rel a b = b a

quotient perm a -> (1 2)
quotient perm b -> (1 2)

quotient perm a -> ()
quotient perm b -> ()
";
        let f = parse(text).unwrap();
        assert_eq!(f.quotients.len(), 2);
        assert_eq!(f.quotients[0].images.len(), 2);
        let printed = print(&f);
        let f2 = parse(&printed).unwrap();
        assert_eq!(f2.quotients.len(), 2);
    }

    #[test]
    fn table_roundtrip() {
        let q = crate::finite::quandle::core_quandle(3);
        let text = print_table("core3", &q);
        let q2 = parse_table(&text).unwrap();
        assert_eq!(q, q2);
    }
}
