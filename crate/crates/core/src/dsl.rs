//! A small language for naming groups.
//!
//! ```text
//! group  := term ("x" term)*
//! term   := primary (":" primary "[" action (";" action)* "]")?
//! primary:= atom | "(" group ")"
//! atom   := ("C"|"S"|"A"|"D"|"Q") integer | "perm" "{" perm ("," perm)* "}"
//! action := "inv" | gen "->" word ("," gen "->" word)*
//! ```
//!
//! `D n` is the dihedral group of order `n`. In a semidirect product
//! `K : Q [..]` the kernel generators are called `a`, `b`, .. in the order
//! they are declared, and there is one action per generator of `Q`.
//! Permutations are written in 1-based cycle notation, `(1 2 3)(4 5)`.

use std::fmt;

use crate::error::DslError;
use crate::group::{
    alternating, cyclic, dihedral, direct_product, quaternion8, semidirect_product, symmetric, FiniteGroup,
};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Symmetric,
    Alternating,
    Dihedral,
    Quaternion,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::Cyclic => 'C',
            Family::Symmetric => 'S',
            Family::Alternating => 'A',
            Family::Dihedral => 'D',
            Family::Quaternion => 'Q',
        }
    }
}

/// Product of powers of kernel generators; empty is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, i64)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// `x -> x^-1` on an abelian kernel.
    Inversion,
    /// Images of kernel generators; unlisted generators are fixed.
    Images(Vec<(usize, Word)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(Family, usize),
    /// Generators, each a list of 1-based cycles.
    Perm(Vec<Vec<Vec<u32>>>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect { kernel: Box<GroupSpec>, actor: Box<GroupSpec>, actions: Vec<Action> },
}

fn gen_name(i: usize) -> char {
    (b'a' + i as u8) as char
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| if e == 1 { gen_name(g).to_string() } else { format!("{}^{e}", gen_name(g)) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Inversion => write!(f, "inv"),
            Action::Images(images) => {
                let parts: Vec<String> = images.iter().map(|(g, w)| format!("{} -> {w}", gen_name(*g))).collect();
                write!(f, "{}", parts.join(", "))
            }
        }
    }
}

impl GroupSpec {
    fn fmt_primary(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(..) | GroupSpec::Perm(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Product(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    /// Top-level direct factors, left to right.
    pub fn factors(&self) -> Vec<&GroupSpec> {
        match self {
            GroupSpec::Product(l, r) => {
                let mut v = l.factors();
                v.extend(r.factors());
                v
            }
            other => vec![other],
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(fam, n) => write!(f, "{}{n}", fam.letter()),
            GroupSpec::Perm(gens) => {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            "()".to_string()
                        } else {
                            cycles
                                .iter()
                                .map(|c| format!("({})", c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")))
                                .collect()
                        }
                    })
                    .collect();
                write!(f, "perm{{{}}}", parts.join(", "))
            }
            GroupSpec::Product(l, r) => {
                write!(f, "{l} x ")?;
                r.fmt_term(f)
            }
            GroupSpec::Semidirect { kernel, actor, actions } => {
                kernel.fmt_primary(f)?;
                write!(f, " : ")?;
                actor.fmt_primary(f)?;
                let parts: Vec<String> = actions.iter().map(|a| a.to_string()).collect();
                write!(f, " [{}]", parts.join("; "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Family(Family),
    Perm,
    Inv,
    Times,
    Gen(usize),
    Int(u64),
    Arrow,
    Caret,
    Minus,
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Colon,
}

fn syntax(pos: usize, message: impl Into<String>) -> DslError {
    DslError::Syntax { pos, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, DslError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(chars[i].1.to_digit(10).unwrap() as u64))
                    .ok_or_else(|| syntax(pos, "integer too large"))?;
                i += 1;
            }
            out.push((pos, Tok::Int(v)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            if c.is_ascii_lowercase() {
                while i < chars.len() && chars[i].1.is_ascii_lowercase() {
                    i += 1;
                }
            }
            let word: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            let tok = match word.as_str() {
                "C" => Tok::Family(Family::Cyclic),
                "S" => Tok::Family(Family::Symmetric),
                "A" => Tok::Family(Family::Alternating),
                "D" => Tok::Family(Family::Dihedral),
                "Q" => Tok::Family(Family::Quaternion),
                "perm" => Tok::Perm,
                "inv" => Tok::Inv,
                "x" => Tok::Times,
                w if w.len() == 1 && w.as_bytes()[0].is_ascii_lowercase() => Tok::Gen((w.as_bytes()[0] - b'a') as usize),
                w => return Err(syntax(pos, format!("unknown identifier {w:?}"))),
            };
            out.push((pos, tok));
            continue;
        }
        let tok = match c {
            '-' if chars.get(i + 1).map(|p| p.1) == Some('>') => {
                i += 1;
                Tok::Arrow
            }
            '-' => Tok::Minus,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            ':' => Tok::Colon,
            other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), DslError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(pos, format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Result<u64, DslError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Int(v)) => Ok(v),
            _ => Err(syntax(pos, "expected an integer")),
        }
    }

    fn group(&mut self) -> Result<GroupSpec, DslError> {
        let mut g = self.term()?;
        while self.peek() == Some(&Tok::Times) {
            self.next();
            let r = self.term()?;
            g = GroupSpec::Product(Box::new(g), Box::new(r));
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<GroupSpec, DslError> {
        let kernel = self.primary()?;
        if self.peek() != Some(&Tok::Colon) {
            return Ok(kernel);
        }
        self.next();
        let actor = self.primary()?;
        self.expect(Tok::LBrack, "'[' opening the action")?;
        let mut actions = vec![self.action()?];
        while self.peek() == Some(&Tok::Semi) {
            self.next();
            actions.push(self.action()?);
        }
        self.expect(Tok::RBrack, "']' closing the action")?;
        Ok(GroupSpec::Semidirect { kernel: Box::new(kernel), actor: Box::new(actor), actions })
    }

    fn primary(&mut self) -> Result<GroupSpec, DslError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::LParen) => {
                let g = self.group()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(g)
            }
            Some(Tok::Family(f)) => Ok(GroupSpec::Named(f, self.int()? as usize)),
            Some(Tok::Perm) => {
                self.expect(Tok::LBrace, "'{' after perm")?;
                let mut gens = vec![self.perm()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.next();
                    gens.push(self.perm()?);
                }
                self.expect(Tok::RBrace, "'}' closing perm")?;
                Ok(GroupSpec::Perm(gens))
            }
            _ => Err(syntax(pos, "expected a group: C n, S n, A n, D n, Q8, perm{..} or '('")),
        }
    }

    fn perm(&mut self) -> Result<Vec<Vec<u32>>, DslError> {
        let mut cycles = Vec::new();
        if self.peek() != Some(&Tok::LParen) {
            return Err(syntax(self.pos(), "expected a cycle"));
        }
        while self.peek() == Some(&Tok::LParen) {
            self.next();
            let mut cycle = Vec::new();
            while let Some(Tok::Int(_)) = self.peek() {
                cycle.push(self.int()? as u32);
            }
            self.expect(Tok::RParen, "')' closing a cycle")?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Ok(cycles)
    }

    fn action(&mut self) -> Result<Action, DslError> {
        if self.peek() == Some(&Tok::Inv) {
            self.next();
            return Ok(Action::Inversion);
        }
        let mut images = vec![self.image()?];
        while self.peek() == Some(&Tok::Comma) {
            self.next();
            images.push(self.image()?);
        }
        Ok(Action::Images(images))
    }

    fn image(&mut self) -> Result<(usize, Word), DslError> {
        let pos = self.pos();
        let Some(Tok::Gen(g)) = self.next() else {
            return Err(syntax(pos, "expected a kernel generator name"));
        };
        self.expect(Tok::Arrow, "'->'")?;
        Ok((g, self.word()?))
    }

    fn word(&mut self) -> Result<Word, DslError> {
        let mut factors = Vec::new();
        if self.peek() == Some(&Tok::Int(1)) {
            self.next();
            return Ok(Word(factors));
        }
        while let Some(Tok::Gen(g)) = self.peek() {
            let g = *g;
            self.next();
            let mut e = 1i64;
            if self.peek() == Some(&Tok::Caret) {
                self.next();
                let neg = self.peek() == Some(&Tok::Minus);
                if neg {
                    self.next();
                }
                e = self.int()? as i64;
                if neg {
                    e = -e;
                }
            }
            factors.push((g, e));
        }
        if factors.is_empty() {
            return Err(syntax(self.pos(), "expected a word in the kernel generators"));
        }
        Ok(Word(factors))
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, DslError> {
    if text.trim().is_empty() {
        return Err(syntax(0, "empty group specification"));
    }
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let g = p.group()?;
    if p.at < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(g)
}

fn semantic(m: impl Into<String>) -> DslError {
    DslError::Semantic(m.into())
}

/// Builds the permutation group described by `spec`.
pub fn build(spec: &GroupSpec) -> Result<FiniteGroup, DslError> {
    match spec {
        GroupSpec::Named(fam, n) => {
            let n = *n;
            Ok(match fam {
                Family::Cyclic if n >= 1 => cyclic(n)?,
                Family::Symmetric if n >= 1 => symmetric(n)?,
                Family::Alternating if n >= 1 => alternating(n)?,
                Family::Dihedral if n >= 4 && n % 2 == 0 => dihedral(n)?,
                Family::Dihedral => return Err(semantic(format!("D{n}: dihedral order must be even and at least 4"))),
                Family::Quaternion if n == 8 => quaternion8()?,
                Family::Quaternion => return Err(semantic(format!("Q{n}: only Q8 is available"))),
                _ => return Err(semantic(format!("{}{n}: index must be positive", fam.letter()))),
            })
        }
        GroupSpec::Perm(gens) => {
            let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1) as usize;
            let mut perms = Vec::with_capacity(gens.len());
            for cycles in gens {
                let zero: Vec<Vec<u32>> = cycles
                    .iter()
                    .map(|c| {
                        c.iter().map(|&p| p.checked_sub(1).ok_or_else(|| semantic("points are numbered from 1"))).collect()
                    })
                    .collect::<Result<_, _>>()?;
                perms.push(Permutation::from_cycles(degree, &zero).map_err(|e| semantic(e.to_string()))?);
            }
            Ok(FiniteGroup::new(degree, perms)?)
        }
        GroupSpec::Product(l, r) => Ok(direct_product(&build(l)?, &build(r)?)?),
        GroupSpec::Semidirect { kernel, actor, actions } => {
            let k = build(kernel)?;
            let q = build(actor)?;
            if actions.len() != q.generators().len() {
                return Err(semantic(format!(
                    "actor has {} generators but {} actions were given",
                    q.generators().len(),
                    actions.len()
                )));
            }
            let gens = k.generator_indices().to_vec();
            let mut auts = Vec::with_capacity(actions.len());
            for a in actions {
                let images = match a {
                    Action::Inversion => {
                        if !k.is_abelian() {
                            return Err(semantic("inversion is an automorphism only of an abelian kernel"));
                        }
                        gens.iter().map(|&g| k.inv(g)).collect()
                    }
                    Action::Images(list) => {
                        let mut images = gens.clone();
                        for (g, w) in list {
                            if *g >= gens.len() {
                                return Err(semantic(format!(
                                    "kernel has {} generators; {} is not one of them",
                                    gens.len(),
                                    gen_name(*g)
                                )));
                            }
                            images[*g] = eval_word(&k, w)?;
                        }
                        images
                    }
                };
                auts.push(images);
            }
            semidirect_product(&k, &q, &auts).map_err(|e| semantic(e.to_string()))
        }
    }
}

fn eval_word(k: &FiniteGroup, w: &Word) -> Result<usize, DslError> {
    let gens = k.generator_indices();
    let mut acc = 0usize;
    for &(g, e) in &w.0 {
        let &x = gens.get(g).ok_or_else(|| semantic(format!("{} is not a kernel generator", gen_name(g))))?;
        let base = if e < 0 { k.inv(x) } else { x };
        acc = k.mul(acc, k.pow(base, e.unsigned_abs()));
    }
    Ok(acc)
}

/// Parses and builds in one step.
pub fn group_from_spec(text: &str) -> Result<FiniteGroup, DslError> {
    build(&parse_group_spec(text)?)
}
