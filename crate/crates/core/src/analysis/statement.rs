//! A small language of statements about arithmetic subsequences, decided on
//! product machines.
//!
//! `#` starts a comment running to the end of the line.
//!
//! ```text
//! forall n >= 1 : exists k in {-1..6} : c[9*n+k] = 0
//! forall n >= 1 : forall k in {-1..2} :
//!     c[9n+k] = c[9n+k+1] & c[9n+k+1] = c[9n+k+2] -> c[9n+k] = 0
//! ```

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::progression::{log_radix, progression_automaton};
use crate::dfao::Dfao;
use crate::error::{Error, Result};

/// Indices below this are checked by direct enumeration.
pub const DIRECT_BELOW: u64 = 1 << 12;

/// `Σ coeff·var + constant`; the variable `n` is the statement's.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Linear {
    n: i64,
    vars: Vec<(String, i64)>,
    constant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct TermExpr {
    seq: String,
    index: Linear,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rhs {
    Const(i64),
    Term(TermExpr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Atom { left: TermExpr, equal: bool, right: Rhs },
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Quant { exists: bool, var: String, lo: i64, hi: i64, body: Box<Expr> },
}

/// A parsed `forall n >= n0 : ...` statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub floor: u64,
    body: Expr,
    text: String,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text.trim())
    }
}

/// `SEQ[m·n + c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Term {
    pub seq: String,
    pub multiplier: i64,
    pub offset: i64,
}

/// Quantifier-free form over a numbered list of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Formula {
    Eq(usize, usize),
    EqConst(usize, i64),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    fn eval(&self, value: &dyn Fn(usize) -> u32, modulus: &dyn Fn(usize) -> u32) -> bool {
        match self {
            Formula::Eq(a, b) => value(*a) == value(*b),
            Formula::EqConst(a, c) => value(*a) as i64 == c.rem_euclid(modulus(*a) as i64),
            Formula::Not(f) => !f.eval(value, modulus),
            Formula::And(fs) => fs.iter().all(|f| f.eval(value, modulus)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(value, modulus)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(&'static str),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    const SYMS: [&str; 17] = ["->", ">=", "!=", "..", "[", "]", "{", "}", "(", ")", ":", "+", "-", "*", "=", "!", "&"];
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '|' {
            out.push(Tok::Sym("|"));
            i += 1;
            continue;
        }
        for sym in SYMS {
            if s[i..].starts_with(sym) {
                out.push(Tok::Sym(sym));
                i += sym.len();
                continue 'outer;
            }
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v = s[start..i].parse().map_err(|_| Error::Statement(format!("integer too large: {}", &s[start..i])))?;
            out.push(Tok::Int(v));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            out.push(Tok::Ident(s[start..i].to_string()));
        } else {
            return Err(Error::Statement(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(x)) if x == s)
    }

    fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.is_sym(s) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{s}`")))
        }
    }

    fn expect_ident(&mut self, s: &str) -> Result<()> {
        if self.is_ident(s) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{s}`")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        match self.peek() {
            Some(t) => Error::Statement(format!("{msg}, found {t:?} at token {}", self.pos)),
            None => Error::Statement(format!("{msg}, found end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if self.is_sym("-") {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(v)) => Ok(if neg { -v } else { v }),
            _ => {
                self.pos -= 1;
                Err(self.error("expected an integer"))
            }
        }
    }

    fn statement(&mut self) -> Result<(u64, Expr)> {
        self.expect_ident("forall")?;
        self.expect_ident("n")?;
        let floor = if self.is_sym(">=") {
            self.pos += 1;
            let v = self.int()?;
            u64::try_from(v).map_err(|_| Error::Statement("floor must be non-negative".into()))?
        } else {
            0
        };
        self.expect_sym(":")?;
        let body = self.formula()?;
        if self.pos != self.toks.len() {
            return Err(self.error("trailing input"));
        }
        Ok((floor, body))
    }

    fn formula(&mut self) -> Result<Expr> {
        let left = self.disjunction()?;
        if self.is_sym("->") {
            self.pos += 1;
            let right = self.formula()?;
            return Ok(Expr::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Expr> {
        let mut e = self.conjunction()?;
        while self.is_sym("|") {
            self.pos += 1;
            e = Expr::Or(Box::new(e), Box::new(self.conjunction()?));
        }
        Ok(e)
    }

    fn conjunction(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.is_sym("&") {
            self.pos += 1;
            e = Expr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.is_sym("!") {
            self.pos += 1;
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        if self.is_sym("(") {
            self.pos += 1;
            let e = self.formula()?;
            self.expect_sym(")")?;
            return Ok(e);
        }
        if self.is_ident("exists") || self.is_ident("forall") {
            let exists = self.is_ident("exists");
            self.pos += 1;
            let var = match self.bump() {
                Some(Tok::Ident(v)) if v != "n" => v,
                _ => {
                    self.pos -= 1;
                    return Err(self.error("expected a bound variable other than n"));
                }
            };
            self.expect_ident("in")?;
            self.expect_sym("{")?;
            let lo = self.int()?;
            self.expect_sym("..")?;
            let hi = self.int()?;
            self.expect_sym("}")?;
            self.expect_sym(":")?;
            let body = self.formula()?;
            return Ok(Expr::Quant { exists, var, lo, hi, body: Box::new(body) });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        let left = self.term()?;
        let equal = if self.is_sym("=") {
            true
        } else if self.is_sym("!=") {
            false
        } else {
            return Err(self.error("expected `=` or `!=`"));
        };
        self.pos += 1;
        let right = match self.peek() {
            Some(Tok::Ident(_)) => Rhs::Term(self.term()?),
            _ => Rhs::Const(self.int()?),
        };
        Ok(Expr::Atom { left, equal, right })
    }

    fn term(&mut self) -> Result<TermExpr> {
        let seq = match self.bump() {
            Some(Tok::Ident(s)) => s,
            _ => {
                self.pos -= 1;
                return Err(self.error("expected a sequence name"));
            }
        };
        self.expect_sym("[")?;
        let index = self.linear()?;
        self.expect_sym("]")?;
        Ok(TermExpr { seq, index })
    }

    fn linear(&mut self) -> Result<Linear> {
        let mut lin = Linear { n: 0, vars: Vec::new(), constant: 0 };
        let mut first = true;
        loop {
            let sign = if self.is_sym("+") && !first {
                self.pos += 1;
                1
            } else if self.is_sym("-") {
                self.pos += 1;
                -1
            } else if first {
                1
            } else {
                break;
            };
            first = false;
            let coeff = match self.peek() {
                Some(Tok::Int(v)) => {
                    let v = *v;
                    self.pos += 1;
                    if self.is_sym("*") {
                        self.pos += 1;
                    }
                    Some(v)
                }
                _ => None,
            };
            match self.peek() {
                Some(Tok::Ident(v)) => {
                    let v = v.clone();
                    self.pos += 1;
                    let c = sign * coeff.unwrap_or(1);
                    if v == "n" {
                        lin.n += c;
                    } else {
                        lin.vars.push((v, c));
                    }
                }
                _ => match coeff {
                    Some(c) => lin.constant += sign * c,
                    None => return Err(self.error("expected a number or variable")),
                },
            }
        }
        Ok(lin)
    }
}

impl Statement {
    pub fn parse(text: &str) -> Result<Statement> {
        let text: Vec<&str> = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).collect();
        let text = text.join(" ");
        let toks = tokenize(&text)?;
        let mut p = Parser { toks, pos: 0 };
        let (floor, body) = p.statement()?;
        Ok(Statement { floor, body, text })
    }

    /// Expand finite quantifiers; returns the terms and the formula over them.
    fn expand(&self) -> Result<(Vec<Term>, Formula)> {
        let mut terms: Vec<Term> = Vec::new();
        let mut env: HashMap<String, i64> = HashMap::new();
        let f = expand(&self.body, &mut env, &mut terms)?;
        Ok((terms, f))
    }

    /// The distinct terms after expansion, in order of first appearance.
    pub fn terms(&self) -> Result<Vec<Term>> {
        Ok(self.expand()?.0)
    }
}

fn expand(e: &Expr, env: &mut HashMap<String, i64>, terms: &mut Vec<Term>) -> Result<Formula> {
    let mut intern = |t: &TermExpr, env: &HashMap<String, i64>| -> Result<usize> {
        let mut offset = t.index.constant;
        for (v, c) in &t.index.vars {
            let x = env.get(v).ok_or_else(|| Error::Statement(format!("unbound variable `{v}`")))?;
            offset += c * x;
        }
        let term = Term { seq: t.seq.clone(), multiplier: t.index.n, offset };
        Ok(match terms.iter().position(|x| *x == term) {
            Some(i) => i,
            None => {
                terms.push(term);
                terms.len() - 1
            }
        })
    };
    Ok(match e {
        Expr::Atom { left, equal, right } => {
            let a = intern(left, env)?;
            let f = match right {
                Rhs::Const(c) => Formula::EqConst(a, *c),
                Rhs::Term(t) => Formula::Eq(a, intern(t, env)?),
            };
            if *equal {
                f
            } else {
                Formula::Not(Box::new(f))
            }
        }
        Expr::Not(x) => Formula::Not(Box::new(expand(x, env, terms)?)),
        Expr::And(x, y) => Formula::And(vec![expand(x, env, terms)?, expand(y, env, terms)?]),
        Expr::Or(x, y) => Formula::Or(vec![expand(x, env, terms)?, expand(y, env, terms)?]),
        Expr::Implies(x, y) => {
            Formula::Or(vec![Formula::Not(Box::new(expand(x, env, terms)?)), expand(y, env, terms)?])
        }
        Expr::Quant { exists, var, lo, hi, body } => {
            if hi < lo || hi - lo > 1000 {
                return Err(Error::Statement(format!("range {{{lo}..{hi}}} is empty or too long")));
            }
            let saved = env.get(var).copied();
            let mut parts = Vec::new();
            for k in *lo..=*hi {
                env.insert(var.clone(), k);
                parts.push(expand(body, env, terms)?);
            }
            match saved {
                Some(v) => env.insert(var.clone(), v),
                None => env.remove(var),
            };
            if *exists {
                Formula::Or(parts)
            } else {
                Formula::And(parts)
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// Least `n ≥ floor` violating the statement.
    pub counterexample: Option<u64>,
    pub terms: Vec<Term>,
    /// Reachable states of the product machine.
    pub product_states: usize,
    /// Values of `n` below this were enumerated directly.
    pub enumerated_below: u64,
}

fn common_multiplier(terms: &[Term]) -> Result<i64> {
    let m = terms.first().map(|t| t.multiplier).ok_or_else(|| Error::Statement("statement mentions no terms".into()))?;
    if terms.iter().any(|t| t.multiplier != m) {
        return Err(Error::Statement("all terms must share one multiplier of n".into()));
    }
    if m < 1 {
        return Err(Error::Statement("the multiplier of n must be positive".into()));
    }
    Ok(m)
}

fn index(t: &Term, n: u64) -> Result<u128> {
    let v = t.multiplier as i128 * n as i128 + t.offset as i128;
    u128::try_from(v).map_err(|_| Error::UndefinedIndex(format!("{}[{v}] for n = {n}", t.seq)))
}

/// Decide the statement for every `n ≥ floor` on the product of the
/// progression machines of its terms.
pub fn verify_statement(s: &Statement, machines: &BTreeMap<String, Dfao>) -> Result<Verdict> {
    let (terms, formula) = s.expand()?;
    let m = common_multiplier(&terms)?;
    let lookup = |name: &str| machines.get(name).ok_or_else(|| Error::UnknownSequence(name.to_string()));
    let radix = lookup(&terms[0].seq)?.radix();
    for t in &terms {
        if lookup(&t.seq)?.radix() != radix {
            return Err(Error::Statement("machines read different bases".into()));
        }
        if (m as i128) * (s.floor as i128) + (t.offset as i128) < 0 {
            return Err(Error::UndefinedIndex(format!("{}[{}n{:+}] at n = {}", t.seq, m, t.offset, s.floor)));
        }
    }
    if log_radix(m as u64, radix).is_none() {
        return Err(Error::Statement(format!("multiplier {m} is not a power of {radix}")));
    }
    let moduli: Vec<u32> = terms.iter().map(|t| lookup(&t.seq).map(|a| a.modulus().get())).collect::<Result<_>>()?;
    let modulus = |i: usize| moduli[i];
    let verdict = |counterexample: Option<u64>, product_states: usize, start: u64| Verdict {
        holds: counterexample.is_none(),
        counterexample,
        terms: terms.clone(),
        product_states,
        enumerated_below: start,
    };

    let start = s.floor.max(DIRECT_BELOW);
    for n in s.floor..start {
        let vals: Vec<u32> = terms
            .iter()
            .map(|t| Ok(lookup(&t.seq)?.evaluate(index(t, n)?).value()))
            .collect::<Result<_>>()?;
        if !formula.eval(&|i| vals[i], &modulus) {
            return Ok(verdict(Some(n), 0, start));
        }
    }

    // n = n' + start for n' ≥ 0, so every index is defined
    let progs = terms
        .iter()
        .map(|t| progression_automaton(lookup(&t.seq)?, m as u64, t.offset + m * start as i64).map(|p| p.machine))
        .collect::<Result<Vec<_>>>()?;
    let mut index_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let init: Vec<usize> = progs.iter().map(Dfao::initial).collect();
    index_of.insert(init.clone(), 0);
    let mut tuples = vec![init];
    let mut next: Vec<Vec<usize>> = Vec::new();
    let mut failing = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let tuple = tuples[i].clone();
        if !formula.eval(&|t| progs[t].out(tuple[t]), &modulus) {
            failing.push(i);
        }
        let mut row = Vec::with_capacity(radix as usize);
        for d in 0..radix {
            let child: Vec<usize> = tuple.iter().zip(&progs).map(|(&q, a)| a.next(q, d)).collect();
            let id = match index_of.get(&child) {
                Some(&id) => id,
                None => {
                    let id = tuples.len();
                    index_of.insert(child.clone(), id);
                    tuples.push(child);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if next.len() <= i {
            next.resize(i + 1, Vec::new());
        }
        next[i] = row;
    }
    let count = tuples.len();
    if failing.is_empty() {
        return Ok(verdict(None, count, start));
    }
    let least = least_accepted(&next, radix, &failing);
    Ok(verdict(Some(start + least as u64), count, start))
}

/// Least number whose LSD-first word leads from state 0 into `targets`.
/// Failure depends on the number only, so the least one has a word of the
/// shortest length reaching `targets`; among those words the digits are
/// fixed from the most significant end down.
fn least_accepted(next: &[Vec<usize>], radix: u32, targets: &[usize]) -> u128 {
    let n = next.len();
    let mut target = vec![false; n];
    for &t in targets {
        target[t] = true;
    }
    let mut layers: Vec<Vec<bool>> = vec![{
        let mut v = vec![false; n];
        v[0] = true;
        v
    }];
    while !layers.last().expect("nonempty").iter().zip(&target).any(|(&a, &b)| a && b) {
        let last = layers.last().expect("nonempty");
        let mut v = vec![false; n];
        for q in (0..n).filter(|&q| last[q]) {
            for &t in &next[q] {
                v[t] = true;
            }
        }
        layers.push(v);
    }
    let len = layers.len() - 1;
    let mut value = 0u128;
    for i in (0..len).rev() {
        let (d, allowed) = (0..radix)
            .find_map(|d| {
                let ok: Vec<bool> = (0..n).map(|q| layers[i][q] && target[next[q][d as usize]]).collect();
                ok.iter().any(|&b| b).then_some((d, ok))
            })
            .expect("a path of this length exists");
        value = value * radix as u128 + d as u128;
        target = allowed;
    }
    value
}

/// Evaluate the statement directly from term oracles for `floor ≤ n < upto`;
/// returns the least counterexample.
pub fn brute_force(s: &Statement, oracles: &BTreeMap<String, (Vec<u32>, u32)>, upto: u64) -> Result<Option<u64>> {
    let (terms, formula) = s.expand()?;
    common_multiplier(&terms)?;
    let mut moduli = Vec::new();
    for t in &terms {
        let (values, p) = oracles.get(&t.seq).ok_or_else(|| Error::UnknownSequence(t.seq.clone()))?;
        if upto > s.floor {
            let need = index(t, upto - 1)? as usize + 1;
            if values.len() < need {
                return Err(Error::OracleTooShort { have: values.len(), need });
            }
        }
        moduli.push(*p);
    }
    for n in s.floor..upto {
        let vals: Vec<u32> = terms
            .iter()
            .map(|t| Ok(oracles[&t.seq].0[index(t, n)? as usize]))
            .collect::<Result<_>>()?;
        if !formula.eval(&|i| vals[i], &|i| moduli[i]) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    fn thue2() -> Dfao {
        Dfao::from_table(2, Prime::new(2).unwrap(), 0, vec![0, 1], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn setup() -> (BTreeMap<String, Dfao>, BTreeMap<String, (Vec<u32>, u32)>) {
        let t: Vec<u32> = (0..200_000u32).map(|n| n.count_ones() % 2).collect();
        (BTreeMap::from([("t".to_string(), thue2())]), BTreeMap::from([("t".to_string(), (t, 2))]))
    }

    #[test]
    fn parses_the_grammar() {
        let s = Statement::parse("forall n >= 1 : exists k in {-1..6} : c[9*n+k] = 0").unwrap();
        assert_eq!(s.floor, 1);
        let terms = s.terms().unwrap();
        assert_eq!(terms.len(), 8);
        assert_eq!(terms[0], Term { seq: "c".into(), multiplier: 9, offset: -1 });
        let s = Statement::parse("forall n : forall k in {0..1} : v[4n+k+2] != 1 | !(v[4n - 3 + 5] = v[4n+3])").unwrap();
        assert_eq!(s.terms().unwrap().len(), 2);
        for bad in ["exists n : t[n] = 0", "forall n : t[n] =", "forall n : t[n] = 0 0", "forall n : t[k] = 0"] {
            assert!(Statement::parse(bad).and_then(|s| s.terms()).is_err(), "{bad}");
        }
    }

    #[test]
    fn thue_morse_facts() {
        let (machines, oracles) = setup();
        // t(2n+1) = 1 - t(2n) always
        let s = Statement::parse("# comment\nforall n >= 0 :  # trailing\n  t[2n] != t[2n+1]\n").unwrap();
        assert_eq!(s.to_string(), "forall n >= 0 : t[2n] != t[2n+1]");
        let v = verify_statement(&s, &machines).unwrap();
        assert!(v.holds);
        assert_eq!(brute_force(&s, &oracles, 10_000).unwrap(), None);
        // there are no three equal consecutive terms
        let s = Statement::parse("forall n : !(t[n] = t[n+1] & t[n+1] = t[n+2])").unwrap();
        assert!(verify_statement(&s, &machines).unwrap().holds);
    }

    #[test]
    fn counterexamples_agree_with_brute_force() {
        let (machines, oracles) = setup();
        for text in [
            "forall n >= 0 : t[4n+1] = 1",
            "forall n >= 3 : t[n] = t[n+1]",
            "forall n >= 0 : exists k in {0..2} : t[8n+k] = 1 -> t[8n+k] = t[8n+k+4]",
        ] {
            let s = Statement::parse(text).unwrap();
            let v = verify_statement(&s, &machines).unwrap();
            let b = brute_force(&s, &oracles, 10_000).unwrap();
            match v.counterexample {
                Some(n) if n < 10_000 => assert_eq!(b, Some(n), "{text}"),
                _ => assert_eq!(b, None, "{text}"),
            }
        }
    }

    #[test]
    fn counterexample_past_the_cutoff() {
        let (machines, oracles) = setup();
        for (text, first) in [("forall n >= 5000 : t[n] = 0", 5000), ("forall n >= 4097 : t[4n+3] = 0", 4099)] {
            let s = Statement::parse(text).unwrap();
            let v = verify_statement(&s, &machines).unwrap();
            assert_eq!(v.enumerated_below, s.floor);
            assert_eq!(v.counterexample, Some(first));
            assert_eq!(brute_force(&s, &oracles, 40_000).unwrap(), Some(first));
        }
    }

    #[test]
    fn mixed_multipliers_are_rejected() {
        let (machines, _) = setup();
        let s = Statement::parse("forall n : t[2n] = t[4n]").unwrap();
        assert!(verify_statement(&s, &machines).is_err());
        let s = Statement::parse("forall n : t[3n] = 0").unwrap();
        assert!(verify_statement(&s, &machines).is_err());
        let s = Statement::parse("forall n : t[n-1] = 0").unwrap();
        assert!(matches!(verify_statement(&s, &machines), Err(Error::UndefinedIndex(_))));
    }
}
