//! SMT-LIB2 subset reader.
//!
//! ```text
//! script   ::= command*
//! command  ::= (declare-const NAME Int) | (declare-fun NAME () Int)
//!            | (assert formula)                       ; exactly one
//!            | (set-logic ..) | (set-option ..) | (set-info ..)
//!            | (check-sat) | (get-model) | (exit)    ; ignored
//! formula  ::= true | false
//!            | (and formula*) | (or formula*) | (not formula)
//!            | (=> formula formula+)                  ; right associative
//!            | (REL term term+)                       ; chained, REL ∈ <= >= = < >
//! term     ::= NUMERAL | NAME | (+ term+) | (- term) | (- term term+)
//!            | (* term+)                              ; at most one non-constant factor
//! ```
//!
//! Variables are numbered in declaration order.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::formula::{Formula, LinearTerm, Rel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedFormula {
    pub names: Vec<String>,
    /// Negation normal form of the asserted formula.
    pub formula: Formula,
}

impl ParsedFormula {
    pub fn dim(&self) -> usize {
        self.names.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(text: &str) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' | ')' => {
                tokens.push(c.to_string());
                chars.next();
            }
            ';' => while chars.next_if(|&c| c != '\n').is_some() {},
            '|' => {
                chars.next();
                let mut sym = String::new();
                loop {
                    match chars.next() {
                        Some('|') => break,
                        Some(c) => sym.push(c),
                        None => return Err(Error::Parse("unterminated |symbol|".into())),
                    }
                }
                tokens.push(sym);
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let mut sym = String::new();
                while let Some(c) = chars.next_if(|&c| !c.is_whitespace() && !matches!(c, '(' | ')' | ';')) {
                    sym.push(c);
                }
                tokens.push(sym);
            }
        }
    }
    Ok(tokens)
}

fn read_sexps(tokens: &[String]) -> Result<Vec<Sexp>> {
    let mut stack: Vec<Vec<Sexp>> = vec![Vec::new()];
    for t in tokens {
        match t.as_str() {
            "(" => stack.push(Vec::new()),
            ")" => {
                let list =
                    stack.pop().filter(|_| !stack.is_empty()).ok_or_else(|| Error::Parse("unbalanced ')'".into()))?;
                stack.last_mut().expect("outer level").push(Sexp::List(list));
            }
            _ => stack.last_mut().expect("outer level").push(Sexp::Atom(t.clone())),
        }
    }
    if stack.len() != 1 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    Ok(stack.pop().expect("outer level"))
}

/// Reads declarations and the single assertion of a script.
pub fn parse_formula(text: &str) -> Result<ParsedFormula> {
    let mut names = Vec::new();
    let mut index = HashMap::new();
    let mut asserted = None;
    for cmd in read_sexps(&tokenize(text)?)? {
        let Sexp::List(items) = cmd else {
            return Err(Error::Parse("expected a command".into()));
        };
        let head = match items.first() {
            Some(Sexp::Atom(h)) => h.as_str(),
            _ => return Err(Error::Parse("expected a command name".into())),
        };
        match (head, &items[1..]) {
            ("declare-const", [Sexp::Atom(name), Sexp::Atom(sort)])
            | ("declare-fun", [Sexp::Atom(name), Sexp::List(_), Sexp::Atom(sort)]) => {
                if let ("declare-fun", [_, Sexp::List(args), _]) = (head, &items[1..]) {
                    if !args.is_empty() {
                        return Err(Error::Parse(format!("function '{name}' with arguments is not supported")));
                    }
                }
                if sort != "Int" {
                    return Err(Error::Parse(format!("variable '{name}' has sort {sort}, expected Int")));
                }
                if index.insert(name.clone(), names.len()).is_some() {
                    return Err(Error::Parse(format!("variable '{name}' declared twice")));
                }
                names.push(name.clone());
            }
            ("declare-const" | "declare-fun", _) => return Err(Error::Parse(format!("malformed {head}"))),
            ("assert", [body]) => {
                if asserted.is_some() {
                    return Err(Error::Parse("multiple asserts".into()));
                }
                asserted = Some(Reader { index: &index }.formula(body)?);
            }
            ("assert", _) => return Err(Error::Parse("assert takes one argument".into())),
            ("set-logic" | "set-option" | "set-info" | "check-sat" | "get-model" | "exit", _) => {}
            _ => return Err(Error::Parse(format!("unknown command '{head}'"))),
        }
    }
    let raw = asserted.ok_or_else(|| Error::Parse("no assert".into()))?;
    Ok(ParsedFormula { names, formula: raw.normalize()? })
}

struct Reader<'a> {
    index: &'a HashMap<String, usize>,
}

impl Reader<'_> {
    fn formula(&self, e: &Sexp) -> Result<Formula> {
        let items = match e {
            Sexp::Atom(a) if a == "true" => return Ok(Formula::tt()),
            Sexp::Atom(a) if a == "false" => return Ok(Formula::ff()),
            Sexp::Atom(a) if self.index.contains_key(a) => {
                return Err(Error::Parse(format!("integer variable '{a}' used as a formula")))
            }
            Sexp::Atom(a) => return Err(Error::Parse(format!("unknown symbol '{a}'"))),
            Sexp::List(items) => items,
        };
        let (head, args) = match items.split_first() {
            Some((Sexp::Atom(h), args)) => (h.as_str(), args),
            _ => return Err(Error::Parse("expected an operator".into())),
        };
        let subformulas = || args.iter().map(|a| self.formula(a)).collect::<Result<Vec<_>>>();
        match head {
            "and" => Ok(Formula::And(subformulas()?)),
            "or" => Ok(Formula::Or(subformulas()?)),
            "not" => match args {
                [a] => Ok(!self.formula(a)?),
                _ => Err(Error::Parse("not takes one argument".into())),
            },
            "=>" => {
                let mut fs = subformulas()?;
                if fs.len() < 2 {
                    return Err(Error::Parse("=> takes at least two arguments".into()));
                }
                let mut acc = fs.pop().expect("nonempty");
                while let Some(f) = fs.pop() {
                    acc = Formula::implies(f, acc);
                }
                Ok(acc)
            }
            "<=" | ">=" | "=" | "<" | ">" => {
                let terms = args.iter().map(|a| self.term(a)).collect::<Result<Vec<_>>>()?;
                if terms.len() < 2 {
                    return Err(Error::Parse(format!("{head} takes at least two arguments")));
                }
                let atoms = terms
                    .windows(2)
                    .map(|w| {
                        let (a, b) = (w[0].clone(), &w[1]);
                        Ok(match head {
                            "<=" => Formula::atom(a, Rel::Le, b.clone()),
                            ">=" => Formula::atom(a, Rel::Ge, b.clone()),
                            "=" => Formula::atom(a, Rel::Eq, b.clone()),
                            "<" => Formula::atom(a, Rel::Le, b.offset(-1)?),
                            _ => Formula::atom(a, Rel::Ge, b.offset(1)?),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(if atoms.len() == 1 { atoms.into_iter().next().expect("one atom") } else { Formula::And(atoms) })
            }
            _ => Err(Error::Parse(format!("unknown symbol '{head}'"))),
        }
    }

    fn term(&self, e: &Sexp) -> Result<LinearTerm> {
        let items = match e {
            Sexp::Atom(a) => {
                if let Some(&i) = self.index.get(a) {
                    return Ok(LinearTerm::var(i));
                }
                if a.chars().all(|c| c.is_ascii_digit()) {
                    let n = a.parse::<i64>().map_err(|_| Error::Parse(format!("literal {a} out of range")))?;
                    return Ok(LinearTerm::constant(n));
                }
                if a.starts_with(|c: char| c.is_ascii_alphabetic() || "_~!@$%^&*+-=<>.?/".contains(c)) {
                    return Err(Error::Parse(format!("undeclared variable '{a}'")));
                }
                return Err(Error::Parse(format!("unknown symbol '{a}'")));
            }
            Sexp::List(items) => items,
        };
        let (head, args) = match items.split_first() {
            Some((Sexp::Atom(h), args)) if !args.is_empty() => (h.as_str(), args),
            _ => return Err(Error::Parse("expected an arithmetic operator with arguments".into())),
        };
        let terms = args.iter().map(|a| self.term(a)).collect::<Result<Vec<_>>>()?;
        match head {
            "+" => terms.iter().try_fold(LinearTerm::constant(0), |acc, t| acc.add(t)),
            "-" if terms.len() == 1 => terms[0].scale(-1),
            "-" => terms[1..].iter().try_fold(terms[0].clone(), |acc, t| acc.sub(t)),
            "*" => {
                let mut k = 1i64;
                let mut var_factor: Option<&LinearTerm> = None;
                for t in &terms {
                    if t.is_constant() {
                        k = k.checked_mul(t.constant).ok_or(Error::Overflow)?;
                    } else if var_factor.replace(t).is_some() {
                        return Err(Error::Parse("non-linear term".into()));
                    }
                }
                match var_factor {
                    Some(t) => t.scale(k),
                    None => Ok(LinearTerm::constant(k)),
                }
            }
            _ => Err(Error::Parse(format!("unknown symbol '{head}'"))),
        }
    }
}
