//! A small structured-text format: `key: value` entries, `{ ... }` maps,
//! `[ ... ]` lists and bare or quoted scalars. Used for job files and
//! reports. Printing is canonical: map keys are sorted.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(String),
    List(Vec<Value>),
    Map(BTreeMap<String, Value>),
}

impl Value {
    pub fn map() -> Self {
        Value::Map(BTreeMap::new())
    }

    pub fn str(s: impl Into<String>) -> Self {
        Value::Scalar(s.into())
    }

    pub fn int(n: impl Into<i64>) -> Self {
        Value::Scalar(n.into().to_string())
    }

    pub fn bool(b: bool) -> Self {
        Value::Scalar(b.to_string())
    }

    pub fn list<T: Into<Value>>(items: impl IntoIterator<Item = T>) -> Self {
        Value::List(items.into_iter().map(Into::into).collect())
    }

    /// Inserts into a map value; panics on other variants.
    pub fn set(&mut self, key: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        match self {
            Value::Map(m) => {
                m.insert(key.into(), v.into());
            }
            _ => panic!("set on non-map value"),
        }
        self
    }

    pub fn with(mut self, key: impl Into<String>, v: impl Into<Value>) -> Self {
        self.set(key, v);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        match self {
            Value::Map(m) => m.get(key),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&str> {
        match self {
            Value::Scalar(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Value]> {
        match self {
            Value::List(l) => Some(l),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&BTreeMap<String, Value>> {
        match self {
            Value::Map(m) => Some(m),
            _ => None,
        }
    }

    fn is_flat(&self) -> bool {
        match self {
            Value::Scalar(_) => true,
            Value::List(l) => l.iter().all(|v| matches!(v, Value::Scalar(_))),
            Value::Map(m) => m.is_empty(),
        }
    }

    fn write_value(&self, out: &mut String, indent: usize) {
        match self {
            Value::Scalar(s) => out.push_str(&quote(s)),
            Value::List(l) if self.is_flat() => {
                out.push('[');
                for (i, v) in l.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    v.write_value(out, indent);
                }
                out.push(']');
            }
            Value::List(l) => {
                out.push_str("[\n");
                for v in l {
                    pad(out, indent + 1);
                    v.write_value(out, indent + 1);
                    out.push('\n');
                }
                pad(out, indent);
                out.push(']');
            }
            Value::Map(m) if m.is_empty() => out.push_str("{}"),
            Value::Map(m) => {
                out.push_str("{\n");
                for (k, v) in m {
                    pad(out, indent + 1);
                    let _ = write!(out, "{k}: ");
                    v.write_value(out, indent + 1);
                    out.push('\n');
                }
                pad(out, indent);
                out.push('}');
            }
        }
    }

    /// Top-level rendering of a map as a sequence of `key: value` lines.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        match self {
            Value::Map(m) => {
                for (k, v) in m {
                    let _ = write!(out, "{k}: ");
                    v.write_value(&mut out, 0);
                    out.push('\n');
                }
            }
            other => {
                other.write_value(&mut out, 0);
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_value(&mut s, 0);
        f.write_str(&s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Scalar(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Scalar(s)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::bool(b)
    }
}

macro_rules! int_into_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(n: $t) -> Self {
                Value::Scalar(n.to_string())
            }
        }
    )*};
}
int_into_value!(i32, i64, u32, u64, usize);

fn pad(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

const SPECIAL: &[char] = &[',', '[', ']', '{', '}', ':', '#', '"', '\n', '\\'];

fn quote(s: &str) -> String {
    let needs = s.is_empty() || s.trim() != s || s.contains(SPECIAL);
    if !needs {
        return s.to_string();
    }
    let mut out = String::from("\"");
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Job {
            location: format!("line {}", self.line),
            message: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    /// Skips blanks; with `newlines`, also newlines, separators and comments.
    fn skip(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            match c {
                ' ' | '\t' | '\r' => {
                    self.bump();
                }
                '#' => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '\n' | ',' if newlines => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    fn key(&mut self) -> Result<String> {
        let start_line = self.line;
        let mut k = String::new();
        loop {
            match self.peek() {
                Some(':') => {
                    self.bump();
                    break;
                }
                Some(c) if c == '\n' || SPECIAL.contains(&c) => {
                    return Err(self.err(format!("expected ':' after key {:?}", k.trim())))
                }
                Some(c) => {
                    k.push(c);
                    self.bump();
                }
                None => return Err(self.err(format!("unexpected end of input after key {:?}", k.trim()))),
            }
        }
        let k = k.split_whitespace().collect::<Vec<_>>().join(" ");
        if k.is_empty() {
            self.line = start_line;
            return Err(self.err("empty key"));
        }
        Ok(k)
    }

    fn entries(&mut self, close: Option<char>) -> Result<BTreeMap<String, Value>> {
        let mut m = BTreeMap::new();
        loop {
            self.skip(true);
            match (self.peek(), close) {
                (None, None) => return Ok(m),
                (None, Some(c)) => return Err(self.err(format!("missing '{c}'"))),
                (Some(c), Some(cl)) if c == cl => {
                    self.bump();
                    return Ok(m);
                }
                _ => {}
            }
            let line = self.line;
            let k = self.key()?;
            self.skip(false);
            let v = self.value()?;
            if m.insert(k.clone(), v).is_some() {
                return Err(Error::Job {
                    location: format!("line {line}"),
                    message: format!("duplicate key {k:?}"),
                });
            }
            self.skip(false);
            match self.peek() {
                None | Some('\n') | Some(',') | Some('#') => {}
                Some(c) if Some(c) == close => {}
                Some(c) => return Err(self.err(format!("unexpected {c:?} after value of {k:?}"))),
            }
        }
    }

    fn value(&mut self) -> Result<Value> {
        match self.peek() {
            Some('{') => {
                self.bump();
                Ok(Value::Map(self.entries(Some('}'))?))
            }
            Some('[') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip(true);
                    match self.peek() {
                        Some(']') => {
                            self.bump();
                            return Ok(Value::List(items));
                        }
                        None => return Err(self.err("missing ']'")),
                        _ => items.push(self.value()?),
                    }
                }
            }
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => return Ok(Value::Scalar(s)),
                        Some('\\') => match self.bump() {
                            Some('n') => s.push('\n'),
                            Some(c) => s.push(c),
                            None => return Err(self.err("unterminated string")),
                        },
                        Some(c) => s.push(c),
                        None => return Err(self.err("unterminated string")),
                    }
                }
            }
            _ => {
                let mut s = String::new();
                while let Some(c) = self.peek() {
                    if matches!(c, ',' | ']' | '}' | '\n' | '#') {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                let s = s.trim();
                if s.is_empty() {
                    return Err(self.err("missing value"));
                }
                Ok(Value::Scalar(s.to_string()))
            }
        }
    }
}

/// Parses a document into a top-level map.
pub fn parse(text: &str) -> Result<Value> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
    };
    Ok(Value::Map(p.entries(None)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_job_shape() {
        let doc = "ring: { char: 101, vars: [x, y], order: grevlex }\n\
                   module k: { gens: [0], relations: [[x, y]] }\n\
                   # comment\n\
                   command: grade\nmodule: k\n";
        let v = parse(doc).unwrap();
        assert_eq!(v.get("command").unwrap().as_scalar(), Some("grade"));
        let m = v.get("module k").unwrap();
        let rel = m.get("relations").unwrap().as_list().unwrap();
        assert_eq!(rel[0].as_list().unwrap()[1].as_scalar(), Some("y"));
    }

    #[test]
    fn polynomials_survive_as_bare_scalars() {
        let v = parse("p: [x^2 + 3*y*z - 1, 0]").unwrap();
        assert_eq!(v.get("p").unwrap().as_list().unwrap()[0].as_scalar(), Some("x^2 + 3*y*z - 1"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse("a: 1\nb: [1, 2\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = parse("a: 1\na: 2\n").unwrap_err();
        assert!(err.to_string().contains("line 2") && err.to_string().contains("duplicate"), "{err}");
        assert!(parse("a 1\n").is_err());
    }

    fn arb_value() -> impl Strategy<Value = Value> {
        let leaf = "[ -~]{0,8}".prop_map(Value::Scalar);
        leaf.prop_recursive(3, 24, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 0..4).prop_map(Value::List),
                prop::collection::btree_map("[a-z][a-z0-9_]{0,3}( [a-z0-9_]{1,3})?", inner, 0..4).prop_map(Value::Map),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(m in prop::collection::btree_map("[a-z][a-z0-9_]{0,6}", arb_value(), 0..5)) {
            let v = Value::Map(m);
            let text = v.to_document();
            prop_assert_eq!(parse(&text).unwrap(), v);
        }
    }
}
