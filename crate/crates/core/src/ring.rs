//! The ambient graded ring `R = F_p[x_1, ..., x_r]`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
}

/// How terms of free-module elements are compared.
///
/// `SchreyerInduced` uses term-over-position on ambient free modules and the
/// order induced by the leading terms of the previous differential on syzygy
/// levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    PositionOverTerm,
    TermOverPosition,
    SchreyerInduced,
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        })
    }
}

impl fmt::Display for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleOrder::PositionOverTerm => "pot",
            ModuleOrder::TermOverPosition => "top",
            ModuleOrder::SchreyerInduced => "schreyer",
        })
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order `{s}`"))),
        }
    }
}

impl std::str::FromStr for ModuleOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pot" | "position-over-term" => Ok(ModuleOrder::PositionOverTerm),
            "top" | "term-over-position" => Ok(ModuleOrder::TermOverPosition),
            "schreyer" | "schreyer-induced" => Ok(ModuleOrder::SchreyerInduced),
            _ => Err(Error::Parse(format!("unknown module order `{s}`"))),
        }
    }
}

/// Characteristic, variables and term orders of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
    module_order: ModuleOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(
        characteristic: u64,
        vars: &[&str],
        order: MonomialOrder,
        module_order: ModuleOrder,
    ) -> Result<Self> {
        let field = PrimeField::new(characteristic)?;
        if vars.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut seen = HashSet::new();
        for v in vars {
            if !is_identifier(v) {
                return Err(Error::Parse(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(*v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
        }
        Ok(Ring {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
            module_order,
        })
    }

    /// `F_101[vars]` with grevlex and the default Schreyer-induced module order.
    pub fn standard(vars: &[&str]) -> Result<RingRef> {
        Ok(Arc::new(Self::new(
            DEFAULT_CHARACTERISTIC,
            vars,
            MonomialOrder::Grevlex,
            ModuleOrder::SchreyerInduced,
        )?))
    }

    /// `F_101` in the first `r` of the variables `x, y, z, w, ...`.
    pub fn standard_in(r: usize) -> RingRef {
        const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];
        assert!((1..=NAMES.len()).contains(&r));
        Self::standard(&NAMES[..r]).expect("standard ring")
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn module_order(&self) -> ModuleOrder {
        self.module_order
    }

    pub fn with_module_order(&self, module_order: ModuleOrder) -> Ring {
        Ring {
            module_order,
            ..self.clone()
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::Grevlex => a.grevlex_cmp(b),
            MonomialOrder::Lex => a.lex_cmp(b),
        }
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.field.characteristic(), self.vars.join(","))
    }
}
