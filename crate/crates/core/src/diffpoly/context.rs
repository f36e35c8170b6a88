use std::fmt;

use crate::error::{Error, Result};

/// A differential indeterminate, identified by its declaration index in a
/// [`Context`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

/// The `k`-th derivative of an indeterminate.
///
/// Ordered by declaration index first, then by derivative order; this is the
/// variable order used by the canonical monomial ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivVar {
    pub var: Var,
    pub order: u32,
}

impl DerivVar {
    pub fn new(var: Var, order: u32) -> Self {
        DerivVar { var, order }
    }

    /// The next derivative, `δ(self)`.
    pub fn shifted(self, by: u32) -> Self {
        DerivVar {
            var: self.var,
            order: self.order + by,
        }
    }
}

impl fmt::Debug for DerivVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}^({})", self.var.0, self.order)
    }
}

/// The declared indeterminates, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    names: Vec<String>,
}

impl Context {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("no indeterminates declared".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("`{name}` declared twice")));
            }
        }
        Ok(Context { names })
    }

    /// Parses a comma-separated declaration such as `"u,y"`.
    pub fn from_list(list: &str) -> Result<Self> {
        Context::new(list.split(',').map(str::trim))
    }

    pub fn var(&self, name: &str) -> Result<Var> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Var(i as u32))
            .ok_or_else(|| Error::UnknownIndeterminate(name.to_string()))
    }

    pub fn name(&self, var: Var) -> &str {
        &self.names[var.0 as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }

    /// The last declared indeterminate, the default main indeterminate.
    pub fn last(&self) -> Var {
        Var(self.names.len() as u32 - 1)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

/// Lowercase letter followed by lowercase letters or digits.
pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declaration_order_is_index_order() {
        let ctx = Context::from_list("u, y").unwrap();
        assert_eq!(ctx.var("u").unwrap(), Var(0));
        assert_eq!(ctx.var("y").unwrap(), Var(1));
        assert_eq!(ctx.last(), Var(1));
        assert_eq!(ctx.to_string(), "u,y");
    }

    #[test]
    fn rejects_bad_declarations() {
        assert!(Context::from_list("u,u").is_err());
        assert!(Context::from_list("Y").is_err());
        assert!(Context::from_list("1a").is_err());
        assert!(Context::new(Vec::<String>::new()).is_err());
        assert_eq!(
            Context::from_list("y").unwrap().var("z"),
            Err(Error::UnknownIndeterminate("z".into()))
        );
    }

    #[test]
    fn derivvar_order_is_index_then_order() {
        let u3 = DerivVar::new(Var(0), 3);
        let y0 = DerivVar::new(Var(1), 0);
        assert!(u3 < y0);
        assert!(y0 < y0.shifted(1));
    }
}
