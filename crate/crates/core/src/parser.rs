//! Text syntax for differential polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '-'? factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | derivvar | '(' expr ')'
//! derivvar := ident "'"* | ident '^(' nat ')'
//! rational := int ('/' nat)?
//! ident    := [a-z][a-z0-9]*
//! ```
//!
//! `y'''` and `y^(3)` denote the same variable. [`format`] produces the
//! canonical rendering, which [`parse`] reads back to the same polynomial.

use std::fmt::{Display, Write};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::diffpoly::{Context, DerivVar, Monomial, Poly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::{DiffPoly, Rational};

/// Parses `text` against the declared indeterminates.
pub fn parse(text: &str, ctx: &Context) -> Result<DiffPoly> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.expected("expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.expected("operator or end of input"));
    }
    Ok(p)
}

/// Parses a single derivative variable such as `y''` or `u^(5)`.
pub fn parse_derivvar(text: &str, ctx: &Context) -> Result<DerivVar> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    parser.skip_ws();
    let v = parser.derivvar()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.expected("end of input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Skips whitespace and consumes `c` if it is next.
    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: what.to_string(),
        }
    }

    fn expr(&mut self) -> Result<DiffPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<DiffPoly> {
        let negate = self.eat(b'-');
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<DiffPoly> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.nat()?;
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<DiffPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.expected("`)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.rational()?)),
            Some(c) if c.is_ascii_lowercase() => Ok(Poly::var(self.derivvar()?)),
            _ => Err(self.expected("number, indeterminate or `(`")),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.digits()?;
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                self.pos = at;
                return Err(self.expected("non-zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            self.pos = save;
            Ok(Rational::from_integer(numer))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected("digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse as an integer"))
    }

    fn nat(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| Error::ExponentOutOfRange(start))
    }

    fn derivvar(&mut self) -> Result<DerivVar> {
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_lowercase()) {
            return Err(self.expected("indeterminate"));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let var = self.ctx.var(name)?;

        let mut primes = 0u32;
        while self.eat(b'\'') {
            primes = primes.checked_add(1).ok_or(Error::ExponentOutOfRange(self.pos))?;
        }
        if primes > 0 {
            return Ok(DerivVar::new(var, primes));
        }

        // `ident ^ ( nat )` is derivative notation; `ident ^ nat` is left to `factor`.
        let save = self.pos;
        if self.eat(b'^') && self.eat(b'(') {
            self.skip_ws();
            let order = self.nat()?;
            if !self.eat(b')') {
                return Err(self.expected("`)`"));
            }
            return Ok(DerivVar::new(var, order));
        }
        self.pos = save;
        Ok(DerivVar::new(var, 0))
    }
}

/// Canonical text of a polynomial: terms in descending canonical order,
/// factors within a term in ascending variable order, unit coefficients
/// omitted, `"0"` for the zero polynomial.
pub fn format<C>(p: &Poly<C>, ctx: &Context) -> String
where
    C: Scalar + Display + Signed,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            write!(out, "{abs}").unwrap();
        } else {
            if !abs.is_one() {
                write!(out, "{abs}*").unwrap();
            }
            out.push_str(&format_monomial(m, ctx));
        }
    }
    out
}

pub fn format_monomial(m: &Monomial, ctx: &Context) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.factors()
        .iter()
        .map(|&(v, e)| {
            let var = format_derivvar(v, ctx);
            match (e, v.order) {
                (1, _) => var,
                (_, 0) => format!("{var}^{e}"),
                _ => format!("({var})^{e}"),
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_derivvar(v: DerivVar, ctx: &Context) -> String {
    let name = ctx.name(v.var);
    if v.order <= 3 {
        format!("{name}{}", "'".repeat(v.order as usize))
    } else {
        format!("{name}^({})", v.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::Var;
    use proptest::prelude::*;

    fn ctx() -> Context {
        Context::from_list("u,y").unwrap()
    }
    fn y(k: u32) -> DerivVar {
        DerivVar::new(Var(1), k)
    }
    fn u(k: u32) -> DerivVar {
        DerivVar::new(Var(0), k)
    }
    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn direct_denotation() {
        let p = parse("y'' * y - (y')^2", &ctx()).unwrap();
        let expected = Poly::from_terms([
            (Monomial::from_factors([(y(2), 1), (y(0), 1)]), q(1, 1)),
            (Monomial::power(y(1), 2), q(-1, 1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn caret_and_primes_agree() {
        let c = ctx();
        assert_eq!(parse("y^(3)", &c).unwrap(), parse("y'''", &c).unwrap());
        assert_eq!(parse("y^(0)", &c).unwrap(), parse("y", &c).unwrap());
        assert_eq!(parse("y^(3)^2", &c).unwrap(), parse("(y''')^2", &c).unwrap());
        assert_eq!(parse("y'^2", &c).unwrap(), parse("(y')^2", &c).unwrap());
    }

    #[test]
    fn rational_literals() {
        let p = parse("3/4 * u' + 2", &ctx()).unwrap();
        let expected = Poly::from_terms([(Monomial::var(u(1)), q(3, 4)), (Monomial::one(), q(2, 1))]);
        assert_eq!(p, expected);
        assert_eq!(parse("6/8", &ctx()).unwrap(), Poly::constant(q(3, 4)));
    }

    #[test]
    fn unary_minus_and_precedence() {
        let c = ctx();
        assert_eq!(parse("-y^2", &c).unwrap(), -parse("y*y", &c).unwrap());
        assert_eq!(parse("2 - -y", &c).unwrap(), parse("2 + y", &c).unwrap());
        assert_eq!(parse("2*y^2*u", &c).unwrap(), parse("u*(y^2)*2", &c).unwrap());
        assert_eq!(parse("(u + 1)^2", &c).unwrap(), parse("u^2 + 2*u + 1", &c).unwrap());
    }

    #[test]
    fn format_examples() {
        let c = ctx();
        assert_eq!(format(&DiffPoly::zero(), &c), "0");
        assert_eq!(format(&Poly::term(Monomial::var(y(1)), q(4, 1)), &c), "4*y'");
        assert_eq!(format(&parse("(y')^2 - 4*y", &c).unwrap(), &c), "(y')^2 - 4*y");
        assert_eq!(format(&parse("-3/4*u' - 1", &c).unwrap(), &c), "-3/4*u' - 1");
        assert_eq!(
            format(&parse("y^(5)^2*u + y''''", &c).unwrap(), &c),
            "u*(y^(5))^2 + y^(4)"
        );
        assert_eq!(format(&parse("u*y''*y", &c).unwrap(), &c), "u*y*y''");
    }

    #[test]
    fn rejects_bad_input() {
        let c = ctx();
        for bad in [
            "", "   ", "(y", "y)", "y +", "* y", "2y", "y''^(2)", "1/0", "u/2", "y^", "Y",
        ] {
            let err = parse(bad, &c).unwrap_err();
            assert!(matches!(err, Error::Syntax { .. }), "{bad:?} gave {err:?}");
        }
        assert_eq!(parse("z + 1", &c), Err(Error::UnknownIndeterminate("z".into())));
        assert!(matches!(parse("y^99999999999", &c), Err(Error::ExponentOutOfRange(_))));
        assert!(matches!(
            parse("y^(99999999999)", &c),
            Err(Error::ExponentOutOfRange(_))
        ));
    }

    #[test]
    fn syntax_error_position() {
        assert_eq!(
            parse("y + )", &ctx()),
            Err(Error::Syntax {
                position: 4,
                expected: "number, indeterminate or `(`".into()
            })
        );
    }

    #[test]
    fn derivvar_parsing() {
        let c = ctx();
        assert_eq!(parse_derivvar(" y'' ", &c).unwrap(), y(2));
        assert_eq!(parse_derivvar("u^(7)", &c).unwrap(), u(7));
        assert!(parse_derivvar("y*u", &c).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = DiffPoly> {
        let factor = (0u32..2, 0u32..6, 1u32..4);
        let term = (prop::collection::vec(factor, 0..4), -20i64..20, 1i64..7);
        prop::collection::vec(term, 0..6).prop_map(|terms| {
            Poly::from_terms(terms.into_iter().map(|(fs, n, d)| {
                let m = Monomial::from_factors(fs.into_iter().map(|(v, k, e)| (DerivVar::new(Var(v), k), e)));
                (m, q(n, d))
            }))
        })
    }

    proptest! {
        #[test]
        fn round_trip(p in arb_poly()) {
            let c = ctx();
            let text = format(&p, &c);
            let back = parse(&text, &c).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(format(&back, &c), text);
        }

        #[test]
        fn unbalanced_parentheses_never_parse(p in arb_poly(), extra in 1usize..3, open in any::<bool>()) {
            let c = ctx();
            let text = format(&p, &c);
            let broken = if open {
                format!("{}({}", "(".repeat(extra - 1), text)
            } else {
                format!("({}){}", text, ")".repeat(extra))
            };
            let rejected = matches!(parse(&broken, &c), Err(Error::Syntax { .. }));
            prop_assert!(rejected, "{:?}", broken);
        }
    }
}
