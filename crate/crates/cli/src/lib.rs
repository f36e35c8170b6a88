//! Command-line front end for the `diffalg` kernel.
//!
//! Exit codes: 0 on success, 1 for unparsable input or bad flags, 2 when a
//! mathematical precondition fails. Errors print one line to stderr of the
//! form `error: <tag>: <message>`.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use diffalg::chevalley::chevalley_witness;
use diffalg::document::{certificate_from_text, certificate_to_text, Document, WitnessDocument};
use diffalg::parser::{format_derivvar, format_monomial, parse_derivvar};
use diffalg::ranking::RankProfile;
use diffalg::{
    degree_bound, discriminant, format, initial, parse, rank_compare, rank_profile, resultant, ritt_reduce,
    saturation_membership, separant, verify_certificate, Context, DiffPoly, Error, LeaderPoly, Membership, Mode,
    RankOrdering, Var,
};

#[derive(Debug, Parser)]
#[command(name = "diffalg", version, about = "Exact Ritt reduction and Chevalley witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ContextArgs {
    /// Declared indeterminates in order, e.g. `u,y`.
    #[arg(long, default_value = "y")]
    vars: String,
    /// Main indeterminate; defaults to the last declared one.
    #[arg(long)]
    main: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ritt division; prints a certificate document.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        dividend: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// Weak division (no power of the initial).
        #[arg(long)]
        weak: bool,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Checks a certificate document read from stdin.
    Verify,
    /// Chevalley witness for a target, optionally with a minimal polynomial.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        minimal: Option<String>,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Resultant of two polynomials in a derivative variable.
    Resultant {
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        #[arg(long, allow_hyphen_values = true)]
        second: String,
        /// Elimination variable such as `y'`; defaults to the highest
        /// derivative of the main indeterminate in either argument.
        #[arg(long)]
        variable: Option<String>,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Res(A, S_A) in the leader of A.
    Discriminant {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Coefficient of the top power of the leader.
    Initial {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Partial derivative with respect to the leader.
    Separant {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Rank profile, or the comparison with `--compare`.
    Rank {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        compare: Option<String>,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Full reduction; reports whether the remainder is zero.
    Membership {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Extension degree bound for an order-zero minimal polynomial.
    DegreeBound {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Lists the terms of an expression (from `--expr` or stdin).
    Parse {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Canonical rendering of an expression (from `--expr` or stdin).
    Format {
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        ctx: ContextArgs,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `args` excludes the program name. `stdin` is only
/// read by commands that take input from it.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("diffalg".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(stdout) => Output {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: if e.is_input_error() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {}: {e}\n", e.tag()),
        },
    }
}

impl ContextArgs {
    fn resolve(&self) -> Result<(Context, Var), Error> {
        let ctx = Context::from_list(&self.vars)?;
        let main = match &self.main {
            Some(name) => ctx.var(name)?,
            None => ctx.last(),
        };
        Ok((ctx, main))
    }
}

fn read_all(stdin: &mut dyn Read) -> Result<String, Error> {
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Error::Document(format!("cannot read stdin: {e}")))?;
    Ok(text)
}

fn line(s: impl AsRef<str>) -> String {
    format!("{}\n", s.as_ref())
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<String, Error> {
    match command {
        Command::Reduce {
            dividend,
            divisor,
            weak,
            ctx,
        } => {
            let (ctx, main) = ctx.resolve()?;
            let mode = if weak { Mode::Weak } else { Mode::Full };
            let cert = ritt_reduce(&parse(&dividend, &ctx)?, &parse(&divisor, &ctx)?, main, mode)?;
            Ok(certificate_to_text(&cert, &ctx))
        }
        Command::Verify => {
            let (_, cert) = certificate_from_text(&read_all(stdin)?)?;
            Ok(line(verify_certificate(&cert).to_string()))
        }
        Command::Witness { target, minimal, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            let target = parse(&target, &ctx)?;
            let minimal = minimal.map(|m| parse(&m, &ctx)).transpose()?;
            let witness = chevalley_witness(&target, minimal.as_ref(), main)?;
            Ok(WitnessDocument {
                ctx,
                main,
                target,
                minimal,
                witness,
            }
            .to_text())
        }
        Command::Resultant {
            first,
            second,
            variable,
            ctx,
        } => {
            let (ctx, main) = ctx.resolve()?;
            let (p, q) = (parse(&first, &ctx)?, parse(&second, &ctx)?);
            let variable = match variable {
                Some(v) => parse_derivvar(&v, &ctx)?,
                None => {
                    let order = p.order_in(main).max(q.order_in(main)).unwrap_or(0);
                    diffalg::DerivVar::new(main, order)
                }
            };
            let lp = |a: &DiffPoly| LeaderPoly::new(a, variable).map_err(|_| Error::ZeroArgument);
            Ok(line(format(&resultant(&lp(&p)?, &lp(&q)?)?, &ctx)))
        }
        Command::Discriminant { poly, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            Ok(line(format(&discriminant(&parse(&poly, &ctx)?, main)?, &ctx)))
        }
        Command::Initial { poly, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            Ok(line(format(&initial(&parse(&poly, &ctx)?, main)?, &ctx)))
        }
        Command::Separant { poly, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            Ok(line(format(&separant(&parse(&poly, &ctx)?, main)?, &ctx)))
        }
        Command::Rank { poly, compare, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            let a = parse(&poly, &ctx)?;
            if let Some(other) = compare {
                let ord = rank_compare(&a, &parse(&other, &ctx)?, main)?;
                return Ok(line(match ord {
                    RankOrdering::Less => "less",
                    RankOrdering::Equivalent => "equivalent",
                    RankOrdering::Greater => "greater",
                }));
            }
            let mut doc = Document::new();
            match rank_profile(&a, main)? {
                RankProfile::Constant => doc.push("kind", "constant"),
                RankProfile::Proper { order, degree, leader } => {
                    doc.push("kind", "proper");
                    doc.push("order", order.to_string());
                    doc.push("degree", degree.to_string());
                    doc.push("leader", format_derivvar(leader, &ctx));
                }
            }
            Ok(doc.render())
        }
        Command::Membership { poly, divisor, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            let result = saturation_membership(&parse(&poly, &ctx)?, &parse(&divisor, &ctx)?, main)?;
            let mut doc = Document::new();
            doc.push(
                "result",
                match result {
                    Membership::ReducesToZero(_) => "reduces-to-zero",
                    Membership::Remainder(_) => "remainder",
                },
            );
            doc.push_block(
                "certificate",
                diffalg::document::certificate_document(result.certificate(), &ctx),
            );
            Ok(doc.render())
        }
        Command::DegreeBound { poly, ctx } => {
            let (ctx, main) = ctx.resolve()?;
            Ok(line(degree_bound(&parse(&poly, &ctx)?, main)?.to_string()))
        }
        Command::Parse { expr, ctx } => {
            let (ctx, _) = ctx.resolve()?;
            let text = match expr {
                Some(e) => e,
                None => read_all(stdin)?,
            };
            let p = parse(text.trim(), &ctx)?;
            let mut doc = Document::new();
            for (m, c) in p.terms().rev() {
                doc.push(format_monomial(m, &ctx), c.to_string());
            }
            Ok(doc.render())
        }
        Command::Format { expr, ctx } => {
            let (ctx, _) = ctx.resolve()?;
            let text = match expr {
                Some(e) => e,
                None => read_all(stdin)?,
            };
            Ok(line(format(&parse(text.trim(), &ctx)?, &ctx)))
        }
    }
}
