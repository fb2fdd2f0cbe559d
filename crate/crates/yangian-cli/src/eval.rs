//! The `eval` subcommand: a small expression language over the algebra.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | atom | '[' expr ',' expr ']' | '(' expr ')'
//! atom   := t(i,j,r) | tp(i,j,r) | D(a;i,j;r) | Dp(a;i,j;r)
//!         | E(a;i,j;r) | F(a;i,j;r) | Eab(a,b;i,j;r) | Fba(b,a;i,j;r)
//! ```
//! `[x, y]` is the supercommutator; integer literals are reduced mod p.

use crate::context_args::{parse_mu, ContextArgs};
use crate::Outcome;
use anyhow::{bail, Context, Result};
use std::sync::Arc;
use yangian::context::AlgebraContext;
use yangian::gauss::{gauss_decompose, GaussData};
use yangian::pbw::Element;
use yangian::series::{tp_matrix, MatrixSeries, Var};

#[derive(clap::Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub context: ContextArgs,

    /// Block composition; required when the expression uses D/Dp/E/F
    /// (or Eab/Fba) atoms.
    #[arg(long)]
    pub mu: Option<String>,

    /// Truncation order for tp and block atoms; inferred from the
    /// expression when omitted.
    #[arg(long)]
    pub series_order: Option<usize>,

    /// Expression to evaluate.
    #[arg(long)]
    pub expr: String,
}

pub fn run(args: &EvalArgs) -> Result<Outcome> {
    let ctx = args.context.build()?;
    let ast = parse(&args.expr)?;

    let mut need = Needs::default();
    scan(&ast, &mut need);
    if let Some(r) = args.series_order {
        if r == 0 {
            bail!("--series-order must be at least 1");
        }
        let deepest = need.tp_level.max(need.block_level);
        if deepest > r {
            bail!("expression uses level {deepest} but --series-order is {r}");
        }
        need.tp_level = need.tp_level.max(r);
        need.block_level = need.block_level.max(r);
    }

    let env = Env::build(&ctx, args, &need)?;
    let value = eval(&ctx, &env, &ast)?;
    println!("{}", value.to_text());
    Ok(Outcome::Clean)
}

// ---------------------------------------------------------------------------
// Abstract syntax

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockAtom {
    D,
    Dp,
    E,
    F,
    Eab,
    Fba,
}

#[derive(Debug)]
enum Ast {
    Int(u128),
    /// t(i,j,r) or tp(i,j,r)
    Gen {
        inverse: bool,
        i: usize,
        j: usize,
        r: usize,
    },
    /// D/Dp/E/F with a single block index, Eab/Fba with a pair.
    Block {
        kind: BlockAtom,
        a: usize,
        b: usize,
        i: usize,
        j: usize,
        r: usize,
    },
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Bracket(Box<Ast>, Box<Ast>),
}

#[derive(Default)]
struct Needs {
    tp_level: usize,
    block_level: usize,
    uses_blocks: bool,
}

fn scan(ast: &Ast, need: &mut Needs) {
    match ast {
        Ast::Int(_) => {}
        Ast::Gen { inverse, r, .. } => {
            if *inverse {
                need.tp_level = need.tp_level.max(*r);
            }
        }
        Ast::Block { r, .. } => {
            need.uses_blocks = true;
            need.block_level = need.block_level.max(*r);
        }
        Ast::Add(x, y) | Ast::Sub(x, y) | Ast::Mul(x, y) | Ast::Bracket(x, y) => {
            scan(x, need);
            scan(y, need);
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u128),
    Ident(String),
    LPar,
    RPar,
    LBrk,
    RBrk,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let tok = match c {
            '(' => {
                pos += 1;
                Tok::LPar
            }
            ')' => {
                pos += 1;
                Tok::RPar
            }
            '[' => {
                pos += 1;
                Tok::LBrk
            }
            ']' => {
                pos += 1;
                Tok::RBrk
            }
            ',' => {
                pos += 1;
                Tok::Comma
            }
            ';' => {
                pos += 1;
                Tok::Semi
            }
            '+' => {
                pos += 1;
                Tok::Plus
            }
            '-' => {
                pos += 1;
                Tok::Minus
            }
            '*' => {
                pos += 1;
                Tok::Star
            }
            '0'..='9' => {
                let mut end = pos;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let text = &src[pos..end];
                pos = end;
                Tok::Int(
                    text.parse::<u128>()
                        .with_context(|| format!("integer too large at offset {start}"))?,
                )
            }
            'a'..='z' | 'A'..='Z' => {
                let mut end = pos;
                while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let text = src[pos..end].to_string();
                pos = end;
                Tok::Ident(text)
            }
            other => bail!("parse error at offset {start}: unexpected character {other:?}"),
        };
        out.push((start, tok));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    len: usize,
}

fn parse(src: &str) -> Result<Ast> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        idx: 0,
        len: src.len(),
    };
    let ast = p.expr()?;
    if let Some((at, tok)) = p.peek_raw() {
        bail!("parse error at offset {at}: unexpected {tok:?} after expression");
    }
    Ok(ast)
}

impl Parser {
    fn peek_raw(&self) -> Option<(usize, &Tok)> {
        self.toks.get(self.idx).map(|(at, t)| (*at, t))
    }

    fn next(&mut self, what: &str) -> Result<(usize, Tok)> {
        match self.toks.get(self.idx) {
            Some((at, t)) => {
                self.idx += 1;
                Ok((*at, t.clone()))
            }
            None => bail!(
                "parse error at offset {}: expected {what}, found end of input",
                self.len
            ),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let (at, got) = self.next(what)?;
        if got != tok {
            bail!("parse error at offset {at}: expected {what}, found {got:?}");
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = self.term()?;
        loop {
            match self.peek_raw() {
                Some((_, Tok::Plus)) => {
                    self.idx += 1;
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some((_, Tok::Minus)) => {
                    self.idx += 1;
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while let Some((_, Tok::Star)) = self.peek_raw() {
            self.idx += 1;
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        let (at, tok) = self.next("a factor")?;
        match tok {
            Tok::Int(n) => Ok(Ast::Int(n)),
            Tok::Ident(name) => self.atom(at, &name),
            Tok::LBrk => {
                let x = self.expr()?;
                self.expect(Tok::Comma, "`,` between bracket arguments")?;
                let y = self.expr()?;
                self.expect(Tok::RBrk, "closing `]`")?;
                Ok(Ast::Bracket(Box::new(x), Box::new(y)))
            }
            Tok::LPar => {
                let x = self.expr()?;
                self.expect(Tok::RPar, "closing `)`")?;
                Ok(x)
            }
            other => bail!("parse error at offset {at}: expected a factor, found {other:?}"),
        }
    }

    fn int(&mut self, what: &str) -> Result<usize> {
        let (at, tok) = self.next(what)?;
        match tok {
            Tok::Int(n) => usize::try_from(n)
                .map_err(|_| anyhow::anyhow!("parse error at offset {at}: index too large")),
            other => bail!("parse error at offset {at}: expected {what}, found {other:?}"),
        }
    }

    /// Parse the argument list of a named atom; the name token has already
    /// been consumed.
    fn atom(&mut self, at: usize, name: &str) -> Result<Ast> {
        match name {
            "t" | "tp" => {
                self.expect(Tok::LPar, "`(` after atom name")?;
                let i = self.int("row index")?;
                self.expect(Tok::Comma, "`,`")?;
                let j = self.int("column index")?;
                self.expect(Tok::Comma, "`,`")?;
                let r = self.int("level")?;
                self.expect(Tok::RPar, "closing `)`")?;
                Ok(Ast::Gen {
                    inverse: name == "tp",
                    i,
                    j,
                    r,
                })
            }
            "D" | "Dp" | "E" | "F" => {
                let kind = match name {
                    "D" => BlockAtom::D,
                    "Dp" => BlockAtom::Dp,
                    "E" => BlockAtom::E,
                    _ => BlockAtom::F,
                };
                self.expect(Tok::LPar, "`(` after atom name")?;
                let a = self.int("block index")?;
                self.expect(Tok::Semi, "`;` after block index")?;
                let i = self.int("row index")?;
                self.expect(Tok::Comma, "`,`")?;
                let j = self.int("column index")?;
                self.expect(Tok::Semi, "`;` before level")?;
                let r = self.int("level")?;
                self.expect(Tok::RPar, "closing `)`")?;
                Ok(Ast::Block {
                    kind,
                    a,
                    b: 0,
                    i,
                    j,
                    r,
                })
            }
            "Eab" | "Fba" => {
                let kind = if name == "Eab" {
                    BlockAtom::Eab
                } else {
                    BlockAtom::Fba
                };
                self.expect(Tok::LPar, "`(` after atom name")?;
                let a = self.int("first block index")?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.int("second block index")?;
                self.expect(Tok::Semi, "`;` after block pair")?;
                let i = self.int("row index")?;
                self.expect(Tok::Comma, "`,`")?;
                let j = self.int("column index")?;
                self.expect(Tok::Semi, "`;` before level")?;
                let r = self.int("level")?;
                self.expect(Tok::RPar, "closing `)`")?;
                Ok(Ast::Block { kind, a, b, i, j, r })
            }
            other => bail!("parse error at offset {at}: unknown atom name {other:?}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation

struct Env {
    gauss: Option<GaussData>,
    inverse_matrix: Option<MatrixSeries>,
}

impl Env {
    fn build(ctx: &Arc<AlgebraContext>, args: &EvalArgs, need: &Needs) -> Result<Env> {
        let gauss = if need.uses_blocks {
            let Some(mu_text) = &args.mu else {
                bail!("the expression uses block atoms (D/Dp/E/F/Eab/Fba); pass --mu");
            };
            let mu = parse_mu(mu_text, ctx.size())?;
            let order = need.block_level.max(1);
            Some(gauss_decompose(ctx, &mu, Var::U, order).context("Gauss decomposition failed")?)
        } else {
            None
        };
        let inverse_matrix = if need.tp_level > 0 {
            Some(tp_matrix(ctx, Var::U, need.tp_level))
        } else {
            None
        };
        Ok(Env {
            gauss,
            inverse_matrix,
        })
    }
}

fn eval(ctx: &Arc<AlgebraContext>, env: &Env, ast: &Ast) -> Result<Element> {
    match ast {
        Ast::Int(n) => {
            let reduced = (*n % ctx.p() as u128) as i64;
            Ok(Element::scalar(ctx, reduced))
        }
        Ast::Gen { inverse, i, j, r } => eval_gen(ctx, env, *inverse, *i, *j, *r),
        Ast::Block { kind, a, b, i, j, r } => eval_block(ctx, env, *kind, *a, *b, *i, *j, *r),
        Ast::Add(x, y) => Ok(eval(ctx, env, x)?.add(ctx, &eval(ctx, env, y)?)),
        Ast::Sub(x, y) => Ok(eval(ctx, env, x)?.sub(ctx, &eval(ctx, env, y)?)),
        Ast::Mul(x, y) => Ok(eval(ctx, env, x)?.mul(ctx, &eval(ctx, env, y)?)),
        Ast::Bracket(x, y) => Ok(eval(ctx, env, x)?.supercommutator(ctx, &eval(ctx, env, y)?)),
    }
}

fn eval_gen(
    ctx: &Arc<AlgebraContext>,
    env: &Env,
    inverse: bool,
    i: usize,
    j: usize,
    r: usize,
) -> Result<Element> {
    let size = ctx.size();
    let name = if inverse { "tp" } else { "t" };
    if i < 1 || i > size || j < 1 || j > size {
        bail!("atom {name}({i},{j},{r}): indices must lie in 1..={size}");
    }
    if r == 0 {
        return Ok(Element::scalar(ctx, i64::from(i == j)));
    }
    if inverse {
        let matrix = env
            .inverse_matrix
            .as_ref()
            .expect("inverse matrix prepared during scan");
        let series = matrix.entry(i, j);
        Ok(series.get([r, 0, 0]))
    } else {
        Ok(Element::generator(ctx, i, j, r))
    }
}

fn eval_block(
    _ctx: &Arc<AlgebraContext>,
    env: &Env,
    kind: BlockAtom,
    a: usize,
    b: usize,
    i: usize,
    j: usize,
    r: usize,
) -> Result<Element> {
    let g = env.gauss.as_ref().expect("gauss data prepared during scan");
    let mu = g.mu();
    let n = mu.n();
    let check_block = |label: &str, x: usize| -> Result<()> {
        if x < 1 || x > n {
            bail!("{label} index {x} must lie in 1..={n}");
        }
        Ok(())
    };
    let check_entry = |row_block: usize, col_block: usize| -> Result<()> {
        let rows = mu.part(row_block);
        let cols = mu.part(col_block);
        if i < 1 || i > rows {
            bail!("row index {i} must lie in 1..={rows} (rows of block {row_block})");
        }
        if j < 1 || j > cols {
            bail!("column index {j} must lie in 1..={cols} (columns of block {col_block})");
        }
        Ok(())
    };
    match kind {
        BlockAtom::D => {
            check_block("block", a)?;
            check_entry(a, a)?;
            Ok(g.d_elem(a, i, j, r))
        }
        BlockAtom::Dp => {
            check_block("block", a)?;
            check_entry(a, a)?;
            Ok(g.dp_elem(a, i, j, r))
        }
        BlockAtom::E => {
            check_block("block", a)?;
            if a + 1 > n {
                bail!("E({a};…) needs block {a}+1 ≤ {n}");
            }
            check_entry(a, a + 1)?;
            Ok(g.e_elem(a, a + 1, i, j, r))
        }
        BlockAtom::F => {
            check_block("block", a)?;
            if a + 1 > n {
                bail!("F({a};…) needs block {a}+1 ≤ {n}");
            }
            check_entry(a + 1, a)?;
            Ok(g.f_elem(a + 1, a, i, j, r))
        }
        BlockAtom::Eab => {
            check_block("first block", a)?;
            check_block("second block", b)?;
            if a >= b {
                bail!("Eab({a},{b};…) requires {a} < {b}");
            }
            check_entry(a, b)?;
            Ok(g.e_elem(a, b, i, j, r))
        }
        BlockAtom::Fba => {
            check_block("first block", a)?;
            check_block("second block", b)?;
            if a <= b {
                bail!("Fba({a},{b};…) requires {a} > {b}");
            }
            check_entry(a, b)?;
            Ok(g.f_elem(a, b, i, j, r))
        }
    }
}
