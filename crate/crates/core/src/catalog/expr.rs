//! Constructor expressions such as `central(dihedral(8),dihedral(8),2,2)`.

use crate::census::harness::{affine, holomorph, left_right};
use crate::census::{build_family, FormFamily};
use crate::error::{Error, Result};
use crate::gf2::{a7_generators, affine_coset_action, close_matrices, f21_generators, theorem2_groups, Gf2Matrix};
use crate::group::{
    central_product, coset_action, cyclic, dihedral, direct_product, elementary_abelian,
    generalized_dicyclic, GroupTable, SemidirectLayout, TABLE_ORDER_LIMIT,
};
use crate::perm::{PermGroup, Permutation};

/// Largest `|V ⋊ H|` that `cosets` enumerates.
const COSET_ORDER_LIMIT: usize = 4096;

/// The value of an expression.
#[derive(Clone, Debug)]
pub enum Built {
    Table(GroupTable),
    Perm {
        group: PermGroup,
        regular: Option<Vec<Permutation>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Num(u64),
    Word(String),
    Call(String, Vec<Node>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Expression(msg.into())
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(err(format!("expected '{c}' at offset {}, found '{x}'", self.pos))),
            None => Err(err(format!("expected '{c}' at end of input"))),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.src[self.pos..].starts_with(&f) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn node(&mut self) -> Result<Node> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                digits
                    .parse()
                    .map(Node::Num)
                    .map_err(|_| err(format!("number {digits} is too large")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
                if self.peek() != Some('(') {
                    return Ok(Node::Word(word));
                }
                self.expect('(')?;
                let mut args = vec![self.node()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    args.push(self.node()?);
                }
                self.expect(')')?;
                Ok(Node::Call(word, args))
            }
            Some(c) => Err(err(format!("unexpected '{c}' at offset {}", self.pos))),
            None => Err(err("unexpected end of input")),
        }
    }
}

fn parse(src: &str) -> Result<Node> {
    let mut p = Parser { src, pos: 0 };
    let node = p.node()?;
    if let Some(c) = p.peek() {
        return Err(err(format!("trailing '{c}' at offset {}", p.pos)));
    }
    Ok(node)
}

fn num(node: &Node) -> Result<usize> {
    match node {
        Node::Num(n) => usize::try_from(*n).map_err(|_| err(format!("{n} is too large"))),
        other => Err(err(format!("expected a number, found {other:?}"))),
    }
}

fn element(node: &Node) -> Result<u32> {
    let n = num(node)?;
    u32::try_from(n).map_err(|_| err(format!("{n} is too large")))
}

fn table(node: &Node) -> Result<GroupTable> {
    match eval(node)? {
        Built::Table(t) => Ok(t),
        Built::Perm { .. } => Err(err(format!("expected a table, found a permutation group in {node:?}"))),
    }
}

fn matrix_group(node: &Node) -> Result<Vec<Gf2Matrix>> {
    let Node::Word(w) = node else {
        return Err(err(format!("expected h12, h24, f21, a7 or trivial, found {node:?}")));
    };
    let (h12, h24) = theorem2_groups();
    match w.as_str() {
        "h12" => Ok(h12),
        "h24" => Ok(h24),
        "f21" => Ok(close_matrices(&f21_generators())),
        "a7" => Ok(close_matrices(&a7_generators())),
        "trivial" => Ok(vec![Gf2Matrix::IDENTITY]),
        other => Err(err(format!("unknown matrix group {other}"))),
    }
}

fn arity(name: &str, args: &[Node], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(err(format!("{name} takes {n} argument(s), found {}", args.len())));
    }
    Ok(())
}

fn perm(group: PermGroup, regular: Option<Vec<Permutation>>) -> Built {
    Built::Perm { group, regular }
}

fn shift(n: usize) -> Result<Permutation> {
    Permutation::from_images((0..n as u32).map(|x| (x + 1) % n as u32).collect())
}

fn eval(node: &Node) -> Result<Built> {
    let Node::Call(name, args) = node else {
        return Err(err(format!("expected a constructor call, found {node:?}")));
    };
    let args = args.as_slice();
    let family = |f: FormFamily, t: usize, l: usize| -> Result<Built> {
        Ok(Built::Table(build_family(f, t, l)?.0))
    };
    match name.as_str() {
        "cyclic" => {
            arity(name, args, 1)?;
            Ok(Built::Table(cyclic(num(&args[0])?)?))
        }
        "elab" => {
            arity(name, args, 1)?;
            Ok(Built::Table(elementary_abelian(num(&args[0])?)?))
        }
        "dihedral" => {
            arity(name, args, 1)?;
            Ok(Built::Table(dihedral(num(&args[0])?)?))
        }
        "dicyclic" => {
            arity(name, args, 2)?;
            Ok(Built::Table(generalized_dicyclic(&table(&args[0])?, element(&args[1])?)?))
        }
        "direct" => {
            arity(name, args, 2)?;
            let (a, b) = (table(&args[0])?, table(&args[1])?);
            if a.order() * b.order() > TABLE_ORDER_LIMIT {
                return Err(Error::OrderTooLarge {
                    order: a.order() * b.order(),
                    limit: TABLE_ORDER_LIMIT,
                });
            }
            Ok(Built::Table(direct_product(&a, &b)))
        }
        "central" => {
            arity(name, args, 4)?;
            Ok(Built::Table(central_product(
                &table(&args[0])?,
                &table(&args[1])?,
                element(&args[2])?,
                element(&args[3])?,
            )?))
        }
        "vh" => {
            arity(name, args, 1)?;
            Ok(Built::Table(SemidirectLayout::new(&matrix_group(&args[0])?)?.table()))
        }
        "extremal" => {
            arity(name, args, 1)?;
            let layout = SemidirectLayout::new(&matrix_group(&args[0])?)?;
            Ok(perm(coset_action(&layout.table(), &layout.w_subgroup())?, None))
        }
        "cosets" => {
            arity(name, args, 1)?;
            let h = matrix_group(&args[0])?;
            let order = 16 * h.len();
            if order > COSET_ORDER_LIMIT {
                return Err(Error::OrderTooLarge {
                    order,
                    limit: COSET_ORDER_LIMIT,
                });
            }
            let action = affine_coset_action(&h)?;
            Ok(perm(PermGroup::generate(action.degree, action.generators)?, None))
        }
        "holomorph" => {
            arity(name, args, 1)?;
            let n = num(&args[0])?;
            Ok(perm(holomorph(n)?, Some(vec![shift(n)?])))
        }
        "affine" => {
            arity(name, args, 2)?;
            let n = num(&args[0])?;
            Ok(perm(affine(n, num(&args[1])?)?, Some(vec![shift(n)?])))
        }
        "regular" => {
            arity(name, args, 1)?;
            let t = table(&args[0])?;
            let gens: Vec<Permutation> =
                t.generating_set().into_iter().map(|a| t.right_regular(a)).collect();
            Ok(perm(PermGroup::generate(t.order(), gens)?, None))
        }
        "leftright" => {
            arity(name, args, 1)?;
            let (group, regular) = left_right(&table(&args[0])?)?;
            Ok(perm(group, Some(regular)))
        }
        "d8chain" => {
            arity(name, args, 2)?;
            family(FormFamily::D8Chain, num(&args[0])?, num(&args[1])?)
        }
        "q8chain" => {
            arity(name, args, 2)?;
            family(FormFamily::Q8Chain, num(&args[0])?, num(&args[1])?)
        }
        "c4chain" => {
            arity(name, args, 2)?;
            family(FormFamily::C4Chain, num(&args[0])?, num(&args[1])?)
        }
        "c4c2" => {
            arity(name, args, 1)?;
            family(FormFamily::C4C2, 0, num(&args[0])?)
        }
        other => Err(err(format!("unknown constructor {other}"))),
    }
}

/// Parses and evaluates a constructor expression.
pub fn build_expression(src: &str) -> Result<Built> {
    eval(&parse(src)?)
}
