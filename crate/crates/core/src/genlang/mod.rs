//! The generator expression language.
//!
//! Generators are expression trees over arc-context variables. This module
//! owns their representation, the s-expression syntax, protected evaluation,
//! random generation and mutation.

mod ast;
mod eval;
mod parse;
mod rand_gen;

pub use ast::{validate, DistanceUse, ExprNode, GeneratorProgram, LangError, Op, Var};
pub use eval::{ArcContext, DirectedContext};
pub use parse::{parse_expr, parse_program, print_program};
pub use rand_gen::{mutate, random_constant, random_program, TreeGenParams};
