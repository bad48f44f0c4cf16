//! Protected evaluation of generator expressions.
//!
//! Evaluation is total: division by zero yields 0, `log` acts on the
//! absolute value with `log 0 = 0`, `pow` is sign-preserving on `|a|^b`,
//! `exp` is clamped to `exp(±50)`, and any non-finite intermediate result
//! collapses to 0. A well-formed tree therefore always produces a finite
//! weight, for any in-range context.

use super::ast::{ExprNode, GeneratorProgram, Op, Var};

const EXP_CLAMP: f64 = 50.0;

/// Directed-only variable bindings of a candidate arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectedContext {
    pub outdeg_i: u64,
    pub outdeg_j: u64,
    /// Walk-estimated distance following arcs from `i`.
    pub dist_d: f64,
    /// Walk-estimated distance following arcs backwards from `i`.
    pub dist_r: f64,
}

/// Variable bindings for one candidate arc `(i, j)`.
///
/// Identifiers are 1-based. Distances are walk estimates in
/// `[1, distance_cap]`. For undirected graphs `directed` is `None` and the
/// degree fields hold the plain vertex degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcContext {
    pub i: u64,
    pub j: u64,
    pub indeg_i: u64,
    pub indeg_j: u64,
    pub dist_u: f64,
    pub directed: Option<DirectedContext>,
}

impl ArcContext {
    pub fn undirected(i: u64, j: u64, deg_i: u64, deg_j: u64, dist_u: f64) -> Self {
        ArcContext {
            i,
            j,
            indeg_i: deg_i,
            indeg_j: deg_j,
            dist_u,
            directed: None,
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn directed(
        i: u64,
        j: u64,
        indeg_i: u64,
        indeg_j: u64,
        outdeg_i: u64,
        outdeg_j: u64,
        dist_u: f64,
        dist_d: f64,
        dist_r: f64,
    ) -> Self {
        ArcContext {
            i,
            j,
            indeg_i,
            indeg_j,
            dist_u,
            directed: Some(DirectedContext {
                outdeg_i,
                outdeg_j,
                dist_d,
                dist_r,
            }),
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed.is_some()
    }

    fn var(&self, v: Var) -> f64 {
        match v {
            Var::I => self.i as f64,
            Var::J => self.j as f64,
            Var::InDegI => self.indeg_i as f64,
            Var::InDegJ => self.indeg_j as f64,
            Var::DistU => self.dist_u,
            Var::OutDegI => self.directed_part().outdeg_i as f64,
            Var::OutDegJ => self.directed_part().outdeg_j as f64,
            Var::DistD => self.directed_part().dist_d,
            Var::DistR => self.directed_part().dist_r,
        }
    }

    fn directed_part(&self) -> &DirectedContext {
        self.directed
            .as_ref()
            .expect("directed variable evaluated against an undirected context")
    }
}

fn protect(value: f64) -> f64 {
    if value.is_finite() {
        value
    } else {
        0.0
    }
}

pub(crate) fn eval_node(node: &ExprNode, ctx: &ArcContext) -> f64 {
    let value = match node {
        ExprNode::Const(c) => *c,
        ExprNode::Var(v) => ctx.var(*v),
        ExprNode::Op(op, args) => eval_op(*op, args, ctx),
    };
    protect(value)
}

fn eval_op(op: Op, args: &[ExprNode], ctx: &ArcContext) -> f64 {
    debug_assert_eq!(args.len(), op.arity(), "arity violated for {op:?}");
    let arg = |k: usize| eval_node(&args[k], ctx);
    match op {
        Op::Add => arg(0) + arg(1),
        Op::Sub => arg(0) - arg(1),
        Op::Mul => arg(0) * arg(1),
        Op::Div => {
            let denom = arg(1);
            if denom == 0.0 {
                0.0
            } else {
                arg(0) / denom
            }
        }
        Op::Pow => {
            let base = arg(0);
            base.signum() * base.abs().powf(arg(1))
        }
        Op::Min => arg(0).min(arg(1)),
        Op::Max => arg(0).max(arg(1)),
        Op::Exp => arg(0).clamp(-EXP_CLAMP, EXP_CLAMP).exp(),
        Op::Log => {
            let x = arg(0);
            if x == 0.0 {
                0.0
            } else {
                x.abs().ln()
            }
        }
        Op::Abs => arg(0).abs(),
        Op::Gt => {
            if arg(0) > arg(1) {
                arg(2)
            } else {
                arg(3)
            }
        }
        Op::Lt => {
            if arg(0) < arg(1) {
                arg(2)
            } else {
                arg(3)
            }
        }
        Op::Eq => {
            if arg(0) == arg(1) {
                arg(2)
            } else {
                arg(3)
            }
        }
        Op::EqZero => {
            if arg(0) == 0.0 {
                arg(1)
            } else {
                arg(2)
            }
        }
        Op::Affinity => {
            let groups = arg(0).abs().round();
            if groups >= 1.0 {
                let g = groups as u64;
                if ctx.i % g == ctx.j % g {
                    arg(1)
                } else {
                    arg(2)
                }
            } else {
                // zero groups: no affinity structure
                arg(2)
            }
        }
    }
}

impl GeneratorProgram {
    /// Evaluate the program on one arc context. Always finite.
    ///
    /// The context's mode must match the program's mode; growth guarantees
    /// this, and direct callers must too.
    pub fn evaluate(&self, ctx: &ArcContext) -> f64 {
        debug_assert!(
            ctx.is_directed() || !self.is_directed(),
            "directed program evaluated against an undirected context"
        );
        eval_node(self.root(), ctx)
    }
}
