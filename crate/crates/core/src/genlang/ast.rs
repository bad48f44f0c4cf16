//! Expression trees for network generators.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A context variable usable in generator expressions.
///
/// Identifiers are the 1-based sequential vertex numbers of the arc origin
/// (`i`) and target (`j`); they encode a-priori vertex heterogeneity. The
/// remaining variables are degrees of the two endpoints and walk-estimated
/// distances between them. `OutDegI`, `OutDegJ`, `DistD` and `DistR` only
/// exist for directed graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    I,
    J,
    InDegI,
    InDegJ,
    OutDegI,
    OutDegJ,
    /// Undirected distance between origin and target.
    DistU,
    /// Directed distance, following arcs.
    DistD,
    /// Reverse distance, following arcs backwards.
    DistR,
}

impl Var {
    pub const ALL: [Var; 9] = [
        Var::I,
        Var::J,
        Var::InDegI,
        Var::InDegJ,
        Var::OutDegI,
        Var::OutDegJ,
        Var::DistU,
        Var::DistD,
        Var::DistR,
    ];

    pub const UNDIRECTED: [Var; 5] = [Var::I, Var::J, Var::InDegI, Var::InDegJ, Var::DistU];

    /// True for variables that are only defined on directed graphs.
    pub fn directed_only(self) -> bool {
        matches!(self, Var::OutDegI | Var::OutDegJ | Var::DistD | Var::DistR)
    }

    pub fn token(self) -> &'static str {
        match self {
            Var::I => "i",
            Var::J => "j",
            Var::InDegI => "(indeg i)",
            Var::InDegJ => "(indeg j)",
            Var::OutDegI => "(outdeg i)",
            Var::OutDegJ => "(outdeg j)",
            Var::DistU => "du",
            Var::DistD => "dd",
            Var::DistR => "dr",
        }
    }
}

/// An operator of the generator language.
///
/// The conditionals take their comparison operands plus then/else branches
/// so that every expression evaluates to a weight rather than a boolean.
/// `Affinity` is the group-membership primitive: `(psi g a b)` yields `a`
/// when `i mod g == j mod g` and `b` otherwise, with `i` and `j` taken
/// implicitly from the context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Min,
    Max,
    Exp,
    Log,
    Abs,
    /// `(> a b then else)`
    Gt,
    /// `(< a b then else)`
    Lt,
    /// `(= a b then else)`
    Eq,
    /// `(=0 a then else)`
    EqZero,
    /// `(psi g a b)`
    Affinity,
}

impl Op {
    pub const ALL: [Op; 15] = [
        Op::Add,
        Op::Sub,
        Op::Mul,
        Op::Div,
        Op::Pow,
        Op::Min,
        Op::Max,
        Op::Exp,
        Op::Log,
        Op::Abs,
        Op::Gt,
        Op::Lt,
        Op::Eq,
        Op::EqZero,
        Op::Affinity,
    ];

    pub fn arity(self) -> usize {
        match self {
            Op::Exp | Op::Log | Op::Abs => 1,
            Op::Add | Op::Sub | Op::Mul | Op::Div | Op::Pow | Op::Min | Op::Max => 2,
            Op::EqZero | Op::Affinity => 3,
            Op::Gt | Op::Lt | Op::Eq => 4,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Op::Add => "+",
            Op::Sub => "-",
            Op::Mul => "*",
            Op::Div => "/",
            Op::Pow => "pow",
            Op::Min => "min",
            Op::Max => "max",
            Op::Exp => "exp",
            Op::Log => "log",
            Op::Abs => "abs",
            Op::Gt => ">",
            Op::Lt => "<",
            Op::Eq => "=",
            Op::EqZero => "=0",
            Op::Affinity => "psi",
        }
    }
}

/// One node of a generator expression tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ExprNode {
    Const(f64),
    Var(Var),
    Op(Op, Vec<ExprNode>),
}

impl ExprNode {
    /// Number of nodes in the subtree rooted here.
    pub fn node_count(&self) -> usize {
        match self {
            ExprNode::Const(_) | ExprNode::Var(_) => 1,
            ExprNode::Op(_, children) => {
                1 + children.iter().map(ExprNode::node_count).sum::<usize>()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ExprNode::Const(_) | ExprNode::Var(_) => 1,
            ExprNode::Op(_, children) => {
                1 + children.iter().map(ExprNode::depth).max().unwrap_or(0)
            }
        }
    }

    /// The subtree at preorder position `index` (root is 0).
    pub fn subtree(&self, index: usize) -> &ExprNode {
        self.subtree_impl(index)
            .unwrap_or_else(|_| panic!("node index {index} out of range"))
    }

    fn subtree_impl(&self, index: usize) -> Result<&ExprNode, usize> {
        if index == 0 {
            return Ok(self);
        }
        let mut remaining = index - 1;
        if let ExprNode::Op(_, children) = self {
            for child in children {
                match child.subtree_impl(remaining) {
                    Ok(node) => return Ok(node),
                    Err(consumed) => remaining -= consumed,
                }
            }
        }
        Err(self.node_count())
    }

    /// A copy of this tree with the subtree at preorder position `index`
    /// replaced by `replacement`.
    pub fn replace(&self, index: usize, replacement: ExprNode) -> ExprNode {
        let mut counter = index;
        self.replace_impl(&mut counter, &replacement)
    }

    fn replace_impl(&self, counter: &mut usize, replacement: &ExprNode) -> ExprNode {
        if *counter == 0 {
            *counter = usize::MAX; // consumed
            return replacement.clone();
        }
        *counter -= 1;
        match self {
            ExprNode::Op(op, children) => {
                let new_children = children
                    .iter()
                    .map(|c| {
                        if *counter == usize::MAX {
                            c.clone()
                        } else {
                            c.replace_impl(counter, replacement)
                        }
                    })
                    .collect();
                ExprNode::Op(*op, new_children)
            }
            leaf => leaf.clone(),
        }
    }

    fn visit(&self, f: &mut impl FnMut(&ExprNode)) {
        f(self);
        if let ExprNode::Op(_, children) = self {
            for child in children {
                child.visit(f);
            }
        }
    }
}

/// Structural and syntactic errors of the generator language.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("operator `{op}` takes {expected} argument(s), found {found}")]
    Arity {
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("variable `{0}` is not available in undirected mode")]
    DirectedOnly(String),
    #[error("constant is not finite")]
    NonFiniteConst,
}

/// Which walk-estimated distances an expression actually reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DistanceUse {
    pub du: bool,
    pub dd: bool,
    pub dr: bool,
}

/// A validated generator: an expression tree plus the graph mode it is
/// written for. In undirected mode the directed-only variables are illegal.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorProgram {
    root: ExprNode,
    directed: bool,
}

impl GeneratorProgram {
    pub fn new(root: ExprNode, directed: bool) -> Result<Self, LangError> {
        validate(&root, directed)?;
        Ok(GeneratorProgram { root, directed })
    }

    pub fn root(&self) -> &ExprNode {
        &self.root
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Program length: the node count of the expression tree. Used as the
    /// complexity measure during search.
    pub fn length(&self) -> usize {
        self.root.node_count()
    }

    /// Which distance variables the program reads. Growth can skip walk
    /// estimation for the others.
    pub fn distance_use(&self) -> DistanceUse {
        let mut use_ = DistanceUse::default();
        self.root.visit(&mut |node| {
            if let ExprNode::Var(v) = node {
                match v {
                    Var::DistU => use_.du = true,
                    Var::DistD => use_.dd = true,
                    Var::DistR => use_.dr = true,
                    _ => {}
                }
            }
        });
        use_
    }
}

/// Check arity, variable legality for the mode, and constant finiteness.
pub fn validate(node: &ExprNode, directed: bool) -> Result<(), LangError> {
    match node {
        ExprNode::Const(c) => {
            if !c.is_finite() {
                return Err(LangError::NonFiniteConst);
            }
        }
        ExprNode::Var(v) => {
            if !directed && v.directed_only() {
                return Err(LangError::DirectedOnly(v.token().to_string()));
            }
        }
        ExprNode::Op(op, children) => {
            if children.len() != op.arity() {
                return Err(LangError::Arity {
                    op: op.token().to_string(),
                    expected: op.arity(),
                    found: children.len(),
                });
            }
            for child in children {
                validate(child, directed)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprNode::Const(c) => write!(f, "{c}"),
            ExprNode::Var(v) => f.write_str(v.token()),
            ExprNode::Op(op, children) => {
                write!(f, "({}", op.token())?;
                for child in children {
                    write!(f, " {child}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for GeneratorProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}
