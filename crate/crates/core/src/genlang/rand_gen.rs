//! Random program generation and subtree-replacement mutation.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::ast::{ExprNode, GeneratorProgram, Op, Var};

/// Parameters of the "grow"-style random tree generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TreeGenParams {
    /// Maximum tree depth; 1 forces a single leaf.
    pub max_depth: u32,
    /// Probability of cutting a branch short with a leaf before the depth
    /// limit is reached.
    pub terminal_prob: f64,
}

impl Default for TreeGenParams {
    fn default() -> Self {
        TreeGenParams {
            max_depth: 5,
            terminal_prob: 0.3,
        }
    }
}

impl TreeGenParams {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_depth < 1 {
            return Err("max_depth must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.terminal_prob) {
            return Err("terminal_prob must lie in [0, 1]".into());
        }
        Ok(())
    }
}

/// Leaf constants: half the time a small integer in {0,…,10}, otherwise a
/// uniform real in (0, 10].
pub fn random_constant(rng: &mut impl Rng) -> f64 {
    if rng.gen_bool(0.5) {
        rng.gen_range(0..=10) as f64
    } else {
        (1.0 - rng.gen::<f64>()) * 10.0
    }
}

fn random_leaf(directed: bool, rng: &mut impl Rng) -> ExprNode {
    if rng.gen_bool(0.5) {
        let vars: &[Var] = if directed { &Var::ALL } else { &Var::UNDIRECTED };
        ExprNode::Var(vars[rng.gen_range(0..vars.len())])
    } else {
        ExprNode::Const(random_constant(rng))
    }
}

fn grow(depth_left: u32, params: &TreeGenParams, directed: bool, rng: &mut impl Rng) -> ExprNode {
    if depth_left <= 1 || rng.gen_bool(params.terminal_prob) {
        return random_leaf(directed, rng);
    }
    let op = Op::ALL[rng.gen_range(0..Op::ALL.len())];
    let children = (0..op.arity())
        .map(|_| grow(depth_left - 1, params, directed, rng))
        .collect();
    ExprNode::Op(op, children)
}

/// Generate a random well-formed program for the given mode.
pub fn random_program(
    params: &TreeGenParams,
    directed: bool,
    rng: &mut impl Rng,
) -> GeneratorProgram {
    let root = grow(params.max_depth, params, directed, rng);
    GeneratorProgram::new(root, directed).expect("generated tree is well-formed")
}

/// Replace one uniformly chosen node of `program` with a subtree uniformly
/// chosen from a fresh random tree. The input program is untouched.
///
/// Draw order (fixed for replay): target node index, donor tree, donor node
/// index.
pub fn mutate(
    program: &GeneratorProgram,
    params: &TreeGenParams,
    rng: &mut impl Rng,
) -> GeneratorProgram {
    let target = rng.gen_range(0..program.length());
    let donor = random_program(params, program.is_directed(), rng);
    let donor_node = donor.root().subtree(rng.gen_range(0..donor.length()));
    let root = program.root().replace(target, donor_node.clone());
    GeneratorProgram::new(root, program.is_directed()).expect("mutated tree is well-formed")
}
