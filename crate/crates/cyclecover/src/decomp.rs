//! Recursive circuit-contraction trees: every node contracts a maximum
//! circuit of its minor and recurses into the loopless components.

use crate::extremal::{max_circuit_exact, ExtremalError};
use crate::matroid::{CircuitCheck, LinearMatroid, MatroidError};
use serde_json::json;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("the matroid splits into {components} connected components; decompose each separately")]
    NotConnected { components: usize },
    #[error("the matroid has {} loops; a loopless matroid is required", loops.len())]
    HasLoops { loops: Vec<usize> },
    #[error("decomposition needs at least two elements, got {n}")]
    TooSmall { n: usize },
    #[error("exact circuit search exhausted its budget of {budget} nodes at a tree node")]
    SearchBudgetExceeded { budget: u64, nodes: u64 },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// One node of the tree. All element sets are indices into the root matroid;
/// `deleted` and `contracted` describe the minor this node works on, so the
/// node can be audited independently of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    /// Root elements contracted on the path from the root to this node.
    pub contracted: Vec<usize>,
    /// Root elements deleted on the path: loops dropped after earlier
    /// contractions plus the sibling components split away.
    pub deleted: Vec<usize>,
    /// Ground set of this node's minor, ascending.
    pub elements: Vec<usize>,
    /// The chosen maximum circuit of the minor, ascending.
    pub circuit: Vec<usize>,
    /// Elements that become loops once `circuit` is contracted; they are
    /// eliminated here and belong to no descendant.
    pub eliminated_loops: Vec<usize>,
    /// Rank of this node's minor.
    pub rank: usize,
    pub children: Vec<DecompNode>,
}

impl DecompNode {
    fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    fn count(&self) -> usize {
        1 + self.children.iter().map(DecompNode::count).sum::<usize>()
    }

    fn collect<'a>(&'a self, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, &'a DecompNode)>) {
        out.push((path.clone(), self));
        for (i, child) in self.children.iter().enumerate() {
            path.push(i);
            child.collect(path, out);
            path.pop();
        }
    }
}

/// A full tree together with the matroid it decomposes.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    pub source: LinearMatroid,
    pub root: DecompNode,
}

impl DecompositionTree {
    /// Size of the root circuit, the maximum circuit size of the source.
    pub fn max_circuit_size(&self) -> usize {
        self.root.circuit.len()
    }

    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn node_count(&self) -> usize {
        self.root.count()
    }

    /// All nodes in preorder, each with its path of child indices.
    pub fn nodes(&self) -> Vec<(Vec<usize>, &DecompNode)> {
        let mut out = Vec::new();
        self.root.collect(&mut Vec::new(), &mut out);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn node_json(m: &LinearMatroid, node: &DecompNode) -> serde_json::Value {
            let names = |ids: &[usize]| -> Vec<&str> {
                ids.iter().map(|&e| m.label(e)).collect()
            };
            json!({
                "elements": names(&node.elements),
                "circuit": names(&node.circuit),
                "circuit_size": node.circuit.len(),
                "rank": node.rank,
                "eliminated_loops": names(&node.eliminated_loops),
                "children": node.children.iter().map(|c| node_json(m, c)).collect::<Vec<_>>(),
            })
        }
        json!({
            "elements": self.source.n_elements(),
            "rank": self.source.rank(),
            "max_circuit_size": self.max_circuit_size(),
            "depth": self.depth(),
            "nodes": self.node_count(),
            "root": node_json(&self.source, &self.root),
        })
    }

    /// Graphviz rendering; node labels carry circuit size and minor rank.
    pub fn to_dot(&self) -> String {
        fn walk(node: &DecompNode, out: &mut String, counter: &mut usize) -> usize {
            let id = *counter;
            *counter += 1;
            out.push_str(&format!(
                "    n{id} [label=\"|C_x|={}, rank={}\"];\n",
                node.circuit.len(),
                node.rank
            ));
            for child in &node.children {
                let cid = walk(child, out, counter);
                out.push_str(&format!("    n{id} -> n{cid};\n"));
            }
            id
        }
        let mut out = String::from("digraph decomposition {\n    node [shape=box];\n");
        walk(&self.root, &mut out, &mut 0);
        out.push_str("}\n");
        out
    }
}

/// Builds the tree for a connected loopless matroid with at least two
/// elements. Each node finds the lexicographically least maximum circuit of
/// its minor, contracts it, drops the elements that became loops, and
/// recurses into the connected components (ordered by least element).
pub fn build_decomposition_tree(
    m: &LinearMatroid,
    budget: u64,
) -> Result<DecompositionTree, DecompError> {
    let loops = m.loops();
    if !loops.is_empty() {
        return Err(DecompError::HasLoops { loops });
    }
    let n = m.n_elements();
    if n <= 1 {
        return Err(DecompError::TooSmall { n });
    }
    let components = m.components();
    if components.len() != 1 {
        return Err(DecompError::NotConnected { components: components.len() });
    }
    let to_root: Vec<usize> = (0..n).collect();
    let root = build_node(m, &to_root, Vec::new(), Vec::new(), budget)?;
    Ok(DecompositionTree { source: m.clone(), root })
}

/// Recursive worker. `mx` is the node's minor, `to_root` maps its local
/// indices to root indices (ascending), and the path descriptors are in root
/// indices. Every minor passed in is connected, loopless, and has a circuit.
fn build_node(
    mx: &LinearMatroid,
    to_root: &[usize],
    contracted: Vec<usize>,
    deleted: Vec<usize>,
    budget: u64,
) -> Result<DecompNode, DecompError> {
    let rank = mx.rank();
    let found = match max_circuit_exact(mx, budget) {
        Ok(result) => result,
        Err(ExtremalError::BudgetExceeded { budget, nodes, .. }) => {
            return Err(DecompError::SearchBudgetExceeded { budget, nodes })
        }
        // Connected loopless minors with more than one element have circuits,
        // and the builder never hands anything else to the search.
        Err(other) => unreachable!("circuit search failed on a tree minor: {other}"),
    };
    let circuit_local = found.circuit;
    let circuit: Vec<usize> = circuit_local.iter().map(|&e| to_root[e]).collect();

    // Contract the circuit but keep loops visible: they are eliminated here
    // and must be recorded for the element accounting.
    let contracted_minor = mx.minor(&[], &circuit_local, false)?;
    let survivors: Vec<usize> = (0..mx.n_elements())
        .filter(|e| circuit_local.binary_search(e).is_err())
        .collect();
    let loop_positions: Vec<usize> = contracted_minor.loops();
    let eliminated_loops: Vec<usize> =
        loop_positions.iter().map(|&i| to_root[survivors[i]]).collect();
    let loop_set: BTreeSet<usize> = loop_positions.iter().copied().collect();
    let live: Vec<usize> =
        (0..survivors.len()).filter(|i| !loop_set.contains(i)).collect();

    let mut children = Vec::new();
    if !live.is_empty() {
        let clean = contracted_minor.minor(&loop_positions, &[], false)?;
        let clean_to_root: Vec<usize> =
            live.iter().map(|&i| to_root[survivors[i]]).collect();
        let components = clean.components();
        for (ci, component) in components.iter().enumerate() {
            let others: Vec<usize> = components
                .iter()
                .enumerate()
                .filter(|(cj, _)| *cj != ci)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            let sub = clean.minor(&others, &[], false)?;
            let sub_to_root: Vec<usize> =
                component.iter().map(|&e| clean_to_root[e]).collect();
            let mut child_contracted = contracted.clone();
            child_contracted.extend(&circuit);
            child_contracted.sort_unstable();
            let mut child_deleted = deleted.clone();
            child_deleted.extend(&eliminated_loops);
            child_deleted.extend(others.iter().map(|&e| clean_to_root[e]));
            child_deleted.sort_unstable();
            children.push(build_node(&sub, &sub_to_root, child_contracted, child_deleted, budget)?);
        }
    }

    Ok(DecompNode {
        contracted,
        deleted,
        elements: to_root.to_vec(),
        circuit,
        eliminated_loops,
        rank,
        children,
    })
}

/// One validation check; `offender` is the child-index path of the first
/// failing node when the failure is local to a node.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TreeCheck {
    pub name: &'static str,
    pub passed: bool,
    pub offender: Option<Vec<usize>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub checks: Vec<TreeCheck>,
    pub passed: bool,
}

/// Re-audits a tree against its source matroid: every stored circuit is a
/// maximum circuit of the minor its descriptors rebuild, circuit sizes
/// strictly decrease along edges, the depth stays below the root circuit
/// size minus one, the circuit sizes sum to the rank, and every element is
/// eliminated at exactly one node.
pub fn validate_tree(tree: &DecompositionTree, budget: u64) -> ValidationReport {
    let nodes = tree.nodes();
    let mut checks = Vec::new();

    checks.push(check_maximum_circuits(tree, &nodes, budget));
    checks.push(check_strict_decrease(&nodes));
    checks.push(check_depth_bound(tree));
    checks.push(check_rank_identity(tree, &nodes));
    checks.push(check_element_accounting(tree, &nodes));

    let passed = checks.iter().all(|c| c.passed);
    ValidationReport { checks, passed }
}

fn pass(name: &'static str) -> TreeCheck {
    TreeCheck { name, passed: true, offender: None, detail: String::new() }
}

fn fail(name: &'static str, offender: Option<Vec<usize>>, detail: String) -> TreeCheck {
    TreeCheck { name, passed: false, offender, detail }
}

fn check_maximum_circuits(
    tree: &DecompositionTree,
    nodes: &[(Vec<usize>, &DecompNode)],
    budget: u64,
) -> TreeCheck {
    const NAME: &str = "maximum_circuits";
    let n = tree.source.n_elements();
    for (path, node) in nodes {
        let removed: BTreeSet<usize> =
            node.deleted.iter().chain(&node.contracted).copied().collect();
        let expected: Vec<usize> = (0..n).filter(|e| !removed.contains(e)).collect();
        if expected != node.elements {
            return fail(
                NAME,
                Some(path.clone()),
                "minor descriptor disagrees with the stored element set".into(),
            );
        }
        let minor = match tree.source.minor(&node.deleted, &node.contracted, false) {
            Ok(m) => m,
            Err(e) => return fail(NAME, Some(path.clone()), format!("minor rebuild failed: {e}")),
        };
        let mut local = Vec::with_capacity(node.circuit.len());
        for e in &node.circuit {
            match node.elements.binary_search(e) {
                Ok(i) => local.push(i),
                Err(_) => {
                    return fail(
                        NAME,
                        Some(path.clone()),
                        format!("circuit element {e} is outside the node's minor"),
                    )
                }
            }
        }
        match minor.is_circuit(&local) {
            Ok(CircuitCheck::Circuit { .. }) => {}
            Ok(CircuitCheck::Independent) => {
                return fail(NAME, Some(path.clone()), "stored set is independent".into())
            }
            Ok(CircuitCheck::ProperSubsetDependent { .. }) => {
                return fail(NAME, Some(path.clone()), "stored set is dependent but not minimal".into())
            }
            Err(e) => return fail(NAME, Some(path.clone()), format!("circuit test failed: {e}")),
        }
        match max_circuit_exact(&minor, budget) {
            Ok(best) => {
                if best.size() != node.circuit.len() {
                    return fail(
                        NAME,
                        Some(path.clone()),
                        format!(
                            "stored circuit has size {}, the minor's maximum is {}",
                            node.circuit.len(),
                            best.size()
                        ),
                    );
                }
            }
            Err(e) => {
                return fail(NAME, Some(path.clone()), format!("cannot certify maximality: {e}"))
            }
        }
    }
    pass(NAME)
}

fn check_strict_decrease(nodes: &[(Vec<usize>, &DecompNode)]) -> TreeCheck {
    const NAME: &str = "strict_decrease";
    for (path, node) in nodes {
        for (i, child) in node.children.iter().enumerate() {
            if child.circuit.len() >= node.circuit.len() {
                let mut offender = path.clone();
                offender.push(i);
                return fail(
                    NAME,
                    Some(offender),
                    format!(
                        "child circuit size {} does not drop below parent size {}",
                        child.circuit.len(),
                        node.circuit.len()
                    ),
                );
            }
        }
    }
    pass(NAME)
}

fn check_depth_bound(tree: &DecompositionTree) -> TreeCheck {
    const NAME: &str = "depth_bound";
    let depth = tree.depth();
    let c = tree.max_circuit_size();
    if c >= 2 && depth < c - 1 {
        pass(NAME)
    } else {
        fail(NAME, None, format!("depth {depth} does not stay below {c} - 1"))
    }
}

fn check_rank_identity(
    tree: &DecompositionTree,
    nodes: &[(Vec<usize>, &DecompNode)],
) -> TreeCheck {
    const NAME: &str = "rank_identity";
    let total: usize = nodes.iter().map(|(_, node)| node.circuit.len() - 1).sum();
    let rank = tree.source.rank();
    if total == rank {
        pass(NAME)
    } else {
        fail(NAME, None, format!("circuit sizes minus one sum to {total}, rank is {rank}"))
    }
}

fn check_element_accounting(
    tree: &DecompositionTree,
    nodes: &[(Vec<usize>, &DecompNode)],
) -> TreeCheck {
    const NAME: &str = "element_accounting";
    let n = tree.source.n_elements();
    let mut seen = vec![false; n];
    for (path, node) in nodes {
        for &e in node.circuit.iter().chain(&node.eliminated_loops) {
            if e >= n || seen[e] {
                return fail(
                    NAME,
                    Some(path.clone()),
                    format!("element {e} is eliminated twice or out of range"),
                );
            }
            seen[e] = true;
        }
    }
    let missing = seen.iter().filter(|&&s| !s).count();
    if missing == 0 {
        pass(NAME)
    } else {
        fail(NAME, None, format!("{missing} elements are never eliminated"))
    }
}
