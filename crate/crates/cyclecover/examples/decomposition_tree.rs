//! Decomposition trees: repeatedly contract a maximum circuit, split into
//! components, and recurse until everything is a loop. The circuit sizes
//! minus one always sum to the rank, and the depth stays below c - 1.

use cyclecover::arith::FieldSpec;
use cyclecover::complex::SimplicialComplex;
use cyclecover::decomp::{build_decomposition_tree, validate_tree};
use cyclecover::matroid::LinearMatroid;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // K_4 with every edge subdivided once: the maximum cycle has 8 edges,
    // and contracting it leaves two parallel pairs, so the tree has depth 1.
    let edges: Vec<Vec<u32>> = vec![
        vec![0, 4], vec![1, 4], vec![0, 5], vec![2, 5], vec![0, 6], vec![3, 6],
        vec![1, 7], vec![2, 7], vec![1, 8], vec![3, 8], vec![2, 9], vec![3, 9],
    ];
    let graph = SimplicialComplex::from_facets(&edges)?;
    let m = LinearMatroid::from_complex(&graph, 1, FieldSpec::Rational)?;
    println!("subdivided K_4: {} edges, rank {}", m.n_elements(), m.rank());

    let tree = build_decomposition_tree(&m, 1_000_000)?;
    println!(
        "tree: {} nodes, depth {}, max circuit size {}",
        tree.node_count(),
        tree.depth(),
        tree.max_circuit_size()
    );
    for (path, node) in tree.nodes() {
        let circuit: Vec<&str> = node.circuit.iter().map(|&e| m.label(e)).collect();
        println!(
            "  node {:?}: contracts {{{}}}, rank {}, {} loops eliminated",
            path,
            circuit.join(", "),
            node.rank,
            node.eliminated_loops.len()
        );
    }

    // The rank identity: sum of (|C_x| - 1) over all nodes equals the rank.
    let total: usize = tree.nodes().iter().map(|(_, n)| n.circuit.len() - 1).sum();
    println!("sum of (|C_x| - 1) = {} = rank {}", total, m.rank());

    // Validation rebuilds every minor and re-searches every circuit.
    let report = validate_tree(&tree, 1_000_000);
    for check in &report.checks {
        println!("  check {}: {}", check.name, if check.passed { "ok" } else { "FAILED" });
    }

    // Export formats: JSON for machines, DOT for graphviz.
    println!("\nDOT:\n{}", tree.to_dot());
    Ok(())
}
