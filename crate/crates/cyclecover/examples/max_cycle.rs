//! Finding the largest simple cycle: exact branch-and-bound against the
//! randomized greedy probe, on the complete graph K_6.

use cyclecover::arith::FieldSpec;
use cyclecover::extremal::{max_circuit_exact, max_circuit_greedy, ExtremalError};
use cyclecover::gen::gen_complete_complex;
use cyclecover::matroid::LinearMatroid;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k6 = gen_complete_complex(6, 1)?;
    let m = LinearMatroid::from_complex(&k6, 1, FieldSpec::Rational)?;
    println!("K_6: {} edges, rank {}", m.n_elements(), m.rank());

    // The exact search returns the lexicographically least maximum circuit;
    // for a graph that is the longest simple cycle, here a Hamilton cycle.
    let best = max_circuit_exact(&m, 1_000_000)?;
    let labels: Vec<&str> = best.circuit.iter().map(|&e| m.label(e)).collect();
    println!("exact: c = {} after {} nodes", best.size(), best.nodes);
    println!("cycle: {}", labels.join(", "));

    // The greedy probe inserts columns in shuffled order and keeps the
    // largest fundamental circuit: fast, deterministic per seed, and always
    // a true cycle, but only a lower bound.
    for seed in 0..3 {
        let probe = max_circuit_greedy(&m, 4, seed)?;
        println!("greedy (seed {seed}): {} edges, exact claim: {}", probe.size(), probe.exact);
    }

    // A tiny budget fails loudly instead of lying, and carries the best
    // circuit seen so far.
    match max_circuit_exact(&m, 10) {
        Err(ExtremalError::BudgetExceeded { budget, nodes, best }) => println!(
            "budget {budget} exhausted at {nodes} nodes; best so far: {:?}",
            best.map(|b| b.size())
        ),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
