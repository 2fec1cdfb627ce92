//! The covering number: fewest acyclic (independent) sets that cover all
//! elements, with the exhaustive density check and the size profile.

use cyclecover::extremal::{gamma_bruteforce, gamma_partition, s_profile};
use cyclecover::gen::gen_vector_space_nonzero;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fano = gen_vector_space_nonzero(2, 3)?;

    // The partition algorithm grows independent classes with augmenting
    // paths; its failure certificate proves optimality.
    let cover = gamma_partition(&fano)?;
    println!("gamma(fano) = {}", cover.gamma);
    for (i, block) in cover.partition.iter().enumerate() {
        let labels: Vec<&str> = block.iter().map(|&e| fano.label(e)).collect();
        println!("  class {}: {{{}}}", i + 1, labels.join(", "));
    }
    let witness: Vec<&str> = cover.witness.iter().map(|&e| fano.label(e)).collect();
    println!("witness subset: {{{}}}", witness.join(", "));

    // Brute force confirms it and exposes the exact density: here 7 elements
    // of rank 3 give 7/3, whose ceiling is gamma.
    let brute = gamma_bruteforce(&fano, false)?;
    println!("exhaustive gamma = {}, exact max density = {}", brute.gamma, brute.density);

    // s(i) is the largest subset size of rank at most i; for the Fano
    // matroid the rank-2 flats have at most 3 points, so s = 0, 1, 3, 7.
    println!("size profile: {:?}", s_profile(&fano, fano.rank(), false)?);
    Ok(())
}
