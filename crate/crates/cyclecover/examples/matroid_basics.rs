//! The linear matroid of a column family: rank, circuits with certificates,
//! closure, minors, and connected components.

use cyclecover::arith::FieldSpec;
use cyclecover::gen::gen_vector_space_nonzero;
use cyclecover::matroid::{CircuitCheck, LinearMatroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The Fano matroid: all seven nonzero vectors of GF(2)^3.
    let fano = gen_vector_space_nonzero(2, 3)?;
    println!("fano: {} elements, rank {}", fano.n_elements(), fano.rank());
    println!("labels: {:?}", fano.labels());

    // A dependent triple is a circuit exactly when every proper subset is
    // independent; the certificate is the kernel combination.
    match fano.is_circuit(&[0, 1, 2])? {
        CircuitCheck::Circuit { certificate } => {
            let coeffs: Vec<String> = certificate.iter().map(|c| c.to_string()).collect();
            println!("{{0,1,2}} is a circuit, kernel coefficients [{}]", coeffs.join(", "));
        }
        other => println!("{{0,1,2}}: {other:?}"),
    }
    println!("{{0,1,3}} independent: {}", fano.is_independent(&[0, 1, 3])?);

    // Fundamental circuit: adding element 2 to the basis {0,1,3} closes one.
    println!("fundamental circuit of 2 over {{0,1,3}}: {:?}", fano.fundamental_circuit(&[0, 1, 3], 2)?);
    println!("closure of {{0,1}}: {:?}", fano.closure_of(&[0, 1])?);

    // Minors: deletion drops columns, contraction projects them away.
    let minor = fano.minor(&[6], &[0], true)?;
    println!(
        "fano / 0 \\ 6 (loops dropped): {} elements, rank {}",
        minor.n_elements(),
        minor.rank()
    );

    // A direct sum is detected by components: circuits never cross blocks.
    let f3 = FieldSpec::prime(3)?;
    let int = |n| f3.integer(n);
    let columns = vec![
        vec![int(1), int(0)],
        vec![int(2), int(0)],
        vec![int(0), int(1)],
        vec![int(0), int(2)],
    ];
    let blocks = LinearMatroid::from_columns(f3, None, &columns)?;
    println!("two parallel blocks: components {:?}", blocks.components());
    println!("fano is connected: {:?}", fano.components().len() == 1);
    Ok(())
}
