//! Simplicial complexes and their boundary matrices: the boundary of a
//! boundary vanishes, and the d-th boundary matrix drives everything else.

use cyclecover::arith::FieldSpec;
use cyclecover::complex::{
    apply_boundary, boundary_matrix, boundary_of_simplex, Simplex, SimplicialComplex,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The boundary of the solid tetrahedron: all four triangles on {0,1,2,3}.
    let sphere = SimplicialComplex::from_facets(&[
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 3],
        vec![1, 2, 3],
    ])?;
    println!("f-vector (top down): {:?}", sphere.f_vector());
    println!("dimension {}, pure: {}", sphere.dimension(), sphere.is_pure());

    // The boundary of one triangle is its three signed edges.
    let triangle = Simplex::new(vec![0, 1, 2])?;
    let chain = boundary_of_simplex(&triangle, FieldSpec::Rational);
    for (face, coeff) in chain.terms() {
        println!("  boundary({triangle}) has {coeff} * {face}");
    }

    // Applying the boundary again kills it: dd = 0.
    let again = apply_boundary(&chain, FieldSpec::Rational)?;
    println!("dd({triangle}) is zero: {}", again.is_zero());

    // The full matrix of the d=2 boundary operator, rows indexed by edges.
    let bm = boundary_matrix(&sphere, 2, FieldSpec::Rational)?;
    println!(
        "boundary matrix: {} rows ({}-faces) x {} columns ({}-faces)",
        bm.row_faces.len(),
        1,
        bm.col_faces.len(),
        2
    );
    for (j, col) in bm.columns.iter().enumerate() {
        let entries: Vec<String> = col.iter().map(|s| s.to_string()).collect();
        println!("  column {} = {}: [{}]", j, bm.col_faces[j], entries.join(", "));
    }
    Ok(())
}
