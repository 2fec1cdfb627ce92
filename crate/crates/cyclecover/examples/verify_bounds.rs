//! Checking every inequality on real instances: the report bundles exact
//! quantities with one verdict per applicable bound.

use cyclecover::arith::FieldSpec;
use cyclecover::gen::{gen_complete_complex, gen_vector_space_nonzero};
use cyclecover::verify::{analyze_complex, analyze_matroid, verify_lnpr, AnalyzeOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = AnalyzeOptions::default();

    // The complete graph on 9 vertices: dense enough for the classical
    // edge-count bound to bite (36 > 2k * 8 holds up to k = 2).
    let k9 = gen_complete_complex(9, 1)?;
    let report = analyze_complex(&k9, 1, FieldSpec::prime(2)?, &opts)?;
    println!("K_9: c = {}, gamma = {:?}", report.c, report.gamma);
    for v in &report.verdicts {
        println!(
            "  {:<20} lhs {} vs rhs {}  holds: {}{}",
            v.bound_id.as_str(),
            v.lhs,
            v.rhs,
            v.holds,
            if v.vacuous { " (vacuous)" } else { "" },
        );
    }

    // The Fano matroid: covering bound and both field-size corollaries.
    let fano = gen_vector_space_nonzero(2, 3)?;
    let report = analyze_matroid(&fano, &opts)?;
    println!("\nfano: c = {}, gamma = {:?}, all hold: {}", report.c, report.gamma, report.all_hold());
    for note in &report.notes {
        println!("  note: {note}");
    }

    // The colex rank bound, tight with the basis of faces through vertex 0:
    // the first C(4,3) = 4 triples on 6 vertices have 2-rank exactly C(3,2).
    let v = verify_lnpr(6, 2, 3, FieldSpec::prime(2)?)?;
    println!("\nlnpr(n=6, d=2, x=3): rank {} >= {} holds: {}", v.lhs, v.rhs, v.holds);
    println!("witness: {}", v.witness);
    Ok(())
}
