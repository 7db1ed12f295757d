use braidhopf::cartan::CartanDatum;
use braidhopf::hopf::{build_small_quantum_group, check_hopf_axioms, AxiomCheckConfig};
use braidhopf::report::all_pass;
use std::time::Instant;

#[test]
#[ignore]
fn probe_a1_l5_axioms() {
    let t0 = Instant::now();
    let (small, _) = build_small_quantum_group(&CartanDatum::named("A1").unwrap(), 5).unwrap();
    println!("build A1 l5: {:?} dim {:?}", t0.elapsed(), small.dim());
    let t0 = Instant::now();
    let results = check_hopf_axioms(&small, &AxiomCheckConfig::default()).unwrap();
    println!("axioms A1 l5: {:?} pass {}", t0.elapsed(), all_pass(&results));
    assert!(all_pass(&results));
}

#[test]
#[ignore]
fn probe_a2_l3_axioms() {
    let t0 = Instant::now();
    let (small, _) = build_small_quantum_group(&CartanDatum::named("A2").unwrap(), 3).unwrap();
    println!("build A2 l3: {:?} dim {:?}", t0.elapsed(), small.dim());
    let t0 = Instant::now();
    let results = check_hopf_axioms(&small, &AxiomCheckConfig::default()).unwrap();
    println!("axioms A2 l3: {:?} pass {}", t0.elapsed(), all_pass(&results));
    for r in &results { println!("  {} {}", r.check, r.pass); }
    assert!(all_pass(&results));
}
