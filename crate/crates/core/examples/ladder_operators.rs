//! Truncated ladder, position and momentum operators, and where the
//! canonical commutator breaks down.

use num_complex::Complex64;
use qho_coherent::prelude::*;

fn main() -> qho_coherent::error::Result<()> {
    let params = OscillatorParams::natural();
    let n_max = 6;
    let (a, a_dag) = make_ladder(n_max);
    let (x, p) = make_xp(&params, n_max);

    let comm = a.commutator(&a_dag)?;
    println!("diag of [a, a+] at n_max = {n_max}:");
    for n in 0..=n_max {
        println!("  {n}: {:+.3}", comm.get(n, n).re);
    }

    // [X, P] = iħ everywhere except the last level
    let xp = x.commutator(&p)?;
    let last = xp.get(n_max, n_max) / Complex64::i();
    println!(
        "[X, P]/i at (0,0) = {:.3}, at the edge = {:.3}",
        (xp.get(0, 0) / Complex64::i()).re,
        last.re
    );

    let h = make_hamiltonian(&params, n_max);
    for n in [0, 3] {
        let state = fock_state(n, n_max)?;
        let e = expectation(&h, &state)?.re;
        let occ = expectation(&a_dag.dot(&a)?, &state)?.re;
        println!("|{n}>: <H> = {e:.3}, <a+a> = {occ:.3}");
    }
    Ok(())
}
