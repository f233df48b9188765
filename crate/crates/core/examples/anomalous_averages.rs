//! Closed-form averages of a dynamical coherent state next to brute-force
//! expectation values in the truncated Fock space.

use qho_coherent::prelude::*;

fn main() -> qho_coherent::error::Result<()> {
    let params = OscillatorParams::new(1.0, 2.0, 0.5)?;
    let label = CoherentLabel::new(1.0, 1.0);
    let n_max = auto_n_max(label, 1e-15)? + 2;
    let brute = BruteForce::new(&params, n_max);

    println!(
        "{:>6} {:>22} {:>22} {:>10} {:>9}",
        "t", "<a>", "<a^2>", "dx dp", "max diff"
    );
    for k in 0..6 {
        let t = k as f64 * params.period() / 6.0;
        let state = dynamical_coherent_state(label, t, &params, n_max);
        let numeric = brute.evaluate(&state)?;
        let closed = averages_closedform(label, t, &params);
        println!(
            "{t:>6.3} {:>22.6} {:>22.6} {:>10.6} {:>9.1e}",
            closed.a_avg,
            closed.a2_avg,
            closed.uncertainty,
            numeric.max_abs_diff(&closed)
        );
    }

    // Fock states never beat the coherent value ħ/2
    for n in 0..4 {
        println!("Fock |{n}>: dx dp = {:.2}", uncertainty_fock(n, &params));
    }
    Ok(())
}
