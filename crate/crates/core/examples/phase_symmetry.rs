//! The phase transformation a → a·e^(iα): H and N are invariant, the coherent
//! state is not, and ⟨a⟩ rotates as an order parameter.

use qho_coherent::prelude::*;
use qho_coherent::symmetry::{classical_energy, ladder_average};

fn main() -> qho_coherent::error::Result<()> {
    let params = OscillatorParams::natural();
    let n_max = 30;
    let h = make_hamiltonian(&params, n_max);
    let (a, _) = make_ladder(n_max);
    let state = coherent_coefficients(CoherentLabel::new(1.0, 0.5), n_max);

    for deg in [0.0f64, 45.0, 90.0, 180.0] {
        let alpha = PhaseAngle::new(deg.to_radians())?;
        let rotated = transform_state_phase(&state, alpha);
        let a_rot = phase_transform_ladder(&a, alpha);
        let n_rot = a_rot.adjoint().dot(&a_rot)?;
        println!(
            "alpha = {deg:>5.1}: <H> = {:.6}, <N'> = {:.6}, <a> = {:.4}",
            expectation(&h, &rotated)?.re,
            expectation(&n_rot, &state)?.re,
            ladder_average(&rotated),
        );
    }

    let (x, p) = (1.2, -0.4);
    let before = classical_energy(x, p, &params);
    let (x2, p2) = rotate_xp(x, p, PhaseAngle::new(1.0)?, &params);
    println!(
        "classical energy {before:.12} -> {:.12}",
        classical_energy(x2, p2, &params)
    );
    Ok(())
}
