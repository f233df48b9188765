//! Ehrenfest check on a sampled trajectory, and the dt² convergence of the
//! finite-difference residual.

use qho_coherent::prelude::*;
use qho_coherent::symmetry::classical_energy;

fn main() -> qho_coherent::error::Result<()> {
    let params = OscillatorParams::natural();
    let label = CoherentLabel::new(0.8, -1.2);

    let traj = Trajectory::closed_form(label, &params, 0.0, params.period() / 12.0, 13)?;
    for r in traj.records().iter().step_by(3) {
        let e =
            classical_energy(r.mean_x, r.mean_p, &params) + 0.5 * params.hbar() * params.omega();
        println!(
            "t = {:.3}  x = {:+.4}  p = {:+.4}  E = {:.6} ({:.6})",
            r.time, r.mean_x, r.mean_p, r.energy, e
        );
    }

    let mut previous: Option<f64> = None;
    for dt in [0.08, 0.04, 0.02, 0.01] {
        let samples = (params.period() / dt).round() as usize + 1;
        let traj = Trajectory::closed_form(label, &params, 0.0, dt, samples)?;
        let res = ehrenfest_residual(&traj, &params)?.x();
        match previous {
            Some(p) => println!("dt = {dt:.2}: residual {res:.3e}, ratio {:.3}", p / res),
            None => println!("dt = {dt:.2}: residual {res:.3e}"),
        }
        previous = Some(res);
    }
    Ok(())
}
