//! Coherent wave packet in position space: truncated series against the
//! closed Gaussian, with the width staying fixed as the packet oscillates.

use qho_coherent::prelude::*;
use qho_coherent::wavefunction::{
    density_peak, packet_moments, series_on_grid, ClosedForm, SpatialGrid,
};

fn main() -> qho_coherent::error::Result<()> {
    let params = OscillatorParams::natural();
    let label = CoherentLabel::new(2.0, 0.0);
    let n_max = auto_n_max(label, 1e-24)?;
    let grid = SpatialGrid::centered(0.0, 10.0, 2001, &params)?;

    for k in 0..=4 {
        let t = k as f64 * params.period() / 8.0;
        let series = series_on_grid(label, t, &params, n_max, &grid);
        let diff = series
            .iter()
            .map(|s| {
                (s.value - psi_closed(label, s.x, t, &params, ClosedForm::MeanPhase).value).norm()
            })
            .fold(0.0, f64::max);
        let m = packet_moments(&series, &grid)?;
        let peak = density_peak(&series).unwrap_or(f64::NAN);
        println!(
            "t = {t:.3}: norm {:.10}, <x> {:+.6}, var {:.10}, peak {peak:+.3}, |series - closed| {diff:.1e}",
            m.norm, m.mean, m.variance
        );
    }

    // coarse text plot of |psi|^2 at t = 0
    let samples: Vec<_> = (0..41).map(|i| -5.0 + 0.25 * i as f64).collect();
    for x in samples.iter().step_by(2) {
        let d = psi_closed(label, *x, 0.0, &params, ClosedForm::ComplexCenter).abs2();
        println!("{x:+5.2} {}", "*".repeat((d * 80.0).round() as usize));
    }
    Ok(())
}
