//! Poisson occupation of a coherent state and automatic cutoff selection.

use qho_coherent::prelude::*;

fn main() -> qho_coherent::error::Result<()> {
    let label = CoherentLabel::new(1.5, -0.5);
    let n_max = auto_n_max(label, 1e-12)?;
    println!(
        "|chi|^2 = {:.3}, auto n_max = {n_max}",
        label.mean_occupation()
    );

    let state = coherent_coefficients(label, n_max);
    for (n, c) in state.coeffs().iter().enumerate().take(8) {
        let p = c.norm_sqr();
        println!("{n:>3} {p:.6} {}", "#".repeat((p * 120.0).round() as usize));
    }
    println!(
        "norm^2 = {:.15}, tail = {:.3e}",
        state.norm_sqr(),
        truncation_tail(label, n_max)
    );

    for cut in [4, 8, 16, n_max] {
        let s = coherent_coefficients(label, cut);
        let r = annihilation_residual(&s, label, &make_ladder(cut).0)?;
        println!("n_max = {cut:>2}: ||(a - chi)|chi>|| = {r:.2e}");
    }
    Ok(())
}
