//! Show squeezing moving from the probe input onto the pump output when both
//! modes are driven.
//!
//! The atoms couple the two cavity modes, so quadrature noise entering at the
//! probe port reappears — rotated — on the pump. Near the exchange frequency
//! the pump's best quadrature dips below the vacuum level.
//!
//! Run with `cargo run --example squeezing_transfer`.

use cavity_eit::closedform::{self, ClosedFormInput};
use cavity_eit::{Mode, ModelParams, SpectrumEngine, C64};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ModelParams {
        detuning: 100.0,
        alpha2: C64::new(-200.0, 0.0),
        ..ModelParams::benchmark()
    };

    let engine = SpectrumEngine::new(&params)?;
    let input = ClosedFormInput::from_params(&params)?;
    let omega_sq = closedform::squeezing_exchange_frequency(&input)?;
    println!("exchange frequency: {omega_sq:.6} photon-decay units");
    println!();

    // Scan the pump quadrature angle at the exchange frequency.
    println!("pump spectrum at the exchange frequency versus quadrature angle");
    println!("{:>10}  {:>12}", "theta/pi", "spectrum");
    let mut best = (0.0_f64, f64::INFINITY);
    for k in 0..16 {
        let theta = std::f64::consts::PI * k as f64 / 16.0;
        let value = engine.value(Mode::Pump, theta, omega_sq)?;
        if value < best.1 {
            best = (theta, value);
        }
        println!("{:>10.3}  {value:>12.6}", theta / std::f64::consts::PI);
    }

    println!();
    println!(
        "best pump quadrature: theta = {:.3} pi, spectrum {:.4} (vacuum = 1)",
        best.0 / std::f64::consts::PI,
        best.1
    );
    Ok(())
}
