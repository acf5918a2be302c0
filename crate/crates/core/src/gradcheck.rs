//! Central finite-difference checking of tape gradients.
//!
//! The numeric side perturbs each input element by ±h and re-runs the
//! forward scalar, entirely independent of the backward rules it verifies.

use crate::error::Result;
use crate::tape::{Tape, Var};
use crate::tensor::Tensor;

/// Builds a scalar loss from leaf vars registered for the given inputs.
pub type ScalarFn = dyn Fn(&mut Tape, &[Var]) -> Result<Var>;

/// Compare analytic gradients against central finite differences.
///
/// Returns the worst relative error across all elements of all inputs.
/// `h` is the perturbation step (1e-3 is appropriate for f32 storage).
pub fn max_grad_error(inputs: &[Tensor], f: &ScalarFn, h: f32) -> Result<f32> {
    // Analytic pass.
    let mut tape = Tape::new();
    let vars: Vec<Var> = inputs
        .iter()
        .map(|t| tape.leaf(t, true))
        .collect::<Result<_>>()?;
    let loss = f(&mut tape, &vars)?;
    tape.backward(loss)?;
    let analytic: Vec<Vec<f32>> = vars.iter().map(|&v| tape.grad(v).to_vec()).collect();

    let eval = |perturbed: &[Tensor]| -> Result<f64> {
        let mut t = Tape::new();
        let vs: Vec<Var> = perturbed
            .iter()
            .map(|x| t.leaf(x, false))
            .collect::<Result<_>>()?;
        let out = f(&mut t, &vs)?;
        Ok(t.scalar(out) as f64)
    };

    let mut worst = 0.0f32;
    let mut work: Vec<Tensor> = inputs.to_vec();
    for (ti, input) in inputs.iter().enumerate() {
        for ei in 0..input.numel() {
            let orig = input.data()[ei];
            work[ti].data_mut()[ei] = orig + h;
            let up = eval(&work)?;
            work[ti].data_mut()[ei] = orig - h;
            let down = eval(&work)?;
            work[ti].data_mut()[ei] = orig;
            let numeric = ((up - down) / (2.0 * h as f64)) as f32;
            let a = analytic[ti][ei];
            let denom = a.abs().max(numeric.abs()).max(1e-3);
            let rel = (a - numeric).abs() / denom;
            if rel > worst {
                worst = rel;
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_map_checks_clean() {
        let x = Tensor::from_vec(&[3], vec![0.3, -0.7, 1.1]).unwrap();
        let err = max_grad_error(
            &[x],
            &|t, vs| {
                let y = t.scale(vs[0], 2.0);
                Ok(t.sum(y))
            },
            1e-3,
        )
        .unwrap();
        assert!(err < 1e-4, "err = {err}");
    }
}
