//! AdamW with decoupled weight decay.

use crate::error::{Error, Result};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy)]
pub struct AdamWConfig {
    pub lr: f32,
    pub beta1: f32,
    pub beta2: f32,
    pub eps: f32,
    pub weight_decay: f32,
}

impl Default for AdamWConfig {
    fn default() -> Self {
        AdamWConfig {
            lr: 3e-4,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            weight_decay: 0.01,
        }
    }
}

/// Per-parameter moment buffers plus the shared step counter.
pub struct OptimizerState {
    pub config: AdamWConfig,
    step: u64,
    first_moment: Vec<Vec<f32>>,
    second_moment: Vec<Vec<f32>>,
}

impl OptimizerState {
    /// Buffers are laid out to match `param_sizes` (one entry per parameter,
    /// in a fixed order that callers must preserve across steps).
    pub fn new(config: AdamWConfig, param_sizes: &[usize]) -> Self {
        OptimizerState {
            config,
            step: 0,
            first_moment: param_sizes.iter().map(|&n| vec![0.0; n]).collect(),
            second_moment: param_sizes.iter().map(|&n| vec![0.0; n]).collect(),
        }
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    /// One decoupled-weight-decay Adam update over all parameters. Gradients
    /// are read but never modified here; callers zero them between steps.
    pub fn step(&mut self, params: &mut [&mut Tensor]) -> Result<()> {
        if params.len() != self.first_moment.len() {
            return Err(Error::config(format!(
                "optimizer built for {} parameters, got {}",
                self.first_moment.len(),
                params.len()
            )));
        }
        self.step += 1;
        let t = self.step as i32;
        let c = self.config;
        let bc1 = 1.0 - c.beta1.powi(t);
        let bc2 = 1.0 - c.beta2.powi(t);
        for (idx, p) in params.iter_mut().enumerate() {
            if self.first_moment[idx].len() != p.numel() {
                return Err(Error::Shape(format!(
                    "optimizer moment buffer {} does not match parameter size {}",
                    self.first_moment[idx].len(),
                    p.numel()
                )));
            }
            let grad = p
                .grad()
                .ok_or_else(|| Error::MissingGrad(format!("parameter #{idx}")))?
                .to_vec();
            let m = &mut self.first_moment[idx];
            let v = &mut self.second_moment[idx];
            let data = p.data_mut();
            for i in 0..data.len() {
                let g = grad[i];
                m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g;
                v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g * g;
                let m_hat = m[i] / bc1;
                let v_hat = v[i] / bc2;
                data[i] -= c.lr * (m_hat / (v_hat.sqrt() + c.eps) + c.weight_decay * data[i]);
            }
        }
        Ok(())
    }
}
