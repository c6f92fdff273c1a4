#![allow(dead_code)]

use chgeom::{CHPoint, Isometry, C64};
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `exp(X)` for a random `X ∈ su(n,1)` with `‖X‖_F = size`.
pub fn random_element(rng: &mut ChaCha8Rng, n: usize, size: f64) -> Isometry {
    let m = DMatrix::from_fn(n + 1, n + 1, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let x = Isometry::algebra_projection(&m);
    let x = &x * C64::new(size / x.norm(), 0.0);
    Isometry::from_algebra(&x).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> DVector<C64> {
    DVector::from_fn(n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// Uniform direction, Euclidean radius below `max_radius`.
pub fn random_point(rng: &mut ChaCha8Rng, n: usize, max_radius: f64) -> CHPoint {
    let v = random_vector(rng, n);
    let r = rng.gen_range(0.0..max_radius);
    CHPoint::new(&v * C64::new(r / v.norm(), 0.0)).unwrap()
}

pub fn random_barycentric(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..len).map(|_| -rng.gen_range(1e-12f64..1.0).ln()).collect();
    let s: f64 = raw.iter().sum();
    raw.iter().map(|v| v / s).collect()
}
