//! Seeded random `(s, z)` samples.

use clap::ValueEnum;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DATASET_SIZE: usize = 10_000;
/// Half-width of the square that `s` is drawn from.
pub const S_HALF_WIDTH: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dataset {
    Box2,
    Box16,
    Box2000,
}

impl Dataset {
    pub fn z_half_width(self) -> f64 {
        match self {
            Dataset::Box2 => 1.0,
            Dataset::Box16 => 8.0,
            Dataset::Box2000 => 1000.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Dataset::Box2 => "box2",
            Dataset::Box16 => "box16",
            Dataset::Box2000 => "box2000",
        }
    }
}

fn in_square(rng: &mut ChaCha8Rng, half: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-half..=half), rng.gen_range(-half..=half))
}

/// `count` points, `s` in the 16x16 box, `z` in the dataset's square.
pub fn box_points(dataset: Dataset, seed: u64, count: usize) -> Vec<(Complex64, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = in_square(&mut rng, S_HALF_WIDTH);
            let z = in_square(&mut rng, dataset.z_half_width());
            (s, z)
        })
        .collect()
}

/// `count` points, `s` in the 16x16 box, `z` uniform in the disc `|z| <= radius`.
pub fn disc_points(seed: u64, count: usize, radius: f64) -> Vec<(Complex64, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = in_square(&mut rng, S_HALF_WIDTH);
            let r = radius * rng.gen_range(0.0f64..=1.0).sqrt();
            let t = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            (s, Complex64::from_polar(r, t))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_in_range() {
        let a = box_points(Dataset::Box2000, 7, 100);
        assert_eq!(a, box_points(Dataset::Box2000, 7, 100));
        assert_ne!(a, box_points(Dataset::Box2000, 8, 100));
        for (s, z) in a {
            assert!(s.re.abs() <= 8.0 && s.im.abs() <= 8.0);
            assert!(z.re.abs() <= 1000.0 && z.im.abs() <= 1000.0);
        }
        for (_, z) in disc_points(3, 100, 0.9) {
            assert!(z.norm() <= 0.9 + 1e-15);
        }
    }
}
