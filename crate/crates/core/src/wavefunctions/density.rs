use rayon::prelude::*;

use super::{psi_squared, Eigenstate};
use crate::error::{Error, Result};
use crate::params::QuantumNumbers;
use crate::scalar::Scalar;

pub const DEFAULT_RESOLUTION_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOptions {
    /// Zero-fill pixels whose centre lies outside the inscribed disc.
    pub mask_outside_disc: bool,
    pub resolution_cap: usize,
}

impl Default for DensityOptions {
    fn default() -> Self {
        Self { mask_outside_disc: false, resolution_cap: DEFAULT_RESOLUTION_CAP }
    }
}

/// Parameters echoed alongside a raster.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMetadata<T> {
    pub q: QuantumNumbers,
    pub mass_eff: T,
    pub omega_eff: T,
    pub gamma: T,
    pub hbar: T,
    pub length_scale: T,
    pub masked: bool,
}

/// `|Psi|^2` sampled at pixel centres over `[-radius, radius]^2`.
///
/// Row-major; row 0 is the top (`y = +radius`), so `y` decreases with the row
/// index, matching image files. With an odd resolution the middle pixel sits
/// exactly on `r = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid<T> {
    pub radius: T,
    pub resolution: usize,
    pub values: Vec<T>,
    pub metadata: GridMetadata<T>,
}

impl<T: Scalar> DensityGrid<T> {
    pub fn at(&self, row: usize, col: usize) -> T {
        self.values[row * self.resolution + col]
    }

    /// Physical coordinate of a pixel centre along one axis.
    pub fn coordinate(&self, index: usize) -> T {
        let pitch = (self.radius + self.radius) / T::of_usize(self.resolution);
        -self.radius + pitch * (T::of_usize(index) + T::of(0.5))
    }

    pub fn max_value(&self) -> T {
        self.values.iter().copied().fold(T::zero(), T::max)
    }

    /// Index of the pixel with the largest value (first in row-major order).
    pub fn argmax(&self) -> (usize, usize) {
        let mut best = 0;
        for (i, v) in self.values.iter().enumerate() {
            if *v > self.values[best] {
                best = i;
            }
        }
        (best / self.resolution, best % self.resolution)
    }
}

pub fn density_grid<T: Scalar>(s: &Eigenstate<T>, radius: T, resolution: usize) -> Result<DensityGrid<T>> {
    density_grid_with(s, radius, resolution, DensityOptions::default())
}

pub fn density_grid_with<T: Scalar>(
    s: &Eigenstate<T>,
    radius: T,
    resolution: usize,
    options: DensityOptions,
) -> Result<DensityGrid<T>> {
    if !(radius.is_finite() && radius > T::zero()) {
        return Err(Error::Domain(format!("radius must be positive, got {radius:e}")));
    }
    if resolution < 2 {
        return Err(Error::Domain(format!("resolution must be at least 2, got {resolution}")));
    }
    if resolution > options.resolution_cap {
        return Err(Error::BudgetExceeded {
            what: "density resolution",
            requested: resolution as u128,
            cap: options.resolution_cap as u128,
        });
    }
    let pitch = (radius + radius) / T::of_usize(resolution);
    let coord = |i: usize| -radius + pitch * (T::of_usize(i) + T::of(0.5));
    let values: Vec<T> = (0..resolution)
        .into_par_iter()
        .flat_map_iter(|row| {
            let y = -coord(row);
            (0..resolution).map(move |col| {
                let x = coord(col);
                let r = (x * x + y * y).sqrt();
                if options.mask_outside_disc && r > radius {
                    T::zero()
                } else {
                    psi_squared(s, r, y.atan2(x))
                }
            })
        })
        .collect();
    let e = &s.params;
    Ok(DensityGrid {
        radius,
        resolution,
        values,
        metadata: GridMetadata {
            q: s.q,
            mass_eff: e.mass_eff(),
            omega_eff: e.omega_eff(),
            gamma: e.gamma(),
            hbar: e.hbar(),
            length_scale: s.length_scale(),
            masked: options.mask_outside_disc,
        },
    })
}

/// Local maxima of the density along the ray from the centre pixel to the
/// right edge of the middle row. The centre itself counts when it beats its
/// neighbour.
pub fn radial_maxima<T: Scalar>(grid: &DensityGrid<T>) -> usize {
    let n = grid.resolution;
    let row = n / 2;
    let start = n / 2;
    let ray: Vec<T> = (start..n).map(|c| grid.at(row, c)).collect();
    let mut count = 0;
    for i in 0..ray.len() {
        let left_ok = i == 0 || ray[i] > ray[i - 1];
        let right_ok = i + 1 == ray.len() || ray[i] > ray[i + 1];
        if left_ok && right_ok && ray[i] > T::zero() {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{effective_params, PhysicalParams};
    use crate::wavefunctions::density_spread_metric;

    fn state(b: f64, t: f64, n_r: u64, m_l: i64) -> Eigenstate<f64> {
        let e = effective_params(&PhysicalParams::dimensionless(b, t).unwrap()).unwrap();
        Eigenstate::new(e, QuantumNumbers::new(n_r, m_l))
    }

    #[test]
    fn ground_state_peaks_at_centre() {
        let g = density_grid(&state(0.0, 0.7, 0, 0), 4.0, 101).unwrap();
        assert_eq!(g.argmax(), (50, 50));
        assert_eq!(g.coordinate(50), 0.0);
        assert_eq!(radial_maxima(&g), 1);
    }

    #[test]
    fn ring_count_tracks_radial_number() {
        for n_r in 0..5 {
            for m_l in [0, 2, -3] {
                let s = state(0.0, 0.7, n_r, m_l);
                let radius = 5.0 * density_spread_metric(&s);
                let g = density_grid(&s, radius, 801).unwrap();
                assert_eq!(radial_maxima(&g), n_r as usize + 1, "({n_r},{m_l})");
            }
        }
    }

    #[test]
    fn ring_radius_grows_with_angular_momentum() {
        let mut last = 0.0;
        for m in 1..6 {
            let g = density_grid(&state(0.0, 0.7, 0, m), 6.0, 401).unwrap();
            let row = 200;
            let col = (200..401).max_by(|&a, &b| g.at(row, a).total_cmp(&g.at(row, b))).unwrap();
            let r = g.coordinate(col);
            assert!(r > last, "m = {m}");
            last = r;
        }
    }

    #[test]
    fn smallest_grid_and_caps() {
        let g = density_grid(&state(0.0, 0.7, 0, 0), 1.0, 2).unwrap();
        assert_eq!(g.values.len(), 4);
        assert!(g.values.iter().all(|v| *v > 0.0));
        assert!(matches!(density_grid(&state(0.0, 0.7, 0, 0), 1.0, 4097), Err(Error::BudgetExceeded { .. })));
        assert!(density_grid(&state(0.0, 0.7, 0, 0), 1.0, 1).is_err());
        assert!(density_grid(&state(0.0, 0.7, 0, 0), -1.0, 8).is_err());
    }

    #[test]
    fn masking_zeroes_corners_only() {
        let s = state(0.0, 0.7, 1, 1);
        let opts = DensityOptions { mask_outside_disc: true, ..Default::default() };
        let g = density_grid_with(&s, 3.0, 31, opts).unwrap();
        assert_eq!(g.at(0, 0), 0.0);
        assert!(g.at(15, 20) > 0.0);
        assert!(g.metadata.masked);
    }

    #[test]
    fn parallel_rows_are_deterministic() {
        let s = state(0.3, 1.1, 2, -2);
        let a = density_grid(&s, 5.0, 257).unwrap();
        let b = density_grid(&s, 5.0, 257).unwrap();
        assert_eq!(a.values, b.values);
    }
}
