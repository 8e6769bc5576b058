//! Nyström discretization of the elastic Neumann–Poincaré operator.
//!
//! Supported surfaces are single closed spheres and ellipsoids, which are
//! parametrized over the unit sphere. The double-layer operator `K` and the
//! single-layer operator `S` are discretized by target-centred polar
//! quadrature acting on spherical-harmonic hyperinterpolants of the density.
//! Their spectra give direct numerical evidence for the accumulation of
//! eigenvalues at `{−𝕜, 0, 𝕜}`, the realness of the spectrum, and the
//! positivity of `S`.

mod error;
mod grid;
mod harmonics;
mod nystrom;
mod spectrum;

pub use error::DiscretizationError;
pub use grid::{EllipsoidMap, NystromConfig, NystromGrid, MAX_SYSTEM_SIZE, MIN_N_THETA, POLAR_EXTRA};
pub use harmonics::{harmonic_count, harmonic_index, real_harmonics};
pub use nystrom::{
    assemble_np, assemble_np_signed, assemble_single_layer, hyperinterpolate, HarmonicRows, NystromSystem,
    SingleLayer,
};
pub use spectrum::{
    azimuthal_defect, cluster_counts, np_spectrum, np_spectrum_with_radius, single_layer_eigenvalues,
    single_layer_positivity, Cluster, ClusterCount, ClusterSummary, CountingWindow, PositivityReport,
    SpectrumSample, SpectrumSummary, DEFAULT_CLUSTER_RADIUS,
};
