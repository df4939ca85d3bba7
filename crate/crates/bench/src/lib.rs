//! Benchmark fixtures for simpconf.

use simpconf_core::{standard, SimplicialComplex};

/// Inputs the benchmarks sweep over, smallest first.
pub fn base_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("circle", standard::boundary(2)),
        ("triangle", standard::simplex(2)),
        ("hexagon", standard::cycle(6)),
    ]
}
