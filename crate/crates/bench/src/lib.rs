//! Shared fixtures for the benchmarks.

use pilab_core::algebra::Algebra;
use pilab_core::constructors::s2_canonical;

pub fn fixture_algebra() -> Algebra {
    s2_canonical()
}
