//! Benchmark fixtures for `sixteen-core`; see `benches/pipeline.rs`.

use sixteen_core::{ParamsA, SectionA};

/// Multiples benchmarked by the generator.
pub const MULTIPLES: [i64; 4] = [2, 3, 5, 8];

pub fn section_121() -> SectionA {
    SectionA::new(ParamsA::from_i64(1, 2, 1).expect("nondegenerate")).expect("valid curve")
}
