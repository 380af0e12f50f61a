//! Special fibers of a rational function on a surface chart.

pub mod critical;
pub mod family;
pub mod germ;
pub mod polar;
pub mod report;
pub mod sampler;
pub mod solve;

pub use critical::{critical_analysis, critical_system, CriticalAnalysis, CriticalPoint};
pub use family::{
    fiber_reducedness, format_point, point_strings, reduce_fraction, PlaneGermFamily, Point,
    ReducedFraction,
};
pub use germ::{
    analyze_germ, generic_mu, unit_twist_check, AnalysisOptions, GenericData, GermAnalyzer,
    GermReport, SpecialValueRecord,
};
pub use polar::{
    polar_curve, polar_intersection, special_value_candidates, Candidates, PolarCurve,
};
pub use report::{
    analyze_chart, analyze_pencil, base_points, ChartReport, ChartSpec, OverlapMap, PencilConfig,
    PencilReport, ValueSummary,
};
pub use sampler::{derive_seed, GenericSampler, SAMPLE_RANGE};
pub use solve::{solve_rational_points, PlaneSolutions};
