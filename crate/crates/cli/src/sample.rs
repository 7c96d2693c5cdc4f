//! Fixed samples of catalog entries used by the batch checks.

use chiralmix::catalog::FamilySpec;
use chiralmix::rotation::RotationSystem;
use chiralmix::Result;

/// Twelve rank-3 entries, chiral and directly regular, all with complete
/// presentations.
pub const PRODUCT_FORMULA_SAMPLE: [&str; 12] = [
    "toroid44(1,0)",
    "toroid44(1,1)",
    "toroid44(1,2)",
    "toroid44(2,1)",
    "toroid44(2,0)",
    "toroid44(1,3)",
    "toroid36(1,1)",
    "toroid36(1,2)",
    "toroid63(2,1)",
    "universal(3,3)",
    "universal(3,4)",
    "universal(4,3)",
];

pub fn build_all(specs: &[&str], budget: usize) -> Result<Vec<(String, RotationSystem)>> {
    specs
        .iter()
        .map(|s| Ok((s.to_string(), s.parse::<FamilySpec>()?.build(budget)?)))
        .collect()
}

pub fn product_formula_sample(budget: usize) -> Result<Vec<(String, RotationSystem)>> {
    build_all(&PRODUCT_FORMULA_SAMPLE, budget)
}
