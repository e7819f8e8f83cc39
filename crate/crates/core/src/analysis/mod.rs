//! Metallic means, S-derived functions, exponential expressions,
//! factorial products and anomalous cancellations.

mod expressions;
mod lucky;
mod metallic;
mod sfunctions;

pub use expressions::{
    expression_cycle, expression_prime_search, product_of_factorials, ExpressionHit,
};
pub use lucky::{lucky_cancellations, LuckyFraction};
pub use metallic::{metallic_convergents, Convergent, MetallicFamily, MetallicSpec};
pub use sfunctions::{
    fs_theta, lipschitz_probe, s_family, FsTheta, FunctionId, LipschitzProbe, SKind,
};
