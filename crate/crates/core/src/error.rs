use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid partition literal {0:?}")]
    PartitionSyntax(String),

    #[error("partition {0} is not a double partition")]
    NotDouble(String),

    #[error("degree {n} is not admissible for partition {partition}: Wronskian index {index} is excluded")]
    InadmissibleDegree { partition: String, n: i64, index: i64 },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("polynomial does not satisfy an ODE of the exceptional Hermite form: {0}")]
    NoOdeConstant(String),

    #[error("root finding needs a polynomial of degree >= 1")]
    ConstantPolynomial,

    #[error("{phase} iteration did not converge for root {index}")]
    RootNonConvergence { phase: &'static str, index: usize },

    #[error("complex root {index} has no conjugate partner within tolerance")]
    UnpairedRoot { index: usize },

    #[error("points {i} and {j} coincide")]
    CoincidentPoints { i: usize, j: usize },

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("point {0} lies outside the weight domain")]
    OutsideDomain(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("weight is ill-posed: {0}")]
    IllPosedWeight(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
